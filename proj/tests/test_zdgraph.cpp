#include <catch2/catch_amalgamated.hpp>

#include "fcx/zdgraph.hpp"

using namespace fcx;

namespace {

std::size_t edge_count(const witness_graph& g) {
  std::size_t e = 0;
  for (const auto& a : g.adj) e += a.size();
  return e / 2;
}

}  // namespace

TEST_CASE("witness graph shapes") {
  witness_graph g2 = make_witness_graph(2, 2);
  CHECK(g2.vertices.size() == 4);
  CHECK(edge_count(g2) == 4);  // the 4-cycle

  witness_graph g3 = make_witness_graph(3, 2);
  CHECK(g3.vertices.size() == 12);

  // no edge within a class
  for (std::size_t u = 0; u < g3.vertices.size(); ++u)
    for (int v : g3.adj[u])
      CHECK(g3.vertices[u].zclass != g3.vertices[v].zclass);

  CHECK_THROWS_AS(make_witness_graph(1, 2), error);
  CHECK_THROWS_AS(make_witness_graph(3, 1), error);
  CHECK_THROWS_AS(make_witness_graph(14, 2), error);
}

TEST_CASE("vertex elements are the scaled indicators") {
  witness_graph g = make_witness_graph(3, 2);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    ring_elem f = g.elem_of(static_cast<int>(i));
    CHECK(zero_set(f).mask == g.vertices[i].zclass);
    CHECK(classify(f) == elem_class::zero_divisor);
  }
}

TEST_CASE("closed-form distances on named vertices") {
  space_model f3 = make_space(space_kind::finite, 3);
  ring_elem chi0 = ring_elem::chi(f3, 0), chi1 = ring_elem::chi(f3, 1);
  ring_elem co0 = ring_elem::constant(f3, rat(1)) - chi0;
  ring_elem co1 = ring_elem::constant(f3, rat(1)) - chi1;
  CHECK(distance_closed(co0, co1) == 3);
  CHECK(distance_closed(chi0, chi1) == 1);
  CHECK(distance_closed(chi0, rat(2) * chi0) == 2);
  CHECK_THROWS_AS(distance_closed(chi0, chi0), error);
  CHECK_THROWS_AS(distance_closed(chi0, ring_elem::constant(f3, rat(1))), error);
}

TEST_CASE("closed-form eccentricity") {
  space_model f3 = make_space(space_kind::finite, 3);
  ring_elem chi0 = ring_elem::chi(f3, 0);
  CHECK(eccentricity_closed(chi0) == 2);
  CHECK(eccentricity_closed(ring_elem::constant(f3, rat(1)) - chi0) == 3);
  space_model f2 = make_space(space_kind::finite, 2);
  CHECK(eccentricity_closed(ring_elem::chi(f2, 0)) == 2);
  CHECK(eccentricity_closed(ring_elem::chi(f2, 1)) == 2);
}

TEST_CASE("closed-form smallest cycle through a pair") {
  space_model f3 = make_space(space_kind::finite, 3);
  ring_elem chi0 = ring_elem::chi(f3, 0), chi1 = ring_elem::chi(f3, 1);
  ring_elem co0 = ring_elem::constant(f3, rat(1)) - chi0;
  ring_elem co1 = ring_elem::constant(f3, rat(1)) - chi1;
  CHECK(cycle_closed(chi0, chi1) == 3);
  CHECK(cycle_closed(chi0, co0) == 4);
  CHECK(cycle_closed(co0, co1) == 6);
}

TEST_CASE("oracle metrics agree with closed forms for n = 2 and 3") {
  for (int n : {2, 3}) {
    witness_graph g = make_witness_graph(n, 2);
    graph_metrics m = graph_oracle_metrics(g);
    for (std::size_t u = 0; u < g.vertices.size(); ++u) {
      CHECK(eccentricity_closed_mask(g.vertices[u].zclass, n) == m.ecc[u]);
      for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
        CHECK(distance_closed_masks(g.vertices[u].zclass, g.vertices[v].zclass,
                                    g.full()) == m.dist[u][v]);
        auto co = cycle_oracle(g, static_cast<int>(u), static_cast<int>(v));
        REQUIRE(co.has_value());
        CHECK(*co == cycle_closed_masks(g.vertices[u].zclass,
                                        g.vertices[v].zclass, g.full()));
      }
    }
  }
}

TEST_CASE("metric constants per n") {
  graph_metrics m2 = graph_oracle_metrics(make_witness_graph(2, 2));
  CHECK(m2.diameter == 2);
  CHECK(m2.radius == 2);
  REQUIRE(m2.girth.has_value());
  CHECK(*m2.girth == 4);  // the cycle chi0, chi1, 2*chi0, 2*chi1

  graph_metrics m3 = graph_oracle_metrics(make_witness_graph(3, 2));
  CHECK(m3.diameter == 3);
  CHECK(m3.radius == 2);
  CHECK(*m3.girth == 3);
}

TEST_CASE("triangle predicates") {
  space_model f3 = make_space(space_kind::finite, 3);
  ring_elem chi0 = ring_elem::chi(f3, 0);
  ring_elem co0 = ring_elem::constant(f3, rat(1)) - chi0;
  CHECK_FALSE(triangle_predicate(triangle_mode::vertex, co0));
  CHECK_FALSE(triangle_predicate(triangle_mode::edge, chi0, &co0));
  CHECK(triangle_predicate(triangle_mode::vertex, chi0));
  // edge mode demands adjacency
  ring_elem chi1 = ring_elem::chi(f3, 1);
  ring_elem co1 = ring_elem::constant(f3, rat(1)) - chi1;
  CHECK_THROWS_AS(triangle_predicate(triangle_mode::edge, co0, &co1), error);
}

TEST_CASE("common neighbor iff zero sets meet") {
  witness_graph g = make_witness_graph(3, 2);
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      bool common = false;
      for (std::size_t h = 0; h < g.vertices.size(); ++h)
        if (h != u && h != v &&
            g.adjacent(static_cast<int>(h), static_cast<int>(u)) &&
            g.adjacent(static_cast<int>(h), static_cast<int>(v)))
          common = true;
      CHECK(common == ((g.vertices[u].zclass & g.vertices[v].zclass) != 0));
    }
}

TEST_CASE("dot export is deterministic and consistent") {
  witness_graph g = make_witness_graph(2, 2);
  std::string dot = dot_export(g);
  CHECK(dot == dot_export(g));
  std::size_t nodes = 0, edges = 0;
  for (std::size_t p = dot.find("[label"); p != std::string::npos;
       p = dot.find("[label", p + 1))
    ++nodes;
  for (std::size_t p = dot.find(" -- "); p != std::string::npos;
       p = dot.find(" -- ", p + 1))
    ++edges;
  CHECK(nodes == g.vertices.size());
  CHECK(edges == edge_count(g));
  CHECK(dot.find("1*ind(10)") != std::string::npos);
}
