#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fcx/errors.hpp"
#include "fcx/ring.hpp"

namespace fcx {

// Finite induced subgraph of the zero-divisor graph Γ(C_c(X)_F) over
// Finite(n): k scalar representatives of every nonempty proper zero-set
// class. Adjacency is class-determined (edge iff the zero sets cover
// X), so this witness realizes every distance and cycle of the full
// graph.
struct witness_graph {
  int n = 0;
  int reps = 2;
  struct vertex {
    std::uint32_t zclass = 0;  // the common zero set of the class
    int k = 1;                 // scalar 1..reps
  };
  std::vector<vertex> vertices;
  std::vector<std::vector<int>> adj;

  std::uint32_t full() const { return (1u << n) - 1; }
  bool adjacent(int u, int v) const {
    return u != v &&
           (vertices[u].zclass | vertices[v].zclass) == full();
  }
  ring_elem elem_of(int v) const {
    space_model s = make_space(space_kind::finite, n);
    xset support = xset::finite(s, ~vertices[v].zclass);
    return rat(vertices[v].k) * ring_elem::indicator(s, support);
  }
};

inline witness_graph make_witness_graph(int n, int reps = 2) {
  if (n < 2 || reps < 2) throw error(errc::too_large, "need n >= 2, reps >= 2");
  const std::size_t count =
      static_cast<std::size_t>(reps) * ((1u << n) - 2);
  if (count > 10000) throw error(errc::too_large, "witness graph too large");
  witness_graph g;
  g.n = n;
  g.reps = reps;
  for (std::uint32_t s = 1; s < g.full(); ++s)
    for (int k = 1; k <= reps; ++k) g.vertices.push_back({s, k});
  g.adj.resize(g.vertices.size());
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v)
      if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) {
        g.adj[u].push_back(static_cast<int>(v));
        g.adj[v].push_back(static_cast<int>(u));
      }
  return g;
}

namespace detail {

inline std::uint32_t vertex_zero_mask(const ring_elem& f) {
  if (!f.space.is_finite_model())
    throw error(errc::not_vertex, "graph vertices live over Finite(n)");
  if (classify(f) != elem_class::zero_divisor)
    throw error(errc::not_vertex, "not a nonzero zero divisor");
  return zero_set(f).mask;
}

}  // namespace detail

// Closed-form distance, from the zero-set cover/meet trichotomy.
inline int distance_closed_masks(std::uint32_t zf, std::uint32_t zg,
                                 std::uint32_t full) {
  if ((zf | zg) == full) return 1;
  return (zf & zg) != 0 ? 2 : 3;
}

inline int distance_closed(const ring_elem& f, const ring_elem& g) {
  if (f == g) throw error(errc::equal_vertices, "d(f,f) undefined");
  std::uint32_t zf = detail::vertex_zero_mask(f);
  std::uint32_t zg = detail::vertex_zero_mask(g);
  return distance_closed_masks(zf, zg, (1u << f.space.n) - 1);
}

// Closed-form eccentricity: 2 when the cozero set is a singleton, 3
// otherwise (uniformly 2 when n = 2).
inline int eccentricity_closed_mask(std::uint32_t zf, int n) {
  std::uint32_t coz = ~zf & ((1u << n) - 1);
  int cnt = 0;
  for (int i = 0; i < n; ++i) cnt += coz >> i & 1;
  return cnt == 1 ? 2 : 3;
}

inline int eccentricity_closed(const ring_elem& f) {
  return eccentricity_closed_mask(detail::vertex_zero_mask(f), f.space.n);
}

// Closed-form smallest cycle through a vertex pair.
inline int cycle_closed_masks(std::uint32_t zf, std::uint32_t zg,
                              std::uint32_t full) {
  const bool cover = (zf | zg) == full;
  const bool meet = (zf & zg) != 0;
  if (cover && meet) return 3;
  if (!cover && !meet) return 6;
  return 4;
}

inline int cycle_closed(const ring_elem& f, const ring_elem& g) {
  if (f == g) throw error(errc::equal_vertices, "c(f,f) undefined");
  std::uint32_t zf = detail::vertex_zero_mask(f);
  std::uint32_t zg = detail::vertex_zero_mask(g);
  return cycle_closed_masks(zf, zg, (1u << f.space.n) - 1);
}

struct graph_metrics {
  std::vector<std::vector<int>> dist;  // -1 = unreachable
  std::vector<int> ecc;
  int diameter = 0;
  int radius = 0;
  std::optional<int> girth;  // nullopt = acyclic
};

inline std::vector<int> bfs_dist(const witness_graph& g, int src) {
  std::vector<int> d(g.vertices.size(), -1);
  std::deque<int> q{src};
  d[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.adj[u])
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        q.push_back(v);
      }
  }
  return d;
}

inline graph_metrics graph_oracle_metrics(const witness_graph& g) {
  graph_metrics m;
  const std::size_t nv = g.vertices.size();
  m.dist.resize(nv);
  m.ecc.assign(nv, 0);
  for (std::size_t u = 0; u < nv; ++u) {
    m.dist[u] = bfs_dist(g, static_cast<int>(u));
    for (int d : m.dist[u]) m.ecc[u] = std::max(m.ecc[u], d);
  }
  m.diameter = 0;
  m.radius = std::numeric_limits<int>::max();
  for (std::size_t u = 0; u < nv; ++u) {
    m.diameter = std::max(m.diameter, m.ecc[u]);
    m.radius = std::min(m.radius, m.ecc[u]);
  }
  // Girth: for each edge, shortest u-v path avoiding that edge, plus 1.
  int best = std::numeric_limits<int>::max();
  for (std::size_t u = 0; u < nv; ++u)
    for (int v : g.adj[u]) {
      if (static_cast<int>(u) > v) continue;
      std::vector<int> d(nv, -1);
      std::deque<int> q{static_cast<int>(u)};
      d[u] = 0;
      while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (int b : g.adj[a]) {
          if (a == static_cast<int>(u) && b == v) continue;  // skip the edge
          if (d[b] < 0) {
            d[b] = d[a] + 1;
            q.push_back(b);
          }
        }
      }
      if (d[v] > 0) best = std::min(best, d[v] + 1);
    }
  if (best < std::numeric_limits<int>::max()) m.girth = best;
  return m;
}

// Exact smallest cycle through both u and v: the minimum total length
// of two internally vertex-disjoint u-v paths, found as a min-cost
// 2-unit flow on the node-split graph. Exact for the sizes we build
// (|V| <= 60 at n = 5).
inline std::optional<int> cycle_oracle(const witness_graph& g, int u, int v) {
  if (u == v) throw error(errc::equal_vertices, "cycle through a single vertex");
  const int nv = static_cast<int>(g.vertices.size());
  // Node splitting: node i -> in(i)=2i, out(i)=2i+1.
  const int N = 2 * nv;
  struct arc {
    int to, cap, cost, rev;
  };
  std::vector<std::vector<arc>> graph(N);
  auto add_arc = [&](int a, int b, int cap, int cost) {
    graph[a].push_back({b, cap, cost, static_cast<int>(graph[b].size())});
    graph[b].push_back({a, 0, -cost, static_cast<int>(graph[a].size()) - 1});
  };
  for (int i = 0; i < nv; ++i)
    add_arc(2 * i, 2 * i + 1, (i == u || i == v) ? 2 : 1, 0);
  for (int a = 0; a < nv; ++a)
    for (int b : g.adj[a]) {
      add_arc(2 * a + 1, 2 * b, 1, 1);
    }
  const int src = 2 * u + 1, dst = 2 * v;
  int flow = 0, cost = 0;
  while (flow < 2) {
    // Bellman-Ford shortest augmenting path (costs can go negative on
    // residual arcs).
    const int INF = std::numeric_limits<int>::max() / 4;
    std::vector<int> dist(N, INF), pe(N, -1), pv(N, -1);
    std::vector<bool> inq(N, false);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      inq[a] = false;
      for (std::size_t e = 0; e < graph[a].size(); ++e) {
        const arc& ar = graph[a][e];
        if (ar.cap > 0 && dist[a] + ar.cost < dist[ar.to]) {
          dist[ar.to] = dist[a] + ar.cost;
          pv[ar.to] = a;
          pe[ar.to] = static_cast<int>(e);
          if (!inq[ar.to]) {
            inq[ar.to] = true;
            q.push_back(ar.to);
          }
        }
      }
    }
    if (dist[dst] >= INF) return std::nullopt;  // no second disjoint path
    for (int x = dst; x != src; x = pv[x]) {
      arc& ar = graph[pv[x]][pe[x]];
      ar.cap -= 1;
      graph[x][ar.rev].cap += 1;
    }
    cost += dist[dst];
    ++flow;
  }
  return cost;
}

enum class triangle_mode { vertex, edge };

// Vertex f lies in a triangle iff two distinct proper classes B, C
// exist with Z(f)∪B = Z(f)∪C = B∪C = X; edge (f,g) lies in a triangle
// iff one class C covers X with each of them.
inline bool triangle_predicate(triangle_mode mode, const ring_elem& f,
                               const ring_elem* g = nullptr) {
  std::uint32_t zf = detail::vertex_zero_mask(f);
  const int n = f.space.n;
  const std::uint32_t full = (1u << n) - 1;
  if (mode == triangle_mode::vertex) {
    for (std::uint32_t b = 1; b < full; ++b) {
      if ((zf | b) != full) continue;
      for (std::uint32_t c = b + 1; c < full; ++c)
        if ((zf | c) == full && (b | c) == full) return true;
    }
    return false;
  }
  if (g == nullptr) throw error(errc::not_adjacent, "edge mode needs g");
  std::uint32_t zg = detail::vertex_zero_mask(*g);
  if ((zf | zg) != full) throw error(errc::not_adjacent, "f, g not adjacent");
  for (std::uint32_t c = 1; c < full; ++c)
    if ((zf | c) == full && (zg | c) == full) return true;
  return false;
}

inline std::string bitstring(std::uint32_t m, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += (m >> i & 1) ? '1' : '0';
  return s;
}

// Deterministic DOT export; vertex labels name the representative
// k*ind(support) with the support in bitstring form.
inline std::string dot_export(const witness_graph& g) {
  std::ostringstream out;
  out << "graph zdgraph {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    out << "  v" << i << " [label=\"" << v.k << "*ind("
        << bitstring(~v.zclass & g.full(), g.n) << ")\"];\n";
  }
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (int v : g.adj[u])
      if (static_cast<int>(u) < v) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fcx
