// fcxlab: exact-arithmetic lab for rings of functions discontinuous on
// a finite set, over the four decidable space models.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fcx/ideals.hpp"
#include "fcx/json_io.hpp"
#include "fcx/regularity.hpp"
#include "fcx/ring.hpp"
#include "fcx/separation.hpp"
#include "fcx/verify.hpp"
#include "fcx/zdgraph.hpp"

namespace {

using fcx::json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw fcx::error(fcx::errc::parse_error, "cannot write " + out_path);
  out << text;
}

json disc_to_json(const fcx::disc_result& d) {
  if (d.infinite) return json("infinite");
  json j = json::array();
  for (auto p : d.pts.points) j.push_back(p);
  if (d.pts.inf) j.push_back("inf");
  return j;
}

int cmd_space(const std::string& space_path, const std::string& out_path) {
  fcx::space_model s = fcx::space_from_json(fcx::load_json_file(space_path));
  json j;
  j["space"] = fcx::space_to_json(s);
  j["discrete"] = s.kind == fcx::space_kind::finite ||
                  s.kind == fcx::space_kind::discrete_n;
  j["non_isolated_points"] =
      s.kind == fcx::space_kind::conv_seq
          ? json::array({"inf"})
          : (s.kind == fcx::space_kind::cofinite_n ? json("all")
                                                   : json(json::array()));
  emit(j.dump(2), out_path);
  return 0;
}

int cmd_fn(const std::string& instance_path, const std::string& out_path) {
  fcx::instance_file inst = fcx::parse_instance_file(instance_path);
  json j;
  j["space"] = fcx::space_to_json(inst.space);
  j["functions"] = json::object();
  for (const auto& [name, f] : inst.functions) {
    json fj;
    fj["value"] = fcx::elem_to_json(f);
    fj["zero_set"] = fcx::xset_to_json(fcx::zero_set(f));
    fj["discontinuity_set"] = disc_to_json(fcx::discontinuity_set(f));
    fj["member_fcx"] = fcx::membership(f, fcx::ring_kind::fcx).member;
    fj["member_cc"] = fcx::membership(f, fcx::ring_kind::cc).member;
    switch (fcx::classify(f)) {
      case fcx::elem_class::zero: fj["class"] = "zero"; break;
      case fcx::elem_class::unit:
        fj["class"] = "unit";
        fj["inverse"] = fcx::elem_to_json(fcx::inverse(f));
        break;
      case fcx::elem_class::zero_divisor:
        fj["class"] = "zero_divisor";
        fj["annihilating_witness"] =
            fcx::elem_to_json(fcx::zero_divisor_witness(f));
        break;
    }
    fj["socle_member"] = fcx::socle_membership(f);
    fcx::j1_verdict jv = fcx::j1_membership(f);
    fj["j1_member"] = jv.member;
    if (jv.refuting_g) fj["j1_refuting_g"] = fcx::elem_to_json(*jv.refuting_g);
    j["functions"][name] = fj;
  }
  emit(j.dump(2), out_path);
  return 0;
}

int cmd_separate(const std::string& space_path, const std::string& a_path,
                 const std::string& b_path, const std::string& out_path) {
  fcx::space_model s = fcx::space_from_json(fcx::load_json_file(space_path));
  fcx::xset a = fcx::xset_from_json(fcx::load_json_file(a_path), s);
  fcx::xset b = fcx::xset_from_json(fcx::load_json_file(b_path), s);
  fcx::separation_verdict v = fcx::fc_separated(a, b, s);
  json j;
  j["separated"] = v.separated;
  if (v.separated) {
    j["z1"] = fcx::xset_to_json(*v.z1);
    j["z2"] = fcx::xset_to_json(*v.z2);
    fcx::ring_elem f = fcx::member_with_zero_set(s, *v.z1);
    fcx::ring_elem g = fcx::member_with_zero_set(s, *v.z2);
    j["witness_h"] = fcx::elem_to_json(fcx::separation_witness(f, g));
    fcx::removal_result rr = fcx::separated_after_removal(a, b, s);
    json fj = json::array();
    for (auto p : rr.removed.points) fj.push_back(p);
    if (rr.removed.inf) fj.push_back("inf");
    j["removal"] = {{"F", fj},
                    {"completely_separated", rr.completely_separated}};
  }
  emit(j.dump(2), out_path);
  return 0;
}

int cmd_ideals(int n, const std::string& out_path) {
  fcx::filter_enumeration e = fcx::enumerate_filters_and_ideals(n);
  json j;
  j["n"] = n;
  j["filter_count"] = e.filter_count;
  j["ultrafilter_count"] = e.ultrafilter_count;
  j["bijection"] = json::array();
  for (auto [m, base] : e.bijection)
    j["bijection"].push_back({{"maximal_ideal", m}, {"ultrafilter_base", base}});
  j["ideals"] = json::array();
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t a = 1; a <= full; ++a) {
    fcx::ideal_desc I{a, n};
    fcx::ideal_predicate_table t = fcx::ideal_predicates(I);
    fcx::prime_check_table p = fcx::prime_equivalents_check(I);
    j["ideals"].push_back({{"vanishing", a},
                           {"fixed", t.fixed},
                           {"zc_ideal", t.zc_ideal},
                           {"prime", t.prime},
                           {"maximal", t.maximal},
                           {"essential", t.essential},
                           {"free", t.free_ideal},
                           {"minimal", t.minimal},
                           {"prime_conditions_agree", p.all_agree()}});
  }
  j["annihilators"] = json::array();
  for (std::uint32_t a = 1; a <= full; ++a)
    j["annihilators"].push_back(
        {{"vanishing", a}, {"ann_vanishing", fcx::annihilator({a, n}).vanishing}});
  fcx::structure_space_report_t ss = fcx::structure_space_report(n);
  j["structure_space"] = {{"points", ss.max_ideals.size()},
                          {"discrete", ss.discrete}};
  emit(j.dump(2), out_path);
  return 0;
}

int cmd_regularity(const std::string& space_path, const std::string& out_path) {
  fcx::space_model s = fcx::space_from_json(fcx::load_json_file(space_path));
  fcx::regularity_report r = fcx::space_regularity_report(s);
  json j;
  j["space"] = fcx::space_to_json(s);
  j["fcp"] = r.fcp;
  j["baer"] = r.baer;
  j["relativization"] = r.relativization;
  if (r.baer_witness) j["baer_failure_witness"] = fcx::xset_to_json(*r.baer_witness);
  emit(j.dump(2), out_path);
  return 0;
}

int cmd_graph_metrics(int n, int reps, const std::string& format,
                      const std::string& out_path) {
  fcx::witness_graph g = fcx::make_witness_graph(n, reps);
  if (format == "dot") {
    emit(fcx::dot_export(g), out_path);
    return 0;
  }
  fcx::graph_metrics m = fcx::graph_oracle_metrics(g);
  json mism = json::array();
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      int dc = fcx::distance_closed_masks(g.vertices[u].zclass,
                                          g.vertices[v].zclass, g.full());
      if (dc != m.dist[u][v])
        mism.push_back({{"u", u}, {"v", v}, {"closed", dc},
                        {"oracle", m.dist[u][v]}});
    }
  json j;
  j["n"] = n;
  j["reps"] = reps;
  j["vertices"] = g.vertices.size();
  j["diameter"] = m.diameter;
  j["girth"] = m.girth ? json(*m.girth) : json("infinite");
  j["radius"] = m.radius;
  j["mismatches"] = mism;
  if (n == 2 && m.girth)
    j["paper_divergence"] = {{"claim", "girth infinite when |X| = 2"},
                             {"oracle_girth", *m.girth}};
  emit(j.dump(2), out_path);
  return 0;
}

int cmd_verify(int max_n, std::uint64_t seed,
               const std::vector<std::string>& suites, const std::string& format,
               const std::string& out_path) {
  fcx::verify::config cfg;
  cfg.max_n = max_n;
  cfg.seed = seed;
  cfg.suites.insert(suites.begin(), suites.end());
  fcx::verify::report_t rep = fcx::verify::run_verify_suite(cfg);
  if (format == "text") {
    std::string text;
    for (const auto& c : rep.checks)
      text += std::string(fcx::verify::status_name(c.st)) + "  " + c.check_id +
              "  [" + c.paper_ref + "]  " + std::to_string(c.runtime_ms) +
              "ms\n";
    text += rep.ok() ? "OK\n" : "FAILED\n";
    emit(text, out_path);
  } else {
    emit(fcx::verify::report_to_json(rep).dump(2), out_path);
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lab for rings of finitely-discontinuous functions"};
  app.require_subcommand(1);

  std::string space_path, a_path, b_path, instance_path, out_path;
  std::string format = "json";
  int n = 3, reps = 2, max_n = 4;
  std::uint64_t seed = 1;
  std::vector<std::string> suites;

  auto* sp = app.add_subcommand("space", "describe a space model");
  sp->add_option("--space", space_path)->required();
  sp->add_option("--out", out_path);

  auto* fn = app.add_subcommand("fn", "analyze the functions of an instance");
  fn->add_option("--instance", instance_path)->required();
  fn->add_option("--out", out_path);

  auto* sep = app.add_subcommand("separate", "decide F_c-complete separation");
  sep->add_option("--space", space_path)->required();
  sep->add_option("--a", a_path)->required();
  sep->add_option("--b", b_path)->required();
  sep->add_option("--out", out_path);

  auto* id = app.add_subcommand("ideals", "ideal/filter report over Finite(n)");
  id->add_option("--n", n)->required();
  id->add_option("--report,--out", out_path);

  auto* rg = app.add_subcommand("regularity", "regularity/Baer verdicts");
  rg->add_option("--space", space_path)->required();
  rg->add_option("--out", out_path);

  auto* gr = app.add_subcommand("graph", "zero-divisor graph tools");
  auto* gm = gr->add_subcommand("metrics", "witness-graph metrics");
  gm->add_option("--n", n)->required();
  gm->add_option("--reps", reps);
  gm->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  gm->add_option("--out", out_path);

  auto* vf = app.add_subcommand("verify", "run the cross-module verify suite");
  vf->add_option("--max-n", max_n);
  vf->add_option("--seed", seed);
  vf->add_option("--suites", suites)->delimiter(',');
  vf->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  vf->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sp->parsed()) return cmd_space(space_path, out_path);
    if (fn->parsed()) return cmd_fn(instance_path, out_path);
    if (sep->parsed()) return cmd_separate(space_path, a_path, b_path, out_path);
    if (id->parsed()) return cmd_ideals(n, out_path);
    if (rg->parsed()) return cmd_regularity(space_path, out_path);
    if (gr->parsed()) {
      if (!gm->parsed()) {
        std::cerr << "graph requires a subcommand (metrics)\n";
        return 2;
      }
      return cmd_graph_metrics(n, reps, format, out_path);
    }
    if (vf->parsed()) return cmd_verify(max_n, seed, suites, format, out_path);
  } catch (const fcx::error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
