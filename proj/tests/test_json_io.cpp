#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "fcx/json_io.hpp"
#include "fcx/verify.hpp"

using namespace fcx;

TEST_CASE("space model round trip") {
  for (const char* k : {"discrete_n", "cofinite_n", "conv_seq"}) {
    space_model s = space_from_json(json{{"kind", k}});
    CHECK(space_to_json(s)["kind"] == k);
  }
  space_model f = space_from_json(json{{"kind", "finite"}, {"n", 4}});
  CHECK(f.n == 4);
  CHECK(space_to_json(f) == json({{"kind", "finite"}, {"n", 4}}));

  CHECK_THROWS_AS(space_from_json(json{{"kind", "borel"}}), error);
  CHECK_THROWS_AS(space_from_json(json{{"kind", "finite"}}), error);
  CHECK_THROWS_AS(space_from_json(json{{"kind", "conv_seq"}, {"n", 3}}), error);
}

TEST_CASE("upset JSON round trip canonicalizes") {
  json j{{"transient", {0, 1}},
         {"period", 2},
         {"block", {1, 0}},
         {"infinity", false}};
  upset s = upset_from_json(j);
  upset back = upset_from_json(upset_to_json(s));
  CHECK(back == s);
  // extension: 0, 1, then 1,0 repeating
  for (std::size_t i = 0; i < 10; ++i)
    CHECK(s.member(i) == (i == 1 || (i >= 2 && i % 2 == 0)));

  CHECK_THROWS_AS(upset_from_json(json{{"block", json::array()}}), error);
  CHECK_THROWS_AS(
      upset_from_json(json{{"block", {1, 0}}, {"period", 3}}), error);
  CHECK_THROWS_AS(upset_from_json(json{{"block", {2}}}), error);
}

TEST_CASE("xset parsing per model") {
  space_model f3 = make_space(space_kind::finite, 3);
  xset a = xset_from_json(json{{"points", {0, 2}}}, f3);
  CHECK(a.mask == 0b101);
  CHECK_THROWS_AS(xset_from_json(json{{"points", {3}}}, f3), error);
  CHECK_THROWS_AS(xset_from_json(json{{"points", {"inf"}}}, f3), error);

  space_model cs = make_space(space_kind::conv_seq);
  xset b = xset_from_json(json{{"points", {1, "inf"}}}, cs);
  CHECK(b.up.member(1));
  CHECK(b.up.at_inf);

  space_model dn = make_space(space_kind::discrete_n);
  CHECK_THROWS_AS(xset_from_json(json{{"points", {"inf"}}}, dn), error);
  xset evens = xset_from_json(json{{"block", {1, 0}}}, dn);
  CHECK(evens.up == upset::evens());
}

TEST_CASE("ring element JSON with shorthands") {
  space_model cs = make_space(space_kind::conv_seq);
  CHECK(elem_from_json(json{{"const", "2/3"}}, cs) ==
        ring_elem::constant(cs, rat(2, 3)));
  CHECK(elem_from_json(json{{"chi", 2}}, cs) == ring_elem::chi(cs, 2));
  CHECK(elem_from_json(json{{"chi", "inf"}}, cs) == ring_elem::chi_inf(cs));

  json j{{"transient", {"3"}}, {"block", {"0", "1/2"}}, {"inf_value", "0"}};
  ring_elem f = elem_from_json(j, cs);
  CHECK(f.at(0) == rat(3));
  CHECK(f.at(1) == rat(0));
  CHECK(f.at(2) == rat(1, 2));
  CHECK(f.at_inf() == rat(0));
  CHECK(elem_from_json(elem_to_json(f), cs) == f);

  CHECK_THROWS_AS(elem_from_json(json{{"block", {"1"}}}, cs), error);  // no inf
  space_model dn = make_space(space_kind::discrete_n);
  CHECK_THROWS_AS(
      elem_from_json(json{{"block", {"1"}}, {"inf_value", "0"}}, dn), error);

  space_model f3 = make_space(space_kind::finite, 3);
  CHECK(elem_from_json(json{{"values", {"1", "-1/2", "0"}}}, f3) ==
        ring_elem::finite(f3, {rat(1), rat(-1, 2), rat(0)}));
  CHECK_THROWS_AS(elem_from_json(json{{"values", {"1"}}}, f3), error);
}

TEST_CASE("instance parsing enforces ring membership") {
  json good{{"space", {{"kind", "conv_seq"}}},
            {"functions",
             {{"f", {{"block", {"0", "1"}}, {"inf_value", "0"}}}}},
            {"sets", {{"A", {{"block", {1, 0}}}}}}};
  instance_file inst = parse_instance(good);
  CHECK(inst.functions.count("f") == 1);
  CHECK(inst.sets.at("A").up == upset::evens());

  json bad{{"space", {{"kind", "cofinite_n"}}},
           {"functions", {{"f", {{"block", {"0", "1"}}}}}}};
  try {
    parse_instance(bad);
    FAIL("expected NotMember");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_member);
    CHECK(std::string(e.what()).find("infinite") != std::string::npos);
  }

  json bad_period{{"space", {{"kind", "discrete_n"}}},
                  {"functions", {{"f", {{"block", json::array()}}}}}};
  CHECK_THROWS_AS(parse_instance(bad_period), error);
}

TEST_CASE("file loading diagnoses missing and malformed input") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/x.json"), error);
  std::string path = "test_json_io_tmp.json";
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(load_json_file(path), error);
  {
    std::ofstream out(path);
    out << R"({"space": {"kind": "discrete_n"}})";
  }
  CHECK(parse_instance_file(path).space.kind == space_kind::discrete_n);
  std::remove(path.c_str());
}

TEST_CASE("verify report JSON is deterministic and versioned") {
  verify::config cfg;
  cfg.max_n = 2;
  cfg.seed = 42;
  cfg.suites = {"ideals"};
  verify::report_t r1 = verify::run_verify_suite(cfg);
  verify::report_t r2 = verify::run_verify_suite(cfg);
  json j1 = verify::report_to_json(r1);
  CHECK(j1 == verify::report_to_json(r2));
  CHECK(j1.dump() == verify::report_to_json(r2).dump());
  CHECK(j1["schema_version"] == 1);
  CHECK(r1.ok());
  // sorted by check_id
  std::string prev;
  for (const auto& c : j1["checks"]) {
    std::string id = c["check_id"].get<std::string>();
    CHECK(prev <= id);
    prev = id;
  }
}

TEST_CASE("verify config is validated") {
  verify::config cfg;
  cfg.max_n = 9;
  CHECK_THROWS_AS(verify::run_verify_suite(cfg), error);
  cfg.max_n = 2;
  cfg.suites = {"nope"};
  CHECK_THROWS_AS(verify::run_verify_suite(cfg), error);
}
