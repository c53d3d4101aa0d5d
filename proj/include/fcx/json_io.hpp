#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcx/errors.hpp"
#include "fcx/ring.hpp"
#include "fcx/space.hpp"
#include "fcx/upset.hpp"

namespace fcx {

using json = nlohmann::ordered_json;

inline json space_to_json(const space_model& s) {
  json j;
  j["kind"] = kind_name(s.kind);
  if (s.is_finite_model()) j["n"] = s.n;
  return j;
}

inline space_model space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw error(errc::schema_error, "space needs a string 'kind'");
  const std::string k = j["kind"].get<std::string>();
  if (k == "finite") {
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw error(errc::schema_error, "finite space needs integer 'n'");
    return make_space(space_kind::finite, j["n"].get<int>());
  }
  if (j.contains("n"))
    throw error(errc::schema_error, "'n' only applies to finite spaces");
  if (k == "discrete_n") return make_space(space_kind::discrete_n);
  if (k == "cofinite_n") return make_space(space_kind::cofinite_n);
  if (k == "conv_seq") return make_space(space_kind::conv_seq);
  throw error(errc::schema_error, "unknown space kind '" + k + "'");
}

inline json upset_to_json(const upset& s) {
  json j;
  j["transient"] = json::array();
  for (auto b : s.bits.transient) j["transient"].push_back(static_cast<int>(b));
  j["period"] = s.bits.period();
  j["block"] = json::array();
  for (auto b : s.bits.block) j["block"].push_back(static_cast<int>(b));
  j["infinity"] = s.at_inf;
  return j;
}

inline upset upset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("block") || !j["block"].is_array())
    throw error(errc::schema_error, "upset needs a 'block' array");
  auto bits = [](const json& arr, const char* what) {
    std::vector<std::uint8_t> out;
    for (const auto& v : arr) {
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
        throw error(errc::schema_error, std::string(what) + " bits must be 0/1");
      out.push_back(static_cast<std::uint8_t>(v.get<int>()));
    }
    return out;
  };
  std::vector<std::uint8_t> block = bits(j["block"], "block");
  if (block.empty()) throw error(errc::schema_error, "period 0 is invalid");
  if (j.contains("period") &&
      j["period"].get<std::size_t>() != block.size())
    throw error(errc::schema_error, "period does not match block length");
  std::vector<std::uint8_t> pre;
  if (j.contains("transient")) pre = bits(j["transient"], "transient");
  bool inf = j.value("infinity", false);
  return upset(std::move(pre), std::move(block), inf);
}

inline json xset_to_json(const xset& a) {
  if (a.space.is_finite_model()) {
    json j;
    j["points"] = json::array();
    for (int i = 0; i < a.space.n; ++i)
      if (a.mask >> i & 1) j["points"].push_back(i);
    return j;
  }
  return upset_to_json(a.up);
}

inline xset xset_from_json(const json& j, const space_model& space) {
  if (j.is_object() && j.contains("points")) {
    std::uint32_t m = 0;
    bool inf = false;
    std::vector<std::size_t> pts;
    for (const auto& p : j["points"]) {
      if (p.is_string() && p.get<std::string>() == "inf") {
        inf = true;
        continue;
      }
      if (!p.is_number_integer() || p.get<long long>() < 0)
        throw error(errc::schema_error, "set points must be natural numbers");
      pts.push_back(p.get<std::size_t>());
    }
    if (space.is_finite_model()) {
      if (inf) throw error(errc::schema_error, "finite model has no infinity");
      for (auto p : pts) {
        if (static_cast<int>(p) >= space.n)
          throw error(errc::not_representable, "point outside the space");
        m |= 1u << p;
      }
      return xset::finite(space, m);
    }
    if (inf && !space.has_inf_point())
      throw error(errc::schema_error, "model has no point at infinity");
    upset u = upset::from_points(pts);
    u.at_inf = inf;
    return xset::countable(space, std::move(u));
  }
  if (space.is_finite_model())
    throw error(errc::schema_error, "finite-model sets use {\"points\": [..]}");
  upset u = upset_from_json(j);
  if (u.at_inf && !space.has_inf_point())
    throw error(errc::schema_error, "model has no point at infinity");
  return xset::countable(space, std::move(u));
}

inline json elem_to_json(const ring_elem& f) {
  json j;
  if (f.space.is_finite_model()) {
    j["values"] = json::array();
    for (const auto& v : f.values) j["values"].push_back(to_string(v));
    return j;
  }
  j["transient"] = json::array();
  for (const auto& v : f.seq.transient) j["transient"].push_back(to_string(v));
  j["period"] = f.seq.period();
  j["block"] = json::array();
  for (const auto& v : f.seq.block) j["block"].push_back(to_string(v));
  if (f.space.has_inf_point()) j["inf_value"] = to_string(f.inf_value);
  return j;
}

inline ring_elem elem_from_json(const json& j, const space_model& space) {
  if (!j.is_object()) throw error(errc::schema_error, "function must be an object");
  // Shorthands.
  if (j.contains("const"))
    return ring_elem::constant(space, parse_rat(j["const"].get<std::string>()));
  if (j.contains("chi")) {
    const auto& c = j["chi"];
    if (c.is_string() && c.get<std::string>() == "inf")
      return ring_elem::chi_inf(space);
    if (!c.is_number_integer() || c.get<long long>() < 0)
      throw error(errc::schema_error, "chi takes a point index or \"inf\"");
    return ring_elem::chi(space, c.get<std::size_t>());
  }
  if (space.is_finite_model()) {
    if (!j.contains("values") || !j["values"].is_array() ||
        static_cast<int>(j["values"].size()) != space.n)
      throw error(errc::schema_error, "finite element needs n 'values'");
    std::vector<rat> v;
    for (const auto& s : j["values"]) v.push_back(parse_rat(s.get<std::string>()));
    return ring_elem::finite(space, std::move(v));
  }
  if (!j.contains("block") || !j["block"].is_array() || j["block"].empty())
    throw error(errc::schema_error, "element needs a nonempty 'block'");
  if (j.contains("period") &&
      j["period"].get<std::size_t>() != j["block"].size())
    throw error(errc::schema_error, "period does not match block length");
  std::vector<rat> pre, blk;
  if (j.contains("transient"))
    for (const auto& s : j["transient"]) pre.push_back(parse_rat(s.get<std::string>()));
  for (const auto& s : j["block"]) blk.push_back(parse_rat(s.get<std::string>()));
  rat inf(0);
  if (space.has_inf_point()) {
    if (!j.contains("inf_value"))
      throw error(errc::schema_error, "conv_seq element needs 'inf_value'");
    inf = parse_rat(j["inf_value"].get<std::string>());
  } else if (j.contains("inf_value")) {
    throw error(errc::schema_error, "model has no point at infinity");
  }
  return ring_elem::countable(space, up_seq<rat>(std::move(pre), std::move(blk)),
                              inf);
}

struct instance_file {
  space_model space;
  std::map<std::string, ring_elem> functions;
  std::map<std::string, xset> sets;
};

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw error(errc::parse_error, "'" + path + "' is not well-formed JSON");
  return j;
}

inline instance_file parse_instance(const json& j) {
  if (!j.is_object() || !j.contains("space"))
    throw error(errc::schema_error, "instance needs a 'space'");
  instance_file inst;
  inst.space = space_from_json(j["space"]);
  if (j.contains("functions")) {
    for (const auto& [name, fj] : j["functions"].items()) {
      ring_elem f = elem_from_json(fj, inst.space);
      auto verdict = membership(f, ring_kind::fcx);
      if (!verdict.member)
        throw error(errc::not_member,
                    "function '" + name + "' is not in the ring (" +
                        verdict.reason + ")");
      inst.functions.emplace(name, std::move(f));
    }
  }
  if (j.contains("sets"))
    for (const auto& [name, sj] : j["sets"].items())
      inst.sets.emplace(name, xset_from_json(sj, inst.space));
  return inst;
}

inline instance_file parse_instance_file(const std::string& path) {
  return parse_instance(load_json_file(path));
}

}  // namespace fcx
