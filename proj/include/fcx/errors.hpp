#pragma once

#include <stdexcept>
#include <string>

namespace fcx {

enum class errc {
  empty_space,
  bad_kind,
  model_mismatch,
  not_unit,
  not_representable,
  not_disjoint,
  zero_sets_intersect,
  not_separated,
  empty_generator_list,
  improper_ideal,
  too_large,
  not_maximal,
  not_member,
  not_vertex,
  equal_vertices,
  not_adjacent,
  parse_error,
  schema_error,
  config_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_space: return "EmptySpace";
    case errc::bad_kind: return "BadKind";
    case errc::model_mismatch: return "ModelMismatch";
    case errc::not_unit: return "NotUnit";
    case errc::not_representable: return "NotRepresentable";
    case errc::not_disjoint: return "NotDisjoint";
    case errc::zero_sets_intersect: return "ZeroSetsIntersect";
    case errc::not_separated: return "NotSeparated";
    case errc::empty_generator_list: return "EmptyGeneratorList";
    case errc::improper_ideal: return "ImproperIdeal";
    case errc::too_large: return "TooLarge";
    case errc::not_maximal: return "NotMaximal";
    case errc::not_member: return "NotMember";
    case errc::not_vertex: return "NotVertex";
    case errc::equal_vertices: return "EqualVertices";
    case errc::not_adjacent: return "NotAdjacent";
    case errc::parse_error: return "ParseError";
    case errc::schema_error: return "SchemaError";
    case errc::config_error: return "ConfigError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace fcx
