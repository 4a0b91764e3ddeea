#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfrank {

enum class errc {
  not_prime,
  no_root_of_unity,
  dimension_mismatch,
  no_solution,
  unknown_symbol,
  characteristic_two,
  field_too_small,
  splitting_failed,
  missing_hopf_data,
  relation_check_failed,
  relation_violated,
  algebra_mismatch,
  missing_tables,
  not_idempotent,
  zero_class,
  lift_failed,
  witness_not_bijective,
  identification_failed,
  bad_identification,
  unknown_suite,
  unsupported_algebra,
  parse_error,
  zero_point,
  internal,
};

inline std::string_view errc_name(errc code) {
  switch (code) {
    case errc::not_prime: return "NotPrime";
    case errc::no_root_of_unity: return "NoRootOfUnity";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::no_solution: return "NoSolution";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::characteristic_two: return "CharacteristicTwo";
    case errc::field_too_small: return "FieldTooSmall";
    case errc::splitting_failed: return "SplittingFailed";
    case errc::missing_hopf_data: return "MissingHopfData";
    case errc::relation_check_failed: return "RelationCheckFailed";
    case errc::relation_violated: return "RelationViolated";
    case errc::algebra_mismatch: return "AlgebraMismatch";
    case errc::missing_tables: return "MissingTables";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::zero_class: return "ZeroClass";
    case errc::lift_failed: return "LiftFailed";
    case errc::witness_not_bijective: return "WitnessNotBijective";
    case errc::identification_failed: return "IdentificationFailed";
    case errc::bad_identification: return "BadIdentification";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::unsupported_algebra: return "UnsupportedAlgebra";
    case errc::parse_error: return "ParseError";
    case errc::zero_point: return "ZeroPoint";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `code()`
/// identifies the condition, `what()` carries the details.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) { throw error(code, detail); }

}  // namespace hopfrank
