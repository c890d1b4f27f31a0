#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glat {

enum class errc {
  ring_mismatch,
  division_by_zero,
  infinite_automorphism_group,
  infinite_carrier,
  non_commutative_carrier,
  not_prime,
  not_irreducible,
  malformed_table,
  no_identity,
  no_inverse,
  not_associative,
  too_large,
  not_partial_order,
  no_meet,
  no_join,
  table_mismatch,
  shape_mismatch,
  not_automorphism,
  not_homomorphism,
  not_gset,
  dimension_mismatch,
  space_mismatch,
  not_invertible,
  not_projective,
  scalar_inconsistent,
  not_coordinatizable,
  zero_bracket,
  carrier_mismatch,
  not_equivalent,
  not_associated,
  parent_mismatch,
  invalid_factor_system,
  parse_error,
};

inline std::string_view errc_name(errc e) {
  switch (e) {
    case errc::ring_mismatch: return "RingMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::infinite_automorphism_group: return "InfiniteAutomorphismGroup";
    case errc::infinite_carrier: return "InfiniteCarrier";
    case errc::non_commutative_carrier: return "NonCommutativeCarrier";
    case errc::not_prime: return "NotPrime";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::malformed_table: return "MalformedTable";
    case errc::no_identity: return "NoIdentity";
    case errc::no_inverse: return "NoInverse";
    case errc::not_associative: return "NotAssociative";
    case errc::too_large: return "TooLarge";
    case errc::not_partial_order: return "NotPartialOrder";
    case errc::no_meet: return "NoMeet";
    case errc::no_join: return "NoJoin";
    case errc::table_mismatch: return "TableMismatch";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::not_homomorphism: return "NotHomomorphism";
    case errc::not_gset: return "NotGSet";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::space_mismatch: return "SpaceMismatch";
    case errc::not_invertible: return "NotInvertible";
    case errc::not_projective: return "NotProjective";
    case errc::scalar_inconsistent: return "ScalarInconsistent";
    case errc::not_coordinatizable: return "NotCoordinatizable";
    case errc::zero_bracket: return "ZeroBracket";
    case errc::carrier_mismatch: return "CarrierMismatch";
    case errc::not_equivalent: return "NotEquivalent";
    case errc::not_associated: return "NotAssociated";
    case errc::parent_mismatch: return "ParentMismatch";
    case errc::invalid_factor_system: return "InvalidFactorSystem";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the failure
/// class; `what()` carries the witness in human readable form.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), witness_(std::move(witness)) {}

  errc code() const noexcept { return code_; }
  /// Element indices that exhibit the failure, when the failure has them.
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  errc code_;
  std::vector<std::size_t> witness_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail, std::vector<std::size_t> witness = {}) {
  throw error(code, detail, std::move(witness));
}

}  // namespace glat
