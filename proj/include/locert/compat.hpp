#pragma once

// Compatibility of the two normal families of orderings across the gluing of
// the trefoil exterior (fundamental group B3) to the twisted I-bundle over
// the Klein bottle (fundamental group K).
//
// The boundary identification sends s2 to y^-1 and Delta^2 to y^-1 x^2, so
// the peripheral element s2^k Delta^(2l) maps to x^(2l) y^(-k-l).
//
// L1 is the family of conjugates of the DD ordering; L2 = {O1, O2}. For a
// conjugator gamma, the DD conjugate restricted to <s2, Delta^2> is of type
// PosK or NegK, and the matching Klein ordering is O2 or O1 respectively.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locert/braid3.hpp"
#include "locert/klein.hpp"
#include "locert/slopes.hpp"

namespace locert::compat {

klein::KleinElement phi_peripheral(const braid3::PeripheralElement& pe) noexcept;

/// O2 when gamma does not commute with s2, O1 otherwise.
klein::KleinOrderingId choose_klein_ordering(const braid3::BraidWord& gamma);

struct CompatFailure {
  std::int64_t k = 0;
  std::int64_t l = 0;
  Sign3 braid_sign = Sign3::Trivial;
  Sign3 klein_sign = Sign3::Trivial;
};

struct CompatReport {
  std::string conjugator;
  klein::KleinOrderingId ordering = klein::KleinOrderingId::O1;
  bool forced = false;
  braid3::PeripheralOrderType restricted_type = braid3::PeripheralOrderType::NegK;
  std::int64_t grid_bound = 0;
  std::size_t cells_checked = 0;
  std::size_t positive_cells = 0;
  /// Sign classes (l > 0), (l = 0, k > 0), (l = 0, k < 0), (l < 0) each hit.
  bool all_sign_classes_hit = false;
  std::vector<CompatFailure> failures;
  std::string evidence;

  bool ok() const noexcept { return failures.empty(); }
  nlohmann::json to_json() const;
};

/// Checks on every (k, l) in [-bound, bound]^2 minus the origin that a
/// peripheral element positive in the gamma-conjugate of DD maps to a
/// positive element of the chosen (or forced) Klein ordering.
/// Throws InvalidParams if bound < 1.
CompatReport verify_compatibility(const braid3::BraidWord& gamma, std::int64_t grid_bound,
                                  std::optional<klein::KleinOrderingId> forced = std::nullopt);

struct KleinSlopeRow {
  klein::KleinPeripheral slope;
  klein::FillingClass classification;
  std::optional<std::size_t> quotient_order;
};

struct NonApplicabilityReport {
  std::vector<KleinSlopeRow> klein_slopes;
  std::vector<klein::KleinPeripheral> klein_lo_slopes;
  /// Preimage of y as a peripheral element of B3, and its slope on the
  /// trefoil boundary in meridian-longitude coordinates.
  braid3::PeripheralElement pulled_back;
  slopes::Slope pulled_back_slope = slopes::Slope::meridian();
  std::optional<std::size_t> b3_quotient_index;
  std::string verdict;

  nlohmann::json to_json() const;
};

/// Every primitive Klein slope with |m|, |n| <= 5 classified, the unique LO
/// slope pulled back to the trefoil side, and B3 / <<s2>> enumerated.
NonApplicabilityReport jsjlo_nonapplicability_report();

}  // namespace locert::compat
