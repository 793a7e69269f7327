#pragma once

// Seifert pieces and left-orderable slopes.
//
// Knowledge about which fillings have left-orderable fundamental group is an
// ordered rule table; every verdict carries the rule that produced it and a
// human-readable evidence string:
//
//   B1Rule             slope 0/1 on a knot exterior in a ZHS: the filling has
//                      b1 = 1, maps onto Z, and is prime (automatic for
//                      Seifert pieces, a caller flag otherwise).
//   ZHSClassification  |p| = 1 fillings that are Brieskorn spheres: only S^3
//                      and Sigma(2,3,5) fail to be left-orderable.
//   LSpaceInterval     torus-knot surgeries: an L-space (hence not LO, the
//                      filling being Seifert fibred) exactly for
//                      p/q >= rs - r - s on the positive torus knot.
//   UserAsserted       pass-through of caller assertions.
//   SpliceInduction    closure of a multi-piece side, certified recursively
//                      (only produced by certificate search).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "locert/slopes.hpp"

namespace locert::seifert {

using slopes::Slope;

/// Brieskorn integer homology sphere Sigma(a1, ..., an); entries equal to 1
/// are padding.
class BrieskornZHS {
 public:
  /// Throws NotCoprime unless entries are >= 1 and pairwise coprime.
  explicit BrieskornZHS(std::vector<std::int64_t> multiplicities);

  const std::vector<std::int64_t>& multiplicities() const noexcept { return multiplicities_; }
  /// Entries other than 1, sorted ascending.
  std::vector<std::int64_t> nontrivial() const;
  /// E.g. "Sigma(2,3,5)"; "S3" when there are fewer than three nontrivial entries.
  std::string to_string() const;

  friend bool operator==(const BrieskornZHS&, const BrieskornZHS&) = default;

 private:
  std::vector<std::int64_t> multiplicities_;
};

enum class Exceptional { S3, Poincare, Other };
std::string_view to_string(Exceptional e) noexcept;

Exceptional recognize_exceptional(const BrieskornZHS& z);

enum class LOStatus { LO, NotLO, Unknown };
enum class RuleTag { B1Rule, ZHSClassification, LSpaceInterval, UserAsserted, SpliceInduction };

std::string_view to_string(LOStatus s) noexcept;
std::string_view to_string(RuleTag t) noexcept;
LOStatus parse_lo_status(std::string_view text);
RuleTag parse_rule_tag(std::string_view text);

struct LOSlopeVerdict {
  LOStatus status = LOStatus::Unknown;
  /// Always set when status is LO or NotLO.
  std::optional<RuleTag> rule;
  std::string evidence;

  friend bool operator==(const LOSlopeVerdict&, const LOSlopeVerdict&) = default;
};

LOSlopeVerdict zhs_lo_status(const BrieskornZHS& z);

/// Exterior of the (r, s) torus knot in S^3. Chirality +1 is the positive
/// torus knot, -1 its mirror, 0 "unspecified" (resolved by certificate search;
/// the slope rules reject it).
struct TorusKnotPiece {
  std::int64_t r = 2;
  std::int64_t s = 3;
  int chirality = 1;

  /// Throws NotCoprime / InvalidParams on bad parameters.
  void validate() const;
  std::int64_t lspace_threshold() const noexcept { return r * s - r - s; }
  friend bool operator==(const TorusKnotPiece&, const TorusKnotPiece&) = default;
};

enum class SurgeryKind { SFS, Lens, Reducible };
std::string_view to_string(SurgeryKind k) noexcept;

struct SurgeryResult {
  SurgeryKind kind;
  /// {r, s, |p - q r s|} for SFS results (p taken with the knot's chirality).
  std::vector<std::int64_t> multiplicities;
};

/// Moser's classification of surgeries on torus knots.
SurgeryResult moser_surgery(const TorusKnotPiece& k, const Slope& alpha);

/// Throws RuleInapplicable on reducible fillings. The 0/1 slope is answered
/// by B1Rule since the filling is not a rational homology sphere.
LOSlopeVerdict torus_knot_lspace_verdict(const TorusKnotPiece& k, const Slope& alpha);

/// Exterior of a fibre in a Brieskorn sphere, framed so that the meridian
/// filling recovers the sphere.
struct BrieskornComplement {
  BrieskornZHS zhs;
  friend bool operator==(const BrieskornComplement&, const BrieskornComplement&) = default;
};

/// A piece whose properties are supplied by the caller (e.g. a hyperbolic
/// knot exterior).
struct UserPiece {
  std::string name;
  /// Caller vouches that the 0/1 filling is prime.
  bool longitude_prime = false;
  std::vector<std::pair<Slope, LOStatus>> assertions;
  friend bool operator==(const UserPiece&, const UserPiece&) = default;
};

using Piece = std::variant<TorusKnotPiece, BrieskornComplement, UserPiece>;

std::string describe(const Piece& piece);

/// Dispatches over the rule table in order B1Rule, ZHSClassification,
/// LSpaceInterval, UserAsserted; Unknown when no rule applies.
LOSlopeVerdict slope_lo_verdict(const Piece& piece, const Slope& alpha);

/// Inputs to the rational surgery rank formula for a knot in an L-space
/// integer homology sphere.
struct HFParams {
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::int64_t nu = 0;
  std::vector<std::int64_t> as_ranks;
};

/// rk HF^(M(p/q)) = p + 2 max{0, (2 nu - 1) q - p} + q sum(rk A_s - 1), and
/// |p| + q sum(rk A_s - 1) when nu = 0. Throws InvalidParams.
std::int64_t hf_surgery_rank(const HFParams& params);

}  // namespace locert::seifert
