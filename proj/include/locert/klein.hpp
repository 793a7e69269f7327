#pragma once

// The Klein-bottle group K = <x, y | x y x^-1 = y^-1>, the fundamental group
// of the twisted I-bundle over the Klein bottle.
//
// Every element has a unique normal form x^a y^b, and the relation forces
//   (a, b) * (c, d) = (a + c, (-1)^c b + d).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "locert/fpgroup.hpp"
#include "locert/sign.hpp"

namespace locert::klein {

struct KleinElement {
  std::int64_t a = 0;  // x-exponent
  std::int64_t b = 0;  // y-exponent

  static KleinElement x(std::int64_t power = 1) { return {power, 0}; }
  static KleinElement y(std::int64_t power = 1) { return {0, power}; }
  /// Parses any product of x, y, X, Y with optional "^n" exponents, e.g.
  /// "x^2 y^-1" or "y X X"; "1" is the identity.
  static KleinElement parse(std::string_view text);
  /// Normal form "x^a y^b", dropping zero parts; identity is "1".
  std::string to_string() const;

  friend bool operator==(const KleinElement&, const KleinElement&) = default;
};

KleinElement k_multiply(const KleinElement& g, const KleinElement& h) noexcept;
KleinElement k_inverse(const KleinElement& g) noexcept;

/// O1: 1 < g iff a > 0, or a = 0 and b > 0.
/// O2: 1 < g iff a > 0, or a = 0 and b < 0.
enum class KleinOrderingId { O1, O2 };

std::string_view to_string(KleinOrderingId id) noexcept;
KleinOrderingId other(KleinOrderingId id) noexcept;

Sign3 k_sign(const KleinElement& g, KleinOrderingId ord) noexcept;

/// The member of {O1, O2} whose positive cone is g P g^-1: conjugation by
/// x^a y^b preserves the ordering iff a is even.
KleinOrderingId k_conjugate_ordering(const KleinElement& g, KleinOrderingId ord) noexcept;

/// Peripheral element y^m x^(2n) of <y, x^2>.
struct KleinPeripheral {
  std::int64_t m = 0;
  std::int64_t n = 0;

  KleinElement element() const noexcept { return {2 * n, m}; }
  friend bool operator==(const KleinPeripheral&, const KleinPeripheral&) = default;
};

enum class FillingClass { InfiniteCyclicQuotient_LO, FreeProductOfFinite_NotLO, Finite_NotLO };

std::string_view to_string(FillingClass c) noexcept;

struct KleinFilling {
  FillingClass classification;
  fpgroup::AbelianInvariants abelianization;
  /// Order of the quotient when coset enumeration closed within the cap.
  std::optional<std::size_t> quotient_order;

  bool left_orderable() const noexcept { return classification == FillingClass::InfiniteCyclicQuotient_LO; }
};

/// K / <<y^m x^(2n)>> as a presentation.
fpgroup::Presentation filled_presentation(const KleinPeripheral& slope);

/// Classifies the filling of the twisted I-bundle along a primitive slope:
/// y gives Z, x^2 gives Z/2 * Z/2, every other slope a finite group.
/// Throws NotPrimitive unless gcd(m, n) = 1.
KleinFilling klein_fill(const KleinPeripheral& slope, std::size_t coset_cap = 100000);

}  // namespace locert::klein
