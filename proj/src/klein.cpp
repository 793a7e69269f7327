#include "locert/klein.hpp"

#include <numeric>

#include "locert/errors.hpp"

namespace locert::klein {

namespace {

std::int64_t parity_sign(std::int64_t c) noexcept { return (c % 2 == 0) ? 1 : -1; }

}  // namespace

KleinElement k_multiply(const KleinElement& g, const KleinElement& h) noexcept {
  return {g.a + h.a, parity_sign(h.a) * g.b + h.b};
}

KleinElement k_inverse(const KleinElement& g) noexcept { return {-g.a, -parity_sign(g.a) * g.b}; }

KleinElement KleinElement::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "1") return {};
  // Reuse the presentation word syntax, then multiply out.
  const fpgroup::Presentation k = fpgroup::klein_bottle_group();
  KleinElement out;
  for (int letter : k.parse_word(text)) {
    const std::int64_t s = letter < 0 ? -1 : 1;
    out = k_multiply(out, (letter == 1 || letter == -1) ? x(s) : y(s));
  }
  return out;
}

std::string KleinElement::to_string() const {
  std::string out;
  if (a != 0) out += a == 1 ? "x" : "x^" + std::to_string(a);
  if (b != 0) {
    if (!out.empty()) out += " ";
    out += b == 1 ? "y" : "y^" + std::to_string(b);
  }
  return out.empty() ? "1" : out;
}

std::string_view to_string(KleinOrderingId id) noexcept { return id == KleinOrderingId::O1 ? "O1" : "O2"; }

KleinOrderingId other(KleinOrderingId id) noexcept {
  return id == KleinOrderingId::O1 ? KleinOrderingId::O2 : KleinOrderingId::O1;
}

Sign3 k_sign(const KleinElement& g, KleinOrderingId ord) noexcept {
  if (g.a != 0) return g.a > 0 ? Sign3::Positive : Sign3::Negative;
  if (g.b == 0) return Sign3::Trivial;
  const bool positive = ord == KleinOrderingId::O1 ? g.b > 0 : g.b < 0;
  return positive ? Sign3::Positive : Sign3::Negative;
}

KleinOrderingId k_conjugate_ordering(const KleinElement& g, KleinOrderingId ord) noexcept {
  // Conjugating y^d by x^a y^b gives y^((-1)^a d), and conjugation preserves
  // the x-exponent, so odd a flips the sign of y and swaps the orderings.
  return g.a % 2 == 0 ? ord : other(ord);
}

std::string_view to_string(FillingClass c) noexcept {
  switch (c) {
    case FillingClass::InfiniteCyclicQuotient_LO: return "InfiniteCyclicQuotient_LO";
    case FillingClass::FreeProductOfFinite_NotLO: return "FreeProductOfFinite_NotLO";
    case FillingClass::Finite_NotLO: return "Finite_NotLO";
  }
  return "?";
}

fpgroup::Presentation filled_presentation(const KleinPeripheral& slope) {
  fpgroup::Presentation p = fpgroup::klein_bottle_group();
  const fpgroup::Word x{1}, y{2};
  p.add_relator(fpgroup::concat(fpgroup::power(y, slope.m), fpgroup::power(x, 2 * slope.n)));
  return p;
}

KleinFilling klein_fill(const KleinPeripheral& slope, std::size_t coset_cap) {
  if (std::gcd(slope.m, slope.n) != 1) {
    throw NotPrimitive("Klein peripheral slope (" + std::to_string(slope.m) + ", " + std::to_string(slope.n) +
                       ") is not primitive");
  }
  const fpgroup::Presentation filled = filled_presentation(slope);
  KleinFilling out{FillingClass::Finite_NotLO, fpgroup::abelianization(filled), std::nullopt};
  if (slope.n == 0) {
    // Killing y leaves <x> = Z.
    out.classification = FillingClass::InfiniteCyclicQuotient_LO;
  } else if (slope.m == 0) {
    // Killing x^2 leaves <x, y | x^2, (xy)^2> = Z/2 * Z/2.
    out.classification = FillingClass::FreeProductOfFinite_NotLO;
  } else {
    // y^m central and y^-m = x^-2n = y^m give y^2m = x^4n = 1.
    out.quotient_order = fpgroup::coset_enumerate(filled, {}, coset_cap).index;
  }
  return out;
}

}  // namespace locert::klein
