#pragma once

// Slope calculus on a torus boundary framed by a meridian/longitude pair.
//
// Conventions: a slope p*mu + q*lambda is the column vector (p, q), written
// "p/q". Slopes are projective, so (p, q) and (-p, -q) are identified and
// stored with q >= 0, and with p = 1 when q = 0. Gluing matrices act on the
// left of column vectors: [[a, b], [c, d]] * (p, q) = (a p + b q, c p + d q).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace locert::slopes {

class Slope {
 public:
  /// Normalises the sign; throws NotPrimitive unless gcd(p, q) = 1.
  Slope(std::int64_t p, std::int64_t q);

  static Slope meridian() { return Slope(1, 0); }
  static Slope longitude() { return Slope(0, 1); }
  /// Parses "p/q" or a bare integer "n" (meaning n/1).
  static Slope parse(std::string_view text);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  /// Lexicographic on the normalised (p, q); for containers only.
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

class GluingMatrix {
 public:
  /// Row-major entries; throws NotUnimodular unless det = +-1.
  GluingMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static GluingMatrix identity() { return {1, 0, 0, 1}; }
  /// The splice identification mu1 <-> lambda2, lambda1 <-> mu2.
  static GluingMatrix splice() { return {0, 1, 1, 0}; }

  std::array<std::int64_t, 4> entries() const noexcept { return {a_, b_, c_, d_}; }
  std::int64_t determinant() const noexcept { return a_ * d_ - b_ * c_; }
  GluingMatrix inverse() const;
  /// Raw action on a vector, without normalisation.
  std::pair<std::int64_t, std::int64_t> act(std::int64_t p, std::int64_t q) const noexcept {
    return {a_ * p + b_ * q, c_ * p + d_ * q};
  }

  friend GluingMatrix operator*(const GluingMatrix& lhs, const GluingMatrix& rhs);
  friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

/// Minimal geometric intersection number |p q' - p' q|.
std::int64_t intersection_number(const Slope& alpha, const Slope& beta) noexcept;

/// Image of a slope under a gluing, renormalised.
Slope apply_gluing(const GluingMatrix& m, const Slope& alpha);

struct SpliceFraming {
  Slope mu1;
  Slope mu2;
  friend bool operator==(const SpliceFraming&, const SpliceFraming&) = default;
};

/// Preferred meridians mu1 = f^-1(lambda2), mu2 = f(lambda1), defined when
/// Delta(f(lambda1), lambda2) = 1.
std::optional<SpliceFraming> splice_framing(const GluingMatrix& f, const Slope& lambda1, const Slope& lambda2);

/// |H1| of the filling M(alpha) of a knot exterior in an integer homology
/// sphere: |p|, with 0 standing for infinite.
std::int64_t filling_homology_order(const Slope& alpha) noexcept;

/// |H1(M1 cup_f M2)| = Delta(f(lambda1), lambda2); 0 stands for infinite.
std::int64_t union_homology_order(const GluingMatrix& f, const Slope& lambda1, const Slope& lambda2);

}  // namespace locert::slopes
