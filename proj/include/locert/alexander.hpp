#pragma once

// Fox's formula for cyclic branched covers of knots in S^3:
//   |H1(Sigma_n(K))| = |prod_{i=1}^{n-1} Delta_K(zeta_n^i)|,
// infinite exactly when Delta_K vanishes at a nontrivial n-th root of unity.
// The product is computed exactly as the resultant of Delta_K and
// 1 + t + ... + t^(n-1).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "locert/bigint.hpp"

namespace locert::alexander {

class IntLaurentPoly {
 public:
  IntLaurentPoly() = default;
  /// Zero coefficients are dropped.
  explicit IntLaurentPoly(const std::map<std::int64_t, BigInt>& coefficients);

  static IntLaurentPoly constant(std::int64_t c);
  /// Parses e.g. "t^2 - t + 1", "-2*t^-1 + 5 - 2t", "1".
  static IntLaurentPoly parse(std::string_view text);
  /// Accepts a string or an array of [exponent, coefficient] pairs.
  static IntLaurentPoly from_json(const nlohmann::json& j);

  const std::map<std::int64_t, BigInt>& coefficients() const noexcept { return coefficients_; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;
  /// Coefficients of t^-min_degree * p, lowest first.
  std::vector<BigInt> shifted_coefficients() const;
  BigInt evaluate(std::int64_t t) const;
  std::string to_string() const;

  friend IntLaurentPoly operator*(const IntLaurentPoly& a, const IntLaurentPoly& b);
  friend bool operator==(const IntLaurentPoly&, const IntLaurentPoly&) = default;

 private:
  std::map<std::int64_t, BigInt> coefficients_;
};

/// Resultant of two polynomials given by coefficients (lowest first), as
/// the determinant of their Sylvester matrix.
BigInt resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g);

/// |H1| of the n-fold cyclic branched cover; empty means infinite.
using BranchedCoverOrder = std::optional<BigInt>;

/// Throws NotAlexanderNormalized unless Delta(1) = +-1, InvalidParams if n < 2.
BranchedCoverOrder branched_cover_order(const IntLaurentPoly& delta, std::int64_t n);

struct AlexanderCheck {
  bool valid = false;
  std::vector<std::string> diagnostics;
};

/// Delta(1) = +-1 and Delta(t) = +-t^k Delta(1/t).
AlexanderCheck validate_alexander(const IntLaurentPoly& delta);

}  // namespace locert::alexander
