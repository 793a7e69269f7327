#pragma once

// Exact computation in the three-strand braid group B3 = <s1, s2 | s1 s2 s1 = s2 s1 s2>.
//
// Words are written in ASCII: 'a' = s1, 'A' = s1^-1, 'b' = s2, 'B' = s2^-1.
// Whitespace is ignored on input and never produced on output.
//
// The word problem is solved through the exact sequence
//   1 -> <Delta^2> -> B3 -> PSL(2,Z) = Z/2 * Z/3 -> 1,
// where the centre <Delta^2> is detected by the exponent sum (Delta^2 has
// exponent sum 6). Handle reduction gives an independent second decision
// procedure which also decides the Dubrovina-Dubrovin (DD) ordering.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locert/sign.hpp"

namespace locert::braid3 {

/// A generator s1 or s2 with exponent +1 or -1.
class BraidLetter {
 public:
  /// Throws std::invalid_argument unless generator is 1 or 2 and sign is +-1.
  BraidLetter(int generator, int sign);

  int generator() const noexcept { return generator_; }
  int sign() const noexcept { return sign_; }
  BraidLetter inverse() const noexcept { return BraidLetter(generator_, -sign_, Unchecked{}); }
  char to_char() const noexcept;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;

 private:
  struct Unchecked {};
  BraidLetter(int generator, int sign, Unchecked) noexcept
      : generator_(static_cast<std::int8_t>(generator)), sign_(static_cast<std::int8_t>(sign)) {}

  std::int8_t generator_;
  std::int8_t sign_;
};

/// A finite, not necessarily reduced, sequence of braid letters.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<BraidLetter> letters) : letters_(std::move(letters)) {}

  /// Parses the ASCII syntax. Throws ParseError on any other character.
  static BraidWord parse(std::string_view text);

  static BraidWord sigma1(std::int64_t power = 1);
  static BraidWord sigma2(std::int64_t power = 1);
  /// Garside element s1 s2 s1.
  static BraidWord delta();
  /// Delta^(2n), written as n copies of "abaaba" (or of its inverse).
  static BraidWord delta_squared(std::int64_t n = 1);
  /// Trefoil longitude Delta^2 s2^-6.
  static BraidWord longitude();

  std::span<const BraidLetter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord power(std::int64_t n) const;
  std::string to_string() const;

  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }
  /// Letter-by-letter equality; use is_trivial for group equality.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<BraidLetter> letters_;
};

/// Reduced word in Z/2 * Z/3 = <a | a^2> * <b | b^3>. Each syllable is
/// one of a, b, b^2, and consecutive syllables alternate between factors.
class ModularWord {
 public:
  enum class Syllable : std::uint8_t { A = 0, B = 1, BB = 2 };

  ModularWord() = default;

  /// Right-multiplies by one syllable and re-reduces.
  void append(Syllable s);

  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }
  std::size_t size() const noexcept { return syllables_.size(); }
  /// E.g. "b^2 a"; the identity prints as "".
  std::string to_string() const;

  friend bool operator==(const ModularWord&, const ModularWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

struct HandleOptions {
  std::size_t step_cap = 1'000'000;
};

/// Element s2^k Delta^(2l) of the peripheral subgroup <s2, Delta^2>.
struct PeripheralElement {
  std::int64_t k = 0;
  std::int64_t l = 0;
  friend bool operator==(const PeripheralElement&, const PeripheralElement&) = default;
};

/// The two orderings a conjugate of DD can induce on <s2, Delta^2>.
///  PosK: s2^k Delta^(2l) > 1  iff  l > 0, or l = 0 and k > 0
///  NegK: s2^k Delta^(2l) > 1  iff  l > 0, or l = 0 and k < 0
enum class PeripheralOrderType { PosK, NegK };

std::string_view to_string(PeripheralOrderType t) noexcept;

/// Sign of s2^k Delta^(2l) in the given restricted ordering.
Sign3 peripheral_sign(PeripheralOrderType type, std::int64_t k, std::int64_t l) noexcept;

/// s2^k Delta^(2l) as a word.
BraidWord peripheral_word(std::int64_t k, std::int64_t l);

BraidWord free_reduce(const BraidWord& w);
std::int64_t exponent_sum(const BraidWord& w);
/// Image in B3 / <Delta^2>, via s1 -> b^2 a and s2 -> a b^2.
ModularWord modular_image(const BraidWord& w);
bool is_trivial(const BraidWord& w);
/// k with w = s2^k, if it exists.
std::optional<std::int64_t> as_sigma2_power(const BraidWord& w);

/// Dehornoy handle reduction specialised to B3. The result represents
/// the same element and contains s1 with at most one sign.
BraidWord handle_reduce(const BraidWord& w, const HandleOptions& opts = {});

/// Sign in the DD ordering, whose positive cone consists of braids with a
/// 1-positive representative together with s2^k for k < 0.
Sign3 dd_sign(const BraidWord& w, const HandleOptions& opts = {});
/// Less iff u^-1 v is DD-positive.
Comparison dd_compare(const BraidWord& u, const BraidWord& v, const HandleOptions& opts = {});
/// Sign of w in the DD ordering conjugated by gamma, i.e. dd_sign(gamma^-1 w gamma).
Sign3 conj_sign(const BraidWord& w, const BraidWord& gamma, const HandleOptions& opts = {});

/// The m with Delta^(2m) <= w < Delta^(2m+2) in the DD ordering.
std::int64_t delta_floor(const BraidWord& w, const HandleOptions& opts = {});

bool commutes_with_sigma2(const BraidWord& w);
std::optional<PeripheralElement> peripheral_parse(const BraidWord& w);
PeripheralOrderType restricted_order_type(const BraidWord& gamma);

/// Uniformly random word of exactly `length` letters.
BraidWord random_word(std::mt19937_64& rng, std::size_t length);

}  // namespace locert::braid3
