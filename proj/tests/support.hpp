#pragma once

// Oracles and seeded generators shared by the test binaries. The oracles
// deliberately avoid the library's own algorithms.

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "locert/braid3.hpp"

namespace test_support {

/// B3 -> SL(2, Z): s1 -> [[1,1],[0,1]], s2 -> [[1,0],[-1,1]]. The kernel is
/// generated by Delta^4, which has exponent sum 12, so together with the
/// exponent sum this decides the word problem.
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat2 sl2_image(const std::string& word) {
  Mat2 m;
  for (char ch : word) {
    switch (ch) {
      case 'a': m = mul(m, {1, 1, 0, 1}); break;
      case 'A': m = mul(m, {1, -1, 0, 1}); break;
      case 'b': m = mul(m, {1, 0, -1, 1}); break;
      case 'B': m = mul(m, {1, 0, 1, 1}); break;
      default: break;
    }
  }
  return m;
}

inline std::int64_t letter_sum(const std::string& word) {
  std::int64_t s = 0;
  for (char ch : word) s += (ch == 'a' || ch == 'b') ? 1 : (ch == 'A' || ch == 'B') ? -1 : 0;
  return s;
}

inline bool oracle_trivial(const std::string& word) { return letter_sum(word) == 0 && sl2_image(word) == Mat2{}; }

/// Random string over the given alphabet.
inline std::string random_string(std::mt19937_64& rng, const std::string& alphabet, std::size_t length) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(alphabet[pick(rng)]);
  return out;
}

inline std::size_t random_length(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// A random word that contains s1 only positively, at least once: 1-positive
/// by definition, hence DD-positive.
inline std::string random_one_positive(std::mt19937_64& rng, std::size_t length) {
  std::string w = random_string(rng, "abB", length);
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(random_length(rng, 0, w.size())), 'a');
  return w;
}

inline locert::braid3::BraidWord word(const std::string& s) { return locert::braid3::BraidWord::parse(s); }

}  // namespace test_support
