#include "locert/braid3.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "locert/errors.hpp"

namespace locert::braid3 {

BraidLetter::BraidLetter(int generator, int sign) : BraidLetter(generator, sign, Unchecked{}) {
  if (generator != 1 && generator != 2) throw std::invalid_argument("braid generator must be 1 or 2");
  if (sign != 1 && sign != -1) throw std::invalid_argument("braid letter sign must be +1 or -1");
}

char BraidLetter::to_char() const noexcept {
  if (generator_ == 1) return sign_ > 0 ? 'a' : 'A';
  return sign_ > 0 ? 'b' : 'B';
}

// ---------------------------------------------------------------------------
// BraidWord

BraidWord BraidWord::parse(std::string_view text) {
  std::vector<BraidLetter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a': letters.emplace_back(1, 1); break;
      case 'A': letters.emplace_back(1, -1); break;
      case 'b': letters.emplace_back(2, 1); break;
      case 'B': letters.emplace_back(2, -1); break;
      default:
        if (std::isspace(static_cast<unsigned char>(c))) break;
        throw ParseError(std::string("invalid braid letter '") + c + "' (expected one of a A b B)");
    }
  }
  return BraidWord(std::move(letters));
}

namespace {

BraidWord generator_power(int generator, std::int64_t power) {
  std::vector<BraidLetter> letters;
  const int sign = power < 0 ? -1 : 1;
  const auto count = static_cast<std::size_t>(power < 0 ? -power : power);
  letters.assign(count, BraidLetter(generator, sign));
  return BraidWord(std::move(letters));
}

}  // namespace

BraidWord BraidWord::sigma1(std::int64_t power) { return generator_power(1, power); }
BraidWord BraidWord::sigma2(std::int64_t power) { return generator_power(2, power); }
BraidWord BraidWord::delta() { return parse("aba"); }
BraidWord BraidWord::delta_squared(std::int64_t n) { return parse("abaaba").power(n); }
BraidWord BraidWord::longitude() { return delta_squared() * sigma2(-6); }

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return BraidWord(std::move(out));
}

BraidWord BraidWord::power(std::int64_t n) const {
  const BraidWord base = n < 0 ? inverse() : *this;
  const auto count = static_cast<std::size_t>(n < 0 ? -n : n);
  std::vector<BraidLetter> out;
  out.reserve(base.size() * count);
  for (std::size_t i = 0; i < count; ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(std::move(out));
}

std::string BraidWord::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.to_char());
  return out;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

// ---------------------------------------------------------------------------
// Modular quotient

void ModularWord::append(Syllable s) {
  if (syllables_.empty()) {
    syllables_.push_back(s);
    return;
  }
  const Syllable top = syllables_.back();
  if (s == Syllable::A) {
    if (top == Syllable::A) {
      syllables_.pop_back();
    } else {
      syllables_.push_back(s);
    }
    return;
  }
  if (top == Syllable::A) {
    syllables_.push_back(s);
    return;
  }
  const int exponent = (static_cast<int>(top) + static_cast<int>(s)) % 3;
  if (exponent == 0) {
    syllables_.pop_back();
  } else {
    syllables_.back() = static_cast<Syllable>(exponent);
  }
}

std::string ModularWord::to_string() const {
  std::string out;
  for (auto s : syllables_) {
    if (!out.empty()) out.push_back(' ');
    switch (s) {
      case Syllable::A: out += "a"; break;
      case Syllable::B: out += "b"; break;
      case Syllable::BB: out += "b^2"; break;
    }
  }
  return out;
}

ModularWord modular_image(const BraidWord& w) {
  using S = ModularWord::Syllable;
  ModularWord out;
  for (const auto& l : w.letters()) {
    // s1 -> b^2 a, s2 -> a b^2, s1^-1 -> a b, s2^-1 -> b a.
    if (l.generator() == 1) {
      if (l.sign() > 0) {
        out.append(S::BB);
        out.append(S::A);
      } else {
        out.append(S::A);
        out.append(S::B);
      }
    } else {
      if (l.sign() > 0) {
        out.append(S::A);
        out.append(S::BB);
      } else {
        out.append(S::B);
        out.append(S::A);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Word problem

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(std::move(stack));
}

std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t sum = 0;
  for (const auto& l : w.letters()) sum += l.sign();
  return sum;
}

bool is_trivial(const BraidWord& w) { return exponent_sum(w) == 0 && modular_image(w).empty(); }

std::optional<std::int64_t> as_sigma2_power(const BraidWord& w) {
  const std::int64_t k = exponent_sum(w);
  if (is_trivial(w * BraidWord::sigma2(-k))) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Handle reduction

namespace {

// Appends with free cancellation against the top of the stack.
void push_reduced(std::vector<BraidLetter>& stack, const BraidLetter& l) {
  if (!stack.empty() && stack.back() == l.inverse()) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

// Index pair (i, j) of the leftmost s1-handle s1^e s2^m s1^-e in a freely
// reduced word, i.e. the first two consecutive s1-letters of opposite sign.
std::optional<std::pair<std::size_t, std::size_t>> leftmost_handle(std::span<const BraidLetter> w) {
  std::optional<std::size_t> previous;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].generator() != 1) continue;
    if (previous && w[*previous].sign() != w[i].sign()) return std::pair{*previous, i};
    previous = i;
  }
  return std::nullopt;
}

}  // namespace

BraidWord handle_reduce(const BraidWord& w, const HandleOptions& opts) {
  const BraidWord start = free_reduce(w);
  std::vector<BraidLetter> word(start.letters().begin(), start.letters().end());
  for (std::size_t step = 0;; ++step) {
    const auto handle = leftmost_handle(word);
    if (!handle) break;
    if (step >= opts.step_cap) {
      throw StepCapExceeded("handle reduction exceeded " + std::to_string(opts.step_cap) + " steps on " +
                            w.to_string());
    }
    const auto [i, j] = *handle;
    const int e = word[i].sign();
    // The interior is free of s1 and freely reduced, hence s2^m.
    std::int64_t m = 0;
    for (std::size_t t = i + 1; t < j; ++t) m += word[t].sign();
    const int d = m < 0 ? -1 : 1;

    // s1^e s2^m s1^-e  ->  (s2^-e s1^sgn(m) s2^e)^|m|
    std::vector<BraidLetter> next;
    next.reserve(word.size() + 3 * static_cast<std::size_t>(m < 0 ? -m : m));
    next.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
    const BraidLetter s2_neg_e(2, -e), s1_d(1, d), s2_e(2, e);
    for (std::int64_t r = 0; r < (m < 0 ? -m : m); ++r) {
      push_reduced(next, s2_neg_e);
      push_reduced(next, s1_d);
      push_reduced(next, s2_e);
    }
    for (std::size_t t = j + 1; t < word.size(); ++t) push_reduced(next, word[t]);
    word = std::move(next);
  }
  return BraidWord(std::move(word));
}

// ---------------------------------------------------------------------------
// Dubrovina-Dubrovin ordering

Sign3 dd_sign(const BraidWord& w, const HandleOptions& opts) {
  if (is_trivial(w)) return Sign3::Trivial;
  const BraidWord reduced = handle_reduce(w, opts);
  bool positive = false;
  bool negative = false;
  for (const auto& l : reduced.letters()) {
    if (l.generator() != 1) continue;
    (l.sign() > 0 ? positive : negative) = true;
  }
  if (positive && negative) throw std::logic_error("handle reduction left an s1-handle in " + w.to_string());
  if (positive) return Sign3::Positive;
  if (negative) return Sign3::Negative;
  // No s1 left: a nontrivial power of s2, positive exactly for negative powers.
  const std::int64_t k = exponent_sum(reduced);
  if (k == 0) throw std::logic_error("nontrivial braid reduced to the empty word: " + w.to_string());
  return k < 0 ? Sign3::Positive : Sign3::Negative;
}

Comparison dd_compare(const BraidWord& u, const BraidWord& v, const HandleOptions& opts) {
  switch (dd_sign(u.inverse() * v, opts)) {
    case Sign3::Positive: return Comparison::Less;
    case Sign3::Trivial: return Comparison::Equal;
    case Sign3::Negative: return Comparison::Greater;
  }
  return Comparison::Equal;
}

Sign3 conj_sign(const BraidWord& w, const BraidWord& gamma, const HandleOptions& opts) {
  return dd_sign(gamma.inverse() * w * gamma, opts);
}

std::int64_t delta_floor(const BraidWord& w, const HandleOptions& opts) {
  // Each letter s_i^{+-1} lies strictly between Delta^-2 and Delta^2 (the
  // words Delta^2 s_i^{-+1} and s_i^{-+1} Delta^2 are 1-positive after
  // cancellation). By the Malyutin inequalities
  //   a < Delta^2k, b < Delta^2l  =>  ab < Delta^2(k+l)
  //   a > Delta^2k, b > Delta^2l  =>  ab > Delta^2(k+l)
  // a word of L letters satisfies Delta^-2L < w < Delta^2L, so the floor lies
  // in [-L, L-1] (and is 0 for the empty word).
  const auto letters = static_cast<std::int64_t>(w.size());
  auto at_or_below = [&](std::int64_t m) {
    return dd_sign(BraidWord::delta_squared(-m) * w, opts) != Sign3::Negative;
  };
  std::int64_t lo = -letters;
  std::int64_t hi = letters + 1;
  if (!at_or_below(lo) || at_or_below(hi)) {
    throw BoundExceeded("no Delta^2 floor within +-" + std::to_string(letters) + " for " + w.to_string());
  }
  // Invariant: at_or_below(lo) && !at_or_below(hi).
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (at_or_below(mid) ? lo : hi) = mid;
  }
  return lo;
}

// ---------------------------------------------------------------------------
// Peripheral subgroup <s2, Delta^2>

bool commutes_with_sigma2(const BraidWord& w) {
  const BraidWord s2 = BraidWord::sigma2();
  return is_trivial(w * s2 * w.inverse() * s2.inverse());
}

BraidWord peripheral_word(std::int64_t k, std::int64_t l) {
  return BraidWord::sigma2(k) * BraidWord::delta_squared(l);
}

std::optional<PeripheralElement> peripheral_parse(const BraidWord& w) {
  // The image of s2^k is (a b^2)^k or (b a)^|k|, of length 2|k|, so only
  // k = +-len/2 can match. Since each letter contributes at most two
  // syllables, |k| <= letter count.
  const ModularWord image = modular_image(w);
  if (image.size() % 2 != 0) return std::nullopt;
  const auto half = static_cast<std::int64_t>(image.size() / 2);
  if (half > static_cast<std::int64_t>(w.size())) return std::nullopt;
  const std::int64_t exponent = exponent_sum(w);
  for (std::int64_t k : {half, -half}) {
    if (modular_image(BraidWord::sigma2(k)) != image) continue;
    if ((exponent - k) % 6 != 0) continue;
    const std::int64_t l = (exponent - k) / 6;
    if (is_trivial(w * BraidWord::delta_squared(-l) * BraidWord::sigma2(-k))) return PeripheralElement{k, l};
  }
  return std::nullopt;
}

std::string_view to_string(PeripheralOrderType t) noexcept { return t == PeripheralOrderType::PosK ? "PosK" : "NegK"; }

Sign3 peripheral_sign(PeripheralOrderType type, std::int64_t k, std::int64_t l) noexcept {
  if (l > 0) return Sign3::Positive;
  if (l < 0) return Sign3::Negative;
  if (k == 0) return Sign3::Trivial;
  const bool positive = type == PeripheralOrderType::PosK ? k > 0 : k < 0;
  return positive ? Sign3::Positive : Sign3::Negative;
}

PeripheralOrderType restricted_order_type(const BraidWord& gamma) {
  return commutes_with_sigma2(gamma) ? PeripheralOrderType::NegK : PeripheralOrderType::PosK;
}

BraidWord random_word(std::mt19937_64& rng, std::size_t length) {
  static constexpr int kGenerators[4][2] = {{1, 1}, {1, -1}, {2, 1}, {2, -1}};
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<BraidLetter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const auto& g = kGenerators[pick(rng)];
    letters.emplace_back(g[0], g[1]);
  }
  return BraidWord(std::move(letters));
}

}  // namespace locert::braid3
