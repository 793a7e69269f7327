#include "locert/alexander.hpp"

#include <cctype>

#include "locert/errors.hpp"

namespace locert::alexander {

IntLaurentPoly::IntLaurentPoly(const std::map<std::int64_t, BigInt>& coefficients) {
  for (const auto& [e, c] : coefficients) {
    if (c != 0) coefficients_.emplace(e, c);
  }
}

IntLaurentPoly IntLaurentPoly::constant(std::int64_t c) { return IntLaurentPoly({{0, BigInt(c)}}); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  std::map<std::int64_t, BigInt> parse() {
    if (text_.empty()) fail("empty polynomial");
    std::map<std::int64_t, BigInt> out;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      BigInt coefficient = 1;
      bool have_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient = read_digits();
        have_number = true;
      }
      std::int64_t exponent = 0;
      if (have_number && peek() == '*') {
        ++pos_;
        if (peek() != 't') fail("expected 't' after '*'");
      }
      if (peek() == 't') {
        ++pos_;
        exponent = 1;
        if (peek() == '^') {
          ++pos_;
          int exp_sign = 1;
          if (peek() == '-' || peek() == '+') {
            exp_sign = peek() == '-' ? -1 : 1;
            ++pos_;
          }
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          exponent = exp_sign * static_cast<std::int64_t>(read_digits());
        }
      } else if (!have_number) {
        fail("expected a coefficient or 't'");
      }
      out[exponent] += sign * coefficient;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  BigInt read_digits() {
    BigInt value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) value = value * 10 + (text_[pos_++] - '0');
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + text_ + "': " + what + " at position " + std::to_string(pos_));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntLaurentPoly IntLaurentPoly::parse(std::string_view text) { return IntLaurentPoly(PolyParser(text).parse()); }

IntLaurentPoly IntLaurentPoly::from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse(j.get<std::string>());
  if (!j.is_array()) throw ParseError("polynomial JSON must be a string or an array of [exponent, coefficient]");
  std::map<std::int64_t, BigInt> coefficients;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_number_integer()) {
      throw ParseError("polynomial term must be [exponent, coefficient] integers");
    }
    coefficients[term[0].get<std::int64_t>()] += BigInt(term[1].get<std::int64_t>());
  }
  return IntLaurentPoly(coefficients);
}

std::int64_t IntLaurentPoly::min_degree() const { return is_zero() ? 0 : coefficients_.begin()->first; }
std::int64_t IntLaurentPoly::max_degree() const { return is_zero() ? 0 : coefficients_.rbegin()->first; }

std::vector<BigInt> IntLaurentPoly::shifted_coefficients() const {
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(max_degree() - min_degree() + 1), 0);
  for (const auto& [e, c] : coefficients_) out[static_cast<std::size_t>(e - min_degree())] = c;
  return out;
}

BigInt IntLaurentPoly::evaluate(std::int64_t t) const {
  // Laurent terms only evaluate exactly at +-1; callers use it for those.
  if (t != 1 && t != -1 && min_degree() < 0) throw InvalidParams("cannot evaluate a Laurent polynomial at " + std::to_string(t));
  BigInt sum = 0;
  for (const auto& [e, c] : coefficients_) sum += c * boost::multiprecision::pow(BigInt(t), static_cast<unsigned>(e < 0 ? -e : e));
  return sum;
}

std::string IntLaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str();
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

IntLaurentPoly operator*(const IntLaurentPoly& a, const IntLaurentPoly& b) {
  std::map<std::int64_t, BigInt> out;
  for (const auto& [ea, ca] : a.coefficients_) {
    for (const auto& [eb, cb] : b.coefficients_) out[ea + eb] += ca * cb;
  }
  return IntLaurentPoly(out);
}

BigInt resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
  if (f.empty() || g.empty()) return 0;
  const std::size_t m = f.size() - 1;  // deg f
  const std::size_t k = g.size() - 1;  // deg g
  if (m + k == 0) return 1;
  BigMatrix sylvester(m + k, std::vector<BigInt>(m + k, 0));
  for (std::size_t row = 0; row < k; ++row) {
    for (std::size_t i = 0; i <= m; ++i) sylvester[row][row + i] = f[m - i];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t i = 0; i <= k; ++i) sylvester[k + row][row + i] = g[k - i];
  }
  return determinant(std::move(sylvester));
}

BranchedCoverOrder branched_cover_order(const IntLaurentPoly& delta, std::int64_t n) {
  if (n < 2) throw InvalidParams("branched cover degree must be at least 2, got " + std::to_string(n));
  const BigInt at_one = delta.evaluate(1);
  if (at_one != 1 && at_one != -1) {
    throw NotAlexanderNormalized("Delta(1) = " + at_one.str() + ", expected +-1 for " + delta.to_string());
  }
  // 1 + t + ... + t^(n-1) has the nontrivial n-th roots of unity as roots.
  const std::vector<BigInt> cyclotomic_product(static_cast<std::size_t>(n), BigInt(1));
  BigInt r = resultant(delta.shifted_coefficients(), cyclotomic_product);
  if (r == 0) return std::nullopt;
  return r < 0 ? BigInt(-r) : r;
}

AlexanderCheck validate_alexander(const IntLaurentPoly& delta) {
  AlexanderCheck out;
  const BigInt at_one = delta.evaluate(1);
  if (at_one != 1 && at_one != -1) out.diagnostics.push_back("normalization: Delta(1) = " + at_one.str() + ", expected +-1");
  const auto c = delta.shifted_coefficients();
  bool palindromic = true, anti = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    palindromic = palindromic && c[i] == c[c.size() - 1 - i];
    anti = anti && c[i] == -c[c.size() - 1 - i];
  }
  if (c.empty() || !(palindromic || anti)) {
    out.diagnostics.push_back("symmetry: Delta(t) is not +-t^k Delta(1/t)");
  }
  out.valid = out.diagnostics.empty();
  return out;
}

}  // namespace locert::alexander
