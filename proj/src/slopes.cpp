#include "locert/slopes.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "locert/errors.hpp"

namespace locert::slopes {

Slope::Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (std::gcd(p, q) != 1) {
    throw NotPrimitive("slope " + std::to_string(p) + "/" + std::to_string(q) + " is not primitive");
  }
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("invalid integer '" + std::string(text) + "' in " + std::string(what));
  }
  return value;
}

}  // namespace

Slope Slope::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_int(text, "slope"), 1);
  return Slope(parse_int(text.substr(0, slash), "slope"), parse_int(text.substr(slash + 1), "slope"));
}

std::string Slope::to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

GluingMatrix::GluingMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  const std::int64_t det = determinant();
  if (det != 1 && det != -1) {
    throw NotUnimodular("gluing matrix has determinant " + std::to_string(det) + ", expected +-1");
  }
}

GluingMatrix GluingMatrix::inverse() const {
  const std::int64_t det = determinant();
  return {d_ * det, -b_ * det, -c_ * det, a_ * det};
}

GluingMatrix operator*(const GluingMatrix& l, const GluingMatrix& r) {
  return {l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_, l.c_ * r.a_ + l.d_ * r.c_,
          l.c_ * r.b_ + l.d_ * r.d_};
}

std::int64_t intersection_number(const Slope& alpha, const Slope& beta) noexcept {
  return std::llabs(alpha.p() * beta.q() - beta.p() * alpha.q());
}

Slope apply_gluing(const GluingMatrix& m, const Slope& alpha) {
  const auto [p, q] = m.act(alpha.p(), alpha.q());
  return Slope(p, q);
}

std::optional<SpliceFraming> splice_framing(const GluingMatrix& f, const Slope& lambda1, const Slope& lambda2) {
  if (intersection_number(apply_gluing(f, lambda1), lambda2) != 1) return std::nullopt;
  return SpliceFraming{apply_gluing(f.inverse(), lambda2), apply_gluing(f, lambda1)};
}

std::int64_t filling_homology_order(const Slope& alpha) noexcept { return std::llabs(alpha.p()); }

std::int64_t union_homology_order(const GluingMatrix& f, const Slope& lambda1, const Slope& lambda2) {
  return intersection_number(apply_gluing(f, lambda1), lambda2);
}

}  // namespace locert::slopes
