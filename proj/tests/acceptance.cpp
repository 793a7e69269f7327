// Acceptance run: one PASS/FAIL line per criterion, with the measured time
// against its limit. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "locert/alexander.hpp"
#include "locert/braid3.hpp"
#include "locert/compat.hpp"
#include "locert/errors.hpp"
#include "locert/fpgroup.hpp"
#include "locert/klein.hpp"
#include "locert/seifert.hpp"
#include "locert/splice.hpp"
#include "support.hpp"

using namespace locert;
using braid3::BraidWord;
using test_support::oracle_trivial;
using test_support::random_length;
using test_support::random_string;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  /// Time limit in milliseconds; 0 means none.
  double limit_ms;
  std::function<Outcome()> body;
};

BraidWord w(const std::string& s) { return BraidWord::parse(s); }

std::string inverse_text(const std::string& s) {
  std::string out(s.rbegin(), s.rend());
  for (char& c : out) c = std::isupper(static_cast<unsigned char>(c)) ? std::tolower(c) : std::toupper(c);
  return out;
}

Outcome c1_abelianization() {
  Outcome o;
  std::ifstream in(std::string(LOCERT_DATA_DIR) + "/trefoil_klein_pi1.json");
  o.require(static_cast<bool>(in), "data file missing");
  if (!o.pass) return o;
  const auto p = fpgroup::Presentation::from_json(nlohmann::json::parse(in));
  const auto ab = fpgroup::abelianization(p);
  o.require(ab == fpgroup::AbelianInvariants{0, {4}}, "got " + ab.to_json().dump());
  o.detail = o.pass ? "H1 = Z/4" : o.detail;
  return o;
}

Outcome c2_coset_enumeration() {
  Outcome o;
  auto quotient = fpgroup::braid_group_b3();
  quotient.add_relator(quotient.parse_word("s2"));
  const auto r = fpgroup::coset_enumerate(quotient, {}, 1000);
  o.require(r.index == std::size_t{1}, "index not 1");
  for (const auto& row : r.table) {
    for (auto v : row) o.require(v < r.table.size(), "table has an undefined entry");
  }
  if (o.pass) o.detail = "index 1, " + std::to_string(r.cosets_defined) + " cosets defined, table closed";
  return o;
}

Outcome c3_dd_suite() {
  Outcome o;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto s = random_string(rng, "aAbB", random_length(rng, 0, 20));
    const auto x = w(s);
    const Sign3 sign = braid3::dd_sign(x);
    o.require(braid3::dd_sign(x.inverse()) == negate(sign), "inverse sign mismatch on " + s);
    o.require((sign == Sign3::Trivial) == oracle_trivial(s), "trivial sign disagrees with oracle on " + s);
  }
  int pairs = 0;
  while (pairs < 1000) {
    const auto a = random_string(rng, "aAbB", random_length(rng, 1, 20));
    const auto b = random_string(rng, "aAbB", random_length(rng, 1, 20));
    if (braid3::dd_sign(w(a)) != Sign3::Positive || braid3::dd_sign(w(b)) != Sign3::Positive) continue;
    ++pairs;
    o.require(braid3::dd_sign(w(a + b)) == Sign3::Positive, "cone not closed on " + a + " * " + b);
  }
  for (int i = 0; i < 1000; ++i) {
    const auto a = w(random_string(rng, "aAbB", random_length(rng, 0, 20)));
    const auto b = w(random_string(rng, "aAbB", random_length(rng, 0, 20)));
    const auto c = w(random_string(rng, "aAbB", random_length(rng, 0, 20)));
    o.require(braid3::dd_compare(a, b) == braid3::dd_compare(c * a, c * b), "left invariance fails");
  }
  if (o.pass) o.detail = "1000 words, 1000 positive pairs, 1000 triples, 0 failures";
  return o;
}

Outcome c4_conjugate_bound() {
  Outcome o;
  std::mt19937_64 rng(4);
  const auto lower = BraidWord::delta_squared(-1), upper = BraidWord::delta_squared(1);
  for (int i = 0; i < 500; ++i) {
    const auto beta = w(random_string(rng, "aAbB", random_length(rng, 0, 8)));
    for (std::int64_t k = -5; k <= 5; ++k) {
      const auto x = beta.inverse() * BraidWord::sigma2(k) * beta;
      o.require(braid3::dd_compare(lower, x) == Comparison::Less && braid3::dd_compare(x, upper) == Comparison::Less,
                "bound fails for beta = " + beta.to_string() + ", k = " + std::to_string(k));
    }
  }
  if (o.pass) o.detail = "500 conjugators x 11 powers, 0 failures";
  return o;
}

Outcome c5_restricted_type() {
  Outcome o;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto gamma = w(random_string(rng, "aAbB", random_length(rng, 0, 10)));
    const auto type = braid3::restricted_order_type(gamma);
    for (std::int64_t k = -4; k <= 4; ++k) {
      for (std::int64_t l = -4; l <= 4; ++l) {
        if (k == 0 && l == 0) continue;
        const Sign3 direct = braid3::conj_sign(braid3::peripheral_word(k, l), gamma);
        o.require(direct == braid3::peripheral_sign(type, k, l),
                  "mismatch at gamma = " + gamma.to_string() + ", (k, l) = (" + std::to_string(k) + ", " +
                      std::to_string(l) + ")");
      }
    }
  }
  if (o.pass) o.detail = "200 conjugators x 80 cells, 0 failures";
  return o;
}

Outcome c6_compatibility() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  int commuting = 0;
  for (int i = 0; i < 200; ++i) {
    const auto gamma = w(random_string(rng, "aAbB", random_length(rng, 0, 10)));
    const auto r = compat::verify_compatibility(gamma, 5);
    o.require(r.ok(), "failures for gamma = " + gamma.to_string());
    o.require(r.all_sign_classes_hit, "sign classes not covered");
    const bool comm = braid3::commutes_with_sigma2(gamma);
    commuting += comm;
    o.require(r.ordering == (comm ? klein::KleinOrderingId::O1 : klein::KleinOrderingId::O2),
              "ordering choice wrong for gamma = " + gamma.to_string());
  }
  o.require(compat::verify_compatibility(BraidWord{}, 5).ok(), "identity conjugator fails");
  const auto control = compat::verify_compatibility(w("a"), 5, klein::KleinOrderingId::O1);
  o.require(!control.failures.empty(), "wrong-ordering control produced no failure");
  if (o.pass) {
    o.detail = "200 conjugators (" + std::to_string(commuting) + " commuting), 0 failures; control: " +
               std::to_string(control.failures.size()) + " failures";
  }
  return o;
}

Outcome c7_word_problem() {
  Outcome o;
  std::mt19937_64 rng(7);
  int trivial = 0;
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    if (i % 2 == 0) {
      s = random_string(rng, "aAbB", random_length(rng, 0, 64));
    } else {
      // Conjugates of the braid relator and of Delta^4, so about half the
      // sample is trivial.
      const auto x = random_string(rng, "aAbB", random_length(rng, 0, 20));
      const std::string rel = i % 4 == 1 ? "abaBAB" : "abaabaabaabaBABBABBABBAB";
      s = x + rel + inverse_text(x);
    }
    try {
      const auto reduced = braid3::handle_reduce(w(s));
      const bool expected = oracle_trivial(s);
      o.require(reduced.empty() == expected, "disagreement on " + s);
      trivial += expected;
    } catch (const StepCapExceeded&) {
      o.require(false, "step cap hit on " + s);
    }
  }
  if (o.pass) o.detail = "2000 words (" + std::to_string(trivial) + " trivial), 0 disagreements, cap never hit";
  return o;
}

Outcome c8_klein_normality() {
  Outcome o;
  using klein::KleinElement;
  using klein::KleinOrderingId;
  for (std::int64_t a = -6; a <= 6; ++a) {
    for (std::int64_t b = -6; b <= 6; ++b) {
      const KleinElement g{a, b};
      // Cone-level: is g P1 g^-1 equal to P1, or to P2, on the element grid?
      bool same_as_o1 = true, same_as_o2 = true;
      for (std::int64_t c = -6; c <= 6; ++c) {
        for (std::int64_t d = -6; d <= 6; ++d) {
          const KleinElement h{c, d};
          const Sign3 s = klein::k_sign(klein::k_multiply(klein::k_multiply(klein::k_inverse(g), h), g),
                                        KleinOrderingId::O1);
          same_as_o1 = same_as_o1 && s == klein::k_sign(h, KleinOrderingId::O1);
          same_as_o2 = same_as_o2 && s == klein::k_sign(h, KleinOrderingId::O2);
        }
      }
      const bool even = a % 2 == 0;
      o.require(same_as_o1 == even && same_as_o2 == !even,
                "cone conjugation wrong for a = " + std::to_string(a) + ", b = " + std::to_string(b));
      o.require((klein::k_conjugate_ordering(g, KleinOrderingId::O1) == KleinOrderingId::O1) == even,
                "closed form wrong for a = " + std::to_string(a));
    }
  }
  if (o.pass) o.detail = "169 conjugators x 169 elements, exact";
  return o;
}

Outcome c9_fox() {
  Outcome o;
  using alexander::IntLaurentPoly;
  using alexander::branched_cover_order;
  const auto one = IntLaurentPoly::constant(1);
  for (int n = 2; n <= 12; ++n) o.require(branched_cover_order(one, n) == BigInt(1), "Conway order != 1");
  const auto trefoil = IntLaurentPoly::parse("t^2 - t + 1");
  const auto fig8 = IntLaurentPoly::parse("t^2 - 3t + 1");
  o.require(branched_cover_order(trefoil, 2) == BigInt(3), "trefoil n=2");
  o.require(!branched_cover_order(trefoil, 6).has_value(), "trefoil n=6 not infinite");
  o.require(branched_cover_order(fig8, 2) == BigInt(5), "figure eight n=2");
  for (const auto& p : {one, trefoil, fig8}) {
    const BigInt v = p.evaluate(-1);
    o.require(branched_cover_order(p, 2) == (v < 0 ? BigInt(-v) : v), "determinant cross-check");
  }
  if (o.pass) o.detail = "Conway 1 (n<=12), trefoil 3 / infinite, figure eight 5, |Delta(-1)| agrees";
  return o;
}

Outcome c10_splice() {
  Outcome o;
  using namespace seifert;
  const SpliceTree tree({{"left", TorusKnotPiece{2, 3, 1}}, {"right", TorusKnotPiece{2, 3, 1}}},
                        {{0, 1, GluingMatrix::splice()}});
  const auto cert = certificate_search(tree, {3});
  o.require(cert.status == LOStatus::LO && cert.components.size() == 1 && cert.components[0].step, "no certificate");
  if (!o.pass) return o;
  const auto& step = *cert.components[0].step;
  o.require(slope_lo_verdict(tree.nodes()[0].piece, step.alpha).status == LOStatus::LO, "alpha not LO on left");
  o.require(slope_lo_verdict(tree.nodes()[1].piece, step.image).status == LOStatus::LO, "image not LO on right");
  o.require(apply_gluing(GluingMatrix::splice(), step.alpha) == step.image, "image is not the glued slope");
  o.require(verify_certificate(tree, cert).ok, "round trip fails");
  o.require(verify_certificate(tree, Certificate::from_json(cert.to_json(tree), tree)).ok, "JSON round trip fails");
  auto tampered = cert;
  tampered.components[0].step->alpha = Slope(1, 1);
  tampered.components[0].step->image = Slope(1, 1);
  o.require(!verify_certificate(tree, tampered).ok, "tampered slope accepted");
  auto no_hyp = cert;
  no_hyp.hypotheses.clear();
  o.require(!verify_certificate(tree, no_hyp).ok, "missing hypothesis accepted");
  if (o.pass) o.detail = "pair " + step.alpha.to_string() + " -> " + step.image.to_string() + ", verified; tampering rejected";
  return o;
}

Outcome c11_slope_shapes() {
  Outcome o;
  using namespace seifert;
  const TorusKnotPiece trefoil{2, 3, 1};
  std::set<std::int64_t> not_lo;
  for (std::int64_t n = -10; n <= 10; ++n) {
    if (slope_lo_verdict(trefoil, Slope(1, n)).status == LOStatus::NotLO) not_lo.insert(n);
  }
  o.require(not_lo.size() < 21, "every 1/n slope NotLO");
  for (std::int64_t n = -10; n <= -1; ++n) {
    o.require(slope_lo_verdict(trefoil, Slope(n, 1)).status == LOStatus::LO, "n/1 not LO for n = " + std::to_string(n));
  }
  int overlaps = 0;
  for (const TorusKnotPiece& k : {TorusKnotPiece{2, 3, 1}, TorusKnotPiece{2, 3, -1}, TorusKnotPiece{2, 5, 1},
                                  TorusKnotPiece{3, 4, 1}, TorusKnotPiece{3, 5, -1}}) {
    for (std::int64_t p = -10; p <= 10; ++p) {
      for (std::int64_t q = 0; q <= 10; ++q) {
        if (std::abs(p) != 1 || std::gcd(p, q) != 1) continue;
        const Slope alpha(p, q);
        const auto m = moser_surgery(k, alpha);
        if (m.kind != SurgeryKind::SFS) continue;
        ++overlaps;
        o.require(zhs_lo_status(BrieskornZHS(m.multiplicities)).status == torus_knot_lspace_verdict(k, alpha).status,
                  "rules disagree at " + alpha.to_string());
      }
    }
  }
  if (o.pass) {
    std::string set;
    for (auto n : not_lo) set += (set.empty() ? "" : ",") + std::to_string(n);
    o.detail = "1/n NotLO set {" + set + "}; n/1 (n<0) all LO; " + std::to_string(overlaps) +
               " overlapping slopes, 0 disagreements";
  }
  return o;
}

Outcome c12_floer_rank() {
  Outcome o;
  using seifert::HFParams;
  o.require(seifert::hf_surgery_rank({-3, 1, 1, {1, 1, 1}}) == 5, "-3 example");
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> pd(-50, 50), qd(1, 8), nud(0, 6), rk(1, 5), len(0, 5);
  int strict = 0;
  for (int i = 0; i < 10000; ++i) {
    HFParams h{pd(rng), qd(rng), nud(rng), {}};
    for (auto n = len(rng); n > 0; --n) h.as_ranks.push_back(rk(rng));
    const auto r = seifert::hf_surgery_rank(h);
    o.require(r >= std::abs(h.p), "rank below |p|");
    if (h.p < 0 && h.nu > 0) {
      o.require(r > std::abs(h.p), "negative surgery is an L-space");
      ++strict;
    }
  }
  if (o.pass) o.detail = "10000 points (" + std::to_string(strict) + " strict cases), -3 -> 5";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "abelianization of the glued group", 10, c1_abelianization},
      {2, "B3 / <<s2>> trivial by coset enumeration", 100, c2_coset_enumeration},
      {3, "DD ordering suite", 5000, c3_dd_suite},
      {4, "conjugates of s2 powers lie between Delta^-2 and Delta^2", 10000, c4_conjugate_bound},
      {5, "restricted order type matches direct evaluation", 0, c5_restricted_type},
      {6, "compatibility of the DD and Klein families", 0, c6_compatibility},
      {7, "word problem cross-validation", 30000, c7_word_problem},
      {8, "Klein normality", 0, c8_klein_normality},
      {9, "Fox formula values", 100, c9_fox},
      {10, "double-trefoil splice certificate", 1000, c10_splice},
      {11, "torus-knot slope shapes and rule consistency", 0, c11_slope_shapes},
      {12, "Floer rank bounds", 1000, c12_floer_rank},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_ms > 0 && ms >= c.limit_ms && o.pass) {
      o.pass = false;
      o.detail = "time limit exceeded; " + o.detail;
    }
    char timing[64];
    if (c.limit_ms > 0) {
      std::snprintf(timing, sizeof timing, "%.2f ms (limit %.0f ms)", ms, c.limit_ms);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f ms", ms);
    }
    std::printf("%s  C%-2d %s: %s [%s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), timing);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
