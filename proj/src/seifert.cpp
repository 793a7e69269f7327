#include "locert/seifert.hpp"

#include <algorithm>
#include <numeric>

#include "locert/errors.hpp"

namespace locert::seifert {

BrieskornZHS::BrieskornZHS(std::vector<std::int64_t> multiplicities) : multiplicities_(std::move(multiplicities)) {
  for (std::size_t i = 0; i < multiplicities_.size(); ++i) {
    if (multiplicities_[i] < 1) {
      throw NotCoprime("Brieskorn multiplicity " + std::to_string(multiplicities_[i]) + " is not positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(multiplicities_[i], multiplicities_[j]) != 1) {
        throw NotCoprime("Brieskorn multiplicities " + std::to_string(multiplicities_[j]) + " and " +
                         std::to_string(multiplicities_[i]) + " are not coprime");
      }
    }
  }
}

std::vector<std::int64_t> BrieskornZHS::nontrivial() const {
  std::vector<std::int64_t> out;
  std::copy_if(multiplicities_.begin(), multiplicities_.end(), std::back_inserter(out),
               [](std::int64_t a) { return a != 1; });
  std::sort(out.begin(), out.end());
  return out;
}

std::string BrieskornZHS::to_string() const {
  const auto n = nontrivial();
  if (n.size() < 3) return "S3";
  std::string out = "Sigma(";
  for (std::size_t i = 0; i < n.size(); ++i) out += (i ? "," : "") + std::to_string(n[i]);
  return out + ")";
}

std::string_view to_string(Exceptional e) noexcept {
  switch (e) {
    case Exceptional::S3: return "S3";
    case Exceptional::Poincare: return "Poincare";
    case Exceptional::Other: return "Other";
  }
  return "?";
}

Exceptional recognize_exceptional(const BrieskornZHS& z) {
  const auto n = z.nontrivial();
  if (n.size() < 3) return Exceptional::S3;
  if (n == std::vector<std::int64_t>{2, 3, 5}) return Exceptional::Poincare;
  return Exceptional::Other;
}

std::string_view to_string(LOStatus s) noexcept {
  switch (s) {
    case LOStatus::LO: return "LO";
    case LOStatus::NotLO: return "NotLO";
    case LOStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(RuleTag t) noexcept {
  switch (t) {
    case RuleTag::B1Rule: return "B1Rule";
    case RuleTag::ZHSClassification: return "ZHSClassification";
    case RuleTag::LSpaceInterval: return "LSpaceInterval";
    case RuleTag::UserAsserted: return "UserAsserted";
    case RuleTag::SpliceInduction: return "SpliceInduction";
  }
  return "?";
}

LOStatus parse_lo_status(std::string_view text) {
  for (LOStatus s : {LOStatus::LO, LOStatus::NotLO, LOStatus::Unknown}) {
    if (to_string(s) == text) return s;
  }
  throw ParseError("unknown LO status '" + std::string(text) + "'");
}

RuleTag parse_rule_tag(std::string_view text) {
  for (RuleTag t : {RuleTag::B1Rule, RuleTag::ZHSClassification, RuleTag::LSpaceInterval, RuleTag::UserAsserted,
                    RuleTag::SpliceInduction}) {
    if (to_string(t) == text) return t;
  }
  throw ParseError("unknown rule tag '" + std::string(text) + "'");
}

LOSlopeVerdict zhs_lo_status(const BrieskornZHS& z) {
  const Exceptional e = recognize_exceptional(z);
  const std::string name = z.to_string();
  switch (e) {
    case Exceptional::S3:
      return {LOStatus::NotLO, RuleTag::ZHSClassification, name + " is S3; the trivial group is not left-orderable"};
    case Exceptional::Poincare:
      return {LOStatus::NotLO, RuleTag::ZHSClassification,
              name + " is the Poincare sphere; its fundamental group is finite"};
    case Exceptional::Other: break;
  }
  return {LOStatus::LO, RuleTag::ZHSClassification,
          name + " is a Brieskorn sphere other than S3 and Sigma(2,3,5), hence left-orderable (Boyer-Rolfsen-Wiest)"};
}

void TorusKnotPiece::validate() const {
  if (r < 2 || s < 2) {
    throw InvalidParams("torus knot parameters must be >= 2, got (" + std::to_string(r) + ", " + std::to_string(s) + ")");
  }
  if (std::gcd(r, s) != 1) {
    throw NotCoprime("torus knot parameters (" + std::to_string(r) + ", " + std::to_string(s) + ") are not coprime");
  }
  if (chirality < -1 || chirality > 1) throw InvalidParams("chirality must be -1, 0 or 1");
}

std::string_view to_string(SurgeryKind k) noexcept {
  switch (k) {
    case SurgeryKind::SFS: return "SFS";
    case SurgeryKind::Lens: return "Lens";
    case SurgeryKind::Reducible: return "Reducible";
  }
  return "?";
}

namespace {

void require_chirality(const TorusKnotPiece& k) {
  k.validate();
  if (k.chirality == 0) throw InvalidParams("torus knot chirality is unspecified");
}

std::string knot_name(const TorusKnotPiece& k) {
  return std::string(k.chirality < 0 ? "mirror " : "") + "T(" + std::to_string(k.r) + "," + std::to_string(k.s) + ")";
}

}  // namespace

SurgeryResult moser_surgery(const TorusKnotPiece& k, const Slope& alpha) {
  require_chirality(k);
  const std::int64_t p = k.chirality * alpha.p();
  const std::int64_t d = std::abs(p - alpha.q() * k.r * k.s);
  if (d == 0) return {SurgeryKind::Reducible, {}};
  if (d == 1) return {SurgeryKind::Lens, {}};
  return {SurgeryKind::SFS, {k.r, k.s, d}};
}

LOSlopeVerdict torus_knot_lspace_verdict(const TorusKnotPiece& k, const Slope& alpha) {
  const SurgeryResult m = moser_surgery(k, alpha);
  const std::string where = knot_name(k) + "(" + alpha.to_string() + ")";
  if (m.kind == SurgeryKind::Reducible) {
    throw RuleInapplicable(where + " is reducible (a lens space summand pair); the L-space interval does not apply");
  }
  if (alpha.p() == 0) {
    return {LOStatus::LO, RuleTag::B1Rule,
            where + " has b1 = 1, is Seifert fibred and prime (Heil), so pi1 surjects onto Z"};
  }
  // p/q >= t with q >= 0, after flipping p for the mirror.
  const std::int64_t t = k.lspace_threshold();
  const std::int64_t p = k.chirality * alpha.p();
  const bool lspace = p >= t * alpha.q();
  const std::string interval = "p/q " + std::string(lspace ? ">=" : "<") + " rs - r - s = " + std::to_string(t) +
                               (k.chirality < 0 ? " after mirroring" : "");
  if (lspace) {
    return {LOStatus::NotLO, RuleTag::LSpaceInterval,
            where + " is a Seifert fibred L-space (" + interval + "), so pi1 is not left-orderable"};
  }
  return {LOStatus::LO, RuleTag::LSpaceInterval,
          where + " is Seifert fibred and not an L-space (" + interval + "), so pi1 is left-orderable"};
}

std::string describe(const Piece& piece) {
  if (const auto* k = std::get_if<TorusKnotPiece>(&piece)) {
    return "exterior of " + (k->chirality == 0 ? "T(" + std::to_string(k->r) + "," + std::to_string(k->s) + ")"
                                                : knot_name(*k));
  }
  if (const auto* b = std::get_if<BrieskornComplement>(&piece)) return "fibre exterior in " + b->zhs.to_string();
  return "user piece '" + std::get<UserPiece>(piece).name + "'";
}

namespace {

LOSlopeVerdict unknown(const Piece& piece, const Slope& alpha, const std::string& why) {
  return {LOStatus::Unknown, std::nullopt, describe(piece) + " at " + alpha.to_string() + ": " + why};
}

bool longitude_prime(const Piece& piece) {
  if (const auto* u = std::get_if<UserPiece>(&piece)) return u->longitude_prime;
  return true;
}

std::optional<BrieskornZHS> zhs_filling(const Piece& piece, const Slope& alpha) {
  if (const auto* k = std::get_if<TorusKnotPiece>(&piece)) {
    const SurgeryResult m = moser_surgery(*k, alpha);
    if (m.kind == SurgeryKind::SFS) return BrieskornZHS(m.multiplicities);
    if (m.kind == SurgeryKind::Lens) return BrieskornZHS({1});
    return std::nullopt;
  }
  if (const auto* b = std::get_if<BrieskornComplement>(&piece)) {
    if (alpha == Slope::meridian()) return b->zhs;
  }
  return std::nullopt;
}

}  // namespace

LOSlopeVerdict slope_lo_verdict(const Piece& piece, const Slope& alpha) {
  if (const auto* k = std::get_if<TorusKnotPiece>(&piece); k && k->chirality == 0) {
    return unknown(piece, alpha, "chirality unspecified");
  }

  if (alpha.p() == 0) {
    if (longitude_prime(piece)) {
      return {LOStatus::LO, RuleTag::B1Rule,
              describe(piece) + " at 0/1: b1 = 1 and the filling is prime, so pi1 surjects onto Z"};
    }
  }

  if (alpha.p() == 1 || alpha.p() == -1) {
    if (const auto z = zhs_filling(piece, alpha)) {
      LOSlopeVerdict v = zhs_lo_status(*z);
      v.evidence = describe(piece) + " at " + alpha.to_string() + ": " + v.evidence;
      return v;
    }
  }

  if (const auto* k = std::get_if<TorusKnotPiece>(&piece)) {
    if (moser_surgery(*k, alpha).kind != SurgeryKind::Reducible) return torus_knot_lspace_verdict(*k, alpha);
    return unknown(piece, alpha, "reducible filling");
  }

  if (const auto* u = std::get_if<UserPiece>(&piece)) {
    for (const auto& [slope, status] : u->assertions) {
      if (slope == alpha && status != LOStatus::Unknown) {
        return {status, RuleTag::UserAsserted,
                describe(piece) + " at " + alpha.to_string() + ": asserted " + std::string(to_string(status))};
      }
    }
  }
  return unknown(piece, alpha, "no rule applies");
}

std::int64_t hf_surgery_rank(const HFParams& params) {
  if (params.q <= 0) throw InvalidParams("q must be positive, got " + std::to_string(params.q));
  if (params.nu < 0) throw InvalidParams("nu must be nonnegative, got " + std::to_string(params.nu));
  std::int64_t excess = 0;
  for (std::int64_t rank : params.as_ranks) {
    if (rank < 1) throw InvalidParams("rk H*(A_s) must be >= 1, got " + std::to_string(rank));
    excess += rank - 1;
  }
  const std::int64_t tail = params.q * excess;
  if (params.nu == 0) return std::abs(params.p) + tail;
  return params.p + 2 * std::max<std::int64_t>(0, (2 * params.nu - 1) * params.q - params.p) + tail;
}

}  // namespace locert::seifert
