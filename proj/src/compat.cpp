#include "locert/compat.hpp"

#include <numeric>

#include "locert/errors.hpp"
#include "locert/fpgroup.hpp"

namespace locert::compat {

using braid3::BraidWord;
using klein::KleinElement;
using klein::KleinOrderingId;

KleinElement phi_peripheral(const braid3::PeripheralElement& pe) noexcept { return {2 * pe.l, -pe.k - pe.l}; }

KleinOrderingId choose_klein_ordering(const BraidWord& gamma) {
  return braid3::commutes_with_sigma2(gamma) ? KleinOrderingId::O1 : KleinOrderingId::O2;
}

nlohmann::json CompatReport::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& c : failures) {
    f.push_back({{"k", c.k}, {"l", c.l}, {"braid_sign", to_string(c.braid_sign)}, {"klein_sign", to_string(c.klein_sign)}});
  }
  return {{"conjugator", conjugator},
          {"ordering", klein::to_string(ordering)},
          {"forced", forced},
          {"restricted_type", braid3::to_string(restricted_type)},
          {"grid_bound", grid_bound},
          {"cells_checked", cells_checked},
          {"positive_cells", positive_cells},
          {"all_sign_classes_hit", all_sign_classes_hit},
          {"failures", f},
          {"evidence", evidence}};
}

CompatReport verify_compatibility(const BraidWord& gamma, std::int64_t grid_bound,
                                  std::optional<KleinOrderingId> forced) {
  if (grid_bound < 1) throw InvalidParams("grid bound must be >= 1, got " + std::to_string(grid_bound));
  CompatReport report;
  report.conjugator = gamma.to_string();
  report.grid_bound = grid_bound;
  report.restricted_type = braid3::restricted_order_type(gamma);
  report.forced = forced.has_value();
  report.ordering = forced.value_or(choose_klein_ordering(gamma));

  bool classes[4] = {false, false, false, false};
  for (std::int64_t k = -grid_bound; k <= grid_bound; ++k) {
    for (std::int64_t l = -grid_bound; l <= grid_bound; ++l) {
      if (k == 0 && l == 0) continue;
      ++report.cells_checked;
      classes[l > 0 ? 0 : l < 0 ? 3 : k > 0 ? 1 : 2] = true;
      const Sign3 braid_sign = braid3::conj_sign(braid3::peripheral_word(k, l), gamma);
      if (braid_sign != Sign3::Positive) continue;
      ++report.positive_cells;
      const Sign3 klein_sign = klein::k_sign(phi_peripheral({k, l}), report.ordering);
      if (klein_sign != Sign3::Positive) report.failures.push_back({k, l, braid_sign, klein_sign});
    }
  }
  report.all_sign_classes_hit = classes[0] && classes[1] && classes[2] && classes[3];
  const bool commuting = report.restricted_type == braid3::PeripheralOrderType::NegK;
  report.evidence = std::string(commuting ? "conjugator commutes with s2: restricted type NegK, Klein ordering O1"
                                          : "conjugator does not commute with s2: restricted type PosK, Klein ordering O2") +
                    (report.forced ? "; ordering forced to " + std::string(klein::to_string(report.ordering)) : "") +
                    "; " + std::to_string(report.failures.size()) + " failures in " +
                    std::to_string(report.positive_cells) + " positive cells";
  return report;
}

nlohmann::json NonApplicabilityReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array(), lo = nlohmann::json::array();
  for (const auto& r : klein_slopes) {
    nlohmann::json row{{"m", r.slope.m}, {"n", r.slope.n}, {"classification", klein::to_string(r.classification)}};
    row["quotient_order"] = r.quotient_order ? nlohmann::json(*r.quotient_order) : nlohmann::json(nullptr);
    rows.push_back(row);
  }
  for (const auto& s : klein_lo_slopes) lo.push_back({s.m, s.n});
  nlohmann::json j{{"klein_slopes", rows},
                   {"klein_lo_slopes", lo},
                   {"pulled_back", {{"k", pulled_back.k}, {"l", pulled_back.l}}},
                   {"pulled_back_slope", pulled_back_slope.to_string()},
                   {"verdict", verdict}};
  j["b3_quotient_index"] = b3_quotient_index ? nlohmann::json(*b3_quotient_index) : nlohmann::json(nullptr);
  return j;
}

NonApplicabilityReport jsjlo_nonapplicability_report() {
  NonApplicabilityReport report;
  // One representative per unoriented slope: n > 0, or n = 0 with m = 1.
  for (std::int64_t n = 0; n <= 5; ++n) {
    for (std::int64_t m = -5; m <= 5; ++m) {
      if (std::gcd(m, n) != 1 || (n == 0 && m != 1)) continue;
      const klein::KleinFilling f = klein::klein_fill({m, n});
      report.klein_slopes.push_back({{m, n}, f.classification, f.quotient_order});
      if (f.left_orderable()) report.klein_lo_slopes.push_back({m, n});
    }
  }

  // y = x^(2l) y^(-k-l) forces l = 0, k = -1; s2^k Delta^(2l) = mu^(k+6l) lambda^l.
  report.pulled_back = {-1, 0};
  report.pulled_back_slope = slopes::Slope(report.pulled_back.k + 6 * report.pulled_back.l, report.pulled_back.l);

  fpgroup::Presentation quotient = fpgroup::braid_group_b3();
  quotient.add_relator(quotient.parse_word("s2"));
  report.b3_quotient_index = fpgroup::coset_enumerate(quotient, {}, 1000).index;

  const bool unique_lo = report.klein_lo_slopes.size() == 1 && report.klein_lo_slopes[0] == klein::KleinPeripheral{1, 0};
  const bool trivial = report.b3_quotient_index == std::size_t{1};
  const bool meridian = phi_peripheral(report.pulled_back) == KleinElement::y() &&
                        report.pulled_back_slope == slopes::Slope::meridian();
  if (unique_lo && trivial && meridian) {
    report.verdict =
        "JSJ slope criterion inapplicable: the only LO slope y on the Klein side pulls back to the trefoil meridian, "
        "whose filling has trivial fundamental group; the amalgam route via compatible normal families is verified "
        "separately";
  } else {
    report.verdict = "inconclusive: unique LO Klein slope " + std::string(unique_lo ? "confirmed" : "not confirmed") +
                     ", meridian pull-back " + (meridian ? "confirmed" : "not confirmed") + ", B3/<<s2>> " +
                     (trivial ? "trivial" : "not shown trivial");
  }
  return report;
}

}  // namespace locert::compat
