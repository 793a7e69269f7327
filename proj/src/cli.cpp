#include "locert/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "locert/alexander.hpp"
#include "locert/braid3.hpp"
#include "locert/compat.hpp"
#include "locert/errors.hpp"
#include "locert/fpgroup.hpp"
#include "locert/klein.hpp"
#include "locert/seifert.hpp"
#include "locert/slopes.hpp"
#include "locert/splice.hpp"

#ifndef LOCERT_DATA_DIR
#define LOCERT_DATA_DIR "data"
#endif

namespace locert::cli {

using nlohmann::json;

namespace {

/// What a subcommand handler hands back before rendering.
struct Outcome {
  json payload;
  bool inconclusive = false;
  std::vector<std::string> citations;
};

json read_json_file(const std::string& name) {
  std::filesystem::path path(name);
  if (!std::filesystem::exists(path)) {
    const std::filesystem::path bundled = std::filesystem::path(LOCERT_DATA_DIR) / name;
    if (std::filesystem::exists(bundled)) path = bundled;
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + name + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + name + "' is not valid JSON: " + e.what());
  }
}

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

void render_text(const json& value, const std::string& prefix, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      if (item.is_object() || (item.is_array() && !item.empty() && item.front().is_structured())) {
        out << prefix << key << ":\n";
        render_text(item, prefix + "  ", out);
      } else {
        out << prefix << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const auto& item : value) {
      if (item.is_structured()) {
        out << prefix << "-\n";
        render_text(item, prefix + "  ", out);
      } else {
        out << prefix << "- " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
      }
    }
  } else {
    out << prefix << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

class App {
 public:
  App() : app_("Left-orderability certificates for graph-manifold groups", "locert") {
    app_.require_subcommand(1);
    app_.add_option("--format", format_, "Output format")->check(CLI::IsMember({"json", "text"}));
    app_.add_flag("--envelope", envelope_, "Wrap the payload with status, citations and runtime");
    add_braid();
    add_klein();
    add_slope();
    add_group();
    add_splice();
    add_hf();
    add_cover();
    add_verify();
  }

  CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    std::vector<const char*> argv{"locert"};
    for (const auto& a : args) argv.push_back(a.c_str());
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    try {
      app_.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app_.exit(e, out, err);
      result.exit_code = code == 0 ? kExitOk : kExitInputError;
      result.status = code == 0 ? "ok" : "error";
      result.out = out.str();
      result.err = err.str();
      return result;
    }
    try {
      Outcome outcome = handler_();
      result.payload = std::move(outcome.payload);
      result.citations = std::move(outcome.citations);
      result.exit_code = outcome.inconclusive ? kExitInconclusive : kExitOk;
      result.status = outcome.inconclusive ? "unknown" : "ok";
    } catch (const Error& e) {
      result.exit_code = kExitInputError;
      result.status = "error";
      result.err = std::string("error: ") + e.what() + "\n";
      return result;
    } catch (const json::exception& e) {
      result.exit_code = kExitInputError;
      result.status = "error";
      result.err = std::string("error: malformed JSON input: ") + e.what() + "\n";
      return result;
    } catch (const std::invalid_argument& e) {
      result.exit_code = kExitInputError;
      result.status = "error";
      result.err = std::string("error: ") + e.what() + "\n";
      return result;
    }
    result.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    json shown = result.payload;
    if (envelope_) {
      shown = {{"status", result.status},
               {"payload", result.payload},
               {"citations", result.citations},
               {"runtime_ms", result.runtime_ms}};
    }
    if (format_ == "text") {
      render_text(shown, "", out);
    } else {
      out << shown.dump(2) << "\n";
    }
    result.out = out.str();
    result.err = err.str();
    return result;
  }

 private:
  template <typename F>
  void on(CLI::App* sub, F&& f) {
    sub->callback([this, f = std::forward<F>(f)] { handler_ = f; });
  }

  void add_braid() {
    auto* braid = app_.add_subcommand("braid", "Braid group B3: DD ordering and handle reduction");
    braid->require_subcommand(1);

    auto* sign = braid->add_subcommand("sign", "DD sign of a word, or of its conjugate");
    sign->add_option("word", word_a_, "Word over a, A, b, B")->required();
    sign->add_option("--conjugator", conjugator_, "Sign of conjugator^-1 * word * conjugator instead");
    on(sign, [this] {
      const auto w = braid3::BraidWord::parse(word_a_);
      const Sign3 s = conjugator_ ? braid3::conj_sign(w, braid3::BraidWord::parse(*conjugator_)) : braid3::dd_sign(w);
      return Outcome{{{"sign", to_string(s)}}, false, {"Dehornoy handle reduction", "Dubrovina-Dubrovin ordering"}};
    });

    auto* compare = braid->add_subcommand("compare", "Compare two braids in the DD ordering");
    compare->add_option("u", word_a_)->required();
    compare->add_option("v", word_b_)->required();
    on(compare, [this] {
      const Comparison c = braid3::dd_compare(braid3::BraidWord::parse(word_a_), braid3::BraidWord::parse(word_b_));
      return Outcome{{{"comparison", to_string(c)}}, false, {"Dubrovina-Dubrovin ordering"}};
    });

    auto* reduce = braid->add_subcommand("reduce", "Handle-reduce a word");
    reduce->add_option("word", word_a_)->required();
    reduce->add_option("--step-cap", step_cap_, "Maximum number of handle reductions");
    on(reduce, [this] {
      const auto w = braid3::BraidWord::parse(word_a_);
      const auto r = braid3::handle_reduce(w, {step_cap_});
      return Outcome{{{"reduced", r.to_string()}, {"trivial", braid3::is_trivial(w)}}, false, {"Dehornoy handle reduction"}};
    });

    auto* floor = braid->add_subcommand("floor", "Largest n with Delta^(2n) <= word in the DD ordering");
    floor->add_option("word", word_a_)->required();
    on(floor, [this] {
      return Outcome{{{"floor", braid3::delta_floor(braid3::BraidWord::parse(word_a_))}}, false, {"Malyutin bounds"}};
    });
  }

  void add_klein() {
    auto* klein = app_.add_subcommand("klein", "Klein-bottle group x^a y^b");
    klein->require_subcommand(1);

    auto* fill = klein->add_subcommand("fill", "Classify the filling along y^m x^(2n)");
    fill->add_option("--m", m_, "Exponent of y")->required();
    fill->add_option("--n", n_, "Half-exponent of x")->required();
    on(fill, [this] {
      const auto f = klein::klein_fill({m_, n_});
      json j{{"m", m_},
             {"n", n_},
             {"classification", klein::to_string(f.classification)},
             {"left_orderable", f.left_orderable()},
             {"abelianization", f.abelianization.to_json()}};
      j["quotient_order"] = f.quotient_order ? json(*f.quotient_order) : json(nullptr);
      return Outcome{j, false, {"Todd-Coxeter coset enumeration"}};
    });

    auto* sign = klein->add_subcommand("sign", "Sign of an element in O1 or O2");
    sign->add_option("element", word_a_, "Word in x, y, X, Y")->required();
    sign->add_option("--ordering", ordering_, "O1 or O2")->check(CLI::IsMember({"O1", "O2"}));
    on(sign, [this] {
      const auto g = klein::KleinElement::parse(word_a_);
      const auto ord = ordering_ == "O2" ? klein::KleinOrderingId::O2 : klein::KleinOrderingId::O1;
      return Outcome{{{"element", g.to_string()}, {"sign", to_string(klein::k_sign(g, ord))}}, false, {}};
    });
  }

  void add_slope() {
    auto* slope = app_.add_subcommand("slope", "Slopes and gluing matrices on a torus");
    slope->require_subcommand(1);

    auto* delta = slope->add_subcommand("delta", "Minimal geometric intersection of two slopes");
    delta->add_option("alpha", word_a_, "p/q")->required();
    delta->add_option("beta", word_b_, "p/q")->required();
    on(delta, [this] {
      const auto d = slopes::intersection_number(slopes::Slope::parse(word_a_), slopes::Slope::parse(word_b_));
      return Outcome{{{"delta", d}}, false, {}};
    });

    auto* glue = slope->add_subcommand("glue", "Image of a slope under a gluing matrix");
    glue->add_option("slope", word_a_, "p/q")->required();
    glue->add_option("--matrix", matrix_, "Row-major a,b,c,d")->delimiter(',')->expected(4)->required();
    on(glue, [this] {
      const slopes::GluingMatrix f(matrix_[0], matrix_[1], matrix_[2], matrix_[3]);
      return Outcome{{{"image", slopes::apply_gluing(f, slopes::Slope::parse(word_a_)).to_string()}}, false, {}};
    });
  }

  void add_group() {
    auto* group = app_.add_subcommand("group", "Finitely presented groups");
    group->require_subcommand(1);

    auto* abelianize = group->add_subcommand("abelianize", "Abelian invariants via Smith normal form");
    abelianize->add_option("presentation", file_a_, "Presentation JSON file")->required();
    on(abelianize, [this] {
      const auto p = fpgroup::Presentation::from_json(read_json_file(file_a_));
      return Outcome{fpgroup::abelianization(p).to_json(), false, {"Smith normal form"}};
    });

    auto* fill = group->add_subcommand("fill", "Dehn filling: add the relator mu^p lambda^q");
    fill->add_option("presentation", file_a_)->required();
    fill->add_option("--mu", word_a_, "Meridian word")->required();
    fill->add_option("--lambda", word_b_, "Longitude word")->required();
    fill->add_option("--slope", slope_, "p/q")->required();
    on(fill, [this] {
      const auto p = fpgroup::Presentation::from_json(read_json_file(file_a_));
      const auto filled =
          fpgroup::dehn_fill(p, p.parse_word(word_a_), p.parse_word(word_b_), slopes::Slope::parse(slope_));
      return Outcome{{{"presentation", filled.to_json()}, {"abelianization", fpgroup::abelianization(filled).to_json()}},
                     false,
                     {}};
    });

    auto* amalgam = group->add_subcommand("amalgam", "Amalgamated product along identified words");
    amalgam->add_option("first", file_a_)->required();
    amalgam->add_option("second", file_b_)->required();
    amalgam->add_option("--pair", pairs_, "u=v with u in the first group and v in the second");
    on(amalgam, [this] {
      const auto p1 = fpgroup::Presentation::from_json(read_json_file(file_a_));
      const auto p2 = fpgroup::Presentation::from_json(read_json_file(file_b_));
      std::vector<std::pair<fpgroup::Word, fpgroup::Word>> pairs;
      for (const auto& text : pairs_) {
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ParseError("--pair expects u=v, got '" + text + "'");
        pairs.emplace_back(p1.parse_word(text.substr(0, eq)), p2.parse_word(text.substr(eq + 1)));
      }
      const auto g = fpgroup::amalgam(p1, p2, pairs);
      return Outcome{{{"presentation", g.to_json()}, {"abelianization", fpgroup::abelianization(g).to_json()}}, false,
                     {}};
    });

    auto* enumerate = group->add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
    enumerate->add_option("presentation", file_a_)->required();
    enumerate->add_option("--subgroup", subgroup_, "Subgroup generator word (repeatable)");
    enumerate->add_option("--max-cosets", max_cosets_, "Cap on cosets defined");
    on(enumerate, [this] {
      const auto p = fpgroup::Presentation::from_json(read_json_file(file_a_));
      std::vector<fpgroup::Word> h;
      for (const auto& w : subgroup_) h.push_back(p.parse_word(w));
      const auto r = fpgroup::coset_enumerate(p, h, max_cosets_);
      json j{{"cosets_defined", r.cosets_defined}};
      j["index"] = r.index ? json(*r.index) : json(nullptr);
      return Outcome{j, !r.index, {"Todd-Coxeter coset enumeration"}};
    });
  }

  void add_splice() {
    auto* splice = app_.add_subcommand("splice", "Splice trees and LO certificates");
    splice->require_subcommand(1);

    auto* cert = splice->add_subcommand("cert", "Search for a left-orderability certificate");
    cert->add_option("tree", file_a_, "Splice tree JSON file")->required();
    cert->add_option("--bound", bound_, "Slope search bound N");
    cert->add_option("--edge", edge_, "Index of the edge to split first");
    on(cert, [this] {
      const auto tree = seifert::SpliceTree::from_json(read_json_file(file_a_));
      seifert::SearchOptions options;
      options.bound = bound_;
      options.edge = edge_;
      const auto c = seifert::certificate_search(tree, options);
      return Outcome{c.to_json(tree), c.status == seifert::LOStatus::Unknown,
                     {"Boyer-Gordon-Watson L-space criterion", "Boyer-Rolfsen-Wiest", "Heil", "Moser"}};
    });

    auto* verify = splice->add_subcommand("verify", "Re-derive every verdict in a certificate");
    verify->add_option("tree", file_a_)->required();
    verify->add_option("certificate", file_b_)->required();
    on(verify, [this] {
      const auto tree = seifert::SpliceTree::from_json(read_json_file(file_a_));
      const auto c = seifert::Certificate::from_json(read_json_file(file_b_), tree);
      const auto report = seifert::verify_certificate(tree, c);
      return Outcome{{{"ok", report.ok}, {"messages", report.messages}}, !report.ok, {}};
    });
  }

  void add_hf() {
    auto* hf = app_.add_subcommand("hf", "Heegaard Floer rank arithmetic");
    hf->require_subcommand(1);
    auto* rank = hf->add_subcommand("rank", "Rank of HF-hat of p/q surgery from nu and the ranks of A_s");
    rank->add_option("--p", hf_.p)->required();
    rank->add_option("--q", hf_.q);
    rank->add_option("--nu", hf_.nu);
    rank->add_option("--ranks", hf_.as_ranks, "Comma-separated ranks of A_s")->delimiter(',');
    on(rank, [this] {
      const std::int64_t r = seifert::hf_surgery_rank(hf_);
      return Outcome{{{"rank", r}, {"lspace", r == std::abs(hf_.p)}}, false, {"Ozsvath-Szabo rational surgery formula"}};
    });
  }

  void add_cover() {
    auto* cover = app_.add_subcommand("cover", "Cyclic branched covers of knots in S3");
    cover->require_subcommand(1);
    auto* order = cover->add_subcommand("order", "|H1| of the n-fold cyclic branched cover");
    order->add_option("--poly", poly_, "Alexander polynomial, e.g. \"t^2 - t + 1\"")->required();
    order->add_option("--n", cover_n_, "Cover degree >= 2")->required();
    on(order, [this] {
      const auto r = alexander::branched_cover_order(alexander::IntLaurentPoly::parse(poly_), cover_n_);
      json j{{"order", r ? big_to_json(*r) : json("infinite")}};
      if (cover_n_ % 2 == 0) {
        j["note"] =
            "n is even, so the orbifold group G/<<mu^n>> surjects onto G/<<mu^2>>; homomorphism arguments "
            "built on this are not computed";
      }
      return Outcome{j, false, {"Fox's formula"}};
    });
  }

  void add_verify() {
    auto* verify = app_.add_subcommand("verify", "Mechanized checks of the trefoil / Klein-bottle example");
    verify->require_subcommand(1);

    auto* compat = verify->add_subcommand("compatibility", "Sampled compatibility of the DD and Klein families");
    compat->alias("proposition-4-3");
    compat->add_option("--seed", seed_, "RNG seed");
    compat->add_option("--samples", samples_, "Number of sampled conjugators");
    compat->add_option("--bound", grid_bound_, "Peripheral grid bound");
    compat->add_option("--max-length", max_length_, "Maximum conjugator length");
    on(compat, [this] { return compatibility(); });

    auto* nonapp = verify->add_subcommand("nonapplicability", "Why the JSJ slope criterion does not apply");
    on(nonapp, [] {
      const auto r = compat::jsjlo_nonapplicability_report();
      return Outcome{r.to_json(), r.verdict.rfind("inconclusive", 0) == 0, {"Todd-Coxeter coset enumeration"}};
    });
  }

  Outcome compatibility() const {
    std::mt19937_64 rng(seed_);
    std::uniform_int_distribution<std::size_t> length(0, max_length_);
    std::size_t failures = 0, choice_mismatches = 0, commuting = 0;
    json failing = json::array();
    for (std::size_t i = 0; i < samples_; ++i) {
      const auto gamma = braid3::random_word(rng, length(rng));
      const auto report = compat::verify_compatibility(gamma, grid_bound_);
      failures += report.failures.size();
      if (!report.failures.empty()) failing.push_back(report.to_json());
      const auto expected = report.restricted_type == braid3::PeripheralOrderType::PosK ? klein::KleinOrderingId::O2
                                                                                         : klein::KleinOrderingId::O1;
      if (report.ordering != expected) ++choice_mismatches;
      if (report.ordering == klein::KleinOrderingId::O1) ++commuting;
    }
    const auto control = compat::verify_compatibility(braid3::BraidWord::sigma1(), grid_bound_, klein::KleinOrderingId::O1);
    const bool ok = failures == 0 && choice_mismatches == 0 && !control.failures.empty();
    json j{{"seed", seed_},
           {"samples", samples_},
           {"grid_bound", grid_bound_},
           {"commuting_conjugators", commuting},
           {"failures", failures},
           {"ordering_choice_mismatches", choice_mismatches},
           {"wrong_ordering_control_failures", control.failures.size()},
           {"failing_reports", failing},
           {"ok", ok}};
    return Outcome{j, !ok, {"Bludov-Glass amalgam criterion", "Dubrovina-Dubrovin ordering"}};
  }

  CLI::App app_;
  std::string format_ = "json";
  bool envelope_ = false;
  std::function<Outcome()> handler_;

  std::string word_a_, word_b_, file_a_, file_b_, slope_, poly_, ordering_ = "O1";
  std::optional<std::string> conjugator_;
  std::size_t step_cap_ = braid3::HandleOptions{}.step_cap;
  std::int64_t m_ = 0, n_ = 0, cover_n_ = 2;
  std::vector<std::int64_t> matrix_;
  std::vector<std::string> pairs_, subgroup_;
  std::size_t max_cosets_ = 100000;
  std::size_t bound_ = 3;
  std::optional<std::size_t> edge_;
  seifert::HFParams hf_;
  std::uint64_t seed_ = 20240601;
  std::size_t samples_ = 200, max_length_ = 10;
  std::int64_t grid_bound_ = 5;
};

}  // namespace

CommandResult run(const std::vector<std::string>& args) { return App().run(args); }

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const CommandResult r = run(args);
  out << r.out;
  err << r.err;
  return r.exit_code;
}

}  // namespace locert::cli
