#include "locert/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "locert/errors.hpp"

namespace locert::fpgroup {

// ---------------------------------------------------------------------------
// Words

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word power(const Word& w, std::int64_t n) {
  const Word base = n < 0 ? inverse(w) : w;
  Word out;
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// ---------------------------------------------------------------------------
// Presentation

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void check_name(const std::string& name) {
  if (name.empty()) throw ParseError("empty generator name");
  bool has_lower = false;
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || c == '^') throw ParseError("generator name '" + name + "' contains whitespace or '^'");
    if (std::isupper(u)) throw ParseError("generator name '" + name + "' must be lowercase");
    if (std::islower(u)) has_lower = true;
  }
  if (!has_lower) throw ParseError("generator name '" + name + "' needs a lowercase letter");
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    check_name(generators_[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[i] == generators_[j]) throw ParseError("duplicate generator '" + generators_[i] + "'");
    }
  }
  for (auto& r : relators) add_relator(std::move(r));
}

Presentation Presentation::from_text(std::vector<std::string> generators, const std::vector<std::string>& relators) {
  Presentation p(std::move(generators));
  for (const auto& r : relators) p.add_relator(p.parse_word(r));
  return p;
}

Presentation Presentation::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("relators")) {
    throw ParseError("presentation JSON needs \"generators\" and \"relators\" arrays");
  }
  try {
    return from_text(j.at("generators").get<std::vector<std::string>>(),
                     j.at("relators").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("presentation JSON: ") + e.what());
  }
}

nlohmann::json Presentation::to_json() const {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : relators_) rels.push_back(format_word(r));
  return {{"generators", generators_}, {"relators", rels}};
}

void Presentation::check_word(const Word& w) const {
  for (int l : w) {
    if (l == 0 || static_cast<std::size_t>(l < 0 ? -l : l) > generators_.size()) {
      throw ParseError("word letter " + std::to_string(l) + " references an undeclared generator");
    }
  }
}

void Presentation::add_relator(Word w) {
  check_word(w);
  relators_.push_back(std::move(w));
}

Word Presentation::parse_word(std::string_view text) const {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string_view name = token;
    std::int64_t exponent = 1;
    if (const auto caret = name.find('^'); caret != std::string_view::npos) {
      const std::string_view digits = name.substr(caret + 1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
        throw ParseError("bad exponent in token '" + token + "'");
      }
      name = name.substr(0, caret);
    }
    int letter = 0;
    for (std::size_t i = 0; i < generators_.size() && letter == 0; ++i) {
      if (name == generators_[i]) letter = static_cast<int>(i + 1);
      else if (name == upper(generators_[i])) letter = -static_cast<int>(i + 1);
    }
    if (letter == 0) throw ParseError("unknown generator token '" + std::string(name) + "'");
    const Word single{letter};
    const Word piece = power(single, exponent);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return out;
}

std::string Presentation::format_word(const Word& w) const {
  check_word(w);
  std::string out;
  for (int l : w) {
    if (!out.empty()) out.push_back(' ');
    const auto& name = generators_[static_cast<std::size_t>(l < 0 ? -l : l) - 1];
    out += l < 0 ? upper(name) : name;
  }
  return out;
}

Presentation braid_group_b3() { return Presentation::from_text({"s1", "s2"}, {"s1 s2 s1 S2 S1 S2"}); }

Presentation klein_bottle_group() { return Presentation::from_text({"x", "y"}, {"x y X y"}); }

// ---------------------------------------------------------------------------
// Abelianization

nlohmann::json AbelianInvariants::to_json() const { return {{"free_rank", free_rank}, {"torsion", torsion}}; }

std::string AbelianInvariants::to_string() const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  for (std::int64_t i = 0; i < free_rank; ++i) add("Z");
  for (auto t : torsion) add("Z/" + std::to_string(t));
  return out.empty() ? "0" : out;
}

BigMatrix relation_matrix(const Presentation& p) {
  BigMatrix m;
  for (const auto& r : p.relators()) {
    std::vector<BigInt> row(p.rank(), 0);
    for (int l : r) row[static_cast<std::size_t>(l < 0 ? -l : l) - 1] += l < 0 ? -1 : 1;
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  const auto diagonal = smith_invariants(relation_matrix(p));
  AbelianInvariants out;
  out.free_rank = static_cast<std::int64_t>(p.rank() - diagonal.size());
  for (const auto& d : diagonal) {
    if (d == 1) continue;
    if (d > std::numeric_limits<std::int64_t>::max()) throw Error("torsion coefficient exceeds 64 bits");
    out.torsion.push_back(static_cast<std::int64_t>(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

Presentation dehn_fill(const Presentation& p, const Word& mu, const Word& lambda, const slopes::Slope& alpha) {
  Presentation out = p;
  out.add_relator(free_reduce(concat(power(mu, alpha.p()), power(lambda, alpha.q()))));
  return out;
}

Presentation amalgam(const Presentation& p1, const Presentation& p2, const std::vector<std::pair<Word, Word>>& pairs) {
  for (const auto& a : p1.generators()) {
    for (const auto& b : p2.generators()) {
      if (a == b) throw NameClash("generator '" + a + "' occurs in both presentations; rename before amalgamating");
    }
  }
  const int offset = static_cast<int>(p1.rank());
  auto shift = [offset](const Word& w) {
    Word out = w;
    for (int& l : out) l += l < 0 ? -offset : offset;
    return out;
  };
  std::vector<std::string> gens = p1.generators();
  gens.insert(gens.end(), p2.generators().begin(), p2.generators().end());
  Presentation out(std::move(gens));
  for (const auto& r : p1.relators()) out.add_relator(r);
  for (const auto& r : p2.relators()) out.add_relator(shift(r));
  for (const auto& [u, v] : pairs) {
    p1.check_word(u);
    p2.check_word(v);
    out.add_relator(concat(u, inverse(shift(v))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter (HLT strategy with coincidence processing)

namespace {

constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

class CosetEnumerator {
 public:
  CosetEnumerator(std::size_t generators, std::size_t max_cosets)
      : columns_(2 * generators), max_cosets_(max_cosets) {
    new_row();
  }

  static std::size_t column(int letter) {
    const auto g = static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1;
    return 2 * g + (letter < 0 ? 1 : 0);
  }
  static std::size_t inverse_column(std::size_t c) { return c ^ 1U; }

  bool overflowed() const { return overflow_; }
  std::size_t defined() const { return table_.size(); }
  bool live(std::size_t c) const { return forward_[c] == c; }

  // Returns false when the cap is hit.
  bool scan_and_fill(std::size_t coset, const Word& w) {
    if (w.empty()) return true;
    std::size_t f = coset, b = coset;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    auto letter = [&](std::ptrdiff_t k) { return column(w[static_cast<std::size_t>(k)]); };
    for (;;) {
      while (i <= j && table_[f][letter(i)] != kUndefined) f = table_[f][letter(i++)];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && table_[b][inverse_column(letter(j))] != kUndefined) b = table_[b][inverse_column(letter(j--))];
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        // Deduction closes the relator cycle.
        table_[f][letter(i)] = b;
        table_[b][inverse_column(letter(i))] = f;
        return true;
      }
      if (!define(f, letter(i))) return false;
    }
  }

  bool fill_row(std::size_t c) {
    for (std::size_t x = 0; x < columns_; ++x) {
      if (!live(c)) return true;
      if (table_[c][x] == kUndefined && !define(c, x)) return false;
    }
    return true;
  }

  CosetResult finish() {
    CosetResult out;
    out.cosets_defined = table_.size();
    if (overflow_) return out;
    std::vector<std::size_t> renumber(table_.size(), kUndefined);
    std::size_t count = 0;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (live(c)) renumber[c] = count++;
    }
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      std::vector<std::size_t> row(columns_);
      for (std::size_t x = 0; x < columns_; ++x) row[x] = renumber[table_[c][x]];
      out.table.push_back(std::move(row));
    }
    out.index = count;
    return out;
  }

 private:
  void new_row() {
    forward_.push_back(table_.size());
    table_.emplace_back(columns_, kUndefined);
  }

  bool define(std::size_t c, std::size_t x) {
    if (table_.size() >= max_cosets_) {
      overflow_ = true;
      return false;
    }
    const std::size_t d = table_.size();
    new_row();
    table_[c][x] = d;
    table_[d][inverse_column(x)] = c;
    return true;
  }

  std::size_t rep(std::size_t c) {
    std::size_t root = c;
    while (forward_[root] != root) root = forward_[root];
    while (forward_[c] != root) {
      const std::size_t next = forward_[c];
      forward_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
    const std::size_t ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    const std::size_t lo = std::min(ra, rb), hi = std::max(ra, rb);
    forward_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t gamma = queue[qi];
      for (std::size_t x = 0; x < columns_; ++x) {
        const std::size_t delta = table_[gamma][x];
        if (delta == kUndefined) continue;
        table_[delta][inverse_column(x)] = kUndefined;
        const std::size_t mu = rep(gamma), nu = rep(delta);
        if (table_[mu][x] != kUndefined) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][inverse_column(x)] != kUndefined) {
          merge(mu, table_[nu][inverse_column(x)], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][inverse_column(x)] = mu;
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  bool overflow_ = false;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> forward_;
};

}  // namespace

CosetResult coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_gens, std::size_t max_cosets) {
  if (max_cosets == 0) throw InvalidParams("max_cosets must be at least 1");
  std::vector<Word> relators;
  for (const auto& r : p.relators()) {
    Word reduced = free_reduce(r);
    if (!reduced.empty()) relators.push_back(std::move(reduced));
  }
  CosetEnumerator e(p.rank(), max_cosets);
  for (const auto& h : subgroup_gens) {
    if (!e.scan_and_fill(0, free_reduce(h))) return e.finish();
  }
  for (std::size_t c = 0; c < e.defined(); ++c) {
    if (!e.live(c)) continue;
    for (const auto& r : relators) {
      if (!e.scan_and_fill(c, r)) return e.finish();
      if (!e.live(c)) break;
    }
    if (e.live(c) && !e.fill_row(c)) return e.finish();
  }
  return e.finish();
}

B1Verdict lo_by_positive_b1(const Presentation& p, bool prime_flag) {
  if (!prime_flag) return B1Verdict::Unknown;
  return abelianization(p).free_rank >= 1 ? B1Verdict::LOCertified : B1Verdict::Unknown;
}

}  // namespace locert::fpgroup
