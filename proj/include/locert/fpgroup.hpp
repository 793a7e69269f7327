#pragma once

// Finitely presented groups: abelianization, Dehn filling, amalgamation and
// bounded Todd-Coxeter coset enumeration.
//
// Text syntax for words: whitespace-separated tokens, each a generator name
// (lowercase) or its uppercase form for the inverse, optionally followed by
// "^n". Example: "s1 s2 s1 S2 S1 S2", "s2^-6", "X X y".

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "locert/bigint.hpp"
#include "locert/slopes.hpp"

namespace locert::fpgroup {

/// Letters are +-(generator index + 1).
using Word = std::vector<int>;

Word inverse(const Word& w);
Word free_reduce(const Word& w);
Word power(const Word& w, std::int64_t n);
Word concat(const Word& a, const Word& b);

class Presentation {
 public:
  Presentation() = default;
  /// Validates generator names: nonempty, lowercase, no whitespace or '^',
  /// pairwise distinct.
  explicit Presentation(std::vector<std::string> generators, std::vector<Word> relators = {});

  /// Builds from textual relators.
  static Presentation from_text(std::vector<std::string> generators, const std::vector<std::string>& relators);
  static Presentation from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t rank() const noexcept { return generators_.size(); }

  void add_relator(Word w);
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;
  /// Throws ParseError if a letter references an undeclared generator.
  void check_word(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Standard presentations used throughout.
Presentation braid_group_b3();  // <s1, s2 | s1 s2 s1 S2 S1 S2>
Presentation klein_bottle_group();  // <x, y | x y X y>

struct AbelianInvariants {
  std::int64_t free_rank = 0;
  /// Invariant factors >= 2, each dividing the next.
  std::vector<std::int64_t> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
  nlohmann::json to_json() const;
  std::string to_string() const;
};

/// Exponent-sum relation matrix (one row per relator).
BigMatrix relation_matrix(const Presentation& p);
AbelianInvariants abelianization(const Presentation& p);

/// Adds the relator mu^p lambda^q.
Presentation dehn_fill(const Presentation& p, const Word& mu, const Word& lambda, const slopes::Slope& alpha);

/// Free product of p1 and p2 with one relator u v^-1 per identified pair
/// (u a word of p1, v a word of p2). Throws NameClash on shared generator names.
Presentation amalgam(const Presentation& p1, const Presentation& p2, const std::vector<std::pair<Word, Word>>& pairs);

/// Closed coset table: row c, column 2i (generator i) or 2i+1 (its inverse).
using CosetTable = std::vector<std::vector<std::size_t>>;

struct CosetResult {
  /// Set iff the table closed within the cap.
  std::optional<std::size_t> index;
  CosetTable table;
  /// Total cosets defined, including ones later identified.
  std::size_t cosets_defined = 0;
};

/// HLT Todd-Coxeter enumeration of the cosets of <subgroup_gens>. Never
/// defines more than max_cosets cosets; returns an empty index when the cap
/// is reached.
CosetResult coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_gens, std::size_t max_cosets);

enum class B1Verdict { LOCertified, Unknown };

/// LO certified when b1 >= 1 and the caller vouches the manifold is prime
/// (a nontrivial map to Z then orders the group).
B1Verdict lo_by_positive_b1(const Presentation& p, bool prime_flag);

}  // namespace locert::fpgroup
