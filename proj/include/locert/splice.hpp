#pragma once

// Splice trees of knot exteriors in integer homology spheres, and
// certificates of left-orderability built by induction over their edges.
//
// A subtree S stands for the closed manifold obtained from its pieces by
// gluing along the edges inside S and filling every other boundary torus by
// its meridian (1/0). Cutting S along an edge e = (from, to, f) gives two
// sides A and B. The preferred meridians are mu_A = f^-1(lambda_B) and
// mu_B = f(lambda_A); a side with more than one node only stands for its
// subtree when its preferred meridian is 1/0 in its own frame.
//
// Two rules certify an edge:
//   MeridianLongitude  side X closes up to an LO manifold, so mu_X is an LO
//                      slope; it is glued to lambda_Y, which is LO by B1Rule
//                      provided Y(lambda_Y) is prime.
//   SlopePair          both sides are single pieces and some alpha with
//                      |p|, |q| <= N is LO on A while f(alpha) is LO on B.
// Both need the union to be irreducible; this is recorded as a hypothesis
// rather than checked.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "locert/seifert.hpp"
#include "locert/slopes.hpp"

namespace locert::seifert {

using slopes::GluingMatrix;

struct SpliceNode {
  std::string id;
  Piece piece;
};

/// The matrix maps the boundary framing of `from` to that of `to`.
struct SpliceEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  GluingMatrix matrix = GluingMatrix::splice();
};

class SpliceTree {
 public:
  SpliceTree() = default;
  /// Throws InvalidParams unless the graph is a forest with valid endpoints,
  /// unique ids, torus-knot pieces as leaves and unimodular splice edges
  /// (union_homology_order = 1).
  SpliceTree(std::vector<SpliceNode> nodes, std::vector<SpliceEdge> edges);

  static SpliceTree from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const std::vector<SpliceNode>& nodes() const noexcept { return nodes_; }
  const std::vector<SpliceEdge>& edges() const noexcept { return edges_; }
  std::optional<std::size_t> find(std::string_view id) const;

  /// Node sets of the connected components, each sorted, ordered by least node.
  std::vector<std::vector<std::size_t>> components() const;
  /// Splits `nodes` (a connected node set containing edge e) along e; returns
  /// the side containing edges()[e].from, then the other side.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split(const std::vector<std::size_t>& nodes,
                                                                      std::size_t e) const;
  std::vector<std::size_t> edges_within(const std::vector<std::size_t>& nodes) const;

  /// Copy with the given torus-knot chiralities substituted, keyed by node id.
  SpliceTree with_chiralities(const std::map<std::string, int>& choices) const;

 private:
  std::vector<SpliceNode> nodes_;
  std::vector<SpliceEdge> edges_;
};

/// Homology check for two ZHS trees joined by a new edge: both trees become
/// one forest and the new edge must have union order 1.
SpliceTree splice_trees(const SpliceTree& a, const SpliceTree& b, std::string_view from_id, std::string_view to_id,
                        const GluingMatrix& f);

enum class SpliceRule { Leaf, MeridianLongitude, SlopePair, None };
std::string_view to_string(SpliceRule r) noexcept;

/// Which side supplies the LO slope in MeridianLongitude.
enum class Side { From, To };

struct EdgeStep {
  std::size_t edge = 0;
  Side lo_side = Side::From;
  /// Slope on the `from` boundary and its image on the `to` boundary.
  Slope alpha = Slope::meridian();
  Slope image = Slope::meridian();
  LOSlopeVerdict from_verdict;
  LOSlopeVerdict to_verdict;
};

struct SubtreeCertificate {
  std::vector<std::size_t> nodes;
  LOStatus status = LOStatus::Unknown;
  SpliceRule rule = SpliceRule::None;
  /// Leaf: verdict of the meridian filling of the single piece.
  std::optional<LOSlopeVerdict> closure;
  /// True when the subtree closes up to S3 (trivial group).
  bool trivial = false;
  std::optional<EdgeStep> step;
  /// Sub-certificates for the from side and the to side of step (when the
  /// rule consumed them).
  std::vector<SubtreeCertificate> children;
  std::string note;
};

struct Certificate {
  LOStatus status = LOStatus::Unknown;
  std::size_t search_bound = 0;
  std::map<std::string, int> chirality_choices;
  std::vector<SubtreeCertificate> components;
  std::vector<std::string> hypotheses;

  nlohmann::json to_json(const SpliceTree& tree) const;
  static Certificate from_json(const nlohmann::json& j, const SpliceTree& tree);
};

struct SearchOptions {
  std::size_t bound = 3;
  /// Restrict the top-level split of the component containing it to this edge.
  std::optional<std::size_t> edge;
  /// Unspecified chiralities tried, at most 2^max_unspecified assignments.
  std::size_t max_unspecified = 10;
};

/// Candidate slopes with |p|, |q| <= bound in the deterministic search order:
/// by max(|p|, q), then p, then q.
std::vector<Slope> slope_candidates(std::size_t bound);

Certificate certificate_search(const SpliceTree& tree, const SearchOptions& options = {});

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> messages;
};

/// Re-derives every verdict, split and homology condition in the certificate.
VerifyReport verify_certificate(const SpliceTree& tree, const Certificate& cert);

}  // namespace locert::seifert
