#include "locert/splice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "locert/errors.hpp"

namespace locert::seifert {

using nlohmann::json;

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

int parse_chirality(const json& j) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "positive") return 1;
    if (s == "negative") return -1;
    if (s == "unspecified") return 0;
  }
  throw ParseError("chirality must be 1, -1, 0, \"positive\", \"negative\" or \"unspecified\"");
}

Piece piece_from_json(const json& j, const std::string& where) {
  const auto kind = require(j, "kind", where).get<std::string>();
  if (kind == "torus_knot") {
    TorusKnotPiece k{require(j, "r", where).get<std::int64_t>(), require(j, "s", where).get<std::int64_t>(),
                     j.contains("chirality") ? parse_chirality(j.at("chirality")) : 0};
    return k;
  }
  if (kind == "brieskorn") {
    return BrieskornComplement{BrieskornZHS(require(j, "multiplicities", where).get<std::vector<std::int64_t>>())};
  }
  if (kind == "user") {
    UserPiece u;
    u.name = j.value("name", j.value("id", std::string("user")));
    u.longitude_prime = j.value("longitude_prime", false);
    for (const auto& a : j.value("assertions", json::array())) {
      u.assertions.emplace_back(Slope::parse(require(a, "slope", where).get<std::string>()),
                                parse_lo_status(require(a, "status", where).get<std::string>()));
    }
    return u;
  }
  throw ParseError(where + ": unknown node kind '" + kind + "'");
}

json piece_to_json(const Piece& piece) {
  if (const auto* k = std::get_if<TorusKnotPiece>(&piece)) {
    return {{"kind", "torus_knot"}, {"r", k->r}, {"s", k->s}, {"chirality", k->chirality}};
  }
  if (const auto* b = std::get_if<BrieskornComplement>(&piece)) {
    return {{"kind", "brieskorn"}, {"multiplicities", b->zhs.multiplicities()}};
  }
  const auto& u = std::get<UserPiece>(piece);
  json assertions = json::array();
  for (const auto& [slope, status] : u.assertions) {
    assertions.push_back({{"slope", slope.to_string()}, {"status", to_string(status)}});
  }
  return {{"kind", "user"}, {"name", u.name}, {"longitude_prime", u.longitude_prime}, {"assertions", assertions}};
}

}  // namespace

SpliceTree::SpliceTree(std::vector<SpliceNode> nodes, std::vector<SpliceEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::set<std::string> ids;
  for (const auto& n : nodes_) {
    if (n.id.empty()) throw InvalidParams("splice node with empty id");
    if (!ids.insert(n.id).second) throw InvalidParams("duplicate splice node id '" + n.id + "'");
    if (const auto* k = std::get_if<TorusKnotPiece>(&n.piece)) k->validate();
  }
  std::vector<std::size_t> parent(nodes_.size()), degree(nodes_.size(), 0);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& e : edges_) {
    if (e.from >= nodes_.size() || e.to >= nodes_.size()) throw InvalidParams("splice edge endpoint out of range");
    if (e.from == e.to) throw InvalidParams("splice edge is a loop at '" + nodes_[e.from].id + "'");
    const std::size_t a = find_root(parent, e.from), b = find_root(parent, e.to);
    if (a == b) {
      throw InvalidParams("splice graph has a cycle through '" + nodes_[e.from].id + "' and '" + nodes_[e.to].id + "'");
    }
    parent[a] = b;
    ++degree[e.from];
    ++degree[e.to];
    const std::int64_t order = slopes::union_homology_order(e.matrix, Slope::longitude(), Slope::longitude());
    if (order != 1) {
      throw InvalidParams("edge '" + nodes_[e.from].id + "' -- '" + nodes_[e.to].id + "' has |H1| = " +
                          std::to_string(order) + ", not an integer homology sphere splice");
    }
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (std::holds_alternative<TorusKnotPiece>(nodes_[i].piece) && degree[i] > 1) {
      throw InvalidParams("torus knot exterior '" + nodes_[i].id + "' has one boundary torus but " +
                          std::to_string(degree[i]) + " edges");
    }
  }
}

SpliceTree SpliceTree::from_json(const json& j) {
  std::vector<SpliceNode> nodes;
  for (const auto& n : require(j, "nodes", "splice tree")) {
    const auto id = require(n, "id", "splice node").get<std::string>();
    nodes.push_back({id, piece_from_json(n, "node '" + id + "'")});
  }
  const auto index = [&](const json& v) {
    const auto id = v.get<std::string>();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].id == id) return i;
    }
    throw InvalidParams("splice edge refers to unknown node '" + id + "'");
  };
  std::vector<SpliceEdge> edges;
  for (const auto& e : j.value("edges", json::array())) {
    SpliceEdge edge{index(require(e, "from", "splice edge")), index(require(e, "to", "splice edge"))};
    if (e.contains("matrix")) {
      const auto m = e.at("matrix").get<std::vector<std::int64_t>>();
      if (m.size() != 4) throw ParseError("splice edge matrix must have 4 entries");
      edge.matrix = GluingMatrix(m[0], m[1], m[2], m[3]);
    }
    edges.push_back(edge);
  }
  return SpliceTree(std::move(nodes), std::move(edges));
}

json SpliceTree::to_json() const {
  json nodes = json::array(), edges = json::array();
  for (const auto& n : nodes_) {
    json node = piece_to_json(n.piece);
    node["id"] = n.id;
    nodes.push_back(node);
  }
  for (const auto& e : edges_) {
    edges.push_back({{"from", nodes_[e.from].id}, {"to", nodes_[e.to].id}, {"matrix", e.matrix.entries()}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

std::optional<std::size_t> SpliceTree::find(std::string_view id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> SpliceTree::components() const {
  std::vector<std::size_t> parent(nodes_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& e : edges_) parent[find_root(parent, e.from)] = find_root(parent, e.to);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < nodes_.size(); ++i) groups[find_root(parent, i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> SpliceTree::edges_within(const std::vector<std::size_t>& nodes) const {
  const std::set<std::size_t> inside(nodes.begin(), nodes.end());
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (inside.count(edges_[e].from) && inside.count(edges_[e].to)) out.push_back(e);
  }
  return out;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> SpliceTree::split(const std::vector<std::size_t>& nodes,
                                                                                std::size_t e) const {
  const auto inner = edges_within(nodes);
  std::set<std::size_t> seen{edges_.at(e).from};
  std::vector<std::size_t> stack{edges_.at(e).from};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t k : inner) {
      if (k == e) continue;
      const auto& edge = edges_[k];
      const std::size_t w = edge.from == v ? edge.to : edge.to == v ? edge.from : v;
      if (w != v && seen.insert(w).second) stack.push_back(w);
    }
  }
  std::vector<std::size_t> a(seen.begin(), seen.end()), b;
  for (std::size_t v : nodes) {
    if (!seen.count(v)) b.push_back(v);
  }
  std::sort(b.begin(), b.end());
  return {a, b};
}

SpliceTree SpliceTree::with_chiralities(const std::map<std::string, int>& choices) const {
  std::vector<SpliceNode> nodes = nodes_;
  for (auto& n : nodes) {
    auto it = choices.find(n.id);
    if (it == choices.end()) continue;
    if (auto* k = std::get_if<TorusKnotPiece>(&n.piece)) k->chirality = it->second;
  }
  return SpliceTree(std::move(nodes), edges_);
}

SpliceTree splice_trees(const SpliceTree& a, const SpliceTree& b, std::string_view from_id, std::string_view to_id,
                        const GluingMatrix& f) {
  std::vector<SpliceNode> nodes = a.nodes();
  std::vector<SpliceEdge> edges = a.edges();
  const std::size_t offset = nodes.size();
  for (const auto& n : b.nodes()) {
    if (a.find(n.id)) throw NameClash("node id '" + n.id + "' occurs in both trees");
    nodes.push_back(n);
  }
  for (auto e : b.edges()) {
    e.from += offset;
    e.to += offset;
    edges.push_back(e);
  }
  const auto from = a.find(from_id);
  const auto to = b.find(to_id);
  if (!from || !to) throw InvalidParams("splice endpoints must name a node of each tree");
  edges.push_back({*from, *to + offset, f});
  return SpliceTree(std::move(nodes), std::move(edges));
}

std::string_view to_string(SpliceRule r) noexcept {
  switch (r) {
    case SpliceRule::Leaf: return "Leaf";
    case SpliceRule::MeridianLongitude: return "MeridianLongitude";
    case SpliceRule::SlopePair: return "SlopePair";
    case SpliceRule::None: return "None";
  }
  return "?";
}

namespace {

SpliceRule parse_rule(std::string_view s) {
  for (SpliceRule r : {SpliceRule::Leaf, SpliceRule::MeridianLongitude, SpliceRule::SlopePair, SpliceRule::None}) {
    if (to_string(r) == s) return r;
  }
  throw ParseError("unknown splice rule '" + std::string(s) + "'");
}

bool closes_to_s3(const Piece& piece) {
  if (std::holds_alternative<TorusKnotPiece>(piece)) return true;
  if (const auto* b = std::get_if<BrieskornComplement>(&piece)) return recognize_exceptional(b->zhs) == Exceptional::S3;
  return false;
}

std::string node_list(const SpliceTree& tree, const std::vector<std::size_t>& nodes) {
  std::string out = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) out += (i ? "," : "") + tree.nodes()[nodes[i]].id;
  return out + "}";
}

std::string irreducible_hypothesis(const SpliceTree& tree, std::size_t e) {
  const auto& edge = tree.edges()[e];
  return "irreducible: the manifold split along edge " + tree.nodes()[edge.from].id + "--" +
         tree.nodes()[edge.to].id + " and both side closures";
}

std::string prime_hypothesis(const SpliceTree& tree, const std::vector<std::size_t>& side, std::size_t boundary) {
  return "prime: " + node_list(tree, side) + " filled along the longitude at " + tree.nodes()[boundary].id;
}

const char* const kMinimalityNote =
    "JSJ minimality of filled sides is not checked; verdicts use only the rule table";

json verdict_to_json(const LOSlopeVerdict& v) {
  json j{{"status", to_string(v.status)}, {"evidence", v.evidence}};
  j["rule"] = v.rule ? json(to_string(*v.rule)) : json(nullptr);
  return j;
}

LOSlopeVerdict verdict_from_json(const json& j) {
  LOSlopeVerdict v;
  v.status = parse_lo_status(require(j, "status", "verdict").get<std::string>());
  if (j.contains("rule") && !j.at("rule").is_null()) v.rule = parse_rule_tag(j.at("rule").get<std::string>());
  v.evidence = j.value("evidence", std::string());
  return v;
}

class Searcher {
 public:
  Searcher(const SpliceTree& tree, const SearchOptions& options, std::set<std::string>& hypotheses)
      : tree_(tree), options_(options), hypotheses_(hypotheses), candidates_(slope_candidates(options.bound)) {}

  SubtreeCertificate certify(const std::vector<std::size_t>& nodes, bool top) {
    SubtreeCertificate out;
    out.nodes = nodes;
    if (nodes.size() == 1) {
      const Piece& piece = tree_.nodes()[nodes[0]].piece;
      out.rule = SpliceRule::Leaf;
      out.closure = slope_lo_verdict(piece, Slope::meridian());
      out.status = out.closure->status;
      out.trivial = out.status == LOStatus::NotLO && closes_to_s3(piece);
      return out;
    }
    for (std::size_t e : edge_order(nodes, top)) {
      if (auto found = try_edge(nodes, e)) return *std::move(found);
    }
    out.note = "no edge of " + node_list(tree_, nodes) + " certified within bound " + std::to_string(options_.bound);
    return out;
  }

 private:
  std::vector<std::size_t> edge_order(const std::vector<std::size_t>& nodes, bool top) const {
    auto inner = tree_.edges_within(nodes);
    if (top && options_.edge && std::find(inner.begin(), inner.end(), *options_.edge) != inner.end()) {
      return {*options_.edge};
    }
    std::map<std::size_t, std::size_t> degree;
    for (std::size_t e : inner) {
      ++degree[tree_.edges()[e].from];
      ++degree[tree_.edges()[e].to];
    }
    // Leaf edges first, as in the induction on the number of tori.
    std::stable_partition(inner.begin(), inner.end(), [&](std::size_t e) {
      return degree[tree_.edges()[e].from] == 1 || degree[tree_.edges()[e].to] == 1;
    });
    return inner;
  }

  struct SideClosure {
    LOSlopeVerdict verdict;
    std::optional<SubtreeCertificate> child;
  };

  SideClosure closure(const std::vector<std::size_t>& side, const Slope& mu) {
    if (side.size() == 1) return {slope_lo_verdict(tree_.nodes()[side[0]].piece, mu), std::nullopt};
    if (mu != Slope::meridian()) {
      return {{LOStatus::Unknown, std::nullopt,
               node_list(tree_, side) + ": preferred meridian " + mu.to_string() + " is not 1/0"},
              std::nullopt};
    }
    SubtreeCertificate child = certify(side, false);
    LOSlopeVerdict v{child.status, std::nullopt, node_list(tree_, side) + " closes up as certified by its subtree"};
    if (child.status != LOStatus::Unknown) v.rule = RuleTag::SpliceInduction;
    return {v, std::move(child)};
  }

  LOSlopeVerdict longitude(const std::vector<std::size_t>& side, std::size_t boundary) {
    if (side.size() == 1) return slope_lo_verdict(tree_.nodes()[boundary].piece, Slope::longitude());
    hypotheses_.insert(prime_hypothesis(tree_, side, boundary));
    return {LOStatus::LO, RuleTag::B1Rule,
            node_list(tree_, side) + " filled along the longitude at " + tree_.nodes()[boundary].id +
                ": b1 = 1 and primeness is a recorded hypothesis"};
  }

  std::optional<SubtreeCertificate> try_edge(const std::vector<std::size_t>& nodes, std::size_t e) {
    const SpliceEdge& edge = tree_.edges()[e];
    const auto [a, b] = tree_.split(nodes, e);
    const auto framing = slopes::splice_framing(edge.matrix, Slope::longitude(), Slope::longitude());
    if (!framing) return std::nullopt;

    SubtreeCertificate out;
    out.nodes = nodes;
    out.status = LOStatus::LO;
    out.note = kMinimalityNote;

    SideClosure from_side = closure(a, framing->mu1);
    if (from_side.verdict.status == LOStatus::LO) {
      LOSlopeVerdict lambda = longitude(b, edge.to);
      if (lambda.status == LOStatus::LO) {
        out.rule = SpliceRule::MeridianLongitude;
        out.step = EdgeStep{e, Side::From, framing->mu1, Slope::longitude(), from_side.verdict, lambda};
        if (from_side.child) out.children.push_back(*std::move(from_side.child));
        hypotheses_.insert(irreducible_hypothesis(tree_, e));
        return out;
      }
    }
    SideClosure to_side = closure(b, framing->mu2);
    if (to_side.verdict.status == LOStatus::LO) {
      LOSlopeVerdict lambda = longitude(a, edge.from);
      if (lambda.status == LOStatus::LO) {
        out.rule = SpliceRule::MeridianLongitude;
        out.step = EdgeStep{e, Side::To, Slope::longitude(), framing->mu2, lambda, to_side.verdict};
        if (to_side.child) out.children.push_back(*std::move(to_side.child));
        hypotheses_.insert(irreducible_hypothesis(tree_, e));
        return out;
      }
    }

    if (a.size() == 1 && b.size() == 1) {
      const Piece& pa = tree_.nodes()[a[0]].piece;
      const Piece& pb = tree_.nodes()[b[0]].piece;
      for (const Slope& alpha : candidates_) {
        LOSlopeVerdict va = slope_lo_verdict(pa, alpha);
        if (va.status != LOStatus::LO) continue;
        const Slope image = slopes::apply_gluing(edge.matrix, alpha);
        LOSlopeVerdict vb = slope_lo_verdict(pb, image);
        if (vb.status != LOStatus::LO) continue;
        out.rule = SpliceRule::SlopePair;
        out.step = EdgeStep{e, Side::From, alpha, image, std::move(va), std::move(vb)};
        hypotheses_.insert(irreducible_hypothesis(tree_, e));
        return out;
      }
    }
    return std::nullopt;
  }

  const SpliceTree& tree_;
  const SearchOptions& options_;
  std::set<std::string>& hypotheses_;
  std::vector<Slope> candidates_;
};

LOStatus combine(const std::vector<SubtreeCertificate>& components) {
  bool unknown = false, any_lo = false;
  for (const auto& c : components) {
    if (c.trivial) continue;
    if (c.status == LOStatus::NotLO) return LOStatus::NotLO;
    if (c.status == LOStatus::Unknown) unknown = true;
    if (c.status == LOStatus::LO) any_lo = true;
  }
  if (unknown) return LOStatus::Unknown;
  // Every nontrivial free factor LO; no nontrivial factor means S3.
  return any_lo ? LOStatus::LO : LOStatus::NotLO;
}

Certificate search_resolved(const SpliceTree& tree, const SearchOptions& options) {
  Certificate cert;
  cert.search_bound = options.bound;
  std::set<std::string> hypotheses;
  Searcher searcher(tree, options, hypotheses);
  for (const auto& component : tree.components()) cert.components.push_back(searcher.certify(component, true));
  cert.status = combine(cert.components);
  cert.hypotheses.assign(hypotheses.begin(), hypotheses.end());
  return cert;
}

}  // namespace

std::vector<Slope> slope_candidates(std::size_t bound) {
  std::vector<Slope> out;
  const auto n = static_cast<std::int64_t>(bound);
  for (std::int64_t q = 0; q <= n; ++q) {
    for (std::int64_t p = -n; p <= n; ++p) {
      if (std::gcd(p, q) == 1 && (q > 0 || p == 1)) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end(), [](const Slope& x, const Slope& y) {
    const auto hx = std::max(std::abs(x.p()), x.q()), hy = std::max(std::abs(y.p()), y.q());
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return out;
}

Certificate certificate_search(const SpliceTree& tree, const SearchOptions& options) {
  std::vector<std::string> unspecified;
  for (const auto& n : tree.nodes()) {
    if (const auto* k = std::get_if<TorusKnotPiece>(&n.piece); k && k->chirality == 0) unspecified.push_back(n.id);
  }
  if (unspecified.size() > options.max_unspecified) {
    throw InvalidParams(std::to_string(unspecified.size()) + " torus knots with unspecified chirality exceed the limit of " +
                        std::to_string(options.max_unspecified));
  }
  std::optional<Certificate> first;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << unspecified.size()); ++mask) {
    std::map<std::string, int> choices;
    for (std::size_t i = 0; i < unspecified.size(); ++i) choices[unspecified[i]] = (mask >> i) & 1 ? -1 : 1;
    Certificate cert = search_resolved(tree.with_chiralities(choices), options);
    cert.chirality_choices = choices;
    if (cert.status == LOStatus::LO) return cert;
    if (!first) first = std::move(cert);
  }
  return *first;
}

json Certificate::to_json(const SpliceTree& tree) const {
  const auto ids = [&](const std::vector<std::size_t>& nodes) {
    json out = json::array();
    for (std::size_t v : nodes) out.push_back(tree.nodes().at(v).id);
    return out;
  };
  std::function<json(const SubtreeCertificate&)> sub = [&](const SubtreeCertificate& c) {
    json j{{"nodes", ids(c.nodes)},
           {"status", to_string(c.status)},
           {"rule", to_string(c.rule)},
           {"trivial", c.trivial},
           {"note", c.note}};
    if (c.closure) j["closure"] = verdict_to_json(*c.closure);
    if (c.step) {
      const auto& edge = tree.edges().at(c.step->edge);
      j["step"] = {{"edge", c.step->edge},
                   {"from", tree.nodes()[edge.from].id},
                   {"to", tree.nodes()[edge.to].id},
                   {"lo_side", c.step->lo_side == Side::From ? "from" : "to"},
                   {"alpha", c.step->alpha.to_string()},
                   {"image", c.step->image.to_string()},
                   {"from_verdict", verdict_to_json(c.step->from_verdict)},
                   {"to_verdict", verdict_to_json(c.step->to_verdict)}};
    }
    json children = json::array();
    for (const auto& child : c.children) children.push_back(sub(child));
    j["children"] = children;
    return j;
  };
  json components_json = json::array();
  for (const auto& c : components) components_json.push_back(sub(c));
  return {{"version", 1},
          {"status", to_string(status)},
          {"search_bound", search_bound},
          {"chirality_choices", chirality_choices},
          {"hypotheses", hypotheses},
          {"components", components_json}};
}

Certificate Certificate::from_json(const json& j, const SpliceTree& tree) {
  const auto node_index = [&](const json& id) {
    const auto found = tree.find(id.get<std::string>());
    if (!found) throw ParseError("certificate names unknown node '" + id.get<std::string>() + "'");
    return *found;
  };
  std::function<SubtreeCertificate(const json&)> sub = [&](const json& s) {
    SubtreeCertificate c;
    for (const auto& id : require(s, "nodes", "subtree certificate")) c.nodes.push_back(node_index(id));
    c.status = parse_lo_status(require(s, "status", "subtree certificate").get<std::string>());
    c.rule = parse_rule(require(s, "rule", "subtree certificate").get<std::string>());
    c.trivial = s.value("trivial", false);
    c.note = s.value("note", std::string());
    if (s.contains("closure")) c.closure = verdict_from_json(s.at("closure"));
    if (s.contains("step")) {
      const json& st = s.at("step");
      EdgeStep step;
      step.edge = require(st, "edge", "step").get<std::size_t>();
      if (step.edge >= tree.edges().size()) throw ParseError("certificate step names edge out of range");
      step.lo_side = require(st, "lo_side", "step").get<std::string>() == "to" ? Side::To : Side::From;
      step.alpha = Slope::parse(require(st, "alpha", "step").get<std::string>());
      step.image = Slope::parse(require(st, "image", "step").get<std::string>());
      step.from_verdict = verdict_from_json(require(st, "from_verdict", "step"));
      step.to_verdict = verdict_from_json(require(st, "to_verdict", "step"));
      c.step = step;
    }
    for (const auto& child : s.value("children", json::array())) c.children.push_back(sub(child));
    return c;
  };
  Certificate cert;
  cert.status = parse_lo_status(require(j, "status", "certificate").get<std::string>());
  cert.search_bound = j.value("search_bound", std::size_t{0});
  cert.chirality_choices = j.value("chirality_choices", std::map<std::string, int>{});
  cert.hypotheses = j.value("hypotheses", std::vector<std::string>{});
  for (const auto& c : require(j, "components", "certificate")) cert.components.push_back(sub(c));
  return cert;
}

namespace {

class Verifier {
 public:
  Verifier(const SpliceTree& tree, const Certificate& cert, VerifyReport& report)
      : tree_(tree), cert_(cert), report_(report), hypotheses_(cert.hypotheses.begin(), cert.hypotheses.end()) {}

  void subtree(const SubtreeCertificate& c, const std::vector<std::size_t>& expected) {
    const std::string where = node_list(tree_, expected);
    if (c.nodes != expected) {
      fail(where + ": certificate covers " + node_list(tree_, c.nodes));
      return;
    }
    switch (c.rule) {
      case SpliceRule::Leaf: return leaf(c, where);
      case SpliceRule::MeridianLongitude:
      case SpliceRule::SlopePair: return split(c, where);
      case SpliceRule::None:
        if (c.status != LOStatus::Unknown) fail(where + ": status without a rule must be Unknown");
        if (c.trivial) fail(where + ": only leaves can be trivial");
        return;
    }
  }

 private:
  void fail(std::string message) {
    report_.ok = false;
    report_.messages.push_back(std::move(message));
  }

  void expect_verdict(const LOSlopeVerdict& stored, const LOSlopeVerdict& derived, const std::string& what) {
    if (!(stored == derived)) {
      fail(what + ": stored verdict " + std::string(to_string(stored.status)) + " does not match re-derived " +
           std::string(to_string(derived.status)) + " (" + derived.evidence + ")");
    }
  }

  void leaf(const SubtreeCertificate& c, const std::string& where) {
    if (c.nodes.size() != 1) return fail(where + ": leaf rule on several nodes");
    const Piece& piece = tree_.nodes()[c.nodes[0]].piece;
    const LOSlopeVerdict v = slope_lo_verdict(piece, Slope::meridian());
    if (!c.closure) return fail(where + ": leaf without closure verdict");
    expect_verdict(*c.closure, v, where + " meridian filling");
    if (c.status != v.status) fail(where + ": leaf status differs from its closure verdict");
    if (c.trivial != (v.status == LOStatus::NotLO && closes_to_s3(piece))) fail(where + ": wrong triviality flag");
  }

  const SubtreeCertificate* child_for(const SubtreeCertificate& c, const std::vector<std::size_t>& side) {
    for (const auto& child : c.children) {
      if (child.nodes == side) return &child;
    }
    return nullptr;
  }

  void lo_closure(const SubtreeCertificate& c, const std::vector<std::size_t>& side, const Slope& mu,
                  const LOSlopeVerdict& stored, const std::string& where) {
    if (side.size() == 1) {
      const LOSlopeVerdict v = slope_lo_verdict(tree_.nodes()[side[0]].piece, mu);
      expect_verdict(stored, v, where + " closure at " + mu.to_string());
      if (v.status != LOStatus::LO) fail(where + ": closure at " + mu.to_string() + " is not LO");
      return;
    }
    if (mu != Slope::meridian()) return fail(where + ": multi-piece side with preferred meridian " + mu.to_string());
    const SubtreeCertificate* child = child_for(c, side);
    if (!child) return fail(where + ": missing sub-certificate for " + node_list(tree_, side));
    if (child->status != LOStatus::LO || stored.status != LOStatus::LO || stored.rule != RuleTag::SpliceInduction) {
      fail(where + ": sub-certificate for " + node_list(tree_, side) + " does not claim LO");
    }
    subtree(*child, side);
  }

  void lo_longitude(const std::vector<std::size_t>& side, std::size_t boundary, const LOSlopeVerdict& stored,
                    const std::string& where) {
    if (side.size() == 1) {
      const LOSlopeVerdict v = slope_lo_verdict(tree_.nodes()[boundary].piece, Slope::longitude());
      expect_verdict(stored, v, where + " longitude filling");
      if (v.status != LOStatus::LO) fail(where + ": longitude filling is not LO");
      return;
    }
    if (!hypotheses_.count(prime_hypothesis(tree_, side, boundary))) {
      fail(where + ": longitude filling of " + node_list(tree_, side) + " used without its primeness hypothesis");
    }
    if (stored.status != LOStatus::LO || stored.rule != RuleTag::B1Rule) fail(where + ": longitude verdict not B1Rule");
  }

  void split(const SubtreeCertificate& c, const std::string& where) {
    if (!c.step) return fail(where + ": split rule without an edge step");
    if (c.status != LOStatus::LO) fail(where + ": split rules only certify LO");
    if (c.trivial) fail(where + ": split subtree cannot be trivial");
    const EdgeStep& step = *c.step;
    const auto inner = tree_.edges_within(c.nodes);
    if (std::find(inner.begin(), inner.end(), step.edge) == inner.end()) {
      return fail(where + ": edge " + std::to_string(step.edge) + " is not inside the subtree");
    }
    const SpliceEdge& edge = tree_.edges()[step.edge];
    if (slopes::union_homology_order(edge.matrix, Slope::longitude(), Slope::longitude()) != 1) {
      return fail(where + ": edge " + std::to_string(step.edge) + " has union homology order != 1");
    }
    if (!hypotheses_.count(irreducible_hypothesis(tree_, step.edge))) {
      fail(where + ": irreducibility hypothesis for edge " + std::to_string(step.edge) + " not recorded");
    }
    if (slopes::apply_gluing(edge.matrix, step.alpha) != step.image) {
      fail(where + ": " + step.image.to_string() + " is not the image of " + step.alpha.to_string());
    }
    const auto [a, b] = tree_.split(c.nodes, step.edge);
    if (c.rule == SpliceRule::SlopePair) {
      if (a.size() != 1 || b.size() != 1) return fail(where + ": slope pair on a multi-piece side");
      const auto bound = static_cast<std::int64_t>(cert_.search_bound);
      if (std::abs(step.alpha.p()) > bound || step.alpha.q() > bound) {
        fail(where + ": slope " + step.alpha.to_string() + " exceeds the search bound");
      }
      const LOSlopeVerdict va = slope_lo_verdict(tree_.nodes()[a[0]].piece, step.alpha);
      const LOSlopeVerdict vb = slope_lo_verdict(tree_.nodes()[b[0]].piece, step.image);
      expect_verdict(step.from_verdict, va, where + " at " + step.alpha.to_string());
      expect_verdict(step.to_verdict, vb, where + " at " + step.image.to_string());
      if (va.status != LOStatus::LO || vb.status != LOStatus::LO) fail(where + ": slope pair is not LO on both sides");
      return;
    }
    const auto framing = slopes::splice_framing(edge.matrix, Slope::longitude(), Slope::longitude());
    if (step.lo_side == Side::From) {
      if (step.alpha != framing->mu1) fail(where + ": alpha is not the preferred meridian of the from side");
      lo_closure(c, a, framing->mu1, step.from_verdict, where);
      lo_longitude(b, edge.to, step.to_verdict, where);
    } else {
      if (step.image != framing->mu2) fail(where + ": image is not the preferred meridian of the to side");
      lo_closure(c, b, framing->mu2, step.to_verdict, where);
      lo_longitude(a, edge.from, step.from_verdict, where);
    }
  }

  const SpliceTree& tree_;
  const Certificate& cert_;
  VerifyReport& report_;
  std::set<std::string> hypotheses_;
};

}  // namespace

VerifyReport verify_certificate(const SpliceTree& tree, const Certificate& cert) {
  VerifyReport report;
  std::map<std::string, int> choices;
  for (const auto& n : tree.nodes()) {
    const auto* k = std::get_if<TorusKnotPiece>(&n.piece);
    const auto it = cert.chirality_choices.find(n.id);
    if (k && k->chirality == 0) {
      if (it == cert.chirality_choices.end() || (it->second != 1 && it->second != -1)) {
        report.ok = false;
        report.messages.push_back("no chirality chosen for '" + n.id + "'");
        continue;
      }
      choices[n.id] = it->second;
    } else if (it != cert.chirality_choices.end()) {
      report.ok = false;
      report.messages.push_back("chirality choice recorded for '" + n.id + "', whose chirality is fixed");
    }
  }
  for (const auto& [id, value] : cert.chirality_choices) {
    if (!tree.find(id)) {
      report.ok = false;
      report.messages.push_back("chirality choice names unknown node '" + id + "'");
    }
  }
  if (!report.ok) return report;

  const SpliceTree resolved = tree.with_chiralities(choices);
  const auto components = resolved.components();
  if (components.size() != cert.components.size()) {
    report.ok = false;
    report.messages.push_back("certificate has " + std::to_string(cert.components.size()) + " components, tree has " +
                              std::to_string(components.size()));
    return report;
  }
  Verifier verifier(resolved, cert, report);
  for (std::size_t i = 0; i < components.size(); ++i) verifier.subtree(cert.components[i], components[i]);
  if (combine(cert.components) != cert.status) {
    report.ok = false;
    report.messages.push_back("overall status does not follow from the components");
  }
  if (report.ok) report.messages.push_back("all verdicts and homology conditions re-derived");
  return report;
}

}  // namespace locert::seifert
