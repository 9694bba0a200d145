#include "wythoff/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include <Eigen/Dense>
#include <json.hpp>

namespace wythoff {

int popcount(NodeSet s) { return std::popcount(s); }

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string component_text(const DecoratedDiagram& d, NodeSet c) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int v = 0; v < d.size(); ++v) {
    if (!contains(c, v)) continue;
    os << (first ? "" : ",") << d.nodes()[static_cast<std::size_t>(v)].id;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

// FamilyTag ---------------------------------------------------------------

std::string FamilyTag::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F4";
    case Family::H: return "H" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(k) + ")";
  }
  return "?";
}

BigInt FamilyTag::order() const {
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B: return (BigInt{1} << rank) * factorial(rank);
    case Family::D: return (BigInt{1} << (rank - 1)) * factorial(rank);
    case Family::E:
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::H: return rank == 3 ? BigInt{120} : BigInt{14400};
    case Family::I2: return 2 * k;
  }
  return 0;
}

// DecoratedDiagram ----------------------------------------------------------

DecoratedDiagram::DecoratedDiagram(std::vector<Node> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), coxeter_(static_cast<int>(nodes_.size())) {
  const int n = size();
  if (n == 0) throw ParseError("diagram has no nodes");
  if (n > kMaxNodes) throw ParseError("diagram has more than 32 nodes");
  std::set<std::string> ids;
  for (const auto& node : nodes_) {
    if (node.id.empty()) throw ParseError("empty node id");
    if (!ids.insert(node.id).second) throw ParseError("duplicate node id '" + node.id + "'");
  }
  adjacency_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges_) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) throw ParseError("edge endpoint out of range");
    if (e.a == e.b) throw ParseError("self-loop on '" + nodes_[static_cast<std::size_t>(e.a)].id + "'");
    if (e.m < 3) throw ParseError("edge label " + std::to_string(e.m) + " < 3");
    if (coxeter_(e.a, e.b) != 2) {
      throw ParseError("duplicate edge between '" + nodes_[static_cast<std::size_t>(e.a)].id + "' and '" +
                       nodes_[static_cast<std::size_t>(e.b)].id + "'");
    }
    coxeter_.set(e.a, e.b, e.m);
    adjacency_[static_cast<std::size_t>(e.a)] |= bit(e.b);
    adjacency_[static_cast<std::size_t>(e.b)] |= bit(e.a);
  }
  classify_components(*this);
}

NodeSet DecoratedDiagram::ringed() const {
  NodeSet s = 0;
  for (int v = 0; v < size(); ++v)
    if (nodes_[static_cast<std::size_t>(v)].mark == Mark::ring) s |= bit(v);
  return s;
}

std::vector<std::uint8_t> DecoratedDiagram::marks() const {
  std::vector<std::uint8_t> out;
  out.reserve(nodes_.size());
  for (const auto& node : nodes_) out.push_back(node.mark == Mark::ring ? 1 : 0);
  return out;
}

DecoratedDiagram DecoratedDiagram::with_marks(const std::vector<std::uint8_t>& marks) const {
  if (marks.size() != nodes_.size()) throw ParseError("mark vector size mismatch");
  DecoratedDiagram out = *this;
  for (std::size_t i = 0; i < marks.size(); ++i) out.nodes_[i].mark = marks[i] ? Mark::ring : Mark::cross;
  return out;
}

DecoratedDiagram DecoratedDiagram::induced(NodeSet s) const {
  std::vector<int> index(nodes_.size(), -1);
  std::vector<Node> nodes;
  for (int v = 0; v < size(); ++v) {
    if (!contains(s, v)) continue;
    index[static_cast<std::size_t>(v)] = static_cast<int>(nodes.size());
    nodes.push_back(nodes_[static_cast<std::size_t>(v)]);
  }
  std::vector<Edge> edges;
  for (const auto& e : edges_) {
    if (contains(s, e.a) && contains(s, e.b))
      edges.push_back({index[static_cast<std::size_t>(e.a)], index[static_cast<std::size_t>(e.b)], e.m});
  }
  return DecoratedDiagram(std::move(nodes), std::move(edges));
}

std::vector<NodeSet> DecoratedDiagram::components(NodeSet s) const {
  std::vector<NodeSet> out;
  NodeSet remaining = s & all_nodes();
  while (remaining) {
    NodeSet comp = remaining & (~remaining + 1);
    NodeSet frontier = comp;
    while (frontier) {
      NodeSet next = 0;
      for (int v = 0; v < size(); ++v)
        if (contains(frontier, v)) next |= adjacency_[static_cast<std::size_t>(v)];
      next &= s & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

bool DecoratedDiagram::is_inline_path() const {
  if (static_cast<int>(edges_.size()) != size() - 1) return false;
  for (int v = 0; v + 1 < size(); ++v)
    if (!adjacent(v, v + 1)) return false;
  return true;
}

// Parsing -------------------------------------------------------------------

DecoratedDiagram parse_inline(std::string_view text) {
  if (text.empty()) throw ParseError("empty diagram");
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  auto read_mark = [&]() {
    if (pos >= text.size()) throw ParseError("expected mark at end of input");
    const char c = text[pos];
    if (c != 'x' && c != 'o') {
      throw ParseError(std::string("unknown mark character '") + c + "' at position " + std::to_string(pos));
    }
    nodes.push_back({"v" + std::to_string(nodes.size() + 1), c == 'x' ? Mark::ring : Mark::cross});
    ++pos;
  };
  read_mark();
  while (pos < text.size()) {
    int label = 3;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1000000) throw ParseError("edge label too large");
        ++pos;
      }
      if (text[start] == '0' && pos - start > 1) throw ParseError("edge label with leading zero");
      if (value < 3) throw ParseError("edge label " + std::to_string(value) + " < 3 in inline notation");
      label = static_cast<int>(value);
    } else if (text[pos] != 'x' && text[pos] != 'o') {
      throw ParseError(std::string("unexpected character '") + text[pos] + "' at position " + std::to_string(pos));
    }
    read_mark();
    const int b = static_cast<int>(nodes.size()) - 1;
    edges.push_back({b - 1, b, label});
  }
  return DecoratedDiagram(std::move(nodes), std::move(edges));
}

DecoratedDiagram parse_document(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("nodes")) throw ParseError("document needs a \"nodes\" array");
    std::vector<Node> nodes;
    std::vector<std::string> ids;
    for (const auto& jn : doc.at("nodes")) {
      Node node;
      node.id = jn.at("id").get<std::string>();
      const auto mark = jn.at("mark").get<std::string>();
      if (mark == "ring") node.mark = Mark::ring;
      else if (mark == "cross") node.mark = Mark::cross;
      else throw ParseError("unknown mark '" + mark + "'");
      ids.push_back(node.id);
      nodes.push_back(std::move(node));
    }
    auto index_of = [&](const std::string& id) {
      auto it = std::find(ids.begin(), ids.end(), id);
      if (it == ids.end()) throw ParseError("edge references unknown node '" + id + "'");
      return static_cast<int>(it - ids.begin());
    };
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
      for (const auto& je : doc.at("edges")) {
        Edge e;
        e.a = index_of(je.at("a").get<std::string>());
        e.b = index_of(je.at("b").get<std::string>());
        e.m = je.at("m").get<int>();
        edges.push_back(e);
      }
    }
    return DecoratedDiagram(std::move(nodes), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad document field: ") + e.what());
  }
}

DecoratedDiagram parse(std::string_view text) {
  if (!text.empty() && (text.front() == 'x' || text.front() == 'o')) return parse_inline(text);
  return parse_document(text);
}

std::string to_inline(const DecoratedDiagram& d) {
  if (!d.is_inline_path()) throw ParseError("diagram is not a path in node order");
  std::string out;
  for (int v = 0; v < d.size(); ++v) {
    if (v > 0) out += std::to_string(d.label(v - 1, v));
    out += d.nodes()[static_cast<std::size_t>(v)].mark == Mark::ring ? 'x' : 'o';
  }
  return out;
}

std::string to_document(const DecoratedDiagram& d) {
  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& node : d.nodes()) {
    nlohmann::ordered_json jn;
    jn["id"] = node.id;
    jn["mark"] = node.mark == Mark::ring ? "ring" : "cross";
    doc["nodes"].push_back(jn);
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : d.edges()) {
    nlohmann::ordered_json je;
    je["a"] = d.nodes()[static_cast<std::size_t>(e.a)].id;
    je["b"] = d.nodes()[static_cast<std::size_t>(e.b)].id;
    je["m"] = e.m;
    doc["edges"].push_back(je);
  }
  return doc.dump();
}

std::string describe(const DecoratedDiagram& d) {
  return d.is_inline_path() ? to_inline(d) : to_document(d);
}

std::string display_text(const DecoratedDiagram& d) {
  if (d.size() == 0 || d.is_inline_path()) return describe(d);
  const auto comps = d.components();
  if (comps.size() == 1) return to_document(d);
  std::string out;
  for (NodeSet c : comps) out += (out.empty() ? "" : " + ") + display_text(d.induced(c));
  return out;
}

// Classification ------------------------------------------------------------

FamilyTag classify_component(const DecoratedDiagram& d, NodeSet c) {
  FamilyTag tag;
  const int size = popcount(c);
  tag.rank = size;
  for (int v = 0; v < d.size(); ++v)
    if (contains(c, v)) tag.nodes.push_back(v);

  auto reject = [&]() -> FamilyTag {
    throw NotFiniteType("component " + component_text(d, c) + " is not of finite type");
  };

  std::vector<int> degree(static_cast<std::size_t>(d.size()), 0);
  int edge_count = 0;
  for (const auto& e : d.edges()) {
    if (contains(c, e.a) && contains(c, e.b)) {
      ++degree[static_cast<std::size_t>(e.a)];
      ++degree[static_cast<std::size_t>(e.b)];
      ++edge_count;
    }
  }
  if (edge_count != size - 1) return reject();  // connected, so not a tree

  if (size == 1) {
    tag.family = Family::A;
    return tag;
  }
  if (size == 2) {
    const int m = d.label(tag.nodes[0], tag.nodes[1]);
    tag.family = m == 3 ? Family::A : m == 4 ? Family::B : Family::I2;
    if (tag.family == Family::I2) tag.k = m;
    return tag;
  }

  int branch = -1;
  for (int v : tag.nodes) {
    const int deg = degree[static_cast<std::size_t>(v)];
    if (deg > 3) return reject();
    if (deg == 3) {
      if (branch >= 0) return reject();
      branch = v;
    }
  }

  if (branch < 0) {
    // Path: walk from one end and read labels in order.
    int start = -1;
    for (int v : tag.nodes)
      if (degree[static_cast<std::size_t>(v)] == 1) { start = v; break; }
    std::vector<int> labels;
    int prev = -1, cur = start;
    for (int step = 0; step + 1 < size; ++step) {
      NodeSet nb = d.neighbours(cur) & c;
      if (prev >= 0) nb &= ~bit(prev);
      const int next = std::countr_zero(nb);
      labels.push_back(d.label(cur, next));
      prev = cur;
      cur = next;
    }
    auto reversed = labels;
    std::reverse(reversed.begin(), reversed.end());
    auto count = [&](int m) { return static_cast<int>(std::count(labels.begin(), labels.end(), m)); };
    const int threes = count(3);
    if (threes == size - 1) {
      tag.family = Family::A;
      return tag;
    }
    if (threes != size - 2) return reject();
    const bool at_end = labels.front() != 3 || labels.back() != 3;
    const int special = labels.front() != 3 ? labels.front() : labels.back() != 3 ? labels.back()
                        : *std::find_if(labels.begin(), labels.end(), [](int m) { return m != 3; });
    if (special == 4 && at_end) {
      tag.family = Family::B;
      return tag;
    }
    if (special == 4 && size == 4) {
      tag.family = Family::F;
      return tag;
    }
    if (special == 5 && at_end && (size == 3 || size == 4)) {
      tag.family = Family::H;
      return tag;
    }
    return reject();
  }

  // One branch point, all labels 3: arm lengths decide D / E.
  for (const auto& e : d.edges())
    if (contains(c, e.a) && contains(c, e.b) && e.m != 3) return reject();
  std::vector<int> arms;
  NodeSet seen = bit(branch);
  for (int v : tag.nodes) {
    if (!d.adjacent(branch, v)) continue;
    int len = 0, cur = v;
    while (true) {
      ++len;
      seen |= bit(cur);
      NodeSet nb = d.neighbours(cur) & c & ~seen;
      if (!nb) break;
      cur = std::countr_zero(nb);
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    tag.family = Family::D;
    return tag;
  }
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    tag.family = Family::E;
    return tag;
  }
  return reject();
}

std::vector<FamilyTag> classify_components(const DecoratedDiagram& d) {
  std::vector<FamilyTag> out;
  for (NodeSet c : d.components()) out.push_back(classify_component(d, c));
  return out;
}

BigInt group_order(const DecoratedDiagram& d, NodeSet s) {
  BigInt order = 1;
  for (NodeSet c : d.components(s)) order *= classify_component(d, c).order();
  return order;
}

BigInt group_order(const DecoratedDiagram& d) { return group_order(d, d.all_nodes()); }

double gram_min_eigenvalue(const CoxeterMatrix& m) {
  const int n = m.size();
  Eigen::MatrixXd gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram(i, j) = i == j ? 1.0 : -std::cos(std::numbers::pi / m(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_positive_definite(const CoxeterMatrix& m) { return gram_min_eigenvalue(m) > 1e-9; }

// Standard diagrams ---------------------------------------------------------

DecoratedDiagram make_family(Family family, int rank, int k, const std::vector<std::uint8_t>& marks) {
  std::vector<Node> nodes;
  for (int i = 0; i < rank; ++i) {
    const bool ring = !marks.empty() && marks.at(static_cast<std::size_t>(i));
    nodes.push_back({"v" + std::to_string(i + 1), ring ? Mark::ring : Mark::cross});
  }
  std::vector<Edge> edges;
  auto path = [&](int count) {
    for (int i = 0; i + 1 < count; ++i) edges.push_back({i, i + 1, 3});
  };
  switch (family) {
    case Family::A: path(rank); break;
    case Family::B: path(rank); edges.at(0).m = 4; break;
    case Family::H: path(rank); edges.at(0).m = 5; break;
    case Family::F: path(4); edges.at(1).m = 4; break;
    case Family::I2: edges.push_back({0, 1, k}); break;
    case Family::D:
      path(rank - 1);
      edges.push_back({rank - 3, rank - 1, 3});
      break;
    case Family::E:
      path(rank - 1);
      edges.push_back({2, rank - 1, 3});
      break;
  }
  return DecoratedDiagram(std::move(nodes), std::move(edges));
}

DecoratedDiagram disjoint_union(const std::vector<DecoratedDiagram>& parts) {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  for (const auto& part : parts) {
    const int offset = static_cast<int>(nodes.size());
    for (const auto& node : part.nodes())
      nodes.push_back({"v" + std::to_string(nodes.size() + 1), node.mark});
    for (const auto& e : part.edges()) edges.push_back({e.a + offset, e.b + offset, e.m});
  }
  return DecoratedDiagram(std::move(nodes), std::move(edges));
}

}  // namespace wythoff
