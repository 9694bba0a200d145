#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wythoff/errors.hpp"

namespace wythoff {

using BigInt = boost::multiprecision::cpp_int;

/// Node subsets are bitmasks over diagram node indices.
using NodeSet = std::uint32_t;
inline constexpr int kMaxNodes = 32;

inline constexpr bool contains(NodeSet s, int v) { return (s >> v) & 1U; }
inline constexpr NodeSet bit(int v) { return NodeSet{1} << v; }
/// {0, ..., n-1}
inline constexpr NodeSet full_set(int n) { return n >= kMaxNodes ? ~NodeSet{0} : bit(n) - 1; }
int popcount(NodeSet s);

/// ring == f(v) = 1, cross == f(v) = 0.
enum class Mark : std::uint8_t { cross = 0, ring = 1 };

struct Node {
  std::string id;
  Mark mark = Mark::cross;
  bool operator==(const Node&) const = default;
};

struct Edge {
  int a = 0;
  int b = 0;
  int m = 3;
  bool operator==(const Edge&) const = default;
};

/// Symmetric Coxeter matrix: m_ii = 1, m_ij = edge label or 2 when unjoined.
class CoxeterMatrix {
 public:
  explicit CoxeterMatrix(int n) : n_(n), m_(static_cast<std::size_t>(n * n), 2) {
    for (int i = 0; i < n; ++i) m_[static_cast<std::size_t>(i * n + i)] = 1;
  }
  int size() const { return n_; }
  int operator()(int i, int j) const { return m_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, int m) {
    m_[static_cast<std::size_t>(i * n_ + j)] = m;
    m_[static_cast<std::size_t>(j * n_ + i)] = m;
  }
  bool operator==(const CoxeterMatrix&) const = default;

 private:
  int n_;
  std::vector<int> m_;
};

enum class Family { A, B, D, E, F, H, I2 };

/// One irreducible component matched against the finite-type list.
struct FamilyTag {
  Family family = Family::A;
  int rank = 1;
  int k = 0;                 ///< dihedral parameter for I2(k), 0 otherwise
  std::vector<int> nodes;    ///< component nodes, ascending

  std::string name() const;  ///< "B4", "I2(5)", "E6", ...
  BigInt order() const;
};

/// A Coxeter diagram with a {0,1} decoration. Node order is document order.
class DecoratedDiagram {
 public:
  DecoratedDiagram() = default;

  /// Validates structure (ids, loops, duplicate edges, labels >= 3) and
  /// finite type. Throws ParseError / NotFiniteType.
  DecoratedDiagram(std::vector<Node> nodes, std::vector<Edge> edges);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const CoxeterMatrix& coxeter() const { return coxeter_; }
  int label(int i, int j) const { return coxeter_(i, j); }
  bool adjacent(int i, int j) const { return i != j && coxeter_(i, j) >= 3; }
  NodeSet neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  NodeSet all_nodes() const { return full_set(size()); }

  NodeSet ringed() const;
  std::vector<std::uint8_t> marks() const;   ///< 0/1 per node

  /// Same graph, different marks.
  DecoratedDiagram with_marks(const std::vector<std::uint8_t>& marks) const;
  /// Induced subdiagram on `s`, nodes renumbered in ascending order.
  DecoratedDiagram induced(NodeSet s) const;

  /// Connected components of the subgraph induced on `s`, each as a node set,
  /// ordered by lowest node.
  std::vector<NodeSet> components(NodeSet s) const;
  std::vector<NodeSet> components() const { return components(all_nodes()); }
  bool connected() const { return components().size() == 1; }

  /// True when the graph is a single path visited in node order.
  bool is_inline_path() const;

  bool operator==(const DecoratedDiagram& o) const {
    return nodes_ == o.nodes_ && edges_ == o.edges_;
  }

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  CoxeterMatrix coxeter_{0};
  std::vector<NodeSet> adjacency_;
};

// Parsing and serialization ------------------------------------------------

/// `x4o3o`; node ids v1..vn.
DecoratedDiagram parse_inline(std::string_view text);
/// `{"nodes":[{"id":..,"mark":"ring"|"cross"}],"edges":[{"a":..,"b":..,"m":..}]}`
DecoratedDiagram parse_document(std::string_view json_text);
/// Inline if the text starts with x/o, otherwise the structured document.
DecoratedDiagram parse(std::string_view text);

/// Requires is_inline_path(); labels are always written.
std::string to_inline(const DecoratedDiagram& d);
std::string to_document(const DecoratedDiagram& d);
/// Inline when possible, document otherwise.
std::string describe(const DecoratedDiagram& d);
/// For people: components joined by " + ", e.g. "x4o + x". Not parseable.
std::string display_text(const DecoratedDiagram& d);

// Classification --------------------------------------------------------

/// Classifies one connected node set by graph and label matching; throws
/// NotFiniteType naming the component.
FamilyTag classify_component(const DecoratedDiagram& d, NodeSet component);
std::vector<FamilyTag> classify_components(const DecoratedDiagram& d);

/// Product of family orders over the components of the subdiagram on `s`.
BigInt group_order(const DecoratedDiagram& d, NodeSet s);
BigInt group_order(const DecoratedDiagram& d);

/// Smallest eigenvalue of the Gram matrix with entries -cos(pi/m_ij).
double gram_min_eigenvalue(const CoxeterMatrix& m);
/// Eigenvalue cross-check for finite type (tolerance 1e-9).
bool is_positive_definite(const CoxeterMatrix& m);

// Standard diagrams, ring pattern given as a 0/1 vector (empty = all crossed).
DecoratedDiagram make_family(Family family, int rank, int k = 0,
                             const std::vector<std::uint8_t>& marks = {});
/// Disjoint union; node ids are re-issued as v1..vn.
DecoratedDiagram disjoint_union(const std::vector<DecoratedDiagram>& parts);

}  // namespace wythoff
