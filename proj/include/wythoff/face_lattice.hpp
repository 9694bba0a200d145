#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wythoff/decoration.hpp"
#include "wythoff/diagram.hpp"
#include "wythoff/reflection_group.hpp"

namespace wythoff {

using FaceId = std::uint32_t;
inline constexpr FaceId kNoFace = ~FaceId{0};

/// One decoration reachable from the start decoration, i.e. one orbit of faces.
struct FaceType {
  Decoration012 decoration;
  NodeSet circled = 0;      ///< S
  NodeSet stabilizer = 0;   ///< generators of G(f')
  CosetPartition cosets;    ///< G / G(f')
  FaceId first_face = 0;
  int rank() const { return popcount(circled); }
};

/// A face is a pair (coset of G(f'), f'). The empty face has rank -1 and no
/// type.
struct Face {
  int rank = -1;
  int type = -1;
  ElementId rep = 0;        ///< lexicographically minimal coset element
  std::uint32_t coset = 0;
};

/// The face lattice as (coset, decoration) pairs, including the empty face
/// (id 0) and the whole polytope (the single rank-n face). Faces within a rank
/// are ordered by (S, coset representative).
class FaceLattice {
 public:
  const DecoratedDiagram& diagram() const { return diagram_; }
  const Decoration012& start() const { return start_; }
  const Group& group() const { return *group_; }
  std::shared_ptr<const Group> group_ptr() const { return group_; }
  int dimension() const { return diagram_.size(); }

  const std::vector<FaceType>& types() const { return types_; }
  std::span<const int> types_of_rank(int k) const;
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }
  std::size_t size() const { return faces_.size(); }

  /// Faces of rank k in [-1, n].
  FaceId rank_begin(int k) const { return rank_begin_[static_cast<std::size_t>(k + 1)]; }
  FaceId rank_end(int k) const { return rank_begin_[static_cast<std::size_t>(k + 2)]; }
  std::size_t count(int k) const { return rank_end(k) - rank_begin(k); }
  FaceId bottom() const { return 0; }
  FaceId top() const { return rank_begin(dimension()); }

  FaceId face_of(int type, std::uint32_t coset) const { return types_[static_cast<std::size_t>(type)].first_face + coset; }
  /// The face of `type` whose coset contains element e.
  FaceId face_containing(int type, ElementId e) const;

  /// Covering faces, ascending ids.
  std::span<const FaceId> up(FaceId f) const;
  std::span<const FaceId> down(FaceId f) const;
  const std::vector<std::pair<FaceId, FaceId>>& covers() const { return covers_; }

  /// Left action of the simple reflection s_i, and of an arbitrary element.
  FaceId act(int generator, FaceId f) const;
  FaceId act_element(ElementId g, FaceId f) const;

  /// The vertex through the Wythoff point (identity coset).
  FaceId base_vertex() const { return rank_begin(0) + types_[static_cast<std::size_t>(types_of_rank(0)[0])].cosets.coset_of[0]; }

  /// Elements of the coset behind face f (ascending).
  std::vector<ElementId> coset_elements(FaceId f) const;

 private:
  friend FaceLattice build_lattice(const DecoratedDiagram&, std::shared_ptr<const Group>);

  DecoratedDiagram diagram_;
  Decoration012 start_;
  std::shared_ptr<const Group> group_;
  std::vector<FaceType> types_;
  std::vector<int> type_rank_begin_;  ///< types of rank k: [k, k+1)
  std::vector<int> type_order_;
  std::vector<Face> faces_;
  std::vector<FaceId> rank_begin_;
  std::vector<std::pair<FaceId, FaceId>> covers_;
  std::vector<std::uint32_t> up_begin_, down_begin_;
  std::vector<FaceId> up_, down_;
};

/// Face lattice of the diagram's {0,1} decoration. Throws Degenerate.
FaceLattice build_lattice(const DecoratedDiagram& d, std::shared_ptr<const Group> g);
/// Enumerates the group first (budget from argument).
FaceLattice build_lattice(const DecoratedDiagram& d, std::size_t budget = kDefaultBudget);

using FVector = std::vector<BigInt>;

/// Counts faces per rank 0..n-1 from the built lattice.
FVector f_vector_enumerated(const FaceLattice& l);
/// Σ |G| / |G(f')| over valid S-sets, family orders only; no enumeration.
FVector f_vector_formula(const DecoratedDiagram& d);
FVector f_vector_formula(const DecoratedDiagram& d, const Decoration012& f0);
std::string to_string(const FVector& f);

// Structural checks --------------------------------------------------------

struct DiamondReport {
  std::size_t pairs_checked = 0;
  struct Violation {
    FaceId lower, upper;
    std::size_t between;
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};
DiamondReport check_diamond(const FaceLattice& l);

/// Flags as chains F_0 < ... < F_{n-1}, sorted lexicographically, with the
/// i-adjacent flag of each (kNoFace-style sentinel when missing).
struct FlagGraph {
  int n = 0;
  std::vector<FaceId> flags;            ///< n entries per flag
  std::vector<std::uint32_t> adjacent;  ///< n entries per flag
  std::vector<std::uint8_t> neighbour_count;
  std::size_t size() const { return n ? flags.size() / static_cast<std::size_t>(n) : 0; }
  std::span<const FaceId> flag(std::size_t i) const { return {flags.data() + i * n, static_cast<std::size_t>(n)}; }
  std::uint32_t neighbour(std::size_t i, int rank) const { return adjacent[i * n + rank]; }
  /// Index of a flag, or UINT32_MAX.
  std::uint32_t find(std::span<const FaceId> flag) const;
};
inline constexpr std::uint32_t kNoFlag = ~std::uint32_t{0};

FlagGraph build_flag_graph(const FaceLattice& l);

struct FlagReport {
  std::size_t flags = 0;
  bool connected = false;
  std::size_t components = 0;
  std::size_t wrong_degree = 0;   ///< flags without exactly n neighbours
  bool ok() const { return connected && wrong_degree == 0; }
};
FlagReport check_flag_connected(const FlagGraph& g);
FlagReport check_flag_connected(const FaceLattice& l);

/// Σ_{k<n} (-1)^k f_k == 1 - (-1)^n.
bool check_euler(const FVector& f);

/// Every vertex lies in a face of each higher rank.
bool check_chain_completion(const FaceLattice& l);

/// Each generator maps faces bijectively, preserving rank and covers.
bool check_group_action(const FaceLattice& l);

/// Faces through the base vertex and the covers among them.
struct VertexFigure {
  std::vector<std::vector<FaceId>> by_rank;   ///< index k: rank-k faces, k = 1..n-1 (index 0 empty)
  std::vector<std::pair<FaceId, FaceId>> covers;
  std::vector<std::size_t> counts() const;
};
VertexFigure vertex_figure(const FaceLattice& l);

/// Structured lattice document: faces (rank, S, coset rep) and covers.
std::string lattice_document(const FaceLattice& l);

/// Color-preserving flag-graph isomorphism between two lattices.
bool lattices_isomorphic(const FaceLattice& a, const FaceLattice& b);

}  // namespace wythoff
