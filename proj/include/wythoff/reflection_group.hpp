#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wythoff/diagram.hpp"
#include "wythoff/point_index.hpp"

namespace wythoff {

inline constexpr std::size_t kDefaultBudget = 2'000'000;
/// Roots and orbit points closer than this are the same point.
inline constexpr double kMatchTolerance = 1e-6;
/// Distinct roots / orbit points must be at least this far apart.
inline constexpr double kMinSeparation = 1e-3;

/// Budget override from WYTHOFF_BUDGET, falling back to kDefaultBudget.
std::size_t budget_from_env();

/// Unit normals of the simple mirrors, one per diagram node (row i of `rows`).
struct SimpleNormals {
  Eigen::MatrixXd rows;
  int dimension() const { return static_cast<int>(rows.rows()); }
  Eigen::VectorXd normal(int i) const { return rows.row(i).transpose(); }
  /// Householder reflection I - 2 n nᵀ for mirror i.
  Eigen::MatrixXd reflection(int i) const;
};

/// Cholesky factor of the Gram matrix -cos(pi/m_ij). Throws NotFiniteType if
/// the matrix is not positive definite.
SimpleNormals simple_normals(const DecoratedDiagram& d);

struct RootSystem {
  std::vector<Eigen::VectorXd> roots;
  std::vector<int> simple_indices;
  int size() const { return static_cast<int>(roots.size()); }
};

using ElementId = std::uint32_t;
using RootIndex = std::uint16_t;

/// The finite reflection group, each element stored as the permutation it
/// induces on the root list. Elements are sorted by that permutation, so the
/// identity is element 0 and smaller ids are lexicographically smaller.
class Group {
 public:
  std::size_t order() const { return order_; }
  int rank() const { return rank_; }
  const RootSystem& roots() const { return roots_; }
  const SimpleNormals& normals() const { return normals_; }
  std::uint64_t id() const { return id_; }

  std::span<const RootIndex> perm(ElementId g) const {
    return {perms_.data() + static_cast<std::size_t>(g) * roots_.roots.size(), roots_.roots.size()};
  }
  /// s_i ∘ g
  ElementId left(ElementId g, int i) const { return left_[static_cast<std::size_t>(g) * rank_ + i]; }
  /// g ∘ s_i
  ElementId right(ElementId g, int i) const { return right_[static_cast<std::size_t>(g) * rank_ + i]; }
  static constexpr ElementId identity() { return 0; }

  ElementId compose(ElementId a, ElementId b) const;  ///< a ∘ b
  ElementId inverse(ElementId g) const;
  ElementId find(std::span<const RootIndex> perm) const;  ///< throws if absent

  /// Generator word w with g = s_{w[0]} ∘ s_{w[1]} ∘ ... (leftmost applied last).
  std::vector<int> word(ElementId g) const;
  /// Orthogonal matrix inducing the permutation.
  Eigen::MatrixXd matrix(ElementId g) const;

 private:
  friend Group enumerate_group(const SimpleNormals&, std::size_t);

  std::size_t order_ = 0;
  int rank_ = 0;
  std::uint64_t id_ = 0;
  SimpleNormals normals_;
  RootSystem roots_;
  Eigen::MatrixXd simple_inverse_;
  std::vector<RootIndex> perms_;
  std::vector<ElementId> left_;
  std::vector<ElementId> right_;
  std::vector<ElementId> parent_;
  std::vector<std::int8_t> parent_gen_;
  std::unordered_multimap<std::uint64_t, ElementId> lookup_;
  std::uint64_t hash(std::span<const RootIndex> perm) const;
  std::optional<ElementId> try_find(std::span<const RootIndex> perm) const;
};

/// Closes the simple normals under the simple reflections, then builds every
/// group element by breadth-first closure. Throws BudgetExceeded or
/// ToleranceCollision.
Group enumerate_group(const SimpleNormals& normals, std::size_t budget = kDefaultBudget);

/// Convenience: normals + enumeration, with the order checked up front against
/// the closed-form order so oversized groups fail before any work.
std::shared_ptr<const Group> enumerate(const DecoratedDiagram& d, std::size_t budget = kDefaultBudget);

/// Root closure only; used by enumerate_group and exposed for checks.
RootSystem root_system(const SimpleNormals& normals);

struct Subgroup {
  NodeSet generators = 0;
  std::vector<ElementId> elements;  ///< ascending
  std::uint64_t group_id = 0;
  std::size_t order() const { return elements.size(); }
};

/// Closure of the chosen simple reflections.
Subgroup subgroup(const Group& g, NodeSet generators);

/// Left cosets gH. `coset_of[e]` is the coset index of element e; `reps[c]` the
/// lexicographically minimal element of coset c. Cosets are numbered by
/// ascending representative.
struct CosetPartition {
  std::vector<std::uint32_t> coset_of;
  std::vector<ElementId> reps;
  std::size_t count() const { return reps.size(); }
};

/// Throws SubgroupNotContained when h was built from another group.
CosetPartition cosets(const Group& g, const Subgroup& h);
/// Same partition, computed straight from parabolic generators.
CosetPartition parabolic_cosets(const Group& g, NodeSet generators);

}  // namespace wythoff
