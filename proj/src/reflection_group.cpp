#include "wythoff/reflection_group.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numbers>
#include <numeric>
#include <string>

namespace wythoff {

namespace {

std::atomic<std::uint64_t> next_group_id{1};

}  // namespace

std::size_t budget_from_env() {
  if (const char* env = std::getenv("WYTHOFF_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

Eigen::MatrixXd SimpleNormals::reflection(int i) const {
  const Eigen::VectorXd n = normal(i);
  return Eigen::MatrixXd::Identity(dimension(), dimension()) - 2.0 * n * n.transpose();
}

SimpleNormals simple_normals(const DecoratedDiagram& d) {
  const int n = d.size();
  Eigen::MatrixXd gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram(i, j) = i == j ? 1.0 : -std::cos(std::numbers::pi / d.label(i, j));
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success || !is_positive_definite(d.coxeter()))
    throw NotFiniteType("Gram matrix is not positive definite");
  SimpleNormals out;
  out.rows = llt.matrixL();
  return out;
}

RootSystem root_system(const SimpleNormals& normals) {
  const int n = normals.dimension();
  PointIndex index(n, kMatchTolerance, kMinSeparation);
  RootSystem rs;
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd r = normals.normal(i);
    std::uint32_t hit = 0;
    switch (index.classify(r, &hit)) {
      case PointIndex::Lookup::found:
      case PointIndex::Lookup::collision:
        throw ToleranceCollision("simple normals " + std::to_string(hit) + " and " + std::to_string(i) + " coincide");
      case PointIndex::Lookup::absent: break;
    }
    rs.simple_indices.push_back(static_cast<int>(index.insert(r)));
  }
  for (std::size_t head = 0; head < index.size(); ++head) {
    const Eigen::VectorXd r = index.point(static_cast<std::uint32_t>(head));
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd nrm = normals.normal(i);
      const Eigen::VectorXd image = r - 2.0 * nrm.dot(r) * nrm;
      switch (index.classify(image)) {
        case PointIndex::Lookup::found: break;
        case PointIndex::Lookup::collision:
          throw ToleranceCollision("two roots closer than the separation threshold");
        case PointIndex::Lookup::absent:
          if (index.size() >= 65535) throw BudgetExceeded("root system larger than 65535 roots");
          index.insert(image);
          break;
      }
    }
  }
  rs.roots = index.points();
  return rs;
}

std::uint64_t Group::hash(std::span<const RootIndex> perm) const {
  // Images of the simple roots determine the element.
  std::uint64_t h = 1469598103934665603ULL;
  for (int s : roots_.simple_indices) {
    h ^= perm[static_cast<std::size_t>(s)];
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<ElementId> Group::try_find(std::span<const RootIndex> p) const {
  auto [lo, hi] = lookup_.equal_range(hash(p));
  for (auto it = lo; it != hi; ++it) {
    auto q = perm(it->second);
    bool same = true;
    for (int s : roots_.simple_indices)
      if (q[static_cast<std::size_t>(s)] != p[static_cast<std::size_t>(s)]) { same = false; break; }
    if (same) return it->second;
  }
  return std::nullopt;
}

ElementId Group::find(std::span<const RootIndex> p) const {
  if (auto id = try_find(p)) return *id;
  throw SubgroupNotContained("permutation is not an element of the group");
}

ElementId Group::compose(ElementId a, ElementId b) const {
  auto pa = perm(a), pb = perm(b);
  std::vector<RootIndex> out(pa.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = pa[pb[j]];
  return find(out);
}

ElementId Group::inverse(ElementId g) const {
  auto p = perm(g);
  std::vector<RootIndex> out(p.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[p[j]] = static_cast<RootIndex>(j);
  return find(out);
}

std::vector<int> Group::word(ElementId g) const {
  std::vector<int> w;
  while (g != identity()) {
    w.push_back(parent_gen_[g]);
    g = parent_[g];
  }
  return w;
}

Eigen::MatrixXd Group::matrix(ElementId g) const {
  const int n = rank_;
  Eigen::MatrixXd images(n, n);
  auto p = perm(g);
  for (int k = 0; k < n; ++k)
    images.col(k) = roots_.roots[p[static_cast<std::size_t>(roots_.simple_indices[static_cast<std::size_t>(k)])]];
  return images * simple_inverse_;
}

Group enumerate_group(const SimpleNormals& normals, std::size_t budget) {
  Group g;
  g.rank_ = normals.dimension();
  g.normals_ = normals;
  g.roots_ = root_system(normals);
  g.id_ = next_group_id.fetch_add(1);
  const int n = g.rank_;
  const std::size_t R = g.roots_.roots.size();

  Eigen::MatrixXd simple(n, n);
  for (int k = 0; k < n; ++k) simple.col(k) = g.roots_.roots[static_cast<std::size_t>(g.roots_.simple_indices[static_cast<std::size_t>(k)])];
  g.simple_inverse_ = simple.inverse();

  // Simple reflections as root permutations.
  PointIndex index(n, kMatchTolerance, kMinSeparation);
  for (const auto& r : g.roots_.roots) index.insert(r);
  std::vector<std::vector<RootIndex>> gens(static_cast<std::size_t>(n), std::vector<RootIndex>(R));
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd nrm = normals.normal(i);
    for (std::size_t j = 0; j < R; ++j) {
      const Eigen::VectorXd& r = g.roots_.roots[j];
      std::uint32_t hit = 0;
      if (index.classify(r - 2.0 * nrm.dot(r) * nrm, &hit) != PointIndex::Lookup::found)
        throw ToleranceCollision("reflection image of a root is not a root");
      gens[static_cast<std::size_t>(i)][j] = static_cast<RootIndex>(hit);
    }
  }

  std::vector<RootIndex> identity(R);
  std::iota(identity.begin(), identity.end(), RootIndex{0});
  g.perms_ = identity;
  g.parent_.push_back(0);
  g.parent_gen_.push_back(-1);
  g.lookup_.emplace(g.hash(identity), 0);
  std::vector<ElementId> left;
  std::vector<RootIndex> next(R);
  for (std::size_t head = 0; head < g.parent_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      const auto& s = gens[static_cast<std::size_t>(i)];
      const RootIndex* cur = g.perms_.data() + head * R;
      for (std::size_t j = 0; j < R; ++j) next[j] = s[cur[j]];
      ElementId id;
      if (auto found = g.try_find(next)) {
        id = *found;
      } else {
        id = static_cast<ElementId>(g.parent_.size());
        if (g.parent_.size() >= budget)
          throw BudgetExceeded("group has more than " + std::to_string(budget) + " elements");
        g.perms_.insert(g.perms_.end(), next.begin(), next.end());
        g.parent_.push_back(static_cast<ElementId>(head));
        g.parent_gen_.push_back(static_cast<std::int8_t>(i));
        g.lookup_.emplace(g.hash(next), id);
      }
      left.push_back(id);
    }
  }
  const std::size_t order = g.parent_.size();
  g.order_ = order;

  // Sort by permutation so ids follow lexicographic order.
  std::vector<ElementId> by_lex(order);
  std::iota(by_lex.begin(), by_lex.end(), ElementId{0});
  std::sort(by_lex.begin(), by_lex.end(), [&](ElementId a, ElementId b) {
    return std::lexicographical_compare(g.perms_.begin() + a * R, g.perms_.begin() + (a + 1) * R,
                                        g.perms_.begin() + b * R, g.perms_.begin() + (b + 1) * R);
  });
  std::vector<ElementId> rank_of(order);
  for (std::size_t k = 0; k < order; ++k) rank_of[by_lex[k]] = static_cast<ElementId>(k);

  std::vector<RootIndex> perms(order * R);
  std::vector<ElementId> parent(order);
  std::vector<std::int8_t> parent_gen(order);
  g.left_.assign(order * static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < order; ++k) {
    const ElementId old = by_lex[k];
    std::copy(g.perms_.begin() + old * R, g.perms_.begin() + (old + 1) * R, perms.begin() + k * R);
    parent[k] = rank_of[g.parent_[old]];
    parent_gen[k] = g.parent_gen_[old];
    for (int i = 0; i < n; ++i) g.left_[k * n + i] = rank_of[left[old * n + i]];
  }
  g.perms_ = std::move(perms);
  g.parent_ = std::move(parent);
  g.parent_gen_ = std::move(parent_gen);
  g.lookup_.clear();
  for (std::size_t k = 0; k < order; ++k) g.lookup_.emplace(g.hash(g.perm(static_cast<ElementId>(k))), static_cast<ElementId>(k));

  g.right_.assign(order * static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < order; ++k) {
    auto p = g.perm(static_cast<ElementId>(k));
    for (int i = 0; i < n; ++i) {
      const auto& s = gens[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < R; ++j) next[j] = p[s[j]];
      g.right_[k * n + i] = g.find(next);
    }
  }
  return g;
}

std::shared_ptr<const Group> enumerate(const DecoratedDiagram& d, std::size_t budget) {
  const BigInt order = group_order(d);
  if (order > budget)
    throw BudgetExceeded("group order " + order.str() + " exceeds enumeration budget " + std::to_string(budget));
  return std::make_shared<const Group>(enumerate_group(simple_normals(d), budget));
}

Subgroup subgroup(const Group& g, NodeSet generators) {
  Subgroup h;
  h.generators = generators;
  h.group_id = g.id();
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementId> queue{Group::identity()};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int i = 0; i < g.rank(); ++i) {
      if (!contains(generators, i)) continue;
      const ElementId next = g.left(queue[head], i);
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  h.elements = std::move(queue);
  return h;
}

CosetPartition parabolic_cosets(const Group& g, NodeSet generators) {
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  CosetPartition out;
  out.coset_of.assign(g.order(), unset);
  std::vector<ElementId> queue;
  for (ElementId start = 0; start < g.order(); ++start) {
    if (out.coset_of[start] != unset) continue;
    const auto id = static_cast<std::uint32_t>(out.reps.size());
    out.reps.push_back(start);
    out.coset_of[start] = id;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int i = 0; i < g.rank(); ++i) {
        if (!contains(generators, i)) continue;
        const ElementId next = g.right(queue[head], i);
        if (out.coset_of[next] == unset) {
          out.coset_of[next] = id;
          queue.push_back(next);
        }
      }
    }
  }
  return out;
}

CosetPartition cosets(const Group& g, const Subgroup& h) {
  if (h.group_id != g.id()) throw SubgroupNotContained("subgroup belongs to a different group");
  for (ElementId e : h.elements)
    if (e >= g.order()) throw SubgroupNotContained("subgroup element outside the group");
  return parabolic_cosets(g, h.generators);
}

}  // namespace wythoff
