#include "wythoff/point_index.hpp"

#include <cmath>
#include <limits>

namespace wythoff {

PointIndex::PointIndex(int dimension, double match, double separation)
    : dimension_(dimension), match_(match), separation_(separation), cell_(10.0 * separation) {}

std::size_t PointIndex::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : k) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

PointIndex::Key PointIndex::key_of(const Eigen::VectorXd& p) const {
  Key k(static_cast<std::size_t>(dimension_));
  for (int i = 0; i < dimension_; ++i) k[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(std::floor(p[i] / cell_));
  return k;
}

std::optional<PointIndex::Hit> PointIndex::nearest(const Eigen::VectorXd& p) const {
  const Key base = key_of(p);
  // Offsets per axis: only neighbours whose cell lies within `separation_`.
  std::vector<std::vector<int>> offsets(static_cast<std::size_t>(dimension_));
  for (int i = 0; i < dimension_; ++i) {
    auto& o = offsets[static_cast<std::size_t>(i)];
    o.push_back(0);
    const double frac = p[i] / cell_ - static_cast<double>(base[static_cast<std::size_t>(i)]);
    if (frac * cell_ < separation_) o.push_back(-1);
    if ((1.0 - frac) * cell_ < separation_) o.push_back(1);
  }
  std::optional<Hit> best;
  std::vector<std::size_t> pos(static_cast<std::size_t>(dimension_), 0);
  Key key = base;
  while (true) {
    for (int i = 0; i < dimension_; ++i)
      key[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i)] + offsets[static_cast<std::size_t>(i)][pos[static_cast<std::size_t>(i)]];
    if (auto it = cells_.find(key); it != cells_.end()) {
      for (auto idx : it->second) {
        const double dist = (points_[idx] - p).norm();
        if (dist < separation_ && (!best || dist < best->distance)) best = Hit{idx, dist};
      }
    }
    int axis = 0;
    while (axis < dimension_) {
      auto& c = pos[static_cast<std::size_t>(axis)];
      if (++c < offsets[static_cast<std::size_t>(axis)].size()) break;
      c = 0;
      ++axis;
    }
    if (axis == dimension_) break;
  }
  return best;
}

PointIndex::Lookup PointIndex::classify(const Eigen::VectorXd& p, std::uint32_t* index) const {
  auto hit = nearest(p);
  if (!hit) return Lookup::absent;
  if (index) *index = hit->index;
  return hit->distance <= match_ ? Lookup::found : Lookup::collision;
}

std::uint32_t PointIndex::insert(const Eigen::VectorXd& p) {
  const auto idx = static_cast<std::uint32_t>(points_.size());
  points_.push_back(p);
  cells_[key_of(p)].push_back(idx);
  return idx;
}

}  // namespace wythoff
