#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <Eigen/Dense>

namespace wythoff::testing {

using VertexSet = std::vector<std::uint32_t>;

/// Face lattice of the convex hull of points in general dimension, by brute
/// force: facets from supporting hyperplanes through n-subsets, lower faces as
/// intersections of facets. Only for small vertex counts.
struct HullOracle {
  int dimension = 0;
  std::vector<std::set<VertexSet>> faces;   ///< index k: faces of rank k (0..n-1)

  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& r : faces) f.push_back(r.size());
    return f;
  }

  /// Maximal chains F_0 < ... < F_{n-1} by subset inclusion.
  std::size_t flag_count() const {
    std::map<VertexSet, std::size_t> below;
    for (const auto& v : faces[0]) below[v] = 1;
    for (std::size_t k = 1; k < faces.size(); ++k) {
      std::map<VertexSet, std::size_t> next;
      for (const auto& f : faces[k]) {
        std::size_t c = 0;
        for (const auto& [g, count] : below)
          if (std::includes(f.begin(), f.end(), g.begin(), g.end())) c += count;
        next[f] = c;
      }
      below = std::move(next);
    }
    std::size_t total = 0;
    for (const auto& [f, c] : below) total += c;
    return total;
  }
};

inline int affine_rank(const std::vector<Eigen::VectorXd>& pts, const VertexSet& ids) {
  if (ids.empty()) return -1;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(ids.size()), pts[0].size());
  for (std::size_t i = 0; i < ids.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = pts[ids[i]] - pts[ids[0]];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

inline HullOracle hull_oracle(const std::vector<Eigen::VectorXd>& pts) {
  const int n = static_cast<int>(pts[0].size());
  const auto count = static_cast<std::uint32_t>(pts.size());
  HullOracle h;
  h.dimension = n;
  h.faces.resize(static_cast<std::size_t>(n));

  std::set<VertexSet> facets;
  std::vector<std::uint32_t> pick(static_cast<std::size_t>(n));
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(n); ++i) pick[i] = i;
  while (true) {
    Eigen::MatrixXd diffs(n - 1, n);
    for (int i = 1; i < n; ++i) diffs.row(i - 1) = pts[pick[static_cast<std::size_t>(i)]] - pts[pick[0]];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(diffs);
    lu.setThreshold(1e-9);
    if (lu.rank() == n - 1) {
      Eigen::VectorXd normal = lu.kernel().col(0).normalized();
      const double offset = normal.dot(pts[pick[0]]);
      int above = 0, below = 0;
      VertexSet on;
      for (std::uint32_t v = 0; v < count; ++v) {
        const double s = normal.dot(pts[v]) - offset;
        if (s > 1e-9) ++above;
        else if (s < -1e-9) ++below;
        else on.push_back(v);
      }
      if (above == 0 || below == 0) facets.insert(on);
    }
    int i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == count - static_cast<std::uint32_t>(n - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }

  std::set<VertexSet> all(facets.begin(), facets.end());
  std::vector<VertexSet> frontier(facets.begin(), facets.end());
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (const auto& a : frontier)
      for (const auto& b : facets) {
        VertexSet c;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
        if (!c.empty() && all.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  for (const auto& f : all) {
    const int r = affine_rank(pts, f);
    if (r >= 0 && r < n) h.faces[static_cast<std::size_t>(r)].insert(f);
  }
  return h;
}

}  // namespace wythoff::testing
