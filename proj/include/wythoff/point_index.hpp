#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace wythoff {

/// Spatial hash over points of one fixed dimension. A query returns the stored
/// point within `match` distance; a stored point closer than `separation` but
/// further than `match` is reported as a collision.
class PointIndex {
 public:
  PointIndex(int dimension, double match, double separation);

  struct Hit {
    std::uint32_t index;
    double distance;
  };
  enum class Lookup { found, absent, collision };

  /// Nearest stored point within `separation`, if any.
  std::optional<Hit> nearest(const Eigen::VectorXd& p) const;
  Lookup classify(const Eigen::VectorXd& p, std::uint32_t* index = nullptr) const;

  /// Inserts unconditionally and returns the new index.
  std::uint32_t insert(const Eigen::VectorXd& p);

  std::size_t size() const { return points_.size(); }
  const Eigen::VectorXd& point(std::uint32_t i) const { return points_[i]; }
  const std::vector<Eigen::VectorXd>& points() const { return points_; }

 private:
  using Key = std::vector<std::int64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  Key key_of(const Eigen::VectorXd& p) const;

  int dimension_;
  double match_;
  double separation_;
  double cell_;
  std::vector<Eigen::VectorXd> points_;
  std::unordered_map<Key, std::vector<std::uint32_t>, KeyHash> cells_;
};

}  // namespace wythoff
