#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wythoff/face_lattice.hpp"
#include "wythoff/point_index.hpp"
#include "wythoff/reflection_group.hpp"

namespace wythoff {

/// Vertex dedup tolerance for orbit points.
inline constexpr double kVertexTolerance = 1e-7;
/// Singular values above this count toward affine dimension.
inline constexpr double kRankTolerance = 1e-7;

/// Unit vector on every crossed mirror, at equal distance `ring_distance`
/// from every ringed one.
struct WythoffPoint {
  Eigen::VectorXd x;
  double ring_distance = 0.0;
};

/// Throws Degenerate for degenerate decorations and SingularSystem if the
/// normals are dependent.
WythoffPoint wythoff_point(const SimpleNormals& normals, const Decoration012& f0);

/// Coordinates for a lattice. Vertex i is the rank-0 face rank_begin(0) + i.
struct Realization {
  int dimension = 0;
  std::vector<Eigen::VectorXd> vertices;
  std::vector<std::vector<std::uint32_t>> face_vertices;   ///< per FaceId, ascending
  Eigen::VectorXd centroid;
  std::shared_ptr<const PointIndex> index;   ///< lookup over `vertices`

  const std::vector<std::uint32_t>& vertices_of(FaceId f) const { return face_vertices[f]; }
  Eigen::VectorXd face_centroid(FaceId f) const;
};

/// Orbit of x by geometric closure under the simple reflections, then every
/// face's vertex set as c·G_S·x. Throws DedupCollision.
Realization realize(const FaceLattice& l, const WythoffPoint& x);
Realization realize(const FaceLattice& l);

/// Affine dimension of a point set (singular values of the centred matrix).
int affine_dimension(const std::vector<Eigen::VectorXd>& points, double tol = kRankTolerance);
/// Linear span dimension (no centring).
int linear_dimension(const std::vector<Eigen::VectorXd>& points, double tol = kRankTolerance);

struct EdgeReport {
  std::size_t edges = 0;
  double min_length = 0.0;
  double max_length = 0.0;
  double relative_spread = 0.0;
  bool ok() const { return relative_spread <= 1e-9; }
};
EdgeReport check_uniform_edges(const FaceLattice& l, const Realization& r);

/// Geometric checks tying the lattice to the coordinates.
struct GeometryReport {
  std::size_t rank_mismatches = 0;       ///< affine dimension != rank
  std::size_t containment_mismatches = 0;  ///< covers vs vertex-set inclusion, both directions
  std::size_t duplicate_vertex_sets = 0;
  double centroid_norm = 0.0;
  bool ok() const {
    return rank_mismatches == 0 && containment_mismatches == 0 && duplicate_vertex_sets == 0 &&
           centroid_norm <= 1e-9;
  }
};
GeometryReport check_geometry(const FaceLattice& l, const Realization& r);

/// A vertex permutation induced by an orthogonal map.
using VertexPerm = std::vector<std::uint32_t>;

struct RidgeReport {
  std::size_t ridges = 0;
  std::size_t symmetric = 0;           ///< ridges whose reflection maps V to V
  double max_mismatch = 0.0;
  std::vector<Eigen::VectorXd> normals;  ///< one unit normal per distinct ridge hyperplane
  std::vector<VertexPerm> reflections;   ///< vertex permutations of the symmetric ones
  bool ok() const { return ridges > 0 && symmetric == ridges; }
};
/// Throws SpanDeficient if some ridge does not span an (n-1)-space.
RidgeReport ridge_reflection_check(const FaceLattice& l, const Realization& r);

struct DualReport {
  std::size_t facets = 0;
  double norm_spread = 0.0;
  std::size_t orbit_size = 0;
  bool ok() const { return facets > 0 && norm_spread <= 1e-9 && orbit_size == facets; }
};
/// Facet centroids: equal norms and one orbit under the ridge reflections.
DualReport polar_dual_check(const FaceLattice& l, const Realization& r, const RidgeReport& ridges);
DualReport polar_dual_check(const FaceLattice& l, const Realization& r);

/// Vertex permutation of a linear map; nullopt if some image is not a vertex.
std::optional<VertexPerm> vertex_permutation(const Realization& r, const Eigen::MatrixXd& m,
                                             double tol = kVertexTolerance, double* worst = nullptr);

/// OFF mesh. For dimension 3 the whole polytope; otherwise `face` must name a
/// rank-3 face, whose own coordinates are used. Throws UnsupportedDimension.
std::string export_off(const FaceLattice& l, const Realization& r, std::optional<FaceId> face = std::nullopt);
/// Structured export: vertices and per-rank vertex-index lists.
std::string export_json(const FaceLattice& l, const Realization& r);

}  // namespace wythoff
