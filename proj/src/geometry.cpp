#include "wythoff/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace wythoff {

WythoffPoint wythoff_point(const SimpleNormals& normals, const Decoration012& f0) {
  const int n = normals.dimension();
  if (f0.size() != n) throw NotApplicable("decoration size does not match normals");
  if (f0.with_value(1) == 0) throw Degenerate("no ringed node");
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) b[i] = f0[i] == 1 ? 1.0 : 0.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(normals.rows);
  if (!lu.isInvertible()) throw SingularSystem("simple normals are linearly dependent");
  const Eigen::VectorXd sol = lu.solve(b);
  const double norm = sol.norm();
  WythoffPoint p;
  p.x = sol / norm;
  p.ring_distance = 1.0 / norm;
  return p;
}

Eigen::VectorXd Realization::face_centroid(FaceId f) const {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dimension);
  const auto& vs = face_vertices[f];
  for (auto v : vs) c += vertices[v];
  if (!vs.empty()) c /= static_cast<double>(vs.size());
  return c;
}

namespace {

std::uint32_t lookup_or_throw(const PointIndex& index, const Eigen::VectorXd& p, const char* what) {
  std::uint32_t hit = 0;
  switch (index.classify(p, &hit)) {
    case PointIndex::Lookup::found: return hit;
    case PointIndex::Lookup::collision: throw DedupCollision(std::string(what) + ": two points closer than the separation threshold");
    case PointIndex::Lookup::absent: break;
  }
  throw DedupCollision(std::string(what) + ": point is not in the vertex orbit");
}

Eigen::MatrixXd stack(const std::vector<Eigen::VectorXd>& points, bool centre) {
  const auto m = static_cast<Eigen::Index>(points.size());
  const auto n = points.empty() ? Eigen::Index{0} : points.front().size();
  Eigen::MatrixXd a(m, n);
  for (Eigen::Index i = 0; i < m; ++i) a.row(i) = points[static_cast<std::size_t>(i)].transpose();
  if (centre && m > 0) a.rowwise() -= a.colwise().mean();
  return a;
}

int numeric_rank(const Eigen::MatrixXd& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > tol) ++r;
  return r;
}

}  // namespace

int affine_dimension(const std::vector<Eigen::VectorXd>& points, double tol) {
  return numeric_rank(stack(points, true), tol);
}

int linear_dimension(const std::vector<Eigen::VectorXd>& points, double tol) {
  return numeric_rank(stack(points, false), tol);
}

Realization realize(const FaceLattice& l, const WythoffPoint& x) {
  const Group& g = l.group();
  const int n = l.dimension();
  Realization r;
  r.dimension = n;

  // Orbit by geometric closure, independent of the permutation tables.
  PointIndex orbit(n, kVertexTolerance, kMinSeparation);
  orbit.insert(x.x);
  std::vector<Eigen::MatrixXd> mirrors;
  for (int i = 0; i < n; ++i) mirrors.push_back(g.normals().reflection(i));
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const Eigen::VectorXd p = orbit.point(static_cast<std::uint32_t>(head));
    for (const auto& m : mirrors) {
      const Eigen::VectorXd q = m * p;
      switch (orbit.classify(q)) {
        case PointIndex::Lookup::found: break;
        case PointIndex::Lookup::collision: throw DedupCollision("orbit points closer than the separation threshold");
        case PointIndex::Lookup::absent: orbit.insert(q); break;
      }
    }
  }
  if (orbit.size() != l.count(0))
    throw DedupCollision("orbit has " + std::to_string(orbit.size()) + " points but the lattice has " +
                         std::to_string(l.count(0)) + " vertices");

  // Vertex order follows the rank-0 faces.
  std::vector<char> used(orbit.size(), 0);
  auto index = std::make_shared<PointIndex>(n, kVertexTolerance, kMinSeparation);
  for (FaceId v = l.rank_begin(0); v < l.rank_end(0); ++v) {
    const Eigen::VectorXd p = g.matrix(l.face(v).rep) * x.x;
    const auto hit = lookup_or_throw(orbit, p, "vertex");
    if (used[hit]++) throw DedupCollision("two rank-0 faces realize the same point");
    r.vertices.push_back(orbit.point(hit));
    index->insert(orbit.point(hit));
  }
  r.index = index;
  r.centroid = Eigen::VectorXd::Zero(n);
  for (const auto& v : r.vertices) r.centroid += v;
  r.centroid /= static_cast<double>(r.vertices.size());

  r.face_vertices.assign(l.size(), {});
  for (std::size_t t = 0; t < l.types().size(); ++t) {
    const FaceType& type = l.types()[t];
    // Local orbit G_S·x of the face through the base point.
    const Subgroup h = subgroup(g, type.circled);
    PointIndex local(n, kVertexTolerance, kMinSeparation);
    for (ElementId w : h.elements) {
      const Eigen::VectorXd p = g.matrix(w) * x.x;
      if (local.classify(p) == PointIndex::Lookup::absent) local.insert(p);
    }
    for (std::uint32_t c = 0; c < type.cosets.count(); ++c) {
      const FaceId f = type.first_face + c;
      const Eigen::MatrixXd mc = g.matrix(type.cosets.reps[c]);
      auto& vs = r.face_vertices[f];
      vs.reserve(local.size());
      for (const auto& p : local.points()) vs.push_back(lookup_or_throw(*index, mc * p, "face vertex"));
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    }
  }
  return r;
}

Realization realize(const FaceLattice& l) { return realize(l, wythoff_point(l.group().normals(), l.start())); }

EdgeReport check_uniform_edges(const FaceLattice& l, const Realization& r) {
  EdgeReport report;
  report.min_length = std::numeric_limits<double>::infinity();
  for (FaceId e = l.rank_begin(1); e < l.rank_end(1) && l.dimension() >= 1; ++e) {
    const auto& vs = r.vertices_of(e);
    if (vs.size() != 2) {
      report.relative_spread = std::numeric_limits<double>::infinity();
      continue;
    }
    const double len = (r.vertices[vs[0]] - r.vertices[vs[1]]).norm();
    report.min_length = std::min(report.min_length, len);
    report.max_length = std::max(report.max_length, len);
    ++report.edges;
  }
  if (report.edges == 0) {
    report.min_length = 0.0;
    return report;
  }
  if (std::isfinite(report.relative_spread))
    report.relative_spread = (report.max_length - report.min_length) / report.max_length;
  return report;
}

GeometryReport check_geometry(const FaceLattice& l, const Realization& r) {
  GeometryReport report;
  report.centroid_norm = r.centroid.norm();
  const int n = l.dimension();

  std::vector<Eigen::VectorXd> pts;
  for (FaceId f = 1; f < l.size(); ++f) {
    pts.clear();
    for (auto v : r.vertices_of(f)) pts.push_back(r.vertices[v]);
    if (affine_dimension(pts) != l.face(f).rank) ++report.rank_mismatches;
  }

  for (auto [a, b] : l.covers()) {
    if (a == l.bottom()) continue;
    const auto& lo = r.vertices_of(a);
    const auto& hi = r.vertices_of(b);
    if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()) || lo.size() >= hi.size())
      ++report.containment_mismatches;
  }
  // Converse: every (k+1)-face containing a k-face's vertices is a cover.
  std::vector<std::vector<FaceId>> incident(r.vertices.size());
  for (FaceId f = 1; f < l.size(); ++f)
    for (auto v : r.vertices_of(f)) incident[v].push_back(f);
  for (FaceId f = 1; f < l.size(); ++f) {
    const int k = l.face(f).rank;
    if (k >= n) continue;
    const auto& lo = r.vertices_of(f);
    if (lo.empty()) {
      ++report.containment_mismatches;
      continue;
    }
    std::vector<FaceId> found;
    for (FaceId u : incident[lo.front()]) {
      if (l.face(u).rank != k + 1) continue;
      const auto& hi = r.vertices_of(u);
      if (std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) found.push_back(u);
    }
    auto ups = l.up(f);
    if (!std::equal(found.begin(), found.end(), ups.begin(), ups.end())) ++report.containment_mismatches;
  }

  for (int k = 0; k <= n; ++k) {
    std::vector<const std::vector<std::uint32_t>*> sets;
    for (FaceId f = l.rank_begin(k); f < l.rank_end(k); ++f) sets.push_back(&r.vertices_of(f));
    std::sort(sets.begin(), sets.end(), [](auto* x, auto* y) { return *x < *y; });
    for (std::size_t i = 1; i < sets.size(); ++i)
      if (*sets[i] == *sets[i - 1]) ++report.duplicate_vertex_sets;
  }
  return report;
}

std::optional<VertexPerm> vertex_permutation(const Realization& r, const Eigen::MatrixXd& m, double tol, double* worst) {
  VertexPerm perm(r.vertices.size());
  double max_dist = 0.0;
  bool ok = true;
  for (std::size_t v = 0; v < r.vertices.size(); ++v) {
    auto hit = r.index->nearest(m * r.vertices[v]);
    if (!hit || hit->distance > tol) {
      ok = false;
      max_dist = std::max(max_dist, hit ? hit->distance : std::numeric_limits<double>::infinity());
      continue;
    }
    max_dist = std::max(max_dist, hit->distance);
    perm[v] = hit->index;
  }
  if (worst) *worst = max_dist;
  if (!ok) return std::nullopt;
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return perm;
}

RidgeReport ridge_reflection_check(const FaceLattice& l, const Realization& r) {
  const int n = l.dimension();
  RidgeReport report;
  if (n < 2) throw UnsupportedDimension("ridge reflections need dimension >= 2");
  for (FaceId f = l.rank_begin(n - 2); f < l.rank_end(n - 2); ++f) {
    ++report.ridges;
    Eigen::MatrixXd cols(n, static_cast<Eigen::Index>(r.vertices_of(f).size()));
    Eigen::Index c = 0;
    for (auto v : r.vertices_of(f)) cols.col(c++) = r.vertices[v];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv[i] > kRankTolerance) ++rank;
    if (rank != n - 1)
      throw SpanDeficient("ridge " + std::to_string(f) + " spans a " + std::to_string(rank) + "-dimensional subspace");
    const Eigen::VectorXd u = svd.matrixU().col(n - 1);
    const Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) - 2.0 * u * u.transpose();
    double worst = 0.0;
    auto perm = vertex_permutation(r, h, kVertexTolerance, &worst);
    report.max_mismatch = std::max(report.max_mismatch, worst);
    if (!perm) continue;
    ++report.symmetric;
    const bool known = std::any_of(report.normals.begin(), report.normals.end(),
                                   [&](const Eigen::VectorXd& w) { return std::abs(std::abs(w.dot(u)) - 1.0) < 1e-9; });
    if (!known) {
      report.normals.push_back(u);
      report.reflections.push_back(std::move(*perm));
    }
  }
  return report;
}

DualReport polar_dual_check(const FaceLattice& l, const Realization& r, const RidgeReport& ridges) {
  const int n = l.dimension();
  DualReport report;
  PointIndex centroids(n, kVertexTolerance, kMinSeparation);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (FaceId f = l.rank_begin(n - 1); f < l.rank_end(n - 1); ++f) {
    const Eigen::VectorXd c = r.face_centroid(f);
    lo = std::min(lo, c.norm());
    hi = std::max(hi, c.norm());
    centroids.insert(c);
    ++report.facets;
  }
  if (report.facets == 0) return report;
  report.norm_spread = hi > 0 ? (hi - lo) / hi : 0.0;

  std::vector<Eigen::MatrixXd> mirrors;
  for (const auto& u : ridges.normals) mirrors.push_back(Eigen::MatrixXd::Identity(n, n) - 2.0 * u * u.transpose());
  std::vector<char> seen(centroids.size(), 0);
  std::vector<std::uint32_t> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Eigen::VectorXd c = centroids.point(queue[head]);
    for (const auto& m : mirrors) {
      std::uint32_t hit = 0;
      if (centroids.classify(m * c, &hit) != PointIndex::Lookup::found) continue;
      if (!seen[hit]) {
        seen[hit] = 1;
        queue.push_back(hit);
      }
    }
  }
  report.orbit_size = queue.size();
  return report;
}

DualReport polar_dual_check(const FaceLattice& l, const Realization& r) {
  return polar_dual_check(l, r, ridge_reflection_check(l, r));
}

namespace {

std::string format_coord(double v) {
  if (std::abs(v) < 5e-13) v = 0.0;
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace

std::string export_off(const FaceLattice& l, const Realization& r, std::optional<FaceId> face) {
  const int n = l.dimension();
  std::vector<std::uint32_t> verts;
  std::vector<Eigen::Vector3d> coords;
  std::vector<FaceId> polygons;

  if (!face && n == 3) {
    verts.resize(r.vertices.size());
    std::iota(verts.begin(), verts.end(), 0U);
    for (const auto& v : r.vertices) coords.emplace_back(v[0], v[1], v[2]);
    for (FaceId f = l.rank_begin(2); f < l.rank_end(2); ++f) polygons.push_back(f);
  } else if (face && *face < l.size() && l.face(*face).rank == 3 && n >= 3) {
    verts = r.vertices_of(*face);
    const Eigen::VectorXd c = r.face_centroid(*face);
    Eigen::MatrixXd centred(static_cast<Eigen::Index>(verts.size()), n);
    for (std::size_t i = 0; i < verts.size(); ++i) centred.row(static_cast<Eigen::Index>(i)) = (r.vertices[verts[i]] - c).transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centred, Eigen::ComputeFullV);
    const Eigen::MatrixXd basis = svd.matrixV().leftCols(3);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const Eigen::Vector3d p = basis.transpose() * centred.row(static_cast<Eigen::Index>(i)).transpose();
      coords.push_back(p);
    }
    for (FaceId f : l.down(*face)) polygons.push_back(f);
  } else {
    throw UnsupportedDimension("OFF export needs a 3-dimensional polytope or a rank-3 face selection");
  }

  auto local = [&](std::uint32_t v) {
    return static_cast<std::uint32_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  Eigen::Vector3d centre = Eigen::Vector3d::Zero();
  for (const auto& p : coords) centre += p;
  centre /= static_cast<double>(coords.size());

  std::ostringstream os;
  os << "OFF\n" << coords.size() << " " << polygons.size() << " 0\n";
  for (const auto& p : coords) os << format_coord(p[0]) << " " << format_coord(p[1]) << " " << format_coord(p[2]) << "\n";
  for (FaceId f : polygons) {
    std::vector<std::uint32_t> ids;
    for (auto v : r.vertices_of(f)) ids.push_back(local(v));
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (auto i : ids) c += coords[i];
    c /= static_cast<double>(ids.size());
    Eigen::MatrixXd m(static_cast<Eigen::Index>(ids.size()), 3);
    for (std::size_t i = 0; i < ids.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = (coords[ids[i]] - c).transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    Eigen::Vector3d normal = svd.matrixV().col(2);
    if (normal.dot(c - centre) < 0) normal = -normal;
    const Eigen::Vector3d e1 = (coords[ids[0]] - c).normalized();
    const Eigen::Vector3d e2 = normal.cross(e1);
    std::vector<std::pair<double, std::uint32_t>> order;
    for (auto i : ids) {
      const Eigen::Vector3d d = coords[i] - c;
      order.emplace_back(std::atan2(d.dot(e2), d.dot(e1)), i);
    }
    std::sort(order.begin(), order.end());
    os << ids.size();
    for (const auto& [angle, i] : order) os << " " << i;
    os << "\n";
  }
  return os.str();
}

std::string export_json(const FaceLattice& l, const Realization& r) {
  nlohmann::ordered_json doc;
  doc["dimension"] = l.dimension();
  doc["diagram"] = describe(l.diagram());
  auto& verts = doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : r.vertices) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(std::abs(v[i]) < 5e-13 ? 0.0 : v[i]);
    verts.push_back(row);
  }
  auto& faces = doc["faces"] = nlohmann::ordered_json::array();
  for (int k = 0; k <= l.dimension(); ++k) {
    auto rank = nlohmann::ordered_json::array();
    for (FaceId f = l.rank_begin(k); f < l.rank_end(k); ++f) rank.push_back(r.vertices_of(f));
    faces.push_back(rank);
  }
  return doc.dump();
}

}  // namespace wythoff
