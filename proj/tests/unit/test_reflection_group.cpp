#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include "common/sweep.hpp"
#include "wythoff/reflection_group.hpp"

using namespace wythoff;

namespace {

/// Independent oracle: closure of the reflection matrices, elements keyed by
/// their rounded entries.
std::size_t matrix_closure_size(const SimpleNormals& normals) {
  const int n = normals.dimension();
  auto key = [](const Eigen::MatrixXd& m) {
    std::vector<long long> k;
    for (Eigen::Index i = 0; i < m.size(); ++i) k.push_back(std::llround(m.data()[i] * 1e6));
    return k;
  };
  std::set<std::vector<long long>> seen;
  std::vector<Eigen::MatrixXd> frontier{Eigen::MatrixXd::Identity(n, n)};
  seen.insert(key(frontier[0]));
  std::vector<Eigen::MatrixXd> gens;
  for (int i = 0; i < n; ++i) gens.push_back(normals.reflection(i));
  while (!frontier.empty()) {
    std::vector<Eigen::MatrixXd> next;
    for (const auto& m : frontier)
      for (const auto& s : gens) {
        Eigen::MatrixXd p = s * m;
        if (seen.insert(key(p)).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

std::size_t count_reflections(const Group& g) {
  const int n = g.rank();
  std::size_t count = 0;
  for (ElementId e = 0; e < g.order(); ++e) {
    const auto m = g.matrix(e);
    if (std::abs(m.determinant() + 1) < 1e-9 && std::abs(m.trace() - (n - 2)) < 1e-9) ++count;
  }
  return count;
}

ElementId power(const Group& g, ElementId e, int k) {
  ElementId out = Group::identity();
  for (int i = 0; i < k; ++i) out = g.compose(out, e);
  return out;
}

}  // namespace

TEST_CASE("simple normals") {
  const auto i24 = simple_normals(parse("x4x"));
  CHECK(i24.normal(0).dot(i24.normal(1)) == doctest::Approx(-std::cos(M_PI / 4)).epsilon(1e-12));
  const auto a11 = simple_normals(parse(R"({"nodes":[{"id":"a","mark":"ring"},{"id":"b","mark":"ring"}],"edges":[]})"));
  CHECK(std::abs(a11.normal(0).dot(a11.normal(1))) < 1e-15);
  const auto h3 = simple_normals(parse("x5o3o"));
  CHECK(h3.normal(0).dot(h3.normal(1)) == doctest::Approx(-std::cos(M_PI / 5)).epsilon(1e-12));
  CHECK(h3.normal(1).dot(h3.normal(2)) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(std::abs(h3.normal(0).dot(h3.normal(2))) < 1e-12);

  for (const auto& d : testing::connected_sweep(12)) {
    const auto s = simple_normals(d);
    for (int i = 0; i < d.size(); ++i) {
      CHECK(s.normal(i).norm() == doctest::Approx(1.0).epsilon(1e-12));
      for (int j = i + 1; j < d.size(); ++j)
        CHECK(s.normal(i).dot(s.normal(j)) == doctest::Approx(-std::cos(M_PI / d.label(i, j))).epsilon(1e-12));
    }
  }
}

TEST_CASE("small enumerations") {
  auto i24 = enumerate(parse("x4o"));
  CHECK(i24->roots().size() == 8);
  CHECK(i24->order() == 8);
  auto b3 = enumerate(parse("x4o3o"));
  CHECK(b3->roots().size() == 18);
  CHECK(b3->order() == 48);
  auto a1 = enumerate(parse("x"));
  CHECK(a1->roots().size() == 2);
  CHECK(a1->order() == 2);
}

TEST_CASE("enumeration matches matrix closure and closed-form orders") {
  for (const auto& d : testing::full_sweep(12)) {
    const auto expected = group_order(d);
    if (expected > 20000) continue;
    const auto g = enumerate(d);
    CAPTURE(describe(d));
    CHECK(BigInt(g->order()) == expected);
    if (expected <= 2000) CHECK(matrix_closure_size(simple_normals(d)) == g->order());
    CHECK(static_cast<std::size_t>(g->roots().size()) == 2 * count_reflections(*g));
  }
}

TEST_CASE("group structure") {
  for (const char* s : {"x4o3o", "x5o3o", "x3o4o3o", "x3o3o3o", "x8o"}) {
    const auto g = enumerate(parse(s));
    const auto d = parse(s);
    CAPTURE(s);
    CHECK(g->perm(Group::identity())[0] == 0);
    for (ElementId e = 0; e < g->order(); e += 7) {
      const auto m = g->matrix(e);
      const Eigen::MatrixXd err = m.transpose() * m - Eigen::MatrixXd::Identity(d.size(), d.size());
      CHECK(err.cwiseAbs().maxCoeff() <= 1e-9);
      CHECK(g->compose(e, g->inverse(e)) == Group::identity());
      ElementId rebuilt = Group::identity();
      for (int i : g->word(e)) rebuilt = g->compose(rebuilt, g->left(Group::identity(), i));
      CHECK(rebuilt == e);
      CHECK(g->find(g->perm(e)) == e);
      for (int i = 0; i < d.size(); ++i) {
        CHECK(g->left(e, i) == g->compose(g->left(0, i), e));
        CHECK(g->right(e, i) == g->compose(e, g->left(0, i)));
      }
    }
    for (int i = 0; i < d.size(); ++i)
      for (int j = 0; j < d.size(); ++j) {
        const ElementId si = g->left(0, i), sj = g->left(0, j);
        const int m = d.label(i, j);
        CHECK(power(*g, g->compose(si, sj), m) == Group::identity());
        for (int k = 1; k < m; ++k) CHECK(power(*g, g->compose(si, sj), k) != Group::identity());
        if (m == 2) CHECK(g->compose(si, sj) == g->compose(sj, si));
      }
  }
}

TEST_CASE("distinct elements have distinct permutations") {
  const auto g = enumerate(parse("x5o3o3o"));
  std::set<std::vector<RootIndex>> perms;
  for (ElementId e = 0; e < g->order(); ++e) {
    const auto p = g->perm(e);
    perms.emplace(p.begin(), p.end());
  }
  CHECK(perms.size() == 14400);
}

TEST_CASE("parabolic subgroups and cosets") {
  const auto b3 = enumerate(parse("x4o3o"));
  CHECK(subgroup(*b3, bit(1) | bit(2)).order() == 6);
  CHECK(subgroup(*b3, 0).order() == 1);
  CHECK(cosets(*b3, subgroup(*b3, bit(1) | bit(2))).count() == 8);
  const auto whole = cosets(*b3, subgroup(*b3, 0b111));
  CHECK(whole.count() == 1);
  CHECK(whole.reps[0] == Group::identity());

  const auto d4 = make_family(Family::D, 4, 0, {0, 1, 0, 0});
  const auto gd = enumerate(d4);
  const auto leaves = subgroup(*gd, bit(0) | bit(2) | bit(3));
  CHECK(leaves.order() == 8);
  CHECK(cosets(*gd, leaves).count() == 24);

  for (const auto& d : testing::connected_sweep(6)) {
    if (group_order(d) > 2000) continue;
    const auto g = enumerate(d);
    for (NodeSet s = 0; s <= d.all_nodes(); ++s) {
      const auto h = subgroup(*g, s);
      const auto c = cosets(*g, h);
      CAPTURE(describe(d));
      CAPTURE(s);
      CHECK(BigInt(h.order()) == group_order(d, s));
      CHECK(h.order() * c.count() == g->order());
      const auto p = parabolic_cosets(*g, s);
      CHECK(p.coset_of == c.coset_of);
      CHECK(p.reps == c.reps);
      for (std::size_t k = 1; k < c.reps.size(); ++k) CHECK(c.reps[k - 1] < c.reps[k]);
      for (ElementId e = 0; e < g->order(); ++e) CHECK(c.reps[c.coset_of[e]] <= e);
    }
  }
}

TEST_CASE("foreign subgroup is rejected") {
  const auto a = enumerate(parse("x4o3o"));
  const auto b = enumerate(parse("x3o3o"));
  CHECK_THROWS_AS(cosets(*a, subgroup(*b, bit(0))), SubgroupNotContained);
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(enumerate(make_family(Family::E, 8)), BudgetExceeded);
  CHECK_THROWS_AS(enumerate(make_family(Family::E, 7)), BudgetExceeded);
  CHECK_THROWS_AS(enumerate(parse("x4o3o"), 10), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_group(simple_normals(parse("x4o3o")), 10), BudgetExceeded);
  ::setenv("WYTHOFF_BUDGET", "1234", 1);
  CHECK(budget_from_env() == 1234);
  ::setenv("WYTHOFF_BUDGET", "junk", 1);
  CHECK(budget_from_env() == kDefaultBudget);
  ::unsetenv("WYTHOFF_BUDGET");
  CHECK(budget_from_env() == kDefaultBudget);
}
