#include <doctest.h>

#include <set>

#include "common/sweep.hpp"
#include "wythoff/decoration.hpp"

using namespace wythoff;

namespace {

Decoration012 deco(const DecoratedDiagram& d, std::vector<std::uint8_t> v) { return Decoration012(d, std::move(v)); }

std::set<NodeSet> s_sets(const std::set<Decoration012>& ds) {
  std::set<NodeSet> out;
  for (const auto& f : ds) out.insert(f.circled());
  return out;
}

}  // namespace

TEST_CASE("rule star") {
  const auto a3 = parse("o3x3x");
  CHECK(apply_star(a3, deco(a3, {0, 1, 1}), 1).values() == std::vector<std::uint8_t>{1, 2, 1});

  // Truncated cube diagram: cross, box, box with the label 4 on the right edge.
  const auto tc = parse("o3x4x");
  CHECK(apply_star(tc, Decoration012::from_marks(tc), 1).values() == std::vector<std::uint8_t>{1, 2, 1});

  const auto seg = parse("x");
  CHECK(apply_star(seg, Decoration012::from_marks(seg), 0).values() == std::vector<std::uint8_t>{2});

  CHECK_THROWS_AS(apply_star(a3, deco(a3, {0, 1, 1}), 0), NotApplicable);
  CHECK_THROWS_AS(apply_star(a3, deco(a3, {1, 2, 1}), 1), NotApplicable);
  CHECK_THROWS_AS(deco(a3, {2, 0, 1}), NotApplicable);
  CHECK_THROWS_AS(deco(a3, {3, 1, 1}), NotApplicable);
}

TEST_CASE("reachable decorations") {
  const auto tc = parse("o3x4x");
  const auto f0 = Decoration012::from_marks(tc);
  const auto r2 = reachable(tc, f0, 2);
  REQUIRE(r2.size() == 2);
  // Restricted to S with the start marks: an octagon and a triangle.
  std::set<std::string> restricted;
  for (const auto& f : r2) {
    const auto sub = tc.induced(f.circled());
    std::vector<std::uint8_t> marks;
    for (int v = 0; v < tc.size(); ++v)
      if (contains(f.circled(), v)) marks.push_back(f0[v]);
    restricted.insert(to_inline(sub.with_marks(marks)));
  }
  CHECK(restricted == std::set<std::string>{"x4x", "o3x"});

  CHECK(reachable(tc, f0, 0) == std::set<Decoration012>{f0});

  const auto a3 = parse("x3o3o");
  const auto r = reachable(a3, Decoration012::from_marks(a3), 2);
  REQUIRE(r.size() == 1);
  CHECK(r.begin()->circled() == (bit(0) | bit(1)));
  CHECK(reachable(a3, Decoration012::from_marks(a3), 4).empty());
}

TEST_CASE("valid S sets") {
  const auto a3 = parse("x3o3o");
  const auto f0 = Decoration012::from_marks(a3);
  CHECK(valid_S_sets(a3, f0, 2) == std::vector<NodeSet>{bit(0) | bit(1)});
  CHECK_FALSE(is_valid_S(a3, f0, bit(0) | bit(2)));
  const auto mid = parse("o3x3o");
  CHECK(valid_S_sets(mid, Decoration012::from_marks(mid), 1) == std::vector<NodeSet>{bit(1)});
  for (const char* s : {"x4o3o", "o3x3o4o", "x5x3o3x"}) {
    const auto d = parse(s);
    CHECK(valid_S_sets(d, Decoration012::from_marks(d), d.size()) == std::vector<NodeSet>{d.all_nodes()});
  }
}

TEST_CASE("decoration from S") {
  const auto tc = parse("o3x4x");
  const auto f0 = Decoration012::from_marks(tc);
  CHECK(decoration_from_S(tc, f0, bit(1) | bit(2)).values() == std::vector<std::uint8_t>{1, 2, 2});
  CHECK(decoration_from_S(tc, f0, 0) == f0);

  const auto d4 = make_family(Family::D, 4, 0, {0, 1, 0, 0});
  const auto g0 = Decoration012::from_marks(d4);
  CHECK(decoration_from_S(d4, g0, bit(1) | bit(0)).values() == std::vector<std::uint8_t>{2, 2, 1, 1});
  CHECK(decoration_from_S(d4, g0, bit(1) | bit(0)) == apply_star(d4, apply_star(d4, g0, 1), 0));
  CHECK_THROWS_AS(decoration_from_S(d4, g0, bit(0)), InvalidS);
}

TEST_CASE("degeneracy") {
  CHECK(is_degenerate(parse("o3o")));
  CHECK_FALSE(is_degenerate(parse("x4o3o")));
  CHECK(is_degenerate(disjoint_union({parse("x"), parse("o3o")})));
  CHECK_FALSE(is_degenerate(disjoint_union({parse("x"), parse("o3x")})));
}

TEST_CASE("stabilizers") {
  const auto cube = parse("x4o3o");
  const auto f0 = Decoration012::from_marks(cube);
  CHECK(stabilizer_generators(f0) == (bit(1) | bit(2)));
  CHECK(stabilizer_order(cube, f0) == 6);
  const auto top = decoration_from_S(cube, f0, cube.all_nodes());
  CHECK(stabilizer_generators(top) == cube.all_nodes());

  const auto tc = parse("o3x4x");
  const auto oct = decoration_from_S(tc, Decoration012::from_marks(tc), bit(1) | bit(2));
  CHECK(stabilizer_generators(oct) == (bit(1) | bit(2)));
  CHECK(stabilizer_order(tc, oct) == 8);
}

TEST_CASE("rank grows by one and never puts a 2 next to a 0") {
  for (const auto& base : testing::all_diagrams(4, 6)) {
    for (const auto& d : testing::decorations(base)) {
      std::set<Decoration012> frontier{Decoration012::from_marks(d)};
      for (int k = 0; k < d.size(); ++k) {
        std::set<Decoration012> next;
        for (const auto& f : frontier)
          for (int w = 0; w < d.size(); ++w)
            if (f[w] == 1) {
              const auto g = apply_star(d, f, w);
              CHECK(g.rank() == f.rank() + 1);
              for (int v = 0; v < d.size(); ++v)
                if (g[v] == 2)
                  for (int u = 0; u < d.size(); ++u)
                    if (d.adjacent(u, v)) CHECK(g[u] != 0);
              next.insert(g);
            }
        CHECK(next == reachable(d, Decoration012::from_marks(d), k + 1));
        frontier = std::move(next);
      }
      if (d.connected()) {
        const auto top = reachable(d, Decoration012::from_marks(d), d.size());
        REQUIRE(top.size() == 1);
        CHECK(top.begin()->circled() == d.all_nodes());
      }
    }
  }
}

TEST_CASE("closure and subset characterization agree") {
  std::size_t checked = 0;
  for (const auto& base : testing::all_diagrams(5, 5)) {
    for (const auto& d : testing::all_markings(base)) {
      const auto f0 = Decoration012::from_marks(d);
      for (int k = 0; k <= d.size(); ++k) {
        const auto r = reachable(d, f0, k);
        const auto v = valid_S_sets(d, f0, k);
        CAPTURE(describe(d));
        CAPTURE(k);
        CHECK(s_sets(r) == std::set<NodeSet>(v.begin(), v.end()));
        std::set<Decoration012> rebuilt;
        for (NodeSet s : v) rebuilt.insert(decoration_from_S(d, f0, s));
        CHECK(rebuilt == r);
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}
