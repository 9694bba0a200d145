#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <random>

#include "common/sweep.hpp"
#include "wythoff/regular.hpp"

using namespace wythoff;

namespace {

DecoratedDiagram d4(int ring) {
  std::vector<std::uint8_t> m(4, 0);
  m[static_cast<std::size_t>(ring)] = 1;
  return make_family(Family::D, 4, 0, m);
}

DecoratedDiagram d5(int ring) {
  std::vector<std::uint8_t> m(5, 0);
  m[static_cast<std::size_t>(ring)] = 1;
  return make_family(Family::D, 5, 0, m);
}

std::vector<std::string> names(const std::vector<CatalogEntry>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.name);
  return out;
}

}  // namespace

TEST_CASE("ruled verdicts") {
  const auto cube = is_regular_ruled(parse("x4o3o"));
  CHECK(cube.regular);
  CHECK(cube.name == "3-hypercube");
  CHECK(cube.text() == "regular: 3-hypercube (cube)");

  const auto co = is_regular_ruled(parse("o3x4o"));
  CHECK_FALSE(co.regular);
  CHECK(co.witness_rank == 2);
  REQUIRE(co.witness.size() == 2);
  CHECK(co.witness[0].name == "square");
  CHECK(co.witness[1].name == "triangle");
  CHECK(co.text() == "not regular: 2-faces square vs triangle");

  const auto c24 = is_regular_ruled(d4(1));
  CHECK(c24.regular);
  CHECK(c24.name == "24-cell");
  CHECK(c24.rule == "D4-centre");

  struct Case {
    DecoratedDiagram d;
    std::string name;
  };
  const std::vector<Case> positive{
      {parse("x"), "segment"},
      {parse("x5o"), "pentagon"},
      {parse("x5x"), "decagon"},
      {parse("x3o3o"), "3-simplex"},
      {parse("o3o3x"), "3-simplex"},
      {parse("o3x3o"), "3-hyperoctahedron"},
      {parse("o4o3x"), "3-hyperoctahedron"},
      {parse("o3o4x"), "3-hypercube"},
      {parse("x5o3o"), "dodecahedron"},
      {parse("o5o3x"), "icosahedron"},
      {parse("x3o3o3o"), "4-simplex"},
      {parse("x4o3o3o"), "4-hypercube"},
      {parse("o4o3o3x"), "4-hyperoctahedron"},
      {parse("o4o3x3o"), "24-cell"},
      {parse("o3x3o4o"), "24-cell"},
      {parse("x3o4o3o"), "24-cell"},
      {parse("o3o4o3x"), "24-cell"},
      {parse("x5o3o3o"), "120-cell"},
      {parse("o5o3o3x"), "600-cell"},
      {d4(0), "4-hyperoctahedron"},
      {d4(3), "4-hyperoctahedron"},
      {d5(0), "5-hyperoctahedron"},
      {parse("x3o3o3o3o3o3o3o"), "8-simplex"},
      {parse("x4o3o3o3o3o3o3o"), "8-hypercube"},
      {disjoint_union({parse("x"), parse("x")}), "square"},
      {disjoint_union({parse("x"), parse("x4o3o")}), "4-hypercube"},
      {disjoint_union({parse("x4o"), parse("o3o4x")}), "5-hypercube"},
  };
  for (const auto& c : positive) {
    CAPTURE(describe(c.d));
    const auto v = is_regular_ruled(c.d);
    CHECK(v.regular);
    CHECK(v.name == c.name);
    CHECK(v.witness.empty());
  }

  const std::vector<DecoratedDiagram> negative{
      parse("x3x3o"), parse("x4x3o"), parse("o4x3o"), parse("x5o3x"), parse("o5x3o"), parse("x3o3o3x"),
      parse("o3x3o3o"), parse("o4x3o3o"), parse("o3x4o3o"), d4(1).with_marks({1, 1, 0, 0}), d5(4), d5(2),
      make_family(Family::E, 6, 0, {1, 0, 0, 0, 0, 0}), make_family(Family::E, 8, 0, {0, 0, 0, 0, 0, 0, 1, 0}),
      disjoint_union({parse("x"), parse("x3o")}), disjoint_union({parse("x"), parse("x5o")}),
      disjoint_union({parse("x"), parse("x4x")}),
  };
  for (const auto& d : negative) {
    CAPTURE(describe(d));
    const auto v = is_regular_ruled(d);
    CHECK_FALSE(v.regular);
    CHECK(v.witness.size() == 2);
  }

  CHECK_THROWS_AS(is_regular_ruled(parse("o3o3o")), Degenerate);
}

TEST_CASE("witnesses are two non-isomorphic faces of equal rank") {
  for (const auto& base : testing::full_sweep(8)) {
    for (const auto& d : testing::decorations(base)) {
      const auto v = is_regular_ruled(d);
      if (v.regular) continue;
      CAPTURE(describe(d));
      REQUIRE(v.witness.size() == 2);
      const auto& [a, b] = std::pair{v.witness[0], v.witness[1]};
      CHECK(a.decoration.rank() == v.witness_rank);
      CHECK(b.decoration.rank() == v.witness_rank);
      CHECK(reachable(d, Decoration012::from_marks(d), v.witness_rank).contains(a.decoration));
      CHECK(reachable(d, Decoration012::from_marks(d), v.witness_rank).contains(b.decoration));
      CHECK(face_signature(a.face) != face_signature(b.face));
      CHECK(f_vector_formula(a.face)[0] >= f_vector_formula(b.face)[0]);
      CHECK(a.name != b.name);
    }
  }
}

TEST_CASE("flag orbits") {
  const auto cube = build_lattice(parse("x4o3o"));
  const auto oc = flag_orbits(cube);
  CHECK(oc.flags == 48);
  CHECK(oc.orbits == 1);
  CHECK(is_regular_oracle(cube));

  const auto tc = build_lattice(parse("o3x4x"));
  const auto ot = flag_orbits(tc);
  CHECK(ot.flags == 144);
  CHECK(ot.orbits == 3);
  CHECK_FALSE(is_regular_oracle(tc));

  const auto oct = build_lattice(parse("x4x"));
  const auto oo = flag_orbits(oct);
  CHECK(oo.flags == 16);
  CHECK(oo.orbits == 2);
  const auto aug = augmented_flag_orbits(oct, realize(oct), build_flag_graph(oct));
  CHECK(aug.transitive());
  const auto agreement = compare_with_oracle(parse("x4x"));
  CHECK(agreement.ruled.regular);
  CHECK(agreement.whitelisted);
  CHECK(agreement.agree);

  CHECK_FALSE(augmented_flag_orbits(tc, realize(tc), build_flag_graph(tc)).transitive());
}

TEST_CASE("ruled verdict agrees with the oracle in dimensions 3 and 4") {
  std::size_t checked = 0, whitelisted = 0;
  for (const auto& base : testing::full_sweep(12)) {
    if (base.size() < 3 || group_order(base) > 2000) continue;
    for (const auto& d : testing::decorations(base)) {
      CAPTURE(describe(d));
      const auto a = compare_with_oracle(d);
      CHECK(a.agree);
      if (a.whitelisted) {
        CHECK(oracle_whitelisted(a.ruled.rule));
        REQUIRE(a.augmented);
        CHECK(a.augmented->transitive());
        ++whitelisted;
      } else {
        CHECK(a.ruled.regular == a.plain.transitive());
      }
      ++checked;
    }
  }
  CHECK(checked > 300);
  CHECK(whitelisted > 5);
}

TEST_CASE("canonical keys") {
  CHECK(canonical_key(parse("x4o3o")) == canonical_key(parse("o3o4x")));
  CHECK(canonical_key(parse("x4o3o")) != canonical_key(parse("o4o3x")));
  CHECK(canonical_key(parse("x4o")) == canonical_key(parse("o4x")));
  CHECK(canonical_key(d4(0)) == canonical_key(d4(2)));
  CHECK(canonical_key(d4(0)) != canonical_key(d4(1)));
  CHECK(canonical_key(disjoint_union({parse("x"), parse("x4o")})) ==
        canonical_key(disjoint_union({parse("o4x"), parse("x")})));

  std::mt19937 rng(3);
  for (const auto& base : {make_family(Family::E, 7), make_family(Family::D, 6), make_family(Family::F, 4)}) {
    for (const auto& d : testing::decorations(base)) {
      std::vector<int> perm(static_cast<std::size_t>(d.size()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Node> nodes(perm.size());
      for (std::size_t v = 0; v < perm.size(); ++v) nodes[static_cast<std::size_t>(perm[v])] = d.nodes()[v];
      std::vector<Edge> edges;
      for (const auto& e : d.edges()) edges.push_back({perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)], e.m});
      const DecoratedDiagram p(nodes, edges);
      CHECK(canonical_key(p) == canonical_key(d));
      CHECK(is_regular_ruled(p, false).regular == is_regular_ruled(d, false).regular);
    }
  }
}

TEST_CASE("classification") {
  const auto two = classify(2);
  CHECK(two.size() == 16);
  CHECK(two.front().name == "triangle");
  CHECK(two.back().name == "24-gon");
  for (int k = 3; k <= 12; ++k) {
    CHECK(find_entry(polygon_name(k)).dimension == 2);
    CHECK(find_entry(polygon_name(2 * k)).dimension == 2);
  }

  const auto three = classify(3);
  CHECK(names(three) == std::vector<std::string>{"3-simplex", "3-hypercube", "3-hyperoctahedron", "dodecahedron", "icosahedron"});
  for (const auto& e : three) CHECK(e.verified);

  const auto four = classify(4);
  CHECK(names(four) == std::vector<std::string>{"4-simplex", "4-hypercube", "4-hyperoctahedron", "24-cell", "120-cell",
                                                "600-cell"});
  for (const auto& e : four) CHECK(e.verified);

  for (int n = 5; n <= 8; ++n) {
    const auto entries = classify(n);
    CHECK(names(entries) == std::vector<std::string>{std::to_string(n) + "-simplex", std::to_string(n) + "-hypercube",
                                                     std::to_string(n) + "-hyperoctahedron"});
  }
}

TEST_CASE("catalog f-vectors are consistent and dual") {
  const std::map<std::string, std::string> dual{
      {"icosahedron", "dodecahedron"}, {"dodecahedron", "icosahedron"}, {"24-cell", "24-cell"},
      {"120-cell", "600-cell"},        {"600-cell", "120-cell"},
  };
  for (int n = 2; n <= 8; ++n) {
    const auto entries = classify(n, {.kmax = 8, .verify = false});
    for (const auto& e : entries) {
      CAPTURE(e.name);
      for (const auto& c : e.constructions) CHECK(f_vector_formula(c) == e.f_vector);
      CHECK(expected_f_vector(e.name, n) == e.f_vector);
      CHECK(check_euler(e.f_vector));
      std::string other = e.name;
      if (n == 2) other = e.name;
      else if (e.name.ends_with("-hypercube")) other = std::to_string(n) + "-hyperoctahedron";
      else if (e.name.ends_with("-hyperoctahedron")) other = std::to_string(n) + "-hypercube";
      else if (dual.contains(e.name)) other = dual.at(e.name);
      const auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& x) { return x.name == other; });
      REQUIRE(it != entries.end());
      FVector reversed(e.f_vector.rbegin(), e.f_vector.rend());
      CHECK(reversed == it->f_vector);
    }
  }
}

TEST_CASE("multiple constructions") {
  const auto cell24 = multi_construction_report("24-cell");
  REQUIRE(cell24.size() == 3);
  std::set<std::string> families;
  for (const auto& d : cell24) {
    CHECK(f_vector_formula(d) == *expected_f_vector("24-cell", 4));
    families.insert(classify_components(d)[0].name());
  }
  CHECK(families == std::set<std::string>{"B4", "D4", "F4"});

  const auto octa = multi_construction_report("octahedron");
  REQUIRE(octa.size() == 2);
  std::set<std::string> keys;
  for (const auto& d : octa) keys.insert(canonical_key(d));
  CHECK(keys == std::set<std::string>{canonical_key(parse("o4o3x")), canonical_key(parse("o3x3o"))});
  CHECK(multi_construction_report("3-hyperoctahedron").size() == 2);

  const auto square = multi_construction_report("square");
  REQUIRE(square.size() == 2);
  CHECK(canonical_key(square[0]) == canonical_key(disjoint_union({parse("x"), parse("x")})));
  CHECK(canonical_key(square[1]) == canonical_key(parse("x4o")));

  CHECK(find_entry("tesseract").name == "4-hypercube");
  CHECK(find_entry("600-cell").dimension == 4);
  CHECK_THROWS_AS(find_entry("rhombicuboctahedron"), UnknownName);
  CHECK_THROWS_AS(multi_construction_report("11-cell"), UnknownName);
}

TEST_CASE("catalog document") {
  const auto doc = nlohmann::json::parse(catalog_document(classify(3, {.verify = false})));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 5);
  CHECK(doc[1]["name"] == "3-hypercube");
  CHECK(doc[1]["f_vector"] == nlohmann::json::array({8, 12, 6}));
  CHECK(doc[1]["constructions"].size() == 3);
}

TEST_CASE("polygon names") {
  CHECK(polygon_name(3) == "triangle");
  CHECK(polygon_name(4) == "square");
  CHECK(polygon_name(12) == "dodecagon");
  CHECK(polygon_name(13) == "13-gon");
}
