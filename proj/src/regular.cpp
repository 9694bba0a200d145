#include "wythoff/regular.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

namespace wythoff {

namespace {

std::string rank_word(int k) { return std::to_string(k) + "-faces"; }

/// Nodes of a path component, walked from `start` (or the lowest end).
std::vector<int> walk_path(const DecoratedDiagram& d, NodeSet c, int start = -1) {
  if (start < 0) {
    for (int v = 0; v < d.size(); ++v)
      if (contains(c, v) && popcount(d.neighbours(v) & c) <= 1) {
        start = v;
        break;
      }
  }
  std::vector<int> out{start};
  NodeSet seen = bit(start);
  while (true) {
    const NodeSet next = d.neighbours(out.back()) & c & ~seen;
    if (!next) break;
    const int v = std::countr_zero(next);
    out.push_back(v);
    seen |= bit(v);
  }
  return out;
}

/// Path oriented so that the edge with label `m` comes first.
std::vector<int> oriented_path(const DecoratedDiagram& d, NodeSet c, int m) {
  auto p = walk_path(d, c);
  if (p.size() >= 2 && d.label(p[0], p[1]) != m) std::reverse(p.begin(), p.end());
  return p;
}

int position(const std::vector<int>& path, int v) {
  return static_cast<int>(std::find(path.begin(), path.end(), v) - path.begin());
}

/// A component of a disconnected regular diagram: one ringed node, either
/// alone or at the end of a B-chain carrying the 4.
bool hypercube_part(const DecoratedDiagram& d, NodeSet c, NodeSet rings) {
  const NodeSet r = c & rings;
  if (popcount(r) != 1) return false;
  if (popcount(c) == 1) return true;
  const FamilyTag tag = classify_component(d, c);
  if (tag.family != Family::B) return false;
  const int v = std::countr_zero(r);
  const NodeSet nb = d.neighbours(v) & c;
  return popcount(nb) == 1 && d.label(v, std::countr_zero(nb)) == 4;
}

std::string simplex(int n) { return std::to_string(n) + "-simplex"; }
std::string hypercube(int n) { return std::to_string(n) + "-hypercube"; }
std::string hyperoctahedron(int n) { return std::to_string(n) + "-hyperoctahedron"; }

const std::map<std::string, std::string>& alias_table() {
  static const std::map<std::string, std::string> table{
      {"3-simplex", "tetrahedron"}, {"3-hypercube", "cube"}, {"3-hyperoctahedron", "octahedron"},
      {"4-simplex", "5-cell"},      {"4-hypercube", "tesseract"}, {"4-hyperoctahedron", "16-cell"},
  };
  return table;
}

const std::map<std::string, std::pair<int, std::vector<long>>>& exceptional_table() {
  static const std::map<std::string, std::pair<int, std::vector<long>>> table{
      {"icosahedron", {3, {12, 30, 20}}},
      {"dodecahedron", {3, {20, 30, 12}}},
      {"24-cell", {4, {24, 96, 96, 24}}},
      {"120-cell", {4, {600, 1200, 720, 120}}},
      {"600-cell", {4, {120, 720, 1200, 600}}},
  };
  return table;
}

const std::vector<std::string>& polygon_words() {
  static const std::vector<std::string> words{"",        "",        "",         "triangle", "square",
                                              "pentagon", "hexagon", "heptagon", "octagon",  "nonagon",
                                              "decagon",  "hendecagon", "dodecagon"};
  return words;
}

/// Canonical (name, dimension), or nullopt.
std::optional<std::pair<std::string, int>> resolve_name(std::string name) {
  if (auto paren = name.find(" ("); paren != std::string::npos) name.resize(paren);
  for (const auto& [canonical, alias] : alias_table())
    if (name == alias || name == canonical) return std::pair{canonical, canonical[0] - '0'};
  if (auto it = exceptional_table().find(name); it != exceptional_table().end()) return std::pair{name, it->second.first};
  if (name == "segment") return std::pair{name, 1};
  const auto& words = polygon_words();
  for (std::size_t p = 3; p < words.size(); ++p)
    if (name == words[p]) return std::pair{name, 2};
  const auto dash = name.find('-');
  if (dash == std::string::npos || dash == 0) return std::nullopt;
  int num = 0;
  for (std::size_t i = 0; i < dash; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    num = num * 10 + (name[i] - '0');
    if (num > 1000) return std::nullopt;
  }
  const std::string kind = name.substr(dash + 1);
  if (kind == "gon" && num >= 3) return std::pair{polygon_name(num), 2};
  if (num == 2 && kind == "simplex") return std::pair{std::string("triangle"), 2};
  if (num == 2 && (kind == "hypercube" || kind == "hyperoctahedron")) return std::pair{std::string("square"), 2};
  if (num >= 3 && num <= kMaxNodes && (kind == "simplex" || kind == "hypercube" || kind == "hyperoctahedron"))
    return std::pair{name, num};
  return std::nullopt;
}

int polygon_sides(const std::string& name) {
  const auto& words = polygon_words();
  for (std::size_t p = 3; p < words.size(); ++p)
    if (name == words[p]) return static_cast<int>(p);
  if (name.size() > 4 && name.ends_with("-gon")) return std::stoi(name.substr(0, name.size() - 4));
  return 0;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string face_name(const DecoratedDiagram& face) {
  if (face.size() == 2) {
    const FVector f = f_vector_formula(face);
    return polygon_name(static_cast<int>(f[0]));
  }
  const RegularVerdict v = is_regular_ruled(face, false);
  if (v.regular) {
    auto it = alias_table().find(v.name);
    return it != alias_table().end() ? it->second : v.name;
  }
  return display_text(face);
}

void add_witness(const DecoratedDiagram& d, RegularVerdict& verdict) {
  const Decoration012 f0 = Decoration012::from_marks(d);
  for (int k = 2; k < d.size(); ++k) {
    struct Candidate {
      BigInt vertices;
      std::string signature;
      Decoration012 decoration;
      DecoratedDiagram face;
    };
    std::vector<Candidate> faces;
    for (const auto& f : reachable(d, f0, k)) {
      DecoratedDiagram face = d.induced(f.with_value(2));
      faces.push_back({f_vector_formula(face)[0], face_signature(face), f, std::move(face)});
    }
    std::stable_sort(faces.begin(), faces.end(), [](const Candidate& a, const Candidate& b) {
      if (a.vertices != b.vertices) return a.vertices > b.vertices;
      return a.signature < b.signature;
    });
    for (std::size_t i = 1; i < faces.size(); ++i) {
      if (faces[i].signature == faces[0].signature) continue;
      verdict.witness_rank = k;
      for (const auto* c : {&faces[0], &faces[i]})
        verdict.witness.push_back({c->decoration, c->face, face_name(c->face)});
      return;
    }
  }
}

RegularVerdict ruled_connected(const DecoratedDiagram& d) {
  RegularVerdict v;
  const int n = d.size();
  const NodeSet all = d.all_nodes();
  const NodeSet rings = d.ringed();
  if (popcount(rings) != 1) return v;
  const int r = std::countr_zero(rings);
  const FamilyTag tag = classify_component(d, all);
  auto accept = [&](std::string name, std::string rule) {
    v.regular = true;
    v.name = std::move(name);
    v.rule = std::move(rule);
  };
  switch (tag.family) {
    case Family::A: {
      const int pos = position(walk_path(d, all), r);
      if (pos == 0 || pos == n - 1) accept(simplex(n), "A-end");
      else if (n == 3) accept(hyperoctahedron(3), "A3-middle");
      break;
    }
    case Family::B: {
      const int pos = position(oriented_path(d, all, 4), r);
      if (pos == 0) accept(hypercube(n), "B-4end");
      else if (pos == n - 1) accept(hyperoctahedron(n), "B-3end");
      else if (n == 4 && pos == 2) accept("24-cell", "B4-interior");
      break;
    }
    case Family::H: {
      const int pos = position(oriented_path(d, all, 5), r);
      if (n == 3 && pos == 0) accept("dodecahedron", "H3-5end");
      if (n == 3 && pos == 2) accept("icosahedron", "H3-3end");
      if (n == 4 && pos == 0) accept("120-cell", "H4-5end");
      if (n == 4 && pos == 3) accept("600-cell", "H4-3end");
      break;
    }
    case Family::F: {
      const int pos = position(walk_path(d, all), r);
      if (pos == 0 || pos == 3) accept("24-cell", "F4-end");
      break;
    }
    case Family::D: {
      int branch = -1;
      for (int u = 0; u < n; ++u)
        if (popcount(d.neighbours(u)) == 3) branch = u;
      if (n == 4) {
        if (r == branch) accept("24-cell", "D4-centre");
        else accept(hyperoctahedron(4), "D4-leaf");
        break;
      }
      // The long arm is the one with more than one node.
      const NodeSet arms = all & ~bit(branch);
      for (NodeSet arm : d.components(arms)) {
        if (popcount(arm) < 2 || !contains(arm, r)) continue;
        if (popcount(d.neighbours(r)) == 1) accept(hyperoctahedron(n), "D-long-end");
      }
      break;
    }
    case Family::E:
    case Family::I2:
      break;
  }
  return v;
}

}  // namespace

std::string polygon_name(int p) {
  const auto& words = polygon_words();
  if (p >= 3 && p < static_cast<int>(words.size())) return words[static_cast<std::size_t>(p)];
  return std::to_string(p) + "-gon";
}

std::string RegularVerdict::text() const {
  if (regular) {
    auto it = alias_table().find(name);
    return "regular: " + (it != alias_table().end() ? name + " (" + it->second + ")" : name);
  }
  if (witness.size() < 2) return "not regular";
  return "not regular: " + rank_word(witness_rank) + " " + witness[0].name + " vs " + witness[1].name;
}

RegularVerdict is_regular_ruled(const DecoratedDiagram& d, bool with_witness) {
  const Decoration012 f0 = Decoration012::from_marks(d);
  if (is_degenerate(d, f0)) throw Degenerate("some component of " + describe(d) + " has no ringed node");
  const int n = d.size();
  const NodeSet rings = d.ringed();
  RegularVerdict v;
  if (n == 1) {
    v.regular = true;
    v.name = "segment";
    v.rule = "segment";
    return v;
  }
  if (n == 2) {
    v.regular = true;
    if (!d.connected()) {
      v.name = polygon_name(4);
      v.rule = "disconnected-hypercube";
    } else if (popcount(rings) == 1) {
      v.name = polygon_name(d.label(0, 1));
      v.rule = "polygon";
    } else {
      v.name = polygon_name(2 * d.label(0, 1));
      v.rule = "polygon-2k";
    }
    return v;
  }
  if (!d.connected()) {
    const auto comps = d.components();
    v.regular = std::all_of(comps.begin(), comps.end(), [&](NodeSet c) { return hypercube_part(d, c, rings); });
    if (v.regular) {
      v.name = hypercube(n);
      v.rule = "disconnected-hypercube";
    }
  } else {
    v = ruled_connected(d);
  }
  if (!v.regular && with_witness) add_witness(d, v);
  return v;
}

bool oracle_whitelisted(const std::string& rule) {
  static const std::set<std::string> rules{"polygon-2k", "A3-middle", "D-long-end", "D4-leaf",
                                           "D4-centre",  "B4-interior", "disconnected-hypercube"};
  return rules.contains(rule);
}

namespace {

template <typename Step>
OracleResult count_orbits(const FlagGraph& flags, int generators, Step step) {
  OracleResult out;
  out.flags = flags.size();
  std::vector<char> seen(out.flags, 0);
  std::vector<std::uint32_t> queue;
  std::vector<FaceId> image(static_cast<std::size_t>(flags.n));
  for (std::size_t start = 0; start < out.flags; ++start) {
    if (seen[start]) continue;
    ++out.orbits;
    seen[start] = 1;
    queue.assign(1, static_cast<std::uint32_t>(start));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto flag = flags.flag(queue[head]);
      for (int gen = 0; gen < generators; ++gen) {
        for (int k = 0; k < flags.n; ++k) image[static_cast<std::size_t>(k)] = step(gen, flag[static_cast<std::size_t>(k)]);
        const std::uint32_t next = flags.find(image);
        if (next == kNoFlag) throw DedupCollision("generator image of a flag is not a flag");
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      }
    }
  }
  return out;
}

}  // namespace

OracleResult flag_orbits(const FaceLattice& l, const FlagGraph& flags) {
  return count_orbits(flags, l.dimension(), [&](int gen, FaceId f) { return l.act(gen, f); });
}

OracleResult flag_orbits(const FaceLattice& l) { return flag_orbits(l, build_flag_graph(l)); }

bool is_regular_oracle(const FaceLattice& l) { return flag_orbits(l).transitive(); }

OracleResult augmented_flag_orbits(const FaceLattice& l, const Realization& r, const FlagGraph& flags) {
  const int n = l.dimension();
  std::vector<VertexPerm> perms;
  for (int i = 0; i < n; ++i) {
    auto p = vertex_permutation(r, l.group().normals().reflection(i));
    if (!p) throw DedupCollision("simple reflection does not permute the vertices");
    perms.push_back(std::move(*p));
  }
  if (n >= 2) {
    RidgeReport ridges = ridge_reflection_check(l, r);
    for (auto& p : ridges.reflections) perms.push_back(std::move(p));
  }
  std::map<std::vector<std::uint32_t>, FaceId> by_vertices;
  for (FaceId f = 1; f < l.size(); ++f) by_vertices.emplace(r.vertices_of(f), f);
  std::vector<std::vector<FaceId>> table(perms.size(), std::vector<FaceId>(l.size(), kNoFace));
  std::vector<std::uint32_t> image;
  for (std::size_t g = 0; g < perms.size(); ++g) {
    for (FaceId f = 1; f < l.size(); ++f) {
      image.clear();
      for (auto v : r.vertices_of(f)) image.push_back(perms[g][v]);
      std::sort(image.begin(), image.end());
      auto it = by_vertices.find(image);
      if (it != by_vertices.end() && l.face(it->second).rank == l.face(f).rank) table[g][f] = it->second;
    }
  }
  return count_orbits(flags, static_cast<int>(perms.size()), [&](int gen, FaceId f) {
    return table[static_cast<std::size_t>(gen)][f];
  });
}

namespace {

OracleAgreement compare(const FaceLattice& l, const FlagGraph& flags, const std::function<const Realization&()>& realization) {
  OracleAgreement out;
  out.ruled = is_regular_ruled(l.diagram(), true);
  out.plain = flag_orbits(l, flags);
  out.agree = out.ruled.regular == out.plain.transitive();
  if (!out.agree && out.ruled.regular && oracle_whitelisted(out.ruled.rule)) {
    out.whitelisted = true;
    out.augmented = augmented_flag_orbits(l, realization(), flags);
    out.agree = out.augmented->transitive();
  }
  return out;
}

}  // namespace

OracleAgreement compare_with_oracle(const DecoratedDiagram& d, std::size_t budget) {
  const FaceLattice l = build_lattice(d, budget);
  std::optional<Realization> r;
  return compare(l, build_flag_graph(l), [&]() -> const Realization& {
    if (!r) r = realize(l);
    return *r;
  });
}

OracleAgreement compare_with_oracle(const FaceLattice& l, const FlagGraph& flags, const Realization& r) {
  return compare(l, flags, [&]() -> const Realization& { return r; });
}

std::string canonical_key(const DecoratedDiagram& d) {
  std::function<std::string(int, int, NodeSet)> rooted = [&](int v, int parent, NodeSet c) {
    std::vector<std::string> children;
    const NodeSet nb = d.neighbours(v) & c;
    for (int u = 0; u < d.size(); ++u)
      if (contains(nb, u) && u != parent) children.push_back(std::to_string(d.label(v, u)) + rooted(u, v, c));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    s += d.nodes()[static_cast<std::size_t>(v)].mark == Mark::ring ? 'x' : 'o';
    for (const auto& child : children) s += child;
    return s + ")";
  };
  std::vector<std::string> parts;
  for (NodeSet c : d.components()) {
    std::string best;
    for (int v = 0; v < d.size(); ++v) {
      if (!contains(c, v)) continue;
      std::string s = rooted(v, -1, c);
      if (best.empty() || s < best) best = std::move(s);
    }
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += (key.empty() ? "" : "+") + p;
  return key;
}

std::string face_signature(const DecoratedDiagram& d) {
  const Decoration012 f0 = Decoration012::from_marks(d);
  std::string sig = to_string(f_vector_formula(d, f0));
  const BigInt order = group_order(d);
  for (int k = 2; k < d.size(); ++k) {
    std::map<std::string, BigInt> faces;
    for (NodeSet s : valid_S_sets(d, f0, k)) {
      const BigInt count = order / stabilizer_order(d, decoration_from_S(d, f0, s));
      faces[to_string(f_vector_formula(d.induced(s)))] += count;
    }
    sig += " |" + std::to_string(k) + ":";
    for (const auto& [fv, count] : faces) sig += " [" + fv + "]x" + count.str();
  }
  return sig;
}

std::optional<FVector> expected_f_vector(const std::string& name, int dimension) {
  const auto resolved = resolve_name(name);
  if (!resolved || resolved->second != dimension) return std::nullopt;
  const auto& [canonical, n] = *resolved;
  FVector f;
  if (n == 1) return FVector{2};
  if (n == 2) {
    const BigInt p = polygon_sides(canonical);
    return FVector{p, p};
  }
  if (auto it = exceptional_table().find(canonical); it != exceptional_table().end()) {
    for (long x : it->second.second) f.push_back(x);
    return f;
  }
  for (int k = 0; k < n; ++k) {
    if (canonical.ends_with("-simplex")) f.push_back(binomial(n + 1, k + 1));
    else if (canonical.ends_with("-hypercube")) f.push_back(binomial(n, k) * (BigInt{1} << (n - k)));
    else f.push_back(binomial(n, k + 1) * (BigInt{1} << (k + 1)));
  }
  return f;
}

namespace {

/// Connected finite-type diagrams of each rank up to n, all crossed.
std::vector<std::vector<DecoratedDiagram>> component_catalog(int n, int kmax) {
  std::vector<std::vector<DecoratedDiagram>> by_rank(static_cast<std::size_t>(n + 1));
  for (int r = 1; r <= n; ++r) {
    auto& out = by_rank[static_cast<std::size_t>(r)];
    if (r == 1) out.push_back(make_family(Family::A, 1));
    if (r == 2)
      for (int k = 3; k <= kmax; ++k) out.push_back(make_family(Family::I2, 2, k));
    if (r >= 3) {
      out.push_back(make_family(Family::A, r));
      out.push_back(make_family(Family::B, r));
    }
    if (r >= 4) out.push_back(make_family(Family::D, r));
    if (r >= 6 && r <= 8) out.push_back(make_family(Family::E, r));
    if (r == 4) out.push_back(make_family(Family::F, 4));
    if (r == 3 || r == 4) out.push_back(make_family(Family::H, r));
  }
  return by_rank;
}

int sort_class(const std::string& name) {
  if (name.ends_with("-simplex")) return 0;
  if (name.ends_with("-hypercube")) return 1;
  if (name.ends_with("-hyperoctahedron")) return 2;
  return 3;
}

std::vector<std::uint8_t> mask_marks(unsigned mask, int n) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
  return m;
}

bool verify_construction(const DecoratedDiagram& d, const FVector& expected, std::size_t budget) {
  if (f_vector_formula(d) != expected) return false;
  const FaceLattice l = build_lattice(d, budget);
  if (f_vector_enumerated(l) != expected) return false;
  const OracleAgreement a = compare_with_oracle(l, build_flag_graph(l), realize(l));
  return a.agree && a.ruled.regular;
}

}  // namespace

std::vector<CatalogEntry> classify(int n, const ClassifyOptions& options) {
  if (n < 1 || n > kMaxNodes) return {};
  const auto comps = component_catalog(n, options.kmax);
  std::map<std::string, CatalogEntry> entries;
  std::map<std::string, std::set<std::string>> keys;

  auto record = [&](const DecoratedDiagram& d) {
    const RegularVerdict v = is_regular_ruled(d, false);
    if (!v.regular) return;
    auto [it, fresh] = entries.try_emplace(v.name);
    CatalogEntry& e = it->second;
    if (fresh) {
      e.name = v.name;
      if (auto a = alias_table().find(v.name); a != alias_table().end()) e.alias = a->second;
      e.dimension = n;
      e.diagram = d;
      e.f_vector = expected_f_vector(v.name, n).value_or(FVector{});
    }
    if (keys[v.name].insert(canonical_key(d)).second) e.constructions.push_back(d);
  };

  // Multisets of components as nondecreasing (rank, index) sequences.
  std::vector<const DecoratedDiagram*> parts;
  std::function<void(int, int, int)> extend = [&](int remaining, int min_rank, int min_index) {
    if (remaining == 0) {
      if (parts.size() == 1) {
        const DecoratedDiagram& c = *parts.front();
        for (unsigned mask = 1; mask < (1U << c.size()); ++mask) record(c.with_marks(mask_marks(mask, c.size())));
        return;
      }
      // Only ring patterns with every component a hypercube part can be
      // regular; the rest are rejected by the same rule without building them.
      std::vector<std::vector<DecoratedDiagram>> choices;
      for (const auto* c : parts) {
        std::vector<DecoratedDiagram> ok;
        for (unsigned mask = 1; mask < (1U << c->size()); ++mask) {
          auto dec = c->with_marks(mask_marks(mask, c->size()));
          if (hypercube_part(dec, dec.all_nodes(), dec.ringed())) ok.push_back(std::move(dec));
        }
        if (ok.empty()) return;
        choices.push_back(std::move(ok));
      }
      std::vector<std::size_t> pick(choices.size(), 0);
      while (true) {
        std::vector<DecoratedDiagram> chosen;
        for (std::size_t i = 0; i < choices.size(); ++i) chosen.push_back(choices[i][pick[i]]);
        record(disjoint_union(chosen));
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
      return;
    }
    for (int r = min_rank; r <= remaining; ++r) {
      const auto& list = comps[static_cast<std::size_t>(r)];
      for (int i = r == min_rank ? min_index : 0; i < static_cast<int>(list.size()); ++i) {
        parts.push_back(&list[static_cast<std::size_t>(i)]);
        extend(remaining - r, r, i);
        parts.pop_back();
      }
    }
  };
  extend(n, 1, 0);

  std::vector<CatalogEntry> out;
  for (auto& [name, e] : entries) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    const int ca = sort_class(a.name), cb = sort_class(b.name);
    if (ca != cb) return ca < cb;
    const BigInt& fa = a.f_vector.back();
    const BigInt& fb = b.f_vector.back();
    if (fa != fb) return fa < fb;
    return a.name < b.name;
  });

  const bool verify = options.verify.value_or(n == 3 || n == 4);
  if (verify) {
    for (auto& e : out) {
      e.verified = !e.f_vector.empty();
      for (const auto& d : e.constructions)
        e.verified = e.verified && verify_construction(d, e.f_vector, options.budget);
    }
  }
  return out;
}

CatalogEntry find_entry(const std::string& name, int kmax) {
  const auto resolved = resolve_name(name);
  if (!resolved) throw UnknownName("unknown polytope name '" + name + "'");
  ClassifyOptions options;
  options.kmax = kmax;
  options.verify = false;
  for (auto& e : classify(resolved->second, options))
    if (e.name == resolved->first) return e;
  throw UnknownName("'" + name + "' does not occur in the catalog");
}

std::vector<DecoratedDiagram> multi_construction_report(const std::string& name, int kmax) {
  return find_entry(name, kmax).constructions;
}

std::string catalog_document(const std::vector<CatalogEntry>& entries) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    if (!e.alias.empty()) j["alias"] = e.alias;
    j["dimension"] = e.dimension;
    j["diagram"] = describe(e.diagram);
    j["decoration"] = e.diagram.marks();
    auto fv = nlohmann::ordered_json::array();
    for (const auto& x : e.f_vector) fv.push_back(x.convert_to<unsigned long long>());
    j["f_vector"] = fv;
    auto cons = nlohmann::ordered_json::array();
    for (const auto& d : e.constructions) cons.push_back(describe(d));
    j["constructions"] = cons;
    j["verified"] = e.verified;
    doc.push_back(j);
  }
  return doc.dump();
}

}  // namespace wythoff
