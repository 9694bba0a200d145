#include "wythoff/face_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace wythoff {

std::span<const int> FaceLattice::types_of_rank(int k) const {
  const auto b = static_cast<std::size_t>(type_rank_begin_[static_cast<std::size_t>(k)]);
  const auto e = static_cast<std::size_t>(type_rank_begin_[static_cast<std::size_t>(k + 1)]);
  return {type_order_.data() + b, e - b};
}

FaceId FaceLattice::face_containing(int type, ElementId e) const {
  return face_of(type, types_[static_cast<std::size_t>(type)].cosets.coset_of[e]);
}

std::span<const FaceId> FaceLattice::up(FaceId f) const {
  return {up_.data() + up_begin_[f], up_begin_[f + 1] - up_begin_[f]};
}

std::span<const FaceId> FaceLattice::down(FaceId f) const {
  return {down_.data() + down_begin_[f], down_begin_[f + 1] - down_begin_[f]};
}

FaceId FaceLattice::act(int generator, FaceId f) const {
  const Face& face = faces_[f];
  if (face.type < 0) return f;
  return face_containing(face.type, group_->left(face.rep, generator));
}

FaceId FaceLattice::act_element(ElementId g, FaceId f) const {
  const Face& face = faces_[f];
  if (face.type < 0) return f;
  return face_containing(face.type, group_->compose(g, face.rep));
}

std::vector<ElementId> FaceLattice::coset_elements(FaceId f) const {
  const Face& face = faces_[f];
  std::vector<ElementId> out;
  if (face.type < 0) return out;
  const auto& part = types_[static_cast<std::size_t>(face.type)].cosets;
  for (ElementId e = 0; e < part.coset_of.size(); ++e)
    if (part.coset_of[e] == face.coset) out.push_back(e);
  return out;
}

FaceLattice build_lattice(const DecoratedDiagram& d, std::shared_ptr<const Group> g) {
  const Decoration012 f0 = Decoration012::from_marks(d);
  if (is_degenerate(d, f0)) throw Degenerate("diagram " + describe(d) + " has an all-crossed component");
  if (g->rank() != d.size()) throw SubgroupNotContained("group rank does not match diagram");

  FaceLattice l;
  l.diagram_ = d;
  l.start_ = f0;
  l.group_ = std::move(g);
  const Group& group = *l.group_;
  const int n = d.size();

  l.faces_.push_back(Face{});  // empty face
  l.rank_begin_ = {0, 1};
  l.type_rank_begin_ = {0};
  for (int k = 0; k <= n; ++k) {
    for (NodeSet s : valid_S_sets(d, f0, k)) {
      FaceType t;
      t.decoration = decoration_from_S(d, f0, s);
      t.circled = s;
      t.stabilizer = stabilizer_generators(t.decoration);
      t.cosets = parabolic_cosets(group, t.stabilizer);
      t.first_face = static_cast<FaceId>(l.faces_.size());
      const int type = static_cast<int>(l.types_.size());
      for (std::uint32_t c = 0; c < t.cosets.count(); ++c)
        l.faces_.push_back(Face{k, type, t.cosets.reps[c], c});
      l.types_.push_back(std::move(t));
    }
    l.rank_begin_.push_back(static_cast<FaceId>(l.faces_.size()));
    l.type_rank_begin_.push_back(static_cast<int>(l.types_.size()));
  }
  l.type_order_.resize(l.types_.size());
  std::iota(l.type_order_.begin(), l.type_order_.end(), 0);

  // Covers: (c1, f') < (c2, f'') iff S' ⊂ S'' and the cosets meet.
  for (FaceId v = l.rank_begin(0); v < l.rank_end(0); ++v) l.covers_.emplace_back(0, v);
  std::vector<std::uint64_t> pairs;
  for (int k = 0; k < n; ++k) {
    for (int lo : l.types_of_rank(k)) {
      for (int hi : l.types_of_rank(k + 1)) {
        const FaceType& a = l.types_[static_cast<std::size_t>(lo)];
        const FaceType& b = l.types_[static_cast<std::size_t>(hi)];
        if ((a.circled & ~b.circled) != 0) continue;
        pairs.clear();
        pairs.reserve(group.order());
        for (ElementId e = 0; e < group.order(); ++e) {
          const FaceId fa = a.first_face + a.cosets.coset_of[e];
          const FaceId fb = b.first_face + b.cosets.coset_of[e];
          pairs.push_back((static_cast<std::uint64_t>(fa) << 32) | fb);
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        for (auto p : pairs) l.covers_.emplace_back(static_cast<FaceId>(p >> 32), static_cast<FaceId>(p & 0xffffffffU));
      }
    }
  }
  std::sort(l.covers_.begin(), l.covers_.end());

  const std::size_t count = l.faces_.size();
  l.up_begin_.assign(count + 1, 0);
  l.down_begin_.assign(count + 1, 0);
  for (auto [a, b] : l.covers_) {
    ++l.up_begin_[a + 1];
    ++l.down_begin_[b + 1];
  }
  std::partial_sum(l.up_begin_.begin(), l.up_begin_.end(), l.up_begin_.begin());
  std::partial_sum(l.down_begin_.begin(), l.down_begin_.end(), l.down_begin_.begin());
  l.up_.resize(l.covers_.size());
  l.down_.resize(l.covers_.size());
  auto up_fill = l.up_begin_;
  auto down_fill = l.down_begin_;
  for (auto [a, b] : l.covers_) {
    l.up_[up_fill[a]++] = b;
    l.down_[down_fill[b]++] = a;
  }
  for (FaceId f = 0; f < count; ++f)
    std::sort(l.down_.begin() + l.down_begin_[f], l.down_.begin() + l.down_begin_[f + 1]);
  return l;
}

FaceLattice build_lattice(const DecoratedDiagram& d, std::size_t budget) {
  if (is_degenerate(d)) throw Degenerate("diagram " + describe(d) + " has an all-crossed component");
  return build_lattice(d, enumerate(d, budget));
}

FVector f_vector_enumerated(const FaceLattice& l) {
  FVector out;
  for (int k = 0; k < l.dimension(); ++k) out.emplace_back(l.count(k));
  return out;
}

FVector f_vector_formula(const DecoratedDiagram& d, const Decoration012& f0) {
  if (is_degenerate(d, f0)) throw Degenerate("diagram " + describe(d) + " has an all-crossed component");
  const BigInt order = group_order(d);
  FVector out;
  for (int k = 0; k < d.size(); ++k) {
    BigInt total = 0;
    for (NodeSet s : valid_S_sets(d, f0, k)) total += order / stabilizer_order(d, decoration_from_S(d, f0, s));
    out.push_back(total);
  }
  return out;
}

FVector f_vector_formula(const DecoratedDiagram& d) { return f_vector_formula(d, Decoration012::from_marks(d)); }

std::string to_string(const FVector& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
  return os.str();
}

// Structural checks ----------------------------------------------------------

DiamondReport check_diamond(const FaceLattice& l) {
  DiamondReport report;
  std::vector<std::size_t> between(l.size(), 0);
  std::vector<FaceId> touched;
  for (FaceId lower = 0; lower < l.size(); ++lower) {
    if (l.face(lower).rank > l.dimension() - 2) continue;
    touched.clear();
    for (FaceId mid : l.up(lower))
      for (FaceId upper : l.up(mid)) {
        if (between[upper]++ == 0) touched.push_back(upper);
      }
    for (FaceId upper : touched) {
      ++report.pairs_checked;
      if (between[upper] != 2) report.violations.push_back({lower, upper, between[upper]});
      between[upper] = 0;
    }
  }
  return report;
}

std::uint32_t FlagGraph::find(std::span<const FaceId> flag) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto f = this->flag(mid);
    const bool less = std::lexicographical_compare(f.begin(), f.end(), flag.begin(), flag.end());
    if (less) lo = mid + 1;
    else hi = mid;
  }
  if (lo < size()) {
    auto f = this->flag(lo);
    if (std::equal(f.begin(), f.end(), flag.begin(), flag.end())) return static_cast<std::uint32_t>(lo);
  }
  return kNoFlag;
}

FlagGraph build_flag_graph(const FaceLattice& l) {
  FlagGraph g;
  const int n = l.dimension();
  g.n = n;
  // Depth-first from each vertex upward; up-lists are ascending, so flags come
  // out in lexicographic order.
  std::vector<FaceId> chain(static_cast<std::size_t>(n));
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  for (FaceId v = l.rank_begin(0); v < l.rank_end(0); ++v) {
    chain[0] = v;
    if (n == 1) {
      g.flags.push_back(v);
      continue;
    }
    int depth = 1;
    pos[1] = 0;
    while (depth >= 1) {
      auto ups = l.up(chain[static_cast<std::size_t>(depth - 1)]);
      if (pos[static_cast<std::size_t>(depth)] >= ups.size()) {
        --depth;
        if (depth >= 1) ++pos[static_cast<std::size_t>(depth)];
        continue;
      }
      chain[static_cast<std::size_t>(depth)] = ups[pos[static_cast<std::size_t>(depth)]];
      if (depth == n - 1) {
        g.flags.insert(g.flags.end(), chain.begin(), chain.end());
        ++pos[static_cast<std::size_t>(depth)];
      } else {
        ++depth;
        pos[static_cast<std::size_t>(depth)] = 0;
      }
    }
  }

  const std::size_t count = g.size();
  g.adjacent.assign(count * static_cast<std::size_t>(n), kNoFlag);
  g.neighbour_count.assign(count, 0);
  std::vector<FaceId> probe(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < count; ++i) {
    auto f = g.flag(i);
    for (int r = 0; r < n; ++r) {
      const FaceId below = r == 0 ? l.bottom() : f[static_cast<std::size_t>(r - 1)];
      const FaceId above = r == n - 1 ? l.top() : f[static_cast<std::size_t>(r + 1)];
      auto ups = l.up(below);
      auto downs = l.down(above);
      // Walk the shorter list; the other is only searched.
      const bool walk_up = ups.size() <= downs.size();
      auto walk = walk_up ? ups : downs;
      auto other = walk_up ? downs : ups;
      for (FaceId cand : walk) {
        if (cand == f[static_cast<std::size_t>(r)]) continue;
        if (!std::binary_search(other.begin(), other.end(), cand)) continue;
        std::copy(f.begin(), f.end(), probe.begin());
        probe[static_cast<std::size_t>(r)] = cand;
        const std::uint32_t j = g.find(probe);
        if (j == kNoFlag) continue;
        if (g.adjacent[i * n + r] == kNoFlag) g.adjacent[i * n + r] = j;
        ++g.neighbour_count[i];
      }
    }
  }
  return g;
}

FlagReport check_flag_connected(const FlagGraph& g) {
  FlagReport report;
  report.flags = g.size();
  std::vector<char> seen(g.size(), 0);
  std::vector<std::uint32_t> queue;
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    ++report.components;
    seen[start] = 1;
    queue.assign(1, static_cast<std::uint32_t>(start));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int r = 0; r < g.n; ++r) {
        const std::uint32_t j = g.neighbour(queue[head], r);
        if (j != kNoFlag && !seen[j]) {
          seen[j] = 1;
          queue.push_back(j);
        }
      }
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.neighbour_count[i] != g.n) ++report.wrong_degree;
  report.connected = report.components == 1;
  return report;
}

FlagReport check_flag_connected(const FaceLattice& l) { return check_flag_connected(build_flag_graph(l)); }

bool check_euler(const FVector& f) {
  BigInt sum = 0;
  for (std::size_t k = 0; k < f.size(); ++k) sum += (k % 2 == 0) ? f[k] : BigInt(-f[k]);
  const BigInt expected = f.size() % 2 == 0 ? 0 : 2;
  return sum == expected;
}

bool check_chain_completion(const FaceLattice& l) {
  const int n = l.dimension();
  for (FaceId v = l.rank_begin(0); v < l.rank_end(0); ++v) {
    std::vector<FaceId> frontier{v};
    for (int k = 1; k < n; ++k) {
      std::vector<FaceId> next;
      for (FaceId f : frontier)
        for (FaceId u : l.up(f)) next.push_back(u);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) return false;
      frontier = std::move(next);
    }
  }
  return true;
}

bool check_group_action(const FaceLattice& l) {
  for (int i = 0; i < l.dimension(); ++i) {
    std::vector<FaceId> image(l.size());
    std::vector<char> hit(l.size(), 0);
    for (FaceId f = 0; f < l.size(); ++f) {
      image[f] = l.act(i, f);
      if (l.face(image[f]).rank != l.face(f).rank || hit[image[f]]) return false;
      hit[image[f]] = 1;
    }
    for (auto [a, b] : l.covers()) {
      auto ups = l.up(image[a]);
      if (!std::binary_search(ups.begin(), ups.end(), image[b])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> VertexFigure::counts() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < by_rank.size(); ++k) out.push_back(by_rank[k].size());
  return out;
}

VertexFigure vertex_figure(const FaceLattice& l) {
  const int n = l.dimension();
  VertexFigure vf;
  vf.by_rank.assign(static_cast<std::size_t>(std::max(n, 1)), {});
  std::vector<FaceId> frontier{l.base_vertex()};
  for (int k = 1; k < n; ++k) {
    std::vector<FaceId> next;
    for (FaceId f : frontier)
      for (FaceId u : l.up(f)) next.push_back(u);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    vf.by_rank[static_cast<std::size_t>(k)] = next;
    if (k > 1)
      for (FaceId f : frontier)
        for (FaceId u : l.up(f)) vf.covers.emplace_back(f, u);
    frontier = std::move(next);
  }
  return vf;
}

std::string lattice_document(const FaceLattice& l) {
  nlohmann::ordered_json doc;
  doc["dimension"] = l.dimension();
  doc["diagram"] = describe(l.diagram());
  doc["group_order"] = l.group().order();
  auto& faces = doc["faces"] = nlohmann::ordered_json::array();
  for (FaceId f = 1; f < l.size(); ++f) {
    const Face& face = l.face(f);
    const FaceType& t = l.types()[static_cast<std::size_t>(face.type)];
    nlohmann::ordered_json jf;
    jf["id"] = f - 1;
    jf["rank"] = face.rank;
    auto s = nlohmann::ordered_json::array();
    for (int v = 0; v < l.dimension(); ++v)
      if (contains(t.circled, v)) s.push_back(l.diagram().nodes()[static_cast<std::size_t>(v)].id);
    jf["S"] = s;
    jf["coset"] = face.rep;
    faces.push_back(jf);
  }
  auto& covers = doc["covers"] = nlohmann::ordered_json::array();
  for (auto [a, b] : l.covers())
    if (a != l.bottom()) covers.push_back({a - 1, b - 1});
  return doc.dump();
}

bool lattices_isomorphic(const FaceLattice& a, const FaceLattice& b) {
  if (a.dimension() != b.dimension()) return false;
  if (f_vector_enumerated(a) != f_vector_enumerated(b)) return false;
  const FlagGraph ga = build_flag_graph(a);
  const FlagGraph gb = build_flag_graph(b);
  if (ga.size() != gb.size()) return false;
  if (ga.size() == 0) return true;
  const int n = ga.n;
  std::vector<std::uint32_t> map(ga.size()), used(gb.size());
  std::vector<std::uint32_t> queue;
  for (std::size_t target = 0; target < gb.size(); ++target) {
    std::fill(map.begin(), map.end(), kNoFlag);
    std::fill(used.begin(), used.end(), 0);
    map[0] = static_cast<std::uint32_t>(target);
    used[target] = 1;
    queue.assign(1, 0);
    bool ok = true;
    for (std::size_t head = 0; ok && head < queue.size(); ++head) {
      const std::uint32_t x = queue[head];
      for (int r = 0; r < n && ok; ++r) {
        const std::uint32_t xa = ga.neighbour(x, r);
        const std::uint32_t yb = gb.neighbour(map[x], r);
        if ((xa == kNoFlag) != (yb == kNoFlag)) { ok = false; break; }
        if (xa == kNoFlag) continue;
        if (map[xa] == kNoFlag) {
          if (used[yb]) { ok = false; break; }
          map[xa] = yb;
          used[yb] = 1;
          queue.push_back(xa);
        } else if (map[xa] != yb) {
          ok = false;
        }
      }
    }
    if (ok && queue.size() == ga.size()) return true;
  }
  return false;
}

}  // namespace wythoff
