#include "wythoff/decoration.hpp"

#include <sstream>

namespace wythoff {

Decoration012::Decoration012(const DecoratedDiagram& d, std::vector<std::uint8_t> values)
    : values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != d.size()) throw NotApplicable("decoration size does not match diagram");
  for (auto v : values_)
    if (v > 2) throw NotApplicable("decoration value out of range");
  const NodeSet zeros = with_value(0);
  for (int v = 0; v < d.size(); ++v) {
    if (values_[static_cast<std::size_t>(v)] == 2 && (d.neighbours(v) & zeros))
      throw NotApplicable("node " + d.nodes()[static_cast<std::size_t>(v)].id + " has value 2 next to a 0");
  }
}

Decoration012 Decoration012::from_marks(const DecoratedDiagram& d) { return Decoration012(d, d.marks()); }

NodeSet Decoration012::with_value(std::uint8_t value) const {
  NodeSet s = 0;
  for (std::size_t v = 0; v < values_.size(); ++v)
    if (values_[v] == value) s |= bit(static_cast<int>(v));
  return s;
}

std::string Decoration012::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t v = 0; v < values_.size(); ++v) os << (v ? "," : "") << int{values_[v]};
  os << ")";
  return os.str();
}

Decoration012 apply_star(const DecoratedDiagram& d, const Decoration012& f, int w) {
  if (w < 0 || w >= f.size() || f[w] != 1)
    throw NotApplicable("rule (*) needs a node with value 1");
  std::vector<std::uint8_t> out(f.values());
  for (int v = 0; v < f.size(); ++v) {
    std::uint8_t& x = out[static_cast<std::size_t>(v)];
    if (f[v] == 2 || v == w) x = 2;
    else if (f[v] == 1 || d.adjacent(v, w)) x = 1;
    else x = 0;
  }
  return Decoration012(d, std::move(out));
}

std::set<Decoration012> reachable(const DecoratedDiagram& d, const Decoration012& f0, int k) {
  std::set<Decoration012> level{f0};
  for (int step = 0; step < k; ++step) {
    std::set<Decoration012> next;
    for (const auto& f : level)
      for (int w = 0; w < f.size(); ++w)
        if (f[w] == 1) next.insert(apply_star(d, f, w));
    level = std::move(next);
  }
  return level;
}

bool is_valid_S(const DecoratedDiagram& d, const Decoration012& f0, NodeSet s) {
  const NodeSet rings = f0.with_value(1);
  for (NodeSet c : d.components(s))
    if (!(c & rings)) return false;
  return true;
}

std::vector<NodeSet> valid_S_sets(const DecoratedDiagram& d, const Decoration012& f0, int k) {
  std::vector<NodeSet> out;
  if (k < 0 || k > d.size()) return out;
  const NodeSet all = d.all_nodes();
  // Gosper's hack over k-subsets, ascending.
  if (k == 0) return {0};
  NodeSet s = full_set(k);
  while (s <= all && s != 0) {
    if (is_valid_S(d, f0, s)) out.push_back(s);
    const NodeSet c = s & (~s + 1);
    const NodeSet r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

Decoration012 decoration_from_S(const DecoratedDiagram& d, const Decoration012& f0, NodeSet s) {
  if ((s & ~d.all_nodes()) || !is_valid_S(d, f0, s)) throw InvalidS("S is not reachable from the start decoration");
  NodeSet near = 0;
  for (int v = 0; v < d.size(); ++v)
    if (contains(s, v)) near |= d.neighbours(v);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(d.size()), 0);
  for (int v = 0; v < d.size(); ++v) {
    if (contains(s, v)) out[static_cast<std::size_t>(v)] = 2;
    else if (f0[v] == 1 || contains(near, v)) out[static_cast<std::size_t>(v)] = 1;
  }
  return Decoration012(d, std::move(out));
}

bool is_degenerate(const DecoratedDiagram& d, const Decoration012& f0) {
  const NodeSet rings = f0.with_value(1);
  for (NodeSet c : d.components())
    if (!(c & rings)) return true;
  return false;
}

bool is_degenerate(const DecoratedDiagram& d) { return is_degenerate(d, Decoration012::from_marks(d)); }

NodeSet stabilizer_generators(const Decoration012& f) { return ~f.with_value(1) & full_set(f.size()); }

BigInt stabilizer_order(const DecoratedDiagram& d, const Decoration012& f) {
  return group_order(d, stabilizer_generators(f));
}

}  // namespace wythoff
