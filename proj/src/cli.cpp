#include "wythoff/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wythoff/decoration.hpp"
#include "wythoff/diagram.hpp"
#include "wythoff/face_lattice.hpp"
#include "wythoff/geometry.hpp"
#include "wythoff/reflection_group.hpp"
#include "wythoff/regular.hpp"

namespace wythoff::cli {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("IoError", what) {}
};

DecoratedDiagram load_diagram(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw IoError("cannot read " + text.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }
  return parse(text);
}

void write_file(const std::string& path, const std::string& content, std::ostream& stdout_stream) {
  if (path == "-") {
    stdout_stream << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

std::string node_list(const DecoratedDiagram& d, NodeSet s) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < d.size(); ++v) {
    if (!contains(s, v)) continue;
    out += (first ? "" : ",") + d.nodes()[static_cast<std::size_t>(v)].id;
    first = false;
  }
  return out + "}";
}

Json fvector_json(const FVector& f) {
  auto a = Json::array();
  for (const auto& x : f) a.push_back(x.convert_to<unsigned long long>());
  return a;
}

std::string coord(double v) {
  if (std::abs(v) < 5e-13) v = 0.0;
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

/// Output of one command: human lines, or the structured result.
struct Output {
  std::ostringstream text;
  Json result = Json::object();
  int code = kOk;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wythoff's construction from decorated Coxeter diagrams", "wythoff"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit one structured document");

  std::string diagram_text;
  auto with_diagram = [&](CLI::App* sub) {
    sub->add_option("diagram", diagram_text, "Inline diagram such as x4o3o, or @file with a structured document")
        ->required();
    return sub;
  };

  auto* validate = with_diagram(app.add_subcommand("validate", "Parse and classify a diagram"));
  auto* order = with_diagram(app.add_subcommand("order", "Group order from the family formulas"));
  int rank = 0;
  auto* faces = with_diagram(app.add_subcommand("faces", "Reachable decorations of one rank"));
  faces->add_option("--rank", rank, "Face rank")->required()->check(CLI::NonNegativeNumber);
  std::string method = "formula";
  auto* fvector = with_diagram(app.add_subcommand("fvector", "Face counts per rank"));
  fvector->add_option("--method", method, "enum, formula or both")->check(CLI::IsMember({"enum", "formula", "both"}));
  std::string out_path;
  auto* lattice = with_diagram(app.add_subcommand("lattice", "Write the face lattice document"));
  lattice->add_option("--out", out_path, "Output path, - for standard output")->required();
  auto* vertices = with_diagram(app.add_subcommand("vertices", "Vertex coordinates"));
  std::string format;
  int face_index = -1;
  auto* exporter = with_diagram(app.add_subcommand("export", "Export geometry"));
  exporter->add_option("--format", format, "off or json")->required()->check(CLI::IsMember({"off", "json"}));
  exporter->add_option("--out", out_path, "Output path, - for standard output")->required();
  exporter->add_option("--face", face_index, "OFF only: index of a 3-face to export instead of the whole polytope")
      ->check(CLI::NonNegativeNumber);
  auto* check = with_diagram(app.add_subcommand("check", "Structural and geometric checks"));
  bool oracle = false;
  auto* regular = with_diagram(app.add_subcommand("is-regular", "Regularity verdict"));
  regular->add_flag("--oracle", oracle, "Confirm with the flag-transitivity oracle");
  int dim = 0;
  int kmax = 12;
  bool no_verify = false;
  auto* classify_cmd = app.add_subcommand("classify", "Regular polytopes of one dimension");
  classify_cmd->add_option("--dim", dim, "Dimension")->required()->check(CLI::Range(1, kMaxNodes));
  classify_cmd->add_option("--kmax", kmax, "Largest dihedral label")->check(CLI::Range(3, 1000));
  classify_cmd->add_flag("--no-verify", no_verify, "Skip lattice and oracle verification");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const CLI::App* cmd = app.get_subcommands().front();
  Output o;
  try {
    const std::size_t budget = budget_from_env();
    if (cmd == validate) {
      const auto d = load_diagram(diagram_text);
      auto tags = Json::array();
      std::string names;
      for (const auto& t : classify_components(d)) {
        tags.push_back(t.name());
        names += (names.empty() ? "" : " ") + t.name();
      }
      const bool degenerate = is_degenerate(d);
      o.result = {{"diagram", describe(d)}, {"families", tags}, {"degenerate", degenerate}};
      o.text << "families: " << names << "\n" << "degenerate: " << (degenerate ? "yes" : "no") << "\n";
    } else if (cmd == order) {
      const auto d = load_diagram(diagram_text);
      const BigInt g = group_order(d);
      o.result = {{"order", g.str()}};
      o.text << g << "\n";
    } else if (cmd == faces) {
      const auto d = load_diagram(diagram_text);
      if (rank > d.size()) throw NotApplicable("rank " + std::to_string(rank) + " exceeds the dimension");
      const auto f0 = Decoration012::from_marks(d);
      if (is_degenerate(d, f0)) throw Degenerate("some component of " + describe(d) + " has no ringed node");
      const BigInt g = group_order(d);
      auto list = Json::array();
      for (const auto& f : reachable(d, f0, rank)) {
        const BigInt stab = stabilizer_order(d, f);
        const BigInt count = g / stab;
        const std::string s = node_list(d, f.with_value(2));
        list.push_back({{"decoration", f.to_string()}, {"S", s}, {"stabilizer_order", stab.str()}, {"count", count.str()}});
        o.text << f.to_string() << "  S=" << s << "  stabilizer=" << stab << "  count=" << count << "\n";
      }
      o.result = {{"rank", rank}, {"faces", list}};
    } else if (cmd == fvector) {
      const auto d = load_diagram(diagram_text);
      FVector result;
      if (method != "enum") result = f_vector_formula(d);
      if (method != "formula") {
        const FVector e = f_vector_enumerated(build_lattice(d, budget));
        if (method == "both" && e != result) {
          err << "error: counting paths disagree: formula " << to_string(result) << ", enumerated " << to_string(e) << "\n";
          return kDomainError;
        }
        result = e;
      }
      o.result = {{"method", method}, {"f_vector", fvector_json(result)}};
      o.text << to_string(result) << "\n";
    } else if (cmd == lattice) {
      const auto l = build_lattice(load_diagram(diagram_text), budget);
      write_file(out_path, lattice_document(l) + "\n", out);
      o.result = {{"faces", l.size() - 1}, {"covers", l.covers().size()}, {"out", out_path}};
      if (out_path != "-") o.text << "wrote " << l.size() - 1 << " faces to " << out_path << "\n";
    } else if (cmd == vertices) {
      const auto l = build_lattice(load_diagram(diagram_text), budget);
      const auto r = realize(l);
      auto list = Json::array();
      for (const auto& v : r.vertices) {
        auto row = Json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) {
          row.push_back(std::abs(v[i]) < 5e-13 ? 0.0 : v[i]);
          o.text << (i ? " " : "") << coord(v[i]);
        }
        o.text << "\n";
        list.push_back(row);
      }
      o.result = {{"vertices", list}};
    } else if (cmd == exporter) {
      const auto l = build_lattice(load_diagram(diagram_text), budget);
      const auto r = realize(l);
      std::string content;
      if (format == "off") {
        std::optional<FaceId> face;
        if (face_index >= 0) {
          if (l.dimension() < 3 || static_cast<std::size_t>(face_index) >= l.count(3))
            throw NotApplicable("no 3-face with index " + std::to_string(face_index));
          face = l.rank_begin(3) + static_cast<FaceId>(face_index);
        }
        content = export_off(l, r, face);
      } else {
        content = export_json(l, r) + "\n";
      }
      write_file(out_path, content, out);
      o.result = {{"format", format}, {"out", out_path}};
      if (out_path != "-") o.text << "wrote " << format << " to " << out_path << "\n";
    } else if (cmd == check) {
      const auto d = load_diagram(diagram_text);
      const auto l = build_lattice(d, budget);
      const auto fv = f_vector_enumerated(l);
      const auto diamond = check_diamond(l);
      const auto flags = check_flag_connected(l);
      const bool euler = check_euler(fv);
      const bool counting = fv == f_vector_formula(d);
      const auto r = realize(l);
      const auto edges = check_uniform_edges(l, r);
      const auto geometry = check_geometry(l, r);
      auto line = [&](const std::string& name, bool ok, const std::string& detail) {
        o.text << name << ": " << (ok ? "ok" : "FAIL") << "  " << detail << "\n";
        o.result[name] = {{"ok", ok}, {"detail", detail}};
        if (!ok) o.code = kDomainError;
      };
      line("diamond", diamond.ok(),
           std::to_string(diamond.pairs_checked) + " pairs, " + std::to_string(diamond.violations.size()) + " violations");
      line("flags", flags.ok(),
           std::to_string(flags.flags) + " flags, " + std::to_string(flags.components) + " components, " +
               std::to_string(flags.wrong_degree) + " with a neighbour count other than " + std::to_string(l.dimension()));
      line("euler", euler, to_string(fv));
      line("counting", counting, "enumerated against formula");
      std::ostringstream spread;
      spread << edges.edges << " edges, relative spread " << std::setprecision(3) << edges.relative_spread;
      line("edges", edges.ok(), spread.str());
      line("geometry", geometry.ok(),
           std::to_string(geometry.rank_mismatches) + " rank mismatches, " +
               std::to_string(geometry.containment_mismatches) + " containment mismatches, " +
               std::to_string(geometry.duplicate_vertex_sets) + " duplicate faces");
    } else if (cmd == regular) {
      const auto d = load_diagram(diagram_text);
      if (oracle) {
        const auto a = compare_with_oracle(d, budget);
        o.text << a.ruled.text() << "\n";
        o.text << "oracle: " << a.plain.orbits << " flag orbit" << (a.plain.orbits == 1 ? "" : "s") << " under G over "
               << a.plain.flags << " flags\n";
        if (a.augmented)
          o.text << "augmented oracle: " << a.augmented->orbits << " flag orbit"
                 << (a.augmented->orbits == 1 ? "" : "s") << " with ridge reflections\n";
        o.text << "oracle " << (a.agree ? "agrees" : "disagrees") << "\n";
        o.result = {{"regular", a.ruled.regular}, {"verdict", a.ruled.text()}, {"rule", a.ruled.rule},
                    {"flags", a.plain.flags}, {"orbits", a.plain.orbits}, {"agree", a.agree},
                    {"whitelisted", a.whitelisted}};
        if (a.augmented) o.result["augmented_orbits"] = a.augmented->orbits;
        if (!a.agree) o.code = kDomainError;
      } else {
        const auto v = is_regular_ruled(d, true);
        o.text << v.text() << "\n";
        o.result = {{"regular", v.regular}, {"verdict", v.text()}, {"rule", v.rule}};
        if (v.regular) o.result["name"] = v.name;
        auto w = Json::array();
        for (const auto& f : v.witness) w.push_back({{"decoration", f.decoration.to_string()}, {"face", describe(f.face)}, {"name", f.name}});
        if (!v.regular) o.result["witness"] = w;
      }
    } else if (cmd == classify_cmd) {
      ClassifyOptions options;
      options.kmax = kmax;
      options.budget = budget;
      if (no_verify) options.verify = false;
      const auto entries = classify(dim, options);
      for (const auto& e : entries) {
        o.text << e.display() << "  " << to_string(e.f_vector) << "  ";
        for (std::size_t i = 0; i < e.constructions.size(); ++i) o.text << (i ? ", " : "") << display_text(e.constructions[i]);
        if (e.verified) o.text << "  verified";
        o.text << "\n";
      }
      o.result = {{"dimension", dim}, {"entries", Json::parse(catalog_document(entries))}};
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (json) out << Json{{"command", cmd->get_name()}, {"ok", false}, {"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump() << "\n";
    return kDomainError;
  }

  if (json) {
    out << Json{{"command", cmd->get_name()}, {"ok", o.code == kOk}, {"result", o.result}}.dump() << "\n";
  } else {
    out << o.text.str();
  }
  return o.code;
}

}  // namespace wythoff::cli
