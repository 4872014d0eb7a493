#include "pipedreams/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pipedreams/errors.hpp"
#include "pipedreams/verify.hpp"

namespace pipedreams {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInvalidInput = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream file(path);
  if (!file) throw Error("cannot read file: " + path);
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("malformed JSON input");
  return j;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<int> word;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) word.push_back(std::stoi(part));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw Error("permutations are given as digits or comma-separated");
      word.push_back(c - '0');
    }
  }
  return Permutation(word);
}

GeometryPtr load_shape(const std::string& path) {
  const Shape shape = shape_from_json(parse_json(read_input(path)));
  const ShapeDiagnostics diag = validate(shape);
  if (!diag.valid) throw InvalidShape("invalid shape: " + diag.first_violation);
  return make_geometry(shape);
}

void write_output(const std::string& out_path, const std::string& text, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw Error("cannot write file: " + out_path);
  file << text;
}

std::string dumps(const json& j) { return j.dump(2) + "\n"; }

struct Options {
  std::string input;
  std::string out_path;
  std::string omega, pi;
  std::string algo = "both";
  std::string suite = "all";
  int n = 0;
  int max_t = -1;
  bool strongly_acyclic = false;
  bool extended = false;
  bool dot = true;
  bool render = false;
  bool svg = false;
};

int require_sortable(const ShapeGeometry& geo, const Permutation& omega, std::ostream& err) {
  if (omega.size() != geo.n()) {
    err << "error: permutation size does not match the shape\n";
    return kInvalidInput;
  }
  if (!is_sortable(geo, omega)) {
    err << "error: " << omega.str() << " is not sortable on this shape\n";
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pipe dreams on alternating shapes"};
  app.require_subcommand(1);
  Options o;

  auto* shape_cmd = app.add_subcommand("shape", "construct and inspect shapes");
  shape_cmd->require_subcommand(1);
  auto* shape_validate = shape_cmd->add_subcommand("validate", "validate a shape JSON file");
  shape_validate->add_option("input", o.input, "shape JSON file or -")->required();
  shape_validate->add_option("--out", o.out_path);
  auto* shape_enumerate = shape_cmd->add_subcommand("enumerate", "list valid shapes");
  shape_enumerate->add_option("--n", o.n, "pipe count")->required();
  shape_enumerate->add_option("--max-t", o.max_t, "max NW stair length (default n)");
  shape_enumerate->add_option("--out", o.out_path);

  auto* pd_cmd = app.add_subcommand("pd", "pipe dream operations");
  pd_cmd->require_subcommand(1);
  auto* pd_enumerate = pd_cmd->add_subcommand("enumerate", "list reduced pipe dreams");
  pd_enumerate->add_option("input", o.input)->required();
  pd_enumerate->add_option("--omega", o.omega, "exit permutation")->required();
  pd_enumerate->add_flag("--strongly-acyclic", o.strongly_acyclic);
  pd_enumerate->add_option("--out", o.out_path);
  auto* pd_insert = pd_cmd->add_subcommand("insert", "run the insertion algorithms");
  pd_insert->add_option("input", o.input)->required();
  pd_insert->add_option("--omega", o.omega)->required();
  pd_insert->add_option("--pi", o.pi)->required();
  pd_insert->add_option("--algo", o.algo)->check(CLI::IsMember({"sweep", "pipes", "both"}));
  pd_insert->add_flag("--render", o.render);
  pd_insert->add_option("--out", o.out_path);
  auto* pd_render = pd_cmd->add_subcommand("render", "render a pipe dream");
  pd_render->add_option("input", o.input)->required();
  pd_render->add_flag("--svg", o.svg);
  pd_render->add_option("--out", o.out_path);
  auto* pd_graph = pd_cmd->add_subcommand("graph", "contact graph of a pipe dream");
  pd_graph->add_option("input", o.input)->required();
  pd_graph->add_flag("--extended", o.extended);
  pd_graph->add_flag("--dot,!--json", o.dot, "DOT output (default) or JSON arcs");
  pd_graph->add_option("--out", o.out_path);
  auto* pd_flips = pd_cmd->add_subcommand("flip-graph", "increasing flip graph");
  pd_flips->add_option("input", o.input)->required();
  pd_flips->add_option("--omega", o.omega)->required();
  pd_flips->add_flag("--dot", o.dot);
  pd_flips->add_option("--out", o.out_path);

  auto* lattice_cmd = app.add_subcommand("lattice", "acyclic order exports");
  lattice_cmd->require_subcommand(1);
  auto* lattice_export = lattice_cmd->add_subcommand("export", "DOT Hasse diagram");
  lattice_export->add_option("input", o.input)->required();
  lattice_export->add_option("--omega", o.omega)->required();
  lattice_export->add_flag("--dot", o.dot);
  lattice_export->add_option("--out", o.out_path);

  auto* verify_cmd = app.add_subcommand("verify", "run the verification harness");
  verify_cmd->add_option("--n", o.n, "max pipe count")->default_val(4);
  verify_cmd->add_option("--max-t", o.max_t, "max NW stair length (default n)");
  verify_cmd->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"partition", "congruence", "lattice", "insertion", "flips",
                             "complete", "lemmas", "all"}));
  verify_cmd->add_option("--out", o.out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (shape_validate->parsed()) {
      const json j = parse_json(read_input(o.input));
      const Shape shape = shape_from_json(j);
      const ShapeDiagnostics diag = validate(shape);
      json result;
      result["valid"] = diag.valid;
      if (!diag.valid) result["violation"] = diag.first_violation;
      result["notes"] = diag.notes;
      if (diag.valid) {
        result["cells"] = json::array();
        for (const auto& c : cells(shape)) result["cells"].push_back(json::array({c.x, c.y}));
        std::vector<int> letters = word(shape);
        result["word"] = letters;
        result["complete"] = is_complete(shape);
      }
      write_output(o.out_path, dumps(result), out);
      return diag.valid ? kOk : kVerificationFailure;
    }

    if (shape_enumerate->parsed()) {
      if (o.n < 1) {
        err << "error: --n must be at least 1\n";
        return kInvalidInput;
      }
      json result = json::array();
      for (const auto& shape : enumerate_shapes(o.n, o.max_t < 0 ? o.n : o.max_t))
        result.push_back(shape_to_json(shape));
      write_output(o.out_path, dumps(result), out);
      return kOk;
    }

    if (pd_enumerate->parsed()) {
      const GeometryPtr geo = load_shape(o.input);
      const Permutation omega = parse_permutation(o.omega);
      if (int rc = require_sortable(*geo, omega, err); rc != kOk) return rc;
      const auto dreams = o.strongly_acyclic ? strongly_acyclic_subset(geo, omega)
                                             : enumerate_pipe_dreams(geo, omega);
      json result = json::array();
      for (const auto& d : dreams) result.push_back(dream_to_json(d));
      write_output(o.out_path, dumps(result), out);
      return kOk;
    }

    if (pd_insert->parsed()) {
      const GeometryPtr geo = load_shape(o.input);
      const Permutation omega = parse_permutation(o.omega);
      const Permutation pi = parse_permutation(o.pi);
      if (int rc = require_sortable(*geo, omega, err); rc != kOk) return rc;
      if (pi.size() != geo->n() || !weak_leq(pi, omega)) {
        err << "error: pi must be below omega in the weak order\n";
        return kInvalidInput;
      }
      std::optional<PipeDream> dream;
      if (o.algo == "sweep" || o.algo == "both") dream = sweep_insert(geo, omega, pi);
      if (o.algo == "pipes" || o.algo == "both") {
        const PipeDream routed = pipe_insert(geo, omega, pi);
        if (dream && !(routed == *dream)) {
          err << "error: sweeping and pipe insertion disagree on this input\n";
          return kVerificationFailure;
        }
        if (!dream) dream = routed;
      }
      std::string text = dumps(dream_to_json(*dream));
      if (o.render) text += "\n" + ascii_render(*dream);
      write_output(o.out_path, text, out);
      return kOk;
    }

    if (pd_render->parsed()) {
      const PipeDream dream = dream_from_json(parse_json(read_input(o.input)));
      write_output(o.out_path, o.svg ? svg_render(dream) : ascii_render(dream), out);
      return kOk;
    }

    if (pd_graph->parsed()) {
      const PipeDream dream = dream_from_json(parse_json(read_input(o.input)));
      if (!dream.is_reduced()) {
        err << "error: contact graphs are defined for reduced pipe dreams\n";
        return kInvalidInput;
      }
      const ContactGraph graph = dream.contact_graph(o.extended);
      std::string text;
      if (o.dot) {
        const auto plain = dream.contact_graph(false).arcs;
        text = o.extended ? graph.dot(&plain) : graph.dot();
      } else {
        json arcs = json::array();
        for (auto [a, b] : graph.arcs) arcs.push_back(json::array({a, b}));
        text = dumps(json{{"n", graph.n}, {"extended", graph.extended}, {"arcs", arcs}});
      }
      write_output(o.out_path, text, out);
      return kOk;
    }

    if (pd_flips->parsed()) {
      const GeometryPtr geo = load_shape(o.input);
      const Permutation omega = parse_permutation(o.omega);
      if (int rc = require_sortable(*geo, omega, err); rc != kOk) return rc;
      write_output(o.out_path, flip_graph(geo, omega).dot(), out);
      return kOk;
    }

    if (lattice_export->parsed()) {
      const GeometryPtr geo = load_shape(o.input);
      const Permutation omega = parse_permutation(o.omega);
      if (int rc = require_sortable(*geo, omega, err); rc != kOk) return rc;
      write_output(o.out_path, lattice_dot(geo, omega), out);
      return kOk;
    }

    if (verify_cmd->parsed()) {
      SuiteOptions suite_options;
      suite_options.n = o.n;
      suite_options.max_t = o.max_t;
      suite_options.suite = o.suite;
      const SuiteReport report = run_suite(suite_options);
      write_output(o.out_path, dumps(report.to_json()), out);
      return report.all_pass() ? kOk : kVerificationFailure;
    }
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  err << "error: no subcommand\n";
  return kInvalidInput;
}

}  // namespace pipedreams
