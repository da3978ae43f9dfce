#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "susy/json_io.hpp"
#include "susy/osp.hpp"
#include "susy/selftest.hpp"

namespace {

using susy::Json;

struct GlobalOptions {
  std::uint64_t seed = 0;
  int degree_cap = 12;
  int depth_cap = 8;
  bool pretty = false;
};

std::string read_stream(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// "-" or empty means standard input.
Json load_json_input(const std::string& path) {
  if (path.empty() || path == "-") return susy::parse_json_text(read_stream(std::cin));
  std::ifstream file(path);
  if (!file) throw susy::parse_error("cannot open input file '" + path + "'");
  return susy::parse_json_text(read_stream(file));
}

// Inline JSON when the argument starts like JSON, otherwise a file path.
Json load_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '['))
    return susy::parse_json_text(arg);
  return load_json_input(arg);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw susy::parse_error("invalid integer list entry '" + item + "'");
    }
  }
  return out;
}

void emit(const GlobalOptions& opts, const Json& j) {
  if (opts.pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

void emit_polynomial(const GlobalOptions& opts, const susy::Polynomial& p,
                     const std::string& xname = "x", const std::string& yname = "y") {
  if (opts.pretty) {
    std::cout << susy::to_string(p, xname, yname) << "\n";
    return;
  }
  if (xname == "x" && yname == "y")
    emit(opts, susy::poly_to_json(p));
  else
    emit(opts, susy::poly_to_json(p, xname, yname));
}

int run_selftest(int criterion) {
  auto results = susy::run_acceptance(criterion);
  if (results.empty()) {
    std::cerr << "no such criterion\n";
    return 2;
  }
  bool all_passed = true;
  for (const auto& r : results) {
    std::cout << "criterion-" << (r.id < 10 ? "0" : "") << r.id << " "
              << (r.passed ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with supersymmetric polynomials"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opts;
  app.add_option("--seed", opts.seed, "Seed for randomized constructions");
  app.add_option("--degree-cap", opts.degree_cap, "Maximum degree for basis decompositions");
  app.add_option("--depth-cap", opts.depth_cap, "Shift depth cap for orbit closures");
  app.add_flag("--pretty", opts.pretty, "Human-readable output");

  std::string in_path, point_arg, set_arg, partition_arg, lambda_arg, mu_arg, kind_arg;
  int m = 0, n = 0, criterion = 0;
  bool factored = false, with_cod = false;

  auto* superschur = app.add_subcommand("superschur", "Super Schur basis element");
  superschur->add_option("--m", m)->required();
  superschur->add_option("--n", n)->required();
  superschur->add_option("--partition", partition_arg, "Comma-separated parts");
  superschur->add_flag("--factored", factored, "Use the corner-cell factored form");

  auto* check = app.add_subcommand("check", "Supersymmetry predicate");
  check->add_option("--in", in_path, "Polynomial JSON file, '-' for stdin");

  auto* decompose_cmd = app.add_subcommand("decompose", "Coefficients in the super Schur basis");
  decompose_cmd->add_option("--in", in_path);

  auto* phi = app.add_subcommand("phi", "Evaluation map dropping one variable pair");
  phi->add_option("--in", in_path);

  auto* laurent_check = app.add_subcommand("laurent-check", "Laurent supersymmetry predicate");
  laurent_check->add_option("--in", in_path);
  laurent_check->add_flag("--cod", with_cod, "Also report the four equivalent conditions");

  auto* kelem = app.add_subcommand("k-element", "Laurent kernel basis element");
  kelem->add_option("--m", m)->required();
  kelem->add_option("--n", n)->required();
  kelem->add_option("--lambda", lambda_arg, "Comma-separated entries, length m");
  kelem->add_option("--mu", mu_arg, "Comma-separated entries, length n");

  auto* orbit = app.add_subcommand("orbit", "Groupoid orbit closure of a point");
  orbit->add_option("--point", point_arg, "Point JSON (inline or file)")->required();

  auto* atyp = app.add_subcommand("atypicality", "Degree of atypicality of a point");
  atyp->add_option("--point", point_arg)->required();

  auto* separate = app.add_subcommand("separate", "Separating supersymmetric witness");
  separate->add_option("--set", set_arg, "Point set JSON (inline or file)")->required();
  separate->add_option("--point", point_arg)->required();

  auto* osp_check = app.add_subcommand("osp-check", "Membership in the Harish-Chandra image");
  osp_check->add_option("--kind", kind_arg, "glmn, ospodd or ospeven")->required();
  osp_check->add_option("--in", in_path);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a polynomial at a point");
  eval_cmd->add_option("--in", in_path);
  eval_cmd->add_option("--point", point_arg)->required();

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suites");
  selftest->add_option("--criterion", criterion, "Run a single criterion (1..10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (superschur->parsed()) {
      susy::Partition lambda = susy::Partition::of(parse_int_list(partition_arg));
      emit_polynomial(opts, factored ? susy::super_schur_factored(lambda, m, n)
                                     : susy::super_schur(lambda, m, n));
    } else if (check->parsed()) {
      susy::Polynomial p = susy::poly_from_json(load_json_input(in_path));
      emit(opts, Json{{"supersymmetric", susy::is_supersymmetric(p)}});
    } else if (decompose_cmd->parsed()) {
      susy::Polynomial p = susy::poly_from_json(load_json_input(in_path));
      emit(opts, susy::decomposition_to_json(susy::decompose(p, opts.degree_cap)));
    } else if (phi->parsed()) {
      susy::Polynomial p = susy::poly_from_json(load_json_input(in_path));
      emit_polynomial(opts, p.spec().laurent ? susy::phi_l(p) : susy::phi_s(p));
    } else if (laurent_check->parsed()) {
      susy::Polynomial p = susy::poly_from_json(load_json_input(in_path));
      Json out{{"laurent_supersymmetric", susy::is_laurent_supersymmetric(p)}};
      if (with_cod) {
        susy::CodConditions cod = susy::cod_check(p, opts.seed);
        out["conditions"] = Json{{"a", cod.a}, {"b", cod.b}, {"c", cod.c}, {"d", cod.d}};
      }
      emit(opts, out);
    } else if (kelem->parsed()) {
      susy::SignaturePair sig{susy::IntegerSignature::of(parse_int_list(lambda_arg)),
                              susy::IntegerSignature::of(parse_int_list(mu_arg))};
      emit_polynomial(opts, susy::k_element(sig, m, n));
    } else if (orbit->parsed()) {
      susy::Point p = susy::point_from_json(load_json_arg(point_arg));
      susy::OrbitResult result = susy::groupoid_orbit(p, opts.depth_cap);
      emit(opts, Json{{"points", susy::point_set_to_json(result.points)},
                      {"truncated", result.truncated}});
    } else if (atyp->parsed()) {
      susy::Point p = susy::point_from_json(load_json_arg(point_arg));
      emit(opts, Json{{"r", susy::atypicality(p)}});
    } else if (separate->parsed()) {
      susy::PointSet v = susy::point_set_from_json(load_json_arg(set_arg));
      susy::Point p = susy::point_from_json(load_json_arg(point_arg));
      emit_polynomial(opts, susy::separating_polynomial(v, p, opts.seed));
    } else if (osp_check->parsed()) {
      susy::OspKind kind;
      if (kind_arg == "glmn") kind = susy::OspKind::glmn;
      else if (kind_arg == "ospodd") kind = susy::OspKind::ospodd;
      else if (kind_arg == "ospeven") kind = susy::OspKind::ospeven;
      else throw susy::parse_error("unknown algebra kind '" + kind_arg + "'");
      susy::Polynomial p = susy::poly_from_json(load_json_input(in_path));
      susy::OspSpec spec{kind, p.spec().m, p.spec().n};
      emit(opts, Json{{"member", susy::ih_membership(p, spec)}});
    } else if (eval_cmd->parsed()) {
      susy::Polynomial p = susy::poly_from_json(load_json_input(in_path));
      susy::Point pt = susy::point_from_json(load_json_arg(point_arg));
      emit(opts, Json{{"value", susy::evaluate(p, pt).str()}});
    } else if (selftest->parsed()) {
      return run_selftest(criterion);
    }
  } catch (const susy::parse_error& e) {
    std::cout << Json{{"error", "parse"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  } catch (const susy::domain_error& e) {
    std::cout << Json{{"error", "domain"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
