// Command-line front end: `compute <what> ...` and `verify <check|all> ...`.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chromgl/bridge.hpp"

using chromgl::Basis;
using nlohmann::json;

namespace {

chromgl::Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw chromgl::InvalidArgument("bad partition '" + s + "'");
    }
  }
  return chromgl::Partition(parts);
}

chromgl::ClassFnUT class_function(const std::string& kind, const std::string& graph, const std::string& path, int q) {
  if (kind == "psi") {
    if (path.empty()) throw chromgl::InvalidArgument("--class psi needs --path");
    return chromgl::psi_pseudo(chromgl::SchroderPath(path), q);
  }
  if (graph.empty()) throw chromgl::InvalidArgument("--class " + kind + " needs --graph");
  const auto g = chromgl::parse_graph(graph);
  if (kind == "chi_bar") return chromgl::chi_bar(g, q);
  if (kind == "chi") return chromgl::chi_super(g, q);
  if (kind == "delta") return chromgl::delta(g, q);
  if (kind == "delta_bar") return chromgl::delta_bar(g, q);
  throw chromgl::InvalidArgument("unknown class function '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic quasisymmetric functions, LLT polynomials and GL_n(F_q) character checks"};
  app.require_subcommand(1);
  bool allow_large = false;
  app.add_flag("--allow-large", allow_large, "permit enumeration of groups up to 3e7 elements");

  auto* compute = app.add_subcommand("compute", "compute one object and print it as JSON");
  compute->require_subcommand(1);
  std::string graph;
  std::string path;
  std::string matrix;
  std::string lambda;
  std::string kind = "chi_bar";
  int q = 2;
  int n = 0;

  auto* csf = compute->add_subcommand("csf", "chromatic quasisymmetric function X_gamma");
  csf->add_option("--graph", graph, "Dyck word or n:i-j,... edge list")->required();
  auto* llt = compute->add_subcommand("llt", "vertical-strip LLT polynomial G_sigma");
  llt->add_option("--path", path, "tall Schroder word")->required();
  auto* as = compute->add_subcommand("as-expand", "orientation e-expansion of G_sigma");
  as->add_option("--path", path, "tall Schroder word")->required();
  auto* dco = compute->add_subcommand("d-coeffs", "X_gamma in the modified Hall-Littlewood basis");
  dco->add_option("--graph", graph)->required();
  auto* eex = compute->add_subcommand("e-expand", "X_gamma in the elementary basis");
  eex->add_option("--graph", graph)->required();
  auto* ind = compute->add_subcommand("induce", "induce a superclass function to GL_n");
  ind->add_option("--graph", graph);
  ind->add_option("--path", path);
  ind->add_option("--class", kind, "chi_bar, chi, delta, delta_bar or psi")->capture_default_str();
  ind->add_option("--q", q)->required();
  auto* hess = compute->add_subcommand("hess-count", "count Hessenberg flags over F_q");
  hess->add_option("--graph", graph)->required();
  hess->add_option("--q", q)->required();
  auto* hess_m = hess->add_option("--matrix", matrix, "row-major digits of a nilpotent matrix");
  auto* hess_l = hess->add_option("--lambda", lambda, "use J_lambda - 1, e.g. 2,1");
  hess_m->excludes(hess_l);
  auto* sizes = compute->add_subcommand("superclass-sizes", "|UT_gamma°| for every gamma");
  sizes->add_option("--n", n)->required();
  sizes->add_option("--q", q)->required();

  auto* verify = app.add_subcommand("verify", "run identity checks; nonzero exit on any failure");
  std::string which;
  std::optional<int> vn;
  std::optional<int> vq;
  bool deep = false;
  bool as_json = false;
  verify->add_option("check", which, "check name or 'all'")->required();
  verify->add_option("--n", vn);
  verify->add_option("--q", vq);
  verify->add_flag("--deep", deep, "extend symbolic checks to n = 5 and LLT to n = 4, q = 2");
  verify->add_flag("--json", as_json, "machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    chromgl::set_allow_large_groups(allow_large);
    if (compute->parsed()) {
      json out;
      if (csf->parsed()) {
        out = chromgl::to_json(chromgl::csf(chromgl::parse_graph(graph)));
      } else if (llt->parsed()) {
        out = chromgl::to_json(chromgl::llt_vertical(chromgl::SchroderPath(path)));
      } else if (as->parsed()) {
        out = chromgl::to_json(chromgl::as_expansion(chromgl::SchroderPath(path)));
      } else if (dco->parsed()) {
        const auto g = chromgl::parse_graph(graph);
        chromgl::SymFunc f{g.n, Basis::PT, {}};
        for (const auto& [l, c] : chromgl::d_coeffs(g)) f.coeffs.emplace(l, c);
        out = chromgl::to_json(f);
      } else if (eex->parsed()) {
        const auto e = chromgl::e_expansion_X(chromgl::parse_graph(graph));
        out = chromgl::to_json(e.coeffs);
        out["violations"] = json::array();
        for (const auto& l : e.violations) out["violations"].push_back(l.parts);
      } else if (ind->parsed()) {
        out = chromgl::to_json(chromgl::induce_to_GL(class_function(kind, graph, path, q)));
      } else if (hess->parsed()) {
        const auto g = chromgl::parse_graph(graph);
        chromgl::Matrix a;
        if (!matrix.empty()) {
          a = chromgl::Matrix::parse(matrix, q);
        } else if (!lambda.empty()) {
          a = chromgl::jordan(parse_partition(lambda), q) - chromgl::Matrix::identity(g.n, q);
        } else {
          throw chromgl::InvalidArgument("hess-count needs --matrix or --lambda");
        }
        out = json{{"graph", g.edges.pairs()}, {"matrix", a.str()}, {"q", q}, {"count", chromgl::hessenberg_count(g, a)}};
      } else if (sizes->parsed()) {
        json values = json::array();
        for (const auto& [g, s] : chromgl::superclass_sizes(n, q)) {
          values.push_back(json{{"edges", g.edges.pairs()}, {"size", s.get_str()}});
        }
        out = json{{"n", n}, {"q", q}, {"sizes", values}};
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    std::vector<std::string> names;
    if (which == "all") {
      names = chromgl::check_names();
    } else {
      names = {which};
      chromgl::check_uses_q(which);  // validates the name
    }
    const auto reports = chromgl::verify(names, {deep, vn, vq});
    bool ok = true;
    json arr = json::array();
    for (const auto& r : reports) {
      ok = ok && r.pass;
      if (as_json) {
        arr.push_back(r.to_json());
      } else {
        std::cout << r.check << " n=" << r.n << (r.q ? " q=" + std::to_string(*r.q) : std::string()) << " "
                  << (r.pass ? "pass" : "FAIL") << (r.pass ? "" : " " + r.witness.dump()) << "\n";
      }
    }
    if (as_json) std::cout << arr.dump(2) << "\n";
    return ok ? 0 : 1;
  } catch (const chromgl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
