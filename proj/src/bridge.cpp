#include "chromgl/bridge.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "chromgl/parallel.hpp"

namespace chromgl {

using nlohmann::json;

namespace {

Rational qpow(int q, int e) { return rational_pow(Rational(q), e); }

RationalFunction constant(const Rational& c) { return RationalFunction(c); }

int choose2(int n) { return n * (n - 1) / 2; }

// Records the first failure of a check; later failures are ignored.
class Recorder {
 public:
  Recorder(std::string name, int n, std::optional<int> q) {
    report_.check = std::move(name);
    report_.n = n;
    report_.q = q;
  }
  bool failed() const { return !report_.pass; }
  void fail(const std::string& index, const std::string& lhs, const std::string& rhs, const std::string& note = "") {
    if (failed()) return;
    report_.pass = false;
    report_.witness = json{{"index", index}, {"lhs", lhs}, {"rhs", rhs}};
    if (!note.empty()) report_.witness["note"] = note;
  }
  template <typename T>
  void expect_equal(const std::string& index, const T& lhs, const T& rhs) {
    if (!failed() && !(lhs == rhs)) fail(index, render(lhs), render(rhs));
  }
  CheckReport done() { return std::move(report_); }
  CheckReport& report() { return report_; }

 private:
  static std::string render(const SymPoly& f) { return str(f); }
  static std::string render(const SymFunc& f) { return str(f); }
  static std::string render(const ClassFnUT& f) { return f.str(); }
  static std::string render(const UnipClassFn& f) { return f.str(); }
  static std::string render(const Rational& r) { return to_string(r); }
  static std::string render(bool b) { return b ? "true" : "false"; }
  CheckReport report_;
};

std::string render_edges(const IndiffGraph& g) { return g.edges.str(); }

SymFunc schur_of_sympoly(const SymPoly& f) { return expand_in_basis(f, Basis::S); }

// Checks that every coefficient is a nonnegative integer constant.
bool nonneg_integer_coeffs(const SymFunc& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [](const auto& kv) {
    if (!kv.second.is_constant()) return false;
    const Rational v = kv.second.eval(Rational(0));
    return v.get_den() == 1 && v >= 0;
  });
}

SymFunc omega_in_monomials(const SymPoly& g) { return omega(expand_in_basis(g, Basis::S)); }

// Sum over Diag-ascending orientations of Area u Diag of
// (q - 1)^{#ascending edges} e_{type}, counted over all edges.
SymFunc orientation_gamma_sum(const SchroderPath& sigma, int q) {
  const int n = sigma.size();
  const EdgeSet d = diag(sigma);
  const IndiffGraph gamma(n, area(sigma) | d);
  SymFunc out{n, Basis::E, {}};
  for (const Orientation& theta : orientations(gamma)) {
    if (!d.is_subset_of(theta.ascending)) continue;
    out = out + SymFunc{n, Basis::E, {{type_of(theta), constant(qpow(q - 1, theta.ascending.size()))}}};
  }
  return out;
}

}  // namespace

SymPoly p_brace1(const UnipClassFn& phi) {
  SymPoly out{phi.n, phi.n, {}};
  for (const auto& [lambda, v] : phi.values) {
    if (v == 0) continue;
    out = out + constant(v) * eval_t(basis_element(Basis::PT, lambda), Rational(phi.q));
  }
  return out;
}

SymFunc plethystic_omega(const SymPoly& f, int q) {
  const SymFunc in_p = expand_in_basis(f, Basis::P);
  for (const auto& [lambda, c] : in_p.coeffs) {
    if (!c.is_constant()) throw InvalidArgument("plethystic_omega expects constant coefficients");
  }
  const SymFunc g = eval_t(omega(plethysm_frac(in_p)), Rational(q));
  return change_basis(g, Basis::S);
}

SymFunc p_one(const UnipClassFn& phi) { return plethystic_omega(p_brace1(phi), phi.q); }

SchroderPath gelfand_graev_path(int n) {
  if (n < 1) throw InvalidArgument("gelfand_graev_path needs n >= 1");
  return SchroderPath("E" + std::string(static_cast<std::size_t>(n - 1), 'D') + "S");
}

UnipClassFn gelfand_graev(int n, int q) {
  UnipClassFn ind = induce_to_GL(psi_pseudo(gelfand_graev_path(n), q), true);
  const Rational scale = qpow(q - 1, n - 1);
  for (auto& [lambda, v] : ind.values) {
    v /= scale;
    if (v.get_den() != 1) {
      throw NotDivisible("Gelfand-Graev value at " + lambda.str() + " is " + to_string(v) + ", not an integer");
    }
  }
  return ind;
}

json CheckReport::to_json() const {
  json j{{"check", check}, {"n", n}, {"q", q ? json(*q) : json(nullptr)}, {"status", pass ? "pass" : "fail"},
         {"witness", pass ? json(nullptr) : witness}};
  if (!depends_on.empty()) j["depends_on"] = depends_on;
  return j;
}

// ---------------------------------------------------------------------------
// Checks

CheckReport check_cqs(int n, int q) {
  Recorder rec("check_cqs", n, q);
  const RationalFunction scale = constant(qpow(q - 1, n));
  for (const auto& g : indifference_graphs(n)) {
    const SymPoly lhs = p_brace1(induce_to_GL(chi_bar(g, q), true));
    const SymPoly rhs = scale * eval_t(csf(g), Rational(q));
    rec.expect_equal(render_edges(g), lhs, rhs);
  }
  return rec.done();
}

CheckReport check_hess(int n, int q) {
  Recorder rec("check_hess", n, q);
  for (const auto& g : indifference_graphs(n)) {
    const UnipClassFn ind = induce_to_GL(chi_bar(g, q), true);
    for (const auto& lambda : partitions(n)) {
      const Matrix a = jordan(lambda, q) - Matrix::identity(n, q);
      const Rational rhs = qpow(q - 1, n) * qpow(q, g.edge_count()) * Rational(hessenberg_count(g, a));
      rec.expect_equal(render_edges(g) + " at " + lambda.str(), ind.at(lambda), rhs);
    }
  }
  return rec.done();
}

CheckReport check_poincare(int n, int q) {
  Recorder rec("check_poincare", n, q);
  for (const auto& g : indifference_graphs(n)) {
    const auto d = d_coeffs(g);
    for (const auto& lambda : partitions(n)) {
      const std::string index = render_edges(g) + " at " + lambda.str();
      const LaurentPoly betti = d.count(lambda) != 0 ? d.at(lambda).shifted(-g.edge_count()) : LaurentPoly();
      if (!betti.is_polynomial() || !betti.is_nonnegative_integral()) {
        rec.fail(index, betti.str(), "polynomial with nonnegative integer coefficients");
      }
      const Matrix a = jordan(lambda, q) - Matrix::identity(n, q);
      rec.expect_equal(index, Rational(hessenberg_count(g, a)), betti.eval(Rational(q)));
    }
  }
  return rec.done();
}

CheckReport check_llt(int n, int q) {
  Recorder rec("check_llt", n, q);
  for (const auto& sigma : tall_schroder_paths(n)) {
    const SymFunc lhs = p_one(induce_to_GL(psi_pseudo(sigma, q), true));
    const SymFunc rhs = constant(qpow(q - 1, diag(sigma).size())) *
                        omega(schur_of_sympoly(eval_t(llt_vertical(sigma), Rational(q))));
    rec.expect_equal(sigma.str(), lhs, rhs);
    if (!nonneg_integer_coeffs(lhs)) rec.fail(sigma.str(), str(lhs), "nonnegative integer Schur coefficients");
  }
  return rec.done();
}

CheckReport check_mesa(int n, int q) {
  Recorder rec("check_mesa", n, q);
  for (const auto& pi : dyck_paths(n)) {
    const ClassFnUT lhs = psi_pseudo(mesa(pi), q);
    const ClassFnUT rhs = chi_super(graph_of(pi), q);
    rec.expect_equal(pi.str(), lhs, rhs);
  }
  return rec.done();
}

CheckReport check_psi_decomp(int n, int q) {
  Recorder rec("check_psi_decomp", n, q);
  for (const auto& sigma : tall_schroder_paths(n)) {
    const EdgeSet d = diag(sigma);
    const EdgeSet full = area(sigma) | d;
    ClassFnUT rhs = zero_class_fn(n, q);
    for (const auto& g : indifference_graphs(n)) {
      if (d.is_subset_of(g.edges) && g.edges.is_subset_of(full)) rhs = rhs + chi_super(g, q);
    }
    rec.expect_equal(sigma.str(), psi_pseudo(sigma, q), rhs);
  }
  return rec.done();
}

CheckReport check_permtoind(int n, int q) {
  Recorder rec("check_permtoind", n, q);
  for (const auto& g : indifference_graphs(n)) rec.expect_equal(render_edges(g), chi_bar_coset_oracle(g, q), chi_bar(g, q));
  return rec.done();
}

CheckReport check_as(int n) {
  Recorder rec("check_as", n, std::nullopt);
  for (const auto& sigma : tall_schroder_paths(n)) {
    rec.expect_equal(sigma.str(), to_monomial(as_expansion(sigma)), llt_vertical(sigma));
  }
  return rec.done();
}

CheckReport check_cm(int n) {
  Recorder rec("check_cm", n, std::nullopt);
  const RationalFunction scale(LaurentPoly(LaurentPoly::t() - LaurentPoly(1)).pow(static_cast<unsigned>(n)));
  for (const auto& pi : dyck_paths(n)) {
    const SymFunc x_in_p = expand_in_basis(csf(graph_of(pi)), Basis::P);
    const SymPoly lhs = scale * to_monomial(plethysm_frac(x_in_p));
    rec.expect_equal(pi.str(), lhs, llt_vertical(pi));
  }
  return rec.done();
}

CheckReport check_palindromic(int n) {
  Recorder rec("check_palindromic", n, std::nullopt);
  for (const auto& g : indifference_graphs(n)) rec.expect_equal(render_edges(g), palindromicity_check(g), true);
  return rec.done();
}

CheckReport check_prop56(int n) {
  Recorder rec("check_prop56", n, std::nullopt);
  for (const auto& pi : dyck_paths(n)) {
    const SymPoly g = llt_vertical(pi);
    const SymPoly lhs = RationalFunction(LaurentPoly::monomial(1, area(pi).size())) * invert_t(g);
    rec.expect_equal("(i) " + pi.str(), lhs, to_monomial(omega_in_monomials(g)));
  }
  const LaurentPoly tm1 = LaurentPoly::t() - LaurentPoly(1);
  for (const auto& sigma : tall_schroder_paths(n)) {
    const EdgeSet a = area(sigma);
    const auto d = diag(sigma).pairs();
    const SymPoly lhs = RationalFunction(tm1.pow(static_cast<unsigned>(d.size()))) * llt_vertical(sigma);
    SymPoly rhs{n, n, {}};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
      EdgeSet e = a;
      int missing = 0;
      for (std::size_t k = 0; k < d.size(); ++k) {
        if (mask >> k & 1) {
          e.insert(d[k].first, d[k].second);
        } else {
          ++missing;
        }
      }
      const SymPoly term = llt_vertical(area_inverse(e, n));
      rhs = missing % 2 == 0 ? rhs + term : rhs - term;
    }
    rec.expect_equal("(ii) " + sigma.str(), lhs, rhs);
  }
  return rec.done();
}

CheckReport check_gg(int n, int q) {
  Recorder rec("check_gg", n, q);
  try {
    const SymFunc lhs = omega(p_one(gelfand_graev(n, q)));
    const SymFunc rhs{n, Basis::S, {{Partition::column(n), constant(1)}}};
    rec.expect_equal(gelfand_graev_path(n).str(), lhs, rhs);
  } catch (const NotDivisible& e) {
    rec.fail(gelfand_graev_path(n).str(), e.what(), "divisible by (q-1)^(n-1)");
  }
  return rec.done();
}

CheckReport check_st_en(int n) {
  Recorder rec("check_st_en", n, std::nullopt);
  const SymPoly en = basis_element(Basis::E, Partition::row(n));
  const SymPoly pt = basis_element(Basis::PT, Partition::column(n));
  rec.expect_equal("symbolic", RationalFunction(LaurentPoly::monomial(1, choose2(n))) * pt, en);
  for (int q : {2, 3}) {
    UnipClassFn phi{n, q, {}};
    for (const auto& lambda : partitions(n)) phi.values.emplace(lambda, 0);
    phi.values[Partition::column(n)] = qpow(q, choose2(n));
    rec.expect_equal("q = " + std::to_string(q), p_brace1(phi), en);
  }
  return rec.done();
}

CheckReport check_cor66(int n, int q) {
  Recorder rec("check_cor66", n, q);
  rec.report().depends_on = {"check_llt", "check_as"};
  for (const auto& sigma : tall_schroder_paths(n)) {
    const SymFunc lhs = change_basis(omega(p_one(induce_to_GL(psi_pseudo(sigma, q), true))), Basis::E);
    rec.expect_equal(sigma.str(), lhs, orientation_gamma_sum(sigma, q));
  }
  return rec.done();
}

// ---------------------------------------------------------------------------
// Registry

namespace {

struct Entry {
  std::string name;
  std::function<CheckReport(int, int)> with_q;
  std::function<CheckReport(int)> without_q;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"check_cqs", check_cqs, {}},
      {"check_hess", check_hess, {}},
      {"check_poincare", check_poincare, {}},
      {"check_llt", check_llt, {}},
      {"check_mesa", check_mesa, {}},
      {"check_psi_decomp", check_psi_decomp, {}},
      {"check_permtoind", check_permtoind, {}},
      {"check_as", {}, check_as},
      {"check_cm", {}, check_cm},
      {"check_palindromic", {}, check_palindromic},
      {"check_prop56", {}, check_prop56},
      {"check_gg", check_gg, {}},
      {"check_st_en", {}, check_st_en},
      {"check_cor66", check_cor66, {}},
  };
  return entries;
}

const Entry& lookup(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw InvalidArgument("unknown check '" + name + "'");
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

bool check_uses_q(const std::string& name) { return static_cast<bool>(lookup(name).with_q); }

CheckReport run_check(const std::string& name, int n, std::optional<int> q) {
  const Entry& e = lookup(name);
  if (n < 1) throw InvalidArgument("n must be positive");
  if (e.with_q) {
    if (!q) throw InvalidArgument(name + " needs --q");
    check_field(*q);
    return e.with_q(n, *q);
  }
  return e.without_q(n);
}

std::vector<std::pair<int, std::optional<int>>> verify_range(const std::string& name, const VerifyOptions& opts) {
  const bool uses_q = check_uses_q(name);
  std::vector<int> ns;
  std::vector<std::optional<int>> qs;
  if (uses_q) {
    // Pure superclass-function identities need no GL_n enumeration and go to
    // n = 4 by default.
    const bool ut_only = name == "check_mesa" || name == "check_psi_decomp" || name == "check_permtoind";
    ns = ut_only ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{1, 2, 3};
    qs = {2, 3};
  } else if (name == "check_st_en") {
    ns = {1, 2, 3, 4, 5, 6};
    qs = {std::nullopt};
  } else {
    ns = opts.deep ? std::vector<int>{1, 2, 3, 4, 5} : std::vector<int>{1, 2, 3, 4};
    qs = {std::nullopt};
  }
  std::vector<std::pair<int, std::optional<int>>> out;
  if (opts.n) {
    for (auto q : qs) out.emplace_back(*opts.n, q);
  } else {
    for (int n : ns) {
      for (auto q : qs) out.emplace_back(n, q);
    }
    if (opts.deep && (name == "check_llt" || name == "check_cqs")) out.emplace_back(4, 2);
  }
  if (opts.q && uses_q) {
    std::vector<std::pair<int, std::optional<int>>> filtered;
    std::vector<int> seen;
    for (const auto& [n, q] : out) {
      if (std::find(seen.begin(), seen.end(), n) != seen.end()) continue;
      seen.push_back(n);
      filtered.emplace_back(n, opts.q);
    }
    out = std::move(filtered);
  }
  return out;
}

std::vector<CheckReport> verify(const std::vector<std::string>& names, const VerifyOptions& opts) {
  std::vector<std::tuple<std::string, int, std::optional<int>>> jobs;
  for (const auto& name : names) {
    for (const auto& [n, q] : verify_range(name, opts)) jobs.emplace_back(name, n, q);
  }
  std::vector<CheckReport> out(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    const auto& [name, n, q] = jobs[k];
    out[k] = run_check(name, n, q);
  });
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json coeffs_json(const Coeffs& c) {
  json arr = json::array();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    arr.push_back(json{{"partition", it->first.parts}, {"value", it->second.str()}});
  }
  return arr;
}

RationalFunction parse_ratfunc(const std::string& s) {
  const auto split = s.find(")/(");
  if (!s.empty() && s.front() == '(' && s.back() == ')' && split != std::string::npos) {
    return RationalFunction(LaurentPoly::parse(s.substr(1, split - 1)),
                            LaurentPoly::parse(s.substr(split + 3, s.size() - split - 4)));
  }
  return RationalFunction(LaurentPoly::parse(s));
}

}  // namespace

json to_json(const SymFunc& f) {
  return json{{"degree", f.degree}, {"basis", basis_name(f.basis)}, {"coeffs", coeffs_json(f.coeffs)}};
}

json to_json(const SymPoly& f) {
  return json{{"degree", f.degree}, {"basis", "M"}, {"coeffs", coeffs_json(f.terms)}};
}

SymFunc symfunc_from_json(const json& j) {
  try {
    SymFunc f{j.at("degree").get<int>(), parse_basis(j.at("basis").get<std::string>()), {}};
    for (const auto& term : j.at("coeffs")) {
      Partition lambda(term.at("partition").get<std::vector<int>>());
      if (lambda.size() != f.degree) throw InvalidArgument("partition " + lambda.str() + " has the wrong size");
      f.coeffs[lambda] += parse_ratfunc(term.at("value").get<std::string>());
    }
    f.coeffs = prune(std::move(f.coeffs));
    return f;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed symmetric function JSON: ") + e.what());
  }
}

json to_json(const UnipClassFn& f) {
  json values = json::array();
  for (auto it = f.values.rbegin(); it != f.values.rend(); ++it) {
    values.push_back(json{{"partition", it->first.parts}, {"value", to_string(it->second)}});
  }
  return json{{"n", f.n}, {"q", f.q}, {"values", values}};
}

json to_json(const ClassFnUT& f) {
  json values = json::array();
  for (const auto& [g, v] : f.values) {
    values.push_back(json{{"edges", g.edges.pairs()}, {"value", to_string(v)}});
  }
  return json{{"n", f.n}, {"q", f.q}, {"values", values}};
}

IndiffGraph parse_graph(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return graph_of(DyckPath(s));
  int n = 0;
  try {
    n = std::stoi(s.substr(0, colon));
  } catch (const std::exception&) {
    throw InvalidArgument("bad vertex count in graph '" + s + "'");
  }
  if (n < 0 || n > kMaxVertices) throw InvalidArgument("vertex count out of range in '" + s + "'");
  EdgeSet edges;
  std::stringstream rest(s.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    int i = 0;
    int j = 0;
    char dash = 0;
    std::stringstream one(item);
    if (!(one >> i >> dash >> j) || dash != '-' || i < 1 || j > n || i >= j) {
      throw InvalidArgument("bad edge '" + item + "' in graph '" + s + "'");
    }
    edges.insert(i, j);
  }
  return IndiffGraph(n, edges);
}

}  // namespace chromgl
