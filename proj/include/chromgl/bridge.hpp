/**
 * @file bridge.hpp
 * @brief The two symmetric-function images of unipotent class functions and
 * the identity checkers tying the other modules together.
 *
 *   p_brace1(phi) = sum_lambda phi(J_lambda) PT_lambda(x; q)
 *   p_one(phi)    = omega f[x / (t - 1)] at t = q, with f = p_brace1(phi),
 *                   expanded in Schur functions.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromgl/chromallt.hpp"
#include "chromgl/fqoracle.hpp"
#include "chromgl/symfunc.hpp"
#include "json.hpp"

namespace chromgl {

SymPoly p_brace1(const UnipClassFn& phi);
/// The composite applied to a symmetric function with constant coefficients.
SymFunc plethystic_omega(const SymPoly& f, int q);
SymFunc p_one(const UnipClassFn& phi);

/// (q - 1)^{-(n-1)} Ind psi^{E D^{n-1} S}; throws NotDivisible if a value
/// is not an integer after the division.
UnipClassFn gelfand_graev(int n, int q);

/// "E D^{n-1} S"
SchroderPath gelfand_graev_path(int n);

struct CheckReport {
  std::string check;
  int n = 0;
  std::optional<int> q;
  bool pass = true;
  nlohmann::json witness;                ///< null on pass
  std::vector<std::string> depends_on;  ///< checks this result relies on

  nlohmann::json to_json() const;
};

/// Check names in canonical order.
const std::vector<std::string>& check_names();
/// Whether the check is parameterized by q.
bool check_uses_q(const std::string& name);
/// Runs one check; throws InvalidArgument for an unknown name and SizeGuard
/// when (n, q) is out of range.
CheckReport run_check(const std::string& name, int n, std::optional<int> q);

CheckReport check_cqs(int n, int q);
CheckReport check_hess(int n, int q);
CheckReport check_poincare(int n, int q);
CheckReport check_llt(int n, int q);
CheckReport check_mesa(int n, int q);
CheckReport check_psi_decomp(int n, int q);
CheckReport check_permtoind(int n, int q);
CheckReport check_as(int n);
CheckReport check_cm(int n);
CheckReport check_palindromic(int n);
CheckReport check_prop56(int n);
CheckReport check_gg(int n, int q);
CheckReport check_st_en(int n);
CheckReport check_cor66(int n, int q);

struct VerifyOptions {
  bool deep = false;
  std::optional<int> n;  ///< restrict to this size
  std::optional<int> q;  ///< restrict to this field
};

/// The (n, q) pairs a check runs over by default (or as restricted).
std::vector<std::pair<int, std::optional<int>>> verify_range(const std::string& name, const VerifyOptions& opts);

/// Runs the named checks over their ranges, concurrently; reports come back
/// ordered by check name order, then n, then q.
std::vector<CheckReport> verify(const std::vector<std::string>& names, const VerifyOptions& opts);

// ---------------------------------------------------------------------------
// JSON

/// {"degree", "basis", "coeffs": [{"partition": [...], "value": "t + 1"}]}
nlohmann::json to_json(const SymFunc& f);
nlohmann::json to_json(const SymPoly& f);
SymFunc symfunc_from_json(const nlohmann::json& j);
nlohmann::json to_json(const UnipClassFn& f);
nlohmann::json to_json(const ClassFnUT& f);

/// Indifference graph from a Dyck word ("EESESS") or an edge list
/// ("n:1-2,2-3").
IndiffGraph parse_graph(const std::string& s);

}  // namespace chromgl
