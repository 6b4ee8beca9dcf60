#include "chromgl/chromallt.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>

#include "chromgl/parallel.hpp"

namespace chromgl {

int asc(EdgeSet edges, const Coloring& kappa) {
  int count = 0;
  for (auto [i, j] : edges.pairs()) {
    if (kappa.at(static_cast<std::size_t>(i - 1)) < kappa.at(static_cast<std::size_t>(j - 1))) ++count;
  }
  return count;
}

namespace {

void check_size(int n, int limit, const char* what) {
  if (n > limit) {
    throw SizeGuard(std::string(what) + ": size " + std::to_string(n) + " exceeds " + std::to_string(limit));
  }
}

// Exponent vectors packed 4 bits per variable.
using Counts = std::unordered_map<std::uint64_t, std::vector<long long>>;

struct EdgeLists {
  // For vertex v (0-based): earlier neighbours through plain (ascent) edges and
  // through strict edges, which must increase.
  std::vector<std::vector<int>> plain;
  std::vector<std::vector<int>> strict;
  bool proper = false;  // plain edges also forbid equal colors
};

// Enumerates colorings [n] -> [n] vertex by vertex, pruning on the
// constraints, and tallies t^asc per exponent vector. Work is split on the
// color of vertex 1.
Counts enumerate(int n, const EdgeLists& lists, int max_asc) {
  if (n == 0) {
    Counts out;
    out[0] = {1};
    return out;
  }
  const auto chunks = static_cast<std::size_t>(n);
  std::vector<Counts> partial(chunks);
  parallel_for(chunks, [&](std::size_t chunk) {
    Counts& acc = partial[chunk];
    std::vector<int> kappa(static_cast<std::size_t>(n), 0);
    std::function<void(int, std::uint64_t, int)> rec = [&](int v, std::uint64_t key, int a) {
      if (v == n) {
        auto& slot = acc[key];
        if (slot.empty()) slot.assign(static_cast<std::size_t>(max_asc + 1), 0);
        ++slot[static_cast<std::size_t>(a)];
        return;
      }
      const int lo = v == 0 ? static_cast<int>(chunk) + 1 : 1;
      const int hi = v == 0 ? static_cast<int>(chunk) + 1 : n;
      for (int c = lo; c <= hi; ++c) {
        bool ok = true;
        int gained = 0;
        for (int u : lists.strict[static_cast<std::size_t>(v)]) {
          if (kappa[static_cast<std::size_t>(u)] >= c) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        for (int u : lists.plain[static_cast<std::size_t>(v)]) {
          const int cu = kappa[static_cast<std::size_t>(u)];
          if (lists.proper && cu == c) {
            ok = false;
            break;
          }
          if (cu < c) ++gained;
        }
        if (!ok) continue;
        kappa[static_cast<std::size_t>(v)] = c;
        rec(v + 1, key + (std::uint64_t{1} << (4 * (c - 1))), a + gained);
      }
    };
    rec(0, 0, 0);
  });
  Counts out;
  for (auto& part : partial) {
    for (auto& [key, counts] : part) {
      auto& slot = out[key];
      if (slot.empty()) slot.assign(counts.size(), 0);
      for (std::size_t k = 0; k < counts.size(); ++k) slot[k] += counts[k];
    }
  }
  return out;
}

ExponentTable to_table(const Counts& counts, int n) {
  ExponentTable table;
  for (const auto& [key, c] : counts) {
    std::vector<int> expo(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) expo[static_cast<std::size_t>(i)] = static_cast<int>((key >> (4 * i)) & 0xF);
    std::vector<Rational> coeffs;
    for (long long x : c) coeffs.emplace_back(static_cast<long>(x));
    LaurentPoly p(0, std::move(coeffs));
    if (!p.is_zero()) table.emplace(std::move(expo), RationalFunction(p));
  }
  return table;
}

EdgeLists lists_for(int n, EdgeSet plain, EdgeSet strict, bool proper) {
  EdgeLists lists;
  lists.plain.resize(static_cast<std::size_t>(n));
  lists.strict.resize(static_cast<std::size_t>(n));
  lists.proper = proper;
  for (auto [i, j] : plain.pairs()) lists.plain[static_cast<std::size_t>(j - 1)].push_back(i - 1);
  for (auto [i, j] : strict.pairs()) lists.strict[static_cast<std::size_t>(j - 1)].push_back(i - 1);
  return lists;
}

SymPoly symmetric_form(const ExponentTable& table, int n, const std::string& what) {
  if (!check_symmetric(table, n)) throw InternalError(what + " produced a non-symmetric coefficient table");
  return orbit_form(table, n, n);
}

}  // namespace

ExponentTable csf_table(const IndiffGraph& gamma) {
  check_size(gamma.n, kMaxColoringSize, "csf");
  return to_table(enumerate(gamma.n, lists_for(gamma.n, gamma.edges, EdgeSet(), true), gamma.edge_count()), gamma.n);
}

SymPoly csf(const IndiffGraph& gamma) { return symmetric_form(csf_table(gamma), gamma.n, "csf " + gamma.str()); }

ExponentTable llt_table(const SchroderPath& sigma) {
  const int n = sigma.size();
  check_size(n, kMaxColoringSize, "llt_vertical");
  const EdgeSet a = area(sigma);
  return to_table(enumerate(n, lists_for(n, a, diag(sigma), false), a.size()), n);
}

SymPoly llt_vertical(const SchroderPath& sigma) {
  return symmetric_form(llt_table(sigma), sigma.size(), "llt_vertical " + sigma.str());
}

SymFunc as_expansion(const SchroderPath& sigma) {
  const int n = sigma.size();
  const EdgeSet a = area(sigma);
  const EdgeSet d = diag(sigma);
  if (a.size() + d.size() > 16) throw SizeGuard("as_expansion: more than 16 edges");
  check_size(n, kMaxSymDegree, "as_expansion");
  const IndiffGraph gamma(n, a | d);
  std::map<Partition, std::vector<long long>> tally;
  for (const Orientation& theta : orientations(gamma)) {
    if (!d.is_subset_of(theta.ascending)) continue;
    auto& slot = tally[type_of(theta)];
    const auto k = static_cast<std::size_t>((theta.ascending & a).size());
    if (slot.size() <= k) slot.resize(k + 1, 0);
    ++slot[k];
  }
  const LaurentPoly tm1 = LaurentPoly::t() - LaurentPoly(1);
  SymFunc out{n, Basis::E, {}};
  for (const auto& [lambda, counts] : tally) {
    LaurentPoly c;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] != 0) c += Rational(static_cast<long>(counts[k])) * tm1.pow(static_cast<unsigned>(k));
    }
    if (!c.is_zero()) out.coeffs.emplace(lambda, RationalFunction(c));
  }
  return out;
}

bool palindromicity_check(const IndiffGraph& gamma) {
  check_size(gamma.n, 6, "palindromicity_check");
  const SymPoly x = csf(gamma);
  const RationalFunction scale(LaurentPoly::monomial(1, gamma.edge_count()));
  return scale * invert_t(x) == x;
}

std::map<Partition, LaurentPoly> d_coeffs(const IndiffGraph& gamma) {
  check_size(gamma.n, 6, "d_coeffs");
  const SymFunc d = expand_in_basis(csf(gamma), Basis::PT);
  std::map<Partition, LaurentPoly> out;
  for (const auto& [lambda, c] : d.coeffs) out.emplace(lambda, ratfunc_to_laurent(c));
  return out;
}

bool in_nonneg_poly_ring(const RationalFunction& p) {
  return p.is_laurent() && p.den() == LaurentPoly(1) && p.num().is_polynomial() && p.num().is_nonnegative_integral();
}

EExpansion e_expansion_X(const IndiffGraph& gamma) {
  check_size(gamma.n, 6, "e_expansion_X");
  EExpansion out{expand_in_basis(csf(gamma), Basis::E), {}};
  for (const auto& [lambda, c] : out.coeffs.coeffs) {
    if (!in_nonneg_poly_ring(c)) out.violations.push_back(lambda);
  }
  return out;
}

}  // namespace chromgl
