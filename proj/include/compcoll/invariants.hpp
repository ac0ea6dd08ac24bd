#pragma once

// Dimensions of SL_2-invariants in irreducible SL_{N+1}-modules, with SL_2
// embedded through the degree-N rational normal curve. The constant-term
// oracle is the reference; the rational generating function for N = 3 is
// stored data checked against it.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "compcoll/exact.hpp"
#include "compcoll/laurent.hpp"
#include "compcoll/parallel.hpp"
#include "compcoll/rootdata.hpp"

namespace compcoll {

/// Character of V_λ restricted to the principal torus of SL_2:
///   ∏_{i<=j} (t^{S_ij} - t^{-S_ij}) / ∏_{i<=j} (t^{j-i+1} - t^{-(j-i+1)}).
/// Only the full products divide exactly, so they are formed first.
inline LaurentPoly restriction_character(const RootSystemA& rs, const Weight& lam) {
  require_dominant(rs, lam);
  LaurentPoly num = LaurentPoly::monomial(0);
  LaurentPoly den = LaurentPoly::monomial(0);
  for (auto [i, j] : rs.positive_roots()) {
    std::int64_t s = 0;
    for (std::size_t k = i; k <= j; ++k) s += lam[k] + 1;
    num = num * LaurentPoly::antisymmetric_binomial(s);
    den = den * LaurentPoly::antisymmetric_binomial(static_cast<std::int64_t>(j - i + 1));
  }
  return laurent_divide_exact(num, den);
}

/// dim V_λ^{SL_2}: the t^0 coefficient of (1 - t^{-2}) times the restricted
/// character, i.e. mult(0) - mult(2).
inline BigInt sl2_invariant_dim(const RootSystemA& rs, const Weight& lam) {
  if (rs.rank() < 2) throw DomainError("the rational normal curve needs N >= 2");
  const auto chi = restriction_character(rs, lam);
  return chi.coefficient(0) - chi.coefficient(2);
}

/// Memo of oracle values, safe for concurrent readers and writers.
class InvariantTable {
 public:
  explicit InvariantTable(std::size_t rank) : rs_(rank) {}

  const RootSystemA& root_system() const { return rs_; }

  BigInt get(const Weight& lam) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(lam);
      if (it != table_.end()) return it->second;
    }
    BigInt value = sl2_invariant_dim(rs_, lam);
    std::unique_lock lock(mutex_);
    table_[lam] = value;
    return value;
  }

  std::optional<BigInt> cached(const Weight& lam) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(lam);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  RootSystemA rs_;
  mutable std::shared_mutex mutex_;
  std::map<Weight, BigInt> table_;
};

/// numerator / ∏ (1 - z^a) with an integer numerator in k variables.
struct RationalSeriesRep {
  using Exponent = std::vector<int>;

  std::size_t variables = 0;
  std::map<Exponent, BigInt> numerator;
  std::vector<Exponent> denominator_factors;
};

/// The generating function of dim V_{(a,b,c)}^{SL_2} for N = 3 as
/// P(z) / U(z), z^{(a,b,c)} = z1^a z2^b z3^c.
inline RationalSeriesRep theorem_mess_series() {
  static const std::vector<std::pair<int, std::array<int, 3>>> kNumerator = {
      {1, {0, 0, 0}}, {-1, {2, 1, 0}}, {1, {4, 2, 0}}, {1, {5, 1, 1}}, {1, {1, 2, 1}},
      {1, {3, 2, 1}}, {-1, {7, 2, 1}}, {-1, {3, 3, 1}}, {1, {2, 0, 2}}, {-1, {0, 1, 2}},
      {1, {2, 1, 2}}, {2, {2, 2, 2}}, {-1, {4, 2, 2}}, {-1, {6, 2, 2}}, {-1, {4, 3, 2}},
      {1, {3, 0, 3}}, {1, {3, 1, 3}}, {-1, {5, 1, 3}}, {1, {1, 2, 3}}, {1, {3, 2, 3}},
      {-3, {5, 2, 3}}, {-1, {1, 3, 3}}, {-1, {3, 3, 3}}, {-1, {5, 3, 3}}, {1, {7, 3, 3}},
      {1, {3, 4, 3}}, {1, {4, 1, 4}}, {-1, {6, 1, 4}}, {1, {0, 2, 4}}, {-1, {2, 2, 4}},
      {-2, {4, 2, 4}}, {-1, {6, 2, 4}}, {1, {8, 2, 4}}, {-1, {2, 3, 4}}, {1, {4, 3, 4}},
      {1, {5, 0, 5}}, {1, {1, 1, 5}}, {-1, {3, 1, 5}}, {-1, {5, 1, 5}}, {-1, {7, 1, 5}},
      {-3, {3, 2, 5}}, {1, {5, 2, 5}}, {1, {7, 2, 5}}, {-1, {3, 3, 5}}, {1, {5, 3, 5}},
      {1, {5, 4, 5}}, {-1, {4, 1, 6}}, {-1, {2, 2, 6}}, {-1, {4, 2, 6}}, {2, {6, 2, 6}},
      {1, {6, 3, 6}}, {-1, {8, 3, 6}}, {1, {6, 4, 6}}, {-1, {5, 1, 7}}, {-1, {1, 2, 7}},
      {1, {5, 2, 7}}, {1, {7, 2, 7}}, {1, {3, 3, 7}}, {1, {4, 2, 8}}, {-1, {6, 3, 8}},
      {1, {8, 4, 8}}
  };
  RationalSeriesRep s;
  s.variables = 3;
  for (const auto& [c, e] : kNumerator) s.numerator[{e[0], e[1], e[2]}] += c;
  s.denominator_factors = {{4, 0, 0}, {3, 0, 1}, {1, 0, 3}, {0, 0, 4},
                           {0, 1, 0}, {0, 3, 0}, {2, 1, 0}, {0, 1, 2}};
  return s;
}

/// Dense array over the box [0, bound]^k, last index fastest.
class DenseArray {
 public:
  DenseArray(std::size_t dims, std::size_t bound) : dims_(dims), side_(bound + 1) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < dims; ++i) n *= side_;
    data_.assign(n, BigInt(0));
  }

  std::size_t dims() const { return dims_; }
  std::size_t bound() const { return side_ - 1; }
  std::size_t size() const { return data_.size(); }

  std::vector<int> index_to_exponent(std::size_t flat) const {
    std::vector<int> e(dims_);
    for (std::size_t i = dims_; i-- > 0;) {
      e[i] = static_cast<int>(flat % side_);
      flat /= side_;
    }
    return e;
  }

  /// Flat index, or nullopt when e leaves the box.
  std::optional<std::size_t> flat(const std::vector<int>& e) const {
    if (e.size() != dims_) throw DomainError("exponent arity mismatch");
    std::size_t f = 0;
    for (int k : e) {
      if (k < 0 || static_cast<std::size_t>(k) >= side_) return std::nullopt;
      f = f * side_ + static_cast<std::size_t>(k);
    }
    return f;
  }

  BigInt& operator[](std::size_t i) { return data_[i]; }
  const BigInt& operator[](std::size_t i) const { return data_[i]; }

  BigInt at(const std::vector<int>& e) const {
    auto f = flat(e);
    return f ? data_[*f] : BigInt(0);
  }

 private:
  std::size_t dims_;
  std::size_t side_;
  std::vector<BigInt> data_;
};

/// Series coefficients for all multidegrees <= (bound,...,bound). Dividing by
/// (1 - z^a) is the in-place recurrence c[m] += c[m - a] in increasing
/// order; the numerator is convolved in afterwards.
inline DenseArray series_coefficients(const RationalSeriesRep& s, std::int64_t bound) {
  if (bound < 0) throw DomainError("bound must be nonnegative");
  DenseArray g(s.variables, static_cast<std::size_t>(bound));
  g[0] = 1;
  for (const auto& a : s.denominator_factors) {
    bool zero = true;
    for (int k : a) {
      if (k < 0) throw DomainError("denominator factor outside the positive orthant");
      if (k) zero = false;
    }
    if (zero || a.size() != s.variables) throw DomainError("bad denominator factor");
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto m = g.index_to_exponent(i);
      for (std::size_t v = 0; v < m.size(); ++v) m[v] -= a[v];
      if (auto j = g.flat(m)) g[i] += g[*j];
    }
  }
  DenseArray out(s.variables, static_cast<std::size_t>(bound));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    auto m = g.index_to_exponent(i);
    for (const auto& [e, c] : s.numerator) {
      std::vector<int> t(m.size());
      for (std::size_t v = 0; v < m.size(); ++v) t[v] = m[v] + e[v];
      if (auto j = out.flat(t)) out[*j] += c * g[i];
    }
  }
  return out;
}

struct GenfunMismatch {
  Weight weight;
  BigInt series;
  BigInt oracle;
};

struct GenfunReport {
  std::size_t checked = 0;
  std::vector<GenfunMismatch> mismatches;
};

/// Compares the N = 3 generating function with the oracle on [0, bound]^3.
inline GenfunReport verify_genfun(std::int64_t bound) {
  const auto coeffs = series_coefficients(theorem_mess_series(), bound);
  const RootSystemA rs(3);
  auto oracle = parallel_map<BigInt>(coeffs.size(), [&](std::size_t i) {
    auto e = coeffs.index_to_exponent(i);
    return sl2_invariant_dim(rs, Weight{e[0], e[1], e[2]});
  });
  GenfunReport r;
  r.checked = coeffs.size();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == oracle[i]) continue;
    auto e = coeffs.index_to_exponent(i);
    r.mismatches.push_back({Weight{e[0], e[1], e[2]}, coeffs[i], oracle[i]});
  }
  return r;
}

/// Isotypic decomposition of the sections: (μ, dim V_μ^{SL_2}) for the
/// lattice points μ of P_λ with nonzero multiplicity, in enumeration order.
inline std::vector<std::pair<Weight, BigInt>> sections_decomposition(const RootSystemA& rs, const Weight& lam) {
  std::vector<std::pair<Weight, BigInt>> out;
  for (auto& mu : p_lambda_lattice_points(rs, lam)) {
    BigInt m = sl2_invariant_dim(rs, mu);
    if (m != 0) out.emplace_back(std::move(mu), std::move(m));
  }
  return out;
}

}  // namespace compcoll
