#pragma once

// Root data of type A_N (the group SL_{N+1}) in fundamental-weight
// coordinates: weights, Cartan data, the Weyl dimension formula, its top
// homogeneous part, and the polytope / lattice set of dominant weights below
// a given highest weight.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "compcoll/exact.hpp"
#include "compcoll/multipoly.hpp"
#include "compcoll/polytope.hpp"

namespace compcoll {

/// Integer weight in the basis of fundamental weights ω_1..ω_N.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

  std::size_t rank() const { return coords_.size(); }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }

  bool is_dominant() const {
    for (auto c : coords_)
      if (c < 0) return false;
    return true;
  }

  RationalVector as_rational() const { return to_rational(coords_); }

  Weight& operator+=(const Weight& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a) {
    for (auto& c : a.coords_) c *= k;
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// Comma-separated coordinates, e.g. "4,2,0".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s;
  }

 private:
  void check(const Weight& o) const {
    if (o.rank() != rank()) throw DomainError("weight rank mismatch");
  }

  std::vector<std::int64_t> coords_;
};

/// Parses "a,b,c" into a weight.
inline Weight parse_weight(const std::string& text) {
  std::vector<std::int64_t> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      c.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw DomainError("not an integer weight: '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Weight(std::move(c));
}

/// Root system A_N. Simple root α_i = 2ω_i - ω_{i-1} - ω_{i+1}; positive
/// roots are α_i + ... + α_j for 1 <= i <= j <= N (stored 0-based).
class RootSystemA {
 public:
  explicit RootSystemA(std::size_t n) : n_(n) {
    if (n == 0) throw DomainError("rank must be positive");
    cartan_.assign(n, std::vector<std::int64_t>(n, 0));
    cartan_inverse_.assign(n, RationalVector(n, BigRational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      cartan_[i][i] = 2;
      if (i + 1 < n) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
    }
    // (C^{-1})_{ij} = min(i,j)·(N+1-max(i,j)) / (N+1), 1-based
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto lo = static_cast<long>(std::min(i, j) + 1);
        auto hi = static_cast<long>(std::max(i, j) + 1);
        cartan_inverse_[i][j] = make_rational(lo * (static_cast<long>(n) + 1 - hi), static_cast<long>(n) + 1);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) positive_roots_.emplace_back(i, j);
  }

  std::size_t rank() const { return n_; }
  const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }
  const RationalMatrix& cartan_inverse() const { return cartan_inverse_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& positive_roots() const { return positive_roots_; }
  std::size_t positive_root_count() const { return positive_roots_.size(); }

  Weight simple_root(std::size_t i) const { return Weight(cartan_.at(i)); }

  /// Coefficients of w in the simple-root basis (C^{-1} w).
  RationalVector root_coordinates(const Weight& w) const {
    check(w);
    RationalVector out(n_, BigRational(0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += cartan_inverse_[i][j] * static_cast<long>(w[j]);
    return out;
  }

  void check(const Weight& w) const {
    if (w.rank() != n_) throw DomainError("weight rank " + std::to_string(w.rank()) + " differs from root system rank " + std::to_string(n_));
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::int64_t>> cartan_;
  RationalMatrix cartan_inverse_;
  std::vector<std::pair<std::size_t, std::size_t>> positive_roots_;
};

inline void require_dominant(const RootSystemA& rs, const Weight& lam) {
  rs.check(lam);
  if (!lam.is_dominant()) throw DomainError("weight " + lam.to_string() + " is not dominant");
}

/// Weyl dimension formula: ∏_{i<=j} S_ij / (j-i+1), S_ij = Σ_{k=i..j}(a_k+1).
inline BigInt weyl_dim(const RootSystemA& rs, const Weight& lam) {
  require_dominant(rs, lam);
  BigInt num = 1;
  BigInt den = 1;
  for (auto [i, j] : rs.positive_roots()) {
    std::int64_t s = 0;
    for (std::size_t k = i; k <= j; ++k) s += lam[k] + 1;
    num *= static_cast<long>(s);
    den *= static_cast<long>(j - i + 1);
  }
  return num / den;
}

/// Top homogeneous part of the Weyl dimension polynomial,
/// ∏_{i<=j} (x_i + ... + x_j)/(j-i+1).
inline MultiPoly dimas_v_poly(const RootSystemA& rs) {
  const std::size_t n = rs.rank();
  MultiPoly p = MultiPoly::constant(n, 1);
  for (auto [i, j] : rs.positive_roots()) {
    RationalVector c(n, BigRational(0));
    for (std::size_t k = i; k <= j; ++k) c[k] = make_rational(1, static_cast<long>(j - i + 1));
    p = p * MultiPoly::linear(c);
  }
  return p;
}

/// The real polytope of dominant x with λ - x a nonnegative combination of
/// simple roots: x_k >= 0, and (C^{-1}x)_r <= (C^{-1}λ)_r for every row r.
inline Polytope build_p_lambda(const RootSystemA& rs, const Weight& lam) {
  require_dominant(rs, lam);
  const std::size_t n = rs.rank();
  Polytope p(n);
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector normal(n, BigRational(0));
    normal[k] = -1;
    p.add({std::move(normal), 0});
  }
  const auto bound = rs.root_coordinates(lam);
  for (std::size_t r = 0; r < n; ++r) p.add({rs.cartan_inverse()[r], bound[r]});
  return p;
}

/// Dominant weights λ - Σ c_i α_i with c_i ∈ ℕ, listed in lexicographic
/// order of (c_1,...,c_N). Each c_i ranges up to ⌊(C^{-1}λ)_i⌋.
inline std::vector<Weight> p_lambda_lattice_points(const RootSystemA& rs, const Weight& lam) {
  require_dominant(rs, lam);
  const std::size_t n = rs.rank();
  const auto bound = rs.root_coordinates(lam);
  std::vector<std::int64_t> cmax(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), bound[i].get_num_mpz_t(), bound[i].get_den_mpz_t());
    cmax[i] = fl.get_si();
  }
  std::vector<Weight> out;
  std::vector<std::int64_t> c(n, 0);
  while (true) {
    Weight mu = lam;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mu[j] -= c[i] * rs.cartan()[i][j];
    if (mu.is_dominant()) out.push_back(std::move(mu));
    std::size_t k = n;
    while (k > 0 && c[k - 1] == cmax[k - 1]) {
      c[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
    ++c[k - 1];
  }
  return out;
}

}  // namespace compcoll
