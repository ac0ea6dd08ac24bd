#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "compcoll/exact.hpp"

namespace compcoll {

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables. Terms are keyed by exponent vectors; zero
/// coefficients are never stored.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, BigRational>;

  explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, const BigRational& c) {
    MultiPoly p(arity);
    p.add_term(Exponent(arity, 0), c);
    return p;
  }

  static MultiPoly variable(std::size_t arity, std::size_t index) {
    MultiPoly p(arity);
    Exponent e(arity, 0);
    e.at(index) = 1;
    p.add_term(e, 1);
    return p;
  }

  /// c0 + sum_i coeffs[i] * x_i
  static MultiPoly linear(const RationalVector& coeffs, const BigRational& c0 = 0) {
    MultiPoly p = constant(coeffs.size(), c0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponent e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(e, coeffs[i]);
    }
    return p;
  }

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigRational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  void add_term(const Exponent& e, const BigRational& c) {
    if (e.size() != arity_) throw DomainError("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }

  bool is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return degree_of(t.first) == degree; });
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const BigRational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= BigRational(-1); }
  friend MultiPoly operator*(MultiPoly a, const BigRational& s) { return a *= s; }
  friend MultiPoly operator*(const BigRational& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.arity_);
    Exponent e(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(arity_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  BigRational evaluate(const RationalVector& x) const {
    if (x.size() != arity_) throw DomainError("evaluation point has wrong dimension");
    BigRational sum = 0;
    BigRational term;
    for (const auto& [e, c] : terms_) {
      term = c;
      for (std::size_t i = 0; i < arity_; ++i) {
        for (int k = 0; k < e[i]; ++k) term *= x[i];
      }
      sum += term;
    }
    return sum;
  }

  /// Replaces x_i by images[i]; the result has the images' arity.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != arity_) throw DomainError("substitution needs one image per variable");
    const std::size_t out_arity = images.empty() ? 0 : images.front().arity();
    std::vector<std::vector<MultiPoly>> powers(arity_);
    for (std::size_t i = 0; i < arity_; ++i) powers[i].push_back(constant(out_arity, 1));
    MultiPoly r(out_arity);
    for (const auto& [e, c] : terms_) {
      MultiPoly term = constant(out_arity, c);
      for (std::size_t i = 0; i < arity_; ++i) {
        while (powers[i].size() <= static_cast<std::size_t>(e[i]))
          powers[i].push_back(powers[i].back() * images[i]);
        if (e[i] > 0) term = term * powers[i][static_cast<std::size_t>(e[i])];
      }
      r += term;
    }
    return r;
  }

  /// Exchanges variables i and j.
  MultiPoly swap_variables(std::size_t i, std::size_t j) const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      std::swap(f.at(i), f.at(j));
      r.add_term(f, c);
    }
    return r;
  }

  /// Division by a nonzero linear (possibly affine) form, treating the
  /// polynomial as univariate in the form's last variable with nonzero
  /// coefficient. Returns {quotient, remainder}; the remainder is free of
  /// that variable and vanishes iff the form divides the polynomial.
  std::pair<MultiPoly, MultiPoly> divide_linear(const MultiPoly& form) const {
    check_arity(form);
    if (form.total_degree() != 1) throw DomainError("divisor must be a degree-1 form");
    std::size_t pivot = arity_;
    BigRational lead;
    for (std::size_t i = arity_; i-- > 0;) {
      Exponent unit(arity_, 0);
      unit[i] = 1;
      lead = form.coefficient(unit);
      if (lead != 0) {
        pivot = i;
        break;
      }
    }
    MultiPoly quotient(arity_);
    MultiPoly rem = *this;
    while (true) {
      // pick a remaining term with the highest power of the pivot variable
      const Exponent* best = nullptr;
      for (const auto& [e, c] : rem.terms_)
        if (e[pivot] > 0 && (!best || e[pivot] > (*best)[pivot])) best = &e;
      if (!best) break;
      Exponent e = *best;
      BigRational c = rem.coefficient(e) / lead;
      e[pivot] -= 1;
      MultiPoly step(arity_);
      step.add_term(e, c);
      quotient += step;
      rem -= step * form;
    }
    return {quotient, rem};
  }

  /// True iff form^power divides this polynomial exactly.
  bool divisible_by_power(const MultiPoly& form, unsigned power) const {
    MultiPoly p = *this;
    for (unsigned k = 0; k < power; ++k) {
      if (p.is_zero()) return true;
      auto [q, r] = p.divide_linear(form);
      if (!r.is_zero()) return false;
      p = std::move(q);
    }
    return true;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigRational mag = abs(c);
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      bool has_var = degree_of(e) > 0;
      bool unit = mag == 1 && has_var;
      if (!unit) out += mag.get_str();
      bool first = unit;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (e[i] == 0) continue;
        if (!first) out += "*";
        first = false;
        out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

 private:
  static int degree_of(const Exponent& e) {
    int d = 0;
    for (int k : e) d += k;
    return d;
  }

  void check_arity(const MultiPoly& o) const {
    if (o.arity_ != arity_) throw DomainError("polynomial arity mismatch");
  }

  std::size_t arity_;
  Terms terms_;
};

}  // namespace compcoll
