#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "compcoll/exact.hpp"

namespace compcoll {

/// One-variable Laurent polynomial in t with big-integer coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const Exponent, BigInt>> init) {
    for (const auto& [e, c] : init) add_term(e, c);
  }

  static LaurentPoly monomial(Exponent e, const BigInt& c = 1) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  /// t^e - t^-e
  static LaurentPoly antisymmetric_binomial(Exponent e) {
    LaurentPoly p;
    p.add_term(e, 1);
    p.add_term(-e, -1);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  Exponent min_exponent() const { return terms_.begin()->first; }
  Exponent max_exponent() const { return terms_.rbegin()->first; }

  /// Sum of all coefficients, i.e. the value at t = 1.
  BigInt coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  void add_term(Exponent e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      bool unit = (mag == 1) && e != 0;
      if (!unit) out += mag.get_str();
      if (e != 0) {
        if (!unit) out += "*";
        out += "t";
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

/// Exact quotient num/den. Both operands are shifted to ordinary polynomials
/// and divided by schoolbook long division; a nonzero remainder raises
/// ExactnessError.
inline LaurentPoly laurent_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("division by the zero Laurent polynomial");
  if (num.is_zero()) return {};

  const auto num_lo = num.min_exponent();
  const auto den_lo = den.min_exponent();
  const auto num_deg = num.max_exponent() - num_lo;
  const auto den_deg = den.max_exponent() - den_lo;
  if (num_deg < den_deg) throw ExactnessError("Laurent division is not exact: degree deficit");

  std::vector<BigInt> n(static_cast<std::size_t>(num_deg + 1));
  for (const auto& [e, c] : num.terms()) n[static_cast<std::size_t>(e - num_lo)] = c;
  std::vector<std::pair<std::size_t, BigInt>> d;
  for (const auto& [e, c] : den.terms()) d.emplace_back(static_cast<std::size_t>(e - den_lo), c);
  const BigInt& lead = d.back().second;
  const auto dd = static_cast<std::size_t>(den_deg);

  const auto qlen = static_cast<std::size_t>(num_deg - den_deg + 1);
  std::vector<BigInt> q(qlen);
  BigInt rem;
  for (std::size_t i = qlen; i-- > 0;) {
    BigInt& top = n[i + dd];
    if (top == 0) continue;
    mpz_fdiv_qr(q[i].get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (rem != 0) throw ExactnessError("Laurent division is not exact: non-integral quotient");
    for (const auto& [off, c] : d) n[i + off] -= q[i] * c;
  }
  for (const auto& c : n)
    if (c != 0) throw ExactnessError("Laurent division is not exact: nonzero remainder");

  LaurentPoly out;
  const auto shift = num_lo - den_lo;
  for (std::size_t i = 0; i < qlen; ++i)
    if (q[i] != 0) out.add_term(static_cast<LaurentPoly::Exponent>(i) + shift, q[i]);
  return out;
}

}  // namespace compcoll
