#pragma once

// Volume of the divisor L_λ on the moduli space:
//   vol = s!/(N+1) · ∫_{P_λ} dimas_V(x) · dimas_{V^H}(x) dx.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compcoll/chambers.hpp"
#include "compcoll/exact.hpp"
#include "compcoll/multipoly.hpp"
#include "compcoll/parallel.hpp"
#include "compcoll/polytope.hpp"
#include "compcoll/rootdata.hpp"

namespace compcoll {

struct VolumeProblem {
  Case kind;
  unsigned s;             // dim G_a/H_a
  BigRational prefactor;  // s!/(N+1)
  Weight lam;

  static VolumeProblem make(Case c, const Weight& lam) {
    const std::size_t n = case_rank(c);
    const unsigned s = c == Case::Conic ? 5 : 12;
    require_dominant(RootSystemA(n), lam);
    return {c, s, BigRational(factorial(s)) / static_cast<long>(n + 1), lam};
  }
};

/// An extra hyperplane normal·x = offset used to refine the subdivision.
struct Cut {
  RationalVector normal;
  BigRational offset;
};

namespace detail {

/// Splits every region by both sides of every cut.
inline std::vector<Polytope> refine(std::vector<Polytope> regions, const std::vector<Cut>& cuts) {
  for (const auto& cut : cuts) {
    std::vector<Polytope> next;
    for (const auto& r : regions) {
      Polytope below = r;
      below.add({cut.normal, cut.offset});
      Polytope above = r;
      above.add_lower(cut.normal, cut.offset);
      next.push_back(std::move(below));
      next.push_back(std::move(above));
    }
    regions = std::move(next);
  }
  return regions;
}

}  // namespace detail

/// Exact volume. Cubic: P_λ is cut by the five walls of dimas_{V^H} into
/// at most eight regions, each carrying one polynomial integrand. Optional
/// cuts refine the subdivision without changing the value.
inline BigRational volume(const VolumeProblem& problem, const std::vector<Cut>& cuts = {}) {
  const RootSystemA rs(case_rank(problem.kind));
  const Polytope p = build_p_lambda(rs, problem.lam);
  const MultiPoly dv = dimas_v_poly(rs);

  std::vector<std::pair<Polytope, MultiPoly>> jobs;
  if (problem.kind == Case::Conic) {
    for (auto& r : detail::refine({p}, cuts)) jobs.emplace_back(std::move(r), dv * make_rational(1, 4));
  } else {
    const auto pieces = cubic_dimas_pieces();
    for (const auto& piece : pieces.pieces()) {
      Polytope region = p;
      for (auto& h : piece.as_halfspaces()) region.add(std::move(h));
      const MultiPoly integrand = dv * piece.poly;
      for (auto& r : detail::refine({region}, cuts)) jobs.emplace_back(std::move(r), integrand);
    }
  }
  auto parts = parallel_map<BigRational>(jobs.size(), [&](std::size_t i) {
    return integrate_poly_over_polytope(jobs[i].second, jobs[i].first);
  });
  BigRational total = 0;
  for (const auto& v : parts) total += v;
  return problem.prefactor * total;
}

inline BigRational volume(Case c, const Weight& lam) { return volume(VolumeProblem::make(c, lam)); }

/// (a^5 + 10a^4b + 40a^3b^2 + 40a^2b^3 + 10ab^4 + b^5) / 32
inline MultiPoly conic_volume_polynomial() {
  MultiPoly p(2);
  const int coeffs[] = {1, 10, 40, 40, 10, 1};
  for (int i = 0; i <= 5; ++i) p.add_term({5 - i, i}, make_rational(coeffs[i], 32));
  return p;
}

struct PolynomialityReport {
  std::size_t checked = 0;
  std::vector<std::pair<Weight, BigRational>> mismatches;  // weight, computed volume
  std::optional<MultiPoly> fitted;                          // cubic, when enough samples
};

namespace detail {

inline std::vector<MultiPoly::Exponent> homogeneous_exponents(std::size_t vars, int degree) {
  std::vector<MultiPoly::Exponent> out;
  if (vars == 1) return {{degree}};
  for (int first = degree; first >= 0; --first)
    for (auto& rest : homogeneous_exponents(vars - 1, degree - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

inline BigRational monomial_value(const MultiPoly::Exponent& e, const Weight& w) {
  BigRational v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) v *= static_cast<long>(w[i]);
  return v;
}

}  // namespace detail

/// Checks that the volume is a single homogeneous polynomial on the chamber
/// of chamber_rep. Conic: compares with the closed form. Cubic: with at
/// least 92 weights, fits the 91 coefficients of a degree-12 form on the
/// first 91 and tests the rest; otherwise checks vol(kλ) = k^12 vol(λ) for
/// k = 2, 3. Throws ChamberError for weights outside the chamber of the
/// representative.
inline PolynomialityReport verify_volume_polynomiality(Case c, const Weight& chamber_rep, const std::vector<Weight>& tests) {
  const RootSystemA rs(case_rank(c));
  require_dominant(rs, chamber_rep);
  for (const auto& w : tests) require_dominant(rs, w);
  PolynomialityReport r;
  if (c == Case::Conic) {
    const auto closed = conic_volume_polynomial();
    auto vols = parallel_map<BigRational>(tests.size(), [&](std::size_t i) { return volume(c, tests[i]); });
    for (std::size_t i = 0; i < tests.size(); ++i) {
      ++r.checked;
      if (vols[i] != closed.evaluate(tests[i].as_rational())) r.mismatches.emplace_back(tests[i], vols[i]);
    }
    return r;
  }

  const auto rep_sig = cubic_signature(chamber_rep.as_rational());
  for (int s : rep_sig)
    if (s == 0) throw ChamberError("representative " + chamber_rep.to_string() + " lies on a wall");
  for (const auto& w : tests)
    if (cubic_signature(w.as_rational()) != rep_sig)
      throw ChamberError("weight " + w.to_string() + " is not in the chamber of " + chamber_rep.to_string());

  const auto monomials = detail::homogeneous_exponents(3, 12);
  if (tests.size() > monomials.size()) {
    auto vols = parallel_map<BigRational>(tests.size(), [&](std::size_t i) { return volume(c, tests[i]); });
    RationalMatrix a;
    RationalVector b;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      RationalVector row;
      for (const auto& e : monomials) row.push_back(detail::monomial_value(e, tests[i]));
      a.push_back(std::move(row));
      b.push_back(vols[i]);
    }
    auto coeffs = solve(a, b);
    if (!coeffs) throw ChamberError("sample weights do not determine a degree-12 form; choose more generic weights");
    MultiPoly fit(3);
    for (std::size_t j = 0; j < monomials.size(); ++j) fit.add_term(monomials[j], (*coeffs)[j]);
    for (std::size_t i = monomials.size(); i < tests.size(); ++i) {
      ++r.checked;
      if (fit.evaluate(tests[i].as_rational()) != vols[i]) r.mismatches.emplace_back(tests[i], vols[i]);
    }
    r.fitted = std::move(fit);
    return r;
  }
  for (const auto& w : tests) {
    const auto base = volume(c, w);
    for (long k : {2L, 3L}) {
      ++r.checked;
      BigRational scale = 1;
      for (int i = 0; i < 12; ++i) scale *= k;
      const auto scaled = volume(c, k * w);
      if (scaled != scale * base) r.mismatches.emplace_back(k * w, scaled);
    }
  }
  return r;
}

}  // namespace compcoll
