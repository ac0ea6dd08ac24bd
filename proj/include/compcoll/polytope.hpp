#pragma once

// Exact convex polytopes in small dimension: brute-force vertex enumeration
// from an H-representation, a pulling triangulation, and exact integration of
// polynomials over the resulting simplices.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "compcoll/exact.hpp"
#include "compcoll/multipoly.hpp"

namespace compcoll {

using Point = RationalVector;

/// normal · x <= offset
struct HalfSpace {
  RationalVector normal;
  BigRational offset;

  bool contains(const Point& x) const { return dot(normal, x) <= offset; }
  bool tight_at(const Point& x) const { return dot(normal, x) == offset; }
};

/// Convex polytope given by half-spaces; vertices are computed on demand and
/// cached.
class Polytope {
 public:
  explicit Polytope(std::size_t dim) : dim_(dim) {}
  Polytope(std::size_t dim, std::vector<HalfSpace> halfspaces) : dim_(dim), halfspaces_(std::move(halfspaces)) {
    for (const auto& h : halfspaces_)
      if (h.normal.size() != dim_) throw DomainError("half-space dimension mismatch");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

  void add(HalfSpace h) {
    if (h.normal.size() != dim_) throw DomainError("half-space dimension mismatch");
    halfspaces_.push_back(std::move(h));
    vertices_.reset();
  }

  /// Adds lo <= normal·x, i.e. -normal·x <= -lo.
  void add_lower(const RationalVector& normal, const BigRational& lo) {
    RationalVector neg(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) neg[i] = -normal[i];
    add({std::move(neg), -lo});
  }

  bool contains(const Point& x) const {
    return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const HalfSpace& h) { return h.contains(x); });
  }

  const std::vector<Point>& vertices() const;

 private:
  std::size_t dim_;
  std::vector<HalfSpace> halfspaces_;
  mutable std::optional<std::vector<Point>> vertices_;
};

namespace detail {

/// Calls f on every k-subset of {0..n-1} (as a sorted index vector).
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Affine dimension of a point set (-1 when empty).
inline int affine_dimension(const std::vector<Point>& pts, const std::vector<std::size_t>& which) {
  if (which.empty()) return -1;
  RationalMatrix diffs;
  const Point& base = pts[which.front()];
  for (std::size_t i = 1; i < which.size(); ++i) {
    RationalVector d(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) d[j] = pts[which[i]][j] - base[j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(diffs));
}

/// Nonzero recession direction of {x : A x <= b}, if any. Directions are
/// found as one-dimensional null spaces of (d-1)-subsets of rows or as the
/// lineality space when A is rank deficient.
inline bool has_recession_direction(const std::vector<HalfSpace>& hs, std::size_t dim) {
  RationalMatrix a;
  for (const auto& h : hs) a.push_back(h.normal);
  if (rank(a) < dim) return true;
  bool found = false;
  auto feasible_dir = [&](const RationalVector& v) {
    return std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& h) { return dot(h.normal, v) <= 0; });
  };
  for_each_subset(hs.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
    if (found) return;
    RationalMatrix sub;
    for (auto i : idx) sub.push_back(hs[i].normal);
    auto ns = null_space(sub, dim);
    if (ns.size() != 1) return;
    RationalVector v = ns.front();
    if (feasible_dir(v)) found = true;
    for (auto& x : v) x = -x;
    if (feasible_dir(v)) found = true;
  });
  return found;
}

}  // namespace detail

/// Exact V-representation of a bounded polytope. Enumerates all d-subsets of
/// boundary hyperplanes, keeps feasible intersection points, deduplicates.
/// Throws UnboundednessError for a nonempty unbounded region (or one whose
/// constraint normals do not span the space).
inline std::vector<Point> polytope_vertices(const Polytope& p) {
  const std::size_t d = p.dim();
  const auto& hs = p.halfspaces();
  std::vector<Point> verts;
  if (d == 0) return {Point{}};
  detail::for_each_subset(hs.size(), d, [&](const std::vector<std::size_t>& idx) {
    RationalMatrix a;
    RationalVector b;
    for (auto i : idx) {
      a.push_back(hs[i].normal);
      b.push_back(hs[i].offset);
    }
    auto x = solve(a, b);
    if (!x || !p.contains(*x)) return;
    if (std::find(verts.begin(), verts.end(), *x) == verts.end()) verts.push_back(std::move(*x));
  });
  if (detail::has_recession_direction(hs, d)) {
    RationalMatrix a;
    for (const auto& h : hs) a.push_back(h.normal);
    if (!verts.empty() || rank(a) < d) throw UnboundednessError("polytope is unbounded");
  }
  return verts;
}

inline const std::vector<Point>& Polytope::vertices() const {
  if (!vertices_) vertices_ = polytope_vertices(*this);
  return *vertices_;
}

using Simplex = std::vector<std::size_t>;  // indices into a vertex list

namespace detail {

/// Pulling triangulation of the face spanned by `face` (vertex indices,
/// affine dimension `dim`): cone from the first vertex over every facet of
/// the face that avoids it. Facets are the maximal vertex subsets tight at
/// one of the half-spaces.
inline void pull_triangulate(const std::vector<Point>& pts, const std::vector<HalfSpace>& hs,
                             const std::vector<std::size_t>& face, int dim, std::vector<Simplex>& out) {
  if (dim == 0) {
    out.push_back({face.front()});
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> facets;
  for (const auto& h : hs) {
    if (h.tight_at(pts[apex])) continue;
    std::vector<std::size_t> sub;
    for (auto v : face)
      if (h.tight_at(pts[v])) sub.push_back(v);
    if (static_cast<int>(sub.size()) < dim) continue;
    if (affine_dimension(pts, sub) != dim - 1) continue;
    facets.insert(std::move(sub));
  }
  for (const auto& f : facets) {
    std::vector<Simplex> sub;
    pull_triangulate(pts, hs, f, dim - 1, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace detail

/// Triangulates the polytope with pulling order given by `order` (a
/// permutation of vertex indices; the first entry is the fan apex). Returns
/// an empty list for lower-dimensional polytopes.
inline std::vector<Simplex> triangulate(const Polytope& p, std::size_t apex = 0) {
  const auto& pts = p.vertices();
  if (pts.empty()) return {};
  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (apex >= all.size()) throw DomainError("apex index out of range");
  std::rotate(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(apex), all.end());
  if (detail::affine_dimension(pts, all) != static_cast<int>(p.dim())) return {};
  std::vector<Simplex> out;
  detail::pull_triangulate(pts, p.halfspaces(), all, static_cast<int>(p.dim()), out);
  return out;
}

/// Exact integral of `poly` over the simplex with the given vertices. The
/// integrand is rewritten in barycentric coordinates l_0..l_d and each
/// monomial integrated with
///   ∫ l^k dV = d!·vol · ∏ k_i! / (d + Σ k_i)!,   d!·vol = |det(v_i - v_0)|.
inline BigRational integrate_over_simplex(const MultiPoly& poly, const std::vector<Point>& simplex) {
  const std::size_t d = poly.arity();
  if (simplex.size() != d + 1) throw DomainError("simplex needs d+1 vertices");
  RationalMatrix edges;
  for (std::size_t i = 1; i <= d; ++i) {
    RationalVector e(d);
    for (std::size_t j = 0; j < d; ++j) e[j] = simplex[i][j] - simplex[0][j];
    edges.push_back(std::move(e));
  }
  const BigRational scaled_volume = abs(determinant(edges));
  if (scaled_volume == 0) return 0;

  std::vector<MultiPoly> images;
  for (std::size_t j = 0; j < d; ++j) {
    RationalVector coeffs(d + 1);
    for (std::size_t i = 0; i <= d; ++i) coeffs[i] = simplex[i][j];
    images.push_back(MultiPoly::linear(coeffs));
  }
  const MultiPoly bary = poly.substitute(images);

  BigRational total = 0;
  for (const auto& [k, c] : bary.terms()) {
    BigInt num = 1;
    unsigned deg = 0;
    for (int ki : k) {
      num *= factorial(static_cast<unsigned>(ki));
      deg += static_cast<unsigned>(ki);
    }
    total += c * BigRational(num) / BigRational(factorial(static_cast<unsigned>(d) + deg));
  }
  return total * scaled_volume;
}

/// Exact ∫_p poly dV. Lower-dimensional (or empty) polytopes integrate to 0.
inline BigRational integrate_poly_over_polytope(const MultiPoly& poly, const Polytope& p, std::size_t apex = 0) {
  if (poly.arity() != p.dim()) throw DomainError("integrand arity differs from polytope dimension");
  const auto& pts = p.vertices();
  BigRational total = 0;
  for (const auto& s : triangulate(p, apex)) {
    std::vector<Point> simplex;
    for (auto i : s) simplex.push_back(pts[i]);
    total += integrate_over_simplex(poly, simplex);
  }
  return total;
}

}  // namespace compcoll
