#pragma once

// Vector partition functions, lattice spans, and the four SL_4 lists A1..A4
// with their transcribed multivariate splines; the asymptotic invariant
// dimension for the conic and twisted-cubic cases.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compcoll/exact.hpp"
#include "compcoll/invariants.hpp"
#include "compcoll/multipoly.hpp"
#include "compcoll/piecewise.hpp"
#include "compcoll/polytope.hpp"
#include "compcoll/rootdata.hpp"

namespace compcoll {

using IntVector = std::vector<std::int64_t>;

struct VectorList {
  std::size_t d = 0;
  std::vector<IntVector> vectors;

  VectorList() = default;
  VectorList(std::size_t dim, std::vector<IntVector> vs) : d(dim), vectors(std::move(vs)) {
    for (const auto& v : vectors)
      if (v.size() != d) throw DomainError("vector of wrong dimension in list");
  }
  std::size_t size() const { return vectors.size(); }
};

/// Table of partition counts T_A(m) for every m in the box [0, box]. Runs
/// in machine words and redoes the table with big integers on overflow.
class PartitionTable {
 public:
  PartitionTable(const VectorList& a, const IntVector& box) : box_(box), stride_(box.size()) {
    if (box.size() != a.d) throw DomainError("target dimension differs from list dimension");
    std::size_t n = 1;
    for (std::size_t k = box.size(); k-- > 0;) {
      if (box[k] < 0) throw DomainError("negative box");
      stride_[k] = n;
      n *= static_cast<std::size_t>(box[k] + 1);
    }
    for (const auto& v : a.vectors) {
      bool zero = true;
      for (auto c : v) {
        if (c < 0) throw DomainError("partition counting needs vectors in the positive orthant");
        if (c) zero = false;
      }
      if (zero) throw DomainError("zero vector gives infinitely many partitions");
    }
    small_.assign(n, 0);
    small_[0] = 1;
    bool overflow = false;
    run(a, small_, [&](std::uint64_t& dst, std::uint64_t src) { overflow |= __builtin_add_overflow(dst, src, &dst); });
    if (!overflow) return;
    small_.clear();
    big_.assign(n, BigInt(0));
    big_[0] = 1;
    run(a, big_, [](BigInt& dst, const BigInt& src) { dst += src; });
  }

  BigInt at(const IntVector& target) const {
    std::size_t f = 0;
    for (std::size_t k = 0; k < target.size(); ++k) {
      if (target[k] < 0 || target[k] > box_[k]) return 0;
      f += static_cast<std::size_t>(target[k]) * stride_[k];
    }
    if (!big_.empty()) return big_[f];
    return BigInt(std::to_string(small_[f]));
  }

 private:
  // one vector at a time: c[m] += c[m - v], m ascending
  template <class T, class Add>
  void run(const VectorList& a, std::vector<T>& c, Add add) const {
    IntVector m(box_.size());
    for (const auto& v : a.vectors) {
      std::size_t offset = 0;
      for (std::size_t k = 0; k < v.size(); ++k) offset += static_cast<std::size_t>(v[k]) * stride_[k];
      std::fill(m.begin(), m.end(), 0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        bool inside = true;
        for (std::size_t k = 0; k < m.size(); ++k)
          if (m[k] < v[k]) {
            inside = false;
            break;
          }
        if (inside) add(c[i], c[i - offset]);
        for (std::size_t k = m.size(); k-- > 0;) {
          if (++m[k] <= box_[k]) break;
          m[k] = 0;
        }
      }
    }
  }

  IntVector box_;
  std::vector<std::size_t> stride_;
  std::vector<std::uint64_t> small_;
  std::vector<BigInt> big_;
};

/// Number of ways to write target as a nonnegative integer combination of
/// the list (repetitions counted separately).
inline BigInt vector_partition_count(const VectorList& a, const IntVector& target) {
  for (auto c : target)
    if (c < 0) return 0;
  return PartitionTable(a, target).at(target);
}

struct LatticeSpan {
  std::vector<IntVector> basis;  // upper-triangular rows (Hermite form)
  BigInt index;

  /// v ∈ Λ(A)?
  bool contains(const IntVector& v) const {
    RationalMatrix m(v.size(), RationalVector(basis.size()));
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (std::size_t k = 0; k < v.size(); ++k) m[k][r] = static_cast<long>(basis[r][k]);
    auto c = solve(m, to_rational(v));
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const BigRational& q) { return q.get_den() == 1; });
  }
};

/// Integer row reduction of the list to a basis of Λ(A) and the index
/// [ℤ^d : Λ(A)] = |det basis|. Throws RankError when A does not span ℚ^d.
inline LatticeSpan lattice_span_and_index(const VectorList& a) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& v : a.vectors) {
    std::vector<BigInt> r;
    for (auto c : v) r.emplace_back(static_cast<long>(c));
    rows.push_back(std::move(r));
  }
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < a.d && pivot < rows.size(); ++col) {
    // Euclid on column col among rows[pivot..]
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || abs(BigRational(rows[r][col])) < abs(BigRational(rows[best][col]))))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[pivot], rows[best]);
      bool done = true;
      for (std::size_t r = pivot + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot][col].get_mpz_t());
        for (std::size_t k = 0; k < a.d; ++k) rows[r][k] -= q * rows[pivot][k];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot][col] == 0) continue;
    if (rows[pivot][col] < 0)
      for (auto& c : rows[pivot]) c = -c;
    ++pivot;
  }
  if (pivot < a.d) throw RankError("vector list does not span the ambient space");
  LatticeSpan out;
  out.index = 1;
  for (std::size_t r = 0; r < a.d; ++r) {
    IntVector b;
    for (const auto& c : rows[r]) b.push_back(c.get_si());
    out.index *= rows[r][r];
    out.basis.push_back(std::move(b));
  }
  if (out.index < 0) out.index = -out.index;
  return out;
}

/// Primitive integer vector, first nonzero entry positive.
inline IntVector primitive_normal(const RationalVector& v) {
  BigInt den = 1;
  for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> z;
  BigInt g = 0;
  for (const auto& q : v) {
    BigInt c = q.get_num() * (den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    z.push_back(std::move(c));
  }
  if (g == 0) throw DomainError("zero normal");
  IntVector out;
  for (auto& c : z) out.push_back(BigInt(c / g).get_si());
  for (auto c : out)
    if (c != 0) {
      if (c < 0)
        for (auto& x : out) x = -x;
      break;
    }
  return out;
}

inline IntVector cross(const IntVector& u, const IntVector& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Primitive normals of all planes spanned by two independent vectors of a
/// rank-3 list, up to sign, in order of first appearance. Facet planes of
/// C(A) are included.
inline std::vector<IntVector> wall_hyperplanes(const VectorList& a) {
  if (a.d != 3) throw DomainError("wall_hyperplanes needs d = 3");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      auto n = cross(a.vectors[i], a.vectors[j]);
      if (n == IntVector{0, 0, 0}) continue;
      auto p = primitive_normal(to_rational(n));
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  return out;
}

/// Walls that cut through the interior of C(A): some vector lies strictly
/// on each side.
inline std::vector<IntVector> interior_walls(const VectorList& a) {
  std::vector<IntVector> out;
  for (auto& n : wall_hyperplanes(a)) {
    bool pos = false, neg = false;
    for (const auto& v : a.vectors) {
      auto s = dot(n, v);
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) out.push_back(std::move(n));
  }
  return out;
}

enum class ListId { A1, A2, A3, A4 };

inline std::string to_string(ListId id) {
  static const char* names[] = {"A1", "A2", "A3", "A4"};
  return names[static_cast<int>(id)];
}

inline ListId parse_list_id(const std::string& s) {
  if (s == "A1") return ListId::A1;
  if (s == "A2") return ListId::A2;
  if (s == "A3") return ListId::A3;
  if (s == "A4") return ListId::A4;
  throw DomainError("unknown list '" + s + "' (expected A1..A4)");
}

inline VectorList spline_list(ListId id) {
  switch (id) {
    case ListId::A1:
      return {3, {{4, 0, 0}, {3, 0, 1}, {1, 0, 3}, {0, 0, 4}, {0, 1, 0}, {0, 3, 0}}};
    case ListId::A2:
      return {3, {{4, 0, 0}, {0, 0, 4}, {0, 1, 0}, {0, 3, 0}, {2, 1, 0}, {0, 1, 2}}};
    case ListId::A3:
      return {3, {{4, 0, 0}, {3, 0, 1}, {0, 0, 4}, {0, 1, 0}, {0, 3, 0}, {2, 1, 0}}};
    case ListId::A4:
      return {3, {{0, 0, 4}, {1, 0, 3}, {4, 0, 0}, {0, 1, 0}, {0, 3, 0}, {0, 1, 2}}};
  }
  throw DomainError("unknown list");
}

/// Two pieces whose cones share a 2-dimensional face.
struct Adjacency {
  std::size_t first;
  std::size_t second;
  IntVector wall;
  unsigned order;  // #vectors off the wall - 1
};

/// A piece touching a facet x_k = 0 of C(A) in a 2-dimensional face.
struct BoundaryContact {
  std::size_t piece;
  std::size_t coordinate;
  unsigned order;
};

struct SplineModel {
  ListId list_id;
  VectorList vectors;
  PiecewisePoly pieces;
  LatticeSpan lattice;

  BigInt index_in_ambient() const { return lattice.index; }
  BigRational evaluate(const Point& x) const { return pieces.evaluate(x); }
  std::vector<Adjacency> adjacencies() const;
  std::vector<BoundaryContact> boundary_contacts() const;
};

namespace detail {

inline MultiPoly lin(long a, long b, long c) { return MultiPoly::linear({a, b, c}); }

inline Guard ge(long a, long b, long c) { return {{a, b, c}, false}; }

inline std::size_t off_wall_count(const VectorList& a, const IntVector& n) {
  return static_cast<std::size_t>(std::count_if(a.vectors.begin(), a.vectors.end(), [&](const IntVector& v) { return dot(n, v) != 0; }));
}

/// Section of a closed cone by the octant and the slab x1+x2+x3 <= 1.
inline Polytope cone_section(const std::vector<HalfSpace>& guards, std::size_t d) {
  Polytope p(d, guards);
  for (std::size_t k = 0; k < d; ++k) {
    RationalVector e(d, BigRational(0));
    e[k] = -1;
    p.add({e, 0});
  }
  p.add({RationalVector(d, BigRational(1)), 1});
  return p;
}

inline std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace detail

inline std::vector<Adjacency> SplineModel::adjacencies() const {
  std::vector<Adjacency> out;
  const auto& ps = pieces.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      auto hs = ps[i].as_halfspaces();
      for (auto& h : ps[j].as_halfspaces()) hs.push_back(std::move(h));
      const auto section = detail::cone_section(hs, 3);
      const auto& verts = section.vertices();
      if (detail::affine_dimension(verts, detail::iota(verts.size())) != 2) continue;
      auto ns = null_space(RationalMatrix(verts.begin(), verts.end()), 3);
      if (ns.size() != 1) continue;  // face lies in a plane not through 0
      auto n = primitive_normal(ns.front());
      out.push_back({i, j, n, static_cast<unsigned>(detail::off_wall_count(vectors, n) - 1)});
    }
  return out;
}

inline std::vector<BoundaryContact> SplineModel::boundary_contacts() const {
  std::vector<BoundaryContact> out;
  const auto& ps = pieces.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      auto hs = ps[i].as_halfspaces();
      RationalVector e(3, BigRational(0));
      e[k] = 1;
      hs.push_back({e, 0});
      const auto section = detail::cone_section(hs, 3);
      const auto& verts = section.vertices();
      if (detail::affine_dimension(verts, detail::iota(verts.size())) != 2) continue;
      IntVector n(3, 0);
      n[k] = 1;
      out.push_back({i, k, static_cast<unsigned>(detail::off_wall_count(vectors, n) - 1)});
    }
  return out;
}

/// Transcribed spline pieces of T_A. Cells are cones cut out by the guards;
/// the fan covers the positive octant.
inline SplineModel spline_model(ListId id) {
  using detail::ge;
  using detail::lin;
  const MultiPoly x1 = lin(1, 0, 0), x2 = lin(0, 1, 0), x3 = lin(0, 0, 1);
  std::vector<Piece> ps;
  switch (id) {
    case ListId::A1: {
      const BigRational a = make_rational(1, 288);
      ps.push_back({"c1", {ge(1, 0, -3)}, a * x2 * x3.pow(2)});
      ps.push_back({"c2", {ge(-1, 0, 3), ge(3, 0, -1)},
                    make_rational(1, 2304) * x2 * (-x1.pow(2) + BigRational(6) * x1 * x3 - x3.pow(2))});
      ps.push_back({"c3", {ge(-3, 0, 1)}, a * x2 * x1.pow(2)});
      break;
    }
    case ListId::A2: {
      const BigRational b = make_rational(1, 2304);
      const MultiPoly w1 = lin(0, 2, -1), w2 = lin(1, -2, 0), w3 = lin(1, -2, 1);
      const MultiPoly c1 = make_rational(1, 288) * x2.pow(3);
      const MultiPoly c2 = c1 - b * w1.pow(3);
      const MultiPoly c3 = c1 + b * w2.pow(3);
      const MultiPoly c4 = c2 + b * w2.pow(3);
      const MultiPoly c5 = c4 - b * w3.pow(3);
      ps.push_back({"c1", {ge(0, -2, 1), ge(1, -2, 0)}, c1});
      ps.push_back({"c2", {ge(0, 2, -1), ge(1, -2, 0), ge(1, -2, 1)}, c2});
      ps.push_back({"c3", {ge(0, -2, 1), ge(-1, 2, 0), ge(1, -2, 1)}, c3});
      ps.push_back({"c4", {ge(0, 2, -1), ge(-1, 2, 0), ge(1, -2, 1)}, c4});
      ps.push_back({"c5", {ge(-1, 2, -1)}, c5});
      break;
    }
    case ListId::A3:
    case ListId::A4: {
      const BigRational a = make_rational(1, 3456);
      const MultiPoly g1 = lin(1, -2, -3), g2 = lin(1, 0, -3), g3 = lin(1, -2, 0);
      const MultiPoly c1 = make_rational(1, 96) * x2.pow(2) * x3;
      const MultiPoly c2 = c1 + a * g1.pow(3);
      const MultiPoly c3 = c2 + a * lin(-1, 6, 3) * g2.pow(2);
      const MultiPoly c4 = c2 - a * g3.pow(3);
      const MultiPoly c5 = c4 + c3 - c2;
      ps.push_back({"c1", {ge(1, -2, -3)}, c1});
      ps.push_back({"c2", {ge(-1, 2, 3), ge(1, 0, -3), ge(1, -2, 0)}, c2});
      ps.push_back({"c3", {ge(-1, 0, 3), ge(1, -2, 0)}, c3});
      ps.push_back({"c4", {ge(1, 0, -3), ge(-1, 2, 0)}, c4});
      ps.push_back({"c5", {ge(-1, 0, 3), ge(-1, 2, 0)}, c5});
      if (id == ListId::A4) {
        for (auto& p : ps) {
          p.poly = p.poly.swap_variables(0, 2);
          for (auto& g : p.guards) std::swap(g.normal[0], g.normal[2]);
        }
      }
      break;
    }
  }
  SplineModel m{id, spline_list(id), PiecewisePoly(3, std::move(ps)), {}};
  m.lattice = lattice_span_and_index(m.vectors);
  return m;
}

/// Throws WallError when x lies on a wall of the model or on the boundary
/// of the octant.
inline void require_off_walls(const SplineModel& m, const IntVector& x) {
  for (auto c : x)
    if (c <= 0) throw WallError("sample lies on the boundary of C(A); perturb it");
  for (const auto& p : m.pieces.pieces())
    for (const auto& g : p.guards)
      if (dot(g.normal, to_rational(x)) == 0) throw WallError("sample lies on a wall of " + to_string(m.list_id) + "; perturb it");
}

struct SplineSample {
  IntVector point;
  std::int64_t k;        // largest k <= k_max with kλ ∈ Λ(A)
  BigInt count;          // T_A(kλ)
  BigRational predicted; // index · T_A(λ)
  BigRational deviation; // |predicted - count/k^3| / predicted
};

/// Compares the spline with partition counts: for each sample λ, takes the
/// largest k <= k_max with kλ ∈ Λ(A) and returns
///   |index·T_A(λ) - 𝒯_A(kλ)/k^3| / (index·T_A(λ)).
inline std::vector<SplineSample> spline_samples(ListId id, const std::vector<IntVector>& samples, std::int64_t k_max) {
  const auto m = spline_model(id);
  const auto exponent = static_cast<unsigned>(m.vectors.size() - m.vectors.d);
  std::vector<SplineSample> out;
  for (const auto& lam : samples) {
    if (lam.size() != 3) throw DomainError("samples must be 3-vectors");
    require_off_walls(m, lam);
    std::int64_t k = k_max;
    auto scaled = [&](std::int64_t s) {
      IntVector v = lam;
      for (auto& c : v) c *= s;
      return v;
    };
    while (k > 0 && !m.lattice.contains(scaled(k))) --k;
    if (k == 0) throw DomainError("no multiple kλ with k <= k_max lies in the lattice of the list");
    SplineSample s{lam, k, vector_partition_count(m.vectors, scaled(k)), 0, 0};
    s.predicted = BigRational(m.lattice.index) * m.evaluate(to_rational(lam));
    BigRational kk = 1;
    for (unsigned i = 0; i < exponent; ++i) kk *= static_cast<long>(k);
    const BigRational observed = BigRational(s.count) / kk;
    s.deviation = s.predicted == 0 ? BigRational(observed == 0 ? 0 : 1) : abs(s.predicted - observed) / s.predicted;
    out.push_back(std::move(s));
  }
  return out;
}

/// Maximum relative deviation over the samples (see spline_samples).
inline BigRational verify_spline(ListId id, const std::vector<IntVector>& samples, std::int64_t k_max) {
  BigRational worst = 0;
  for (const auto& s : spline_samples(id, samples, k_max)) worst = std::max(worst, s.deviation);
  return worst;
}

enum class Case { Conic, Cubic };

inline std::string to_string(Case c) { return c == Case::Conic ? "conic" : "cubic"; }

inline Case parse_case(const std::string& s) {
  if (s == "conic") return Case::Conic;
  if (s == "cubic") return Case::Cubic;
  throw DomainError("unknown case '" + s + "' (expected conic or cubic)");
}

inline std::size_t case_rank(Case c) { return c == Case::Conic ? 2 : 3; }

/// The five walls of the cubic asymptotic dimension, F1..F5.
inline const std::vector<IntVector>& cubic_wall_forms() {
  static const std::vector<IntVector> forms = {{1, 0, -3}, {3, 0, -1}, {1, -2, 1}, {1, -2, -3}, {3, 2, -1}};
  return forms;
}

/// Sign vectors of the eight cells over F1..F5 with one interior point each.
struct CellSignature {
  std::string label;
  std::array<int, 5> signs;
  IntVector representative;
};

inline const std::vector<CellSignature>& cubic_cells() {
  static const std::vector<CellSignature> cells = {
      {"c1", {1, 1, 1, 1, 1}, {17, 1, 2}},    {"c2", {1, 1, 1, -1, 1}, {12, 3, 3}},
      {"c3", {1, 1, -1, -1, 1}, {7, 8, 1}},   {"c4", {-1, 1, 1, -1, 1}, {2, 1, 2}},
      {"c5", {-1, 1, -1, -1, 1}, {1, 2, 1}},  {"c6", {-1, -1, 1, -1, -1}, {2, 1, 17}},
      {"c7", {-1, -1, 1, -1, 1}, {3, 3, 12}}, {"c8", {-1, -1, -1, -1, 1}, {1, 8, 7}},
  };
  return cells;
}

/// Sign of each wall form at x (-1, 0, +1).
inline std::array<int, 5> cubic_signature(const Point& x) {
  std::array<int, 5> s{};
  for (std::size_t i = 0; i < 5; ++i) s[i] = sign(dot(to_rational(cubic_wall_forms()[i]), x));
  return s;
}

/// Label of the cubic cell whose closure contains x, or nullopt on a wall
/// between cells (any zero sign).
inline std::optional<std::string> cubic_cell_label(const Point& x) {
  const auto s = cubic_signature(x);
  for (const auto& c : cubic_cells())
    if (c.signs == s) return c.label;
  return std::nullopt;
}

/// The cubic asymptotic dimension as eight polynomial pieces. In a cell each
/// truncated cube ⟨u⟩^3 is either u^3 or 0 according to the sign of u.
inline PiecewisePoly cubic_dimas_pieces() {
  const auto& f = cubic_wall_forms();
  auto form = [&](std::size_t i) { return MultiPoly::linear(to_rational(f[i])); };
  const MultiPoly x = detail::lin(1, 0, 0), y = detail::lin(0, 1, 0), z = detail::lin(0, 0, 1);
  const MultiPoly base = BigRational(48) * x * y * z - BigRational(2) * y.pow(3) -
                         BigRational(6) * y * detail::lin(1, -1, 1).pow(2);
  // truncated cubes: (argument, sign in the formula, index of F, orientation)
  struct Trunc {
    std::size_t form;
    int orientation;  // argument = orientation * F
    int coefficient;
  };
  const Trunc terms[] = {{2, -1, 1}, {1, -1, 1}, {0, 1, 1}, {3, 1, -1}, {4, -1, -1}};
  PiecewisePoly out(3);
  for (const auto& cell : cubic_cells()) {
    MultiPoly p = base;
    for (const auto& t : terms)
      if (t.orientation * cell.signs[t.form] > 0) p += BigRational(t.coefficient * t.orientation * t.orientation * t.orientation) * form(t.form).pow(3);
    std::vector<Guard> guards;
    for (std::size_t i = 0; i < 5; ++i) {
      RationalVector n = to_rational(f[i]);
      for (auto& c : n) c *= cell.signs[i];
      guards.push_back({n, false});
    }
    out.add({cell.label, guards, make_rational(1, 576) * p});
  }
  return out;
}

/// Leading coefficient of dim V_{kx}^H as a function of x in the closed Weyl
/// chamber: 1/4 for the conic, the truncated-cube formula for the cubic.
inline BigRational dimas_vh(Case c, const Point& x) {
  if (x.size() != case_rank(c)) throw DomainError("point has wrong dimension for the " + to_string(c) + " case");
  for (const auto& v : x)
    if (v < 0) throw DomainError("point lies outside the Weyl chamber");
  if (c == Case::Conic) return make_rational(1, 4);
  const BigRational &X = x[0], &Y = x[1], &Z = x[2];
  auto cube = [](const BigRational& u) { return BigRational(u * u * u); };
  auto trunc = [&](const BigRational& u) { return u >= 0 ? cube(u) : BigRational(0); };
  const BigRational s = X + Z - Y;
  BigRational v = 48 * X * Y * Z - 2 * cube(Y) - 6 * Y * s * s;
  v += trunc(2 * Y - X - Z) + trunc(Z - 3 * X) + trunc(X - 3 * Z);
  v -= trunc(X - 2 * Y - 3 * Z) + trunc(Z - 2 * Y - 3 * X);
  return v / 576;
}

/// max |24 T_A1 + 4 T_A2 + 6 T_A3 + 6 T_A4 - dimas_vh(cubic)| over the grid.
inline BigRational verify_lemma_a0(const std::vector<Point>& grid) {
  const std::array<std::pair<ListId, long>, 4> weights = {
      {{ListId::A1, 24}, {ListId::A2, 4}, {ListId::A3, 6}, {ListId::A4, 6}}};
  std::vector<SplineModel> models;
  for (const auto& [id, w] : weights) models.push_back(spline_model(id));
  BigRational worst = 0;
  for (const auto& x : grid) {
    BigRational sum = 0;
    for (std::size_t i = 0; i < models.size(); ++i) sum += weights[i].second * models[i].evaluate(x);
    worst = std::max(worst, abs(BigRational(sum - dimas_vh(Case::Cubic, x))));
  }
  return worst;
}

/// dim V_{kλ}^H / (k^3 · dimas_vh(cubic, λ)) for each k.
inline std::vector<BigRational> verify_asymptotic_convergence(const Weight& lam, const std::vector<std::int64_t>& ks) {
  const RootSystemA rs(3);
  require_dominant(rs, lam);
  // -1 in the principal SL2 is central in SL4 and acts by (-1)^(a+2b+3c)
  if ((lam[0] + 2 * lam[1] + 3 * lam[2]) % 2 != 0)
    throw DomainError("a+2b+3c must be even, otherwise V_kλ^H vanishes for odd k");
  const BigRational leading = dimas_vh(Case::Cubic, lam.as_rational());
  if (leading == 0) throw DegenerateDirectionError("asymptotic dimension vanishes along " + lam.to_string());
  return parallel_map<BigRational>(ks.size(), [&](std::size_t i) {
    const auto k = ks[i];
    if (k <= 0) throw DomainError("k must be positive");
    BigRational k3 = static_cast<long>(k);
    k3 = k3 * k3 * k3;
    return BigRational(BigRational(sl2_invariant_dim(rs, k * lam)) / (k3 * leading));
  });
}

}  // namespace compcoll
