#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <random>

#include "compcoll/chambers.hpp"

using namespace compcoll;

namespace {

// enumerate multiplicities of each vector directly
BigInt brute_partitions(const VectorList& a, const IntVector& target) {
  BigInt count = 0;
  IntVector rest = target;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == a.size()) {
      if (std::all_of(rest.begin(), rest.end(), [](std::int64_t c) { return c == 0; })) ++count;
      return;
    }
    rec(i + 1);
    const auto& v = a.vectors[i];
    int taken = 0;
    while (true) {
      for (std::size_t k = 0; k < v.size(); ++k) rest[k] -= v[k];
      ++taken;
      if (std::any_of(rest.begin(), rest.end(), [](std::int64_t c) { return c < 0; })) break;
      rec(i + 1);
    }
    for (std::size_t k = 0; k < v.size(); ++k) rest[k] += taken * v[k];
  };
  rec(0);
  return count;
}

Point pt(long a, long b, long c) { return {BigRational(a), BigRational(b), BigRational(c)}; }

const std::vector<ListId> kLists = {ListId::A1, ListId::A2, ListId::A3, ListId::A4};

}  // namespace

TEST(VectorPartition, Examples) {
  EXPECT_EQ(vector_partition_count({2, {{1, 0}, {0, 1}}}, {2, 3}), 1);
  EXPECT_EQ(vector_partition_count({1, {{1}, {1}}}, {5}), 6);
  EXPECT_EQ(vector_partition_count({2, {{1, 0}, {0, 1}, {1, 1}}}, {2, 2}), 3);
  EXPECT_EQ(vector_partition_count({2, {{1, 0}, {0, 1}}}, {-1, 3}), 0);
  EXPECT_EQ(vector_partition_count({2, {{2, 0}, {0, 1}}}, {3, 3}), 0);
  EXPECT_THROW(vector_partition_count({2, {{1, 0}, {0, 0}}}, {1, 1}), DomainError);
  EXPECT_THROW(vector_partition_count({2, {{1, -1}, {0, 1}}}, {1, 1}), DomainError);
}

TEST(VectorPartition, MatchesBruteForce) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coord(0, 3), len(2, 5), tgt(0, 8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 2;
    VectorList a{d, {}};
    const int m = len(rng);
    while (static_cast<int>(a.size()) < m) {
      IntVector v(d);
      for (auto& c : v) c = coord(rng);
      if (std::any_of(v.begin(), v.end(), [](std::int64_t c) { return c != 0; })) a.vectors.push_back(v);
    }
    IntVector t(d);
    for (auto& c : t) c = tgt(rng);
    EXPECT_EQ(vector_partition_count(a, t), brute_partitions(a, t));
  }
  const auto a1 = spline_list(ListId::A1);
  EXPECT_EQ(vector_partition_count(a1, {8, 5, 8}), brute_partitions(a1, {8, 5, 8}));
}

// compositions of n into m parts: binom(n+m-1, m-1), past 64 bits
TEST(VectorPartition, BigIntegerFallback) {
  VectorList ones{1, std::vector<IntVector>(12, IntVector{1})};
  BigInt expected;
  mpz_bin_uiui(expected.get_mpz_t(), 2000 + 11, 11);
  EXPECT_GT(expected, BigInt("18446744073709551615"));
  EXPECT_EQ(vector_partition_count(ones, {2000}), expected);
}

TEST(Lattice, Indices) {
  EXPECT_EQ(lattice_span_and_index(spline_list(ListId::A1)).index, 4);
  // {(i,j,k): i,k even}: (1,0,1) is not an integer combination of A2
  EXPECT_EQ(lattice_span_and_index(spline_list(ListId::A2)).index, 4);
  EXPECT_EQ(lattice_span_and_index(spline_list(ListId::A3)).index, 2);
  EXPECT_EQ(lattice_span_and_index(spline_list(ListId::A4)).index, 2);
  EXPECT_EQ(lattice_span_and_index({2, {{2, 0}, {0, 2}}}).index, 4);
  EXPECT_EQ(lattice_span_and_index({2, {{2, 1}, {1, 1}}}).index, 1);
  EXPECT_THROW(lattice_span_and_index({3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}}), RankError);
}

TEST(Lattice, MembershipMatchesDescription) {
  const auto a1 = lattice_span_and_index(spline_list(ListId::A1));
  const auto a2 = lattice_span_and_index(spline_list(ListId::A2));
  const auto a3 = lattice_span_and_index(spline_list(ListId::A3));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 9; ++k) {
        EXPECT_EQ(a1.contains({i, j, k}), (i + k) % 4 == 0);
        EXPECT_EQ(a2.contains({i, j, k}), i % 2 == 0 && k % 2 == 0);
        EXPECT_EQ(a3.contains({i, j, k}), (i + k) % 2 == 0);
      }
}

TEST(Walls, Examples) {
  auto has = [](const std::vector<IntVector>& ws, const IntVector& n) { return std::find(ws.begin(), ws.end(), n) != ws.end(); };
  EXPECT_TRUE(has(wall_hyperplanes(spline_list(ListId::A2)), {0, 2, -1}));
  EXPECT_TRUE(has(wall_hyperplanes(spline_list(ListId::A1)), {1, 0, -3}));
  EXPECT_TRUE(has(interior_walls(spline_list(ListId::A1)), {1, 0, -3}));
  EXPECT_FALSE(has(interior_walls(spline_list(ListId::A1)), {0, 1, 0}));
  const auto e = wall_hyperplanes({3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  EXPECT_EQ(e.size(), 3u);
  for (const IntVector& n : {IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{0, 0, 1}}) EXPECT_TRUE(has(e, n));
  EXPECT_THROW(wall_hyperplanes({2, {{1, 0}, {0, 1}}}), DomainError);
}

TEST(SplineModel, FirstCellPieces) {
  const auto x = pt(16, 8, 4);
  EXPECT_EQ(spline_model(ListId::A1).evaluate(x), make_rational(8 * 16, 288));
  EXPECT_EQ(spline_model(ListId::A2).evaluate(pt(6, 1, 6)), make_rational(1, 288));
  EXPECT_EQ(spline_model(ListId::A3).evaluate(pt(12, 2, 2)), make_rational(4 * 2, 96));
  EXPECT_EQ(spline_model(ListId::A4).evaluate(pt(2, 2, 12)), make_rational(4 * 2, 96));
  EXPECT_EQ(spline_model(ListId::A1).pieces.find("c1")->poly.to_string(), "1/288*x2*x3^2");
  EXPECT_EQ(spline_model(ListId::A2).pieces.find("c1")->poly.to_string(), "1/288*x2^3");
  EXPECT_EQ(spline_model(ListId::A3).pieces.find("c1")->poly.to_string(), "1/96*x2^2*x3");
}

TEST(SplineModel, HomogeneousCubicPieces) {
  for (auto id : kLists) {
    const auto m = spline_model(id);
    for (const auto& p : m.pieces.pieces()) EXPECT_TRUE(p.poly.is_homogeneous(3)) << to_string(id) << " " << p.label;
  }
}

TEST(SplineModel, CellsCoverTheOctant) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(0, 40);
  for (auto id : kLists) {
    const auto m = spline_model(id);
    for (int i = 0; i < 200; ++i) EXPECT_TRUE(m.pieces.locate(pt(d(rng), d(rng), d(rng))).has_value());
  }
}

TEST(SplineModel, WallDivisibility) {
  for (auto id : kLists) {
    const auto m = spline_model(id);
    const auto adj = m.adjacencies();
    EXPECT_EQ(adj.size(), id == ListId::A1 ? 2u : 5u) << to_string(id);
    for (const auto& a : adj) {
      const auto& ps = m.pieces.pieces();
      const MultiPoly diff = ps[a.first].poly - ps[a.second].poly;
      EXPECT_TRUE(diff.divisible_by_power(MultiPoly::linear(to_rational(a.wall)), a.order))
          << to_string(id) << " " << ps[a.first].label << "|" << ps[a.second].label;
    }
  }
  const auto a1 = spline_model(ListId::A1).adjacencies();
  EXPECT_EQ(a1[0].wall, (IntVector{1, 0, -3}));
  EXPECT_EQ(a1[0].order, 2u);
}

TEST(SplineModel, BoundaryVanishing) {
  for (auto id : kLists) {
    const auto m = spline_model(id);
    const auto contacts = m.boundary_contacts();
    EXPECT_FALSE(contacts.empty());
    for (const auto& b : contacts) {
      const auto& p = m.pieces.pieces()[b.piece];
      EXPECT_TRUE(p.poly.divisible_by_power(MultiPoly::variable(3, b.coordinate), b.order))
          << to_string(id) << " " << p.label << " x" << b.coordinate + 1;
    }
  }
}

TEST(SplineModel, FourthIsMirrorOfThird) {
  const auto a3 = spline_model(ListId::A3), a4 = spline_model(ListId::A4);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(0, 30);
  for (int i = 0; i < 100; ++i) {
    const long a = d(rng), b = d(rng), c = d(rng);
    EXPECT_EQ(a3.evaluate(pt(a, b, c)), a4.evaluate(pt(c, b, a)));
  }
}

// one interior point per cell; deviation at k_max = 25 below 0.15
TEST(SplineVerify, PerCellSamples) {
  const std::vector<std::pair<ListId, std::vector<IntVector>>> samples = {
      {ListId::A1, {{16, 8, 4}, {6, 2, 6}, {4, 8, 16}}},
      {ListId::A2, {{6, 2, 6}, {10, 4, 2}, {2, 4, 10}, {6, 4, 6}, {2, 8, 6}}},
      {ListId::A3, {{12, 2, 2}, {8, 3, 2}, {7, 3, 3}, {8, 6, 2}, {3, 4, 3}}},
      {ListId::A4, {{2, 2, 12}, {2, 3, 8}, {3, 3, 7}, {2, 6, 8}, {3, 4, 3}}},
  };
  for (const auto& [id, pts] : samples) {
    const auto m = spline_model(id);
    std::set<std::size_t> cells;
    for (const auto& p : pts) cells.insert(*m.pieces.locate(to_rational(p)));
    EXPECT_EQ(cells.size(), m.pieces.pieces().size()) << to_string(id);
    for (const auto& s : spline_samples(id, pts, 25)) {
      EXPECT_LT(s.deviation, make_rational(3, 20)) << to_string(id) << " at " << s.point[0] << "," << s.point[1] << "," << s.point[2];
      EXPECT_LE(s.k, 25);
      EXPECT_TRUE(m.lattice.contains({s.k * s.point[0], s.k * s.point[1], s.k * s.point[2]}));
    }
  }
}

TEST(SplineVerify, NamedExamples) {
  EXPECT_LT(verify_spline(ListId::A1, {{4, 4, 4}}, 25), make_rational(3, 20));
  // (4,3,4) lies in c4 of A2, not c5; deviation 0.204 at k = 20 and 0.161 at 25
  const auto m = spline_model(ListId::A2);
  EXPECT_EQ(m.pieces.pieces()[*m.pieces.locate(pt(4, 3, 4))].label, "c4");
  const auto d20 = verify_spline(ListId::A2, {{4, 3, 4}}, 20), d25 = verify_spline(ListId::A2, {{4, 3, 4}}, 25);
  EXPECT_LT(d25, d20);
  EXPECT_LT(d20, make_rational(1, 4));
}

TEST(SplineVerify, SmallKSmoke) {
  for (auto id : kLists)
    for (std::int64_t k : {1, 2}) {
      const auto dev = verify_spline(id, {{6, 1, 6}}, k);
      EXPECT_GE(dev, 0);
    }
}

TEST(SplineVerify, DeviationShrinks) {
  for (auto id : {ListId::A1, ListId::A3}) {
    const IntVector p = id == ListId::A1 ? IntVector{6, 2, 6} : IntVector{7, 3, 3};
    EXPECT_LT(verify_spline(id, {p}, 24), verify_spline(id, {p}, 4)) << to_string(id);
  }
}

TEST(SplineVerify, WallErrors) {
  EXPECT_THROW(verify_spline(ListId::A1, {{3, 1, 1}}, 10), WallError);
  EXPECT_THROW(verify_spline(ListId::A2, {{2, 1, 2}}, 10), WallError);
  EXPECT_THROW(verify_spline(ListId::A3, {{0, 1, 1}}, 10), WallError);
  EXPECT_THROW(verify_spline(ListId::A1, {{1, 1}}, 10), DomainError);
}

TEST(Dimas, Examples) {
  EXPECT_EQ(dimas_vh(Case::Cubic, pt(1, 1, 1)), make_rational(5, 72));
  EXPECT_EQ(dimas_vh(Case::Cubic, pt(0, 1, 0)), 0);
  EXPECT_EQ(dimas_vh(Case::Conic, {BigRational(3), BigRational(7)}), make_rational(1, 4));
  EXPECT_EQ(dimas_vh(Case::Conic, {BigRational(0), BigRational(0)}), make_rational(1, 4));
  EXPECT_THROW(dimas_vh(Case::Cubic, pt(-1, 1, 1)), DomainError);
  EXPECT_THROW(dimas_vh(Case::Cubic, {BigRational(1)}), DomainError);
}

TEST(Dimas, PiecesMatchFormula) {
  const auto pieces = cubic_dimas_pieces();
  EXPECT_EQ(pieces.pieces().size(), 8u);
  for (const auto& c : cubic_cells()) {
    const auto x = to_rational(c.representative);
    EXPECT_EQ(cubic_cell_label(x), c.label);
    EXPECT_EQ(cubic_signature(x), c.signs);
    EXPECT_TRUE(pieces.pieces()[*pieces.locate(x)].poly.is_homogeneous(3));
  }
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(0, 60);
  for (int i = 0; i < 300; ++i) {
    const auto x = pt(d(rng), d(rng), d(rng));
    EXPECT_EQ(pieces.evaluate(x), dimas_vh(Case::Cubic, x));
    const BigRational k = make_rational(d(rng) + 1, 7);
    Point kx = x;
    for (auto& v : kx) v *= k;
    EXPECT_EQ(dimas_vh(Case::Cubic, kx), k * k * k * dimas_vh(Case::Cubic, x));
  }
}

// on each wall the polynomials of the cells on either side agree
TEST(Dimas, ContinuityAcrossWalls) {
  const auto pieces = cubic_dimas_pieces();
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> d(1, 30);
  for (std::size_t w = 0; w < 5; ++w) {
    const auto& f = cubic_wall_forms()[w];
    int found = 0;
    for (int tries = 0; found < 10 && tries < 20000; ++tries) {
      // a point on F_w = 0: solve for the coordinate with nonzero coefficient
      Point x = pt(d(rng), d(rng), d(rng));
      const std::size_t solve_for = f[2] != 0 ? 2 : 0;
      BigRational rest = 0;
      for (std::size_t i = 0; i < 3; ++i)
        if (i != solve_for) rest += BigRational(static_cast<long>(f[i])) * x[i];
      x[solve_for] = -rest / static_cast<long>(f[solve_for]);
      if (x[solve_for] <= 0) continue;
      auto s = cubic_signature(x);
      if (std::count(s.begin(), s.end(), 0) != 1) continue;
      std::vector<BigRational> values;
      for (int side : {-1, 1}) {
        s[w] = side;
        for (std::size_t c = 0; c < cubic_cells().size(); ++c)
          if (cubic_cells()[c].signs == s) values.push_back(pieces.pieces()[c].poly.evaluate(x));
      }
      if (values.size() != 2) continue;  // wall only bounds one cell here
      EXPECT_EQ(values[0], values[1]);
      EXPECT_EQ(values[0], dimas_vh(Case::Cubic, x));
      ++found;
    }
    EXPECT_EQ(found, 10) << "wall F" << w + 1;
  }
}

TEST(Dimas, LemmaA0) {
  EXPECT_EQ(verify_lemma_a0({pt(1, 1, 1)}), 0);
  EXPECT_EQ(verify_lemma_a0({pt(5, 1, 1)}), 0);
  EXPECT_EQ(verify_lemma_a0({pt(1, 5, 1)}), 0);
  std::vector<Point> grid;
  for (long i = 1; i <= 5; ++i)
    for (long j = 1; j <= 5; ++j) grid.push_back({BigRational(i), make_rational(j, 2), make_rational(i * j % 7 + 1, 3)});
  EXPECT_EQ(verify_lemma_a0(grid), 0);
}

TEST(Asymptotics, Convergence) {
  const auto r = verify_asymptotic_convergence({2, 2, 2}, {10, 40});
  EXPECT_LT(abs(BigRational(r[0] - 1)), make_rational(1, 4));
  EXPECT_LT(abs(BigRational(r[1] - 1)), make_rational(2, 25));
  EXPECT_LT(abs(BigRational(r[1] - 1)), abs(BigRational(r[0] - 1)));
  const auto s = verify_asymptotic_convergence({2, 4, 2}, {20});
  EXPECT_LT(abs(BigRational(s[0] - 1)), make_rational(3, 20));
  EXPECT_THROW(verify_asymptotic_convergence({4, 0, 0}, {10}), DegenerateDirectionError);
  EXPECT_THROW(verify_asymptotic_convergence({1, 0, 0}, {10}), DomainError);
  EXPECT_THROW(verify_asymptotic_convergence({2, 2, 2}, {0}), DomainError);
}
