#include <gtest/gtest.h>

#include <random>

#include "compcoll/invariants.hpp"
#include "compcoll/rootdata.hpp"

using namespace compcoll;

TEST(RootSystem, CartanData) {
  for (std::size_t n = 1; n <= 5; ++n) {
    RootSystemA rs(n);
    EXPECT_EQ(rs.positive_root_count(), n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigRational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += BigRational(static_cast<long>(rs.cartan()[i][k])) * rs.cartan_inverse()[k][j];
        EXPECT_EQ(s, i == j ? 1 : 0);
      }
  }
  RootSystemA rs(3);
  EXPECT_EQ(rs.simple_root(0), (Weight{2, -1, 0}));
  EXPECT_EQ(rs.simple_root(1), (Weight{-1, 2, -1}));
  EXPECT_THROW(RootSystemA(0), DomainError);
}

TEST(Weight, ValueSemantics) {
  Weight a{1, 2, 3}, b{0, 1, 0};
  EXPECT_EQ(a + b, (Weight{1, 3, 3}));
  EXPECT_EQ(2 * a, (Weight{2, 4, 6}));
  EXPECT_FALSE((b - a).is_dominant());
  EXPECT_EQ(a.to_string(), "1,2,3");
  EXPECT_EQ(parse_weight("4,-2,0"), (Weight{4, -2, 0}));
  EXPECT_THROW(parse_weight("4,a"), DomainError);
  EXPECT_THROW(parse_weight(""), DomainError);
}

TEST(WeylDim, Examples) {
  RootSystemA rs3(3), rs2(2);
  EXPECT_EQ(weyl_dim(rs3, {1, 0, 0}), 4);
  EXPECT_EQ(weyl_dim(rs3, {1, 1, 1}), 64);
  EXPECT_EQ(weyl_dim(rs3, {0, 1, 0}), 6);
  EXPECT_EQ(weyl_dim(rs2, {1, 1}), 8);
  EXPECT_EQ(weyl_dim(rs3, {0, 0, 0}), 1);
  EXPECT_THROW(weyl_dim(rs3, {1, -1, 0}), DomainError);
  EXPECT_THROW(weyl_dim(rs3, {1, 0}), DomainError);
}

// the restricted character has dim V_λ terms counted with multiplicity
TEST(WeylDim, MatchesCharacterSize) {
  for (std::size_t n = 1; n <= 3; ++n) {
    RootSystemA rs(n);
    std::vector<std::int64_t> c(n, 0);
    while (true) {
      Weight w(c);
      EXPECT_EQ(weyl_dim(rs, w), restriction_character(rs, w).coefficient_sum()) << w.to_string();
      std::size_t k = 0;
      while (k < n && ++c[k] > 4) c[k++] = 0;
      if (k == n) break;
    }
  }
}

TEST(DimasV, Polynomials) {
  RootSystemA rs3(3), rs2(2);
  const auto x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
  EXPECT_EQ(dimas_v_poly(rs3), make_rational(1, 12) * x * y * z * (x + y) * (y + z) * (x + y + z));
  const auto a = MultiPoly::variable(2, 0), b = MultiPoly::variable(2, 1);
  EXPECT_EQ(dimas_v_poly(rs2), make_rational(1, 2) * a * b * (a + b));
  EXPECT_EQ(dimas_v_poly(rs3).evaluate({1, 1, 1}), 1);
  EXPECT_TRUE(dimas_v_poly(rs3).is_homogeneous(6));
}

TEST(DimasV, LeadingAsymptotics) {
  RootSystemA rs(3);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(1, 9);
  const auto top = dimas_v_poly(rs);
  for (int i = 0; i < 5; ++i) {
    Weight w{d(rng), d(rng), d(rng)};
    const long k = 2000;
    BigRational k6 = 1;
    for (int j = 0; j < 6; ++j) k6 *= k;
    const BigRational ratio = BigRational(weyl_dim(rs, k * w)) / (k6 * top.evaluate(w.as_rational()));
    EXPECT_LT(abs(BigRational(ratio - 1)), make_rational(1, 100)) << w.to_string();
  }
}

TEST(PLambda, HalfSpaces) {
  RootSystemA rs(3);
  const Weight lam{2, 1, 3};
  const auto p = build_p_lambda(rs, lam);
  // in half-units: x+2y+3z <= 2(a+2b+3c), 3x+2y+z <= 3a+2b+c, x+2y+z <= a+2b+c, x,y,z >= 0
  const long a = 2, b = 1, c = 3;
  for (int x = 0; x <= 16; ++x)
    for (int y = 0; y <= 16; ++y)
      for (int z = 0; z <= 16; ++z) {
        const bool expected = x + 2 * y + 3 * z <= 2 * (a + 2 * b + 3 * c) &&
                              3 * x + 2 * y + z <= 2 * (3 * a + 2 * b + c) && x + 2 * y + z <= 2 * (a + 2 * b + c);
        Point pt = {make_rational(x, 2), make_rational(y, 2), make_rational(z, 2)};
        EXPECT_EQ(p.contains(pt), expected);
      }
  const auto zero = build_p_lambda(rs, {0, 0, 0}).vertices();
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero.front(), (Point{0, 0, 0}));
}

namespace {

// brute force over c ∈ [0, box]^N
std::vector<Weight> brute_lattice(const RootSystemA& rs, const Weight& lam, int box) {
  std::vector<Weight> out;
  const std::size_t n = rs.rank();
  std::vector<std::int64_t> c(n, 0);
  while (true) {
    Weight mu = lam;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mu[j] -= c[i] * rs.cartan()[i][j];
    if (mu.is_dominant()) out.push_back(mu);
    std::size_t k = n;
    while (k > 0 && c[k - 1] == box) c[--k] = 0;
    if (k == 0) break;
    ++c[k - 1];
  }
  return out;
}

}  // namespace

TEST(PLambda, LatticePoints) {
  RootSystemA rs3(3), rs2(2);
  EXPECT_EQ(p_lambda_lattice_points(rs3, {4, 0, 0}),
            (std::vector<Weight>{{4, 0, 0}, {2, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 0, 0}}));
  EXPECT_EQ(brute_lattice(rs3, {4, 0, 0}, 6), p_lambda_lattice_points(rs3, {4, 0, 0}));
  EXPECT_EQ(p_lambda_lattice_points(rs2, {1, 1}), (std::vector<Weight>{{1, 1}, {0, 0}}));
  EXPECT_EQ(p_lambda_lattice_points(rs3, {0, 0, 0}), (std::vector<Weight>{{0, 0, 0}}));
  for (const Weight& lam : {Weight{3, 2, 1}, Weight{0, 5, 2}, Weight{6, 0, 6}}) {
    const auto pts = p_lambda_lattice_points(rs3, lam);
    EXPECT_EQ(pts, brute_lattice(rs3, lam, 12)) << lam.to_string();
    const auto poly = build_p_lambda(rs3, lam);
    for (const auto& mu : pts) EXPECT_TRUE(poly.contains(mu.as_rational()));
  }
}

// every dominant weight in the polytope and in λ + root lattice is listed
TEST(PLambda, CompletenessInPolytope) {
  RootSystemA rs(3);
  const Weight lam{3, 1, 2};
  const auto poly = build_p_lambda(rs, lam);
  const auto pts = p_lambda_lattice_points(rs, lam);
  for (int x = 0; x <= 12; ++x)
    for (int y = 0; y <= 12; ++y)
      for (int z = 0; z <= 12; ++z) {
        Weight mu{x, y, z};
        if (!poly.contains(mu.as_rational())) continue;
        const auto c = rs.root_coordinates(lam - mu);
        bool integral = true;
        for (const auto& q : c) integral &= q.get_den() == 1;
        const bool listed = std::find(pts.begin(), pts.end(), mu) != pts.end();
        EXPECT_EQ(listed, integral) << mu.to_string();
      }
}
