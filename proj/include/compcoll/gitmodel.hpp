#pragma once

// GIT for linearizations a = (a1,a2,a3) on the space of complete
// collineations of the twisted cubic: Hilbert-Mumford against the effective
// strata, chambers of the nef cone, surviving boundary divisors, and the
// central valuations.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compcoll/chambers.hpp"
#include "compcoll/exact.hpp"
#include "compcoll/rootdata.hpp"

namespace compcoll {

using Triple = std::array<std::int64_t, 3>;

/// The 24 effective strata (c1,c2,c3).
inline const std::vector<Triple>& effective_strata() {
  static const std::vector<Triple> table = {
      {3, 4, 3},    {3, 4, 1},    {3, 2, 3},    {1, 4, 3},    {1, 4, 1},    {3, 2, -1},
      {3, 0, 1},    {1, 0, 3},    {-1, 2, 3},   {3, 0, -1},   {-1, 0, 3},   {1, -2, 1},
      {-1, 2, -1},  {1, 0, -3},   {-3, 0, 1},   {1, -2, -3},  {-1, 0, -3},  {-3, 0, -1},
      {-3, -2, 1},  {-1, -4, -1}, {-1, -4, -3}, {-3, -2, -3}, {-3, -4, -1}, {-3, -4, -3},
  };
  return table;
}

inline bool is_mixed_sign(const Triple& c) {
  bool pos = false, neg = false;
  for (auto x : c) {
    pos |= x > 0;
    neg |= x < 0;
  }
  return pos && neg;
}

inline std::int64_t dot(const Triple& a, const Triple& c) { return a[0] * c[0] + a[1] * c[1] + a[2] * c[2]; }

/// Endpoint pairs of the five walls in the nef-cone picture.
inline const std::vector<std::pair<IntVector, IntVector>>& git_wall_endpoints() {
  static const std::vector<std::pair<IntVector, IntVector>> pairs = {
      {{0, 1, 0}, {3, 0, 1}}, {{0, 1, 0}, {1, 0, 3}}, {{2, 1, 0}, {0, 1, 2}},
      {{3, 0, 1}, {2, 1, 0}}, {{0, 1, 2}, {1, 0, 3}},
  };
  return pairs;
}

/// Primitive normals of the planes through 0 and each endpoint pair.
inline std::vector<IntVector> git_wall_normals() {
  std::vector<IntVector> out;
  for (const auto& [p, q] : git_wall_endpoints()) out.push_back(primitive_normal(to_rational(cross(p, q))));
  return out;
}

enum class Divisor { E1, E2, E3 };

inline std::string to_string(Divisor d) {
  static const char* names[] = {"E1", "E2", "E3"};
  return names[static_cast<int>(d)];
}

struct LinearizationReport {
  Triple input;
  std::vector<Triple> unstable_strata;
  std::vector<Triple> strictly_semistable_strata;
  bool is_general = false;
  std::array<int, 5> signature{};
  std::string chamber;  // "c1".."c8", or "wall:F3,F4" listing the vanishing forms
  std::vector<Divisor> boundary_divisors;
};

inline std::string chamber_for_signature(const std::array<int, 5>& sig) {
  std::string walls;
  for (std::size_t i = 0; i < sig.size(); ++i)
    if (sig[i] == 0) walls += (walls.empty() ? "F" : ",F") + std::to_string(i + 1);
  if (!walls.empty()) return "wall:" + walls;
  for (const auto& c : cubic_cells())
    if (c.signs == sig) return c.label;
  throw ChamberError("sign vector matches no chamber");
}

inline std::vector<Divisor> boundary_divisors(const Triple& a) {
  if (a[0] > 0 && a[2] > 0) return {Divisor::E1, Divisor::E2, Divisor::E3};
  if (a[1] > 0) return {Divisor::E1, Divisor::E3};
  if (a[0] == 0) return {Divisor::E1};
  return {Divisor::E3};
}

/// Hilbert-Mumford: a stratum c is removed (unstable) when a·c > 0 and is
/// strictly semistable when a·c = 0.
inline LinearizationReport classify_linearization(const Triple& a) {
  for (auto x : a)
    if (x < 0) throw DomainError("linearization must lie in the closed positive octant");
  if (a == Triple{0, 0, 0}) throw DomainError("linearization must be nonzero");
  LinearizationReport r;
  r.input = a;
  for (const auto& c : effective_strata()) {
    const auto v = dot(a, c);
    if (v > 0) r.unstable_strata.push_back(c);
    if (v == 0) r.strictly_semistable_strata.push_back(c);
  }
  r.is_general = true;
  for (const auto& c : r.strictly_semistable_strata)
    if (is_mixed_sign(c)) r.is_general = false;
  const auto normals = git_wall_normals();
  const IntVector av(a.begin(), a.end());
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const auto v = dot(normals[i], av);
    r.signature[i] = (v > 0) - (v < 0);
  }
  r.chamber = chamber_for_signature(r.signature);
  r.boundary_divisors = boundary_divisors(a);
  return r;
}

/// (v1, v2, v3) = ((a1+2a2+3a3)/4, (a1+2a2+a3)/2, (3a1+2a2+a3)/4).
inline std::array<BigRational, 3> central_valuations(const Weight& lam) {
  const RootSystemA rs(3);
  require_dominant(rs, lam);
  const long a1 = lam[0], a2 = lam[1], a3 = lam[2];
  return {make_rational(a1 + 2 * a2 + 3 * a3, 4), make_rational(a1 + 2 * a2 + a3, 2),
          make_rational(3 * a1 + 2 * a2 + a3, 4)};
}

}  // namespace compcoll
