#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compcoll/exact.hpp"
#include "compcoll/multipoly.hpp"
#include "compcoll/polytope.hpp"

namespace compcoll {

/// Linear guard through the origin: normal·x >= 0, or > 0 when strict.
struct Guard {
  RationalVector normal;
  bool strict = false;

  bool holds(const Point& x) const {
    auto v = dot(normal, x);
    return strict ? v > 0 : v >= 0;
  }
};

struct Piece {
  std::string label;
  std::vector<Guard> guards;
  MultiPoly poly;

  bool contains(const Point& x) const {
    for (const auto& g : guards)
      if (!g.holds(x)) return false;
    return true;
  }

  /// The guards as half-spaces -normal·x <= 0 (closed).
  std::vector<HalfSpace> as_halfspaces() const {
    std::vector<HalfSpace> out;
    for (const auto& g : guards) {
      RationalVector neg(g.normal.size());
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -g.normal[i];
      out.push_back({std::move(neg), 0});
    }
    return out;
  }
};

/// Piecewise polynomial on a fan of polyhedral cones. On shared walls the
/// first listed piece wins; neighbouring pieces agree there anyway.
class PiecewisePoly {
 public:
  explicit PiecewisePoly(std::size_t arity = 0) : arity_(arity) {}
  PiecewisePoly(std::size_t arity, std::vector<Piece> pieces) : arity_(arity), pieces_(std::move(pieces)) {}

  std::size_t arity() const { return arity_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  void add(Piece p) { pieces_.push_back(std::move(p)); }

  std::optional<std::size_t> locate(const Point& x) const {
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      if (pieces_[i].contains(x)) return i;
    return std::nullopt;
  }

  /// Value at x; 0 outside every piece.
  BigRational evaluate(const Point& x) const {
    auto i = locate(x);
    return i ? pieces_[*i].poly.evaluate(x) : BigRational(0);
  }

  const Piece* find(const std::string& label) const {
    for (const auto& p : pieces_)
      if (p.label == label) return &p;
    return nullptr;
  }

 private:
  std::size_t arity_;
  std::vector<Piece> pieces_;
};

}  // namespace compcoll
