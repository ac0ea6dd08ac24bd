#pragma once

#include <stdexcept>
#include <string>

namespace compcoll {

/// Base of every error the library raises on a violated precondition or a
/// failed exactness check.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (non-dominant weight, point
/// outside the Weyl chamber, wrong rank, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A division that was required to be exact left a remainder.
class ExactnessError : public Error {
 public:
  using Error::Error;
};

class UnboundednessError : public Error {
 public:
  using Error::Error;
};

/// Vector list does not span the ambient space.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Sample point lies on a wall of the chamber complex.
class WallError : public Error {
 public:
  using Error::Error;
};

/// Test weights do not share one open chamber.
class ChamberError : public Error {
 public:
  using Error::Error;
};

/// Asymptotic ratio requested along a direction where the limit vanishes.
class DegenerateDirectionError : public Error {
 public:
  using Error::Error;
};

}  // namespace compcoll
