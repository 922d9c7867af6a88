#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace gil {

// Base type of every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A table, array, or file payload has the wrong dimensions.
struct ShapeError : Error {
  using Error::Error;
};

// An index or table entry is out of bounds.
struct RangeError : Error {
  using Error::Error;
};

// mu(x) + nu(x) > 1 at some point of an IF subset.
struct ConstraintError : Error {
  ConstraintError(const std::string& msg, int index) : Error(msg), index(index) {}
  int index;
};

// A grade outside [0, 1].
struct GradeRangeError : Error {
  using Error::Error;
};

// Mismatched lengths between objects that must share a carrier.
struct LengthError : Error {
  using Error::Error;
};

struct EmptyFamilyError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct UnknownLawError : Error {
  using Error::Error;
};

struct UnknownHypothesisError : Error {
  using Error::Error;
};

// One of the two associative chains fails. Carries the first violating
// instantiation and both computed sides.
struct AssociativityError : Error {
  AssociativityError(int chain, std::array<int, 5> tuple, std::string lhs_expr, int lhs,
                     std::string rhs_expr, int rhs)
      : Error("associativity chain " + std::to_string(chain) + " violated at (" +
              std::to_string(tuple[0]) + "," + std::to_string(tuple[1]) + "," +
              std::to_string(tuple[2]) + "," + std::to_string(tuple[3]) + "," +
              std::to_string(tuple[4]) + "): " + lhs_expr + " = " + std::to_string(lhs) +
              " but " + rhs_expr + " = " + std::to_string(rhs)),
        chain(chain),
        tuple(tuple),
        lhs(lhs),
        rhs(rhs) {}
  int chain;                // 1 = S-valued chain, 2 = Gamma-valued chain
  std::array<int, 5> tuple; // chain 1: a,b,c,alpha,beta ; chain 2: alpha,beta,gamma,a,b
  int lhs, rhs;
};

}  // namespace gil
