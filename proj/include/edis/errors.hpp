#ifndef EDIS_ERRORS_HPP_
#define EDIS_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace edis {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Input could not be parsed (bad table file, malformed builder spec, ...).
struct ParseError : Error {
  using Error::Error;
};

//! A size guard was hit; nothing was built.
struct TooLargeError : Error {
  using Error::Error;
};

//! Witnesses (a * b) * c != a * (b * c).
struct NotAssociativeError : Error {
  NotAssociativeError(int a, int b, int c)
      : Error("not associative: witness triple (" + std::to_string(a) + ", "
              + std::to_string(b) + ", " + std::to_string(c) + ")"),
        a(a),
        b(b),
        c(c) {}
  int a, b, c;
};

//! The table is a semigroup but not an inverse semigroup; the witness is an
//! element with zero or >= 2 inverses, or one of a non-commuting idempotent
//! pair.
struct NotInverseError : Error {
  NotInverseError(std::string const& msg, int witness)
      : Error(msg), witness(witness) {}
  int witness;
};

struct NotACongruenceError : Error {
  NotACongruenceError(int a, int b, int multiplier, bool left)
      : Error("not a congruence: (" + std::to_string(a) + ", "
              + std::to_string(b) + ") related but "
              + (left ? "left" : "right") + " multiples by "
              + std::to_string(multiplier) + " are not"),
        a(a),
        b(b),
        multiplier(multiplier),
        left(left) {}
  int a, b, multiplier;
  bool left;
};

struct CyclicGraphError : Error {
  explicit CyclicGraphError(std::vector<int> cyc)
      : Error("graph has a cycle; its semigroup is infinite"),
        cycle(std::move(cyc)) {}
  std::vector<int> cycle;  // vertex sequence, last edge returns to front
};

struct InvalidWangPairError : Error {
  InvalidWangPairError(std::string const& msg, int vertex)
      : Error(msg), vertex(vertex) {}
  int vertex;
};

struct TNotClosedError : Error {
  using Error::Error;
};

struct IncoherentSpecError : Error {
  using Error::Error;
};

//! A preaction condition (1)-(5), or derived (6)-(8), fails.
struct PreactionInvalidError : Error {
  PreactionInvalidError(int condition, std::string const& msg)
      : Error("preaction condition (" + std::to_string(condition)
              + ") violated: " + msg),
        condition(condition) {}
  int condition;
};

//! A Q-semigroup definition condition (1)-(3) fails.
struct ConditionFailedError : Error {
  ConditionFailedError(int condition, std::string const& msg)
      : Error("Q-semigroup condition (" + std::to_string(condition)
              + ") failed: " + msg),
        condition(condition) {}
  int condition;
};

struct SearchExhaustedError : Error {
  using Error::Error;
};

struct ArithOverflowError : Error {
  using Error::Error;
};

struct NoWitnessError : Error {
  using Error::Error;
};

}  // namespace edis
#endif  // EDIS_ERRORS_HPP_
