#ifndef SEMALG_ERRORS_HPP
#define SEMALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semalg {

// Failure classes that callers are expected to branch on. Input-shape
// problems (bad dimensions, duplicate generators, unparsable documents)
// use std::invalid_argument instead.
enum class Errc {
  ContainmentViolation,  // sublattice not contained in ambient lattice
  ConeMismatch,          // C(A) != C(B), module generators not finite
  NotSubsemigroup,       // a generator of A is not an element of B
  NotSimplicial,
  NotHomogeneous,
  NonHilbert,            // generators fail the minimality check
  AmbiguousExtremals,    // two generators on one ray, no canonical choice
  InfiniteDimension,     // staircase unbounded, no finite monomial basis
  Infeasible,            // requested random instance cannot exist
  OracleMismatch,
};

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ContainmentViolation: return "ContainmentViolation";
    case Errc::ConeMismatch: return "ConeMismatch";
    case Errc::NotSubsemigroup: return "NotSubsemigroup";
    case Errc::NotSimplicial: return "NotSimplicial";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::NonHilbert: return "NonHilbert";
    case Errc::AmbiguousExtremals: return "AmbiguousExtremals";
    case Errc::InfiniteDimension: return "InfiniteDimension";
    case Errc::Infeasible: return "Infeasible";
    case Errc::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

}  // namespace semalg

#endif
