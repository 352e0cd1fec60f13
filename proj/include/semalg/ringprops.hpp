#ifndef SEMALG_RINGPROPS_HPP
#define SEMALG_RINGPROPS_HPP

#include <string>

#include "semalg/decompose.hpp"
#include "semalg/monomial_ideal.hpp"

namespace semalg {

struct PropertyWitness {
  std::string property;
  std::string detail;
};

struct PropertyReport {
  long depth = 0;
  bool cohen_macaulay = false;
  bool gorenstein = false;
  bool buchsbaum = false;
  bool normal = false;
  bool seminormal = false;
  std::vector<PropertyWitness> witnesses;
};

// Ring-theoretic properties of K[B] for simplicial B, read off the
// decomposition over the free subalgebra on the extremal generators.
// Throws NotSimplicial when the extremal generators are dependent.
PropertyReport ring_properties(const AffineSemigroup& b,
                               const Field& field = Field());

// exact barycentric coordinates of x over the rows of a full-row-rank
// matrix (throws std::invalid_argument if x is outside the row span)
RatVec rational_coordinates(const IntMatrix& rows, const IntVec& x);

}  // namespace semalg

#endif
