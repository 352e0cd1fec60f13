#ifndef SEMALG_DECOMPOSE_HPP
#define SEMALG_DECOMPOSE_HPP

#include <set>

#include "semalg/semigroup.hpp"
#include "semalg/toric.hpp"

namespace semalg {

// One summand of the module decomposition of K[B] over K[A]: the class
// members gamma, the shift, and the monomial ideal they span, both as
// exponent vectors in A's generators and as ambient lattice vectors.
struct DecompositionComponent {
  IntVec class_label;
  std::vector<IntVec> gamma;  // graded-lex ascending; front() is the representative
  IntVec shift;               // in Z^m, possibly negative
  std::vector<IntVec> c_vectors;         // coordinates of v - representative over A's generators
  std::vector<IntVec> ideal_exponents;   // nonnegative exponents of t^{v - shift} in A's generators
  std::vector<IntVec> ambient_exponents; // v - shift in Z^m
};

struct Decomposition {
  AffineSemigroup base;   // A
  AffineSemigroup total;  // B
  QuotientGroup quotient;
  std::vector<DecompositionComponent> components;  // sorted by class label
};

struct DecomposeOptions {
  bool verify_hilbert = false;  // check that A's generators are minimal
};

// Minimal module generators of K[B] over K[A] as lattice vectors, via the
// toric ideal and a standard-monomial basis. Throws ConeMismatch when the
// cones differ (the set would be infinite) and NotSubsemigroup when a
// generator of A is not an element of B.
std::vector<IntVec> module_generators(const AffineSemigroup& a,
                                      const AffineSemigroup& b);

// Independent search route used only for cross-checks: bounded
// enumeration driven by the exact membership oracle.
std::vector<IntVec> module_generators_bfs(const AffineSemigroup& a,
                                          const AffineSemigroup& b);

Decomposition decompose(const AffineSemigroup& a, const AffineSemigroup& b,
                        const DecomposeOptions& opts = {});

// All semigroup elements of each functional degree 0..max_degree.
std::vector<std::set<IntVec>> elements_by_degree(const AffineSemigroup& s,
                                                 const DegreeFunctional& deg,
                                                 long max_degree);

// Degreewise comparison of B against the direct sum of the shifted
// summands, by brute-force element counting. Requires B homogeneous.
bool hilbert_identity_holds(const Decomposition& dec, long max_degree);

}  // namespace semalg

#endif
