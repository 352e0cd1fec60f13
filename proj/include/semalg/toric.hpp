#ifndef SEMALG_TORIC_HPP
#define SEMALG_TORIC_HPP

#include "semalg/groebner.hpp"
#include "semalg/semigroup.hpp"

namespace semalg {

// Kernel of x_i -> t^{b_i}: a binomial prime ideal, delivered as a reduced
// Groebner basis together with the integer kernel of the generator matrix.
struct ToricIdeal {
  GroebnerBasis gb;          // reduced, degrevlex over Q unless asked otherwise
  IntMatrix lattice_kernel;  // rows u with u * (generator matrix) = 0
};

// Lattice-basis binomials followed by saturation with respect to every
// variable (one weighted-degrevlex Groebner basis per variable, dividing
// out the cheapest variable afterwards).
ToricIdeal toric_ideal(const AffineSemigroup& b,
                       const MonomialOrder& order = MonomialOrder::degrevlex());

// the binomial x^{u+} - x^{u-} attached to an integer vector
Poly binomial_of(const IntVec& u, std::size_t nvars, const Field& f,
                 const MonomialOrder& o);

}  // namespace semalg

#endif
