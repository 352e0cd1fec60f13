#ifndef SEMALG_MONOMIAL_IDEAL_HPP
#define SEMALG_MONOMIAL_IDEAL_HPP

#include <vector>

#include "semalg/poly.hpp"
#include "semalg/resolution.hpp"

namespace semalg {

// Monomial ideal kept by its minimal generators, canonically sorted.
struct MonomialIdeal {
  std::size_t nvars = 0;
  std::vector<Monomial> gens;

  static MonomialIdeal of(std::size_t nvars, std::vector<Monomial> gens);
  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
  bool contains(const Monomial& m) const;
  // colon ideal (this : m), minimally generated
  MonomialIdeal colon(const Monomial& m) const;
};

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/I, as integer
// coefficients indexed by degree.
std::vector<Int> hilbert_numerator(const MonomialIdeal& i);

struct HilbertInfo {
  long dim = 0;      // Krull dimension of R/I
  long codim = 0;    // vanishing order of N at t = 1
  Int degree;        // N/(1-t)^codim evaluated at 1
};
HilbertInfo hilbert_info(const MonomialIdeal& i);

// Graded Betti numbers of I as a module, via reduced simplicial homology
// of the open lower intervals of the lcm lattice, collapsed to the
// Z-grading.
BettiTable monomial_betti(const MonomialIdeal& i, const Field& f);

// regularity of a monomial ideal in two variables read off the staircase
long two_var_regularity(const MonomialIdeal& i);

}  // namespace semalg

#endif
