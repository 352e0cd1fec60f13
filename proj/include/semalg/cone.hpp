#ifndef SEMALG_CONE_HPP
#define SEMALG_CONE_HPP

#include <vector>

#include "semalg/intlin.hpp"

namespace semalg {

// Homogeneous description of a rational cone in Q^dim: a*x = 0 for the
// equalities, a*x >= 0 for the inequalities.
struct ConeSystem {
  std::vector<IntVec> eqs;
  std::vector<IntVec> ineqs;
  bool contains(const IntVec& v) const;
};

// Facet description of cone(gens) by Fourier-Motzkin elimination of the
// multiplier variables. Exact; intended for small ambient dimension.
// Throws Infeasible if the intermediate systems exceed `cap` rows.
ConeSystem cone_facets(const std::vector<IntVec>& gens, std::size_t dim,
                       std::size_t cap = 100000);

// Exact phase-1 simplex: is target a nonnegative rational combination of
// gens? Works in any dimension.
bool cone_contains_simplex(const std::vector<IntVec>& gens,
                           const IntVec& target);

// Route chosen by ambient dimension: Fourier-Motzkin facets for dim <= 4
// (falling back to simplex if the elimination blows up), simplex above.
bool cone_contains(const std::vector<IntVec>& gens, const IntVec& target,
                   std::size_t dim);

}  // namespace semalg

#endif
