#ifndef SEMALG_RESOLUTION_HPP
#define SEMALG_RESOLUTION_HPP

#include <map>
#include <vector>

#include "semalg/groebner.hpp"
#include "semalg/intlin.hpp"

namespace semalg {

// Graded Betti numbers beta_{i,j} of a module over a standard-graded
// polynomial ring (deg x_v = 1).
struct BettiTable {
  std::map<std::pair<int, long>, Int> entries;

  void add(int i, long j, const Int& v = Int(1)) {
    if (v == 0) return;
    entries[{i, j}] += v;
  }
  bool empty() const { return entries.empty(); }
  long regularity() const;        // max j - i
  int projective_dimension() const;  // max i
  long depth(std::size_t nvars) const {
    return static_cast<long>(nvars) - projective_dimension();
  }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// Minimal free resolution of the submodule of R^rank generated by gens,
// where basis vector p of the ambient free module sits in degree
// shifts[p]. All generators must be homogeneous. levels[i] holds the
// minimal generators of the i-th syzygy module (level 0 = the module
// itself), expressed over the previous level's generators, so
// consecutive levels compose to zero.
struct Resolution {
  BettiTable betti;
  std::vector<std::vector<ModVec>> levels;
  std::vector<std::vector<long>> level_shifts;  // degrees of each level's gens
};

long modvec_degree(const ModVec& v, const std::vector<long>& shifts);

// Minimal generators of the submodule generated by gens (graded greedy
// extraction; result is reduced, monic, deterministic).
std::vector<ModVec> minimal_generators(const std::vector<ModVec>& gens,
                                       const std::vector<long>& shifts,
                                       const Field& f, const MonomialOrder& o);

Resolution resolve_module(std::vector<ModVec> gens, std::vector<long> shifts,
                          const Field& f, const MonomialOrder& o);

// Graded presentation of a module: coker of the map whose columns are
// cols, landing in a free module with row degrees row_shifts.
struct Presentation {
  std::vector<long> row_shifts;
  std::vector<ModVec> cols;
};

// Betti table of coker(presentation): strips unit entries, records
// beta_0 from the minimal cover, then resolves the image of the map.
BettiTable minimal_resolution(Presentation pres, const Field& f,
                              const MonomialOrder& o);

}  // namespace semalg

#endif
