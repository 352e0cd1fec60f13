#ifndef SEMALG_REGDEG_HPP
#define SEMALG_REGDEG_HPP

#include <optional>
#include <string>

#include "semalg/decompose.hpp"
#include "semalg/monomial_ideal.hpp"

namespace semalg {

struct PerClassReg {
  IntVec class_label;
  long reg_ideal = 0;
  long shift_degree = 0;
};

struct RegularityResult {
  long reg = 0;
  std::vector<PerClassReg> per_class;
  Int degree;
  long codim = 0;
  long dim = 0;
  std::string path;  // "free-monomial", "free-monomial-2var", "generic-resolution"
  unsigned long field_char = 0;
};

struct RegOptions {
  // generator indices spanning the subalgebra; defaults to the extremal subset
  std::optional<std::vector<std::size_t>> subalgebra;
  bool force_generic = false;  // use the resolution path even for free subalgebras
  bool parallel = false;       // distribute per-class work across threads
};

// Castelnuovo-Mumford regularity of K[B] from the decomposition: the
// maximum over classes of reg I_g + deg h_g. Throws NotHomogeneous when
// the generators admit no common grading.
RegularityResult regularity(const AffineSemigroup& b, const Field& field,
                            const RegOptions& opts = {});

struct DegreeInfo {
  Int degree;
  long codim = 0;
  long dim = 0;
  Int group_order;
  Int subalgebra_degree;
};

// degree and codimension of K[B]: class count times the subalgebra degree
DegreeInfo degree_codim(const AffineSemigroup& b);

// Direct route kept as the independent oracle: minimal free resolution of
// the full presentation over one variable per generator.
BettiTable full_ring_betti(const AffineSemigroup& b, const Field& field);
long regularity_direct(const AffineSemigroup& b, const Field& field);

// Hilbert-series route on the initial ideal of the defining equations;
// cross-checks degree_codim.
DegreeInfo degree_from_initial_ideal(const AffineSemigroup& b);

}  // namespace semalg

#endif
