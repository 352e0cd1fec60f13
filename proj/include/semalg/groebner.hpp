#ifndef SEMALG_GROEBNER_HPP
#define SEMALG_GROEBNER_HPP

#include <cstddef>
#include <vector>

#include "semalg/errors.hpp"
#include "semalg/poly.hpp"

namespace semalg {

// Element of a free module R^rank, dense by position. Ideal computations
// use rank 1 throughout.
class ModVec {
 public:
  ModVec() = default;
  explicit ModVec(std::size_t rank) : comp_(rank) {}
  static ModVec unit(std::size_t rank, std::size_t pos, Poly p) {
    ModVec v(rank);
    v.comp_[pos] = std::move(p);
    return v;
  }

  std::size_t rank() const { return comp_.size(); }
  const Poly& operator[](std::size_t i) const { return comp_[i]; }
  Poly& operator[](std::size_t i) { return comp_[i]; }
  bool is_zero() const {
    for (const Poly& p : comp_)
      if (!p.is_zero()) return false;
    return true;
  }
  friend bool operator==(const ModVec&, const ModVec&) = default;

 private:
  std::vector<Poly> comp_;
};

// Term-over-position order with an optional elimination split: every term
// in a position < aux_start beats every term in a position >= aux_start.
// Within a block, monomials decide and the lower position wins ties.
struct ModuleOrder {
  MonomialOrder mono;
  std::size_t aux_start = static_cast<std::size_t>(-1);

  int compare(const Monomial& ma, std::size_t pa, const Monomial& mb,
              std::size_t pb) const {
    bool ba = pa >= aux_start, bb = pb >= aux_start;
    if (ba != bb) return ba ? -1 : 1;
    int c = mono.compare(ma, mb);
    if (c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }
};

struct ModLead {
  std::size_t pos;
  Monomial m;
  mpq_class c;
};

ModLead mod_lead(const ModVec& v, const ModuleOrder& o);

ModVec mod_add(const ModVec& a, const ModVec& b, const Field& f,
               const MonomialOrder& o);
ModVec mod_sub(const ModVec& a, const ModVec& b, const Field& f,
               const MonomialOrder& o);
ModVec mod_mul_term(const ModVec& a, const Monomial& m, const mpq_class& c,
                    const Field& f);
ModVec mod_monic(const ModVec& a, const Field& f, const ModuleOrder& o);

// Full normal form: every term of the result is reducible by no element
// of basis. basis need not be a Groebner basis (then the result is only
// a remainder for the fixed, deterministic reduction strategy).
ModVec module_normal_form(const ModVec& v, const std::vector<ModVec>& basis,
                          const Field& f, const ModuleOrder& o);

// Reduced Groebner basis of the submodule generated by gens; output is
// monic, fully inter-reduced and canonically sorted, hence unique for a
// given order.
std::vector<ModVec> module_groebner(std::vector<ModVec> gens, const Field& f,
                                    const ModuleOrder& o);

// Generators of the syzygy module of gens (vectors of length gens.size()),
// computed by the elimination order on F (+) R^k.
std::vector<ModVec> syzygy_module(const std::vector<ModVec>& gens,
                                  const Field& f, const MonomialOrder& o);

// ---- ideal-level wrappers ----

struct GroebnerBasis {
  std::vector<Poly> gens;  // reduced: monic, pairwise fully reduced
  MonomialOrder order;
  std::size_t nvars = 0;
  bool reduced = true;
};

GroebnerBasis groebner(const std::vector<Poly>& gens, const Field& f,
                       const MonomialOrder& o, std::size_t nvars);
Poly normal_form(const Poly& p, const GroebnerBasis& gb, const Field& f);

// All monomials outside the leading-term staircase, in degree-then-lex
// order. Throws InfiniteDimension when some variable has no pure power
// among the leading terms.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

}  // namespace semalg

#endif
