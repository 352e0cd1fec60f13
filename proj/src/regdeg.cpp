#include "semalg/regdeg.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semalg {

namespace {

Poly refield(const Poly& p, const Field& f, const MonomialOrder& o) {
  return Poly::from_terms(p.terms(), f, o);
}

MonomialIdeal component_ideal(const DecompositionComponent& c, std::size_t k) {
  std::vector<Monomial> gens;
  for (const IntVec& e : c.ideal_exponents) {
    Monomial m = Monomial::one(k);
    for (std::size_t j = 0; j < k; ++j) m.e[j] = static_cast<int>(e[j].get_si());
    gens.push_back(std::move(m));
  }
  return MonomialIdeal::of(k, std::move(gens));
}

// reg of I_g over the polynomial ring on A's generators, resolution route:
// syzygies of [monomials of I_g | defining equations of K[A]] projected to
// the monomial block
long class_reg_generic(const DecompositionComponent& c,
                       const std::vector<Poly>& subalgebra_relations,
                       std::size_t k, const Field& f, const MonomialOrder& o) {
  MonomialIdeal ideal = component_ideal(c, k);
  std::vector<ModVec> row;
  std::vector<long> row_degrees;
  for (const Monomial& m : ideal.gens) {
    row.push_back(ModVec::unit(1, 0, Poly::monomial(m, 1, f)));
    row_degrees.push_back(m.degree());
  }
  const std::size_t nideal = row.size();
  for (const Poly& g : subalgebra_relations)
    row.push_back(ModVec::unit(1, 0, refield(g, f, o)));

  std::vector<ModVec> syz = syzygy_module(row, f, o);
  Presentation pres;
  pres.row_shifts = row_degrees;
  for (const ModVec& s : syz) {
    ModVec col(nideal);
    bool nonzero = false;
    for (std::size_t i = 0; i < nideal; ++i) {
      col[i] = s[i];
      if (!col[i].is_zero()) nonzero = true;
    }
    if (nonzero) pres.cols.push_back(std::move(col));
  }
  BettiTable betti = minimal_resolution(std::move(pres), f, o);
  return betti.regularity();
}

}  // namespace

RegularityResult regularity(const AffineSemigroup& b, const Field& field,
                            const RegOptions& opts) {
  const auto& grading = b.grading();
  if (!grading)
    throw AlgebraError(Errc::NotHomogeneous,
                       "no common grading with degree-1 generators");

  std::vector<std::size_t> indices =
      opts.subalgebra ? *opts.subalgebra : extremal_subset(b);
  std::vector<IntVec> agens;
  for (std::size_t i : indices) {
    if (i >= b.count())
      throw std::invalid_argument("subalgebra index out of range");
    agens.push_back(b.generators()[i]);
  }
  AffineSemigroup a(b.ambient_dim(), std::move(agens));
  for (const IntVec& g : a.generators())
    if (grading->degree_int(g) != 1)
      throw std::invalid_argument("subalgebra generators must have degree 1");

  Decomposition dec = decompose(a, b);
  const std::size_t k = a.count();
  const bool free_subalgebra = (k == a.rank());

  RegularityResult res;
  res.field_char = field.characteristic();
  MonomialOrder order = MonomialOrder::degrevlex();

  std::vector<Poly> relations;
  if (!free_subalgebra || opts.force_generic)
    relations = toric_ideal(a, order).gb.gens;

  const bool generic = !free_subalgebra || opts.force_generic;
  res.path = generic ? "generic-resolution"
                     : (k == 2 ? "free-monomial-2var" : "free-monomial");

  const std::size_t nclasses = dec.components.size();
  std::vector<long> class_reg(nclasses, 0);
  auto run_class = [&](std::size_t i) {
    const DecompositionComponent& c = dec.components[i];
    if (generic) {
      class_reg[i] = class_reg_generic(c, relations, k, field, order);
    } else if (k == 2) {
      class_reg[i] = two_var_regularity(component_ideal(c, k));
    } else {
      class_reg[i] =
          monomial_betti(component_ideal(c, k), field).regularity();
    }
  };
  if (opts.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < nclasses; ++i) run_class(i);
#else
    for (std::size_t i = 0; i < nclasses; ++i) run_class(i);
#endif
  } else {
    // serial reference path
    for (std::size_t i = 0; i < nclasses; ++i) run_class(i);
  }

  long best = 0;
  bool first = true;
  for (std::size_t i = 0; i < nclasses; ++i) {
    const DecompositionComponent& c = dec.components[i];
    long sd = grading->degree_int(c.shift);
    res.per_class.push_back({c.class_label, class_reg[i], sd});
    long total = class_reg[i] + sd;
    if (first || total > best) best = total;
    first = false;
  }
  res.reg = best;

  DegreeInfo info = degree_codim(b);
  res.degree = info.degree;
  res.codim = info.codim;
  res.dim = info.dim;
  return res;
}

DegreeInfo degree_codim(const AffineSemigroup& b) {
  if (!b.grading())
    throw AlgebraError(Errc::NotHomogeneous,
                       "no common grading with degree-1 generators");
  DegreeInfo info;
  info.dim = static_cast<long>(b.rank());
  info.codim = static_cast<long>(b.count()) - info.dim;

  AffineSemigroup a = [&] {
    std::vector<IntVec> agens;
    for (std::size_t i : extremal_subset(b)) agens.push_back(b.generators()[i]);
    return AffineSemigroup(b.ambient_dim(), std::move(agens));
  }();
  info.group_order = QuotientGroup::of(a.matrix(), b.matrix()).order();

  if (a.count() == a.rank()) {
    info.subalgebra_degree = 1;
  } else {
    MonomialOrder order = MonomialOrder::degrevlex();
    GroebnerBasis gb = toric_ideal(a, order).gb;
    std::vector<Monomial> leads;
    for (const Poly& g : gb.gens) leads.push_back(g.lead().m);
    HilbertInfo hi = hilbert_info(MonomialIdeal::of(a.count(), leads));
    assert(hi.dim == static_cast<long>(a.rank()));
    info.subalgebra_degree = hi.degree;
  }
  info.degree = info.group_order * info.subalgebra_degree;
  return info;
}

BettiTable full_ring_betti(const AffineSemigroup& b, const Field& field) {
  MonomialOrder order = MonomialOrder::degrevlex();
  GroebnerBasis gb = toric_ideal(b, order).gb;
  Presentation pres;
  pres.row_shifts = {0};
  for (const Poly& g : gb.gens)
    pres.cols.push_back(ModVec::unit(1, 0, refield(g, field, order)));
  return minimal_resolution(std::move(pres), field, order);
}

long regularity_direct(const AffineSemigroup& b, const Field& field) {
  return full_ring_betti(b, field).regularity();
}

DegreeInfo degree_from_initial_ideal(const AffineSemigroup& b) {
  if (!b.grading())
    throw AlgebraError(Errc::NotHomogeneous,
                       "no common grading with degree-1 generators");
  MonomialOrder order = MonomialOrder::degrevlex();
  GroebnerBasis gb = toric_ideal(b, order).gb;
  std::vector<Monomial> leads;
  for (const Poly& g : gb.gens) leads.push_back(g.lead().m);
  HilbertInfo hi = hilbert_info(MonomialIdeal::of(b.count(), leads));
  DegreeInfo info;
  info.dim = hi.dim;
  info.codim = hi.codim;
  info.degree = hi.degree;
  info.group_order = 0;
  info.subalgebra_degree = 0;
  return info;
}

}  // namespace semalg
