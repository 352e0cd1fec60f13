#include "semalg/toric.hpp"

#include <cassert>

namespace semalg {

Poly binomial_of(const IntVec& u, std::size_t nvars, const Field& f,
                 const MonomialOrder& o) {
  Monomial plus = Monomial::one(nvars), minus = Monomial::one(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    long v = static_cast<long>(u[i].get_si());
    assert(u[i] == v);
    if (v > 0)
      plus.e[i] = static_cast<int>(v);
    else if (v < 0)
      minus.e[i] = static_cast<int>(-v);
  }
  return Poly::from_terms({{plus, 1}, {minus, -1}}, f, o);
}

namespace {

Poly divide_out_variable(const Poly& p, std::size_t v, const Field& f,
                         const MonomialOrder& o) {
  if (p.is_zero()) return p;
  int k = p.lead().m.e[v];
  for (const Term& t : p.terms()) k = std::min(k, t.m.e[v]);
  if (k == 0) return p;
  std::vector<Term> terms;
  for (const Term& t : p.terms()) {
    Term s = t;
    s.m.e[v] -= k;
    terms.push_back(std::move(s));
  }
  return Poly::from_terms(std::move(terms), f, o);
}

}  // namespace

ToricIdeal toric_ideal(const AffineSemigroup& b, const MonomialOrder& order) {
  const Field q;  // binomial arithmetic never leaves {-1, 0, 1}
  const std::size_t n = b.count();
  IntMatrix kernel = kernel_basis(b.matrix());

  std::vector<Poly> gens;
  for (std::size_t i = 0; i < kernel.rows(); ++i)
    gens.push_back(binomial_of(kernel.row(i), n, q, order));

  // positive grading making every lattice binomial homogeneous
  std::vector<long> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int s = vec_sum(b.generators()[i]);
    weights[i] = static_cast<long>(s.get_si());
  }

  for (std::size_t v = 0; v < n; ++v) {
    MonomialOrder sat = MonomialOrder::saturating(weights, v, n);
    GroebnerBasis gb = groebner(gens, q, sat, n);
    gens.clear();
    for (const Poly& g : gb.gens)
      gens.push_back(divide_out_variable(g, v, q, sat));
  }

  ToricIdeal out;
  std::vector<Poly> resorted;
  for (const Poly& g : gens) resorted.push_back(g.resorted(q, order));
  out.gb = groebner(resorted, q, order, n);
  out.lattice_kernel = std::move(kernel);
  return out;
}

}  // namespace semalg
