#include "semalg/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

namespace semalg {

namespace {

void check_preconditions(const AffineSemigroup& a, const AffineSemigroup& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimensions differ");
  if (!cones_equal(a, b))
    throw AlgebraError(Errc::ConeMismatch,
                       "C(A) != C(B): the module generator set is infinite");
}

// exponent vector over B's generators expressing a generator of A
Monomial image_monomial(const AffineSemigroup& a, const AffineSemigroup& b,
                        std::size_t j) {
  const IntVec& e = a.generators()[j];
  for (std::size_t i = 0; i < b.count(); ++i)
    if (b.generators()[i] == e) {
      Monomial m = Monomial::one(b.count());
      m.e[i] = 1;
      return m;
    }
  auto w = b.member_witness(e);
  if (!w)
    throw AlgebraError(Errc::NotSubsemigroup,
                       "a generator of A is not an element of B");
  Monomial m = Monomial::one(b.count());
  for (std::size_t i = 0; i < b.count(); ++i)
    m.e[i] = static_cast<int>((*w)[i].get_si());
  return m;
}

IntVec lattice_point(const Monomial& m, const AffineSemigroup& b) {
  IntVec v(b.ambient_dim(), Int(0));
  for (std::size_t i = 0; i < b.count(); ++i) {
    if (m.e[i] == 0) continue;
    for (std::size_t j = 0; j < b.ambient_dim(); ++j)
      v[j] += Int(m.e[i]) * b.generators()[i][j];
  }
  return v;
}

}  // namespace

std::vector<IntVec> module_generators(const AffineSemigroup& a,
                                      const AffineSemigroup& b) {
  check_preconditions(a, b);
  const Field q;
  MonomialOrder order = MonomialOrder::degrevlex();
  ToricIdeal toric = toric_ideal(b, order);
  std::vector<Poly> gens = toric.gb.gens;
  for (std::size_t j = 0; j < a.count(); ++j)
    gens.push_back(Poly::monomial(image_monomial(a, b, j), 1, q));
  GroebnerBasis gb = groebner(gens, q, order, b.count());
  std::vector<Monomial> basis = standard_monomials(gb);

  std::vector<IntVec> out;
  out.reserve(basis.size());
  for (const Monomial& m : basis) out.push_back(lattice_point(m, b));
  std::sort(out.begin(), out.end(), graded_lex_less);
  assert(std::adjacent_find(out.begin(), out.end()) == out.end());
  return out;
}

std::vector<IntVec> module_generators_bfs(const AffineSemigroup& a,
                                          const AffineSemigroup& b) {
  check_preconditions(a, b);
  const std::size_t n = b.count();
  // minimal positive multiple of each generator of B that lands in A
  std::vector<long> mult(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec acc(b.ambient_dim(), Int(0));
    for (long k = 1;; ++k) {
      acc = vec_add(acc, b.generators()[i]);
      if (a.member(acc)) {
        mult[i] = k;
        break;
      }
      if (k > 512)
        throw AlgebraError(Errc::ConeMismatch,
                           "no bounded multiple lies in the subsemigroup");
    }
  }
  // candidates: combinations with each coefficient below its multiple
  std::set<IntVec> candidates;
  IntVec cur(b.ambient_dim(), Int(0));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      candidates.insert(cur);
      return;
    }
    IntVec saved = cur;
    for (long k = 0; k < mult[i]; ++k) {
      rec(i + 1);
      cur = vec_add(cur, b.generators()[i]);
    }
    cur = std::move(saved);
  };
  rec(0);

  std::vector<IntVec> out;
  for (const IntVec& x : candidates) {
    bool reducible = false;
    for (const IntVec& h : a.generators()) {
      IntVec diff = vec_sub(x, h);
      if (vec_nonneg(diff) && b.member(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

Decomposition decompose(const AffineSemigroup& a, const AffineSemigroup& b,
                        const DecomposeOptions& opts) {
  if (opts.verify_hilbert && !a.is_hilbert_basis())
    throw AlgebraError(Errc::NonHilbert,
                       "generators of A are not its minimal generating set");
  std::vector<IntVec> mgens = module_generators(a, b);
  QuotientGroup quotient = QuotientGroup::of(a.matrix(), b.matrix());
  assert(quotient.finite());

  std::map<IntVec, std::vector<IntVec>> classes;
  for (const IntVec& v : mgens) classes[quotient.project(v)].push_back(v);
  assert(Int(static_cast<long>(classes.size())) == quotient.order());

  Decomposition dec{a, b, quotient, {}};
  for (auto& [label, gamma] : classes) {
    std::sort(gamma.begin(), gamma.end(), graded_lex_less);
    const IntVec& rep = gamma.front();
    DecompositionComponent comp;
    comp.class_label = label;
    comp.gamma = gamma;

    const std::size_t k = a.count();
    std::vector<IntVec> cs;
    IntVec cmin(k, Int(0));
    for (std::size_t t = 0; t < gamma.size(); ++t) {
      auto c = solve_integral(a.matrix(), vec_sub(gamma[t], rep));
      assert(c && "class members must differ by a lattice element of A");
      if (t == 0)
        cmin = *c;
      else
        for (std::size_t j = 0; j < k; ++j) cmin[j] = std::min(cmin[j], (*c)[j]);
      cs.push_back(std::move(*c));
    }

    IntVec shift = rep;
    for (std::size_t j = 0; j < k; ++j)
      if (cmin[j] != 0)
        for (std::size_t x = 0; x < a.ambient_dim(); ++x)
          shift[x] += cmin[j] * a.generators()[j][x];

    comp.shift = shift;
    comp.c_vectors = cs;
    for (std::size_t t = 0; t < gamma.size(); ++t) {
      IntVec exp(k);
      for (std::size_t j = 0; j < k; ++j) exp[j] = cs[t][j] - cmin[j];
      assert(vec_nonneg(exp));
      comp.ideal_exponents.push_back(std::move(exp));
      comp.ambient_exponents.push_back(vec_sub(gamma[t], shift));
    }
    dec.components.push_back(std::move(comp));
  }
  return dec;
}

std::vector<std::set<IntVec>> elements_by_degree(const AffineSemigroup& s,
                                                 const DegreeFunctional& deg,
                                                 long max_degree) {
  std::vector<std::set<IntVec>> levels(max_degree + 1);
  levels[0].insert(IntVec(s.ambient_dim(), Int(0)));
  std::vector<long> gdeg;
  for (const IntVec& g : s.generators()) gdeg.push_back(deg.degree_int(g));
  for (long t = 0; t <= max_degree; ++t) {
    for (const IntVec& x : levels[t]) {
      for (std::size_t i = 0; i < s.count(); ++i) {
        long u = t + gdeg[i];
        if (u > max_degree) continue;
        levels[u].insert(vec_add(x, s.generators()[i]));
      }
    }
  }
  return levels;
}

bool hilbert_identity_holds(const Decomposition& dec, long max_degree) {
  const auto& grading = dec.total.grading();
  if (!grading)
    throw AlgebraError(Errc::NotHomogeneous,
                       "degreewise comparison needs a graded semigroup");
  const DegreeFunctional& deg = *grading;
  auto b_levels = elements_by_degree(dec.total, deg, max_degree);
  auto a_levels = elements_by_degree(dec.base, deg, max_degree);

  for (long t = 0; t <= max_degree; ++t) {
    std::size_t direct_sum = 0;
    for (const DecompositionComponent& comp : dec.components) {
      std::set<IntVec> monomials;
      for (const IntVec& v : comp.gamma) {
        long dv = deg.degree_int(v);
        long remaining = t - dv;
        if (remaining < 0 || remaining > max_degree) continue;
        for (const IntVec& a : a_levels[remaining])
          monomials.insert(vec_add(v, a));
      }
      direct_sum += monomials.size();
    }
    if (direct_sum != b_levels[t].size()) return false;
  }
  return true;
}

}  // namespace semalg
