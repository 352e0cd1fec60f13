#include "semalg/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace semalg {

ModLead mod_lead(const ModVec& v, const ModuleOrder& o) {
  ModLead best;
  bool found = false;
  for (std::size_t p = 0; p < v.rank(); ++p) {
    if (v[p].is_zero()) continue;
    const Term& t = v[p].lead();
    if (!found || o.compare(t.m, p, best.m, best.pos) > 0) {
      best = {p, t.m, t.c};
      found = true;
    }
  }
  assert(found);
  return best;
}

ModVec mod_add(const ModVec& a, const ModVec& b, const Field& f,
               const MonomialOrder& o) {
  assert(a.rank() == b.rank());
  ModVec out(a.rank());
  for (std::size_t p = 0; p < a.rank(); ++p)
    out[p] = Poly::add(a[p], b[p], f, o);
  return out;
}

ModVec mod_sub(const ModVec& a, const ModVec& b, const Field& f,
               const MonomialOrder& o) {
  assert(a.rank() == b.rank());
  ModVec out(a.rank());
  for (std::size_t p = 0; p < a.rank(); ++p)
    out[p] = Poly::sub(a[p], b[p], f, o);
  return out;
}

ModVec mod_mul_term(const ModVec& a, const Monomial& m, const mpq_class& c,
                    const Field& f) {
  ModVec out(a.rank());
  for (std::size_t p = 0; p < a.rank(); ++p)
    out[p] = Poly::mul_term(a[p], m, c, f);
  return out;
}

ModVec mod_monic(const ModVec& a, const Field& f, const ModuleOrder& o) {
  if (a.is_zero()) return a;
  ModLead l = mod_lead(a, o);
  ModVec out(a.rank());
  mpq_class inv = f.inv(l.c);
  for (std::size_t p = 0; p < a.rank(); ++p)
    out[p] = Poly::scale(a[p], inv, f);
  return out;
}

namespace {

// deterministic total order used to sort bases: by lead term, then by
// a full structural comparison
bool modvec_canon_less(const ModVec& a, const ModVec& b, const ModuleOrder& o) {
  ModLead la = mod_lead(a, o), lb = mod_lead(b, o);
  int c = o.compare(la.m, la.pos, lb.m, lb.pos);
  if (c != 0) return c < 0;
  for (std::size_t p = 0; p < a.rank(); ++p) {
    const auto& ta = a[p].terms();
    const auto& tb = b[p].terms();
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    for (std::size_t i = 0; i < ta.size(); ++i) {
      if (ta[i].m != tb[i].m) return ta[i].m < tb[i].m;
      if (ta[i].c != tb[i].c) return ta[i].c < tb[i].c;
    }
  }
  return false;
}

}  // namespace

ModVec module_normal_form(const ModVec& v, const std::vector<ModVec>& basis,
                          const Field& f, const ModuleOrder& o) {
  ModVec rem(v.rank());
  ModVec work = v;
  while (!work.is_zero()) {
    ModLead l = mod_lead(work, o);
    bool reduced = false;
    for (const ModVec& g : basis) {
      if (g.is_zero()) continue;
      ModLead lg = mod_lead(g, o);
      if (lg.pos != l.pos || !lg.m.divides(l.m)) continue;
      ModVec q = mod_mul_term(g, l.m.div(lg.m), f.div(l.c, lg.c), f);
      work = mod_sub(work, q, f, o.mono);
      reduced = true;
      break;
    }
    if (!reduced) {
      // move the irreducible lead into the remainder
      rem[l.pos] = Poly::add(rem[l.pos], Poly::monomial(l.m, l.c, f), f, o.mono);
      work[l.pos] =
          Poly::sub(work[l.pos], Poly::monomial(l.m, l.c, f), f, o.mono);
    }
  }
  return rem;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

std::vector<ModVec> module_groebner(std::vector<ModVec> gens, const Field& f,
                                    const ModuleOrder& o) {
  // inputs may carry a stale term order; re-sort before trusting lead()
  for (ModVec& v : gens)
    for (std::size_t p = 0; p < v.rank(); ++p)
      v[p] = v[p].resorted(f, o.mono);
  std::vector<ModVec> g;
  for (ModVec& v : gens)
    if (!v.is_zero()) g.push_back(mod_monic(v, f, o));
  std::sort(g.begin(), g.end(),
            [&](const ModVec& a, const ModVec& b) { return modvec_canon_less(a, b, o); });

  const bool ideal_case = !g.empty() && g[0].rank() == 1;
  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pairs = [&](std::size_t j) {
    ModLead lj = mod_lead(g[j], o);
    for (std::size_t i = 0; i < j; ++i) {
      ModLead li = mod_lead(g[i], o);
      if (li.pos != lj.pos) continue;
      queue.push_back({i, j, li.m.lcm(lj.m)});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    // normal strategy: smallest lcm first, ties by index
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
      int c = o.mono.compare(queue[k].lcm, queue[best].lcm);
      if (c < 0 || (c == 0 && std::pair(queue[k].i, queue[k].j) <
                                  std::pair(queue[best].i, queue[best].j)))
        best = k;
    }
    Pair pr = queue[best];
    queue.erase(queue.begin() + best);
    pending.erase({pr.i, pr.j});

    ModLead li = mod_lead(g[pr.i], o), lj = mod_lead(g[pr.j], o);
    if (ideal_case && li.m.coprime(lj.m)) continue;  // product criterion
    // chain criterion
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      ModLead lk = mod_lead(g[k], o);
      if (lk.pos != li.pos || !lk.m.divides(pr.lcm)) continue;
      auto key_ik = std::minmax(pr.i, k);
      auto key_jk = std::minmax(pr.j, k);
      if (!pending.count({key_ik.first, key_ik.second}) &&
          !pending.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    ModVec s = mod_sub(
        mod_mul_term(g[pr.i], pr.lcm.div(li.m), f.inv(li.c), f),
        mod_mul_term(g[pr.j], pr.lcm.div(lj.m), f.inv(lj.c), f), f, o.mono);
    ModVec r = module_normal_form(s, g, f, o);
    if (!r.is_zero()) {
      g.push_back(mod_monic(r, f, o));
      push_pairs(g.size() - 1);
    }
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<ModVec> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    ModLead li = mod_lead(g[i], o);
    bool drop = false;
    for (std::size_t j = 0; j < g.size() && !drop; ++j) {
      if (i == j) continue;
      ModLead lj = mod_lead(g[j], o);
      if (lj.pos != li.pos || !lj.m.divides(li.m)) continue;
      if (lj.m == li.m && j > i) continue;  // keep the earlier of equal leads
      drop = true;
    }
    if (!drop) minimal.push_back(g[i]);
  }

  // tail-reduce each element against the others
  std::vector<ModVec> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModVec> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    ModLead l = mod_lead(minimal[i], o);
    ModVec head = ModVec::unit(minimal[i].rank(), l.pos,
                               Poly::monomial(l.m, l.c, f));
    ModVec tail = mod_sub(minimal[i], head, f, o.mono);
    ModVec nf_tail = module_normal_form(tail, others, f, o);
    reduced.push_back(mod_monic(mod_add(head, nf_tail, f, o.mono), f, o));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const ModVec& a, const ModVec& b) { return modvec_canon_less(a, b, o); });
  return reduced;
}

std::vector<ModVec> syzygy_module(const std::vector<ModVec>& gens,
                                  const Field& f, const MonomialOrder& o) {
  if (gens.empty()) return {};
  const std::size_t r = gens[0].rank();
  const std::size_t k = gens.size();
  std::size_t nvars = 0;
  for (const ModVec& g : gens)
    for (std::size_t p = 0; p < g.rank(); ++p)
      if (!g[p].is_zero()) nvars = g[p].lead().m.nvars();

  std::vector<ModVec> aug;
  for (std::size_t i = 0; i < k; ++i) {
    ModVec v(r + k);
    for (std::size_t p = 0; p < r; ++p) v[p] = gens[i][p];
    v[r + i] = Poly::constant(nvars, 1, f);
    aug.push_back(std::move(v));
  }
  ModuleOrder elim{o, r};
  std::vector<ModVec> gb = module_groebner(std::move(aug), f, elim);

  std::vector<ModVec> syz;
  for (const ModVec& v : gb) {
    bool in_aux = true;
    for (std::size_t p = 0; p < r && in_aux; ++p)
      if (!v[p].is_zero()) in_aux = false;
    if (!in_aux) continue;
    ModVec s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = v[r + i];
    syz.push_back(std::move(s));
  }
  return syz;
}

GroebnerBasis groebner(const std::vector<Poly>& gens, const Field& f,
                       const MonomialOrder& o, std::size_t nvars) {
  std::vector<ModVec> input;
  for (const Poly& p : gens)
    if (!p.is_zero()) input.push_back(ModVec::unit(1, 0, p));
  ModuleOrder mo{o, static_cast<std::size_t>(-1)};
  std::vector<ModVec> gb = module_groebner(std::move(input), f, mo);
  GroebnerBasis out;
  out.order = o;
  out.nvars = nvars;
  for (const ModVec& v : gb) out.gens.push_back(v[0]);
  return out;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb, const Field& f) {
  std::vector<ModVec> basis;
  for (const Poly& g : gb.gens) basis.push_back(ModVec::unit(1, 0, g));
  ModuleOrder mo{gb.order, static_cast<std::size_t>(-1)};
  ModVec r =
      module_normal_form(ModVec::unit(1, 0, p.resorted(f, gb.order)), basis, f, mo);
  return r[0];
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  const std::size_t n = gb.nvars;
  std::vector<Monomial> leads;
  for (const Poly& g : gb.gens)
    if (!g.is_zero()) leads.push_back(g.lead().m);
  for (const Monomial& l : leads)
    if (l.is_one()) return {};  // unit ideal

  std::vector<int> bound(n, -1);
  for (const Monomial& l : leads) {
    int support = -1;
    bool pure = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (l.e[v] == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = static_cast<int>(v);
    }
    if (pure && support >= 0) {
      if (bound[support] < 0 || l.e[support] < bound[support])
        bound[support] = l.e[support];
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (bound[v] < 0)
      throw AlgebraError(Errc::InfiniteDimension,
                         "no pure power of variable " + std::to_string(v) +
                             " in the leading-term staircase");

  std::vector<Monomial> out;
  Monomial cur = Monomial::one(n);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      for (const Monomial& l : leads)
        if (l.divides(cur)) return;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      cur.e[v] = e;
      rec(v + 1);
    }
    cur.e[v] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;  // variable 0 first within a degree
  });
  return out;
}

}  // namespace semalg
