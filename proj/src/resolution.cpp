#include "semalg/resolution.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace semalg {

long BettiTable::regularity() const {
  long r = std::numeric_limits<long>::min();
  for (const auto& [ij, v] : entries) r = std::max(r, ij.second - ij.first);
  return r;
}

int BettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [ij, v] : entries) p = std::max(p, ij.first);
  return p;
}

long modvec_degree(const ModVec& v, const std::vector<long>& shifts) {
  long deg = std::numeric_limits<long>::min();
  for (std::size_t p = 0; p < v.rank(); ++p) {
    for (const Term& t : v[p].terms()) {
      long d = t.m.degree() + shifts[p];
      if (deg == std::numeric_limits<long>::min()) deg = d;
      assert(d == deg && "module vector must be homogeneous");
      deg = d;
    }
  }
  return deg;
}

std::vector<ModVec> minimal_generators(const std::vector<ModVec>& gens,
                                       const std::vector<long>& shifts,
                                       const Field& f, const MonomialOrder& o) {
  ModuleOrder mo{o, static_cast<std::size_t>(-1)};
  std::vector<ModVec> sorted;
  for (const ModVec& g : gens)
    if (!g.is_zero()) sorted.push_back(mod_monic(g, f, mo));
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const ModVec& a, const ModVec& b) {
                     long da = modvec_degree(a, shifts);
                     long db = modvec_degree(b, shifts);
                     if (da != db) return da < db;
                     ModLead la = mod_lead(a, mo), lb = mod_lead(b, mo);
                     return mo.compare(la.m, la.pos, lb.m, lb.pos) < 0;
                   });

  std::vector<ModVec> kept;
  std::vector<ModVec> gb;
  for (const ModVec& g : sorted) {
    ModVec r = module_normal_form(g, gb, f, mo);
    if (r.is_zero()) continue;
    kept.push_back(mod_monic(r, f, mo));
    std::vector<ModVec> next = kept;
    gb = module_groebner(std::move(next), f, mo);
  }
  return kept;
}

Resolution resolve_module(std::vector<ModVec> gens, std::vector<long> shifts,
                          const Field& f, const MonomialOrder& o) {
  Resolution res;
  int level = 0;
  while (true) {
    std::vector<ModVec> mg = minimal_generators(gens, shifts, f, o);
    if (mg.empty()) break;
    std::vector<long> mg_deg;
    for (const ModVec& g : mg) {
      long d = modvec_degree(g, shifts);
      res.betti.add(level, d);
      mg_deg.push_back(d);
    }
    res.levels.push_back(mg);
    res.level_shifts.push_back(mg_deg);
    gens = syzygy_module(mg, f, o);
    shifts = std::move(mg_deg);
    ++level;
    assert(level <= 64 && "resolution did not terminate");
  }
  return res;
}

namespace {

bool poly_is_unit(const Poly& p) {
  return p.size() == 1 && p.lead().m.is_one();
}

}  // namespace

BettiTable minimal_resolution(Presentation pres, const Field& f,
                              const MonomialOrder& o) {
  // split off unit entries of the presentation matrix
  while (true) {
    std::size_t ui = 0, uj = 0;
    bool found = false;
    for (std::size_t j = 0; j < pres.cols.size() && !found; ++j)
      for (std::size_t i = 0; i < pres.row_shifts.size() && !found; ++i)
        if (poly_is_unit(pres.cols[j][i])) {
          ui = i;
          uj = j;
          found = true;
        }
    if (!found) break;
    const mpq_class u = pres.cols[uj][ui].lead().c;
    for (std::size_t l = 0; l < pres.cols.size(); ++l) {
      if (l == uj || pres.cols[l][ui].is_zero()) continue;
      Poly factor = Poly::scale(pres.cols[l][ui], f.inv(u), f);
      for (std::size_t i = 0; i < pres.row_shifts.size(); ++i)
        pres.cols[l][i] = Poly::sub(pres.cols[l][i],
                                    Poly::mul(factor, pres.cols[uj][i], f, o),
                                    f, o);
    }
    // drop row ui and column uj
    std::vector<ModVec> cols;
    for (std::size_t l = 0; l < pres.cols.size(); ++l) {
      if (l == uj) continue;
      ModVec v(pres.row_shifts.size() - 1);
      std::size_t w = 0;
      for (std::size_t i = 0; i < pres.row_shifts.size(); ++i) {
        if (i == ui) continue;
        v[w++] = pres.cols[l][i];
      }
      cols.push_back(std::move(v));
    }
    pres.cols = std::move(cols);
    pres.row_shifts.erase(pres.row_shifts.begin() + ui);
  }

  BettiTable table;
  for (long s : pres.row_shifts) table.add(0, s);
  Resolution r = resolve_module(pres.cols, pres.row_shifts, f, o);
  for (const auto& [ij, v] : r.betti.entries)
    table.add(ij.first + 1, ij.second, v);
  return table;
}

}  // namespace semalg
