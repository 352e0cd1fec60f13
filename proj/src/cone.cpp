#include "semalg/cone.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace semalg {

namespace {

void normalize_row(IntVec& r) {
  Int g = 0;
  for (const Int& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (Int& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// r' = |ek| * r - sign(ek) * rk * e, so that r'[k] == 0 and the multiplier
// on r stays positive (inequality senses are preserved)
IntVec eliminate_with(const IntVec& r, const IntVec& e, std::size_t k) {
  Int ek = e[k], rk = r[k];
  int s = sgn(ek);
  IntVec out(r.size());
  for (std::size_t j = 0; j < r.size(); ++j)
    out[j] = abs(ek) * r[j] - s * rk * e[j];
  assert(out[k] == 0);
  normalize_row(out);
  return out;
}

}  // namespace

bool ConeSystem::contains(const IntVec& v) const {
  for (const IntVec& a : eqs)
    if (vec_dot(a, v) != 0) return false;
  for (const IntVec& a : ineqs)
    if (vec_dot(a, v) < 0) return false;
  return true;
}

ConeSystem cone_facets(const std::vector<IntVec>& gens, std::size_t dim,
                       std::size_t cap) {
  const std::size_t n = gens.size();
  const std::size_t total = dim + n;
  std::vector<IntVec> eqs, ineqs;
  for (std::size_t j = 0; j < dim; ++j) {
    IntVec row(total, Int(0));
    row[j] = 1;
    for (std::size_t i = 0; i < n; ++i) row[dim + i] = -gens[i][j];
    eqs.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVec row(total, Int(0));
    row[dim + i] = 1;
    ineqs.push_back(std::move(row));
  }

  for (std::size_t k = dim; k < total; ++k) {
    std::size_t pivot = eqs.size();
    for (std::size_t i = 0; i < eqs.size(); ++i)
      if (eqs[i][k] != 0) {
        pivot = i;
        break;
      }
    if (pivot != eqs.size()) {
      IntVec e = eqs[pivot];
      eqs.erase(eqs.begin() + pivot);
      for (IntVec& r : eqs)
        if (r[k] != 0) r = eliminate_with(r, e, k);
      for (IntVec& r : ineqs)
        if (r[k] != 0) r = eliminate_with(r, e, k);
    } else {
      std::vector<IntVec> pos, neg, zero;
      for (IntVec& r : ineqs) {
        int s = sgn(r[k]);
        if (s > 0)
          pos.push_back(std::move(r));
        else if (s < 0)
          neg.push_back(std::move(r));
        else
          zero.push_back(std::move(r));
      }
      ineqs = std::move(zero);
      for (const IntVec& p : pos)
        for (const IntVec& m : neg) {
          IntVec row(total);
          for (std::size_t j = 0; j < total; ++j)
            row[j] = p[k] * m[j] - m[k] * p[j];
          assert(row[k] == 0);
          normalize_row(row);
          ineqs.push_back(std::move(row));
        }
      if (ineqs.size() > cap)
        throw AlgebraError(Errc::Infeasible,
                           "facet elimination exceeded the row cap");
    }
    // dedupe and drop trivial rows
    std::set<IntVec> seen;
    std::vector<IntVec> compact;
    for (IntVec& r : ineqs) {
      if (vec_is_zero(r)) continue;
      if (seen.insert(r).second) compact.push_back(std::move(r));
    }
    ineqs = std::move(compact);
  }

  ConeSystem sys;
  for (IntVec& r : eqs) {
    for (std::size_t j = dim; j < total; ++j) assert(r[j] == 0);
    r.resize(dim);
    normalize_row(r);
    if (!vec_is_zero(r)) sys.eqs.push_back(std::move(r));
  }
  for (IntVec& r : ineqs) {
    for (std::size_t j = dim; j < total; ++j) assert(r[j] == 0);
    r.resize(dim);
    if (!vec_is_zero(r)) sys.ineqs.push_back(std::move(r));
  }
  return sys;
}

bool cone_contains_simplex(const std::vector<IntVec>& gens,
                           const IntVec& target) {
  const std::size_t m = target.size();
  const std::size_t n = gens.size();
  if (n == 0) return vec_is_zero(target);

  // phase-1 tableau: columns = gens, artificials, rhs
  const std::size_t cols = n + m + 1;
  std::vector<RatVec> t(m, RatVec(cols, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    int flip = target[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = Rat(flip * gens[j][i]);
    t[i][n + i] = 1;
    t[i][cols - 1] = Rat(flip * target[i]);
  }
  std::vector<std::size_t> basis(m);
  RatVec obj(cols, Rat(0));  // reduced costs for minimizing sum of artificials
  for (std::size_t i = 0; i < m; ++i) {
    basis[i] = n + i;
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= t[i][j];
  }
  for (std::size_t i = 0; i < m; ++i) obj[n + i] = 0;

  while (true) {
    // Bland: smallest-index entering column with negative reduced cost
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols - 1) break;
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      Rat cand = t[i][cols - 1] / t[i][enter];
      Rat best = t[leave][cols - 1] / t[leave][enter];
      if (cand < best || (cand == best && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) break;  // cannot happen in phase 1; objective is bounded
    Rat piv = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat c = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= c * t[leave][j];
    }
    Rat oc = obj[enter];
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= oc * t[leave][j];
    basis[leave] = enter;
  }
  Rat value = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) value += t[i][cols - 1];
  return value == 0;
}

bool cone_contains(const std::vector<IntVec>& gens, const IntVec& target,
                   std::size_t dim) {
  if (gens.empty()) return vec_is_zero(target);
  if (dim <= 4) {
    try {
      return cone_facets(gens, dim).contains(target);
    } catch (const AlgebraError&) {
      // elimination blew up; the simplex route is always available
    }
  }
  return cone_contains_simplex(gens, target);
}

}  // namespace semalg
