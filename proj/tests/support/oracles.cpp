#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace semalg::oracles {

BettiTable taylor_betti(const MonomialIdeal& ideal, const Field& f) {
  BettiTable table;
  if (ideal.is_zero()) return table;
  if (ideal.is_unit()) {
    table.add(0, 0);
    return table;
  }
  const std::size_t k = ideal.gens.size();
  // subset -> lcm
  std::vector<Monomial> lcm_of(std::size_t(1) << k, Monomial::one(ideal.nvars));
  for (std::size_t mask = 1; mask < lcm_of.size(); ++mask) {
    std::size_t low = mask & (mask - 1);
    std::size_t bit = mask ^ low;
    std::size_t idx = 0;
    while (!(bit & (std::size_t(1) << idx))) ++idx;
    lcm_of[mask] = lcm_of[low].lcm(ideal.gens[idx]);
  }
  std::map<Monomial, std::vector<std::size_t>> strands;
  for (std::size_t mask = 1; mask < lcm_of.size(); ++mask)
    strands[lcm_of[mask]].push_back(mask);

  for (auto& [alpha, masks] : strands) {
    // group subsets by cardinality
    std::map<int, std::vector<std::size_t>> by_size;
    for (std::size_t mask : masks)
      by_size[__builtin_popcountll(mask)].push_back(mask);
    int max_size = by_size.rbegin()->first;
    // index within each size class
    std::map<std::size_t, std::size_t> pos;
    for (auto& [s, list] : by_size) {
      std::sort(list.begin(), list.end());
      for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = i;
    }
    // boundary rank from size s to size s-1 within the strand
    std::map<int, std::size_t> rank;
    for (int s = 2; s <= max_size; ++s) {
      if (!by_size.count(s) || !by_size.count(s - 1)) {
        rank[s] = 0;
        continue;
      }
      const auto& rows = by_size[s];
      const auto& cols = by_size[s - 1];
      std::vector<std::vector<mpq_class>> mat(
          rows.size(), std::vector<mpq_class>(cols.size(), 0));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t mask = rows[r];
        int sign = 1;
        for (std::size_t b = 0; b < k; ++b) {
          if (!(mask & (std::size_t(1) << b))) continue;
          std::size_t sub = mask ^ (std::size_t(1) << b);
          if (lcm_of[sub] == alpha) mat[r][pos.at(sub)] = sign;
          sign = -sign;
        }
      }
      // rank via plain elimination in the field
      std::size_t rk = 0;
      std::vector<std::vector<mpq_class>> m = mat;
      for (std::size_t c = 0; c < m[0].size() && rk < m.size(); ++c) {
        std::size_t piv = m.size();
        for (std::size_t r2 = rk; r2 < m.size(); ++r2)
          if (!f.is_zero(m[r2][c])) {
            piv = r2;
            break;
          }
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rk]);
        mpq_class inv = f.inv(m[rk][c]);
        for (std::size_t j = 0; j < m[0].size(); ++j)
          m[rk][j] = f.mul(m[rk][j], inv);
        for (std::size_t r2 = 0; r2 < m.size(); ++r2) {
          if (r2 == rk || f.is_zero(m[r2][c])) continue;
          mpq_class fac = m[r2][c];
          for (std::size_t j = 0; j < m[0].size(); ++j)
            m[r2][j] = f.sub(m[r2][j], f.mul(fac, m[rk][j]));
        }
        ++rk;
      }
      rank[s] = rk;
    }
    // homology of the strand; H_s for s >= 1 lands in beta_{s-1, deg alpha}
    for (int s = 1; s <= max_size; ++s) {
      std::size_t dim_s = by_size.count(s) ? by_size[s].size() : 0;
      std::size_t r_s = s >= 2 ? rank[s] : 0;  // boundary into size s-1 (s=1 maps onto lcm 1 strand)
      std::size_t r_up = rank.count(s + 1) ? rank[s + 1] : 0;
      std::size_t h = dim_s - r_s - r_up;
      if (h > 0) table.add(s - 1, alpha.degree(), Int(h));
    }
  }
  return table;
}

std::optional<IntVec> exhaustive_solve(const IntMatrix& m, const IntVec& v,
                                       long box) {
  IntVec x(m.rows(), Int(-box));
  while (true) {
    if (mat_apply_left(x, m) == v) return x;
    std::size_t i = 0;
    while (i < x.size()) {
      x[i] += 1;
      if (x[i] <= box) break;
      x[i] = -box;
      ++i;
    }
    if (i == x.size()) return std::nullopt;
  }
}

std::size_t rational_rank(const IntMatrix& m) {
  std::vector<RatVec> t(m.rows(), RatVec(m.cols(), Rat(0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t[i][j] = Rat(m.at(i, j));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = m.rows();
    for (std::size_t r = rank; r < m.rows(); ++r)
      if (t[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == m.rows()) continue;
    std::swap(t[piv], t[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || t[r][c] == 0) continue;
      Rat f = t[r][c] / t[rank][c];
      for (std::size_t j = 0; j < m.cols(); ++j) t[r][j] -= f * t[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

// unique rational solution of sum lambda_i gens[S_i] = v for linearly
// independent subsets, nonnegativity checked
bool feasible_on_subset(const std::vector<IntVec>& gens,
                        const std::vector<std::size_t>& subset,
                        const IntVec& v) {
  const std::size_t m = v.size(), k = subset.size();
  std::vector<RatVec> t(m, RatVec(k + 1, Rat(0)));
  for (std::size_t eq = 0; eq < m; ++eq) {
    for (std::size_t j = 0; j < k; ++j) t[eq][j] = Rat(gens[subset[j]][eq]);
    t[eq][k] = Rat(v[eq]);
  }
  std::vector<std::size_t> pivot_row(k, m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i)
      if (t[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == m) return false;  // dependent subset; skip
    std::swap(t[piv], t[r]);
    Rat p = t[r][c];
    for (std::size_t j = 0; j <= k; ++j) t[r][j] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rat f = t[i][c];
      for (std::size_t j = 0; j <= k; ++j) t[i][j] -= f * t[r][j];
    }
    pivot_row[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (t[i][k] != 0) return false;
  for (std::size_t c = 0; c < k; ++c)
    if (t[pivot_row[c]][k] < 0) return false;
  return true;
}

}  // namespace

bool cone_member_bruteforce(const std::vector<IntVec>& gens, const IntVec& v,
                            long /*denominator_bound*/) {
  if (vec_is_zero(v)) return true;
  const std::size_t dim = v.size();
  const std::size_t n = gens.size();
  // Caratheodory: membership is witnessed on an independent subset of
  // size at most dim
  std::vector<std::size_t> subset;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (!subset.empty() && feasible_on_subset(gens, subset, v)) return true;
    if (subset.size() == dim) return false;
    for (std::size_t i = from; i < n; ++i) {
      subset.push_back(i);
      if (rec(i + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace semalg::oracles
