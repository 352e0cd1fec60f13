#include "semalg/monomial_ideal.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace semalg {

MonomialIdeal MonomialIdeal::of(std::size_t nvars, std::vector<Monomial> gens) {
  for (const Monomial& m : gens) {
    if (m.nvars() != nvars)
      throw std::invalid_argument("monomial has wrong variable count");
    for (int e : m.e)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && gens[j].divides(gens[i]) && gens[j] != gens[i])
        redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  return MonomialIdeal{nvars, std::move(minimal)};
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens)
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const Monomial& g : gens) out.push_back(g.div(g.gcd(m)));
  return MonomialIdeal::of(nvars, std::move(out));
}

namespace {

std::vector<Int> poly_sub_shifted(const std::vector<Int>& a,
                                  const std::vector<Int>& b, long shift) {
  std::vector<Int> out = a;
  if (out.size() < b.size() + shift) out.resize(b.size() + shift, Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) out[i + shift] -= b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<Int> numerator_rec(const MonomialIdeal& i) {
  if (i.gens.empty()) return {Int(1)};
  if (i.is_unit()) return {};
  MonomialIdeal rest{i.nvars,
                     std::vector<Monomial>(i.gens.begin(), i.gens.end() - 1)};
  const Monomial& m = i.gens.back();
  std::vector<Int> n_rest = numerator_rec(rest);
  std::vector<Int> n_colon = numerator_rec(rest.colon(m));
  return poly_sub_shifted(n_rest, n_colon, m.degree());
}

}  // namespace

std::vector<Int> hilbert_numerator(const MonomialIdeal& i) {
  return numerator_rec(i);
}

HilbertInfo hilbert_info(const MonomialIdeal& i) {
  std::vector<Int> n = hilbert_numerator(i);
  if (n.empty())
    return HilbertInfo{-1, static_cast<long>(i.nvars), Int(0)};  // zero ring
  long codim = 0;
  while (true) {
    Int at_one = 0;
    for (const Int& c : n) at_one += c;
    if (at_one != 0) break;
    // divide by (1 - t): prefix sums
    std::vector<Int> q(n.size() - 1);
    Int acc = 0;
    for (std::size_t k = 0; k + 1 < n.size(); ++k) {
      acc += n[k];
      q[k] = acc;
    }
    n = std::move(q);
    ++codim;
  }
  Int degree = 0;
  for (const Int& c : n) degree += c;
  return HilbertInfo{static_cast<long>(i.nvars) - codim, codim, degree};
}

namespace {

// rank of a dense matrix with entries in the field
std::size_t field_rank(std::vector<std::vector<mpq_class>> m, const Field& f) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (!f.is_zero(m[r][c])) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    mpq_class inv = f.inv(m[rank][c]);
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || f.is_zero(m[r][c])) continue;
      mpq_class fac = m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        m[r][j] = f.sub(m[r][j], f.mul(fac, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

// reduced homology dimensions of the order complex of the divisibility
// poset on elems; h[q+1] = dim H~_q for q = -1, 0, 1, ...
std::vector<std::size_t> order_complex_homology(
    const std::vector<Monomial>& elems, const Field& f) {
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && elems[i].divides(elems[j]) && elems[i] != elems[j])
        above[i].push_back(j);

  // chains[len] = all chains with len+1 vertices, as vertex index lists
  std::vector<std::vector<std::vector<std::size_t>>> chains;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> grow = [&](std::size_t v) {
    cur.push_back(v);
    if (chains.size() < cur.size()) chains.resize(cur.size());
    chains[cur.size() - 1].push_back(cur);
    for (std::size_t w : above[v]) grow(w);
    cur.pop_back();
  };
  for (std::size_t v = 0; v < n; ++v) grow(v);

  const std::size_t top = chains.size();  // longest chain length
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(top);
  for (std::size_t d = 0; d < top; ++d)
    for (std::size_t k = 0; k < chains[d].size(); ++k)
      index[d][chains[d][k]] = k;

  std::vector<std::size_t> rank(top + 2, 0);
  if (top > 0) rank[0] = n > 0 ? 1 : 0;  // del_0 maps every vertex to the empty chain
  for (std::size_t d = 1; d < top; ++d) {
    std::vector<std::vector<mpq_class>> mat(
        chains[d].size(), std::vector<mpq_class>(chains[d - 1].size(), 0));
    for (std::size_t k = 0; k < chains[d].size(); ++k) {
      const auto& ch = chains[d][k];
      int sign = 1;
      for (std::size_t drop = 0; drop < ch.size(); ++drop) {
        std::vector<std::size_t> face;
        for (std::size_t t = 0; t < ch.size(); ++t)
          if (t != drop) face.push_back(ch[t]);
        mat[k][index[d - 1].at(face)] = sign;
        sign = -sign;
      }
    }
    rank[d] = field_rank(std::move(mat), f);
  }

  std::vector<std::size_t> h(top + 1, 0);
  h[0] = 1 - rank[0];  // H~_{-1}: nonzero exactly when the complex is empty
  for (std::size_t d = 0; d < top; ++d)
    h[d + 1] = chains[d].size() - rank[d] - rank[d + 1];
  return h;
}

}  // namespace

BettiTable monomial_betti(const MonomialIdeal& i, const Field& f) {
  BettiTable table;
  if (i.is_zero()) return table;
  if (i.is_unit()) {
    table.add(0, 0);
    return table;
  }
  // distinct lcms of nonempty generator subsets
  std::set<Monomial> lattice_set;
  std::function<void(std::size_t, Monomial)> gen = [&](std::size_t k,
                                                       Monomial acc) {
    if (k == i.gens.size()) return;
    gen(k + 1, acc);
    Monomial with = acc.lcm(i.gens[k]);
    lattice_set.insert(with);
    gen(k + 1, with);
  };
  gen(0, Monomial::one(i.nvars));
  std::vector<Monomial> lattice(lattice_set.begin(), lattice_set.end());

  for (const Monomial& alpha : lattice) {
    std::vector<Monomial> interval;
    for (const Monomial& beta : lattice)
      if (beta != alpha && beta.divides(alpha)) interval.push_back(beta);
    std::vector<std::size_t> h = order_complex_homology(interval, f);
    for (std::size_t q1 = 0; q1 < h.size(); ++q1) {
      if (h[q1] == 0) continue;
      // dim H~_{q1-1} contributes to beta_{q1, deg alpha}
      table.add(static_cast<int>(q1), alpha.degree(), Int(h[q1]));
    }
  }
  return table;
}

long two_var_regularity(const MonomialIdeal& i) {
  assert(i.nvars == 2 && !i.is_zero());
  if (i.is_unit()) return 0;
  std::vector<Monomial> g = i.gens;
  std::sort(g.begin(), g.end(),
            [](const Monomial& a, const Monomial& b) { return a.e[0] > b.e[0]; });
  long reg = 0;
  for (const Monomial& m : g) reg = std::max(reg, m.degree());
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    long syz = g[k].e[0] + g[k + 1].e[1];  // first syzygy of staircase neighbours
    reg = std::max(reg, syz - 1);
  }
  return reg;
}

}  // namespace semalg
