#include "semalg/intlin.hpp"

#include <algorithm>
#include <cassert>

namespace semalg {

IntVec int_vec(std::initializer_list<long> v) {
  IntVec out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Int vec_dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

bool vec_nonneg(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x >= 0; });
}

Int vec_sum(const IntVec& a) {
  Int s = 0;
  for (const Int& x : a) s += x;
  return s;
}

bool graded_lex_less(const IntVec& a, const IntVec& b) {
  Int sa = vec_sum(a), sb = vec_sum(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

std::vector<IntVec> IntMatrix::to_rows() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += k * at(src, j);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += k * at(i, src);
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols() == b.rows());
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

IntVec mat_apply_left(const IntVec& x, const IntMatrix& m) {
  assert(x.size() == m.rows());
  IntVec out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m.at(i, j);
  }
  return out;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    // gcd elimination below the working row
    while (true) {
      std::size_t piv = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (piv == h.rows() ||
            cmp(abs(h.at(i, col)), abs(h.at(piv, col))) < 0)
          piv = i;
      }
      if (piv == h.rows()) goto next_col;
      h.swap_rows(piv, r);
      u.swap_rows(piv, r);
      {
        bool clean = true;
        for (std::size_t i = r + 1; i < h.rows(); ++i) {
          if (h.at(i, col) == 0) continue;
          Int q = floor_div(h.at(i, col), h.at(r, col));
          h.add_row_multiple(i, r, -q);
          u.add_row_multiple(i, r, -q);
          if (h.at(i, col) != 0) clean = false;
        }
        if (clean) break;
      }
    }
    if (h.at(r, col) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, col), h.at(r, col));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  next_col:;
  }
  res.rank = r;
  return res;
}

std::size_t mat_rank(const IntMatrix& m) { return hnf(m).rank; }

Int det(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { piv = i; break; }
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntMatrix kernel_basis(const IntMatrix& m) {
  HnfResult r = hnf(m);
  std::vector<IntVec> rows;
  for (std::size_t i = r.rank; i < m.rows(); ++i) rows.push_back(r.u.row(i));
  if (rows.empty()) return IntMatrix(0, m.rows());
  return hnf(IntMatrix::from_rows(rows)).h;
}

namespace {

// first nonzero column of a row, or cols() when the row is zero
std::size_t pivot_col(const IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m.at(i, j) != 0) return j;
  return m.cols();
}

void reduce_by_kernel(IntVec& x, const IntMatrix& ker) {
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    std::size_t pc = pivot_col(ker, i);
    if (pc == ker.cols()) continue;
    const Int& p = ker.at(i, pc);
    Int q = ceil_div(x[pc], p);
    if (q == 0) continue;
    for (std::size_t j = 0; j < ker.cols(); ++j) x[j] -= q * ker.at(i, j);
  }
}

}  // namespace

std::optional<IntVec> solve_integral(const IntMatrix& m, const IntVec& v) {
  assert(v.size() == m.cols());
  HnfResult r = hnf(m);
  IntVec residual = v;
  IntVec y(m.rows(), Int(0));
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t pc = pivot_col(r.h, i);
    assert(pc < m.cols());
    const Int& p = r.h.at(i, pc);
    if (residual[pc] % p != 0) return std::nullopt;
    y[i] = residual[pc] / p;
    if (y[i] != 0)
      for (std::size_t j = 0; j < m.cols(); ++j)
        residual[j] -= y[i] * r.h.at(i, j);
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  IntVec x = mat_apply_left(y, r.u);
  if (r.rank < m.rows()) {
    std::vector<IntVec> krows;
    for (std::size_t i = r.rank; i < m.rows(); ++i) krows.push_back(r.u.row(i));
    IntMatrix ker = hnf(IntMatrix::from_rows(krows)).h;
    reduce_by_kernel(x, ker);
  }
  return x;
}

namespace {

// Smith normal form of c, tracking only the column operations in v
// (d = u*c*v, diagonal, successive divisibility).
void smith_diagonal(IntMatrix c, IntMatrix& v, std::vector<Int>& diag) {
  const std::size_t s = c.rows(), r = c.cols();
  v = IntMatrix::identity(r);
  diag.assign(std::min(s, r), Int(0));
  std::size_t t = 0;
  while (t < std::min(s, r)) {
    // locate a minimal nonzero entry in the trailing block
    std::size_t bi = s, bj = r;
    for (std::size_t i = t; i < s; ++i)
      for (std::size_t j = t; j < r; ++j) {
        if (c.at(i, j) == 0) continue;
        if (bi == s || cmp(abs(c.at(i, j)), abs(c.at(bi, bj))) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi == s) break;  // trailing block is zero
    c.swap_rows(t, bi);
    c.swap_cols(t, bj);
    v.swap_cols(t, bj);

    bool again = false;
    for (std::size_t i = t + 1; i < s && !again; ++i) {
      if (c.at(i, t) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), c.at(i, t).get_mpz_t(), c.at(t, t).get_mpz_t());
      c.add_row_multiple(i, t, -q);
      if (c.at(i, t) != 0) again = true;  // remainder smaller than pivot
    }
    if (again) continue;
    for (std::size_t j = t + 1; j < r && !again; ++j) {
      if (c.at(t, j) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), c.at(t, j).get_mpz_t(), c.at(t, t).get_mpz_t());
      c.add_col_multiple(j, t, -q);
      v.add_col_multiple(j, t, -q);
      if (c.at(t, j) != 0) again = true;
    }
    if (again) continue;

    // divisibility sweep: pull a bad entry into the working row
    bool divisible = true;
    for (std::size_t i = t + 1; i < s && divisible; ++i)
      for (std::size_t j = t + 1; j < r && divisible; ++j)
        if (c.at(i, j) % c.at(t, t) != 0) {
          c.add_row_multiple(t, i, Int(1));
          divisible = false;
        }
    if (!divisible) continue;

    if (c.at(t, t) < 0) {
      c.negate_col(t);
      v.negate_col(t);
    }
    diag[t] = c.at(t, t);
    ++t;
  }
}

}  // namespace

QuotientGroup QuotientGroup::of(const IntMatrix& sub, const IntMatrix& ambient) {
  QuotientGroup g;
  HnfResult ha = hnf(ambient);
  std::vector<IntVec> brows;
  for (std::size_t i = 0; i < ha.rank; ++i) brows.push_back(ha.h.row(i));
  g.basis_ = brows.empty() ? IntMatrix(0, ambient.cols())
                           : IntMatrix::from_rows(brows);
  const std::size_t r = ha.rank;

  IntMatrix c(sub.rows(), r);
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    auto x = solve_integral(g.basis_, sub.row(i));
    if (!x)
      throw AlgebraError(Errc::ContainmentViolation,
                         "sublattice row not contained in ambient lattice");
    for (std::size_t j = 0; j < r; ++j) c.at(i, j) = (*x)[j];
  }

  std::vector<Int> diag;
  smith_diagonal(c, g.change_, diag);
  g.factors_.assign(r, Int(0));
  for (std::size_t i = 0; i < diag.size(); ++i) g.factors_[i] = diag[i];
  return g;
}

bool QuotientGroup::finite() const {
  for (const Int& f : factors_)
    if (f == 0) return false;
  return true;
}

Int QuotientGroup::order() const {
  Int o = 1;
  for (const Int& f : factors_) {
    if (f == 0) return 0;
    o *= f;
  }
  return o;
}

IntVec QuotientGroup::project(const IntVec& v) const {
  auto y = solve_integral(basis_, v);
  if (!y)
    throw AlgebraError(Errc::ContainmentViolation,
                       "vector not in the ambient lattice");
  IntVec w = mat_apply_left(*y, change_);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (factors_[i] > 0) {
      mpz_fdiv_r(w[i].get_mpz_t(), w[i].get_mpz_t(), factors_[i].get_mpz_t());
    }
  }
  return w;
}

}  // namespace semalg
