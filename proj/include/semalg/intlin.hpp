#ifndef SEMALG_INTLIN_HPP
#define SEMALG_INTLIN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "semalg/errors.hpp"

namespace semalg {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

IntVec int_vec(std::initializer_list<long> v);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
Int vec_dot(const IntVec& a, const IntVec& b);
bool vec_is_zero(const IntVec& a);
bool vec_nonneg(const IntVec& a);
Int vec_sum(const IntVec& a);
// graded-lex: coordinate sum first, then lexicographic. Used wherever a
// canonical representative of a set of lattice vectors is needed.
bool graded_lex_less(const IntVec& a, const IntVec& b);

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  IntVec row(std::size_t i) const;
  std::vector<IntVec> to_rows() const;

  void swap_rows(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_col(std::size_t j);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVec mat_apply_left(const IntVec& x, const IntMatrix& m);  // x * m

// Row-style Hermite normal form: h = u * m with u unimodular, h in row
// echelon form with positive pivots and entries above each pivot reduced
// into [0, pivot).
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};
HnfResult hnf(const IntMatrix& m);

std::size_t mat_rank(const IntMatrix& m);
Int det(const IntMatrix& m);  // Bareiss, square matrices only

// Basis (in HNF) of the left kernel {x : x * m = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Solves x * m = v over the integers. When the solution set is a coset of
// the kernel lattice, the returned representative is canonical: each kernel
// pivot coordinate is reduced into (-pivot, 0].
std::optional<IntVec> solve_integral(const IntMatrix& m, const IntVec& v);

// G(ambient)/G(sub) for row lattices, via Smith normal form of sub
// expressed in an HNF basis of ambient.
class QuotientGroup {
 public:
  static QuotientGroup of(const IntMatrix& sub, const IntMatrix& ambient);

  // Diagonal of the Smith form, padded with 0 for free factors; factors
  // divide each other in sequence.
  const std::vector<Int>& invariant_factors() const { return factors_; }
  bool finite() const;
  Int order() const;  // product of factors; 0 when infinite
  std::size_t label_size() const { return factors_.size(); }
  // Canonical class label of an ambient-lattice vector. Throws
  // ContainmentViolation when v is not in the ambient lattice.
  IntVec project(const IntVec& v) const;

 private:
  std::vector<Int> factors_;
  IntMatrix basis_;   // HNF basis of the ambient lattice (r x m)
  IntMatrix change_;  // r x r column-op accumulator from the Smith form
};

}  // namespace semalg

#endif
