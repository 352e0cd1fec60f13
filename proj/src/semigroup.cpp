#include "semalg/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "semalg/errors.hpp"

namespace semalg {

namespace {

// positively parallel: a = q*b for some rational q > 0
bool positively_parallel(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  // proportional; both in N^m \ {0}, so the factor is positive
  return true;
}

// canonical rational solution of gens * a = 1 (one equation per
// generator); free variables are set to zero
std::optional<RatVec> solve_hyperplane(const std::vector<IntVec>& gens,
                                       std::size_t m) {
  const std::size_t n = gens.size();
  std::vector<RatVec> t(n, RatVec(m + 1, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i][j] = Rat(gens[i][j]);
    t[i][m] = 1;
  }
  std::vector<std::size_t> pivot_of_col(m, n);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = r; i < n; ++i)
      if (t[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    std::swap(t[piv], t[r]);
    Rat p = t[r][c];
    for (std::size_t j = 0; j <= m; ++j) t[r][j] /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rat f = t[i][c];
      for (std::size_t j = 0; j <= m; ++j) t[i][j] -= f * t[r][j];
    }
    pivot_of_col[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (t[i][m] != 0) return std::nullopt;  // inconsistent
  RatVec a(m, Rat(0));
  for (std::size_t c = 0; c < m; ++c)
    if (pivot_of_col[c] < n) a[c] = t[pivot_of_col[c]][m];
  return a;
}

}  // namespace

AffineSemigroup::AffineSemigroup(std::size_t ambient_dim,
                                 std::vector<IntVec> generators)
    : dim_(ambient_dim), gens_(std::move(generators)) {
  if (dim_ == 0) throw std::invalid_argument("ambient dimension must be >= 1");
  if (gens_.empty()) throw std::invalid_argument("generator list is empty");
  std::set<IntVec> seen;
  for (const IntVec& g : gens_) {
    if (g.size() != dim_)
      throw std::invalid_argument("generator has wrong ambient dimension");
    if (!vec_nonneg(g))
      throw std::invalid_argument("generators must have nonnegative entries");
    if (vec_is_zero(g)) throw std::invalid_argument("zero generator");
    if (!seen.insert(g).second)
      throw std::invalid_argument("duplicate generator");
  }
  mat_ = IntMatrix::from_rows(gens_);
  rank_ = mat_rank(mat_);

  bool ambiguous = false;
  for (std::size_t i = 0; i < gens_.size() && !ambiguous; ++i)
    for (std::size_t j = i + 1; j < gens_.size() && !ambiguous; ++j)
      if (positively_parallel(gens_[i], gens_[j])) ambiguous = true;
  if (!ambiguous) {
    std::vector<std::size_t> ext;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      std::vector<IntVec> others;
      for (std::size_t j = 0; j < gens_.size(); ++j)
        if (j != i) others.push_back(gens_[j]);
      if (!cone_contains(others, gens_[i], dim_)) ext.push_back(i);
    }
    extremal_ = std::move(ext);
  }

  auto a = solve_hyperplane(gens_, dim_);
  if (a) {
    Int lcm = 1;
    for (const Rat& x : *a)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    IntVec normal(dim_);
    Int g = lcm;
    for (std::size_t j = 0; j < dim_; ++j) {
      Rat scaled = (*a)[j] * Rat(lcm);
      assert(scaled.get_den() == 1);
      normal[j] = scaled.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), normal[j].get_mpz_t());
    }
    if (g > 1) {
      for (Int& x : normal)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(lcm.get_mpz_t(), lcm.get_mpz_t(), g.get_mpz_t());
    }
    grading_ = DegreeFunctional{std::move(normal), lcm};
    for (const IntVec& gen : gens_) {
      assert(vec_dot(grading_->normal, gen) == grading_->scale);
      (void)gen;
    }
  }
}

const std::vector<std::size_t>& AffineSemigroup::extremal_indices() const {
  if (!extremal_)
    throw AlgebraError(Errc::AmbiguousExtremals,
                       "two generators lie on a common ray; no canonical "
                       "minimal cone-spanning subset");
  return *extremal_;
}

bool AffineSemigroup::simplicial() const {
  return extremal_indices().size() == rank_;
}

AffineSemigroup AffineSemigroup::extremal_subsemigroup() const {
  std::vector<IntVec> sub;
  for (std::size_t i : extremal_indices()) sub.push_back(gens_[i]);
  return AffineSemigroup(dim_, std::move(sub));
}

bool AffineSemigroup::in_cone(const IntVec& v) const {
  assert(v.size() == dim_);
  return cone_contains(gens_, v, dim_);
}

namespace {

bool member_rec(const std::vector<IntVec>& gens, const IntVec& v,
                std::map<IntVec, bool>& memo) {
  if (vec_is_zero(v)) return true;
  auto it = memo.find(v);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (const IntVec& g : gens) {
    bool fits = true;
    for (std::size_t j = 0; j < v.size() && fits; ++j)
      if (v[j] < g[j]) fits = false;
    if (!fits) continue;
    if (member_rec(gens, vec_sub(v, g), memo)) {
      ok = true;
      break;
    }
  }
  memo[v] = ok;
  return ok;
}

}  // namespace

bool AffineSemigroup::member(const IntVec& v) const {
  assert(v.size() == dim_);
  if (!vec_nonneg(v)) return false;
  std::map<IntVec, bool> memo;
  return member_rec(gens_, v, memo);
}

std::optional<IntVec> AffineSemigroup::member_witness(const IntVec& v) const {
  assert(v.size() == dim_);
  if (!vec_nonneg(v)) return std::nullopt;
  std::map<IntVec, bool> memo;
  if (!member_rec(gens_, v, memo)) return std::nullopt;
  IntVec counts(gens_.size(), Int(0));
  IntVec cur = v;
  while (!vec_is_zero(cur)) {
    bool stepped = false;
    for (std::size_t i = 0; i < gens_.size() && !stepped; ++i) {
      bool fits = true;
      for (std::size_t j = 0; j < cur.size() && fits; ++j)
        if (cur[j] < gens_[i][j]) fits = false;
      if (!fits) continue;
      IntVec next = vec_sub(cur, gens_[i]);
      if (member_rec(gens_, next, memo)) {
        counts[i] += 1;
        cur = std::move(next);
        stepped = true;
      }
    }
    assert(stepped);
  }
  return counts;
}

bool AffineSemigroup::is_hilbert_basis() const {
  if (gens_.size() == 1) return true;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < gens_.size(); ++j)
      if (j != i) others.push_back(gens_[j]);
    AffineSemigroup rest(dim_, std::move(others));
    if (rest.member(gens_[i])) return false;
  }
  return true;
}

bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
  return a.dim_ == b.dim_ && a.gens_ == b.gens_;
}

std::vector<std::size_t> extremal_subset(const AffineSemigroup& b) {
  return b.extremal_indices();
}

bool cones_equal(const AffineSemigroup& a, const AffineSemigroup& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  for (const IntVec& g : a.generators())
    if (!b.in_cone(g)) return false;
  for (const IntVec& g : b.generators())
    if (!a.in_cone(g)) return false;
  return true;
}

std::optional<DegreeFunctional> grading(const AffineSemigroup& b) {
  return b.grading();
}

}  // namespace semalg
