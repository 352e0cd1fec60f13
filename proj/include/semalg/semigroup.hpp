#ifndef SEMALG_SEMIGROUP_HPP
#define SEMALG_SEMIGROUP_HPP

#include <optional>
#include <vector>

#include "semalg/cone.hpp"
#include "semalg/intlin.hpp"

namespace semalg {

// deg(v) = normal*v / scale with scale > 0; primitive and exact. Every
// generator of the semigroup it was derived from has degree 1.
struct DegreeFunctional {
  IntVec normal;
  Int scale;

  Rat degree(const IntVec& v) const {
    return Rat(vec_dot(normal, v)) / Rat(scale);
  }
  // degree as an integer; valid on group elements of the semigroup
  long degree_int(const IntVec& v) const {
    Int d = vec_dot(normal, v);
    if (d % scale != 0)
      throw std::invalid_argument("degree is not integral on this vector");
    Int q = d / scale;
    return static_cast<long>(q.get_si());
  }
};

// Positive affine semigroup given by an ordered generator list in N^m.
// Immutable; cone facts are computed at construction.
class AffineSemigroup {
 public:
  AffineSemigroup(std::size_t ambient_dim, std::vector<IntVec> generators);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t count() const { return gens_.size(); }
  const std::vector<IntVec>& generators() const { return gens_; }
  const IntMatrix& matrix() const { return mat_; }
  std::size_t rank() const { return rank_; }

  // Indices of the inclusion-minimal generator subset spanning the same
  // cone. Throws AmbiguousExtremals when two generators share a ray.
  const std::vector<std::size_t>& extremal_indices() const;
  bool simplicial() const;
  AffineSemigroup extremal_subsemigroup() const;

  const std::optional<DegreeFunctional>& grading() const { return grading_; }

  bool in_cone(const IntVec& v) const;
  // exact semigroup membership (nonnegative integer combination)
  bool member(const IntVec& v) const;
  // first-found coefficient vector, deterministic; empty optional when
  // v is not a member
  std::optional<IntVec> member_witness(const IntVec& v) const;

  // every generator outside the semigroup generated by the others
  bool is_hilbert_basis() const;

  friend bool operator==(const AffineSemigroup&, const AffineSemigroup&);

 private:
  std::size_t dim_;
  std::vector<IntVec> gens_;
  IntMatrix mat_;
  std::size_t rank_ = 0;
  std::optional<std::vector<std::size_t>> extremal_;  // nullopt: ambiguous
  std::optional<DegreeFunctional> grading_;
};

std::vector<std::size_t> extremal_subset(const AffineSemigroup& b);
bool cones_equal(const AffineSemigroup& a, const AffineSemigroup& b);
std::optional<DegreeFunctional> grading(const AffineSemigroup& b);

}  // namespace semalg

#endif
