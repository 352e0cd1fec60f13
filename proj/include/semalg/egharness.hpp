#ifndef SEMALG_EGHARNESS_HPP
#define SEMALG_EGHARNESS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "semalg/regdeg.hpp"

namespace semalg {

struct EGRecord {
  std::vector<IntVec> hilbert_basis;
  long reg = 0;
  Int degree;
  long codim = 0;
  Int bound;  // degree - codim
  bool holds = false;
  unsigned long field_char = 0;
};

// All lattice points of coordinate sum alpha in N^d, lexicographically
// descending. This fixes the canonical generator and subset order used by
// the enumeration.
std::vector<IntVec> simplex_points(int d, int alpha);

// Every generating subset of the degree-alpha simplex points with full
// rank d, streamed in canonical (ascending bitmask) order. With dedup set,
// only the representative that is minimal under coordinate permutations
// is kept.
void enumerate_semigroups(int d, int alpha, bool dedup,
                          const std::function<void(const AffineSemigroup&)>& sink);
std::vector<AffineSemigroup> enumerate_semigroups(int d, int alpha,
                                                  bool dedup = false);

// Seeded random semigroup with d + c distinct generators of coordinate
// sum alpha and rank d. The simplicial flag forces the scaled unit
// vectors into the generating set. Throws Infeasible when d + c exceeds
// the number of available points.
AffineSemigroup random_semigroup(int alpha, int d, int c, bool simplicial,
                                 std::uint64_t seed);

EGRecord verify_eg(const AffineSemigroup& b, const Field& field = Field());

enum class SweepMode { Exhaustive, Random };

struct SweepOptions {
  int d = 2;
  int alpha = 2;
  SweepMode mode = SweepMode::Exhaustive;
  int random_count = 0;
  int codim = 0;
  std::uint64_t seed = 0;
  bool dedup = false;
  bool simplicial = false;
  unsigned long field_char = 0;
  bool parallel = false;
  std::string csv_path;       // per-record table
  std::string proj_tsv_path;  // (deg - codim, reg) pairs
  std::string bar_tsv_path;   // (deg, reg + codim) pairs
};

struct SweepSummary {
  long total = 0;
  long holds = 0;
  long violations = 0;
};

SweepSummary eg_sweep(const SweepOptions& opts);

std::string eg_csv_header();
std::string eg_csv_row(const EGRecord& r);
std::vector<EGRecord> parse_eg_csv(std::istream& in);

}  // namespace semalg

#endif
