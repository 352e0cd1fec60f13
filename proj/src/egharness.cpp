#include "semalg/egharness.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semalg {

std::vector<IntVec> simplex_points(int d, int alpha) {
  std::vector<IntVec> out;
  IntVec cur(d, Int(0));
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == d - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (d >= 1 && alpha >= 1) rec(0, alpha);
  return out;
}

namespace {

std::vector<IntVec> permuted_sorted(const std::vector<IntVec>& gens,
                                    const std::vector<int>& perm) {
  std::vector<IntVec> out;
  out.reserve(gens.size());
  for (const IntVec& g : gens) {
    IntVec p(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) p[j] = g[perm[j]];
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_permutation_canonical(const std::vector<IntVec>& gens, int d) {
  std::vector<IntVec> self = gens;
  std::sort(self.begin(), self.end());
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (permuted_sorted(gens, perm) < self) return false;
  }
  return true;
}

}  // namespace

void enumerate_semigroups(int d, int alpha, bool dedup,
                          const std::function<void(const AffineSemigroup&)>& sink) {
  if (d < 2 || alpha < 1)
    throw std::invalid_argument("need dimension >= 2 and degree >= 1");
  std::vector<IntVec> pts = simplex_points(d, alpha);
  const std::size_t n = pts.size();
  if (n > 20) throw std::invalid_argument("simplex too large to enumerate");
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i)) gens.push_back(pts[i]);
    if (gens.size() < static_cast<std::size_t>(d)) continue;
    if (mat_rank(IntMatrix::from_rows(gens)) != static_cast<std::size_t>(d))
      continue;
    if (dedup && !is_permutation_canonical(gens, d)) continue;
    sink(AffineSemigroup(d, std::move(gens)));
  }
}

std::vector<AffineSemigroup> enumerate_semigroups(int d, int alpha, bool dedup) {
  std::vector<AffineSemigroup> out;
  enumerate_semigroups(d, alpha, dedup,
                       [&](const AffineSemigroup& s) { out.push_back(s); });
  return out;
}

namespace {

class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) {
    assert(n > 0);
    std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= lim);
    return v % n;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace

AffineSemigroup random_semigroup(int alpha, int d, int c, bool simplicial,
                                 std::uint64_t seed) {
  if (d < 1 || alpha < 1 || c < 0) throw std::invalid_argument("bad parameters");
  std::vector<IntVec> pts = simplex_points(d, alpha);
  const std::size_t want = static_cast<std::size_t>(d) + c;
  if (want > pts.size())
    throw AlgebraError(Errc::Infeasible,
                       "fewer lattice points than requested generators");
  DetRng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::size_t> pool(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) pool[i] = i;
    std::vector<std::size_t> chosen;
    if (simplicial) {
      // scaled unit vectors: for each axis j the point alpha*e_j
      for (int j = 0; j < d; ++j) {
        IntVec unit(d, Int(0));
        unit[j] = alpha;
        auto it = std::find(pts.begin(), pts.end(), unit);
        assert(it != pts.end());
        chosen.push_back(static_cast<std::size_t>(it - pts.begin()));
      }
      for (std::size_t x : chosen) pool.erase(std::find(pool.begin(), pool.end(), x));
      for (int k = 0; k < c; ++k) {
        std::size_t pick = rng.below(pool.size());
        chosen.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
      }
    } else {
      for (std::size_t k = 0; k < want; ++k) {
        std::size_t pick = rng.below(pool.size());
        chosen.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
      }
    }
    std::sort(chosen.begin(), chosen.end());
    std::vector<IntVec> gens;
    for (std::size_t i : chosen) gens.push_back(pts[i]);
    if (mat_rank(IntMatrix::from_rows(gens)) == static_cast<std::size_t>(d))
      return AffineSemigroup(d, std::move(gens));
  }
  throw AlgebraError(Errc::Infeasible, "could not reach full rank");
}

EGRecord verify_eg(const AffineSemigroup& b, const Field& field) {
  RegularityResult reg = regularity(b, field);
  EGRecord r;
  r.hilbert_basis = b.generators();
  r.reg = reg.reg;
  r.degree = reg.degree;
  r.codim = reg.codim;
  r.bound = reg.degree - reg.codim;
  r.holds = Int(r.reg) <= r.bound;
  r.field_char = field.characteristic();
  return r;
}

std::string eg_csv_header() {
  return "generators,reg,deg,codim,bound,holds,field";
}

std::string eg_csv_row(const EGRecord& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.hilbert_basis.size(); ++i) {
    if (i) os << ";";
    const IntVec& g = r.hilbert_basis[i];
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j) os << " ";
      os << g[j];
    }
  }
  os << "," << r.reg << "," << r.degree << "," << r.codim << "," << r.bound
     << "," << (r.holds ? "true" : "false") << "," << r.field_char;
  return os.str();
}

std::vector<EGRecord> parse_eg_csv(std::istream& in) {
  std::vector<EGRecord> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      if (line == eg_csv_header()) continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ls(line);
    std::string col;
    while (std::getline(ls, col, ',')) cols.push_back(col);
    if (cols.size() != 7) throw std::invalid_argument("malformed record: " + line);
    EGRecord r;
    std::stringstream gs(cols[0]);
    std::string gen;
    while (std::getline(gs, gen, ';')) {
      IntVec v;
      std::stringstream vs(gen);
      std::string num;
      while (vs >> num) v.emplace_back(num);
      r.hilbert_basis.push_back(std::move(v));
    }
    r.reg = std::stol(cols[1]);
    r.degree = Int(cols[2]);
    r.codim = std::stol(cols[3]);
    r.bound = Int(cols[4]);
    r.holds = cols[5] == "true";
    r.field_char = std::stoul(cols[6]);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  return f;
}

}  // namespace

SweepSummary eg_sweep(const SweepOptions& opts) {
  std::vector<AffineSemigroup> instances;
  if (opts.mode == SweepMode::Exhaustive) {
    instances = enumerate_semigroups(opts.d, opts.alpha, opts.dedup);
  } else {
    DetRng rng(opts.seed);
    for (int i = 0; i < opts.random_count; ++i) {
      std::uint64_t sub_seed = rng.below(UINT64_MAX - 1) + 1;
      instances.push_back(random_semigroup(opts.alpha, opts.d, opts.codim,
                                           opts.simplicial, sub_seed));
    }
  }

  const Field field(opts.field_char);
  std::vector<EGRecord> records(instances.size());
  if (opts.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < instances.size(); ++i)
      records[i] = verify_eg(instances[i], field);
#else
    for (std::size_t i = 0; i < instances.size(); ++i)
      records[i] = verify_eg(instances[i], field);
#endif
  } else {
    // serial reference path
    for (std::size_t i = 0; i < instances.size(); ++i)
      records[i] = verify_eg(instances[i], field);
  }

  SweepSummary summary;
  summary.total = static_cast<long>(records.size());
  for (const EGRecord& r : records) {
    if (r.holds)
      ++summary.holds;
    else
      ++summary.violations;
  }

  if (!opts.csv_path.empty()) {
    std::ofstream f = open_or_throw(opts.csv_path);
    f << eg_csv_header() << "\n";
    for (const EGRecord& r : records) f << eg_csv_row(r) << "\n";
  }
  if (!opts.proj_tsv_path.empty()) {
    std::ofstream f = open_or_throw(opts.proj_tsv_path);
    f << "deg_minus_codim\treg\n";
    for (const EGRecord& r : records)
      f << r.bound << "\t" << r.reg << "\n";
  }
  if (!opts.bar_tsv_path.empty()) {
    std::ofstream f = open_or_throw(opts.bar_tsv_path);
    f << "deg\treg_plus_codim\n";
    for (const EGRecord& r : records)
      f << r.degree << "\t" << (r.reg + r.codim) << "\n";
  }
  return summary;
}

}  // namespace semalg
