#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "semalg/serialize.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace semalg;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitOracle = 4;

struct CommonOpts {
  std::string input = "-";
  long field_char = -1;  // -1: take the document's value
  bool oracle = false;
  int jobs = 1;
  bool verify_hilbert = false;
  long oracle_degree = 10;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_input = true) {
  if (with_input)
    cmd->add_option("-i,--input", c.input,
                    "input document path (\"-\" for stdin)");
  cmd->add_option("--char", c.field_char,
                  "coefficient field characteristic (0 or a prime)");
  cmd->add_flag("--oracle", c.oracle,
                "run brute-force cross-checks; mismatches exit nonzero");
  cmd->add_option("--jobs", c.jobs, "worker thread cap (1 = serial)");
  cmd->add_flag("--verify-hilbert", c.verify_hilbert,
                "verify that generator lists are minimal");
  cmd->add_option("--oracle-degree", c.oracle_degree,
                  "degree bound for the degreewise oracle");
}

OrderedJson read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read input: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  try {
    return OrderedJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

Field pick_field(const SemigroupDocument& doc, const CommonOpts& c) {
  unsigned long p =
      c.field_char >= 0 ? static_cast<unsigned long>(c.field_char) : doc.field_char;
  try {
    return Field(p);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("characteristic must be 0 or a prime");
  }
}

void configure_jobs(const CommonOpts& c) {
  if (c.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
#ifdef _OPENMP
  omp_set_num_threads(c.jobs);
#endif
}

void emit(const OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

int run_decompose(const CommonOpts& c) {
  configure_jobs(c);
  OrderedJson j = read_document(c.input);
  SemigroupDocument doc = parse_semigroup_document(j);
  if (!doc.subsemigroup)
    throw std::invalid_argument("decompose needs a \"subsemigroup\" list");
  Field field = pick_field(doc, c);
  AffineSemigroup b(doc.ambient_dim, doc.generators);
  AffineSemigroup a(doc.ambient_dim, *doc.subsemigroup);
  Decomposition dec = decompose(a, b, {c.verify_hilbert});

  if (c.oracle) {
    std::vector<IntVec> from_groebner;
    for (const DecompositionComponent& comp : dec.components)
      for (const IntVec& v : comp.gamma) from_groebner.push_back(v);
    std::sort(from_groebner.begin(), from_groebner.end(), graded_lex_less);
    std::vector<IntVec> from_search = module_generators_bfs(a, b);
    if (from_groebner != from_search) {
      std::cerr << "oracle mismatch: module generator sets differ\n";
      return kExitOracle;
    }
    if (b.grading() && !hilbert_identity_holds(dec, c.oracle_degree)) {
      std::cerr << "oracle mismatch: degreewise direct-sum identity fails\n";
      return kExitOracle;
    }
  }
  emit(decomposition_json(dec, field.characteristic()));
  return kExitOk;
}

int run_props(const CommonOpts& c) {
  configure_jobs(c);
  OrderedJson j = read_document(c.input);
  SemigroupDocument doc = parse_semigroup_document(j);
  Field field = pick_field(doc, c);
  AffineSemigroup b(doc.ambient_dim, doc.generators);
  if (c.verify_hilbert && !b.is_hilbert_basis())
    throw AlgebraError(Errc::NonHilbert,
                       "generators are not a minimal generating set");
  PropertyReport rep = ring_properties(b, field);

  if (c.oracle) {
    std::vector<IntVec> reversed(doc.generators.rbegin(),
                                 doc.generators.rend());
    AffineSemigroup b2(doc.ambient_dim, reversed);
    PropertyReport rep2 = ring_properties(b2, field);
    if (rep.depth != rep2.depth ||
        rep.cohen_macaulay != rep2.cohen_macaulay ||
        rep.gorenstein != rep2.gorenstein ||
        rep.buchsbaum != rep2.buchsbaum || rep.normal != rep2.normal ||
        rep.seminormal != rep2.seminormal) {
      std::cerr << "oracle mismatch: report changed under generator reorder\n";
      return kExitOracle;
    }
  }
  emit(property_report_json(rep, field.characteristic()));
  return kExitOk;
}

int run_reg(const CommonOpts& c) {
  configure_jobs(c);
  OrderedJson j = read_document(c.input);
  SemigroupDocument doc = parse_semigroup_document(j);
  Field field = pick_field(doc, c);
  AffineSemigroup b(doc.ambient_dim, doc.generators);
  if (c.verify_hilbert && !b.is_hilbert_basis())
    throw AlgebraError(Errc::NonHilbert,
                       "generators are not a minimal generating set");
  RegOptions opts;
  opts.parallel = c.jobs > 1;
  if (doc.subsemigroup) {
    std::vector<std::size_t> indices;
    for (const IntVec& g : *doc.subsemigroup) {
      auto it = std::find(doc.generators.begin(), doc.generators.end(), g);
      if (it == doc.generators.end())
        throw std::invalid_argument(
            "subsemigroup entries must be generators of the semigroup");
      indices.push_back(
          static_cast<std::size_t>(it - doc.generators.begin()));
    }
    opts.subalgebra = indices;
  }
  RegularityResult res = regularity(b, field, opts);

  if (c.oracle) {
    long direct = regularity_direct(b, field);
    if (direct != res.reg) {
      std::cerr << "oracle mismatch: direct resolution gives reg " << direct
                << ", decomposition gives " << res.reg << "\n";
      return kExitOracle;
    }
    DegreeInfo hs = degree_from_initial_ideal(b);
    if (hs.degree != res.degree || hs.dim != res.dim ||
        hs.codim != res.codim) {
      std::cerr << "oracle mismatch: Hilbert-series degree data disagrees\n";
      return kExitOracle;
    }
  }
  emit(regularity_json(res));
  return kExitOk;
}

struct EgOpts {
  CommonOpts common;
  int dim = 2;
  int alpha = 2;
  bool exhaustive = false;
  int random_count = 0;
  int codim = 0;
  std::uint64_t seed = 1;
  bool dedup = false;
  bool simplicial = false;
  std::string csv = "eg_records.csv";
  std::string proj_tsv = "eg_proj.tsv";
  std::string bar_tsv = "eg_bar.tsv";
};

int run_eg(const EgOpts& e) {
  configure_jobs(e.common);
  if (!e.exhaustive && e.random_count <= 0)
    throw std::invalid_argument("choose --exhaustive or --random N");
  SweepOptions opts;
  opts.d = e.dim;
  opts.alpha = e.alpha;
  opts.mode = e.exhaustive ? SweepMode::Exhaustive : SweepMode::Random;
  opts.random_count = e.random_count;
  opts.codim = e.codim;
  opts.seed = e.seed;
  opts.dedup = e.dedup;
  opts.simplicial = e.simplicial;
  opts.field_char =
      e.common.field_char >= 0 ? static_cast<unsigned long>(e.common.field_char) : 0;
  if (opts.field_char != 0 && !Field::is_prime(opts.field_char))
    throw std::invalid_argument("characteristic must be 0 or a prime");
  opts.parallel = e.common.jobs > 1;
  opts.csv_path = e.csv;
  opts.proj_tsv_path = e.proj_tsv;
  opts.bar_tsv_path = e.bar_tsv;
  SweepSummary s = eg_sweep(opts);

  if (e.common.oracle) {
    std::ifstream f(e.csv);
    if (!f) throw std::runtime_error("cannot reopen " + e.csv);
    Field field(opts.field_char);
    for (const EGRecord& r : parse_eg_csv(f)) {
      if (r.holds != (Int(r.reg) <= r.bound) || r.bound != r.degree - r.codim) {
        std::cerr << "oracle mismatch: record fields are inconsistent\n";
        return kExitOracle;
      }
      AffineSemigroup b(r.hilbert_basis[0].size(), r.hilbert_basis);
      DegreeInfo hs = degree_from_initial_ideal(b);
      if (hs.degree != r.degree || hs.codim != r.codim) {
        std::cerr << "oracle mismatch: Hilbert-series degree data disagrees\n";
        return kExitOracle;
      }
    }
  }

  OrderedJson out;
  out["format_version"] = 1;
  out["command"] = "eg";
  out["char"] = opts.field_char;
  out["mode"] = e.exhaustive ? "exhaustive" : "random";
  out["dim"] = e.dim;
  out["alpha"] = e.alpha;
  out["dedup"] = e.dedup;
  if (!e.exhaustive) {
    out["random"] = e.random_count;
    out["codim"] = e.codim;
    out["seed"] = e.seed;
    out["simplicial"] = e.simplicial;
  }
  out["total"] = s.total;
  out["holds"] = s.holds;
  out["violations"] = s.violations;
  out["files"] = {{"csv", e.csv}, {"proj_tsv", e.proj_tsv}, {"bar_tsv", e.bar_tsv}};
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decomposition, ring properties, regularity and "
               "Eisenbud-Goto sweeps for positive affine semigroup rings"};
  app.require_subcommand(1);

  CommonOpts dec_opts, props_opts, reg_opts;
  EgOpts eg_opts;

  CLI::App* dec = app.add_subcommand(
      "decompose", "decompose K[B] over the subalgebra K[A]");
  add_common(dec, dec_opts);

  CLI::App* props =
      app.add_subcommand("props", "ring properties of a simplicial semigroup");
  add_common(props, props_opts);

  CLI::App* reg =
      app.add_subcommand("reg", "Castelnuovo-Mumford regularity and degree");
  add_common(reg, reg_opts);

  CLI::App* eg = app.add_subcommand("eg", "Eisenbud-Goto verification sweep");
  add_common(eg, eg_opts.common, /*with_input=*/false);
  eg->add_option("--dim", eg_opts.dim, "ambient dimension d")->required();
  eg->add_option("--alpha", eg_opts.alpha, "generator coordinate sum")
      ->required();
  eg->add_flag("--exhaustive", eg_opts.exhaustive, "enumerate all semigroups");
  eg->add_option("--random", eg_opts.random_count, "number of random instances");
  eg->add_option("--codim", eg_opts.codim, "codimension of random instances");
  eg->add_option("--seed", eg_opts.seed, "random seed");
  eg->add_flag("--dedup", eg_opts.dedup,
               "keep one representative per coordinate permutation");
  eg->add_flag("--simplicial", eg_opts.simplicial,
               "force the scaled unit vectors into random instances");
  eg->add_option("--csv", eg_opts.csv, "record table path");
  eg->add_option("--proj-tsv", eg_opts.proj_tsv, "bound-vs-reg plot data path");
  eg->add_option("--bar-tsv", eg_opts.bar_tsv, "deg-vs-reg+codim plot data path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (dec->parsed()) return run_decompose(dec_opts);
    if (props->parsed()) return run_props(props_opts);
    if (reg->parsed()) return run_reg(reg_opts);
    if (eg->parsed()) return run_eg(eg_opts);
  } catch (const AlgebraError& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return e.code() == Errc::OracleMismatch ? kExitOracle : kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
