#include "semalg/ringprops.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace semalg {

RatVec rational_coordinates(const IntMatrix& rows, const IntVec& x) {
  const std::size_t d = rows.rows(), m = rows.cols();
  assert(x.size() == m);
  // eliminate on the transposed system: m equations, d unknowns
  std::vector<RatVec> t(m, RatVec(d + 1, Rat(0)));
  for (std::size_t eq = 0; eq < m; ++eq) {
    for (std::size_t j = 0; j < d; ++j) t[eq][j] = Rat(rows.at(j, eq));
    t[eq][d] = Rat(x[eq]);
  }
  std::vector<std::size_t> pivot_row(d, m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i)
      if (t[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    std::swap(t[piv], t[r]);
    Rat p = t[r][c];
    for (std::size_t j = 0; j <= d; ++j) t[r][j] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rat f = t[i][c];
      for (std::size_t j = 0; j <= d; ++j) t[i][j] -= f * t[r][j];
    }
    pivot_row[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (t[i][d] != 0)
      throw std::invalid_argument("vector lies outside the row span");
  RatVec lambda(d, Rat(0));
  for (std::size_t c = 0; c < d; ++c)
    if (pivot_row[c] < m) lambda[c] = t[pivot_row[c]][d];
  return lambda;
}

namespace {

std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string label_str(const IntVec& v) { return vec_str(v); }

bool is_unit_component(const DecompositionComponent& c) {
  for (const IntVec& e : c.ideal_exponents)
    if (vec_is_zero(e)) return true;
  return false;
}

}  // namespace

PropertyReport ring_properties(const AffineSemigroup& b, const Field& field) {
  if (!b.simplicial())
    throw AlgebraError(Errc::NotSimplicial,
                       "extremal generators do not span a simplicial cone");
  AffineSemigroup a = b.extremal_subsemigroup();
  const std::size_t d = a.count();
  assert(d == b.rank());
  Decomposition dec = decompose(a, b);

  PropertyReport rep;

  // depth = min over summands; a proper summand contributes d - pd
  rep.depth = static_cast<long>(d);
  for (const DecompositionComponent& c : dec.components) {
    if (is_unit_component(c)) continue;
    std::vector<Monomial> gens;
    for (const IntVec& e : c.ideal_exponents) {
      Monomial m = Monomial::one(d);
      for (std::size_t j = 0; j < d; ++j) m.e[j] = static_cast<int>(e[j].get_si());
      gens.push_back(std::move(m));
    }
    MonomialIdeal ideal = MonomialIdeal::of(d, std::move(gens));
    BettiTable betti = monomial_betti(ideal, field);
    long depth_g = betti.depth(d);
    if (depth_g < rep.depth) {
      rep.depth = depth_g;
      rep.witnesses.push_back(
          {"depth", "class " + label_str(c.class_label) + " has depth " +
                        std::to_string(depth_g)});
    }
  }

  rep.cohen_macaulay = true;
  for (const DecompositionComponent& c : dec.components)
    if (!is_unit_component(c)) {
      rep.cohen_macaulay = false;
      rep.witnesses.push_back(
          {"cohen_macaulay",
           "class " + label_str(c.class_label) + " gives a proper ideal"});
      break;
    }

  // Gorenstein: Cohen-Macaulay with a unique maximal shift under the
  // order x <= y iff y - x lies in B
  rep.gorenstein = false;
  if (rep.cohen_macaulay) {
    std::vector<IntVec> shifts;
    for (const DecompositionComponent& c : dec.components)
      shifts.push_back(c.shift);
    std::vector<IntVec> maximal;
    for (const IntVec& x : shifts) {
      bool has_bigger = false;
      for (const IntVec& y : shifts) {
        if (y == x) continue;
        if (b.member(vec_sub(y, x))) {
          has_bigger = true;
          break;
        }
      }
      if (!has_bigger) maximal.push_back(x);
    }
    rep.gorenstein = maximal.size() == 1;
    if (!rep.gorenstein) {
      std::string s = "maximal shifts:";
      for (const IntVec& x : maximal) s += " " + vec_str(x);
      rep.witnesses.push_back({"gorenstein", s});
    }
  } else {
    rep.witnesses.push_back({"gorenstein", "not Cohen-Macaulay"});
  }

  // Buchsbaum: every proper summand is the full maximal ideal and its
  // shift stays inside B after adding any generator
  rep.buchsbaum = true;
  for (const DecompositionComponent& c : dec.components) {
    if (is_unit_component(c)) continue;
    std::vector<IntVec> exps = c.ideal_exponents;
    std::sort(exps.begin(), exps.end());
    std::vector<IntVec> units;
    for (std::size_t j = 0; j < d; ++j) {
      IntVec u(d, Int(0));
      u[j] = 1;
      units.push_back(u);
    }
    std::sort(units.begin(), units.end());
    if (exps != units) {
      rep.buchsbaum = false;
      rep.witnesses.push_back(
          {"buchsbaum", "class " + label_str(c.class_label) +
                            " is proper but not the maximal ideal"});
      break;
    }
    for (const IntVec& gen : b.generators()) {
      if (!b.member(vec_add(c.shift, gen))) {
        rep.buchsbaum = false;
        rep.witnesses.push_back(
            {"buchsbaum", "shift " + vec_str(c.shift) + " plus generator " +
                              vec_str(gen) + " leaves B"});
        break;
      }
    }
    if (!rep.buchsbaum) break;
  }

  // normal / seminormal via barycentric coordinates of the module
  // generators over the extremal rays
  rep.normal = true;
  rep.seminormal = true;
  for (const DecompositionComponent& c : dec.components) {
    for (const IntVec& v : c.gamma) {
      RatVec lambda = rational_coordinates(a.matrix(), v);
      for (std::size_t j = 0; j < d; ++j) {
        assert(lambda[j] >= 0);
        if (lambda[j] >= 1 && rep.normal) {
          rep.normal = false;
          rep.witnesses.push_back(
              {"normal", "element " + vec_str(v) + " has coordinate " +
                             lambda[j].get_str() + " >= 1"});
        }
        if (lambda[j] > 1 && rep.seminormal) {
          rep.seminormal = false;
          rep.witnesses.push_back(
              {"seminormal", "element " + vec_str(v) + " has coordinate " +
                                 lambda[j].get_str() + " > 1"});
        }
      }
    }
  }
  return rep;
}

}  // namespace semalg
