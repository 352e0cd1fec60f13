#include "semalg/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace semalg {

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  assert(a.nvars() == b.nvars());
  const std::size_t n = a.nvars();
  if (kind == Kind::DegRevLex) {
    long da = wdeg(a), db = wdeg(b);
    if (da != db) return da < db ? -1 : 1;
    // reverse lexicographic tie-break: scan from least significant
    // variable; the first difference decides, smaller exponent wins.
    if (ranks.empty()) {
      for (std::size_t j = n; j-- > 0;) {
        if (a.e[j] != b.e[j]) return a.e[j] < b.e[j] ? 1 : -1;
      }
      return 0;
    }
    for (int r = static_cast<int>(n) - 1; r >= 0; --r) {
      for (std::size_t v = 0; v < n; ++v) {
        if (ranks[v] != r) continue;
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
        break;
      }
    }
    return 0;
  }
  // lex
  if (ranks.empty()) {
    for (std::size_t j = 0; j < n; ++j)
      if (a.e[j] != b.e[j]) return a.e[j] > b.e[j] ? 1 : -1;
    return 0;
  }
  for (int r = 0; r < static_cast<int>(n); ++r) {
    for (std::size_t v = 0; v < n; ++v) {
      if (ranks[v] != r) continue;
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
      break;
    }
  }
  return 0;
}

Poly Poly::constant(std::size_t nvars, const mpq_class& c, const Field& f) {
  Poly p;
  mpq_class cc = f.normalize(c);
  if (cc != 0) p.terms_.push_back({Monomial::one(nvars), cc});
  return p;
}

Poly Poly::monomial(Monomial m, const mpq_class& c, const Field& f) {
  Poly p;
  mpq_class cc = f.normalize(c);
  if (cc != 0) p.terms_.push_back({std::move(m), cc});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms, const Field& f,
                      const MonomialOrder& o) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return o.compare(a.m, b.m) > 0;
  });
  Poly p;
  for (auto& t : terms) {
    mpq_class c = f.normalize(t.c);
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = f.add(p.terms_.back().c, c);
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({std::move(t.m), std::move(c)});
    }
  }
  return p;
}

long Poly::degree() const {
  long d = -1;
  for (const Term& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

Poly Poly::add(const Poly& a, const Poly& b, const Field& f,
               const MonomialOrder& o) {
  Poly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = o.compare(a.terms_[i].m, b.terms_[j].m);
    if (c > 0) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      mpq_class s = f.add(a.terms_[i].c, b.terms_[j].c);
      if (s != 0) out.terms_.push_back({a.terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
  return out;
}

Poly Poly::sub(const Poly& a, const Poly& b, const Field& f,
               const MonomialOrder& o) {
  return add(a, negate(b, f), f, o);
}

Poly Poly::mul_term(const Poly& a, const Monomial& m, const mpq_class& c,
                    const Field& f) {
  Poly out;
  mpq_class cc = f.normalize(c);
  if (cc == 0) return out;
  out.terms_.reserve(a.terms_.size());
  for (const Term& t : a.terms_) {
    mpq_class p = f.mul(t.c, cc);
    if (p != 0) out.terms_.push_back({t.m.mul(m), std::move(p)});
  }
  return out;
}

Poly Poly::mul(const Poly& a, const Poly& b, const Field& f,
               const MonomialOrder& o) {
  Poly out;
  for (const Term& t : b.terms_)
    out = add(out, mul_term(a, t.m, t.c, f), f, o);
  return out;
}

Poly Poly::negate(const Poly& a, const Field& f) {
  Poly out = a;
  for (Term& t : out.terms_) t.c = f.neg(t.c);
  return out;
}

Poly Poly::scale(const Poly& a, const mpq_class& c, const Field& f) {
  Poly out;
  mpq_class cc = f.normalize(c);
  if (cc == 0) return out;
  out.terms_.reserve(a.terms_.size());
  for (const Term& t : a.terms_) {
    mpq_class p = f.mul(t.c, cc);
    if (p != 0) out.terms_.push_back({t.m, std::move(p)});
  }
  return out;
}

Poly Poly::monic(const Field& f) const {
  if (is_zero()) return *this;
  Poly out = *this;
  mpq_class inv = f.inv(lead().c);
  for (Term& t : out.terms_) t.c = f.mul(t.c, inv);
  return out;
}

Poly Poly::resorted(const Field& f, const MonomialOrder& o) const {
  return from_terms(terms_, f, o);
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << "*";
    os << vars[i];
    if (m.e[i] > 1) os << "^" << m.e[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string Poly::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    mpq_class c = t.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (t.m.is_one()) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << monomial_str(t.m, vars);
    }
    first = false;
  }
  return os.str();
}

std::vector<std::string> default_var_names(std::size_t nvars,
                                           const std::string& stem) {
  std::vector<std::string> v;
  v.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

}  // namespace semalg
