#ifndef SEMALG_POLY_HPP
#define SEMALG_POLY_HPP

#include <string>
#include <vector>

#include "semalg/field.hpp"

namespace semalg {

// Exponent vector. Exponents stay small (degrees are bounded at desk
// scale); coefficients are the arbitrary-precision side.
struct Monomial {
  std::vector<int> e;

  static Monomial one(std::size_t nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
  std::size_t nvars() const { return e.size(); }
  long degree() const {
    long d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (int x : e)
      if (x != 0) return false;
    return true;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial mul(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  Monomial div(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(r.e[i], o.e[i]);
    return r;
  }
  Monomial gcd(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::min(r.e[i], o.e[i]);
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Total order on monomials. `ranks`, when nonempty, permutes variable
// significance: ranks[v] is the significance position of variable v
// (0 = most significant). `weights` grades the comparison; empty means
// all ones.
struct MonomialOrder {
  enum class Kind { DegRevLex, Lex };
  Kind kind = Kind::DegRevLex;
  std::vector<long> weights;
  std::vector<int> ranks;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, {}, {}}; }
  // Weighted degrevlex with one variable moved to the cheapest position;
  // ties among equal weights are broken reverse-lexicographically with
  // `cheapest` scanned first.
  static MonomialOrder saturating(std::vector<long> weights, std::size_t cheapest,
                                  std::size_t nvars) {
    MonomialOrder o;
    o.weights = std::move(weights);
    o.ranks.assign(nvars, 0);
    int r = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (v != cheapest) o.ranks[v] = r++;
    o.ranks[cheapest] = r;
    return o;
  }

  long wdeg(const Monomial& m) const {
    long d = 0;
    if (weights.empty()) {
      for (int x : m.e) d += x;
    } else {
      for (std::size_t i = 0; i < m.e.size(); ++i) d += weights[i] * m.e[i];
    }
    return d;
  }

  // -1, 0, 1 for a < b, a == b, a > b
  int compare(const Monomial& a, const Monomial& b) const;
};

struct Term {
  Monomial m;
  mpq_class c;
};

// Sparse polynomial; terms kept strictly descending under the order the
// polynomial was built with.
class Poly {
 public:
  Poly() = default;
  static Poly zero() { return {}; }
  static Poly constant(std::size_t nvars, const mpq_class& c, const Field& f);
  static Poly monomial(Monomial m, const mpq_class& c, const Field& f);
  static Poly from_terms(std::vector<Term> terms, const Field& f,
                         const MonomialOrder& o);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }
  long degree() const;  // max total degree, -1 for zero

  friend bool operator==(const Poly&, const Poly&) = default;

  // arithmetic; every operation keeps the descending-term invariant
  static Poly add(const Poly& a, const Poly& b, const Field& f,
                  const MonomialOrder& o);
  static Poly sub(const Poly& a, const Poly& b, const Field& f,
                  const MonomialOrder& o);
  static Poly mul_term(const Poly& a, const Monomial& m, const mpq_class& c,
                       const Field& f);
  static Poly mul(const Poly& a, const Poly& b, const Field& f,
                  const MonomialOrder& o);
  static Poly negate(const Poly& a, const Field& f);
  static Poly scale(const Poly& a, const mpq_class& c, const Field& f);
  Poly monic(const Field& f) const;
  Poly resorted(const Field& f, const MonomialOrder& o) const;

  std::string str(const std::vector<std::string>& vars) const;

 private:
  std::vector<Term> terms_;
};

std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars);
std::vector<std::string> default_var_names(std::size_t nvars,
                                           const std::string& stem = "x");

}  // namespace semalg

#endif
