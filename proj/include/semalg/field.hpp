#ifndef SEMALG_FIELD_HPP
#define SEMALG_FIELD_HPP

#include <gmpxx.h>

#include <stdexcept>

namespace semalg {

// Coefficient field: the rationals (characteristic 0) or a prime field.
// Prime-field elements are kept as canonical integers in [0, p).
class Field {
 public:
  Field() : p_(0) {}
  explicit Field(unsigned long p) : p_(p) {
    if (p != 0 && !is_prime(p))
      throw std::invalid_argument("field characteristic must be 0 or prime");
  }

  unsigned long characteristic() const { return p_; }
  bool rationals() const { return p_ == 0; }

  mpq_class normalize(const mpq_class& c) const {
    if (p_ == 0) return c;
    mpz_class num = c.get_num() % mpz_class(p_);
    if (num < 0) num += p_;
    mpz_class den = c.get_den() % mpz_class(p_);
    if (den == 0)
      throw std::invalid_argument("denominator vanishes in prime field");
    if (den != 1) {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(),
                     mpz_class(p_).get_mpz_t()) == 0)
        throw std::invalid_argument("denominator vanishes in prime field");
      num = (num * inv) % p_;
    }
    return mpq_class(num);
  }

  mpq_class add(const mpq_class& a, const mpq_class& b) const {
    return normalize(a + b);
  }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const {
    return normalize(a - b);
  }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const {
    return normalize(a * b);
  }
  mpq_class neg(const mpq_class& a) const { return normalize(-a); }
  mpq_class inv(const mpq_class& a) const {
    if (p_ == 0) {
      if (a == 0) throw std::invalid_argument("division by zero");
      return 1 / a;
    }
    mpq_class c = normalize(a);
    if (c == 0) throw std::invalid_argument("division by zero");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), c.get_num().get_mpz_t(),
               mpz_class(p_).get_mpz_t());
    return mpq_class(inv);
  }
  mpq_class div(const mpq_class& a, const mpq_class& b) const {
    return mul(a, inv(b));
  }
  bool is_zero(const mpq_class& a) const {
    return p_ == 0 ? a == 0 : normalize(a) == 0;
  }

  friend bool operator==(const Field&, const Field&) = default;

  static bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long q = 2; q * q <= p; ++q)
      if (p % q == 0) return false;
    return true;
  }

 private:
  unsigned long p_;
};

}  // namespace semalg

#endif
