#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace jones {

// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
// The exponent unit is context-dependent: powers of q, half-powers of t
// (exponent k means t^{k/2}), or quarter-powers of t for the bracket.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(long constant) {
    if (constant != 0) c_[0] = constant;
  }

  static Laurent monomial(const mpz_class& coeff, int exp) {
    Laurent p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  const std::map<int, mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? mpz_class(0) : it->second;
  }

  void add_term(const mpz_class& coeff, int exp) {
    auto it = c_.find(exp);
    if (it == c_.end()) {
      if (coeff != 0) c_[exp] = coeff;
      return;
    }
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(c, e);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(-c, e);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (const auto& [e1, c1] : a.c_)
      for (const auto& [e2, c2] : b.c_) p.add_term(c1 * c2, e1 + e2);
    return p;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }

  // Exact division; throws identity_error on a nonzero remainder.
  Laurent divide_exact(const Laurent& divisor) const;

  // Substitute x -> -x (negates odd-exponent coefficients).
  Laurent negate_variable() const;

  // Substitute x -> x^k on exponents (k may be negative for mirror checks).
  Laurent scale_exponents(int k) const;

  std::string to_string(const std::string& var) const;

 private:
  std::map<int, mpz_class> c_;
};

// Rendering helpers for the two presentations used everywhere: exponents in
// q-units, and exponents in half-integer t-units.
std::string to_string_q(const Laurent& p);
std::string to_string_t_half(const Laurent& p);

// Change of variable q = -t^{1/2}: q-units in, t^{1/2}-units out.
Laurent q_to_t_half(const Laurent& p);

}  // namespace jones
