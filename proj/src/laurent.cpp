#include "jones/laurent.hpp"

#include <functional>
#include <sstream>

#include "jones/errors.hpp"

namespace jones {

Laurent Laurent::divide_exact(const Laurent& divisor) const {
  if (divisor.is_zero()) throw identity_error("division by zero polynomial");
  Laurent rem = *this;
  Laurent quot;
  int dlead = divisor.c_.rbegin()->first;
  const mpz_class& dc = divisor.c_.rbegin()->second;
  while (!rem.is_zero()) {
    int rlead = rem.c_.rbegin()->first;
    const mpz_class rc = rem.c_.rbegin()->second;
    mpz_class q = rc / dc;
    if (q * dc != rc) throw identity_error("polynomial division leaves a remainder");
    int e = rlead - dlead;
    Laurent term = Laurent::monomial(q, e);
    quot += term;
    rem -= term * divisor;
    if (!rem.is_zero() && rem.c_.rbegin()->first >= rlead)
      throw identity_error("polynomial division does not terminate");
  }
  return quot;
}

Laurent Laurent::negate_variable() const {
  Laurent out;
  for (const auto& [e, c] : c_) out.add_term(e % 2 == 0 ? c : -c, e);
  return out;
}

Laurent Laurent::scale_exponents(int k) const {
  Laurent out;
  for (const auto& [e, c] : c_) out.add_term(c, e * k);
  return out;
}

namespace {

std::string format_terms(const Laurent& p,
                         const std::function<std::string(int)>& power) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string pw = power(e);
    if (a != 1 || pw.empty()) out << a.get_str();
    if (a != 1 && !pw.empty()) out << "*";
    out << pw;
  }
  return out.str();
}

}  // namespace

std::string Laurent::to_string(const std::string& var) const {
  return format_terms(*this, [&var](int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
  });
}

std::string to_string_q(const Laurent& p) { return p.to_string("q"); }

std::string to_string_t_half(const Laurent& p) {
  return format_terms(p, [](int e) -> std::string {
    if (e == 0) return "";
    if (e % 2 == 0) {
      int k = e / 2;
      return k == 1 ? "t" : "t^" + std::to_string(k);
    }
    return "t^(" + std::to_string(e) + "/2)";
  });
}

Laurent q_to_t_half(const Laurent& p) {
  // q = -t^{1/2}: exponent is preserved in half-integer t units, the sign
  // flips on odd exponents
  return p.negate_variable();
}

}  // namespace jones
