#include "projlink/laurent.hpp"

#include <cstdlib>
#include <sstream>

namespace projlink {

LaurentPolynomial LaurentPolynomial::constant(Coefficient c) { return monomial(c, 0); }

LaurentPolynomial LaurentPolynomial::monomial(Coefficient c, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

LaurentPolynomial::Coefficient LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(int exponent, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, ca * cb);
  }
  *this = std::move(out);
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(int n) const {
  LaurentPolynomial out = constant(1);
  for (int i = 0; i < n; ++i) out *= *this;
  return out;
}

LaurentPolynomial LaurentPolynomial::invert_variable() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(-e, c);
  return out;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const Coefficient mag = std::llabs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace projlink
