#include "tkt/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace tkt {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(long long coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exp] = coeff;
  return p;
}

long long LaurentPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::set(int exp, long long c) {
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) - c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, c1] : coeffs_)
    for (auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

long long LaurentPoly::eval_at_one() const {
  long long s = 0;
  for (auto& [e, c] : coeffs_) s += c;
  return s;
}

std::optional<LaurentPoly> LaurentPoly::divided_by(const LaurentPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly();
  // shift both to ordinary polynomials; units t^k divide everything
  const int ashift = min_exp(), dshift = d.min_exp();
  LaurentPoly rem = shifted(-ashift);
  const LaurentPoly dd = d.shifted(-dshift);
  const int dtop = dd.max_exp();
  const long long dlead = dd.coeff(dtop);
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() >= dtop) {
    const int rtop = rem.max_exp();
    const long long rlead = rem.coeff(rtop);
    if (rlead % dlead != 0) return std::nullopt;
    LaurentPoly m = monomial(rlead / dlead, rtop - dtop);
    quot = quot + m;
    rem = rem - m * dd;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(ashift - dshift);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    long long c = it->second;
    const int e = it->first;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    if (e == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace tkt
