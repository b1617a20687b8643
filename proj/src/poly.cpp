#include "cyclespec/poly.hpp"

#include <utility>

namespace cyclespec {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::eval_exact(const Rational& z) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CNum Poly::eval(const CNum& z) const {
  const Precision p = z.precision();
  CNum acc(p);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc += rational_to_cnum(*it, p);
  }
  return acc;
}

Poly Poly::taylor_shift(const Rational& a) const {
  // Horner in the variable w = z - a: p = (...(c_n (w + a) + c_{n-1})(w + a) ...).
  std::vector<Rational> out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    out.emplace_back();
    for (std::size_t k = out.size() - 1; k > 0; --k) out[k] = out[k - 1] + a * out[k];
    out[0] = a * out[0] + *it;
  }
  return Poly(std::move(out));
}

Poly Poly::divide_linear(const Rational& root) const {
  if (c_.empty()) return {};
  std::vector<Rational> q(c_.size() - 1);
  Rational carry;
  for (std::size_t k = c_.size(); k-- > 0;) {
    carry = carry * root + c_[k];
    if (k > 0) q[k - 1] = carry;
  }
  if (!carry.is_zero()) throw DomainError("polynomial is not divisible by the linear factor");
  return Poly(std::move(q));
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (!unit || k == 0) out += mag.str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

Poly poly_z() { return Poly::monomial(Rational(1), 1); }

}  // namespace cyclespec
