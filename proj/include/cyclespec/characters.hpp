#pragma once

#include <optional>
#include <vector>

#include "cyclespec/numeric.hpp"

namespace cyclespec {

/// Dirichlet character mod m held exactly: chi(g_i) = e^{2 pi i e_i / o_i} on the
/// canonical generators g_i of (Z/mZ)^*, of orders o_i.
class DirichletCharacter {
 public:
  long modulus() const { return modulus_; }
  /// Position in enumerate_characters(modulus()).
  long index() const { return index_; }
  const std::vector<long>& generators() const { return generators_; }
  const std::vector<long>& orders() const { return orders_; }
  const std::vector<long>& exponents() const { return exponents_; }

  /// chi(j) = e^{2 pi i q} with q in [0, 1); empty when gcd(j, m) > 1.
  std::optional<Rational> value_exponent(long j) const;
  CNum value(long j, Precision prec) const;
  std::vector<CNum> values(Precision prec) const;

  bool is_even() const { return even_; }
  bool is_principal() const;
  /// True when every value is real (order at most 2).
  bool is_real() const;
  long conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == modulus_; }

  DirichletCharacter conj() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus_ == b.modulus_ && a.exponents_ == b.exponents_;
  }

 private:
  friend std::vector<DirichletCharacter> enumerate_characters(long m);

  long modulus_ = 0;
  long index_ = 0;
  std::vector<long> generators_;
  std::vector<long> orders_;
  std::vector<long> exponents_;
  std::vector<std::optional<Rational>> table_;
  bool even_ = true;
  long conductor_ = 1;
};

/// Canonical generators of (Z/mZ)^*: odd prime powers in increasing prime order use
/// their least primitive root, 2^e contributes -1 (e >= 2) and 5 (e >= 3); each is
/// lifted by CRT to be 1 on the other components.
struct UnitGroup {
  std::vector<long> generators;
  std::vector<long> orders;
};
UnitGroup unit_group(long m);

/// All phi(m) characters, lexicographic in the exponent vector; index 0 is principal.
std::vector<DirichletCharacter> enumerate_characters(long m);
DirichletCharacter character(long m, long index);

bool is_primitive(const DirichletCharacter& chi);
long conductor(const DirichletCharacter& chi);

/// tau(chi) = sum_r chi(r) e^{2 pi i r/m}.
CNum gauss_sum(const DirichletCharacter& chi, Precision prec);

struct TwistedSumCheck {
  CNum lhs;  // sum_r chi(r) e^{2 pi i r j/m}
  CNum rhs;  // conj(chi(j)) tau(chi)
  Real delta;
};
/// Requires chi primitive.
TwistedSumCheck twisted_sum_identity_check(const DirichletCharacter& chi, long j, Precision prec);

long euler_phi(long m);

}  // namespace cyclespec
