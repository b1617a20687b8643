#include "cyclespec/characters.hpp"

#include <numeric>

namespace cyclespec {

namespace {

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

long mul_mod(long a, long b, long m) { return static_cast<long>((static_cast<__int128>(a) * b) % m); }

long pow_mod(long b, long e, long m) {
  long out = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) out = mul_mod(out, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return out;
}

long mult_order(long g, long m) {
  long x = mod(g, m);
  long k = 1;
  while (x != 1 % m) {
    x = mul_mod(x, g, m);
    ++k;
  }
  return k;
}

std::vector<std::pair<long, int>> factor(long m) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

// x = a mod q and x = 1 mod m/q (gcd(q, m/q) = 1).
long crt_lift(long a, long q, long m) {
  const long rest = m / q;
  for (long x = mod(a, q); x < m; x += q) {
    if (x % rest == 1 % rest) return x;
  }
  throw std::logic_error("CRT lift failed");
}

}  // namespace

long euler_phi(long m) {
  long out = m;
  for (const auto& [p, e] : factor(m)) out = out / p * (p - 1);
  return out;
}

UnitGroup unit_group(long m) {
  if (m < 1) throw DomainError("modulus must be positive");
  UnitGroup g;
  for (const auto& [p, e] : factor(m)) {
    long q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (p == 2) {
      if (e >= 2) {
        g.generators.push_back(crt_lift(q - 1, q, m));
        g.orders.push_back(2);
      }
      if (e >= 3) {
        g.generators.push_back(crt_lift(5, q, m));
        g.orders.push_back(q / 4);
      }
      continue;
    }
    const long phi = q / p * (p - 1);
    long root = 2;
    while (std::gcd(root, p) != 1 || mult_order(root, q) != phi) ++root;
    g.generators.push_back(crt_lift(root, q, m));
    g.orders.push_back(phi);
  }
  return g;
}

std::optional<Rational> DirichletCharacter::value_exponent(long j) const {
  return table_[static_cast<std::size_t>(mod(j, modulus_))];
}

CNum DirichletCharacter::value(long j, Precision prec) const {
  const auto q = value_exponent(j);
  return q ? unit_root(*q, prec) : CNum(prec);
}

std::vector<CNum> DirichletCharacter::values(Precision prec) const {
  std::vector<CNum> out;
  for (long j = 0; j < modulus_; ++j) out.push_back(value(j, prec));
  return out;
}

bool DirichletCharacter::is_principal() const {
  for (long e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

bool DirichletCharacter::is_real() const {
  for (const auto& q : table_) {
    if (q && !(Rational(2) * *q).is_integer()) return false;
  }
  return true;
}

DirichletCharacter DirichletCharacter::conj() const {
  DirichletCharacter out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] = mod(-exponents_[i], orders_[i]);
  }
  for (auto& q : out.table_) {
    if (q) q = (-*q).frac();
  }
  long idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + out.exponents_[i];
  out.index_ = idx;
  return out;
}

std::vector<DirichletCharacter> enumerate_characters(long m) {
  if (m < 2) throw DomainError("characters require modulus m >= 2");
  const UnitGroup group = unit_group(m);
  const std::size_t k = group.generators.size();

  // Discrete logarithms of every unit with respect to the generators.
  std::vector<std::optional<std::vector<long>>> logs(static_cast<std::size_t>(m));
  std::vector<long> a(k, 0);
  for (;;) {
    long x = 1 % m;
    for (std::size_t i = 0; i < k; ++i) x = mul_mod(x, pow_mod(group.generators[i], a[i], m), m);
    logs[static_cast<std::size_t>(x)] = a;
    std::size_t i = k;
    while (i > 0 && ++a[i - 1] == group.orders[i - 1]) a[--i] = 0;
    if (i == 0) break;
  }

  std::vector<long> divisors;
  for (long f = 1; f <= m; ++f) {
    if (m % f == 0) divisors.push_back(f);
  }

  std::vector<DirichletCharacter> out;
  std::vector<long> e(k, 0);
  long index = 0;
  for (;;) {
    DirichletCharacter chi;
    chi.modulus_ = m;
    chi.index_ = index++;
    chi.generators_ = group.generators;
    chi.orders_ = group.orders;
    chi.exponents_ = e;
    chi.table_.resize(static_cast<std::size_t>(m));
    for (long j = 0; j < m; ++j) {
      const auto& lg = logs[static_cast<std::size_t>(j)];
      if (!lg) continue;
      Rational q;
      for (std::size_t i = 0; i < k; ++i) {
        q += Rational(Integer((*lg)[i] * e[i]), Integer(group.orders[i]));
      }
      chi.table_[static_cast<std::size_t>(j)] = q.frac();
    }
    chi.even_ = chi.table_[static_cast<std::size_t>(m - 1)]->is_zero();
    for (long f : divisors) {
      bool trivial = true;
      for (long j = 1; j < m && trivial; j += f) {
        const auto& q = chi.table_[static_cast<std::size_t>(j)];
        if (q && !q->is_zero()) trivial = false;
      }
      if (trivial) {
        chi.conductor_ = f;
        break;
      }
    }
    out.push_back(std::move(chi));

    std::size_t i = k;
    while (i > 0 && ++e[i - 1] == group.orders[i - 1]) e[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

DirichletCharacter character(long m, long index) {
  std::vector<DirichletCharacter> all = enumerate_characters(m);
  if (index < 0 || index >= static_cast<long>(all.size())) {
    throw DomainError("character index " + std::to_string(index) + " out of range for modulus " +
                      std::to_string(m) + " (there are " + std::to_string(all.size()) + ")");
  }
  return all[static_cast<std::size_t>(index)];
}

bool is_primitive(const DirichletCharacter& chi) { return chi.is_primitive(); }
long conductor(const DirichletCharacter& chi) { return chi.conductor(); }

CNum gauss_sum(const DirichletCharacter& chi, Precision prec) {
  const long m = chi.modulus();
  const Precision w = prec + 16;
  CNum sum(w);
  for (long r = 1; r < m; ++r) {
    const auto q = chi.value_exponent(r);
    if (q) sum += unit_root(*q + Rational(Integer(r), Integer(m)), w);
  }
  return CNum(sum.re().with_precision(prec), sum.im().with_precision(prec));
}

TwistedSumCheck twisted_sum_identity_check(const DirichletCharacter& chi, long j, Precision prec) {
  if (!chi.is_primitive()) throw DomainError("twisted sum identity requires a primitive character");
  const long m = chi.modulus();
  const Precision w = prec + 16;
  CNum lhs(w);
  for (long r = 1; r < m; ++r) {
    const auto q = chi.value_exponent(r);
    if (q) lhs += unit_root(*q + Rational(Integer(mod(r * j, m)), Integer(m)), w);
  }
  const CNum rhs = chi.value(j, w).conj() * gauss_sum(chi, w);
  CNum l(lhs.re().with_precision(prec), lhs.im().with_precision(prec));
  CNum r(rhs.re().with_precision(prec), rhs.im().with_precision(prec));
  Real delta = (l - r).abs();
  return {l, r, delta};
}

}  // namespace cyclespec
