#include "cyclespec/heat.hpp"

#include <cstdlib>
#include <utility>

namespace cyclespec {

namespace {

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

void check_params(const CycleParams& p) {
  if (p.m < 2) throw DomainError("cycle requires m >= 2");
  if (p.precision < kMinPrecision) throw DomainError("precision must be at least 53 bits");
}

void check_time(const Real& t) {
  if (!t.is_finite() || t.sign() < 0) throw DomainError("time must be finite and t >= 0");
}

}  // namespace

const char* to_string(HeatMethod method) {
  return method == HeatMethod::image ? "image" : "spectral";
}

CNum heat_kernel_line(long x, long y, const Real& t, Precision prec) {
  check_time(t);
  const BesselEval b = bessel_i(x - y, t, prec + 16);
  return CNum((exp(-t.with_precision(prec + 16)) * b.value).with_precision(prec));
}

std::vector<Real> cycle_eigenvalues(long m, const Rational& beta, Precision prec) {
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(m));
  for (long j = 0; j < m; ++j) {
    out.push_back(Real(1L, prec) - cos_pi(Rational(2) * (Rational(j) + beta) / Rational(m), prec));
  }
  return out;
}

std::vector<CNum> cycle_eigenfunction(long m, const Rational& beta, long j, Precision prec) {
  std::vector<CNum> out;
  out.reserve(static_cast<std::size_t>(m));
  for (long x = 0; x < m; ++x) {
    out.push_back(unit_root((Rational(j) + beta) * Rational(x) / Rational(m), prec));
  }
  return out;
}

HeatEvaluator::HeatEvaluator(CycleParams params, const Real& t)
    : params_(std::move(params)),
      t_(t.with_precision(params_.precision + 16)),
      tail_eps_(exp2i(-params_.precision, 64)),
      exp_minus_t_(exp(-t_)) {
  check_params(params_);
  check_time(t);
  const Precision w = params_.precision + 16;
  lambda_ = cycle_eigenvalues(params_.m, params_.beta, w);
  for (const Real& l : lambda_) decay_.push_back(exp(-(l * t_)));
}

const BesselEval& HeatEvaluator::bessel(long order) {
  auto it = bessel_.find(order);
  if (it == bessel_.end()) {
    it = bessel_.emplace(order, bessel_i(order, t_, params_.precision + 16)).first;
  }
  return it->second;
}

HeatValue HeatEvaluator::image(long x, long y) {
  const long m = params_.m;
  const long d = x - y;
  if (auto it = image_memo_.find(d); it != image_memo_.end()) {
    HeatValue v = it->second;
    v.x = x;
    v.y = y;
    return v;
  }
  const Precision w = params_.precision + 16;
  const long ell = mod(d, m);
  const long K = bessel_tail_index(m, ell, t_, tail_eps_);
  CNum sum(w);
  Real bessel_err(w);
  for (long j = -K; j <= K; ++j) {
    const BesselEval& b = bessel(std::labs(ell + j * m));
    sum += unit_root(-params_.beta * Rational(j), w) * b.value;
    bessel_err += b.tail_bound;
  }
  sum *= exp_minus_t_;
  const Rational shift = -params_.beta * Rational(ell - d) / Rational(m);
  CNum value = unit_root(shift, w) * sum;
  const Real tail = bessel_image_tail(m, ell, t_, K).with_precision(w) + exp_minus_t_ * bessel_err;

  HeatValue out{params_, x, y, t_.with_precision(params_.precision),
                CNum(value.re().with_precision(params_.precision),
                     value.im().with_precision(params_.precision)),
                HeatMethod::image, tail.with_precision(params_.precision)};
  image_memo_.emplace(d, out);
  return out;
}

HeatValue HeatEvaluator::spectral(long x, long y) const {
  const long m = params_.m;
  const Precision w = params_.precision + 16;
  const long d = x - y;
  if (auto it = spectral_memo_.find(d); it != spectral_memo_.end()) {
    HeatValue v = it->second;
    v.x = x;
    v.y = y;
    return v;
  }
  CNum sum(w);
  for (long j = 0; j < m; ++j) {
    sum += unit_root((Rational(j) + params_.beta) * Rational(d) / Rational(m), w) * decay_[j];
  }
  sum /= Real(m, w);
  HeatValue out{params_, x, y, t_.with_precision(params_.precision),
                CNum(sum.re().with_precision(params_.precision), sum.im().with_precision(params_.precision)),
                HeatMethod::spectral, Real(params_.precision)};
  spectral_memo_.emplace(d, out);
  return out;
}

CNum HeatEvaluator::spectral_dt(long x, long y) const {
  const long m = params_.m;
  const Precision w = params_.precision + 16;
  const long d = x - y;
  CNum sum(w);
  for (long j = 0; j < m; ++j) {
    sum -= unit_root((Rational(j) + params_.beta) * Rational(d) / Rational(m), w) *
           (decay_[j] * lambda_[j]);
  }
  sum /= Real(m, w);
  return CNum(sum.re().with_precision(params_.precision), sum.im().with_precision(params_.precision));
}

HeatValue heat_kernel_cycle(const CycleParams& params, long x, long y, const Real& t,
                            HeatMethod method) {
  HeatEvaluator ev(params, t);
  return method == HeatMethod::image ? ev.image(x, y) : ev.spectral(x, y);
}

std::vector<CNum> twisted_laplacian_apply(const CycleParams& params, const std::vector<CNum>& f) {
  check_params(params);
  const long m = params.m;
  if (static_cast<long>(f.size()) != m) throw DomainError("vector length must equal m");
  const Precision p = params.precision;
  const CNum up = unit_root(params.beta, p);
  const CNum down = unit_root(-params.beta, p);
  std::vector<CNum> out;
  out.reserve(f.size());
  for (long x = 0; x < m; ++x) {
    CNum right = x + 1 < m ? f[x + 1] : up * f[0];
    CNum left = x > 0 ? f[x - 1] : down * f[m - 1];
    CNum avg = right + left;
    out.push_back(f[x] - CNum(ldexp(avg.re(), -1), ldexp(avg.im(), -1)));
  }
  return out;
}

namespace {

std::vector<CNum> kernel_column(const HeatEvaluator& ev, long m, long y) {
  std::vector<CNum> col;
  for (long x = 0; x < m; ++x) col.push_back(ev.spectral(x, y).value);
  return col;
}

}  // namespace

Real heat_residual(const CycleParams& params, long x, long y, const Real& t, const Real& h) {
  check_params(params);
  if (!(h.sign() > 0) || !(t > h)) throw DomainError("heat_residual requires t > h > 0");
  const long m = params.m;
  const long xr = mod(x, m);
  const long yr = mod(y, m);
  HeatEvaluator plus(params, t + h);
  HeatEvaluator minus(params, t - h);
  HeatEvaluator at(params, t);
  CNum dt = plus.spectral(xr, yr).value - minus.spectral(xr, yr).value;
  dt /= ldexp(h, 1);
  const std::vector<CNum> lap = twisted_laplacian_apply(params, kernel_column(at, m, yr));
  return (dt + lap[xr]).abs();
}

Real heat_residual_analytic(const CycleParams& params, long x, long y, const Real& t) {
  check_params(params);
  const long m = params.m;
  const long xr = mod(x, m);
  const long yr = mod(y, m);
  HeatEvaluator at(params, t);
  const std::vector<CNum> lap = twisted_laplacian_apply(params, kernel_column(at, m, yr));
  return (at.spectral_dt(xr, yr) + lap[xr]).abs();
}

}  // namespace cyclespec
