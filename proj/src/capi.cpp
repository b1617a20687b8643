#include "cyclespec.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <atomic>
#include <future>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cyclespec/characters.hpp"
#include "cyclespec/error.hpp"
#include "cyclespec/heat.hpp"
#include "cyclespec/lfn.hpp"
#include "cyclespec/resolvent.hpp"
#include "cyclespec/trigsums.hpp"
#include "cyclespec/verify.hpp"

using namespace cyclespec;

struct cs_context {
  Precision precision = kDefaultPrecision;
  std::string last_error;
};

namespace {

struct Field {
  std::string name;
  cs_field_type type = CS_FIELD_TEXT;
  std::string text;
  std::string re;
  std::string im;
  std::optional<std::string> exact;
};

using Row = std::vector<Field>;

}  // namespace

struct cs_result {
  std::vector<Row> rows;
};

namespace {

class RowBuilder {
 public:
  explicit RowBuilder(Precision prec) : digits_(display_digits(prec)) {}

  RowBuilder& text(const std::string& name, const std::string& v) {
    row_.push_back({name, CS_FIELD_TEXT, v, "", "", std::nullopt});
    return *this;
  }
  RowBuilder& integer(const std::string& name, long v) {
    row_.push_back({name, CS_FIELD_INTEGER, std::to_string(v), "", "", std::nullopt});
    return *this;
  }
  RowBuilder& boolean(const std::string& name, bool v) {
    row_.push_back({name, CS_FIELD_BOOL, v ? "true" : "false", "", "", std::nullopt});
    return *this;
  }
  RowBuilder& real(const std::string& name, const Real& v) {
    const std::string s = v.str(digits_);
    row_.push_back({name, CS_FIELD_REAL, s, s, "0", std::nullopt});
    return *this;
  }
  RowBuilder& complex(const std::string& name, const CNum& v,
                      const std::optional<Rational>& exact = std::nullopt) {
    Field f{name, CS_FIELD_COMPLEX, v.str(digits_), v.re().str(digits_), v.im().str(digits_), std::nullopt};
    if (exact) f.exact = exact->str();
    row_.push_back(std::move(f));
    return *this;
  }
  Row done() { return std::move(row_); }

 private:
  int digits_;
  Row row_;
};

std::string need(const char* s, const char* what) {
  if (s == nullptr || *s == '\0') throw std::invalid_argument(std::string("missing ") + what);
  return s;
}

Rational parse_rational(const char* s, const char* what) {
  const std::string v = need(s, what);
  try {
    return Rational::parse(v);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " '" + v +
                                "' (expected p/q or a decimal)");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// "a", "bi", "a+bi", "a-bi", "i", "-i"
std::pair<Rational, Rational> parse_complex(const char* s) {
  std::string v = need(s, "complex value");
  v.erase(std::remove(v.begin(), v.end(), ' '), v.end());
  const auto bad = [&] {
    return std::invalid_argument("cannot parse complex value '" + v + "' (expected a+bi)");
  };
  try {
    if (v.empty() || (v.back() != 'i' && v.back() != 'j')) return {Rational::parse(v), Rational()};
    std::string body = v.substr(0, v.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    const std::string re = split == std::string::npos ? "" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? Rational() : Rational::parse(trim(re)), Rational::parse(im)};
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

template <class F>
cs_status guarded(cs_context* ctx, cs_result** out, F&& body) {
  if (out) *out = nullptr;
  if (ctx == nullptr) return CS_ERR_USAGE;
  ctx->last_error.clear();
  if (out == nullptr) {
    ctx->last_error = "output pointer is NULL";
    return CS_ERR_USAGE;
  }
  auto result = std::make_unique<cs_result>();
  cs_status status = CS_OK;
  try {
    status = body(*result);
  } catch (const VerificationError& e) {
    ctx->last_error = e.what();
    return CS_ERR_VERIFY;
  } catch (const std::domain_error& e) {
    ctx->last_error = e.what();
    return CS_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return CS_ERR_USAGE;
  } catch (const std::exception& e) {
    ctx->last_error = std::string("internal error: ") + e.what();
    return CS_ERR_INTERNAL;
  }
  *out = result.release();
  return status;
}

cs_status cross_check(cs_context* ctx, bool ok, const std::string& message) {
  if (ok) return CS_OK;
  ctx->last_error = message;
  return CS_ERR_VERIFY;
}

void check_positive(long v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

Real magnitude_bound(const CNum& a, const CNum& b, Precision p) {
  return Tolerance::for_precision(p).bound(a.abs(), b.abs());
}

}  // namespace

extern "C" {

cs_context* cs_context_new(unsigned long precision_bits) {
  unsigned long bits = precision_bits;
  if (bits == 0) {
    bits = kDefaultPrecision;
    if (const char* env = std::getenv("CYCLESPEC_PRECISION_BITS"); env && *env) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end == env || *end != '\0') return nullptr;
      bits = v;
    }
  }
  if (bits < static_cast<unsigned long>(kMinPrecision) || bits > 1u << 20) return nullptr;
  auto* ctx = new cs_context;
  ctx->precision = static_cast<Precision>(bits);
  return ctx;
}

void cs_context_free(cs_context* ctx) { delete ctx; }

unsigned long cs_context_precision(const cs_context* ctx) {
  return ctx ? static_cast<unsigned long>(ctx->precision) : 0;
}

const char* cs_last_error(const cs_context* ctx) { return ctx ? ctx->last_error.c_str() : "no context"; }

const char* cs_version(void) { return "1.0.0"; }

cs_status cs_sum(cs_context* ctx, const char* kind, long m, long r, const char* shift, long n,
                 const char* method, cs_result** out) {
  return guarded(ctx, out, [&](cs_result& res) {
    const Precision p = ctx->precision;
    const SumSpec spec{parse_sum_kind(need(kind, "kind")), m, r, shift && *shift ? parse_rational(shift, "shift") : Rational(), n};
    const std::string how = method && *method ? method : "both";
    if (how != "closed" && how != "direct" && how != "both") {
      throw std::invalid_argument("method must be closed, direct or both");
    }
    check_positive(n, "n");
    validate(spec);
    RowBuilder row(p);
    row.text("kind", to_string(spec.kind)).integer("m", m).integer("r", r).text("shift", spec.shift.str()).integer("n", n);
    if (how == "direct") {
      const SumResult d = direct_sum(spec, p);
      row.text("method", "direct").complex("value", d.value);
      res.rows.push_back(row.done());
      return CS_OK;
    }
    const SumResult c = closed_sum(spec, p);
    if (how == "closed") {
      row.text("method", to_string(c.method)).complex("value", c.value, c.exact);
      res.rows.push_back(row.done());
      return CS_OK;
    }
    const SumResult d = direct_sum(spec, p);
    const Real delta = (c.value - d.value).abs();
    const Real budget = magnitude_bound(c.value, d.value, p);
    row.text("method", std::string(to_string(c.method)) + "+direct")
        .complex("value", c.value, c.exact)
        .complex("direct", d.value)
        .real("delta", delta)
        .real("error_budget", budget);
    res.rows.push_back(row.done());
    return cross_check(ctx, delta <= budget, "closed form and direct sum disagree beyond the error budget");
  });
}

cs_status cs_series(cs_context* ctx, const char* kind, long m, long r, const char* shift, long count,
                    cs_result** out) {
  return guarded(ctx, out, [&](cs_result& res) {
    const Precision p = ctx->precision;
    check_positive(count, "count");
    const SumKind k = parse_sum_kind(need(kind, "kind"));
    const Rational sh = shift && *shift ? parse_rational(shift, "shift") : Rational();
    for (long n = 1; n <= count; ++n) {
      const SumSpec spec{k, m, r, sh, n};
      validate(spec);
      const SumResult c = closed_sum(spec, p);
      res.rows.push_back(RowBuilder(p)
                             .text("kind", to_string(k))
                             .integer("m", m)
                             .integer("r", r)
                             .text("shift", sh.str())
                             .integer("n", n)
                             .text("method", to_string(c.method))
                             .complex("value", c.value, c.exact)
                             .done());
    }
    return CS_OK;
  });
}

cs_status cs_lvalue(cs_context* ctx, const char* family, long m, long chi_index, long n,
                    const char* route, cs_result** out) {
  return guarded(ctx, out, [&](cs_result& res) {
    const Precision p = ctx->precision;
    const std::string fam = family && *family ? family : "L";
    const std::string which = route && *route ? route : "all";
    check_positive(n, "n");
    if (m < 2) throw DomainError("characters require modulus m >= 2");
    const DirichletCharacter chi = character(m, chi_index);

    std::vector<LValue> values;
    const auto want = [&](const char* name) { return which == "all" || which == name; };
    bool known = false;
    if (fam == "L") {
      for (const char* name : {"direct", "gauss_recurrence", "polynomial", "symbolic"}) {
        known = known || which == name;
      }
      if (want("direct")) values.push_back(l_direct(chi, n, p));
      const bool full = chi.is_even() && chi.is_primitive();
      if (which == "gauss_recurrence" || (which == "all" && full)) values.push_back(l_via_gauss(chi, n, p));
      if (which == "polynomial" || (which == "all" && full)) values.push_back(l_polynomial(chi, n, p));
      if (which == "symbolic") values.push_back(l_polynomial(chi, n, p, PolyForm::symbolic));
    } else if (fam == "tilde") {
      for (const char* name : {"direct", "derivative", "finite_difference"}) known = known || which == name;
      if (want("direct")) values.push_back(l_tilde(chi, n, p, LRoute::direct));
      const bool full = !chi.is_even() && chi.is_primitive();
      if (which == "derivative" || (which == "all" && full)) values.push_back(l_tilde(chi, n, p, LRoute::derivative));
      if (which == "finite_difference") values.push_back(l_tilde(chi, n, p, LRoute::finite_difference));
    } else if (fam == "hat") {
      for (const char* name : {"direct", "chebyshev"}) known = known || which == name;
      if (want("direct")) values.push_back(l_hat(chi, n, p, LRoute::direct));
      if (which == "chebyshev" || (which == "all" && chi.is_primitive())) values.push_back(l_hat(chi, n, p));
    } else {
      throw std::invalid_argument("family must be L, tilde or hat");
    }
    if (which != "all" && !known) throw std::invalid_argument("route '" + which + "' does not apply to family " + fam);

    bool ok = true;
    for (const LValue& v : values) {
      const Real delta = (v.value - values.front().value).abs();
      const Real budget = v.error_budget + values.front().error_budget;
      ok = ok && delta <= budget;
      res.rows.push_back(RowBuilder(p)
                             .text("family", fam)
                             .integer("m", m)
                             .integer("character", chi.index())
                             .text("parity", chi.is_even() ? "even" : "odd")
                             .boolean("primitive", chi.is_primitive())
                             .integer("n", n)
                             .text("route", to_string(v.route))
                             .complex("value", v.value)
                             .real("error_budget", v.error_budget)
                             .real("delta", delta)
                             .boolean("vanishes", v.vanishes)
                             .done());
    }
    return cross_check(ctx, ok, "L-value routes disagree beyond their combined error budgets");
  });
}

cs_status cs_characters(cs_context* ctx, long m, cs_result** out) {
  return guarded(ctx, out, [&](cs_result& res) {
    const Precision p = ctx->precision;
    for (const auto& chi : enumerate_characters(m)) {
      std::string exps;
      for (std::size_t i = 0; i < chi.exponents().size(); ++i) {
        if (i) exps += " ";
        exps += std::to_string(chi.exponents()[i]) + "/" + std::to_string(chi.orders()[i]);
      }
      std::string vals;
      for (long j = 0; j < m; ++j) {
        if (j) vals += " ";
        const auto q = chi.value_exponent(j);
        vals += q ? q->str() : "-";
      }
      res.rows.push_back(RowBuilder(p)
                             .integer("m", m)
                             .integer("index", chi.index())
                             .text("exponents", exps)
                             .text("value_exponents", vals)
                             .text("parity", chi.is_even() ? "even" : "odd")
                             .boolean("principal", chi.is_principal())
                             .boolean("real", chi.is_real())
                             .integer("conductor", chi.conductor())
                             .boolean("primitive", chi.is_primitive())
                             .complex("gauss_sum", gauss_sum(chi, p))
                             .done());
    }
    return CS_OK;
  });
}

cs_status cs_heat(cs_context* ctx, long m, const char* beta, const char* t, long x, long y,
                  const char* method, cs_result** out) {
  return guarded(ctx, out, [&](cs_result& res) {
    const Precision p = ctx->precision;
    const Rational b = beta && *beta ? parse_rational(beta, "beta") : Rational();
    const Rational tq = parse_rational(t, "t");
    const std::string how = method && *method ? method : "both";
    if (how != "image" && how != "spectral" && how != "both") {
      throw std::invalid_argument("method must be image, spectral or both");
    }
    HeatEvaluator ev({m, b, p}, Real(tq, p));
    std::vector<HeatValue> values;
    if (how != "spectral") values.push_back(ev.image(x, y));
    if (how != "image") values.push_back(ev.spectral(x, y));
    bool ok = true;
    for (const HeatValue& v : values) {
      const Real delta = (v.value - values.front().value).abs();
      ok = ok && delta <= values.front().tail_bound + v.tail_bound + Tolerance::for_precision(p).abs_eps;
      res.rows.push_back(RowBuilder(p)
                             .integer("m", m)
                             .text("beta", b.str())
                             .text("t", tq.str())
                             .integer("x", x)
                             .integer("y", y)
                             .text("method", to_string(v.method))
                             .complex("value", v.value)
                             .real("tail_bound", v.tail_bound)
                             .real("delta", delta)
                             .done());
    }
    return cross_check(ctx, ok, "image and spectral heat kernels disagree beyond the certified tail");
  });
}

cs_status cs_resolvent(cs_context* ctx, long m, const char* beta, long x, long y, const char* s,
                       const char* norm, const char* laplace_horizon, cs_result** out) {
  return guarded(ctx, out, [&](cs_result& res) {
    const Precision p = ctx->precision;
    const Rational b = beta && *beta ? parse_rational(beta, "beta") : Rational();
    const auto [sre, sim] = parse_complex(s);
    const CNum sv(Real(sre, p), Real(sim, p));
    const std::string nm = norm && *norm ? norm : "kernel";
    if (nm != "kernel" && nm != "cancelled") throw std::invalid_argument("norm must be kernel or cancelled");
    const ResolventNorm rn = nm == "kernel" ? ResolventNorm::kernel : ResolventNorm::cancelled;
    const long r = x - y;

    struct Entry {
      std::string method;
      CNum value;
      Real budget;
    };
    std::vector<Entry> entries;
    const Real eps = Tolerance::for_precision(p).abs_eps;
    entries.push_back({"spectral", resolvent_spectral(m, b, r, sv, rn), eps});
    entries.push_back({"chebyshev", resolvent_closed(m, b, r, sv, rn), eps});
    if (sre.sign() > 0) entries.push_back({"hyperbolic", resolvent_hyperbolic(m, b, r, sv, rn), eps});
    if (laplace_horizon && *laplace_horizon) {
      if (rn != ResolventNorm::kernel) throw std::invalid_argument("the Laplace route uses the kernel normalization");
      const LaplaceResult lr = resolvent_from_laplace(m, b, x, y, sv, Real(parse_rational(laplace_horizon, "horizon"), p));
      entries.push_back({"laplace", lr.value, lr.quadrature_error + lr.tail_bound + eps});
    }
    bool ok = true;
    for (const Entry& e : entries) {
      const Real delta = (e.value - entries.front().value).abs();
      const Real budget = e.budget + magnitude_bound(e.value, entries.front().value, p);
      ok = ok && delta <= budget;
      res.rows.push_back(RowBuilder(p)
                             .integer("m", m)
                             .text("beta", b.str())
                             .integer("x", x)
                             .integer("y", y)
                             .complex("s", sv)
                             .text("norm", nm)
                             .text("method", e.method)
                             .complex("value", e.value)
                             .real("error_budget", e.budget)
                             .real("delta", delta)
                             .done());
    }
    return cross_check(ctx, ok, "resolvent evaluations disagree beyond their budgets");
  });
}

cs_status cs_poles(cs_context* ctx, long m, const char* beta, cs_result** out) {
  return guarded(ctx, out, [&](cs_result& res) {
    const Precision p = ctx->precision;
    const Rational b = beta && *beta ? parse_rational(beta, "beta") : Rational();
    for (const auto& pole : resolvent_poles(m, b, p)) {
      std::string idx;
      for (long j : pole.indices) idx += (idx.empty() ? "" : " ") + std::to_string(j);
      res.rows.push_back(RowBuilder(p)
                             .integer("m", m)
                             .text("beta", b.str())
                             .real("pole", pole.value)
                             .text("indices", idx)
                             .integer("multiplicity", static_cast<long>(pole.indices.size()))
                             .boolean("coincident", pole.coincident())
                             .done());
    }
    return CS_OK;
  });
}

cs_status cs_verify(cs_context* ctx, const char* suite, long max_m, cs_result** out) {
  return guarded(ctx, out, [&](cs_result& res) {
    const VerifyReport report = run_suite(parse_suite(suite && *suite ? suite : "all"), max_m);
    for (const auto& c : report.checks) {
      res.rows.push_back(RowBuilder(ctx->precision)
                             .text("id", c.id)
                             .text("name", c.name)
                             .boolean("passed", c.passed)
                             .text("detail", c.detail)
                             .done());
    }
    long failed = 0;
    for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
    return cross_check(ctx, failed == 0, std::to_string(failed) + " verification check(s) failed");
  });
}

cs_status cs_table(cs_context* ctx, const char* kind, long m_lo, long m_hi, long r, const char* shift,
                   long n_lo, long n_hi, unsigned threads, cs_result** out) {
  return guarded(ctx, out, [&](cs_result& res) {
    const Precision p = ctx->precision;
    const SumKind k = parse_sum_kind(need(kind, "kind"));
    const Rational sh = shift && *shift ? parse_rational(shift, "shift") : Rational();
    if (m_lo > m_hi || n_lo > n_hi) throw std::invalid_argument("empty range");
    check_positive(n_lo, "n");
    std::vector<SumSpec> specs;
    for (long m = m_lo; m <= m_hi; ++m) {
      for (long rr = r < 0 ? 0 : r; rr <= (r < 0 ? m - 1 : r); ++rr) {
        for (long n = n_lo; n <= n_hi; ++n) {
          specs.push_back({k, m, rr, sh, n});
          validate(specs.back());
        }
      }
    }
    std::vector<Row> rows(specs.size());
    std::vector<char> ok(specs.size(), 1);
    const auto work = [&](std::size_t i) {
      const SumSpec& spec = specs[i];
      const SumResult c = closed_sum(spec, p);
      const SumResult d = direct_sum(spec, p);
      const Real delta = (c.value - d.value).abs();
      ok[i] = delta <= magnitude_bound(c.value, d.value, p);
      rows[i] = RowBuilder(p)
                    .text("kind", to_string(spec.kind))
                    .integer("m", spec.m)
                    .integer("r", spec.r)
                    .text("shift", spec.shift.str())
                    .integer("n", spec.power)
                    .complex("value", c.value, c.exact)
                    .real("delta", delta)
                    .done();
    };
    unsigned nthreads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(std::max<std::size_t>(1, specs.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next++) < specs.size();) work(i);
      }));
    }
    for (auto& f : pool) f.get();
    res.rows = std::move(rows);
    const bool all_ok = std::all_of(ok.begin(), ok.end(), [](char v) { return v != 0; });
    return cross_check(ctx, all_ok, "closed form and direct sum disagree beyond the error budget");
  });
}

void cs_result_free(cs_result* result) { delete result; }

size_t cs_result_row_count(const cs_result* result) { return result ? result->rows.size() : 0; }

namespace {
const Field* field_at(const cs_result* result, size_t row, size_t field) {
  if (!result || row >= result->rows.size() || field >= result->rows[row].size()) return nullptr;
  return &result->rows[row][field];
}
}  // namespace

size_t cs_result_field_count(const cs_result* result, size_t row) {
  return result && row < result->rows.size() ? result->rows[row].size() : 0;
}

const char* cs_result_field_name(const cs_result* result, size_t row, size_t field) {
  const Field* f = field_at(result, row, field);
  return f ? f->name.c_str() : nullptr;
}

cs_field_type cs_result_field_type(const cs_result* result, size_t row, size_t field) {
  const Field* f = field_at(result, row, field);
  return f ? f->type : CS_FIELD_TEXT;
}

const char* cs_result_field_text(const cs_result* result, size_t row, size_t field) {
  const Field* f = field_at(result, row, field);
  return f ? f->text.c_str() : nullptr;
}

const char* cs_result_field_re(const cs_result* result, size_t row, size_t field) {
  const Field* f = field_at(result, row, field);
  return f && (f->type == CS_FIELD_REAL || f->type == CS_FIELD_COMPLEX) ? f->re.c_str() : nullptr;
}

const char* cs_result_field_im(const cs_result* result, size_t row, size_t field) {
  const Field* f = field_at(result, row, field);
  return f && (f->type == CS_FIELD_REAL || f->type == CS_FIELD_COMPLEX) ? f->im.c_str() : nullptr;
}

const char* cs_result_field_exact(const cs_result* result, size_t row, size_t field) {
  const Field* f = field_at(result, row, field);
  return f && f->exact ? f->exact->c_str() : nullptr;
}

}  // extern "C"
