#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclespec.h"

namespace cyclespec_cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Job {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  unsigned long precision_bits = 0;
  std::string format = "text";
  std::string out_file;
};

struct FieldView {
  std::string name;
  cs_field_type type;
  std::string text;
  std::string re;
  std::string im;
  const char* exact;  // owned by the result
};

using Rows = std::vector<std::vector<FieldView>>;

Rows collect(const cs_result* res) {
  Rows rows;
  for (size_t r = 0; r < cs_result_row_count(res); ++r) {
    std::vector<FieldView> row;
    for (size_t f = 0; f < cs_result_field_count(res, r); ++f) {
      const cs_field_type type = cs_result_field_type(res, r, f);
      const char* re = cs_result_field_re(res, r, f);
      const char* im = cs_result_field_im(res, r, f);
      row.push_back({cs_result_field_name(res, r, f), type, cs_result_field_text(res, r, f), re ? re : "",
                     im ? im : "", cs_result_field_exact(res, r, f)});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json job_json(const Job& job) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : job.params) params[k] = v;
  return {{"command", job.command}, {"parameters", params}, {"precision_bits", job.precision_bits},
          {"format", job.format}};
}

std::string render_json(const Job& job, const Rows& rows, cs_status status, const std::string& message) {
  ordered_json doc;
  doc["job"] = job_json(job);
  doc["status"] = status == CS_OK ? "ok" : "verification_failed";
  if (!message.empty()) doc["message"] = message;
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json o = ordered_json::object();
    for (const auto& f : row) {
      switch (f.type) {
        case CS_FIELD_INTEGER: o[f.name] = std::stol(f.text); break;
        case CS_FIELD_BOOL: o[f.name] = f.text == "true"; break;
        case CS_FIELD_COMPLEX: {
          ordered_json c = {{"re", f.re}, {"im", f.im}};
          if (f.exact) c["exact"] = f.exact;
          o[f.name] = c;
          break;
        }
        default: o[f.name] = f.text;
      }
    }
    arr.push_back(std::move(o));
  }
  doc["rows"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string csv_cell(const std::string& s, bool force_quote) {
  const bool quote = force_quote || s.find_first_of(",\"\n ") != std::string::npos;
  if (!quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Rows& rows) {
  std::ostringstream os;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& f : rows.front()) {
    os << (first ? "" : ",") << f.name;
    if (f.type == CS_FIELD_COMPLEX) os << "," << f.name << "_exact";
    first = false;
  }
  os << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& f : row) {
      os << (first ? "" : ",") << csv_cell(f.text, f.type == CS_FIELD_COMPLEX);
      if (f.type == CS_FIELD_COMPLEX) os << "," << (f.exact ? f.exact : "");
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

std::string render_text(const Job& job, const Rows& rows, cs_status status, const std::string& message) {
  std::ostringstream os;
  os << "# " << job.command;
  for (const auto& [k, v] : job.params) os << " " << k << "=" << v;
  os << " precision_bits=" << job.precision_bits << "\n";
  if (job.command == "verify") {
    for (const auto& row : rows) {
      std::string id, name, passed, detail;
      for (const auto& f : row) {
        if (f.name == "id") id = f.text;
        if (f.name == "name") name = f.text;
        if (f.name == "passed") passed = f.text;
        if (f.name == "detail") detail = f.text;
      }
      os << (passed == "true" ? "PASS " : "FAIL ") << id << " " << name << ": " << detail << "\n";
    }
  } else {
    std::size_t width = 0;
    for (const auto& row : rows) {
      for (const auto& f : row) width = std::max(width, f.name.size());
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r) os << "\n";
      for (const auto& f : rows[r]) {
        os << "  " << f.name << std::string(width - f.name.size(), ' ') << "  " << f.text;
        if (f.exact) os << "  (exact " << f.exact << ")";
        os << "\n";
      }
    }
  }
  if (status != CS_OK) os << "verification failed: " << message << "\n";
  return os.str();
}

std::pair<long, long> parse_range(const std::string& s, const char* what) {
  try {
    const auto colon = s.find(':');
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    const std::string a = s.substr(0, colon);
    const std::string b = s.substr(colon + 1);
    const long lo = std::stol(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const long hi = std::stol(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string("--") + what, "expected an integer or lo:hi, got '" + s + "'");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted trigonometric sums, heat kernels, resolvents and spectral L-values on cycle graphs",
               "cyclespec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cs_version());

  Job job;
  std::string kind, beta, alpha, method, family = "L", route = "all", chr, t, s_value, norm = "kernel",
                                        horizon, suite = "all", m_range, r_spec = "all", n_range;
  long m = 0, r = 0, n = 1, count = 6, x = 0, y = 0, max_m = 0;
  unsigned threads = 0;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--precision-bits", job.precision_bits,
                    "Working precision in bits (default: CYCLESPEC_PRECISION_BITS or 128)");
    sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", job.out_file, "Write output to FILE instead of stdout");
  };
  const auto shift_opts = [&](CLI::App* sub) {
    auto* b = sub->add_option("--beta", beta, "Shift beta as p/q or decimal (exact)");
    auto* a = sub->add_option("--alpha", alpha, "Shift alpha (secant kinds); same as --beta");
    b->excludes(a);
  };

  auto* sum = app.add_subcommand("sum", "Evaluate one twisted trigonometric sum");
  sum->add_option("--kind", kind, "Sum kind")->required();
  sum->add_option("--m", m, "Cycle length m")->required();
  sum->add_option("--r", r, "Additive twist r");
  shift_opts(sum);
  sum->add_option("--n", n, "Power n")->required();
  method = "both";
  sum->add_option("--method", method, "closed, direct or both")->check(CLI::IsMember({"closed", "direct", "both"}));
  common(sum);

  auto* series = app.add_subcommand("series", "Closed-form values for powers 1..count");
  series->add_option("--kind", kind, "Sum kind")->required();
  series->add_option("--m", m, "Cycle length m")->required();
  series->add_option("--r", r, "Additive twist r");
  shift_opts(series);
  series->add_option("--count", count, "Number of powers");
  common(series);

  auto* lvalue = app.add_subcommand("lvalue", "Spectral L-value of a Dirichlet character");
  lvalue->add_option("--m", m, "Modulus (optional when --char is m:index)");
  lvalue->add_option("--char", chr, "Character index, or m:index")->required();
  lvalue->add_option("--n", n, "Order n")->required();
  lvalue->add_option("--family", family, "L, tilde or hat")->check(CLI::IsMember({"L", "tilde", "hat"}));
  lvalue->add_option("--route", route, "Route name or all");
  common(lvalue);

  auto* characters = app.add_subcommand("characters", "List the Dirichlet characters mod m");
  characters->add_option("--m", m, "Modulus")->required();
  common(characters);

  auto* heat = app.add_subcommand("heat", "Twisted heat kernel on the m-cycle");
  heat->add_option("--m", m, "Cycle length m")->required();
  shift_opts(heat);
  heat->add_option("--t", t, "Time t >= 0 (p/q or decimal)")->required();
  heat->add_option("--x", x, "Vertex x");
  heat->add_option("--y", y, "Vertex y");
  method = "both";
  heat->add_option("--method", method, "image, spectral or both")->check(CLI::IsMember({"image", "spectral", "both"}));
  common(heat);

  auto* resolvent = app.add_subcommand("resolvent", "Resolvent kernel of the twisted Laplacian");
  resolvent->add_option("--m", m, "Cycle length m")->required();
  shift_opts(resolvent);
  resolvent->add_option("--x", x, "Vertex x");
  resolvent->add_option("--y", y, "Vertex y");
  resolvent->add_option("--s", s_value, "Spectral parameter a+bi")->required();
  resolvent->add_option("--norm", norm, "kernel or cancelled")->check(CLI::IsMember({"kernel", "cancelled"}));
  resolvent->add_option("--laplace-horizon", horizon, "Also integrate the heat kernel up to this time");
  common(resolvent);

  auto* poles = app.add_subcommand("poles", "Poles of the resolvent with multiplicities");
  poles->add_option("--m", m, "Cycle length m")->required();
  shift_opts(poles);
  common(poles);

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", suite, "acceptance, invariants or all")
      ->check(CLI::IsMember({"acceptance", "invariants", "all"}));
  verify->add_option("--max-m", max_m, "Cap every modulus range (0 keeps the stated ranges)");
  common(verify);

  auto* table = app.add_subcommand("table", "Batch table of sums with direct cross-checks");
  table->add_option("--kind", kind, "Sum kind")->required();
  table->add_option("--m", m_range, "m or lo:hi")->required();
  table->add_option("--r", r_spec, "r or all");
  shift_opts(table);
  table->add_option("--n", n_range, "n or lo:hi")->required();
  table->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const std::string shift = !alpha.empty() ? alpha : beta;
  const char* shift_name = !alpha.empty() ? "alpha" : "beta";
  const auto ctx = std::unique_ptr<cs_context, void (*)(cs_context*)>(cs_context_new(job.precision_bits),
                                                                       cs_context_free);
  if (!ctx) {
    err << "error: precision must be an integer of at least 53 bits (check --precision-bits and "
           "CYCLESPEC_PRECISION_BITS)\n";
    return 2;
  }
  job.precision_bits = cs_context_precision(ctx.get());

  cs_result* raw = nullptr;
  cs_status status = CS_OK;
  const auto P = [&](const char* k, const std::string& v) { job.params.emplace_back(k, v); };
  try {
    if (sum->parsed()) {
      job.command = "sum";
      P("kind", kind), P("m", std::to_string(m)), P("r", std::to_string(r)), P(shift_name, shift.empty() ? "0" : shift),
          P("n", std::to_string(n)), P("method", method);
      status = cs_sum(ctx.get(), kind.c_str(), m, r, shift.c_str(), n, method.c_str(), &raw);
    } else if (series->parsed()) {
      job.command = "series";
      P("kind", kind), P("m", std::to_string(m)), P("r", std::to_string(r)), P(shift_name, shift.empty() ? "0" : shift),
          P("count", std::to_string(count));
      status = cs_series(ctx.get(), kind.c_str(), m, r, shift.c_str(), count, &raw);
    } else if (lvalue->parsed()) {
      job.command = "lvalue";
      long index = 0;
      const auto colon = chr.find(':');
      try {
        std::size_t used = 0;
        if (colon != std::string::npos) {
          const long cm = std::stol(chr.substr(0, colon), &used);
          if (used != colon) throw std::invalid_argument(chr);
          if (m != 0 && m != cm) throw CLI::ValidationError("--char", "modulus in --char differs from --m");
          m = cm;
          const std::string rest = chr.substr(colon + 1);
          index = std::stol(rest, &used);
          if (used != rest.size()) throw std::invalid_argument(chr);
        } else {
          index = std::stol(chr, &used);
          if (used != chr.size()) throw std::invalid_argument(chr);
        }
      } catch (const CLI::ValidationError&) {
        throw;
      } catch (const std::exception&) {
        throw CLI::ValidationError("--char", "expected an index or m:index, got '" + chr + "'");
      }
      if (m == 0) throw CLI::ValidationError("--m", "modulus required (use --m or --char m:index)");
      P("family", family), P("m", std::to_string(m)), P("char", std::to_string(index)), P("n", std::to_string(n)),
          P("route", route);
      status = cs_lvalue(ctx.get(), family.c_str(), m, index, n, route.c_str(), &raw);
    } else if (characters->parsed()) {
      job.command = "characters";
      P("m", std::to_string(m));
      status = cs_characters(ctx.get(), m, &raw);
    } else if (heat->parsed()) {
      job.command = "heat";
      P("m", std::to_string(m)), P("beta", shift.empty() ? "0" : shift), P("t", t), P("x", std::to_string(x)),
          P("y", std::to_string(y)), P("method", method);
      status = cs_heat(ctx.get(), m, shift.c_str(), t.c_str(), x, y, method.c_str(), &raw);
    } else if (resolvent->parsed()) {
      job.command = "resolvent";
      P("m", std::to_string(m)), P("beta", shift.empty() ? "0" : shift), P("x", std::to_string(x)),
          P("y", std::to_string(y)), P("s", s_value), P("norm", norm);
      if (!horizon.empty()) P("laplace_horizon", horizon);
      status = cs_resolvent(ctx.get(), m, shift.c_str(), x, y, s_value.c_str(), norm.c_str(), horizon.c_str(), &raw);
    } else if (poles->parsed()) {
      job.command = "poles";
      P("m", std::to_string(m)), P("beta", shift.empty() ? "0" : shift);
      status = cs_poles(ctx.get(), m, shift.c_str(), &raw);
    } else if (verify->parsed()) {
      job.command = "verify";
      P("suite", suite), P("max_m", std::to_string(max_m));
      status = cs_verify(ctx.get(), suite.c_str(), max_m, &raw);
    } else if (table->parsed()) {
      job.command = "table";
      const auto [mlo, mhi] = parse_range(m_range, "m");
      const auto [nlo, nhi] = parse_range(n_range, "n");
      long rr = -1;
      if (r_spec != "all") rr = parse_range(r_spec, "r").first;
      P("kind", kind), P("m", m_range), P("r", r_spec), P(shift_name, shift.empty() ? "0" : shift), P("n", n_range);
      status = cs_table(ctx.get(), kind.c_str(), mlo, mhi, rr, shift.c_str(), nlo, nhi, threads, &raw);
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const std::unique_ptr<cs_result, void (*)(cs_result*)> res(raw, cs_result_free);

  if (status != CS_OK && status != CS_ERR_VERIFY) {
    err << "error: " << cs_last_error(ctx.get()) << "\n";
    return status == CS_ERR_INTERNAL ? 1 : 2;
  }
  const std::string message = status == CS_ERR_VERIFY ? cs_last_error(ctx.get()) : "";
  const Rows rows = collect(res.get());
  std::string text;
  if (job.format == "json") {
    text = render_json(job, rows, status, message);
  } else if (job.format == "csv") {
    text = render_csv(rows);
  } else {
    text = render_text(job, rows, status, message);
  }
  if (!job.out_file.empty()) {
    std::ofstream file(job.out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << job.out_file << " for writing\n";
      return 2;
    }
    file << text;
  } else {
    out << text;
  }
  if (status == CS_ERR_VERIFY) {
    err << "verification failed: " << message << "\n";
    return 3;
  }
  return 0;
}

}  // namespace cyclespec_cli
