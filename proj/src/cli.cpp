#include "severi/cli.hpp"

#include "severi/errors.hpp"
#include "severi/moduli.hpp"
#include "severi/session.hpp"
#include "severi/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>

namespace severi {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Table, Csv, Json };

struct CommonArgs {
  std::string format = "table";
  std::string cache_path;
  unsigned parallelism = 0;
  bool no_timings = false;
  bool verify_cache = false;
};

struct ValueArgs {
  int d = 0;
  int delta = 0;
  std::string alpha;
  std::string beta;
  bool alpha_given = false;
  bool beta_given = false;
  bool irreducible = false;
  bool verify = false;
};

struct SlopeArgs {
  int g_min = 2;
  int g_max = 15;
};

struct CountsArgs {
  int d = 0;
  int delta = 0;
};

struct PolyfitArgs {
  int delta = 0;
  std::string quantity = "L";
  int d_from = 0;
  int d_to = 0;
};

// Output sink shared by the commands: table/csv text goes straight to `out`,
// json accumulates into `doc` and is printed once at the end.
struct Output {
  Format format;
  std::ostream& out;
  Json doc = Json::object();
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
  out << '\n';
}

void aligned_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

Json exact_json(const ExactScalar& v) { return Json{{"exact", v.str()}, {"decimal_2dp", v.to_decimal(2)}}; }

Json sequence_json(const TangencySequence& s) {
  Json a = Json::array();
  for (int x : s.entries()) a.push_back(x);
  return a;
}

const char* verdict_name(Verdict v) { return v == Verdict::Match ? "match" : "mismatch"; }
const char* kind_name(ReportKind k) { return k == ReportKind::Check ? "check" : "audit"; }

void emit_reports(Output& o, const std::vector<OracleReport>& reports) {
  switch (o.format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : reports)
        arr.push_back(Json{{"name", r.name},
                           {"inputs", r.inputs},
                           {"expected", r.expected.str()},
                           {"actual", r.actual.str()},
                           {"verdict", verdict_name(r.verdict)},
                           {"kind", kind_name(r.kind)},
                           {"note", r.note}});
      o.doc["verification"] = std::move(arr);
      o.doc["verification_passed"] = all_checks_pass(reports);
      break;
    }
    case Format::Csv:
      csv_row(o.out, {"name", "inputs", "expected", "actual", "verdict", "kind", "note"});
      for (const auto& r : reports)
        csv_row(o.out, {r.name, r.inputs, r.expected.str(), r.actual.str(), verdict_name(r.verdict),
                        kind_name(r.kind), r.note});
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> rows{{"name", "inputs", "expected", "actual", "verdict", "kind"}};
      for (const auto& r : reports) {
        std::string verdict = verdict_name(r.verdict);
        if (r.verdict == Verdict::Mismatch && r.kind == ReportKind::Audit) verdict += " (flagged)";
        if (!r.note.empty()) verdict += "; " + r.note;
        rows.push_back({r.name, r.inputs, r.expected.str(), r.actual.str(), verdict, kind_name(r.kind)});
      }
      aligned_table(o.out, rows);
      o.out << (all_checks_pass(reports) ? "verification: pass" : "verification: FAIL") << '\n';
      break;
    }
  }
}

int cmd_value(Session& s, Quantity q, const ValueArgs& a, Output& o) {
  SeveriKey key;
  ExactScalar v;
  if (a.irreducible) {
    if (q == Quantity::BNumber) throw UnsupportedCombination("--irreducible is not available for bnum");
    if (a.alpha_given || a.beta_given) throw ValidationError("--irreducible does not take --alpha/--beta");
    key = SeveriKey::plain(a.d, a.delta);
    v = q == Quantity::SeveriDegree ? s.irreducible().severi_degree_irr(a.d, a.delta)
                                    : s.irreducible().lambda_degree_irr(a.d, a.delta);
  } else {
    key.d = a.d;
    key.delta = a.delta;
    key.alpha = TangencySequence::parse_csv(a.alpha);
    key.beta = a.beta_given ? TangencySequence::parse_csv(a.beta) : TangencySequence{a.d};
    v = s.engine().evaluate(q, key);
  }

  switch (o.format) {
    case Format::Table: o.out << v.str() << '\n'; break;
    case Format::Csv:
      csv_row(o.out, {"quantity", "d", "delta", "alpha", "beta", "irreducible", "exact", "decimal_2dp"});
      csv_row(o.out, {std::string(quantity_code(q)), std::to_string(key.d), std::to_string(key.delta), key.alpha.csv(),
                      key.beta.csv(), a.irreducible ? "true" : "false", v.str(), v.to_decimal(2)});
      break;
    case Format::Json:
      o.doc["quantity"] = quantity_code(q);
      o.doc["d"] = key.d;
      o.doc["delta"] = key.delta;
      o.doc["alpha"] = sequence_json(key.alpha);
      o.doc["beta"] = sequence_json(key.beta);
      o.doc["irreducible"] = a.irreducible;
      o.doc["exact"] = v.str();
      o.doc["decimal_2dp"] = v.to_decimal(2);
      break;
  }

  if (!a.verify) return kExitOk;
  const auto reports = oracle_reports_for(s, q);
  if (o.format == Format::Csv) o.out << '\n';
  emit_reports(o, reports);
  return all_checks_pass(reports) ? kExitOk : kExitMismatch;
}

int cmd_slope_table(Session& s, const SlopeArgs& a, Output& o) {
  const auto rows = slope_table(s, a.g_min, a.g_max);
  auto opt_str = [](const std::optional<ExactScalar>& v) { return v ? v->str() : std::string{}; };
  auto opt_dec = [](const std::optional<ExactScalar>& v) { return v ? v->to_decimal(2) : std::string{}; };

  switch (o.format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json j{{"g", r.g}, {"d", r.d}, {"delta", r.delta}, {"rho", r.rho}};
        j["slope_exact"] = r.slope ? Json(r.slope->str()) : Json(nullptr);
        j["slope_2dp"] = r.slope ? Json(r.slope->to_decimal(2)) : Json(nullptr);
        j["bound"] = r.bound ? Json(r.bound->str()) : Json(nullptr);
        j["bound_2dp"] = r.bound ? Json(r.bound->to_decimal(2)) : Json(nullptr);
        if (!r.error.empty()) j["error"] = r.error;
        arr.push_back(std::move(j));
      }
      o.doc["rows"] = std::move(arr);
      break;
    }
    case Format::Csv:
      csv_row(o.out, {"g", "d", "delta", "rho", "slope_exact", "slope_2dp", "bound", "bound_2dp", "error"});
      for (const auto& r : rows)
        csv_row(o.out, {std::to_string(r.g), std::to_string(r.d), std::to_string(r.delta), std::to_string(r.rho),
                        opt_str(r.slope), opt_dec(r.slope), opt_str(r.bound), opt_dec(r.bound), r.error});
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> t{{"g", "d", "delta", "rho", "slope_exact", "slope_2dp", "bound"}};
      for (const auto& r : rows) {
        if (!r.error.empty()) {
          t.push_back({std::to_string(r.g), std::to_string(r.d), std::to_string(r.delta), std::to_string(r.rho),
                       "error: " + r.error});
          continue;
        }
        t.push_back({std::to_string(r.g), std::to_string(r.d), std::to_string(r.delta), std::to_string(r.rho),
                     opt_str(r.slope), opt_dec(r.slope), opt_dec(r.bound)});
      }
      aligned_table(o.out, t);
      break;
    }
  }
  return kExitOk;
}

int cmd_counts(Session& s, const CountsArgs& a, Output& o) {
  const SingularCounts c = singular_counts(s, a.d, a.delta);
  const std::vector<std::pair<const char*, const ExactScalar*>> items{
      {"CU", &c.cusps}, {"TN", &c.tacnodes}, {"TR", &c.triple_points}};
  switch (o.format) {
    case Format::Table:
      for (const auto& [name, v] : items) o.out << name << '=' << v->str() << '\n';
      break;
    case Format::Csv:
      csv_row(o.out, {"count", "d", "delta", "exact", "decimal_2dp"});
      for (const auto& [name, v] : items)
        csv_row(o.out, {name, std::to_string(a.d), std::to_string(a.delta), v->str(), v->to_decimal(2)});
      break;
    case Format::Json:
      o.doc["d"] = a.d;
      o.doc["delta"] = a.delta;
      for (const auto& [name, v] : items) o.doc[name] = exact_json(*v);
      break;
  }
  return kExitOk;
}

int cmd_polyfit(Session& s, const PolyfitArgs& a, Output& o) {
  const auto parsed = parse_quantity(a.quantity);
  if (!parsed) throw ValidationError("unknown quantity '" + a.quantity + "'");
  const Quantity q = *parsed;
  if (a.d_to < a.d_from) throw ValidationError("--d-to must be >= --d-from");
  std::vector<int> ds(static_cast<std::size_t>(a.d_to - a.d_from + 1));
  std::iota(ds.begin(), ds.end(), a.d_from);
  const PolyfitResult r = polyfit_check(s, a.delta, q, ds);

  switch (o.format) {
    case Format::Json: {
      o.doc["quantity"] = quantity_code(q);
      o.doc["delta"] = a.delta;
      o.doc["d_from"] = a.d_from;
      o.doc["d_to"] = a.d_to;
      Json coeffs = Json::array();
      for (const auto& c : r.fit.coefficients()) coeffs.push_back(c.str());
      o.doc["coefficients"] = std::move(coeffs);
      o.doc["polynomial"] = r.fit.str("d");
      o.doc["degree"] = r.fit.degree();
      o.doc["expected_degree"] = r.expected_degree;
      o.doc["degree_ok"] = r.degree_ok;
      o.doc["leading"] = r.fit.leading().str();
      if (r.expected_leading) o.doc["expected_leading"] = r.expected_leading->str();
      if (r.leading_ok) o.doc["leading_ok"] = *r.leading_ok;
      break;
    }
    case Format::Csv:
      csv_row(o.out, {"power", "coefficient"});
      for (std::size_t i = 0; i < r.fit.coefficients().size(); ++i)
        csv_row(o.out, {std::to_string(i), r.fit.coefficients()[i].str()});
      break;
    case Format::Table:
      o.out << "fit: " << r.fit.str("d") << '\n';
      o.out << "degree: " << r.fit.degree() << " (expected " << r.expected_degree << ") "
            << (r.degree_ok ? "ok" : "MISMATCH") << '\n';
      o.out << "leading: " << r.fit.leading().str();
      if (r.expected_leading)
        o.out << " (expected " << r.expected_leading->str() << ") " << (*r.leading_ok ? "ok" : "MISMATCH");
      o.out << '\n';
      break;
  }
  return kExitOk;
}

int cmd_verify(Session& s, Output& o) {
  const auto reports = run_oracle_suite(s);
  emit_reports(o, reports);
  return all_checks_pass(reports) ? kExitOk : kExitMismatch;
}

Format parse_format(const std::string& f) {
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  return Format::Table;
}

void add_value_options(CLI::App* sub, ValueArgs& a) {
  sub->add_option("--d", a.d, "degree")->required();
  sub->add_option("--delta", a.delta, "number of nodes")->required();
  sub->add_option("--alpha", a.alpha, "fixed contact orders, comma-separated from order 1");
  sub->add_option("--beta", a.beta, "moving contact orders, comma-separated from order 1 (default: d)");
  sub->add_flag("--irreducible", a.irreducible, "irreducible curves only");
  sub->add_flag("--verify", a.verify, "also run the matching oracle comparisons");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Severi degrees, Hodge degrees and slopes of families of nodal plane curves", "severi"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonArgs common;
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--cache-path", common.cache_path, "persistent memo file")->envname("SEVERI_CACHE");
  app.add_option("--parallelism", common.parallelism, "worker threads (0: all cores)");
  app.add_flag("--no-timings", common.no_timings, "omit elapsed time");
  app.add_flag("--verify-cache", common.verify_cache, "recompute every cached value before use");

  ValueArgs degree_args, lambda_args, bnum_args;
  auto* degree = app.add_subcommand("degree", "Severi degree N");
  add_value_options(degree, degree_args);
  auto* lambda = app.add_subcommand("lambda", "Hodge-bundle degree L");
  add_value_options(lambda, lambda_args);
  auto* bnum = app.add_subcommand("bnum", "B-number");
  add_value_options(bnum, bnum_args);

  SlopeArgs slope_args;
  auto* slopes = app.add_subcommand("slope-table", "slopes of the irreducible families by genus");
  slopes->add_option("--g-min", slope_args.g_min, "smallest genus");
  slopes->add_option("--g-max", slope_args.g_max, "largest genus");

  CountsArgs counts_args;
  auto* counts = app.add_subcommand("counts", "cuspidal, tacnodal and triple-point counts");
  counts->add_option("--d", counts_args.d, "degree")->required();
  counts->add_option("--delta", counts_args.delta, "number of nodes")->required();

  PolyfitArgs polyfit_args;
  auto* polyfit = app.add_subcommand("polyfit", "interpolate d -> Q^{d,delta}");
  polyfit->add_option("--delta", polyfit_args.delta, "number of nodes")->required();
  polyfit->add_option("--quantity", polyfit_args.quantity, "N, L or B")->check(CLI::IsMember({"N", "L", "B"}));
  polyfit->add_option("--d-from", polyfit_args.d_from, "first degree")->required();
  polyfit->add_option("--d-to", polyfit_args.d_to, "last degree")->required();

  auto* verify = app.add_subcommand("verify", "run every oracle comparison");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (auto* sub : {degree, lambda, bnum}) {
    ValueArgs& a = sub == degree ? degree_args : sub == lambda ? lambda_args : bnum_args;
    a.alpha_given = sub->count("--alpha") > 0;
    a.beta_given = sub->count("--beta") > 0;
  }

  const auto start = std::chrono::steady_clock::now();
  Output o{parse_format(common.format), out};
  try {
    auto store = std::make_shared<MemoStore>();
    const std::filesystem::path cache = common.cache_path;
    if (!cache.empty() && std::filesystem::exists(cache)) store->load(cache);
    if (common.verify_cache) {
      const auto bad = verify_memo(*store, common.parallelism);
      for (const auto& m : bad)
        err << "cache mismatch: " << format_record(m.stored) << " recomputes to " << m.recomputed.str() << '\n';
      if (!bad.empty()) return kExitMismatch;
    }
    Session session(common.parallelism, store);

    int code = kExitOk;
    if (degree->parsed())
      code = cmd_value(session, Quantity::SeveriDegree, degree_args, o);
    else if (lambda->parsed())
      code = cmd_value(session, Quantity::LambdaDegree, lambda_args, o);
    else if (bnum->parsed())
      code = cmd_value(session, Quantity::BNumber, bnum_args, o);
    else if (slopes->parsed())
      code = cmd_slope_table(session, slope_args, o);
    else if (counts->parsed())
      code = cmd_counts(session, counts_args, o);
    else if (polyfit->parsed())
      code = cmd_polyfit(session, polyfit_args, o);
    else if (verify->parsed())
      code = cmd_verify(session, o);

    if (!cache.empty()) store->save(cache);

    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.format == Format::Json) {
      if (!common.no_timings) o.doc["elapsed_ms"] = static_cast<std::int64_t>(ms);
      out << o.doc.dump(2) << '\n';
    } else if (!common.no_timings) {
      err << "elapsed_ms: " << static_cast<std::int64_t>(ms) << '\n';
    }
    return code;
  } catch (const std::invalid_argument& e) {
    // ValidationError, UnsupportedCombination and InsufficientPoints
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CacheLoadError& e) {
    err << "cache error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace severi
