#include "stherm/sweep.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "stherm/ergotropy.hpp"
#include "stherm/errors.hpp"

namespace stherm {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string describe(const std::exception &e) {
  if (const auto *err = dynamic_cast<const Error *>(&e)) return err->what();
  return std::string("Unexpected: ") + e.what();
}

}  // namespace

const std::vector<std::string_view> &result_row_fields() {
  static const std::vector<std::string_view> fields = {
      "t0",           "t",           "ergotropy",    "asymptotic_ergotropy",
      "excess_ergotropy", "e_ss",    "e_gibbs",      "s_ss",
      "s_gibbs",      "rel_entropy", "delta_s_sys",  "delta_s_bath",
      "erasure_cost", "lambda",      "classification", "h_sectors",
      "error"};
  return fields;
}

ResultRow evaluate_point(const ThermalModel &model, double t0, double t) {
  ResultRow row;
  row.t0 = t0;
  row.t = t;
  try {
    const Temperature temp0(t0), temp(t);
    const ThermoReport r = build_report(model, temp0, temp);
    row.e_ss = r.e_ss;
    row.e_gibbs = r.e_gibbs;
    row.s_ss = r.s_ss;
    row.s_gibbs = r.s_gibbs;
    row.rel_entropy = r.rel_ent_ss_gibbs;
    row.delta_s_sys = r.delta_s_sys;
    row.delta_s_bath = r.delta_s_bath;
    row.erasure_cost = r.erasure_cost;
    row.lambda = r.lambda;
    row.classification = r.classification;
    row.h_sectors = r.h_sectors;
  } catch (const std::exception &e) {
    row.e_ss = row.e_gibbs = row.s_ss = row.s_gibbs = row.rel_entropy = kNaN;
    row.delta_s_sys = row.delta_s_bath = row.erasure_cost = row.h_sectors = kNaN;
    row.ergotropy = row.asymptotic_ergotropy = row.excess_ergotropy = kNaN;
    row.error = describe(e);
    return row;
  }
  row.ergotropy = row.asymptotic_ergotropy = row.excess_ergotropy = kNaN;
  try {
    const Temperature temp0(t0), temp(t);
    const DensityMatrix rho_ss =
        s_thermalize(model, gibbs_state(model.hamiltonian(), temp0), temp);
    row.ergotropy = ergotropy(rho_ss, model.hamiltonian());
    row.asymptotic_ergotropy = asymptotic_ergotropy(rho_ss, model.hamiltonian());
    row.excess_ergotropy = row.asymptotic_ergotropy - row.ergotropy;
  } catch (const std::exception &e) {
    row.error = describe(e);
  }
  return row;
}

std::vector<ResultRow> run_sweep(const ThermalModel &model, const SweepGrid &grid,
                                 unsigned jobs) {
  grid.validate();
  const std::size_t nt = grid.t_values.size();
  const std::size_t total = grid.t0_values.size() * nt;
  std::vector<ResultRow> rows(total);

  auto compute = [&](std::size_t i) {
    rows[i] = evaluate_point(model, grid.t0_values[i / nt], grid.t_values[i % nt]);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) compute(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) compute(i);
    });
  for (auto &th : pool) th.join();
  return rows;
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw ValidationError("format must be 'csv' or 'json', got '" + std::string(text) + "'");
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_number(double v) { return std::isfinite(v) ? format_double(v) : std::string(); }

std::string csv_quote(const std::string &s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json json_number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<std::string> csv_fields(const ResultRow &r) {
  return {csv_number(r.t0),
          csv_number(r.t),
          csv_number(r.ergotropy),
          csv_number(r.asymptotic_ergotropy),
          csv_number(r.excess_ergotropy),
          csv_number(r.e_ss),
          csv_number(r.e_gibbs),
          csv_number(r.s_ss),
          csv_number(r.s_gibbs),
          csv_number(r.rel_entropy),
          csv_number(r.delta_s_sys),
          csv_number(r.delta_s_bath),
          csv_number(r.erasure_cost),
          r.lambda ? csv_number(*r.lambda) : std::string(),
          std::string(to_string(r.classification)),
          csv_number(r.h_sectors),
          csv_quote(r.error)};
}

json row_to_json(const ResultRow &r) {
  json j = json::object();
  j["t0"] = json_number(r.t0);
  j["t"] = json_number(r.t);
  j["ergotropy"] = json_number(r.ergotropy);
  j["asymptotic_ergotropy"] = json_number(r.asymptotic_ergotropy);
  j["excess_ergotropy"] = json_number(r.excess_ergotropy);
  j["e_ss"] = json_number(r.e_ss);
  j["e_gibbs"] = json_number(r.e_gibbs);
  j["s_ss"] = json_number(r.s_ss);
  j["s_gibbs"] = json_number(r.s_gibbs);
  j["rel_entropy"] = json_number(r.rel_entropy);
  j["delta_s_sys"] = json_number(r.delta_s_sys);
  j["delta_s_bath"] = json_number(r.delta_s_bath);
  j["erasure_cost"] = json_number(r.erasure_cost);
  j["lambda"] = r.lambda ? json_number(*r.lambda) : json(nullptr);
  j["classification"] = std::string(to_string(r.classification));
  j["h_sectors"] = json_number(r.h_sectors);
  j["error"] = r.error;
  return j;
}

}  // namespace

void emit(const std::vector<ResultRow> &rows, OutputFormat format, std::ostream &out) {
  if (rows.empty()) throw ValidationError("no rows to emit");
  if (format == OutputFormat::Csv) {
    const auto &names = result_row_fields();
    for (std::size_t k = 0; k < names.size(); ++k) out << (k ? "," : "") << names[k];
    out << "\r\n";
    for (const auto &r : rows) {
      const auto fields = csv_fields(r);
      for (std::size_t k = 0; k < fields.size(); ++k) out << (k ? "," : "") << fields[k];
      out << "\r\n";
    }
  } else {
    // Ordered keys: build the array text by hand so the field order follows
    // result_row_fields() rather than nlohmann's alphabetical object order.
    const auto &names = result_row_fields();
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const json j = row_to_json(rows[i]);
      out << "  {";
      for (std::size_t k = 0; k < names.size(); ++k) {
        const std::string key(names[k]);
        out << (k ? ", " : "") << json(key).dump() << ": " << j.at(key).dump();
      }
      out << (i + 1 < rows.size() ? "},\n" : "}\n");
    }
    out << "]\n";
  }
  if (!out) throw IoError("write failed");
}

std::string emit_to_string(const std::vector<ResultRow> &rows, OutputFormat format) {
  std::ostringstream out;
  emit(rows, format, out);
  return out.str();
}

namespace {

Classification parse_classification(const std::string &s) {
  for (auto c : {Classification::Amplified, Classification::Mitigated, Classification::BreakEven,
                 Classification::Undefined})
    if (to_string(c) == s) return c;
  throw ParseError("unknown classification '" + s + "'");
}

double number_or_nan(const json &j) { return j.is_null() ? kNaN : j.get<double>(); }

}  // namespace

std::vector<ResultRow> parse_rows_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(e.what());
  }
  if (!doc.is_array()) throw ParseError("expected a JSON array of rows");
  std::vector<ResultRow> rows;
  for (const auto &j : doc) {
    ResultRow r;
    r.t0 = number_or_nan(j.at("t0"));
    r.t = number_or_nan(j.at("t"));
    r.ergotropy = number_or_nan(j.at("ergotropy"));
    r.asymptotic_ergotropy = number_or_nan(j.at("asymptotic_ergotropy"));
    r.excess_ergotropy = number_or_nan(j.at("excess_ergotropy"));
    r.e_ss = number_or_nan(j.at("e_ss"));
    r.e_gibbs = number_or_nan(j.at("e_gibbs"));
    r.s_ss = number_or_nan(j.at("s_ss"));
    r.s_gibbs = number_or_nan(j.at("s_gibbs"));
    r.rel_entropy = number_or_nan(j.at("rel_entropy"));
    r.delta_s_sys = number_or_nan(j.at("delta_s_sys"));
    r.delta_s_bath = number_or_nan(j.at("delta_s_bath"));
    r.erasure_cost = number_or_nan(j.at("erasure_cost"));
    if (!j.at("lambda").is_null()) r.lambda = j.at("lambda").get<double>();
    r.classification = parse_classification(j.at("classification").get<std::string>());
    r.h_sectors = number_or_nan(j.at("h_sectors"));
    r.error = j.at("error").get<std::string>();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace stherm
