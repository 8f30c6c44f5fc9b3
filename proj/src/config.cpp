#include "stherm/config.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "stherm/errors.hpp"

namespace stherm {

using nlohmann::json;

std::string_view to_string(Spacing s) { return s == Spacing::Log ? "log" : "linear"; }

Spacing parse_spacing(std::string_view text) {
  if (text == "linear") return Spacing::Linear;
  if (text == "log") return Spacing::Log;
  throw ValidationError("spacing must be 'linear' or 'log', got '" + std::string(text) + "'");
}

ThermalModel ModelConfig::model() const {
  if (energies.has_value() == matrix.has_value())
    throw ValidationError("exactly one of 'energies' or 'matrix' must be given");
  try {
    HermitianOperator h;
    if (energies) {
      if (energies->empty()) throw ValidationError("'energies' is empty");
      for (std::size_t i = 0; i < energies->size(); ++i)
        if (!std::isfinite((*energies)[i]))
          throw ValidationError("energies[" + std::to_string(i) + "] is not finite");
      h = validate_hermitian(ComplexMatrix::diagonal(*energies));
    } else {
      if (matrix->dim() == 0) throw ValidationError("'matrix' is empty");
      h = validate_hermitian(*matrix);
    }
    const std::size_t dim = h.dim();
    return ThermalModel(std::move(h), SectorDecomposition(dim, sectors));
  } catch (const ValidationError &) {
    throw;
  } catch (const Error &e) {
    throw ValidationError(e.what());
  }
}

std::vector<double> axis_values(const AxisRange &range, Spacing spacing) {
  std::vector<double> out(range.count);
  if (range.count == 1) {
    out[0] = range.min;
    return out;
  }
  const double n = static_cast<double>(range.count - 1);
  for (std::size_t k = 0; k < range.count; ++k) {
    const double f = static_cast<double>(k) / n;
    if (spacing == Spacing::Linear)
      out[k] = range.min + (range.max - range.min) * f;
    else
      out[k] = range.min * std::exp(std::log(range.max / range.min) * f);
  }
  out.front() = range.min;
  out.back() = range.max;
  return out;
}

namespace {

void validate_range(const AxisRange &r, const char *axis) {
  std::ostringstream msg;
  if (r.count == 0) {
    msg << axis << " axis: point count must be positive";
  } else if (!(r.min > 0.0) || !std::isfinite(r.min) || !std::isfinite(r.max)) {
    msg << axis << " axis: temperatures must be positive and finite (min = " << r.min
        << ", max = " << r.max << ")";
  } else if (r.count > 1 && !(r.max > r.min)) {
    msg << axis << " axis: values must be ascending (min = " << r.min << ", max = " << r.max
        << ")";
  } else {
    return;
  }
  throw ValidationError(msg.str());
}

void validate_axis(const std::vector<double> &values, const char *axis) {
  if (values.empty()) throw ValidationError(std::string(axis) + " axis is empty");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!(values[k] > 0.0) || !std::isfinite(values[k])) {
      std::ostringstream msg;
      msg << axis << " axis: value " << values[k] << " is not a positive temperature";
      throw ValidationError(msg.str());
    }
    if (k > 0 && !(values[k] > values[k - 1])) {
      std::ostringstream msg;
      msg << axis << " axis: values not ascending at position " << k;
      throw ValidationError(msg.str());
    }
  }
}

}  // namespace

SweepGrid SweepGrid::from_ranges(const AxisRange &t0, const AxisRange &t, Spacing spacing) {
  validate_range(t0, "t0");
  validate_range(t, "t");
  SweepGrid g{axis_values(t0, spacing), axis_values(t, spacing), spacing};
  g.validate();
  return g;
}

void SweepGrid::validate() const {
  validate_axis(t0_values, "t0");
  validate_axis(t_values, "t");
}

namespace {

AxisRange parse_axis_spec(std::string_view part, const char *axis) {
  AxisRange r;
  std::string text(part);
  std::vector<std::string> fields;
  std::stringstream ss(text);
  std::string f;
  while (std::getline(ss, f, ':')) fields.push_back(f);
  if (fields.size() != 3)
    throw ValidationError(std::string(axis) + " grid spec must be min:max:n, got '" + text + "'");
  try {
    std::size_t pos = 0;
    r.min = std::stod(fields[0], &pos);
    if (pos != fields[0].size()) throw std::invalid_argument("min");
    r.max = std::stod(fields[1], &pos);
    if (pos != fields[1].size()) throw std::invalid_argument("max");
    const long long n = std::stoll(fields[2], &pos);
    if (pos != fields[2].size() || n <= 0) throw std::invalid_argument("n");
    r.count = static_cast<std::size_t>(n);
  } catch (const std::exception &) {
    throw ValidationError(std::string(axis) + " grid spec '" + text + "' is not min:max:n");
  }
  validate_range(r, axis);
  return r;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

AxisRange parse_axis_json(const json &j, const char *axis) {
  if (!j.is_object()) throw ValidationError(std::string("grid.") + axis + " must be an object");
  AxisRange r;
  if (j.contains("min")) r.min = j.at("min").get<double>();
  if (j.contains("max")) r.max = j.at("max").get<double>();
  if (j.contains("count")) {
    const auto &c = j.at("count");
    if (!c.is_number_integer() || c.get<long long>() <= 0)
      throw ValidationError(std::string("grid.") + axis + ".count must be a positive integer");
    r.count = c.get<std::size_t>();
  }
  validate_range(r, axis);
  return r;
}

Complex parse_entry(const json &e, std::size_t r, std::size_t c) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  std::ostringstream msg;
  msg << "matrix[" << r << "][" << c << "] must be a number or [re, im]";
  throw ValidationError(msg.str());
}

}  // namespace

std::pair<AxisRange, AxisRange> parse_grid_spec(std::string_view spec) {
  const auto comma = spec.find(',');
  if (comma == std::string_view::npos || spec.find(',', comma + 1) != std::string_view::npos)
    throw ValidationError("grid spec must be t0_min:t0_max:n,t_min:t_max:n");
  return {parse_axis_spec(spec.substr(0, comma), "t0"),
          parse_axis_spec(spec.substr(comma + 1), "t")};
}

LoadedConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    const auto [line, col] = line_column(text, e.byte);
    std::ostringstream msg;
    msg << "line " << line << ", column " << col << ": " << e.what();
    throw ParseError(msg.str());
  }
  if (!doc.is_object()) throw ValidationError("config root must be a JSON object");

  LoadedConfig out;
  try {
    out.model.name = doc.value("name", std::string("model"));
    if (doc.contains("energies")) {
      const auto &e = doc.at("energies");
      if (!e.is_array()) throw ValidationError("'energies' must be an array of numbers");
      std::vector<double> energies;
      for (const auto &v : e) {
        if (!v.is_number()) throw ValidationError("'energies' must be an array of numbers");
        energies.push_back(v.get<double>());
      }
      out.model.energies = std::move(energies);
    }
    if (doc.contains("matrix")) {
      const auto &m = doc.at("matrix");
      if (!m.is_array()) throw ValidationError("'matrix' must be an array of rows");
      std::vector<std::vector<Complex>> rows;
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (!m[r].is_array()) throw ValidationError("'matrix' must be an array of rows");
        std::vector<Complex> row;
        for (std::size_t c = 0; c < m[r].size(); ++c) row.push_back(parse_entry(m[r][c], r, c));
        rows.push_back(std::move(row));
      }
      try {
        out.model.matrix = ComplexMatrix::from_rows(rows);
      } catch (const NotSquare &e) {
        throw ValidationError(e.what());
      }
    }
    if (!doc.contains("sectors")) throw ValidationError("'sectors' is required");
    const auto &s = doc.at("sectors");
    if (!s.is_array()) throw ValidationError("'sectors' must be a list of index lists");
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (!s[k].is_array())
        throw ValidationError("sectors[" + std::to_string(k) + "] must be a list of indices");
      std::vector<std::size_t> idx;
      for (const auto &v : s[k]) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
          throw ValidationError("sectors[" + std::to_string(k) +
                                "] must contain non-negative integers");
        idx.push_back(v.get<std::size_t>());
      }
      out.model.sectors.push_back(std::move(idx));
    }
    if (doc.contains("grid")) {
      const auto &g = doc.at("grid");
      if (!g.is_object()) throw ValidationError("'grid' must be an object");
      if (g.contains("t0")) out.t0_range = parse_axis_json(g.at("t0"), "t0");
      if (g.contains("t")) out.t_range = parse_axis_json(g.at("t"), "t");
      if (g.contains("spacing")) out.spacing = parse_spacing(g.at("spacing").get<std::string>());
    }
  } catch (const json::exception &e) {
    throw ValidationError(std::string("schema: ") + e.what());
  }
  // Surface model invariant violations at load time.
  (void)out.model.model();
  return out;
}

LoadedConfig load_config(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace stherm
