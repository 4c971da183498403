#include "jointmeas/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "jointmeas/catalog.hpp"

namespace jointmeas {

namespace {

std::string format_double(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string tuple_key(const JointObservable& g, const OutcomeTuple& t) {
  std::string key;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) key += ',';
    key += g.slots[i][static_cast<std::size_t>(t[i])];
  }
  return key;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

void append_matrix(std::string& out, const Matrix& m) {
  out += '[';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r > 0) out += ',';
    out += '[';
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ',';
      out += '[';
      out += format_double_json(m(r, c).real());
      out += ',';
      out += format_double_json(m(r, c).imag());
      out += ']';
    }
    out += ']';
  }
  out += ']';
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

int family_size(const ConfigRef& config) {
  switch (config.kind) {
    case ConfigKind::mub:
      return config.mub_dim;
    default:
      return static_cast<int>(config.qubit.targets.size());
  }
}

struct TableRow {
  std::string id;
  int m_or_d;
  double lambda_construction;
  double lambda_witness;
  bool tight;
};

std::vector<TableRow> build_table(const std::vector<std::string>& ids) {
  std::map<std::string, TableRow> rows;
  for (const std::string& id : ids) {
    const WitnessReport report = tightness_report(id);
    const ConfigRef config = parse_config_id(id);
    rows[id] = TableRow{id, family_size(config), report.lambda_construction,
                        report.lambda_witness, report.tight};
  }
  std::vector<TableRow> out;
  out.reserve(rows.size());
  for (auto& [id, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace

std::string format_double_json(double v) { return format_double(v, "%.17g"); }

std::string format_double_csv(double v) { return format_double(v, "%.12g"); }

std::string povm_to_json(const JointObservable& g) {
  std::map<std::string, const Matrix*> keyed;
  for (const auto& [t, e] : g.effects) {
    keyed.emplace(tuple_key(g, t), &e);
  }
  std::string out = "{\"dim\":" + std::to_string(g.dim) + ",\"effects\":{";
  bool first = true;
  for (const auto& [key, e] : keyed) {
    if (!first) out += ',';
    first = false;
    out += '"' + json_escape(key) + "\":";
    append_matrix(out, *e);
  }
  out += "},\"slots\":[";
  for (std::size_t s = 0; s < g.slots.size(); ++s) {
    if (s > 0) out += ',';
    out += '[';
    for (std::size_t i = 0; i < g.slots[s].size(); ++i) {
      if (i > 0) out += ',';
      out += '"' + json_escape(g.slots[s][i]) + '"';
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

JointObservable povm_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("povm_from_json: parse error: ") +
                             e.what());
  }
  try {
    JointObservable g;
    g.dim = doc.at("dim").get<Eigen::Index>();
    if (g.dim <= 0) throw std::runtime_error("dim must be positive");
    for (const auto& alphabet : doc.at("slots")) {
      g.slots.push_back(alphabet.get<std::vector<std::string>>());
    }
    for (const auto& [key, value] : doc.at("effects").items()) {
      const std::vector<std::string> labels = split(key, ',');
      if (labels.size() != g.slots.size()) {
        throw std::runtime_error("tuple key arity mismatch: '" + key + "'");
      }
      OutcomeTuple t(labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& alphabet = g.slots[i];
        const auto it = std::find(alphabet.begin(), alphabet.end(), labels[i]);
        if (it == alphabet.end()) {
          throw std::runtime_error("unknown outcome label '" + labels[i] + "'");
        }
        t[i] = static_cast<int>(it - alphabet.begin());
      }
      Matrix m(g.dim, g.dim);
      if (value.size() != static_cast<std::size_t>(g.dim)) {
        throw std::runtime_error("effect row count mismatch");
      }
      for (Eigen::Index r = 0; r < g.dim; ++r) {
        const auto& row = value.at(static_cast<std::size_t>(r));
        if (row.size() != static_cast<std::size_t>(g.dim)) {
          throw std::runtime_error("effect column count mismatch");
        }
        for (Eigen::Index c = 0; c < g.dim; ++c) {
          const auto& entry = row.at(static_cast<std::size_t>(c));
          if (entry.size() != 2) {
            throw std::runtime_error("matrix entries must be [re, im] pairs");
          }
          const double re = entry.at(0).get<double>();
          const double im = entry.at(1).get<double>();
          if (!std::isfinite(re) || !std::isfinite(im)) {
            throw std::runtime_error("matrix entries must be finite");
          }
          m(r, c) = Complex(re, im);
        }
      }
      if (!g.effects.emplace(std::move(t), std::move(m)).second) {
        throw std::runtime_error("duplicate tuple key '" + key + "'");
      }
    }
    if (g.effects.empty()) throw std::runtime_error("no effects");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("povm_from_json: bad document: ") +
                             e.what());
  }
}

JointObservable as_joint(const Observable& obs) {
  JointObservable g;
  g.dim = obs.dim();
  g.slots = {obs.outcomes};
  for (std::size_t i = 0; i < obs.effects.size(); ++i) {
    g.effects.emplace(OutcomeTuple{static_cast<int>(i)}, obs.effects[i]);
  }
  return g;
}

std::string witness_report_to_json(const WitnessReport& report) {
  std::string out = "{\"config\":\"" + json_escape(report.config) + "\"";
  out += ",\"gap\":" + format_double_json(report.gap());
  out += ",\"lambda_construction\":" +
         format_double_json(report.lambda_construction);
  out += ",\"lambda_witness\":" + format_double_json(report.lambda_witness);
  out += std::string(",\"tight\":") + (report.tight ? "true" : "false");
  out += "}\n";
  return out;
}

std::string threshold_table_csv(const std::vector<std::string>& ids) {
  std::string out = "config,M_or_d,lambda_construction,lambda_witness,tight\n";
  for (const TableRow& row : build_table(ids)) {
    out += row.id + ',' + std::to_string(row.m_or_d) + ',' +
           format_double_csv(row.lambda_construction) + ',' +
           format_double_csv(row.lambda_witness) + ',' +
           (row.tight ? "true" : "false") + '\n';
  }
  return out;
}

std::string threshold_table_json(const std::vector<std::string>& ids) {
  std::string out = "[";
  bool first = true;
  for (const TableRow& row : build_table(ids)) {
    if (!first) out += ',';
    first = false;
    out += "{\"config\":\"" + json_escape(row.id) + "\"";
    out += ",\"M_or_d\":" + std::to_string(row.m_or_d);
    out += ",\"lambda_construction\":" +
           format_double_json(row.lambda_construction);
    out += ",\"lambda_witness\":" + format_double_json(row.lambda_witness);
    out += std::string(",\"tight\":") + (row.tight ? "true" : "false");
    out += "}";
  }
  out += "]\n";
  return out;
}

}  // namespace jointmeas
