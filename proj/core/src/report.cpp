#include "numsgp/report.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "numsgp/errors.hpp"

namespace numsgp::report {

namespace {

std::string join_generators(const std::vector<std::int64_t>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(gens[i]);
  }
  return out;
}

std::string opt_to_string(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string opt_to_string(const std::optional<bool>& v) {
  if (!v) return {};
  return *v ? "true" : "false";
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::optional<std::int64_t> parse_opt_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stoll(s);
}

std::optional<bool> parse_opt_bool(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s == "true" || s == "1";
}

}  // namespace

std::int64_t SweepReport::mismatches() const {
  std::int64_t n = 0;
  for (const SweepRow& row : rows) {
    if (row.precond && !row.anomaly && row.match && !*row.match) ++n;
  }
  return n;
}

std::int64_t SweepReport::anomalies() const {
  std::int64_t n = 0;
  for (const SweepRow& row : rows) {
    if (row.anomaly) ++n;
  }
  return n;
}

std::int64_t SweepReport::precondition_satisfied() const {
  std::int64_t n = 0;
  for (const SweepRow& row : rows) {
    if (row.precond) ++n;
  }
  return n;
}

void sort_rows(SweepReport& report) {
  std::sort(report.rows.begin(), report.rows.end(),
            [](const SweepRow& x, const SweepRow& y) {
              const auto key = [](const SweepRow& row) {
                return std::tie(row.a, row.d, row.generators, row.formula_id,
                                row.q, row.r);
              };
              return key(x) < key(y);
            });
}

std::string to_csv(const SweepReport& report) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const SweepRow& row : report.rows) {
    out += join_generators(row.generators);
    out += ';';
    out += opt_to_string(row.a) + ';' + opt_to_string(row.d) + ';' +
           opt_to_string(row.q) + ';' + opt_to_string(row.r) + ';';
    out += row.formula_id;
    out += ';';
    out += row.precond ? "true" : "false";
    out += ';';
    out += opt_to_string(row.formula_value) + ';' +
           opt_to_string(row.oracle_value) + ';';
    out += opt_to_string(row.match);
    out += ';';
    out += row.anomaly ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : report.rows) {
    nlohmann::ordered_json j;
    j["generators"] = row.generators;
    j["a"] = row.a ? nlohmann::ordered_json(*row.a) : nullptr;
    j["d"] = row.d ? nlohmann::ordered_json(*row.d) : nullptr;
    j["q"] = row.q ? nlohmann::ordered_json(*row.q) : nullptr;
    j["r"] = row.r ? nlohmann::ordered_json(*row.r) : nullptr;
    j["formula_id"] = row.formula_id;
    j["precond"] = row.precond;
    j["formula_value"] =
        row.formula_value ? nlohmann::ordered_json(*row.formula_value) : nullptr;
    j["oracle_value"] =
        row.oracle_value ? nlohmann::ordered_json(*row.oracle_value) : nullptr;
    j["match"] = row.match ? nlohmann::ordered_json(*row.match) : nullptr;
    j["anomaly"] = row.anomaly;
    rows.push_back(std::move(j));
  }
  nlohmann::ordered_json doc;
  doc["family"] = report.family;
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"total", report.rows.size()},
                    {"precondition_satisfied", report.precondition_satisfied()},
                    {"mismatches", report.mismatches()},
                    {"anomalies", report.anomalies()}};
  return doc.dump(2) + "\n";
}

SweepReport parse_csv(std::istream& in) {
  SweepReport report;
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    fail(errc::precondition_failed, "unrecognized CSV header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ';');
    if (fields.size() != 11) {
      fail(errc::precondition_failed,
           "expected 11 fields, got " + std::to_string(fields.size()));
    }
    SweepRow row;
    for (const std::string& g : split(fields[0], ',')) {
      if (!g.empty()) row.generators.push_back(std::stoll(g));
    }
    row.a = parse_opt_int(fields[1]);
    row.d = parse_opt_int(fields[2]);
    row.q = parse_opt_int(fields[3]);
    row.r = parse_opt_int(fields[4]);
    row.formula_id = fields[5];
    row.precond = fields[6] == "true";
    row.formula_value = parse_opt_int(fields[7]);
    row.oracle_value = parse_opt_int(fields[8]);
    row.match = parse_opt_bool(fields[9]);
    row.anomaly = fields[10] == "true";
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace numsgp::report
