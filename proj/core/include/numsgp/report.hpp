#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace numsgp::report {

// One compared instance. For table-valued comparisons (full Apery tables,
// parameter sets) the value columns carry a scalar representative and
// `match` reflects the complete comparison; see README for the per-family
// meaning.
struct SweepRow {
  std::vector<std::int64_t> generators;
  std::optional<std::int64_t> a, d, q, r;
  std::string formula_id;
  bool precond = false;
  std::optional<std::int64_t> formula_value;
  std::optional<std::int64_t> oracle_value;
  std::optional<bool> match;
  bool anomaly = false;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepReport {
  std::string family;
  std::vector<SweepRow> rows;

  // Rows violating their formula on satisfied preconditions; anomaly-flagged
  // rows are documented discrepancies, not failures.
  std::int64_t mismatches() const;
  std::int64_t anomalies() const;
  std::int64_t precondition_satisfied() const;
};

// Deterministic order: (a, d, generators), then formula id.
void sort_rows(SweepReport& report);

inline constexpr const char* kCsvHeader =
    "generators;a;d;q;r;formula_id;precond;formula_value;oracle_value;match;"
    "anomaly";

// Fields ';'-separated, generators ','-joined, booleans true/false, absent
// optionals empty. Numbers in plain decimal.
std::string to_csv(const SweepReport& report);
std::string to_json(const SweepReport& report);

// Inverse of to_csv (the family name is not part of the CSV payload).
SweepReport parse_csv(std::istream& in);

}  // namespace numsgp::report
