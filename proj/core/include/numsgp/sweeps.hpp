#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "numsgp/report.hpp"

namespace numsgp::sweeps {

// Formula families the verify command can sweep. Tokens are part of the CLI
// surface and stay stable.
enum class FamilyId {
  apery_min,  // unconditional Apery minimization formula for <a,a+1,b>
  prop37,     // small-gap Apery/Frobenius closed form for <a,a+1,a+d>
  d5,         // piecewise Frobenius for <a,a+1,a+5>
  mainthm,    // main closed form + explicit defining matrix
  qr1,        // <d+1,d+2,2d+1> subfamily
  e1first,    // small-gap e1 closed form
  fro_chern,  // e1 under the main closed form's hypotheses
  e1_arith,   // e1 of arithmetic-sequence semigroups (anomaly reporting)
};

std::optional<FamilyId> parse_family(std::string_view token);
const char* family_token(FamilyId family);

struct SweepOptions {
  std::int64_t a_max = 0;  // 0 keeps the family default
  std::int64_t d_max = 0;  // 0 keeps the family default
  bool permissive = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Runs the family over its instance range, comparing formulas against the
// brute-force oracles, and returns deterministically ordered rows.
report::SweepReport run_family(FamilyId family, const SweepOptions& options);

}  // namespace numsgp::sweeps
