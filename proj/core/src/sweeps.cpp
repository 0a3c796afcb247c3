#include "numsgp/sweeps.hpp"

#include <numeric>
#include <vector>

#include "numsgp/checked.hpp"
#include "numsgp/closed_forms.hpp"
#include "numsgp/herzog.hpp"
#include "numsgp/hilbert.hpp"
#include "numsgp/parallel.hpp"
#include "numsgp/semigroup.hpp"

namespace numsgp::sweeps {

namespace cf = closed_forms;
using report::SweepReport;
using report::SweepRow;

namespace {

std::int64_t exponent_sum(const herzog::HerzogData& p) {
  return p.alpha + p.beta + p.gamma + p.alpha_p + p.beta_p + p.gamma_p;
}

SweepRow base_row(const Semigroup& h, std::string formula_id) {
  SweepRow row;
  row.generators = h.generators();
  row.formula_id = std::move(formula_id);
  return row;
}

// ---- apery-min -------------------------------------------------------------

SweepReport sweep_apery_min(const SweepOptions& options) {
  const std::int64_t a_max = options.a_max > 0 ? options.a_max : 120;
  std::vector<std::pair<std::int64_t, std::int64_t>> instances;
  for (std::int64_t a = 3; a <= a_max; ++a) {
    for (std::int64_t b = a + 2; b <= 5 * a; ++b) {
      if (cf::family_is_minimal(a, b)) instances.emplace_back(a, b);
    }
  }
  SweepReport out;
  out.family = family_token(FamilyId::apery_min);
  out.rows.resize(instances.size());
  detail::parallel_for(
      static_cast<std::int64_t>(instances.size()), options.threads,
      [&](std::int64_t idx) {
        const auto [a, b] = instances[static_cast<std::size_t>(idx)];
        const Semigroup h({a, a + 1, b});
        const AperyTable oracle = h.apery(a);
        const cf::FamilyParams p = cf::family_decompose(a, b);
        bool all_equal = true;
        std::int64_t formula_max = 0;
        for (std::int64_t i = 0; i < a; ++i) {
          const std::int64_t w = cf::apery_min_formula(a, b, i);
          formula_max = std::max(formula_max, w);
          if (w != oracle.omegas[static_cast<std::size_t>(i)]) all_equal = false;
        }
        SweepRow row = base_row(h, "apery-min");
        row.a = a;
        row.d = b - a;
        row.q = p.q;
        row.r = p.r;
        row.precond = true;
        row.formula_value = formula_max - a;
        row.oracle_value = oracle.max() - a;
        row.match = all_equal;
        out.rows[static_cast<std::size_t>(idx)] = std::move(row);
      });
  return out;
}

// ---- prop37 / e1first ------------------------------------------------------

std::vector<std::pair<std::int64_t, std::int64_t>> gap_instances(
    std::int64_t a_max) {
  std::vector<std::pair<std::int64_t, std::int64_t>> instances;
  for (std::int64_t a = 3; a <= a_max; ++a) {
    for (std::int64_t d = 2; d < a; ++d) instances.emplace_back(a, d);
  }
  return instances;
}

bool small_gap_precondition(std::int64_t a, std::int64_t d) {
  return d > 1 && d < a && a >= d * d - 3 * d;
}

SweepReport sweep_prop37(const SweepOptions& options) {
  const std::int64_t a_max = options.a_max > 0 ? options.a_max : 150;
  const auto instances = gap_instances(a_max);
  SweepReport out;
  out.family = family_token(FamilyId::prop37);
  out.rows.resize(2 * instances.size());
  detail::parallel_for(
      static_cast<std::int64_t>(instances.size()), options.threads,
      [&](std::int64_t idx) {
        const auto [a, d] = instances[static_cast<std::size_t>(idx)];
        const Semigroup h({a, a + 1, a + d});
        const cf::FamilyParams p = cf::gap_decompose(a, d);
        const bool precond = small_gap_precondition(a, d);

        SweepRow apery_row = base_row(h, "prop37-apery");
        SweepRow frob_row = base_row(h, "prop37-frobenius");
        for (SweepRow* row : {&apery_row, &frob_row}) {
          row->a = a;
          row->d = d;
          row->q = p.q;
          row->r = p.r;
          row->precond = precond;
        }
        if (precond || options.permissive) {
          const AperyTable oracle = h.apery(a);
          bool all_equal = true;
          std::int64_t formula_max = 0;
          for (std::int64_t i = 0; i < a; ++i) {
            const std::int64_t w =
                cf::apery_small_d(a, d, i, Enforce::permissive);
            formula_max = std::max(formula_max, w);
            if (w != oracle.omegas[static_cast<std::size_t>(i)]) {
              all_equal = false;
            }
          }
          apery_row.formula_value = formula_max - a;
          apery_row.oracle_value = oracle.max() - a;
          apery_row.match = all_equal;

          frob_row.formula_value = cf::frobenius_small_d(a, d, Enforce::permissive);
          frob_row.oracle_value = oracle.max() - a;
          frob_row.match = *frob_row.formula_value == *frob_row.oracle_value;
        }
        out.rows[2 * static_cast<std::size_t>(idx)] = std::move(apery_row);
        out.rows[2 * static_cast<std::size_t>(idx) + 1] = std::move(frob_row);
      });
  return out;
}

SweepReport sweep_e1first(const SweepOptions& options) {
  const std::int64_t a_max = options.a_max > 0 ? options.a_max : 150;
  const auto instances = gap_instances(a_max);
  SweepReport out;
  out.family = family_token(FamilyId::e1first);
  out.rows.resize(instances.size());
  detail::parallel_for(
      static_cast<std::int64_t>(instances.size()), options.threads,
      [&](std::int64_t idx) {
        const auto [a, d] = instances[static_cast<std::size_t>(idx)];
        const Semigroup h({a, a + 1, a + d});
        const cf::FamilyParams p = cf::gap_decompose(a, d);
        SweepRow row = base_row(h, "e1first");
        row.a = a;
        row.d = d;
        row.q = p.q;
        row.r = p.r;
        row.precond = small_gap_precondition(a, d);
        if (row.precond || options.permissive) {
          row.formula_value = hilbert::e1_small_d(a, d, Enforce::permissive);
          row.oracle_value = hilbert::e1_by_genus(h);
          row.match = *row.formula_value == *row.oracle_value;
        }
        out.rows[static_cast<std::size_t>(idx)] = std::move(row);
      });
  return out;
}

// ---- d5 ----------------------------------------------------------------

SweepReport sweep_d5(const SweepOptions& options) {
  const std::int64_t a_max = options.a_max > 0 ? options.a_max : 200;
  std::vector<std::int64_t> instances;
  for (std::int64_t a = 7; a <= a_max; ++a) instances.push_back(a);
  SweepReport out;
  out.family = family_token(FamilyId::d5);
  out.rows.resize(instances.size());
  detail::parallel_for(
      static_cast<std::int64_t>(instances.size()), options.threads,
      [&](std::int64_t idx) {
        const std::int64_t a = instances[static_cast<std::size_t>(idx)];
        const Semigroup h({a, a + 1, a + 5});
        const cf::FamilyParams p = cf::gap_decompose(a, 5);
        SweepRow row = base_row(h, "d5-frobenius");
        row.a = a;
        row.d = 5;
        row.q = p.q;
        row.r = p.r;
        row.precond = true;
        row.formula_value = cf::frobenius_d5(a);
        row.oracle_value = h.frobenius();
        row.match = *row.formula_value == *row.oracle_value;
        out.rows[static_cast<std::size_t>(idx)] = std::move(row);
      });
  return out;
}

// ---- mainthm / fro-chern ---------------------------------------------------

SweepReport sweep_mainthm(const SweepOptions& options) {
  const std::int64_t a_max = options.a_max > 0 ? options.a_max : 150;
  const auto instances = gap_instances(a_max);
  SweepReport out;
  out.family = family_token(FamilyId::mainthm);
  out.rows.resize(2 * instances.size());
  detail::parallel_for(
      static_cast<std::int64_t>(instances.size()), options.threads,
      [&](std::int64_t idx) {
        const auto [a, d] = instances[static_cast<std::size_t>(idx)];
        const Semigroup h({a, a + 1, a + d});
        const cf::MainPrecheck pre = cf::main_precheck(a, d);
        const cf::FamilyParams p = cf::gap_decompose(a, d);

        SweepRow frob_row = base_row(h, "mainthm-frobenius");
        SweepRow matrix_row = base_row(h, "mainthm-matrix");
        for (SweepRow* row : {&frob_row, &matrix_row}) {
          row->a = a;
          row->d = d;
          row->q = p.q;
          row->r = p.r;
          row->precond = pre.ok;
        }
        if (pre.ok || options.permissive) {
          try {
            frob_row.formula_value = cf::frobenius_main(a, d, Enforce::permissive);
            frob_row.oracle_value = h.frobenius();
            frob_row.match = *frob_row.formula_value == *frob_row.oracle_value;
          } catch (const Error&) {
            // Formula undefined here (e.g. gcd > 1 makes the division
            // inexact); leave the value columns empty.
          }
          try {
            const herzog::HerzogData formula =
                herzog::matrix_main(a, d, Enforce::permissive);
            matrix_row.formula_value = exponent_sum(formula);
            bool equal = true;
            if (!h.is_symmetric()) {
              const herzog::HerzogData oracle = herzog::herzog_parameters(h);
              matrix_row.oracle_value = exponent_sum(oracle);
              equal = formula == oracle;
            }
            matrix_row.match =
                equal && herzog::degree_identities_hold(formula, a, a + 1, a + d);
          } catch (const Error&) {
          }
        }
        out.rows[2 * static_cast<std::size_t>(idx)] = std::move(frob_row);
        out.rows[2 * static_cast<std::size_t>(idx) + 1] = std::move(matrix_row);
      });
  return out;
}

SweepReport sweep_fro_chern(const SweepOptions& options) {
  const std::int64_t a_max = options.a_max > 0 ? options.a_max : 150;
  const auto instances = gap_instances(a_max);
  SweepReport out;
  out.family = family_token(FamilyId::fro_chern);
  out.rows.resize(instances.size());
  detail::parallel_for(
      static_cast<std::int64_t>(instances.size()), options.threads,
      [&](std::int64_t idx) {
        const auto [a, d] = instances[static_cast<std::size_t>(idx)];
        const Semigroup h({a, a + 1, a + d});
        const cf::MainPrecheck pre = cf::main_precheck(a, d);
        const cf::FamilyParams p = cf::gap_decompose(a, d);
        SweepRow row = base_row(h, "fro-chern");
        row.a = a;
        row.d = d;
        row.q = p.q;
        row.r = p.r;
        row.precond = pre.ok;
        if (pre.ok || options.permissive) {
          try {
            row.formula_value = hilbert::e1_main(a, d, Enforce::permissive);
            row.oracle_value = hilbert::e1_by_genus(h);
            row.match = *row.formula_value == *row.oracle_value;
          } catch (const Error&) {
          }
        }
        out.rows[static_cast<std::size_t>(idx)] = std::move(row);
      });
  return out;
}

// ---- qr1 ---------------------------------------------------------------

SweepReport sweep_qr1(const SweepOptions& options) {
  const std::int64_t d_max = options.d_max > 0 ? options.d_max : 60;
  std::vector<std::int64_t> instances;
  for (std::int64_t d = 5; d <= d_max; ++d) instances.push_back(d);
  SweepReport out;
  out.family = family_token(FamilyId::qr1);
  out.rows.resize(3 * instances.size());
  detail::parallel_for(
      static_cast<std::int64_t>(instances.size()), options.threads,
      [&](std::int64_t idx) {
        const std::int64_t d = instances[static_cast<std::size_t>(idx)];
        const Semigroup h({d + 1, d + 2, 2 * d + 1});

        SweepRow frob_row = base_row(h, "qr1-frobenius");
        frob_row.a = d + 1;
        frob_row.d = d;
        frob_row.q = 1;
        frob_row.r = 1;
        frob_row.precond = true;
        frob_row.formula_value = cf::frobenius_qr1(d);
        frob_row.oracle_value = h.frobenius();
        frob_row.match = *frob_row.formula_value == *frob_row.oracle_value;

        SweepRow e1_row = base_row(h, "qr1-e1");
        e1_row.a = d + 1;
        e1_row.d = d;
        e1_row.q = 1;
        e1_row.r = 1;
        e1_row.precond = true;
        e1_row.formula_value = hilbert::e1_qr1(d);
        e1_row.oracle_value = hilbert::e1_by_genus(h);
        e1_row.match = *e1_row.formula_value == *e1_row.oracle_value;

        SweepRow matrix_row = base_row(h, "qr1-matrix");
        matrix_row.a = d + 1;
        matrix_row.d = d;
        matrix_row.q = 1;
        matrix_row.r = 1;
        matrix_row.precond = true;
        const herzog::HerzogData formula = herzog::matrix_qr1(d);
        matrix_row.formula_value = exponent_sum(formula);
        bool equal = true;
        if (!h.is_symmetric()) {
          const herzog::HerzogData oracle = herzog::herzog_parameters(h);
          matrix_row.oracle_value = exponent_sum(oracle);
          equal = formula == oracle;
        }
        matrix_row.match = equal && herzog::degree_identities_hold(
                                        formula, d + 1, d + 2, 2 * d + 1);

        out.rows[3 * static_cast<std::size_t>(idx)] = std::move(frob_row);
        out.rows[3 * static_cast<std::size_t>(idx) + 1] = std::move(e1_row);
        out.rows[3 * static_cast<std::size_t>(idx) + 2] = std::move(matrix_row);
      });
  return out;
}

// ---- e1-arith ----------------------------------------------------------

SweepReport sweep_e1_arith(const SweepOptions& options) {
  const std::int64_t a_max = options.a_max > 0 ? options.a_max : 80;
  const std::int64_t d_max = options.d_max > 0 ? options.d_max : 25;
  constexpr std::int64_t kMaxTerms = 6;

  struct Instance {
    std::int64_t a, d, n;
  };
  std::vector<Instance> instances;
  for (std::int64_t a = 3; a <= a_max; ++a) {
    for (std::int64_t n = 2; n <= kMaxTerms; ++n) {
      for (std::int64_t d = 1; d <= d_max; ++d) {
        if (std::gcd(a, d) != 1) continue;
        instances.push_back({a, d, n});
      }
    }
  }
  SweepReport out;
  out.family = family_token(FamilyId::e1_arith);
  out.rows.resize(instances.size());
  detail::parallel_for(
      static_cast<std::int64_t>(instances.size()), options.threads,
      [&](std::int64_t idx) {
        const Instance inst = instances[static_cast<std::size_t>(idx)];
        SweepRow row;
        row.formula_id = "e1-arith";
        row.a = inst.a;
        row.d = inst.d;
        try {
          const hilbert::ArithmeticE1 result =
              hilbert::e1_arithmetic(inst.a, inst.d, inst.n);
          std::vector<std::int64_t> gens;
          for (std::int64_t i = 0; i <= inst.n; ++i) {
            gens.push_back(inst.a + i * inst.d);
          }
          const Semigroup h(gens);
          row.generators = h.generators();
          row.q = result.q;
          row.r = result.r;
          row.precond = true;
          row.formula_value = result.closed_form_value;
          row.oracle_value = hilbert::e1_by_genus(h);
          row.match = *row.formula_value == *row.oracle_value;
          // Untrusted remainders are documented discrepancies, not failures.
          row.anomaly = !result.closed_form_trusted;
        } catch (const Error&) {
          // Not a minimal arithmetic instance; leave precond false.
          row.precond = false;
        }
        out.rows[static_cast<std::size_t>(idx)] = std::move(row);
      });
  return out;
}

}  // namespace

std::optional<FamilyId> parse_family(std::string_view token) {
  if (token == "apery-min") return FamilyId::apery_min;
  if (token == "prop37") return FamilyId::prop37;
  if (token == "d5") return FamilyId::d5;
  if (token == "mainthm") return FamilyId::mainthm;
  if (token == "qr1") return FamilyId::qr1;
  if (token == "e1first") return FamilyId::e1first;
  if (token == "fro-chern") return FamilyId::fro_chern;
  if (token == "e1-arith") return FamilyId::e1_arith;
  return std::nullopt;
}

const char* family_token(FamilyId family) {
  switch (family) {
    case FamilyId::apery_min: return "apery-min";
    case FamilyId::prop37: return "prop37";
    case FamilyId::d5: return "d5";
    case FamilyId::mainthm: return "mainthm";
    case FamilyId::qr1: return "qr1";
    case FamilyId::e1first: return "e1first";
    case FamilyId::fro_chern: return "fro-chern";
    case FamilyId::e1_arith: return "e1-arith";
  }
  return "?";
}

report::SweepReport run_family(FamilyId family, const SweepOptions& options) {
  SweepReport out;
  switch (family) {
    case FamilyId::apery_min: out = sweep_apery_min(options); break;
    case FamilyId::prop37: out = sweep_prop37(options); break;
    case FamilyId::d5: out = sweep_d5(options); break;
    case FamilyId::mainthm: out = sweep_mainthm(options); break;
    case FamilyId::qr1: out = sweep_qr1(options); break;
    case FamilyId::e1first: out = sweep_e1first(options); break;
    case FamilyId::fro_chern: out = sweep_fro_chern(options); break;
    case FamilyId::e1_arith: out = sweep_e1_arith(options); break;
  }
  report::sort_rows(out);
  return out;
}

}  // namespace numsgp::sweeps
