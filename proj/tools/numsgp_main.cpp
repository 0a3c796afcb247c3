// numsgp: exact computations on numerical semigroups.
//
// Per-instance queries (info, apery, frobenius, genus, e1, herzog, cm) plus
// range sweeps (verify) that compare every closed form in the library against
// brute-force oracles and emit deterministic CSV/JSON reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "numsgp/closed_forms.hpp"
#include "numsgp/errors.hpp"
#include "numsgp/herzog.hpp"
#include "numsgp/hilbert.hpp"
#include "numsgp/report.hpp"
#include "numsgp/semigroup.hpp"
#include "numsgp/sweeps.hpp"

namespace {

using numsgp::Semigroup;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string format = "table";
  std::string out_path;
};

// Writes to --out when given, stdout otherwise. Exit code 2 on I/O failure.
void write_output(const OutputOptions& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(opts.out_path);
  if (!file) {
    throw CLI::RuntimeError("cannot open output file: " + opts.out_path,
                            kExitUsage);
  }
  file << payload;
  if (!file.good()) {
    throw CLI::RuntimeError("write failed: " + opts.out_path, kExitUsage);
  }
}

void apply_generator_cap_from_env() {
  const char* raw = std::getenv("NUMSGP_MAX_GEN");
  if (raw == nullptr || *raw == '\0') return;
  std::int64_t value = 0;
  try {
    value = std::stoll(raw);
  } catch (...) {
    throw CLI::RuntimeError(
        std::string("NUMSGP_MAX_GEN is not an integer: ") + raw, kExitUsage);
  }
  // The environment may only lower the cap.
  numsgp::set_generator_cap(std::min(value, numsgp::kDefaultGeneratorCap));
}

json info_json(const Semigroup& h) {
  json doc;
  doc["generators"] = h.generators();
  doc["multiplicity"] = h.multiplicity();
  doc["embedding_dimension"] = h.embedding_dimension();
  doc["frobenius"] = h.frobenius();
  doc["genus"] = h.genus();
  doc["gaps"] = h.gaps();
  doc["symmetric"] = h.is_symmetric();
  const auto bounds = numsgp::hilbert::kirby_bounds(h);
  doc["kirby_bounds"] = {bounds.first, bounds.second};

  const numsgp::hilbert::HilbertSummary summary =
      numsgp::hilbert::e1_by_hilbert_poly(h);
  doc["e1_by_genus"] = numsgp::hilbert::e1_by_genus(h);
  doc["e1_by_apery_delta"] = numsgp::hilbert::e1_by_apery_delta(h);
  doc["e1_by_hilbert_poly"] = summary.e1;
  doc["stabilization_index"] = summary.stabilization_index;
  doc["blowup_generators"] = numsgp::hilbert::blowup(h).generators();

  if (h.embedding_dimension() == 3 && !h.is_symmetric()) {
    const numsgp::herzog::HerzogData p = numsgp::herzog::herzog_parameters(h);
    doc["herzog"] = {{"alpha", p.alpha},     {"beta", p.beta},
                     {"gamma", p.gamma},     {"alpha_p", p.alpha_p},
                     {"beta_p", p.beta_p},   {"gamma_p", p.gamma_p},
                     {"c1", p.c1},           {"c2", p.c2},
                     {"c3", p.c3}};
    doc["graded_cm_criterion"] =
        numsgp::herzog::cm_status_name(numsgp::herzog::graded_cm_from_parameters(p));
  } else {
    doc["herzog"] = nullptr;
    doc["graded_cm_criterion"] = nullptr;
  }
  doc["graded_cm"] = numsgp::herzog::graded_cm_oracle(h);
  return doc;
}

std::string join_ints(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string info_table(const Semigroup& h) {
  const json doc = info_json(h);
  std::ostringstream os;
  os << "semigroup          : " << numsgp::to_string(h) << "\n"
     << "multiplicity       : " << doc["multiplicity"] << "\n"
     << "embedding dim      : " << doc["embedding_dimension"] << "\n"
     << "frobenius          : " << doc["frobenius"] << "\n"
     << "genus              : " << doc["genus"] << "\n"
     << "gaps               : "
     << join_ints(doc["gaps"].get<std::vector<std::int64_t>>()) << "\n"
     << "symmetric          : " << (doc["symmetric"].get<bool>() ? "true" : "false")
     << "\n"
     << "kirby bounds       : [" << doc["kirby_bounds"][0] << ", "
     << doc["kirby_bounds"][1] << "]\n"
     << "e1 (genus)         : " << doc["e1_by_genus"] << "\n"
     << "e1 (apery delta)   : " << doc["e1_by_apery_delta"] << "\n"
     << "e1 (hilbert poly)  : " << doc["e1_by_hilbert_poly"]
     << "  (stabilizes at n=" << doc["stabilization_index"] << ")\n"
     << "blow-up            : <"
     << [&] {
          std::string s =
              join_ints(doc["blowup_generators"].get<std::vector<std::int64_t>>());
          for (char& c : s) {
            if (c == ' ') c = ',';
          }
          return s;
        }()
     << ">\n";
  if (!doc["herzog"].is_null()) {
    const json& p = doc["herzog"];
    os << "herzog parameters  : alpha=" << p["alpha"] << " beta=" << p["beta"]
       << " gamma=" << p["gamma"] << " alpha'=" << p["alpha_p"]
       << " beta'=" << p["beta_p"] << " gamma'=" << p["gamma_p"] << "\n"
       << "column degrees     : c1=" << p["c1"] << " c2=" << p["c2"]
       << " c3=" << p["c3"] << "\n"
       << "graded CM criterion: " << doc["graded_cm_criterion"].get<std::string>()
       << "\n";
  } else {
    os << "herzog parameters  : n/a ("
       << (h.embedding_dimension() != 3 ? "embedding dimension is not 3"
                                        : "semigroup is symmetric")
       << ")\n";
  }
  os << "graded ring CM     : " << (doc["graded_cm"].get<bool>() ? "true" : "false")
     << "\n";
  return os.str();
}

int run_verify(const std::string& family_token, numsgp::sweeps::SweepOptions sweep,
               const OutputOptions& out) {
  const auto family = numsgp::sweeps::parse_family(family_token);
  if (!family) {
    throw CLI::RuntimeError("unknown family: " + family_token, kExitUsage);
  }
  const numsgp::report::SweepReport report =
      numsgp::sweeps::run_family(*family, sweep);

  if (out.format == "csv") {
    write_output(out, numsgp::report::to_csv(report));
  } else if (out.format == "json") {
    write_output(out, numsgp::report::to_json(report));
  } else {
    std::ostringstream os;
    os << "family                 : " << report.family << "\n"
       << "rows                   : " << report.rows.size() << "\n"
       << "precondition satisfied : " << report.precondition_satisfied() << "\n"
       << "mismatches             : " << report.mismatches() << "\n"
       << "flagged anomalies      : " << report.anomalies() << "\n";
    int shown = 0;
    for (const auto& row : report.rows) {
      if (row.precond && !row.anomaly && row.match && !*row.match) {
        if (shown == 0) os << "mismatching rows:\n";
        if (++shown > 20) {
          os << "  ... (truncated)\n";
          break;
        }
        os << "  " << row.formula_id << " generators=" << join_ints(row.generators)
           << " formula=" << (row.formula_value ? std::to_string(*row.formula_value) : "-")
           << " oracle=" << (row.oracle_value ? std::to_string(*row.oracle_value) : "-")
           << "\n";
      }
    }
    write_output(out, os.str());
  }
  return report.mismatches() == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on numerical semigroups"};
  app.require_subcommand(1);

  OutputOptions out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out.out_path, "write output to this file");

  std::vector<std::int64_t> gens;
  std::int64_t apery_base = 0;

  CLI::App* cmd_info = app.add_subcommand("info", "all invariants of one semigroup");
  cmd_info->add_option("generators", gens, "generator list")->required();

  CLI::App* cmd_apery = app.add_subcommand("apery", "Apery table");
  cmd_apery->add_option("generators", gens)->required();
  cmd_apery->add_option("--base", apery_base, "element to take the table against "
                                              "(default: multiplicity)");

  CLI::App* cmd_frob = app.add_subcommand("frobenius", "Frobenius number");
  cmd_frob->add_option("generators", gens)->required();

  CLI::App* cmd_genus = app.add_subcommand("genus", "genus (gap count)");
  cmd_genus->add_option("generators", gens)->required();

  CLI::App* cmd_e1 = app.add_subcommand("e1", "first Hilbert coefficient, three ways");
  cmd_e1->add_option("generators", gens)->required();

  CLI::App* cmd_herzog = app.add_subcommand("herzog", "defining-ideal parameters");
  cmd_herzog->add_option("generators", gens)->required();

  CLI::App* cmd_cm = app.add_subcommand("cm", "Cohen-Macaulayness of the graded ring");
  cmd_cm->add_option("generators", gens)->required();

  std::string family;
  numsgp::sweeps::SweepOptions sweep;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "sweep a formula family against the oracles");
  cmd_verify->add_option("family", family,
                         "one of: apery-min, prop37, d5, mainthm, qr1, e1first, "
                         "fro-chern, e1-arith")
      ->required();
  cmd_verify->add_option("--a-max", sweep.a_max, "largest multiplicity to sweep");
  cmd_verify->add_option("--d-max", sweep.d_max, "largest gap to sweep");
  cmd_verify->add_flag("--permissive", sweep.permissive,
                       "evaluate formulas even where their preconditions fail");
  cmd_verify->add_option("--threads", sweep.threads, "worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
    apply_generator_cap_from_env();

    if (out.format == "csv" && !cmd_verify->parsed() && !cmd_apery->parsed()) {
      throw CLI::RuntimeError("--format csv is only available for verify and apery",
                              kExitUsage);
    }

    if (cmd_verify->parsed()) {
      return run_verify(family, sweep, out);
    }

    const Semigroup h(gens);
    if (cmd_info->parsed()) {
      write_output(out, out.format == "json" ? info_json(h).dump(2) + "\n"
                                             : info_table(h));
    } else if (cmd_apery->parsed()) {
      const numsgp::AperyTable table =
          h.apery(apery_base == 0 ? h.multiplicity() : apery_base);
      if (out.format == "json") {
        json doc;
        doc["base"] = table.base;
        doc["omegas"] = table.omegas;
        write_output(out, doc.dump(2) + "\n");
      } else if (out.format == "csv") {
        std::string payload = "i;omega\n";
        for (std::size_t i = 0; i < table.omegas.size(); ++i) {
          payload += std::to_string(i) + ";" + std::to_string(table.omegas[i]) + "\n";
        }
        write_output(out, payload);
      } else {
        std::ostringstream os;
        os << "Apery(" << numsgp::to_string(h) << ", " << table.base << "):\n";
        for (std::size_t i = 0; i < table.omegas.size(); ++i) {
          os << "  " << i << " : " << table.omegas[i] << "\n";
        }
        write_output(out, os.str());
      }
    } else if (cmd_frob->parsed()) {
      write_output(out, out.format == "json"
                            ? json{{"frobenius", h.frobenius()}}.dump(2) + "\n"
                            : std::to_string(h.frobenius()) + "\n");
    } else if (cmd_genus->parsed()) {
      write_output(out, out.format == "json"
                            ? json{{"genus", h.genus()}}.dump(2) + "\n"
                            : std::to_string(h.genus()) + "\n");
    } else if (cmd_e1->parsed()) {
      const numsgp::hilbert::HilbertSummary summary =
          numsgp::hilbert::e1_by_hilbert_poly(h);
      json doc;
      doc["e1_by_genus"] = numsgp::hilbert::e1_by_genus(h);
      doc["e1_by_apery_delta"] = numsgp::hilbert::e1_by_apery_delta(h);
      doc["e1_by_hilbert_poly"] = summary.e1;
      doc["e0"] = summary.e0;
      doc["genus"] = summary.genus;
      doc["blowup_genus"] = summary.blowup_genus;
      doc["stabilization_index"] = summary.stabilization_index;
      if (out.format == "json") {
        write_output(out, doc.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "e1 (genus)        : " << doc["e1_by_genus"] << "\n"
           << "e1 (apery delta)  : " << doc["e1_by_apery_delta"] << "\n"
           << "e1 (hilbert poly) : " << doc["e1_by_hilbert_poly"]
           << "  (stabilizes at n=" << doc["stabilization_index"] << ")\n";
        write_output(out, os.str());
      }
    } else if (cmd_herzog->parsed()) {
      const numsgp::herzog::HerzogData p = numsgp::herzog::herzog_parameters(h);
      json doc = {{"alpha", p.alpha},   {"beta", p.beta},
                  {"gamma", p.gamma},   {"alpha_p", p.alpha_p},
                  {"beta_p", p.beta_p}, {"gamma_p", p.gamma_p},
                  {"c1", p.c1},         {"c2", p.c2},
                  {"c3", p.c3}};
      std::optional<std::int64_t> f, g;
      try {
        f = numsgp::herzog::frobenius_from_parameters(h, p);
        g = numsgp::herzog::genus_from_parameters(h, p);
      } catch (const numsgp::Error& e) {
        if (e.code() != numsgp::errc::tie_undefined) throw;
      }
      doc["frobenius_from_parameters"] = f ? json(*f) : json(nullptr);
      doc["genus_from_parameters"] = g ? json(*g) : json(nullptr);
      if (out.format == "json") {
        write_output(out, doc.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "alpha=" << p.alpha << " beta=" << p.beta << " gamma=" << p.gamma
           << " alpha'=" << p.alpha_p << " beta'=" << p.beta_p
           << " gamma'=" << p.gamma_p << "\n"
           << "column degrees: c1=" << p.c1 << " c2=" << p.c2 << " c3=" << p.c3
           << "\n";
        if (f) {
          os << "frobenius from parameters: " << *f << "\n"
             << "genus from parameters    : " << *g << "\n";
        } else {
          os << "frobenius from parameters: undefined (beta' n2 = alpha n1 tie)\n";
        }
        write_output(out, os.str());
      }
    } else if (cmd_cm->parsed()) {
      const bool oracle = numsgp::herzog::graded_cm_oracle(h);
      std::string criterion = "n/a";
      if (h.embedding_dimension() == 3 && !h.is_symmetric()) {
        criterion = numsgp::herzog::cm_status_name(
            numsgp::herzog::graded_cm_from_parameters(
                numsgp::herzog::herzog_parameters(h)));
      }
      if (out.format == "json") {
        json doc = {{"graded_cm", oracle}, {"criterion", criterion}};
        write_output(out, doc.dump(2) + "\n");
      } else {
        write_output(out, "graded ring CM : " + std::string(oracle ? "true" : "false") +
                              "\ncriterion      : " + criterion + "\n");
      }
    }
    return kExitOk;
  } catch (const CLI::RuntimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.get_exit_code();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const numsgp::Error& e) {
    std::cerr << "error [" << numsgp::errc_name(e.code()) << "]: " << e.what()
              << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
