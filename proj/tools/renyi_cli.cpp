// SPDX-License-Identifier: Apache-2.0
//
// Batch front end: redundancy sweeps, the Z-channel closed-form check,
// the inequality audit battery, endpoint tables, and mixture dumps.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "renyi/bounds_audit.hpp"
#include "renyi/format.hpp"
#include "renyi/mixtures.hpp"
#include "renyi/solver.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr double kTwoPi = 6.283185307179586476925;

struct SweepConfig {
  int k = 2;
  std::vector<double> lambdas = {0.5, 1.0, 2.0};
  std::vector<std::int64_t> ns = {1, 2, 4, 8};
  int grid = 2001;
  double tol = 1e-6;
  double certify_threshold = 1e-4;
  double c = 0.25;
  double epsilon = 0.05;
  double delta = 0.1;
  std::string log_base = "nats";
  std::string out_csv;
  std::string out_json;

  double base_scale() const {
    return log_base == "bits" ? 1.0 / std::log(2.0) : 1.0;
  }
};

void apply_config_file(const std::string& path, SweepConfig* cfg) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("config", "cannot open " + path);
  json j;
  in >> j;
  if (j.contains("k")) cfg->k = j["k"].get<int>();
  if (j.contains("lambda")) cfg->lambdas = j["lambda"].get<std::vector<double>>();
  if (j.contains("n")) cfg->ns = j["n"].get<std::vector<std::int64_t>>();
  if (j.contains("grid")) cfg->grid = j["grid"].get<int>();
  if (j.contains("tol")) cfg->tol = j["tol"].get<double>();
  if (j.contains("certify_threshold"))
    cfg->certify_threshold = j["certify_threshold"].get<double>();
  if (j.contains("c")) cfg->c = j["c"].get<double>();
  if (j.contains("epsilon")) cfg->epsilon = j["epsilon"].get<double>();
  if (j.contains("delta")) cfg->delta = j["delta"].get<double>();
  if (j.contains("log_base")) cfg->log_base = j["log_base"].get<std::string>();
  if (j.contains("out_csv")) cfg->out_csv = j["out_csv"].get<std::string>();
  if (j.contains("out_json")) cfg->out_json = j["out_json"].get<std::string>();
}

void validate(const SweepConfig& cfg) {
  if (cfg.k < 2) throw CLI::ValidationError("config", "k must be >= 2");
  if (cfg.grid < 2) throw CLI::ValidationError("config", "grid must be >= 2");
  if (!(cfg.tol > 0)) throw CLI::ValidationError("config", "tol must be > 0");
  if (cfg.log_base != "nats" && cfg.log_base != "bits")
    throw CLI::ValidationError("config", "log_base must be nats or bits");
  for (double l : cfg.lambdas)
    if (!(l > 0))
      throw CLI::ValidationError("config", "lambda values must be > 0");
  for (auto n : cfg.ns)
    if (n < 1) throw CLI::ValidationError("config", "n values must be >= 1");
}

renyi::ParameterGrid make_grid(const SweepConfig& cfg) {
  if (cfg.k == 2) return renyi::ParameterGrid::uniform_binary(cfg.grid);
  // grid field holds the barycentric denominator for k >= 3
  return renyi::ParameterGrid::barycentric(cfg.k, cfg.grid);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

int cmd_redundancy(const SweepConfig& cfg) {
  const double scale = cfg.base_scale();
  const renyi::ParameterGrid grid = make_grid(cfg);
  std::string csv = "n,k,lambda,lower,upper,gap,asymptotic,residual\n";
  json results = json::array();
  bool all_certified = true;
  for (std::int64_t n : cfg.ns) {
    for (double lam : cfg.lambdas) {
      const auto order = renyi::RenyiOrder::from_lambda(lam);
      const renyi::RedundancyBracket b = renyi::renyi_redundancy(
          n, cfg.k, order, grid, cfg.tol, cfg.certify_threshold);
      all_certified = all_certified && b.certified;
      const double asym =
          n >= 2 ? renyi::asymptotic_prediction(n, cfg.k, order)
                 : renyi::kNegInf;
      const double resid =
          b.upper - 0.5 * (cfg.k - 1) * std::log(static_cast<double>(n) / kTwoPi);
      csv += csv_row({std::to_string(n), std::to_string(cfg.k),
                      renyi::format_g12(lam), renyi::format_g12(b.lower * scale),
                      renyi::format_g12(b.upper * scale),
                      renyi::format_g12(b.gap * scale),
                      renyi::format_g12(asym * scale),
                      renyi::format_g12(resid * scale)});
      json rec;
      rec["n"] = n;
      rec["k"] = cfg.k;
      rec["lambda"] = lam;
      rec["lower"] = b.lower * scale;
      rec["upper"] = b.upper * scale;
      rec["gap"] = b.gap * scale;
      rec["certified"] = b.certified;
      rec["argmax_theta"] = b.argmax_theta.probs;
      json support = json::array();
      for (std::size_t i = 0; i < b.prior.support.size(); ++i) {
        json atom;
        atom["theta"] = b.prior.support[i].probs;
        atom["weight"] = b.prior.weights[i];
        support.push_back(atom);
      }
      rec["prior_support"] = support;
      results.push_back(rec);
      std::printf("n=%-5lld lambda=%-8s lower=%s upper=%s gap=%s %s\n",
                  static_cast<long long>(n), renyi::format_g12(lam).c_str(),
                  renyi::format_g12(b.lower * scale).c_str(),
                  renyi::format_g12(b.upper * scale).c_str(),
                  renyi::format_g12(b.gap * scale).c_str(),
                  b.certified ? "certified" : "NOT-CERTIFIED");
    }
  }
  if (!cfg.out_csv.empty()) write_file(cfg.out_csv, csv);
  if (!cfg.out_json.empty()) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["log_base"] = cfg.log_base;
    doc["grid"] = grid.descriptor;
    doc["results"] = results;
    write_file(cfg.out_json, doc.dump(2) + "\n");
  }
  return all_certified ? 0 : 1;
}

int cmd_zchannel(const SweepConfig& cfg) {
  const double scale = cfg.base_scale();
  const renyi::ParameterGrid grid = renyi::zchannel_grid();
  std::string csv = "lambda,closed_form_value,closed_form_prior,solver_value,"
                    "solver_prior,abs_diff\n";
  std::printf("%-10s %-16s %-16s %-16s %-12s\n", "lambda", "closed-form",
              "solver", "|diff|", "prior P_V(1)");
  bool ok = true;
  for (double lam : cfg.lambdas) {
    const double cf = renyi::zchannel_value(lam);
    const double cf_prior = renyi::zchannel_optimal_prior(lam);
    const auto res = renyi::maximin_solve(
        grid, 1, renyi::RenyiOrder::from_lambda(lam), std::min(cfg.tol, 1e-9));
    double solver_prior = 0.0;
    for (std::size_t i = 0; i < res.prior.support.size(); ++i)
      if (res.prior.support[i].probs[0] == 0.5)
        solver_prior = res.prior.weights[i];
    const double diff = std::fabs(res.value - cf);
    ok = ok && diff <= 1e-6 && std::fabs(solver_prior - cf_prior) <= 1e-6;
    csv += csv_row({renyi::format_g12(lam), renyi::format_g12(cf * scale),
                    renyi::format_g12(cf_prior),
                    renyi::format_g12(res.value * scale),
                    renyi::format_g12(solver_prior),
                    renyi::format_g12(diff * scale)});
    std::printf("%-10s %-16s %-16s %-16s %-12s\n",
                renyi::format_g12(lam).c_str(),
                renyi::format_g12(cf * scale).c_str(),
                renyi::format_g12(res.value * scale).c_str(),
                renyi::format_g12(diff * scale).c_str(),
                renyi::format_g12(solver_prior).c_str());
  }
  if (!cfg.out_csv.empty()) write_file(cfg.out_csv, csv);
  return ok ? 0 : 1;
}

int cmd_audit(const SweepConfig& cfg, std::uint64_t seed,
              const std::string& inject_fault) {
  renyi::AuditConfig acfg;
  acfg.lambda = cfg.lambdas.empty() ? 1.0 : cfg.lambdas[0];
  acfg.c = cfg.c;
  acfg.delta = cfg.delta;
  acfg.seed = seed;
  if (inject_fault == "c1-shrink") acfg.c1_scale = 0.5;
  else if (!inject_fault.empty())
    throw CLI::ValidationError("--inject-fault", "unknown fault name");
  const auto reports = renyi::run_full_audit(acfg);
  int violations = 0;
  json jreports = json::array();
  std::printf("%-34s %-14s %s\n", "audit", "max_violation", "status");
  for (const auto& r : reports) {
    if (!r.satisfied()) ++violations;
    std::printf("%-34s %-14s %s\n", r.name.c_str(),
                renyi::format_g12(r.max_violation).c_str(),
                r.satisfied() ? "ok" : "VIOLATED");
    json jr;
    jr["name"] = r.name;
    jr["domain"] = r.domain;
    jr["max_violation"] = r.max_violation;
    jr["satisfied"] = r.satisfied();
    jr["witness"] = r.witness;
    jr["aux"] = r.aux;
    jreports.push_back(jr);
  }
  if (!cfg.out_json.empty()) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["violations"] = violations;
    doc["reports"] = jreports;
    write_file(cfg.out_json, doc.dump(2) + "\n");
  }
  if (violations) {
    std::printf("%d audit(s) violated\n", violations);
    return 1;
  }
  std::printf("all audits satisfied\n");
  return 0;
}

int cmd_endpoints(const SweepConfig& cfg) {
  const double scale = cfg.base_scale();
  const renyi::ParameterGrid grid = make_grid(cfg);
  std::string csv = "n,r0,";
  for (double lam : cfg.lambdas)
    csv += "lower_" + renyi::format_g12(lam) + ",upper_" +
           renyi::format_g12(lam) + ",";
  csv += "shtarkov\n";
  bool ordering_ok = true;
  for (std::int64_t n : cfg.ns) {
    const auto ba = renyi::classical_redundancy_r0(n, cfg.k, grid,
                                                   std::min(cfg.tol, 1e-8));
    const double rn = renyi::shtarkov_regret(n, cfg.k);
    std::vector<std::string> cells = {std::to_string(n),
                                      renyi::format_g12(ba.value * scale)};
    std::printf("n=%-4lld R0=%-14s", static_cast<long long>(n),
                renyi::format_g12(ba.value * scale).c_str());
    for (double lam : cfg.lambdas) {
      const auto b = renyi::renyi_redundancy(
          n, cfg.k, renyi::RenyiOrder::from_lambda(lam), grid,
          std::min(cfg.tol, 1e-8), cfg.certify_threshold);
      // R0 <= R_lambda <= r_n with 1e-6 slack on the certified lower values
      ordering_ok = ordering_ok && ba.value <= b.lower + 1e-6 &&
                    b.lower <= rn + 1e-6;
      cells.push_back(renyi::format_g12(b.lower * scale));
      cells.push_back(renyi::format_g12(b.upper * scale));
      std::printf(" R_%s=[%s,%s]", renyi::format_g12(lam).c_str(),
                  renyi::format_g12(b.lower * scale).c_str(),
                  renyi::format_g12(b.upper * scale).c_str());
    }
    cells.push_back(renyi::format_g12(rn * scale));
    std::printf(" r_n=%s\n", renyi::format_g12(rn * scale).c_str());
    csv += csv_row(cells);
  }
  if (!cfg.out_csv.empty()) write_file(cfg.out_csv, csv);
  if (!ordering_ok) {
    std::fprintf(stderr, "endpoint sandwich ordering violated\n");
    return 1;
  }
  return 0;
}

int cmd_mixture_dump(const SweepConfig& cfg, const std::string& kind,
                     const std::string& out) {
  std::optional<renyi::ExchangeableMixture> mix;
  const std::int64_t n = cfg.ns.empty() ? 8 : cfg.ns[0];
  if (kind == "jeffreys") {
    mix = renyi::jeffreys_mixture(n, cfg.k);
  } else if (kind == "modified-binary") {
    mix = renyi::modified_mixture_binary(
        renyi::ModifiedPriorSpec::create(cfg.epsilon, cfg.c, n));
  } else if (kind == "modified-general") {
    mix = renyi::modified_mixture_general(
        renyi::ModifiedPriorSpec::create(cfg.epsilon, cfg.c, n), cfg.k);
  } else {
    throw CLI::ValidationError("--kind", "unknown mixture kind " + kind);
  }
  std::string csv = mix->to_csv();
  if (cfg.log_base == "bits") {
    // rebuild with scaled log column
    csv.clear();
    for (int i = 1; i <= mix->k(); ++i) csv += "t_" + std::to_string(i) + ",";
    csv += "log_prob\n";
    const double scale = cfg.base_scale();
    for (std::size_t i = 0; i < mix->size(); ++i) {
      for (auto c : mix->types().counts(i)) csv += std::to_string(c) + ",";
      csv += renyi::format_g12(mix->log_type_prob(i) * scale) + "\n";
    }
  }
  if (out.empty())
    std::fputs(csv.c_str(), stdout);
  else
    write_file(out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimax Renyi redundancy toolkit"};
  app.require_subcommand(1);

  SweepConfig cfg;
  std::string config_path, inject_fault, mixture_kind = "jeffreys", dump_out;
  std::uint64_t seed = 20170513;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "flat JSON config file");
    sub->add_option("--k", cfg.k, "alphabet size");
    sub->add_option("--lambda", cfg.lambdas, "lambda values")->delimiter(',');
    sub->add_option("--n", cfg.ns, "blocklengths")->delimiter(',');
    sub->add_option("--grid", cfg.grid,
                    "grid points (k=2) or barycentric denominator (k>2)");
    sub->add_option("--tol", cfg.tol, "solver duality-gap tolerance");
    sub->add_option("--certify-threshold", cfg.certify_threshold,
                    "bracket certification threshold (nats)");
    sub->add_option("--c", cfg.c, "face-mass constant c (nats)");
    sub->add_option("--epsilon", cfg.epsilon, "modified-prior weight");
    sub->add_option("--delta", cfg.delta, "window/converse delta");
    sub->add_option("--log-base", cfg.log_base, "nats or bits");
    sub->add_option("--out-csv", cfg.out_csv, "CSV output path");
    sub->add_option("--out-json", cfg.out_json, "JSON output path");
  };

  CLI::App* red = app.add_subcommand(
      "redundancy", "certified R_lambda(n) brackets over an (n, lambda) sweep");
  add_common(red);
  CLI::App* zch = app.add_subcommand(
      "zchannel", "solver vs closed forms for the Z-channel example");
  add_common(zch);
  CLI::App* aud = app.add_subcommand("audit", "run the inequality audit battery");
  add_common(aud);
  aud->add_option("--seed", seed, "audit RNG seed");
  aud->add_option("--inject-fault", inject_fault,
                  "perturb a constant to exercise the failure path");
  CLI::App* end = app.add_subcommand(
      "endpoints", "R_0 / R_lambda / Shtarkov sandwich table");
  add_common(end);
  CLI::App* dump =
      app.add_subcommand("mixture-dump", "dump a mixture as per-type CSV");
  add_common(dump);
  dump->add_option("--kind", mixture_kind,
                   "jeffreys | modified-binary | modified-general");
  dump->add_option("--out", dump_out, "output path (stdout when empty)");

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) {
      // file first, then explicit flags win: re-parse
      SweepConfig file_cfg;
      apply_config_file(config_path, &file_cfg);
      cfg = file_cfg;
      app.clear();
      app.parse(argc, argv);
    }
    validate(cfg);
    if (red->parsed()) return cmd_redundancy(cfg);
    if (zch->parsed()) return cmd_zchannel(cfg);
    if (aud->parsed()) return cmd_audit(cfg, seed, inject_fault);
    if (end->parsed()) return cmd_endpoints(cfg);
    if (dump->parsed()) return cmd_mixture_dump(cfg, mixture_kind, dump_out);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
