#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pcg_paradox/pcg_paradox.hpp"

namespace pcg_paradox::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_no_paradox = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_domain = 65;

struct RunConfig {
  std::string input;            // pcg.json (validate/color/verify) or state.json (--state)
  std::string family;           // pcg|s1|s2|s3|S|S_prime|magic
  int n = 0;
  int d = 0;
  std::string kind = "square2";
  bool augmented = false;
  double tolerance = 1e-9;
  double noise = 1.0;
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
  std::string basis;
  bool expect_paradox = false;
  bool no_cover = false;
  std::string format = "json";
  std::string output;
};

namespace detail {

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, path + ": " + ex.what());
  }
}

inline unsigned thread_budget() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("PCG_PARADOX_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) threads = std::min(threads, static_cast<unsigned>(v));
  }
  return threads;
}

inline MagicSquareConfig parse_magic(const RunConfig& cfg) {
  MagicSquareConfig m;
  m.augmented = cfg.augmented;
  if (cfg.kind == "square2") {
    m.kind = MagicKind::Square2;
  } else if (cfg.kind == "square3") {
    m.kind = MagicKind::Square3;
  } else if (cfg.kind == "square4") {
    m.kind = MagicKind::Square4;
  } else if (cfg.kind == "cube2") {
    m.kind = MagicKind::Cube2;
  } else {
    throw CLI::ValidationError("--kind", "expected square2, square3, square4 or cube2");
  }
  return m;
}

inline StateRecipe recipe_for(const RunConfig& cfg) {
  StateRecipe r;
  if (cfg.family == "pcg") {
    if (cfg.input.empty()) throw CLI::RequiredError("--family pcg needs a PCG file");
    r.family = StateFamily::PcgState;
    r.pcg = pcg_from_json_relaxed(read_json_file(cfg.input));
  } else if (cfg.family == "s1") {
    r.family = StateFamily::S1;
    r.n = cfg.n;
  } else if (cfg.family == "s2") {
    r.family = StateFamily::S2;
    r.n = cfg.n;
  } else if (cfg.family == "s3") {
    r.family = StateFamily::S3;
    r.d = cfg.d;
  } else if (cfg.family == "S") {
    r.family = StateFamily::NamedS;
  } else if (cfg.family == "S_prime") {
    r.family = StateFamily::NamedSPrime;
  } else if (cfg.family == "magic") {
    r.family = StateFamily::MagicSquare;
    r.magic = parse_magic(cfg);
  } else {
    throw CLI::ValidationError("--family", "unknown family '" + cfg.family + "'");
  }
  return r;
}

struct Subject {
  std::optional<GeneratedState> generated;
  std::optional<StateVector> loaded;

  const StateVector& state() const { return generated ? generated->state : *loaded; }
  const std::optional<Pcg>* pcg() const { return generated ? &generated->pcg : nullptr; }
};

inline Subject load_subject(const RunConfig& cfg) {
  Subject s;
  if (cfg.family.empty()) {
    if (cfg.input.empty()) throw CLI::RequiredError("--family or --state");
    s.loaded = state_from_json(read_json_file(cfg.input));
  } else {
    s.generated = realize(recipe_for(cfg));
  }
  return s;
}

inline std::string coloring_string(const Coloring& c) {
  std::string s;
  for (auto [v, color] : c.values) s += color == Color::Red ? 'R' : 'G';
  return s;
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + cfg.output);
  f << text;
}

// ---- subcommands -------------------------------------------------------------

inline int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  emit(cfg, canonical_dump(to_json(pcg_from_json(read_json_file(cfg.input)))), out);
  return exit_ok;
}

inline int cmd_color(const RunConfig& cfg, std::ostream& out) {
  const auto pcg = pcg_from_json(read_json_file(cfg.input));
  const auto exhaust = brute_force_color(pcg, {24, thread_budget()});
  const auto sys = build_hardy_system(pcg);
  const auto solved = solve_coloring(pcg);
  json j;
  j["brute_force"] = {{"count", exhaust.count},
                      {"first", exhaust.first ? json(coloring_string(*exhaust.first)) : json(nullptr)}};
  j["gf2"] = {{"rank_a", sys.rank_a},
              {"rank_b", sys.rank_b},
              {"family", std::string(to_string(sys.rank_a == sys.rank_b ? HardyFamily::RankEqual
                                                                        : HardyFamily::RankDiffer))},
              {"coloring", solved ? json(coloring_string(*solved)) : json(nullptr)}};
  j["hardy_matrix"] = sys.dump();
  j["colorable"] = exhaust.count > 0;
  j["agree"] = (exhaust.count > 0) == solved.has_value() && (!solved || evaluate_coloring(pcg, *solved).all);
  emit(cfg, canonical_dump(j), out);
  return exit_ok;
}

inline int cmd_state(const RunConfig& cfg, std::ostream& out) {
  const auto gen = realize(recipe_for(cfg));
  if (cfg.format == "ket") {
    emit(cfg, format_kets(gen.state) + "\n", out);
  } else {
    json j = to_json(gen.state);
    if (gen.pcg) j["pcg"] = to_json(*gen.pcg);
    emit(cfg, canonical_dump(j), out);
  }
  return exit_ok;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  opts.tolerance = cfg.tolerance;
  opts.brute_force.threads = thread_budget();
  ParadoxCertificate cert;
  if (cfg.family.empty()) {
    if (cfg.input.empty()) throw CLI::RequiredError("a PCG file or --family");
    cert = verify_paradox(pcg_from_json(read_json_file(cfg.input)), opts);
  } else if (cfg.family == "s3") {
    cert = verify_s3_paradox(cfg.d, cfg.tolerance);
  } else {
    const auto gen = realize(recipe_for(cfg));
    cert = verify_paradox(*gen.pcg, opts);
  }
  emit(cfg, canonical_dump(to_json(cert)), out);
  return cfg.expect_paradox && cert.verdict != Verdict::Paradox ? exit_no_paradox : exit_ok;
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  emit(cfg, catalog_csv(enumerate_classes(cfg.n, !cfg.no_cover)), out);
  return exit_ok;
}

inline int cmd_metrics(const RunConfig& cfg, std::ostream& out) {
  const auto subject = load_subject(cfg);
  const auto& psi = subject.state();
  const auto rho = white_noise_mix(psi, cfg.noise);
  json j;
  j["visibility"] = cfg.noise;
  j["fidelity"] = fidelity(rho, psi);
  j["all_zero_probability"] = std::real(rho.matrix()(0, 0));
  json neg = json::object();
  for (int s = 1; s <= rho.num_sites(); ++s) neg[std::to_string(s)] = negativity_bipartition(rho, s);
  j["negativity"] = neg;
  if (rho.num_sites() == 3 && rho.site_dim() == 2) j["tripartite_negativity"] = tripartite_negativity(rho);
  if (const auto* pcg = subject.pcg(); pcg && pcg->has_value()) {
    json conds = json::array();
    const auto& g = **pcg;
    for (std::size_t i = 0; i < g.p(); ++i) {
      const auto cond = g.complement(i);
      conds.push_back({{"edge", g.edge(i).vertices},
                       {"conditioned_zero", cond},
                       {"ideal", -theta(g.edge(i).weight)},
                       {"expectation", conditional_x_expectation(rho, cond, g.edge(i).vertices)}});
    }
    j["conditional_expectations"] = conds;
  }
  emit(cfg, canonical_dump(j), out);
  return exit_ok;
}

inline int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  const auto subject = load_subject(cfg);
  const auto& psi = subject.state();
  const auto plan = cfg.basis.empty() ? MeasurementPlan::all_z(psi.num_sites()) : MeasurementPlan::parse(cfg.basis);
  std::mt19937_64 rng(cfg.seed);
  const auto counts = cfg.noise < 1.0 ? sample_shots(white_noise_mix(psi, cfg.noise), plan, cfg.shots, rng)
                                      : sample_shots(psi, plan, cfg.shots, rng);
  std::string basis;
  for (auto b : plan.bases) basis += b == Basis::Z ? 'Z' : 'X';
  json j{{"shots", cfg.shots}, {"seed", cfg.seed}, {"basis", basis}, {"counts", to_json(counts)}};
  if (cfg.noise < 1.0) j["visibility"] = cfg.noise;
  emit(cfg, canonical_dump(j), out);
  return exit_ok;
}

inline int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 3) throw Error(ErrorCode::BadDim, "compare needs --n >= 3");
  std::ostringstream os;
  os << "n,pigeonhole,generalized_hardy,simulated\n";
  for (int n = 3; n <= cfg.n; n += 2) {
    const auto c = success_comparison(n);
    using pcg_paradox::detail::format_double;
    os << n << ',' << format_double(c.pigeonhole) << ',' << format_double(c.generalized_hardy) << ','
       << format_double(c.simulated) << '\n';
  }
  emit(cfg, os.str(), out);
  return exit_ok;
}

inline int cmd_residual(const RunConfig& cfg, std::ostream& out) {
  Pcg pcg = cfg.family.empty() ? pcg_from_json_relaxed(read_json_file(cfg.input))
                               : [&] {
                                   auto gen = realize(recipe_for(cfg));
                                   if (!gen.pcg) throw Error(ErrorCode::WrongShape, "family has no generating graph");
                                   return *gen.pcg;
                                 }();
  const auto state = build_pcg_state(pcg);
  json j;
  j["hardy_product_residual"] = hardy_product_residual(state, pcg);
  j["uncolorable"] = is_uncolorable(pcg).uncolorable;
  if (pcg.n() == 3) j["hardy_projector_residual"] = hardy_projector_residual(state);
  emit(cfg, canonical_dump(j), out);
  return exit_ok;
}

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projected-coloring graphs and Hardy-like quantum pigeonhole paradoxes", "pcg-paradox"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_source = [&cfg](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "pcg | s1 | s2 | s3 | S | S_prime | magic");
    sub->add_option("--n", cfg.n, "vertex count for s1/s2");
    sub->add_option("--d", cfg.d, "site dimension for s3");
    sub->add_option("--kind", cfg.kind, "magic: square2 | square3 | square4 | cube2");
    sub->add_flag("--augmented", cfg.augmented, "magic: add the extra constraint edge");
    sub->add_option("--pcg", cfg.input, "PCG JSON file for --family pcg");
  };
  auto add_output = [&cfg](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "write to file"); };

  auto* validate = app.add_subcommand("validate", "validate a PCG file and print its canonical form");
  validate->add_option("graph", cfg.input, "PCG JSON file")->required();
  add_output(validate);

  auto* color = app.add_subcommand("color", "colour a PCG by exhaustion and by GF(2) elimination");
  color->add_option("graph", cfg.input, "PCG JSON file")->required();
  add_output(color);

  auto* state = app.add_subcommand("state", "build a named or graph state");
  add_source(state);
  state->add_option("--format", cfg.format, "json | ket")->check(CLI::IsMember({"json", "ket"}));
  add_output(state);

  auto* verify = app.add_subcommand("verify", "emit a paradox certificate");
  verify->add_option("graph", cfg.input, "PCG JSON file");
  add_source(verify);
  verify->add_option("--tolerance", cfg.tolerance, "allowed |P - 1| for conditionals")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--expect-paradox", cfg.expect_paradox, "exit 2 unless the verdict is Paradox");
  add_output(verify);

  auto* enumerate = app.add_subcommand("enumerate", "catalogue PCG classes up to relabeling (CSV)");
  enumerate->add_option("--n", cfg.n)->required();
  enumerate->add_flag("--no-cover", cfg.no_cover, "include graphs leaving vertices uncovered");
  add_output(enumerate);

  auto* metrics = app.add_subcommand("metrics", "fidelity and negativities under white noise");
  add_source(metrics);
  metrics->add_option("--state", cfg.input, "state JSON file");
  metrics->add_option("--noise", cfg.noise, "visibility v in [0, 1]");
  add_output(metrics);

  auto* sample = app.add_subcommand("sample", "seeded multinomial measurement shots");
  add_source(sample);
  sample->add_option("--state", cfg.input, "state JSON file");
  sample->add_option("--shots", cfg.shots)->check(CLI::PositiveNumber);
  sample->add_option("--seed", cfg.seed);
  sample->add_option("--basis", cfg.basis, "per-site bases, e.g. ZXX (default all Z)");
  sample->add_option("--noise", cfg.noise, "visibility v in [0, 1]");
  add_output(sample);

  auto* compare = app.add_subcommand("compare", "success probability: pigeonhole vs generalized Hardy (CSV)");
  compare->add_option("--n", cfg.n, "largest odd n")->required();
  add_output(compare);

  auto* residual = app.add_subcommand("residual", "experimental: norm of the joint Hardy projector on the state");
  residual->add_option("graph", cfg.input, "PCG JSON file");
  add_source(residual);
  add_output(residual);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (validate->parsed()) return detail::cmd_validate(cfg, out);
    if (color->parsed()) return detail::cmd_color(cfg, out);
    if (state->parsed()) return detail::cmd_state(cfg, out);
    if (verify->parsed()) return detail::cmd_verify(cfg, out);
    if (enumerate->parsed()) return detail::cmd_enumerate(cfg, out);
    if (metrics->parsed()) return detail::cmd_metrics(cfg, out);
    if (sample->parsed()) return detail::cmd_sample(cfg, out);
    if (compare->parsed()) return detail::cmd_compare(cfg, out);
    if (residual->parsed()) return detail::cmd_residual(cfg, out);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  } catch (const Error& e) {
    err << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return exit_domain;
  }
  return exit_usage;
}

}  // namespace pcg_paradox::cli
