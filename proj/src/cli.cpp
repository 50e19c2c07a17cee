#include "reprfn/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "reprfn/emit.hpp"
#include "reprfn/proximity.hpp"
#include "reprfn/repfunc.hpp"
#include "reprfn/sequences.hpp"
#include "reprfn/squares_oracle.hpp"

namespace reprfn {

namespace {

struct RunConfig {
  std::string seq;
  std::string seq_a;
  std::string seq_b;
  std::size_t horizon = 0;
  std::uint64_t range_max = 0;
  std::uint64_t seed = 0;
  std::string growth;
  std::string format = "csv";
  std::string out_path;
  unsigned parallel = 1;
  bool records_only = false;
};

Format output_format(const RunConfig& cfg) {
  return cfg.format == "json" ? Format::Json : Format::Csv;
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out_path, "Write output to PATH instead of standard output");
}

void add_horizon(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-k,-K,--horizon", cfg.horizon, "Prefix length (horizon)")
      ->required()
      ->check(CLI::PositiveNumber);
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto prefix = materialize(parse_sequence_spec(cfg.seq), cfg.horizon);
  write_table(spectrum_table(spectrum(prefix)), output_format(cfg), out);
  return kExitOk;
}

int cmd_utrace(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto trace = u_trace(parse_sequence_spec(cfg.seq), cfg.horizon);
  write_table(trace_table(trace), output_format(cfg), out);
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto trace = pair_trace(parse_sequence_spec(cfg.seq_a), parse_sequence_spec(cfg.seq_b),
                                cfg.horizon, cfg.parallel > 1);
  write_table(pair_trace_table(trace), output_format(cfg), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto a = materialize(parse_sequence_spec(cfg.seq_a), cfg.horizon);
  const auto b = materialize(parse_sequence_spec(cfg.seq_b), cfg.horizon);
  const auto u = u_trace(a);
  const auto v = u_trace(b);
  const auto trace = pair_trace(a, b, u, v);
  const auto swapped = pair_trace(b, a, v, u);

  Table table{{"check", "k", "checked", "failures", "result"}, {}};
  bool all_ok = true;
  auto add = [&](std::string name, std::uint64_t checked, std::uint64_t failures) {
    all_ok = all_ok && failures == 0;
    table.rows.push_back({std::move(name), std::uint64_t{cfg.horizon}, checked, failures,
                          std::string(failures == 0 ? "ok" : "fail")});
  };

  for (const auto* t : {&trace, &swapped}) {
    const auto cx = verify_sandwich(*t);
    if (cx) {
      err << (t == &trace ? "sandwich" : "sandwich_swapped") << ": counterexample at k = "
          << cx->k << " (" << to_string(cx->side) << " side)\n";
    }
    add(t == &trace ? "sandwich" : "sandwich_swapped", t->size(), cx ? 1 : 0);
  }

  std::uint64_t sums = 0;
  std::uint64_t failing = 0;
  for (const auto& [n, count] : spectrum(b)) {
    ++sums;
    const auto report = window_cover_check(a, b, n);
    if (!report.ok()) {
      if (failing == 0) {
        err << "window_cover: n = " << n << " has " << report.offenders.size()
            << " offending couples, window total " << report.window_total << " vs |F| = "
            << report.pairs_checked() << "\n";
      }
      ++failing;
    }
  }
  add("window_cover", sums, failing);

  const auto view = finite_horizon_view(trace);
  add("finite_horizon_view", 1, view.holds ? 0 : 1);

  write_table(table, output_format(cfg), out);
  err << (all_ok ? "all checks passed" : "counterexample found") << " (K = " << cfg.horizon
      << ")\n";
  return all_ok ? kExitOk : kExitCounterexample;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto report = cross_check(cfg.range_max, cfg.parallel);
  write_table(oracle_table(report, cfg.records_only), output_format(cfg), out);
  for (const auto& m : report.mismatches) {
    err << "mismatch at n = " << m.n << ": divisor formula " << m.jacobi << ", brute force "
        << m.brute << "\n";
  }
  err << report.records.size() << " records, " << report.mismatches.size()
      << " mismatches up to n = " << report.range_max << "\n";
  return report.ok() ? kExitOk : kExitCounterexample;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto growth = GrowthSpec::parse(cfg.growth);
  const auto squares = materialize(Squares{}, cfg.horizon);
  const auto u = u_trace(squares);
  const auto perturbed = perturb_squares(growth, cfg.seed, cfg.horizon, u.values);
  const auto v = u_trace(perturbed.prefix);
  const auto trace = pair_trace(squares, perturbed.prefix, u, v);
  const auto evidence = upper_class_evidence(squares, trace);

  write_table(classify_table(squares, perturbed, trace, evidence), output_format(cfg), out);

  const auto& rep = perturbed.report;
  err << "g = " << growth.to_string() << ", seed = " << cfg.seed << ", K = " << cfg.horizon
      << "\n";
  err << "clamp_count = " << rep.clamp_count() << ", bound_violations = [";
  for (std::size_t i = 0; i < rep.bound_violations.size(); ++i) {
    err << (i ? "," : "") << rep.bound_violations[i];
  }
  err << "]\n";
  err << "w records:";
  for (const auto& r : evidence.records) err << " k=" << r.k << ":" << r.w;
  err << "\n";
  err << "final w = " << evidence.final_w << "; s(A), s(B) >= " << evidence.implied_lower_bound
      << " (" << evidence.label << ")\n";

  if (auto cx = verify_sandwich(trace)) {
    err << "sandwich counterexample at k = " << cx->k << "\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Additive representation functions of integer-sequence prefixes", "reprfn"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Representation counts of one prefix");
  spectrum_cmd->add_option("--seq", cfg.seq, "Sequence spec")->required();
  add_horizon(spectrum_cmd, cfg);

  auto* utrace_cmd = app.add_subcommand("utrace", "u(k) = s(A(k)) for k = 1..K");
  utrace_cmd->add_option("--seq", cfg.seq, "Sequence spec")->required();
  add_horizon(utrace_cmd, cfg);

  auto* compare_cmd = app.add_subcommand("compare", "Pair trace of two sequences");
  auto* verify_cmd = app.add_subcommand("verify", "Audit the sandwich bounds and window covering");
  for (auto* cmd : {compare_cmd, verify_cmd}) {
    cmd->add_option("--seq-a", cfg.seq_a, "Sequence spec for A")->required();
    cmd->add_option("--seq-b", cfg.seq_b, "Sequence spec for B")->required();
    add_horizon(cmd, cfg);
  }
  compare_cmd->add_option("--parallel", cfg.parallel, "Build the two traces concurrently when > 1")
      ->check(CLI::PositiveNumber);

  auto* oracle_cmd = app.add_subcommand("oracle", "Divisor formula vs brute force, n <= max");
  oracle_cmd->add_option("--max", cfg.range_max, "Largest n checked")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--parallel", cfg.parallel, "Worker threads")
      ->check(CLI::Range(1u, 256u));
  oracle_cmd->add_flag("--records-only", cfg.records_only, "Emit only record-setting rows");

  auto* classify_cmd = app.add_subcommand("classify", "Perturbed squares and w evidence");
  classify_cmd->add_option("--g", cfg.growth, "const:C | pow:C,ALPHA | invlog:C")->required();
  classify_cmd->add_option("--seed", cfg.seed, "PRNG seed")->required();
  add_horizon(classify_cmd, cfg);

  const std::map<const CLI::App*, std::function<int(const RunConfig&, std::ostream&, std::ostream&)>>
      handlers{{spectrum_cmd, cmd_spectrum}, {utrace_cmd, cmd_utrace},
               {compare_cmd, cmd_compare},   {verify_cmd, cmd_verify},
               {oracle_cmd, cmd_oracle},     {classify_cmd, cmd_classify}};
  for (const auto& [cmd, handler] : handlers) {
    add_output_options(const_cast<CLI::App*>(cmd), cfg);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  std::ostringstream buffer;
  int status = kExitOk;
  try {
    status = handlers.at(chosen)(cfg, buffer, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!(file << buffer.str())) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return kExitInputError;
    }
  }
  return status;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"reprfn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace reprfn
