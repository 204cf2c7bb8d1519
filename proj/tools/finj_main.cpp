// finj: run and verify finite-horizon diagonalization scenarios.
//
//   finj run <scenario> [--out DIR] [--seed N] [--horizon N] [--strict]
//   finj replay <trace> [--strict]
//   finj verify <trace> [--strict]
//   finj gen <scenario> [--out DIR] [--seed N] [--horizon N]
//   finj report <trace-or-report>
//
// Exit code 0 only when every verifier check passes.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "finj/runner.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << data;
}

finj::Scenario load_with_overrides(const std::string& path, std::int64_t seed,
                                   std::int64_t horizon) {
  finj::Scenario sc = finj::load_scenario_file(path);
  if (seed >= 0) sc.seed = static_cast<std::uint64_t>(seed);
  if (horizon >= 0) sc.horizon = static_cast<std::uint32_t>(horizon);
  return sc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-horizon diagonalization workbench"};
  app.require_subcommand(1);

  std::string scenario_path, trace_path, out_dir = ".";
  std::int64_t seed = -1, horizon = -1;
  bool strict = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--strict", strict, "treat undetermined verdicts as failures");
  };

  auto* run_cmd = app.add_subcommand("run", "run a scenario, persist trace and report");
  run_cmd->add_option("scenario", scenario_path)->required();
  run_cmd->add_option("--out", out_dir, "output directory");
  run_cmd->add_option("--seed", seed, "override the scenario seed");
  run_cmd->add_option("--horizon", horizon, "override the scenario horizon");
  add_common(run_cmd);

  auto* replay_cmd = app.add_subcommand("replay", "re-derive a report from a trace");
  replay_cmd->add_option("trace", trace_path)->required();
  replay_cmd->add_option("--out", out_dir, "output directory");
  add_common(replay_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "verify a persisted trace");
  verify_cmd->add_option("trace", trace_path)->required();
  add_common(verify_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "generate and persist a scenario's inputs");
  gen_cmd->add_option("scenario", scenario_path)->required();
  gen_cmd->add_option("--out", out_dir, "output directory");
  gen_cmd->add_option("--seed", seed, "override the scenario seed");
  gen_cmd->add_option("--horizon", horizon, "override the scenario horizon");

  auto* report_cmd = app.add_subcommand("report", "print the human table of a trace/report");
  report_cmd->add_option("trace", trace_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      finj::Scenario sc = load_with_overrides(scenario_path, seed, horizon);
      auto t0 = std::chrono::steady_clock::now();
      finj::RunOutcome out = finj::run_scenario(sc);
      out.report.wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
              .count();
      fs::create_directories(out_dir);
      fs::path base = fs::path(out_dir) / (std::string(finj::engine_name(sc.engine)) + "-" +
                                           sc.digest());
      write_file(base.string() + ".trace", out.trace_text);
      write_file(base.string() + ".report", out.report.serialize());
      std::cout << out.report.human_table();
      std::cout << "trace  " << base.string() << ".trace\n";
      std::cout << "report " << base.string() << ".report\n";
      return out.report.all_pass(strict) ? 0 : 1;
    }
    if (replay_cmd->parsed() || verify_cmd->parsed()) {
      finj::RunReport report = finj::replay_trace(read_file(trace_path));
      std::cout << report.human_table();
      if (replay_cmd->parsed()) {
        fs::create_directories(out_dir);
        fs::path base = fs::path(out_dir) / (report.engine + "-" + report.digest + ".replay");
        write_file(base.string() + ".report", report.serialize());
        std::cout << "report " << base.string() << ".report\n";
      }
      return report.all_pass(strict) ? 0 : 1;
    }
    if (gen_cmd->parsed()) {
      finj::Scenario sc = load_with_overrides(scenario_path, seed, horizon);
      fs::create_directories(out_dir);
      fs::path base = fs::path(out_dir) / ("scenario-" + sc.digest() + ".scn");
      write_file(base, sc.canonical());
      std::cout << "scenario " << base.string() << " (digest " << sc.digest() << ")\n";
      return 0;
    }
    if (report_cmd->parsed()) {
      std::string text = read_file(trace_path);
      if (text.rfind("finj-report v1", 0) == 0) {
        std::cout << finj::RunReport::parse(text).human_table();
      } else {
        std::cout << finj::replay_trace(text).human_table();
      }
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
