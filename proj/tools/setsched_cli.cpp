#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "setsched/bench.hpp"
#include "setsched/gantt.hpp"
#include "setsched/generate.hpp"
#include "setsched/io.hpp"
#include "setsched/search.hpp"
#include "setsched/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

int cmd_solve(const std::string& input, const std::string& eps, const std::string& output,
              const std::string& gantt) {
  setsched::Instance inst = setsched::load_instance(input);
  setsched::SearchConfig config;
  config.epsilon = setsched::Rational::parse(eps);
  setsched::SolveResult res = setsched::solve(inst, config);
  if (res.fallback_used) {
    std::cerr << "internal: decider rejected the trivial upper bound\n";
    return kExitInternal;
  }
  setsched::Rational limit = res.accepted_T * setsched::frac(4, 3);
  setsched::ValidationReport rep = setsched::validate(res.schedule, inst, limit);
  if (!rep.ok()) {
    std::cerr << "internal: produced schedule failed validation\n" << rep.summary();
    return kExitInternal;
  }
  if (!output.empty()) setsched::save_schedule(output, res.schedule);
  if (!gantt.empty())
    setsched::write_file(gantt, setsched::render_gantt(res.schedule, inst, res.accepted_T));
  std::cout << "accepted_T " << res.accepted_T.str() << "\n"
            << "makespan " << setsched::makespan(res.schedule).str() << "\n"
            << "decide_calls " << res.decide_calls << "\n";
  return kExitOk;
}

int cmd_validate(const std::string& input, const std::string& schedule, const std::string& limit) {
  setsched::Instance inst = setsched::load_instance(input);
  setsched::Schedule sched = setsched::load_schedule(schedule);
  setsched::Rational lim = setsched::Rational::parse(limit);
  setsched::ValidationReport rep = setsched::validate(sched, inst, lim);
  for (size_t ci = 0; ci < rep.setup_census.size(); ++ci)
    std::cout << "setups class " << ci << ": " << rep.setup_census[ci] << "\n";
  if (rep.ok()) {
    std::cout << "feasible within " << lim.str() << "\n";
    return kExitOk;
  }
  std::cout << rep.summary();
  return kExitValidation;
}

int cmd_gen(const std::string& kind, std::uint64_t seed, int m, int c, int n, long opt,
            long setup, const std::string& output) {
  setsched::Instance inst;
  if (kind == "packed") {
    auto cert = setsched::generate_packed(seed, m, opt);
    std::cout << "opt " << cert.opt.str() << "\n";
    inst = cert.instance;
  } else if (kind == "single_class") {
    auto cert = setsched::generate_single_class(seed, m, setup, n);
    std::cout << "opt " << cert.opt.str() << "\n";
    inst = cert.instance;
  } else if (kind == "random") {
    inst = setsched::generate_random(seed, c);
  } else {
    std::cerr << "unknown kind '" << kind << "'\n";
    return kExitBadInput;
  }
  setsched::save_instance(output, inst);
  std::cout << "wrote " << output << " (m=" << inst.machine_count << ", c=" << inst.num_classes()
            << ", n=" << inst.num_jobs() << ")\n";
  return kExitOk;
}

int cmd_bench(const std::string& corpus, const std::string& eps, const std::string& csv) {
  std::vector<setsched::BenchInput> inputs;
  for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
    if (entry.path().extension() != ".json") continue;
    inputs.push_back({entry.path().filename().string(),
                      setsched::load_instance(entry.path().string()), std::nullopt});
  }
  std::sort(inputs.begin(), inputs.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  auto rows = setsched::bench(inputs, setsched::Rational::parse(eps));
  std::cout << setsched::bench_table(rows);
  if (!csv.empty()) setsched::write_file(csv, setsched::bench_csv(rows));
  for (const auto& r : rows)
    if (!r.valid || r.fallback) return kExitInternal;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preemptive makespan scheduling with class setup times"};
  app.require_subcommand(1);

  std::string input, output, gantt, schedule, limit, eps = "1/100", kind = "random", csv;
  std::uint64_t seed = 1;
  int m = 4, c = 8, n = 20;
  long opt = 100, setup = 2;

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("--input", input, "Instance file")->required();
  solve_cmd->add_option("--eps", eps, "Epsilon as p/q");
  solve_cmd->add_option("--output", output, "Schedule file to write");
  solve_cmd->add_option("--gantt", gantt, "SVG file to write");

  auto* val_cmd = app.add_subcommand("validate", "Validate a schedule");
  val_cmd->add_option("--input", input, "Instance file")->required();
  val_cmd->add_option("--schedule", schedule, "Schedule file")->required();
  val_cmd->add_option("--limit", limit, "Makespan limit as p/q")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--kind", kind, "packed|single_class|random");
  gen_cmd->add_option("--seed", seed, "RNG seed");
  gen_cmd->add_option("--m", m, "Machines");
  gen_cmd->add_option("--c", c, "Classes (random)");
  gen_cmd->add_option("--n", n, "Jobs (single_class)");
  gen_cmd->add_option("--opt", opt, "Target optimum (packed)");
  gen_cmd->add_option("--setup", setup, "Setup time (single_class)");
  gen_cmd->add_option("--output", output, "Instance file to write")->required();

  auto* bench_cmd = app.add_subcommand("bench", "Run a corpus");
  bench_cmd->add_option("--corpus", input, "Directory of instance files")->required();
  bench_cmd->add_option("--eps", eps, "Epsilon as p/q");
  bench_cmd->add_option("--csv", csv, "CSV report to write");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return cmd_solve(input, eps, output, gantt);
    if (val_cmd->parsed()) return cmd_validate(input, schedule, limit);
    if (gen_cmd->parsed()) return cmd_gen(kind, seed, m, c, n, opt, setup, output);
    if (bench_cmd->parsed()) return cmd_bench(input, eps, csv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
