#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "setsched/search.hpp"
#include "setsched/validate.hpp"

namespace setsched {

struct BenchRow {
  std::string id;
  int machines = 0;
  int jobs = 0;
  Rational makespan_value;
  Rational accepted_T;
  std::optional<Rational> ratio;  // vs the certificate optimum, when known
  int decide_calls = 0;
  double millis = 0.0;
  bool valid = false;
  bool fallback = false;
};

struct BenchInput {
  std::string id;
  Instance instance;
  std::optional<Rational> opt;
};

inline BenchRow bench_one(const BenchInput& input, const Rational& epsilon) {
  SearchConfig config;
  config.epsilon = epsilon;
  auto start = std::chrono::steady_clock::now();
  SolveResult res = solve(input.instance, config);
  auto stop = std::chrono::steady_clock::now();

  BenchRow row;
  row.id = input.id;
  row.machines = input.instance.machine_count;
  row.jobs = input.instance.num_jobs();
  row.makespan_value = makespan(res.schedule);
  row.accepted_T = res.accepted_T;
  row.decide_calls = res.decide_calls;
  row.fallback = res.fallback_used;
  row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
  Rational limit = res.accepted_T * frac(4, 3);
  row.valid = validate(res.schedule, input.instance, limit).ok();
  if (input.opt) row.ratio = row.makespan_value / *input.opt;
  return row;
}

inline std::vector<BenchRow> bench(const std::vector<BenchInput>& corpus, const Rational& epsilon) {
  std::vector<BenchRow> rows;
  rows.reserve(corpus.size());
  for (const BenchInput& in : corpus) rows.push_back(bench_one(in, epsilon));
  return rows;
}

inline std::string bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "id\tm\tn\tmakespan\taccepted_T\tratio\tdecides\tms\tvalid\n";
  for (const BenchRow& r : rows) {
    os << r.id << "\t" << r.machines << "\t" << r.jobs << "\t" << r.makespan_value.str() << "\t"
       << r.accepted_T.str() << "\t" << (r.ratio ? r.ratio->str() : "-") << "\t" << r.decide_calls
       << "\t" << r.millis << "\t" << (r.valid ? "yes" : "NO") << "\n";
  }
  return os.str();
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "id,machines,jobs,makespan,accepted_T,ratio,decide_calls,millis,valid,fallback\n";
  for (const BenchRow& r : rows) {
    os << r.id << "," << r.machines << "," << r.jobs << "," << r.makespan_value.str() << ","
       << r.accepted_T.str() << "," << (r.ratio ? r.ratio->str() : "") << "," << r.decide_calls
       << "," << r.millis << "," << (r.valid ? 1 : 0) << "," << (r.fallback ? 1 : 0) << "\n";
  }
  return os.str();
}

}  // namespace setsched
