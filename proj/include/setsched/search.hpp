#pragma once

#include <optional>
#include <stdexcept>

#include "setsched/decide.hpp"
#include "setsched/instance.hpp"
#include "setsched/schedule.hpp"

namespace setsched {

struct SearchConfig {
  Rational epsilon = frac(1, 100);  // > 0
  int max_iterations = 256;
  DecideOptions decide_opts;
};

struct SolveResult {
  Schedule schedule;
  Rational accepted_T;
  int decide_calls = 0;
  bool fallback_used = false;  // must never happen; tests treat it as failure
};

// All classes in sequence on machine 1: always feasible, makespan equals the
// total load. Seeds the bisection's upper end.
inline Schedule trivial_schedule(const Instance& inst) {
  Schedule sched;
  if (inst.jobs.empty()) return sched;
  auto totals = inst.class_totals();
  Rational pos = 0;
  auto jobs_of = [&](int ci) {
    std::vector<int> out;
    for (int ji = 0; ji < inst.num_jobs(); ++ji)
      if (inst.jobs[static_cast<size_t>(ji)].class_index == ci) out.push_back(ji);
    return out;
  };
  for (int ci = 0; ci < inst.num_classes(); ++ci) {
    const Rational& s = inst.classes[static_cast<size_t>(ci)].setup;
    sched.add(0, Segment::setup(ci, pos, pos + s));
    pos += s;
    for (int ji : jobs_of(ci)) {
      const Rational& p = inst.jobs[static_cast<size_t>(ji)].processing;
      sched.add(0, Segment::piece(ci, ji, pos, pos + p));
      pos += p;
    }
  }
  return sched;
}

// Dual binary search: keeps a rejected (or lower-bound) guess l and an
// accepted guess u, bisecting until u <= (1+eps) l. The returned schedule has
// makespan at most 4/3 u <= 4/3 (1+eps) OPT.
inline SolveResult solve(const Instance& inst, const SearchConfig& config = {}) {
  if (!(config.epsilon > Rational(0))) throw std::invalid_argument("solve: epsilon must be > 0");
  SolveResult result;
  if (inst.jobs.empty()) {
    result.accepted_T = 0;
    return result;
  }

  Rational lo = lower_bound(inst);
  Rational hi = inst.total_load();  // trivial schedule's makespan

  result.decide_calls++;
  if (auto at_lo = decide(inst, lo, config.decide_opts)) {
    result.schedule = std::move(*at_lo);
    result.accepted_T = lo;
    return result;
  }

  result.decide_calls++;
  auto at_hi = decide(inst, hi, config.decide_opts);
  if (!at_hi) {
    // The decider refused a trivially feasible makespan; fall back so the
    // caller still gets a valid schedule, and flag the defect.
    result.schedule = trivial_schedule(inst);
    result.accepted_T = hi;
    result.fallback_used = true;
    return result;
  }
  result.schedule = std::move(*at_hi);
  result.accepted_T = hi;

  int iterations = 0;
  while (hi > lo * (Rational(1) + config.epsilon) && iterations < config.max_iterations) {
    ++iterations;
    Rational mid = (lo + hi) * frac(1, 2);
    result.decide_calls++;
    if (auto at_mid = decide(inst, mid, config.decide_opts)) {
      result.schedule = std::move(*at_mid);
      result.accepted_T = mid;
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return result;
}

}  // namespace setsched
