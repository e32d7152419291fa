#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "setsched/rational.hpp"

namespace setsched {

struct Job {
  int class_index = 0;
  Rational processing;  // > 0
};

struct JobClass {
  Rational setup;  // >= 0
};

// Problem input: m identical machines, classes with setup times, jobs with
// processing times. Every class referenced by a job must exist, every class
// must own at least one job, and c <= n.
struct Instance {
  int machine_count = 1;
  std::vector<JobClass> classes;
  std::vector<Job> jobs;

  int num_classes() const { return static_cast<int>(classes.size()); }
  int num_jobs() const { return static_cast<int>(jobs.size()); }

  Rational class_total(int ci) const {
    Rational total = 0;
    for (const Job& j : jobs)
      if (j.class_index == ci) total += j.processing;
    return total;
  }

  // Per-class totals P(C_i) in one pass.
  std::vector<Rational> class_totals() const {
    std::vector<Rational> totals(classes.size(), Rational(0));
    for (const Job& j : jobs) totals[static_cast<size_t>(j.class_index)] += j.processing;
    return totals;
  }

  Rational total_load() const {
    Rational load = 0;
    for (const JobClass& c : classes) load += c.setup;
    for (const Job& j : jobs) load += j.processing;
    return load;
  }

  // Throws std::invalid_argument on any structural violation.
  void check() const {
    if (machine_count < 1) throw std::invalid_argument("instance: machine_count must be >= 1");
    if (classes.size() > jobs.size())
      throw std::invalid_argument("instance: more classes than jobs");
    std::vector<int> seen(classes.size(), 0);
    for (const Job& j : jobs) {
      if (j.class_index < 0 || j.class_index >= num_classes())
        throw std::invalid_argument("instance: job references unknown class");
      if (!(j.processing > Rational(0)))
        throw std::invalid_argument("instance: job processing must be > 0");
      seen[static_cast<size_t>(j.class_index)] = 1;
    }
    for (size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].setup < Rational(0))
        throw std::invalid_argument("instance: negative setup");
      if (!seen[i])
        throw std::invalid_argument("instance: class " + std::to_string(i) + " has no jobs");
    }
  }
};

// max( max_j (s_j + p_j), (1/m) * sum_i (s_i + P(C_i)) ). Never exceeds OPT:
// some machine must run the longest job after its setup, and the total load
// including one mandatory setup per class must fit on m machines.
inline Rational lower_bound(const Instance& inst) {
  Rational elapsed = 0;
  for (const Job& j : inst.jobs)
    elapsed = max(elapsed, inst.classes[static_cast<size_t>(j.class_index)].setup + j.processing);
  Rational avg = inst.total_load() / Rational(inst.machine_count);
  return max(elapsed, avg);
}

}  // namespace setsched
