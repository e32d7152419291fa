#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "setsched/instance.hpp"
#include "setsched/schedule.hpp"

namespace setsched {

enum class Violation {
  MalformedSegment,   // nonpositive length, bad indices, wrong setup length
  MachineOverlap,
  JobParallelization,
  IncompleteJob,
  OverScheduledJob,
  MissingSetup,       // piece run without a covering setup of its class
  MakespanExceeded,
  MachineCountExceeded,
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::MalformedSegment: return "malformed segment";
    case Violation::MachineOverlap: return "machine overlap";
    case Violation::JobParallelization: return "job parallelization";
    case Violation::IncompleteJob: return "incomplete job";
    case Violation::OverScheduledJob: return "over-scheduled job";
    case Violation::MissingSetup: return "missing setup";
    case Violation::MakespanExceeded: return "makespan exceeded";
    case Violation::MachineCountExceeded: return "machine count exceeded";
  }
  return "?";
}

struct ValidationIssue {
  Violation kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::vector<long long> setup_census;  // lambda_i: setups of class i in the schedule

  bool ok() const { return issues.empty(); }

  std::string summary() const {
    std::ostringstream os;
    for (const auto& i : issues) os << to_string(i.kind) << ": " << i.detail << "\n";
    return os.str();
  }
};

// Feasibility oracle. Shares no placement code with the solvers; it only
// reads the finished schedule. Coverage rule: every maximal run of class-i
// pieces on a machine (runs are broken by another class's segment, never by
// idle time) must be preceded on that machine by a setup of class i with no
// other class's segment in between.
inline ValidationReport validate(const Schedule& sched, const Instance& inst,
                                 const Rational& limit) {
  ValidationReport rep;
  rep.setup_census.assign(inst.classes.size(), 0);
  auto issue = [&rep](Violation kind, std::string detail) {
    rep.issues.push_back({kind, std::move(detail)});
  };

  if (static_cast<int>(sched.machines.size()) > inst.machine_count)
    issue(Violation::MachineCountExceeded,
          std::to_string(sched.machines.size()) + " machines used, m = " +
              std::to_string(inst.machine_count));

  std::vector<Rational> scheduled(inst.jobs.size(), Rational(0));
  // (start, end, job) for the parallelization sweep
  std::vector<std::tuple<Rational, Rational, int>> piece_intervals;

  for (size_t qi = 0; qi < sched.machines.size(); ++qi) {
    std::vector<Segment> segs = sched.machines[qi];
    std::sort(segs.begin(), segs.end(),
              [](const Segment& a, const Segment& b) { return a.start < b.start; });

    int covered_class = -1;  // class of the setup still covering this point of the scan
    Rational prev_end = 0;
    bool first = true;
    for (const Segment& seg : segs) {
      const std::string where = "machine " + std::to_string(qi);
      if (seg.start < Rational(0) || seg.end <= seg.start) {
        issue(Violation::MalformedSegment, where + ": empty or negative-time segment");
        continue;
      }
      if (seg.class_index < 0 || seg.class_index >= inst.num_classes()) {
        issue(Violation::MalformedSegment, where + ": bad class index");
        continue;
      }
      if (!first && seg.start < prev_end)
        issue(Violation::MachineOverlap, where + " at " + seg.start.str());
      prev_end = max(prev_end, seg.end);
      first = false;

      if (seg.kind == Segment::Kind::Setup) {
        if (seg.amount() != inst.classes[static_cast<size_t>(seg.class_index)].setup) {
          issue(Violation::MalformedSegment,
                where + ": setup of class " + std::to_string(seg.class_index) +
                    " has wrong length " + seg.amount().str());
        }
        rep.setup_census[static_cast<size_t>(seg.class_index)] += 1;
        covered_class = seg.class_index;
      } else {
        if (seg.job_index < 0 || seg.job_index >= inst.num_jobs()) {
          issue(Violation::MalformedSegment, where + ": bad job index");
          continue;
        }
        const Job& job = inst.jobs[static_cast<size_t>(seg.job_index)];
        if (job.class_index != seg.class_index) {
          issue(Violation::MalformedSegment,
                where + ": piece of job " + std::to_string(seg.job_index) +
                    " tagged with wrong class");
          continue;
        }
        if (seg.class_index != covered_class) {
          // A zero-setup class needs no setup segment, but its pieces still
          // break other classes' runs.
          if (inst.classes[static_cast<size_t>(seg.class_index)].setup > Rational(0)) {
            issue(Violation::MissingSetup,
                  where + ": piece of class " + std::to_string(seg.class_index) + " at " +
                      seg.start.str() + " has no covering setup");
          }
          covered_class = seg.class_index;
        }
        scheduled[static_cast<size_t>(seg.job_index)] += seg.amount();
        piece_intervals.emplace_back(seg.start, seg.end, seg.job_index);
      }
    }
  }

  for (size_t ji = 0; ji < inst.jobs.size(); ++ji) {
    if (scheduled[ji] < inst.jobs[ji].processing)
      issue(Violation::IncompleteJob,
            "job " + std::to_string(ji) + " scheduled " + scheduled[ji].str() + " of " +
                inst.jobs[ji].processing.str());
    else if (scheduled[ji] > inst.jobs[ji].processing)
      issue(Violation::OverScheduledJob,
            "job " + std::to_string(ji) + " scheduled " + scheduled[ji].str() + " of " +
                inst.jobs[ji].processing.str());
  }

  // Two pieces of one job must never run at the same time, across machines.
  std::sort(piece_intervals.begin(), piece_intervals.end(),
            [](const auto& a, const auto& b) {
              if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
              return std::get<0>(a) < std::get<0>(b);
            });
  for (size_t k = 1; k < piece_intervals.size(); ++k) {
    const auto& prev = piece_intervals[k - 1];
    const auto& cur = piece_intervals[k];
    if (std::get<2>(prev) == std::get<2>(cur) && std::get<0>(cur) < std::get<1>(prev))
      issue(Violation::JobParallelization,
            "job " + std::to_string(std::get<2>(cur)) + " at " + std::get<0>(cur).str());
  }

  Rational ms = makespan(sched);
  if (ms > limit)
    issue(Violation::MakespanExceeded, ms.str() + " > " + limit.str());

  return rep;
}

}  // namespace setsched
