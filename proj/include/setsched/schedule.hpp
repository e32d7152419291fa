#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "setsched/instance.hpp"
#include "setsched/rational.hpp"

namespace setsched {

// One block of machine time: either a setup of a class or a piece of a job.
// Intervals are closed-open [start, end), so abutting segments never overlap.
struct Segment {
  enum class Kind { Setup, Piece };
  Kind kind = Kind::Setup;
  int class_index = -1;
  int job_index = -1;  // pieces only
  Rational start;
  Rational end;

  Rational amount() const { return end - start; }

  static Segment setup(int ci, Rational start, Rational end) {
    Segment s;
    s.kind = Kind::Setup;
    s.class_index = ci;
    s.start = std::move(start);
    s.end = std::move(end);
    return s;
  }
  static Segment piece(int ci, int ji, Rational start, Rational end) {
    Segment s;
    s.kind = Kind::Piece;
    s.class_index = ci;
    s.job_index = ji;
    s.start = std::move(start);
    s.end = std::move(end);
    return s;
  }
};

struct Schedule {
  std::vector<std::vector<Segment>> machines;

  void ensure_machines(int count) {
    if (static_cast<int>(machines.size()) < count) machines.resize(static_cast<size_t>(count));
  }

  // Zero-length segments are dropped at construction: a zero setup means no
  // setup is needed, and empty piece splits are forbidden in output.
  void add(int machine, Segment seg) {
    if (seg.end == seg.start) return;
    ensure_machines(machine + 1);
    machines[static_cast<size_t>(machine)].push_back(std::move(seg));
  }

  void sort_segments() {
    for (auto& m : machines)
      std::sort(m.begin(), m.end(),
                [](const Segment& a, const Segment& b) { return a.start < b.start; });
  }

  bool empty() const {
    for (const auto& m : machines)
      if (!m.empty()) return false;
    return true;
  }
};

inline Rational makespan(const Schedule& sched) {
  Rational best = 0;
  for (const auto& m : sched.machines)
    for (const Segment& seg : m) best = max(best, seg.end);
  return best;
}

}  // namespace setsched
