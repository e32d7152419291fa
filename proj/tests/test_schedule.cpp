#include <catch2/catch_amalgamated.hpp>

#include "setsched/schedule.hpp"
#include "setsched/search.hpp"
#include "setsched/validate.hpp"

using namespace setsched;

namespace {

Instance two_class_instance() {
  Instance inst;
  inst.machine_count = 2;
  inst.classes = {{Rational(2)}, {Rational(1)}};
  inst.jobs = {{0, Rational(3)}, {0, Rational(2)}, {1, Rational(4)}};
  return inst;
}

bool has_violation(const ValidationReport& rep, Violation kind) {
  for (const auto& issue : rep.issues)
    if (issue.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("makespan") {
  Schedule empty;
  CHECK(makespan(empty) == Rational(0));

  Schedule one;
  one.add(0, Segment::setup(0, Rational(0), Rational(2)));
  one.add(0, Segment::piece(0, 0, Rational(2), Rational(5)));
  CHECK(makespan(one) == Rational(5));

  Schedule two;
  two.add(0, Segment::piece(0, 0, Rational(0), Rational(3)));
  two.add(1, Segment::piece(0, 1, Rational(1), Rational(4)));
  CHECK(makespan(two) == Rational(4));
}

TEST_CASE("validator accepts a clean schedule and reports the census") {
  Instance inst = two_class_instance();
  Schedule sched;
  sched.add(0, Segment::setup(0, Rational(0), Rational(2)));
  sched.add(0, Segment::piece(0, 0, Rational(2), Rational(5)));
  sched.add(0, Segment::piece(0, 1, Rational(5), Rational(7)));
  sched.add(1, Segment::setup(1, Rational(0), Rational(1)));
  sched.add(1, Segment::piece(1, 2, Rational(1), Rational(5)));
  ValidationReport rep = validate(sched, inst, Rational(7));
  CHECK(rep.ok());
  CHECK(rep.setup_census == std::vector<long long>{1, 1});
}

TEST_CASE("validator flags each violation kind") {
  Instance inst = two_class_instance();

  SECTION("machine overlap") {
    Schedule s;
    s.add(0, Segment::setup(0, Rational(0), Rational(2)));
    s.add(0, Segment::piece(0, 0, Rational(1), Rational(4)));
    CHECK(has_violation(validate(s, inst, Rational(100)), Violation::MachineOverlap));
  }
  SECTION("job parallelization across machines") {
    Schedule s;
    s.add(0, Segment::setup(0, Rational(0), Rational(2)));
    s.add(0, Segment::piece(0, 0, Rational(2), Rational(4)));
    s.add(1, Segment::setup(0, Rational(0), Rational(2)));
    s.add(1, Segment::piece(0, 0, Rational(3), Rational(4)));
    CHECK(has_violation(validate(s, inst, Rational(100)), Violation::JobParallelization));
  }
  SECTION("incomplete and over-scheduled jobs") {
    Schedule s;
    s.add(0, Segment::setup(0, Rational(0), Rational(2)));
    s.add(0, Segment::piece(0, 0, Rational(2), Rational(4)));
    auto rep = validate(s, inst, Rational(100));
    CHECK(has_violation(rep, Violation::IncompleteJob));
    s.add(0, Segment::piece(0, 0, Rational(4), Rational(8)));
    CHECK(has_violation(validate(s, inst, Rational(100)), Violation::OverScheduledJob));
  }
  SECTION("missing setup before a run") {
    Schedule s;
    s.add(0, Segment::piece(0, 0, Rational(2), Rational(5)));
    CHECK(has_violation(validate(s, inst, Rational(100)), Violation::MissingSetup));
  }
  SECTION("a different class's segment breaks setup coverage") {
    Schedule s;
    s.add(0, Segment::setup(0, Rational(0), Rational(2)));
    s.add(0, Segment::piece(0, 0, Rational(2), Rational(5)));
    s.add(0, Segment::setup(1, Rational(5), Rational(6)));
    s.add(0, Segment::piece(1, 2, Rational(6), Rational(10)));
    s.add(0, Segment::piece(0, 1, Rational(10), Rational(12)));  // class 0 again, no new setup
    CHECK(has_violation(validate(s, inst, Rational(100)), Violation::MissingSetup));
  }
  SECTION("idle time does not break setup coverage") {
    Schedule s;
    s.add(0, Segment::setup(0, Rational(0), Rational(2)));
    s.add(0, Segment::piece(0, 0, Rational(2), Rational(5)));
    s.add(0, Segment::piece(0, 1, Rational(9), Rational(11)));  // gap, same class
    s.add(1, Segment::setup(1, Rational(0), Rational(1)));
    s.add(1, Segment::piece(1, 2, Rational(1), Rational(5)));
    CHECK(validate(s, inst, Rational(100)).ok());
  }
  SECTION("makespan and machine count limits") {
    Schedule s;
    s.add(0, Segment::setup(0, Rational(0), Rational(2)));
    s.add(0, Segment::piece(0, 0, Rational(2), Rational(5)));
    s.add(0, Segment::piece(0, 1, Rational(5), Rational(7)));
    s.add(1, Segment::setup(1, Rational(0), Rational(1)));
    s.add(1, Segment::piece(1, 2, Rational(1), Rational(5)));
    CHECK(has_violation(validate(s, inst, Rational(6)), Violation::MakespanExceeded));
    Schedule wide = s;
    wide.ensure_machines(3);
    wide.machines[2].push_back(Segment::setup(0, Rational(0), Rational(2)));
    CHECK(has_violation(validate(wide, inst, Rational(100)), Violation::MachineCountExceeded));
  }
  SECTION("wrong setup length is malformed") {
    Schedule s;
    s.add(0, Segment::setup(0, Rational(0), Rational(1)));  // class 0 has setup 2
    s.add(0, Segment::piece(0, 0, Rational(1), Rational(4)));
    CHECK(has_violation(validate(s, inst, Rational(100)), Violation::MalformedSegment));
  }
}

TEST_CASE("zero-setup classes need no setup segment") {
  Instance inst;
  inst.machine_count = 1;
  inst.classes = {{Rational(0)}};
  inst.jobs = {{0, Rational(3)}};
  Schedule s;
  s.add(0, Segment::piece(0, 0, Rational(0), Rational(3)));
  CHECK(validate(s, inst, Rational(3)).ok());
}

TEST_CASE("trivial schedule is always feasible") {
  Instance inst = two_class_instance();
  Schedule s = trivial_schedule(inst);
  CHECK(makespan(s) == Rational(12));  // 2+3+2 + 1+4
  CHECK(validate(s, inst, Rational(12)).ok());

  Instance empty;
  empty.machine_count = 1;
  CHECK(makespan(trivial_schedule(empty)) == Rational(0));
}
