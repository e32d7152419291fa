#include <catch2/catch_amalgamated.hpp>

#include "setsched/generate.hpp"
#include "setsched/search.hpp"
#include "setsched/validate.hpp"

using namespace setsched;

TEST_CASE("trivial schedule makespans") {
  Instance a;
  a.machine_count = 1;
  a.classes = {{Rational(2)}};
  a.jobs = {{0, Rational(3)}};
  CHECK(makespan(trivial_schedule(a)) == Rational(5));

  Instance b;
  b.machine_count = 5;
  b.classes = {{Rational(1)}, {Rational(1)}, {Rational(1)}};
  b.jobs = {{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}};
  CHECK(makespan(trivial_schedule(b)) == Rational(6));
  CHECK(validate(trivial_schedule(b), b, Rational(6)).ok());
}

TEST_CASE("solve on the empty instance") {
  Instance empty;
  empty.machine_count = 1;
  SolveResult r = solve(empty);
  CHECK(r.schedule.empty());
  CHECK(r.accepted_T == Rational(0));
  CHECK(!r.fallback_used);
}

TEST_CASE("bracket invariant and epsilon closure on certificates") {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    auto cert = (seed % 2) ? generate_packed(seed, 2 + seed % 6, 50 + seed)
                           : generate_single_class(seed, 2 + seed % 6, seed % 10, 5 + seed % 20);
    SearchConfig config;
    config.epsilon = frac(1, 100);
    SolveResult r = solve(cert.instance, config);
    REQUIRE(!r.fallback_used);
    // ratio guarantee with exact arithmetic, zero tolerance
    CHECK(makespan(r.schedule) <= frac(4, 3) * (Rational(1) + config.epsilon) * cert.opt);
    CHECK(r.accepted_T >= lower_bound(cert.instance));
    CHECK(validate(r.schedule, cert.instance, r.accepted_T * frac(4, 3)).ok());
  }
}

TEST_CASE("iteration count stays within the bisection budget") {
  for (unsigned seed = 100; seed <= 140; ++seed) {
    Instance inst = generate_random(seed, 1 + static_cast<int>(seed % 9));
    Rational lb = lower_bound(inst);
    Rational ub = inst.total_load();
    SearchConfig config;
    config.epsilon = Rational(1);  // coarse
    SolveResult r = solve(inst, config);
    REQUIRE(!r.fallback_used);
    double budget = std::ceil(std::log2((ub / lb).approx())) + 2;
    CHECK(r.decide_calls <= static_cast<int>(budget) + 2);

    config.epsilon = frac(1, 100);
    SolveResult fine = solve(inst, config);
    double fine_budget = std::ceil(std::log2((ub / lb).approx() * 100.0)) + 2;
    CHECK(fine.decide_calls <= static_cast<int>(fine_budget) + 2);
    // the final bracket is tight: accepted_T within (1+eps) of a rejected or
    // lower-bound value is implied by accepted_T <= (1+eps) * OPT on certs
    CHECK(fine.accepted_T >= lb);
  }
}

TEST_CASE("solve output always passes the validator", "[property]") {
  for (unsigned seed = 500; seed <= 700; ++seed) {
    Instance inst = generate_random(seed, 1 + static_cast<int>(seed % 11));
    SolveResult r = solve(inst);
    REQUIRE(!r.fallback_used);
    ValidationReport rep = validate(r.schedule, inst, r.accepted_T * frac(4, 3));
    INFO("seed " << seed << "\n" << rep.summary());
    REQUIRE(rep.ok());
  }
}
