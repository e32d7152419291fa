#include <catch2/catch_amalgamated.hpp>

#include "setsched/classify.hpp"
#include "setsched/generate.hpp"
#include "setsched/instance.hpp"

using namespace setsched;

namespace {

// Independent row membership oracle: spells out every type's band straight
// from the class partition table, so the classifier is checked against a
// second reading of the same definition.
std::vector<ClassType> applicable_rows(const Rational& s, const Rational& t, const Rational& T) {
  std::vector<ClassType> rows;
  auto between = [](const Rational& lo, bool lo_open, const Rational& x, const Rational& hi,
                    bool hi_open) {
    bool above = lo_open ? x > lo : x >= lo;
    bool below = hi_open ? x < hi : x <= hi;
    return above && below;
  };
  bool chp = s >= Rational(0) && s < T * frac(1, 3);
  bool med = s >= T * frac(1, 3) && s < T * frac(2, 3);
  bool exp_band = s >= T * frac(2, 3) && s < T;  // s = T is an infeasible guess
  if (exp_band && t >= T) rows.push_back(ClassType::T1);
  if (med && t >= Rational(2) * T - s) rows.push_back(ClassType::T2);
  if (med && between(T * frac(4, 3), true, t, Rational(2) * T - s, true)) rows.push_back(ClassType::T3);
  if (med && between(T, false, t, T * frac(4, 3), false)) rows.push_back(ClassType::T4);
  if (med && between(T * frac(1, 2), true, t, T * frac(2, 3), false)) rows.push_back(ClassType::T5);
  if (med && between(T * frac(1, 3), true, t, T * frac(4, 9), false)) rows.push_back(ClassType::T6);
  if (chp) rows.push_back(ClassType::T7);
  if (med && between(T * frac(4, 9), true, t, T * frac(1, 2), false)) rows.push_back(ClassType::T8);
  if ((med || exp_band) && between(T * frac(2, 3), true, t, T * frac(5, 6), false))
    rows.push_back(ClassType::T9);
  if ((med || exp_band) && between(T * frac(5, 6), true, t, T, true)) rows.push_back(ClassType::T10);
  return rows;
}

}  // namespace

TEST_CASE("classification of the worked examples") {
  Rational T = 1;
  CHECK(classify_class(frac(7, 10), frac(9, 10), T) == ClassType::T10);
  CHECK(classify_class(frac(1, 5), Rational(3), T) == ClassType::T7);
  CHECK(classify_class(frac(2, 3), Rational(1), T) == ClassType::T1);
  CHECK(classify_class(frac(2, 5), frac(12, 25), T) == ClassType::T8);
  // same points at a scaled T
  Rational T2 = frac(7, 3);
  CHECK(classify_class(frac(7, 10) * T2, frac(9, 10) * T2, T2) == ClassType::T10);
  CHECK(classify_class(frac(2, 5) * T2, frac(12, 25) * T2, T2) == ClassType::T8);
}

TEST_CASE("classification rejects an infeasible guess") {
  CHECK_THROWS_AS(classify_class(Rational(1), Rational(2), Rational(1)), std::domain_error);
  CHECK_THROWS_AS(classify_class(frac(3, 2), Rational(2), Rational(1)), std::domain_error);
}

TEST_CASE("boundary exactness at 4/9") {
  Rational T = 1;
  // smallest representable shifts around the 6-to-8 transition
  Rational eps = Rational(1, 1000000000L);
  CHECK(classify_class(frac(1, 3), frac(4, 9), T) == ClassType::T6);
  CHECK(classify_class(frac(1, 3), frac(4, 9) + eps, T) == ClassType::T8);
  CHECK(classify_class(frac(1, 3), frac(1, 2), T) == ClassType::T8);
  CHECK(classify_class(frac(1, 3), frac(1, 2) + eps, T) == ClassType::T5);
  CHECK(classify_class(frac(1, 3) - eps, frac(4, 9), T) == ClassType::T7);
}

TEST_CASE("classification totality: exactly one row applies", "[property]") {
  Rng rng(20240917);
  Rational T = 1;
  for (int k = 0; k < 100000; ++k) {
    long den_s = rng.range(1, 720);
    Rational s(rng.range(0, den_s - 1), den_s);
    long den_t = rng.range(1, 720);
    Rational t = s + Rational(std::max(1L, rng.range(1, 3 * den_t)), den_t);
    auto rows = applicable_rows(s, t, T);
    REQUIRE(rows.size() == 1);
    REQUIRE(classify_class(s, t, T) == rows[0]);
  }
}

TEST_CASE("alpha computations") {
  auto [a1, f1] = compute_alpha(frac(3, 2), frac(1, 4), Rational(1));
  CHECK(a1 == 2);
  CHECK(f1 == 2);
  auto [a2, f2] = compute_alpha(frac(7, 10), frac(1, 2), Rational(1));
  CHECK(a2 == 2);
  CHECK(f2 == 1);
  auto [a3, f3] = compute_alpha(Rational(1), Rational(0), Rational(1));
  CHECK(a3 == 1);
  CHECK(f3 == 1);
  CHECK_THROWS_AS(compute_alpha(Rational(1), Rational(2), Rational(1)), std::domain_error);
}

TEST_CASE("normalize_and_type types every class and flags impossible guesses") {
  Instance inst;
  inst.machine_count = 2;
  inst.classes = {{frac(3, 10)}};
  inst.jobs = {{0, frac(1, 2)}};
  auto ok = normalize_and_type(inst, Rational(1));
  REQUIRE(std::holds_alternative<TypedInstance>(ok));
  const auto& typed = std::get<TypedInstance>(ok);
  // s + P = 4/5 lands in the (2/3, 5/6] band
  CHECK(typed.type(0) == ClassType::T9);
  CHECK(typed.per_class[0].alpha == 1);

  Instance bad = inst;
  bad.jobs[0].processing = Rational(1);  // elapsed 13/10 > T
  auto rej = normalize_and_type(bad, Rational(1));
  REQUIRE(std::holds_alternative<InfeasibleGuess>(rej));
  CHECK(std::get<InfeasibleGuess>(rej).job_index == 0);

  Instance big_setup = inst;
  big_setup.classes[0].setup = Rational(2);
  big_setup.jobs[0].processing = frac(1, 2);
  auto rej2 = normalize_and_type(big_setup, Rational(1));
  REQUIRE(std::holds_alternative<InfeasibleGuess>(rej2));
  CHECK(std::get<InfeasibleGuess>(rej2).job_index == -1);
}

TEST_CASE("instance invariants") {
  Instance inst;
  inst.machine_count = 1;
  inst.classes = {{Rational(1)}, {Rational(2)}};
  inst.jobs = {{0, Rational(1)}};
  CHECK_THROWS_AS(inst.check(), std::invalid_argument);  // class 1 empty, c > n
  inst.jobs.push_back({1, Rational(1)});
  CHECK_NOTHROW(inst.check());
  inst.jobs.push_back({5, Rational(1)});
  CHECK_THROWS_AS(inst.check(), std::invalid_argument);  // unknown class
}

TEST_CASE("lower bound") {
  Instance a;
  a.machine_count = 1;
  a.classes = {{Rational(2)}};
  a.jobs = {{0, Rational(3)}};
  CHECK(lower_bound(a) == Rational(5));

  Instance b;
  b.machine_count = 2;
  b.classes = {{Rational(1)}, {Rational(1)}};
  b.jobs = {{0, Rational(3)}, {1, Rational(3)}};
  CHECK(lower_bound(b) == Rational(4));

  Instance c;
  c.machine_count = 3;
  c.classes = {{Rational(0)}, {Rational(0)}, {Rational(0)}};
  c.jobs = {{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}};
  CHECK(lower_bound(c) == Rational(1));
}
