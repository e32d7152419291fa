#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "setsched/generate.hpp"
#include "setsched/instance.hpp"
#include "setsched/validate.hpp"
#include "setsched/wrap.hpp"

using namespace setsched;

namespace {

Rational placed_piece_total(const WrapResult& res, int job = -1) {
  Rational total = 0;
  for (const auto& [machine, seg] : res.placements)
    if (seg.kind == Segment::Kind::Piece && (job < 0 || seg.job_index == job))
      total += seg.amount();
  return total;
}

// Random sequence/template pair with L(Q) <= S(omega) and, when for_lj, every
// gap larger than the largest setup.
struct FuzzCase {
  WrapSequence q;
  WrapTemplate tpl;
};

FuzzCase make_fuzz_case(Rng& rng, bool for_lj) {
  FuzzCase fc;
  int groups = static_cast<int>(rng.range(1, 5));
  long den = 60;
  Rational max_setup = 0;
  int job = 0;
  for (int g = 0; g < groups; ++g) {
    WrapGroup wg;
    wg.class_index = g;
    wg.setup = Rational(rng.range(0, 20), den);
    max_setup = max(max_setup, wg.setup);
    int pieces = static_cast<int>(rng.range(1, 4));
    for (int p = 0; p < pieces; ++p) wg.pieces.push_back({job++, Rational(rng.range(1, 40), den)});
    fc.q.groups.push_back(std::move(wg));
  }
  Rational need = fc.q.load();
  if (for_lj) need += max_setup * Rational(8);  // room for the per-gap re-emitted setups
  Rational acc = 0;
  int machine = 0;
  while (acc < need || fc.tpl.gaps.size() < 2) {
    Rational lo = for_lj ? max_setup + Rational(1, den) : max_setup;
    Rational width = max(lo + Rational(rng.range(1, 30), den), Rational(rng.range(5, 60), den));
    Rational a = max_setup + Rational(rng.range(0, 10), den);
    fc.tpl.add(machine++, a, a + width);
    acc += width;
  }
  return fc;
}

}  // namespace

TEST_CASE("wrap worked example: split across two gaps with a below-gap setup") {
  WrapSequence q;
  q.groups.push_back({0, frac(1, 5), {{0, frac(1, 2)}, {1, frac(1, 2)}}});
  WrapTemplate tpl;
  tpl.add(0, frac(3, 10), Rational(1));
  tpl.add(1, frac(3, 10), Rational(1));
  WrapResult res = wrap(q, tpl);
  REQUIRE(!res.overflow);
  REQUIRE(res.placements.size() == 4);
  // gap 1: setup [0.3,0.5), piece [0.5,1.0)
  CHECK(res.placements[0].first == 0);
  CHECK(res.placements[0].second.kind == Segment::Kind::Setup);
  CHECK(res.placements[0].second.start == frac(3, 10));
  CHECK(res.placements[0].second.end == frac(1, 2));
  CHECK(res.placements[1].second.start == frac(1, 2));
  CHECK(res.placements[1].second.end == Rational(1));
  // gap 2: setup directly below a_2 at [0.1,0.3), piece [0.3,0.8)
  CHECK(res.placements[2].first == 1);
  CHECK(res.placements[2].second.kind == Segment::Kind::Setup);
  CHECK(res.placements[2].second.start == frac(1, 10));
  CHECK(res.placements[2].second.end == frac(3, 10));
  CHECK(res.placements[3].second.start == frac(3, 10));
  CHECK(res.placements[3].second.end == frac(4, 5));
}

TEST_CASE("wrap_lj worked examples") {
  SECTION("continuation setup sits inside the next gap") {
    WrapSequence q;
    q.groups.push_back({0, frac(1, 5), {{0, frac(1, 2)}, {1, frac(1, 2)}}});
    WrapTemplate tpl;
    tpl.add(0, frac(3, 10), Rational(1));
    tpl.add(1, frac(3, 10), Rational(1));
    WrapResult res = wrap_lj(q, tpl);
    REQUIRE(!res.overflow);
    REQUIRE(res.placements.size() == 4);
    CHECK(res.placements[2].first == 1);
    CHECK(res.placements[2].second.kind == Segment::Kind::Setup);
    CHECK(res.placements[2].second.start == frac(3, 10));
    CHECK(res.placements[2].second.end == frac(1, 2));
    CHECK(res.placements[3].second.start == frac(1, 2));
    CHECK(res.placements[3].second.end == Rational(1));
  }
  SECTION("single gap, no continuation") {
    WrapSequence q;
    q.groups.push_back({0, frac(1, 10), {{0, frac(1, 5)}}});
    WrapTemplate tpl;
    tpl.add(0, Rational(0), frac(1, 3));
    WrapResult res = wrap_lj(q, tpl);
    REQUIRE(!res.overflow);
    REQUIRE(res.placements.size() == 2);
    CHECK(res.placements[0].second.start == Rational(0));
    CHECK(res.placements[0].second.end == frac(1, 10));
    CHECK(res.placements[1].second.start == frac(1, 10));
    CHECK(res.placements[1].second.end == frac(3, 10));
  }
}

TEST_CASE("wrap fills an exactly full gap to its end") {
  WrapSequence q;
  q.groups.push_back({0, frac(1, 4), {{0, frac(3, 4)}}});
  WrapTemplate tpl;
  tpl.add(0, Rational(1), Rational(2));
  WrapResult res = wrap(q, tpl);
  REQUIRE(!res.overflow);
  CHECK(res.placements.back().second.end == Rational(2));
  CHECK(res.last_gap == 0);
}

TEST_CASE("empty sequence places nothing") {
  WrapTemplate tpl;
  tpl.add(0, Rational(0), Rational(1));
  CHECK(wrap(WrapSequence{}, tpl).placements.empty());
  CHECK(wrap_lj(WrapSequence{}, tpl).placements.empty());
}

TEST_CASE("overflow and feasibility warning are reported") {
  WrapSequence q;
  q.groups.push_back({0, Rational(0), {{0, Rational(5)}}});
  WrapTemplate tpl;
  tpl.add(0, Rational(0), Rational(1));
  CHECK(wrap(q, tpl).overflow);

  WrapSequence q2;
  q2.groups.push_back({0, frac(1, 2), {{0, Rational(1)}}});
  WrapTemplate low;
  low.add(0, Rational(1), Rational(2));
  low.add(1, frac(1, 4), Rational(2));  // a_2 below the max setup
  CHECK(wrap(q2, low).feasibility_warning);
}

TEST_CASE("wrap places everything when space suffices", "[property]") {
  Rng rng(1234);
  for (int iter = 0; iter < 3000; ++iter) {
    FuzzCase fc = make_fuzz_case(rng, false);
    WrapResult res = wrap(fc.q, fc.tpl);
    REQUIRE(!res.overflow);
    REQUIRE(res.last_gap < static_cast<int>(fc.tpl.gaps.size()));
    // conservation, per job
    std::map<int, Rational> want;
    for (const auto& g : fc.q.groups)
      for (const auto& p : g.pieces) {
        auto it = want.find(p.job_index);
        if (it == want.end()) want.emplace(p.job_index, p.amount);
        else it->second += p.amount;
      }
    for (const auto& [job, amount] : want) REQUIRE(placed_piece_total(res, job) == amount);
  }
}

TEST_CASE("wrap_lj places everything under its budget", "[property]") {
  Rng rng(99);
  for (int iter = 0; iter < 3000; ++iter) {
    FuzzCase fc = make_fuzz_case(rng, true);
    // Property-3 style budget: max-setup headroom per gap beyond the first
    Rational budget = fc.tpl.space() - fc.q.max_setup() * Rational(static_cast<long>(fc.tpl.gaps.size()) - 1);
    if (fc.q.load() > budget) continue;
    WrapResult res = wrap_lj(fc.q, fc.tpl);
    REQUIRE(!res.overflow);
    REQUIRE(placed_piece_total(res) == placed_piece_total(res));  // placements well-formed
    Rational want = 0;
    for (const auto& g : fc.q.groups)
      for (const auto& p : g.pieces) want += p.amount;
    REQUIRE(placed_piece_total(res) == want);
  }
}

TEST_CASE("wrap_lj on stacked templates is never parallelized", "[property]") {
  Rng rng(4321);
  for (int iter = 0; iter < 1500; ++iter) {
    // identical [0, W) windows on distinct machines; group item sizes bounded
    // by W
    long den = 36;
    Rational width(rng.range(8, 20), den);
    Instance inst;
    WrapSequence q;
    int job = 0;
    int groups = static_cast<int>(rng.range(1, 5));
    for (int g = 0; g < groups; ++g) {
      long setup = rng.range(0, 5);
      Rational s(setup, den);
      inst.classes.push_back({s});
      WrapGroup wg{g, s, {}};
      int pieces = static_cast<int>(rng.range(1, 5));
      for (int p = 0; p < pieces; ++p) {
        // keep s + piece <= width so the stacked-template precondition holds
        long max_units = ((width - s) * Rational(den)).floor();
        Rational amt(rng.range(1, std::max(1L, max_units)), den);
        wg.pieces.push_back({job, amt});
        inst.jobs.push_back({g, amt});
        ++job;
      }
      q.groups.push_back(std::move(wg));
    }
    Rational need = q.load() + q.max_setup() * Rational(10);
    WrapTemplate tpl;
    int machines = static_cast<int>((need / width).ceil()) + 2;
    for (int k = 0; k < machines; ++k) tpl.add(k, Rational(0), width);
    inst.machine_count = machines;

    WrapResult res = wrap_lj(q, tpl);
    REQUIRE(!res.overflow);
    Schedule sched;
    for (auto& [machine, seg] : res.placements) sched.add(machine, seg);
    ValidationReport rep = validate(sched, inst, Rational(1000));
    for (const auto& issue : rep.issues) {
      INFO(to_string(issue.kind) << " " << issue.detail);
      REQUIRE(issue.kind != Violation::JobParallelization);
      REQUIRE(issue.kind != Violation::MachineOverlap);
      REQUIRE(issue.kind != Violation::MissingSetup);
    }
  }
}
