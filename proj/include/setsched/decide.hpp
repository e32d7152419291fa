#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "setsched/classify.hpp"
#include "setsched/instance.hpp"
#include "setsched/nice.hpp"
#include "setsched/schedule.hpp"
#include "setsched/validate.hpp"
#include "setsched/wrap.hpp"

namespace setsched {

struct DecideOptions {
  // Greedy maximal matching is the default; a maximum matching changes which
  // valid schedule comes out, never whether one does.
  bool maximum_matching = false;
};

namespace detail {

// Greedy maximal matching between type-8 and type-10 classes; an edge means
// the combined loads fit into 4/3 T together. Returns pairs of positions
// into loads8/loads10. After it runs, every unmatched cross pair exceeds the
// limit (otherwise the matching would not have been maximal).
inline std::vector<std::pair<int, int>> greedy_810_matching(const std::vector<Rational>& loads8,
                                                            const std::vector<Rational>& loads10,
                                                            const Rational& limit) {
  std::vector<std::pair<int, int>> matched;
  std::vector<bool> used10(loads10.size(), false);
  for (size_t a = 0; a < loads8.size(); ++a) {
    for (size_t b = 0; b < loads10.size(); ++b) {
      if (!used10[b] && loads8[a] + loads10[b] <= limit) {
        used10[b] = true;
        matched.emplace_back(static_cast<int>(a), static_cast<int>(b));
        break;
      }
    }
  }
  return matched;
}

// Maximum bipartite matching via augmenting paths (experiments only).
inline std::vector<std::pair<int, int>> maximum_810_matching(const std::vector<Rational>& loads8,
                                                             const std::vector<Rational>& loads10,
                                                             const Rational& limit) {
  int n8 = static_cast<int>(loads8.size()), n10 = static_cast<int>(loads10.size());
  std::vector<int> match10(static_cast<size_t>(n10), -1);
  std::vector<char> seen;
  std::function<bool(int)> try_augment = [&](int a) -> bool {
    for (int b = 0; b < n10; ++b) {
      if (seen[static_cast<size_t>(b)]) continue;
      if (loads8[static_cast<size_t>(a)] + loads10[static_cast<size_t>(b)] > limit) continue;
      seen[static_cast<size_t>(b)] = 1;
      if (match10[static_cast<size_t>(b)] < 0 || try_augment(match10[static_cast<size_t>(b)])) {
        match10[static_cast<size_t>(b)] = a;
        return true;
      }
    }
    return false;
  };
  for (int a = 0; a < n8; ++a) {
    seen.assign(static_cast<size_t>(n10), 0);
    try_augment(a);
  }
  std::vector<std::pair<int, int>> matched;
  for (int b = 0; b < n10; ++b)
    if (match10[static_cast<size_t>(b)] >= 0) matched.emplace_back(match10[static_cast<size_t>(b)], b);
  std::sort(matched.begin(), matched.end());
  return matched;
}

// Shared bookkeeping for one decider run.
struct DecideContext {
  const Instance* inst;
  TypedInstance typed;
  std::vector<int> t1, t2, t3, t4, t5, t6, t7, t8, t9, t10;
  Schedule base;
  int base_used = 0;  // machines consumed by the shared prefix

  const Rational& T() const { return typed.T; }
  Rational third() const { return typed.T * frac(1, 3); }
  Rational top() const { return typed.T * frac(4, 3); }
  Rational class_load(int ci) const { return typed.setup(ci) + typed.total(ci); }

  // Places a whole class at start on the machine: setup, then jobs in order.
  Rational place_whole(Schedule& out, int ci, int machine, Rational start) const {
    const Rational& s = typed.setup(ci);
    out.add(machine, Segment::setup(ci, start, start + s));
    Rational pos = start + s;
    for (int ji : typed.class_jobs[static_cast<size_t>(ci)]) {
      const Rational& p = inst->jobs[static_cast<size_t>(ji)].processing;
      out.add(machine, Segment::piece(ci, ji, pos, pos + p));
      pos += p;
    }
    return pos;
  }
};

// Per-job split of type-7 load relative to T/3: the obligatory part cannot
// sit below T/3 with its setup and must go to the nice side.
struct SevenJob {
  int job = 0;
  Rational wrappable;   // min(p, T/3 - s) > 0
  Rational obligatory;  // p - wrappable
};

struct SevenClass {
  int class_index = 0;
  Rational setup;
  Rational total;                // s + P, the class load
  std::vector<SevenJob> jobs;
  Rational wrappable_total;
  Rational obligatory_total;
};

inline std::vector<SevenClass> make_seven_classes(const DecideContext& ctx) {
  std::vector<SevenClass> out;
  Rational third = ctx.third();
  for (int ci : ctx.t7) {
    SevenClass sc;
    sc.class_index = ci;
    sc.setup = ctx.typed.setup(ci);
    sc.total = ctx.class_load(ci);
    sc.wrappable_total = 0;
    sc.obligatory_total = 0;
    for (int ji : ctx.typed.class_jobs[static_cast<size_t>(ci)]) {
      const Rational& p = ctx.inst->jobs[static_cast<size_t>(ji)].processing;
      Rational wrap_amt = min(p, third - sc.setup);
      SevenJob sj{ji, wrap_amt, p - wrap_amt};
      sc.wrappable_total += sj.wrappable;
      sc.obligatory_total += sj.obligatory;
      sc.jobs.push_back(std::move(sj));
    }
    out.push_back(std::move(sc));
  }
  return out;
}

// Mutable per-guess view of the type-7 classes: how much of each job still
// needs a home, and which classes have been consumed by some placement step.
struct SevenState {
  std::vector<char> consumed;          // per seven-class position
  std::vector<Rational> remaining;     // per original job index

  SevenState(const std::vector<SevenClass>& classes, size_t num_jobs)
      : consumed(classes.size(), 0), remaining(num_jobs, Rational(0)) {
    for (const SevenClass& sc : classes)
      for (const SevenJob& sj : sc.jobs)
        remaining[static_cast<size_t>(sj.job)] = sj.wrappable + sj.obligatory;
  }
};

// Algorithm of the eight-remain branch that fills a wrap sequence with
// type-7 load from the setup band (lo, hi] (plus s = 0 when lo = 0), two
// phases: fully wrappable classes wholesale, then classes with obligatory
// load by smallest setup per unit of wrappable load, taking wrappable parts
// only. The split class's pieces total the remaining budget exactly; its
// leftovers stay with the state. Returns the position of the last class
// added, or -1.
inline int fill_below(WrapSequence& qk, Rational budget, const Rational& lo, const Rational& hi,
                      const std::vector<SevenClass>& classes, SevenState& st) {
  int last_added = -1;
  auto in_band = [&](const SevenClass& sc) {
    if (lo == Rational(0) && sc.setup == Rational(0)) return true;
    return sc.setup > lo && sc.setup <= hi;
  };

  // Phase 1: no obligatory load; whole classes in input order.
  for (size_t k = 0; k < classes.size() && budget > Rational(0); ++k) {
    const SevenClass& sc = classes[k];
    if (st.consumed[k] || !in_band(sc) || sc.obligatory_total > Rational(0)) continue;
    WrapGroup g{sc.class_index, sc.setup, {}};
    if (sc.wrappable_total <= budget) {
      for (const SevenJob& sj : sc.jobs) {
        g.pieces.push_back({sj.job, sj.wrappable});
        st.remaining[static_cast<size_t>(sj.job)] = 0;
      }
      budget -= sc.setup + sc.wrappable_total;
    } else {
      Rational want = budget;
      for (const SevenJob& sj : sc.jobs) {
        if (!(want > Rational(0))) break;
        Rational take = min(sj.wrappable, want);
        g.pieces.push_back({sj.job, take});
        st.remaining[static_cast<size_t>(sj.job)] -= take;
        want -= take;
      }
      budget = 0;
    }
    st.consumed[k] = 1;
    qk.groups.push_back(std::move(g));
    last_added = static_cast<int>(k);
  }

  // Phase 2: positive obligatory load; smallest s / wrappable first. The
  // obligatory parts stay in the state and flow to the nice side.
  while (budget > Rational(0)) {
    int best = -1;
    for (size_t k = 0; k < classes.size(); ++k) {
      const SevenClass& sc = classes[k];
      if (st.consumed[k] || !in_band(sc) || sc.obligatory_total == Rational(0)) continue;
      if (!(sc.wrappable_total > Rational(0))) continue;
      if (best < 0 ||
          sc.setup * classes[static_cast<size_t>(best)].wrappable_total <
              classes[static_cast<size_t>(best)].setup * sc.wrappable_total)
        best = static_cast<int>(k);
    }
    if (best < 0) break;
    const SevenClass& sc = classes[static_cast<size_t>(best)];
    WrapGroup g{sc.class_index, sc.setup, {}};
    if (sc.wrappable_total <= budget) {
      for (const SevenJob& sj : sc.jobs) {
        g.pieces.push_back({sj.job, sj.wrappable});
        st.remaining[static_cast<size_t>(sj.job)] -= sj.wrappable;
      }
      budget -= sc.setup + sc.wrappable_total;
    } else {
      Rational want = budget;
      for (const SevenJob& sj : sc.jobs) {
        if (!(want > Rational(0))) break;
        Rational take = min(sj.wrappable, want);
        g.pieces.push_back({sj.job, take});
        st.remaining[static_cast<size_t>(sj.job)] -= take;
        want -= take;
      }
      budget = 0;
    }
    st.consumed[static_cast<size_t>(best)] = 1;
    qk.groups.push_back(std::move(g));
    last_added = static_cast<int>(best);
  }
  return last_added;
}

// Moves the group of the given class to the front, per the wrap-sequence
// reordering that makes the budget identity work out.
inline void split_class_first(WrapSequence& q, int class_index) {
  for (size_t k = 0; k < q.groups.size(); ++k) {
    if (q.groups[k].class_index == class_index) {
      WrapGroup g = std::move(q.groups[k]);
      q.groups.erase(q.groups.begin() + static_cast<long>(k));
      q.groups.insert(q.groups.begin(), std::move(g));
      return;
    }
  }
}

// Builds the nice sub-instance from whole classes plus leftover type-7
// amounts, runs the nice solver on the machine pool, and remaps the result.
struct NiceAttempt {
  Instance sub;
  std::vector<int> class_map;  // sub class -> original class
  std::vector<int> job_map;    // sub job -> original job

  int add_class(const DecideContext& ctx, int orig_ci) {
    sub.classes.push_back({ctx.typed.setup(orig_ci)});
    class_map.push_back(orig_ci);
    return static_cast<int>(sub.classes.size()) - 1;
  }
  void add_whole_class(const DecideContext& ctx, int orig_ci) {
    int sc = add_class(ctx, orig_ci);
    for (int ji : ctx.typed.class_jobs[static_cast<size_t>(orig_ci)]) {
      sub.jobs.push_back({sc, ctx.inst->jobs[static_cast<size_t>(ji)].processing});
      job_map.push_back(ji);
    }
  }
  void add_piece(int sub_ci, int orig_ji, Rational amount) {
    sub.jobs.push_back({sub_ci, std::move(amount)});
    job_map.push_back(orig_ji);
  }

  // Returns the remapped placements on machines [pool_start, pool_start+pool)
  // or nullopt when the pool is too small (the guess fails).
  std::optional<Schedule> run(const DecideContext& ctx, int pool, int pool_start) const {
    sub_check();
    auto norm = normalize_and_type(sub, ctx.T());
    if (std::holds_alternative<InfeasibleGuess>(norm)) return std::nullopt;
    const TypedInstance& styped = std::get<TypedInstance>(norm);
    auto nice = make_nice(styped);
    if (!nice) return std::nullopt;
    auto solved = solve_nice(*nice, pool);
    if (!solved) return std::nullopt;
    Schedule out;
    for (size_t q = 0; q < solved->machines.size(); ++q) {
      for (const Segment& seg : solved->machines[q]) {
        Segment s = seg;
        s.class_index = class_map[static_cast<size_t>(seg.class_index)];
        if (s.kind == Segment::Kind::Piece)
          s.job_index = job_map[static_cast<size_t>(seg.job_index)];
        out.add(pool_start + static_cast<int>(q), std::move(s));
      }
    }
    return out;
  }

 private:
  void sub_check() const {
    if (sub.classes.size() > sub.jobs.size() && !sub.classes.empty())
      throw std::logic_error("nice sub-instance: class without jobs");
  }
};

inline void merge_into(Schedule& dst, const Schedule& src) {
  for (size_t q = 0; q < src.machines.size(); ++q)
    for (const Segment& seg : src.machines[q]) dst.add(static_cast<int>(q), seg);
}

// ---------------------------------------------------------------------------
// Eight-remain branch
// ---------------------------------------------------------------------------

inline std::optional<Schedule> branch_eight_remain(const DecideContext& ctx,
                                                   std::vector<int> rem8,
                                                   const DecideOptions& opts) {
  const int m = ctx.inst->machine_count;
  const Rational T = ctx.T();
  const Rational third = ctx.third();
  const Rational top = ctx.top();
  Schedule stage = ctx.base;
  int used = ctx.base_used;

  // (a) Maximal matching of type-8 against type-10; matched pairs share a
  // machine alone.
  std::vector<Rational> loads8, loads10;
  for (int ci : rem8) loads8.push_back(ctx.class_load(ci));
  for (int ci : ctx.t10) loads10.push_back(ctx.class_load(ci));
  auto matched = opts.maximum_matching ? maximum_810_matching(loads8, loads10, top)
                                       : greedy_810_matching(loads8, loads10, top);
  std::vector<bool> used8(rem8.size(), false), used10(ctx.t10.size(), false);
  for (auto [a, b] : matched) {
    if (used >= m) return std::nullopt;
    int q = used++;
    Rational end = ctx.place_whole(stage, rem8[static_cast<size_t>(a)], q, Rational(0));
    ctx.place_whole(stage, ctx.t10[static_cast<size_t>(b)], q, end);
    used8[static_cast<size_t>(a)] = used10[static_cast<size_t>(b)] = true;
  }

  // (b) Unmatched eights in pairs and unmatched tens alone, all starting at
  // T/3; the strip below stays free for type-7 load. These machines form
  // M_{8,10}.
  std::vector<int> m810;
  std::vector<int> left8;
  for (size_t a = 0; a < rem8.size(); ++a)
    if (!used8[a]) left8.push_back(rem8[a]);
  int i8star = -1;
  for (size_t k = 0; k + 1 < left8.size(); k += 2) {
    if (used >= m) return std::nullopt;
    int q = used++;
    Rational end = ctx.place_whole(stage, left8[k], q, third);
    ctx.place_whole(stage, left8[k + 1], q, end);
    m810.push_back(q);
  }
  if (left8.size() % 2 == 1) i8star = left8.back();
  for (size_t b = 0; b < ctx.t10.size(); ++b) {
    if (used10[b]) continue;
    if (used >= m) return std::nullopt;
    int q = used++;
    ctx.place_whole(stage, ctx.t10[b], q, third);
    m810.push_back(q);
  }

  // (c) Obligatory split and the ordered whole-class lists.
  std::vector<SevenClass> seven = make_seven_classes(ctx);
  auto larger_first = [&](int x, int y) {
    const SevenClass &cx = seven[static_cast<size_t>(x)], &cy = seven[static_cast<size_t>(y)];
    if (cx.total != cy.total) return cy.total < cx.total;
    return cx.class_index < cy.class_index;
  };
  std::vector<int> list_a, list_b;  // positions into seven
  for (size_t k = 0; k < seven.size(); ++k) {
    const SevenClass& sc = seven[k];
    if (sc.setup > T * frac(1, 9) && sc.total > T * frac(1, 6) && sc.total <= third)
      list_a.push_back(static_cast<int>(k));
    if (sc.setup <= T * frac(1, 9) && sc.total > T * frac(2, 9) && sc.total <= third)
      list_b.push_back(static_cast<int>(k));
  }
  std::sort(list_a.begin(), list_a.end(), larger_first);
  std::sort(list_b.begin(), list_b.end(), larger_first);

  const int n810 = static_cast<int>(m810.size());

  // (d) Guess how many machines carry the large-setup band; first success
  // wins.
  for (int r_guess = 0; r_guess <= n810; ++r_guess) {
    SevenState st(seven, ctx.inst->jobs.size());
    Schedule extra;
    int guess_used = used;

    // Whole classes below the eight/ten content.
    int r1 = 0, r2 = 0;
    size_t next_machine_pos = 0;
    for (int k : list_a) {
      if (r1 >= r_guess) break;
      ctx.place_whole(extra, seven[static_cast<size_t>(k)].class_index,
                      m810[next_machine_pos++], Rational(0));
      st.consumed[static_cast<size_t>(k)] = 1;
      for (const SevenJob& sj : seven[static_cast<size_t>(k)].jobs)
        st.remaining[static_cast<size_t>(sj.job)] = 0;
      ++r1;
    }
    for (int k : list_b) {
      if (r2 >= n810 - r_guess) break;
      ctx.place_whole(extra, seven[static_cast<size_t>(k)].class_index,
                      m810[next_machine_pos++], Rational(0));
      st.consumed[static_cast<size_t>(k)] = 1;
      for (const SevenJob& sj : seven[static_cast<size_t>(k)].jobs)
        st.remaining[static_cast<size_t>(sj.job)] = 0;
      ++r2;
    }

    int omega = n810 - r1 - r2;
    int n1 = std::min(std::max(r_guess - r1, 0), omega);
    int n2 = omega - n1;
    Rational f1 = T * frac(1, 6) * Rational(n1);
    Rational f2 = T * frac(2, 9) * Rational(n2);

    // Fill and wrap the two below-T/3 sequences.
    WrapSequence q2, q1;
    int last2 = fill_below(q2, f2, Rational(0), T * frac(1, 9), seven, st);
    int last1 = fill_below(q1, f1, T * frac(1, 9), T * frac(1, 6), seven, st);
    if (q1.load() < f1) {
      int more = fill_below(q1, f1 - q1.load(), Rational(0), T * frac(1, 9), seven, st);
      if (more >= 0) last1 = more;
    }
    if (last1 >= 0) split_class_first(q1, seven[static_cast<size_t>(last1)].class_index);
    if (last2 >= 0) split_class_first(q2, seven[static_cast<size_t>(last2)].class_index);

    WrapTemplate w1, w2;
    for (int k = 0; k < n1; ++k)
      w1.add(m810[next_machine_pos + static_cast<size_t>(k)], Rational(0), third);
    for (int k = 0; k < n2; ++k)
      w2.add(m810[next_machine_pos + static_cast<size_t>(n1 + k)], Rational(0), third);
    auto wrap_below = [&extra](const WrapSequence& q, const WrapTemplate& w) {
      if (q.empty()) return;
      WrapResult res = wrap_lj(q, w);
      if (res.overflow) throw std::logic_error("decide: below-T/3 wrap overflow");
      for (auto& [machine, seg] : res.placements) extra.add(machine, seg);
    };
    wrap_below(q1, w1);
    wrap_below(q2, w2);

    // (e) Untouched big sevens in (T/2, 5T/9] pair up on fresh machines; an
    // odd one joins the spare eight when their loads demand a machine.
    std::vector<int> pair_classes;
    for (size_t k = 0; k < seven.size(); ++k) {
      if (st.consumed[k]) continue;
      const SevenClass& sc = seven[k];
      if (sc.total > T * frac(1, 2) && sc.total <= T * frac(5, 9))
        pair_classes.push_back(static_cast<int>(k));
    }
    bool i8star_placed = false;
    bool fail = false;
    size_t pk = 0;
    for (; pk + 1 < pair_classes.size(); pk += 2) {
      if (guess_used >= m) { fail = true; break; }
      int q = guess_used++;
      Rational end = ctx.place_whole(extra, seven[static_cast<size_t>(pair_classes[pk])].class_index,
                                     q, Rational(0));
      ctx.place_whole(extra, seven[static_cast<size_t>(pair_classes[pk + 1])].class_index, q, end);
      st.consumed[static_cast<size_t>(pair_classes[pk])] = 1;
      st.consumed[static_cast<size_t>(pair_classes[pk + 1])] = 1;
      for (int kk : {pair_classes[pk], pair_classes[pk + 1]})
        for (const SevenJob& sj : seven[static_cast<size_t>(kk)].jobs)
          st.remaining[static_cast<size_t>(sj.job)] = 0;
    }
    if (fail) continue;
    if (pk < pair_classes.size()) {
      int k = pair_classes[pk];
      const SevenClass& sc = seven[static_cast<size_t>(k)];
      if (i8star >= 0 && ctx.class_load(i8star) + sc.total > T) {
        if (guess_used >= m) continue;
        int q = guess_used++;
        Rational end = ctx.place_whole(extra, i8star, q, Rational(0));
        ctx.place_whole(extra, sc.class_index, q, end);
        i8star_placed = true;
        st.consumed[static_cast<size_t>(k)] = 1;
        for (const SevenJob& sj : sc.jobs) st.remaining[static_cast<size_t>(sj.job)] = 0;
      }
      // otherwise the class stays, flowing into the nice sub-instance
    }

    // (f) Nice sub-instance: all of types 1-6, the spare eight if still
    // unplaced, and every type-7 leftover.
    NiceAttempt attempt;
    for (const std::vector<int>* bucket : {&ctx.t1, &ctx.t2, &ctx.t3, &ctx.t4, &ctx.t5, &ctx.t6})
      for (int ci : *bucket) attempt.add_whole_class(ctx, ci);
    if (i8star >= 0 && !i8star_placed) attempt.add_whole_class(ctx, i8star);
    for (const SevenClass& sc : seven) {
      int sub_ci = -1;
      for (const SevenJob& sj : sc.jobs) {
        const Rational& rem = st.remaining[static_cast<size_t>(sj.job)];
        if (!(rem > Rational(0))) continue;
        if (sub_ci < 0) sub_ci = attempt.add_class(ctx, sc.class_index);
        attempt.add_piece(sub_ci, sj.job, rem);
      }
    }
    int pool = m - guess_used;
    auto niced = attempt.run(ctx, pool, guess_used);
    if (!niced) continue;

    Schedule result = stage;
    merge_into(result, extra);
    merge_into(result, *niced);
    result.ensure_machines(m);
    result.sort_segments();
    return result;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Nine-remain branch
// ---------------------------------------------------------------------------

inline std::optional<Schedule> branch_nine_remain(const DecideContext& ctx,
                                                  std::vector<int> rem9) {
  const int m = ctx.inst->machine_count;
  const Rational T = ctx.T();
  const Rational third = ctx.third();
  const Rational two_thirds = T * frac(2, 3);
  const Rational top = ctx.top();

  // Every remaining nine and ten gets its own machine; the rest of the pool
  // hosts the nice sub-instance.
  std::vector<int> carriers = rem9;
  carriers.insert(carriers.end(), ctx.t10.begin(), ctx.t10.end());
  const int k_carriers = static_cast<int>(carriers.size());
  if (ctx.base_used + k_carriers > m) return std::nullopt;
  const int pool = m - ctx.base_used - k_carriers;
  const int pool_start = ctx.base_used + k_carriers;

  // Largest free space first, i.e. smallest class load first.
  std::sort(carriers.begin(), carriers.end(), [&](int x, int y) {
    if (ctx.class_load(x) != ctx.class_load(y)) return ctx.class_load(x) < ctx.class_load(y);
    return x < y;
  });

  // Jobs whose setup-heavy halves cannot both sit inside one T/3 strip; they
  // are placed straddling carrier machines or go wholly to the nice side.
  std::vector<SevenClass> seven = make_seven_classes(ctx);
  struct BigJob {
    int seven_pos;
    int job;
    Rational processing;
  };
  std::vector<BigJob> big_jobs;
  std::vector<char> class_has_big(seven.size(), 0);
  std::vector<char> job_is_big(ctx.inst->jobs.size(), 0);
  for (size_t k = 0; k < seven.size(); ++k) {
    for (const SevenJob& sj : seven[k].jobs) {
      Rational p = sj.wrappable + sj.obligatory;
      if (Rational(2) * seven[k].setup + p > two_thirds) {
        big_jobs.push_back({static_cast<int>(k), sj.job, p});
        class_has_big[k] = 1;
        job_is_big[static_cast<size_t>(sj.job)] = 1;
      }
    }
  }
  std::sort(big_jobs.begin(), big_jobs.end(), [&](const BigJob& x, const BigJob& y) {
    const Rational &sx = seven[static_cast<size_t>(x.seven_pos)].setup,
                   &sy = seven[static_cast<size_t>(y.seven_pos)].setup;
    if (sx != sy) return sx < sy;
    return x.job < y.job;
  });

  auto free_space = [&](int ci) { return T - ctx.class_load(ci); };

  for (int x = 0; x <= k_carriers; ++x) {
    SevenState st(seven, ctx.inst->jobs.size());
    Schedule extra;
    int guess_used = ctx.base_used;

    std::vector<int> mprime(carriers.begin(), carriers.begin() + x);
    std::vector<int> mrest(carriers.begin() + x, carriers.end());

    // Straddle pattern: pairs of roomy carriers absorb one big job each.
    size_t bj = 0;
    while (bj < big_jobs.size() && mprime.size() >= 2) {
      const BigJob& job = big_jobs[bj];
      const Rational& s_j = seven[static_cast<size_t>(job.seven_pos)].setup;
      if (free_space(mprime[0]) + free_space(mprime[1]) < s_j + third) break;
      int dq = mprime[0], dq2 = mprime[1];
      int q = guess_used++, q2 = guess_used++;
      int ci = seven[static_cast<size_t>(job.seven_pos)].class_index;
      // Carrier on q ends at 4/3 T; the job runs below it from 0.
      ctx.place_whole(extra, dq, q, top - ctx.class_load(dq));
      Rational amt1 = min(job.processing, top - ctx.class_load(dq) - s_j);
      extra.add(q, Segment::setup(ci, Rational(0), s_j));
      extra.add(q, Segment::piece(ci, job.job, s_j, s_j + amt1));
      // Partner carrier on q2 starts at 0; the rest of the job sits above.
      Rational end2 = ctx.place_whole(extra, dq2, q2, Rational(0));
      Rational amt2 = job.processing - amt1;
      if (amt2 > Rational(0)) {
        extra.add(q2, Segment::setup(ci, end2, end2 + s_j));
        extra.add(q2, Segment::piece(ci, job.job, end2 + s_j, end2 + s_j + amt2));
      }
      st.remaining[static_cast<size_t>(job.job)] = 0;
      mprime.erase(mprime.begin(), mprime.begin() + 2);
      ++bj;
    }
    // Single-machine pattern: one more big job gets its below-T/3 slice.
    if (!mprime.empty() && bj < big_jobs.size()) {
      const BigJob& job = big_jobs[bj];
      const Rational& s_j = seven[static_cast<size_t>(job.seven_pos)].setup;
      int ci = seven[static_cast<size_t>(job.seven_pos)].class_index;
      int q = guess_used++;
      extra.add(q, Segment::setup(ci, Rational(0), s_j));
      extra.add(q, Segment::piece(ci, job.job, s_j, third));
      st.remaining[static_cast<size_t>(job.job)] -= third - s_j;
      ctx.place_whole(extra, mprime[0], q, third);
      mprime.erase(mprime.begin());
      ++bj;
    }
    // Guessed machines that found no big job rejoin the alternate pool.
    for (int ci : mprime) mrest.push_back(ci);
    std::sort(mrest.begin(), mrest.end(), [&](int a, int b2) {
      if (ctx.class_load(a) != ctx.class_load(b2)) return ctx.class_load(a) < ctx.class_load(b2);
      return a < b2;
    });

    // Remaining carriers alternate between starting at 0 and finishing at
    // 4/3 T (the last one finishes at 4/3 T); the complementary intervals
    // form the wrap template.
    const int n_rest = static_cast<int>(mrest.size());
    WrapTemplate tpl;
    Rational budget = 0;  // F: template space beyond T/3 per gap
    for (int r = 0; r < n_rest; ++r) {
      int ci = mrest[static_cast<size_t>(r)];
      int q = guess_used++;
      bool ends_at_top = ((n_rest - 1 - r) % 2 == 0);
      Rational load = ctx.class_load(ci);
      if (ends_at_top) {
        ctx.place_whole(extra, ci, q, top - load);
        tpl.add(q, Rational(0), top - load);
      } else {
        ctx.place_whole(extra, ci, q, Rational(0));
        tpl.add(q, load, top);
      }
      budget += (top - load) - third;
    }

    // Fill the wrap sequence: small classes first, then unsetup big classes
    // by setup, then classes already owing a nice-side setup by setup per
    // unit of wrappable (non-big) load. Big jobs never enter the sequence.
    WrapSequence q7;
    int split_pos = -1;  // seven-position of the class split by the budget
    int split_job = -1;
    // Adds the class's non-big remaining jobs to the sequence. Returns false
    // without consuming the class when the budget cannot even cover its
    // setup, so the phase loops can stop.
    auto add_class_jobs = [&](size_t k) {
      const SevenClass& sc = seven[k];
      if (!(budget > sc.setup)) return false;
      WrapGroup g{sc.class_index, sc.setup, {}};
      budget -= sc.setup;
      for (const SevenJob& sj : sc.jobs) {
        if (!(budget > Rational(0))) break;
        if (job_is_big[static_cast<size_t>(sj.job)]) continue;
        Rational rem = st.remaining[static_cast<size_t>(sj.job)];
        if (!(rem > Rational(0))) continue;
        if (budget > rem) {
          g.pieces.push_back({sj.job, rem});
          st.remaining[static_cast<size_t>(sj.job)] = 0;
          budget -= rem;
        } else {
          g.pieces.push_back({sj.job, budget});
          st.remaining[static_cast<size_t>(sj.job)] -= budget;
          budget = 0;
          split_pos = static_cast<int>(k);
          split_job = sj.job;
        }
      }
      st.consumed[k] = 1;
      if (!g.pieces.empty()) q7.groups.push_back(std::move(g));
      return true;
    };

    for (size_t k = 0; k < seven.size() && budget > Rational(0); ++k)
      if (!st.consumed[k] && seven[k].total <= third) add_class_jobs(k);
    while (budget > Rational(0)) {
      int best = -1;
      for (size_t k = 0; k < seven.size(); ++k) {
        if (st.consumed[k] || class_has_big[k] || seven[k].total <= third) continue;
        if (best < 0 || seven[k].setup < seven[static_cast<size_t>(best)].setup ||
            (seven[k].setup == seven[static_cast<size_t>(best)].setup &&
             seven[k].class_index < seven[static_cast<size_t>(best)].class_index))
          best = static_cast<int>(k);
      }
      if (best < 0 || !add_class_jobs(static_cast<size_t>(best))) break;
    }
    while (budget > Rational(0)) {
      int best = -1;
      Rational best_den;
      for (size_t k = 0; k < seven.size(); ++k) {
        if (st.consumed[k] || !class_has_big[k] || seven[k].total <= third) continue;
        Rational den = 0;
        for (const SevenJob& sj : seven[k].jobs)
          if (!job_is_big[static_cast<size_t>(sj.job)]) den += sj.wrappable + sj.obligatory;
        if (!(den > Rational(0))) { st.consumed[k] = 1; continue; }
        if (best < 0 || seven[k].setup * best_den < seven[static_cast<size_t>(best)].setup * den) {
          best = static_cast<int>(k);
          best_den = den;
        }
      }
      if (best < 0 || !add_class_jobs(static_cast<size_t>(best))) break;
    }

    // Split-class epilogue: keep the one split job from being parallelized
    // between the wrap and the nice side.
    if (split_pos >= 0 && !tpl.gaps.empty()) {
      const SevenClass& sc = seven[static_cast<size_t>(split_pos)];
      if (sc.total <= third) {
        // Small class: schedule it whole at the front gap instead.
        for (size_t k = 0; k < q7.groups.size(); ++k) {
          if (q7.groups[k].class_index == sc.class_index) {
            q7.groups.erase(q7.groups.begin() + static_cast<long>(k));
            break;
          }
        }
        Rational pos = tpl.gaps[0].a;
        extra.add(tpl.gaps[0].machine, Segment::setup(sc.class_index, pos, pos + sc.setup));
        pos += sc.setup;
        for (const SevenJob& sj : sc.jobs) {
          const Rational& p = sj.wrappable + sj.obligatory;
          extra.add(tpl.gaps[0].machine, Segment::piece(sc.class_index, sj.job, pos, pos + p));
          pos += p;
          st.remaining[static_cast<size_t>(sj.job)] = 0;
        }
        tpl.gaps[0].a = pos;
        if (!(tpl.gaps[0].a < tpl.gaps[0].b)) tpl.gaps.erase(tpl.gaps.begin());
      } else {
        Rational p_nice = st.remaining[static_cast<size_t>(split_job)];
        if (p_nice <= third) {
          // Absorb the whole job into the wrap; the spare T/3 of template
          // slack covers it.
          for (WrapGroup& g : q7.groups)
            if (g.class_index == sc.class_index)
              for (QueuedPiece& qp : g.pieces)
                if (qp.job_index == split_job) qp.amount += p_nice;
          st.remaining[static_cast<size_t>(split_job)] = 0;
        } else {
          // Confine the wrapped part below T/3 at the bottom gap of the last
          // machine, where the nice side never reaches.
          Rational p_wrap = 0;
          size_t gidx = 0;
          for (; gidx < q7.groups.size(); ++gidx)
            if (q7.groups[gidx].class_index == sc.class_index) break;
          if (gidx < q7.groups.size()) {
            auto& pieces = q7.groups[gidx].pieces;
            for (size_t pi = 0; pi < pieces.size(); ++pi) {
              if (pieces[pi].job_index == split_job) {
                p_wrap = pieces[pi].amount;
                pieces.erase(pieces.begin() + static_cast<long>(pi));
                break;
              }
            }
            if (pieces.empty()) q7.groups.erase(q7.groups.begin() + static_cast<long>(gidx));
          }
          if (p_wrap > Rational(0)) {
            WrapGap& last = tpl.gaps.back();
            extra.add(last.machine, Segment::setup(sc.class_index, last.a, last.a + sc.setup));
            extra.add(last.machine,
                      Segment::piece(sc.class_index, split_job, last.a + sc.setup,
                                     last.a + sc.setup + p_wrap));
            last.a = last.a + sc.setup + p_wrap;
            if (!(last.a < last.b)) tpl.gaps.pop_back();
          }
        }
      }
    }

    if (!q7.empty()) {
      WrapResult res = wrap_lj(q7, tpl);
      if (res.overflow) throw std::logic_error("decide: nine-branch wrap overflow");
      for (auto& [machine, seg] : res.placements) extra.add(machine, seg);
    }

    // Nice sub-instance: types 1-6 whole plus all type-7 leftovers.
    NiceAttempt attempt;
    for (const std::vector<int>* bucket : {&ctx.t1, &ctx.t2, &ctx.t3, &ctx.t4, &ctx.t5, &ctx.t6})
      for (int ci : *bucket) attempt.add_whole_class(ctx, ci);
    for (const SevenClass& sc : seven) {
      int sub_ci = -1;
      for (const SevenJob& sj : sc.jobs) {
        const Rational& rem = st.remaining[static_cast<size_t>(sj.job)];
        if (!(rem > Rational(0))) continue;
        if (sub_ci < 0) sub_ci = attempt.add_class(ctx, sc.class_index);
        attempt.add_piece(sub_ci, sj.job, rem);
      }
    }
    auto niced = attempt.run(ctx, pool, pool_start);
    if (!niced) continue;

    Schedule result = ctx.base;
    merge_into(result, extra);
    merge_into(result, *niced);
    result.ensure_machines(m);
    result.sort_segments();
    return result;
  }
  return std::nullopt;
}

}  // namespace detail

// Dual-approximation decider: returns a schedule with makespan at most
// 4/3 T, or nothing, certifying that no makespan-T schedule exists.
inline std::optional<Schedule> decide(const Instance& inst, const Rational& T,
                                      const DecideOptions& opts = {}) {
  if (inst.jobs.empty()) return Schedule{};
  if (!(T > Rational(0))) return std::nullopt;
  if (T < lower_bound(inst)) return std::nullopt;

  auto norm = normalize_and_type(inst, T);
  if (std::holds_alternative<InfeasibleGuess>(norm)) return std::nullopt;

  detail::DecideContext ctx;
  ctx.inst = &inst;
  ctx.typed = std::move(std::get<TypedInstance>(norm));
  ctx.typed.base = &inst;
  for (size_t ci = 0; ci < ctx.typed.per_class.size(); ++ci) {
    int i = static_cast<int>(ci);
    switch (ctx.typed.per_class[ci].type) {
      case ClassType::T1: ctx.t1.push_back(i); break;
      case ClassType::T2: ctx.t2.push_back(i); break;
      case ClassType::T3: ctx.t3.push_back(i); break;
      case ClassType::T4: ctx.t4.push_back(i); break;
      case ClassType::T5: ctx.t5.push_back(i); break;
      case ClassType::T6: ctx.t6.push_back(i); break;
      case ClassType::T7: ctx.t7.push_back(i); break;
      case ClassType::T8: ctx.t8.push_back(i); break;
      case ClassType::T9: ctx.t9.push_back(i); break;
      case ClassType::T10: ctx.t10.push_back(i); break;
    }
  }

  // Pair eights with nines, one pair per machine, until one side runs out.
  size_t pairs = std::min(ctx.t8.size(), ctx.t9.size());
  for (size_t k = 0; k < pairs; ++k) {
    if (ctx.base_used >= inst.machine_count) return std::nullopt;
    int q = ctx.base_used++;
    Rational end = ctx.place_whole(ctx.base, ctx.t8[k], q, Rational(0));
    ctx.place_whole(ctx.base, ctx.t9[k], q, end);
  }
  std::vector<int> rem8(ctx.t8.begin() + static_cast<long>(pairs), ctx.t8.end());
  std::vector<int> rem9(ctx.t9.begin() + static_cast<long>(pairs), ctx.t9.end());

  if (rem9.empty()) return detail::branch_eight_remain(ctx, std::move(rem8), opts);
  return detail::branch_nine_remain(ctx, std::move(rem9));
}

}  // namespace setsched
