#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "setsched/classify.hpp"
#include "setsched/instance.hpp"
#include "setsched/schedule.hpp"
#include "setsched/wrap.hpp"

namespace setsched {

// A typed instance restricted to at most one type-8 class and no type-9/10
// classes, with the leftover choices fixed: pairing walks the classes in
// input order and the unpaired tail forms R3 / R5 / R6.
struct NiceInstance {
  const TypedInstance* typed = nullptr;
  std::vector<int> t1, t2, t3, t4, t5, t6, t7;
  int t8 = -1;

  const Rational& T() const { return typed->T; }

  std::vector<int> r3() const { return tail(t3, 2); }
  std::vector<int> r5() const { return tail(t5, 2); }
  std::vector<int> r6() const { return tail(t6, 3); }

 private:
  static std::vector<int> tail(const std::vector<int>& v, size_t k) {
    size_t rem = v.size() % k;
    return {v.end() - static_cast<long>(rem), v.end()};
  }
};

inline std::optional<NiceInstance> make_nice(const TypedInstance& typed) {
  NiceInstance n;
  n.typed = &typed;
  for (size_t ci = 0; ci < typed.per_class.size(); ++ci) {
    int i = static_cast<int>(ci);
    switch (typed.per_class[ci].type) {
      case ClassType::T1: n.t1.push_back(i); break;
      case ClassType::T2: n.t2.push_back(i); break;
      case ClassType::T3: n.t3.push_back(i); break;
      case ClassType::T4: n.t4.push_back(i); break;
      case ClassType::T5: n.t5.push_back(i); break;
      case ClassType::T6: n.t6.push_back(i); break;
      case ClassType::T7: n.t7.push_back(i); break;
      case ClassType::T8:
        if (n.t8 >= 0) return std::nullopt;  // two type-8 classes
        n.t8 = i;
        break;
      case ClassType::T9:
      case ClassType::T10: return std::nullopt;
    }
  }
  return n;
}

// Obligatory load: every class needs its setups and all processing placed.
// L_nice = sum_{1,2} alpha'_i s_i + sum_{3} 2 s_i + sum_{4..8} s_i + P(J).
inline Rational compute_l_nice(const NiceInstance& n) {
  const TypedInstance& t = *n.typed;
  Rational l = 0;
  for (int i : n.t1) l += Rational(t.per_class[static_cast<size_t>(i)].alpha_floor) * t.setup(i);
  for (int i : n.t2) l += Rational(t.per_class[static_cast<size_t>(i)].alpha_floor) * t.setup(i);
  for (int i : n.t3) l += Rational(2) * t.setup(i);
  for (int i : n.t4) l += t.setup(i);
  for (int i : n.t5) l += t.setup(i);
  for (int i : n.t6) l += t.setup(i);
  for (int i : n.t7) l += t.setup(i);
  if (n.t8 >= 0) l += t.setup(n.t8);
  for (const auto& pc : t.per_class) l += pc.total;
  return l;
}

// Machine count the schedule below needs; m below this count certifies
// T < OPT. r_nice charges the leftover classes, the type-7 load and the
// type-8 class; full pairs and triples are charged directly.
inline long long compute_m_nice(const NiceInstance& n) {
  const TypedInstance& t = *n.typed;
  long long machines = 0;
  for (int i : n.t1) machines += t.per_class[static_cast<size_t>(i)].alpha_floor;
  for (int i : n.t2) machines += t.per_class[static_cast<size_t>(i)].alpha_floor;
  machines += 3 * static_cast<long long>(n.t3.size() / 2);
  machines += static_cast<long long>(n.t4.size());
  machines += static_cast<long long>(n.t5.size() / 2);
  machines += static_cast<long long>(n.t6.size() / 3);

  Rational r = 0;
  for (int i : n.r3()) r += Rational(2) * t.setup(i) + t.total(i);
  for (int i : n.r5()) r += t.setup(i) + t.total(i);
  for (int i : n.r6()) r += t.setup(i) + t.total(i);
  for (int i : n.t7) r += t.setup(i) + t.total(i);
  if (n.t8 >= 0) r += t.setup(n.t8) + t.total(n.t8);
  machines += (r / n.T()).ceil();
  return machines;
}

namespace detail {

struct Window {
  int machine;
  Rational lo;
  Rational hi;
};

// Pours the given job amounts through the windows in order, splitting at
// window ends. Total amounts must not exceed total window capacity.
inline void fill_windows(Schedule& out, int class_index,
                         const std::vector<QueuedPiece>& amounts,
                         const std::vector<Window>& windows) {
  size_t w = 0;
  Rational pos = windows.empty() ? Rational(0) : windows[0].lo;
  for (const QueuedPiece& qp : amounts) {
    Rational remaining = qp.amount;
    while (remaining > Rational(0)) {
      if (w >= windows.size()) throw std::logic_error("fill_windows: capacity exceeded");
      Rational room = windows[w].hi - pos;
      Rational take = min(remaining, room);
      if (take > Rational(0)) {
        out.add(windows[w].machine,
                Segment::piece(class_index, qp.job_index, pos, pos + take));
        pos += take;
        remaining -= take;
      }
      if (pos == windows[w].hi) {
        ++w;
        if (w < windows.size()) pos = windows[w].lo;
      }
    }
  }
}

}  // namespace detail

// Theorem-4 construction: if m < m_nice the guess is rejected (T < OPT);
// otherwise builds a schedule with makespan <= 4/3 T on machines 0..m-1.
// Type-7 pieces are only ever placed at or above T/3, which the general
// decider relies on.
inline std::optional<Schedule> solve_nice(const NiceInstance& n, int m) {
  if (m < 0 || compute_m_nice(n) > m) return std::nullopt;
  const TypedInstance& t = *n.typed;
  const Instance& inst = *t.base;
  const Rational& T = t.T;
  const Rational third = T * frac(1, 3);
  const Rational two_thirds = T * frac(2, 3);
  const Rational top = T * frac(4, 3);

  Schedule sched;
  sched.ensure_machines(m);
  int next_machine = 0;
  auto alloc = [&]() {
    if (next_machine >= m) throw std::logic_error("solve_nice: machine accounting failed");
    return next_machine++;
  };
  auto class_pieces = [&](int ci) {
    std::vector<QueuedPiece> out;
    for (int ji : t.class_jobs[static_cast<size_t>(ci)])
      out.push_back({ji, inst.jobs[static_cast<size_t>(ji)].processing});
    return out;
  };

  // Types 1 and 2: class i wrapped over alpha'_i machines between s_i and
  // T + (P mod (T-s_i)) / alpha'_i, jobs preempted at the top and restarted
  // at s_i on the next machine.
  for (const std::vector<int>* bucket : {&n.t1, &n.t2}) {
    for (int ci : *bucket) {
      const Rational& s = t.setup(ci);
      long long af = t.per_class[static_cast<size_t>(ci)].alpha_floor;
      Rational mod = t.total(ci) - Rational(af) * (T - s);
      Rational high = T + mod / Rational(af);
      std::vector<detail::Window> windows;
      for (long long k = 0; k < af; ++k) {
        int q = alloc();
        sched.add(q, Segment::setup(ci, Rational(0), s));
        windows.push_back({q, s, high});
      }
      detail::fill_windows(sched, ci, class_pieces(ci), windows);
    }
  }

  // Type-3 pairs over three machines; the middle machine carries 2/3 T - s
  // of each class. Each class runs its long part first (ending above T), so
  // the wrap-around job resumes at s_i safely.
  for (size_t k = 0; k + 1 < n.t3.size(); k += 2) {
    int i = n.t3[k], ip = n.t3[k + 1];
    const Rational &si = t.setup(i), &sp = t.setup(ip);
    int qa = alloc(), qb = alloc(), qc = alloc();
    Rational end_a = si + (t.total(i) - (two_thirds - si));
    sched.add(qa, Segment::setup(i, Rational(0), si));
    sched.add(qb, Segment::setup(i, Rational(0), si));
    detail::fill_windows(sched, i, class_pieces(i), {{qa, si, end_a}, {qb, si, two_thirds}});
    Rational end_c = sp + (t.total(ip) - (two_thirds - sp));
    sched.add(qb, Segment::setup(ip, two_thirds, two_thirds + sp));
    sched.add(qc, Segment::setup(ip, Rational(0), sp));
    detail::fill_windows(sched, ip, class_pieces(ip),
                         {{qb, two_thirds + sp, top}, {qc, sp, end_c}});
  }

  // Type-4 singles, type-5 pairs, type-6 triples: whole classes stacked
  // bottom-up on one machine.
  auto stack_whole = [&](int machine, const std::vector<int>& cls, Rational pos) {
    for (int ci : cls) {
      const Rational& s = t.setup(ci);
      sched.add(machine, Segment::setup(ci, pos, pos + s));
      detail::fill_windows(sched, ci, class_pieces(ci),
                           {{machine, pos + s, pos + s + t.total(ci)}});
      pos += s + t.total(ci);
    }
    return pos;
  };
  for (int ci : n.t4) stack_whole(alloc(), {ci}, Rational(0));
  for (size_t k = 0; k + 1 < n.t5.size(); k += 2)
    stack_whole(alloc(), {n.t5[k], n.t5[k + 1]}, Rational(0));
  for (size_t k = 0; k + 2 < n.t6.size(); k += 3)
    stack_whole(alloc(), {n.t6[k], n.t6[k + 1], n.t6[k + 2]}, Rational(0));

  // Leftovers: an unpaired type-3 class keeps 2/3 T - s_3 of processing for
  // the stub machines; unpaired 5s/6s and the type-8 class go whole.
  struct Leftover {
    int class_index;
    Rational load;              // setup + remaining processing
    bool is_split_three;        // pieces continue from the main machine
  };
  std::vector<Leftover> ll;
  std::vector<int> r3 = n.r3(), r5 = n.r5(), r6 = n.r6();
  std::vector<detail::Window> three_windows;  // windows of the split type-3 class
  int three_class = -1;
  if (!r3.empty()) {
    three_class = r3[0];
    const Rational& s3 = t.setup(three_class);
    int qmain = alloc();
    Rational end_main = s3 + (t.total(three_class) - (two_thirds - s3));
    sched.add(qmain, Segment::setup(three_class, Rational(0), s3));
    three_windows.push_back({qmain, s3, end_main});
    ll.push_back({three_class, two_thirds, true});  // s3 + (2/3 T - s3)
  }
  for (int ci : r5) ll.push_back({ci, t.setup(ci) + t.total(ci), false});
  for (int ci : r6) ll.push_back({ci, t.setup(ci) + t.total(ci), false});
  if (n.t8 >= 0) ll.push_back({n.t8, t.setup(n.t8) + t.total(n.t8), false});

  // Places one leftover entry with its setup at pos on the given machine.
  auto place_leftover = [&](int machine, const Leftover& lo, Rational pos) {
    const Rational& s = t.setup(lo.class_index);
    sched.add(machine, Segment::setup(lo.class_index, pos, pos + s));
    if (lo.is_split_three) {
      three_windows.push_back({machine, pos + s, pos + lo.load});
    } else {
      detail::fill_windows(sched, lo.class_index, class_pieces(lo.class_index),
                           {{machine, pos + s, pos + lo.load}});
    }
    return pos + lo.load;
  };

  if (ll.size() == 5) {
    // All five leftovers exist: the split three and the first six share one
    // machine (load in (T, 4/3 T]).
    int q = alloc();
    Rational pos = place_leftover(q, ll[0], Rational(0));
    Leftover six = ll[2];
    place_leftover(q, six, pos);
    ll = {ll[1], ll[3], ll[4]};
  }

  std::vector<Leftover> on_qs(ll.begin(), ll.begin() + static_cast<long>(std::min<size_t>(2, ll.size())));
  std::vector<Leftover> on_qe(ll.begin() + static_cast<long>(std::min<size_t>(2, ll.size())), ll.end());
  Rational load_qs = 0, load_qe = 0;
  for (const auto& lo : on_qs) load_qs += lo.load;
  for (const auto& lo : on_qe) load_qe += lo.load;
  if (load_qs + load_qe <= top && !on_qe.empty()) {
    for (auto& lo : on_qe) on_qs.push_back(lo);
    on_qe.clear();
    load_qs += load_qe;
    load_qe = 0;
  }

  int q_s = -1, q_e = -1;
  Rational a = 0, b = top;
  if (!on_qs.empty()) {
    q_s = alloc();
    Rational pos = 0;
    for (const auto& lo : on_qs) pos = place_leftover(q_s, lo, pos);
    a = pos;
  }
  if (!on_qe.empty()) {
    // q_e takes the last machine index so the wrap template stays ordered.
    q_e = m - 1;
    if (q_e < next_machine) throw std::logic_error("solve_nice: machine accounting failed");
    b = top - load_qe;
    Rational pos = b;
    for (const auto& lo : on_qe) pos = place_leftover(q_e, lo, pos);
  }
  if (three_class >= 0) detail::fill_windows(sched, three_class, class_pieces(three_class), three_windows);

  // All type-7 classes wrapped at or above T/3 across q_s, the untouched
  // machines and q_e.
  if (!n.t7.empty()) {
    WrapTemplate tpl;
    if (q_s >= 0) tpl.add(q_s, max(a, third), top);
    int free_end = (q_e >= 0) ? q_e : m;
    for (int q = next_machine; q < free_end; ++q) tpl.add(q, third, top);
    if (q_e >= 0) tpl.add(q_e, third, b);

    WrapSequence q7;
    for (int ci : n.t7) q7.groups.push_back({ci, t.setup(ci), class_pieces(ci)});
    WrapResult res = wrap(q7, tpl);
    if (res.overflow) throw std::logic_error("solve_nice: type-7 wrap overflow");
    for (auto& [machine, seg] : res.placements) sched.add(machine, std::move(seg));
  }

  sched.sort_segments();
  return sched;
}

}  // namespace setsched
