#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "setsched/rational.hpp"
#include "setsched/schedule.hpp"

namespace setsched {

// Free space on machines: triples (machine, a, b) with 0 <= a < b and
// non-decreasing machine indices.
struct WrapGap {
  int machine = 0;
  Rational a;
  Rational b;
};

struct WrapTemplate {
  std::vector<WrapGap> gaps;

  void add(int machine, Rational a, Rational b) {
    if (!(a < b)) return;  // degenerate entries carry no space
    if (a < Rational(0)) throw std::invalid_argument("wrap template: a < 0");
    if (!gaps.empty() && machine < gaps.back().machine)
      throw std::invalid_argument("wrap template: machine indices must be non-decreasing");
    gaps.push_back({machine, std::move(a), std::move(b)});
  }

  Rational space() const {  // S(omega)
    Rational s = 0;
    for (const WrapGap& g : gaps) s += g.b - g.a;
    return s;
  }
};

// A piece of a job queued for wrapping; the amount may be less than the
// job's full processing time.
struct QueuedPiece {
  int job_index = 0;
  Rational amount;  // > 0
};

// One class's share of a wrap sequence: a setup at the head, then pieces.
struct WrapGroup {
  int class_index = 0;
  Rational setup;
  std::vector<QueuedPiece> pieces;  // nonempty
};

struct WrapSequence {
  std::vector<WrapGroup> groups;

  Rational load() const {  // L(Q)
    Rational l = 0;
    for (const WrapGroup& g : groups) {
      l += g.setup;
      for (const QueuedPiece& p : g.pieces) l += p.amount;
    }
    return l;
  }

  Rational max_setup() const {  // s_max^(Q)
    Rational s = 0;
    for (const WrapGroup& g : groups) s = max(s, g.setup);
    return s;
  }

  bool empty() const { return groups.empty(); }
};

struct WrapResult {
  std::vector<std::pair<int, Segment>> placements;  // (machine, segment)
  bool overflow = false;             // template space exhausted: caller bug
  bool feasibility_warning = false;  // some gap r > 1 starts below the max setup
  int last_gap = -1;                 // 0-based gap index holding the final piece
};

namespace detail {

// Shared walk for Wrap and WrapLJ. Items of Q are poured through the gaps in
// order; pieces split at gap ends, setups never split (a setup reaching b_r
// is dropped and the gap closes at that point). A piece that begins a gap
// owes a setup of its class: Wrap puts it directly below a_r (outside the
// template), WrapLJ puts it at a_r and starts the piece after it.
inline WrapResult wrap_walk(const WrapSequence& q, const WrapTemplate& tpl, bool lj) {
  WrapResult res;
  if (q.empty()) return res;
  if (tpl.gaps.empty()) {
    res.overflow = true;
    return res;
  }

  if (!lj) {
    Rational smax = q.max_setup();
    for (size_t r = 1; r < tpl.gaps.size(); ++r)
      if (tpl.gaps[r].a < smax) res.feasibility_warning = true;
  }

  size_t r = 0;
  Rational pos = tpl.gaps[0].a;
  bool at_gap_start = true;
  bool exhausted = false;

  auto advance_gap = [&]() {
    ++r;
    if (r >= tpl.gaps.size()) {
      exhausted = true;
      return;
    }
    pos = tpl.gaps[r].a;
    at_gap_start = true;
  };

  auto place_setup = [&](int ci, const Rational& s, const Rational& start) {
    if (s > Rational(0))
      res.placements.emplace_back(tpl.gaps[r].machine, Segment::setup(ci, start, start + s));
  };

  // Pays the setup owed by a piece that begins the current gap.
  auto begin_gap_setup = [&](const WrapGroup& g) -> bool {
    if (lj) {
      while (!exhausted && pos + g.setup >= tpl.gaps[r].b) advance_gap();
      if (exhausted) return false;
      place_setup(g.class_index, g.setup, pos);
      pos += g.setup;
    } else {
      place_setup(g.class_index, g.setup, pos - g.setup);
    }
    at_gap_start = false;
    return true;
  };

  for (const WrapGroup& g : q.groups) {
    if (exhausted) {
      res.overflow = true;
      return res;
    }
    // The group's own setup item: placed at pos if it fits, dropped (and the
    // gap closed) if it reaches b_r.
    if (pos + g.setup < tpl.gaps[r].b) {
      place_setup(g.class_index, g.setup, pos);
      pos += g.setup;
      if (g.setup > Rational(0)) at_gap_start = false;
    } else {
      advance_gap();
    }

    for (const QueuedPiece& qp : g.pieces) {
      Rational remaining = qp.amount;
      while (remaining > Rational(0)) {
        if (exhausted) {
          res.overflow = true;
          return res;
        }
        if (at_gap_start && !begin_gap_setup(g)) {
          res.overflow = true;
          return res;
        }
        Rational room = tpl.gaps[r].b - pos;
        if (remaining < room) {
          res.placements.emplace_back(
              tpl.gaps[r].machine, Segment::piece(g.class_index, qp.job_index, pos, pos + remaining));
          res.last_gap = static_cast<int>(r);
          pos += remaining;
          remaining = 0;
          at_gap_start = false;
        } else {
          res.placements.emplace_back(
              tpl.gaps[r].machine, Segment::piece(g.class_index, qp.job_index, pos, tpl.gaps[r].b));
          res.last_gap = static_cast<int>(r);
          remaining -= room;
          advance_gap();
        }
      }
    }
  }
  return res;
}

}  // namespace detail

// Algorithm "Wrap": begin-of-gap setups sit directly below a_r, outside the
// template. Precondition L(Q) <= S(omega); violations surface as overflow.
inline WrapResult wrap(const WrapSequence& q, const WrapTemplate& tpl) {
  return detail::wrap_walk(q, tpl, false);
}

// Algorithm "WrapLJ": begin-of-gap setups sit inside the gap at a_r and the
// piece starts right after, so a job may start below the max setup level.
inline WrapResult wrap_lj(const WrapSequence& q, const WrapTemplate& tpl) {
  return detail::wrap_walk(q, tpl, true);
}

}  // namespace setsched
