#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "setsched/instance.hpp"
#include "setsched/rational.hpp"

namespace setsched {

// The ten class types. T1..T7 admit the linear-time schedule ("nice" types),
// T8..T10 are handled by the general decider.
enum class ClassType { T1 = 1, T2, T3, T4, T5, T6, T7, T8, T9, T10 };

inline const char* to_string(ClassType t) {
  switch (t) {
    case ClassType::T1: return "1";
    case ClassType::T2: return "2";
    case ClassType::T3: return "3";
    case ClassType::T4: return "4";
    case ClassType::T5: return "5";
    case ClassType::T6: return "6";
    case ClassType::T7: return "7";
    case ClassType::T8: return "8";
    case ClassType::T9: return "9";
    case ClassType::T10: return "10";
  }
  return "?";
}

// Total partition of classes by setup band and total load, for a makespan
// guess T. Setup bands: chp = [0, T/3), med = [T/3, 2T/3), exp = [2T/3, T].
// All boundaries are decided exactly.
//
// Preconditions: 0 <= s < T, total > s.
inline ClassType classify_class(const Rational& s, const Rational& total, const Rational& T) {
  if (!(T > Rational(0))) throw std::invalid_argument("classify_class: T must be > 0");
  if (s < Rational(0) || total <= s) throw std::invalid_argument("classify_class: need 0 <= s < total");
  if (s >= T) throw std::domain_error("classify_class: s >= T (infeasible guess)");

  const Rational t3 = T * frac(1, 3);
  const Rational t23 = T * frac(2, 3);

  if (s < t3) return ClassType::T7;  // chp band: everything is type 7

  // med and exp bands share the 9/10 rows.
  if (total > t23 && total <= T * frac(5, 6)) return ClassType::T9;
  if (total > T * frac(5, 6) && total < T) return ClassType::T10;

  if (s >= t23) {
    // exp band; with total >= T the class is type 1 (total <= mT is an
    // instance-level condition, not the classifier's).
    if (total >= T) return ClassType::T1;
    throw std::logic_error("classify_class: unreachable exp-band total");
  }

  // med band.
  if (total <= t23) {
    if (total <= T * frac(4, 9)) return ClassType::T6;       // (1/3, 4/9]
    if (total <= T * frac(1, 2)) return ClassType::T8;       // (4/9, 1/2]
    return ClassType::T5;                                    // (1/2, 2/3]
  }
  if (total >= Rational(2) * T - s) return ClassType::T2;    // [2-s, m]
  if (total > T * frac(4, 3)) return ClassType::T3;          // (4/3, 2-s)
  if (total >= T) return ClassType::T4;                      // [1, 4/3]
  throw std::logic_error("classify_class: unreachable med-band total");
}

// (alpha, alpha') = (ceil, floor) of P / (T - s). Minimum setup/machine
// multiplicities a makespan-T schedule must spend on the class.
inline std::pair<long long, long long> compute_alpha(const Rational& P, const Rational& s,
                                                     const Rational& T) {
  if (s >= T) throw std::domain_error("compute_alpha: s >= T (infeasible guess)");
  if (!(P > Rational(0))) throw std::invalid_argument("compute_alpha: P must be > 0");
  Rational ratio = P / (T - s);
  return {ratio.ceil(), ratio.floor()};
}

struct TypedClass {
  ClassType type = ClassType::T7;
  long long alpha = 0;        // ceil(P/(T-s))
  long long alpha_floor = 0;  // floor(P/(T-s))
  Rational total;             // P(C_i)
};

// An instance together with a makespan guess and the per-class typing.
// Normalization is virtual: values are stored unscaled, T is carried along.
struct TypedInstance {
  const Instance* base = nullptr;
  Rational T;
  std::vector<TypedClass> per_class;
  std::vector<std::vector<int>> class_jobs;  // job indices grouped per class

  const Rational& setup(int ci) const { return base->classes[static_cast<size_t>(ci)].setup; }
  const Rational& total(int ci) const { return per_class[static_cast<size_t>(ci)].total; }
  ClassType type(int ci) const { return per_class[static_cast<size_t>(ci)].type; }
};

// Witness that the guess T is below OPT: some class setup or some job's
// elapsed time s_i + p_j cannot fit inside a makespan-T window.
struct InfeasibleGuess {
  int class_index = -1;
  int job_index = -1;  // -1 when the setup alone is the witness
};

inline std::variant<TypedInstance, InfeasibleGuess> normalize_and_type(const Instance& inst,
                                                                       const Rational& T) {
  if (!(T > Rational(0))) throw std::invalid_argument("normalize_and_type: T must be > 0");
  TypedInstance out;
  out.base = &inst;
  out.T = T;
  out.per_class.resize(inst.classes.size());
  out.class_jobs.resize(inst.classes.size());
  std::vector<Rational> totals = inst.class_totals();
  for (int ji = 0; ji < inst.num_jobs(); ++ji)
    out.class_jobs[static_cast<size_t>(inst.jobs[static_cast<size_t>(ji)].class_index)].push_back(ji);

  for (int ci = 0; ci < inst.num_classes(); ++ci) {
    const Rational& s = inst.classes[static_cast<size_t>(ci)].setup;
    if (s >= T) return InfeasibleGuess{ci, -1};
    for (int ji : out.class_jobs[static_cast<size_t>(ci)]) {
      if (s + inst.jobs[static_cast<size_t>(ji)].processing > T) return InfeasibleGuess{ci, ji};
    }
    TypedClass tc;
    tc.total = totals[static_cast<size_t>(ci)];
    tc.type = classify_class(s, s + tc.total, T);
    auto [a, af] = compute_alpha(tc.total, s, T);
    tc.alpha = a;
    tc.alpha_floor = af;
    out.per_class[static_cast<size_t>(ci)] = tc;
  }
  return out;
}

}  // namespace setsched
