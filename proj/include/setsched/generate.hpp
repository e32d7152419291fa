#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "setsched/instance.hpp"
#include "setsched/schedule.hpp"
#include "setsched/validate.hpp"

namespace setsched {

// splitmix64: tiny, fully deterministic across platforms. Standard library
// distributions are not bit-stable across implementations, and identical
// seeds must give byte-identical instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi]; modulo bias is irrelevant at desk scale.
  long range(long lo, long hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

enum class CertificateKind { Packed, SingleClass, Manual };

// An instance with an optimum known exactly by construction.
struct CertifiedInstance {
  Instance instance;
  Rational opt;
  CertificateKind kind = CertificateKind::Manual;
};

// m classes with s_i + P(C_i) = opt each and all jobs fitting below opt:
// one class per machine is feasible, and the load bound sum(s_i + P_i) = m*opt
// forces OPT >= opt.
inline CertifiedInstance generate_packed(std::uint64_t seed, int m, long opt_value,
                                         int max_jobs_per_class = 6) {
  if (m < 1 || opt_value < 1) throw std::invalid_argument("generate_packed: bad params");
  Rng rng(seed);
  CertifiedInstance out;
  out.kind = CertificateKind::Packed;
  out.opt = Rational(opt_value);
  out.instance.machine_count = m;
  for (int ci = 0; ci < m; ++ci) {
    long setup = rng.range(0, opt_value - 1);
    long processing = opt_value - setup;  // >= 1
    out.instance.classes.push_back({Rational(setup)});
    long remaining = processing;
    int jobs = static_cast<int>(rng.range(1, max_jobs_per_class));
    for (int k = 0; k < jobs && remaining > 0; ++k) {
      long p = (k == jobs - 1) ? remaining
                               : std::min(remaining, rng.range(1, std::max(1L, remaining - (jobs - 1 - k))));
      out.instance.jobs.push_back({ci, Rational(p)});
      remaining -= p;
    }
    if (remaining > 0) out.instance.jobs.back().processing += Rational(remaining);
  }
  out.instance.check();
  return out;
}

// One class on m machines: OPT = max(s + p_max, s + P/m) exactly (wrap the
// jobs inside windows [s, opt]; a split piece cannot overlap itself because
// p_j <= opt - s).
inline CertifiedInstance generate_single_class(std::uint64_t seed, int m, long setup, int n,
                                               long p_max_range = 50) {
  if (m < 1 || n < 1 || setup < 0) throw std::invalid_argument("generate_single_class: bad params");
  Rng rng(seed);
  CertifiedInstance out;
  out.kind = CertificateKind::SingleClass;
  out.instance.machine_count = m;
  out.instance.classes.push_back({Rational(setup)});
  Rational p_sum = 0, p_max = 0;
  for (int k = 0; k < n; ++k) {
    long p = rng.range(1, p_max_range);
    out.instance.jobs.push_back({0, Rational(p)});
    p_sum += Rational(p);
    p_max = max(p_max, Rational(p));
  }
  out.opt = max(Rational(setup) + p_max, Rational(setup) + p_sum / Rational(m));
  out.instance.check();
  return out;
}

// The exact optimum for a certified instance. For single-class certificates
// this also constructs and validates the McNaughton-style witness.
inline Rational oracle_opt(const CertifiedInstance& cert) {
  if (cert.kind == CertificateKind::Packed) return cert.opt;
  if (cert.kind != CertificateKind::SingleClass)
    throw std::invalid_argument("oracle_opt: manual certificates carry no witness");

  const Instance& inst = cert.instance;
  const Rational& s = inst.classes[0].setup;
  Schedule witness;
  int q = 0;
  Rational pos = s;
  witness.add(0, Segment::setup(0, Rational(0), s));
  for (int ji = 0; ji < inst.num_jobs(); ++ji) {
    Rational remaining = inst.jobs[static_cast<size_t>(ji)].processing;
    while (remaining > Rational(0)) {
      Rational room = cert.opt - pos;
      if (!(room > Rational(0))) {
        ++q;
        witness.add(q, Segment::setup(0, Rational(0), s));
        pos = s;
        room = cert.opt - pos;
      }
      Rational take = min(remaining, room);
      witness.add(q, Segment::piece(0, ji, pos, pos + take));
      pos += take;
      remaining -= take;
    }
  }
  ValidationReport rep = validate(witness, inst, cert.opt);
  if (!rep.ok()) throw std::logic_error("oracle_opt: witness failed validation\n" + rep.summary());
  return cert.opt;
}

// Random instance biased so that all ten class types occur with nonzero
// probability at T near the lower bound: classes are drawn against a nominal
// makespan scale and the machine count is set to put the load bound there.
inline Instance generate_random(std::uint64_t seed, int num_classes, int max_extra_jobs = 4,
                                long scale = 360) {
  if (num_classes < 1) throw std::invalid_argument("generate_random: need >= 1 class");
  Rng rng(seed);
  Instance inst;
  Rational load = 0;
  for (int ci = 0; ci < num_classes; ++ci) {
    int type = static_cast<int>(rng.range(1, 10));
    long s = 0, total = 0;
    switch (type) {
      case 1:  // s in [2/3,1), total in [1, 2]
        s = rng.range(2 * scale / 3, scale - 1);
        total = rng.range(scale, 2 * scale);
        break;
      case 2:  // s in med, total >= 2 - s
        s = rng.range(scale / 3, 2 * scale / 3 - 1);
        total = rng.range(2 * scale - s, 3 * scale);
        break;
      case 3:  // s in med, total in (4/3, 2-s)
        s = rng.range(scale / 3 + 1, 2 * scale / 3 - 1);
        total = rng.range(4 * scale / 3 + 1, 2 * scale - s - 1);
        break;
      case 4:
        s = rng.range(scale / 3, 2 * scale / 3 - 1);
        total = rng.range(scale, 4 * scale / 3);
        break;
      case 5:
        s = rng.range(scale / 3, scale / 2 - 1);
        total = rng.range(scale / 2 + 1, 2 * scale / 3);
        break;
      case 6:
        s = rng.range(scale / 3, 4 * scale / 9 - 1);
        total = rng.range(scale / 3 + 1, 4 * scale / 9);
        break;
      case 7:
        s = rng.range(0, scale / 3 - 1);
        total = rng.range(s + 1, 2 * scale);
        break;
      case 8:
        s = rng.range(scale / 3, 4 * scale / 9);
        total = rng.range(4 * scale / 9 + 1, scale / 2);
        break;
      case 9:
        s = rng.range(scale / 3, 2 * scale / 3);
        total = rng.range(2 * scale / 3 + 1, 5 * scale / 6);
        break;
      case 10:
        s = rng.range(scale / 3, 4 * scale / 5);
        total = rng.range(5 * scale / 6 + 1, scale - 1);
        break;
    }
    if (total <= s) total = s + 1;
    inst.classes.push_back({Rational(s)});
    long processing = total - s;
    long cap = scale - s;  // keep every job's elapsed time within the scale
    int extra = static_cast<int>(rng.range(0, max_extra_jobs));
    long remaining = processing;
    for (int k = 0; k <= extra && remaining > 0; ++k) {
      long hi = std::min(remaining, cap);
      long p = (k == extra) ? std::min(remaining, cap) : rng.range(1, hi);
      inst.jobs.push_back({ci, Rational(p)});
      remaining -= p;
    }
    while (remaining > 0) {
      long p = std::min(remaining, cap);
      inst.jobs.push_back({ci, Rational(p)});
      remaining -= p;
    }
    load += Rational(total);
  }
  inst.machine_count = static_cast<int>(std::max<long long>(1, (load / Rational(scale)).ceil()));
  inst.check();
  return inst;
}

// Random instance restricted to the nice types (1-7 and at most one 8).
inline Instance generate_random_nice(std::uint64_t seed, int num_classes, long scale = 360) {
  if (num_classes < 1) throw std::invalid_argument("generate_random_nice: need >= 1 class");
  Rng rng(seed);
  Instance inst;
  Rational load = 0;
  bool used8 = false;
  for (int ci = 0; ci < num_classes; ++ci) {
    int type = static_cast<int>(rng.range(1, 8));
    if (type == 8 && used8) type = 7;
    if (type == 8) used8 = true;
    long s = 0, total = 0;
    switch (type) {
      case 1: s = rng.range(2 * scale / 3, scale - 1); total = rng.range(scale, 2 * scale); break;
      case 2: s = rng.range(scale / 3, 2 * scale / 3 - 1); total = rng.range(2 * scale - s, 3 * scale); break;
      case 3:
        s = rng.range(scale / 3 + 1, 2 * scale / 3 - 1);
        total = rng.range(4 * scale / 3 + 1, 2 * scale - s - 1);
        break;
      case 4: s = rng.range(scale / 3, 2 * scale / 3 - 1); total = rng.range(scale, 4 * scale / 3); break;
      case 5: s = rng.range(scale / 3, scale / 2 - 1); total = rng.range(scale / 2 + 1, 2 * scale / 3); break;
      case 6: s = rng.range(scale / 3, 4 * scale / 9 - 1); total = rng.range(scale / 3 + 1, 4 * scale / 9); break;
      case 7: s = rng.range(0, scale / 3 - 1); total = rng.range(s + 1, 2 * scale); break;
      case 8: s = rng.range(scale / 3, 4 * scale / 9); total = rng.range(4 * scale / 9 + 1, scale / 2); break;
    }
    if (total <= s) total = s + 1;
    inst.classes.push_back({Rational(s)});
    long remaining = total - s;
    long cap = scale - s;
    while (remaining > 0) {
      long p = rng.range(1, std::min(remaining, cap));
      inst.jobs.push_back({ci, Rational(p)});
      remaining -= p;
    }
    load += Rational(total);
  }
  inst.machine_count = static_cast<int>(std::max<long long>(1, (load / Rational(scale)).ceil()));
  inst.check();
  return inst;
}

}  // namespace setsched
