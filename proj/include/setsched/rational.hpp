#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace setsched {

// Exact rational number. All solver arithmetic goes through this type;
// no floating point is used anywhere in solver logic. Backed by GMP so
// denominators arising from repeated bisection never overflow.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) { v_ = from_ll(n); }      // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}                      // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "p", "-p" or "p/q". Rejects anything else (no decimals).
  static Rational parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    if (text.find_first_not_of("0123456789/-+") != std::string::npos)
      throw std::invalid_argument("Rational: bad character in '" + text + "'");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
  }

  std::string str() const { return v_.get_str(); }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  // floor(this), as a machine integer. Values in this artifact stay small
  // (machine counts, setup multiplicities); overflow would be a solver bug.
  long long floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("Rational::floor out of range");
    return q.get_si();
  }
  long long ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("Rational::ceil out of range");
    return q.get_si();
  }

  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  double approx() const { return v_.get_d(); }  // display/bench only, never solver logic

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

 private:
  static mpq_class from_ll(long long n) {
    if (n >= 0) {
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
      return mpq_class(z);
    }
    unsigned long long mag = static_cast<unsigned long long>(-(n + 1)) + 1ULL;
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
    return mpq_class(mpz_class(-z));
  }

  mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// s/t as an exact fraction of small integers, e.g. frac(2,3) for 2/3.
inline Rational frac(long num, long den) { return Rational(num, den); }

}  // namespace setsched
