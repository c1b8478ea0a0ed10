#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace ncjacobi {

// mpq_class does not canonicalize num/den constructions; this does.
class Rational : public mpq_class {
 public:
  Rational() = default;
  Rational(const mpq_class& q) : mpq_class(q) {}
  Rational(mpq_class&& q) : mpq_class(std::move(q)) {}
  template <class T, class U>
  Rational(const __gmp_expr<T, U>& e) : mpq_class(e) {}
  Rational(int n) : mpq_class(n) {}
  Rational(long n) : mpq_class(n) {}
  Rational(const mpz_class& n) : mpq_class(n) {}
  Rational(long n, long d) : mpq_class(n, d) { canonicalize(); }
  Rational(const mpz_class& n, const mpz_class& d) : mpq_class(n, d) { canonicalize(); }
  explicit Rational(const std::string& s) : mpq_class(s) { canonicalize(); }
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace ncjacobi
