#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncjacobi/rational.hpp"

namespace ncjacobi {

/// Invertible commuting symbol whose exponents live in (1/denominator) Z.
struct UnitSpec {
  std::string name;
  int denominator = 1;
};

/// Describes a coefficient ring: Laurent units with fractional exponents and
/// nilpotent variables truncated above a total degree.
class ScalarRing {
 public:
  ScalarRing(std::vector<UnitSpec> units, std::vector<std::string> nilpotents, int degree_cap);

  const std::vector<UnitSpec>& units() const { return units_; }
  const std::vector<std::string>& nilpotents() const { return nilpotents_; }
  int degree_cap() const { return degree_cap_; }

  /// Throws std::out_of_range for unknown names.
  std::size_t unit_index(std::string_view name) const;
  std::size_t nilpotent_index(std::string_view name) const;
  bool has_unit(std::string_view name) const;

 private:
  std::vector<UnitSpec> units_;
  std::vector<std::string> nilpotents_;
  int degree_cap_;
};

using RingPtr = std::shared_ptr<const ScalarRing>;

RingPtr make_ring(std::vector<UnitSpec> units, std::vector<std::string> nilpotents = {},
                  int degree_cap = 0);

/// Monomial key: unit exponents scaled by each unit's denominator, and
/// nilpotent exponents.
struct ScalarKey {
  std::vector<int> units;
  std::vector<int> nils;
  friend auto operator<=>(const ScalarKey&, const ScalarKey&) = default;
  friend bool operator==(const ScalarKey&, const ScalarKey&) = default;
};

/// Exact element of a ScalarRing, kept canonical: terms sorted by key, like
/// terms merged, zero coefficients dropped, nilpotent degrees above the cap
/// removed. A Scalar without a ring is a plain rational and adopts the ring
/// of whatever it is combined with.
class Scalar {
 public:
  using Term = std::pair<ScalarKey, Rational>;

  Scalar() = default;
  Scalar(const Rational& c);  // NOLINT(google-explicit-constructor)
  Scalar(long c) : Scalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int c) : Scalar(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static Scalar constant(RingPtr ring, const Rational& c);
  /// unit^exponent; exponent must lie in (1/denominator) Z.
  static Scalar unit(RingPtr ring, std::string_view name, const Rational& exponent = 1);
  static Scalar unit_monomial(RingPtr ring, const std::vector<Rational>& exponents);
  static Scalar nilpotent(RingPtr ring, std::string_view name);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The rational value; throws std::domain_error unless is_constant().
  Rational as_rational() const;
  /// Single term with no nilpotent factor.
  bool is_unit_monomial() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Inverse of a unit monomial; std::domain_error for anything else.
  Scalar inverse() const;

  /// Exponent of unit `index` in term `term`, as a rational.
  Rational unit_exponent(const Term& term, std::size_t index) const;

  /// Keeps terms whose exponent of the named unit is <= max_exponent.
  Scalar truncated_above(std::string_view unit_name, const Rational& max_exponent) const;
  /// Sets the exponent of the named unit to zero in every term.
  Scalar without_unit(std::string_view unit_name) const;
  /// Rewrites this value over `ring`, which must contain every unit and
  /// nilpotent used here (matched by name).
  Scalar over(const RingPtr& ring) const;

  std::string to_string() const;

 private:
  static Scalar from_terms(RingPtr ring, std::vector<Term> terms);
  static RingPtr common_ring(const Scalar& a, const Scalar& b);
  void lift_to(const RingPtr& ring);
  void canonicalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exp-ready split of an exponent: unit_logs[k] multiplies log(unit k), and
/// `nilpotent` is a purely nilpotent Scalar.
struct LogScalar {
  std::vector<Rational> unit_logs;
  Scalar nilpotent;
};

/// exp of a LogScalar: the unit monomial prod unit_k^{unit_logs[k]} times the
/// terminating series sum p^n / n! of the nilpotent part. Throws
/// std::domain_error when the nilpotent part has a constant or unit content.
Scalar exp_nilpotent(const RingPtr& ring, const LogScalar& p);
/// exp of a purely nilpotent Scalar.
Scalar exp_nilpotent(const Scalar& nilpotent_part);

/// Coefficient of the given unit monomial (exponents per unit, as rationals);
/// the result carries only nilpotent content.
Scalar coefficient_of(const Scalar& s, const std::vector<Rational>& unit_exponents);

}  // namespace ncjacobi
