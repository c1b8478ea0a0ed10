#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncjacobi/scalar.hpp"

namespace ncjacobi {

enum class Family : std::uint8_t { Y, Ytilde, Yspec };

/// Commuting generator of the algebra. Y and Ytilde carry matrix indices
/// (a, b); Yspec (j, k, m) stands for y_j(x + k*eps + m*eps3) with j in 0..r.
struct GeneratorId {
  Family family = Family::Y;
  int i0 = 0;
  int i1 = 0;
  int i2 = 0;

  static GeneratorId y(int a, int b) { return {Family::Y, a, b, 0}; }
  static GeneratorId ytilde(int a, int b) { return {Family::Ytilde, a, b, 0}; }
  /// Folds j into 0..rank using y_{j+rank+1}(x) = y_j(x + eps3).
  static GeneratorId yspec(int j, int k, int m, int rank);

  std::string to_string() const;
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

using ExponentMap = std::vector<std::pair<GeneratorId, int>>;  // sorted, no zero entries

/// coeff * (commutative monomial) * S^s_power, with S pushed to the right.
class NCMonomial {
 public:
  NCMonomial() : coeff_(1) {}
  explicit NCMonomial(Scalar coeff) : coeff_(std::move(coeff)) {}

  /// g^exponent in canonical form.
  static NCMonomial generator(const GeneratorId& g, int exponent = 1);
  static NCMonomial shift(int k);
  /// Takes the exponent map as given (merged, zeros dropped) without
  /// applying the connection rewrite.
  static NCMonomial raw(Scalar coeff, ExponentMap exponents, int s_power);

  const Scalar& coeff() const { return coeff_; }
  const ExponentMap& exponents() const { return exponents_; }
  int s_power() const { return s_power_; }

  /// No Ytilde generator with a != 0.
  bool is_canonical() const;
  /// (c E S^k)^{-1} = c^{-1} sigma^{-k}(E^{-1}) S^{-k}; needs an invertible coefficient.
  NCMonomial inverse() const;
  /// The monomial with s_power set to 0.
  NCMonomial commutative_part() const;

  std::string to_string() const;
  friend bool operator==(const NCMonomial& a, const NCMonomial& b) {
    return a.s_power_ == b.s_power_ && a.exponents_ == b.exponents_ && a.coeff_ == b.coeff_;
  }

 private:
  friend NCMonomial mono_mul(const NCMonomial&, const NCMonomial&);
  friend NCMonomial sigma(const NCMonomial&, int);
  friend NCMonomial canonicalize(const NCMonomial&);
  friend std::optional<NCMonomial> rewrite_step(const NCMonomial&, std::size_t);
  friend NCMonomial relabel(const NCMonomial&, const std::function<GeneratorId(const GeneratorId&)>&);

  Scalar coeff_;
  ExponentMap exponents_;
  int s_power_ = 0;
};

/// Canonical form of S^k g S^{-k}.
NCMonomial sigma(const GeneratorId& g, int k);
/// S^k m S^{-k}.
NCMonomial sigma(const NCMonomial& m, int k);
/// (c1, E1, k1)(c2, E2, k2) = (c1 c2, E1 + sigma^{k1}(E2), k1 + k2).
NCMonomial mono_mul(const NCMonomial& m1, const NCMonomial& m2);
inline NCMonomial operator*(const NCMonomial& a, const NCMonomial& b) { return mono_mul(a, b); }

/// Rewrites every Ytilde_{a,n}, a != 0, down (or up) to Ytilde_{0,n} times Y ratios.
NCMonomial canonicalize(const NCMonomial& m);
/// One rewrite step on the generator at `position` of the exponent map:
/// Ytilde_{a,n} -> Ytilde_{a-1,n} Y_{2-a,n+1-a} Y_{1-a,n+1-a}^{-1} for a > 0,
/// Ytilde_{a,n} -> Ytilde_{a+1,n} Y_{-a,n-a} Y_{1-a,n-a}^{-1} for a < 0.
/// nullopt if that generator is already canonical.
std::optional<NCMonomial> rewrite_step(const NCMonomial& m, std::size_t position);

/// Applies a generator relabeling to the commutative part (no canonicalization).
NCMonomial relabel(const NCMonomial& m, const std::function<GeneratorId(const GeneratorId&)>& f);

/// Finite sum of NCMonomials with distinct (exponents, s_power).
class NCPoly {
 public:
  NCPoly() = default;
  NCPoly(const NCMonomial& m);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<NCMonomial> monomials() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Scalar& c, const NCPoly& p);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  using Key = std::pair<ExponentMap, int>;
  void add(const NCMonomial& m);
  std::map<Key, Scalar> terms_;
};

}  // namespace ncjacobi
