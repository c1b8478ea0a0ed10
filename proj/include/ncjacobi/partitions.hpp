#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncjacobi/report.hpp"

namespace ncjacobi {

/// Integer partition lambda_1 >= lambda_2 >= ... > 0. Trailing zero parts are
/// never stored; part(i) reads them as 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int weight() const;

  /// lambda_i for i >= 1 (0 past the last part).
  int part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  /// lambda_1, with the empty partition reading as 0.
  int first() const { return part(1); }

  Partition conjugate() const;

  /// Boxes (i, j), 1-based, row-major.
  template <class F>
  void for_each_box(F&& f) const {
    for (int i = 1; i <= length(); ++i)
      for (int j = 1; j <= part(i); ++j) f(i, j);
  }

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct ChargedPartition {
  int charge = 0;
  Partition shape;

  std::string to_string() const;
  friend auto operator<=>(const ChargedPartition&, const ChargedPartition&) = default;
  friend bool operator==(const ChargedPartition&, const ChargedPartition&) = default;
};

/// Positive half-integer r stored as its odd numerator 2r.
struct HalfInt {
  int twice = 1;

  static HalfInt from_floor(int n) { return {2 * n + 1}; }  // n + 1/2
  int floor() const { return (twice - 1) / 2; }             // r - 1/2, valid for r > 0
  std::string to_string() const { return std::to_string(twice) + "/2"; }
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
  friend bool operator==(const HalfInt&, const HalfInt&) = default;
};

/// (Sigma_+, Sigma_-): finite sets of positive half-integers, each kept
/// strictly decreasing.
class HalfIntSetPair {
 public:
  HalfIntSetPair() = default;
  /// Accepts any order; rejects non-positive or even numerators and
  /// duplicates with std::invalid_argument.
  HalfIntSetPair(std::vector<HalfInt> plus, std::vector<HalfInt> minus);

  const std::vector<HalfInt>& plus() const { return plus_; }
  const std::vector<HalfInt>& minus() const { return minus_; }
  int d_plus() const { return static_cast<int>(plus_.size()); }
  int d_minus() const { return static_cast<int>(minus_.size()); }

  std::string to_string() const;
  friend auto operator<=>(const HalfIntSetPair&, const HalfIntSetPair&) = default;
  friend bool operator==(const HalfIntSetPair&, const HalfIntSetPair&) = default;

 private:
  std::vector<HalfInt> plus_;
  std::vector<HalfInt> minus_;
};

/// n_1 > ... > n_{d+} >= 0 and n~_1 > ... > n~_{d-} > 0.
struct Profile {
  std::vector<int> n;
  std::vector<int> n_tilde;
  friend bool operator==(const Profile&, const Profile&) = default;
};

enum class SnakeClass { S1 = 1, S2 = 2, S3 = 3, S4 = 4 };

struct SnakePoint {
  int d_plus = 0;
  int d_minus = 0;
  SnakeClass cls = SnakeClass::S1;
  friend auto operator<=>(const SnakePoint&, const SnakePoint&) = default;
  friend bool operator==(const SnakePoint&, const SnakePoint&) = default;
};

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Group w (0 <= w <= max_weight) holds exactly the partitions of w.
std::vector<std::vector<Partition>> enumerate_partitions(int max_weight);

HalfIntSetPair charged_to_sets(const ChargedPartition& cp);
ChargedPartition sets_to_charged(const HalfIntSetPair& sp);
Profile profile(const ChargedPartition& cp);

struct PsiCheck {
  bool ok = true;
  std::string counterexample;
  explicit operator bool() const { return ok; }
};

/// Checks the cleared psi identity exactly, plus the u -> infinity and u -> 0
/// expansions of psi up to the given order.
PsiCheck verify_psi(const ChargedPartition& cp, int order);

/// Bitmask (bit k-1 for class k) of the snake classes whose defining
/// conditions the point (d_plus, d_minus) satisfies for lambda.
unsigned snake_class_mask(const Partition& lambda, int d_plus, int d_minus);

/// Points of the snake with 0 <= d_plus, d_minus <= d_range, tagged by class.
/// Throws std::logic_error if a point satisfies two class definitions.
std::vector<SnakePoint> snake_of(const Partition& lambda, int d_range);

/// Realized (d+, d-) over |M| <= m_range lie in the snake, obey the
/// interlacing bounds, and cover every snake point inside the range.
bool verify_snake_membership(const Partition& lambda, int m_range);

/// Sweeps for the CLI and acceptance suite.
VerificationReport verify_bijection_sweep(int max_weight, int m_range, int set_bound_twice);
VerificationReport verify_psi_sweep(int max_weight, int m_range, int order);
VerificationReport verify_snake_sweep(int max_weight);

}  // namespace ncjacobi
