#pragma once

#include <cstdint>
#include <vector>

#include "ncjacobi/matrix_view.hpp"
#include "ncjacobi/report.hpp"
#include "ncjacobi/scalar.hpp"

namespace ncjacobi {

/// Formal times b_1, b_2, ..., b_K. b_1 and b_2 enter through the units
/// z = e^{b_1} and v = e^{b_2/2} (so qe = v^2); b_3..b_K are nilpotent
/// variables truncated above total degree D.
class HigherTimes {
 public:
  HigherTimes(int max_k, int degree_cap);

  int max_k() const { return max_k_; }
  int degree_cap() const { return degree_cap_; }
  const RingPtr& ring() const { return ring_; }

  /// b(xi) split as xi log z + xi^2 log v + sum_{k>=3} b_k xi^k / k!.
  LogScalar b_of(const Rational& xi) const;
  /// e^{b(xi)}; throws std::invalid_argument if xi^2 is not an integer.
  Scalar exp_b(const Rational& xi) const;
  /// t(xi) = b(xi + 1/2) - b(xi - 1/2) = log z + 2 xi log v + nilpotent part.
  LogScalar t_of_b(const Rational& xi) const;
  /// sum_{k + 2l > 1} b_{k+2l+1} xi^k / (2^{2l} (2l+1)! k!).
  Scalar t_formal(const Rational& xi) const;

 private:
  int max_k_;
  int degree_cap_;
  RingPtr ring_;
};

VerificationReport verify_classical_jtp(int order_v, int z_range);
VerificationReport verify_bosfert(int max_k, int degree_cap, int order_v, int m_range);

/// Toeplitz matrix Y_{a,b} = e^{b(b-a)}; entries are scalars and commute with S.
MatrixView toeplitz_view(const HigherTimes& ht);

/// Runs the termwise Jacobi check through the Toeplitz view.
VerificationReport verify_toeplitz_jacobi(int max_k, int degree_cap, int cutoff, unsigned threads = 1);

/// eps = eps1 + eps2, eps3~ = eps3 / (r+1), eps4~ = -eps - eps3~.
struct EpsilonParams {
  int rank = 0;
  Rational eps = 1;
  Rational eps3_tilde = 1;

  Rational eps3() const { return eps3_tilde * (rank + 1); }
  Rational eps4_tilde() const { return -eps - eps3_tilde; }
  Rational eps4() const { return eps4_tilde() * (rank + 1); }
};

/// Log-couplings l_i = log(qe_i / q~), i = 0..r, and the solved xi_i.
struct CouplingData {
  std::vector<Rational> log_couplings;
  std::vector<Rational> xi;

  /// Throws std::invalid_argument unless the l_i sum to zero.
  static CouplingData from_logs(std::vector<Rational> l);
};

/// Periodic solution of xi_{i-1} - 2 xi_i + xi_{i+1} = l_i with xi_0 = 0.
std::vector<Rational> xi_solve(const std::vector<Rational>& l);
/// xi_{i-1} - 2 xi_i + xi_{i+1} - l_i for i = 0..r (indices mod r+1).
std::vector<Rational> xi_residuals(const std::vector<Rational>& l, const std::vector<Rational>& xi);

/// Residuals of xi_solve on `samples` seeded random rational inputs (summing
/// to zero) for each rank 1..max_rank.
VerificationReport verify_xi_solver(int samples, int max_rank, std::uint64_t seed = 1);

/// Units qth = q~^{1/2} and ex0..ex_r standing for e^{xi_j}.
RingPtr qchar_ring(int rank);

/// entry(a,b) = qth^{(a-b)^2} ex_{(i+a-b) mod (r+1)} y_{i+a-b}(x + (1-b) eps).
MatrixView qchar_view(const EpsilonParams& ep, const CouplingData& cd, int i);

VerificationReport verify_qchar_jacobi(const EpsilonParams& ep, const CouplingData& cd, int i, int cutoff,
                                       unsigned threads = 1);

/// Commutative limit: S -> central z^{-1}, all y at one argument.
VerificationReport verify_red34(const EpsilonParams& ep, const CouplingData& cd, int i, int order_q,
                                int z_range);

/// -1/(eps3~ eps4~) = 1/(eps eps4~) + 1/(eps eps3~), exactly. Throws
/// std::invalid_argument on a zero denominator.
bool verify_fay(const EpsilonParams& ep);
/// The same identity as polynomials in eps, eps3~ after clearing denominators.
bool verify_fay_symbolic();
/// Symbolic check, the two worked examples, and `samples` seeded random
/// rational (eps, eps3~) pairs.
VerificationReport verify_fay_sweep(int samples, std::uint64_t seed = 1);

}  // namespace ncjacobi
