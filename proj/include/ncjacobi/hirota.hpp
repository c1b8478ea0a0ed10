#pragma once

#include <string>
#include <vector>

#include "ncjacobi/matrix_view.hpp"
#include "ncjacobi/partitions.hpp"
#include "ncjacobi/report.hpp"

namespace ncjacobi {

/// Summand index (lambda, M, mu) of the bilinear sum.
struct BilinearTerm {
  Partition lambda;
  int charge = 0;
  Partition mu;

  std::string to_string() const;
  friend auto operator<=>(const BilinearTerm&, const BilinearTerm&) = default;
  friend bool operator==(const BilinearTerm&, const BilinearTerm&) = default;
};

/// The sign-flipping involution. With `mutated` the first branch uses
/// lambda~_1 = mu_1 + M + 1 (a deliberate defect for mutation testing).
/// Throws std::invalid_argument if the mutated map leaves partitions.
BilinearTerm rho(const BilinearTerm& t, bool mutated = false);

/// |lambda| + |mu| + M(M+1)/2.
int grade(const BilinearTerm& t);

/// Every term of the given grade, ordered by (M, lambda, mu).
std::vector<BilinearTerm> terms_of_grade(int g);

/// (-1)^M X_lambda[^{[-M]}Y] X_mu[^{[M+1]}Ytilde]; with canonicalize_tilde =
/// false the Ytilde entries are left unreduced.
NCMonomial bilinear_term_value(const BilinearTerm& t, bool canonicalize_tilde = true);

struct HirotaOptions {
  unsigned threads = 1;
  bool canonicalize_tilde = true;
  bool mutate_rho = false;
};

/// value(t) + value(rho(t)) = 0, and for first-branch t the displayed
/// partner ratio reduces to 1. Appends failures to `out` if given.
bool verify_pair_cancel(const BilinearTerm& t, const HirotaOptions& opts = {},
                        std::vector<Failure>* out = nullptr);

/// Grade blocks g = 0..max_grade: each block sums to zero, every rho-pair
/// cancels, and rho is a fixed-point-free grade-preserving involution on it.
VerificationReport verify_bilinear(int max_grade, const HirotaOptions& opts = {});

}  // namespace ncjacobi
