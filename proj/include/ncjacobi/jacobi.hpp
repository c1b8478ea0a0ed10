#pragma once

#include <cstdint>

#include "ncjacobi/matrix_view.hpp"
#include "ncjacobi/partitions.hpp"
#include "ncjacobi/report.hpp"

namespace ncjacobi {

/// X_lambda(V) = V(0,0) prod_{(a,b) in lambda} V(a-1,b) V(a-1,b-1)^{-1} V(a,b-1) V(a,b)^{-1}.
NCMonomial x_lambda(const MatrixView& v, const Partition& lambda);

/// S-charge attached to a product term with subset sizes (d+, d-).
/// from_split: d- - d+ (the convention the split factorization forces).
/// naive: d+ - d- (used only as a mutation to show the check has teeth).
enum class ChargeConvention { from_split, naive };

int term_charge(int d_plus, int d_minus, ChargeConvention convention);

/// (->prod_j V(n~_j,0) V(n~_j,1)^{-1} S) V(0,0) (<-prod_i V(-1,n_i) V(0,n_i)^{-1} S^{-1}) S^{-charge}.
/// Under from_split the trailing factor is S^M with M = d+ - d-, and the
/// result has s_power 0.
NCMonomial split_rhs(const HalfIntSetPair& sp, const MatrixView& v,
                     ChargeConvention convention = ChargeConvention::from_split);

/// Checks X_lambda(^{[-M]}Y) against split_rhs and every intermediate
/// factorization step for |lambda| <= max_weight, |M| <= m_range.
VerificationReport verify_split(int max_weight, int m_range, unsigned threads = 1);

struct JacobiOptions {
  bool transposed = false;
  unsigned threads = 1;
  ChargeConvention convention = ChargeConvention::from_split;
};

/// One term of the truncated product expansion together with the subset pair
/// (Sigma_+, Sigma_-) that selected it.
struct ExpansionTerm {
  HalfIntSetPair sets;
  NCMonomial value;
};

/// Term number `index` (0 <= index < 4^cutoff) of the truncated product
/// Z(V) (or Z^T(V)) with factors n <= cutoff, multiplied in arrow order.
ExpansionTerm expansion_term(const MatrixView& base, int cutoff, bool transposed,
                             std::uint64_t index);

/// Expands the truncated product over all 2^{2 cutoff} factor choices and
/// matches each term against X_lambda(^{[M']}V) S^{M'} and split_rhs S^{M'}.
VerificationReport verify_jacobi(const MatrixView& base, int cutoff, const JacobiOptions& opts = {});
VerificationReport verify_jacobi(int cutoff, const JacobiOptions& opts = {});

}  // namespace ncjacobi
