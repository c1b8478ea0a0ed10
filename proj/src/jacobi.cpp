#include "ncjacobi/jacobi.hpp"

#include <optional>
#include <stdexcept>

#include "ncjacobi/parallel.hpp"

namespace ncjacobi {

NCMonomial x_lambda(const MatrixView& v, const Partition& lambda) {
  NCMonomial acc = v.entry(0, 0);
  lambda.for_each_box([&](int a, int b) {
    acc = acc * v.ratio(a - 1, b, a - 1, b - 1) * v.ratio(a, b - 1, a, b);
  });
  return acc;
}

int term_charge(int d_plus, int d_minus, ChargeConvention convention) {
  return convention == ChargeConvention::from_split ? d_minus - d_plus : d_plus - d_minus;
}

NCMonomial split_rhs(const HalfIntSetPair& sp, const MatrixView& v, ChargeConvention convention) {
  NCMonomial acc;
  for (auto r : sp.minus()) {  // n~_1 > n~_2 > ..., left to right
    const int nt = r.floor() + 1;
    acc = acc * v.ratio(nt, 0, nt, 1) * NCMonomial::shift(1);
  }
  acc = acc * v.entry(0, 0);
  for (auto it = sp.plus().rbegin(); it != sp.plus().rend(); ++it) {  // n_{d+} first
    const int n = it->floor();
    acc = acc * v.ratio(-1, n, 0, n) * NCMonomial::shift(-1);
  }
  return acc * NCMonomial::shift(-term_charge(sp.d_plus(), sp.d_minus(), convention));
}

namespace {

NCMonomial y(int a, int b) { return NCMonomial::generator(GeneratorId::y(a, b)); }
NCMonomial yinv(int a, int b) { return NCMonomial::generator(GeneratorId::y(a, b), -1); }

// Y_{a-1,b} Y_{a,b-1} / (Y_{a-1,b-1} Y_{a,b}) for the box (a, b) of ^{[-M]}Y.
NCMonomial box_ratio(int m, int i, int j) {
  return y(-m + i - 1, j) * y(-m + i, j - 1) * yinv(-m + i - 1, j - 1) * yinv(-m + i, j);
}

std::vector<Failure> check_split(int m, const Partition& lam) {
  std::vector<Failure> out;
  const ChargedPartition cp{m, lam};
  const std::string idx = cp.to_string();
  const Partition lt = lam.conjugate();
  const HalfIntSetPair sp = charged_to_sets(cp);
  const int dp = sp.d_plus(), dm = sp.d_minus();
  const Profile pr = profile(cp);
  auto expect = [&](const std::string& what, const NCMonomial& a, const NCMonomial& b) {
    if (!(a == b)) out.push_back({idx + " " + what, a.to_string(), b.to_string()});
  };

  const NCMonomial lhs = x_lambda(MatrixView::generic().row_shifted(-m), lam);

  // Second line: product over Sigma_+ x Sigma_-.
  NCMonomial line2 = y(dm, dm);
  for (int j = 1; j <= dm; ++j) line2 = line2 * y(-m + lt.part(j), j - 1) * yinv(-m + lt.part(j), j);
  for (int i = 1; i <= dp; ++i) line2 = line2 * y(-m + i - 1, lam.part(i)) * yinv(-m + i, lam.part(i));
  expect("line2", lhs, line2);

  // Third line: the same factors as S-conjugates of the profile ratios.
  NCMonomial line3 = sigma(y(0, 0), dm);
  for (int j = 1; j <= dm; ++j) {
    const int nt = pr.n_tilde[static_cast<std::size_t>(j - 1)];
    line3 = line3 * sigma(y(nt, 0) * yinv(nt, 1), j - 1);
  }
  for (int i = 1; i <= dp; ++i) {
    const int n = pr.n[static_cast<std::size_t>(i - 1)];
    line3 = line3 * sigma(y(-1, n) * yinv(0, n), -m + i);
  }
  expect("line3", lhs, line3);

  const NCMonomial rhs = split_rhs(sp, MatrixView::generic());
  expect("split_rhs", lhs, rhs);
  if (rhs.s_power() != 0) out.push_back({idx + " split_rhs charge", rhs.to_string(), "S^0"});

  // Box split lambda = lambda_- (columns <= d-) + lambda_+ (columns > d-).
  const int rows_plus = lt.part(dm + 1);
  NCMonomial f1_lhs = y(-m, 0);
  for (int j = 1; j <= dm; ++j)
    for (int i = 1; i <= lt.part(j); ++i) f1_lhs = f1_lhs * box_ratio(m, i, j);
  NCMonomial f1_rhs = y(-m, dm);
  for (int j = 1; j <= dm; ++j) f1_rhs = f1_rhs * y(-m + lt.part(j), j - 1) * yinv(-m + lt.part(j), j);
  expect("factor1", f1_lhs, f1_rhs);

  NCMonomial f2_lhs;
  for (int i = 1; i <= rows_plus; ++i)
    for (int j = dm + 1; j <= lam.part(i); ++j) f2_lhs = f2_lhs * box_ratio(m, i, j);
  NCMonomial f2_rhs = y(-m + rows_plus, dm) * yinv(-m, dm);
  for (int i = 1; i <= rows_plus; ++i)
    f2_rhs = f2_rhs * y(-m + i - 1, lam.part(i)) * yinv(-m + i, lam.part(i));
  expect("factor2", f2_lhs, f2_rhs);
  expect("factor1*factor2", lhs, f1_lhs * f2_lhs);

  NCMonomial f3_rhs = y(dm, dm);
  for (int i = rows_plus + 1; i <= dp; ++i)
    f3_rhs = f3_rhs * y(-m + i - 1, lam.part(i)) * yinv(-m + i, lam.part(i));
  expect("factor3", y(-m + rows_plus, dm), f3_rhs);

  // Substituting factor3 into factor2 and multiplying by factor1 gives line 2.
  NCMonomial f2_sub = f3_rhs * yinv(-m, dm);
  for (int i = 1; i <= rows_plus; ++i)
    f2_sub = f2_sub * y(-m + i - 1, lam.part(i)) * yinv(-m + i, lam.part(i));
  expect("factor substitution", f1_rhs * f2_sub, line2);
  return out;
}

}  // namespace

VerificationReport verify_split(int max_weight, int m_range, unsigned threads) {
  if (max_weight < 0 || m_range < 0) throw std::invalid_argument("verify_split: bounds must be >= 0");
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-split";
  rep.parameters = {{"max_weight", max_weight}, {"m_range", m_range}};
  std::vector<ChargedPartition> cases;
  for (const auto& group : enumerate_partitions(max_weight))
    for (int m = -m_range; m <= m_range; ++m)
      for (const auto& lam : group) cases.push_back({m, lam});
  auto results = parallel_map(cases.size(), threads,
                              [&](std::size_t k) { return check_split(cases[k].charge, cases[k].shape); });
  for (auto& fs : results)
    for (auto& f : fs) rep.failures.push_back(std::move(f));
  rep.terms_checked = static_cast<std::int64_t>(cases.size());
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

ExpansionTerm expansion_term(const MatrixView& base, int cutoff, bool transposed,
                             std::uint64_t index) {
  const auto r = static_cast<unsigned>(cutoff);
  const std::uint64_t left_bits = index & ((std::uint64_t{1} << r) - 1);
  const std::uint64_t right_bits = index >> r;
  std::vector<HalfInt> plus, minus;
  NCMonomial acc;
  if (!transposed) {
    // <-prod_{n=1..R} (1 + V(n,0)/V(n,1) S): larger n leftmost.
    for (int n = cutoff; n >= 1; --n) {
      if (!(left_bits >> (n - 1) & 1u)) continue;
      acc = acc * base.ratio(n, 0, n, 1) * NCMonomial::shift(1);
      minus.push_back({2 * n - 1});
    }
    acc = acc * base.entry(0, 0);
    // ->prod_{n=0..R-1} (1 + V(-1,n)/V(0,n) S^{-1}): smaller n leftmost.
    for (int n = 0; n < cutoff; ++n) {
      if (!(right_bits >> n & 1u)) continue;
      acc = acc * base.ratio(-1, n, 0, n) * NCMonomial::shift(-1);
      plus.push_back({2 * n + 1});
    }
  } else {
    // <-prod_{n=0..R-1} (1 + S V(-1,n)/V(0,n)).
    for (int n = cutoff - 1; n >= 0; --n) {
      if (!(left_bits >> n & 1u)) continue;
      acc = acc * NCMonomial::shift(1) * base.ratio(-1, n, 0, n);
      minus.push_back({2 * n + 1});
    }
    acc = acc * base.entry(0, 0);
    // ->prod_{n=1..R} (1 + S^{-1} V(n,0)/V(n,1)).
    for (int n = 1; n <= cutoff; ++n) {
      if (!(right_bits >> (n - 1) & 1u)) continue;
      acc = acc * NCMonomial::shift(-1) * base.ratio(n, 0, n, 1);
      plus.push_back({2 * n - 1});
    }
  }
  return {HalfIntSetPair(std::move(plus), std::move(minus)), std::move(acc)};
}

VerificationReport verify_jacobi(const MatrixView& base, int cutoff, const JacobiOptions& opts) {
  if (cutoff < 1) throw std::invalid_argument("verify_jacobi: cutoff R must be >= 1");
  if (cutoff > 15) throw std::invalid_argument("verify_jacobi: cutoff R must be <= 15");
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = opts.transposed ? "verify-jacobi-transposed" : "verify-jacobi";
  rep.parameters = {{"cutoff", cutoff},
                    {"transposed", opts.transposed},
                    {"view", base.describe()},
                    {"charge_convention",
                     opts.convention == ChargeConvention::from_split ? "d_minus - d_plus" : "d_plus - d_minus"}};
  rep.convention_notes.push_back(
      "a term with subset sizes (d+, d-) carries S^{M'} with M' = d- - d+ and is matched to "
      "X_lambda(^{[M']}Y) S^{M'}, where ^{[M']}Y_{a,b} = Y_{a+M',b} (charge sign fixed by the split "
      "factorization)");
  const MatrixView view = opts.transposed ? base.transposed() : base;
  const std::uint64_t total = std::uint64_t{1} << (2 * cutoff);
  auto results = parallel_map(static_cast<std::size_t>(total), opts.threads,
                              [&](std::size_t k) -> std::optional<Failure> {
    const ExpansionTerm t = expansion_term(base, cutoff, opts.transposed, k);
    const ChargedPartition cp = sets_to_charged(t.sets);
    const int charge = term_charge(t.sets.d_plus(), t.sets.d_minus(), opts.convention);
    const NCMonomial partner = x_lambda(view.row_shifted(charge), cp.shape) * NCMonomial::shift(charge);
    const NCMonomial via_split = split_rhs(t.sets, view, opts.convention) * NCMonomial::shift(charge);
    if (t.value == partner && t.value == via_split) return std::nullopt;
    return Failure{"sets " + t.sets.to_string() + " -> " + cp.to_string(), t.value.to_string(),
                   partner.to_string() + " | split: " + via_split.to_string()};
  });
  for (auto& f : results)
    if (f) rep.failures.push_back(std::move(*f));
  rep.terms_checked = static_cast<std::int64_t>(total);
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

VerificationReport verify_jacobi(int cutoff, const JacobiOptions& opts) {
  return verify_jacobi(MatrixView::generic(), cutoff, opts);
}

}  // namespace ncjacobi
