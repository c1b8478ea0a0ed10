#include "ncjacobi/special.hpp"

#include <random>
#include <stdexcept>

#include "ncjacobi/jacobi.hpp"
#include "ncjacobi/partitions.hpp"

namespace ncjacobi {

namespace {

Rational rpow(const Rational& x, int n) {
  Rational out = 1;
  for (int k = 0; k < n; ++k) out *= x;
  return out;
}

Rational factorial(int n) {
  Rational out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

std::string bname(int k) { return "b" + std::to_string(k); }

LogScalar negated(const LogScalar& p) {
  LogScalar out{p.unit_logs, -p.nilpotent};
  for (auto& e : out.unit_logs) e = -e;
  return out;
}

// Keeps terms with |exponent of `unit`| <= bound.
Scalar window(const Scalar& s, const char* unit, int bound) {
  const Scalar upper = s.truncated_above(unit, bound);
  return upper - upper.truncated_above(unit, -bound - 1);
}

}  // namespace

// ---------------------------------------------------------------- times

HigherTimes::HigherTimes(int max_k, int degree_cap) : max_k_(max_k), degree_cap_(degree_cap) {
  if (max_k < 2) throw std::invalid_argument("HigherTimes: K must be >= 2");
  if (degree_cap < 0) throw std::invalid_argument("HigherTimes: degree cap must be >= 0");
  std::vector<std::string> nils;
  for (int k = 3; k <= max_k; ++k) nils.push_back(bname(k));
  ring_ = make_ring({{"z", 1}, {"v", 1}}, std::move(nils), degree_cap);
}

LogScalar HigherTimes::b_of(const Rational& xi) const {
  Scalar nil = Scalar::constant(ring_, 0);
  for (int k = 3; k <= max_k_; ++k)
    nil += Scalar::constant(ring_, rpow(xi, k) / factorial(k)) * Scalar::nilpotent(ring_, bname(k));
  return {{xi, xi * xi}, nil};
}

Scalar HigherTimes::exp_b(const Rational& xi) const { return exp_nilpotent(ring_, b_of(xi)); }

LogScalar HigherTimes::t_of_b(const Rational& xi) const {
  const Rational half(1, 2);
  Scalar nil = Scalar::constant(ring_, 0);
  for (int k = 3; k <= max_k_; ++k) {
    const Rational c = (rpow(xi + half, k) - rpow(xi - half, k)) / factorial(k);
    nil += Scalar::constant(ring_, c) * Scalar::nilpotent(ring_, bname(k));
  }
  return {{Rational(1), 2 * xi}, nil};
}

Scalar HigherTimes::t_formal(const Rational& xi) const {
  Scalar out = Scalar::constant(ring_, 0);
  for (int n = 3; n <= max_k_; ++n) {
    Rational c = 0;
    for (int l = 0; 2 * l <= n - 1; ++l) {
      const int k = n - 1 - 2 * l;
      c += rpow(xi, k) / (rpow(Rational(4), l) * factorial(2 * l + 1) * factorial(k));
    }
    out += Scalar::constant(ring_, c) * Scalar::nilpotent(ring_, bname(n));
  }
  return out;
}

// ---------------------------------------------------------------- triple product

VerificationReport verify_classical_jtp(int order_v, int z_range) {
  if (order_v < 0 || z_range < 0) throw std::invalid_argument("verify_classical_jtp: bounds must be >= 0");
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-classical-jtp";
  rep.parameters = {{"order_v", order_v}, {"z_range", z_range}};
  const RingPtr ring = make_ring({{"z", 1}, {"v", 1}});
  const Scalar z = Scalar::unit(ring, "z"), zi = Scalar::unit(ring, "z", -1);

  // Factors with 2r > order_v only touch truncated orders.
  Scalar prod = Scalar::constant(ring, 1);
  for (int twice_r = 1; twice_r <= order_v; twice_r += 2) {
    const Scalar vr = Scalar::unit(ring, "v", twice_r);
    prod = (prod * (Scalar(1) + z * vr)).truncated_above("v", order_v);
    prod = (prod * (Scalar(1) + zi * vr)).truncated_above("v", order_v);
  }

  const auto groups = enumerate_partitions(order_v / 2);
  for (int m = -z_range; m <= z_range; ++m) {
    for (int n = 0; n <= order_v; ++n) {
      const Scalar c = coefficient_of(prod, {Rational(m), Rational(n)});
      const int rest = n - m * m;
      const long expected = rest >= 0 && rest % 2 == 0
                                ? static_cast<long>(groups[static_cast<std::size_t>(rest / 2)].size())
                                : 0;
      if (!(c == Scalar(expected)))
        rep.fail("z^" + std::to_string(m) + " v^" + std::to_string(n), c.to_string(), std::to_string(expected));
      ++rep.terms_checked;
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

VerificationReport verify_bosfert(int max_k, int degree_cap, int order_v, int m_range) {
  if (max_k < 3) throw std::invalid_argument("verify_bosfert: K must be >= 3");
  if (degree_cap < 0 || order_v < 0 || m_range < 0)
    throw std::invalid_argument("verify_bosfert: bounds must be >= 0");
  Stopwatch clock;
  const HigherTimes ht(max_k, degree_cap);
  const RingPtr& ring = ht.ring();
  VerificationReport rep;
  rep.identity = "verify-w1inf";
  rep.parameters = {{"K", max_k}, {"degree_cap", degree_cap}, {"order_v", order_v}, {"m_range", m_range}};
  rep.convention_notes.push_back("z = e^{b1}, v = e^{b2/2}, qe = v^2; b3..bK nilpotent, total degree <= D");

  // Left: prod_{r>0} (1 + e^{t(r)}) (1 + e^{-t(-r)}).
  Scalar lhs = Scalar::constant(ring, 1);
  for (int twice_r = 1; twice_r <= order_v; twice_r += 2) {
    const Rational r(twice_r, 2);
    lhs = (lhs * (Scalar(1) + exp_nilpotent(ring, ht.t_of_b(r)))).truncated_above("v", order_v);
    lhs = (lhs * (Scalar(1) + exp_nilpotent(ring, negated(ht.t_of_b(-r))))).truncated_above("v", order_v);
  }
  lhs = window(lhs, "z", m_range);

  // Right: sum_M e^{b(M)} sum_lambda qe^{|lambda|} prod_i e^{tf(M+1/2+lambda_i-i) - tf(M+1/2-i)}.
  Scalar rhs = Scalar::constant(ring, 0);
  const auto groups = enumerate_partitions(order_v / 2);
  const Rational half(1, 2);
  for (int m = -m_range; m <= m_range; ++m) {
    if (m * m > order_v) continue;
    const Scalar eb = ht.exp_b(m);
    for (int w = 0; m * m + 2 * w <= order_v; ++w) {
      for (const auto& lam : groups[static_cast<std::size_t>(w)]) {
        Scalar nil = Scalar::constant(ring, 0);
        for (int i = 1; i <= lam.length(); ++i)
          nil += ht.t_formal(m + half + lam.part(i) - i) - ht.t_formal(m + half - i);
        rhs += eb * Scalar::unit(ring, "v", 2 * w) * exp_nilpotent(nil);
      }
    }
  }

  for (int m = -m_range; m <= m_range; ++m) {
    for (int n = 0; n <= order_v; ++n) {
      const Scalar a = coefficient_of(lhs, {Rational(m), Rational(n)});
      const Scalar b = coefficient_of(rhs, {Rational(m), Rational(n)});
      if (!(a == b)) rep.fail("z^" + std::to_string(m) + " v^" + std::to_string(n), a.to_string(), b.to_string());
      ++rep.terms_checked;
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------- Toeplitz

namespace {

class ToeplitzSource final : public EntrySource {
 public:
  explicit ToeplitzSource(HigherTimes ht) : ht_(std::move(ht)) {}
  ViewFamily family() const override { return ViewFamily::Toeplitz; }
  NCMonomial entry(int a, int b) const override { return NCMonomial(ht_.exp_b(b - a)); }
  NCMonomial inverse_entry(int a, int b) const override {
    return NCMonomial(exp_nilpotent(ht_.ring(), negated(ht_.b_of(b - a))));
  }
  std::string describe() const override {
    return "toeplitz(K=" + std::to_string(ht_.max_k()) + ", D=" + std::to_string(ht_.degree_cap()) + ")";
  }

 private:
  HigherTimes ht_;
};

}  // namespace

MatrixView toeplitz_view(const HigherTimes& ht) {
  return MatrixView::from_source(std::make_shared<ToeplitzSource>(ht));
}

VerificationReport verify_toeplitz_jacobi(int max_k, int degree_cap, int cutoff, unsigned threads) {
  Stopwatch clock;
  const MatrixView view = toeplitz_view(HigherTimes(max_k, degree_cap));
  VerificationReport rep;
  rep.identity = "verify-toeplitz-jacobi";
  rep.parameters = {{"K", max_k}, {"degree_cap", degree_cap}, {"cutoff", cutoff}};
  rep.absorb(verify_jacobi(view, cutoff, {false, threads}));
  rep.absorb(verify_jacobi(view, cutoff, {true, threads}));
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------- couplings

CouplingData CouplingData::from_logs(std::vector<Rational> l) {
  CouplingData cd;
  cd.xi = xi_solve(l);
  cd.log_couplings = std::move(l);
  return cd;
}

std::vector<Rational> xi_solve(const std::vector<Rational>& l) {
  const int n = static_cast<int>(l.size());
  if (n == 0) throw std::invalid_argument("xi_solve: need at least one coupling");
  Rational sum = 0;
  for (const auto& x : l) sum += x;
  if (sum != 0)
    throw std::invalid_argument("xi_solve: log-couplings sum to " + to_string(sum) +
                                ", no periodic solution unless the sum is 0");
  // d_i = xi_i - xi_{i-1}; d_{i+1} = d_1 + sum_{k=1..i} l_k and sum_{i=1..n} d_i = 0.
  Rational nested = 0, partial = 0;
  for (int i = 1; i <= n - 1; ++i) {
    partial += l[static_cast<std::size_t>(mod(i, n))];
    nested += partial;
  }
  const Rational d1 = -nested / n;
  std::vector<Rational> xi(static_cast<std::size_t>(n), Rational(0));
  Rational d = d1;
  for (int i = 1; i < n; ++i) {
    xi[static_cast<std::size_t>(i)] = xi[static_cast<std::size_t>(i - 1)] + d;
    d += l[static_cast<std::size_t>(mod(i, n))];
  }
  return xi;
}

std::vector<Rational> xi_residuals(const std::vector<Rational>& l, const std::vector<Rational>& xi) {
  const int n = static_cast<int>(l.size());
  if (static_cast<int>(xi.size()) != n) throw std::invalid_argument("xi_residuals: size mismatch");
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) {
    auto at = [&](int k) { return xi[static_cast<std::size_t>(mod(k, n))]; };
    out.push_back(at(i - 1) - 2 * at(i) + at(i + 1) - l[static_cast<std::size_t>(i)]);
  }
  return out;
}

namespace {

// Nonzero rational p/q with |p| <= 24, 1 <= q <= 9.
Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-24, 24), den(1, 9);
  for (;;) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    if (!nonzero || x != 0) return x;
  }
}

}  // namespace

VerificationReport verify_xi_solver(int samples, int max_rank, std::uint64_t seed) {
  if (samples < 0 || max_rank < 0) throw std::invalid_argument("verify_xi_solver: bounds must be >= 0");
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-xi-solver";
  rep.parameters = {{"samples", samples}, {"max_rank", max_rank}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  for (int r = 1; r <= max_rank; ++r) {
    for (int s = 0; s < samples; ++s) {
      std::vector<Rational> l;
      Rational sum = 0;
      for (int k = 0; k < r; ++k) {
        l.push_back(random_rational(rng, false));
        sum += l.back();
      }
      l.push_back(-sum);
      const auto xi = xi_solve(l);
      const auto res = xi_residuals(l, xi);
      const std::string idx = "r=" + std::to_string(r) + " sample " + std::to_string(s);
      if (xi[0] != 0) rep.fail(idx + " xi_0", to_string(xi[0]), "0");
      for (std::size_t k = 0; k < res.size(); ++k)
        if (res[k] != 0) rep.fail(idx + " residual " + std::to_string(k), to_string(res[k]), "0");
      ++rep.terms_checked;
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------- q-characters

RingPtr qchar_ring(int rank) {
  std::vector<UnitSpec> units{{"qth", 1}};
  for (int j = 0; j <= rank; ++j) units.push_back({"ex" + std::to_string(j), 1});
  return make_ring(std::move(units));
}

namespace {

class QCharSource final : public EntrySource {
 public:
  QCharSource(int rank, int node) : rank_(rank), node_(node), ring_(qchar_ring(rank)) {}
  ViewFamily family() const override { return ViewFamily::QChar; }
  NCMonomial entry(int a, int b) const override {
    const int d = a - b;
    const Scalar c = Scalar::unit(ring_, "qth", d * d) *
                     Scalar::unit(ring_, "ex" + std::to_string(mod(node_ + d, rank_ + 1)));
    return NCMonomial(c) * NCMonomial::generator(GeneratorId::yspec(node_ + d, 1 - b, 0, rank_));
  }
  std::string describe() const override {
    return "qchar(r=" + std::to_string(rank_) + ", i=" + std::to_string(node_) + ")";
  }

 private:
  int rank_;
  int node_;
  RingPtr ring_;
};

std::string str(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + to_string(v[k]);
  return s + "]";
}

NCMonomial strip_q(const NCMonomial& m) {
  return NCMonomial::raw(m.coeff().without_unit("qth"), m.exponents(), m.s_power());
}

}  // namespace

MatrixView qchar_view(const EpsilonParams& ep, const CouplingData& cd, int i) {
  if (ep.rank < 0) throw std::invalid_argument("qchar_view: rank must be >= 0");
  if (!cd.log_couplings.empty() && static_cast<int>(cd.log_couplings.size()) != ep.rank + 1)
    throw std::invalid_argument("qchar_view: need r+1 couplings");
  return MatrixView::from_source(std::make_shared<QCharSource>(ep.rank, i));
}

VerificationReport verify_qchar_jacobi(const EpsilonParams& ep, const CouplingData& cd, int i, int cutoff,
                                       unsigned threads) {
  if (cutoff < 1) throw std::invalid_argument("verify_qchar_jacobi: cutoff R must be >= 1");
  Stopwatch clock;
  const int r = ep.rank;
  VerificationReport rep;
  rep.identity = "verify-qchar";
  rep.parameters = {{"rank", r},
                    {"i", i},
                    {"cutoff", cutoff},
                    {"eps", to_string(ep.eps)},
                    {"eps3_tilde", to_string(ep.eps3_tilde)},
                    {"log_couplings", str(cd.log_couplings)},
                    {"xi", str(cd.xi)}};
  rep.convention_notes = {
      "qth = q~^{1/2}; exJ stands for e^{xi_J} and is kept symbolic",
      "y[j;k,m] = y_j(x + k eps + m eps3), node index folded into 0..r by quasiperiodicity",
      "D+ factors use y_{i+n}(x+eps)/y_{i+n-1}(x) (node offset i)",
      "cdi and eps3 / -eps4 intertwining compared with the q~ weights stripped "
      "(Gaussian prefactors are not modeled)"};

  // Parameter consistency.
  if (ep.eps4_tilde() + ep.eps3_tilde != -ep.eps) rep.fail("eps4~ + eps3~", to_string(ep.eps4_tilde() + ep.eps3_tilde), to_string(-ep.eps));
  if (-ep.eps4() != ep.eps3() + (r + 1) * ep.eps)
    rep.fail("-eps4", to_string(-ep.eps4()), to_string(ep.eps3() + (r + 1) * ep.eps));
  if (r == 0 && ep.eps + ep.eps3() + ep.eps4() != 0) rep.fail("sl4 sum", to_string(ep.eps + ep.eps3() + ep.eps4()), "0");
  if (!cd.log_couplings.empty()) {
    const auto res = xi_residuals(cd.log_couplings, cd.xi);
    for (std::size_t k = 0; k < res.size(); ++k)
      if (res[k] != 0) rep.fail("xi residual " + std::to_string(k), to_string(res[k]), "0");
  }

  const MatrixView vi = qchar_view(ep, cd, i);
  const MatrixView v0 = qchar_view(ep, cd, 0);
  const RingPtr ring = qchar_ring(r);
  auto unit = [&](const std::string& n, int e) { return Scalar::unit(ring, n, e); };
  auto ex = [&](int j) { return "ex" + std::to_string(mod(j, r + 1)); };
  auto ys = [&](int j, int k, int e) { return NCMonomial::generator(GeneratorId::yspec(j, k, 0, r), e); };
  const NCMonomial s_inv = NCMonomial::shift(-1);

  // Termwise Jacobi through the view.
  rep.absorb(verify_jacobi(vi, cutoff, {false, threads}));

  // Displayed factor families.
  for (int n = 1; n <= cutoff; ++n) {
    const NCMonomial expect =
        NCMonomial(unit("qth", 2 * n - 1) * unit(ex(i + n), 1) * unit(ex(i + n - 1), -1)) * ys(i + n, 1, 1) *
        ys(i + n - 1, 0, -1);
    const NCMonomial got = vi.ratio(n, 0, n, 1);
    if (!(got == expect)) rep.fail("D+ factor n=" + std::to_string(n), got.to_string(), expect.to_string());
    ++rep.terms_checked;
  }
  for (int n = 0; n < cutoff; ++n) {
    const NCMonomial f =
        NCMonomial(unit("qth", 2 * n + 1) * unit(ex(i - n - 1), 1) * unit(ex(i - n), -1)) * ys(i - n - 1, -n, 1) *
        ys(i - n, -n, -1);
    const NCMonomial lhs = s_inv * f;
    const NCMonomial rhs = vi.ratio(-1, n, 0, n) * s_inv;
    if (!(lhs == rhs)) rep.fail("D- factor n=" + std::to_string(n), lhs.to_string(), rhs.to_string());
    ++rep.terms_checked;
  }
  {
    const NCMonomial mid = NCMonomial(unit(ex(i), 1)) * ys(i, 1, 1);
    if (!(vi.entry(0, 0) == mid)) rep.fail("middle factor", vi.entry(0, 0).to_string(), mid.to_string());
    ++rep.terms_checked;
  }
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const NCMonomial lhs = sigma(vi.entry(a, b), 1), rhs = vi.entry(a + 1, b + 1);
      if (!(lhs == rhs))
        rep.fail("sigma-equivariance (" + std::to_string(a) + "," + std::to_string(b) + ")", lhs.to_string(),
                 rhs.to_string());
      ++rep.terms_checked;
    }

  // cdi: each term of the D_i expansion is the matching D_0 term times S^{-i}.
  // Intertwining: relabeling x -> x + eps3 in a D_0 term, times S^{r+1}, is the
  // D_0 term of charge M' + r + 1.
  const auto bump = [](const GeneratorId& g) {
    return g.family == Family::Yspec ? GeneratorId{g.family, g.i0, g.i1, g.i2 + 1} : g;
  };
  const std::uint64_t total = std::uint64_t{1} << (2 * cutoff);
  for (std::uint64_t k = 0; k < total; ++k) {
    const ExpansionTerm ti = expansion_term(vi, cutoff, false, k);
    const ChargedPartition cp = sets_to_charged(ti.sets);
    const int mp = ti.sets.d_minus() - ti.sets.d_plus();
    const NCMonomial d0 = x_lambda(v0.row_shifted(mp + i), cp.shape) * NCMonomial::shift(mp + i) *
                          NCMonomial::shift(-i);
    if (!(strip_q(ti.value) == strip_q(d0)))
      rep.fail("cdi " + ti.sets.to_string(), strip_q(ti.value).to_string(), strip_q(d0).to_string());

    const ExpansionTerm t0 = expansion_term(v0, cutoff, false, k);
    const NCMonomial moved = strip_q(relabel(t0.value, bump) * NCMonomial::shift(r + 1));
    const NCMonomial target =
        strip_q(x_lambda(v0.row_shifted(mp + r + 1), cp.shape) * NCMonomial::shift(mp + r + 1));
    if (!(moved == target)) rep.fail("intertwining " + t0.sets.to_string(), moved.to_string(), target.to_string());
    rep.terms_checked += 2;
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------- classical limit

VerificationReport verify_red34(const EpsilonParams& ep, const CouplingData& cd, int i, int order_q, int z_range) {
  if (order_q < 0 || z_range < 0) throw std::invalid_argument("verify_red34: bounds must be >= 0");
  Stopwatch clock;
  const int r = ep.rank;
  const int top = 2 * order_q;  // qth = q~^{1/2}
  const int span = top + z_range + order_q + 4;
  std::vector<UnitSpec> units{{"z", 1}, {"qth", 1}};
  for (int j = 0; j <= r; ++j) units.push_back({"ex" + std::to_string(j), 1});
  for (int j = i - span; j <= i + span; ++j) units.push_back({"y" + std::to_string(j), 1});
  const RingPtr ring = make_ring(std::move(units));
  auto u = [&](const std::string& n, int e) { return Scalar::unit(ring, n, e); };
  auto ex = [&](int j, int e) { return u("ex" + std::to_string(mod(j, r + 1)), e); };
  auto y = [&](int j, int e) { return u("y" + std::to_string(j), e); };
  // Classical entries depend on a - b only; the y's share one argument.
  auto cl = [&](int a, int b, int e) {
    const int d = a - b;
    return u("qth", e * d * d) * ex(i + d, e) * y(i + d, e);
  };

  VerificationReport rep;
  rep.identity = "verify-red34";
  rep.parameters = {{"rank", r}, {"i", i}, {"order_q", order_q}, {"z_range", z_range},
                    {"xi", str(cd.xi)}};
  rep.convention_notes = {
      "S -> z^{-1} central; left side sum_M e^{-xi_i} sum_lambda X_lambda(^{[-M]}Y) z^M keeps the "
      "q~^{M^2/2} e^{xi_{i-M}} weights of the normalized operator; middle factor y_i(x)",
      "truncated at q~-order order_q (qth exponent <= 2 order_q), |z-degree| <= z_range"};

  Scalar lhs = Scalar::constant(ring, 0);
  const auto groups = enumerate_partitions(order_q);
  for (int m = -z_range; m <= z_range; ++m) {
    for (const auto& group : groups)
      for (const auto& lam : group) {
        Scalar x = cl(-m, 0, 1);
        lam.for_each_box([&](int a, int b) {
          x = x * cl(a - 1 - m, b, 1) * cl(a - m, b - 1, 1) * cl(a - 1 - m, b - 1, -1) * cl(a - m, b, -1);
        });
        lhs += u("z", m) * ex(i, -1) * x;
        ++rep.terms_checked;
      }
  }
  lhs = lhs.truncated_above("qth", top);

  Scalar rhs = y(i, 1);
  for (int n = 1; 2 * n - 1 <= top; ++n)
    rhs = (rhs * (Scalar(1) + u("qth", 2 * n - 1) * ex(i + n, 1) * ex(i + n - 1, -1) * y(i + n, 1) *
                                  y(i + n - 1, -1) * u("z", -1)))
              .truncated_above("qth", top);
  for (int n = 0; 2 * n + 1 <= top; ++n)
    rhs = (rhs * (Scalar(1) + u("z", 1) * u("qth", 2 * n + 1) * ex(i - n - 1, 1) * ex(i - n, -1) *
                                  y(i - n - 1, 1) * y(i - n, -1)))
              .truncated_above("qth", top);
  rhs = window(rhs, "z", z_range);

  const Scalar diff = lhs - rhs;
  if (!diff.is_zero()) {
    std::string res = diff.to_string();
    if (res.size() > 2000) res = res.substr(0, 2000) + " ...";
    rep.fail("residual", res, "0");
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------- Fay

bool verify_fay(const EpsilonParams& ep) {
  const Rational e = ep.eps, e3 = ep.eps3_tilde, e4 = ep.eps4_tilde();
  if (e == 0 || e3 == 0 || e4 == 0) throw std::invalid_argument("verify_fay: eps, eps3~, eps4~ must be nonzero");
  return -1 / (e3 * e4) == 1 / (e * e4) + 1 / (e * e3);
}

bool verify_fay_symbolic() {
  const RingPtr ring = make_ring({{"eps", 1}, {"e3", 1}});
  const Scalar e = Scalar::unit(ring, "eps"), e3 = Scalar::unit(ring, "e3");
  const Scalar e4 = -e - e3;
  // Fractions as (numerator, denominator); compare by cross-multiplication.
  const Scalar ln = Scalar(-1), ld = e3 * e4;
  const Scalar rn = e * e3 + e * e4, rd = e * e4 * e * e3;
  return ln * rd == rn * ld;
}

VerificationReport verify_fay_sweep(int samples, std::uint64_t seed) {
  if (samples < 0) throw std::invalid_argument("verify_fay_sweep: samples must be >= 0");
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-fay";
  rep.parameters = {{"samples", samples}, {"seed", seed}};
  rep.convention_notes.push_back("the undefined symbol eps~ in the identity is read as eps");
  if (!verify_fay_symbolic()) rep.fail("symbolic", "-1/(e3 e4)", "1/(eps e4) + 1/(eps e3)");
  ++rep.terms_checked;
  std::vector<EpsilonParams> cases{{0, 1, 2}, {0, 1, Rational(-1, 2)}};
  std::mt19937_64 rng(seed);
  while (static_cast<int>(cases.size()) < samples + 2) {
    EpsilonParams ep{0, random_rational(rng, true), random_rational(rng, true)};
    if (ep.eps4_tilde() != 0) cases.push_back(ep);
  }
  for (const auto& ep : cases) {
    if (!verify_fay(ep))
      rep.fail("eps=" + to_string(ep.eps) + " eps3~=" + to_string(ep.eps3_tilde),
               to_string(-1 / (ep.eps3_tilde * ep.eps4_tilde())),
               to_string(1 / (ep.eps * ep.eps4_tilde()) + 1 / (ep.eps * ep.eps3_tilde)));
    ++rep.terms_checked;
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace ncjacobi
