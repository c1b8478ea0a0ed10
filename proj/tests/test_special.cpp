#include <random>

#include "doctest.h"
#include "ncjacobi/jacobi.hpp"
#include "ncjacobi/special.hpp"

using namespace ncjacobi;

namespace {

Scalar b(const HigherTimes& ht, int k) { return Scalar::nilpotent(ht.ring(), "b" + std::to_string(k)); }
Scalar c(long num, long den = 1) { return Scalar(Rational(num, den)); }

std::vector<Rational> logs(int rank) {
  std::vector<Rational> l;
  for (int i = 0; i <= rank; ++i) l.push_back(Rational(2 * i - rank, 2));
  return l;
}

}  // namespace

TEST_CASE("t and t_formal") {
  const HigherTimes ht(5, 3);
  const RingPtr& r = ht.ring();
  // no higher times: e^{t(r)} = z v^{2r}
  const HigherTimes h2(2, 0);
  CHECK(exp_nilpotent(h2.ring(), h2.t_of_b(Rational(3, 2))) ==
        Scalar::unit(h2.ring(), "z") * Scalar::unit(h2.ring(), "v", 3));
  CHECK(h2.t_formal(Rational(1, 2)).is_zero());
  // t(0) keeps b3/24 (and odd-power times vanish)
  CHECK(ht.t_of_b(0).nilpotent == c(1, 24) * b(ht, 3) + c(1, 1920) * b(ht, 5));
  // t(xi) + t(-xi): unit logs 2 log z, nothing in v
  const auto tp = ht.t_of_b(Rational(5, 2)), tm = ht.t_of_b(Rational(-5, 2));
  CHECK(tp.unit_logs[0] + tm.unit_logs[0] == 2);
  CHECK(tp.unit_logs[1] + tm.unit_logs[1] == 0);
  const Rational xi(7, 2);
  CHECK(HigherTimes(3, 1).t_formal(xi) ==
        Scalar(xi * xi / 2 + Rational(1, 24)) * Scalar::nilpotent(HigherTimes(3, 1).ring(), "b3"));
  const HigherTimes h4(4, 1);
  CHECK(h4.t_formal(xi) ==
        Scalar(xi * xi / 2 + Rational(1, 24)) * Scalar::nilpotent(h4.ring(), "b3") +
            Scalar(xi * xi * xi / 6 + xi / 24) * Scalar::nilpotent(h4.ring(), "b4"));
  // the closed form agrees with the difference b(xi+1/2) - b(xi-1/2)
  for (int twice = -11; twice <= 11; twice += 2) {
    const Rational x(twice, 2);
    CHECK(ht.t_of_b(x).nilpotent == ht.t_formal(x));
  }
  CHECK_THROWS_AS(ht.exp_b(Rational(1, 2)), std::invalid_argument);
  (void)r;
}

TEST_CASE("classical triple product") {
  const auto rep = verify_classical_jtp(30, 5);
  CHECK(rep.passed());
  CHECK(rep.terms_checked == 11 * 31);
}

TEST_CASE("Euler product equals the partition sum") {
  const RingPtr r = make_ring({{"q", 1}});
  const int n = 15;
  Scalar euler = Scalar::constant(r, 1);
  for (int k = 1; k <= n; ++k) {
    Scalar geo = Scalar::constant(r, 0);  // 1/(1-q^k) truncated
    for (int e = 0; e * k <= n; ++e) geo += Scalar::unit(r, "q", e * k);
    euler = (euler * geo).truncated_above("q", n);
  }
  Scalar sum = Scalar::constant(r, 0);
  const auto groups = enumerate_partitions(n);
  for (int w = 0; w <= n; ++w)
    sum += Scalar(static_cast<long>(groups[static_cast<std::size_t>(w)].size())) * Scalar::unit(r, "q", w);
  CHECK(euler == sum);
}

TEST_CASE("higher-times triple product") {
  CHECK(verify_bosfert(3, 1, 8, 4).passed());
  CHECK(verify_bosfert(4, 2, 8, 4).passed());
  CHECK_THROWS_AS(verify_bosfert(2, 1, 8, 4), std::invalid_argument);
}

TEST_CASE("killing all nilpotents degenerates to the classical product") {
  const auto deg = verify_bosfert(4, 0, 16, 4);
  const auto cl = verify_classical_jtp(16, 4);
  CHECK(deg.passed());
  CHECK(cl.passed());
  CHECK(deg.terms_checked == cl.terms_checked);
}

TEST_CASE("Toeplitz view") {
  const HigherTimes ht(4, 2);
  const MatrixView t = toeplitz_view(ht);
  CHECK(t.entry(0, 0) == NCMonomial());
  for (int n = -3; n <= 3; ++n) {
    const auto minus_t = ht.t_of_b(Rational(1, 2) - n);
    LogScalar neg{{-minus_t.unit_logs[0], -minus_t.unit_logs[1]}, -minus_t.nilpotent};
    CHECK(t.ratio(n, 0, n, 1) == NCMonomial(exp_nilpotent(ht.ring(), neg)));
  }
  for (int a = -2; a <= 2; ++a)
    for (int bb = -2; bb <= 2; ++bb) {
      CHECK(sigma(t.entry(a, bb), 1) == t.entry(a, bb));
      CHECK(t.entry(a + 1, bb + 1) == t.entry(a, bb));
    }
  CHECK(verify_toeplitz_jacobi(3, 2, 3).passed());
}

TEST_CASE("xi solver") {
  CHECK(xi_solve({Rational(0)}) == std::vector<Rational>{0});
  const Rational cc(5, 3);
  CHECK(xi_solve({cc, -cc}) == std::vector<Rational>{0, cc / 2});
  const std::vector<Rational> l{cc, 0, -cc};
  const auto xi = xi_solve(l);
  CHECK(xi[0] == 0);
  for (const auto& res : xi_residuals(l, xi)) CHECK(res == 0);
  CHECK_THROWS_AS(xi_solve({Rational(1), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(CouplingData::from_logs({Rational(1)}), std::invalid_argument);
  const auto rep = verify_xi_solver(50, 4);
  CHECK(rep.passed());
  CHECK(rep.terms_checked == 200);
}

TEST_CASE("epsilon parameters") {
  const EpsilonParams ep{2, Rational(1), Rational(2)};
  CHECK(ep.eps3() == 6);
  CHECK(ep.eps4_tilde() == -3);
  CHECK(-ep.eps4() == ep.eps3() + 3 * ep.eps);
  const EpsilonParams e0{0, Rational(3), Rational(-1, 2)};
  CHECK(e0.eps + e0.eps3() + e0.eps4() == 0);
}

TEST_CASE("Fay identity") {
  CHECK(verify_fay({0, 1, 2}));
  CHECK(verify_fay({0, 1, Rational(-1, 2)}));
  CHECK(verify_fay_symbolic());
  CHECK_THROWS_AS(verify_fay({0, 1, -1}), std::invalid_argument);
  CHECK(verify_fay_sweep(20).passed());
}

TEST_CASE("q-character view") {
  const EpsilonParams ep{2, 1, 2};
  const auto cd = CouplingData::from_logs(logs(2));
  const MatrixView v = qchar_view(ep, cd, 0);
  const RingPtr ring = qchar_ring(2);
  CHECK(v.entry(0, 0) == NCMonomial(Scalar::unit(ring, "ex0")) *
                             NCMonomial::generator(GeneratorId::yspec(0, 1, 0, 2)));
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int t = 0; t < 100; ++t) {
    const int a = d(rng), bb = d(rng);
    CHECK(sigma(v.entry(a, bb), 1) == v.entry(a + 1, bb + 1));
  }
  CHECK(v.ratio(2, 0, 2, 1).coeff() ==
        Scalar::unit(ring, "qth", 3) * Scalar::unit(ring, "ex2") * Scalar::unit(ring, "ex1", -1));
}

TEST_CASE("q-character Theta-transform") {
  for (int r = 0; r <= 2; ++r) {
    const EpsilonParams ep{r, 1, 2};
    const auto cd = CouplingData::from_logs(logs(r));
    for (int i = 0; i <= r; ++i) CHECK(verify_qchar_jacobi(ep, cd, i, r == 0 ? 4 : 3).passed());
  }
}

TEST_CASE("classical limit") {
  const EpsilonParams e0{0, 1, 2}, e1{1, 1, 2};
  const auto r0 = verify_red34(e0, CouplingData::from_logs(logs(0)), 0, 0, 0);
  CHECK(r0.passed());
  CHECK(verify_red34(e0, CouplingData::from_logs(logs(0)), 0, 4, 3).passed());
  CHECK(verify_red34(e1, CouplingData::from_logs(logs(1)), 0, 3, 3).passed());
  CHECK(verify_red34(e1, CouplingData::from_logs(logs(1)), 1, 3, 3).passed());
}
