// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <thread>

#include "ncjacobi/hirota.hpp"
#include "ncjacobi/jacobi.hpp"
#include "ncjacobi/partitions.hpp"
#include "ncjacobi/special.hpp"

using namespace ncjacobi;

namespace {

unsigned threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<Rational> logs(int rank) {
  std::vector<Rational> l;
  for (int i = 0; i <= rank; ++i) l.push_back(Rational(2 * i - rank, 2));
  return l;
}

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_report(const VerificationReport& r, std::int64_t expect_terms = -1) {
  std::string d = std::to_string(r.terms_checked) + " terms, " + std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty()) d += "; first: " + r.failures[0].index;
  bool ok = r.passed() && r.terms_checked > 0;
  if (expect_terms >= 0 && r.terms_checked != expect_terms) {
    ok = false;
    d += "; expected " + std::to_string(expect_terms) + " terms";
  }
  return {ok, d};
}

int failed = 0;

// time_limit_ms <= 0 means no time criterion.
void criterion(int n, const std::string& what, long time_limit_ms, const std::function<Outcome()>& f) {
  Stopwatch clock;
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const long ms = clock.elapsed_ms();
  bool ok = o.ok;
  std::string timing = std::to_string(ms) + " ms";
  if (time_limit_ms > 0) {
    timing += " / limit " + std::to_string(time_limit_ms) + " ms";
    if (ms >= time_limit_ms) ok = false;
  }
  if (!ok) ++failed;
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what << "  [" << o.detail << "; "
            << timing << "]" << std::endl;
}

}  // namespace

int main() {
  criterion(1, "bijection roundtrip |M|<=6, |lambda|<=12, set pairs inside [0,17/2)", 10'000,
            [] { return from_report(verify_bijection_sweep(12, 6, 17)); });

  criterion(2, "psi identity |M|<=4, |lambda|<=6, u=inf / u=0 truncations to order 12", 0,
            [] { return from_report(verify_psi_sweep(6, 4, 12)); });

  criterion(3, "snake classes disjoint, realized points covered, bounds, |lambda|<=8", 0,
            [] { return from_report(verify_snake_sweep(8)); });

  criterion(4, "split factorization with factor cross-checks, |lambda|<=8, |M|<=5", 60'000,
            [] { return from_report(verify_split(8, 5, threads()), 11 * 67); });

  criterion(5, "both noncommutative Jacobi identities, R=6, 2x4096 terms", 60'000, [] {
    VerificationReport r;
    r.identity = "jacobi";
    r.absorb(verify_jacobi(6, {false, threads()}));
    r.absorb(verify_jacobi(6, {true, threads()}));
    return from_report(r, 2 * 4096);
  });

  criterion(6, "bilinear identity: rho-pairs cancel, grades <=12 vanish, rho involution", 120'000,
            [] { return from_report(verify_bilinear(12, {threads()})); });

  criterion(7, "classical triple product |M|<=5, n<=30 against p(n)", 0,
            [] { return from_report(verify_classical_jtp(30, 5), 11 * 31); });

  criterion(8, "higher-times triple product (K,D,order_v) = (3,2,12), (4,2,12)", 120'000, [] {
    VerificationReport r;
    r.identity = "w1inf";
    r.absorb(verify_bosfert(3, 2, 12, 5));
    r.absorb(verify_bosfert(4, 2, 12, 5));
    return from_report(r);
  });

  criterion(9, "q-character factorization r in {0,1,2}, all i, R=4, cdi + intertwining + factor families", 0, [] {
    VerificationReport r;
    r.identity = "qchar";
    for (int rank = 0; rank <= 2; ++rank) {
      const EpsilonParams ep{rank, Rational(1), Rational(2)};
      const auto cd = CouplingData::from_logs(logs(rank));
      for (int i = 0; i <= rank; ++i) r.absorb(verify_qchar_jacobi(ep, cd, i, 4, threads()));
    }
    return from_report(r);
  });

  criterion(10, "classical limit r in {0,1}, q~-order 4, |z-degree|<=3 (commutative path)", 0, [] {
    VerificationReport r;
    r.identity = "red34";
    for (int rank = 0; rank <= 1; ++rank) {
      const EpsilonParams ep{rank, Rational(1), Rational(2)};
      const auto cd = CouplingData::from_logs(logs(rank));
      for (int i = 0; i <= rank; ++i) r.absorb(verify_red34(ep, cd, i, 4, 3));
    }
    return from_report(r);
  });

  criterion(11, "xi solver exact on 50 random inputs per r in 1..4; Fay symbolic + 20 random", 0, [] {
    const auto xi = verify_xi_solver(50, 4);
    const auto fay = verify_fay_sweep(20);
    Outcome o = from_report(xi, 200);
    const Outcome f = from_report(fay, 1 + 2 + 20);
    return Outcome{o.ok && f.ok, "xi: " + o.detail + "; fay: " + f.detail};
  });

  criterion(12, "mutations: flipped split charge breaks 5, unreduced Ytilde breaks 6", 0, [] {
    const auto a = verify_jacobi(6, {false, threads(), ChargeConvention::naive});
    const auto b = verify_jacobi(6, {true, threads(), ChargeConvention::naive});
    const auto c = verify_bilinear(12, {threads(), false, false});
    const std::size_t fa = a.failures.size() + b.failures.size(), fc = c.failures.size();
    return Outcome{fa > 0 && fc > 0, "criterion-5 failures under mutation: " + std::to_string(fa) +
                                         ", criterion-6 failures under mutation: " + std::to_string(fc)};
  });

  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
