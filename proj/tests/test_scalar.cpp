#include <random>

#include "doctest.h"
#include "ncjacobi/scalar.hpp"

using namespace ncjacobi;

namespace {

RingPtr zv() { return make_ring({{"z", 1}, {"v", 1}}); }
RingPtr bring(int cap) { return make_ring({{"z", 1}, {"w", 2}}, {"b3", "b4"}, cap); }

Scalar random_scalar(std::mt19937& rng, const RingPtr& ring) {
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), nterms(0, 3), n(0, 2);
  Scalar s = Scalar::constant(ring, 0);
  for (int t = nterms(rng); t > 0; --t) {
    Scalar term = Scalar::constant(ring, Rational(c(rng), 1 + n(rng)));
    term *= Scalar::unit(ring, "z", e(rng)) * Scalar::unit(ring, "w", Rational(e(rng), 2));
    for (int k = n(rng); k > 0; --k) term *= Scalar::nilpotent(ring, k % 2 ? "b3" : "b4");
    s += term;
  }
  return s;
}

}  // namespace

TEST_CASE("ring construction") {
  CHECK_THROWS_AS(make_ring({{"z", 1}, {"z", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({{"z", 1}}, {"z"}), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({{"z", 1}}, {}, -1), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({{"z", 0}}), std::invalid_argument);
}

TEST_CASE("ring operation examples") {
  const RingPtr r = zv();
  const Scalar v2 = Scalar::unit(r, "v", 2);
  CHECK((v2 + 1) * (v2 - 1) == Scalar::unit(r, "v", 4) - 1);
  const Scalar zv3 = Scalar::unit(r, "z") * Scalar::unit(r, "v", 3);
  CHECK(zv3.inverse() == Scalar::unit(r, "z", -1) * Scalar::unit(r, "v", -3));
  CHECK_THROWS_AS((v2 + 1).inverse(), std::domain_error);
  const RingPtr b = make_ring({}, {"b3"}, 1);
  const Scalar b3 = Scalar::nilpotent(b, "b3");
  CHECK((b3 * b3).is_zero());
  CHECK_THROWS_AS(b3.inverse(), std::domain_error);
  CHECK(zv3.to_string() == "z*v^3");
  CHECK((Scalar(2) * zv3).to_string() == "2*z*v^3");
}

TEST_CASE("fractional exponents") {
  const RingPtr r = make_ring({{"q", 2}, {"p", 4}});
  const Scalar h = Scalar::unit(r, "q", Rational(1, 2));
  CHECK(h * h == Scalar::unit(r, "q"));
  CHECK_THROWS_AS(Scalar::unit(r, "q", Rational(1, 3)), std::invalid_argument);
  CHECK(Scalar::unit(r, "p", Rational(3, 4)).unit_exponent(Scalar::unit(r, "p", Rational(3, 4)).terms()[0], 1) ==
        Rational(3, 4));
}

TEST_CASE("exp_nilpotent examples") {
  const RingPtr r = make_ring({{"z", 1}, {"v", 1}}, {"b3"}, 2);
  CHECK(exp_nilpotent(r, {{0, 0}, Scalar::constant(r, 0)}) == Scalar::constant(r, 1));
  CHECK(exp_nilpotent(r, {{1, 2}, Scalar::constant(r, 0)}) == Scalar::unit(r, "z") * Scalar::unit(r, "v", 2));
  const Scalar b3 = Scalar::nilpotent(r, "b3");
  const Scalar p = Scalar(Rational(1, 24)) * b3;
  CHECK(exp_nilpotent(p) == Scalar(1) + p + Scalar(Rational(1, 1152)) * b3 * b3);
  CHECK_THROWS_AS(exp_nilpotent(p + 1), std::domain_error);
  CHECK_THROWS_AS(exp_nilpotent(p * Scalar::unit(r, "z")), std::domain_error);
}

TEST_CASE("coefficient_of") {
  const RingPtr r = zv();
  const Scalar s = Scalar::unit(r, "z") * Scalar::unit(r, "v", 2) + Scalar(2) * Scalar::unit(r, "v", 2);
  CHECK(coefficient_of(s, {0, 2}) == Scalar(2));
  CHECK(coefficient_of(Scalar(), {1, 1}).is_zero());
  // prod_{r < 5/2} (1 + z v^{2r})(1 + z^{-1} v^{2r}) by brute force.
  Scalar prod = Scalar::constant(r, 1);
  for (int tr : {1, 3}) {
    prod *= Scalar(1) + Scalar::unit(r, "z") * Scalar::unit(r, "v", tr);
    prod *= Scalar(1) + Scalar::unit(r, "z", -1) * Scalar::unit(r, "v", tr);
  }
  CHECK(coefficient_of(prod, {0, 2}) == Scalar(1));  // pair (1/2, 1/2)
  CHECK(coefficient_of(prod, {0, 4}) == Scalar(2));  // pairs (1/2,3/2), (3/2,1/2)
  CHECK(coefficient_of(prod, {1, 1}) == Scalar(1));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(7);
  const RingPtr r = bring(2);
  for (int t = 0; t < 150; ++t) {
    const Scalar a = random_scalar(rng, r), b = random_scalar(rng, r), c = random_scalar(rng, r);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("truncation is an ideal") {
  std::mt19937 rng(11);
  const RingPtr full = bring(8), capped = bring(2);
  for (int t = 0; t < 100; ++t) {
    const Scalar a = random_scalar(rng, full), b = random_scalar(rng, full);
    // product in the big ring, then drop degrees > 2
    Scalar reduced = Scalar::constant(capped, 0);
    const Scalar ab = a * b;
    for (const auto& [key, c] : ab.terms()) {
      int deg = 0;
      for (int e : key.nils) deg += e;
      if (deg > 2) continue;
      Scalar term = Scalar::constant(capped, c);
      term *= Scalar::unit(capped, "z", key.units[0]) * Scalar::unit(capped, "w", Rational(key.units[1], 2));
      for (int k = 0; k < key.nils[0]; ++k) term *= Scalar::nilpotent(capped, "b3");
      for (int k = 0; k < key.nils[1]; ++k) term *= Scalar::nilpotent(capped, "b4");
      reduced += term;
    }
    CHECK(a.over(capped) * b.over(capped) == reduced);
  }
}

TEST_CASE("exp is a homomorphism on nilpotents") {
  std::mt19937 rng(3);
  const RingPtr r = make_ring({}, {"b3", "b4", "b5"}, 4);
  std::uniform_int_distribution<int> c(-4, 4);
  auto rnd = [&] {
    Scalar s = Scalar::constant(r, 0);
    for (const char* n : {"b3", "b4", "b5"}) s += Scalar(Rational(c(rng), 3)) * Scalar::nilpotent(r, n);
    s += Scalar(Rational(c(rng), 2)) * Scalar::nilpotent(r, "b3") * Scalar::nilpotent(r, "b4");
    return s;
  };
  for (int t = 0; t < 50; ++t) {
    const Scalar p = rnd(), q = rnd();
    CHECK(exp_nilpotent(p + q) == exp_nilpotent(p) * exp_nilpotent(q));
  }
}

TEST_CASE("truncated_above and without_unit") {
  const RingPtr r = zv();
  const Scalar s = Scalar::unit(r, "v") + Scalar::unit(r, "v", 3) + Scalar::unit(r, "z") * Scalar::unit(r, "v", 2);
  CHECK(s.truncated_above("v", 2) == Scalar::unit(r, "v") + Scalar::unit(r, "z") * Scalar::unit(r, "v", 2));
  CHECK(s.without_unit("z") == Scalar::unit(r, "v") + Scalar::unit(r, "v", 3) + Scalar::unit(r, "v", 2));
}
