#include <algorithm>
#include <random>

#include "doctest.h"
#include "ncjacobi/ncalg.hpp"

using namespace ncjacobi;

namespace {

NCMonomial Y(int a, int b, int e = 1) { return NCMonomial::generator(GeneratorId::y(a, b), e); }
NCMonomial Yt0(int b, int e = 1) { return NCMonomial::generator(GeneratorId::ytilde(0, b), e); }
NCMonomial rawYt(int a, int b, int e = 1) {
  return NCMonomial::raw(Scalar(1), {{GeneratorId::ytilde(a, b), e}}, 0);
}
NCMonomial S(int k) { return NCMonomial::shift(k); }

NCMonomial random_monomial(std::mt19937& rng, bool with_tilde) {
  std::uniform_int_distribution<int> idx(-6, 6), ex(-2, 2), sp(-3, 3), fam(0, 2), len(0, 4);
  NCMonomial m = S(sp(rng));
  for (int k = len(rng); k > 0; --k) {
    const int e = ex(rng);
    if (e == 0) continue;
    m = (with_tilde && fam(rng) == 0 ? canonicalize(rawYt(idx(rng), idx(rng), e)) : Y(idx(rng), idx(rng), e)) * m;
  }
  return m;
}

}  // namespace

TEST_CASE("generator ids and rendering") {
  CHECK(GeneratorId::yspec(5, 1, 0, 2) == GeneratorId{Family::Yspec, 2, 1, 1});
  CHECK(GeneratorId::yspec(-1, 0, 0, 2) == GeneratorId{Family::Yspec, 2, 0, -1});
  CHECK(GeneratorId::yspec(7, 0, 0, 0) == GeneratorId{Family::Yspec, 0, 0, 7});
  CHECK((Y(1, 0) * Y(1, 1, -1) * S(1)).to_string() == "Y[1,0]*Y[1,1]^-1*S^1");
  CHECK(NCMonomial().to_string() == "1");
}

TEST_CASE("sigma examples") {
  CHECK(sigma(GeneratorId::y(0, 0), 1) == Y(1, 1));
  CHECK(sigma(GeneratorId::y(3, -2), 0) == Y(3, -2));
  CHECK(sigma(GeneratorId::ytilde(0, 5), -1) == Yt0(5) * Y(1, 5) * Y(0, 5, -1));
  CHECK(sigma(GeneratorId::yspec(1, 2, 0, 3), 1) == NCMonomial::generator(GeneratorId::yspec(1, 1, 0, 3)));
}

TEST_CASE("mono_mul examples") {
  CHECK(Y(0, 0) * Y(1, 1) == NCMonomial::raw(Scalar(1), {{GeneratorId::y(0, 0), 1}, {GeneratorId::y(1, 1), 1}}, 0));
  CHECK(S(1) * Y(0, 0) == Y(1, 1) * S(1));
  CHECK(Y(1, 0) * Y(1, 1, -1) * S(1) * Y(0, 0) == Y(1, 0) * S(1));
}

TEST_CASE("canonicalize examples") {
  CHECK(canonicalize(rawYt(1, 4)) == Yt0(4) * Y(1, 4) * Y(0, 4, -1));
  CHECK(canonicalize(rawYt(0, 4)) == Yt0(4));
  CHECK(canonicalize(rawYt(2, 7)) == Yt0(7) * Y(1, 7) * Y(0, 7, -1) * Y(0, 6) * Y(-1, 6, -1));
  CHECK(canonicalize(rawYt(-1, 3)).is_canonical());
  CHECK_FALSE(rawYt(2, 7).is_canonical());
}

TEST_CASE("sigma is an automorphism") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> k(-5, 5);
  for (int t = 0; t < 200; ++t) {
    const NCMonomial a = random_monomial(rng, true).commutative_part();
    const NCMonomial b = random_monomial(rng, true).commutative_part();
    const int x = k(rng), y = k(rng);
    CHECK(sigma(a * b, x) == sigma(a, x) * sigma(b, x));
    CHECK(sigma(sigma(a, x), y) == sigma(a, x + y));
    CHECK(S(x) * a * S(-x) == sigma(a, x));
  }
}

TEST_CASE("mono_mul is associative and inverse works") {
  std::mt19937 rng(9);
  for (int t = 0; t < 200; ++t) {
    const NCMonomial a = random_monomial(rng, true), b = random_monomial(rng, true), c = random_monomial(rng, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == NCMonomial());
    CHECK(a.inverse() * a == NCMonomial());
  }
}

TEST_CASE("canonicalization is idempotent and confluent") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> idx(-4, 4), ex(-2, 2);
  for (int t = 0; t < 100; ++t) {
    ExponentMap word;
    for (int k = 0; k < 4; ++k) {
      const int e = ex(rng);
      if (e != 0) word.push_back({GeneratorId::ytilde(idx(rng), idx(rng)), e});
      if (k % 2) word.push_back({GeneratorId::y(idx(rng), idx(rng)), 1});
    }
    std::sort(word.begin(), word.end());
    ExponentMap merged;
    for (const auto& [g, e] : word) {
      if (!merged.empty() && merged.back().first == g) merged.back().second += e;
      else merged.push_back({g, e});
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0; });
    const NCMonomial m = NCMonomial::raw(Scalar(1), merged, 0);
    const NCMonomial c = canonicalize(m);
    CHECK(c.is_canonical());
    CHECK(canonicalize(c) == c);
    // random rewrite order
    NCMonomial cur = m;
    for (int guard = 0; guard < 1000 && !cur.is_canonical(); ++guard) {
      std::uniform_int_distribution<std::size_t> pos(0, cur.exponents().size() - 1);
      if (auto next = rewrite_step(cur, pos(rng))) cur = *next;
    }
    CHECK(cur == c);
  }
}

TEST_CASE("NCPoly operations") {
  const NCPoly one(NCMonomial{});
  const NCMonomial a = Y(2, 0), b = Y(0, 3);
  const NCPoly p = one + NCPoly(a * S(1));
  const NCPoly q = one + NCPoly(b * S(-1));
  CHECK(p + NCPoly() == p);
  CHECK(p * q == one + NCPoly(a * S(1)) + NCPoly(b * S(-1)) + NCPoly(a * sigma(b, 1)));
  CHECK_FALSE(p * q == q * p);
  CHECK((p - p).is_zero());
  CHECK((NCPoly(a) + NCPoly(a)).size() == 1);
  CHECK((Scalar(3) * NCPoly(a)).monomials()[0].coeff() == Scalar(3));
  CHECK(NCPoly().to_string() == "0");
}
