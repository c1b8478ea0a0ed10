#include "doctest.h"
#include "ncjacobi/hirota.hpp"

using namespace ncjacobi;

namespace {

NCMonomial Y(int a, int b, int e = 1) { return NCMonomial::generator(GeneratorId::y(a, b), e); }
NCMonomial Yt0(int b, int e = 1) { return NCMonomial::generator(GeneratorId::ytilde(0, b), e); }
const Partition E;

}  // namespace

TEST_CASE("rho examples") {
  CHECK(rho({E, 0, E}) == BilinearTerm{E, -1, E});
  CHECK(rho({E, 0, Partition({1})}) == BilinearTerm{E, 1, E});
  CHECK(rho({E, -1, E}) == BilinearTerm{E, 0, E});
  CHECK(rho({Partition({2, 1}), 1, Partition({3})}) == BilinearTerm{Partition({1}), 0, Partition({3, 3})});
}

TEST_CASE("grade examples") {
  CHECK(grade({E, 0, E}) == 0);
  CHECK(grade({E, 0, Partition({1})}) == 1);
  CHECK(grade({E, 1, E}) == 1);
  CHECK(grade({E, -2, E}) == 1);
}

TEST_CASE("term values") {
  CHECK(bilinear_term_value({E, 0, E}) == Yt0(0) * Y(1, 0));
  CHECK(bilinear_term_value({E, -1, E}) == NCMonomial(Scalar(-1)) * Y(1, 0) * Yt0(0));
  CHECK((NCPoly(bilinear_term_value({E, 0, E})) + NCPoly(bilinear_term_value({E, -1, E}))).is_zero());
  CHECK(bilinear_term_value({E, 0, E}, false).exponents().size() == 2);
  CHECK_FALSE(bilinear_term_value({E, 0, E}, false).is_canonical());
}

TEST_CASE("pair cancellation examples") {
  CHECK(verify_pair_cancel({E, 0, E}));
  CHECK(verify_pair_cancel({E, 0, Partition({1})}));
  CHECK(verify_pair_cancel({Partition({2, 1}), 1, Partition({3})}));
}

TEST_CASE("grade blocks") {
  CHECK(terms_of_grade(0).size() == 2);
  const auto g1 = terms_of_grade(1);
  CHECK(g1.size() == 6);  // three rho-pairs
  for (const auto& t : g1) CHECK(grade(t) == 1);
  const auto rep = verify_bilinear(1);
  CHECK(rep.passed());
  CHECK(rep.terms_checked == 8);  // four pairs through grade 1
}

TEST_CASE("rho is a fixed-point-free grade-preserving involution through grade 12") {
  for (int g = 0; g <= 12; ++g)
    for (const auto& t : terms_of_grade(g)) {
      const BilinearTerm p = rho(t);
      CHECK(grade(p) == g);
      CHECK(rho(p) == t);
      CHECK(p.charge - t.charge != 0);
      CHECK((p.charge - t.charge == 1 || p.charge - t.charge == -1));
    }
}

TEST_CASE("bilinear identity through grade 12") {
  const auto rep = verify_bilinear(12, {2});
  CHECK(rep.passed());
  CHECK(rep.terms_checked > 0);
}

TEST_CASE("mutations are detected") {
  const auto raw = verify_bilinear(2, {1, false, false});
  CHECK(raw.failures.size() > 0);
  const auto mut = verify_bilinear(3, {1, true, true});
  CHECK(verify_bilinear(0, {1, true, true}).passed());
  CHECK(mut.failures.size() > 0);
  CHECK_FALSE(verify_bilinear(1, {1, true, true}).passed());
}
