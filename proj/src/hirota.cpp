#include "ncjacobi/hirota.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ncjacobi/jacobi.hpp"
#include "ncjacobi/parallel.hpp"

namespace ncjacobi {

std::string BilinearTerm::to_string() const {
  return "(" + lambda.to_string() + ", " + std::to_string(charge) + ", " + mu.to_string() + ")";
}

namespace {

Partition make_partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::vector<int> tail(const Partition& p) {
  auto ps = p.parts();
  return ps.empty() ? std::vector<int>{} : std::vector<int>(ps.begin() + 1, ps.end());
}

std::vector<int> prepend(int first, const Partition& p) {
  std::vector<int> out{first};
  out.insert(out.end(), p.parts().begin(), p.parts().end());
  return out;
}

bool first_branch(const BilinearTerm& t) { return t.mu.first() - t.lambda.first() > t.charge; }

NCMonomial y(int a, int b) { return NCMonomial::generator(GeneratorId::y(a, b)); }

}  // namespace

BilinearTerm rho(const BilinearTerm& t, bool mutated) {
  const int m = t.charge;
  if (first_branch(t)) {
    const int head = mutated ? t.mu.first() + m + 1 : t.mu.first() - m - 1;
    return {make_partition(prepend(head, t.lambda)), m + 1, make_partition(tail(t.mu))};
  }
  return {make_partition(tail(t.lambda)), m - 1, make_partition(prepend(t.lambda.first() + m, t.mu))};
}

int grade(const BilinearTerm& t) {
  return t.lambda.weight() + t.mu.weight() + t.charge * (t.charge + 1) / 2;
}

std::vector<BilinearTerm> terms_of_grade(int g) {
  std::vector<BilinearTerm> out;
  if (g < 0) return out;
  const auto groups = enumerate_partitions(g);
  for (int m = -g - 1; m <= g; ++m) {
    const int rest = g - m * (m + 1) / 2;
    if (rest < 0) continue;
    for (int a = 0; a <= rest; ++a)
      for (const auto& lam : groups[static_cast<std::size_t>(a)])
        for (const auto& mu : groups[static_cast<std::size_t>(rest - a)]) out.push_back({lam, m, mu});
  }
  return out;
}

NCMonomial bilinear_term_value(const BilinearTerm& t, bool canonicalize_tilde) {
  const NCMonomial xl = x_lambda(MatrixView::generic().row_shifted(-t.charge), t.lambda);
  const NCMonomial xm = x_lambda(MatrixView::tilde(canonicalize_tilde).row_shifted(t.charge + 1), t.mu);
  const int sign = t.charge % 2 == 0 ? 1 : -1;
  return NCMonomial(Scalar(sign)) * xl * xm;
}

bool verify_pair_cancel(const BilinearTerm& t, const HirotaOptions& opts, std::vector<Failure>* out) {
  bool ok = true;
  auto fail = [&](std::string what, std::string lhs, std::string rhs) {
    ok = false;
    if (out) out->push_back({t.to_string() + " " + what, std::move(lhs), std::move(rhs)});
  };
  BilinearTerm partner;
  try {
    partner = rho(t, opts.mutate_rho);
  } catch (const std::invalid_argument& e) {
    fail("rho", e.what(), "a valid term");
    return false;
  }
  const NCMonomial v = bilinear_term_value(t, opts.canonicalize_tilde);
  const NCMonomial w = bilinear_term_value(partner, opts.canonicalize_tilde);
  const NCPoly sum = NCPoly(v) + NCPoly(w);
  if (!sum.is_zero()) fail("pair with " + partner.to_string(), sum.to_string(), "0");

  if (first_branch(t)) {
    const int m = t.charge, mu1 = t.mu.first();
    const MatrixView tv = MatrixView::tilde(opts.canonicalize_tilde);
    const NCMonomial displayed = y(-m - 1, mu1 - m - 1) * y(-m, mu1 - m - 1).inverse() *
                                 tv.entry(m + 2, mu1) * tv.entry(m + 1, mu1).inverse();
    const NCMonomial ratio = NCMonomial(Scalar(-1)) * w * v.inverse();
    if (!(ratio == displayed)) fail("partner ratio", ratio.to_string(), displayed.to_string());
    if (!(displayed == NCMonomial())) fail("displayed ratio", displayed.to_string(), "1");
  }
  return ok;
}

VerificationReport verify_bilinear(int max_grade, const HirotaOptions& opts) {
  if (max_grade < 0) throw std::invalid_argument("verify_bilinear: max grade must be >= 0");
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-hirota";
  rep.parameters = {{"max_grade", max_grade}};
  if (!opts.canonicalize_tilde) rep.parameters["canonicalize_tilde"] = false;
  if (opts.mutate_rho) rep.parameters["mutate_rho"] = true;
  rep.convention_notes.push_back("grade(lambda, M, mu) = |lambda| + |mu| + M(M+1)/2; lambda_1 of the "
                                 "empty partition reads as 0");
  for (int g = 0; g <= max_grade; ++g) {
    const auto terms = terms_of_grade(g);
    std::map<BilinearTerm, std::size_t> position;
    for (std::size_t k = 0; k < terms.size(); ++k) position.emplace(terms[k], k);

    auto results = parallel_map(terms.size(), opts.threads, [&](std::size_t k) {
      std::vector<Failure> fs;
      verify_pair_cancel(terms[k], opts, &fs);
      return std::make_pair(bilinear_term_value(terms[k], opts.canonicalize_tilde), fs);
    });

    const std::string gi = "grade " + std::to_string(g);
    NCPoly total;
    for (auto& [value, fs] : results) {
      total += value;
      for (auto& f : fs) rep.fail(gi + " " + f.index, std::move(f.lhs), std::move(f.rhs));
    }
    if (!total.is_zero()) rep.fail(gi + " sum", total.to_string(), "0");

    for (const auto& t : terms) {
      BilinearTerm p;
      try {
        p = rho(t, opts.mutate_rho);
      } catch (const std::invalid_argument&) {
        continue;  // already reported by the pair check
      }
      if (p == t) rep.fail(gi + " rho fixed point", t.to_string(), "no fixed point");
      if (grade(p) != g || !position.count(p)) {
        rep.fail(gi + " rho grade", t.to_string() + " -> " + p.to_string(),
                 "grade " + std::to_string(g));
        continue;
      }
      BilinearTerm back;
      try {
        back = rho(p, opts.mutate_rho);
      } catch (const std::invalid_argument&) {
        back = p;
      }
      if (!(back == t)) rep.fail(gi + " rho involution", t.to_string(), back.to_string());
    }
    rep.terms_checked += static_cast<std::int64_t>(terms.size());
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace ncjacobi
