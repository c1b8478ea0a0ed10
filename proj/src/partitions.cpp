#include "ncjacobi/partitions.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncjacobi {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw std::invalid_argument("partition parts must be positive and non-increasing");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

Partition Partition::conjugate() const {
  std::vector<int> t(static_cast<std::size_t>(first()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::string ChargedPartition::to_string() const {
  return "(M=" + std::to_string(charge) + ", " + shape.to_string() + ")";
}

namespace {

void normalize_half_set(std::vector<HalfInt>& v) {
  for (auto h : v) {
    if (h.twice <= 0 || h.twice % 2 == 0)
      throw std::invalid_argument("expected a positive half-integer, got numerator " +
                                  std::to_string(h.twice));
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument("duplicate half-integer in set");
}

std::string half_set_string(const std::vector<HalfInt>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "}";
}

}  // namespace

HalfIntSetPair::HalfIntSetPair(std::vector<HalfInt> plus, std::vector<HalfInt> minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  normalize_half_set(plus_);
  normalize_half_set(minus_);
}

std::string HalfIntSetPair::to_string() const {
  return "(" + half_set_string(plus_) + ", " + half_set_string(minus_) + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<std::vector<Partition>> enumerate_partitions(int max_weight) {
  std::vector<std::vector<Partition>> groups;
  for (int w = 0; w <= max_weight; ++w) groups.push_back(partitions_of(w));
  return groups;
}

HalfIntSetPair charged_to_sets(const ChargedPartition& cp) {
  const int m = cp.charge;
  const Partition& lam = cp.shape;
  const Partition lt = lam.conjugate();
  std::vector<HalfInt> plus, minus;
  // Beyond these cutoffs every candidate is negative.
  for (int i = 1; i <= std::max(1, m + lam.first()); ++i) {
    const int n = m + lam.part(i) - i;
    if (n >= 0) plus.push_back(HalfInt::from_floor(n));
  }
  for (int j = 1; j <= std::max(1, -m + lt.first()); ++j) {
    const int n = -m + lt.part(j) - j;
    if (n >= 0) minus.push_back(HalfInt::from_floor(n));
  }
  return HalfIntSetPair(std::move(plus), std::move(minus));
}

ChargedPartition sets_to_charged(const HalfIntSetPair& sp) {
  const int m = sp.d_plus() - sp.d_minus();
  // Decreasing sequence s_i = M + lambda_i - i + 1/2, kept as numerators 2 s_i.
  std::vector<int> seq;
  for (auto h : sp.plus()) seq.push_back(h.twice);
  std::set<int> holes;
  int deepest = 0;
  for (auto h : sp.minus()) {
    holes.insert(h.twice);
    deepest = std::max(deepest, h.twice);
  }
  // Past the deepest hole the sequence is consecutive and lambda_i = 0.
  for (int t = 1; t <= deepest + 2; t += 2) {
    if (!holes.count(t)) seq.push_back(-t);
  }
  std::vector<int> parts;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    parts.push_back((seq[k] - 1) / 2 - m + i);
  }
  if (parts.empty() || parts.back() != 0)
    throw std::logic_error("sets_to_charged: tail did not stabilize at zero");
  return ChargedPartition{m, Partition(std::move(parts))};
}

Profile profile(const ChargedPartition& cp) {
  const HalfIntSetPair sp = charged_to_sets(cp);
  const Partition lt = cp.shape.conjugate();
  Profile p;
  for (int i = 1; i <= sp.d_plus(); ++i) p.n.push_back(cp.charge + cp.shape.part(i) - i);
  for (int j = 1; j <= sp.d_minus(); ++j) p.n_tilde.push_back(-cp.charge + lt.part(j) - j + 1);
  return p;
}

namespace {

// Laurent polynomial in u^{1/2}; keys are exponents measured in halves.
using HalfLaurent = std::map<int, long long>;

void add_term(HalfLaurent& p, int halves, long long c) {
  auto& slot = p[halves];
  slot += c;
  if (slot == 0) p.erase(halves);
}

std::string half_exponent(int halves) {
  return halves % 2 == 0 ? std::to_string(halves / 2) : std::to_string(halves) + "/2";
}

std::string first_difference(const HalfLaurent& a, const HalfLaurent& b, const char* tag) {
  std::set<int> keys;
  for (auto& [k, _] : a) keys.insert(k);
  for (auto& [k, _] : b) keys.insert(k);
  for (int k : keys) {
    auto ia = a.find(k), ib = b.find(k);
    const long long ca = ia == a.end() ? 0 : ia->second;
    const long long cb = ib == b.end() ? 0 : ib->second;
    if (ca != cb) {
      std::ostringstream os;
      os << tag << ": coefficient of u^" << half_exponent(k) << " is " << ca << " vs " << cb;
      return os.str();
    }
  }
  return {};
}

}  // namespace

PsiCheck verify_psi(const ChargedPartition& cp, int order) {
  const HalfIntSetPair sp = charged_to_sets(cp);
  const int m = cp.charge;
  const Partition lt = cp.shape.conjugate();

  // (u^{1/2} - u^{-1/2}) psi with the pole term cleared to 1.
  HalfLaurent lhs;
  add_term(lhs, 0, 1);
  auto add_shifted = [&](int halves, long long c) {
    add_term(lhs, halves + 1, c);
    add_term(lhs, halves - 1, -c);
  };
  for (auto r : sp.plus()) add_shifted(r.twice, 1);
  for (auto r : sp.minus()) add_shifted(-r.twice, -1);

  HalfLaurent rhs;
  add_term(rhs, 2 * m, 1);
  cp.shape.for_each_box([&](int i, int j) {
    const int e = 2 * (m + j - i);
    add_term(rhs, e, -2);
    add_term(rhs, e + 2, 1);
    add_term(rhs, e - 2, 1);
  });
  if (auto d = first_difference(lhs, rhs, "cleared identity"); !d.empty()) return {false, d};

  // Expansion at u = infinity, kept for exponents >= -(order + 1/2).
  const int low = -(2 * order + 1);
  HalfLaurent at_inf, inf_target;
  for (int k = 0; -(2 * k + 1) >= low; ++k) add_term(at_inf, -(2 * k + 1), 1);
  for (auto r : sp.plus()) add_term(at_inf, r.twice, 1);
  for (auto r : sp.minus())
    if (-r.twice >= low) add_term(at_inf, -r.twice, -1);
  for (int i = 1;; ++i) {
    const int e = 2 * (m + cp.shape.part(i) - i) + 1;
    if (e < low) break;
    add_term(inf_target, e, 1);
  }
  if (auto d = first_difference(at_inf, inf_target, "expansion at u=inf"); !d.empty())
    return {false, d};

  // Expansion at u = 0, kept for exponents <= order + 1/2.
  const int high = 2 * order + 1;
  HalfLaurent at_zero, zero_target;
  for (int k = 0; 2 * k + 1 <= high; ++k) add_term(at_zero, 2 * k + 1, -1);
  for (auto r : sp.plus())
    if (r.twice <= high) add_term(at_zero, r.twice, 1);
  for (auto r : sp.minus()) add_term(at_zero, -r.twice, -1);
  for (int j = 1;; ++j) {
    const int e = 2 * (m + j - lt.part(j)) - 1;
    if (e > high) break;
    add_term(zero_target, e, -1);
  }
  if (auto d = first_difference(at_zero, zero_target, "expansion at u=0"); !d.empty())
    return {false, d};
  return {};
}

unsigned snake_class_mask(const Partition& lambda, int dp, int dm) {
  const Partition lt = lambda.conjugate();
  // lambda_0 and lambda^t_0 read as +infinity.
  auto lam = [&](int i) { return i == 0 ? INT_MAX : lambda.part(i); };
  auto lamt = [&](int j) { return j == 0 ? INT_MAX : lt.part(j); };
  const bool both = dp > 0 && dm > 0;
  unsigned mask = 0;
  if ((dm == 0 && dp > lamt(1)) || (both && lamt(dm) > dp && dp > lamt(dm + 1))) mask |= 1u;
  if ((dm == 0 && dp == lamt(1)) || (dp == 0 && dm == lam(1)) ||
      (both && lamt(dm) > dp && dp == lamt(dm + 1) && lam(dp) > dm && dm == lam(dp + 1)))
    mask |= 2u;
  if ((dp == 0 && dm > lam(1)) || (both && lam(dp) > dm && dm > lam(dp + 1))) mask |= 4u;
  if (both && lam(dp) == dm && dm > lam(dp + 1) && lamt(dm) == dp && dp > lamt(dm + 1))
    mask |= 8u;
  return mask;
}

namespace {

SnakeClass class_from_mask(unsigned mask) {
  switch (mask) {
    case 1u: return SnakeClass::S1;
    case 2u: return SnakeClass::S2;
    case 4u: return SnakeClass::S3;
    case 8u: return SnakeClass::S4;
    default: throw std::logic_error("snake classes overlap");
  }
}

// Interlacing bounds lambda_{d+} >= d- >= lambda_{d+ + 1} and the transposed
// version, with index 0 reading as +infinity.
bool snake_bounds_hold(const Partition& lambda, const Partition& lt, int dp, int dm) {
  auto lam = [&](int i) { return i == 0 ? INT_MAX : lambda.part(i); };
  auto lamt = [&](int j) { return j == 0 ? INT_MAX : lt.part(j); };
  return lam(dp) >= dm && dm >= lam(dp + 1) && lamt(dm) >= dp && dp >= lamt(dm + 1);
}

// The "moreover" clauses of classes S1 and S3.
bool snake_side_conditions_hold(const Partition& lambda, const Partition& lt, int dp, int dm,
                                SnakeClass cls) {
  if (cls == SnakeClass::S1) {
    for (int i = lt.part(dm + 1) + 1; i <= dp; ++i)
      if (lambda.part(i) != dm) return false;
  }
  if (cls == SnakeClass::S3) {
    for (int j = lambda.part(dp + 1) + 1; j <= dm; ++j)
      if (lt.part(j) != dp) return false;
  }
  return true;
}

}  // namespace

std::vector<SnakePoint> snake_of(const Partition& lambda, int d_range) {
  std::vector<SnakePoint> out;
  for (int dp = 0; dp <= d_range; ++dp)
    for (int dm = 0; dm <= d_range; ++dm) {
      const unsigned mask = snake_class_mask(lambda, dp, dm);
      if (mask) out.push_back({dp, dm, class_from_mask(mask)});
    }
  return out;
}

bool verify_snake_membership(const Partition& lambda, int m_range) {
  const Partition lt = lambda.conjugate();
  std::set<std::pair<int, int>> realized;
  for (int m = -m_range; m <= m_range; ++m) {
    const HalfIntSetPair sp = charged_to_sets({m, lambda});
    const int dp = sp.d_plus(), dm = sp.d_minus();
    if (!snake_bounds_hold(lambda, lt, dp, dm)) return false;
    const unsigned mask = snake_class_mask(lambda, dp, dm);
    if (mask == 0 || (mask & (mask - 1)) != 0) return false;
    if (!snake_side_conditions_hold(lambda, lt, dp, dm, class_from_mask(mask))) return false;
    realized.insert({dp, dm});
  }
  for (const auto& pt : snake_of(lambda, m_range)) {
    if (!realized.count({pt.d_plus, pt.d_minus})) return false;
  }
  return true;
}

VerificationReport verify_bijection_sweep(int max_weight, int m_range, int set_bound_twice) {
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-bijection";
  rep.parameters = {{"max_weight", max_weight},
                    {"m_range", m_range},
                    {"set_bound", std::to_string(set_bound_twice) + "/2"}};
  const auto groups = enumerate_partitions(max_weight);
  for (int m = -m_range; m <= m_range; ++m) {
    for (const auto& group : groups) {
      for (const auto& lam : group) {
        const ChargedPartition cp{m, lam};
        ++rep.terms_checked;
        const HalfIntSetPair sp = charged_to_sets(cp);
        const ChargedPartition back = sets_to_charged(sp);
        if (back != cp) rep.fail("roundtrip " + cp.to_string(), cp.to_string(), back.to_string());
        if (sp.d_plus() - sp.d_minus() != m)
          rep.fail("charge " + cp.to_string(), std::to_string(sp.d_plus() - sp.d_minus()),
                   std::to_string(m));
        // -Sigma_- is the complement of {M + lambda_i - i + 1/2} among negatives.
        std::set<int> seq;
        for (int i = 1; i <= lam.length() + 2 * std::abs(m) + 2 * max_weight + 4; ++i)
          seq.insert(2 * (m + lam.part(i) - i) + 1);
        std::set<int> minus;
        for (auto h : sp.minus()) minus.insert(h.twice);
        const int bound = 2 * (std::abs(m) + max_weight) + 1;
        for (int t = 1; t <= bound; t += 2) {
          if (minus.count(t) == seq.count(-t))
            rep.fail("complement " + cp.to_string() + " at -" + std::to_string(t) + "/2",
                     minus.count(t) ? "in -Sigma_-" : "not in -Sigma_-",
                     seq.count(-t) ? "in sequence" : "not in sequence");
        }
        const Profile pr = profile(cp);
        bool shift_ok = pr.n.size() == sp.plus().size() && pr.n_tilde.size() == sp.minus().size();
        for (std::size_t i = 0; shift_ok && i < pr.n.size(); ++i)
          shift_ok = 2 * pr.n[i] + 1 == sp.plus()[i].twice && (i == 0 || pr.n[i] < pr.n[i - 1]) &&
                     pr.n[i] >= 0;
        for (std::size_t j = 0; shift_ok && j < pr.n_tilde.size(); ++j)
          shift_ok = 2 * pr.n_tilde[j] - 1 == sp.minus()[j].twice &&
                     (j == 0 || pr.n_tilde[j] < pr.n_tilde[j - 1]) && pr.n_tilde[j] > 0;
        if (!shift_ok) rep.fail("profile " + cp.to_string(), "profile", sp.to_string());
      }
    }
  }
  // Every set pair with elements below set_bound_twice / 2.
  std::vector<int> odd;
  for (int t = 1; t < set_bound_twice; t += 2) odd.push_back(t);
  const unsigned k = static_cast<unsigned>(odd.size());
  auto subset = [&](unsigned bits) {
    std::vector<HalfInt> v;
    for (unsigned b = 0; b < k; ++b)
      if (bits >> b & 1u) v.push_back({odd[b]});
    return v;
  };
  for (unsigned a = 0; a < (1u << k); ++a) {
    for (unsigned b = 0; b < (1u << k); ++b) {
      ++rep.terms_checked;
      const HalfIntSetPair sp(subset(a), subset(b));
      const HalfIntSetPair back = charged_to_sets(sets_to_charged(sp));
      if (back != sp) rep.fail("roundtrip " + sp.to_string(), sp.to_string(), back.to_string());
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

VerificationReport verify_psi_sweep(int max_weight, int m_range, int order) {
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-psi";
  rep.parameters = {{"max_weight", max_weight}, {"m_range", m_range}, {"order", order}};
  rep.convention_notes.push_back(
      "u=0 expansion checked as psi = -sum_j u^{M+j-lambda^t_j-1/2} (overall minus sign from "
      "1/(u^{1/2}-u^{-1/2}) = -u^{1/2}/(1-u))");
  for (int m = -m_range; m <= m_range; ++m)
    for (const auto& group : enumerate_partitions(max_weight))
      for (const auto& lam : group) {
        ++rep.terms_checked;
        const ChargedPartition cp{m, lam};
        if (auto res = verify_psi(cp, order); !res) rep.fail(cp.to_string(), res.counterexample, "");
      }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

VerificationReport verify_snake_sweep(int max_weight) {
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "verify-snake";
  rep.parameters = {{"max_weight", max_weight}};
  for (const auto& group : enumerate_partitions(max_weight))
    for (const auto& lam : group) {
      ++rep.terms_checked;
      const int range = lam.first() + lam.conjugate().first() + 1;
      try {
        if (!verify_snake_membership(lam, range))
          rep.fail(lam.to_string(), "snake membership/bounds/coverage", "violated");
        (void)snake_of(lam, range);
      } catch (const std::logic_error& e) {
        rep.fail(lam.to_string(), e.what(), "disjoint classes");
      }
    }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace ncjacobi
