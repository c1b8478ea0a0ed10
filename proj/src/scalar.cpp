#include "ncjacobi/scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncjacobi {

ScalarRing::ScalarRing(std::vector<UnitSpec> units, std::vector<std::string> nilpotents,
                       int degree_cap)
    : units_(std::move(units)), nilpotents_(std::move(nilpotents)), degree_cap_(degree_cap) {
  std::vector<std::string> names;
  for (const auto& u : units_) {
    if (u.denominator <= 0) throw std::invalid_argument("unit denominator must be positive");
    names.push_back(u.name);
  }
  names.insert(names.end(), nilpotents_.begin(), nilpotents_.end());
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw std::invalid_argument("ring symbol names must be unique");
  if (degree_cap_ < 0) throw std::invalid_argument("nilpotent degree cap must be >= 0");
}

std::size_t ScalarRing::unit_index(std::string_view name) const {
  for (std::size_t i = 0; i < units_.size(); ++i)
    if (units_[i].name == name) return i;
  throw std::out_of_range("unknown unit " + std::string(name));
}

std::size_t ScalarRing::nilpotent_index(std::string_view name) const {
  for (std::size_t i = 0; i < nilpotents_.size(); ++i)
    if (nilpotents_[i] == name) return i;
  throw std::out_of_range("unknown nilpotent " + std::string(name));
}

bool ScalarRing::has_unit(std::string_view name) const {
  return std::any_of(units_.begin(), units_.end(), [&](const UnitSpec& u) { return u.name == name; });
}

RingPtr make_ring(std::vector<UnitSpec> units, std::vector<std::string> nilpotents,
                  int degree_cap) {
  return std::make_shared<const ScalarRing>(std::move(units), std::move(nilpotents), degree_cap);
}

namespace {

bool same_spec(const ScalarRing& a, const ScalarRing& b) {
  if (a.units().size() != b.units().size() || a.nilpotents() != b.nilpotents() ||
      a.degree_cap() != b.degree_cap())
    return false;
  for (std::size_t i = 0; i < a.units().size(); ++i)
    if (a.units()[i].name != b.units()[i].name ||
        a.units()[i].denominator != b.units()[i].denominator)
      return false;
  return true;
}

int nil_degree(const ScalarKey& k) { return std::accumulate(k.nils.begin(), k.nils.end(), 0); }

}  // namespace

Scalar::Scalar(const Rational& c) {
  if (c != 0) terms_.push_back({ScalarKey{}, c});
}

Scalar Scalar::constant(RingPtr ring, const Rational& c) {
  Scalar s(c);
  s.lift_to(ring);
  return s;
}

Scalar Scalar::unit(RingPtr ring, std::string_view name, const Rational& exponent) {
  std::vector<Rational> exps(ring->units().size(), Rational(0));
  exps[ring->unit_index(name)] = exponent;
  return unit_monomial(std::move(ring), exps);
}

Scalar Scalar::unit_monomial(RingPtr ring, const std::vector<Rational>& exponents) {
  if (exponents.size() != ring->units().size())
    throw std::invalid_argument("unit exponent vector has wrong length");
  ScalarKey key{std::vector<int>(exponents.size(), 0),
                std::vector<int>(ring->nilpotents().size(), 0)};
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const Rational scaled = exponents[i] * ring->units()[i].denominator;
    if (!is_integer(scaled))
      throw std::invalid_argument("exponent " + ncjacobi::to_string(exponents[i]) + " of unit " +
                                  ring->units()[i].name + " is not in (1/" +
                                  std::to_string(ring->units()[i].denominator) + ")Z");
    key.units[i] = static_cast<int>(scaled.get_num().get_si());
  }
  return from_terms(std::move(ring), {{std::move(key), Rational(1)}});
}

Scalar Scalar::nilpotent(RingPtr ring, std::string_view name) {
  ScalarKey key{std::vector<int>(ring->units().size(), 0),
                std::vector<int>(ring->nilpotents().size(), 0)};
  key.nils[ring->nilpotent_index(name)] = 1;
  return from_terms(std::move(ring), {{std::move(key), Rational(1)}});
}

Scalar Scalar::from_terms(RingPtr ring, std::vector<Term> terms) {
  Scalar s;
  s.ring_ = std::move(ring);
  s.terms_ = std::move(terms);
  s.canonicalize();
  return s;
}

void Scalar::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  const int cap = ring_ ? ring_->degree_cap() : 0;
  std::erase_if(merged, [&](const Term& t) {
    return t.second == 0 || (!t.first.nils.empty() && nil_degree(t.first) > cap);
  });
  terms_ = std::move(merged);
}

RingPtr Scalar::common_ring(const Scalar& a, const Scalar& b) {
  if (!a.ring_) return b.ring_;
  if (!b.ring_ || a.ring_ == b.ring_) return a.ring_;
  if (same_spec(*a.ring_, *b.ring_)) return a.ring_;
  throw std::invalid_argument("scalars from different rings");
}

void Scalar::lift_to(const RingPtr& ring) {
  if (ring_ == ring || !ring) return;
  if (ring_) {
    if (!same_spec(*ring_, *ring)) throw std::invalid_argument("scalars from different rings");
    ring_ = ring;
    return;
  }
  for (auto& [key, _] : terms_) {
    key.units.assign(ring->units().size(), 0);
    key.nils.assign(ring->nilpotents().size(), 0);
  }
  ring_ = ring;
}

bool Scalar::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& k = terms_.front().first;
  return std::all_of(k.units.begin(), k.units.end(), [](int e) { return e == 0; }) &&
         std::all_of(k.nils.begin(), k.nils.end(), [](int e) { return e == 0; });
}

Rational Scalar::as_rational() const {
  if (!is_constant()) throw std::domain_error("scalar is not a constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.front().second;
}

bool Scalar::is_unit_monomial() const {
  return terms_.size() == 1 && nil_degree(terms_.front().first) == 0;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  const RingPtr ring = common_ring(*this, o);
  lift_to(ring);
  Scalar rhs = o;
  rhs.lift_to(ring);
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  const RingPtr ring = Scalar::common_ring(a, b);
  Scalar x = a, y = b;
  x.lift_to(ring);
  y.lift_to(ring);
  const int cap = ring ? ring->degree_cap() : 0;
  std::map<ScalarKey, Rational> acc;
  for (const auto& [ka, ca] : x.terms_) {
    for (const auto& [kb, cb] : y.terms_) {
      ScalarKey k = ka;
      int deg = 0;
      for (std::size_t i = 0; i < k.nils.size(); ++i) deg += (k.nils[i] += kb.nils[i]);
      if (deg > cap) continue;
      for (std::size_t i = 0; i < k.units.size(); ++i) k.units[i] += kb.units[i];
      acc[std::move(k)] += ca * cb;
    }
  }
  Scalar out;
  out.ring_ = ring;
  for (auto& [k, c] : acc)
    if (c != 0) out.terms_.emplace_back(k, c);
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

bool operator==(const Scalar& a, const Scalar& b) {
  const RingPtr ring = Scalar::common_ring(a, b);
  Scalar x = a, y = b;
  x.lift_to(ring);
  y.lift_to(ring);
  return x.terms_ == y.terms_;
}

Scalar Scalar::inverse() const {
  if (!is_unit_monomial())
    throw std::domain_error("only unit monomials are invertible, got " + to_string());
  Scalar s = *this;
  auto& [key, c] = s.terms_.front();
  for (int& e : key.units) e = -e;
  c = 1 / c;
  return s;
}

Rational Scalar::unit_exponent(const Term& term, std::size_t index) const {
  if (!ring_ || term.first.units.empty()) return 0;
  return Rational(term.first.units[index], ring_->units()[index].denominator);
}

Scalar Scalar::truncated_above(std::string_view unit_name, const Rational& max_exponent) const {
  if (!ring_) return *this;
  const std::size_t idx = ring_->unit_index(unit_name);
  Scalar s = *this;
  std::erase_if(s.terms_, [&](const Term& t) { return unit_exponent(t, idx) > max_exponent; });
  return s;
}

Scalar Scalar::without_unit(std::string_view unit_name) const {
  if (!ring_) return *this;
  const std::size_t idx = ring_->unit_index(unit_name);
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.first.units[idx] = 0;
  return from_terms(ring_, std::move(terms));
}

Scalar Scalar::over(const RingPtr& ring) const {
  if (!ring_ || ring_ == ring) {
    Scalar s = *this;
    s.lift_to(ring);
    return s;
  }
  std::vector<std::size_t> umap, nmap;
  for (const auto& u : ring_->units()) {
    const std::size_t j = ring->unit_index(u.name);
    if (ring->units()[j].denominator % u.denominator != 0)
      throw std::invalid_argument("unit " + u.name + " denominator not compatible");
    umap.push_back(j);
  }
  for (const auto& n : ring_->nilpotents()) nmap.push_back(ring->nilpotent_index(n));
  std::vector<Term> terms;
  for (const auto& [k, c] : terms_) {
    ScalarKey nk{std::vector<int>(ring->units().size(), 0),
                 std::vector<int>(ring->nilpotents().size(), 0)};
    for (std::size_t i = 0; i < umap.size(); ++i)
      nk.units[umap[i]] = k.units[i] * (ring->units()[umap[i]].denominator /
                                        ring_->units()[i].denominator);
    for (std::size_t i = 0; i < nmap.size(); ++i) nk.nils[nmap[i]] = k.nils[i];
    terms.emplace_back(std::move(nk), c);
  }
  return from_terms(ring, std::move(terms));
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& term : terms_) {
    const auto& [key, c] = term;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < key.units.size(); ++i) {
      if (key.units[i] == 0) continue;
      const Rational e = unit_exponent(term, i);
      std::string f = ring_->units()[i].name;
      if (e != 1) f += is_integer(e) ? "^" + ncjacobi::to_string(e) : "^(" + ncjacobi::to_string(e) + ")";
      factors.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < key.nils.size(); ++i) {
      if (key.nils[i] == 0) continue;
      std::string f = ring_->nilpotents()[i];
      if (key.nils[i] != 1) f += "^" + std::to_string(key.nils[i]);
      factors.push_back(std::move(f));
    }
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first_term)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first_term = false;
    std::string body;
    if (factors.empty() || mag != 1) body = ncjacobi::to_string(mag);
    for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
    os << body;
  }
  return os.str();
}

Scalar exp_nilpotent(const RingPtr& ring, const LogScalar& p) {
  Scalar nil = p.nilpotent;
  for (const auto& [key, c] : nil.terms()) {
    const bool has_unit =
        std::any_of(key.units.begin(), key.units.end(), [](int e) { return e != 0; });
    if (has_unit || nil_degree(key) == 0)
      throw std::domain_error("exponent term is not purely nilpotent: " + nil.to_string());
  }
  Scalar result = 1;
  if (ring) {
    std::vector<Rational> logs = p.unit_logs;
    logs.resize(ring->units().size(), Rational(0));
    result = Scalar::unit_monomial(ring, logs);
  } else if (!p.unit_logs.empty()) {
    throw std::domain_error("unit logarithms given without a ring");
  }
  Scalar series = 1, power = 1;
  for (long n = 1; !power.is_zero(); ++n) {
    power = power * nil * Scalar(Rational(1, n));
    series += power;
  }
  return result * series;
}

Scalar exp_nilpotent(const Scalar& nilpotent_part) {
  return exp_nilpotent(nilpotent_part.ring(), LogScalar{{}, nilpotent_part});
}

Scalar coefficient_of(const Scalar& s, const std::vector<Rational>& unit_exponents) {
  if (s.is_zero() || !s.ring()) {
    const bool all_zero = std::all_of(unit_exponents.begin(), unit_exponents.end(),
                                      [](const Rational& e) { return e == 0; });
    return all_zero ? s : Scalar();
  }
  const RingPtr& ring = s.ring();
  Scalar out = Scalar::constant(ring, 0);
  for (const auto& term : s.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < ring->units().size() && match; ++i) {
      const Rational want = i < unit_exponents.size() ? unit_exponents[i] : Rational(0);
      match = s.unit_exponent(term, i) == want;
    }
    if (!match) continue;
    Scalar piece = Scalar::constant(ring, term.second);
    for (std::size_t i = 0; i < term.first.nils.size(); ++i)
      for (int e = 0; e < term.first.nils[i]; ++e)
        piece *= Scalar::nilpotent(ring, ring->nilpotents()[i]);
    out += piece;
  }
  return out;
}

}  // namespace ncjacobi
