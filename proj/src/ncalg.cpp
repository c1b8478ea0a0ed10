#include "ncjacobi/ncalg.hpp"

#include <sstream>
#include <stdexcept>

namespace ncjacobi {

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

// acc += scale * add, both sorted; zero entries dropped.
void merge_into(ExponentMap& acc, const ExponentMap& add, int scale = 1) {
  if (add.empty() || scale == 0) return;
  ExponentMap out;
  out.reserve(acc.size() + add.size());
  auto i = acc.begin();
  auto j = add.begin();
  while (i != acc.end() || j != add.end()) {
    if (j == add.end() || (i != acc.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == acc.end() || j->first < i->first) {
      out.emplace_back(j->first, j->second * scale);
      ++j;
    } else {
      const int e = i->second + j->second * scale;
      if (e != 0) out.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

void merge_one(ExponentMap& acc, const GeneratorId& g, int e) { merge_into(acc, {{g, e}}); }

// Ytilde_{a,n} expressed through Ytilde_{0,n} and Y ratios.
ExponentMap ytilde_expansion(int a, int n) {
  ExponentMap e{{GeneratorId::ytilde(0, n), 1}};
  for (int c = 1; c <= a; ++c) {
    merge_one(e, GeneratorId::y(2 - c, n + 1 - c), 1);
    merge_one(e, GeneratorId::y(1 - c, n + 1 - c), -1);
  }
  for (int c = a; c <= -1; ++c) {
    merge_one(e, GeneratorId::y(-c, n - c), 1);
    merge_one(e, GeneratorId::y(1 - c, n - c), -1);
  }
  return e;
}

ExponentMap sigma_exponents(const ExponentMap& exps, int k) {
  if (k == 0) return exps;
  ExponentMap out;
  for (const auto& [g, e] : exps) merge_into(out, sigma(g, k).exponents(), e);
  return out;
}

}  // namespace

GeneratorId GeneratorId::yspec(int j, int k, int m, int rank) {
  if (rank < 0) throw std::invalid_argument("rank must be >= 0");
  const int period = rank + 1;
  const int q = floor_div(j, period);
  return {Family::Yspec, j - q * period, k, m + q};
}

std::string GeneratorId::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::Y: os << "Y[" << i0 << ',' << i1 << ']'; break;
    case Family::Ytilde: os << "Yt[" << i0 << ',' << i1 << ']'; break;
    case Family::Yspec: os << "y[" << i0 << ';' << i1 << ',' << i2 << ']'; break;
  }
  return os.str();
}

NCMonomial NCMonomial::generator(const GeneratorId& g, int exponent) {
  NCMonomial m;
  if (exponent == 0) return m;
  if (g.family == Family::Ytilde && g.i0 != 0)
    merge_into(m.exponents_, ytilde_expansion(g.i0, g.i1), exponent);
  else
    m.exponents_.emplace_back(g, exponent);
  return m;
}

NCMonomial NCMonomial::shift(int k) {
  NCMonomial m;
  m.s_power_ = k;
  return m;
}

NCMonomial NCMonomial::raw(Scalar coeff, ExponentMap exponents, int s_power) {
  NCMonomial m(std::move(coeff));
  std::sort(exponents.begin(), exponents.end());
  for (const auto& [g, e] : exponents) merge_one(m.exponents_, g, e);
  m.s_power_ = s_power;
  return m;
}

bool NCMonomial::is_canonical() const {
  for (const auto& [g, e] : exponents_)
    if (g.family == Family::Ytilde && g.i0 != 0) return false;
  return true;
}

NCMonomial NCMonomial::inverse() const {
  NCMonomial m(coeff_.inverse());
  ExponentMap neg;
  merge_into(neg, exponents_, -1);
  m.exponents_ = sigma_exponents(neg, -s_power_);
  m.s_power_ = -s_power_;
  return m;
}

NCMonomial NCMonomial::commutative_part() const {
  NCMonomial m = *this;
  m.s_power_ = 0;
  return m;
}

std::string NCMonomial::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [g, e] : exponents_)
    parts.push_back(e == 1 ? g.to_string() : g.to_string() + "^" + std::to_string(e));
  if (s_power_ != 0) parts.push_back("S^" + std::to_string(s_power_));
  std::string body;
  for (const auto& p : parts) body += (body.empty() ? "" : "*") + p;
  if (body.empty()) return coeff_.to_string();
  if (coeff_ == Scalar(1)) return body;
  if (coeff_ == Scalar(-1)) return "-" + body;
  if (coeff_.terms().size() == 1) return coeff_.to_string() + "*" + body;
  return "(" + coeff_.to_string() + ")*" + body;
}

NCMonomial sigma(const GeneratorId& g, int k) {
  switch (g.family) {
    case Family::Y: return NCMonomial::generator(GeneratorId::y(g.i0 + k, g.i1 + k));
    case Family::Ytilde: return NCMonomial::generator(GeneratorId::ytilde(g.i0 - k, g.i1));
    case Family::Yspec: return NCMonomial::generator({Family::Yspec, g.i0, g.i1 - k, g.i2});
  }
  throw std::logic_error("unknown generator family");
}

NCMonomial sigma(const NCMonomial& m, int k) {
  NCMonomial out(m.coeff_);
  out.exponents_ = sigma_exponents(m.exponents_, k);
  out.s_power_ = m.s_power_;
  return out;
}

NCMonomial mono_mul(const NCMonomial& m1, const NCMonomial& m2) {
  NCMonomial out(m1.coeff_ * m2.coeff_);
  out.exponents_ = m1.exponents_;
  merge_into(out.exponents_, sigma_exponents(m2.exponents_, m1.s_power_));
  out.s_power_ = m1.s_power_ + m2.s_power_;
  return out;
}

NCMonomial canonicalize(const NCMonomial& m) {
  NCMonomial out(m.coeff_);
  out.s_power_ = m.s_power_;
  for (const auto& [g, e] : m.exponents_) {
    if (g.family == Family::Ytilde && g.i0 != 0)
      merge_into(out.exponents_, ytilde_expansion(g.i0, g.i1), e);
    else
      merge_one(out.exponents_, g, e);
  }
  return out;
}

std::optional<NCMonomial> rewrite_step(const NCMonomial& m, std::size_t position) {
  if (position >= m.exponents_.size()) return std::nullopt;
  const auto [g, e] = m.exponents_[position];
  if (g.family != Family::Ytilde || g.i0 == 0) return std::nullopt;
  const int a = g.i0, n = g.i1;
  NCMonomial out = m;
  out.exponents_.erase(out.exponents_.begin() + static_cast<std::ptrdiff_t>(position));
  if (a > 0) {
    merge_into(out.exponents_, {{GeneratorId::ytilde(a - 1, n), e}});
    merge_into(out.exponents_, {{GeneratorId::y(2 - a, n + 1 - a), e}});
    merge_into(out.exponents_, {{GeneratorId::y(1 - a, n + 1 - a), -e}});
  } else {
    merge_into(out.exponents_, {{GeneratorId::ytilde(a + 1, n), e}});
    merge_into(out.exponents_, {{GeneratorId::y(-a, n - a), e}});
    merge_into(out.exponents_, {{GeneratorId::y(1 - a, n - a), -e}});
  }
  return out;
}

NCMonomial relabel(const NCMonomial& m, const std::function<GeneratorId(const GeneratorId&)>& f) {
  NCMonomial out(m.coeff_);
  out.s_power_ = m.s_power_;
  for (const auto& [g, e] : m.exponents_) merge_one(out.exponents_, f(g), e);
  return out;
}

NCPoly::NCPoly(const NCMonomial& m) { add(m); }

void NCPoly::add(const NCMonomial& m) {
  if (m.coeff().is_zero()) return;
  Key key{m.exponents(), m.s_power()};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), m.coeff());
    return;
  }
  it->second += m.coeff();
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<NCMonomial> NCPoly::monomials() const {
  std::vector<NCMonomial> out;
  for (const auto& [key, c] : terms_) out.push_back(NCMonomial::raw(c, key.first, key.second));
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& m : o.monomials()) add(m);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& m : o.monomials()) add(NCMonomial::raw(-m.coeff(), m.exponents(), m.s_power()));
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& x : a.monomials())
    for (const auto& y : b.monomials()) out.add(mono_mul(x, y));
  return out;
}

NCPoly operator*(const Scalar& c, const NCPoly& p) {
  NCPoly out;
  for (const auto& m : p.monomials()) out.add(mono_mul(NCMonomial(c), m));
  return out;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& m : monomials()) s += (s.empty() ? "" : " + ") + m.to_string();
  return s;
}

}  // namespace ncjacobi
