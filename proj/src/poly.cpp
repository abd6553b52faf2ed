#include "supersmooth/poly.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace supersmooth {

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  auto append = [&out](const char* var, unsigned power) {
    if (power == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (power > 1) out += "^" + std::to_string(power);
  };
  append("x", m.x);
  append("y", m.y);
  return out;
}

// Sign-aware term rendering shared by BiPoly and UniPoly.
void append_term(std::string& out, const Rational& c, const std::string& mono) {
  const bool negative = c.sign() < 0;
  const Rational mag = c.abs();
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.str();
  } else if (mag == Rational(1)) {
    out += mono;
  } else {
    out += mag.str() + "*" + mono;
  }
}

}  // namespace

BiPoly::BiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{0, 0}, constant);
}

BiPoly::BiPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

BiPoly BiPoly::x() { return monomial(1, 0); }
BiPoly BiPoly::y() { return monomial(0, 1); }

BiPoly BiPoly::monomial(unsigned xp, unsigned yp, const Rational& coeff) {
  BiPoly out;
  out.add_term({xp, yp}, coeff);
  return out;
}

unsigned BiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational BiPoly::coeff(unsigned xp, unsigned yp) const {
  const auto it = terms_.find({xp, yp});
  return it == terms_.end() ? Rational(0) : it->second;
}

BiPoly BiPoly::homogeneous_part(unsigned degree) const {
  BiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.terms_.emplace(m, c);
  }
  return out;
}

bool BiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& kv) { return kv.first.degree() == d; });
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first, then descending power of x.
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first.x > b.first.x;
  });
  for (const auto& [m, c] : ordered) append_term(out, c, monomial_text(m));
  return out;
}

void BiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
  BiPoly product;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      product.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

BiPoly poly_arith(const BiPoly& a, const BiPoly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
  }
  return {};
}

BiPoly poly_scale(const BiPoly& a, const Rational& s) {
  if (s.is_zero()) return {};
  BiPoly::TermMap terms = a.terms();
  for (auto& [m, c] : terms) c *= s;
  return BiPoly(std::move(terms));
}

BiPoly poly_pow(const BiPoly& a, unsigned k) {
  BiPoly result(Rational(1));
  BiPoly base = a;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

BiPoly partial_derivative(const BiPoly& p, unsigned x_order, unsigned y_order) {
  BiPoly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    if (m.x < x_order || m.y < y_order) continue;
    out.emplace(Monomial{m.x - x_order, m.y - y_order},
                c * falling_factorial(m.x, x_order) * falling_factorial(m.y, y_order));
  }
  return BiPoly(std::move(out));
}

BiPoly directional_derivative(const BiPoly& p, const Ray& v) {
  return poly_scale(partial_derivative(p, 1, 0), v.dx()) +
         poly_scale(partial_derivative(p, 0, 1), v.dy());
}

BiPoly linear_form_power(const Rational& a, unsigned n) {
  // sum_k C(n,k) a^k x^k y^(n-k)
  BiPoly::TermMap terms;
  mpz_class binom = 1;
  for (unsigned k = 0; k <= n; ++k) {
    terms.emplace(Monomial{k, n - k}, Rational(binom) * a.pow(k));
    binom = binom * (n - k) / (k + 1);
  }
  return BiPoly(std::move(terms));
}

Rational evaluate(const BiPoly& p, const Rational& x, const Rational& y) {
  Rational sum;
  for (const auto& [m, c] : p.terms()) sum += c * x.pow(m.x) * y.pow(m.y);
  return sum;
}

double evaluate(const BiPoly& p, double x, double y) {
  double sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    sum += c.to_double() * std::pow(x, static_cast<double>(m.x)) *
           std::pow(y, static_cast<double>(m.y));
  }
  return sum;
}

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Rational(static_cast<unsigned long>(i));
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    std::string mono;
    if (i == 1) mono = "t";
    if (i > 1) mono = "t^" + std::to_string(i);
    append_term(out, coeffs_[i], mono);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

UniPoly restrict_to_ray(const BiPoly& p, const Ray& v) {
  std::vector<Rational> coeffs(p.total_degree() + 1);
  for (const auto& [m, c] : p.terms()) {
    coeffs[m.degree()] += c * v.dx().pow(m.x) * v.dy().pow(m.y);
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace supersmooth
