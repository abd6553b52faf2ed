#include "supersmooth/operator.hpp"

#include <numeric>

#include "supersmooth/errors.hpp"

namespace supersmooth {

OperatorPoly OperatorPoly::constant(std::size_t symbol_count, const Rational& c) {
  OperatorPoly out(symbol_count);
  out.add_term(Exponents(symbol_count, 0), c);
  return out;
}

OperatorPoly OperatorPoly::symbol(std::size_t symbol_count, std::size_t index, const Rational& c) {
  OperatorPoly out(symbol_count);
  Exponents e(symbol_count, 0);
  e.at(index) = 1;
  out.add_term(e, c);
  return out;
}

Rational OperatorPoly::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool OperatorPoly::is_homogeneous_of_degree(unsigned degree) const {
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0U) != degree) return false;
  }
  return true;
}

void OperatorPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != symbols_) throw std::invalid_argument("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator*=(const OperatorPoly& rhs) {
  if (rhs.symbols_ != symbols_) throw std::invalid_argument("symbol count mismatch");
  OperatorPoly product(symbols_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(symbols_);
      for (std::size_t i = 0; i < symbols_; ++i) e[i] = ea[i] + eb[i];
      product.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

std::string OperatorPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "D" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      out += mag == Rational(1) ? mono : mag.str() + "*" + mono;
    }
  }
  return out;
}

PowerOperatorExpansion expand_power_operator(std::span<const Ray> rays, unsigned n) {
  if (n == 0 || rays.size() != n + 2) {
    throw ArityError("expansion needs n >= 1 and n+2 rays; got n = " + std::to_string(n) +
                     " with " + std::to_string(rays.size()) + " rays");
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      if (are_collinear(rays[i], rays[j])) {
        throw SingularDecomposition("rays " + rays[i].str() + " and " + rays[j].str() +
                                    " are collinear");
      }
    }
  }
  const std::size_t symbols = n + 1;  // D_{v2} .. D_{v_{n+2}}
  PowerOperatorExpansion out;
  out.product = OperatorPoly::constant(symbols, Rational(1));
  out.gamma = Rational(1);
  for (std::size_t j = 2; j < rays.size(); ++j) {
    const Decomposition d = decompose_direction(rays[0], rays[1], rays[j]);
    out.coefficients.push_back(d);
    out.product *= OperatorPoly::symbol(symbols, 0, d.alpha) + OperatorPoly::symbol(symbols, j - 1, d.beta);
    out.gamma *= d.beta;
  }

  // Every term of the product either carries a D_{v2} factor (goes to p) or
  // is the single pure product of D_{v3}..D_{v_{n+2}}.
  out.p = OperatorPoly(symbols);
  OperatorPoly rest(symbols);
  for (const auto& [e, c] : out.product.terms()) {
    if (e[0] > 0) {
      auto lowered = e;
      --lowered[0];
      out.p.add_term(lowered, c);
    } else {
      rest.add_term(e, c);
    }
  }
  if (!(rest == tail_operator(out))) {
    throw std::logic_error("operator expansion did not split into D_v2 * p + gamma * tail");
  }
  return out;
}

PowerOperatorExpansion expand_power_operator(const FanPartition& fan, unsigned n) {
  return expand_power_operator(std::span<const Ray>(fan.rays()), n);
}

OperatorPoly tail_operator(const PowerOperatorExpansion& e) {
  const std::size_t symbols = e.product.symbol_count();
  OperatorPoly::Exponents ex(symbols, 1);
  ex[0] = 0;
  OperatorPoly out(symbols);
  out.add_term(ex, e.gamma);
  return out;
}

OperatorPoly split_form(const PowerOperatorExpansion& e) {
  const std::size_t symbols = e.product.symbol_count();
  return OperatorPoly::symbol(symbols, 0) * e.p + tail_operator(e);
}

std::map<std::size_t, Ray> expansion_directions(std::span<const Ray> rays) {
  std::map<std::size_t, Ray> out;
  for (std::size_t i = 1; i < rays.size(); ++i) out.emplace(i - 1, rays[i]);
  return out;
}

BiPoly apply_operator(const OperatorPoly& op, const std::map<std::size_t, Ray>& directions,
                      const BiPoly& q) {
  for (const auto& [e, c] : op.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0 && !directions.contains(i)) {
        throw MissingDirection("no direction for operator symbol " + std::to_string(i));
      }
    }
  }
  BiPoly out;
  for (const auto& [e, c] : op.terms()) {
    BiPoly term = q;
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      for (unsigned rep = 0; rep < e[i]; ++rep) term = directional_derivative(term, directions.at(i));
    }
    out += poly_scale(term, c);
  }
  return out;
}

}  // namespace supersmooth
