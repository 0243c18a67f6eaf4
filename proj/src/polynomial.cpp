#include "schubert/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace schubert {

namespace {

int total_degree(const Polynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool Polynomial::GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(std::size_t variables, Integer c) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw std::out_of_range("Polynomial::variable: index out of range");
  Polynomial p(variables);
  Exponents e(variables, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

Integer Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Exponents& e, Integer c) {
  if (e.size() != variables_) throw std::invalid_argument("Polynomial: exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial out(variables_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

Polynomial Polynomial::sign_normalized() const {
  if (!terms_.empty() && terms_.begin()->second < 0) return -*this;
  return *this;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != variables_) throw std::invalid_argument("substitute: one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().variables();
  for (const auto& img : images)
    if (img.variables() != target) throw std::invalid_argument("substitute: images in different rings");
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
  Polynomial out = constant(variables_, 1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != variables_) throw std::invalid_argument("to_string: one name per variable");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer magnitude = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += names[i];
      if (e[i] > 1) monomial += '^' + std::to_string(e[i]);
    }
    if (monomial.empty())
      out += std::to_string(magnitude);
    else if (magnitude == 1)
      out += monomial;
    else
      out += std::to_string(magnitude) + '*' + monomial;
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(variables_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (variables_ != other.variables_) throw std::invalid_argument("Polynomial: variable count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

Polynomial operator*(Integer c, const Polynomial& a) { return Polynomial::constant(a.variables(), c) * a; }

Polynomial complete_homogeneous(int m, int count, std::size_t variables) {
  if (m < 0 || count < 0 || static_cast<std::size_t>(count) > variables)
    throw std::invalid_argument("complete_homogeneous: bad arguments");
  if (m == 0) return Polynomial::constant(variables, 1);
  Polynomial out(variables);
  // Exponent vectors on the first `count` variables summing to m.
  Polynomial::Exponents e(variables, 0);
  auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == count - 1) {
      e[static_cast<std::size_t>(index)] = remaining;
      out.add_term(e, 1);
      e[static_cast<std::size_t>(index)] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<std::size_t>(index)] = k;
      self(self, index + 1, remaining - k);
    }
    e[static_cast<std::size_t>(index)] = 0;
  };
  if (count > 0) recurse(recurse, 0, m);
  return out;
}

}  // namespace schubert
