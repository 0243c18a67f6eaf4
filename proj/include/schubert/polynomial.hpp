#pragma once

// Multivariate polynomials with integer coefficients over a fixed number of
// variables. Terms are kept in graded-lex order (higher total degree first,
// then lexicographically larger exponent vectors first).

#include <map>
#include <string>
#include <vector>

#include "schubert/linear_algebra.hpp"

namespace schubert {

class Polynomial {
 public:
  using Exponents = std::vector<int>;

  struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Integer, GradedLexGreater>;

  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}

  static Polynomial constant(std::size_t variables, Integer c);
  static Polynomial variable(std::size_t variables, std::size_t index);

  std::size_t variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  Integer coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, Integer c);

  Polynomial homogeneous_part(int d) const;
  /// Leading coefficient made positive.
  Polynomial sign_normalized() const;
  /// Replaces variable i by images[i]; all images share one target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Polynomial pow(int k) const;

  std::string to_string(const std::vector<std::string>& names) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Integer c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const Polynomial& other) const;

  std::size_t variables_;
  TermMap terms_;
};

/// h_m(x_1, ..., x_count) in a ring with `variables` variables.
Polynomial complete_homogeneous(int m, int count, std::size_t variables);

}  // namespace schubert
