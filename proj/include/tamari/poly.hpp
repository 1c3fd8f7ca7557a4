#pragma once

#include <compare>
#include <map>
#include <string>

#include "tamari/bigint.hpp"

namespace tamari {

enum class Var { Y, X, Z };

// Exponent triple of a monomial y^y x^x z^z. The comparison order (y, then x,
// then z) is the canonical term order used everywhere, including rendering.
struct Monomial {
  int y = 0;
  int x = 0;
  int z = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse exact-integer polynomial in y, x, z. Stored terms never have a zero
// coefficient. Immutable in spirit: all operations return new values.
class TriPoly {
 public:
  TriPoly() = default;

  static TriPoly constant(long long c);
  static TriPoly variable(Var v);
  static TriPoly term(Monomial m, BigInt coeff);

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  BigInt coeff(Monomial m) const;
  bool is_zero() const { return terms_.empty(); }

  TriPoly operator+(const TriPoly& other) const;
  TriPoly operator-(const TriPoly& other) const;
  TriPoly operator*(const TriPoly& other) const;

  // Sets the given variable to 1 and merges like terms. Only x and z are
  // meaningful substitution targets.
  TriPoly substitute_one(Var v) const;

  // Exact quotient by (x - 1), synthetic division in x per (y, z) slice.
  // Requires the polynomial to vanish identically at x = 1.
  TriPoly div_x_minus_1() const;

  // Drops every term whose y-exponent exceeds max_degree.
  TriPoly truncate_y(int max_degree) const;

  TriPoly swap_xz() const;

  bool operator==(const TriPoly& other) const = default;

  // Canonical rendering: `<coeff>*y^a*x^b*z^c` per term, '+'-joined in term
  // order; exponent 1 omits the `^`, exponent 0 omits the variable.
  std::string to_string() const;

 private:
  void add_term(Monomial m, const BigInt& coeff);

  std::map<Monomial, BigInt> terms_;
};

// Sparse exact-integer polynomial in the single variable u.
class UniPoly {
 public:
  UniPoly() = default;

  static UniPoly term(int exponent, BigInt coeff);

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  UniPoly operator+(const UniPoly& other) const;
  UniPoly operator*(const UniPoly& other) const;

  bool operator==(const UniPoly& other) const = default;
  std::string to_string() const;

 private:
  void add_term(int exponent, const BigInt& coeff);

  std::map<int, BigInt> terms_;
};

// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

}  // namespace tamari
