#include "tamari/poly.hpp"

#include <utility>

#include "tamari/errors.hpp"

namespace tamari {

TriPoly TriPoly::constant(long long c) { return term(Monomial{}, BigInt(c)); }

TriPoly TriPoly::variable(Var v) {
  Monomial m;
  switch (v) {
    case Var::Y: m.y = 1; break;
    case Var::X: m.x = 1; break;
    case Var::Z: m.z = 1; break;
  }
  return term(m, BigInt(1));
}

TriPoly TriPoly::term(Monomial m, BigInt coeff) {
  TriPoly p;
  p.add_term(m, coeff);
  return p;
}

BigInt TriPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt{} : it->second;
}

void TriPoly::add_term(Monomial m, const BigInt& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TriPoly TriPoly::operator+(const TriPoly& other) const {
  TriPoly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

TriPoly TriPoly::operator-(const TriPoly& other) const {
  TriPoly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

TriPoly TriPoly::operator*(const TriPoly& other) const {
  TriPoly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) {
      out.add_term(Monomial{m1.y + m2.y, m1.x + m2.x, m1.z + m2.z}, c1 * c2);
    }
  }
  return out;
}

TriPoly TriPoly::substitute_one(Var v) const {
  if (v != Var::X && v != Var::Z) {
    throw DomainError(ErrorCode::UnknownVariable,
                      "substitute_one: only x and z can be set to 1");
  }
  TriPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    if (v == Var::X) reduced.x = 0; else reduced.z = 0;
    out.add_term(reduced, c);
  }
  return out;
}

TriPoly TriPoly::div_x_minus_1() const {
  // Per (y, z) slice, p(x) = (x-1) q(x) + p(1) with q read off by synthetic
  // division: t_d = c_d, t_b = c_b + t_{b+1}, q_b = t_{b+1}.
  std::map<std::pair<int, int>, std::vector<BigInt>> slices;
  for (const auto& [m, c] : terms_) {
    auto& slice = slices[{m.y, m.z}];
    if (static_cast<int>(slice.size()) <= m.x) slice.resize(m.x + 1);
    slice[m.x] = c;
  }

  TriPoly out;
  for (const auto& [yz, slice] : slices) {
    BigInt running;
    for (std::size_t b = slice.size(); b-- > 0;) {
      running += slice[b];
      if (b > 0) {
        out.add_term(Monomial{yz.first, static_cast<int>(b) - 1, yz.second}, running);
      }
    }
    if (!running.is_zero()) {
      throw DomainError(ErrorCode::NotDivisible,
                        "div_x_minus_1: polynomial does not vanish at x = 1");
    }
  }
  return out;
}

TriPoly TriPoly::truncate_y(int max_degree) const {
  TriPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.y <= max_degree) out.add_term(m, c);
  }
  return out;
}

TriPoly TriPoly::swap_xz() const {
  TriPoly out;
  for (const auto& [m, c] : terms_) out.add_term(Monomial{m.y, m.z, m.x}, c);
  return out;
}

namespace {

void append_factor(std::string& s, const char* name, int exp) {
  if (exp == 0) return;
  s += '*';
  s += name;
  if (exp != 1) {
    s += '^';
    s += std::to_string(exp);
  }
}

}  // namespace

std::string TriPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    append_factor(out, "y", m.y);
    append_factor(out, "x", m.x);
    append_factor(out, "z", m.z);
  }
  return out;
}

UniPoly UniPoly::term(int exponent, BigInt coeff) {
  UniPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void UniPoly::add_term(int exponent, const BigInt& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  UniPoly out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
  UniPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

std::string UniPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    append_factor(out, "u", e);
  }
  return out;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return BigInt{};
  if (k > n - k) k = n - k;
  BigInt result(1);
  for (long long i = 1; i <= k; ++i) {
    result *= BigInt(n - k + i);
    auto [q, r] = result.divrem(static_cast<std::uint64_t>(i));
    if (r != 0) {
      throw DomainError(ErrorCode::NonIntegerResult,
                        "binomial: non-exact intermediate division");
    }
    result = std::move(q);
  }
  return result;
}

}  // namespace tamari
