#include "tamari/verify.hpp"

#include "tamari/decomp.hpp"
#include "tamari/errors.hpp"
#include "tamari/flows.hpp"

namespace tamari {

const std::vector<IntervalPoset>& PosetEnumerator::posets_of_size(int n) {
  if (n < 0) throw DomainError(ErrorCode::OutOfRange, "negative size");
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;
  if (n == 0) {
    return cache_.emplace(0, std::vector<IntervalPoset>{IntervalPoset{}}).first->second;
  }

  std::vector<IntervalPoset> out;
  for (int s1 = 0; s1 <= n - 1; ++s1) {
    int s2 = n - 1 - s1;
    // Sizes below n are filled before the loop body uses them.
    const auto& left = posets_of_size(s1);
    const auto& right = posets_of_size(s2);
    for (const auto& i1 : left) {
      for (const auto& i2 : right) {
        int top = stat_trees(i2);
        for (int r = 0; r <= top; ++r) out.push_back(lc_compose(i1, i2, r));
      }
    }
  }
  return cache_.emplace(n, std::move(out)).first->second;
}

std::vector<IntervalPoset> enumerate_interval_posets(int n) {
  PosetEnumerator enumerator;
  return enumerator.posets_of_size(n);
}

BigInt count_formula(int n) {
  if (n < 1) throw DomainError(ErrorCode::OutOfRange, "count_formula needs n >= 1");
  BigInt numerator = BigInt(2) * binomial(4ll * n + 1, n - 1);
  auto [q, rem] = numerator.divrem(static_cast<std::uint64_t>(n) * (n + 1));
  if (rem != 0) {
    throw DomainError(ErrorCode::NonIntegerResult,
                      "interval count prefactor did not divide exactly");
  }
  return q;
}

SizeReport count_report(int n, PosetEnumerator& enumerator) {
  SizeReport report;
  report.n = n;
  report.enumerated = BigInt(static_cast<long long>(enumerator.posets_of_size(n).size()));
  report.formula = count_formula(n);
  report.match = report.enumerated == report.formula;
  return report;
}

TriPoly phi(int max_n) {
  PosetEnumerator enumerator;
  return phi(max_n, enumerator);
}

TriPoly phi(int max_n, PosetEnumerator& enumerator) {
  TriPoly total;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& poset : enumerator.posets_of_size(n)) {
      total = total + TriPoly::term(
          Monomial{n, stat_trees(poset), stat_ir(poset)}, BigInt(1));
    }
  }
  return total;
}

bool check_symmetry(int max_n) {
  TriPoly p = phi(max_n);
  return p == p.swap_xz();
}

std::pair<bool, bool> check_functional_equations(int max_n) {
  TriPoly big_phi = phi(max_n);
  TriPoly one = TriPoly::constant(1);
  TriPoly x = TriPoly::variable(Var::X);
  TriPoly xyz = x * TriPoly::variable(Var::Y) * TriPoly::variable(Var::Z);
  TriPoly xy = x * TriPoly::variable(Var::Y);

  TriPoly phi_x1 = big_phi.substitute_one(Var::Z);   // Phi(y;x,1)
  TriPoly phi_1z = big_phi.substitute_one(Var::X);   // Phi(y;1,z)
  TriPoly phi_11 = phi_x1.substitute_one(Var::X);    // Phi(y;1,1)

  TriPoly frac_z = (x * big_phi - phi_1z).div_x_minus_1();
  TriPoly frac_1 = (x * phi_x1 - phi_11).div_x_minus_1();

  TriPoly rhs4 = (one + xyz * phi_x1 * frac_z).truncate_y(max_n);
  TriPoly rhs7 =
      (one + xyz * frac_z + xy * (big_phi - one) * frac_1).truncate_y(max_n);

  return {rhs4 == big_phi, rhs7 == big_phi};
}

std::vector<std::pair<int, bool>> check_beta_involution(int max_n) {
  std::vector<std::pair<int, bool>> results;
  PosetEnumerator enumerator;
  for (int n = 0; n <= max_n; ++n) {
    bool ok = true;
    for (const auto& poset : enumerator.posets_of_size(n)) {
      IntervalPoset image = beta(poset);
      if (beta(image) != poset) {
        ok = false;
        break;
      }
      // The reversed recursion (IR-decompose, LC-recompose) must agree.
      if (beta_inverse(poset) != image) {
        ok = false;
        break;
      }
    }
    results.emplace_back(n, ok);
  }
  return results;
}

std::vector<PlanarForest> enumerate_forests(int n) {
  std::vector<PlanarForest> forests;
  for (const auto& tree : enumerate_trees(n)) {
    forests.push_back(dec_forest_of_tree(tree));
  }
  return forests;
}

bool check_flow_theorem(int max_forest_size) {
  for (int n = 1; n <= max_forest_size; ++n) {
    auto trees = enumerate_trees(n);
    for (const auto& forest : enumerate_forests(n)) {
      BinaryTree top = forest_to_upper_tree(forest);
      std::size_t ideal = 0;
      for (const auto& tree : trees) {
        if (tamari_leq(tree, top)) ++ideal;
      }
      if (enumerate_closed_flows(forest).size() != ideal) return false;
    }
  }
  return true;
}

}  // namespace tamari
