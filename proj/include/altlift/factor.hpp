#ifndef ALTLIFT_FACTOR_HPP_
#define ALTLIFT_FACTOR_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "datasets.hpp"
#include "egroup.hpp"
#include "error.hpp"
#include "numtheory.hpp"

namespace altlift {

  // Fixed points of a (order k) with rotation angle 2π u^-1/k:
  // |C_E(a)| Σ 1/m_j over entries with k | m_j and (σ_j, x_j)^{m_j u/k} ~ a.
  inline Rational lemma_fixed_count_rational(const EDataSet& D, const GroupElement& a, std::int64_t u,
                                             std::int64_t k) {
    if (element_order(D.spec, a) != k) {
      throw DomainError("lemma_fixed_count: " + a.to_string() + " does not have order " + std::to_string(k));
    }
    if (std::gcd(mod(u, k), k) != 1) {
      throw DomainError("lemma_fixed_count: " + std::to_string(u) + " is not a unit mod " + std::to_string(k));
    }
    ClassKey target = class_key(D.spec, a);
    Rational s(0);
    for (const auto& e : D.entries) {
      std::int64_t mj = element_order(D.spec, e.elem);
      if (mj % k != 0) {
        continue;
      }
      if (class_key(D.spec, power(D.spec, e.elem, mj / k * mod(u, k))) == target) {
        s += Rational(e.mult, mj);
      }
    }
    return s * Rational(centralizer_order(D.spec, a));
  }

  inline std::int64_t lemma_fixed_count(const EDataSet& D, const GroupElement& a, std::int64_t u, std::int64_t k) {
    Rational f = lemma_fixed_count_rational(D, a, u, k);
    if (f.denominator() != 1) {
      throw InconsistencyError("fixed-point count " + std::to_string(f.numerator()) + "/"
                               + std::to_string(f.denominator()) + " for " + a.to_string() + " is not an integer");
    }
    return f.numerator();
  }

  struct FixedPointRow {
    std::int64_t d = 0;     // divisor d_i of |a|
    std::int64_t u = 0;     // unit mod d_i
    std::int64_t total = 0; // |F|: all fixed points of a^{|a|/d_i} with this angle
    std::int64_t fresh = 0; // |f|: those not fixed by a larger power
  };

  struct FixedPointTable {
    GroupElement element;
    std::int64_t order = 1;
    std::vector<FixedPointRow> rows;  // divisors descending, units ascending

    const FixedPointRow& at(std::int64_t u, std::int64_t d) const {
      for (const auto& r : rows) {
        if (r.d == d && r.u == mod(u, d)) {
          return r;
        }
      }
      throw DomainError("fixed-point table has no row (" + std::to_string(u) + "," + std::to_string(d) + ")");
    }
  };

  inline FixedPointTable fixed_point_table(const EDataSet& D, const GroupElement& a) {
    check_element(D.spec, a);
    FixedPointTable t{a, element_order(D.spec, a), {}};
    const std::int64_t d = t.order;
    auto divs = divisors(d);
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> fresh;
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
      std::int64_t di = *it;
      if (di < 2) {
        continue;
      }
      GroupElement b = power(D.spec, a, d / di);
      for (std::int64_t u : units(di)) {
        FixedPointRow row{di, u, lemma_fixed_count(D, b, u, di), 0};
        std::int64_t f = row.total;
        for (std::int64_t dp : divs) {
          if (dp == di || dp % di != 0) {
            continue;
          }
          for (std::int64_t up : units(dp)) {
            if (up % di == u) {
              f -= fresh[{up, dp}];
            }
          }
        }
        if (f < 0) {
          throw InconsistencyError("negative count of new fixed points at (" + std::to_string(u) + ","
                                   + std::to_string(di) + ") for " + a.to_string());
        }
        row.fresh = f;
        fresh[{u, di}] = f;
        t.rows.push_back(row);
      }
    }
    return t;
  }

  inline std::int64_t new_fixed_count(const EDataSet& D, const GroupElement& a, std::int64_t u, std::int64_t di) {
    std::int64_t d = element_order(D.spec, a);
    if (di < 2 || d % di != 0) {
      throw DomainError("new_fixed_count: " + std::to_string(di) + " is not a divisor >= 2 of " + std::to_string(d));
    }
    if (std::gcd(mod(u, di), di) != 1) {
      throw DomainError("new_fixed_count: " + std::to_string(u) + " is not a unit mod " + std::to_string(di));
    }
    return fixed_point_table(D, a).at(u, di).fresh;
  }

  // The cyclic data set of the subgroup generated by a: pair (u^-1, d_i)
  // with multiplicity (d_i/d) |f(u, d_i)|, quotient genus from Riemann-Hurwitz.
  inline CyclicDataSet cyclic_factor(const EDataSet& D, const GroupElement& a) {
    std::int64_t d = element_order(D.spec, a);
    if (d == 1) {
      throw DomainError("cyclic_factor: the identity has no cyclic factor");
    }
    auto g = integral(D.genus_rational());
    if (!g) {
      throw InconsistencyError("cyclic_factor: data set has non-integral genus");
    }
    FixedPointTable t = fixed_point_table(D, a);
    CyclicDataSet out{d, 0, {}};
    Rational branch(0);
    for (const auto& row : t.rows) {
      if (row.fresh == 0) {
        continue;
      }
      if ((row.d * row.fresh) % d != 0) {
        throw InconsistencyError("cyclic_factor: multiplicity " + std::to_string(row.d) + "/" + std::to_string(d)
                                 + "*" + std::to_string(row.fresh) + " is not an integer");
      }
      std::int64_t mult = row.d * row.fresh / d;
      out.pairs.push_back({inverse_mod(row.u, row.d), row.d, mult});
      branch += Rational(mult) * (Rational(1) - Rational(1, row.d));
    }
    // 2 - 2g = d (2 - 2 g0 - branch)
    Rational g0 = (Rational(2) - Rational(2 - 2 * *g, d) - branch) / Rational(2);
    if (g0.denominator() != 1 || g0 < 0) {
      throw InconsistencyError("cyclic_factor: quotient genus " + std::to_string(g0.numerator()) + "/"
                               + std::to_string(g0.denominator()) + " is not a non-negative integer");
    }
    out.g0 = g0.numerator();
    return out.normalized();
  }

}  // namespace altlift

#endif  // ALTLIFT_FACTOR_HPP_
