#ifndef ALTLIFT_DATASETS_HPP_
#define ALTLIFT_DATASETS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "egroup.hpp"
#include "error.hpp"
#include "numtheory.hpp"
#include "perm.hpp"

namespace altlift {

  struct Issue {
    std::string code;
    std::string message;
  };

  // Outcome of a data-set check: the genus when every condition holds,
  // otherwise the list of violated conditions. indeterminate marks a
  // search that ran out of budget; it is never reported as valid.
  struct ValidationResult {
    std::optional<std::int64_t> genus;
    std::vector<Issue> issues;
    bool indeterminate = false;

    bool ok() const { return issues.empty() && !indeterminate && genus.has_value(); }
  };

  inline std::string join_issues(const std::vector<Issue>& issues) {
    std::string out;
    for (const auto& is : issues) {
      out += (out.empty() ? "" : "; ") + is.code + ": " + is.message;
    }
    return out;
  }

  struct Signature {
    std::int64_t g0 = 0;
    std::vector<std::int64_t> periods;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;

    Signature sorted() const {
      Signature s = *this;
      std::sort(s.periods.begin(), s.periods.end());
      return s;
    }

    std::string to_string() const {
      std::string out = "(" + std::to_string(g0) + ";";
      if (periods.empty()) {
        out += "-";
      }
      for (std::size_t k = 0; k < periods.size(); ++k) {
        out += (k ? "," : "") + std::to_string(periods[k]);
      }
      return out + ")";
    }
  };

  // g with (2-2g)/|H| = 2 - 2 g0 - Σ (1 - 1/m_j).
  inline Rational riemann_hurwitz_genus(std::int64_t group_order, const Signature& sig) {
    Rational s(2 * sig.g0 - 2);
    for (std::int64_t p : sig.periods) {
      if (p < 2) {
        throw DomainError("riemann_hurwitz_genus: period " + std::to_string(p) + " < 2");
      }
      s += Rational(1) - Rational(1, p);
    }
    return Rational(1) + Rational(group_order, 2) * s;
  }

  inline std::optional<std::int64_t> integral(const Rational& q) {
    if (q.denominator() != 1) {
      return std::nullopt;
    }
    return q.numerator();
  }

  // ---- cyclic data sets ----------------------------------------------------

  struct CyclicPair {
    std::int64_t c = 1;
    std::int64_t nj = 2;
    std::int64_t mult = 1;

    friend bool operator==(const CyclicPair&, const CyclicPair&) = default;
  };

  struct CyclicDataSet {
    std::int64_t n = 1;
    std::int64_t g0 = 0;
    std::vector<CyclicPair> pairs;

    // Equal pairs merged, sorted by period descending then residue
    // ascending, zero multiplicities dropped.
    CyclicDataSet normalized() const {
      std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> acc;
      for (const auto& p : pairs) {
        acc[{-p.nj, p.c}] += p.mult;
      }
      CyclicDataSet out{n, g0, {}};
      for (const auto& [key, mult] : acc) {
        if (mult != 0) {
          out.pairs.push_back({key.second, -key.first, mult});
        }
      }
      return out;
    }

    std::int64_t cone_points() const {
      std::int64_t r = 0;
      for (const auto& p : pairs) {
        r += p.mult;
      }
      return r;
    }

    Signature signature() const {
      Signature s{g0, {}};
      for (const auto& p : pairs) {
        for (std::int64_t k = 0; k < p.mult; ++k) {
          s.periods.push_back(p.nj);
        }
      }
      return s;
    }

    // The data set of the generator's u-th power for a unit u mod n: every
    // rotation residue is divided by u.
    CyclicDataSet power(std::int64_t u) const {
      CyclicDataSet out{n, g0, {}};
      for (const auto& p : pairs) {
        out.pairs.push_back({mod(p.c * inverse_mod(u, p.nj), p.nj), p.nj, p.mult});
      }
      return out.normalized();
    }

    std::string to_string() const {
      CyclicDataSet d = normalized();
      std::string out = "(" + std::to_string(n) + "," + std::to_string(g0) + ";";
      if (d.pairs.empty()) {
        out += "-";
      }
      for (std::size_t k = 0; k < d.pairs.size(); ++k) {
        const auto& p = d.pairs[k];
        out += (k ? "," : "") + std::string("(") + std::to_string(p.c) + "," + std::to_string(p.nj) + ")";
        if (p.mult != 1) {
          out += "^[" + std::to_string(p.mult) + "]";
        }
      }
      return out + ")";
    }

    friend bool operator==(const CyclicDataSet& a, const CyclicDataSet& b) {
      CyclicDataSet x = a.normalized(), y = b.normalized();
      return x.n == y.n && x.g0 == y.g0 && x.pairs == y.pairs;
    }
  };

  inline ValidationResult validate_cyclic(const CyclicDataSet& D) {
    ValidationResult res;
    auto bad = [&](const std::string& code, const std::string& msg) { res.issues.push_back({code, msg}); };
    if (D.n < 1) {
      bad("degree", "n must be positive");
      return res;
    }
    if (D.g0 < 0) {
      bad("g0", "orbifold genus must be non-negative");
    }
    std::vector<std::int64_t> periods;
    std::int64_t sum = 0;
    for (const auto& p : D.pairs) {
      std::string tag = "(" + std::to_string(p.c) + "," + std::to_string(p.nj) + ")";
      if (p.mult < 0) {
        bad("multiplicity", tag + " has negative multiplicity");
        continue;
      }
      if (p.nj < 2 || D.n % p.nj != 0) {
        bad("period", tag + ": period must be at least 2 and divide " + std::to_string(D.n));
        continue;
      }
      if (p.c < 1 || p.c >= p.nj || std::gcd(p.c, p.nj) != 1) {
        bad("residue", tag + ": residue must be a unit mod " + std::to_string(p.nj));
      }
      for (std::int64_t k = 0; k < p.mult; ++k) {
        periods.push_back(p.nj);
      }
      sum = mod(sum + mod((D.n / p.nj) * mod(p.c, p.nj), D.n) * mod(p.mult, D.n), D.n);
    }
    if (!res.issues.empty()) {
      return res;
    }
    // Every leave-one-out lcm must take the same value N, and N = n on the sphere.
    std::sort(periods.begin(), periods.end());
    std::optional<std::int64_t> common;
    bool lcm_ok = true;
    for (std::size_t j = 0; j < periods.size() && lcm_ok; ++j) {
      if (j > 0 && periods[j] == periods[j - 1]) {
        continue;
      }
      std::int64_t l = 1;
      for (std::size_t k = 0; k < periods.size(); ++k) {
        if (k != j) {
          l = std::lcm(l, periods[k]);
        }
      }
      if (common && *common != l) {
        lcm_ok = false;
      }
      common = l;
    }
    if (!lcm_ok) {
      bad("lcm", "the lcm of the periods with one removed depends on which one is removed");
    } else if (D.g0 == 0 && common && *common != D.n) {
      bad("lcm", "on a sphere quotient the leave-one-out lcm must equal n=" + std::to_string(D.n)
                     + ", got " + std::to_string(*common));
    }
    if (sum != 0) {
      bad("sum", "Σ (n/n_j) c_j ≡ " + std::to_string(sum) + " (mod " + std::to_string(D.n) + "), not 0");
    }
    Rational g = riemann_hurwitz_genus(D.n, Signature{D.g0, periods});
    auto gi = integral(g);
    if (!gi) {
      bad("genus", "Riemann-Hurwitz genus " + std::to_string(g.numerator()) + "/"
                       + std::to_string(g.denominator()) + " is not an integer");
    } else if (*gi < 0) {
      bad("genus", "Riemann-Hurwitz genus " + std::to_string(*gi) + " is negative");
    }
    if (res.issues.empty()) {
      res.genus = *gi;
    }
    return res;
  }

  // ---- E-data sets ---------------------------------------------------------

  struct Entry {
    GroupElement elem;
    std::int64_t mj = 0;  // order of elem
    std::int64_t tj = 0;  // order of its residue in Z_m
    std::int64_t mult = 1;
  };

  enum class Specialization { alternating, symmetric, general };

  inline const char* to_string(Specialization s) {
    switch (s) {
      case Specialization::alternating:
        return "alternating";
      case Specialization::symmetric:
        return "symmetric";
      default:
        return "general";
    }
  }

  struct EDataSet {
    GroupSpec spec;
    std::int64_t g0 = 0;
    std::vector<Entry> entries;

    // same group, genus and element list; stated orders are not compared
    friend bool operator==(const EDataSet& a, const EDataSet& b) {
      return a.spec == b.spec && a.g0 == b.g0 && a.flat() == b.flat();
    }

    static EDataSet make(const GroupSpec& spec, std::int64_t g0, const std::vector<GroupElement>& elems) {
      EDataSet d{spec, g0, {}};
      for (const auto& e : elems) {
        d.entries.push_back({e, 0, 0, 1});
      }
      d.recompute_orders();
      return d;
    }

    void recompute_orders() {
      for (auto& e : entries) {
        e.mj = element_order(spec, e.elem);
        e.tj = additive_order(e.elem.x, spec.m);
      }
    }

    // The entries with multiplicities expanded, in stored order.
    std::vector<GroupElement> flat() const {
      std::vector<GroupElement> out;
      for (const auto& e : entries) {
        for (std::int64_t k = 0; k < e.mult; ++k) {
          out.push_back(e.elem);
        }
      }
      return out;
    }

    std::int64_t r() const {
      std::int64_t k = 0;
      for (const auto& e : entries) {
        k += e.mult;
      }
      return k;
    }

    Signature signature() const {
      Signature s{g0, {}};
      for (const auto& e : entries) {
        for (std::int64_t k = 0; k < e.mult; ++k) {
          s.periods.push_back(element_order(spec, e.elem));
        }
      }
      return s;
    }

    Rational genus_rational() const { return riemann_hurwitz_genus(spec.order(), signature()); }

    // Consecutive equal entries merged into multiplicities.
    EDataSet compressed() const {
      EDataSet d{spec, g0, {}};
      for (const auto& e : entries) {
        if (!d.entries.empty() && d.entries.back().elem == e.elem) {
          d.entries.back().mult += e.mult;
        } else {
          d.entries.push_back(e);
        }
      }
      return d;
    }

    std::string to_string() const {
      std::string out;
      if (spec.m == 1) {
        out = "(" + std::to_string(spec.n) + "," + std::to_string(g0) + ";";
      } else {
        out = "(" + spec.tuple_string() + "," + std::to_string(g0) + ";";
      }
      EDataSet d = compressed();
      if (d.entries.empty()) {
        out += "-";
      }
      for (std::size_t k = 0; k < d.entries.size(); ++k) {
        const auto& e = d.entries[k];
        std::int64_t mj = element_order(spec, e.elem);
        out += k ? "," : "";
        if (spec.m == 1) {
          out += "[" + e.elem.sigma.to_string() + ";" + std::to_string(mj) + "]";
        } else {
          out += "[" + e.elem.tuple_string() + ";" + std::to_string(mj) + ","
                 + std::to_string(additive_order(e.elem.x, spec.m)) + "]";
        }
        if (e.mult != 1) {
          out += "^[" + std::to_string(e.mult) + "]";
        }
      }
      return out + ")";
    }
  };

  inline Specialization specialize(const EDataSet& a) {
    if (a.spec.m == 1) {
      return Specialization::alternating;
    }
    if (a.spec.m == 2 && a.spec.i == 1) {
      return Specialization::symmetric;
    }
    return Specialization::general;
  }

  // Two handle images (h1, h2) with ∏ entries = [h2, h1] and the entries
  // together with h1, h2 generating E. nullopt if none exist; throws
  // IndeterminateError if a sampled search gives up.
  inline std::optional<std::pair<GroupElement, GroupElement>> find_torus_handles(const EDataSet& D,
                                                                                std::int64_t cap = search_cap()) {
    const GroupSpec& spec = D.spec;
    auto flat = D.flat();
    GroupElement P = product(spec, flat);
    if (!in_commutator_subgroup(spec, P)) {
      return std::nullopt;
    }
    auto generating_with = [&](const GroupElement& h1, const GroupElement& h2) {
      auto gens = flat;
      gens.push_back(h1);
      gens.push_back(h2);
      return generates(spec, gens);
    };
    if (!flat.empty() && generates(spec, flat)) {
      try {
        auto [a, b] = realize_commutator_in_e(spec, P, cap);
        return std::make_pair(b, a);
      } catch (const DomainError&) {
        // P is not a single commutator; fall through to the general search.
      }
    }
    const std::int64_t order = spec.order();
    if (order * order <= cap) {
      auto elems = all_elements(spec);
      for (const auto& h2 : elems) {
        for (const auto& h1 : elems) {
          if (commutator(spec, h2, h1) == P && generating_with(h1, h2)) {
            return std::make_pair(h1, h2);
          }
        }
      }
      return std::nullopt;
    }
    // Sampled: pick h1, then solve h2 h1 h2^-1 = P h1 through a conjugator
    // of the permutation images, adjusted by central residues.
    std::mt19937_64 rng(0x70e5ULL + static_cast<std::uint64_t>(order));
    for (std::int64_t k = 0; k < cap; ++k) {
      GroupElement h1 = random_element(spec, rng);
      GroupElement target = mul(spec, P, h1);
      Permutation s1 = sym_image(spec, h1), st = sym_image(spec, target);
      if (spec.i == 0) {
        auto c = detail::even_conjugator(s1, st);
        if (!c) {
          continue;
        }
        for (std::int64_t y = 0; y < spec.m; ++y) {
          GroupElement h2{*c, y};
          if (generating_with(h1, h2)) {
            return std::make_pair(h1, h2);
          }
        }
      } else {
        if (cycle_type(s1) != cycle_type(st)) {
          continue;
        }
        Permutation c = conjugator(s1, st);
        std::int64_t par = is_even(c) ? 0 : 1;
        for (std::int64_t y = par; y < spec.m; y += 2) {
          GroupElement h2 = from_sym(spec, c, y);
          if (generating_with(h1, h2)) {
            return std::make_pair(h1, h2);
          }
        }
      }
    }
    throw IndeterminateError("torus handles: no witness among " + std::to_string(cap) + " samples");
  }

  inline ValidationResult validate_edataset(const EDataSet& D, std::int64_t cap = search_cap()) {
    ValidationResult res;
    auto bad = [&](const std::string& code, const std::string& msg) { res.issues.push_back({code, msg}); };
    try {
      D.spec.validate();
    } catch (const DomainError& e) {
      bad("group", e.what());
      return res;
    }
    if (D.g0 < 0) {
      bad("g0", "orbifold genus must be non-negative");
      return res;
    }
    for (const auto& e : D.entries) {
      try {
        check_element(D.spec, e.elem);
      } catch (const Error& ex) {
        bad("element", ex.what());
        continue;
      }
      if (e.mult < 1) {
        bad("multiplicity", e.elem.to_string() + " has multiplicity " + std::to_string(e.mult));
      }
      if (e.elem == identity_element(D.spec)) {
        bad("trivial_entry", "entries must be nontrivial");
        continue;
      }
      std::int64_t mj = element_order(D.spec, e.elem);
      std::int64_t tj = additive_order(e.elem.x, D.spec.m);
      if (e.mj != 0 && e.mj != mj) {
        bad("order", e.elem.to_string() + " has order " + std::to_string(mj) + ", data set says "
                         + std::to_string(e.mj));
      }
      if (e.tj != 0 && e.tj != tj) {
        bad("residue_order", e.elem.to_string() + ": residue has order " + std::to_string(tj)
                                 + ", data set says " + std::to_string(e.tj));
      }
    }
    if (!res.issues.empty()) {
      return res;
    }
    Rational g = D.genus_rational();
    auto gi = integral(g);
    if (!gi) {
      bad("genus", "Riemann-Hurwitz genus " + std::to_string(g.numerator()) + "/"
                       + std::to_string(g.denominator()) + " is not an integer");
    } else if (*gi < 2) {
      bad("genus", "Riemann-Hurwitz genus " + std::to_string(*gi) + " is below 2");
    }
    auto flat = D.flat();
    GroupElement P = product(D.spec, flat);
    if (D.g0 == 0) {
      if (!(P == identity_element(D.spec))) {
        bad("product", "ordered product of the entries is " + P.to_string() + ", not the identity");
      }
      if (flat.empty() || !generates(D.spec, flat)) {
        bad("generation", "entries do not generate " + D.spec.display_name());
      }
    } else if (D.g0 == 1) {
      try {
        if (!find_torus_handles(D, cap)) {
          bad("handles", "no pair of handle images closes the relation and generates");
        }
      } catch (const IndeterminateError& e) {
        res.indeterminate = true;
        res.issues.push_back({"indeterminate", e.what()});
      }
    } else {
      std::int64_t s = 0;
      for (const auto& e : flat) {
        s = mod(s + e.x, D.spec.m);
      }
      if (s != 0) {
        bad("residue_sum", "Σ x_j ≡ " + std::to_string(s) + " (mod " + std::to_string(D.spec.m) + "), not 0");
      } else if (!in_commutator_subgroup(D.spec, P)) {
        bad("product", "product of the entries " + P.to_string()
                           + " lies outside the commutator subgroup, so no handles can close the relation");
      }
    }
    if (res.issues.empty()) {
      res.genus = *gi;
    }
    return res;
  }

  // ---- equivalence ---------------------------------------------------------

  struct EquivalenceWitness {
    std::vector<int> pi;  // entry j of a corresponds to entry pi[j] of b (flat indices)
    AutomorphismSpec chi;
  };

  inline std::vector<ClassKey> class_keys(const EDataSet& a) {
    std::vector<ClassKey> out;
    for (const auto& e : a.flat()) {
      out.push_back(class_key(a.spec, e));
    }
    return out;
  }

  namespace detail {
    inline std::string serialize_keys(std::vector<ClassKey> keys) {
      std::sort(keys.begin(), keys.end());
      std::string out;
      for (const auto& k : keys) {
        out += k.to_string() + ";";
      }
      return out;
    }

    inline std::vector<ClassKey> transform_keys(const GroupSpec& spec, const std::vector<ClassKey>& keys,
                                                Parity p, std::int64_t ell) {
      std::vector<ClassKey> out;
      out.reserve(keys.size());
      for (const auto& k : keys) {
        out.push_back(apply_automorphism(spec.m, p, ell, k));
      }
      return out;
    }
  }  // namespace detail

  // Least serialization of the entry classes over all automorphism classes;
  // equal strings exactly for equivalent data sets.
  inline std::string canonical_form(const EDataSet& a) {
    auto keys = class_keys(a);
    std::string best;
    bool first = true;
    for (auto [p, ell] : automorphism_classes(a.spec)) {
      std::string s = detail::serialize_keys(detail::transform_keys(a.spec, keys, p, ell));
      if (first || s < best) {
        best = s;
        first = false;
      }
    }
    return std::to_string(a.spec.n) + "," + std::to_string(a.spec.m) + "," + std::to_string(a.spec.i) + ","
           + std::to_string(a.g0) + "|" + best;
  }

  inline std::optional<EquivalenceWitness> equivalent(const EDataSet& a, const EDataSet& b) {
    if (a.spec != b.spec || a.g0 != b.g0 || a.r() != b.r()) {
      return std::nullopt;
    }
    auto ka = class_keys(a);
    auto kb = class_keys(b);
    std::vector<int> ib(kb.size());
    std::iota(ib.begin(), ib.end(), 0);
    std::stable_sort(ib.begin(), ib.end(), [&](int u, int v) { return kb[u] < kb[v]; });
    for (auto [p, ell] : automorphism_classes(a.spec)) {
      auto ta = detail::transform_keys(a.spec, ka, p, ell);
      std::vector<int> ia(ta.size());
      std::iota(ia.begin(), ia.end(), 0);
      std::stable_sort(ia.begin(), ia.end(), [&](int u, int v) { return ta[u] < ta[v]; });
      bool match = true;
      for (std::size_t k = 0; k < ia.size() && match; ++k) {
        match = ta[ia[k]] == kb[ib[k]];
      }
      if (!match) {
        continue;
      }
      EquivalenceWitness w{std::vector<int>(ia.size()), AutomorphismSpec::of(a.spec, p, ell)};
      for (std::size_t k = 0; k < ia.size(); ++k) {
        w.pi[ia[k]] = ib[k];
      }
      auto fa = a.flat();
      auto fb = b.flat();
      for (std::size_t j = 0; j < fa.size(); ++j) {
        if (!conjugate_in_e(a.spec, apply_automorphism(a.spec, w.chi, fa[j]), fb[w.pi[j]])) {
          throw InternalError("equivalent: witness fails on entry " + std::to_string(j));
        }
      }
      return w;
    }
    return std::nullopt;
  }

}  // namespace altlift

#endif  // ALTLIFT_DATASETS_HPP_
