#ifndef ALTLIFT_EGROUP_HPP_
#define ALTLIFT_EGROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "numtheory.hpp"
#include "perm.hpp"

namespace altlift {

  // E^i_{n,m}: A_n x Z_m (i = 0) or A_n semidirect Z_m with 1 acting by
  // conjugation with (1 2) (i = 1).
  struct GroupSpec {
    int n = 5;
    std::int64_t m = 1;
    int i = 0;

    void validate() const {
      if (n < 4 || n > kMaxDegree) {
        throw DomainError("group: n must lie in 4.." + std::to_string(kMaxDegree) + ", got "
                          + std::to_string(n));
      }
      if (m < 1) {
        throw DomainError("group: m must be positive, got " + std::to_string(m));
      }
      if (i != 0 && i != 1) {
        throw DomainError("group: i must be 0 or 1, got " + std::to_string(i));
      }
      if (i == 1 && m % 2 != 0) {
        throw DomainError("group: the semidirect family needs m even, got m="
                          + std::to_string(m));
      }
    }

    std::int64_t order() const { return factorial(n) / 2 * m; }

    bool is_alternating() const { return m == 1; }

    std::string to_string() const {
      return "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",i=" + std::to_string(i);
    }

    // "(n,m,i)" as in data-set notation.
    std::string tuple_string() const {
      return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(i) + ")";
    }

    // A_5, Σ_4, A_4 x Z_3, A_5 ⋊ Z_6: the usual names, with Σ_n for (n,2,1).
    std::string display_name() const {
      std::string alt = "A_" + std::to_string(n);
      if (m == 1) {
        return alt;
      }
      if (m == 2 && i == 1) {
        return "Σ_" + std::to_string(n);
      }
      return alt + (i == 0 ? " × Z_" : " ⋊ Z_") + std::to_string(m);
    }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
    friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;

    static GroupSpec parse(const std::string& text) {
      GroupSpec s;
      bool got[3] = {false, false, false};
      std::size_t pos = 0;
      while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? text.size() : comma + 1;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
          throw ParseError("group text \"" + text + "\": expected key=value");
        }
        std::string key = item.substr(0, eq);
        key.erase(std::remove(key.begin(), key.end(), ' '), key.end());
        long long v = 0;
        try {
          v = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
          throw ParseError("group text \"" + text + "\": bad value for " + key);
        }
        if (key == "n") {
          s.n = static_cast<int>(v);
          got[0] = true;
        } else if (key == "m") {
          s.m = v;
          got[1] = true;
        } else if (key == "i") {
          s.i = static_cast<int>(v);
          got[2] = true;
        } else {
          throw ParseError("group text \"" + text + "\": unknown key " + key);
        }
      }
      if (!got[0] || !got[1] || !got[2]) {
        throw ParseError("group text \"" + text + "\": need n, m and i");
      }
      s.validate();
      return s;
    }
  };

  struct GroupElement {
    Permutation sigma;
    std::int64_t x = 0;

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
      return a.x == b.x && a.sigma == b.sigma;
    }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
      if (a.sigma == b.sigma) {
        return a.x < b.x;
      }
      return a.sigma < b.sigma;
    }

    std::string to_string() const { return sigma.to_string() + "|" + std::to_string(x); }

    // "((1 2 3),2)" as in data-set notation.
    std::string tuple_string() const { return "(" + sigma.to_string() + "," + std::to_string(x) + ")"; }
  };

  inline GroupElement identity_element(const GroupSpec& spec) { return {Permutation(spec.n), 0}; }

  inline void check_element(const GroupSpec& spec, const GroupElement& a) {
    if (a.sigma.degree() != spec.n) {
      throw SizeError("element " + a.to_string() + " has degree " + std::to_string(a.sigma.degree())
                      + ", group has n=" + std::to_string(spec.n));
    }
    if (!is_even(a.sigma)) {
      throw DomainError("element " + a.to_string() + ": permutation part is odd");
    }
    if (a.x < 0 || a.x >= spec.m) {
      throw DomainError("element " + a.to_string() + ": residue outside 0.." + std::to_string(spec.m - 1));
    }
  }

  // "SIGMA|X"; the residue is reduced mod m and may be omitted when m = 1.
  inline GroupElement parse_element(const std::string& text, const GroupSpec& spec) {
    std::size_t bar = text.find('|');
    std::string perm = text.substr(0, bar);
    std::int64_t x = 0;
    if (bar != std::string::npos) {
      try {
        std::size_t used = 0;
        std::string rest = text.substr(bar + 1);
        x = std::stoll(rest, &used);
        if (rest.find_first_not_of(" \t", used) != std::string::npos) {
          throw ParseError("");
        }
      } catch (const std::exception&) {
        throw ParseError("element text \"" + text + "\": bad residue");
      }
    } else if (spec.m != 1) {
      throw ParseError("element text \"" + text + "\": expected SIGMA|X");
    }
    GroupElement a{Permutation::parse(perm, spec.n), mod(x, spec.m)};
    check_element(spec, a);
    return a;
  }

  namespace detail {
    inline const Permutation& swap12(int n) {
      static thread_local Permutation cache[kMaxDegree + 1];
      static thread_local bool ready[kMaxDegree + 1] = {};
      if (!ready[n]) {
        cache[n] = transposition(n, 1, 2);
        ready[n] = true;
      }
      return cache[n];
    }
  }  // namespace detail

  // Image in Σ_n x Z_m under (σ, x) -> (σ (1 2)^x, x) for i = 1; identity
  // on the permutation part for i = 0. Multiplication becomes componentwise.
  inline Permutation sym_image(const GroupSpec& spec, const GroupElement& a) {
    if (spec.i == 1 && a.x % 2 != 0) {
      return a.sigma * detail::swap12(spec.n);
    }
    return a.sigma;
  }

  inline GroupElement from_sym(const GroupSpec& spec, const Permutation& s, std::int64_t x) {
    x = mod(x, spec.m);
    if (spec.i == 1 && x % 2 != 0) {
      return {s * detail::swap12(spec.n), x};
    }
    return {s, x};
  }

  inline GroupElement mul(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    std::int64_t x = mod(a.x + b.x, spec.m);
    if (spec.i == 1 && a.x % 2 != 0) {
      const Permutation& t = detail::swap12(spec.n);
      return {a.sigma * t * b.sigma * t, x};
    }
    return {a.sigma * b.sigma, x};
  }

  inline GroupElement inverse(const GroupSpec& spec, const GroupElement& a) {
    return from_sym(spec, sym_image(spec, a).inverse(), -a.x);
  }

  inline GroupElement power(const GroupSpec& spec, const GroupElement& a, long long k) {
    return from_sym(spec, power(sym_image(spec, a), k), mod(static_cast<std::int64_t>(k % spec.m) * a.x, spec.m));
  }

  // a b a^-1 b^-1
  inline GroupElement commutator(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    return mul(spec, mul(spec, a, b), mul(spec, inverse(spec, a), inverse(spec, b)));
  }

  inline GroupElement product(const GroupSpec& spec, const std::vector<GroupElement>& elems) {
    GroupElement r = identity_element(spec);
    for (const auto& e : elems) {
      r = mul(spec, r, e);
    }
    return r;
  }

  inline std::int64_t element_order(const GroupSpec& spec, const GroupElement& a) {
    return std::lcm(static_cast<std::int64_t>(order(sym_image(spec, a))), additive_order(a.x, spec.m));
  }

  // Conjugacy class label. For i = 0 the class of (σ, x) is x together with
  // the A_n-class of σ; for i = 1 conjugation by odd x reaches all of Σ_n,
  // so the label is x and the cycle type of σ (1 2)^x. bit is -1 unless the
  // class is one half of a split Σ_n-class.
  struct ClassKey {
    std::int64_t x = 0;
    CycleType type;
    int bit = -1;

    friend bool operator==(const ClassKey&, const ClassKey&) = default;
    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;

    std::string to_string() const {
      std::string out = std::to_string(x) + ":";
      for (std::size_t k = 0; k < type.parts.size(); ++k) {
        out += (k ? "." : "") + std::to_string(type.parts[k]);
      }
      if (bit >= 0) {
        out += bit ? "b" : "a";
      }
      return out;
    }
  };

  inline ClassKey class_key(const GroupSpec& spec, const GroupElement& a) {
    if (spec.i == 1) {
      return {a.x, cycle_type(sym_image(spec, a)), -1};
    }
    CycleType t = cycle_type(a.sigma);
    return {a.x, t, splits_in_alt(t) ? alt_class_bit(a.sigma) : -1};
  }

  inline bool conjugate_in_e(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    return class_key(spec, a) == class_key(spec, b);
  }

  // |C_E(a)| from the centralizer in Σ_n: for i = 0 it is m |C_{A_n}(σ)|,
  // for i = 1 it is m z/2 with z the Σ_n-centralizer order of σ (1 2)^x.
  inline std::int64_t centralizer_order(const GroupSpec& spec, const GroupElement& a) {
    if (spec.i == 1) {
      return spec.m * sym_centralizer_order(cycle_type(sym_image(spec, a))) / 2;
    }
    CycleType t = cycle_type(a.sigma);
    std::int64_t z = sym_centralizer_order(t);
    return spec.m * (splits_in_alt(t) ? z : z / 2);
  }

  inline std::int64_t class_size(const GroupSpec& spec, const GroupElement& a) {
    return spec.order() / centralizer_order(spec, a);
  }

  // An automorphism (σ, x) -> (τ σ τ^-1 β(x), ℓ x).
  struct AutomorphismSpec {
    Permutation tau;
    std::int64_t ell = 1;

    Parity conj_parity() const { return parity(tau); }

    static AutomorphismSpec identity(const GroupSpec& spec) { return {Permutation(spec.n), 1}; }

    // Canonical representative of a (parity, ℓ) class: τ is id or (1 2).
    static AutomorphismSpec of(const GroupSpec& spec, Parity p, std::int64_t ell) {
      return {p == Parity::even ? Permutation(spec.n) : transposition(spec.n, 1, 2), mod(ell, spec.m)};
    }

    std::string to_string() const {
      return "tau=" + tau.to_string() + ",ell=" + std::to_string(ell);
    }
  };

  // β(x) = τ (1 2) τ^-1 (1 2) for odd x in the semidirect family, else id.
  inline Permutation beta(const GroupSpec& spec, const AutomorphismSpec& chi, std::int64_t x) {
    if (spec.i == 1 && mod(x, spec.m) % 2 != 0) {
      const Permutation& t = detail::swap12(spec.n);
      return chi.tau * t * chi.tau.inverse() * t;
    }
    return Permutation(spec.n);
  }

  inline GroupElement apply_automorphism(const GroupSpec& spec, const AutomorphismSpec& chi,
                                         const GroupElement& a) {
    if (std::gcd(mod(chi.ell, spec.m), spec.m) != 1) {
      throw DomainError("automorphism: ell=" + std::to_string(chi.ell) + " is not a unit mod "
                        + std::to_string(spec.m));
    }
    return {conjugate(a.sigma, chi.tau) * beta(spec, chi, a.x), mod(chi.ell * a.x, spec.m)};
  }

  // Effect of an automorphism on class labels: ℓ scales the residue, an odd
  // conjugator swaps the halves of a split class.
  inline ClassKey apply_automorphism(std::int64_t m, Parity p, std::int64_t ell, ClassKey key) {
    key.x = mod(ell * key.x, m);
    if (p == Parity::odd && key.bit >= 0) {
      key.bit ^= 1;
    }
    return key;
  }

  // Units mod m paired with both conjugator parities: the automorphism
  // classes that matter up to inner automorphisms.
  inline std::vector<std::pair<Parity, std::int64_t>> automorphism_classes(const GroupSpec& spec) {
    std::vector<std::pair<Parity, std::int64_t>> out;
    for (std::int64_t u : units(spec.m)) {
      out.emplace_back(Parity::even, spec.m == 1 ? 1 : u);
      out.emplace_back(Parity::odd, spec.m == 1 ? 1 : u);
    }
    return out;
  }

  namespace detail {
    struct PermHash {
      std::size_t operator()(const Permutation& p) const { return std::hash<std::uint64_t>()(p.rank()); }
    };

    // Grows the subgroup of Σ_n generated by cands, stopping as soon as it
    // reaches target elements. Returns the final size.
    inline std::int64_t perm_closure_size(int n, const std::vector<Permutation>& cands,
                                          std::int64_t target, std::int64_t cap) {
      std::vector<Permutation> elems{Permutation(n)};
      std::unordered_set<std::uint64_t> seen{elems[0].rank()};
      std::vector<Permutation> gens;
      for (const auto& c : cands) {
        if (static_cast<std::int64_t>(elems.size()) >= target) {
          break;
        }
        if (seen.count(c.rank())) {
          continue;
        }
        gens.push_back(c);
        std::size_t old = elems.size();
        for (std::size_t k = 0; k < elems.size(); ++k) {
          std::size_t from = k < old ? gens.size() - 1 : 0;
          for (std::size_t g = from; g < gens.size(); ++g) {
            Permutation p = elems[k] * gens[g];
            if (seen.insert(p.rank()).second) {
              elems.push_back(p);
              if (static_cast<std::int64_t>(elems.size()) >= target) {
                return static_cast<std::int64_t>(elems.size());
              }
              if (static_cast<std::int64_t>(elems.size()) > cap) {
                throw IndeterminateError("closure exceeded " + std::to_string(cap) + " elements");
              }
            }
          }
        }
      }
      return static_cast<std::int64_t>(elems.size());
    }
  }  // namespace detail

  inline bool generates_alt(int n, const std::vector<Permutation>& perms, std::int64_t cap = kDefaultClosureCap) {
    return detail::perm_closure_size(n, perms, factorial(n) / 2, cap) == factorial(n) / 2;
  }

  // Decided through the projection to Z_m and the Schreier generators of
  // the kernel A_n x 0: with a transversal w_r (x-part r) the elements
  // w_r g w_{r+x_g}^-1 generate the intersection with A_n.
  inline bool generates(const GroupSpec& spec, const std::vector<GroupElement>& elems,
                        std::int64_t cap = kDefaultClosureCap) {
    if (elems.empty()) {
      throw DomainError("generates: empty generating set");
    }
    std::int64_t g = spec.m;
    for (const auto& e : elems) {
      check_element(spec, e);
      g = std::gcd(g, e.x);
    }
    if (g != 1 && spec.m != 1) {
      return false;
    }
    std::vector<GroupElement> transversal(spec.m, identity_element(spec));
    std::vector<bool> have(spec.m, false);
    have[0] = true;
    std::vector<std::int64_t> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::int64_t r = queue[head];
      for (const auto& e : elems) {
        std::int64_t s = mod(r + e.x, spec.m);
        if (!have[s]) {
          have[s] = true;
          transversal[s] = mul(spec, transversal[r], e);
          queue.push_back(s);
        }
      }
    }
    std::vector<Permutation> kernel;
    std::unordered_set<std::uint64_t> seen;
    for (std::int64_t r = 0; r < spec.m; ++r) {
      for (const auto& e : elems) {
        GroupElement k = mul(spec, mul(spec, transversal[r], e),
                             inverse(spec, transversal[mod(r + e.x, spec.m)]));
        if (!k.sigma.is_identity() && seen.insert(k.sigma.rank()).second) {
          kernel.push_back(k.sigma);
        }
      }
    }
    return generates_alt(spec.n, kernel, cap);
  }

  // Every element of the subgroup generated by elems (breadth-first).
  inline std::vector<GroupElement> subgroup_closure(const GroupSpec& spec, const std::vector<GroupElement>& elems,
                                                    std::int64_t cap = kDefaultClosureCap) {
    std::vector<GroupElement> out{identity_element(spec)};
    std::unordered_set<std::uint64_t> seen{out[0].sigma.rank() * static_cast<std::uint64_t>(spec.m)};
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (const auto& e : elems) {
        GroupElement p = mul(spec, out[k], e);
        if (seen.insert(p.sigma.rank() * static_cast<std::uint64_t>(spec.m) + static_cast<std::uint64_t>(p.x)).second) {
          out.push_back(p);
          if (static_cast<std::int64_t>(out.size()) > cap) {
            throw IndeterminateError("closure exceeded " + std::to_string(cap) + " elements");
          }
        }
      }
    }
    return out;
  }

  // All elements, permutation part in lexicographic order, then residue.
  inline std::vector<GroupElement> all_elements(const GroupSpec& spec) {
    std::vector<GroupElement> out;
    for (const auto& p : all_even_permutations(spec.n)) {
      for (std::int64_t x = 0; x < spec.m; ++x) {
        out.push_back({p, x});
      }
    }
    return out;
  }

  inline Permutation random_even_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    Permutation p = Permutation::from_images(img);
    if (!is_even(p)) {
      std::swap(img[0], img[1]);
      p = Permutation::from_images(img);
    }
    return p;
  }

  inline GroupElement random_element(const GroupSpec& spec, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dx(0, spec.m - 1);
    Permutation p = random_even_permutation(spec.n, rng);
    return {p, dx(rng)};
  }

  namespace detail {
    inline Permutation cycle_on(int n, int first, int len) {
      std::vector<int> c;
      for (int k = 0; k < len; ++k) {
        c.push_back(first + k);
      }
      return len > 1 ? Permutation::from_cycles(n, {c}) : Permutation(n);
    }

    // Two odd-length cycles of the given lengths generating A_n, placed on
    // runs of consecutive points; the first run starts at point `first`.
    inline std::optional<std::pair<Permutation, Permutation>> cycle_pair(int n, int l1, int l2, int first) {
      Permutation c1 = cycle_on(n, first, l1);
      for (int start = 1; start + l2 - 1 <= n; ++start) {
        Permutation c2 = cycle_on(n, start, l2);
        if (generates_alt(n, {c1, c2})) {
          return std::make_pair(c1, c2);
        }
      }
      // Interleaved placements: the second cycle visits its points in a
      // shifted order.
      std::vector<int> pts(n);
      std::iota(pts.begin(), pts.end(), 1);
      for (int shift = 1; shift < n; ++shift) {
        std::vector<int> c;
        for (int k = 0; k < l2; ++k) {
          c.push_back(pts[(k * shift) % n]);
        }
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
          continue;
        }
        std::vector<int> cyc;
        for (int k = 0; k < l2; ++k) {
          cyc.push_back(pts[(k * shift) % n]);
        }
        Permutation c2 = Permutation::from_cycles(n, {cyc});
        if (generates_alt(n, {c1, c2})) {
          return std::make_pair(c1, c2);
        }
      }
      return std::nullopt;
    }

    inline std::pair<GroupElement, GroupElement> search_generating_pair(const GroupSpec& spec) {
      std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(spec.n) * 1000003ULL
                          + static_cast<std::uint64_t>(spec.m) * 7919ULL + static_cast<std::uint64_t>(spec.i));
      for (int attempt = 0; attempt < 200000; ++attempt) {
        GroupElement a = random_element(spec, rng);
        GroupElement b = random_element(spec, rng);
        if (generates(spec, {a, b})) {
          return {a, b};
        }
      }
      throw InternalError("generating_pair: no generating pair found for " + spec.to_string());
    }
  }  // namespace detail

  // Two generators, built as in the two-generation arguments: for i = 0 two
  // cycles of coprime odd lengths (n-2, n or n-3, n-1) with residue 1; for
  // i = 1 either ((3 4 5), 1) with a conjugated long cycle (6 ∤ m) or cycles of
  // two odd primes p1 < p2 <= n with residues p1^l1 and 2 p2^l2 (6 | m).
  // Degrees 4 and 6 try the analogous cycle pair for i = 0, otherwise fall
  // back to a seeded search.
  inline std::pair<GroupElement, GroupElement> generating_pair(const GroupSpec& spec) {
    spec.validate();
    const int n = spec.n;
    const std::int64_t m = spec.m;
    const std::int64_t one = m == 1 ? 0 : 1;
    auto verified = [&](const GroupElement& a, const GroupElement& b) {
      return generates(spec, {a, b});
    };
    if ((n == 4 || n == 6) && spec.i == 0) {
      // the same construction with two 3-cycles, resp. a 3- and a 5-cycle
      if (auto cp = detail::cycle_pair(n, 3, n == 4 ? 3 : 5, 1)) {
        GroupElement a{cp->first, one}, b{cp->second, one};
        if (verified(a, b)) {
          return {a, b};
        }
      }
    }
    if (n != 4 && n != 6) {
      if (spec.i == 0) {
        int l1 = n % 2 ? n - 2 : n - 3;
        int l2 = n % 2 ? n : n - 1;
        if (auto cp = detail::cycle_pair(n, l1, l2, 1)) {
          GroupElement a{cp->first, one}, b{cp->second, one};
          if (verified(a, b)) {
            return {a, b};
          }
        }
      } else if (m % 6 != 0) {
        Permutation sigma = Permutation::from_cycles(n, {{3, 4, 5}});
        Permutation ta = n % 2 ? detail::cycle_on(n, 1, n) : detail::cycle_on(n, 2, n - 1);
        Permutation c = Permutation::from_cycles(n, {{1, 3, 5, 2, 4}});
        Permutation t1 = c.inverse() * ta * c;
        Permutation t2 = c * ta * c.inverse();
        const Permutation& first = m % 6 == 2 ? t1 : t2;
        const Permutation& second = m % 6 == 2 ? t2 : t1;
        for (const Permutation* tau : {&first, &second}) {
          GroupElement a{sigma, 1}, b{*tau, 0};
          if (verified(a, b)) {
            return {a, b};
          }
        }
      } else {
        std::vector<int> primes;
        for (int p = n; p >= 3; --p) {
          if (is_prime(p)) {
            primes.push_back(p);
          }
        }
        for (std::size_t u = 0; u < primes.size(); ++u) {
          for (std::size_t v = 0; v < u; ++v) {
            int p1 = primes[u], p2 = primes[v];  // p1 < p2
            if (p1 + p2 <= n || p1 > n - 2) {
              continue;
            }
            std::int64_t q = m, pp1 = 1, pp2 = 1;
            while (q % p1 == 0) {
              q /= p1;
              pp1 *= p1;
            }
            while (q % p2 == 0) {
              q /= p2;
              pp2 *= p2;
            }
            auto cp = detail::cycle_pair(n, p1, p2, 3);
            if (!cp) {
              continue;
            }
            GroupElement a{cp->first, mod(pp1, m)}, b{cp->second, mod(2 * pp2, m)};
            if (verified(a, b)) {
              return {a, b};
            }
          }
        }
      }
    }
    return detail::search_generating_pair(spec);
  }

  namespace detail {
    // An odd permutation commuting with p, if one exists.
    inline std::optional<Permutation> odd_centralizer_element(const Permutation& p) {
      const int n = p.degree();
      auto cycles = p.cycles();
      for (const auto& c : cycles) {
        if (c.size() % 2 == 0) {
          return Permutation::from_cycles(n, {c});
        }
      }
      std::vector<int> fixed;
      for (int a = 1; a <= n; ++a) {
        if (p(a) == a) {
          fixed.push_back(a);
        }
      }
      if (fixed.size() >= 2) {
        return transposition(n, fixed[0], fixed[1]);
      }
      for (std::size_t u = 0; u < cycles.size(); ++u) {
        for (std::size_t v = u + 1; v < cycles.size(); ++v) {
          if (cycles[u].size() == cycles[v].size()) {
            std::vector<std::vector<int>> swaps;
            for (std::size_t k = 0; k < cycles[u].size(); ++k) {
              swaps.push_back({cycles[u][k], cycles[v][k]});
            }
            return Permutation::from_cycles(n, swaps);
          }
        }
      }
      return std::nullopt;
    }

    // ρ2 even with ρ2 ρ1 ρ2^-1 = t ρ1, when t ρ1 is A_n-conjugate to ρ1.
    inline std::optional<Permutation> even_conjugator(const Permutation& r1, const Permutation& tr1) {
      if (cycle_type(r1) != cycle_type(tr1) || !conjugate_in_alt(r1, tr1)) {
        return std::nullopt;
      }
      Permutation c = conjugator(r1, tr1);
      if (!is_even(c)) {
        auto z = odd_centralizer_element(r1);
        if (!z) {
          return std::nullopt;
        }
        c = c * *z;
      }
      return c;
    }
  }  // namespace detail

  // (ρ1, ρ2), both even, with ρ2 ρ1 ρ2^-1 ρ1^-1 = t.
  inline std::pair<Permutation, Permutation> commutator_realize(int n, const Permutation& t,
                                                                std::int64_t cap = kDefaultSearchCap) {
    if (t.degree() != n) {
      throw SizeError("commutator_realize: degree mismatch");
    }
    if (!is_even(t)) {
      throw DomainError("commutator_realize: " + t.to_string() + " is odd");
    }
    if (t.is_identity()) {
      return {Permutation(n), Permutation(n)};
    }
    auto attempt = [&](const Permutation& r1) -> std::optional<std::pair<Permutation, Permutation>> {
      auto c = detail::even_conjugator(r1, t * r1);
      if (c) {
        return std::make_pair(r1, *c);
      }
      return std::nullopt;
    };
    std::int64_t half = factorial(n) / 2;
    if (half <= cap) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      do {
        Permutation r1 = Permutation::from_images(img);
        if (is_even(r1)) {
          if (auto r = attempt(r1)) {
            return *r;
          }
        }
      } while (std::next_permutation(img.begin(), img.end()));
      throw DomainError("commutator_realize: " + t.to_string() + " is not a commutator in A_"
                        + std::to_string(n));
    }
    std::mt19937_64 rng(0xc0ffeeULL + static_cast<std::uint64_t>(n));
    for (std::int64_t k = 0; k < cap; ++k) {
      if (auto r = attempt(random_even_permutation(n, rng))) {
        return *r;
      }
    }
    throw IndeterminateError("commutator_realize: no pair found within " + std::to_string(cap) + " samples");
  }

  // (a, b) in E with a b a^-1 b^-1 = target. The x-part of target must be 0.
  inline std::pair<GroupElement, GroupElement> realize_commutator_in_e(const GroupSpec& spec,
                                                                       const GroupElement& target,
                                                                       std::int64_t cap = kDefaultSearchCap) {
    check_element(spec, target);
    if (target.x != 0) {
      throw DomainError("realize_commutator_in_e: " + target.to_string() + " has nonzero residue");
    }
    if (spec.n >= 5) {
      auto [r1, r2] = commutator_realize(spec.n, target.sigma, cap);
      return {GroupElement{r2, 0}, GroupElement{r1, 0}};
    }
    auto elems = all_elements(spec);
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        if (commutator(spec, a, b) == target) {
          return {a, b};
        }
      }
    }
    throw DomainError("realize_commutator_in_e: " + target.to_string() + " is not a commutator in "
                      + spec.display_name());
  }

  // Whether a product of entries can be closed off by handles: it must lie
  // in the commutator subgroup, which is A_n x 0 except for A_4 x Z_m, where
  // it is V_4 x 0.
  inline bool in_commutator_subgroup(const GroupSpec& spec, const GroupElement& a) {
    if (a.x != 0) {
      return false;
    }
    if (spec.n == 4 && spec.i == 0) {
      CycleType t = cycle_type(a.sigma);
      return t == CycleType{{1, 1, 1, 1}} || t == CycleType{{2, 2}};
    }
    return true;
  }

}  // namespace altlift

#endif  // ALTLIFT_EGROUP_HPP_
