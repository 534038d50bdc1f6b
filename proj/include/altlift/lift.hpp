#ifndef ALTLIFT_LIFT_HPP_
#define ALTLIFT_LIFT_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "config.hpp"
#include "datasets.hpp"
#include "egroup.hpp"
#include "error.hpp"
#include "numtheory.hpp"
#include "perm.hpp"

namespace altlift {

  // Permutation of cone points. Unlike Permutation there is no degree cap:
  // a lift of degree 30 already permutes 33 points.
  class ConePermutation {
   public:
    ConePermutation() = default;
    explicit ConePermutation(int r) : img_(r) { std::iota(img_.begin(), img_.end(), 0); }

    // 0-based images
    static ConePermutation from_images0(std::vector<int> img) {
      std::vector<char> seen(img.size(), 0);
      for (int v : img) {
        if (v < 0 || v >= static_cast<int>(img.size()) || seen[v]) {
          throw DomainError("cone permutation: images are not a bijection");
        }
        seen[v] = 1;
      }
      ConePermutation p;
      p.img_ = std::move(img);
      return p;
    }

    // cycle text on points 1..r; "id" or "()" for the identity
    static ConePermutation parse(const std::string& text, int r) {
      std::vector<int> img(r);
      std::iota(img.begin(), img.end(), 0);
      std::vector<int> cyc;
      std::vector<char> used(r, 0);
      std::string num;
      bool open = false;
      auto flush_num = [&] {
        if (num.empty()) {
          return;
        }
        int v = std::stoi(num) - 1;
        num.clear();
        if (v < 0 || v >= r || used[v]) {
          throw ParseError("cone permutation: bad or repeated point in '" + text + "'");
        }
        used[v] = 1;
        cyc.push_back(v);
      };
      if (text == "id" || text == "()") {
        return ConePermutation(r);
      }
      for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
          if (!open) {
            throw ParseError("cone permutation: digit outside a cycle in '" + text + "'");
          }
          num += ch;
        } else if (ch == '(') {
          if (open) {
            throw ParseError("cone permutation: nested '(' in '" + text + "'");
          }
          open = true;
        } else if (ch == ')') {
          flush_num();
          if (!open) {
            throw ParseError("cone permutation: unmatched ')' in '" + text + "'");
          }
          for (std::size_t k = 0; k < cyc.size(); ++k) {
            img[cyc[k]] = cyc[(k + 1) % cyc.size()];
          }
          cyc.clear();
          open = false;
        } else if (ch == ' ' || ch == ',') {
          flush_num();
        } else {
          throw ParseError("cone permutation: unexpected character in '" + text + "'");
        }
      }
      if (open) {
        throw ParseError("cone permutation: unterminated cycle in '" + text + "'");
      }
      return from_images0(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int j) const { return img_[j]; }
    const std::vector<int>& images() const { return img_; }

    std::vector<std::vector<int>> cycles() const {
      std::vector<std::vector<int>> out;
      std::vector<char> seen(img_.size(), 0);
      for (int s = 0; s < degree(); ++s) {
        if (seen[s]) {
          continue;
        }
        std::vector<int> c;
        for (int p = s; !seen[p]; p = img_[p]) {
          seen[p] = 1;
          c.push_back(p);
        }
        out.push_back(c);
      }
      return out;
    }

    std::int64_t order() const {
      std::int64_t o = 1;
      for (const auto& c : cycles()) {
        o = std::lcm(o, static_cast<std::int64_t>(c.size()));
      }
      return o;
    }

    bool is_identity() const {
      for (int j = 0; j < degree(); ++j) {
        if (img_[j] != j) {
          return false;
        }
      }
      return true;
    }

    std::string to_string() const {
      std::string out;
      for (const auto& c : cycles()) {
        if (c.size() < 2) {
          continue;
        }
        out += "(";
        for (std::size_t k = 0; k < c.size(); ++k) {
          out += (k ? " " : "") + std::to_string(c[k] + 1);
        }
        out += ")";
      }
      return out.empty() ? "id" : out;
    }

    friend bool operator==(const ConePermutation&, const ConePermutation&) = default;
    friend auto operator<=>(const ConePermutation&, const ConePermutation&) = default;

   private:
    std::vector<int> img_;
  };

  struct WeakLiftablePair {
    EDataSet alt;                   // m = 1
    CyclicDataSet quotient_cyclic;  // action of the residue group on the A_n quotient
    ConePermutation cone_perm;      // induced permutation of alt's cone points

    std::string to_string() const {
      return "(" + alt.to_string() + ", (" + quotient_cyclic.to_string() + ", " + cone_perm.to_string() + "))";
    }
  };

  inline GroupSpec alt_spec(int n) { return GroupSpec{n, 1, 0}; }

  namespace detail {
    struct ConePoint {
      std::int64_t order;
      ClassKey key;
      int entry;
      std::int64_t pos;
      Permutation sigma;
    };

    // Elements of the given A_n-classes, in order, with product 1 that
    // generate A_n. The first is fixed up to conjugacy. Braid moves permute
    // the classes, so any order of a realizable multiset is realizable.
    inline std::optional<std::vector<Permutation>> realize_sphere(int n, const std::vector<ClassKey>& keys,
                                                                  const Permutation& first, std::int64_t cap) {
      const GroupSpec s{n, 1, 0};
      const std::size_t r = keys.size();
      if (r < 2) {
        return std::nullopt;
      }
      std::map<ClassKey, std::vector<Permutation>> members;
      for (const auto& k : keys) {
        members[k];
      }
      for (const auto& p : all_even_permutations(n)) {
        auto it = members.find(class_key(s, {p, 0}));
        if (it != members.end()) {
          it->second.push_back(p);
        }
      }
      std::vector<Permutation> cur(r, Permutation(n));
      cur[0] = first;
      std::int64_t nodes = 0;
      auto rec = [&](auto&& self, std::size_t j, const Permutation& prod) -> bool {
        if (j == r - 1) {
          cur[j] = prod.inverse();
          return class_key(s, {cur[j], 0}) == keys[j] && generates_alt(n, cur);
        }
        for (const auto& p : members[keys[j]]) {
          if (++nodes > cap) {
            throw IndeterminateError("psi: more than " + std::to_string(cap) + " nodes realizing the alternating part");
          }
          cur[j] = p;
          if (self(self, j + 1, compose(prod, p))) {
            return true;
          }
        }
        return false;
      };
      if (rec(rec, 1, first)) {
        return cur;
      }
      return std::nullopt;
    }
  }  // namespace detail

  // The weak-liftable pair of an E-action. Entry j with t_j < m_j yields
  // m/t_j cone points of order m_j/t_j, permuted cyclically; the class of
  // the k-th is that of (id,k) g_j^{t_j} (id,k)^-1, so for i=1 a split
  // class alternates between its two halves. Entries with t_j > 1 also
  // give the pair (c_j, t_j) of the quotient cyclic data set.
  inline WeakLiftablePair psi(const EDataSet& D) {
    const GroupSpec& spec = D.spec;
    spec.validate();
    if (spec.m < 2) {
      throw DomainError("psi: needs m >= 2, the data set is already alternating");
    }
    auto g = integral(D.genus_rational());
    if (!g) {
      throw DomainError("psi: data set has non-integral genus");
    }
    const std::int64_t m = spec.m;
    std::vector<detail::ConePoint> pts;
    CyclicDataSet quot{m, D.g0, {}};
    auto flat = D.flat();
    Permutation t12 = transposition(spec.n, 1, 2);
    for (int j = 0; j < static_cast<int>(flat.size()); ++j) {
      const GroupElement& e = flat[j];
      std::int64_t mj = element_order(spec, e);
      std::int64_t tj = additive_order(e.x, m);
      if (tj > 1) {
        quot.pairs.push_back({e.x / (m / tj), tj, 1});
      }
      if (mj == tj) {
        continue;
      }
      GroupElement h = power(spec, e, tj);  // (τ, 0)
      Permutation tau = h.sigma;
      Permutation other = spec.i == 1 ? t12 * tau * t12 : tau;
      ClassKey k0 = class_key(alt_spec(spec.n), {tau, 0});
      ClassKey k1 = class_key(alt_spec(spec.n), {other, 0});
      for (std::int64_t k = 0; k < m / tj; ++k) {
        bool odd = spec.i == 1 && (k & 1);
        // keep the printed representative whenever the class allows it
        const Permutation& s = (odd && !(k1 == k0)) ? other : tau;
        pts.push_back({mj / tj, odd ? k1 : k0, j, k, s});
      }
    }
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      const auto& p = pts[a];
      const auto& q = pts[b];
      return std::tie(p.order, p.key, p.entry, p.pos) < std::tie(q.order, q.key, q.entry, q.pos);
    });
    std::vector<int> label(pts.size());
    for (std::size_t l = 0; l < idx.size(); ++l) {
      label[idx[l]] = static_cast<int>(l);
    }
    std::vector<int> img(pts.size());
    for (std::size_t a = 0; a < pts.size(); ++a) {
      // successor within the same entry: pos+1 mod count; entry points are contiguous in pts
      std::size_t count = static_cast<std::size_t>(m / additive_order(flat[pts[a].entry].x, m));
      std::size_t start = a - static_cast<std::size_t>(pts[a].pos);
      std::size_t next = start + (static_cast<std::size_t>(pts[a].pos) + 1) % count;
      img[label[a]] = label[next];
    }
    // quotient genus of the A_n action from the cyclic data set
    Rational branch(0);
    for (const auto& p : quot.pairs) {
      branch += Rational(1) - Rational(1, p.nj);
    }
    Rational chi = Rational(m) * (Rational(2 - 2 * D.g0) - branch);
    Rational gp = (Rational(2) - chi) / Rational(2);
    if (gp.denominator() != 1 || gp < 0) {
      throw InconsistencyError("psi: quotient genus of the alternating action is not a non-negative integer");
    }
    EDataSet alt{alt_spec(spec.n), gp.numerator(), {}};
    for (int l : idx) {
      alt.entries.push_back({{pts[l].sigma, 0}, pts[l].order, 1, 1});
    }
    // on the sphere the listed representatives need not multiply to 1
    if (alt.g0 == 0 && !validate_edataset(alt).ok()) {
      std::vector<ClassKey> keys;
      for (int l : idx) {
        keys.push_back(pts[l].key);
      }
      auto real = detail::realize_sphere(spec.n, keys, alt.entries[0].elem.sigma, search_cap());
      if (!real) {
        throw InternalError("psi: the cone-point classes of the alternating part are not realizable");
      }
      for (std::size_t l = 0; l < real->size(); ++l) {
        alt.entries[l].elem.sigma = (*real)[l];
      }
    }
    auto ga = integral(alt.genus_rational());
    if (!ga || *ga != *g) {
      throw InternalError("psi: alternating action has genus " + (ga ? std::to_string(*ga) : std::string("?"))
                          + ", expected " + std::to_string(*g));
    }
    return {alt.compressed(), quot.normalized(), ConePermutation::from_images0(std::move(img))};
  }

  // Orbifold signature of the E-quotient encoded by a pair: a Π-cycle of
  // length L on order-k points becomes one point of order k·m/L and uses
  // up one cyclic pair of period m/L when L < m; unused cyclic pairs are
  // regular points upstairs and keep their period.
  inline Signature quotient_signature(const WeakLiftablePair& w) {
    const std::int64_t m = w.quotient_cyclic.n;
    auto flat = w.alt.flat();
    if (static_cast<int>(flat.size()) != w.cone_perm.degree()) {
      throw DomainError("quotient_signature: permutation degree " + std::to_string(w.cone_perm.degree())
                        + " does not match " + std::to_string(flat.size()) + " cone points");
    }
    std::map<std::int64_t, std::int64_t> avail;
    for (const auto& p : w.quotient_cyclic.pairs) {
      avail[p.nj] += p.mult;
    }
    Signature s{w.quotient_cyclic.g0, {}};
    for (const auto& c : w.cone_perm.cycles()) {
      auto L = static_cast<std::int64_t>(c.size());
      if (m % L != 0) {
        throw InconsistencyError("quotient_signature: cycle length " + std::to_string(L) + " does not divide "
                                 + std::to_string(m));
      }
      std::int64_t k = order(flat[c[0]].sigma);
      s.periods.push_back(k * (m / L));
      if (L < m) {
        if (avail[m / L] == 0) {
          throw InconsistencyError("quotient_signature: no cyclic pair of period " + std::to_string(m / L)
                                   + " for a cone-point cycle of length " + std::to_string(L));
        }
        --avail[m / L];
      }
    }
    for (const auto& [t, c] : avail) {
      for (std::int64_t k = 0; k < c; ++k) {
        s.periods.push_back(t);
      }
    }
    return s.sorted();
  }

  // Permutations of the cone points that could be induced by a lift of
  // degree dividing m_target: same cycle types, and on the split classes
  // either every point keeps its A_n-class or every point swaps it.
  inline std::vector<ConePermutation> admissible_permutations(const EDataSet& alt, std::int64_t m_target,
                                                              std::int64_t cap = search_cap()) {
    if (alt.spec.m != 1) {
      throw DomainError("admissible_permutations: expects an alternating data set");
    }
    if (m_target < 1) {
      throw DomainError("admissible_permutations: degree must be positive");
    }
    auto flat = alt.flat();
    const int r = static_cast<int>(flat.size());
    std::vector<CycleType> type(r);
    std::vector<int> bit(r);
    for (int j = 0; j < r; ++j) {
      type[j] = cycle_type(flat[j].sigma);
      bit[j] = alt_class_bit(flat[j].sigma);
    }
    std::vector<ConePermutation> out;
    std::vector<int> img(r, -1);
    std::vector<char> used(r, 0);
    std::int64_t nodes = 0;
    // swap: -1 undecided, 0 all preserved, 1 all swapped
    auto rec = [&](auto&& self, int j, int swap) -> void {
      if (++nodes > cap) {
        throw IndeterminateError("admissible_permutations: more than " + std::to_string(cap) + " search nodes");
      }
      if (j == r) {
        auto p = ConePermutation::from_images0(img);
        if (m_target % p.order() == 0) {
          out.push_back(std::move(p));
        }
        return;
      }
      for (int k = 0; k < r; ++k) {
        if (used[k] || !(type[k] == type[j])) {
          continue;
        }
        int s = swap;
        if (bit[j] >= 0) {
          int here = bit[j] == bit[k] ? 0 : 1;
          if (s >= 0 && s != here) {
            continue;
          }
          s = here;
        }
        used[k] = 1;
        img[j] = k;
        self(self, j + 1, s);
        used[k] = 0;
      }
    };
    rec(rec, 0, -1);
    std::sort(out.begin(), out.end());
    return out;
  }

  // r = 3 with pairwise distinct cycle types
  inline bool is_self_normalizing_candidate(const EDataSet& alt) {
    auto flat = alt.flat();
    if (flat.size() != 3) {
      return false;
    }
    auto a = cycle_type(flat[0].sigma), b = cycle_type(flat[1].sigma), c = cycle_type(flat[2].sigma);
    return !(a == b) && !(b == c) && !(a == c);
  }

  // A free Z_m extension of an A_n action with quotient genus g0 exists iff
  // m | g0 - 1; for the symmetric case m = 2 this is "g0 odd".
  inline bool free_extension_exists(std::int64_t n, std::int64_t m, int i, std::int64_t g0) {
    GroupSpec{static_cast<int>(n), m, i}.validate();
    if (g0 < 2) {
      throw DomainError("free_extension_exists: needs g0 >= 2");
    }
    return (g0 - 1) % m == 0;
  }

  namespace detail {
    // least rotation of a cyclic word
    inline std::string min_rotation(const std::vector<std::string>& w) {
      std::string best;
      for (std::size_t s = 0; s < w.size(); ++s) {
        std::string cur;
        for (std::size_t k = 0; k < w.size(); ++k) {
          cur += w[(s + k) % w.size()] + ";";
        }
        if (s == 0 || cur < best) {
          best = cur;
        }
      }
      return best;
    }

    inline std::vector<std::string> colored_cycles(const ConePermutation& p, const std::vector<ClassKey>& keys) {
      std::vector<std::string> out;
      for (const auto& c : p.cycles()) {
        std::vector<std::string> w;
        for (int j : c) {
          w.push_back(keys[j].to_string());
        }
        out.push_back("[" + min_rotation(w) + "]");
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace detail

  // Equivalent when some automorphism of A_n and relabelling π of cone
  // points carries one alternating data set to the other while conjugating
  // the cone permutations, and the cyclic parts differ by a unit power.
  inline bool wlp_equivalent(const WeakLiftablePair& a, const WeakLiftablePair& b) {
    if (a.alt.spec != b.alt.spec || a.alt.g0 != b.alt.g0 || a.alt.r() != b.alt.r()
        || a.cone_perm.degree() != b.cone_perm.degree() || a.quotient_cyclic.n != b.quotient_cyclic.n
        || a.quotient_cyclic.g0 != b.quotient_cyclic.g0) {
      return false;
    }
    bool cyclic_ok = false;
    for (std::int64_t ell : units(a.quotient_cyclic.n)) {
      if (a.quotient_cyclic.power(ell) == b.quotient_cyclic) {
        cyclic_ok = true;
        break;
      }
    }
    if (!cyclic_ok) {
      return false;
    }
    auto ka = class_keys(a.alt);
    auto kb = class_keys(b.alt);
    auto cb = detail::colored_cycles(b.cone_perm, kb);
    for (Parity p : {Parity::even, Parity::odd}) {
      auto ta = detail::transform_keys(a.alt.spec, ka, p, 0);
      if (detail::colored_cycles(a.cone_perm, ta) == cb) {
        return true;
      }
    }
    return false;
  }

  inline ValidationResult validate_wlp(const WeakLiftablePair& w, std::int64_t cap = search_cap()) {
    ValidationResult res = validate_edataset(w.alt, cap);
    if (w.alt.spec.m != 1) {
      res.issues.push_back({"alt", "first component must be an alternating data set"});
    }
    ValidationResult q = validate_cyclic(w.quotient_cyclic);
    for (const auto& is : q.issues) {
      res.issues.push_back({"quotient_" + is.code, is.message});
    }
    if (w.cone_perm.degree() != w.alt.r()) {
      res.issues.push_back({"cone_perm", "permutation is on " + std::to_string(w.cone_perm.degree())
                                             + " points, data set has " + std::to_string(w.alt.r())});
    } else {
      if (w.quotient_cyclic.n % w.cone_perm.order() != 0) {
        res.issues.push_back({"cone_perm", "order " + std::to_string(w.cone_perm.order()) + " does not divide "
                                               + std::to_string(w.quotient_cyclic.n)});
      }
      auto flat = w.alt.flat();
      for (int j = 0; j < w.cone_perm.degree(); ++j) {
        if (!(cycle_type(flat[j].sigma) == cycle_type(flat[w.cone_perm[j]].sigma))) {
          res.issues.push_back({"cone_perm", "point " + std::to_string(j + 1) + " is sent to a point of another cycle type"});
          break;
        }
      }
    }
    if (!res.issues.empty()) {
      res.genus.reset();
    }
    return res;
  }

}  // namespace altlift

#endif  // ALTLIFT_LIFT_HPP_
