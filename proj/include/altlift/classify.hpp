#ifndef ALTLIFT_CLASSIFY_HPP_
#define ALTLIFT_CLASSIFY_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "config.hpp"
#include "datasets.hpp"
#include "egroup.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "group_table.hpp"
#include "lift.hpp"
#include "numtheory.hpp"
#include "perm.hpp"

namespace altlift {

  // ---- generating vectors --------------------------------------------------

  // Images of the elliptic generators and of the 2 g0 hyperbolic ones
  // (α_1, β_1, α_2, β_2, ...), with ∏ images · ∏ [α_i, β_i] = 1.
  struct GeneratingVector {
    GroupSpec spec;
    Signature sig;
    std::vector<GroupElement> images;
    std::vector<GroupElement> handles;
  };

  inline ValidationResult check_generating_vector(const GeneratingVector& v) {
    ValidationResult res;
    auto bad = [&](const std::string& code, const std::string& msg) { res.issues.push_back({code, msg}); };
    if (v.images.size() != v.sig.periods.size()) {
      bad("length", "signature has " + std::to_string(v.sig.periods.size()) + " periods, vector has "
                        + std::to_string(v.images.size()) + " images");
      return res;
    }
    if (static_cast<std::int64_t>(v.handles.size()) != 2 * v.sig.g0) {
      bad("handles", "expected " + std::to_string(2 * v.sig.g0) + " handle images, got "
                         + std::to_string(v.handles.size()));
      return res;
    }
    for (std::size_t j = 0; j < v.images.size(); ++j) {
      std::int64_t o = element_order(v.spec, v.images[j]);
      if (o != v.sig.periods[j]) {
        bad("order", v.images[j].to_string() + " has order " + std::to_string(o) + ", period is "
                         + std::to_string(v.sig.periods[j]));
      }
    }
    GroupElement p = product(v.spec, v.images);
    for (std::size_t k = 0; k + 1 < v.handles.size(); k += 2) {
      p = mul(v.spec, p, commutator(v.spec, v.handles[k], v.handles[k + 1]));
    }
    if (!(p == identity_element(v.spec))) {
      bad("relation", "long relation evaluates to " + p.to_string());
    }
    auto all = v.images;
    all.insert(all.end(), v.handles.begin(), v.handles.end());
    if (all.empty() || !generates(v.spec, all)) {
      bad("generation", "images do not generate " + v.spec.display_name());
    }
    if (res.issues.empty()) {
      if (auto g = integral(riemann_hurwitz_genus(v.spec.order(), v.sig))) {
        res.genus = *g;
      } else {
        bad("genus", "Riemann-Hurwitz genus is not an integer");
      }
    }
    return res;
  }

  // A witness vector for a valid data set: the entries themselves, plus
  // searched handles when g0 = 1, or a generating pair on the first handle
  // and a commutator closing the relation on the second when g0 >= 2.
  inline GeneratingVector representative_vector(const EDataSet& D, std::int64_t cap = search_cap()) {
    ValidationResult v = validate_edataset(D, cap);
    if (v.indeterminate) {
      throw IndeterminateError("representative_vector: " + join_issues(v.issues));
    }
    if (!v.ok()) {
      throw DomainError("representative_vector: data set is not valid: " + join_issues(v.issues));
    }
    const GroupSpec& spec = D.spec;
    GeneratingVector out{spec, D.signature(), D.flat(), {}};
    if (D.g0 == 1) {
      auto h = find_torus_handles(D, cap);
      if (!h) {
        throw InternalError("representative_vector: handles vanished after validation");
      }
      out.handles = {h->first, h->second};
    } else if (D.g0 >= 2) {
      auto [a, b] = generating_pair(spec);
      GroupElement P = product(spec, out.images);
      GroupElement C = commutator(spec, a, b);
      GroupElement target = inverse(spec, mul(spec, P, C));
      auto [c, d] = realize_commutator_in_e(spec, target, cap);
      out.handles = {a, b, c, d};
      for (std::int64_t k = 2; k < D.g0; ++k) {
        out.handles.push_back(identity_element(spec));
        out.handles.push_back(identity_element(spec));
      }
    }
    ValidationResult chk = check_generating_vector(out);
    if (!chk.ok()) {
      throw InternalError("representative_vector: constructed vector fails: " + join_issues(chk.issues));
    }
    return out;
  }

  // ---- signatures ----------------------------------------------------------

  inline std::vector<GroupElement> class_representatives(const GroupSpec& spec) {
    spec.validate();
    std::vector<GroupElement> out;
    Permutation t = transposition(spec.n, 1, 2);
    for (const auto& ct : partitions(spec.n)) {
      Permutation rep = type_representative(ct);
      bool even = parity(ct) == Parity::even;
      for (std::int64_t x = 0; x < spec.m; ++x) {
        if (spec.i == 0) {
          if (!even) {
            continue;
          }
          out.push_back({rep, x});
          if (splits_in_alt(ct)) {
            out.push_back({t * rep * t, x});
          }
        } else if (even == (x % 2 == 0)) {
          out.push_back(from_sym(spec, rep, x));
        }
      }
    }
    return out;
  }

  inline std::set<std::int64_t> element_orders(const GroupSpec& spec) {
    std::set<std::int64_t> out;
    for (const auto& g : class_representatives(spec)) {
      out.insert(element_order(spec, g));
    }
    return out;
  }

  // All (g0; m_1 <= ... <= m_r) with periods among the element orders of E
  // solving Riemann-Hurwitz for |E| at the given genus.
  inline std::vector<Signature> admissible_signatures(std::int64_t genus, const GroupSpec& spec) {
    if (genus < 2) {
      throw DomainError("admissible_signatures: genus must be at least 2");
    }
    spec.validate();
    std::vector<std::int64_t> orders;
    for (auto o : element_orders(spec)) {
      if (o >= 2) {
        orders.push_back(o);
      }
    }
    const std::int64_t N = spec.order();
    std::vector<Signature> out;
    for (std::int64_t g0 = 0;; ++g0) {
      // Σ (1 - 1/m_j) must equal S
      Rational S = Rational(2 * genus - 2, N) + Rational(2 - 2 * g0);
      if (S < 0) {
        break;
      }
      std::vector<std::int64_t> cur;
      auto rec = [&](auto&& self, std::size_t from, Rational left) -> void {
        if (left.numerator() == 0) {
          if (!(g0 == 0 && cur.empty())) {
            out.push_back({g0, cur});
          }
          return;
        }
        for (std::size_t k = from; k < orders.size(); ++k) {
          Rational term = Rational(1) - Rational(1, orders[k]);
          if (term > left) {
            break;
          }
          cur.push_back(orders[k]);
          self(self, k, left - term);
          cur.pop_back();
        }
      };
      rec(rec, 0, S);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Same search with the periods drawn from the divisors of a bare group
  // order; only Riemann-Hurwitz and Lagrange are imposed.
  inline std::vector<Signature> admissible_signatures_for_order(std::int64_t genus, std::int64_t order) {
    if (genus < 2) {
      throw DomainError("admissible_signatures: genus must be at least 2");
    }
    if (order < 2) {
      throw DomainError("admissible_signatures: group order must be at least 2");
    }
    std::vector<std::int64_t> orders;
    for (auto d : divisors(order)) {
      if (d >= 2) {
        orders.push_back(d);
      }
    }
    std::vector<Signature> out;
    for (std::int64_t g0 = 0;; ++g0) {
      Rational S = Rational(2 * genus - 2, order) + Rational(2 - 2 * g0);
      if (S < 0) {
        break;
      }
      std::vector<std::int64_t> cur;
      auto rec = [&](auto&& self, std::size_t from, Rational left) -> void {
        if (left.numerator() == 0) {
          if (!(g0 == 0 && cur.empty())) {
            out.push_back({g0, cur});
          }
          return;
        }
        for (std::size_t k = from; k < orders.size(); ++k) {
          Rational term = Rational(1) - Rational(1, orders[k]);
          if (term > left) {
            break;
          }
          cur.push_back(orders[k]);
          self(self, k, left - term);
          cur.pop_back();
        }
      };
      rec(rec, 0, S);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // ---- records ---------------------------------------------------------------

  struct ClassifiedClass {
    EDataSet data;
    std::string canonical;
    GeneratingVector vector;
    std::optional<WeakLiftablePair> wlp;  // m >= 2
    // m = 1: cyclic factors of a fixed generating pair of A_n
    std::optional<std::pair<GroupElement, GroupElement>> pair;
    std::optional<std::pair<CyclicDataSet, CyclicDataSet>> factors;
  };

  struct ClassificationRecord {
    GroupSpec spec;
    std::int64_t genus = 0;
    std::vector<ClassifiedClass> classes;
    std::vector<std::string> flags;
    bool complete = true;
  };

  inline const char* kFlagSymmetricOnly = "Σ_n-equivalence only";
  // A_4 -> A_4/V_4 = Z_3 gives automorphisms (σ,x) -> (σ, x + k h(σ)) of
  // A_4 x Z_m when 3 | m; equivalence does not use them.
  inline const char* kFlagCentralAutomorphisms = "central automorphisms of A_4 × Z_m not applied";

  namespace detail {
    inline std::string canonical_from_keys(const GroupSpec& spec, std::int64_t g0, const std::vector<ClassKey>& keys) {
      std::string best;
      bool first = true;
      for (auto [p, ell] : automorphism_classes(spec)) {
        std::string s = serialize_keys(transform_keys(spec, keys, p, ell));
        if (first || s < best) {
          best = s;
          first = false;
        }
      }
      return std::to_string(spec.n) + "," + std::to_string(spec.m) + "," + std::to_string(spec.i) + ","
             + std::to_string(g0) + "|" + best;
    }

    inline bool class_sort_less(const ClassifiedClass& a, const ClassifiedClass& b) {
      auto sa = a.data.signature().sorted(), sb = b.data.signature().sorted();
      if (sa != sb) {
        return sa < sb;
      }
      return a.canonical < b.canonical;
    }

    // Outcome of the search for one multiset of classes.
    struct Realization {
      bool found = false;
      bool exhausted = false;  // budget ran out before a decision
      std::vector<int> images;
      std::vector<int> handles;
    };

    class Enumerator {
     public:
      Enumerator(const GroupTable& T, std::int64_t cap) : T_(T), cap_(cap) {}

      Realization realize(std::int64_t g0, const std::vector<int>& cls) {
        Realization res;
        const int r = static_cast<int>(cls.size());
        nodes_ = 0;
        if (g0 >= 2) {
          // no generation condition; any representatives will do
          res.found = true;
          for (int c : cls) {
            res.images.push_back(T_.rep(c));
          }
          return res;
        }
        if (r == 0) {
          return res;
        }
        std::vector<int> cur(r);
        cur[0] = T_.rep(cls[0]);
        try {
          if (g0 == 0) {
            res.found = sphere(cls, cur, 1, cur[0]);
          } else {
            build_commutators();
            res.found = torus(cls, cur, 1, cur[0], res.handles);
          }
        } catch (const IndeterminateError&) {
          res.exhausted = true;
          return res;
        }
        if (res.found) {
          res.images = cur;
        }
        return res;
      }

     private:
      void tick() {
        if (++nodes_ > cap_) {
          throw IndeterminateError("search budget exhausted");
        }
      }

      bool sphere(const std::vector<int>& cls, std::vector<int>& cur, int j, int prod) {
        const int r = static_cast<int>(cls.size());
        if (j == r - 1 || r == 1) {
          int last = T_.inv(prod);
          if (r == 1) {
            return false;  // a single nontrivial entry never closes
          }
          tick();
          if (T_.class_of(last) != cls[j]) {
            return false;
          }
          cur[j] = last;
          return T_.generates(cur);
        }
        for (int e : T_.members(cls[j])) {
          tick();
          cur[j] = e;
          if (sphere(cls, cur, j + 1, T_.mul(prod, e))) {
            return true;
          }
        }
        return false;
      }

      void build_commutators() {
        if (!comm_.empty()) {
          return;
        }
        const int N = T_.size();
        comm_.assign(N, {});
        for (int h2 = 0; h2 < N; ++h2) {
          for (int h1 = 0; h1 < N; ++h1) {
            comm_[T_.commutator(h2, h1)].push_back({h1, h2});
          }
        }
      }

      bool torus(const std::vector<int>& cls, std::vector<int>& cur, int j, int prod, std::vector<int>& handles) {
        const int r = static_cast<int>(cls.size());
        if (j == r) {
          for (auto [h1, h2] : comm_[prod]) {
            tick();
            auto gens = cur;
            gens.push_back(h1);
            gens.push_back(h2);
            if (T_.generates(gens)) {
              handles = {h1, h2};
              return true;
            }
          }
          return false;
        }
        for (int e : T_.members(cls[j])) {
          tick();
          cur[j] = e;
          if (torus(cls, cur, j + 1, T_.mul(prod, e), handles)) {
            return true;
          }
        }
        return false;
      }

      const GroupTable& T_;
      std::int64_t cap_;
      std::int64_t nodes_ = 0;
      std::vector<std::vector<std::pair<int, int>>> comm_;
    };

    inline bool group_tabulable(const GroupSpec& spec) { return factorial(spec.n) / 2 <= GroupTable::kMaxAltOrder; }

    inline std::pair<GroupElement, GroupElement> table_pair(const GroupSpec& spec) { return generating_pair(spec); }

    inline void annotate(ClassifiedClass& c, std::int64_t cap) {
      const GroupSpec& spec = c.data.spec;
      if (spec.m >= 2) {
        c.wlp = psi(c.data);
      } else {
        auto ab = table_pair(spec);
        c.pair = ab;
        c.factors = std::make_pair(cyclic_factor(c.data, ab.first), cyclic_factor(c.data, ab.second));
      }
      (void)cap;
    }
  }  // namespace detail

  // Weak conjugacy classes of E-actions at the given genus. For each
  // admissible signature the search runs over multisets of conjugacy
  // classes (braid moves make the order of the entries irrelevant), skips a
  // multiset whose canonical form was already decided, and looks for one
  // realizing tuple with the first image fixed to a class representative.
  inline ClassificationRecord enumerate_classes(std::int64_t genus, const GroupSpec& spec,
                                                std::int64_t cap = search_cap(),
                                                const std::optional<Signature>& only = std::nullopt) {
    if (genus < 2) {
      throw DomainError("enumerate_classes: genus must be at least 2");
    }
    if (genus > max_genus()) {
      throw DomainError("enumerate_classes: genus " + std::to_string(genus) + " exceeds the limit "
                        + std::to_string(max_genus()) + " (ALT_LIFT_MAX_GENUS)");
    }
    spec.validate();
    ClassificationRecord rec{spec, genus, {}, {}, true};
    if (spec.n == 6) {
      rec.flags.push_back(kFlagSymmetricOnly);
    }
    if (spec.n == 4 && spec.i == 0 && spec.m % 3 == 0) {
      rec.flags.push_back(kFlagCentralAutomorphisms);
    }
    auto sigs = admissible_signatures(genus, spec);
    if (only) {
      Signature want = only->sorted();
      sigs.erase(std::remove_if(sigs.begin(), sigs.end(), [&](const Signature& s) { return s != want; }),
                 sigs.end());
    }
    if (sigs.empty()) {
      return rec;
    }
    if (!detail::group_tabulable(spec)) {
      throw DomainError("enumerate_classes: " + spec.display_name() + " is too large to enumerate");
    }
    GroupTable T(spec);
    detail::Enumerator en(T, cap);
    std::map<std::int64_t, std::vector<int>> by_order;
    for (int c = 0; c < T.num_classes(); ++c) {
      by_order[T.class_order(c)].push_back(c);
    }
    std::set<std::string> decided;
    for (const auto& sig : sigs) {
      const int r = static_cast<int>(sig.periods.size());
      std::vector<int> cls(r);
      auto choose = [&](auto&& self, int j) -> void {
        if (j == r) {
          // abelianization test: the product of representatives must be a
          // product of commutators; classes determine this
          std::vector<GroupElement> reps;
          std::vector<ClassKey> keys;
          for (int c : cls) {
            reps.push_back(T.element(T.rep(c)));
            keys.push_back(T.key(c));
          }
          if (!in_commutator_subgroup(spec, product(spec, reps))) {
            return;
          }
          std::string canon = detail::canonical_from_keys(spec, sig.g0, keys);
          if (decided.count(canon)) {
            return;
          }
          detail::Realization real = en.realize(sig.g0, cls);
          if (real.exhausted) {
            rec.complete = false;
            rec.flags.push_back("incomplete: search budget exhausted at " + sig.to_string());
            return;
          }
          decided.insert(canon);
          if (!real.found) {
            return;
          }
          std::vector<GroupElement> imgs;
          for (int e : real.images) {
            imgs.push_back(T.element(e));
          }
          ClassifiedClass cc;
          cc.data = EDataSet::make(spec, sig.g0, imgs).compressed();
          cc.canonical = canon;
          if (sig.g0 == 1) {
            cc.vector = GeneratingVector{spec, sig, imgs, {T.element(real.handles[0]), T.element(real.handles[1])}};
          } else if (sig.g0 == 0) {
            cc.vector = GeneratingVector{spec, sig, imgs, {}};
          } else {
            cc.vector = representative_vector(cc.data, cap);
          }
          ValidationResult chk = check_generating_vector(cc.vector);
          if (!chk.ok() || !chk.genus || *chk.genus != genus) {
            throw InternalError("enumerate_classes: emitted vector fails its own check: " + join_issues(chk.issues));
          }
          detail::annotate(cc, cap);
          rec.classes.push_back(std::move(cc));
          return;
        }
        const auto& pool = by_order[sig.periods[j]];
        for (int c : pool) {
          if (j > 0 && sig.periods[j] == sig.periods[j - 1] && c < cls[j - 1]) {
            continue;
          }
          cls[j] = c;
          self(self, j + 1);
        }
      };
      choose(choose, 0);
    }
    std::sort(rec.classes.begin(), rec.classes.end(), detail::class_sort_less);
    return rec;
  }

  // ---- catalogs --------------------------------------------------------------

  // Every E-group with 4 <= n <= n_max whose order is at most 84(g-1).
  inline std::vector<GroupSpec> catalog_specs(std::int64_t genus, int n_max = 9) {
    std::vector<GroupSpec> out;
    const std::int64_t bound = 84 * (genus - 1);
    for (int n = 4; n <= n_max; ++n) {
      std::int64_t a = factorial(n) / 2;
      for (std::int64_t m = 1; a * m <= bound; ++m) {
        out.push_back({n, m, 0});
        if (m % 2 == 0) {
          out.push_back({n, m, 1});
        }
      }
    }
    return out;
  }

  // Records for all specs, in spec order, computed on `jobs` threads; the
  // result does not depend on the thread count.
  inline std::vector<ClassificationRecord> classify_all(std::int64_t genus, const std::vector<GroupSpec>& specs,
                                                        int jobs = 1, std::int64_t cap = search_cap()) {
    std::vector<ClassificationRecord> out(specs.size());
    std::vector<std::exception_ptr> errs(specs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < specs.size();) {
        try {
          out[k] = enumerate_classes(genus, specs[k], cap);
        } catch (...) {
          errs[k] = std::current_exception();
        }
      }
    };
    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) {
      pool.emplace_back(work);
    }
    work();
    for (auto& th : pool) {
      th.join();
    }
    for (auto& e : errs) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return out;
  }

  // ---- weak generation -------------------------------------------------------

  // Classes of the record with a generating pair (a, b) whose cyclic
  // factors are exactly D_F and D_G.
  inline std::vector<EDataSet> find_weakly_generated(const std::vector<EDataSet>& sets, const CyclicDataSet& DF,
                                                     const CyclicDataSet& DG, std::int64_t cap = search_cap()) {
    std::vector<EDataSet> out;
    for (const auto& D : sets) {
      auto g = integral(D.genus_rational());
      for (const auto* c : {&DF, &DG}) {
        ValidationResult v = validate_cyclic(*c);
        if (!v.ok()) {
          throw DomainError("find_weakly_generated: " + c->to_string() + " is not a valid cyclic data set: "
                            + join_issues(v.issues));
        }
        if (!g || *v.genus != *g) {
          throw DomainError("find_weakly_generated: " + c->to_string() + " has genus " + std::to_string(*v.genus)
                            + ", data set has " + (g ? std::to_string(*g) : std::string("?")));
        }
      }
      const GroupSpec& spec = D.spec;
      std::vector<GroupElement> fa, fb;
      for (const auto& rep : class_representatives(spec)) {
        std::int64_t o = element_order(spec, rep);
        if (o == DF.n && cyclic_factor(D, rep) == DF) {
          fa.push_back(rep);
        }
        if (o == DG.n && cyclic_factor(D, rep) == DG) {
          fb.push_back(rep);
        }
      }
      bool hit = false;
      std::mt19937_64 rng(0xfac7ULL);
      for (const auto& a : fa) {
        for (const auto& b0 : fb) {
          // a fixed; b over its class
          if (detail::group_tabulable(spec) && spec.order() <= cap) {
            for (const auto& h : all_elements(spec)) {
              GroupElement b = mul(spec, mul(spec, h, b0), inverse(spec, h));
              if (generates(spec, {a, b})) {
                hit = true;
                break;
              }
            }
          } else {
            for (std::int64_t k = 0; k < std::min<std::int64_t>(cap, 20000) && !hit; ++k) {
              GroupElement h = random_element(spec, rng);
              GroupElement b = mul(spec, mul(spec, h, b0), inverse(spec, h));
              hit = generates(spec, {a, b});
            }
            if (!hit) {
              throw IndeterminateError("find_weakly_generated: no generating conjugate found by sampling");
            }
          }
          if (hit) {
            break;
          }
        }
        if (hit) {
          break;
        }
      }
      if (hit) {
        out.push_back(D);
      }
    }
    return out;
  }

  inline std::vector<EDataSet> find_weakly_generated(std::int64_t genus, const GroupSpec& spec,
                                                     const CyclicDataSet& DF, const CyclicDataSet& DG,
                                                     std::int64_t cap = search_cap()) {
    for (const auto* c : {&DF, &DG}) {
      ValidationResult v = validate_cyclic(*c);
      if (!v.ok() || *v.genus != genus) {
        throw DomainError("find_weakly_generated: " + c->to_string() + " does not describe a genus "
                          + std::to_string(genus) + " action");
      }
    }
    std::vector<EDataSet> sets;
    for (const auto& c : enumerate_classes(genus, spec, cap).classes) {
      sets.push_back(c.data);
    }
    return find_weakly_generated(sets, DF, DG, cap);
  }

  // ---- involution extensions ---------------------------------------------

  enum class ExtensionKind { symmetric, direct_product, not_liftable };

  inline const char* to_string(ExtensionKind k) {
    switch (k) {
      case ExtensionKind::symmetric:
        return "WLS";
      case ExtensionKind::direct_product:
        return "direct-product";
      default:
        return "not-liftable";
    }
  }

  struct ExtensionVerdict {
    ExtensionKind kind = ExtensionKind::not_liftable;
    Signature signature;                // of the would-be E-quotient
    std::optional<EDataSet> witness;    // a data set whose Ψ is the pair
    std::string reason;
  };

  // Whether an involution on the A_n-quotient, given by (D_Ḡ, Π), lifts to
  // a Σ_n action, only to A_n × Z_2, or not at all.
  inline ExtensionVerdict classify_involution_extension(const EDataSet& alt, const CyclicDataSet& DG,
                                                        const ConePermutation& Pi, std::int64_t cap = search_cap()) {
    if (DG.n != 2) {
      throw DomainError("classify_involution_extension: the cyclic data set must have degree 2");
    }
    if (alt.spec.m != 1) {
      throw DomainError("classify_involution_extension: expects an alternating data set");
    }
    WeakLiftablePair target{alt, DG, Pi};
    ExtensionVerdict out;
    out.signature = quotient_signature(target);
    auto g = integral(alt.genus_rational());
    if (!g) {
      throw DomainError("classify_involution_extension: alternating data set has non-integral genus");
    }
    const int n = alt.spec.n;
    auto search = [&](int i) -> std::optional<EDataSet> {
      GroupSpec s{n, 2, i};
      auto orders = element_orders(s);
      for (auto p : out.signature.periods) {
        if (!orders.count(p)) {
          return std::nullopt;
        }
      }
      for (const auto& c : enumerate_classes(*g, s, cap, out.signature).classes) {
        if (c.wlp && wlp_equivalent(*c.wlp, target)) {
          return c.data;
        }
      }
      return std::nullopt;
    };
    // order obstructions, reported whatever the outcome
    std::vector<std::string> missing;
    for (int i : {1, 0}) {
      GroupSpec s{n, 2, i};
      auto orders = element_orders(s);
      for (auto p : out.signature.periods) {
        if (!orders.count(p)) {
          missing.push_back("no element in " + s.display_name() + " has order " + std::to_string(p));
          break;
        }
      }
    }
    std::string obstruction;
    for (const auto& m : missing) {
      obstruction += (obstruction.empty() ? "" : "; ") + m;
    }
    if (auto w = search(1)) {
      out.kind = ExtensionKind::symmetric;
      out.witness = w;
      out.reason = "a symmetric data set maps to the pair";
      return out;
    }
    if (auto w = search(0)) {
      out.kind = ExtensionKind::direct_product;
      out.witness = w;
      out.reason = "only a direct-product data set maps to the pair";
      if (!obstruction.empty()) {
        out.reason += " (" + obstruction + ")";
      }
      return out;
    }
    out.kind = ExtensionKind::not_liftable;
    out.reason = obstruction.empty() ? "no data set of degree 2 maps to the pair" : obstruction;
    return out;
  }

  // ---- order bounds and exclusions -----------------------------------------

  // ℓ(n): the largest lcm over partitions of n.
  inline std::int64_t landau(int n) {
    if (n < 1) {
      throw DomainError("landau: n must be positive");
    }
    // dp over prime powers would be faster; partitions suffice at this scale
    std::int64_t best = 1;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart, std::int64_t l) -> void {
      if (left == 0) {
        best = std::max(best, l);
        return;
      }
      for (int p = std::min(left, maxpart); p >= 1; --p) {
        self(self, left - p, p, std::lcm(l, static_cast<std::int64_t>(p)));
      }
    };
    rec(rec, n, n, 1);
    return best;
  }

  struct PredicateReport {
    bool ok = true;
    std::int64_t max_order = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
  };

  inline PredicateReport order_bound_check(const ClassificationRecord& rec) {
    PredicateReport rep;
    if (rec.classes.empty()) {
      return rep;
    }
    for (auto o : element_orders(rec.spec)) {
      rep.max_order = std::max(rep.max_order, o);
    }
    if (rec.spec.n >= 7) {
      if (rep.max_order > rec.genus) {
        rep.ok = false;
        rep.violations.push_back(rec.spec.display_name() + " has an element of order " + std::to_string(rep.max_order)
                                 + " > g = " + std::to_string(rec.genus));
      }
      if (rep.max_order >= 2 * rec.genus + 1) {
        rep.violations.push_back("element of order at least 2g+1 in an n >= 7 record");
      }
    } else {
      rep.notes.push_back("n < 7: largest element order " + std::to_string(rep.max_order) + " reported only");
    }
    return rep;
  }

  inline PredicateReport exclusion_predicates(const ClassificationRecord& rec) {
    PredicateReport rep;
    const GroupSpec& spec = rec.spec;
    const std::int64_t g = rec.genus;
    if (rec.classes.empty()) {
      return rep;
    }
    bool hyper_hyp = spec.n >= 10 && (spec.i == 0 ? spec.m % 2 == 1 : (spec.m / 2) % 2 == 1);
    CyclicDataSet hyper{2, 0, {{1, 2, 2 * g + 2}}};
    auto reps = class_representatives(spec);
    for (const auto& c : rec.classes) {
      for (const auto& a : reps) {
        std::int64_t o = element_order(spec, a);
        if (o == 1) {
          continue;
        }
        rep.max_order = std::max(rep.max_order, o);
        if (spec.n < 7 && !(o == 2 && hyper_hyp)) {
          continue;
        }
        CyclicDataSet f = cyclic_factor(c.data, a);
        if (spec.n >= 7 && f.g0 == 0 && f.cone_points() == 3) {
          rep.ok = false;
          rep.violations.push_back(c.data.to_string() + ": " + a.tuple_string() + " is irreducible " + f.to_string());
        }
        if (o == 2 && hyper_hyp && f == hyper) {
          rep.ok = false;
          rep.violations.push_back(c.data.to_string() + ": " + a.tuple_string() + " is a hyperelliptic involution");
        }
      }
    }
    if (spec.order() > 5 * g - 5) {
      if (spec.m > 26) {
        if (spec.n >= 5 && spec.n != 6) {
          rep.ok = false;
          rep.violations.push_back(spec.display_name() + " has order " + std::to_string(spec.order()) + " > 5g-5 with m = "
                                   + std::to_string(spec.m) + " > 26");
        } else {
          rep.notes.push_back(spec.display_name() + ": m > 26 with |E| > 5g-5 outside the n >= 5, n != 6 range");
        }
      }
    }
    return rep;
  }

}  // namespace altlift

#endif  // ALTLIFT_CLASSIFY_HPP_
