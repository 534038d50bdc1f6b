#ifndef ALTLIFT_PERM_HPP_
#define ALTLIFT_PERM_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace altlift {

  inline constexpr int kMaxDegree = 16;

  enum class Parity { even, odd };

  inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

  // Multiset of cycle lengths, fixed points included, sorted descending.
  struct CycleType {
    std::vector<int> parts;

    int degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;

    std::string to_string() const {
      std::string out = "{";
      for (std::size_t k = 0; k < parts.size(); ++k) {
        out += (k ? "," : "") + std::to_string(parts[k]);
      }
      return out + "}";
    }
  };

  // A bijection of {1..n}. Points are 1-based at the interface and 0-based
  // in storage.
  class Permutation {
   public:
    Permutation() : Permutation(1) {}

    explicit Permutation(int n) : n_(n) {
      if (n < 1 || n > kMaxDegree) {
        throw DomainError("Permutation: degree " + std::to_string(n) + " outside 1.."
                          + std::to_string(kMaxDegree));
      }
      for (int k = 0; k < kMaxDegree; ++k) {
        img_[k] = static_cast<std::uint8_t>(k);
      }
    }

    static Permutation identity(int n) { return Permutation(n); }

    // images[k-1] is the image of k.
    static Permutation from_images(const std::vector<int>& images) {
      Permutation p(static_cast<int>(images.size()));
      std::vector<bool> seen(images.size(), false);
      for (std::size_t k = 0; k < images.size(); ++k) {
        int v = images[k];
        if (v < 1 || v > p.n_ || seen[v - 1]) {
          throw DomainError("Permutation: images do not form a bijection");
        }
        seen[v - 1] = true;
        p.img_[k] = static_cast<std::uint8_t>(v - 1);
      }
      return p;
    }

    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
      Permutation p(n);
      std::vector<bool> used(n, false);
      for (const auto& c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) {
          int a = c[k];
          if (a < 1 || a > n) {
            throw DomainError("Permutation: point " + std::to_string(a) + " outside 1.."
                              + std::to_string(n));
          }
          if (used[a - 1]) {
            throw DomainError("Permutation: point " + std::to_string(a) + " repeated");
          }
          used[a - 1] = true;
          p.img_[a - 1] = static_cast<std::uint8_t>(c[(k + 1) % c.size()] - 1);
        }
      }
      return p;
    }

    // Cycle notation, e.g. "(1 2 3)(4 5)" or "id". Cycles need not be led by
    // their minimum, and commas between points are tolerated.
    static Permutation parse(const std::string& text, int n) {
      std::string t;
      for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch)) || (!t.empty() && t.back() != ' ')) {
          t += std::isspace(static_cast<unsigned char>(ch)) ? ' ' : ch;
        }
      }
      while (!t.empty() && t.back() == ' ') {
        t.pop_back();
      }
      if (t == "id" || t == "()" || t.empty()) {
        return Permutation(n);
      }
      std::vector<std::vector<int>> cycles;
      std::size_t pos = 0;
      while (pos < t.size()) {
        if (t[pos] == ' ') {
          ++pos;
          continue;
        }
        if (t[pos] != '(') {
          throw ParseError("permutation text: expected '(' in \"" + text + "\"");
        }
        std::size_t close = t.find(')', pos);
        if (close == std::string::npos) {
          throw ParseError("permutation text: unbalanced '(' in \"" + text + "\"");
        }
        std::string body = t.substr(pos + 1, close - pos - 1);
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream in(body);
        std::vector<int> cyc;
        std::string tok;
        while (in >> tok) {
          if (!std::all_of(tok.begin(), tok.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw ParseError("permutation text: bad point \"" + tok + "\"");
          }
          cyc.push_back(std::stoi(tok));
        }
        if (!cyc.empty()) {
          cycles.push_back(cyc);
        }
        pos = close + 1;
      }
      try {
        return from_cycles(n, cycles);
      } catch (const DomainError& e) {
        throw ParseError(std::string("permutation text \"") + text + "\": " + e.what());
      }
    }

    int degree() const { return n_; }

    // Image of the 1-based point a.
    int operator()(int a) const { return img_[a - 1] + 1; }

    int image0(int a) const { return img_[a]; }

    std::vector<int> images() const {
      std::vector<int> out(n_);
      for (int k = 0; k < n_; ++k) {
        out[k] = img_[k] + 1;
      }
      return out;
    }

    bool is_identity() const {
      for (int k = 0; k < n_; ++k) {
        if (img_[k] != k) {
          return false;
        }
      }
      return true;
    }

    Permutation inverse() const {
      Permutation r(n_);
      for (int k = 0; k < n_; ++k) {
        r.img_[img_[k]] = static_cast<std::uint8_t>(k);
      }
      return r;
    }

    // Nontrivial cycles, each led by its minimum, sorted by minimum.
    std::vector<std::vector<int>> cycles() const {
      std::vector<std::vector<int>> out;
      std::array<bool, kMaxDegree> seen{};
      for (int k = 0; k < n_; ++k) {
        if (seen[k] || img_[k] == k) {
          continue;
        }
        std::vector<int> c;
        for (int a = k; !seen[a]; a = img_[a]) {
          seen[a] = true;
          c.push_back(a + 1);
        }
        out.push_back(std::move(c));
      }
      return out;
    }

    std::string to_string() const {
      auto cs = cycles();
      if (cs.empty()) {
        return "id";
      }
      std::string out;
      for (const auto& c : cs) {
        out += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
          out += (k ? " " : "") + std::to_string(c[k]);
        }
        out += ')';
      }
      return out;
    }

    // Lehmer rank in [0, n!).
    std::uint64_t rank() const {
      std::uint64_t r = 0;
      std::uint32_t used = 0;
      for (int k = 0; k < n_; ++k) {
        int v = img_[k];
        int smaller = std::popcount(used & ((1u << v) - 1u));
        r = r * static_cast<std::uint64_t>(n_ - k) + static_cast<std::uint64_t>(v - smaller);
        used |= 1u << v;
      }
      return r;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
      if (a.n_ != b.n_) {
        return false;
      }
      for (int k = 0; k < a.n_; ++k) {
        if (a.img_[k] != b.img_[k]) {
          return false;
        }
      }
      return true;
    }

    friend bool operator<(const Permutation& a, const Permutation& b) {
      if (a.n_ != b.n_) {
        return a.n_ < b.n_;
      }
      for (int k = 0; k < a.n_; ++k) {
        if (a.img_[k] != b.img_[k]) {
          return a.img_[k] < b.img_[k];
        }
      }
      return false;
    }

    friend Permutation compose(const Permutation& p, const Permutation& q);

   private:
    int n_;
    std::array<std::uint8_t, kMaxDegree> img_;
  };

  // (p∘q)(a) = p(q(a)).
  inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.n_ != q.n_) {
      throw SizeError("compose: degrees " + std::to_string(p.n_) + " and " + std::to_string(q.n_)
                      + " differ");
    }
    Permutation r(p.n_);
    for (int k = 0; k < p.n_; ++k) {
      r.img_[k] = p.img_[q.img_[k]];
    }
    return r;
  }

  inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

  inline Permutation power(const Permutation& p, long long k) {
    Permutation base = k < 0 ? p.inverse() : p;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    Permutation r(p.degree());
    while (e) {
      if (e & 1u) {
        r = r * base;
      }
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

  // t p t^-1
  inline Permutation conjugate(const Permutation& p, const Permutation& t) {
    return t * p * t.inverse();
  }

  inline Permutation transposition(int n, int a, int b) { return Permutation::from_cycles(n, {{a, b}}); }

  inline CycleType cycle_type(const Permutation& p) {
    CycleType t;
    std::array<bool, kMaxDegree> seen{};
    for (int k = 0; k < p.degree(); ++k) {
      if (seen[k]) {
        continue;
      }
      int len = 0;
      for (int a = k; !seen[a]; a = p.image0(a)) {
        seen[a] = true;
        ++len;
      }
      t.parts.push_back(len);
    }
    std::sort(t.parts.rbegin(), t.parts.rend());
    return t;
  }

  inline long long order(const Permutation& p) {
    long long r = 1;
    for (int len : cycle_type(p).parts) {
      r = std::lcm(r, static_cast<long long>(len));
    }
    return r;
  }

  inline Parity parity(const CycleType& t) {
    int evens = 0;
    for (int len : t.parts) {
      evens += (len % 2 == 0);
    }
    return evens % 2 == 0 ? Parity::even : Parity::odd;
  }

  inline Parity parity(const Permutation& p) { return parity(cycle_type(p)); }

  inline bool is_even(const Permutation& p) { return parity(p) == Parity::even; }

  // The Σ_n-class of an even type splits in A_n iff its parts are odd and
  // pairwise distinct.
  inline bool splits_in_alt(const CycleType& t) {
    if (parity(t) != Parity::even) {
      throw DomainError("splits_in_alt: " + t.to_string() + " is the type of an odd permutation");
    }
    for (std::size_t k = 0; k < t.parts.size(); ++k) {
      if (t.parts[k] % 2 == 0 || (k > 0 && t.parts[k] == t.parts[k - 1])) {
        return false;
      }
    }
    return true;
  }

  // Representative of a cycle type: cycles on consecutive points, longest first.
  inline Permutation type_representative(const CycleType& t) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : t.parts) {
      std::vector<int> c;
      for (int k = 0; k < len; ++k) {
        c.push_back(next++);
      }
      if (len > 1) {
        cycles.push_back(c);
      }
    }
    return Permutation::from_cycles(t.degree(), cycles);
  }

  // Some τ with τ a τ^-1 = b. a and b must share a cycle type.
  inline Permutation conjugator(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
      throw SizeError("conjugator: degrees differ");
    }
    auto orbits = [](const Permutation& p) {
      std::vector<std::vector<int>> out;
      std::array<bool, kMaxDegree> seen{};
      for (int k = 0; k < p.degree(); ++k) {
        if (seen[k]) {
          continue;
        }
        std::vector<int> c;
        for (int x = k; !seen[x]; x = p.image0(x)) {
          seen[x] = true;
          c.push_back(x);
        }
        out.push_back(std::move(c));
      }
      std::stable_sort(out.begin(), out.end(),
                       [](const auto& u, const auto& v) { return u.size() > v.size(); });
      return out;
    };
    auto ca = orbits(a);
    auto cb = orbits(b);
    if (ca.size() != cb.size()) {
      throw DomainError("conjugator: cycle types differ");
    }
    std::vector<int> img(a.degree());
    for (std::size_t k = 0; k < ca.size(); ++k) {
      if (ca[k].size() != cb[k].size()) {
        throw DomainError("conjugator: cycle types differ");
      }
      for (std::size_t j = 0; j < ca[k].size(); ++j) {
        img[ca[k][j]] = cb[k][j] + 1;
      }
    }
    return Permutation::from_images(img);
  }

  // For an even permutation whose class splits: 0 if it is A_n-conjugate to
  // type_representative of its type, 1 otherwise. -1 if the class does not
  // split.
  inline int alt_class_bit(const Permutation& p) {
    CycleType t = cycle_type(p);
    if (!splits_in_alt(t)) {
      return -1;
    }
    return parity(conjugator(type_representative(t), p)) == Parity::even ? 0 : 1;
  }

  inline bool conjugate_in_alt(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) {
      throw SizeError("conjugate_in_alt: degrees differ");
    }
    if (!is_even(p) || !is_even(q)) {
      throw DomainError("conjugate_in_alt: arguments must be even permutations");
    }
    CycleType tp = cycle_type(p);
    if (tp != cycle_type(q)) {
      return false;
    }
    return !splits_in_alt(tp) || alt_class_bit(p) == alt_class_bit(q);
  }

  // Order of the Σ_n-centralizer of an element of type t.
  inline long long sym_centralizer_order(const CycleType& t) {
    long long z = 1;
    std::size_t k = 0;
    while (k < t.parts.size()) {
      std::size_t j = k;
      while (j < t.parts.size() && t.parts[j] == t.parts[k]) {
        ++j;
      }
      long long a = static_cast<long long>(j - k);
      for (long long r = 0; r < a; ++r) {
        z *= t.parts[k] * (r + 1);
      }
      k = j;
    }
    return z;
  }

  // All permutations of degree n in lexicographic image order.
  inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
      out.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

  inline std::vector<Permutation> all_even_permutations(int n) {
    std::vector<Permutation> out;
    for (auto& p : all_permutations(n)) {
      if (is_even(p)) {
        out.push_back(p);
      }
    }
    return out;
  }

  // Partitions of n, each sorted descending.
  inline std::vector<CycleType> partitions(int n) {
    std::vector<CycleType> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
      if (rest == 0) {
        out.push_back(CycleType{cur});
        return;
      }
      for (int k = std::min(rest, maxpart); k >= 1; --k) {
        cur.push_back(k);
        self(self, rest - k, k);
        cur.pop_back();
      }
    };
    rec(rec, n, n);
    return out;
  }

}  // namespace altlift

#endif  // ALTLIFT_PERM_HPP_
