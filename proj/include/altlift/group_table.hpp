#ifndef ALTLIFT_GROUP_TABLE_HPP_
#define ALTLIFT_GROUP_TABLE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "egroup.hpp"
#include "error.hpp"
#include "perm.hpp"

namespace altlift {

  // Multiplication, inverses, orders and conjugacy classes of a small E,
  // indexed by alt_index * m + x. Built once per group and read-only after.
  class GroupTable {
   public:
    static constexpr std::int64_t kMaxAltOrder = 2520;

    explicit GroupTable(const GroupSpec& spec) : spec_(spec) {
      spec.validate();
      if (factorial(spec.n) / 2 > kMaxAltOrder) {
        throw DomainError("GroupTable: A_" + std::to_string(spec.n) + " is too large to tabulate");
      }
      alt_ = all_even_permutations(spec.n);
      const int na = static_cast<int>(alt_.size());
      for (int k = 0; k < na; ++k) {
        alt_index_[alt_[k].rank()] = k;
      }
      alt_mul_.resize(static_cast<std::size_t>(na) * na);
      for (int a = 0; a < na; ++a) {
        for (int b = 0; b < na; ++b) {
          alt_mul_[static_cast<std::size_t>(a) * na + b] = static_cast<std::uint16_t>(alt_pos(alt_[a] * alt_[b]));
        }
      }
      Permutation t = transposition(spec.n, 1, 2);
      flip_.resize(na);
      for (int a = 0; a < na; ++a) {
        flip_[a] = static_cast<std::uint16_t>(alt_pos(t * alt_[a] * t));
      }
      const int N = size();
      elems_.reserve(N);
      for (int a = 0; a < na; ++a) {
        for (std::int64_t x = 0; x < spec.m; ++x) {
          elems_.push_back({alt_[a], x});
        }
      }
      inv_.resize(N);
      order_.resize(N);
      class_.resize(N);
      std::map<ClassKey, int> key_index;
      for (int e = 0; e < N; ++e) {
        inv_[e] = index_of(altlift::inverse(spec, elems_[e]));
        order_[e] = static_cast<int>(element_order(spec, elems_[e]));
        ClassKey key = class_key(spec, elems_[e]);
        auto it = key_index.find(key);
        if (it == key_index.end()) {
          it = key_index.emplace(key, static_cast<int>(keys_.size())).first;
          keys_.push_back(key);
          reps_.push_back(e);
          members_.emplace_back();
        }
        class_[e] = it->second;
        members_[it->second].push_back(e);
      }
    }

    const GroupSpec& spec() const { return spec_; }
    int size() const { return static_cast<int>(alt_.size() * spec_.m); }
    const GroupElement& element(int e) const { return elems_[e]; }
    int identity() const { return 0; }

    int index_of(const GroupElement& g) const {
      return alt_pos(g.sigma) * static_cast<int>(spec_.m) + static_cast<int>(g.x);
    }

    int mul(int a, int b) const {
      const int m = static_cast<int>(spec_.m);
      int ia = a / m, xa = a % m, ib = b / m, xb = b % m;
      if (spec_.i == 1 && (xa & 1)) {
        ib = flip_[ib];
      }
      int x = xa + xb;
      if (x >= m) {
        x -= m;
      }
      return alt_mul_[static_cast<std::size_t>(ia) * alt_.size() + ib] * m + x;
    }

    int inv(int a) const { return inv_[a]; }
    int order(int a) const { return order_[a]; }
    int residue(int a) const { return a % static_cast<int>(spec_.m); }

    int num_classes() const { return static_cast<int>(keys_.size()); }
    int class_of(int a) const { return class_[a]; }
    const ClassKey& key(int cls) const { return keys_[cls]; }
    int rep(int cls) const { return reps_[cls]; }
    const std::vector<int>& members(int cls) const { return members_[cls]; }
    int class_order(int cls) const { return order_[reps_[cls]]; }

    bool generates(const std::vector<int>& gens) const {
      const int N = size();
      std::vector<char> seen(N, 0);
      std::vector<int> queue{identity()};
      seen[identity()] = 1;
      int count = 1;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        for (int g : gens) {
          int p = mul(queue[h], g);
          if (!seen[p]) {
            seen[p] = 1;
            queue.push_back(p);
            if (++count == N) {
              return true;
            }
          }
        }
      }
      return count == N;
    }

    // a b a^-1 b^-1
    int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

   private:
    int alt_pos(const Permutation& p) const {
      auto it = alt_index_.find(p.rank());
      if (it == alt_index_.end()) {
        throw DomainError("GroupTable: " + p.to_string() + " is not in A_" + std::to_string(spec_.n));
      }
      return it->second;
    }

    GroupSpec spec_;
    std::vector<Permutation> alt_;
    std::unordered_map<std::uint64_t, int> alt_index_;
    std::vector<std::uint16_t> alt_mul_;
    std::vector<std::uint16_t> flip_;
    std::vector<GroupElement> elems_;
    std::vector<int> inv_, order_, class_;
    std::vector<ClassKey> keys_;
    std::vector<int> reps_;
    std::vector<std::vector<int>> members_;
  };

}  // namespace altlift

#endif  // ALTLIFT_GROUP_TABLE_HPP_
