#ifndef ALTLIFT_NUMTHEORY_HPP_
#define ALTLIFT_NUMTHEORY_HPP_

#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/rational.hpp>

#include "error.hpp"

namespace altlift {

  using Rational = boost::rational<std::int64_t>;

  inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
  }

  inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        small.push_back(d);
        if (d * d != n) {
          large.push_back(n / d);
        }
      }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
  }

  // Residues 1 <= u < n with gcd(u, n) = 1; for n = 1 this is {0}.
  inline std::vector<std::int64_t> units(std::int64_t n) {
    if (n == 1) {
      return {0};
    }
    std::vector<std::int64_t> out;
    for (std::int64_t u = 1; u < n; ++u) {
      if (std::gcd(u, n) == 1) {
        out.push_back(u);
      }
    }
    return out;
  }

  inline std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
    if (n == 1) {
      return 0;
    }
    std::int64_t t = 0, new_t = 1, r = n, new_r = mod(a, n);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = t - q * new_t;
      std::swap(t, new_t);
      r = r - q * new_r;
      std::swap(r, new_r);
    }
    if (r != 1) {
      throw DomainError("inverse_mod: " + std::to_string(a) + " is not a unit mod "
                        + std::to_string(n));
    }
    return mod(t, n);
  }

  // Order of x in the additive group Z_m.
  inline std::int64_t additive_order(std::int64_t x, std::int64_t m) {
    return m / std::gcd(mod(x, m), m);
  }

  inline bool is_prime(std::int64_t p) {
    if (p < 2) {
      return false;
    }
    for (std::int64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int k = 2; k <= n; ++k) {
      f *= k;
    }
    return f;
  }

}  // namespace altlift

#endif  // ALTLIFT_NUMTHEORY_HPP_
