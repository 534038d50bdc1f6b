#ifndef ALTLIFT_CONFIG_HPP_
#define ALTLIFT_CONFIG_HPP_

#include <cstdint>
#include <cstdlib>
#include <string>

#include "error.hpp"

namespace altlift {

  inline constexpr std::int64_t kDefaultSearchCap = 5'000'000;
  inline constexpr std::int64_t kDefaultMaxGenus = 30;
  // Largest subgroup a breadth-first closure may build before giving up.
  inline constexpr std::int64_t kDefaultClosureCap = 2'000'000;

  namespace detail {
    inline std::int64_t env_int(const char* name, std::int64_t fallback) {
      const char* v = std::getenv(name);
      if (v == nullptr || *v == '\0') {
        return fallback;
      }
      try {
        std::size_t used = 0;
        long long r = std::stoll(v, &used);
        if (used != std::string(v).size() || r <= 0) {
          throw DomainError("");
        }
        return r;
      } catch (const std::exception&) {
        throw DomainError(std::string(name) + " must be a positive integer, got \"" + v + "\"");
      }
    }
  }  // namespace detail

  // Node budget for the backtracking searches (ALT_LIFT_SEARCH_CAP).
  inline std::int64_t search_cap() { return detail::env_int("ALT_LIFT_SEARCH_CAP", kDefaultSearchCap); }

  // Largest genus the catalog commands will classify (ALT_LIFT_MAX_GENUS).
  inline std::int64_t max_genus() { return detail::env_int("ALT_LIFT_MAX_GENUS", kDefaultMaxGenus); }

}  // namespace altlift

#endif  // ALTLIFT_CONFIG_HPP_
