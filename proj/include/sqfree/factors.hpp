#ifndef SQFREE_FACTORS_HPP_
#define SQFREE_FACTORS_HPP_

#include <algorithm>      // for search, sort, unique
#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t
#include <functional>     // for boyer_moore_horspool_searcher
#include <set>            // for set
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "word.hpp"

namespace sqfree {

  // Factors in shortlex order (length first, then lexicographic).
  using FactorSet = std::set<Word>;

  namespace detail {
    // Packs a factor of length <= 15 into 64 bits: 4 bits per letter, first
    // letter most significant, length in the low nibble. Within one length
    // the numeric order is the lexicographic order.
    inline std::uint64_t pack_factor(std::span<letter_type const> w,
                                     std::size_t                  pos,
                                     std::size_t                  len) {
      std::uint64_t code = 0;
      for (std::size_t t = 0; t < len; ++t) {
        code = (code << 4) | w[pos + t];
      }
      return (code << 4) | len;
    }
  }  // namespace detail

  // All non-empty factors of u of length <= k.
  inline FactorSet factors_up_to(Word const& u, std::size_t k) {
    if (k == 0) {
      throw InvalidArgument("factors_up_to: k must be at least 1");
    }
    FactorSet   result;
    auto        w = u.letters();
    std::size_t n = w.size();
    if (k <= 15) {
      // Deduplicate on packed codes first; building Word objects for every
      // position is much slower on long prefixes.
      std::unordered_set<std::uint64_t> seen;
      std::vector<std::pair<std::size_t, std::size_t>> firsts;  // (pos, len)
      for (std::size_t len = 1; len <= k && len <= n; ++len) {
        for (std::size_t pos = 0; pos + len <= n; ++pos) {
          if (seen.insert(detail::pack_factor(w, pos, len)).second) {
            firsts.emplace_back(pos, len);
          }
        }
      }
      for (auto [pos, len] : firsts) {
        result.insert(u.substr(pos, len));
      }
      return result;
    }
    for (std::size_t len = 1; len <= k && len <= n; ++len) {
      for (std::size_t pos = 0; pos + len <= n; ++pos) {
        result.insert(u.substr(pos, len));
      }
    }
    return result;
  }

  // True iff pattern occurs contiguously in u.
  inline bool contains_factor(Word const& u, Word const& pattern) {
    if (pattern.empty()) {
      throw InvalidArgument("contains_factor: pattern must be non-empty");
    }
    if (!(u.alphabet() == pattern.alphabet())) {
      throw InvalidArgument("contains_factor: pattern is over a different alphabet");
    }
    auto hay    = u.letters();
    auto needle = pattern.letters();
    if (needle.size() > hay.size()) {
      return false;
    }
    auto it = std::search(
        hay.begin(),
        hay.end(),
        std::boyer_moore_horspool_searcher(needle.begin(), needle.end()));
    return it != hay.end();
  }

}  // namespace sqfree

#endif  // SQFREE_FACTORS_HPP_
