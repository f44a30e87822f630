#ifndef SQFREE_DETAIL_SUFFIX_SQUARES_HPP_
#define SQFREE_DETAIL_SUFFIX_SQUARES_HPP_

#include <algorithm>      // for lower_bound, upper_bound, equal
#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t, uint32_t
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "../word.hpp"

namespace sqfree::detail {

  // Polynomial hashing modulo the Mersenne prime 2^61 - 1.
  class Mod61Hash {
   public:
    static constexpr std::uint64_t mod  = (std::uint64_t(1) << 61) - 1;
    static constexpr std::uint64_t base = 1'000'003;

    static std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept {
      __uint128_t p = static_cast<__uint128_t>(a) * b;
      std::uint64_t r = static_cast<std::uint64_t>(p & mod)
                        + static_cast<std::uint64_t>(p >> 61);
      return r >= mod ? r - mod : r;
    }

    static std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept {
      std::uint64_t r = a + b;
      return r >= mod ? r - mod : r;
    }

    static std::uint64_t sub(std::uint64_t a, std::uint64_t b) noexcept {
      return a >= b ? a - b : a + mod - b;
    }
  };

  // A word that grows and shrinks at its right end and answers "does the
  // word end with a square?" without rescanning every root length.
  //
  // Short roots (< direct_limit) are compared letter by letter. A root of
  // length p in [2^j, 2^(j+1)) forces the last 2^j letters to occur again
  // ending exactly p positions earlier, so for each level j we keep, per
  // hash of a length-2^j factor, the sorted list of its end positions and
  // only look inside the window of admissible ends. Candidates are confirmed
  // letter by letter, so hash collisions cost time but never correctness.
  class SuffixSquareTracker {
    static constexpr std::size_t direct_limit = 32;
    static constexpr std::size_t first_level  = 5;  // 2^5 == direct_limit

   public:
    std::size_t size() const noexcept {
      return _w.size();
    }

    std::vector<letter_type> const& letters() const noexcept {
      return _w;
    }

    void push(letter_type x) {
      _w.push_back(x);
      std::size_t n = _w.size();
      while (_pow.size() <= n) {
        _pow.push_back(Mod61Hash::mul(_pow.back(), Mod61Hash::base));
      }
      _prefix_hash.push_back(
          Mod61Hash::add(Mod61Hash::mul(_prefix_hash.back(), Mod61Hash::base),
                         static_cast<std::uint64_t>(x) + 1));
      for (std::size_t j = first_level; (std::size_t(1) << j) <= n; ++j) {
        if (_levels.size() <= j - first_level) {
          _levels.emplace_back();
        }
        _levels[j - first_level][hash(n - (std::size_t(1) << j), n)].push_back(
            static_cast<std::uint32_t>(n - 1));
      }
    }

    void pop() {
      std::size_t n = _w.size();
      for (std::size_t j = first_level; (std::size_t(1) << j) <= n; ++j) {
        auto& level = _levels[j - first_level];
        auto  it    = level.find(hash(n - (std::size_t(1) << j), n));
        it->second.pop_back();
        if (it->second.empty()) {
          level.erase(it);
        }
      }
      _w.pop_back();
      _prefix_hash.pop_back();
    }

    // True iff the current word has a non-empty square as a suffix.
    bool ends_with_square() const {
      std::size_t const n = _w.size();
      for (std::size_t p = 1; p < direct_limit && 2 * p <= n; ++p) {
        if (_w[n - 1] == _w[n - 1 - p] && same(n - 2 * p, n - p, p)) {
          return true;
        }
      }
      for (std::size_t j = first_level; (std::size_t(2) << j) <= n; ++j) {
        std::size_t lo_p = std::size_t(1) << j;
        std::size_t hi_p = std::min((std::size_t(2) << j) - 1, n / 2);
        auto const& level = _levels[j - first_level];
        auto        it    = level.find(hash(n - lo_p, n));
        if (it == level.end()) {
          continue;
        }
        auto const& ends = it->second;
        // admissible end positions e = n - 1 - p
        auto first = std::lower_bound(ends.begin(), ends.end(), n - 1 - hi_p);
        auto last  = std::upper_bound(first, ends.end(), n - 1 - lo_p);
        for (; first != last; ++first) {
          std::size_t p = n - 1 - *first;
          if (hash(n - 2 * p, n - p) == hash(n - p, n)
              && same(n - 2 * p, n - p, p)) {
            return true;
          }
        }
      }
      return false;
    }

   private:
    std::uint64_t hash(std::size_t from, std::size_t to) const noexcept {
      return Mod61Hash::sub(_prefix_hash[to],
                            Mod61Hash::mul(_prefix_hash[from], _pow[to - from]));
    }

    bool same(std::size_t a, std::size_t b, std::size_t len) const noexcept {
      return std::equal(_w.begin() + a, _w.begin() + a + len, _w.begin() + b);
    }

    std::vector<letter_type>   _w;
    std::vector<std::uint64_t> _prefix_hash{0};
    std::vector<std::uint64_t> _pow{1};
    std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>>
        _levels;
  };

}  // namespace sqfree::detail

#endif  // SQFREE_DETAIL_SUFFIX_SQUARES_HPP_
