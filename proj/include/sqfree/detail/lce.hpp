#ifndef SQFREE_DETAIL_LCE_HPP_
#define SQFREE_DETAIL_LCE_HPP_

#include <algorithm>  // for min, fill
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <span>       // for span
#include <utility>    // for swap
#include <vector>     // for vector

namespace sqfree::detail {

  using index_type = std::uint32_t;

  // Suffix array by prefix doubling with radix sort, O(n log n). Symbols must
  // be < sigma. End of string compares smaller than every symbol.
  inline std::vector<index_type> suffix_array(std::span<index_type const> s,
                                              std::size_t sigma) {
    std::size_t const        n = s.size();
    std::vector<index_type>  sa(n), rank(n), tmp(n), second(n);
    if (n == 0) {
      return sa;
    }
    // Initial ranks are the symbols themselves.
    std::size_t classes = sigma;
    for (std::size_t i = 0; i < n; ++i) {
      rank[i] = s[i];
    }
    {
      std::vector<index_type> count(classes + 1, 0);
      for (std::size_t i = 0; i < n; ++i) {
        ++count[rank[i] + 1];
      }
      for (std::size_t c = 1; c <= classes; ++c) {
        count[c] += count[c - 1];
      }
      for (std::size_t i = 0; i < n; ++i) {
        sa[count[rank[i]]++] = static_cast<index_type>(i);
      }
    }
    std::vector<index_type> count;
    for (std::size_t h = 1;; h <<= 1) {
      // Order by second key: suffixes with i + h >= n come first.
      std::size_t p = 0;
      for (std::size_t i = n - std::min(h, n); i < n; ++i) {
        second[p++] = static_cast<index_type>(i);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (sa[r] >= h) {
          second[p++] = static_cast<index_type>(sa[r] - h);
        }
      }
      // Stable counting sort by first key.
      count.assign(classes + 1, 0);
      for (std::size_t i = 0; i < n; ++i) {
        ++count[rank[i] + 1];
      }
      for (std::size_t c = 1; c <= classes; ++c) {
        count[c] += count[c - 1];
      }
      for (std::size_t r = 0; r < n; ++r) {
        index_type i = second[r];
        sa[count[rank[i]]++] = i;
      }
      // Re-rank.
      tmp[sa[0]]   = 0;
      index_type c = 0;
      for (std::size_t r = 1; r < n; ++r) {
        index_type a = sa[r - 1], b = sa[r];
        bool       same
            = rank[a] == rank[b]
              && (a + h < n ? static_cast<std::int64_t>(rank[a + h]) : -1)
                     == (b + h < n ? static_cast<std::int64_t>(rank[b + h])
                                   : -1);
        tmp[b] = same ? c : ++c;
      }
      std::swap(rank, tmp);
      classes = static_cast<std::size_t>(c) + 1;
      if (classes == n) {
        break;
      }
    }
    return sa;
  }

  // Longest-common-extension queries in O(1) after O(n log n) preprocessing:
  // Kasai LCP over the suffix array plus a sparse table for range minima.
  class LceIndex {
   public:
    LceIndex() = default;

    LceIndex(std::span<index_type const> s, std::size_t sigma)
        : _n(s.size()), _sa(suffix_array(s, sigma)), _rank(_n) {
      for (std::size_t r = 0; r < _n; ++r) {
        _rank[_sa[r]] = static_cast<index_type>(r);
      }
      std::vector<index_type> lcp(_n, 0);  // lcp[r] = lcp(sa[r-1], sa[r])
      std::size_t             h = 0;
      for (std::size_t i = 0; i < _n; ++i) {
        if (_rank[i] == 0) {
          h = 0;
          continue;
        }
        std::size_t j = _sa[_rank[i] - 1];
        while (i + h < _n && j + h < _n && s[i + h] == s[j + h]) {
          ++h;
        }
        lcp[_rank[i]] = static_cast<index_type>(h);
        if (h > 0) {
          --h;
        }
      }
      _log.assign(_n + 1, 0);
      for (std::size_t i = 2; i <= _n; ++i) {
        _log[i] = _log[i / 2] + 1;
      }
      std::size_t levels = _n == 0 ? 0 : _log[_n] + 1;
      _table.resize(levels);
      if (levels > 0) {
        _table[0] = std::move(lcp);
      }
      for (std::size_t k = 1; k < levels; ++k) {
        std::size_t width = std::size_t(1) << k;
        _table[k].resize(_n - width + 1);
        for (std::size_t i = 0; i + width <= _n; ++i) {
          _table[k][i] = std::min(_table[k - 1][i],
                                  _table[k - 1][i + width / 2]);
        }
      }
    }

    std::size_t size() const noexcept {
      return _n;
    }

    // Rank of suffix i among all suffixes (0 = smallest).
    index_type rank(std::size_t i) const noexcept {
      return _rank[i];
    }

    // Length of the longest common prefix of suffixes i and j.
    std::size_t lce(std::size_t i, std::size_t j) const noexcept {
      if (i == j) {
        return _n - i;
      }
      if (i >= _n || j >= _n) {
        return 0;
      }
      std::size_t a = _rank[i], b = _rank[j];
      if (a > b) {
        std::swap(a, b);
      }
      // min over lcp[a+1 .. b]
      std::size_t k = _log[b - a];
      return std::min(_table[k][a + 1],
                      _table[k][b + 1 - (std::size_t(1) << k)]);
    }

   private:
    std::size_t                          _n = 0;
    std::vector<index_type>              _sa;
    std::vector<index_type>              _rank;
    std::vector<index_type>              _log;
    std::vector<std::vector<index_type>> _table;
  };

}  // namespace sqfree::detail

#endif  // SQFREE_DETAIL_LCE_HPP_
