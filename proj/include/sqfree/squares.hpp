#ifndef SQFREE_SQUARES_HPP_
#define SQFREE_SQUARES_HPP_

#include <algorithm>  // for equal, sort, unique, reverse
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <span>       // for span
#include <tuple>      // for tie
#include <utility>    // for pair
#include <vector>     // for vector

#include "detail/lce.hpp"
#include "word.hpp"

namespace sqfree {

  // Witness that a word contains the square root·root at position start.
  struct SquareOccurrence {
    std::size_t start;
    std::size_t root_length;
    Word        root;

    bool operator==(SquareOccurrence const&) const = default;
  };

  // Checks that occ really is a square in u. Independent of every detector.
  inline bool is_genuine_square(Word const& u, SquareOccurrence const& occ) {
    std::size_t p = occ.root_length;
    if (p == 0 || occ.root.size() != p || occ.start + 2 * p > u.size()) {
      return false;
    }
    auto l = u.letters();
    for (std::size_t t = 0; t < p; ++t) {
      if (l[occ.start + t] != occ.root[t] || l[occ.start + p + t] != occ.root[t]) {
        return false;
      }
    }
    return true;
  }

  // A maximal repetition: [start, end) has smallest period `period` and
  // end - start >= 2 * period, and cannot be extended either way.
  struct Run {
    std::size_t start;
    std::size_t end;
    std::size_t period;

    bool operator==(Run const&) const = default;
    auto operator<=>(Run const&) const = default;
  };

  namespace detail {

    inline bool root_matches(std::span<letter_type const> w,
                             std::size_t                  s,
                             std::size_t                  p) {
      return std::equal(w.begin() + s, w.begin() + s + p, w.begin() + s + p);
    }

    inline SquareOccurrence make_occurrence(Word const& u,
                                            std::size_t s,
                                            std::size_t p) {
      return SquareOccurrence{s, p, u.substr(s, p)};
    }

    // Smallest (root length, start) square with root length <= max_root, by
    // direct scan. O(n * max_root) on square-free inputs.
    inline std::optional<std::pair<std::size_t, std::size_t>>
    scan_short_roots(std::span<letter_type const> w, std::size_t max_root) {
      std::size_t const n = w.size();
      for (std::size_t p = 1; p <= max_root && 2 * p <= n; ++p) {
        for (std::size_t s = 0; s + 2 * p <= n; ++s) {
          if (w[s] == w[s + p] && root_matches(w, s, p)) {
            return std::pair{p, s};
          }
        }
      }
      return std::nullopt;
    }

    // Computes all runs of w with the Lyndon-root method: for each of the two
    // opposite letter orders, every run has a Lyndon root that is the longest
    // Lyndon word starting at its position. A unique sentinel is appended so
    // that every pair of suffixes differs before either one ends.
    inline std::vector<Run> compute_runs(std::span<letter_type const> w,
                                         std::size_t                  sigma) {
      std::size_t const n = w.size();
      std::vector<Run>  result;
      if (n < 2) {
        return result;
      }
      std::size_t const       N = n + 1;
      std::vector<index_type> t(N), r(N);
      for (std::size_t i = 0; i < n; ++i) {
        t[i]         = w[i];
        r[n - 1 - i] = w[i];
      }
      t[n] = static_cast<index_type>(sigma);
      r[n] = static_cast<index_type>(sigma);
      LceIndex fwd(t, sigma + 1);
      LceIndex bwd(r, sigma + 1);

      // Length of the longest common suffix of w[..i] and w[..j], inclusive.
      auto lcs = [&](std::size_t i, std::size_t j) {
        return bwd.lce(n - 1 - i, n - 1 - j);
      };

      std::vector<index_type> lyndon_end(N);
      std::vector<index_type> stack;
      stack.reserve(N);
      for (int order = 0; order < 2; ++order) {
        // suffix i strictly smaller than suffix j under the current order
        auto less = [&](std::size_t i, std::size_t j) {
          if (order == 0) {
            return fwd.rank(i) < fwd.rank(j);
          }
          std::size_t l = fwd.lce(i, j);
          return t[i + l] > t[j + l];
        };
        stack.clear();
        for (std::size_t i = N; i-- > 0;) {
          while (!stack.empty() && !less(stack.back(), i)) {
            stack.pop_back();
          }
          lyndon_end[i] = stack.empty() ? static_cast<index_type>(N)
                                        : stack.back();
          stack.push_back(static_cast<index_type>(i));
        }
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t p = lyndon_end[i] - i;
          if (i + p >= n) {
            continue;
          }
          std::size_t right = fwd.lce(i, i + p);
          std::size_t left  = i == 0 ? 0 : lcs(i - 1, i + p - 1);
          if (left + right >= p) {
            result.push_back(Run{i - left, i + p + right, p});
          }
        }
      }
      std::sort(result.begin(), result.end());
      result.erase(std::unique(result.begin(), result.end()), result.end());
      return result;
    }

    // Minimal square via runs only (no short-root prefilter).
    inline std::optional<SquareOccurrence>
    find_minimal_square_runs(Word const& u) {
      auto runs = compute_runs(u.letters(), u.alphabet().size());
      if (runs.empty()) {
        return std::nullopt;
      }
      Run const* best = &runs.front();
      for (auto const& run : runs) {
        if (std::tie(run.period, run.start)
            < std::tie(best->period, best->start)) {
          best = &run;
        }
      }
      return make_occurrence(u, best->start, best->period);
    }

  }  // namespace detail

  // Reference detector: tries every root length in increasing order and every
  // start in increasing order. Cubic in the worst case; it is the normative
  // definition that the fast detector is tested against.
  inline std::optional<SquareOccurrence> find_minimal_square_naive(Word const& u) {
    auto              w = u.letters();
    std::size_t const n = w.size();
    for (std::size_t p = 1; 2 * p <= n; ++p) {
      for (std::size_t s = 0; s + 2 * p <= n; ++s) {
        bool eq = true;
        for (std::size_t t = 0; t < p; ++t) {
          if (w[s + t] != w[s + p + t]) {
            eq = false;
            break;
          }
        }
        if (eq) {
          return detail::make_occurrence(u, s, p);
        }
      }
    }
    return std::nullopt;
  }

  // All runs (maximal repetitions) of u, sorted by (start, end, period).
  inline std::vector<Run> runs(Word const& u) {
    return detail::compute_runs(u.letters(), u.alphabet().size());
  }

  // Square with the smallest root length, ties broken by smallest start, or
  // nullopt if u is square-free. O(n log n).
  //
  // Roots of length <= 8 are found by a linear scan first since most squares
  // met in practice are short; everything else goes through the runs.
  inline std::optional<SquareOccurrence> find_minimal_square(Word const& u) {
    if (auto hit = detail::scan_short_roots(u.letters(), 8)) {
      return detail::make_occurrence(u, hit->second, hit->first);
    }
    if (u.size() < 18) {
      return std::nullopt;
    }
    return detail::find_minimal_square_runs(u);
  }

  // The empty word is square-free.
  inline bool is_square_free(Word const& u) {
    return !find_minimal_square(u).has_value();
  }

  // Every non-empty square-free word over a of length <= max_length, in
  // shortlex order.
  inline std::vector<Word> square_free_words(Alphabet const& a,
                                             std::size_t     max_length) {
    std::vector<Word>                     result;
    std::vector<std::vector<letter_type>> level{{}};
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<std::vector<letter_type>> next;
      for (auto const& w : level) {
        for (std::size_t x = 0; x < a.size(); ++x) {
          auto v = w;
          v.push_back(static_cast<letter_type>(x));
          // only squares ending at the new letter can be new
          bool square = false;
          for (std::size_t p = 1; 2 * p <= v.size() && !square; ++p) {
            square = detail::root_matches(v, v.size() - 2 * p, p);
          }
          if (!square) {
            next.push_back(std::move(v));
          }
        }
      }
      for (auto const& v : next) {
        result.emplace_back(a, v);
      }
      level = std::move(next);
    }
    return result;
  }

}  // namespace sqfree

#endif  // SQFREE_SQUARES_HPP_
