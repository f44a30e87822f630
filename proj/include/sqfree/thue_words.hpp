#ifndef SQFREE_THUE_WORDS_HPP_
#define SQFREE_THUE_WORDS_HPP_

#include <algorithm>    // for max, equal
#include <array>        // for array
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "detail/suffix_squares.hpp"
#include "factors.hpp"
#include "squares.hpp"
#include "word.hpp"

namespace sqfree {

  enum class AvoidanceLabel { s1, s2, s3 };

  inline std::string_view to_string(AvoidanceLabel label) {
    switch (label) {
      case AvoidanceLabel::s1:
        return "s1";
      case AvoidanceLabel::s2:
        return "s2";
      default:
        return "s3";
    }
  }

  inline AvoidanceLabel parse_avoidance_label(std::string_view text) {
    if (text == "s1" || text == "S1") {
      return AvoidanceLabel::s1;
    }
    if (text == "s2" || text == "S2") {
      return AvoidanceLabel::s2;
    }
    if (text == "s3" || text == "S3") {
      return AvoidanceLabel::s3;
    }
    throw ParseError("unknown avoidance set \"" + std::string(text)
                     + "\", expected s1, s2 or s3");
  }

  // A pair of forbidden length-3 words xyx over {a, b, c}.
  //   S1 = {aba, cbc}, S2 = {aba, aca}, S3 = {aba, bab}.
  struct AvoidanceSet {
    AvoidanceLabel    label;
    std::vector<Word> forbidden;
  };

  inline AvoidanceSet avoidance_set(AvoidanceLabel label) {
    switch (label) {
      case AvoidanceLabel::s1:
        return {label, {abc_word("aba"), abc_word("cbc")}};
      case AvoidanceLabel::s2:
        return {label, {abc_word("aba"), abc_word("aca")}};
      default:
        return {label, {abc_word("aba"), abc_word("bab")}};
    }
  }

  enum class GenerationMethod { morphic_fixed_point, backtracking };

  inline std::string_view to_string(GenerationMethod m) {
    return m == GenerationMethod::morphic_fixed_point ? "morphic-fixed-point"
                                                      : "backtracking";
  }

  struct GeneratorBudget {
    std::size_t max_prefix = std::size_t(1) << 20;
    std::size_t max_steps  = 100'000'000;
  };

  struct GeneratorSpec {
    GenerationMethod method;
    AvoidanceSet     avoidance;
    GeneratorBudget  budget;
  };

  // The fixed-point generator for S1, backtracking for S2 and S3.
  inline GeneratorSpec default_generator(AvoidanceLabel label,
                                         GeneratorBudget budget = {}) {
    return GeneratorSpec{label == AvoidanceLabel::s1
                             ? GenerationMethod::morphic_fixed_point
                             : GenerationMethod::backtracking,
                         avoidance_set(label),
                         budget};
  }

  inline void validate(GeneratorSpec const& spec) {
    if (spec.budget.max_prefix == 0 || spec.budget.max_steps == 0) {
      throw InvalidArgument("generator budget must be positive");
    }
    if (spec.method == GenerationMethod::morphic_fixed_point
        && spec.avoidance.label != AvoidanceLabel::s1) {
      throw InvalidArgument("the morphic fixed-point generator only produces "
                            "the s1 word");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // S1: fixed point of a -> abc, b -> ac, c -> b
  ////////////////////////////////////////////////////////////////////////

  // First n letters of the fixed point of a -> abc, b -> ac, c -> b.
  inline Word s1_word_prefix(std::size_t n) {
    static constexpr std::array<std::string_view, 3> image{"abc", "ac", "b"};
    std::vector<letter_type> w;
    w.reserve(n + 3);
    w.push_back(0);
    // w[i] expands to the block that starts where the expansion of w[i - 1]
    // ended; since the image of a starts with a, reading w while extending it
    // yields the fixed point.
    for (std::size_t i = 0; w.size() < n; ++i) {
      auto const& img = image[w[i]];
      for (std::size_t t = i == 0 ? 1 : 0; t < img.size(); ++t) {
        w.push_back(static_cast<letter_type>(img[t] - 'a'));
      }
    }
    w.resize(n);
    return Word(sigma(), std::move(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // S2, S3: lexicographically least words by depth-first backtracking
  ////////////////////////////////////////////////////////////////////////

  struct BacktrackStats {
    std::size_t steps       = 0;  // candidate letters tried
    std::size_t max_retreat = 0;  // deepest backtrack below the longest length reached
  };

  namespace detail {

    inline bool ends_with(std::vector<letter_type> const& w, Word const& f) {
      return f.size() <= w.size()
             && std::equal(f.letters().begin(),
                           f.letters().end(),
                           w.end() - static_cast<std::ptrdiff_t>(f.size()));
    }

    // Depth-first search for the lexicographically least (a < b < c) word of
    // length `length` that is square-free and has no factor in `forbidden`.
    inline std::vector<letter_type>
    lex_least_dfs(std::vector<Word> const& forbidden,
                  std::size_t              length,
                  std::size_t              max_steps,
                  BacktrackStats*          stats = nullptr) {
      SuffixSquareTracker tracker;
      BacktrackStats      local;
      std::size_t         longest = 0;
      auto                rejected = [&]() {
        for (auto const& f : forbidden) {
          if (ends_with(tracker.letters(), f)) {
            return true;
          }
        }
        return tracker.ends_with_square();
      };
      letter_type next = 0;
      while (tracker.size() < length) {
        if (++local.steps > max_steps) {
          throw BudgetExhausted("backtracking exceeded " + std::to_string(max_steps)
                                + " steps before reaching length "
                                + std::to_string(length));
        }
        tracker.push(next);
        if (!rejected()) {
          longest = std::max(longest, tracker.size());
          next    = 0;
          continue;
        }
        tracker.pop();
        // Advance to the next untried letter, retreating past exhausted ones.
        while (next == 2) {
          if (tracker.size() == 0) {
            throw BudgetExhausted("no word of length " + std::to_string(length)
                                  + " avoids the forbidden set");
          }
          next = tracker.letters().back();
          tracker.pop();
          local.max_retreat = std::max(local.max_retreat, longest - tracker.size());
        }
        ++next;
      }
      if (stats != nullptr) {
        *stats = local;
      }
      return tracker.letters();
    }

  }  // namespace detail

  // Lexicographically least square-free word of exactly n letters avoiding
  // s.forbidden. Not necessarily a prefix of any infinite such word.
  inline Word lex_least_finite_word(AvoidanceSet const& s,
                                    std::size_t         n,
                                    std::size_t max_steps = GeneratorBudget{}.max_steps,
                                    BacktrackStats* stats = nullptr) {
    return Word(sigma(), detail::lex_least_dfs(s.forbidden, n, max_steps, stats));
  }

  // Default lookahead for the infinite-word generators.
  inline std::size_t default_lookahead(std::size_t n) {
    return std::max<std::size_t>(4096, n / 2);
  }

  // First n letters of the lexicographically least right-infinite word that is
  // square-free and avoids s.forbidden. The search is carried `lookahead`
  // letters beyond n so that dead ends discovered later are backed out of.
  inline Word lex_least_prefix(AvoidanceSet const& s,
                               std::size_t         n,
                               GeneratorBudget     budget    = {},
                               std::size_t         lookahead = 0,
                               BacktrackStats*     stats     = nullptr) {
    if (n == 0) {
      throw InvalidArgument("prefix length must be at least 1");
    }
    if (n > budget.max_prefix) {
      throw BudgetExhausted("prefix length " + std::to_string(n)
                            + " exceeds the budget of "
                            + std::to_string(budget.max_prefix));
    }
    if (lookahead == 0) {
      lookahead = default_lookahead(n);
    }
    auto w = detail::lex_least_dfs(s.forbidden, n + lookahead, budget.max_steps, stats);
    w.resize(n);
    return Word(sigma(), std::move(w));
  }

  inline Word s2_word_prefix(std::size_t n, GeneratorBudget budget = {}) {
    return lex_least_prefix(avoidance_set(AvoidanceLabel::s2), n, budget);
  }

  inline Word s3_word_prefix(std::size_t n, GeneratorBudget budget = {}) {
    return lex_least_prefix(avoidance_set(AvoidanceLabel::s3), n, budget);
  }

  // Prefix of the word described by spec.
  inline Word generate_prefix(GeneratorSpec const& spec, std::size_t n) {
    validate(spec);
    if (n == 0) {
      throw InvalidArgument("prefix length must be at least 1");
    }
    if (n > spec.budget.max_prefix) {
      throw BudgetExhausted("prefix length " + std::to_string(n)
                            + " exceeds the budget of "
                            + std::to_string(spec.budget.max_prefix));
    }
    if (spec.method == GenerationMethod::morphic_fixed_point) {
      return s1_word_prefix(n);
    }
    return lex_least_prefix(spec.avoidance, n, spec.budget);
  }

  // u is square-free and contains no member of s.forbidden.
  inline bool verify_avoidance(Word const& u, AvoidanceSet const& s) {
    if (!(u.alphabet() == sigma())) {
      throw InvalidArgument("verify_avoidance: word must be over {a, b, c}");
    }
    for (auto const& f : s.forbidden) {
      if (u.size() >= f.size() && contains_factor(u, f)) {
        return false;
      }
    }
    return is_square_free(u);
  }

  ////////////////////////////////////////////////////////////////////////
  // Test sets
  ////////////////////////////////////////////////////////////////////////

  // The factors of length <= k of an infinite word, read off a prefix, plus
  // where they came from.
  struct TestSet {
    FactorSet        factors;
    AvoidanceLabel   label;
    GenerationMethod method;
    std::size_t      k;
    std::size_t      saturation_length;  // prefix length the set was read from

    std::string describe() const {
      return std::string(to_string(label)) + " " + std::string(to_string(method))
             + ", k=" + std::to_string(k) + ", saturated at prefix "
             + std::to_string(saturation_length);
    }
  };

  inline constexpr std::size_t saturation_start = 1024;

  // Factors of length <= k taken from prefixes of length 1024, 2048, ...
  // until the set is unchanged over two consecutive doublings (L, 2L, 4L all
  // agree); the reported saturation length is L.
  inline TestSet saturated_test_set(GeneratorSpec const& spec, std::size_t k) {
    validate(spec);
    if (k == 0) {
      throw InvalidArgument("saturated_test_set: k must be at least 1");
    }
    if (4 * saturation_start > spec.budget.max_prefix) {
      throw BudgetExhausted("prefix budget too small to saturate");
    }
    std::size_t length = saturation_start;
    FactorSet   f0     = factors_up_to(generate_prefix(spec, length), k);
    FactorSet   f1     = factors_up_to(generate_prefix(spec, 2 * length), k);
    while (true) {
      if (4 * length > spec.budget.max_prefix) {
        throw BudgetExhausted("factor set of length <= " + std::to_string(k)
                              + " did not saturate within a prefix of "
                              + std::to_string(spec.budget.max_prefix));
      }
      FactorSet f2 = factors_up_to(generate_prefix(spec, 4 * length), k);
      if (f0 == f1 && f1 == f2) {
        return TestSet{std::move(f0),
                       spec.avoidance.label,
                       spec.method,
                       k,
                       length};
      }
      f0 = std::move(f1);
      f1 = std::move(f2);
      length *= 2;
    }
  }

  inline TestSet saturated_test_set(AvoidanceLabel label, std::size_t k) {
    return saturated_test_set(default_generator(label), k);
  }

}  // namespace sqfree

#endif  // SQFREE_THUE_WORDS_HPP_
