#ifndef SQFREE_SEARCH_HPP_
#define SQFREE_SEARCH_HPP_

#include <algorithm>   // for min, max
#include <array>       // for array
#include <atomic>      // for atomic
#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <iterator>    // for input_iterator_tag
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <thread>      // for thread
#include <vector>      // for vector

#include "analysis.hpp"
#include "factors.hpp"
#include "morphism.hpp"
#include "squares.hpp"
#include "thue_words.hpp"
#include "word.hpp"

namespace sqfree {

  ////////////////////////////////////////////////////////////////////////
  // Search spaces
  ////////////////////////////////////////////////////////////////////////

  enum class SearchMode { exhaustive, random };

  inline constexpr std::uint64_t max_exhaustive_space = 100'000'000;

  struct SearchSpace {
    std::size_t   target_size = 2;  // 2..4, letters named 0, 1, 2, 3
    std::size_t   max_length  = 3;  // images have length 1..max_length
    SearchMode    mode        = SearchMode::exhaustive;
    std::size_t   samples     = 0;  // random mode only
    std::uint64_t seed        = 0;  // random mode only

    Alphabet target() const {
      return Alphabet(std::string("0123").substr(0, target_size));
    }

    std::string describe() const {
      std::string s = "target size " + std::to_string(target_size)
                      + ", image lengths 1.." + std::to_string(max_length);
      if (mode == SearchMode::random) {
        s += ", random " + std::to_string(samples) + " samples, seed "
             + std::to_string(seed);
      } else {
        s += ", exhaustive";
      }
      return s;
    }
  };

  // Number of non-empty words of length <= L over t letters, saturating at
  // max_exhaustive_space + 1.
  inline std::uint64_t images_per_letter(SearchSpace const& space) {
    std::uint64_t total = 0, power = 1;
    for (std::size_t l = 1; l <= space.max_length; ++l) {
      power *= space.target_size;
      total += power;
      if (total > max_exhaustive_space) {
        return max_exhaustive_space + 1;
      }
    }
    return total;
  }

  // (sum_{l=1..L} t^l)^3 for exhaustive spaces, the sample count otherwise.
  inline std::uint64_t space_size(SearchSpace const& space) {
    if (space.mode == SearchMode::random) {
      return space.samples;
    }
    std::uint64_t per = images_per_letter(space);
    if (per > 464) {  // 465^3 > 10^8
      return max_exhaustive_space + 1;
    }
    return per * per * per;
  }

  inline void validate(SearchSpace const& space) {
    if (space.target_size < 2 || space.target_size > 4) {
      throw InvalidArgument("target alphabet size must be between 2 and 4");
    }
    if (space.max_length == 0 || space.max_length > default_max_image_length) {
      throw InvalidArgument("maximum image length must be between 1 and "
                            + std::to_string(default_max_image_length));
    }
    if (space.mode == SearchMode::random && space.samples == 0) {
      throw InvalidArgument("random search needs a positive sample count");
    }
    if (space.mode == SearchMode::exhaustive
        && space_size(space) > max_exhaustive_space) {
      throw InvalidArgument("exhaustive search space has more than 10^8 "
                            "morphisms; use random mode or smaller bounds");
    }
  }

  namespace detail {
    // SplitMix64; fixed so that random spaces replay identically everywhere.
    inline std::uint64_t splitmix64(std::uint64_t& state) {
      std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
      z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      return z ^ (z >> 31);
    }

    // Uniform integer in [0, bound) by rejection.
    inline std::uint64_t uniform_below(std::uint64_t& state, std::uint64_t bound) {
      std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
      std::uint64_t x;
      do {
        x = splitmix64(state);
      } while (x >= limit);
      return x % bound;
    }

    // The index-th word (0-based) of length >= 1 over t letters in shortlex
    // order.
    inline std::vector<letter_type> shortlex_word(std::uint64_t index,
                                                  std::size_t   t) {
      std::size_t   len   = 1;
      std::uint64_t count = t;
      while (index >= count) {
        index -= count;
        count *= t;
        ++len;
      }
      std::vector<letter_type> w(len);
      for (std::size_t pos = len; pos-- > 0;) {
        w[pos] = static_cast<letter_type>(index % t);
        index /= t;
      }
      return w;
    }
  }  // namespace detail

  // Random-access view of the morphisms of a space. Exhaustive spaces are
  // ordered lexicographically over (image of a, image of b, image of c) with
  // each image in shortlex order; random spaces derive sample i from (seed, i)
  // alone.
  class MorphismEnumerator {
   public:
    explicit MorphismEnumerator(SearchSpace space)
        : _space(space), _target(Alphabet("0")) {
      validate(_space);
      _target = _space.target();
      _size   = space_size(_space);
      _per    = _space.mode == SearchMode::exhaustive ? images_per_letter(_space) : 0;
    }

    std::uint64_t size() const noexcept {
      return _size;
    }

    SearchSpace const& space() const noexcept {
      return _space;
    }

    Morphism at(std::uint64_t index) const {
      std::array<Word, 3> images{Word(_target), Word(_target), Word(_target)};
      if (_space.mode == SearchMode::exhaustive) {
        std::array<std::uint64_t, 3> digit{index / (_per * _per),
                                           index / _per % _per,
                                           index % _per};
        for (std::size_t x = 0; x < 3; ++x) {
          images[x] = Word(_target, detail::shortlex_word(digit[x], _space.target_size));
        }
      } else {
        std::uint64_t state = _space.seed;
        detail::splitmix64(state);
        state ^= index * 0xD1B54A32D192ED03ULL;
        for (std::size_t x = 0; x < 3; ++x) {
          std::size_t len = 1 + detail::uniform_below(state, _space.max_length);
          std::vector<letter_type> w(len);
          for (auto& y : w) {
            y = static_cast<letter_type>(
                detail::uniform_below(state, _space.target_size));
          }
          images[x] = Word(_target, std::move(w));
        }
      }
      return Morphism(_target, std::move(images));
    }

    class iterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type        = Morphism;
      using difference_type   = std::ptrdiff_t;

      iterator() = default;
      iterator(MorphismEnumerator const* e, std::uint64_t i) : _e(e), _i(i) {}

      Morphism operator*() const {
        return _e->at(_i);
      }
      iterator& operator++() {
        ++_i;
        return *this;
      }
      iterator operator++(int) {
        auto copy = *this;
        ++_i;
        return copy;
      }
      bool operator==(iterator const& that) const {
        return _i == that._i;
      }

     private:
      MorphismEnumerator const* _e = nullptr;
      std::uint64_t             _i = 0;
    };

    iterator begin() const {
      return iterator(this, 0);
    }

    iterator end() const {
      return iterator(this, _size);
    }

   private:
    SearchSpace   _space;
    Alphabet      _target;
    std::uint64_t _size = 0;
    std::uint64_t _per  = 0;
  };

  inline MorphismEnumerator enumerate_morphisms(SearchSpace const& space) {
    return MorphismEnumerator(space);
  }

  ////////////////////////////////////////////////////////////////////////
  // Outcomes
  ////////////////////////////////////////////////////////////////////////

  // A morphism whose criterion verdict and long-prefix behaviour disagree.
  struct Disagreement {
    std::uint64_t   index;
    Morphism        morphism;
    Verdict         verdict;
    bool            image_square_free;
    std::string     detail;
  };

  // A morphism flagged by a probe, with the result of re-checking it.
  struct Candidate {
    std::uint64_t index;
    Morphism      morphism;
    std::size_t   passes_up_to;  // square-free on all test factors of length <= this
    std::size_t   square_start;  // minimal square in the prefix image
    std::size_t   square_root_length;
    bool          reverified;
  };

  struct SearchOutcome {
    std::string          operation;
    SearchSpace          space;
    std::string          avoidance;
    std::size_t          prefix_length      = 0;
    std::size_t          k                  = 0;
    std::size_t          saturation_length  = 0;
    std::size_t          test_set_size      = 0;
    std::uint64_t        examined           = 0;
    std::uint64_t        agreements         = 0;
    std::uint64_t        passing            = 0;
    std::uint64_t        failing            = 0;
    std::vector<Disagreement> disagreements;
    std::map<std::size_t, std::uint64_t> histogram;  // minimal failing length -> count
    std::vector<Candidate> candidates;
    // probe_s3_bound only
    std::size_t                          k_min = 0;
    std::map<std::size_t, std::uint64_t> separations;  // k -> morphisms separating k
    std::optional<std::size_t>           largest_separated_k;
    bool                                 halted = false;
  };

  struct SearchOptions {
    unsigned    threads         = 1;
    std::size_t max_candidates  = 100;
    // Called once per examined morphism, in enumeration order.
    std::function<void(std::uint64_t, Morphism const&, TestReport const&, std::optional<bool>)>
        observer;
  };

  // max(2 * 10^4, 4 * saturation length)
  inline std::size_t default_prefix_length(std::size_t saturation_length) {
    return std::max<std::size_t>(20'000, 4 * saturation_length);
  }

  namespace detail {

    // Evaluates fn(index) for every index, possibly on several threads, and
    // hands the results to reduce(index, result) in index order. reduce may
    // return false to stop.
    template <typename Result, typename Fn, typename Reduce>
    void ordered_map_reduce(std::uint64_t count,
                            unsigned      threads,
                            Fn&&          fn,
                            Reduce&&      reduce) {
      constexpr std::uint64_t chunk = 256;
      threads                       = std::max(1u, threads);
      for (std::uint64_t base = 0; base < count; base += chunk) {
        std::uint64_t       n = std::min(chunk, count - base);
        std::vector<Result> results(n);
        if (threads == 1) {
          for (std::uint64_t i = 0; i < n; ++i) {
            results[i] = fn(base + i);
          }
        } else {
          std::atomic<std::uint64_t> next{0};
          std::vector<std::thread>   pool;
          for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
              for (std::uint64_t i; (i = next++) < n;) {
                results[i] = fn(base + i);
              }
            });
          }
          for (auto& th : pool) {
            th.join();
          }
        }
        for (std::uint64_t i = 0; i < n; ++i) {
          if (!reduce(base + i, results[i])) {
            return;
          }
        }
      }
    }

    struct Evaluation {
      std::optional<Morphism>         morphism;
      std::optional<TestReport>       report;
      std::optional<bool>             image_square_free;
      std::optional<SquareOccurrence> image_square;
    };

    inline std::vector<Word> factors_up_to_length(FactorSet const& all,
                                                  std::size_t      k) {
      std::vector<Word> out;
      for (auto const& w : all) {
        if (w.size() <= k) {
          out.push_back(w);
        }
      }
      return out;
    }

    inline void check_avoidance_label(AvoidanceLabel label) {
      if (label == AvoidanceLabel::s3) {
        throw InvalidArgument("this search needs the s1 or s2 word; use "
                              "probe_s3_bound for s3");
      }
    }

    // Re-checks that f is square-free on every given factor with the naive
    // detector and that occ is a real square of the image.
    inline bool reverify(Morphism const&          f,
                         std::vector<Word> const& factors,
                         Word const&              image,
                         SquareOccurrence const&  occ) {
      for (auto const& u : factors) {
        if (find_minimal_square_naive(apply(f, u))) {
          return false;
        }
      }
      return is_genuine_square(image, occ);
    }

  }  // namespace detail

  // For each morphism compares the test-set verdict with square-freeness of
  // f(prefix). Stops at the first disagreement.
  inline SearchOutcome verify_theorem1(SearchSpace const&   space,
                                       AvoidanceLabel       label,
                                       std::size_t          prefix_length,
                                       SearchOptions const& options = {}) {
    detail::check_avoidance_label(label);
    MorphismEnumerator morphisms(space);
    TestSet            tests = saturated_test_set(label, 7);
    if (prefix_length == 0) {
      prefix_length = default_prefix_length(tests.saturation_length);
    }
    if (prefix_length < tests.saturation_length) {
      throw InvalidArgument("prefix length " + std::to_string(prefix_length)
                            + " is below the saturation length "
                            + std::to_string(tests.saturation_length));
    }
    Word prefix = generate_prefix(default_generator(label), prefix_length);
    std::vector<Word> factors(tests.factors.begin(), tests.factors.end());

    SearchOutcome out;
    out.operation         = "verify-theorem1";
    out.space             = space;
    out.avoidance         = std::string(to_string(label));
    out.prefix_length     = prefix_length;
    out.k                 = 7;
    out.saturation_length = tests.saturation_length;
    out.test_set_size     = factors.size();

    detail::ordered_map_reduce<detail::Evaluation>(
        morphisms.size(),
        options.threads,
        [&](std::uint64_t index) {
          detail::Evaluation e;
          e.morphism          = morphisms.at(index);
          e.report            = check_on_factors(*e.morphism, factors, tests.describe());
          e.image_square_free = is_square_free(apply(*e.morphism, prefix));
          return e;
        },
        [&](std::uint64_t index, detail::Evaluation& e) {
          ++out.examined;
          if (options.observer) {
            options.observer(index, *e.morphism, *e.report, e.image_square_free);
          }
          bool passed = e.report->passed();
          passed ? ++out.passing : ++out.failing;
          if (!passed) {
            ++out.histogram[e.report->minimal_failing_length()];
          }
          if (passed == *e.image_square_free) {
            ++out.agreements;
            return true;
          }
          out.disagreements.push_back(Disagreement{
              index,
              *e.morphism,
              e.report->verdict,
              *e.image_square_free,
              passed ? "test set passes but the prefix image has a square"
                     : "test set fails but the prefix image is square-free"});
          out.halted = true;
          return false;
        });
    return out;
  }

  // Looks for morphisms that are square-free on every test factor of length
  // <= 6 but whose image of the prefix has a square. The histogram records,
  // for every failing morphism, the smallest k whose test set detects it.
  inline SearchOutcome probe_constant_7(SearchSpace const&   space,
                                        AvoidanceLabel       label,
                                        std::size_t          prefix_length,
                                        SearchOptions const& options = {}) {
    detail::check_avoidance_label(label);
    MorphismEnumerator morphisms(space);
    TestSet            tests = saturated_test_set(label, 7);
    if (prefix_length == 0) {
      prefix_length = default_prefix_length(tests.saturation_length);
    }
    if (prefix_length < tests.saturation_length) {
      throw InvalidArgument("prefix length " + std::to_string(prefix_length)
                            + " is below the saturation length "
                            + std::to_string(tests.saturation_length));
    }
    Word prefix = generate_prefix(default_generator(label), prefix_length);
    std::vector<Word> factors(tests.factors.begin(), tests.factors.end());
    std::vector<Word> up_to_6 = detail::factors_up_to_length(tests.factors, 6);

    SearchOutcome out;
    out.operation         = "probe-7";
    out.space             = space;
    out.avoidance         = std::string(to_string(label));
    out.prefix_length     = prefix_length;
    out.k                 = 7;
    out.saturation_length = tests.saturation_length;
    out.test_set_size     = factors.size();

    detail::ordered_map_reduce<detail::Evaluation>(
        morphisms.size(),
        options.threads,
        [&](std::uint64_t index) {
          detail::Evaluation e;
          e.morphism = morphisms.at(index);
          e.report   = check_on_factors(*e.morphism, factors, tests.describe());
          // Failures at length <= 6 always show in the prefix image; only
          // the rest need the long check.
          std::size_t m = e.report->minimal_failing_length();
          if (m == 0 || m == 7) {
            e.image_square      = find_minimal_square(apply(*e.morphism, prefix));
            e.image_square_free = !e.image_square.has_value();
          }
          return e;
        },
        [&](std::uint64_t index, detail::Evaluation& e) {
          ++out.examined;
          if (options.observer) {
            options.observer(index, *e.morphism, *e.report, e.image_square_free);
          }
          std::size_t m = e.report->minimal_failing_length();
          if (m == 0) {
            ++out.passing;
            if (*e.image_square_free) {
              ++out.agreements;
              return true;
            }
            out.disagreements.push_back(Disagreement{
                index, *e.morphism, Verdict::pass, false,
                "test set passes but the prefix image has a square"});
            out.halted = true;
            return false;
          }
          ++out.failing;
          ++out.agreements;
          ++out.histogram[m];
          if (m == 7 && out.candidates.size() < options.max_candidates) {
            Word image = apply(*e.morphism, prefix);
            bool ok    = e.image_square.has_value()
                      && detail::reverify(*e.morphism, up_to_6, image, *e.image_square);
            out.candidates.push_back(Candidate{
                index,
                *e.morphism,
                6,
                e.image_square ? e.image_square->start : 0,
                e.image_square ? e.image_square->root_length : 0,
                ok});
          }
          return true;
        });
    return out;
  }

  // For the s3 word W and each k in [k_min, k_max], counts morphisms that are
  // square-free on every factor of W of length <= k while f(prefix) has a
  // square, and reports the largest such k.
  inline SearchOutcome probe_s3_bound(SearchSpace const&   space,
                                      std::size_t          prefix_length,
                                      std::size_t          k_min,
                                      std::size_t          k_max,
                                      SearchOptions const& options = {}) {
    if (k_min == 0 || k_min > k_max) {
      throw InvalidArgument("k range must satisfy 1 <= k_min <= k_max");
    }
    MorphismEnumerator morphisms(space);
    TestSet            tests = saturated_test_set(AvoidanceLabel::s3, k_max);
    if (prefix_length == 0) {
      prefix_length = default_prefix_length(tests.saturation_length);
    }
    if (prefix_length < tests.saturation_length) {
      throw InvalidArgument("prefix length " + std::to_string(prefix_length)
                            + " is below the saturation length "
                            + std::to_string(tests.saturation_length));
    }
    Word prefix = generate_prefix(default_generator(AvoidanceLabel::s3), prefix_length);
    std::vector<Word> factors(tests.factors.begin(), tests.factors.end());

    SearchOutcome out;
    out.operation         = "probe-s3";
    out.space             = space;
    out.avoidance         = "s3";
    out.prefix_length     = prefix_length;
    out.k                 = k_max;
    out.k_min             = k_min;
    out.saturation_length = tests.saturation_length;
    out.test_set_size     = factors.size();
    for (std::size_t k = k_min; k <= k_max; ++k) {
      out.separations[k] = 0;
    }

    detail::ordered_map_reduce<detail::Evaluation>(
        morphisms.size(),
        options.threads,
        [&](std::uint64_t index) {
          detail::Evaluation e;
          e.morphism    = morphisms.at(index);
          e.report      = check_on_factors(*e.morphism, factors, tests.describe());
          std::size_t m = e.report->minimal_failing_length();
          if (m == 0 || m > k_min) {
            e.image_square      = find_minimal_square(apply(*e.morphism, prefix));
            e.image_square_free = !e.image_square.has_value();
          }
          return e;
        },
        [&](std::uint64_t index, detail::Evaluation& e) {
          ++out.examined;
          if (options.observer) {
            options.observer(index, *e.morphism, *e.report, e.image_square_free);
          }
          std::size_t m = e.report->minimal_failing_length();
          m == 0 ? ++out.passing : ++out.failing;
          if (m != 0) {
            ++out.histogram[m];
          }
          if (!e.image_square_free.has_value() || *e.image_square_free) {
            ++out.agreements;
            return true;
          }
          // f(prefix) has a square; f passes every test of length < m.
          std::size_t passes_up_to = m == 0 ? k_max : m - 1;
          if (passes_up_to < k_min) {
            ++out.agreements;
            return true;
          }
          for (std::size_t k = k_min; k <= passes_up_to; ++k) {
            ++out.separations[k];
          }
          if (!out.largest_separated_k || passes_up_to > *out.largest_separated_k) {
            out.largest_separated_k = passes_up_to;
            out.candidates.clear();
          }
          if (passes_up_to == *out.largest_separated_k
              && out.candidates.size() < options.max_candidates) {
            Word image = apply(*e.morphism, prefix);
            bool ok    = detail::reverify(
                *e.morphism,
                detail::factors_up_to_length(tests.factors, passes_up_to),
                image,
                *e.image_square);
            out.candidates.push_back(Candidate{index,
                                               *e.morphism,
                                               passes_up_to,
                                               e.image_square->start,
                                               e.image_square->root_length,
                                               ok});
          }
          return true;
        });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The 17-letter word a z b z a with z = cabcbac
  ////////////////////////////////////////////////////////////////////////

  struct Remark17Report {
    Word                          word;
    bool                          length_is_17;
    bool                          square_free;
    bool                          no_aba;
    bool                          no_bab;
    std::optional<PatternWitness> witness;  // the azbza occurrence, z = cabcbac

    bool holds() const noexcept {
      return length_is_17 && square_free && no_aba && no_bab && witness.has_value();
    }
  };

  inline Remark17Report remark17_report() {
    Word z    = abc_word("cabcbac");
    Word word = abc_word("a") + z + abc_word("b") + z + abc_word("a");
    Remark17Report r{word,
                     word.size() == 17,
                     is_square_free(word),
                     !contains_factor(word, abc_word("aba")),
                     !contains_factor(word, abc_word("bab")),
                     std::nullopt};
    for (auto const& wit : scan_xzyzx(word, 0, {PatternKind::azbza})) {
      if (wit.start == 0 && wit.z == z) {
        r.witness = wit;
      }
    }
    return r;
  }

  inline bool verify_remark_17() {
    return remark17_report().holds();
  }

}  // namespace sqfree

#endif  // SQFREE_SEARCH_HPP_
