#ifndef SQFREE_MORPHISM_HPP_
#define SQFREE_MORPHISM_HPP_

#include <algorithm>    // for max
#include <array>        // for array
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <sstream>      // for istringstream
#include <string>       // for string, getline
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "factors.hpp"
#include "squares.hpp"
#include "thue_words.hpp"
#include "word.hpp"

namespace sqfree {

  inline constexpr std::size_t default_max_image_length = 64;

  // A non-erasing morphism from {a, b, c}* to target*.
  class Morphism {
   public:
    Morphism(Alphabet target, std::array<Word, 3> images)
        : _target(std::move(target)), _images(std::move(images)) {
      for (std::size_t x = 0; x < 3; ++x) {
        if (_images[x].empty()) {
          throw InvalidArgument(std::string("erasing image for ")
                                + sigma().name(static_cast<letter_type>(x)));
        }
        if (!(_images[x].alphabet() == _target)) {
          throw InvalidArgument(std::string("image of ")
                                + sigma().name(static_cast<letter_type>(x))
                                + " is not over the target alphabet");
        }
      }
    }

    // Convenience: images given as strings over target.
    Morphism(Alphabet const& target, std::string_view a, std::string_view b,
             std::string_view c)
        : Morphism(target,
                   {parse_word(a, target), parse_word(b, target),
                    parse_word(c, target)}) {}

    static Morphism identity() {
      return Morphism(sigma(), "a", "b", "c");
    }

    Alphabet const& source() const noexcept {
      return sigma();
    }

    Alphabet const& target() const noexcept {
      return _target;
    }

    Word const& image(letter_type x) const {
      return _images.at(x);
    }

    std::array<Word, 3> const& images() const noexcept {
      return _images;
    }

    std::size_t max_image_length() const noexcept {
      return std::max({_images[0].size(), _images[1].size(), _images[2].size()});
    }

    bool operator==(Morphism const&) const = default;

   private:
    Alphabet            _target;
    std::array<Word, 3> _images;
  };

  // f(u), the concatenation of the images of the letters of u.
  inline Word apply(Morphism const& f, Word const& u) {
    if (!(u.alphabet() == f.source())) {
      throw InvalidArgument("apply: word \"" + u.str()
                            + "\" is not over the source alphabet {a, b, c}");
    }
    std::size_t total = 0;
    for (letter_type x : u.letters()) {
      total += f.image(x).size();
    }
    std::vector<letter_type> out;
    out.reserve(total);
    for (letter_type x : u.letters()) {
      auto img = f.image(x).letters();
      out.insert(out.end(), img.begin(), img.end());
    }
    return Word(f.target(), std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphism file format
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty()
             && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
      }
      return s;
    }

    inline Morphism parse_morphism_impl(std::string_view               text,
                                        std::optional<Alphabet> const& given,
                                        std::size_t max_image_length) {
      std::optional<std::string>                 header;
      std::array<std::optional<std::string>, 3>  raw;
      std::array<std::size_t, 3>                 where{};
      std::string                                first_use;
      std::istringstream                         in{std::string(text)};
      std::string                                line_buf;
      std::size_t                                line_no = 0;
      while (std::getline(in, line_buf)) {
        ++line_no;
        auto line = trim(line_buf);
        if (line.empty() || line.front() == '#') {
          continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError("malformed line \"" + std::string(line)
                               + "\", expected <letter>=<image>",
                           line_no);
        }
        auto lhs = trim(line.substr(0, eq));
        auto rhs = trim(line.substr(eq + 1));
        if (lhs == "target") {
          if (header) {
            throw ParseError("duplicate target header", line_no);
          }
          header = std::string(rhs);
          continue;
        }
        if (lhs.size() != 1) {
          throw ParseError("malformed line \"" + std::string(line)
                               + "\", left side must be a single letter",
                           line_no);
        }
        auto x = sigma().index_of(lhs[0]);
        if (x == sigma().size()) {
          throw ParseError("unknown source letter '" + std::string(lhs)
                               + "', expected a, b or c",
                           line_no);
        }
        if (raw[x]) {
          throw ParseError("duplicate definition for " + std::string(lhs),
                           line_no);
        }
        if (rhs.empty()) {
          throw ParseError("erasing image for " + std::string(lhs), line_no);
        }
        if (rhs.size() > max_image_length) {
          throw ParseError("image of " + std::string(lhs) + " has length "
                               + std::to_string(rhs.size())
                               + ", above the cap of "
                               + std::to_string(max_image_length),
                           line_no);
        }
        for (char c : rhs) {
          if (first_use.find(c) == std::string::npos) {
            first_use.push_back(c);
          }
        }
        raw[x]   = std::string(rhs);
        where[x] = line_no;
      }
      for (std::size_t x = 0; x < 3; ++x) {
        if (!raw[x]) {
          throw ParseError(std::string("missing definition for ")
                           + sigma().name(static_cast<letter_type>(x)));
        }
      }
      std::optional<Alphabet> target;
      try {
        if (header) {
          target.emplace(*header);
        } else if (given) {
          target = given;
        } else {
          target.emplace(first_use);
        }
      } catch (InvalidArgument const& e) {
        throw ParseError(std::string("bad target alphabet: ") + e.what());
      }
      if (given && header && !(*given == *target)) {
        throw ParseError("target header \"" + *header
                         + "\" does not match the expected alphabet \""
                         + given->names() + "\"");
      }
      std::array<Word, 3> images{Word(*target), Word(*target), Word(*target)};
      for (std::size_t x = 0; x < 3; ++x) {
        try {
          images[x] = parse_word(*raw[x], *target);
        } catch (ParseError const& e) {
          throw ParseError(std::string("unknown letter in image of ")
                               + sigma().name(static_cast<letter_type>(x))
                               + ": " + e.what(),
                           where[x]);
        }
      }
      return Morphism(*target, std::move(images));
    }
  }  // namespace detail

  // Parses the morphism file format:
  //
  //   # comment
  //   target=01        (optional; otherwise letters in order of first use)
  //   a=01
  //   b=0
  //   c=1
  inline Morphism parse_morphism(std::string_view text,
                                 std::size_t max_image_length
                                 = default_max_image_length) {
    return detail::parse_morphism_impl(text, std::nullopt, max_image_length);
  }

  // As above, but every image must be over target.
  inline Morphism parse_morphism(std::string_view text,
                                 Alphabet const&  target,
                                 std::size_t      max_image_length
                                 = default_max_image_length) {
    return detail::parse_morphism_impl(text, target, max_image_length);
  }

  inline std::string format_morphism(Morphism const& f) {
    return "target=" + f.target().names() + "\na=" + f.image(0).str()
           + "\nb=" + f.image(1).str() + "\nc=" + f.image(2).str() + "\n";
  }

  // One-line form "a=abc,b=ac,c=b" used in summaries.
  inline std::string compact_string(Morphism const& f) {
    return "a=" + f.image(0).str() + ",b=" + f.image(1).str()
           + ",c=" + f.image(2).str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Square-freeness criteria
  ////////////////////////////////////////////////////////////////////////

  struct FactorFailure {
    Word             factor;
    SquareOccurrence occurrence;  // inside apply(f, factor)
  };

  enum class Verdict { pass, fail };

  inline std::string_view to_string(Verdict v) {
    return v == Verdict::pass ? "pass" : "fail";
  }

  struct TestReport {
    Verdict                    verdict = Verdict::pass;
    std::size_t                checked_factor_count = 0;
    std::vector<FactorFailure> failures;  // shortlex order of the factor
    std::string                test_set_source;

    bool passed() const noexcept {
      return verdict == Verdict::pass;
    }

    // Length of the shortest failing factor, 0 if none.
    std::size_t minimal_failing_length() const noexcept {
      return failures.empty() ? 0 : failures.front().factor.size();
    }
  };

  // Checks apply(f, u) for square-freeness for every u in factors.
  inline TestReport check_on_factors(Morphism const&          f,
                                     std::vector<Word> const& factors,
                                     std::string              source) {
    TestReport report;
    report.test_set_source = std::move(source);
    for (auto const& u : factors) {
      if (!(u.alphabet() == f.source())) {
        throw InvalidArgument("test-set factor \"" + u.str()
                              + "\" is not over {a, b, c}");
      }
      ++report.checked_factor_count;
      if (auto occ = find_minimal_square(apply(f, u))) {
        report.failures.push_back(FactorFailure{u, std::move(*occ)});
      }
    }
    report.verdict = report.failures.empty() ? Verdict::pass : Verdict::fail;
    return report;
  }

  // f(w) is square-free iff f is square-free on the factors of w of length at
  // most 7, for w avoiding S1 or S2. This evaluates the right-hand side on
  // the given test set.
  inline TestReport theorem1_check(Morphism const& f, TestSet const& test_set) {
    return check_on_factors(f,
                            {test_set.factors.begin(), test_set.factors.end()},
                            test_set.describe());
  }

  inline TestReport theorem1_check(Morphism const&  f,
                                   FactorSet const& factors,
                                   std::string      source = "explicit factor set") {
    return check_on_factors(f, {factors.begin(), factors.end()}, std::move(source));
  }

  // f is a square-free morphism iff f(u) is square-free for each of the 69
  // square-free words u over {a, b, c} of length <= 5.
  inline TestReport crochemore_check(Morphism const& f) {
    static std::vector<Word> const words = square_free_words(sigma(), 5);
    return check_on_factors(f, words, "square-free words over {a,b,c} of length <= 5");
  }

}  // namespace sqfree

#endif  // SQFREE_MORPHISM_HPP_
