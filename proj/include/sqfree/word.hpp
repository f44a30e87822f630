#ifndef SQFREE_WORD_HPP_
#define SQFREE_WORD_HPP_

#include <algorithm>    // for lexicographical_compare_three_way
#include <cctype>       // for isgraph
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t
#include <ostream>      // for ostream
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "error.hpp"

namespace sqfree {

  using letter_type = std::uint8_t;

  // An ordered set of at most 16 single-character letter names. Letter i is
  // written as names()[i]; the index order is the alphabetical order used for
  // shortlex comparison and backtracking.
  class Alphabet {
   public:
    static constexpr std::size_t max_size = 16;

    explicit Alphabet(std::string names) : _names(std::move(names)) {
      if (_names.empty()) {
        throw InvalidArgument("alphabet must have at least one letter");
      }
      if (_names.size() > max_size) {
        throw InvalidArgument("alphabet has " + std::to_string(_names.size())
                              + " letters, at most 16 are supported");
      }
      for (std::size_t i = 0; i < _names.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(_names[i]);
        if (!std::isgraph(c) || c == '=' || c == '#') {
          throw InvalidArgument(std::string("invalid letter name '") + _names[i]
                                + "'");
        }
        if (_names.find(_names[i], i + 1) != std::string::npos) {
          throw InvalidArgument(std::string("duplicate letter name '")
                                + _names[i] + "'");
        }
      }
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::string const& names() const noexcept {
      return _names;
    }

    char name(letter_type x) const {
      return _names.at(x);
    }

    // Index of the letter named c, or size() if there is none.
    std::size_t index_of(char c) const noexcept {
      auto pos = _names.find(c);
      return pos == std::string::npos ? _names.size() : pos;
    }

    bool operator==(Alphabet const&) const = default;

   private:
    std::string _names;
  };

  // The source alphabet {a, b, c} of every morphism in this library.
  inline Alphabet const& sigma() {
    static Alphabet const abc("abc");
    return abc;
  }

  // A finite word over an Alphabet. Immutable once built.
  class Word {
   public:
    Word() : Word(sigma()) {}

    explicit Word(Alphabet alphabet) : _alphabet(std::move(alphabet)) {}

    Word(Alphabet alphabet, std::vector<letter_type> letters)
        : _alphabet(std::move(alphabet)), _letters(std::move(letters)) {
      for (letter_type x : _letters) {
        if (x >= _alphabet.size()) {
          throw InvalidArgument("letter index " + std::to_string(x)
                                + " out of range for alphabet \""
                                + _alphabet.names() + "\"");
        }
      }
    }

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    std::span<letter_type const> letters() const noexcept {
      return _letters;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    bool empty() const noexcept {
      return _letters.empty();
    }

    letter_type operator[](std::size_t i) const noexcept {
      return _letters[i];
    }

    // The factor of length len starting at pos (clamped to the end).
    Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
      if (pos > size()) {
        throw InvalidArgument("substr position past end of word");
      }
      len = std::min(len, size() - pos);
      return Word(_alphabet,
                  std::vector<letter_type>(_letters.begin() + pos,
                                           _letters.begin() + pos + len),
                  unchecked{});
    }

    Word prefix(std::size_t len) const {
      return substr(0, len);
    }

    std::string str() const {
      std::string out;
      out.reserve(size());
      for (letter_type x : _letters) {
        out.push_back(_alphabet.names()[x]);
      }
      return out;
    }

    friend Word operator+(Word const& u, Word const& v) {
      if (!(u._alphabet == v._alphabet)) {
        throw InvalidArgument("cannot concatenate words over different alphabets");
      }
      std::vector<letter_type> out;
      out.reserve(u.size() + v.size());
      out.insert(out.end(), u._letters.begin(), u._letters.end());
      out.insert(out.end(), v._letters.begin(), v._letters.end());
      return Word(u._alphabet, std::move(out), unchecked{});
    }

    bool operator==(Word const& that) const {
      return _letters == that._letters && _alphabet == that._alphabet;
    }

    // Shortlex: shorter words first, then lexicographic by letter index.
    std::strong_ordering operator<=>(Word const& that) const {
      if (auto c = size() <=> that.size(); c != 0) {
        return c;
      }
      if (auto c = std::lexicographical_compare_three_way(
              _letters.begin(), _letters.end(), that._letters.begin(),
              that._letters.end());
          c != 0) {
        return c;
      }
      return _alphabet.names() <=> that._alphabet.names();
    }

    friend std::ostream& operator<<(std::ostream& os, Word const& w) {
      return os << w.str();
    }

   private:
    struct unchecked {};
    Word(Alphabet alphabet, std::vector<letter_type> letters, unchecked)
        : _alphabet(std::move(alphabet)), _letters(std::move(letters)) {}

    Alphabet                 _alphabet;
    std::vector<letter_type> _letters;
  };

  // Parses a single-line word; every character must name a letter of a.
  // A trailing "\n" or "\r\n" is tolerated.
  inline Word parse_word(std::string_view text, Alphabet const& a) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
      text.remove_suffix(1);
    }
    std::vector<letter_type> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      auto x = a.index_of(text[i]);
      if (x == a.size()) {
        throw ParseError("character '" + std::string(1, text[i])
                         + "' at column " + std::to_string(i + 1)
                         + " is not in alphabet \"" + a.names() + "\"");
      }
      letters.push_back(static_cast<letter_type>(x));
    }
    return Word(a, std::move(letters));
  }

  // Shorthand for words over {a, b, c}.
  inline Word abc_word(std::string_view text) {
    return parse_word(text, sigma());
  }

}  // namespace sqfree

#endif  // SQFREE_WORD_HPP_
