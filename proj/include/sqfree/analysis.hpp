#ifndef SQFREE_ANALYSIS_HPP_
#define SQFREE_ANALYSIS_HPP_

#include <algorithm>    // for sort, upper_bound, min, max
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <set>          // for set
#include <string>       // for string
#include <string_view>  // for string_view
#include <tuple>        // for tie
#include <vector>       // for vector

#include "detail/lce.hpp"
#include "factors.hpp"
#include "morphism.hpp"
#include "squares.hpp"
#include "word.hpp"

namespace sqfree {

  ////////////////////////////////////////////////////////////////////////
  // Block decomposition of a minimal square in f(u)
  ////////////////////////////////////////////////////////////////////////

  // Where the minimal square x x of f(u) = A_0 A_1 ... sits relative to the
  // blocks A_l = f(u[l]).
  //
  //   image[0, start)        = A_0 ... A_{i-1} A_i'
  //   image[0, start + |x|)  = A_0 ... A_{j-1} A_j'
  //   image[0, start + 2|x|) = A_0 ... A_{k-1} A_k'
  //
  // A_i' and A_j' are proper prefixes of their blocks. Block k is the last
  // block the square touches, so A_k' is a non-empty prefix of A_k that may be
  // all of A_k; on a finite word there need not be a block after the square.
  struct SquareDecomposition {
    SquareOccurrence occurrence;
    std::size_t      i;
    std::size_t      j;
    std::size_t      k;
    Word             ai_suffix;  // A_i''
    Word             aj_prefix;  // A_j'
    Word             aj_suffix;  // A_j''
    Word             ak_prefix;  // A_k'
    bool             degenerate;  // i == j or j == k

    std::size_t span() const noexcept {
      return k - i;
    }
  };

  namespace detail {
    // offsets[l] = |f(u[0 .. l))|, offsets.size() == u.size() + 1
    inline std::vector<std::size_t> block_offsets(Morphism const& f,
                                                  Word const&     u) {
      std::vector<std::size_t> off(u.size() + 1, 0);
      for (std::size_t l = 0; l < u.size(); ++l) {
        off[l + 1] = off[l] + f.image(u[l]).size();
      }
      return off;
    }

    // Index of the block containing image position pos.
    inline std::size_t block_of(std::vector<std::size_t> const& off,
                                std::size_t                     pos) {
      return static_cast<std::size_t>(
                 std::upper_bound(off.begin(), off.end(), pos) - off.begin())
             - 1;
    }

    inline Word concat_images(Morphism const& f,
                              Word const&     u,
                              std::size_t     from,
                              std::size_t     to) {
      Word out(f.target());
      for (std::size_t l = from; l < to; ++l) {
        out = out + f.image(u[l]);
      }
      return out;
    }
  }  // namespace detail

  // Decomposes the minimal square of f(u) (smallest root, then leftmost), or
  // returns nullopt if f(u) is square-free.
  inline std::optional<SquareDecomposition>
  decompose_minimal_square(Morphism const& f, Word const& u) {
    Word image = apply(f, u);
    auto occ   = find_minimal_square(image);
    if (!occ) {
      return std::nullopt;
    }
    auto        off = detail::block_offsets(f, u);
    std::size_t s   = occ->start;
    std::size_t p   = occ->root_length;
    std::size_t i   = detail::block_of(off, s);
    std::size_t j   = detail::block_of(off, s + p);
    std::size_t k   = detail::block_of(off, s + 2 * p - 1);
    Word const& ai  = f.image(u[i]);
    Word const& aj  = f.image(u[j]);
    Word const& ak  = f.image(u[k]);
    std::size_t ai_cut = s - off[i];
    std::size_t aj_cut = s + p - off[j];
    std::size_t ak_cut = s + 2 * p - off[k];
    return SquareDecomposition{std::move(*occ),
                               i,
                               j,
                               k,
                               ai.substr(ai_cut),
                               aj.prefix(aj_cut),
                               aj.substr(aj_cut),
                               ak.prefix(ak_cut),
                               i == j || j == k};
  }

  // Re-derives the three cut points from the blocks and checks them against
  // the image, plus the two factorizations of the root when not degenerate.
  inline bool reconstructs(SquareDecomposition const& d,
                           Morphism const&            f,
                           Word const&                u) {
    if (d.k >= u.size() || d.i > d.j || d.j > d.k) {
      return false;
    }
    Word        image = apply(f, u);
    std::size_t s     = d.occurrence.start;
    std::size_t p     = d.occurrence.root_length;
    if (!is_genuine_square(image, d.occurrence)) {
      return false;
    }
    Word const& ai = f.image(u[d.i]);
    Word const& aj = f.image(u[d.j]);
    Word const& ak = f.image(u[d.k]);
    if (d.ai_suffix.empty() || d.ai_suffix.size() > ai.size()
        || d.aj_suffix.empty() || d.aj_prefix + d.aj_suffix != aj
        || d.ak_prefix.empty() || d.ak_prefix.size() > ak.size()
        || ak.prefix(d.ak_prefix.size()) != d.ak_prefix
        || ai.substr(ai.size() - d.ai_suffix.size()) != d.ai_suffix) {
      return false;
    }
    Word ai_prefix = ai.prefix(ai.size() - d.ai_suffix.size());
    if (detail::concat_images(f, u, 0, d.i) + ai_prefix != image.prefix(s)
        || detail::concat_images(f, u, 0, d.j) + d.aj_prefix
               != image.prefix(s + p)
        || detail::concat_images(f, u, 0, d.k) + d.ak_prefix
               != image.prefix(s + 2 * p)) {
      return false;
    }
    if (!d.degenerate) {
      Word first  = d.ai_suffix + detail::concat_images(f, u, d.i + 1, d.j)
                   + d.aj_prefix;
      Word second = d.aj_suffix + detail::concat_images(f, u, d.j + 1, d.k)
                    + d.ak_prefix;
      if (first != d.occurrence.root || second != d.occurrence.root) {
        return false;
      }
    }
    return true;
  }

  // The structural facts that hold for a square in f(w) when f is square-free
  // on all short factors. Evaluated, never assumed. nullopt = not applicable.
  struct LineupPredicates {
    bool                span_ge_7;       // k - i >= 7
    bool                strict_order;    // i < j < k
    std::optional<bool> aj_eq_ak;        // A_j' == A_k'
    std::optional<bool> suffixes_equal;  // A_i'' == A_j''
    std::optional<bool> arithmetic;      // j - i == k - j
    std::optional<bool> blocks_aligned;  // A_{i+l} == A_{j+l}, 1 <= l < j - i
  };

  inline LineupPredicates lineup_predicates(SquareDecomposition const& d,
                                            Morphism const&            f,
                                            Word const&                u) {
    if (!reconstructs(d, f, u)) {
      throw InvalidArgument("lineup_predicates: decomposition does not belong "
                            "to this morphism and word");
    }
    LineupPredicates lp{d.k - d.i >= 7, d.i < d.j && d.j < d.k, {}, {}, {}, {}};
    if (d.degenerate) {
      return lp;
    }
    lp.aj_eq_ak       = d.aj_prefix == d.ak_prefix;
    lp.suffixes_equal = d.ai_suffix == d.aj_suffix;
    lp.arithmetic     = d.j - d.i == d.k - d.j;
    std::size_t gap   = d.j - d.i - 1;
    if (d.j + gap < u.size()) {
      bool aligned = true;
      for (std::size_t l = 1; l <= gap && aligned; ++l) {
        aligned = f.image(u[d.i + l]) == f.image(u[d.j + l]);
      }
      lp.blocks_aligned = aligned;
    }
    return lp;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pattern scans
  ////////////////////////////////////////////////////////////////////////

  enum class PatternKind { azbza, czbzc, azcza, general };

  inline std::string_view to_string(PatternKind k) {
    switch (k) {
      case PatternKind::azbza:
        return "azbza";
      case PatternKind::czbzc:
        return "czbzc";
      case PatternKind::azcza:
        return "azcza";
      default:
        return "general";
    }
  }

  inline PatternKind parse_pattern_kind(std::string_view text) {
    for (auto k : {PatternKind::azbza,
                   PatternKind::czbzc,
                   PatternKind::azcza,
                   PatternKind::general}) {
      if (text == to_string(k)) {
        return k;
      }
    }
    throw ParseError("unknown pattern template \"" + std::string(text)
                     + "\", expected azbza, czbzc, azcza or general");
  }

  // An occurrence of alpha z beta z gamma. `general` means any letters with
  // alpha != beta and gamma != beta; the other kinds fix all three letters.
  struct PatternWitness {
    PatternKind kind;
    std::size_t start;     // position of alpha
    std::size_t z_first;   // start of the first copy of z
    std::size_t z_second;  // start of the second copy of z
    letter_type alpha;
    letter_type beta;
    letter_type gamma;
    Word        z;

    bool operator==(PatternWitness const&) const = default;
  };

  namespace detail {
    inline bool template_matches(PatternKind k,
                                 letter_type alpha,
                                 letter_type beta,
                                 letter_type gamma) {
      switch (k) {
        case PatternKind::azbza:
          return alpha == 0 && beta == 1 && gamma == 0;
        case PatternKind::czbzc:
          return alpha == 2 && beta == 1 && gamma == 2;
        case PatternKind::azcza:
          return alpha == 0 && beta == 2 && gamma == 0;
        default:
          return alpha != beta && gamma != beta;
      }
    }
  }  // namespace detail

  // Every factor alpha z beta z gamma of u matching one of the templates with
  // |z| >= min_z, ordered by (start, |z|, kind).
  //
  // For each |z| = m >= 1 the first copy of z spans exactly one multiple of m,
  // so sampling those positions and extending with forward and backward LCE
  // finds all pairs of equal z-copies at distance m + 1 in O(n / m) queries,
  // O(n log n) in total.
  inline std::vector<PatternWitness>
  scan_xzyzx(Word const&                    u,
             std::size_t                    min_z,
             std::set<PatternKind> const&   templates) {
    std::vector<PatternWitness> out;
    auto                        w = u.letters();
    std::size_t const           n = w.size();
    if (templates.empty() || n < 3) {
      return out;
    }
    auto emit = [&](std::size_t s, std::size_t m) {
      letter_type alpha = w[s], beta = w[s + m + 1], gamma = w[s + 2 * m + 2];
      for (auto kind : templates) {
        if (detail::template_matches(kind, alpha, beta, gamma)) {
          out.push_back(PatternWitness{kind,
                                       s,
                                       s + 1,
                                       s + m + 2,
                                       alpha,
                                       beta,
                                       gamma,
                                       u.substr(s + 1, m)});
        }
      }
    };
    if (min_z == 0) {
      for (std::size_t s = 0; s + 3 <= n; ++s) {
        emit(s, 0);
      }
    }
    if (n >= 5) {
      std::vector<detail::index_type> t(n), r(n);
      for (std::size_t x = 0; x < n; ++x) {
        t[x]         = w[x];
        r[n - 1 - x] = w[x];
      }
      std::size_t const sigma = u.alphabet().size();
      detail::LceIndex  fwd(t, sigma);
      detail::LceIndex  bwd(r, sigma);
      // a factor of length 2m + 3 must fit
      for (std::size_t m = std::max<std::size_t>(min_z, 1); 2 * m + 3 <= n; ++m) {
        std::size_t const q = m + 1;  // distance between the z-copies
        for (std::size_t x = 0; x + q < n; x += m) {
          std::size_t right = fwd.lce(x, x + q);
          std::size_t left  = x == 0 ? 0 : bwd.lce(n - x, n - x - q);
          // first copy starts at i: x - left <= i <= x, i + m <= x + right
          std::size_t lo = x - std::min(left, x);
          lo             = std::max(lo, x + 1 >= m ? x + 1 - m : 0);
          lo             = std::max<std::size_t>(lo, 1);
          if (x + right < m) {
            continue;
          }
          std::size_t hi = std::min(x, x + right - m);
          for (std::size_t i = lo; i <= hi; ++i) {
            if (i + 2 * m + 1 >= n) {
              break;
            }
            emit(i - 1, m);
          }
        }
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      auto za = a.z.size(), zb = b.z.size();
      return std::tie(a.start, za, a.kind) < std::tie(b.start, zb, b.kind);
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reading alpha z beta z gamma off a decomposition
  ////////////////////////////////////////////////////////////////////////

  struct Theorem2Search {
    std::optional<PatternWitness>      witness;
    std::optional<SquareDecomposition> decomposition;
    std::string                        reason;  // why there is no witness
  };

  // If f(u) contains a square, tries to read off a factor alpha z beta z gamma
  // of u from the decomposition of the minimal square: alpha = u[i],
  // beta = u[j], gamma = u[k], z between the cuts, with |z| >= 3,
  // alpha != beta != gamma, and alpha beta gamma not in `factors_of_w`.
  inline Theorem2Search theorem2_witness_search(Morphism const&  f,
                                                Word const&      u,
                                                FactorSet const& factors_of_w) {
    Theorem2Search result;
    result.decomposition = decompose_minimal_square(f, u);
    if (!result.decomposition) {
      result.reason = "image is square-free";
      return result;
    }
    auto const& d = *result.decomposition;
    if (d.k - d.i < 7) {
      result.reason = "fails on short factor (k - i = " + std::to_string(d.k - d.i)
                      + " < 7)";
      return result;
    }
    if (d.degenerate) {
      result.reason = "degenerate decomposition";
      return result;
    }
    Word z1 = u.substr(d.i + 1, d.j - d.i - 1);
    Word z2 = u.substr(d.j + 1, d.k - d.j - 1);
    if (z1 != z2) {
      result.reason = "blocks between the cuts differ";
      return result;
    }
    if (z1.size() < 3) {
      result.reason = "|z| < 3";
      return result;
    }
    letter_type alpha = u[d.i], beta = u[d.j], gamma = u[d.k];
    if (alpha == beta || gamma == beta) {
      result.reason = "alpha or gamma equals beta";
      return result;
    }
    Word abg(sigma(), {alpha, beta, gamma});
    if (factors_of_w.contains(abg)) {
      result.reason = "alpha beta gamma = " + abg.str() + " is a factor of w";
      return result;
    }
    PatternKind kind = PatternKind::general;
    for (auto k : {PatternKind::azbza, PatternKind::czbzc, PatternKind::azcza}) {
      if (detail::template_matches(k, alpha, beta, gamma)) {
        kind = k;
      }
    }
    result.witness = PatternWitness{
        kind, d.i, d.i + 1, d.j + 1, alpha, beta, gamma, std::move(z1)};
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Censuses
  ////////////////////////////////////////////////////////////////////////

  struct Census {
    std::vector<Word> present;
    std::vector<Word> missing;
  };

  // Splits the 12 square-free words of length 3 over {a, b, c} into those that
  // occur in u and those that do not.
  inline Census length3_census(Word const& u) {
    if (!(u.alphabet() == sigma())) {
      throw InvalidArgument("length3_census: word must be over {a, b, c}");
    }
    Census census;
    for (auto const& v : square_free_words(sigma(), 3)) {
      if (v.size() != 3) {
        continue;
      }
      (u.size() >= 3 && contains_factor(u, v) ? census.present : census.missing)
          .push_back(v);
    }
    return census;
  }

  ////////////////////////////////////////////////////////////////////////
  // Boundary equations u = s f(chi x y z) p
  ////////////////////////////////////////////////////////////////////////

  struct BoundaryEquationSolution {
    int         form;  // 3: u suffix of f(t); 4: u prefix of f(t)
    Word        factor;  // alpha ... beta
    letter_type t;
    std::size_t s_length;
    std::size_t p_length;
  };

  // Searches, for each factor F = alpha m beta of length >= 5 in `factors`
  // and each letter t, for
  //   form 3: a suffix of f(t) equal to s f(m) p, s a suffix of f(alpha),
  //           p a non-empty prefix of f(beta);
  //   form 4: a prefix of f(t) equal to s f(m) p, s a non-empty suffix of
  //           f(alpha), p a prefix of f(beta).
  // For f square-free on the short factors of w there are no solutions.
  inline std::vector<BoundaryEquationSolution>
  boundary_equation_solutions(Morphism const& f, FactorSet const& factors) {
    std::vector<BoundaryEquationSolution> out;
    for (auto const& F : factors) {
      if (F.size() < 5) {
        continue;
      }
      Word const& fa  = f.image(F[0]);
      Word const& fb  = f.image(F[F.size() - 1]);
      Word        mid = apply(f, F.substr(1, F.size() - 2));
      for (letter_type t = 0; t < 3; ++t) {
        Word const& ft = f.image(t);
        auto        T  = ft.letters();
        for (std::size_t a = 0; a <= fa.size(); ++a) {
          for (std::size_t b = 0; b <= fb.size(); ++b) {
            std::size_t len = a + mid.size() + b;
            if (len > T.size()) {
              break;
            }
            Word cand = fa.substr(fa.size() - a) + mid + fb.prefix(b);
            auto c    = cand.letters();
            if (b >= 1
                && std::equal(c.begin(), c.end(), T.end() - static_cast<std::ptrdiff_t>(len))) {
              out.push_back({3, F, t, a, b});
            }
            if (a >= 1 && std::equal(c.begin(), c.end(), T.begin())) {
              out.push_back({4, F, t, a, b});
            }
          }
        }
      }
    }
    return out;
  }

}  // namespace sqfree

#endif  // SQFREE_ANALYSIS_HPP_
