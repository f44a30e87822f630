// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sqfree/report_json.hpp"
#include "sqfree/sqfree.hpp"

using namespace sqfree;

namespace {

  // Pinned budgets and sizes.
  constexpr double      generator_seconds   = 30.0;
  constexpr std::size_t long_prefix         = 100'000;
  constexpr std::size_t naive_prefix        = 2'000;
  constexpr std::size_t search_prefix       = 20'000;
  constexpr std::size_t random_morphisms    = 1'000;
  constexpr std::uint64_t random_seed       = 1;
  constexpr std::size_t random_words        = 1'000;
  constexpr std::size_t random_word_max_len = 512;

  int failures = 0;

  void report(int id, std::string const& name, bool ok, std::string const& detail) {
    std::printf("%s  %2d  %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
  }

  double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  std::set<std::string> names(std::vector<Word> const& v) {
    std::set<std::string> out;
    for (auto const& w : v) {
      out.insert(w.str());
    }
    return out;
  }

  bool is_prefix(Word const& p, Word const& w) {
    return p.size() <= w.size() && w.prefix(p.size()) == p;
  }

  bool is_suffix(Word const& s, Word const& w) {
    return s.size() <= w.size() && w.substr(w.size() - s.size()) == s;
  }

  // Morphisms seen in criterion 3, kept for 8 and 9.
  struct Seen {
    Morphism       f;
    AvoidanceLabel label;
    TestReport     report;
  };
  std::vector<Seen> passing_seen, failing_seen;
  std::map<AvoidanceLabel, TestSet> test_sets;

  void criterion1() {
    auto        t0 = std::chrono::steady_clock::now();
    bool        ok = true;
    std::string detail;
    for (auto label : {AvoidanceLabel::s1, AvoidanceLabel::s2}) {
      Word w      = generate_prefix(default_generator(label), long_prefix);
      bool avoid  = w.size() == long_prefix && verify_avoidance(w, avoidance_set(label));
      bool naive  = !find_minimal_square_naive(w.prefix(naive_prefix))
                   && oracle::square_free(w.prefix(naive_prefix).str());
      ok = ok && avoid && naive;
      detail += std::string(to_string(label)) + (avoid ? " avoids" : " VIOLATES")
                + (naive ? ", naive ok; " : ", naive FAILS; ");
    }
    double secs = seconds_since(t0);
    ok          = ok && secs < generator_seconds;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s (limit %.0f s)", secs, generator_seconds);
    report(1, "generator soundness", ok, detail + buf);
  }

  void criterion2() {
    bool        ok = true;
    std::string detail;
    std::set<std::string> pairs{"ab", "ac", "ba", "bc", "ca", "cb"};
    for (auto [label, missing] :
         {std::pair{AvoidanceLabel::s1, std::set<std::string>{"aba", "cbc"}},
          std::pair{AvoidanceLabel::s2, std::set<std::string>{"aba", "aca"}}}) {
      auto tests = saturated_test_set(label, 7);
      Word w     = generate_prefix(default_generator(label), tests.saturation_length);
      auto c     = length3_census(w);
      std::set<std::string> two;
      for (auto const& v : factors_up_to(w, 2)) {
        if (v.size() == 2) {
          two.insert(v.str());
        }
      }
      bool here = names(c.missing) == missing && c.present.size() == 10 && two == pairs;
      ok        = ok && here;
      detail += std::string(to_string(label)) + " missing {";
      for (auto const& m : c.missing) {
        detail += " " + m.str();
      }
      detail += " }, " + std::to_string(two.size()) + " length-2; ";
    }
    report(2, "censuses", ok, detail);
  }

  void criterion3() {
    std::string detail;
    bool        ok = true;
    auto run = [&](SearchSpace const& space, AvoidanceLabel label) {
      SearchOptions options;
      options.observer = [&](std::uint64_t, Morphism const& f, TestReport const& r,
                             std::optional<bool>) {
        (r.passed() ? passing_seen : failing_seen).push_back({f, label, r});
      };
      auto out = verify_theorem1(space, label, search_prefix, options);
      bool here = out.disagreements.empty() && out.examined == space_size(space);
      ok        = ok && here;
      detail += space.describe() + " " + std::string(to_string(label)) + ": "
                + std::to_string(out.examined) + " examined, "
                + std::to_string(out.passing) + " pass, "
                + std::to_string(out.disagreements.size()) + " disagreements; ";
    };
    for (auto label : {AvoidanceLabel::s1, AvoidanceLabel::s2}) {
      test_sets.emplace(label, saturated_test_set(label, 7));
      run(SearchSpace{2, 3}, label);
    }
    for (auto label : {AvoidanceLabel::s1, AvoidanceLabel::s2}) {
      run(SearchSpace{3, 6, SearchMode::random, random_morphisms, random_seed}, label);
    }
    report(3, "test-set verdict matches long-prefix images", ok, detail);
  }

  void criterion4() {
    Morphism    thue(sigma(), "abc", "ac", "b");
    Morphism    constant(Alphabet("0"), "0", "0", "0");
    bool        ok = true;
    std::string detail;
    auto note = [&](std::string const& what, bool expected, TestReport const& r) {
      bool here = r.passed() == expected
                  && (expected || r.minimal_failing_length() == 2);
      ok = ok && here;
      detail += what + (r.passed() ? " pass" : " fail");
      if (!r.passed()) {
        detail += " (" + r.failures.front().factor.str() + " -> square "
                  + r.failures.front().occurrence.root.str() + ")";
      }
      detail += here ? "; " : " [unexpected]; ";
    };
    auto const& s1 = test_sets.at(AvoidanceLabel::s1);
    note("thue/s1", true, theorem1_check(thue, s1));
    note("thue/crochemore", true, crochemore_check(thue));
    note("identity/s1", true, theorem1_check(Morphism::identity(), s1));
    note("identity/s2", true, theorem1_check(Morphism::identity(), test_sets.at(AvoidanceLabel::s2)));
    note("identity/crochemore", true, crochemore_check(Morphism::identity()));
    note("constant/s1", false, theorem1_check(constant, s1));
    note("constant/s2", false, theorem1_check(constant, test_sets.at(AvoidanceLabel::s2)));
    note("constant/crochemore", false, crochemore_check(constant));
    report(4, "known morphisms", ok, detail);
  }

  void criterion5() {
    auto r    = remark17_report();
    bool ok   = r.holds() && r.word.str() == "acabcbacbcabcbaca"
              && r.witness->z.str() == "cabcbac"
              && oracle::square_free(r.word.str());
    report(5, "17-letter azbza word", ok,
           r.word.str() + ", length " + std::to_string(r.word.size()));
  }

  void criterion6() {
    auto s1 = scan_xzyzx(s1_word_prefix(long_prefix), 0,
                         {PatternKind::azbza, PatternKind::czbzc});
    auto s2 = scan_xzyzx(generate_prefix(default_generator(AvoidanceLabel::s2), long_prefix),
                         3, {PatternKind::azbza, PatternKind::azcza});
    report(6, "pattern scans", s1.empty() && s2.empty(),
           "s1 azbza/czbzc: " + std::to_string(s1.size()) + ", s2 azbza/azcza |z|>=3: "
               + std::to_string(s2.size()));
  }

  void criterion7() {
    std::mt19937_64 rng(20260101);
    std::size_t     mismatches = 0, with_square = 0;
    auto const      source      = s1_word_prefix(20'000).letters();
    std::vector<letter_type> thue_source(source.begin(), source.end());
    for (std::size_t t = 0; t < random_words; ++t) {
      std::size_t sigma_size = 2 + t % 3;
      std::size_t n          = rng() % (random_word_max_len + 1);
      std::vector<letter_type> v;
      if (sigma_size >= 3 && t % 2 == 0) {
        // a window of a square-free word, with one letter changed half the
        // time, so that minimal squares are long or absent
        std::size_t from = rng() % (thue_source.size() - n);
        for (std::size_t x = 0; x < n; ++x) {
          v.push_back(thue_source[from + x]);
        }
        if (t % 4 == 0 && n > 0) {
          v[rng() % n] = static_cast<letter_type>(rng() % sigma_size);
        }
      }
      while (v.size() < n) {
        v.push_back(static_cast<letter_type>(rng() % sigma_size));
      }
      Word w(Alphabet(std::string("0123").substr(0, sigma_size)), std::move(v));
      auto naive = find_minimal_square_naive(w);
      with_square += naive.has_value();
      for (auto fast : {find_minimal_square(w), detail::find_minimal_square_runs(w)}) {
        bool same = fast.has_value() == naive.has_value()
                    && (!naive || (fast->root_length == naive->root_length
                                   && fast->start == naive->start));
        mismatches += same ? 0 : 1;
      }
    }
    report(7, "fast and naive detectors agree", mismatches == 0,
           std::to_string(random_words) + " words, " + std::to_string(with_square)
               + " with squares, " + std::to_string(mismatches) + " mismatches");
  }

  void criterion8() {
    std::size_t violations = 0;
    for (auto const& s : passing_seen) {
      for (letter_type x = 0; x < 3; ++x) {
        for (letter_type y = 0; y < 3; ++y) {
          if (x != y
              && (is_prefix(s.f.image(x), s.f.image(y))
                  || is_suffix(s.f.image(x), s.f.image(y)))) {
            ++violations;
          }
        }
      }
      for (auto const& chi : test_sets.at(s.label).factors) {
        if (chi.size() < 4) {
          continue;
        }
        Word image = apply(s.f, chi);
        for (letter_type x = 0; x < 3; ++x) {
          if (image.size() <= s.f.image(x).size() && contains_factor(s.f.image(x), image)) {
            ++violations;
          }
        }
      }
    }
    report(8, "image prefix/suffix and containment properties",
           violations == 0 && !passing_seen.empty(),
           std::to_string(passing_seen.size()) + " passing morphisms, "
               + std::to_string(violations) + " violations");
  }

  void criterion9() {
    std::size_t bad = 0, max_span = 0;
    for (auto const& s : failing_seen) {
      Word const& u = s.report.failures.front().factor;
      auto        d = decompose_minimal_square(s.f, u);
      if (!d || !reconstructs(*d, s.f, u) || d->k - d->i > 6) {
        ++bad;
        continue;
      }
      max_span = std::max(max_span, d->k - d->i);
    }
    report(9, "decomposition integrity", bad == 0 && !failing_seen.empty(),
           std::to_string(failing_seen.size()) + " failing morphisms, max k - i = "
               + std::to_string(max_span) + ", " + std::to_string(bad) + " bad");
  }

  // Re-checks a candidate from scratch with the string oracles.
  bool recheck(Candidate const& c, AvoidanceLabel label, std::size_t prefix_length) {
    auto        f = parse_morphism(format_morphism(c.morphism));
    std::map<char, std::string> g;
    for (letter_type x = 0; x < 3; ++x) {
      g["abc"[x]] = f.image(x).str();
    }
    auto prefix = generate_prefix(default_generator(label), prefix_length).str();
    auto image  = oracle::apply(g, prefix);
    auto p      = c.square_root_length;
    if (p == 0 || c.square_start + 2 * p > image.size()
        || image.compare(c.square_start, p, image, c.square_start + p, p) != 0) {
      return false;
    }
    for (auto const& chi : oracle::factors(prefix, c.passes_up_to)) {
      if (!oracle::square_free(oracle::apply(g, chi))) {
        return false;
      }
    }
    return true;
  }

  void criterion10() {
    SearchSpace p7{3, 6, SearchMode::random, 2'000, 42};
    SearchSpace s3{3, 4, SearchMode::random, 2'000, 43};
    auto run7  = [&] { return probe_constant_7(p7, AvoidanceLabel::s1, search_prefix); };
    auto runs3 = [&] { return probe_s3_bound(s3, search_prefix, 2, 16); };
    auto a7 = run7(), b7 = run7();
    auto a3 = runs3(), b3 = runs3();
    bool same = to_json(a7).dump() == to_json(b7).dump()
                && to_json(a3).dump() == to_json(b3).dump();
    std::size_t candidates = 0, rechecked = 0;
    for (auto const& c : a7.candidates) {
      ++candidates;
      rechecked += c.reverified && recheck(c, AvoidanceLabel::s1, search_prefix);
    }
    for (auto const& c : a3.candidates) {
      ++candidates;
      rechecked += c.reverified && recheck(c, AvoidanceLabel::s3, search_prefix);
    }
    report(10, "search reproducibility", same && candidates == rechecked,
           std::string(same ? "identical" : "DIFFERENT") + " JSON, "
               + std::to_string(candidates) + " candidates, "
               + std::to_string(rechecked) + " re-verified; probe-7 disagreements "
               + std::to_string(a7.disagreements.size()) + ", s3 largest separated k = "
               + (a3.largest_separated_k ? std::to_string(*a3.largest_separated_k)
                                         : std::string("none")));
  }

}  // namespace

int main() {
  std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3,
                                              criterion4, criterion5, criterion6,
                                              criterion7, criterion8, criterion9,
                                              criterion10};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (std::exception const& e) {
      report(static_cast<int>(i + 1), "exception", false, e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
