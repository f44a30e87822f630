#ifndef SQFREE_TOOLS_CLI_HPP_
#define SQFREE_TOOLS_CLI_HPP_

// The sqfree command-line front end. Kept in a header so the test suite can
// drive it in-process.
//
// Exit statuses: 0 success/pass, 1 checked and failed (witness in the
// report), 2 usage or input error, 3 budget exhausted.

#include <chrono>       // for steady_clock
#include <fstream>      // for ifstream, ofstream
#include <iostream>     // for ostream
#include <set>          // for set
#include <sstream>      // for stringstream
#include <string>       // for string
#include <vector>       // for vector

#include "CLI11.hpp"
#include "json.hpp"

#include "sqfree/report_json.hpp"
#include "sqfree/sqfree.hpp"

namespace sqfree::cli {

  enum exit_status : int { ok = 0, failed = 1, usage = 2, budget = 3 };

  namespace detail {

    inline std::string quote(std::string const& arg) {
      if (!arg.empty()
          && arg.find_first_of(" \t\n\"'\\$`") == std::string::npos) {
        return arg;
      }
      std::string out = "'";
      for (char c : arg) {
        if (c == '\'') {
          out += "'\\''";
        } else {
          out += c;
        }
      }
      return out + "'";
    }

    inline std::string command_line(std::vector<std::string> const& args) {
      std::string out;
      for (auto const& a : args) {
        if (!out.empty()) {
          out += ' ';
        }
        out += quote(a);
      }
      return out;
    }

    inline std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw ParseError("cannot open file " + path);
      }
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    inline void write_file(std::string const& path, std::string const& text) {
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        throw ParseError("cannot write file " + path);
      }
      out << text;
    }

    inline Word read_word_file(std::string const& path, Alphabet const& a) {
      std::string text = read_file(path);
      auto        nl   = text.find('\n');
      if (nl != std::string::npos && nl + 1 < text.size()
          && text.find_first_not_of("\r\n", nl) != std::string::npos) {
        throw ParseError(path + ": word files hold a single line");
      }
      try {
        return parse_word(text, a);
      } catch (ParseError const& e) {
        throw ParseError(path + ": " + e.what());
      }
    }

    inline Morphism read_morphism_file(std::string const& path) {
      std::string text = read_file(path);
      try {
        return parse_morphism(text);
      } catch (ParseError const& e) {
        throw ParseError(path + ": " + e.what());
      }
    }

    inline std::set<PatternKind> parse_templates(std::string const& text) {
      std::set<PatternKind> out;
      std::stringstream     ss(text);
      std::string           item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
          out.insert(parse_pattern_kind(item));
        }
      }
      if (out.empty()) {
        throw ParseError("--templates: no template given");
      }
      return out;
    }

    // Options shared by several subcommands.
    struct Options {
      std::string   avoid = "s1";
      std::size_t   n     = 0;
      std::size_t   k     = 7;
      std::string   word;
      std::string   word_file;
      std::string   alphabet = "abc";
      std::string   morphism_file;
      std::string   json_path;
      std::string   out_path;
      std::string   templates = "azbza,czbzc";
      std::size_t   min_z     = 0;
      std::size_t   target_size = 2;
      std::size_t   max_len     = 3;
      std::size_t   samples     = 0;
      std::uint64_t seed        = 0;
      std::size_t   prefix      = 0;
      std::size_t   k_min       = 2;
      std::size_t   k_max       = 16;
      unsigned      threads     = 1;
      std::size_t   max_prefix  = GeneratorBudget{}.max_prefix;
      std::size_t   max_steps   = GeneratorBudget{}.max_steps;
    };

    inline GeneratorBudget budget_of(Options const& o) {
      return GeneratorBudget{o.max_prefix, o.max_steps};
    }

    inline json budgets_json(Options const& o) {
      return json{{"max_prefix", o.max_prefix}, {"max_steps", o.max_steps}};
    }

    inline SearchSpace space_of(Options const& o) {
      SearchSpace s;
      s.target_size = o.target_size;
      s.max_length  = o.max_len;
      if (o.samples > 0) {
        s.mode    = SearchMode::random;
        s.samples = o.samples;
        s.seed    = o.seed;
      }
      return s;
    }

    // The word a subcommand works on: --word, --file, or a generated prefix.
    inline Word subject_word(Options const& o, std::string& source) {
      if (!o.word.empty()) {
        source = "--word";
        try {
          return parse_word(o.word, Alphabet(o.alphabet));
        } catch (ParseError const& e) {
          throw ParseError(std::string("--word: ") + e.what());
        }
      }
      if (!o.word_file.empty()) {
        source = o.word_file;
        return read_word_file(o.word_file, Alphabet(o.alphabet));
      }
      if (o.n == 0) {
        throw ParseError("give --word, --file, or --avoid with --n");
      }
      auto label = parse_avoidance_label(o.avoid);
      source     = std::string(to_string(label)) + " prefix of length "
               + std::to_string(o.n);
      return generate_prefix(default_generator(label, budget_of(o)), o.n);
    }

  }  // namespace detail

  // Runs one invocation; args[0] is the program name.
  inline int run(std::vector<std::string> const& args,
                 std::ostream&                   out,
                 std::ostream&                   err) {
    using detail::Options;
    Options   o;
    CLI::App  app{"Square-free words, Thue's ternary words, and finite test "
                 "sets for square-free morphic images",
                 "sqfree"};
    app.require_subcommand(1, 1);

    auto add_json = [&](CLI::App* sub) {
      sub->add_option("--json", o.json_path, "Write a JSON report to this path");
    };
    auto add_budget = [&](CLI::App* sub) {
      sub->add_option("--max-prefix", o.max_prefix, "Generator prefix budget")
          ->check(CLI::PositiveNumber);
      sub->add_option("--max-steps", o.max_steps, "Backtracking step budget")
          ->check(CLI::PositiveNumber);
    };
    auto add_subject = [&](CLI::App* sub) {
      sub->add_option("--word", o.word, "Word given inline");
      sub->add_option("--file", o.word_file, "Word file (one line)");
      sub->add_option("--alphabet", o.alphabet, "Alphabet of --word/--file");
      sub->add_option("--avoid", o.avoid, "Generated word: s1, s2 or s3");
      sub->add_option("--n", o.n, "Generated prefix length");
      add_budget(sub);
    };
    auto add_space = [&](CLI::App* sub) {
      sub->add_option("--target-size", o.target_size, "Target alphabet size (2-4)")
          ->check(CLI::Range(2, 4));
      sub->add_option("--max-len", o.max_len, "Maximum image length")
          ->check(CLI::Range(1, 64));
      sub->add_option("--samples", o.samples,
                      "Random mode with this many samples (0 = exhaustive)");
      sub->add_option("--seed", o.seed, "Random seed");
      sub->add_option("--prefix", o.prefix,
                      "Prefix length for the long check (0 = default)");
      sub->add_option("--threads", o.threads, "Worker threads")
          ->check(CLI::Range(1, 256));
    };

    auto* generate = app.add_subcommand("generate", "Print a prefix of the s1, s2 or s3 word");
    generate->add_option("--avoid", o.avoid, "s1, s2 or s3")->required();
    generate->add_option("--n", o.n, "Prefix length")->required()->check(CLI::PositiveNumber);
    generate->add_option("--out", o.out_path, "Write the word to this file");
    add_budget(generate);
    add_json(generate);

    auto* check_word = app.add_subcommand("check-word", "Is a word square-free?");
    add_subject(check_word);
    add_json(check_word);

    auto* test_morphism = app.add_subcommand(
        "test-morphism", "Check a morphism on the factors of length <= k of a word");
    test_morphism->add_option("--avoid", o.avoid, "s1, s2 or s3")->required();
    test_morphism->add_option("--morphism", o.morphism_file, "Morphism file")->required();
    test_morphism->add_option("--k", o.k, "Factor length bound")->check(CLI::PositiveNumber);
    add_budget(test_morphism);
    add_json(test_morphism);

    auto* crochemore = app.add_subcommand(
        "crochemore", "Check a morphism on all square-free words of length <= 5");
    crochemore->add_option("--morphism", o.morphism_file, "Morphism file")->required();
    add_json(crochemore);

    auto* scan = app.add_subcommand("scan", "Find factors alpha z beta z gamma");
    add_subject(scan);
    scan->add_option("--templates", o.templates,
                     "Comma-separated: azbza, czbzc, azcza, general");
    scan->add_option("--min-z", o.min_z, "Minimum |z|");
    add_json(scan);

    auto* census = app.add_subcommand("census", "Which square-free length-3 words occur?");
    add_subject(census);
    add_json(census);

    auto* verify = app.add_subcommand(
        "verify-theorem1", "Compare the k = 7 test with long-prefix images over a space");
    verify->add_option("--avoid", o.avoid, "s1 or s2");
    add_space(verify);
    add_json(verify);

    auto* probe7 = app.add_subcommand(
        "probe-7", "Find morphisms passing length <= 6 but failing on the word");
    probe7->add_option("--avoid", o.avoid, "s1 or s2");
    add_space(probe7);
    add_json(probe7);

    auto* remark17 = app.add_subcommand("remark17", "Check the 17-letter word azbza, z = cabcbac");
    add_json(remark17);

    auto* probe_s3 = app.add_subcommand(
        "probe-s3", "Separate length bounds k for the s3 word");
    add_space(probe_s3);
    probe_s3->add_option("--k-min", o.k_min, "Smallest k")->check(CLI::PositiveNumber);
    probe_s3->add_option("--k-max", o.k_max, "Largest k")->check(CLI::Range(1, 32));
    add_json(probe_s3);

    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return ok;
    } catch (CLI::CallForAllHelp const& e) {
      app.exit(e, out, err);
      return ok;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage;
    }

    auto const start  = std::chrono::steady_clock::now();
    json       report = {{"command", detail::command_line(args)}};
    int        status = ok;

    try {
      if (generate->parsed()) {
        auto label = parse_avoidance_label(o.avoid);
        auto spec  = default_generator(label, detail::budget_of(o));
        Word w     = generate_prefix(spec, o.n);
        if (o.out_path.empty()) {
          out << w.str() << '\n';
        } else {
          detail::write_file(o.out_path, w.str() + "\n");
          out << "wrote " << o.n << " letters of the " << to_string(label)
              << " word to " << o.out_path << '\n';
        }
        report["verdict"]   = "pass";
        report["witnesses"] = json::array();
        report["counts"]    = {{"length", w.size()}};
        report["generator"] = {{"avoid", std::string(to_string(label))},
                               {"method", std::string(to_string(spec.method))}};
        report["budgets"] = detail::budgets_json(o);
        if (o.out_path.empty() && w.size() <= 4096) {
          report["word"] = w.str();
        }
      } else if (check_word->parsed()) {
        std::string source;
        Word        w   = detail::subject_word(o, source);
        auto        occ = find_minimal_square(w);
        report["verdict"]   = occ ? "fail" : "pass";
        report["witnesses"] = occ ? json::array({to_json(*occ)}) : json::array();
        report["counts"]    = {{"length", w.size()}};
        report["source"]    = source;
        report["budgets"]   = detail::budgets_json(o);
        if (occ) {
          out << "not square-free: square of root \"" << occ->root.str()
              << "\" (length " << occ->root_length << ") at position "
              << occ->start << '\n';
          status = failed;
        } else {
          out << "square-free (" << w.size() << " letters)\n";
        }
      } else if (test_morphism->parsed()) {
        auto     label = parse_avoidance_label(o.avoid);
        Morphism f     = detail::read_morphism_file(o.morphism_file);
        TestSet  tests = saturated_test_set(default_generator(label, detail::budget_of(o)), o.k);
        auto     r     = theorem1_check(f, tests);
        report["verdict"]   = std::string(to_string(r.verdict));
        report["witnesses"] = to_json(r)["failures"];
        report["counts"]    = {{"checked_factors", r.checked_factor_count},
                               {"failures", r.failures.size()},
                               {"minimal_failing_length", r.minimal_failing_length()}};
        report["test_set"]  = {{"avoid", std::string(to_string(label))},
                               {"method", std::string(to_string(tests.method))},
                               {"k", tests.k},
                               {"saturation_length", tests.saturation_length}};
        report["morphism"]  = format_morphism(f);
        report["budgets"]   = detail::budgets_json(o);
        if (!r.passed()) {
          auto const& first = r.failures.front();
          if (auto d = decompose_minimal_square(f, first.factor)) {
            report["decomposition"] = to_json(*d);
            report["lineup"]        = to_json(lineup_predicates(*d, f, first.factor));
          }
          out << "fail: " << r.failures.size() << " of " << r.checked_factor_count
              << " factors have a square in their image; shortest factor \""
              << first.factor.str() << "\" (length " << first.factor.size()
              << "), square root \"" << first.occurrence.root.str() << "\"\n";
          status = failed;
        } else {
          out << "pass: square-free on all " << r.checked_factor_count
              << " factors of length <= " << o.k << " (" << tests.describe() << ")\n";
        }
      } else if (crochemore->parsed()) {
        Morphism f = detail::read_morphism_file(o.morphism_file);
        auto     r = crochemore_check(f);
        report["verdict"]   = std::string(to_string(r.verdict));
        report["witnesses"] = to_json(r)["failures"];
        report["counts"]    = {{"checked_words", r.checked_factor_count},
                               {"failures", r.failures.size()}};
        report["morphism"]  = format_morphism(f);
        report["budgets"]   = json::object();
        if (!r.passed()) {
          out << "fail: image of \"" << r.failures.front().factor.str()
              << "\" has a square\n";
          status = failed;
        } else {
          out << "pass: square-free morphism (" << r.checked_factor_count
              << " words checked)\n";
        }
      } else if (scan->parsed()) {
        std::string source;
        Word        w         = detail::subject_word(o, source);
        auto        templates = detail::parse_templates(o.templates);
        auto        found     = scan_xzyzx(w, o.min_z, templates);
        json        witnesses = json::array();
        for (auto const& wit : found) {
          witnesses.push_back(to_json(wit));
        }
        report["verdict"]   = found.empty() ? "pass" : "fail";
        report["witnesses"] = witnesses;
        report["counts"]    = {{"length", w.size()}, {"occurrences", found.size()}};
        report["source"]    = source;
        report["min_z"]     = o.min_z;
        report["templates"] = o.templates;
        report["budgets"]   = detail::budgets_json(o);
        out << found.size() << " occurrence(s) of " << o.templates
            << " with |z| >= " << o.min_z << " in " << source << '\n';
        for (std::size_t t = 0; t < found.size() && t < 10; ++t) {
          out << "  " << to_string(found[t].kind) << " at " << found[t].start
              << ", z = " << found[t].z.str() << '\n';
        }
        status = found.empty() ? ok : failed;
      } else if (census->parsed()) {
        std::string source;
        Word        w = detail::subject_word(o, source);
        auto        c = length3_census(w);
        json present = json::array(), missing = json::array();
        for (auto const& v : c.present) {
          present.push_back(v.str());
        }
        for (auto const& v : c.missing) {
          missing.push_back(v.str());
        }
        report["verdict"]   = "pass";
        report["witnesses"] = json::array();
        report["counts"]    = {{"present", c.present.size()},
                               {"missing", c.missing.size()}};
        report["present"]   = present;
        report["missing"]   = missing;
        report["source"]    = source;
        report["budgets"]   = detail::budgets_json(o);
        out << "missing:";
        for (auto const& v : c.missing) {
          out << ' ' << v.str();
        }
        out << '\n';
      } else if (verify->parsed() || probe7->parsed()) {
        auto          label = parse_avoidance_label(o.avoid);
        SearchOptions options;
        options.threads = o.threads;
        auto outcome    = verify->parsed()
                              ? verify_theorem1(detail::space_of(o), label, o.prefix, options)
                              : probe_constant_7(detail::space_of(o), label, o.prefix, options);
        report["verdict"]   = outcome.disagreements.empty() ? "pass" : "fail";
        report["witnesses"] = to_json(outcome)["disagreements"];
        report["counts"]    = to_json(outcome)["counts"];
        report["outcome"]   = to_json(outcome);
        report["budgets"]   = {{"prefix_length", outcome.prefix_length},
                               {"max_exhaustive", max_exhaustive_space}};
        out << outcome.operation << ": " << outcome.examined << " morphisms ("
            << outcome.space.describe() << "), " << outcome.avoidance
            << " prefix " << outcome.prefix_length << ", "
            << outcome.disagreements.size() << " disagreement(s)";
        if (probe7->parsed()) {
          out << ", " << outcome.candidates.size() << " candidate(s)";
        }
        out << '\n';
        status = outcome.disagreements.empty() ? ok : failed;
      } else if (remark17->parsed()) {
        auto r = remark17_report();
        report["verdict"]   = r.holds() ? "pass" : "fail";
        report["witnesses"] = r.witness ? json::array({to_json(*r.witness)}) : json::array();
        report["counts"]    = {{"length", r.word.size()}};
        report["word"]      = r.word.str();
        report["checks"]    = {{"length_is_17", r.length_is_17},
                               {"square_free", r.square_free},
                               {"no_aba", r.no_aba},
                               {"no_bab", r.no_bab},
                               {"azbza_witness", r.witness.has_value()}};
        report["budgets"]   = json::object();
        out << r.word.str() << ": length " << r.word.size()
            << (r.square_free ? ", square-free" : ", NOT square-free")
            << (r.no_aba ? ", no aba" : ", contains aba")
            << (r.no_bab ? ", no bab" : ", contains bab")
            << (r.witness ? ", azbza with z = " + r.witness->z.str() : ", no azbza witness")
            << '\n';
        status = r.holds() ? ok : failed;
      } else if (probe_s3->parsed()) {
        SearchOptions options;
        options.threads = o.threads;
        auto outcome    = probe_s3_bound(detail::space_of(o), o.prefix, o.k_min, o.k_max, options);
        report["verdict"]   = "pass";
        report["witnesses"] = to_json(outcome)["candidates"];
        report["counts"]    = to_json(outcome)["counts"];
        report["outcome"]   = to_json(outcome);
        report["budgets"]   = {{"prefix_length", outcome.prefix_length},
                               {"max_exhaustive", max_exhaustive_space}};
        out << "probe-s3: " << outcome.examined << " morphisms ("
            << outcome.space.describe() << "), largest separated k = "
            << (outcome.largest_separated_k
                    ? std::to_string(*outcome.largest_separated_k)
                    : std::string("none"))
            << '\n';
      }
    } catch (BudgetExhausted const& e) {
      err << "budget exhausted: " << e.what() << '\n';
      return budget;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }

    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report["timing"] = {{"seconds", elapsed.count()}};
    report["exit_status"] = status;
    if (!o.json_path.empty()) {
      try {
        detail::write_file(o.json_path, report.dump(2) + "\n");
      } catch (Error const& e) {
        err << "error: --json: " << e.what() << '\n';
        return usage;
      }
    }
    return status;
  }

}  // namespace sqfree::cli

#endif  // SQFREE_TOOLS_CLI_HPP_
