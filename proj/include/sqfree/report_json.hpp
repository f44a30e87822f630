#ifndef SQFREE_REPORT_JSON_HPP_
#define SQFREE_REPORT_JSON_HPP_

// JSON encodings of the library's report types (nlohmann/json). Keys are
// emitted in sorted order, so equal values serialize to identical bytes.

#include <string>  // for string

#include "json.hpp"

#include "analysis.hpp"
#include "morphism.hpp"
#include "search.hpp"
#include "squares.hpp"

namespace sqfree {

  using json = nlohmann::json;

  inline json to_json(SquareOccurrence const& occ) {
    return json{{"start", occ.start},
                {"root_length", occ.root_length},
                {"root", occ.root.str()}};
  }

  inline json to_json(TestReport const& r) {
    json failures = json::array();
    for (auto const& f : r.failures) {
      failures.push_back(
          json{{"factor", f.factor.str()}, {"square", to_json(f.occurrence)}});
    }
    return json{{"verdict", std::string(to_string(r.verdict))},
                {"checked_factor_count", r.checked_factor_count},
                {"minimal_failing_length", r.minimal_failing_length()},
                {"failures", failures},
                {"test_set_source", r.test_set_source}};
  }

  inline json to_json(PatternWitness const& w) {
    Alphabet const& a = sigma();
    return json{{"kind", std::string(to_string(w.kind))},
                {"start", w.start},
                {"z_positions", json::array({w.z_first, w.z_second})},
                {"alpha", std::string(1, a.name(w.alpha))},
                {"beta", std::string(1, a.name(w.beta))},
                {"gamma", std::string(1, a.name(w.gamma))},
                {"z", w.z.str()}};
  }

  inline json to_json(SquareDecomposition const& d) {
    return json{{"square", to_json(d.occurrence)},
                {"i", d.i},
                {"j", d.j},
                {"k", d.k},
                {"A_i_suffix", d.ai_suffix.str()},
                {"A_j_prefix", d.aj_prefix.str()},
                {"A_j_suffix", d.aj_suffix.str()},
                {"A_k_prefix", d.ak_prefix.str()},
                {"degenerate", d.degenerate}};
  }

  inline json to_json(LineupPredicates const& lp) {
    auto opt = [](std::optional<bool> b) -> json {
      return b ? json(*b) : json("not-applicable");
    };
    return json{{"span_ge_7", lp.span_ge_7},
                {"strict_order", lp.strict_order},
                {"aj_eq_ak", opt(lp.aj_eq_ak)},
                {"suffixes_equal", opt(lp.suffixes_equal)},
                {"arithmetic", opt(lp.arithmetic)},
                {"blocks_aligned", opt(lp.blocks_aligned)}};
  }

  inline json to_json(SearchSpace const& s) {
    json j{{"target_size", s.target_size},
           {"max_length", s.max_length},
           {"mode", s.mode == SearchMode::exhaustive ? "exhaustive" : "random"}};
    if (s.mode == SearchMode::random) {
      j["samples"] = s.samples;
      j["seed"]    = s.seed;
    }
    return j;
  }

  inline json to_json(SearchOutcome const& o) {
    json histogram = json::object();
    for (auto [k, count] : o.histogram) {
      histogram[std::to_string(k)] = count;
    }
    json disagreements = json::array();
    for (auto const& d : o.disagreements) {
      disagreements.push_back(json{{"index", d.index},
                                   {"morphism", format_morphism(d.morphism)},
                                   {"verdict", std::string(to_string(d.verdict))},
                                   {"image_square_free", d.image_square_free},
                                   {"detail", d.detail}});
    }
    json candidates = json::array();
    for (auto const& c : o.candidates) {
      candidates.push_back(json{{"index", c.index},
                                {"morphism", format_morphism(c.morphism)},
                                {"passes_up_to", c.passes_up_to},
                                {"square_start", c.square_start},
                                {"square_root_length", c.square_root_length},
                                {"reverified", c.reverified}});
    }
    json j{{"operation", o.operation},
           {"space", to_json(o.space)},
           {"avoidance", o.avoidance},
           {"prefix_length", o.prefix_length},
           {"k", o.k},
           {"saturation_length", o.saturation_length},
           {"test_set_size", o.test_set_size},
           {"counts",
            json{{"examined", o.examined},
                 {"agreements", o.agreements},
                 {"disagreements", o.disagreements.size()},
                 {"passing", o.passing},
                 {"failing", o.failing}}},
           {"histogram", histogram},
           {"disagreements", disagreements},
           {"candidates", candidates},
           {"halted", o.halted}};
    if (o.operation == "probe-s3") {
      json sep = json::object();
      for (auto [k, count] : o.separations) {
        sep[std::to_string(k)] = count;
      }
      j["k_min"]               = o.k_min;
      j["separations"]         = sep;
      j["largest_separated_k"] = o.largest_separated_k
                                     ? json(*o.largest_separated_k)
                                     : json(nullptr);
    }
    return j;
  }

}  // namespace sqfree

#endif  // SQFREE_REPORT_JSON_HPP_
