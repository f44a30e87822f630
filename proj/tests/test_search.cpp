#include <catch_amalgamated.hpp>

#include "sqfree/report_json.hpp"
#include "sqfree/search.hpp"

using namespace sqfree;

TEST_CASE("space sizes", "[search]") {
  SearchSpace two{2, 2};
  CHECK(space_size(two) == 216);
  SearchSpace three{2, 3};
  CHECK(space_size(three) == 2744);
  CHECK(images_per_letter(three) == 14);
  SearchSpace huge{4, 12};
  CHECK_THROWS_AS(validate(huge), InvalidArgument);
  CHECK_THROWS_AS(validate(SearchSpace{5, 2}), InvalidArgument);
}

TEST_CASE("exhaustive enumeration is complete and ordered", "[search]") {
  SearchSpace space{2, 2};
  std::set<std::string> seen;
  std::string           previous;
  std::uint64_t         count = 0;
  for (auto const& f : enumerate_morphisms(space)) {
    seen.insert(compact_string(f));
    ++count;
  }
  CHECK(count == 216);
  CHECK(seen.size() == 216);
  auto e = enumerate_morphisms(space);
  CHECK(compact_string(e.at(0)) == "a=0,b=0,c=0");
  CHECK(compact_string(e.at(1)) == "a=0,b=0,c=1");
  CHECK(compact_string(e.at(215)) == "a=11,b=11,c=11");
}

TEST_CASE("random enumeration is reproducible", "[search]") {
  SearchSpace space{3, 6, SearchMode::random, 100, 7};
  std::vector<std::string> first, second;
  for (auto const& f : enumerate_morphisms(space)) {
    first.push_back(format_morphism(f));
  }
  for (auto const& f : enumerate_morphisms(space)) {
    second.push_back(format_morphism(f));
  }
  CHECK(first.size() == 100);
  CHECK(first == second);
  space.seed = 8;
  std::vector<std::string> other;
  for (auto const& f : enumerate_morphisms(space)) {
    other.push_back(format_morphism(f));
  }
  CHECK(other != first);
  for (auto const& s : first) {
    auto f = parse_morphism(s);
    CHECK(f.max_image_length() <= 6);
  }
}

TEST_CASE("verify_theorem1 on the small binary space", "[search]") {
  auto out = verify_theorem1(SearchSpace{2, 2}, AvoidanceLabel::s1, 0);
  CHECK(out.examined == 216);
  CHECK(out.disagreements.empty());
  CHECK(out.agreements == 216);
  CHECK(out.prefix_length == 20'000);
  // the constant morphism a=0,b=0,c=0 fails at length 2
  CHECK(out.histogram.at(1) + out.histogram.at(2) == out.failing);

  std::optional<TestReport> constant;
  verify_theorem1(SearchSpace{2, 1}, AvoidanceLabel::s2, 0,
                  SearchOptions{1, 100, [&](std::uint64_t index, Morphism const&,
                                             TestReport const& r, std::optional<bool> sf) {
                    if (index == 0) {
                      constant = r;
                      CHECK(sf == false);
                    }
                  }});
  REQUIRE(constant);
  CHECK(constant->minimal_failing_length() == 2);
}

TEST_CASE("identity is a pass-and-square-free agreement", "[search]") {
  // ternary, length 1: index of a=0,b=1,c=2 is 0*9 + 1*3 + 2
  SearchSpace space{3, 1};
  bool seen = false;
  SearchOptions options;
  options.observer = [&](std::uint64_t index, Morphism const& f, TestReport const& r,
                         std::optional<bool> sf) {
    if (index == 5) {
      CHECK(compact_string(f) == "a=0,b=1,c=2");
      CHECK(r.passed());
      CHECK(sf == true);
      seen = true;
    }
  };
  auto out = verify_theorem1(space, AvoidanceLabel::s1, 0, options);
  CHECK(seen);
  CHECK(out.passing == 6);  // the six letter permutations
  CHECK(out.disagreements.empty());
}

TEST_CASE("s3 is refused where the criterion does not apply", "[search]") {
  CHECK_THROWS_AS(verify_theorem1(SearchSpace{2, 1}, AvoidanceLabel::s3, 0), InvalidArgument);
  CHECK_THROWS_AS(probe_constant_7(SearchSpace{2, 1}, AvoidanceLabel::s3, 0), InvalidArgument);
  CHECK_THROWS_AS(verify_theorem1(SearchSpace{2, 1}, AvoidanceLabel::s1, 100), InvalidArgument);
}

TEST_CASE("threads do not change outcomes", "[search]") {
  SearchSpace space{3, 4, SearchMode::random, 300, 11};
  SearchOptions one, many;
  many.threads = 4;
  auto a = to_json(probe_constant_7(space, AvoidanceLabel::s2, 0, one)).dump();
  auto b = to_json(probe_constant_7(space, AvoidanceLabel::s2, 0, many)).dump();
  CHECK(a == b);
}

TEST_CASE("probe_constant_7 excludes short failures and square-free morphisms", "[search]") {
  auto out = probe_constant_7(SearchSpace{2, 2}, AvoidanceLabel::s1, 0);
  CHECK(out.examined == 216);
  for (auto const& c : out.candidates) {
    CHECK(c.reverified);
    CHECK(c.passes_up_to == 6);
  }
  CHECK(out.disagreements.empty());
}

TEST_CASE("probe_s3_bound", "[search]") {
  auto out = probe_s3_bound(SearchSpace{2, 2}, 0, 2, 8);
  CHECK(out.examined == 216);
  CHECK(out.separations.size() == 7);
  for (auto const& c : out.candidates) {
    CHECK(c.reverified);
    REQUIRE(out.largest_separated_k);
    CHECK(c.passes_up_to == *out.largest_separated_k);
  }
  auto json_a = to_json(out).dump();
  auto json_b = to_json(probe_s3_bound(SearchSpace{2, 2}, 0, 2, 8)).dump();
  CHECK(json_a == json_b);
  CHECK_THROWS_AS(probe_s3_bound(SearchSpace{2, 2}, 0, 5, 4), InvalidArgument);
}

TEST_CASE("remark word", "[search]") {
  auto r = remark17_report();
  CHECK(r.word.str() == "acabcbacbcabcbaca");
  CHECK(r.length_is_17);
  CHECK(r.square_free);
  CHECK(r.no_aba);
  CHECK(r.no_bab);
  REQUIRE(r.witness);
  CHECK(r.witness->z.str() == "cabcbac");
  CHECK(verify_remark_17());
}
