// Decide whether the image of the s1 word under a morphism is square-free by
// checking the morphism on the factors of length <= 7 of the word.

#include <iostream>

#include "sqfree/sqfree.hpp"

int main() {
  using namespace sqfree;

  TestSet tests = saturated_test_set(AvoidanceLabel::s1, 7);
  std::cout << tests.factors.size() << " test factors (" << tests.describe()
            << ")\n";

  Morphism thue = parse_morphism("a=abc\nb=ac\nc=b\n");
  Morphism bad(Alphabet("01"), "01", "0", "1");

  for (auto const& f : {thue, bad}) {
    TestReport r = theorem1_check(f, tests);
    std::cout << compact_string(f) << ": " << to_string(r.verdict);
    if (!r.passed()) {
      auto const& first = r.failures.front();
      std::cout << " (f(" << first.factor << ") contains "
                << first.occurrence.root << first.occurrence.root << ")";
    }
    std::cout << '\n';
  }
  return 0;
}
