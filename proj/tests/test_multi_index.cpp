#include <algorithm>

#include "doctest.h"
#include "hz/multi_index.hpp"

using namespace hz;

TEST_CASE("grade sums components") {
  CHECK(grade({}) == 0);
  CHECK(grade({0, 0}) == 0);
  CHECK(grade({2, 1}) == 3);
  CHECK(grade({0, 0, 5}) == 5);
}

TEST_CASE("componentwise partial order") {
  CHECK(leq_componentwise({0, 0}, {0, 0}));
  CHECK(leq_componentwise({0, 1}, {1, 1}));
  CHECK(!leq_componentwise({2, 0}, {1, 1}));
  // (2,0) and (0,1) are incomparable.
  CHECK(!leq_componentwise({2, 0}, {0, 1}));
  CHECK(!leq_componentwise({0, 1}, {2, 0}));
}

TEST_CASE("reverse lex: grade first, then larger component at the highest differing axis") {
  CHECK(reverse_lex_less({0, 0}, {0, 1}));
  CHECK(reverse_lex_less({0, 1}, {1, 0}));   // same grade, axis 1 differs, 1 > 0
  CHECK(reverse_lex_less({1, 0}, {0, 2}));   // grade 1 before grade 2
  CHECK(reverse_lex_less({1, 1}, {2, 0}));
  CHECK(!reverse_lex_less({2, 0}, {1, 1}));
  CHECK(!reverse_lex_less({1, 1}, {1, 1}));  // irreflexive
}

TEST_CASE("enumeration order for nu = (3,3)") {
  const std::vector<MultiIndex> want = {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1},
                                        {2, 0}, {1, 2}, {2, 1}, {2, 2}};
  CHECK(reverse_lex_enumerate({3, 3}) == want);
}

TEST_CASE("enumeration order for nu = (2,2)") {
  const std::vector<MultiIndex> want = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(reverse_lex_enumerate({2, 2}) == want);
}

TEST_CASE("enumeration is sorted, unique, complete, zero-led") {
  for (const std::vector<int>& nu : {std::vector<int>{4}, {2, 3}, {2, 2, 2}}) {
    const auto ks = reverse_lex_enumerate(nu);
    long card = 1;
    for (int v : nu) card *= v;
    REQUIRE(static_cast<long>(ks.size()) == card);
    CHECK(grade(ks[0]) == 0);
    CHECK(std::is_sorted(ks.begin(), ks.end(), reverse_lex_less));
    for (size_t i = 1; i < ks.size(); ++i) CHECK(ks[i - 1] != ks[i]);
    for (const MultiIndex& k : ks)
      for (size_t ax = 0; ax < nu.size(); ++ax) {
        CHECK(k[ax] >= 0);
        CHECK(k[ax] < nu[ax]);
      }
  }
}

TEST_CASE("multiplicity vector modes") {
  auto c = MultiplicityVector::constant({3, 2});
  CHECK(c.constant_mode());
  CHECK(c.dim() == 2);
  CHECK(c.at(0, 7) == 3);  // node index irrelevant in constant mode
  CHECK(c.at(1, 0) == 2);
  CHECK(c.cardinality() == 6);

  auto p = MultiplicityVector::per_node_mode({{1, 2, 3}, {2, 2}});
  CHECK(!p.constant_mode());
  CHECK(p.dim() == 2);
  CHECK(p.at(0, 2) == 3);
  CHECK(p.at(1, 1) == 2);
}

TEST_CASE("multiplicity validation rejects non-positive entries") {
  CHECK_THROWS(MultiplicityVector::constant({2, 0}).validate());
  CHECK_THROWS(MultiplicityVector::per_node_mode({{1, -1}}).validate());
  CHECK_NOTHROW(MultiplicityVector::constant({1, 1}).validate());
}
