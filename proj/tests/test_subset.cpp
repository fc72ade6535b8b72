#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nesto/subset.hpp"

using namespace nesto;

TEST_CASE("construction and element access") {
    Subset s = Subset::of({4, 1, 2});
    CHECK(s.size() == 3);
    CHECK(s.contains(1));
    CHECK(s.contains(2));
    CHECK(!s.contains(3));
    CHECK(s.contains(4));
    CHECK(s.elements() == std::vector<int>{1, 2, 4});
    CHECK(s.str() == "{1,2,4}");

    CHECK(Subset().empty());
    CHECK(Subset().str() == "{}");
    CHECK(Subset::singleton(7).elements() == std::vector<int>{7});
    CHECK(Subset::ground(3).elements() == std::vector<int>{1, 2, 3});
    CHECK(Subset::ground(64).size() == 64);
}

TEST_CASE("construction rejects bad indices") {
    CHECK_THROWS_AS(Subset::of({0}), input_error);
    CHECK_THROWS_AS(Subset::of({65}), input_error);
    CHECK_THROWS_AS(Subset::of({2, 2}), input_error);
    CHECK_THROWS_AS(Subset::ground(0), input_error);
    CHECK_THROWS_AS(Subset::ground(65), input_error);
}

TEST_CASE("parse round-trips str") {
    for (const char* text : {"{1,2,4}", "{3}", "{}", "{1,2,3,4,5,6,7}"}) {
        Subset s = Subset::parse(text);
        CHECK(s.str() == text);
    }
    CHECK(Subset::parse(" { 2 , 1 } ") == Subset::of({1, 2}));
    CHECK_THROWS_AS(Subset::parse("1,2"), input_error);
    CHECK_THROWS_AS(Subset::parse("{1,2"), input_error);
    CHECK_THROWS_AS(Subset::parse("{1,,2}"), input_error);
    CHECK_THROWS_AS(Subset::parse("{1} x"), input_error);
    CHECK_THROWS_AS(Subset::parse("{0}"), input_error);
}

TEST_CASE("set algebra") {
    Subset a = Subset::of({1, 2, 3});
    Subset b = Subset::of({3, 4});
    CHECK(a.unite(b) == Subset::of({1, 2, 3, 4}));
    CHECK(a.intersect(b) == Subset::of({3}));
    CHECK(a.minus(b) == Subset::of({1, 2}));
    CHECK(a.intersects(b));
    CHECK(!a.disjoint(b));
    CHECK(Subset::of({1, 2}).disjoint(Subset::of({3, 4})));
    CHECK(Subset::of({1, 2}).subset_of(a));
    CHECK(!a.subset_of(b));
    CHECK(a.min_element() == 1);
    CHECK(a.max_element() == 3);
    CHECK(Subset().min_element() == 0);
    CHECK(Subset().max_element() == 0);
}

TEST_CASE("lexicographic order on ascending sequences") {
    auto lex = [](const char* x, const char* y) {
        return Subset::parse(x).lex_less(Subset::parse(y));
    };
    CHECK(lex("{1,4}", "{2,3}"));
    CHECK(!lex("{2,3}", "{1,4}"));
    CHECK(lex("{1}", "{1,2}"));  // strict prefix first
    CHECK(!lex("{1,2}", "{1}"));
    CHECK(lex("{1,2}", "{1,3}"));
    CHECK(lex("{2}", "{3}"));
    CHECK(!lex("{2}", "{2}"));
    CHECK(lex("{}", "{1}"));
}

TEST_CASE("canonical order sorts by cardinality first") {
    CHECK(canonical_less(Subset::parse("{4}"), Subset::parse("{1,2}")));
    CHECK(!canonical_less(Subset::parse("{1,2}"), Subset::parse("{4}")));
    CHECK(canonical_less(Subset::parse("{1,4}"), Subset::parse("{2,3}")));
    CHECK(!canonical_less(Subset::parse("{1,2}"), Subset::parse("{1,2}")));
}

TEST_CASE("order is total and consistent on all subsets of a small ground") {
    std::vector<Subset> all;
    for (std::uint64_t m = 0; m < 32; ++m) all.push_back(Subset(m));
    for (const Subset& a : all)
        for (const Subset& b : all) {
            // antisymmetry and totality
            if (a == b) {
                CHECK(!a.lex_less(b));
            } else {
                CHECK(a.lex_less(b) != b.lex_less(a));
                CHECK(canonical_less(a, b) != canonical_less(b, a));
            }
            // lex order agrees with comparing element sequences directly
            CHECK(a.lex_less(b) == (a.elements() < b.elements()));
        }
}
