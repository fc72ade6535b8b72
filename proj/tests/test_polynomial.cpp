#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nesto/errors.hpp"
#include "nesto/polynomial.hpp"

using namespace nesto;

TEST_CASE("polynomial arithmetic") {
    CHECK(poly_add({1, 2}, {3}) == IntVec{4, 2});
    CHECK(poly_add({}, {1}) == IntVec{1});
    CHECK(poly_mul({1, 1}, {1, 1}) == IntVec{1, 2, 1});
    CHECK(poly_mul({2}, {0, 3}) == IntVec{0, 6});
    CHECK(poly_mul({}, {1, 2, 3}) == IntVec{});
    CHECK(poly_shift({1, 2}, 2) == IntVec{0, 0, 1, 2});
    CHECK(poly_shift({1}, 0) == IntVec{1});
    CHECK(binomial_power(3) == IntVec{1, 3, 3, 1});
    CHECK(binomial_power(0) == IntVec{1});
}

TEST_CASE("f to h substitutes t-1") {
    CHECK(f_to_h({6, 6, 1}) == IntVec{1, 4, 1});
    CHECK(f_to_h({14, 21, 9, 1}) == IntVec{1, 6, 6, 1});
    CHECK(f_to_h({24, 36, 14, 1}) == IntVec{1, 11, 11, 1});
    CHECK(f_to_h({3, 3, 1}) == IntVec{1, 1, 1});
    CHECK(f_to_h({1}) == IntVec{1});
    CHECK(f_to_h({8, 12, 6, 1}) == IntVec{1, 3, 3, 1});
}

TEST_CASE("palindromic") {
    CHECK(palindromic({1, 4, 1}));
    CHECK(palindromic({1}));
    CHECK(palindromic({}));
    CHECK(!palindromic({1, 2, 3}));
}

TEST_CASE("h to gamma strips binomial powers") {
    CHECK(h_to_gamma({1, 4, 1}) == IntVec{1, 2});
    CHECK(h_to_gamma({1, 1, 1}) == IntVec{1, -1});
    CHECK(h_to_gamma({1, 6, 6, 1}) == IntVec{1, 3});
    CHECK(h_to_gamma({1, 11, 11, 1}) == IntVec{1, 8});
    CHECK(h_to_gamma({1, 3, 3, 1}) == IntVec{1, 0});
    CHECK(h_to_gamma({1}) == IntVec{1});
    CHECK(h_to_gamma({1, 1}) == IntVec{1});
    CHECK_THROWS_AS(h_to_gamma({1, 2, 3}), not_simple_error);
}

TEST_CASE("gamma of simplices") {
    CHECK(gamma_simplex(-1) == IntVec{1});
    CHECK(gamma_simplex(0) == IntVec{1});
    CHECK(gamma_simplex(1) == IntVec{1});
    CHECK(gamma_simplex(2) == IntVec{1, -1});
    CHECK(gamma_simplex(3) == IntVec{1, -2});
    for (int m = 1; m <= 6; ++m) CHECK(gamma_simplex(m) == h_to_gamma(f_to_h(f_simplex(m))));
}

TEST_CASE("f of simplices") {
    CHECK(f_simplex(0) == IntVec{1});
    CHECK(f_simplex(1) == IntVec{2, 1});
    CHECK(f_simplex(3) == IntVec{4, 6, 4, 1});
}

TEST_CASE("bundle ties the pieces together") {
    PolynomialBundle b = polynomial_bundle({6, 6, 1});
    CHECK(b.f == IntVec{6, 6, 1});
    CHECK(b.h == IntVec{1, 4, 1});
    CHECK(b.gamma == IntVec{1, 2});
    // bigraded table rows: H2[n-i][i] = h_i, everything else zero
    REQUIRE(b.H2.size() == 3);
    REQUIRE(b.H2[0].size() == 3);
    CHECK(b.H2[0][2] == 1);
    CHECK(b.H2[1][1] == 4);
    CHECK(b.H2[2][0] == 1);
    CHECK(b.H2[0][0] == 0);
    CHECK(b.H2[2][2] == 0);

    long long total = 0;
    for (const auto& row : b.H2)
        for (long long v : row) total += v;
    long long hsum = 0;
    for (long long v : b.h) hsum += v;
    CHECK(total == hsum);
}

TEST_CASE("bundle rejects malformed input") {
    CHECK_THROWS_AS(polynomial_bundle({}), input_error);
    CHECK_THROWS_AS(polynomial_bundle({6, 6, 2}), input_error);
    CHECK_THROWS_AS(polynomial_bundle({5, 6, 1}), not_simple_error);  // h not palindromic
}

TEST_CASE("vector formatting") {
    CHECK(vector_str(IntVec{1, 3}) == "(1, 3)");
    CHECK(vector_str(IntVec{1}) == "(1)");
    CHECK(vector_str(IntVec{1, -2, 0}) == "(1, -2, 0)");
}
