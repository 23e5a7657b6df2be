#include "sgx/simplex.hpp"

#include <doctest.h>

using namespace sgx;

namespace {

bool satisfies(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
               const std::vector<Rational>& x) {
    for (std::size_t i = 0; i < A.size(); ++i) {
        Rational lhs(0);
        for (std::size_t j = 0; j < A[i].size(); ++j) lhs += A[i][j] * x[j];
        if (lhs != b[i]) return false;
    }
    for (const auto& v : x)
        if (v < 0) return false;
    return true;
}

}  // namespace

TEST_CASE("feasible equality system") {
    std::vector<std::vector<Rational>> A{{Rational(1), Rational(1)}};
    std::vector<Rational> b{Rational(1)};
    auto x = simplex_feasible(A, b);
    REQUIRE(x.has_value());
    CHECK(satisfies(A, b, *x));
}

TEST_CASE("negative right-hand side is handled by row flipping") {
    std::vector<std::vector<Rational>> A{{Rational(-1), Rational(0)}, {Rational(0), Rational(1)}};
    std::vector<Rational> b{Rational(-2), Rational(3)};
    auto x = simplex_feasible(A, b);
    REQUIRE(x.has_value());
    CHECK(satisfies(A, b, *x));
    CHECK((*x)[0] == Rational(2));
}

TEST_CASE("infeasible systems return nothing") {
    // x1 = -1 with x1 >= 0.
    CHECK_FALSE(simplex_feasible({{Rational(1)}}, {Rational(-1)}).has_value());
    // x1 + x2 = -3 with x >= 0.
    CHECK_FALSE(
        simplex_feasible({{Rational(1), Rational(1)}}, {Rational(-3)}).has_value());
    // Contradictory pair.
    CHECK_FALSE(simplex_feasible({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}},
                                 {Rational(1), Rational(2)})
                    .has_value());
}

TEST_CASE("redundant rows stay feasible") {
    std::vector<std::vector<Rational>> A{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    std::vector<Rational> b{Rational(3), Rational(6)};
    auto x = simplex_feasible(A, b);
    REQUIRE(x.has_value());
    CHECK(satisfies(A, b, *x));
}

TEST_CASE("exact fractions survive pivoting") {
    std::vector<std::vector<Rational>> A{
        {rational_from_string("1/3"), rational_from_string("1/7")}};
    std::vector<Rational> b{rational_from_string("2/21")};
    auto x = simplex_feasible(A, b);
    REQUIRE(x.has_value());
    CHECK(satisfies(A, b, *x));
}
