#include <doctest.h>

#include <random>
#include <stdexcept>

#include "relfact/poly.hpp"

using namespace relfact;

namespace {

constexpr double kTol = 1e-12;

Polynomial P(std::vector<double> c) { return Polynomial(std::move(c)); }

Polynomial random_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> len(0, 7);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<double> c(len(rng));
    for (double& x : c) x = coef(rng);
    return P(c);
}

} // namespace

TEST_CASE("canonical form trims trailing zeros")
{
    CHECK(P({0.5, 0.0, 0.0}).coeffs().size() == 1);
    CHECK(P({0.0, 0.0}).is_zero());
    CHECK_FALSE(P({}).degree().has_value());
    CHECK(P({0.0, 0.5, 0.25}).degree() == 2);
    CHECK(P({0.0, 0.5, 0.25}).min_degree() == 1);
}

TEST_CASE("add and scale")
{
    CHECK(P({0, 0.5}) + P({0, 0, 0.25}) == P({0, 0.5, 0.25}));
    CHECK(P({0.3, 0.2}) + Polynomial() == P({0.3, 0.2}));
    CHECK(P({0, 1}) - P({0, 1}) == Polynomial());
    CHECK(scale(0.5, P({0, 1, 1})) == P({0, 0.5, 0.5}));
    CHECK(scale(0.0, P({0, 1, 1})).is_zero());
    CHECK(scale(-1.0, P({0, 1})) == P({0, -1}));

    const TruncatedPoly x(2, P({0, 1}));
    CHECK((x + x).representative() == P({0, 2}));
    CHECK_THROWS_AS(x + TruncatedPoly(3, P({0, 1})), std::invalid_argument);
}

TEST_CASE("multiplication by x")
{
    CHECK(mul_x(P({0.5, 0.5})) == P({0, 0.5, 0.5}));
    CHECK(mul_x(Polynomial()).is_zero());
    CHECK(mul_x(TruncatedPoly(1, P({0.5, 0.5}))).representative() == P({0, 0.5}));
}

TEST_CASE("multiplication")
{
    CHECK(max_abs_diff(P({0, 0.9}) * P({0, 0.9}), P({0, 0, 0.81})) <= kTol);
    CHECK((TruncatedPoly(1, P({0, 0.9})) * TruncatedPoly(1, P({0, 0.9}))).is_zero());
    // (0.5x)(0.5 + 0.5x) = 0.25x + 0.25x^2 by hand.
    CHECK(max_abs_diff(P({0, 0.5}) * P({0.5, 0.5}), P({0, 0.25, 0.25})) <= kTol);
    CHECK_THROWS_AS(TruncatedPoly(1) * TruncatedPoly(2), std::invalid_argument);
    CHECK(mul_up_to(P({1, 1}), P({1, 1}), 1) == P({1, 2}));
}

TEST_CASE("truncate and evaluation")
{
    const auto pair = P({0, 0.5, 0.25});
    CHECK(truncate(pair, 1).representative() == P({0, 0.5}));
    CHECK(truncate(pair, 2).representative() == pair);
    CHECK(truncate(Polynomial(), 4).is_zero());
    CHECK(eval_one(pair) == doctest::Approx(0.75).epsilon(kTol));
    CHECK(constrained_prob(truncate(pair, 1)) == doctest::Approx(0.5).epsilon(kTol));
    CHECK(eval_one(Polynomial()) == 0.0);
    CHECK_THROWS_AS(truncate(pair, -1), std::invalid_argument);
}

TEST_CASE("text rendering")
{
    CHECK(to_string(P({0, 0.5, 0.25})) == "0.5*x^1 + 0.25*x^2");
    CHECK(to_string(Polynomial()) == "0");
    CHECK(to_string(P({0, 1})) == "1*x^1");
    CHECK(to_string(P({0, -0.25, 0, 0.5})) == "-0.25*x^1 + 0.5*x^3");
    CHECK(to_string(P({1, -0.5})) == "1*x^0 - 0.5*x^1");
    CHECK(to_string(P({0.1234567890123456})) == "0.123456789012*x^0");
}

TEST_CASE("ring axioms and the truncation morphism on random polynomials")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        const auto c = random_poly(rng);
        REQUIRE(max_abs_diff((a * b) * c, a * (b * c)) <= kTol);
        REQUIRE(max_abs_diff(a * b, b * a) <= kTol);
        REQUIRE(max_abs_diff(a * (b + c), a * b + a * c) <= kTol);
        REQUIRE(max_abs_diff(a + b, b + a) <= kTol);

        for (int l = 0; l <= 8; ++l) {
            const auto lhs = truncate(a * b, l);
            const auto rhs = truncate(a, l) * truncate(b, l);
            REQUIRE(max_abs_diff(lhs.representative(), rhs.representative()) <= kTol);
            REQUIRE(mul_x(truncate(a, l)) == truncate(mul_x(a), l));
            double head = 0.0;
            for (int i = 0; i <= l; ++i) head += a.coeff(static_cast<std::size_t>(i));
            REQUIRE(constrained_prob(truncate(a, l)) == doctest::Approx(head).epsilon(kTol));
        }
    }
}
