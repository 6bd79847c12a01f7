#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootloci/matrix.hpp"
#include "rootloci/rational.hpp"

using namespace rootloci;

TEST_CASE("rationals canonicalize") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-3, -6) == rational(1, 2));
    CHECK(rational(3, -6) == rational(-1, 2));
    CHECK(to_string(rational(2, 3)) == "2/3");
    CHECK(to_string(rational(-7)) == "-7");
    CHECK(to_string(rational(6, 3)) == "2");
    CHECK(is_integer(rational(6, 3)));
    CHECK(!is_integer(rational(1, 3)));
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(pow_int(-2, 5) == -32);
    CHECK(pow_int(3, 0) == 1);
    CHECK(pow_int(0, 0) == 1);
    CHECK(pow_int(10, 9) == 1000000000);
}

TEST_CASE("bit_size grows with operand size") {
    CHECK(bit_size(rational(1)) < bit_size(rational(1000003, 7)));
}

namespace {

RatMatrix make(size_t rows, size_t cols, std::vector<long> vals) {
    RatMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rational(vals[i * cols + j]);
    return m;
}

RatMatrix transpose(const RatMatrix& m) {
    RatMatrix t(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

RatMatrix random_matrix(std::mt19937& rng, size_t rows, size_t cols) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    RatMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rref on known matrices") {
    auto [r1, k1] = rref(make(2, 2, {1, 2, 2, 4}));
    CHECK(k1 == 1);
    CHECK(r1.at(0, 0) == 1);
    CHECK(r1.at(0, 1) == 2);
    CHECK(r1.at(1, 0) == 0);
    CHECK(r1.at(1, 1) == 0);

    auto [r2, k2] = rref(make(2, 2, {2, 4, 1, 3}));
    CHECK(k2 == 2);
    CHECK(r2 == make(2, 2, {1, 0, 0, 1}));

    auto [r3, k3] = rref(make(2, 3, {0, 0, 0, 0, 0, 0}));
    CHECK(k3 == 0);
    CHECK(r3 == make(2, 3, {0, 0, 0, 0, 0, 0}));
}

TEST_CASE("rref is idempotent and rank is transpose-invariant") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        RatMatrix m = random_matrix(rng, rows, cols);
        auto [r, k] = rref(m);
        auto [rr, kk] = rref(r);
        CHECK(r == rr);
        CHECK(k == kk);
        CHECK(rank(m) == rank(transpose(m)));
        CHECK(rank(m) <= std::min(rows, cols));
    }
}

TEST_CASE("solve_in_span reproduces targets inside the span") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<long> num(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        size_t nvec = 1 + rng() % 4, len = 1 + rng() % 5;
        std::vector<std::vector<Rational>> span(nvec, std::vector<Rational>(len));
        for (auto& v : span)
            for (auto& x : v) x = rational(num(rng));
        std::vector<Rational> target(len, rational(0));
        std::vector<Rational> mix(nvec);
        for (size_t i = 0; i < nvec; ++i) {
            mix[i] = rational(num(rng), 1 + static_cast<long>(rng() % 3));
            for (size_t j = 0; j < len; ++j) target[j] += mix[i] * span[i][j];
        }
        auto sol = solve_in_span(target, span);
        REQUIRE(sol.has_value());
        std::vector<Rational> rebuilt(len, rational(0));
        for (size_t i = 0; i < nvec; ++i)
            for (size_t j = 0; j < len; ++j) rebuilt[j] += (*sol)[i] * span[i][j];
        CHECK(rebuilt == target);
    }
}

TEST_CASE("solve_in_span rejects targets outside the span") {
    std::vector<std::vector<Rational>> span = {{rational(1), rational(0)},
                                               {rational(2), rational(0)}};
    CHECK(!solve_in_span({rational(0), rational(1)}, span).has_value());
    CHECK(solve_in_span({rational(5), rational(0)}, span).has_value());
    // Zero target is always representable.
    CHECK(solve_in_span({rational(0), rational(0)}, span).has_value());
}
