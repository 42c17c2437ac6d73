#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxfold/linalg.hpp"

using namespace coxfold;

namespace {

std::mt19937 rng(977);

GMat random_matrix(std::size_t n) {
    std::uniform_int_distribution<long> coef(-4, 4);
    GMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Golden(Rational(coef(rng)), Rational(coef(rng)));
    return m;
}

}  // namespace

TEST_CASE("matrix product and identity") {
    GMat id = GMat::identity(3);
    GMat m = random_matrix(3);
    CHECK(m * id == m);
    CHECK(id * m == m);
    CHECK(transpose(transpose(m)) == m);
}

TEST_CASE("determinant basics") {
    CHECK(determinant(GMat::identity(4)) == Golden(1));
    GMat m(2, 2);
    m(0, 0) = Golden(2);
    m(0, 1) = Golden(-1);
    m(1, 0) = Golden(-1);
    m(1, 1) = Golden(2);
    CHECK(determinant(m) == Golden(3));
    // det is multiplicative
    for (int i = 0; i < 20; ++i) {
        GMat a = random_matrix(3), b = random_matrix(3);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("inverse and solve") {
    for (int i = 0; i < 20; ++i) {
        GMat m = random_matrix(4);
        if (determinant(m).is_zero()) continue;
        CHECK(m * inverse(m) == GMat::identity(4));
        GVec rhs = {Golden(1), Golden::tau(), Golden(-2), Golden(0)};
        GVec x = solve(m, rhs);
        CHECK(m * x == rhs);
    }
    GMat sing(2, 2);
    sing(0, 0) = Golden(1);
    sing(0, 1) = Golden(2);
    sing(1, 0) = Golden(2);
    sing(1, 1) = Golden(4);
    CHECK(determinant(sing) == Golden(0));
    CHECK_THROWS(inverse(sing));
}

TEST_CASE("vector operations") {
    GVec x = {Golden(1), Golden(2)}, y = {Golden::tau(), Golden(-1)};
    CHECK(dot(x, y) == Golden::tau() - Golden(2));
    CHECK(dot(x, y) == dot(y, x));
    CHECK(is_zero(x - x));
    CHECK(negate(negate(x)) == x);
}

TEST_CASE("canonical keys distinguish values") {
    GVec x = {Golden(1), Golden(0)};
    GVec y = {Golden(1), Golden(Rational(0), Rational(1))};
    CHECK(key_of(x) != key_of(y));
    CHECK(key_of(x) == key_of(GVec{Golden(1), Golden(0)}));
}
