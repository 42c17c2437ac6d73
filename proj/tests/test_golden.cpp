#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "coxfold/golden.hpp"

using namespace coxfold;

namespace {

std::mt19937 rng(20240815);

Golden random_golden() {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    return Golden(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("tau satisfies its defining quadratic") {
    Golden t = Golden::tau();
    CHECK(t * t == t + Golden(1));
    CHECK(t * t * t == Golden(1) + Golden(2) * t);  // tau^3 = 1 + 2 tau
}

TEST_CASE("ring axioms on random triples") {
    for (int i = 0; i < 200; ++i) {
        Golden x = random_golden(), y = random_golden(), z = random_golden();
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + Golden(0) == x);
        CHECK(x * Golden(1) == x);
        CHECK(x - x == Golden(0));
    }
}

TEST_CASE("field inverse") {
    for (int i = 0; i < 100; ++i) {
        Golden x = random_golden();
        if (x.is_zero()) continue;
        CHECK(x * golden_inverse(x) == Golden(1));
        CHECK(x / x == Golden(1));
    }
    CHECK_THROWS_AS((void)golden_inverse(Golden(0)), std::domain_error);
}

TEST_CASE("galois conjugation is an involutive automorphism") {
    CHECK(galois_conjugate(Golden::tau()) == Golden(1) - Golden::tau());
    for (int i = 0; i < 100; ++i) {
        Golden x = random_golden(), y = random_golden();
        CHECK(galois_conjugate(galois_conjugate(x)) == x);
        CHECK(galois_conjugate(x * y) == galois_conjugate(x) * galois_conjugate(y));
        CHECK(galois_conjugate(x + y) == galois_conjugate(x) + galois_conjugate(y));
    }
}

TEST_CASE("field norm is multiplicative and matches x conj(x)") {
    for (int i = 0; i < 100; ++i) {
        Golden x = random_golden(), y = random_golden();
        CHECK(field_norm(x * y) == field_norm(x) * field_norm(y));
        Golden xc = x * galois_conjugate(x);
        CHECK(xc.is_rational());
        CHECK(xc.a == field_norm(x));
    }
}

TEST_CASE("golden_pow") {
    Golden t = Golden::tau();
    CHECK(golden_pow(t, 0) == Golden(1));
    CHECK(golden_pow(t, 1) == t);
    CHECK(golden_pow(t, 2) == t + Golden(1));
    // tau^n = F(n-1) + F(n) tau
    CHECK(golden_pow(t, 10) == Golden(Rational(34), Rational(55)));
}

TEST_CASE("real embedding") {
    CHECK(embed_real(Golden(1)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(embed_real(Golden::tau()) ==
          doctest::Approx(1.6180339887498949).epsilon(1e-14));
    Golden x(make_rational(-3, 2), make_rational(5, 4));
    CHECK(embed_real(x) ==
          doctest::Approx(-1.5 + 1.25 * 1.6180339887498949).epsilon(1e-13));
    // The conjugate embeds with 1 - tau = -1/tau.
    CHECK(embed_real(galois_conjugate(Golden::tau())) ==
          doctest::Approx(1.0 - 1.6180339887498949).epsilon(1e-13));
}

TEST_CASE("string round-trip") {
    CHECK(to_string(golden_from_string("1/2+3/2*t")) ==
          to_string(Golden(make_rational(1, 2), make_rational(3, 2))));
    for (int i = 0; i < 200; ++i) {
        Golden x = random_golden();
        CHECK(golden_from_string(to_string(x)) == x);
    }
    CHECK_THROWS(golden_from_string("garbage"));
    // lenient input forms
    CHECK(golden_from_string("1") == Golden(1));
    CHECK(golden_from_string("-3/2") == Golden(make_rational(-3, 2)));
    CHECK(golden_from_string("1/2*t") ==
          Golden(make_rational(0), make_rational(1, 2)));
    CHECK(golden_from_string("2*t") == Golden(2) * Golden::tau());
}
