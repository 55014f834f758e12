#include "oracles.hpp"

#include "basel/errors.hpp"
#include "basel/rational.hpp"
#include "basel/sequences.hpp"

#include <doctest.h>

#include <thread>

using namespace basel;

namespace {

Rational from(const mpq_class& q) { return Rational(q.get_num(), q.get_den()); }

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -3).to_string() == "-1/3");
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational(0, -5).to_string() == "0");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(binomial(10, 3) == 120);
}

TEST_CASE("bernoulli small values") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(3) == Rational(0));
}

TEST_CASE("genocchi small values") {
    CHECK(genocchi(0) == Rational(0));
    CHECK(genocchi(1) == Rational(1, 2));
    CHECK(genocchi(2) == Rational(-1, 2));
    CHECK(genocchi(4) == Rational(1, 2));
    CHECK(genocchi(6) == Rational(-3, 2));
    CHECK(genocchi(8) == Rational(17, 2));
}

TEST_CASE("sequences match generating-function oracle") {
    const auto b = oracle::bernoulli(120);
    const auto g = oracle::genocchi(120);
    for (unsigned long n = 0; n <= 120; ++n) {
        CAPTURE(n);
        CHECK(bernoulli(n) == from(b[n]));
        CHECK(genocchi(n) == from(g[n]));
    }
}

TEST_CASE("genocchi/bernoulli relation holds for every n up to 200") {
    for (unsigned long n = 0; n <= 200; ++n) {
        CAPTURE(n);
        CHECK(genocchi(n) == genocchi_from_bernoulli(n));
        CHECK(genocchi(n) == -(pow2(static_cast<long>(n)) - Rational(1)) * bernoulli(n));
        if (n >= 1) {
            CHECK(bernoulli_from_genocchi(n) == bernoulli(n));
        }
    }
    CHECK_THROWS_AS(bernoulli_from_genocchi(0), DomainError);
}

TEST_CASE("odd terms vanish") {
    for (unsigned long n = 1; n <= 100; ++n) {
        CHECK(bernoulli(2 * n + 1).is_zero());
        CHECK(genocchi(2 * n + 1).is_zero());
    }
}

TEST_CASE("script_b is positive") {
    for (unsigned long n = 1; n <= 60; ++n) {
        CHECK(script_b(n).sign() > 0);
    }
    CHECK(script_b(1) == Rational(1, 6));
    CHECK(script_b(2) == Rational(1, 30));
    CHECK(script_g(1) == Rational(-1, 2));
    CHECK_THROWS_AS(script_b(0), DomainError);
}

TEST_CASE("zeta at even integers") {
    CHECK(zeta_even_exact(1).to_string() == "1/6·π²");
    CHECK(zeta_even_exact(2).coefficient() == Rational(1, 90));
    CHECK(zeta_even_exact(2).exponent() == 4);
    CHECK(zeta_even_exact(3).coefficient() == Rational(1, 945));
    CHECK(zeta_even_exact(4).coefficient() == Rational(1, 9450));
    CHECK(zeta_even_exact(5).coefficient() == Rational(1, 93555));
    const auto b = oracle::bernoulli(60);
    for (unsigned long n = 1; n <= 30; ++n) {
        CAPTURE(n);
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), 2 * n);
        mpq_class expected = abs(b[2 * n]) * (mpz_class(1) << (2 * n - 1)) / mpq_class(f);
        expected.canonicalize();
        CHECK(zeta_even_exact(n).coefficient() == from(expected));
    }
    CHECK(zeta_even_exact(1).to_double() == doctest::Approx(1.6449340668482264).epsilon(1e-15));
    CHECK_THROWS_AS(zeta_even_exact(0), DomainError);
}

TEST_CASE("integral side facts") {
    CHECK(term_log_integral(0) == Rational(-1));
    CHECK(term_log_integral(1) == Rational(-1, 4));
    CHECK(term_log_integral(9) == Rational(-1, 100));
    CHECK(signed_factorial_integral(0) == Rational(1));
    CHECK(signed_factorial_integral(1) == Rational(-1));
    CHECK(signed_factorial_integral(4) == Rational(24));
}

TEST_CASE("cache capacity") {
    SequenceCache small(10);
    CHECK(small.bernoulli(10) == Rational(5, 66));
    CHECK_THROWS_AS(small.bernoulli(11), CapacityError);
    CHECK_THROWS_AS(small.genocchi(11), CapacityError);
    CHECK_THROWS_AS(bernoulli(kDefaultSequenceCap + 1), CapacityError);
}

TEST_CASE("cache is consistent under concurrent readers") {
    SequenceCache cache;
    const auto b = oracle::bernoulli(150);
    std::vector<std::jthread> workers;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            for (unsigned long i = 0; i <= 150; ++i) {
                const unsigned long n = (i * 7 + static_cast<unsigned long>(t) * 13) % 151;
                if (!(cache.bernoulli(n) == from(b[n]))) {
                    ++mismatches;
                }
            }
        });
    }
    workers.clear();
    CHECK(mismatches.load() == 0);
}
