#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "burgess/characters.hpp"
#include "burgess/constants.hpp"
#include "burgess/special_sums.hpp"
#include "oracles.hpp"

using namespace burgess;
using namespace burgess::sums;

TEST_CASE("harmonic_upper at x = 1 strictly exceeds H_1 = 1") {
    auto b = harmonic_upper(Real(1));
    // gamma + 1/2 - 1/12 + 1/64 = gamma + 0.432291...
    Real expect = euler_gamma() + Real::parse("0.4322916666666666666666666666");
    CHECK(abs(b.value - expect) < Real::parse("1e-24"));
    CHECK(b.value > Real(1));
}

TEST_CASE("harmonic_upper beats the exact rational harmonic sum") {
    oracles::RationalHarmonic H;
    for (unsigned long n = 1; n <= 3000; ++n) {
        H.step(n);
        auto b = harmonic_upper(Real(static_cast<long>(n)));
        CHECK(H.cmp(b.value) < 0);  // H_n < bound
    }
}

TEST_CASE("harmonic_upper at x = 10 against H_10 = 7381/2520") {
    auto b = harmonic_upper(Real(10));
    Real h10 = div(Real(7381), Real(2520));  // 2.9289682...
    CHECK(b.value > h10);
    CHECK(b.value - h10 < Real::parse("2e-6"));
    CHECK(abs(b.value - Real::parse("2.9289696")) < Real::parse("1e-6"));
}

TEST_CASE("harmonic gap beyond log x + gamma stays inside (0, 1/(2x)+1/(64x^4)]") {
    for (long x : {1L, 2L, 10L, 1000L, 100000L}) {
        auto b = harmonic_upper(Real(x));
        Real base = log(Real(x)) + euler_gamma();
        Real gap = b.value - base;
        CHECK(gap > Real(0));
        Real cap = div(Real(1), Real(2 * x)) + div(Real(1), Real(64) * pow_si(Real(x), 4));
        CHECK(gap <= add(cap, Real::parse("1e-40")));
    }
}

TEST_CASE("log_over_square_lower examples") {
    auto b = log_over_square_lower(Real(1));
    // -zeta'(2) - 1 = -0.0624517...
    CHECK(abs(b.value - Real::parse("-0.06245174568415624")) < Real::parse("1e-15"));
    CHECK(b.value < Real(0));  // exact sum at x=1 is 0

    // exact sum at x = 100, 30+ digit working precision
    Interval sum{Real(0)};
    for (long n = 2; n <= 100; ++n) {
        Interval nn{(Real(n))};
        sum = sum + log(nn) / (nn * nn);
    }
    auto b100 = log_over_square_lower(Real(100));
    CHECK(b100.value < sum.lower());
}

TEST_CASE("log_over_square_lower approaches -zeta'(2) for large x") {
    auto b = log_over_square_lower(Real::parse("1e6"));
    CHECK(abs(b.value - neg(zeta_prime2())) < Real::parse("2e-5"));
}

TEST_CASE("phi sums against the sieve oracle") {
    auto phi = oracles::phi_sieve(10000);
    // phi_over_n at x = 2: exact 1 + 1/2 = 1.5
    auto b2 = phi_over_n_upper(Real(2));
    CHECK(abs(b2.value - Real::parse("2.9090014")) < Real::parse("1e-6"));
    CHECK(b2.value >= Real::parse("1.5"));

    Interval over_n{Real(0)};
    unsigned long long times_n = 0;
    for (long x = 1; x <= 10000; ++x) {
        over_n = over_n + Interval(Real(static_cast<long>(phi[x]))) / Interval(Real(x));
        times_n += 1ull * phi[x] * static_cast<unsigned long long>(x);
        if (x > 1) CHECK(phi_over_n_upper(Real(x)).value >= over_n.upper());
        CHECK(phi_times_n_upper(Real(x)).value >= Real(static_cast<unsigned long>(times_n)));
    }
    // relative slack at x = 1e3 is below 1% of the bound
    Interval over_n3{Real(0)};
    for (long x = 1; x <= 1000; ++x)
        over_n3 = over_n3 + Interval(Real(static_cast<long>(phi[x]))) / Interval(Real(x));
    auto b3 = phi_over_n_upper(Real(1000));
    CHECK(sub(b3.value, over_n3.upper()) < Real(10));  // slack is ~0.8% of x
}

TEST_CASE("phi_times_n_upper at x = 1") {
    auto b = phi_times_n_upper(Real(1));
    CHECK(abs(b.value - Real::parse("1.2026423672846756")) < Real::parse("1e-12"));
    CHECK(b.value >= Real(1));
}

TEST_CASE("log_ratio_upper basics") {
    CHECK(log_ratio_upper(Real(1)).value == Real(0));
    CHECK(log_ratio_upper(Real(2)).value == Real(1));
    // exact sum at 1000
    Interval logsum{Real(0)};
    for (long n = 2; n <= 1000; ++n) logsum = logsum + log(Interval(Real(n)));
    Interval exact = iv(1000) * log(Interval(Real(1000))) - logsum;
    CHECK(log_ratio_upper(Real(1000)).value >= exact.upper());
}

TEST_CASE("domain errors on out-of-range arguments") {
    CHECK_THROWS_AS(harmonic_upper(Real::parse("0.5")), std::domain_error);
    CHECK_THROWS_AS(log_over_square_lower(Real(0)), std::domain_error);
    CHECK_THROWS_AS(phi_over_n_upper(Real(1)), std::domain_error);
    CHECK_THROWS_AS(phi_times_n_upper(Real::parse("0.99")), std::domain_error);
    CHECK_THROWS_AS(log_ratio_upper(Real::parse("0.1")), std::domain_error);
}

TEST_CASE("v2_upper dominates the exact quadruple count") {
    // General: p=101, A=3, N=34 (11*3 = 33 < 34)
    auto exact = chars::v2_exact(101, 3, 34, 0);
    Real bound = v2_upper({101, 34, 3, V2Variant::General});
    CHECK(bound >= Real(static_cast<unsigned long>(exact.count)));

    // Restricted: p=10007, A=5, N=60 (2*5*60 = 600 < 10007)
    auto exact2 = chars::v2_exact(10007, 5, 60, 17);
    Real bound2 = v2_upper({10007, 60, 5, V2Variant::Restricted});
    CHECK(bound2 >= Real(static_cast<unsigned long>(exact2.count)));
}

TEST_CASE("v2_upper precondition reporting") {
    CHECK_THROWS_WITH_AS(v2_upper({101, 33, 3, V2Variant::General}),
                         "v2_upper(General): 11A < N required", std::domain_error);
    CHECK_THROWS_WITH_AS(v2_upper({10007, 60, 2, V2Variant::Restricted}),
                         "v2_upper(Restricted): A > 2 required", std::domain_error);
    CHECK_THROWS_WITH_AS(v2_upper({101, 60, 3, V2Variant::Restricted}),
                         "v2_upper(Restricted): 2AN < p required", std::domain_error);
}

TEST_CASE("per-pair factor tends to (6/pi^2) log A for large A") {
    Real s3 = s3_upper(1000000000ull);
    Real ratio = div(s3, Real::parse("1e9") * log(Real::parse("1e9")));
    Real limit = div(Real(6), pi_const() * pi_const());
    CHECK(abs(ratio - limit) < Real::parse("0.07"));
}

TEST_CASE("s1 exact identity against brute force") {
    // A=2 -> 3/2; A=4 -> 9; A=100 -> 7425
    CHECK(sums::s1_exact_times4(2) == 6);
    CHECK(sums::s1_exact_times4(4) == 36);
    CHECK(sums::s1_exact_times4(100) == 29700);
    for (std::uint64_t A : {2ull, 4ull, 37ull, 100ull}) {
        // brute force in quarters: 4*(a1+a2)/a2 summed exactly via lcm-free loop
        double brute = 0;
        for (std::uint64_t a2 = 2; a2 <= A; ++a2)
            for (std::uint64_t a1 = 1; a1 < a2; ++a1)
                brute += static_cast<double>(a1 + a2) / static_cast<double>(a2);
        CHECK(std::abs(brute * 4 - static_cast<double>(sums::s1_exact_times4(A))) < 1e-6);
    }
}

TEST_CASE("s2/s3 bounds dominate brute force at A = 2 and A = 50") {
    // S2 exact at A=2: (1+2)/gcd(1,2) = 3; S3 exact: 1/2
    CHECK(s2_upper(2) >= Real(3));
    CHECK(s3_upper(2) >= Real::parse("0.5"));
    for (std::uint64_t A : {50ull, 500ull}) {
        unsigned long long s2 = 0;
        double s3 = 0;
        for (std::uint64_t a2 = 2; a2 <= A; ++a2)
            for (std::uint64_t a1 = 1; a1 < a2; ++a1) {
                std::uint64_t g = std::gcd(a1, a2);
                s2 += (a1 + a2) / g;
                s3 += static_cast<double>(g) / static_cast<double>(a2);
            }
        CHECK(s2_upper(A) >= Real(static_cast<unsigned long>(s2)));
        CHECK(s3_upper(A).to_double() >= s3);
    }
}

TEST_CASE("s3 divisor-form identity at A = 2") {
    // sum_{d<=2} sum_{2<=b<=2/d} phi(b)/b = 1/2
    CHECK(s3_upper(2) >= Real::parse("0.5"));
}
