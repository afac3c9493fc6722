#include "burgess/constants.hpp"

#include <cmath>

namespace burgess {

Real euler_gamma() { return Real::parse(frozen::kEulerGamma); }
Real pi_const() { return Real::parse(frozen::kPi); }
Real zeta2() { return Real::parse(frozen::kZeta2); }
Real zeta3() { return Real::parse(frozen::kZeta3); }
Real zeta_prime2() { return Real::parse(frozen::kZetaPrime2); }

Interval euler_gamma_iv() { return Interval::parse(frozen::kEulerGamma); }
Interval pi_iv() { return Interval::parse(frozen::kPi); }
Interval zeta2_iv() { return Interval::parse(frozen::kZeta2); }
Interval zeta3_iv() { return Interval::parse(frozen::kZeta3); }
Interval zeta_prime2_iv() { return Interval::parse(frozen::kZetaPrime2); }

namespace {

struct PrecGuard {
    int saved;
    explicit PrecGuard(int digits) : saved(working_precision_digits()) {
        set_working_precision_digits(digits);
    }
    ~PrecGuard() { set_working_precision_digits(saved); }
};

}  // namespace

Real compute_euler_gamma_series(int digits) {
    // Brent-McMillan: with A_k = (n^k/k!)^2, H_k the harmonic numbers,
    // gamma = (sum A_k H_k)/(sum A_k) - log n + O(e^{-4n}).
    PrecGuard guard(digits + 15);
    long n = static_cast<long>(std::ceil((digits + 15) * 2.302585 / 4.0)) + 2;
    Real n2 = mul(Real(n), Real(n));
    Real term(1);      // A_0
    Real U(0), V(1), H(0);
    long kmax = 8 * n;  // series tail negligible well before this
    for (long k = 1; k <= kmax; ++k) {
        term = div(mul(term, n2), mul(Real(k), Real(k)));  // A_k
        H = add(H, div(Real(1), Real(k)));
        U = add(U, mul(term, H));
        V = add(V, term);
    }
    Real g = sub(div(U, V), log(Real(n)));
    set_working_precision_digits(guard.saved);
    Real out = add(g, Real(0));  // re-round at restored precision
    return out;
}

namespace {
// arctan(1/x) for integer x by its alternating power series
Real atan_inv(long x, long terms) {
    Real inv = div(Real(1), Real(x));
    Real inv2 = mul(inv, inv);
    Real power = inv;
    Real acc(0);
    for (long k = 0; k < terms; ++k) {
        Real t = div(power, Real(2 * k + 1));
        acc = (k % 2 == 0) ? add(acc, t) : sub(acc, t);
        power = mul(power, inv2);
    }
    return acc;
}
}  // namespace

Real compute_pi_machin(int digits) {
    PrecGuard guard(digits + 15);
    long t5 = static_cast<long>((digits + 17) / (2 * std::log10(5.0))) + 4;
    long t239 = static_cast<long>((digits + 17) / (2 * std::log10(239.0))) + 4;
    Real quarter = sub(mul(Real(4), atan_inv(5, t5)), atan_inv(239, t239));
    Real p = mul(Real(4), quarter);
    set_working_precision_digits(guard.saved);
    return add(p, Real(0));
}

Real compute_zeta3_series(int digits) {
    // zeta(3) = (5/2) sum_{k>=1} (-1)^{k-1} (k!)^2 / (k^3 (2k)!)
    PrecGuard guard(digits + 15);
    Real acc(0);
    Real ratio(1);  // (k!)^2/(2k)! accumulated incrementally
    long kmax = static_cast<long>((digits + 17) / std::log10(4.0)) + 8;
    for (long k = 1; k <= kmax; ++k) {
        // (k!)^2/(2k)! = prev * k / (2(2k-1))
        ratio = div(mul(ratio, Real(k)), Real(2 * (2 * k - 1)));
        Real t = div(ratio, Real(k * k * k));
        acc = (k % 2 == 1) ? add(acc, t) : sub(acc, t);
    }
    Real z = div(mul(Real(5), acc), Real(2));
    set_working_precision_digits(guard.saved);
    return add(z, Real(0));
}

Real compute_zeta_prime2_euler_maclaurin(int digits) {
    // zeta'(2) = -sum log n / n^2. With f(t) = log t / t^2:
    //   sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - sum_j B_{2j}/(2j)! f^{(2j-1)}(N) + R
    // and f^{(m)}(t) = (a_m + b_m log t)/t^{m+2},
    //   a_{m+1} = b_m - (m+2) a_m,  b_{m+1} = -(m+2) b_m.
    PrecGuard guard(digits + 15);
    long N = 1;
    while (true) {
        // tail error ~ log N / N^{13} with six correction terms
        double err = (std::log(static_cast<double>(N)) + 1) / std::pow(static_cast<double>(N), 13);
        if (err < std::pow(10.0, -(digits + 12))) break;
        N *= 2;
    }
    Real sum(0);
    for (long n = 2; n < N; ++n) sum = add(sum, div(log(Real(n)), Real(n * n)));
    Real logN = log(Real(N));
    Real N2 = mul(Real(N), Real(N));
    sum = add(sum, div(add(logN, Real(1)), Real(N)));       // integral
    sum = add(sum, div(logN, mul(Real(2), N2)));            // f(N)/2
    // correction terms: -B_{2j}/(2j)! * f^(2j-1)(N), j = 1..6
    static const long bnum[6] = {1, -1, 1, -1, 5, -691};
    static const long bden[6] = {6, 30, 42, 30, 66, 2730};
    Real a(0), b(1);
    Real fact(1);
    long m = 0;
    Real Npow = N2;  // N^{m+2}
    for (int j = 1; j <= 6; ++j) {
        while (m < 2 * j - 1) {
            Real a_next = sub(b, mul(Real(m + 2), a));
            b = neg(mul(Real(m + 2), b));
            a = a_next;
            ++m;
            Npow = mul(Npow, Real(N));
        }
        for (long q = 2 * (j - 1) + 1; q <= 2 * j; ++q) fact = mul(fact, Real(q));
        Real deriv = div(add(a, mul(b, logN)), Npow);
        Real coef = div(Real(bnum[j - 1]), mul(Real(bden[j - 1]), fact));
        sum = sub(sum, mul(coef, deriv));
    }
    Real z = neg(sum);
    set_working_precision_digits(guard.saved);
    return add(z, Real(0));
}

}  // namespace burgess
