#pragma once

#include "burgess/interval.hpp"
#include "burgess/real.hpp"

namespace burgess {

// Frozen 60-digit values for the handful of classical constants the bound
// formulas need. Each has an independent series recomputation used by the
// self-test (they must agree to at least 50 digits, and to the 12 leading
// digits of the published values hardcoded in the test suite).
namespace frozen {
inline constexpr const char* kEulerGamma =
    "0.577215664901532860606512090082402431042159335939923598805767";
inline constexpr const char* kPi =
    "3.14159265358979323846264338327950288419716939937510582097494";
inline constexpr const char* kZeta2 =
    "1.64493406684822643647241516664602518921894990120679843773556";
inline constexpr const char* kZeta3 =
    "1.20205690315959428539973816151144999076498629234049888179227";
// zeta'(2); the summatory lemma uses -zeta'(2) = 0.9375482543...
inline constexpr const char* kZetaPrime2 =
    "-0.937548254315843753702574094567864977897860288614829925885433";
}  // namespace frozen

Real euler_gamma();
Real pi_const();
Real zeta2();
Real zeta3();
Real zeta_prime2();

Interval euler_gamma_iv();
Interval pi_iv();
Interval zeta2_iv();
Interval zeta3_iv();
Interval zeta_prime2_iv();

// Independent recomputations (self-test oracles):
//  - gamma: Brent-McMillan Bessel-ratio series, error O(e^{-4n})
//  - pi: Machin arctangent series evaluated term by term
//  - zeta(3): the alternating central-binomial series
//  - zeta'(2): Euler-Maclaurin on sum log n / n^2 with explicit derivatives
Real compute_euler_gamma_series(int digits);
Real compute_pi_machin(int digits);
Real compute_zeta3_series(int digits);
Real compute_zeta_prime2_euler_maclaurin(int digits);

}  // namespace burgess
