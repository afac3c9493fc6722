#pragma once

#include <cstdint>

#include "burgess/constants.hpp"
#include "burgess/interval.hpp"
#include "burgess/real.hpp"

namespace burgess::sums {

enum class SumBoundKind {
    HarmonicUpper,
    LogOverSquareLower,
    PhiOverNUpper,
    PhiTimesNUpper,
    LogRatioUpper,
};

struct SumBound {
    SumBoundKind kind;
    Real value;     // directed-rounded on the safe side for its kind
    Real argument;  // the x at which the bound was evaluated
};

// Upper bound for sum_{n<=x} 1/n:
//   log x + gamma + 1/(2x) - 1/(12x^2) + 1/(64x^4), rounded up.  (x >= 1)
SumBound harmonic_upper(const Real& x);

// Lower bound for sum_{n<=x} log n / n^2:
//   -zeta'(2) - log x/x - 1/x - log x/x^2, rounded down.  (x >= 1)
SumBound log_over_square_lower(const Real& x);

// Upper bound for sum_{n<=x} phi(n)/n: (6/pi^2) x + log x + 1.  (x > 1)
SumBound phi_over_n_upper(const Real& x);

// Upper bound for sum_{n<=x} phi(n) n: (2/pi^2) x^3 + x^2 log(x)/2 + x^2.  (x >= 1)
SumBound phi_times_n_upper(const Real& x);

// Upper bound for sum_{n<=x} log(x/n): x - 1.  (x >= 1)
SumBound log_ratio_upper(const Real& x);

enum class V2Variant {
    General,     // requires integer A > 1 with 11A < N
    Restricted,  // requires integer A > 2 with 2AN < p
};

struct V2BoundInput {
    std::uint64_t p;  // prime modulus
    std::uint64_t N;  // window length
    std::uint64_t A;  // averaging range
    V2Variant variant;
};

// Upper bound for the quadruple count V2 (both variants share the bracket
//   (6/pi^2) log(e^{gamma+1/(2A)-1/(12A^2)+1/(64A^4)} A) + 3/2 + (A-1)/(2N) - 1/A,
// the General variant adds 0.83575 AN/p). Rounded up.
Real v2_upper(const V2BoundInput& in);

// S1 = sum_{a1<a2<=A} (a1+a2)/max(a1,a2) = (3/4)A^2 - (3/4)A, exact in integers
// (the value is an integer multiple of 1/4; returned as numerator over 4).
std::int64_t s1_exact_times4(std::uint64_t A);

// Upper bounds for the gcd-weighted pair sums of the V2 proof:
//   S2 <= 3 zeta(3)/pi^2 A^3 + (3 zeta(2)/4) A^2 log A
//         - (3/4) A^2 (-zeta'(2) - log A/A - 1/A - log A/A^2) + (3/2) A^2 zeta(2)
//   S3 <= (6/pi^2) A log(e^{gamma+1/(2A)-1/(12A^2)+1/(64A^4)} A) + A - 1
Real s2_upper(std::uint64_t A);
Real s3_upper(std::uint64_t A);

}  // namespace burgess::sums
