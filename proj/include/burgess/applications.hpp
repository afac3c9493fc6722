#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "burgess/real.hpp"

namespace burgess::apps {

// delta = alpha/(1/4 + 1/(2r)) - e^{-1/2}; positive delta makes the
// non-residue contradiction possible
Real delta_for(const Real& alpha, long r);

// lower bound x (2 log(delta sqrt e + 1) - 1/log^2 x - 1/log^2 y - 1/x) with
// y = x^{1/sqrt e + delta}; rounded down. Requires x >= 286, delta > 0.
Real vinogradov_lower(const Real& x, const Real& delta);

struct ThresholdCertificate {
    long Y = 0;
    Real delta;
    Real lhs_at_prev, rhs_at_prev;  // inequality holds at 10^{Y-1}
    Real lhs_at_y, rhs_at_y;        // inequality fails at 10^Y
    bool monotone_persistent = false;
};

// least Y such that C p^{loglog p/(2r log p) - 1/(4r^2)} >= 2log(delta sqrt e+1)
// - 1/log^2 x - 1/log^2 y - 1/x fails for p = 10^Y (and stays failed beyond,
// verified on log-spaced samples). x = p^{1/4+1/(2r)}, y = p^alpha.
ThresholdCertificate nonresidue_threshold(const Real& alpha, long r, const Real& C,
                                          long y_ceiling = 100000);

// over a table of (r, C) candidates, the r minimizing Y
std::pair<long, ThresholdCertificate> best_r_for_alpha(
    const Real& alpha, const std::vector<std::pair<long, Real>>& candidates,
    long y_ceiling = 100000);

// D2(r) = K1 (1 + C^{-1}) C / K2 with
//   K1 = (1 + q1^{1/r-1})(1 + q2^{1/r-1}),  K2 = (1 - 1/q1)(1 - 1/q2)
// q1, q2 default to the two smallest primes above 100.
Real d2(long r, const Real& C, std::uint64_t q1 = 101, std::uint64_t q2 = 103);

struct ConductorBound {
    std::uint64_t l = 0;
    long r = 0;
    Real d2_value;
    Real f_bound;          // smallest f with f >= RHS(f)
    std::string scientific;  // two significant digits, rounded up
    Real rhs_at_bound;     // crossing certificate: f_bound >= rhs_at_bound
    Real rhs_below;        // and 0.99 f_bound < RHS(0.99 f_bound)
};

// smallest f with f >= 2.7 D2^r (l-1)^r f^{(3r+1)/(4r)} (log f)^{5/2}
// (coefficient 8 and (l-1) = 2 for l = 3); bisection on log f
ConductorBound conductor_bound(std::uint64_t l, const Real& d2_value, long r);

// degree -> Burgess order per the source convention: r = 4 for l in {3,5,7},
// r = 3 otherwise
long conductor_r_for_degree(std::uint64_t l);

}  // namespace burgess::apps
