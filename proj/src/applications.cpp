#include "burgess/applications.hpp"

#include <cstdio>
#include <stdexcept>

#include "burgess/characters.hpp"
#include "burgess/constants.hpp"
#include "burgess/interval.hpp"

namespace burgess::apps {

namespace {
Real inv_sqrt_e() { return exp(div(Real(-1), Real(2))); }
Real sqrt_e() { return exp(div(Real(1), Real(2))); }
}  // namespace

Real delta_for(const Real& alpha, long r) {
    Real denom = div(Real(1), Real(4)) + div(Real(1), Real(2 * r));
    return div(alpha, denom) - inv_sqrt_e();
}

Real vinogradov_lower(const Real& x, const Real& delta) {
    if (x < Real(286)) throw std::domain_error("vinogradov_lower: x >= 286 required");
    if (!(delta > Real(0))) throw std::domain_error("vinogradov_lower: delta > 0 required");
    Interval X{x}, D{delta};
    Interval logx = log(X);
    Interval expo = Interval(inv_sqrt_e()) + D;
    Interval logy = expo * logx;  // y = x^{1/sqrt e + delta}
    Interval main = iv(2) * log(D * Interval(sqrt_e()) + iv(1));
    Interval b = X * (main - iv(1) / (logx * logx) - iv(1) / (logy * logy) - iv(1) / X);
    return b.lower();
}

namespace {

// sides of the contradiction inequality at p = 10^y
void inequality_sides(const Real& alpha, long r, const Real& C, long y, Real& lhs, Real& rhs) {
    Real log10 = log(Real(10));
    Real logp = Real(y) * log10;
    Real loglogp = log(logp);
    Real expo = div(loglogp, Real(2 * r) * logp) - div(Real(1), Real(4 * r * r));
    lhs = C * exp(expo * logp);
    Real delta = delta_for(alpha, r);
    Real logx = (div(Real(1), Real(4)) + div(Real(1), Real(2 * r))) * logp;
    Real logy = alpha * logp;
    Real x_inv = exp(-logx);
    rhs = Real(2) * log(delta * sqrt_e() + Real(1)) - div(Real(1), logx * logx) -
          div(Real(1), logy * logy) - x_inv;
}

bool holds_at(const Real& alpha, long r, const Real& C, long y) {
    Real lhs, rhs;
    inequality_sides(alpha, r, C, y, lhs, rhs);
    return lhs >= rhs;
}

}  // namespace

ThresholdCertificate nonresidue_threshold(const Real& alpha, long r, const Real& C,
                                          long y_ceiling) {
    Real delta = delta_for(alpha, r);
    if (!(delta > Real(0)))
        throw std::domain_error("nonresidue_threshold: delta <= 0 for this (alpha, r)");
    // exponential bracket then binary search for the first failing decade
    long lo = 2, hi = 4;
    while (holds_at(alpha, r, C, hi)) {
        lo = hi;
        hi *= 2;
        if (hi > y_ceiling)
            throw std::runtime_error("nonresidue_threshold: no failure below the ceiling");
    }
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (holds_at(alpha, r, C, mid)) lo = mid;
        else hi = mid;
    }
    ThresholdCertificate cert;
    cert.Y = hi;
    cert.delta = delta;
    inequality_sides(alpha, r, C, hi - 1, cert.lhs_at_prev, cert.rhs_at_prev);
    inequality_sides(alpha, r, C, hi, cert.lhs_at_y, cert.rhs_at_y);
    // persistence: on [10^Y, 10^{2Y}] the left side keeps shrinking and the
    // right side keeps growing (64 log-spaced sample points)
    cert.monotone_persistent = true;
    Real prev_l = cert.lhs_at_y, prev_r = cert.rhs_at_y;
    for (int i = 1; i <= 64; ++i) {
        // y grows geometrically from Y to 2Y
        double t = static_cast<double>(i) / 64.0;
        long y = static_cast<long>(hi * (1.0 + t));
        Real l, rr;
        inequality_sides(alpha, r, C, y, l, rr);
        if (!(l <= prev_l) || !(rr >= prev_r)) {
            cert.monotone_persistent = false;
            break;
        }
        if (l >= rr) {
            cert.monotone_persistent = false;
            break;
        }
        prev_l = l;
        prev_r = rr;
    }
    return cert;
}

std::pair<long, ThresholdCertificate> best_r_for_alpha(
    const Real& alpha, const std::vector<std::pair<long, Real>>& candidates, long y_ceiling) {
    bool found = false;
    long best_r = 0;
    ThresholdCertificate best;
    for (const auto& [r, C] : candidates) {
        if (!(delta_for(alpha, r) > Real(0))) continue;
        ThresholdCertificate cert = nonresidue_threshold(alpha, r, C, y_ceiling);
        if (!found || cert.Y < best.Y) {
            best = cert;
            best_r = r;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("best_r_for_alpha: no admissible r");
    return {best_r, best};
}

Real d2(long r, const Real& C, std::uint64_t q1, std::uint64_t q2) {
    if (!chars::is_prime(q1) || !chars::is_prime(q2) || !(q1 < q2) || q1 <= 100)
        throw std::invalid_argument("d2: need primes 100 < q1 < q2");
    Interval Q1{Real(static_cast<long>(q1))}, Q2{Real(static_cast<long>(q2))};
    Interval e = iv(1) / iv(r) - iv(1);  // exponent 1/r - 1
    Interval K1 = (iv(1) + pow(Q1, e)) * (iv(1) + pow(Q2, e));
    Interval K2 = (iv(1) - iv(1) / Q1) * (iv(1) - iv(1) / Q2);
    Interval Ci{C};
    Interval out = K1 * (iv(1) + iv(1) / Ci) * Ci / K2;
    return out.upper();
}

long conductor_r_for_degree(std::uint64_t l) { return (l == 3 || l == 5 || l == 7) ? 4 : 3; }

namespace {
// h(logf) = ((r-1)/(4r)) log f - log coef - (5/2) log log f; root is the bound
Real conductor_gap(const Real& logf, const Real& log_coef, long r) {
    return div(Real(r - 1), Real(4 * r)) * logf - log_coef -
           div(Real(5), Real(2)) * log(logf);
}
}  // namespace

ConductorBound conductor_bound(std::uint64_t l, const Real& d2_value, long r) {
    if (l < 3 || l >= 100 || !chars::is_prime(l))
        throw std::invalid_argument("conductor_bound: l must be an odd prime below 100");
    Real coef = (l == 3) ? Real(8) * pow_si(d2_value, r) * pow_si(Real(2), r)
                         : Real::parse("2.7") * pow_si(d2_value, r) *
                               pow_si(Real(static_cast<long>(l - 1)), r);
    Real log_coef = log(coef);
    Real lo = log(Real::parse("1e10"));
    Real hi = log(Real::parse("1e200"));
    if (!(conductor_gap(lo, log_coef, r) < Real(0)) || !(conductor_gap(hi, log_coef, r) > Real(0)))
        throw std::runtime_error("conductor_bound: bisection bracket failure");
    for (int i = 0; i < 300; ++i) {
        Real mid = div(lo + hi, Real(2));
        if (conductor_gap(mid, log_coef, r) < Real(0)) lo = mid;
        else hi = mid;
    }
    Real logf = hi;
    ConductorBound out;
    out.l = l;
    out.r = r;
    out.d2_value = d2_value;
    out.f_bound = exp(logf);

    // two significant digits, rounded up, as m.d * 10^e
    Real log10f = div(logf, log(Real(10)));
    long e10 = log10f.to_long();
    if (Real(e10) > log10f) --e10;
    Real mant = exp((log10f - Real(e10)) * log(Real(10)));  // in [1,10)
    Real mant_up = ceil_decimals(mant, 1);
    if (mant_up >= Real(10)) {
        mant_up = Real(1);
        ++e10;
    }
    char buf[64];
    snprintf(buf, sizeof buf, "%.1fe%ld", mant_up.to_double(), e10);
    out.scientific = buf;

    // crossing certificate: the reported bound clears the right side with
    // room, and 1% below the crossing the inequality still fails
    auto rhs_at = [&](const Real& f) {
        Real lf = log(f);
        return coef * exp(div(Real(3 * r + 1), Real(4 * r)) * lf) *
               pow(lf, div(Real(5), Real(2)));
    };
    out.rhs_at_bound = rhs_at(Real::parse(out.scientific));
    out.rhs_below = rhs_at(Real::parse("0.99") * out.f_bound);
    return out;
}

}  // namespace burgess::apps
