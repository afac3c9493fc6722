#include "burgess/special_sums.hpp"

#include <stdexcept>

namespace burgess::sums {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

// e^{gamma + 1/(2A) - 1/(12A^2) + 1/(64A^4)} as an interval
Interval euler_corr_exp(const Interval& A) {
    Interval A2 = A * A;
    Interval expo = euler_gamma_iv() + iv(1) / (iv(2) * A) - iv(1) / (iv(12) * A2) +
                    iv(1) / (iv(64) * A2 * A2);
    return exp(expo);
}

}  // namespace

SumBound harmonic_upper(const Real& x) {
    require(x >= Real(1), "harmonic_upper: x >= 1 required");
    Interval X{Real(x)};
    Interval X2 = X * X;
    Interval b = log(X) + euler_gamma_iv() + iv(1) / (iv(2) * X) - iv(1) / (iv(12) * X2) +
                 iv(1) / (iv(64) * X2 * X2);
    return {SumBoundKind::HarmonicUpper, b.upper(), x};
}

SumBound log_over_square_lower(const Real& x) {
    require(x >= Real(1), "log_over_square_lower: x >= 1 required");
    Interval X{Real(x)};
    Interval L = log(X);
    Interval b = iv(0) - zeta_prime2_iv() - L / X - iv(1) / X - L / (X * X);
    return {SumBoundKind::LogOverSquareLower, b.lower(), x};
}

SumBound phi_over_n_upper(const Real& x) {
    require(x > Real(1), "phi_over_n_upper: x > 1 required");
    Interval X{Real(x)};
    Interval b = iv(6) / (pi_iv() * pi_iv()) * X + log(X) + iv(1);
    return {SumBoundKind::PhiOverNUpper, b.upper(), x};
}

SumBound phi_times_n_upper(const Real& x) {
    require(x >= Real(1), "phi_times_n_upper: x >= 1 required");
    Interval X{Real(x)};
    Interval X2 = X * X;
    Interval b = iv(2) / (pi_iv() * pi_iv()) * X2 * X + X2 * log(X) / iv(2) + X2;
    return {SumBoundKind::PhiTimesNUpper, b.upper(), x};
}

SumBound log_ratio_upper(const Real& x) {
    require(x >= Real(1), "log_ratio_upper: x >= 1 required");
    return {SumBoundKind::LogRatioUpper, sub(x, Real(1), Round::Up), x};
}

Real v2_upper(const V2BoundInput& in) {
    require(in.A > 1, "v2_upper: A > 1 required");
    if (in.variant == V2Variant::General) {
        require(11 * in.A < in.N, "v2_upper(General): 11A < N required");
    } else {
        require(in.A > 2, "v2_upper(Restricted): A > 2 required");
        require(2 * static_cast<unsigned __int128>(in.A) * in.N < in.p,
                "v2_upper(Restricted): 2AN < p required");
    }
    Interval A{Real(static_cast<long>(in.A))};
    Interval N{Real(static_cast<long>(in.N))};
    Interval P{Real(static_cast<long>(in.p))};
    Interval bracket = iv(6) / (pi_iv() * pi_iv()) * log(euler_corr_exp(A) * A) +
                       iv(3) / iv(2) + (A - iv(1)) / (iv(2) * N) - iv(1) / A;
    if (in.variant == V2Variant::General)
        bracket = bracket + Interval::parse("0.83575") * A * N / P;
    Interval out = iv(2) * A * N * bracket;
    return out.upper();
}

std::int64_t s1_exact_times4(std::uint64_t A) {
    require(A >= 2, "s1_exact: A >= 2 required");
    // exact: 4 * S1 = 3A^2 - 3A
    return static_cast<std::int64_t>(3 * A * A - 3 * A);
}

Real s2_upper(std::uint64_t A_) {
    require(A_ >= 2, "s2_upper: A >= 2 required");
    Interval A{Real(static_cast<long>(A_))};
    Interval A2 = A * A;
    Interval L = log(A);
    Interval lower_lemma = iv(0) - zeta_prime2_iv() - L / A - iv(1) / A - L / A2;
    Interval b = iv(3) * zeta3_iv() / (pi_iv() * pi_iv()) * A2 * A +
                 iv(3) * zeta2_iv() / iv(4) * A2 * L - iv(3) / iv(4) * A2 * lower_lemma +
                 iv(3) / iv(2) * A2 * zeta2_iv();
    return b.upper();
}

Real s3_upper(std::uint64_t A_) {
    require(A_ >= 2, "s3_upper: A >= 2 required");
    Interval A{Real(static_cast<long>(A_))};
    Interval b = iv(6) / (pi_iv() * pi_iv()) * A * log(euler_corr_exp(A) * A) + A - iv(1);
    return b.upper();
}

}  // namespace burgess::sums
