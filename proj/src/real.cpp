#include "burgess/real.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace burgess {

namespace {
std::atomic<int> g_digits{50};
}

mpfr_prec_t working_precision() {
    // bits for d decimal digits, with slack for intermediate cancellation
    int d = g_digits.load(std::memory_order_relaxed);
    return static_cast<mpfr_prec_t>(std::ceil(d * 3.3219280948873626) + 24);
}

void set_working_precision_digits(int digits) {
    if (digits < 30) throw std::invalid_argument("working precision must be >= 30 digits");
    g_digits.store(digits, std::memory_order_relaxed);
}

int working_precision_digits() { return g_digits.load(std::memory_order_relaxed); }

namespace {
template <typename F>
Real binop(const Real& a, const Real& b, Round r, F f) {
    Real out;
    f(out.raw(), a.raw(), b.raw(), to_mpfr(r));
    return out;
}
template <typename F>
Real unop(const Real& a, Round r, F f) {
    Real out;
    f(out.raw(), a.raw(), to_mpfr(r));
    return out;
}
}  // namespace

Real add(const Real& a, const Real& b, Round r) { return binop(a, b, r, mpfr_add); }
Real sub(const Real& a, const Real& b, Round r) { return binop(a, b, r, mpfr_sub); }
Real mul(const Real& a, const Real& b, Round r) { return binop(a, b, r, mpfr_mul); }
Real div(const Real& a, const Real& b, Round r) { return binop(a, b, r, mpfr_div); }

Real neg(const Real& a) {
    Real out;
    mpfr_neg(out.raw(), a.raw(), MPFR_RNDN);
    return out;
}

Real abs(const Real& a) {
    Real out;
    mpfr_abs(out.raw(), a.raw(), MPFR_RNDN);
    return out;
}

Real log(const Real& a, Round r) { return unop(a, r, mpfr_log); }
Real exp(const Real& a, Round r) { return unop(a, r, mpfr_exp); }
Real sqrt(const Real& a, Round r) { return unop(a, r, mpfr_sqrt); }

Real pow(const Real& a, const Real& b, Round r) { return binop(a, b, r, mpfr_pow); }

Real pow_si(const Real& a, long e, Round r) {
    Real out;
    mpfr_pow_si(out.raw(), a.raw(), e, to_mpfr(r));
    return out;
}

Real root_ui(const Real& a, unsigned long k, Round r) {
    Real out;
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(out.raw(), a.raw(), k, to_mpfr(r));
#else
    mpfr_root(out.raw(), a.raw(), k, to_mpfr(r));
#endif
    return out;
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

Real ceil_decimals(const Real& a, int digits) {
    Real scale;
    mpfr_ui_pow_ui(scale.raw(), 10, static_cast<unsigned long>(digits), MPFR_RNDN);
    Real t = mul(a, scale, Round::Up);
    mpfr_ceil(t.raw(), t.raw());
    return div(t, scale, Round::Near);
}

Real floor_decimals(const Real& a, int digits) {
    Real scale;
    mpfr_ui_pow_ui(scale.raw(), 10, static_cast<unsigned long>(digits), MPFR_RNDN);
    Real t = mul(a, scale, Round::Down);
    mpfr_floor(t.raw(), t.raw());
    return div(t, scale, Round::Near);
}

Real double_factorial_odd(long n) {
    Real out;
    mpfr_set_ui(out.raw(), 1, MPFR_RNDN);
    for (long m = n; m >= 2; m -= 2) mpfr_mul_si(out.raw(), out.raw(), m, MPFR_RNDN);
    return out;
}

}  // namespace burgess
