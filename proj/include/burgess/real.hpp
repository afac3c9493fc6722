#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace burgess {

// Rounding direction for directed arithmetic. Up/Down are used when a result
// must land on the safe side of an inequality; Near everywhere else.
enum class Round { Down, Near, Up };

inline mpfr_rnd_t to_mpfr(Round r) {
    switch (r) {
        case Round::Down: return MPFR_RNDD;
        case Round::Up: return MPFR_RNDU;
        default: return MPFR_RNDN;
    }
}

// Global working precision in bits. Default corresponds to 50 decimal digits.
mpfr_prec_t working_precision();
void set_working_precision_digits(int digits);
int working_precision_digits();

// Value-semantic arbitrary-precision real backed by mpfr_t.
//
// Operators round to nearest at the working precision; every operation is
// also available with an explicit rounding direction for certified bounds.
class Real {
  public:
    Real() { mpfr_init2(v_, working_precision()); mpfr_set_nan(v_); }
    Real(long n) { mpfr_init2(v_, working_precision()); mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(int n) : Real(static_cast<long>(n)) {}
    Real(unsigned long n) { mpfr_init2(v_, working_precision()); mpfr_set_ui(v_, n, MPFR_RNDN); }
    Real(double d) { mpfr_init2(v_, working_precision()); mpfr_set_d(v_, d, MPFR_RNDN); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    // Parses decimal strings, including exponent forms like "1e3500".
    static Real parse(const std::string& s, Round r = Round::Near) {
        Real x;
        if (mpfr_set_str(x.v_, s.c_str(), 10, to_mpfr(r)) != 0 && mpfr_nan_p(x.v_))
            throw std::invalid_argument("Real::parse: bad numeral '" + s + "'");
        return x;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    std::string str(int digits = 20) const {
        char* s = nullptr;
        if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) return "<err>";
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  private:
    mpfr_t v_;
};

// Directed binary operations. The result carries the working precision.
Real add(const Real& a, const Real& b, Round r = Round::Near);
Real sub(const Real& a, const Real& b, Round r = Round::Near);
Real mul(const Real& a, const Real& b, Round r = Round::Near);
Real div(const Real& a, const Real& b, Round r = Round::Near);
Real neg(const Real& a);
Real abs(const Real& a);

Real log(const Real& a, Round r = Round::Near);
Real exp(const Real& a, Round r = Round::Near);
Real sqrt(const Real& a, Round r = Round::Near);
Real pow(const Real& a, const Real& b, Round r = Round::Near);
Real pow_si(const Real& a, long e, Round r = Round::Near);
Real root_ui(const Real& a, unsigned long k, Round r = Round::Near);

Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

// floor/ceil shifted by 10^digits; ceil_decimals is the table rounding rule.
Real ceil_decimals(const Real& a, int digits);
Real floor_decimals(const Real& a, int digits);

inline Real operator+(const Real& a, const Real& b) { return add(a, b); }
inline Real operator-(const Real& a, const Real& b) { return sub(a, b); }
inline Real operator*(const Real& a, const Real& b) { return mul(a, b); }
inline Real operator/(const Real& a, const Real& b) { return div(a, b); }
inline Real operator-(const Real& a) { return neg(a); }

// Odd double factorial (2m-1)!! with (-1)!! = 1!! = 1.
Real double_factorial_odd(long n);

}  // namespace burgess
