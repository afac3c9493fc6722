#include "burgess/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace burgess::chars {

namespace {
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
}  // namespace

u64 pow_mod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin base set for 64-bit
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 inv_mod(u64 a, u64 m) { return pow_mod(a % m, m - 2, m); }

namespace {
std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}
}  // namespace

u64 primitive_root(u64 p) {
    if (p == 2) return 1;
    auto qs = prime_factors(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : qs) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found (p not prime?)");
}

DirichletCharacter::DirichletCharacter(u64 p, u64 order, u64 index)
    : p_(p), k_(order), index_(order ? index % order : 0) {
    if (!is_prime(p)) throw std::invalid_argument("DirichletCharacter: modulus must be prime");
    if (order == 0 || (p - 1) % order != 0)
        throw std::invalid_argument("DirichletCharacter: order must divide p-1");
    if (order > 1 && std::gcd(index_, k_) != 1)
        throw std::invalid_argument(
            "DirichletCharacter: index shares a factor with the order; exact order unattainable");
    g_ = primitive_root(p);
    expo_.assign(p_, -1);
    u64 n = 1;
    for (u64 t = 0; t + 1 < p; ++t) {
        expo_[n] = static_cast<i64>((t % k_) * index_ % k_);
        n = mul_mod(n, g_, p_);
    }
    roots_.resize(k_);
    const long double tau = 6.283185307179586476925286766559005768L;
    for (u64 j = 0; j < k_; ++j) {
        long double a = tau * static_cast<long double>(j) / static_cast<long double>(k_);
        roots_[j] =
            std::complex<double>(static_cast<double>(cosl(a)), static_cast<double>(sinl(a)));
    }
    if (k_ > 1 && expo_[g_ % p_] == 0)
        throw std::logic_error("DirichletCharacter: order invariant failed at the generator");
}

bool DirichletCharacter::even() const {
    if (p_ == 2) return true;
    return expo_[p_ - 1] == 0;  // chi(-1)
}

WindowSum window_sum(const DirichletCharacter& chi, u64 M, u64 N) {
    u64 p = chi.modulus();
    std::vector<u64> counts(chi.order(), 0);
    u64 full = N / p, rem = N % p;
    u64 n = (M + 1) % p;
    if (full > 0 && chi.principal()) counts[0] += full * (p - 1);
    for (u64 i = 0; i < rem; ++i) {
        i64 e = chi.exponent(n);
        if (e >= 0) counts[static_cast<size_t>(e)]++;
        n = (n + 1 == p) ? 0 : n + 1;
    }
    std::complex<double> s{0.0, 0.0};
    for (u64 j = 0; j < chi.order(); ++j)
        if (counts[j]) s += static_cast<double>(counts[j]) * chi.roots()[j];
    return {M, N, s, std::abs(s)};
}

V2Exact v2_exact(u64 p, u64 A, u64 N, u64 M) {
    if (!is_prime(p)) throw std::invalid_argument("v2_exact: p must be prime");
    if (N >= p) throw std::invalid_argument("v2_exact: N < p required");
    if (A < 1 || N < 1) throw std::invalid_argument("v2_exact: A, N >= 1 required");
    std::vector<u64> hist(p, 0);
    for (u64 a = 1; a <= A; ++a) {
        u64 inva = inv_mod(a % p, p);
        u64 x = mul_mod((M + 1) % p, inva, p);
        for (u64 i = 0; i < N; ++i) {
            hist[x]++;
            x += inva;
            if (x >= p) x -= p;
        }
    }
    u64 v2 = 0;
    for (u64 x = 0; x < p; ++x) v2 += hist[x] * hist[x];
    return {p, A, N, M, v2};
}

u64 v2_exact_quadruple_scan(u64 p, u64 A, u64 N, u64 M) {
    // count quadruples (a1,n1,a2,n2) with a1*n2 = a2*n1 (mod p)
    u64 count = 0;
    for (u64 a1 = 1; a1 <= A; ++a1)
        for (u64 a2 = 1; a2 <= A; ++a2)
            for (u64 n1 = M + 1; n1 <= M + N; ++n1)
                for (u64 n2 = M + 1; n2 <= M + N; ++n2)
                    if (mul_mod(a1 % p, n2 % p, p) == mul_mod(a2 % p, n1 % p, p)) ++count;
    return count;
}

namespace {

// |s|^2 as an exact integer for characters whose values lie in Z, Z[i], or
// Z[omega]; coords are the coefficients of s in the fixed integer basis.
struct ExactBasis {
    u64 order;
    // contribution of exponent e to the two coordinates
    void add(i64 e, i64& u, i64& v, int sign) const {
        switch (order) {
            case 1: u += sign; break;
            case 2: u += (e == 0) ? sign : -sign; break;
            case 3:  // basis (1, w), w^2 = -1 - w
                if (e == 0) u += sign;
                else if (e == 1) v += sign;
                else { u -= sign; v -= sign; }
                break;
            case 4:  // basis (1, i)
                if (e == 0) u += sign;
                else if (e == 1) v += sign;
                else if (e == 2) u -= sign;
                else v -= sign;
                break;
            case 6:  // basis (1, z), z = e^{i pi/3}, z^2 = z - 1
                switch (e) {
                    case 0: u += sign; break;
                    case 1: v += sign; break;
                    case 2: u -= sign; v += sign; break;
                    case 3: u -= sign; break;
                    case 4: v -= sign; break;
                    default: u += sign; v -= sign; break;
                }
                break;
        }
    }
    u128 norm(i64 u, i64 v) const {
        i64 q;
        switch (order) {
            case 3: q = u * u + v * v - u * v; break;
            case 6: q = u * u + v * v + u * v; break;
            case 4: q = u * u + v * v; break;
            default: q = u * u; break;
        }
        return static_cast<u128>(q);
    }
};

Real u128_to_real(u128 x) {
    Real hi(static_cast<unsigned long>(x >> 64));
    Real lo(static_cast<unsigned long>(x & 0xffffffffffffffffULL));
    Real two64 = pow_si(Real(2), 64);
    return add(mul(hi, two64), lo);
}

}  // namespace

WeilMoment weil_moment(const DirichletCharacter& chi, u64 B, u64 r) {
    if (chi.principal()) throw std::invalid_argument("weil_moment: chi must be non-principal");
    if (r > 9 * B) throw std::invalid_argument("weil_moment: r <= 9B required");
    if (B < 1 || r < 1) throw std::invalid_argument("weil_moment: B, r >= 1 required");
    u64 p = chi.modulus();
    u64 k = chi.order();

    if (k == 2 || k == 3 || k == 4 || k == 6) {
        ExactBasis basis{k};
        // overflow guard: p * (B^2)^r must fit u128 comfortably
        long double worst = powl(static_cast<long double>(B) * B, static_cast<long double>(r)) *
                            static_cast<long double>(p);
        if (worst > 1e36L) throw std::overflow_error("weil_moment: instance too large for exact path");
        u128 total = 0;
        i64 u = 0, v = 0;
        for (u64 b = 1; b <= B; ++b) {
            i64 e = chi.exponent(b % p);
            if (e >= 0) basis.add(e, u, v, +1);
        }
        for (u64 x = 0; x < p; ++x) {
            u128 n2 = basis.norm(u, v);
            u128 t = 1;
            for (u64 j = 0; j < r; ++j) t *= n2;
            total += t;
            // slide: remove chi(x+1), add chi(x+B+1)
            i64 eout = chi.exponent((x + 1) % p);
            if (eout >= 0) basis.add(eout, u, v, -1);
            i64 ein = chi.exponent((x + B + 1) % p);
            if (ein >= 0) basis.add(ein, u, v, +1);
        }
        return {u128_to_real(total), Real(0), true};
    }

    // general order: fresh O(B) inner sums per x in long double, accumulated
    // at working precision; the per-term error budget is returned alongside
    std::vector<std::complex<long double>> roots(k);
    const long double tau = 6.283185307179586476925286766559005768L;
    for (u64 j = 0; j < k; ++j) {
        long double a = tau * static_cast<long double>(j) / static_cast<long double>(k);
        roots[j] = {cosl(a), sinl(a)};
    }
    Real total(0);
    for (u64 x = 0; x < p; ++x) {
        std::complex<long double> s{0.0L, 0.0L};
        for (u64 b = 1; b <= B; ++b) {
            i64 e = chi.exponent((x + b) % p);
            if (e >= 0) s += roots[static_cast<size_t>(e)];
        }
        long double n2 = s.real() * s.real() + s.imag() * s.imag();
        long double term = 1.0L;
        for (u64 j = 0; j < r; ++j) term *= n2;
        Real t(static_cast<double>(term));
        // keep the low part too so conversion error stays below the budget
        Real t_lo(static_cast<double>(term - static_cast<long double>(static_cast<double>(term))));
        total = add(add(total, t), t_lo);
    }
    // |s|^2 error <= ~3e-18 B^2; term error <= r * (B^2)^{r-1} * that * margin
    long double d2 = 3e-18L * B * B;
    long double per_term =
        2.0L * r * powl(static_cast<long double>(B) * B, static_cast<long double>(r - 1)) * d2;
    Real budget = mul(Real(static_cast<double>(per_term)), Real(static_cast<long>(p)), Round::Up);
    return {total, budget, false};
}

double max_window_sum(const DirichletCharacter& chi, u64 N) {
    if (chi.principal()) throw std::invalid_argument("max_window_sum: chi must be non-principal");
    u64 p = chi.modulus();
    std::vector<std::complex<double>> prefix(p);
    std::complex<double> acc{0.0, 0.0};
    prefix[0] = acc;
    for (u64 n = 1; n < p; ++n) {
        acc += chi.value(n);
        prefix[n] = acc;
    }
    u64 shift = N % p;  // complete periods contribute zero
    double best = 0.0;
    for (u64 m = 0; m < p; ++m) {
        u64 j = m + shift;
        if (j >= p) j -= p;
        double d = std::abs(prefix[j] - prefix[m]);
        if (d > best) best = d;
    }
    return best;
}

double max_window_sum_sampled(const DirichletCharacter& chi, u64 N,
                              const std::vector<u64>& starts) {
    double best = 0.0;
    for (u64 m : starts) best = std::max(best, window_sum(chi, m, N).abs);
    return best;
}

namespace {
struct Pt {
    double x, y;
};
double cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}
// Andrew monotone chain; returns hull in counter-clockwise order
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Pt> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}
double dist2(const Pt& a, const Pt& b) {
    double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}
}  // namespace

double max_window_sum_all_n(const DirichletCharacter& chi) {
    if (chi.principal())
        throw std::invalid_argument("max_window_sum_all_n: chi must be non-principal");
    u64 p = chi.modulus();
    if (chi.order() == 2) {
        double acc = 0.0, lo = 0.0, hi = 0.0;
        for (u64 n = 1; n < p; ++n) {
            i64 e = chi.exponent(n);
            if (e == 0) acc += 1.0;
            else if (e > 0) acc -= 1.0;
            lo = std::min(lo, acc);
            hi = std::max(hi, acc);
        }
        return hi - lo;
    }
    std::vector<Pt> pts(p);
    std::complex<double> acc{0.0, 0.0};
    pts[0] = {0.0, 0.0};
    for (u64 n = 1; n < p; ++n) {
        acc += chi.value(n);
        pts[n] = {acc.real(), acc.imag()};
    }
    auto hull = convex_hull(std::move(pts));
    size_t h = hull.size();
    if (h == 1) return 0.0;
    if (h == 2) return std::sqrt(dist2(hull[0], hull[1]));
    // rotating calipers over antipodal pairs
    double best = 0.0;
    size_t j = 1;
    for (size_t i = 0; i < h; ++i) {
        size_t ni = (i + 1) % h;
        while (std::abs(cross(hull[i], hull[ni], hull[(j + 1) % h])) >
               std::abs(cross(hull[i], hull[ni], hull[j])))
            j = (j + 1) % h;
        best = std::max(best, dist2(hull[i], hull[j]));
        best = std::max(best, dist2(hull[ni], hull[j]));
    }
    return std::sqrt(best);
}

u64 least_power_nonresidue(u64 p, u64 k) {
    if (!is_prime(p) || k < 2 || (p - 1) % k != 0)
        throw std::invalid_argument("least_power_nonresidue: need prime p and k | p-1");
    u64 e = (p - 1) / k;
    for (u64 n = 2; n < p; ++n) {
        if (pow_mod(n, e, p) != 1) return n;
    }
    throw std::logic_error("least_power_nonresidue: none found");
}

}  // namespace burgess::chars
