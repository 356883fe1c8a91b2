#include <algorithm>
#include <utility>
#include <vector>

#include "otd/polynomial.hpp"

// Exact rational root extraction. Pipeline: clear denominators, strip zero
// roots, Yun squarefree decomposition, Descartes/bisection isolation of the
// real roots of each squarefree factor, then continued-fraction recognition of
// the unique small-denominator rational in each isolating interval. Every
// candidate is verified by exact evaluation, so the result is sound whatever
// the isolation did; completeness comes from the certified interval width
// 1/(2*lc^2), below which an isolating interval holds at most one rational
// with denominator dividing the leading coefficient.

namespace otd {
namespace {

using ZPoly = std::vector<mpz_class>; // ascending, empty == zero

void znormalize(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const mpz_class& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void zprimitive(ZPoly& p) {
    znormalize(p);
    if (p.empty()) return;
    mpz_class g = zcontent(p);
    if (sgn(p.back()) < 0) g = -g;
    if (g == 1) return;
    for (mpz_class& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly zderivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
    return d;
}

// Exact division (remainder known to vanish by Gauss's lemma in our uses).
ZPoly zdiv_exact(const ZPoly& a, const ZPoly& b) {
    require(!b.empty(), ErrorCode::ZeroPolynomial, "integer poly division by zero");
    if (a.empty()) return {};
    require(a.size() >= b.size(), ErrorCode::VerificationFailed, "inexact integer poly division");
    ZPoly rem = a;
    ZPoly quo(a.size() - b.size() + 1);
    for (std::size_t qi = quo.size(); qi-- > 0;) {
        mpz_class f;
        mpz_class& top = rem[qi + b.size() - 1];
        require(mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t()) != 0,
                ErrorCode::VerificationFailed, "inexact integer poly division");
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
        quo[qi] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) rem[qi + j] -= f * b[j];
    }
    znormalize(rem);
    require(rem.empty(), ErrorCode::VerificationFailed, "nonzero remainder in exact division");
    return quo;
}

// Pseudo-remainder, used by the primitive PRS gcd.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    int db = zdeg(b);
    const mpz_class& lb = b.back();
    long e = zdeg(a) - db + 1;
    while (!a.empty() && zdeg(a) >= db) {
        mpz_class la = a.back();
        std::size_t shift = a.size() - b.size();
        for (mpz_class& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        znormalize(a);
        --e;
    }
    if (e > 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (mpz_class& c : a) c *= scale;
    }
    return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    zprimitive(a);
    zprimitive(b);
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zprem(a, b);
        a = std::move(b);
        b = std::move(r);
        zprimitive(b);
    }
    return a;
}

// Yun's algorithm: F = prod F_i^i with squarefree pairwise-coprime F_i.
std::vector<std::pair<ZPoly, int>> zsquarefree(const ZPoly& f) {
    std::vector<std::pair<ZPoly, int>> out;
    if (zdeg(f) < 1) return out;
    ZPoly df = zderivative(f);
    ZPoly g = zgcd(f, df);
    if (zdeg(g) == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    ZPoly c = zdiv_exact(f, g);
    zprimitive(c);
    ZPoly d;
    {
        ZPoly t = zdiv_exact(df, g);
        ZPoly dc = zderivative(c);
        d.assign(std::max(t.size(), dc.size()), 0);
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (i < t.size()) d[i] += t[i];
            if (i < dc.size()) d[i] -= dc[i];
        }
        znormalize(d);
    }
    int i = 1;
    while (zdeg(c) > 0) {
        ZPoly h = zgcd(c, d);
        if (zdeg(h) > 0) out.emplace_back(h, i);
        ZPoly c2 = zdeg(h) > 0 ? zdiv_exact(c, h) : c;
        zprimitive(c2);
        ZPoly t = zdeg(h) > 0 ? zdiv_exact(d, h) : d;
        ZPoly dc2 = zderivative(c2);
        ZPoly d2(std::max(t.size(), dc2.size()), 0);
        for (std::size_t k = 0; k < d2.size(); ++k) {
            if (k < t.size()) d2[k] += t[k];
            if (k < dc2.size()) d2[k] -= dc2[k];
        }
        znormalize(d2);
        c = std::move(c2);
        d = std::move(d2);
        ++i;
    }
    return out;
}

// Sign of F(p/q) with q > 0, via the homogenized integer value.
int zsign_at(const ZPoly& f, const mpz_class& p, const mpz_class& q) {
    if (f.empty()) return 0;
    mpz_class val = f.back();
    mpz_class qpow = 1;
    for (std::size_t i = f.size() - 1; i-- > 0;) {
        qpow *= q;
        val = val * p + f[i] * qpow;
    }
    return sgn(val);
}

int zsign_at_q(const ZPoly& f, const mpq_class& x) {
    return zsign_at(f, x.get_num(), x.get_den());
}

int variations(const ZPoly& p) {
    int count = 0, last = 0;
    for (const mpz_class& c : p) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

ZPoly zreverse(const ZPoly& p) {
    ZPoly r(p.rbegin(), p.rend());
    znormalize(r);
    return r;
}

// Taylor shift by one: P(x+1), in place.
void zshift1(ZPoly& p) {
    if (p.size() <= 1) return;
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
        for (std::size_t j = p.size() - 1; j-- > k;) p[j] += p[j + 1];
}

// 2^deg * P(x/2).
ZPoly zhalf(const ZPoly& p) {
    ZPoly r = p;
    mpz_class pow = 1;
    for (std::size_t i = r.size(); i-- > 0;) {
        r[i] *= pow;
        pow <<= 1;
    }
    return r;
}

struct Isolation {
    // Open dyadic intervals (scaled by 2^bound_exp) each holding one root.
    std::vector<std::pair<mpq_class, mpq_class>> intervals;
    std::vector<mpq_class> exact_roots;
};

void isolate_01(ZPoly p, const mpz_class& c, unsigned k, int bound_exp, Isolation& out,
                int depth) {
    require(depth < 20000, ErrorCode::VerificationFailed, "root isolation did not terminate");
    ZPoly t = zreverse(p);
    zshift1(t);
    int v = variations(t);
    if (v == 0) return;
    mpq_class scale(mpz_class(1) << bound_exp);
    if (v == 1) {
        mpq_class lo(c, mpz_class(1) << k);
        mpq_class hi(c + 1, mpz_class(1) << k);
        lo.canonicalize();
        hi.canonicalize();
        out.intervals.emplace_back(lo * scale, hi * scale);
        return;
    }
    ZPoly left = zhalf(p);
    zprimitive(left);
    ZPoly right = left;
    zshift1(right);
    mpz_class c2 = c * 2;
    if (!right.empty() && right.front() == 0) {
        mpq_class root(c2 + 1, mpz_class(1) << (k + 1));
        root.canonicalize();
        out.exact_roots.push_back(root * scale);
        right.erase(right.begin());
        znormalize(right);
    }
    isolate_01(std::move(left), c2, k + 1, bound_exp, out, depth + 1);
    isolate_01(std::move(right), c2 + 1, k + 1, bound_exp, out, depth + 1);
}

// Power-of-two exponent e with every positive root < 2^e (Cauchy bound).
int cauchy_exponent(const ZPoly& f) {
    std::size_t lead_bits = mpz_sizeinbase(f.back().get_mpz_t(), 2);
    long e = 1;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        if (f[i] == 0) continue;
        long bi = static_cast<long>(mpz_sizeinbase(f[i].get_mpz_t(), 2));
        e = std::max(e, bi - static_cast<long>(lead_bits) + 2);
    }
    return static_cast<int>(e);
}

Isolation isolate_positive(const ZPoly& f) {
    Isolation iso;
    if (zdeg(f) < 1) return iso;
    int e = cauchy_exponent(f);
    ZPoly g = f;
    // g(x) = f(2^e x): roots of f in (0, 2^e) map to (0,1).
    for (std::size_t i = 0; i < g.size(); ++i) g[i] <<= (e * i);
    zprimitive(g);
    isolate_01(std::move(g), 0, 0, e, iso, 0);
    return iso;
}

// Smallest-denominator rational in the closed interval [lo, hi], 0 < lo <= hi.
mpq_class simplest_in(mpq_class lo, mpq_class hi) {
    std::vector<mpz_class> terms;
    while (true) {
        mpz_class a = lo.get_num() / lo.get_den(); // floor for positive lo
        mpz_class c = (lo.get_den() == 1) ? a : a + 1; // ceil(lo)
        if (mpq_class(c) <= hi) {
            terms.push_back(c);
            break;
        }
        terms.push_back(a);
        mpq_class nlo = 1 / (hi - mpq_class(a));
        mpq_class nhi = 1 / (lo - mpq_class(a));
        lo = nlo;
        hi = nhi;
    }
    mpq_class x(terms.back());
    for (std::size_t i = terms.size() - 1; i-- > 0;) x = mpq_class(terms[i]) + 1 / x;
    return x;
}

// Exactly one simple root of f in (lo, hi); returns it if rational.
//
// A rational root has denominator dividing lc(f), so once the interval is
// narrower than 1/(2*lc^2) it contains at most one rational with such a
// denominator, and the simplest rational of the interval is that root if it
// exists at all. Reconstruction is attempted at staged widths first since
// small roots are recognized long before the certified width.
bool refine_rational(const ZPoly& f, mpq_class lo, mpq_class hi, mpq_class& out) {
    int s_lo = zsign_at_q(f, lo);
    require(s_lo != 0 && zsign_at_q(f, hi) != 0 && s_lo != zsign_at_q(f, hi),
            ErrorCode::VerificationFailed, "bad isolating interval");
    mpq_class width = hi - lo;
    long width_bits = static_cast<long>(mpz_sizeinbase(width.get_num().get_mpz_t(), 2)) -
                      static_cast<long>(mpz_sizeinbase(width.get_den().get_mpz_t(), 2)) + 1;
    long cert = 2 * static_cast<long>(mpz_sizeinbase(f.back().get_mpz_t(), 2)) + 3 +
                std::max(width_bits, 0L);
    long done = 0;
    for (long stage = 64;; stage *= 4) {
        if (stage > cert) stage = cert;
        for (; done < stage; ++done) {
            mpq_class mid = (lo + hi) / 2;
            int s = zsign_at_q(f, mid);
            if (s == 0) {
                out = mid;
                return true;
            }
            if (s == s_lo)
                lo = mid;
            else
                hi = mid;
        }
        mpq_class cand = simplest_in(lo, hi);
        if (zsign_at_q(f, cand) == 0) {
            out = cand;
            return true;
        }
        if (stage == cert) return false;
    }
}

void roots_of_squarefree(const ZPoly& f, std::vector<mpq_class>& out) {
    int d = zdeg(f);
    if (d < 1) return;
    if (d == 1) {
        mpq_class r(-f[0], f[1]);
        r.canonicalize();
        out.push_back(r);
        return;
    }
    // Positive side.
    {
        Isolation iso = isolate_positive(f);
        for (const mpq_class& r : iso.exact_roots) out.push_back(r);
        for (const auto& [lo, hi] : iso.intervals) {
            mpq_class r;
            if (refine_rational(f, lo, hi, r)) out.push_back(r);
        }
    }
    // Negative side via f(-x).
    {
        ZPoly neg = f;
        for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
        Isolation iso = isolate_positive(neg);
        for (const mpq_class& r : iso.exact_roots) out.push_back(-r);
        for (const auto& [lo, hi] : iso.intervals) {
            mpq_class r;
            if (refine_rational(neg, lo, hi, r)) out.push_back(-r);
        }
    }
}

} // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
    require(!p.is_zero(), ErrorCode::ZeroPolynomial, "rational_roots of zero polynomial");
    std::vector<std::pair<Rational, int>> result;
    if (p.degree() == 0) return result;

    // Clear denominators.
    mpz_class den_lcm = 1;
    for (const Rational& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    ZPoly f(p.coeffs().size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rational& c = p.coeff(i);
        f[i] = c.numerator() * (den_lcm / c.denominator());
    }
    zprimitive(f);

    std::size_t zero_mult = 0;
    while (!f.empty() && f.front() == 0) {
        f.erase(f.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) result.emplace_back(Rational(0), static_cast<int>(zero_mult));

    for (auto& [factor, mult] : zsquarefree(f)) {
        std::vector<mpq_class> roots;
        roots_of_squarefree(factor, roots);
        for (const mpq_class& r : roots) {
            Rational root(r);
            require(p.eval(root).is_zero(), ErrorCode::VerificationFailed,
                    "unsound rational root candidate");
            result.emplace_back(root, mult);
        }
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

} // namespace otd
