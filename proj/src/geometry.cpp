#include "hullkit/geometry.hpp"

#include <boost/multiprecision/cpp_int.hpp>

// Exact evaluation of (e1-f1)*(g1-h1) - (e2-f2)*(g2-h2) for the cases the
// filtered fast path cannot certify. The workhorse is error-free expansion
// arithmetic (two_sum / two_product chains); an arbitrary-precision rational
// evaluation backstops the narrow band of inputs whose differences are too
// large to split without overflow.

namespace hullkit::detail {

namespace {

using boost::multiprecision::cpp_rational;

int det2_sign_rational(double e1, double f1, double g1, double h1, double e2,
                       double f2, double g2, double h2) {
    const cpp_rational t1 = (cpp_rational(e1) - cpp_rational(f1)) *
                            (cpp_rational(g1) - cpp_rational(h1));
    const cpp_rational t2 = (cpp_rational(e2) - cpp_rational(f2)) *
                            (cpp_rational(g2) - cpp_rational(h2));
    if (t1 > t2) return 1;
    if (t1 < t2) return -1;
    return 0;
}

// Beyond this magnitude the Dekker splitter overflows and products stop
// being error-free.
constexpr double kSplitSafe = 0x1p995;

struct TwoDouble {
    double hi;
    double lo;
};

// Requires |a| >= |b| or a == 0.
inline TwoDouble fast_two_sum(double a, double b) {
    const double x = a + b;
    return {x, b - (x - a)};
}

inline TwoDouble two_sum(double a, double b) {
    const double x = a + b;
    const double bvirt = x - a;
    const double avirt = x - bvirt;
    return {x, (a - avirt) + (b - bvirt)};
}

inline TwoDouble two_diff(double a, double b) {
    const double x = a - b;
    const double bvirt = a - x;
    const double avirt = x + bvirt;
    return {x, (a - avirt) + (bvirt - b)};
}

inline TwoDouble split(double a) {
    constexpr double splitter = 134217729.0;  // 2^27 + 1
    const double c = splitter * a;
    const double abig = c - a;
    const double hi = c - abig;
    return {hi, a - hi};
}

inline TwoDouble two_product(double a, double b) {
    const double x = a * b;
    const TwoDouble as = split(a);
    const TwoDouble bs = split(b);
    const double err1 = x - as.hi * bs.hi;
    const double err2 = err1 - as.lo * bs.hi;
    const double err3 = err2 - as.hi * bs.lo;
    return {x, as.lo * bs.lo - err3};
}

// Expansions: arrays of nonoverlapping components in increasing magnitude.
// The sign of the largest component is the sign of the whole sum.

// h = e * b with zero components eliminated; h holds up to 2 * elen doubles.
int scale_expansion_zeroelim(int elen, const double* e, double b, double* h) {
    const TwoDouble bs = split(b);
    int hn = 0;
    TwoDouble prod;
    {
        const double x = e[0] * b;
        const TwoDouble es = split(e[0]);
        const double err1 = x - es.hi * bs.hi;
        const double err2 = err1 - es.lo * bs.hi;
        const double err3 = err2 - es.hi * bs.lo;
        prod = {x, es.lo * bs.lo - err3};
    }
    double q = prod.hi;
    if (prod.lo != 0.0) h[hn++] = prod.lo;
    for (int i = 1; i < elen; ++i) {
        const double x = e[i] * b;
        const TwoDouble es = split(e[i]);
        const double err1 = x - es.hi * bs.hi;
        const double err2 = err1 - es.lo * bs.hi;
        const double err3 = err2 - es.hi * bs.lo;
        const TwoDouble p = {x, es.lo * bs.lo - err3};
        const TwoDouble sum = two_sum(q, p.lo);
        if (sum.lo != 0.0) h[hn++] = sum.lo;
        const TwoDouble top = fast_two_sum(p.hi, sum.hi);
        if (top.lo != 0.0) h[hn++] = top.lo;
        q = top.hi;
    }
    if (q != 0.0 || hn == 0) h[hn++] = q;
    return hn;
}

// h = e + f with zero components eliminated; h holds up to elen + fn doubles.
int fast_expansion_sum_zeroelim(int elen, const double* e, int flen,
                                const double* f, double* h) {
    int ei = 0, fi = 0, hn = 0;
    auto e_first = [&] {
        if (ei >= elen) return false;
        if (fi >= flen) return true;
        return (f[fi] > e[ei]) == (f[fi] > -e[ei]);
    };
    double q = e_first() ? e[ei++] : f[fi++];
    bool first = true;
    while (ei < elen || fi < flen) {
        const double now = e_first() ? e[ei++] : f[fi++];
        const TwoDouble sum = first ? fast_two_sum(now, q) : two_sum(q, now);
        first = false;
        q = sum.hi;
        if (sum.lo != 0.0) h[hn++] = sum.lo;
    }
    if (q != 0.0 || hn == 0) h[hn++] = q;
    return hn;
}

// Product of two 2-expansions, length <= 8.
int expansion_product(const TwoDouble& a, const TwoDouble& b, double* h) {
    const double a_parts[2] = {a.lo, a.hi};
    double by_hi[4];
    const int nhi = scale_expansion_zeroelim(2, a_parts, b.hi, by_hi);
    if (b.lo == 0.0) {
        for (int i = 0; i < nhi; ++i) h[i] = by_hi[i];
        return nhi;
    }
    double by_lo[4];
    const int nlo = scale_expansion_zeroelim(2, a_parts, b.lo, by_lo);
    return fast_expansion_sum_zeroelim(nlo, by_lo, nhi, by_hi, h);
}

}  // namespace

// Expansion products are error-free only while no intermediate overflows or
// loses its roundoff to the subnormal range.
bool product_in_range(const TwoDouble& a, const TwoDouble& b) {
    const double p = a.hi * b.hi;
    if (p == 0.0) return a.hi == 0.0 || b.hi == 0.0;  // structurally zero
    const double m = std::abs(p);
    return m >= 1e-240 && m <= 1e300;
}

int det2_sign_exact(double e1, double f1, double g1, double h1, double e2,
                    double f2, double g2, double h2) {
    const TwoDouble d1a = two_diff(e1, f1);
    const TwoDouble d1b = two_diff(g1, h1);
    const TwoDouble d2a = two_diff(e2, f2);
    const TwoDouble d2b = two_diff(g2, h2);
    const double biggest =
        std::max(std::max(std::abs(d1a.hi), std::abs(d1b.hi)),
                 std::max(std::abs(d2a.hi), std::abs(d2b.hi)));
    if (!(biggest < kSplitSafe) || !product_in_range(d1a, d1b) ||
        !product_in_range(d2a, d2b))
        return det2_sign_rational(e1, f1, g1, h1, e2, f2, g2, h2);

    double t1[8], t2[8], result[16];
    const int n1 = expansion_product(d1a, d1b, t1);
    const int n2 = expansion_product(d2a, {-d2b.hi, -d2b.lo}, t2);
    const int n = fast_expansion_sum_zeroelim(n1, t1, n2, t2, result);
    const double top = result[n - 1];
    return top > 0.0 ? 1 : (top < 0.0 ? -1 : 0);
}

}  // namespace hullkit::detail
