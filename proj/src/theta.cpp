#include "hessk3/theta.hpp"

#include <cmath>
#include <map>

namespace hessk3 {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// Exponent of q = e^{2 pi i tau} in unit-1/8 exponents, for theta(scale*tau).
int q_unit(Scale s) {
    switch (s) {
        case Scale::half: return 8;
        case Scale::one: return 16;
        case Scale::two: return 32;
    }
    throw std::logic_error("unreachable");
}

// sigma_k(n)
long sigma(long n, int k) {
    long total = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long p = 1;
        for (int i = 0; i < k; ++i) p *= d;
        total += p;
    }
    return total;
}
}  // namespace

Rational scale_value(Scale s) {
    switch (s) {
        case Scale::half: return Rational(1, 2);
        case Scale::one: return Rational(1);
        case Scale::two: return Rational(2);
    }
    throw std::logic_error("unreachable");
}

ConeSeries theta2(const ThetaChar& ch, Scale scale, int order) {
    ConeSeries out(order);
    if (!ch.even()) return out;  // odd characteristics vanish identically
    // With j_i = 2 n_i + a-digit, the term at n is
    //   sign * e^{pi i (p tau1 + m tau2 + r tau3)/8},
    //   p = 2 s j1^2, m = 4 s j1 j2, r = 2 s j2^2,
    //   sign = (-1)^{n1 z + n2 w + (x z + y w)/2}.
    const Rational s = scale_value(scale);
    // p + r = 2 s (j1^2 + j2^2) <= order
    long jbound = 1;
    while (Rational(2) * s * Rational(jbound * jbound) <= Rational(order)) ++jbound;
    const int half_xz = (ch.x * ch.z + ch.y * ch.w) / 2;
    for (long j1 = -jbound; j1 <= jbound; ++j1) {
        if ((j1 & 1L) != (ch.x & 1)) continue;
        for (long j2 = -jbound; j2 <= jbound; ++j2) {
            if ((j2 & 1L) != (ch.y & 1)) continue;
            Rational pq = Rational(2) * s * Rational(j1 * j1);
            Rational rq = Rational(2) * s * Rational(j2 * j2);
            Rational mq = Rational(4) * s * Rational(j1 * j2);
            if (!pq.is_integer() || !rq.is_integer() || !mq.is_integer())
                throw std::logic_error("theta2: non-integral exponent");
            long p = pq.num().get_si(), r = rq.num().get_si(), m = mq.num().get_si();
            if (p + r > order) continue;
            long n1 = (j1 - ch.x) / 2, n2 = (j2 - ch.y) / 2;
            long par = n1 * ch.z + n2 * ch.w + half_xz;
            Rational sign((par % 2 + 2) % 2 == 0 ? 1 : -1);
            out.set(static_cast<int>(p), static_cast<int>(m), static_cast<int>(r),
                    out.coeff(static_cast<int>(p), static_cast<int>(m), static_cast<int>(r)) +
                        sign);
        }
    }
    return out;
}

LaurentSeries1 theta1(int a, int b, Scale scale, int order) {
    LaurentSeries1 out(8, order);
    if (a == 1 && b == 1) return out;  // odd characteristic
    const Rational s = scale_value(scale);
    long jbound = 1;
    while (Rational(2) * s * Rational(jbound * jbound) <= Rational(order)) ++jbound;
    for (long j = -jbound; j <= jbound; ++j) {
        if ((j & 1L) != (a & 1)) continue;
        Rational eq = Rational(2) * s * Rational(j * j);
        if (!eq.is_integer()) throw std::logic_error("theta1: non-integral exponent");
        long e = eq.num().get_si();
        if (e > order) continue;
        long n = (j - a) / 2;
        Rational sign((((n * b) % 2 + 2) % 2) == 0 ? 1 : -1);
        out.set(static_cast<int>(e), out.coeff(static_cast<int>(e)) + sign);
    }
    return out;
}

LaurentSeries1 eisenstein4(Scale scale, int order) {
    int step = q_unit(scale);
    LaurentSeries1 out = LaurentSeries1::one(8, order);
    for (long n = 1; n * step <= order; ++n)
        out.set(static_cast<int>(n * step), Rational(240 * sigma(n, 3)));
    return out;
}

LaurentSeries1 eisenstein6(Scale scale, int order) {
    int step = q_unit(scale);
    LaurentSeries1 out = LaurentSeries1::one(8, order);
    for (long n = 1; n * step <= order; ++n)
        out.set(static_cast<int>(n * step), Rational(-504 * sigma(n, 5)));
    return out;
}

LaurentSeries1 eta24(Scale scale, int order) {
    int step = q_unit(scale);
    LaurentSeries1 out = LaurentSeries1::monomial(8, order, step, Rational(1));
    for (long n = 1; n * step <= order; ++n) {
        LaurentSeries1 factor = LaurentSeries1::one(8, order);
        factor.set(static_cast<int>(n * step), Rational(-1));
        out = out * factor.pow(24);
    }
    return out;
}

Generators generators(int order) {
    // the same truncation orders recur across the verification suites
    static std::map<int, Generators> cache;
    if (auto it = cache.find(order); it != cache.end()) return it->second;

    auto th = [&](int x, int y, int z, int w) {
        return theta2(ThetaChar{x, y, z, w}, Scale::one, order);
    };
    ConeSeries t0000 = th(0, 0, 0, 0), t0001 = th(0, 0, 0, 1), t0010 = th(0, 0, 1, 0),
               t0011 = th(0, 0, 1, 1);
    ConeSeries t0100 = th(0, 1, 0, 0), t0110 = th(0, 1, 1, 0);
    ConeSeries t1000 = th(1, 0, 0, 0), t1001 = th(1, 0, 0, 1);
    ConeSeries t1100 = th(1, 1, 0, 0), t1111 = th(1, 1, 1, 1);

    Generators g;
    ConeSeries quartics = t0000.pow(4) + t0001.pow(4) + t0010.pow(4) + t0011.pow(4);
    g.theta = {quartics.scale(Rational(1, 4)), 2};
    g.phi1 = {(t0000 * t0001 * t0010 * t0011).pow(2), 4};
    ConeSeries d = t0100.pow(4) - t0110.pow(4);
    g.phi2 = {d.pow(2).scale(Rational(1, 16384)), 4};
    ConeSeries six = t0100 * t0110 * t1000 * t1001 * t1100 * t1111;
    g.chi = {six.pow(2).scale(Rational(1, 4096)), 6};
    g.phi = g.phi1 + g.phi2.scale(Rational(1024));
    g.psi = g.phi1 * g.phi2;
    cache.emplace(order, g);
    return g;
}

LaurentSeries1 restrict_diagonal(const SiegelForm& f) {
    // tau restricted to the direction tau1 = tau3 = t, tau2 = t/2; the term
    // (p, m, r) lands at exponent p + m/2 + r of e^{pi i t/8}.  A cone term
    // beyond grade D can land at exponent > D/2 only, so the result is
    // certified through exponent D/2.
    LaurentSeries1 out(8, f.series.order() / 2);
    for (const auto& [k, c] : f.series.terms()) {
        long twice = 2L * k[0] + k[1] + 2L * k[2];
        if (twice % 2 != 0) throw std::logic_error("restrict_diagonal: odd tau2 exponent");
        int e = static_cast<int>(twice / 2);
        out.set(e, out.coeff(e) + c);
    }
    return out;
}

ProductSeries restrict_product(const SiegelForm& f) {
    ProductSeries out(f.series.order());
    for (const auto& [k, c] : f.series.terms())
        out.set(k[0], k[2], out.coeff(k[0], k[2]) + c);
    return out;
}

GenusOneForm siegel_phi(const SiegelForm& f) {
    LaurentSeries1 out(8, f.series.order());
    for (const auto& [k, c] : f.series.terms()) {
        if (k[2] != 0) continue;
        out.set(k[0], out.coeff(k[0]) + c);
    }
    return {out, f.weight};
}

std::complex<double> theta2_numeric(const ThetaChar& ch, const std::complex<double>& t11,
                                    const std::complex<double>& t12,
                                    const std::complex<double>& t22, int box) {
    const std::complex<double> I(0.0, 1.0);
    const double a1 = ch.x / 2.0, a2 = ch.y / 2.0, b1 = ch.z / 2.0, b2 = ch.w / 2.0;
    std::complex<double> total = 0.0;
    for (int n1 = -box; n1 <= box; ++n1)
        for (int n2 = -box; n2 <= box; ++n2) {
            double u = n1 + a1, v = n2 + a2;
            std::complex<double> quad = u * u * t11 + 2.0 * u * v * t12 + v * v * t22;
            double lin = u * b1 + v * b2;
            total += std::exp(I * kPi * (quad + 2.0 * lin));
        }
    return total;
}

std::complex<double> theta1_numeric(int a, int b, const std::complex<double>& tau, int box) {
    const std::complex<double> I(0.0, 1.0);
    std::complex<double> total = 0.0;
    for (int n = -box; n <= box; ++n) {
        double u = n + a / 2.0;
        total += std::exp(I * kPi * (u * u * tau + 2.0 * u * (b / 2.0)));
    }
    return total;
}

}  // namespace hessk3
