#include <doctest.h>

#include <map>

#include "hessk3/theta.hpp"
#include "hessk3/theta_suite.hpp"

using namespace hessk3;

namespace {

// Independent double-sum oracle. Walks the lattice points n directly and
// derives the sign from the power of i in e^{2 pi i (n+a).b}, instead of the
// parity shortcut used by the library.
ConeSeries brute_theta2(const ThetaChar& ch, Scale scale, int order, int box) {
    ConeSeries out(order);
    const Rational s = scale_value(scale);
    for (long n1 = -box; n1 <= box; ++n1) {
        for (long n2 = -box; n2 <= box; ++n2) {
            const long j1 = 2 * n1 + ch.x;
            const long j2 = 2 * n2 + ch.y;
            const Rational pq = Rational(2) * s * Rational(j1 * j1);
            const Rational mq = Rational(4) * s * Rational(j1 * j2);
            const Rational rq = Rational(2) * s * Rational(j2 * j2);
            REQUIRE(pq.is_integer());
            REQUIRE(mq.is_integer());
            REQUIRE(rq.is_integer());
            const long p = pq.num().get_si();
            const long m = mq.num().get_si();
            const long r = rq.num().get_si();
            if (p + r > order) continue;
            const long ipow = ((j1 * ch.z + j2 * ch.w) % 4 + 4) % 4;
            if (ipow % 2 != 0) return ConeSeries(order);  // odd characteristic
            const Rational sign(ipow == 0 ? 1 : -1);
            out.set(static_cast<int>(p), static_cast<int>(m), static_cast<int>(r),
                    out.coeff(static_cast<int>(p), static_cast<int>(m),
                              static_cast<int>(r)) + sign);
        }
    }
    return out;
}

LaurentSeries1 brute_theta1(int a, int b, Scale scale, int order, int box) {
    LaurentSeries1 out(8, order);
    const Rational s = scale_value(scale);
    for (long n = -box; n <= box; ++n) {
        const long j = 2 * n + a;
        const Rational eq = Rational(2) * s * Rational(j * j);
        REQUIRE(eq.is_integer());
        const long e = eq.num().get_si();
        if (e > order) continue;
        const long ipow = ((j * b) % 4 + 4) % 4;
        if (ipow % 2 != 0) return LaurentSeries1(8, order);
        const Rational sign(ipow == 0 ? 1 : -1);
        out.set(static_cast<int>(e), out.coeff(static_cast<int>(e)) + sign);
    }
    return out;
}

}  // namespace

TEST_CASE("theta2 matches the brute-force lattice sum") {
    const int order = 24;
    for (const Scale s : {Scale::half, Scale::one, Scale::two}) {
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                    for (int w = 0; w < 2; ++w) {
                        const ThetaChar ch{x, y, z, w};
                        const ConeSeries lib = theta2(ch, s, order);
                        const ConeSeries ref = brute_theta2(ch, s, order, 9);
                        CAPTURE(ch.name());
                        CHECK(lib.terms() == ref.terms());
                    }
    }
}

TEST_CASE("theta1 matches the brute-force lattice sum") {
    const int order = 48;
    for (const Scale s : {Scale::half, Scale::one, Scale::two}) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const LaurentSeries1 lib = theta1(a, b, s, order);
                const LaurentSeries1 ref = brute_theta1(a, b, s, order, 12);
                CHECK(lib.terms() == ref.terms());
            }
    }
}

TEST_CASE("pinned low-order theta coefficients") {
    const ConeSeries t = theta2(ThetaChar{0, 0, 0, 0}, Scale::one, 16);
    CHECK(t.coeff(0, 0, 0) == Rational(1));
    CHECK(t.coeff(8, 16, 8) == Rational(2));
    CHECK(t.coeff(8, -16, 8) == Rational(2));
    CHECK(t.coeff(8, 0, 0) == Rational(2));
    CHECK(t.coeff(2, 4, 2) == Rational(0));
    // odd characteristics (x z + y w odd) vanish identically
    CHECK(theta2(ThetaChar{0, 1, 0, 1}, Scale::one, 16).is_zero());
    CHECK(theta2(ThetaChar{1, 0, 1, 0}, Scale::one, 16).is_zero());
    CHECK(theta2(ThetaChar{1, 1, 0, 1}, Scale::one, 16).is_zero());
}

TEST_CASE("eta24 and Eisenstein q-expansions") {
    const LaurentSeries1 eta = eta24(Scale::one, 80);
    CHECK(eta.coeff(0) == Rational(0));
    CHECK(eta.coeff(16) == Rational(1));       // tau(1)
    CHECK(eta.coeff(32) == Rational(-24));     // tau(2)
    CHECK(eta.coeff(48) == Rational(252));     // tau(3)
    CHECK(eta.coeff(64) == Rational(-1472));   // tau(4)
    CHECK(eta.coeff(80) == Rational(4830));    // tau(5)

    const LaurentSeries1 e4 = eisenstein4(Scale::one, 48);
    CHECK(e4.coeff(0) == Rational(1));
    CHECK(e4.coeff(16) == Rational(240));
    CHECK(e4.coeff(32) == Rational(2160));
    CHECK(e4.coeff(48) == Rational(6720));

    const LaurentSeries1 e6 = eisenstein6(Scale::one, 48);
    CHECK(e6.coeff(0) == Rational(1));
    CHECK(e6.coeff(16) == Rational(-504));
    CHECK(e6.coeff(32) == Rational(-16632));
    CHECK(e6.coeff(48) == Rational(-122976));

    // scale two doubles every exponent
    const LaurentSeries1 e4two = eisenstein4(Scale::two, 48);
    CHECK(e4two.coeff(32) == Rational(240));
    CHECK(e4two.coeff(16) == Rational(0));
}

TEST_CASE("Jacobi quartic relation between the even theta fourth powers") {
    const LaurentSeries1 f00 = theta1(0, 0, Scale::one, 64).pow(4);
    const LaurentSeries1 f01 = theta1(0, 1, Scale::one, 64).pow(4);
    const LaurentSeries1 f10 = theta1(1, 0, Scale::one, 64).pow(4);
    CHECK((f00 - f01 - f10).is_zero());
}

TEST_CASE("identity batches hold at low order") {
    for (const auto& c : igusa_duplication(24)) {
        CAPTURE(c.name);
        CHECK(c.ok);
    }
    for (const auto& c : genus1_relations(24)) {
        CAPTURE(c.name);
        CHECK(c.ok);
    }
    for (const auto& c : product_factorizations(24)) {
        CAPTURE(c.name);
        CHECK(c.ok);
    }
}

TEST_CASE("generator weights and the phi/psi combinations") {
    const Generators g = generators(24);
    CHECK(g.theta.weight == 2);
    CHECK(g.phi1.weight == 4);
    CHECK(g.phi2.weight == 4);
    CHECK(g.chi.weight == 6);
    CHECK(g.phi.weight == 4);
    CHECK(g.psi.weight == 8);
    CHECK(g.phi.series.agrees_with(g.phi1.series + g.phi2.series.scale(Rational(1024))));
    CHECK(g.psi.series.agrees_with(g.phi1.series * g.phi2.series));
}

TEST_CASE("diagonal restriction reproduces the leading coefficients") {
    const Generators g = generators(48);  // certifies diagonal exponents through 24
    const LaurentSeries1 d = restrict_diagonal(g.theta);
    CHECK(d.coeff(0) == Rational(1));
    CHECK(d.coeff(8) == Rational(0));
    CHECK(d.coeff(16) == Rational(72));
    CHECK(d.coeff(24) == Rational(192));
}

TEST_CASE("series evaluation tracks the numeric lattice sum") {
    CHECK(series_vs_lattice_error(40) < 1e-6);
}

TEST_CASE("numeric theta agrees with the exact series at a sample point") {
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> t1 = 0.21 + 1.9 * i, t2 = 0.07 + 0.31 * i, t3 = -0.11 + 2.1 * i;
    const ConeSeries t = theta2(ThetaChar{0, 0, 0, 0}, Scale::one, 56);
    const std::complex<double> direct = theta2_numeric(ThetaChar{0, 0, 0, 0}, t1, t2, t3);
    CHECK(std::abs(t.eval(t1, t2, t3) - direct) < 1e-9);
}
