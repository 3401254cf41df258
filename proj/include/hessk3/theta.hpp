#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "hessk3/series.hpp"

namespace hessk3 {

// Half-integral theta characteristic; digits (x, y, z, w) mean
// a = (x/2, y/2), b = (z/2, w/2).
struct ThetaChar {
    int x, y, z, w;
    bool even() const { return (x * z + y * w) % 2 == 0; }
    std::string name() const {
        return std::to_string(x) + std::to_string(y) + std::to_string(z) + std::to_string(w);
    }
};

// Argument scaling for theta series: theta(scale * tau).
enum class Scale { half, one, two };
Rational scale_value(Scale s);

// Genus-2 theta constant theta_{a,b}(scale * tau) as a cone series in unit-1/8
// exponents. Odd characteristics give the zero series.
ConeSeries theta2(const ThetaChar& ch, Scale scale, int order);

// Genus-1 theta constant theta_{a,b}(scale * tau) with a, b in {0, 1} (halves
// of the usual characteristic); unit-8 exponents 2*scale*(2n+a)^2.
LaurentSeries1 theta1(int a, int b, Scale scale, int order);

// Eisenstein series E4, E6 of scale * tau (q = e^{2 pi i tau} at exponent 16*scale).
LaurentSeries1 eisenstein4(Scale scale, int order);
LaurentSeries1 eisenstein6(Scale scale, int order);
// eta(scale * tau)^24.
LaurentSeries1 eta24(Scale scale, int order);

// Graded ring element: series plus modular weight. Addition requires equal
// weights, multiplication adds them.
struct SiegelForm {
    ConeSeries series;
    int weight = 0;

    SiegelForm operator+(const SiegelForm& o) const {
        if (weight != o.weight) throw std::logic_error("SiegelForm: weight mismatch in sum");
        return {series + o.series, weight};
    }
    SiegelForm operator-(const SiegelForm& o) const {
        if (weight != o.weight) throw std::logic_error("SiegelForm: weight mismatch in sum");
        return {series - o.series, weight};
    }
    SiegelForm operator*(const SiegelForm& o) const {
        return {series * o.series, weight + o.weight};
    }
    SiegelForm scale(const Rational& c) const { return {series.scale(c), weight}; }
    SiegelForm pow(unsigned e) const { return {series.pow(e), weight * static_cast<int>(e)}; }
};

struct GenusOneForm {
    LaurentSeries1 series;
    int weight = 0;
};

// The six generators of the invariant ring, weights (2, 4, 4, 6, 4, 8).
struct Generators {
    SiegelForm theta;  // weight 2
    SiegelForm phi1;   // weight 4
    SiegelForm phi2;   // weight 4
    SiegelForm chi;    // weight 6
    SiegelForm phi;    // weight 4, phi1 + 1024*phi2
    SiegelForm psi;    // weight 8, phi1*phi2
};

Generators generators(int order);

// Restriction to tau = t*[[1, 1/2], [1/2, 1]]: term (p, m, r) lands at
// exponent p + m/2 + r of e^{pi i t/8}; certified through half the cone order.
// In the variable q = e^{pi i t/4} the monomial q^k sits at exponent 2k.
LaurentSeries1 restrict_diagonal(const SiegelForm& f);

// Restriction to the product locus tau2 = 0 (sum over m).
ProductSeries restrict_product(const SiegelForm& f);

// Siegel operator: tau3 -> i*infinity slice of restrict_product, unit 8 in tau1.
GenusOneForm siegel_phi(const SiegelForm& f);

// Numeric theta by direct lattice summation at a genus-2 period matrix
// [[t11, t12], [t12, t22]].
std::complex<double> theta2_numeric(const ThetaChar& ch, const std::complex<double>& t11,
                                    const std::complex<double>& t12,
                                    const std::complex<double>& t22, int box = 24);
std::complex<double> theta1_numeric(int a, int b, const std::complex<double>& tau,
                                    int box = 64);

}  // namespace hessk3
