#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hessk3/theta.hpp"

namespace hessk3 {

// Verdict for one named series identity; detail carries the first differing
// exponent on failure.
struct IdentityCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

// The ten duplication identities expressing theta_{c}(tau/2)^2 through
// scale-one theta products.
std::vector<IdentityCheck> igusa_duplication(int order);

// Genus-1 duplications theta(2*tau)^2 = ... and the Jacobi quartic relation.
std::vector<IdentityCheck> genus1_relations(int order);

// The product of the three pair-differences of squared a=0 theta constants
// against chi.
struct ChiProduct {
    bool matches = false;          // product == 4096 * chi exactly
    Rational c;                    // leading-term ratio product / (4096 chi)
    bool restriction_zero = false; // both sides restrict to 0 on tau2 = 0
};
ChiProduct chi_product(int order);

// Rank of the weight-6 monomials theta^3, theta*phi1, theta*phi2 restricted
// to the product locus; chi restricts to zero and keeps the rank at 3.
struct M6Restriction {
    std::size_t rank_without_chi = 0;
    std::size_t rank_with_chi = 0;
    bool chi_restricts_to_zero = false;
};
M6Restriction m6_restriction(int order);

// Product-locus restrictions as outer products of genus-1 series.
std::vector<IdentityCheck> product_factorizations(int order);

// Images under the Siegel operator and the injectivity data on the
// complement of its kernel in weight 8.
struct PhiImages {
    GenusOneForm h1;              // Phi(8 theta)
    GenusOneForm h2;              // Phi(theta^2 - phi)
    bool h1_matches = false;      // == 4(theta00^4 + theta01^4)
    bool h2_matches = false;      // == (theta00^4 - theta01^4)^2 / 4
    bool phi2_zero = false;
    bool chi_zero = false;
    bool psi_zero = false;
    bool theta_chi_zero = false;
    std::size_t complement_rank = 0;  // images of theta^4, theta^2*phi, phi^2
};
PhiImages phi_images(int order);

// Genus-1 closed forms for the Siegel images, built directly from theta1.
LaurentSeries1 h1_series(int order);
LaurentSeries1 h2_series(int order);

// The Eisenstein/eta identities satisfied by h1, h2. All eta factors enter
// as 24th powers, and the E6 row carries the sign the series force;
// nonzero_coeffs counts the nonzero coefficients both sides share on the
// common truncation, note records any deviation from the quoted form.
struct HIdentity {
    std::string name;
    bool ok = false;
    std::size_t nonzero_coeffs = 0;
    std::string note;
};
std::vector<HIdentity> h_identities(int order);

// Constants of the weighted-projective embedding, determined by exact linear
// algebra on diagonal-restricted coefficients.
struct ThetaConstants {
    Rational c4, c5;  // F8 = c4*theta*chi + c5*psi from F4^2 = 3*F8
    Rational c;       // F6 = c*chi, positive root of the quadratic condition
    bool f4_sq_3f8 = false;    // F4^2 = 3*F8 on the diagonal, full truncation
    bool f6_relation = false;  // 9*F6^2 = 4*F4*F8 on the diagonal
};
ThetaConstants determine_theta_constants(int order);

// Diagonal expansions in q = e^{pi i t/4} (exponent 2k for q^k): the
// generators and the tabulated weight-4 combination (theta^2 - phi)/192.
struct DiagonalSeries {
    LaurentSeries1 theta, phi, chi, psi;
    LaurentSeries1 weight4;
};
DiagonalSeries diagonal_series(int order);

// Numeric cusp data: h1, h2 at tau = -1/(2*3i) = i/6 and h1 at 6i.
struct CuspNumeric {
    std::complex<double> h1, h2;
    double ratio_error = 0.0;  // |64 h2 / h1^2 - 1| against [8:1] in P(2,4)
    double h1_error = 0.0;     // |h1(6i) - 8|
};
CuspNumeric cusp_numeric();

// Max deviation between series evaluation and direct lattice summation of
// theta at fixed sample points.
double series_vs_lattice_error(int order);

}  // namespace hessk3
