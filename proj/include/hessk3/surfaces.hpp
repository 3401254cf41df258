#pragma once

#include <array>

#include "hessk3/elliptic.hpp"

namespace hessk3 {

// Point of a weighted projective space with polynomial coordinates.
// Construction rejects the all-zero tuple.
struct WPPoint {
    std::vector<int> weights;
    std::vector<MultiPoly> coords;
    WPPoint(std::vector<int> w, std::vector<MultiPoly> c);
};

// q_i = lambda^{w_i} p_i for all i, with an explicit witness scalar.
bool wp_eq(const WPPoint& p, const WPPoint& q, const Rational& lambda);

// [s4^2 - 4 s3 s5 : s5^3 s1 : s5^4 s4 : s5^6 s2 : s5^8], weights (1,2,3,4,5).
WPPoint sylvester_invariants(const std::array<MultiPoly, 5>& sigma);
// [-4 rho1 + a0^2 : rho2 : 2 rho3 : rho1 rho3 : 0].
WPPoint ns1_point(const MultiPoly& a0, const MultiPoly& rho1, const MultiPoly& rho2,
                  const MultiPoly& rho3);
// [-8 b0 : 1 + b1^3 : 0 : b1^3 : 0].
WPPoint ns2_point(const MultiPoly& b0, const MultiPoly& b1);
// [mu3^2 - 4 mu2 mu4 : mu4^3 : 0 : 0 : 0].
WPPoint cyclic_point(const MultiPoly& mu2, const MultiPoly& mu3, const MultiPoly& mu4);

// Transcription round-trip of the invariant formulas, the sigma(1,1,1,1,1)
// evaluation [-15:5:5:10:1], and the base-locus guard at s4 = s5 = 0.
PolyCheck sylvester_roundtrip();

// Vanishing-locus patterns of the three stratum maps, the degenerate-input
// guard, and the semistable witness ns2(-1,0) = [8:1:0:0:0].
PolyCheck stratum_loci();

// [-4 s1 + 1 : s2 : 2 s3 : s1 s3] in the elementary symmetric functions of
// u1, u2, u3; weights (1,2,3,4).
WPPoint dvg_map();
// dvg_map coordinates agree with ns1_point(1, s1, s2, s3).
PolyCheck ns1_dvg_consistency();
// At u1 = u2 = u3 = u the map lands on [-12u+1 : 3u^2 : 2u^3 : 3u^4].
PolyCheck dvg_specialize_hps();

// Determinant of the 4x4 matrix of second partials with respect to the four
// listed variables; requires the input to be a cubic form in them.
MultiPoly hessian_quartic(const MultiPoly& cubic, const std::array<std::size_t, 4>& xvars);

struct HessianCheck {
    bool ok = false;
    Rational ratio;     // Hessian / target, a nonzero constant when ok
    std::string detail;
};
HessianCheck hessian_ns1();        // target: the displayed H form, cleared
HessianCheck hessian_ns2();
HessianCheck hessian_fermat();     // target: X0 X1 X2 X3
HessianCheck hessian_sylvester();  // X4-eliminated complete intersection
PolyCheck hessian_equivariance();  // permuting the X variables permutes the Hessian

// Tri-homogenization of xyz(x+y+z+1) + u1 yz + u2 zx + u3 xy to degree
// (2,2,2) in (x0:x1), (y0:y1), (z0:z1); ring (u1,u2,u3,x0,x1,y0,y1,z0,z1).
MultiPoly toric_model();

struct BoundaryReport {
    bool ok = false;
    int line_count = 0;   // expected 12
    int point_count = 0;  // expected 8
    std::vector<std::string> lines;
    std::string detail;
};
// Restriction of the toric model to each of the six boundary divisors
// factors into four coordinate lines; collects the twelve lines and their
// eight pairwise intersection points.
BoundaryReport boundary_lines();

struct SingularReport {
    bool ok = false;
    int count = 0;  // expected 8
    std::string detail;
};
// Local quadratic part at each torus-fixed point: symmetric matrix with zero
// diagonal whose determinant is 2 times a product of u's, so each point is an
// A1 singularity whenever u1 u2 u3 != 0.
SingularReport singular_points();

// The boundary incidence (line through point) regenerates the exceptional/line
// block of the CurveConfig Gram matrix.
PolyCheck incidence_matches_lattice();

}  // namespace hessk3
