#pragma once

#include "hessk3/hypergeom.hpp"

namespace hessk3 {

// Classical invariants of the binary quartic a X^4 + 4b X^3 + 6c X^2 + 4d X + e.
// All five coefficients must live in the same polynomial ring.
struct QuarticInvariants {
    MultiPoly g2;    // ae - 4bd + 3c^2
    MultiPoly g3;    // det [[a,b,c],[b,c,d],[c,d,e]]
    MultiPoly disc;  // g2^3 - 27 g3^2
};
QuarticInvariants quartic_invariants(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c,
                                     const MultiPoly& d, const MultiPoly& e);

// The quartic X^4 + X^3 + (-u2 + u1/2 + 1/4) X^2 + (u1/4) X + u1^2/16 of the
// elliptic fibration attached to the (2,2)-curve family, as
// (a, 4b, 6c, 4d, e) coefficients over Q[u1, u2].
struct QuarticFamily {
    MultiPoly a, b, c, d, e;
};
QuarticFamily elliptic_family();

// g2 = ((1-4u1-4u2)^2 - 48u1u2)/192, the matching g3, and
// disc = u1^2 u2^2 ((1-4u1-4u2)^2 - 64u1u2)/4096 as polynomial identities.
PolyCheck verify_family_invariants();

// X -> lambda X rescales (g2, g3, disc) with weights (4, 6, 12); verified on
// generic symbolic coefficients.
PolyCheck verify_invariant_weights();

// disc factors as (u1 u2)^2/4096 times the weight-2 form A^2 - 64B in
// A = 1-4u1-4u2, B = u1u2, so the singular fibers sit at [A:B] = [1:0] and
// [8:1] in P(1,2).
PolyCheck verify_singular_fibers();

// Product of the eight factors 1 +- 2s1 +- 2s2 +- 2s3 expanded in
// Q[u][s1,s2,s3]/(s_i^2 - u_i); the reduced form is checked to be fixed by
// every sign flip and free of residual roots before being read in Q[u].
MultiPoly delta_sing();

// delta_sing(u1, u2, 0) = ((1-4u1-4u2)^2 - 64u1u2)^2 = (4096 disc/(u1 u2)^2)^2.
PolyCheck verify_degeneration();

// f_u(s1,s2,s3) = s1 s2 s3 (1 + 2s1 + 2s2 + 2s3) in the quotient ring, so an
// involution fixed point lies on H(u) exactly when a delta_sing factor
// vanishes; includes the (1/36,1/36,1/36) and (1,1,1) evaluations.
PolyCheck enriques_fixed_points();

}  // namespace hessk3
