#pragma once

#include <string>
#include <vector>

#include "hessk3/multipoly.hpp"

namespace hessk3 {

// Truncated multivariate series ride on MultiPoly; every operation below
// maintains an explicit total-degree bound.
using SeriesMulti = MultiPoly;

mpz_class factorial_z(unsigned n);
Rational pochhammer(const Rational& a, unsigned n);
// Generalized binomial a(a-1)...(a-k+1)/k!.
Rational binomial_general(const Rational& a, unsigned k);

// Lauricella F_C(1, 1/2; 1,1,1; x1, x2, x3) to total degree order; the
// argument scaling is applied by the caller.
SeriesMulti fc_series(int order);
// Appell F_4(1, 1/2; 1,1; x1, x2) to total degree order.
SeriesMulti f4_series(int order);
// Gauss 2F1(a, b; c; t) to degree order. Rejects nonpositive-integer c.
SeriesMulti gauss_2f1(const Rational& a, const Rational& b, const Rational& c, int order);

// Constant-term oracle: the coefficient of x^q y^r z^p in the geometric
// expansion of (1 + x + y + z)^{-(p+q+r+1)}, i.e. the triple residue
// N(p,q,r)/(2 pi i)^3 for the period of the affine Hessian family.
Rational constant_term_N(int p, int q, int r);
// Two-variable analogue for the (2,2)-curve family: coefficient of x^p y^q
// in (1 + x + y)^{-(p+q+1)}.
Rational constant_term_N2(int p, int q);
// Unsigned closed form (2p+2q+2r)!/((p+q+r)! p! q! r!).
Rational n_prime_closed_form(int p, int q, int r);

// Period expansions assembled from the oracle values, in u1,u2,u3 (resp.
// u1,u2); all coefficients positive.
SeriesMulti period_series_3d(int order);
SeriesMulti period_series_2d(int order);

// The 2d period series equals the 3d one on the plane u3 = 0, termwise.
bool periods_2d_3d_consistent(int order);

// Argument-scaling search: which scalar s makes F_C(1,1/2;1,1,1;s*u) match
// the oracle period series. The quoted scale -2 is tabulated with residuals.
struct FcScaling {
    struct Residual {
        std::vector<int> exps;  // (p, q, r)
        Rational oracle;        // period-series coefficient
        Rational series;        // F_C coefficient at the quoted scale
    };
    std::vector<Rational> matching;  // all scales in the search set that match
    bool unique_match = false;
    Rational quoted_scale;           // -2 as printed in the derivation under test
    std::vector<Residual> residuals; // oracle vs quoted-scale terms, degree <= 2
};
FcScaling match_fc_scaling(const SeriesMulti& period, int order);

struct PolyCheck {
    bool ok = false;
    std::string detail;
};

// F_C(x1, x2, 0) = F_4(x1, x2) termwise to total degree order.
PolyCheck verify_fc_f4_specialization(int order);

// F_4(1,1/2;1,1; -x/((1-x)(1-y)), -y/((1-x)(1-y)))
//   = (1-x)^{1/2} (1-y)^{1/2} 2F1(1/2,1/2;1;xy) to total degree order.
PolyCheck verify_f4_reduction(int order);

}  // namespace hessk3
