#include "hessk3/surfaces.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hessk3/curve_lattice.hpp"

namespace hessk3 {

namespace {

const std::vector<std::string> kScalar{};

MultiPoly scalar(const Rational& c) { return MultiPoly::constant(kScalar, c); }

// Determinant by minor expansion along the top row.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m, std::size_t row,
                   const std::vector<std::size_t>& cols) {
    if (cols.size() == 1) return m[row][cols[0]];
    MultiPoly acc(m[0][0].vars());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        const MultiPoly term = m[row][cols[k]] * poly_det(m, row + 1, rest);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
    std::vector<std::size_t> cols(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) cols[j] = j;
    return poly_det(m, 0, cols);
}

// Moves the exponent of variable i to variable image[i].
MultiPoly permute_vars(const MultiPoly& f, const std::vector<std::size_t>& image) {
    MultiPoly out(f.vars());
    for (const auto& [e, c] : f.terms()) {
        MultiPoly::Exps ee(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ee[image[i]] += e[i];
        out += MultiPoly::monomial(f.vars(), ee, c);
    }
    return out;
}

HessianCheck proportionality(const MultiPoly& cubic, const std::array<std::size_t, 4>& xv,
                             const MultiPoly& target) {
    HessianCheck out;
    const MultiPoly hess = hessian_quartic(cubic, xv);
    const auto q = hess.divide_exact(target);
    if (!q) {
        out.detail = "Hessian is not a multiple of the displayed form";
        return out;
    }
    if (!q->is_constant() || q->is_zero()) {
        out.detail = "Hessian/displayed quotient is not a nonzero constant";
        return out;
    }
    out.ok = true;
    out.ratio = q->constant_value();
    out.detail = "Hessian = " + out.ratio.to_string() + " * displayed form";
    return out;
}

// A boundary line fixes two of the three P^1 coordinates (0 or oo, coded 0/1);
// at[free_axis] = -1.
struct GeomLine {
    int free_axis;
    std::array<int, 3> at;

    bool operator<(const GeomLine& o) const {
        return std::tie(free_axis, at) < std::tie(o.free_axis, o.at);
    }
    bool operator==(const GeomLine& o) const {
        return free_axis == o.free_axis && at == o.at;
    }
    bool through(const std::array<int, 3>& p) const {
        for (int k = 0; k < 3; ++k)
            if (k != free_axis && at[k] != p[k]) return false;
        return true;
    }
};

struct BoundaryGeometry {
    bool ok = false;
    std::string detail;
    std::vector<GeomLine> lines;                 // 12 distinct
    std::set<std::array<int, 3>> points;         // 8 triples
};

// Coordinate index of (axis, sub) in the toric ring: 3 + 2*axis + sub.
BoundaryGeometry boundary_geometry() {
    BoundaryGeometry out;
    const MultiPoly model = toric_model();
    const auto& ring = model.vars();
    std::map<GeomLine, int> seen;

    for (int axis = 0; axis < 3; ++axis) {
        for (int sub = 0; sub < 2; ++sub) {
            const std::size_t idx = 3 + 2 * axis + sub;
            MultiPoly restriction(ring);
            for (const auto& [e, c] : model.terms())
                if (e[idx] == 0) restriction += MultiPoly::monomial(ring, e, c);

            // expected: coefficient (u_axis when sub = 1), partner squared,
            // and the four transverse coordinates to the first power
            MultiPoly::Exps exps(9, 0);
            if (sub == 1) exps[axis] = 1;
            exps[3 + 2 * axis + (1 - sub)] = 2;
            for (int other = 0; other < 3; ++other) {
                if (other == axis) continue;
                exps[3 + 2 * other] = 1;
                exps[3 + 2 * other + 1] = 1;
            }
            if (!(restriction == MultiPoly::monomial(ring, exps, Rational(1)))) {
                out.detail = "unexpected restriction on divisor index " + std::to_string(idx);
                return out;
            }

            // the divisor coordinate vanishing pins the axis value:
            // sub = 0 kills the denominator coordinate, so the value is oo
            const int value = (sub == 0) ? 1 : 0;
            for (int other = 0; other < 3; ++other) {
                if (other == axis) continue;
                for (int osub = 0; osub < 2; ++osub) {
                    GeomLine line;
                    line.free_axis = 3 - axis - other;
                    line.at = {-1, -1, -1};
                    line.at[axis] = value;
                    line.at[other] = (osub == 0) ? 1 : 0;
                    ++seen[line];
                }
            }
        }
    }

    for (const auto& [line, count] : seen) {
        if (count != 2) {
            out.detail = "line " + std::to_string(line.free_axis) + " not seen exactly twice";
            return out;
        }
        out.lines.push_back(line);
    }
    if (out.lines.size() != 12) {
        out.detail = "expected 12 distinct lines, got " + std::to_string(out.lines.size());
        return out;
    }

    for (std::size_t i = 0; i < out.lines.size(); ++i) {
        for (std::size_t j = i + 1; j < out.lines.size(); ++j) {
            const GeomLine& a = out.lines[i];
            const GeomLine& b = out.lines[j];
            if (a.free_axis == b.free_axis) continue;  // parallel or equal
            const int shared = 3 - a.free_axis - b.free_axis;
            if (a.at[shared] != b.at[shared]) continue;
            std::array<int, 3> p{};
            p[shared] = a.at[shared];
            p[a.free_axis] = b.at[a.free_axis];
            p[b.free_axis] = a.at[b.free_axis];
            out.points.insert(p);
        }
    }
    out.ok = true;
    return out;
}

std::string line_name(const GeomLine& l) {
    int fixed[2];
    int p = 0;
    for (int i = 0; i < 3; ++i)
        if (i != l.free_axis) fixed[p++] = l.at[i];
    return CurveLabel::line(l.free_axis, fixed[0], fixed[1]).name();
}

}  // namespace

WPPoint::WPPoint(std::vector<int> w, std::vector<MultiPoly> c)
    : weights(std::move(w)), coords(std::move(c)) {
    if (weights.empty() || weights.size() != coords.size())
        throw std::invalid_argument("WPPoint: weight/coordinate size mismatch");
    for (const MultiPoly& p : coords)
        if (!p.is_zero()) return;
    throw std::domain_error("WPPoint: all coordinates vanish");
}

bool wp_eq(const WPPoint& p, const WPPoint& q, const Rational& lambda) {
    if (p.weights != q.weights) return false;
    for (std::size_t i = 0; i < p.coords.size(); ++i)
        if (!(q.coords[i] == p.coords[i].scale(lambda.pow(p.weights[i])))) return false;
    return true;
}

WPPoint sylvester_invariants(const std::array<MultiPoly, 5>& s) {
    const MultiPoly i8 = s[3] * s[3] - (s[2] * s[4]).scale(Rational(4));
    const MultiPoly i16 = s[4].pow(3) * s[0];
    const MultiPoly i24 = s[4].pow(4) * s[3];
    const MultiPoly i32 = s[4].pow(6) * s[1];
    const MultiPoly i40 = s[4].pow(8);
    return WPPoint({1, 2, 3, 4, 5}, {i8, i16, i24, i32, i40});
}

WPPoint ns1_point(const MultiPoly& a0, const MultiPoly& rho1, const MultiPoly& rho2,
                  const MultiPoly& rho3) {
    const MultiPoly zero(a0.vars());
    return WPPoint({1, 2, 3, 4, 5},
                   {rho1.scale(Rational(-4)) + a0 * a0, rho2, rho3.scale(Rational(2)),
                    rho1 * rho3, zero});
}

WPPoint ns2_point(const MultiPoly& b0, const MultiPoly& b1) {
    const MultiPoly zero(b0.vars());
    const MultiPoly one = MultiPoly::constant(b0.vars(), 1);
    return WPPoint({1, 2, 3, 4, 5},
                   {b0.scale(Rational(-8)), one + b1.pow(3), zero, b1.pow(3), zero});
}

WPPoint cyclic_point(const MultiPoly& mu2, const MultiPoly& mu3, const MultiPoly& mu4) {
    const MultiPoly zero(mu2.vars());
    return WPPoint({1, 2, 3, 4, 5},
                   {mu3 * mu3 - (mu2 * mu4).scale(Rational(4)), mu4.pow(3), zero, zero, zero});
}

PolyCheck sylvester_roundtrip() {
    PolyCheck out;
    const std::vector<std::string> ring{"s1", "s2", "s3", "s4", "s5"};
    std::array<MultiPoly, 5> s{
        MultiPoly::variable(ring, 0), MultiPoly::variable(ring, 1), MultiPoly::variable(ring, 2),
        MultiPoly::variable(ring, 3), MultiPoly::variable(ring, 4)};
    const WPPoint p = sylvester_invariants(s);
    const std::array<MultiPoly, 5> expected{
        s[3] * s[3] - (s[2] * s[4]).scale(Rational(4)), s[4].pow(3) * s[0], s[4].pow(4) * s[3],
        s[4].pow(6) * s[1], s[4].pow(8)};
    for (std::size_t i = 0; i < 5; ++i) {
        if (!(p.coords[i] == expected[i])) {
            out.detail = "coordinate " + std::to_string(i) + " transcription mismatch";
            return out;
        }
    }

    // elementary symmetric functions of (1,1,1,1,1)
    std::array<MultiPoly, 5> vals{scalar(Rational(5)), scalar(Rational(10)), scalar(Rational(10)),
                                  scalar(Rational(5)), scalar(Rational(1))};
    const WPPoint fermat_type = sylvester_invariants(vals);
    const std::array<Rational, 5> want{Rational(-15), Rational(5), Rational(5), Rational(10),
                                       Rational(1)};
    for (std::size_t i = 0; i < 5; ++i) {
        if (!(fermat_type.coords[i] == scalar(want[i]))) {
            out.detail = "sigma(1,1,1,1,1) coordinate " + std::to_string(i) + " mismatch";
            return out;
        }
    }

    // base locus s4 = s5 = 0: every invariant vanishes, not a projective point
    std::array<MultiPoly, 5> base{scalar(Rational(1)), scalar(Rational(1)), scalar(Rational(1)),
                                  scalar(Rational(0)), scalar(Rational(0))};
    try {
        sylvester_invariants(base);
        out.detail = "base locus was not rejected";
        return out;
    } catch (const std::domain_error&) {
    }
    out.ok = true;
    out.detail = "transcription, sigma(1,1,1,1,1) = [-15:5:5:10:1], base-locus guard";
    return out;
}

PolyCheck stratum_loci() {
    PolyCheck out;
    const std::vector<std::string> aring{"a0", "r1", "r2", "r3"};
    const WPPoint ns1 =
        ns1_point(MultiPoly::variable(aring, 0), MultiPoly::variable(aring, 1),
                  MultiPoly::variable(aring, 2), MultiPoly::variable(aring, 3));
    if (!ns1.coords[4].is_zero()) {
        out.detail = "ns1 does not land in {I40 = 0}";
        return out;
    }

    const std::vector<std::string> bring{"b0", "b1"};
    const WPPoint ns2 = ns2_point(MultiPoly::variable(bring, 0), MultiPoly::variable(bring, 1));
    if (!ns2.coords[2].is_zero() || !ns2.coords[4].is_zero()) {
        out.detail = "ns2 does not land in {I24 = I40 = 0}";
        return out;
    }

    const std::vector<std::string> mring{"m2", "m3", "m4"};
    const WPPoint cyc = cyclic_point(MultiPoly::variable(mring, 0), MultiPoly::variable(mring, 1),
                                     MultiPoly::variable(mring, 2));
    if (!cyc.coords[2].is_zero() || !cyc.coords[3].is_zero() || !cyc.coords[4].is_zero()) {
        out.detail = "cyclic does not land in {I24 = I32 = I40 = 0}";
        return out;
    }

    // mu3 = mu4 = 0 collapses every coordinate: rejected
    try {
        cyclic_point(scalar(Rational(1)), scalar(Rational(0)), scalar(Rational(0)));
        out.detail = "degenerate cyclic input was not rejected";
        return out;
    } catch (const std::domain_error&) {
    }

    // the strictly semistable point
    const WPPoint witness = ns2_point(scalar(Rational(-1)), scalar(Rational(0)));
    const WPPoint target({1, 2, 3, 4, 5},
                         {scalar(Rational(8)), scalar(Rational(1)), MultiPoly(kScalar),
                          MultiPoly(kScalar), MultiPoly(kScalar)});
    if (!wp_eq(target, witness, Rational(1))) {
        out.detail = "ns2(-1,0) != [8:1:0:0:0]";
        return out;
    }
    out.ok = true;
    out.detail = "ns1 in {I40=0}, ns2 in {I24=I40=0}, cyclic in {I24=I32=I40=0}; ns2(-1,0) = [8:1:0:0:0]";
    return out;
}

namespace {

// Coordinates [-4 s1 + 1 : s2 : 2 s3 : s1 s3] from elementary symmetric data.
std::vector<MultiPoly> dvg_coords(const MultiPoly& s1, const MultiPoly& s2, const MultiPoly& s3) {
    const MultiPoly one = MultiPoly::constant(s1.vars(), 1);
    return {s1.scale(Rational(-4)) + one, s2, s3.scale(Rational(2)), s1 * s3};
}

}  // namespace

WPPoint dvg_map() {
    const std::vector<std::string> ring{"u1", "u2", "u3"};
    const MultiPoly u1 = MultiPoly::variable(ring, 0);
    const MultiPoly u2 = MultiPoly::variable(ring, 1);
    const MultiPoly u3 = MultiPoly::variable(ring, 2);
    return WPPoint({1, 2, 3, 4}, dvg_coords(u1 + u2 + u3, u1 * u2 + u2 * u3 + u3 * u1,
                                            u1 * u2 * u3));
}

PolyCheck ns1_dvg_consistency() {
    PolyCheck out;
    const WPPoint dvg = dvg_map();
    const std::vector<std::string> ring{"u1", "u2", "u3"};
    const MultiPoly u1 = MultiPoly::variable(ring, 0);
    const MultiPoly u2 = MultiPoly::variable(ring, 1);
    const MultiPoly u3 = MultiPoly::variable(ring, 2);
    const WPPoint ns1 = ns1_point(MultiPoly::constant(ring, 1), u1 + u2 + u3,
                                  u1 * u2 + u2 * u3 + u3 * u1, u1 * u2 * u3);
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(ns1.coords[i] == dvg.coords[i])) {
            out.detail = "coordinate " + std::to_string(i) + " differs";
            return out;
        }
    }
    if (!ns1.coords[4].is_zero()) {
        out.detail = "fifth coordinate nonzero";
        return out;
    }
    out.ok = true;
    out.detail = "ns1(1, s1, s2, s3) has the map's four coordinates and I40 = 0";
    return out;
}

PolyCheck dvg_specialize_hps() {
    PolyCheck out;
    const std::vector<std::string> ring{"u"};
    const MultiPoly u = MultiPoly::variable(ring, 0);
    const MultiPoly one = MultiPoly::constant(ring, 1);
    // equal parameters: s1 = 3u, s2 = 3u^2, s3 = u^3
    const std::vector<MultiPoly> got =
        dvg_coords(u.scale(Rational(3)), (u * u).scale(Rational(3)), u.pow(3));
    const std::vector<MultiPoly> want{one - u.scale(Rational(12)), (u * u).scale(Rational(3)),
                                      u.pow(3).scale(Rational(2)), u.pow(4).scale(Rational(3))};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(got[i] == want[i])) {
            out.detail = "coordinate " + std::to_string(i) + " differs";
            return out;
        }
    }
    const std::vector<Rational> origin{Rational(0)};
    if (got[0].eval(origin) != Rational(1) || !got[1].eval(origin).is_zero() ||
        !got[2].eval(origin).is_zero() || !got[3].eval(origin).is_zero()) {
        out.detail = "u = 0 does not land on [1:0:0:0]";
        return out;
    }
    out.ok = true;
    out.detail = "[-12u+1 : 3u^2 : 2u^3 : 3u^4] as polynomial identities; u = 0 gives [1:0:0:0]";
    return out;
}

MultiPoly hessian_quartic(const MultiPoly& cubic, const std::array<std::size_t, 4>& xvars) {
    const std::vector<std::size_t> xs(xvars.begin(), xvars.end());
    if (!cubic.is_weighted_homogeneous(xs, {1, 1, 1, 1}, 3))
        throw std::invalid_argument("hessian_quartic: not a cubic form in the given variables");
    std::vector<std::vector<MultiPoly>> m(4, std::vector<MultiPoly>(4, MultiPoly(cubic.vars())));
    for (std::size_t i = 0; i < 4; ++i) {
        const MultiPoly di = cubic.derivative(xvars[i]);
        for (std::size_t j = i; j < 4; ++j) {
            m[i][j] = di.derivative(xvars[j]);
            m[j][i] = m[i][j];
        }
    }
    return poly_det(m);
}

HessianCheck hessian_ns1() {
    const std::vector<std::string> ring{"a0", "a1", "a2", "a3", "X0", "X1", "X2", "X3"};
    std::vector<MultiPoly> v;
    for (std::size_t i = 0; i < 8; ++i) v.push_back(MultiPoly::variable(ring, i));
    const MultiPoly &a0 = v[0], &a1 = v[1], &a2 = v[2], &a3 = v[3];
    const MultiPoly &x0 = v[4], &x1 = v[5], &x2 = v[6], &x3 = v[7];

    const MultiPoly cubic =
        x1.pow(3) + x2.pow(3) + x3.pow(3) -
        x0 * x0 * (a0 * x0 + (a1 * x1 + a2 * x2 + a3 * x3).scale(Rational(3)));
    const MultiPoly target = x1 * x2 * x3 * (a1 * x1 + a2 * x2 + a3 * x3) +
                             a0 * x0 * x1 * x2 * x3 +
                             x0 * x0 * (a1 * a1 * x2 * x3 + a2 * a2 * x1 * x3 + a3 * a3 * x1 * x2);
    return proportionality(cubic, {4, 5, 6, 7}, target);
}

HessianCheck hessian_ns2() {
    const std::vector<std::string> ring{"b0", "b1", "X0", "X1", "X2", "X3"};
    std::vector<MultiPoly> v;
    for (std::size_t i = 0; i < 6; ++i) v.push_back(MultiPoly::variable(ring, i));
    const MultiPoly &b0 = v[0], &b1 = v[1];
    const MultiPoly &x0 = v[2], &x1 = v[3], &x2 = v[4], &x3 = v[5];

    const MultiPoly cubic = x1.pow(3) + x2.pow(3) + (b0 * x3.pow(3)).scale(Rational(2)) -
                            (x3 * (b1 * x1 * x3 + x2 * x3 + x0 * x0)).scale(Rational(3));
    const MultiPoly target = x1 * x2 * x3 * (b0.scale(Rational(-2)) * x3 + b1 * x1 + x2) +
                             x3.pow(3) * (x1 + b1 * b1 * x2) - x0 * x0 * x1 * x2;
    return proportionality(cubic, {2, 3, 4, 5}, target);
}

HessianCheck hessian_fermat() {
    const std::vector<std::string> ring{"X0", "X1", "X2", "X3"};
    std::vector<MultiPoly> v;
    for (std::size_t i = 0; i < 4; ++i) v.push_back(MultiPoly::variable(ring, i));
    const MultiPoly cubic = v[0].pow(3) + v[1].pow(3) + v[2].pow(3) + v[3].pow(3);
    const MultiPoly target = v[0] * v[1] * v[2] * v[3];
    return proportionality(cubic, {0, 1, 2, 3}, target);
}

HessianCheck hessian_sylvester() {
    const std::vector<std::string> ring{"l0", "l1", "l2", "l3", "l4", "X0", "X1", "X2", "X3"};
    std::vector<MultiPoly> l, x;
    for (std::size_t i = 0; i < 5; ++i) l.push_back(MultiPoly::variable(ring, i));
    for (std::size_t i = 5; i < 9; ++i) x.push_back(MultiPoly::variable(ring, i));

    // the hyperplane chart X4 = -(X0 + X1 + X2 + X3)
    const MultiPoly x4 = -(x[0] + x[1] + x[2] + x[3]);
    MultiPoly cubic = l[4] * x4.pow(3);
    for (std::size_t i = 0; i < 4; ++i) cubic += l[i] * x[i].pow(3);

    // 1/(l0 X0) + ... + 1/(l4 X4) = 0 cleared of denominators
    std::vector<MultiPoly> lx{l[0] * x[0], l[1] * x[1], l[2] * x[2], l[3] * x[3], l[4] * x4};
    MultiPoly target(ring);
    for (std::size_t i = 0; i < 5; ++i) {
        MultiPoly prod = MultiPoly::constant(ring, 1);
        for (std::size_t j = 0; j < 5; ++j)
            if (j != i) prod = prod * lx[j];
        target += prod;
    }
    return proportionality(cubic, {5, 6, 7, 8}, target);
}

PolyCheck hessian_equivariance() {
    PolyCheck out;
    const std::vector<std::string> ring{"a0", "a1", "a2", "a3", "X0", "X1", "X2", "X3"};
    std::vector<MultiPoly> v;
    for (std::size_t i = 0; i < 8; ++i) v.push_back(MultiPoly::variable(ring, i));
    const MultiPoly cubic =
        v[5].pow(3) + v[6].pow(3) + v[7].pow(3) -
        v[4] * v[4] * (v[0] * v[4] + (v[1] * v[5] + v[2] * v[6] + v[3] * v[7]).scale(Rational(3)));
    const std::array<std::size_t, 4> xv{4, 5, 6, 7};
    const MultiPoly hess = hessian_quartic(cubic, xv);

    const std::vector<std::vector<std::size_t>> perms{
        {0, 1, 2, 3, 4, 6, 5, 7},   // X1 <-> X2
        {0, 1, 2, 3, 4, 6, 7, 5}};  // X1 -> X2 -> X3 -> X1
    for (const auto& image : perms) {
        if (!(hessian_quartic(permute_vars(cubic, image), xv) == permute_vars(hess, image))) {
            out.detail = "Hessian does not commute with an X-variable permutation";
            return out;
        }
    }
    out.ok = true;
    out.detail = "Hessian commutes with a transposition and a 3-cycle of the X variables";
    return out;
}

MultiPoly toric_model() {
    const std::vector<std::string> aff{"u1", "u2", "u3", "x", "y", "z"};
    const MultiPoly x = MultiPoly::variable(aff, 3);
    const MultiPoly y = MultiPoly::variable(aff, 4);
    const MultiPoly z = MultiPoly::variable(aff, 5);
    const MultiPoly f = x * y * z * (x + y + z + MultiPoly::constant(aff, 1)) +
                        MultiPoly::variable(aff, 0) * y * z +
                        MultiPoly::variable(aff, 1) * z * x +
                        MultiPoly::variable(aff, 2) * x * y;

    const std::vector<std::string> tri{"u1", "u2", "u3", "x0", "x1", "y0", "y1", "z0", "z1"};
    MultiPoly out(tri);
    for (const auto& [e, c] : f.terms()) {
        if (e[3] > 2 || e[4] > 2 || e[5] > 2)
            throw std::logic_error("toric_model: affine degree exceeds 2");
        out += MultiPoly::monomial(
            tri, {e[0], e[1], e[2], 2 - e[3], e[3], 2 - e[4], e[4], 2 - e[5], e[5]}, c);
    }
    for (const auto& [e, c] : out.terms())
        if (e[3] + e[4] != 2 || e[5] + e[6] != 2 || e[7] + e[8] != 2)
            throw std::logic_error("toric_model: output is not of tri-degree (2,2,2)");
    return out;
}

BoundaryReport boundary_lines() {
    BoundaryReport out;
    const BoundaryGeometry geo = boundary_geometry();
    if (!geo.ok) {
        out.detail = geo.detail;
        return out;
    }
    out.line_count = static_cast<int>(geo.lines.size());
    out.point_count = static_cast<int>(geo.points.size());
    for (const GeomLine& l : geo.lines) out.lines.push_back(line_name(l));
    std::sort(out.lines.begin(), out.lines.end());
    out.ok = out.line_count == 12 && out.point_count == 8;
    out.detail = out.ok ? "six boundary restrictions factor into twelve lines through eight points"
                        : "unexpected boundary line/point counts";
    return out;
}

SingularReport singular_points() {
    SingularReport out;
    const MultiPoly model = toric_model();
    const std::vector<std::string> chart{"u1", "u2", "u3", "X", "Y", "Z"};
    const MultiPoly one = MultiPoly::constant(chart, 1);

    for (int mask = 0; mask < 8; ++mask) {
        const int a = mask & 1, b = (mask >> 1) & 1, c = (mask >> 2) & 1;  // 1 = oo
        MultiPoly local(chart);
        for (const auto& [e, coef] : model.terms()) {
            // chart at the fixed point: the vanishing local coordinate is x1
            // near 0 and x0 near oo
            const int ex = (a == 0) ? e[4] : e[3];
            const int ey = (b == 0) ? e[6] : e[5];
            const int ez = (c == 0) ? e[8] : e[7];
            local += MultiPoly::monomial(chart, {e[0], e[1], e[2], ex, ey, ez}, coef);
        }

        MultiPoly mxy(chart), mxz(chart), myz(chart);
        for (const auto& [e, coef] : local.terms()) {
            const int d = e[3] + e[4] + e[5];
            if (d < 2) {
                out.detail = "nonvanishing constant or linear part in a chart";
                return out;
            }
            if (d != 2) continue;
            if (e[3] == 2 || e[4] == 2 || e[5] == 2) {
                out.detail = "nonzero diagonal entry in a local quadratic part";
                return out;
            }
            const MultiPoly mono = MultiPoly::monomial(chart, {e[0], e[1], e[2], 0, 0, 0}, coef);
            if (e[3] == 1 && e[4] == 1) mxy += mono;
            if (e[3] == 1 && e[5] == 1) mxz += mono;
            if (e[4] == 1 && e[5] == 1) myz += mono;
        }

        const MultiPoly exy = (c == 0) ? MultiPoly::variable(chart, 2) : one;
        const MultiPoly exz = (b == 0) ? MultiPoly::variable(chart, 1) : one;
        const MultiPoly eyz = (a == 0) ? MultiPoly::variable(chart, 0) : one;
        if (!(mxy == exy) || !(mxz == exz) || !(myz == eyz)) {
            out.detail = "quadratic part does not follow the (u3, u2, u1) entry pattern";
            return out;
        }

        const MultiPoly zero(chart);
        const MultiPoly det = poly_det({{zero, mxy, mxz}, {mxy, zero, myz}, {mxz, myz, zero}});
        if (!(det == (exy * exz * eyz).scale(Rational(2))) || det.is_zero()) {
            out.detail = "local quadratic part is not a nondegenerate cone";
            return out;
        }
        ++out.count;
    }
    out.ok = out.count == 8;
    out.detail = "eight torus-fixed points, each an A1 cone with determinant 2 * (u-monomial)";
    return out;
}

PolyCheck incidence_matches_lattice() {
    PolyCheck out;
    const BoundaryGeometry geo = boundary_geometry();
    if (!geo.ok) {
        out.detail = geo.detail;
        return out;
    }
    const CurveConfig cfg;

    std::set<std::string> generated;
    for (const GeomLine& l : geo.lines) generated.insert(line_name(l));
    std::set<std::string> configured;
    for (const CurveLabel& l : cfg.labels())
        if (l.kind == CurveLabel::Kind::Line) configured.insert(l.name());
    if (generated != configured) {
        out.detail = "boundary lines differ from the configured line labels";
        return out;
    }

    std::set<std::array<int, 3>> config_points;
    for (const CurveLabel& l : cfg.labels())
        if (l.kind == CurveLabel::Kind::Exceptional) config_points.insert(l.at);
    if (geo.points != config_points) {
        out.detail = "line intersection points differ from the exceptional labels";
        return out;
    }

    const auto& labels = cfg.labels();
    const ZMatrix& gram = cfg.gram();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].kind != CurveLabel::Kind::Line) continue;
        GeomLine line;
        line.free_axis = labels[i].axis;
        line.at = labels[i].at;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (labels[j].kind != CurveLabel::Kind::Exceptional) continue;
            const mpz_class expected = line.through(labels[j].at) ? 1 : 0;
            if (gram.at(i, j) != expected || gram.at(j, i) != expected) {
                out.detail = "Gram entry differs from boundary incidence at (" +
                             labels[i].name() + ", " + labels[j].name() + ")";
                return out;
            }
        }
    }
    out.ok = true;
    out.detail = "twelve lines, eight points, and the E.L block agree with the curve configuration";
    return out;
}

}  // namespace hessk3
