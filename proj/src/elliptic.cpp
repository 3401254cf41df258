#include "hessk3/elliptic.hpp"

#include <stdexcept>

namespace hessk3 {

namespace {

const std::vector<std::string> kU2{"u1", "u2"};
const std::vector<std::string> kUS{"u1", "u2", "u3", "s1", "s2", "s3"};
const std::vector<std::string> kU3{"u1", "u2", "u3"};

// Normal form in Q[u][s1,s2,s3]/(s_i^2 - u_i): every s-exponent reduced below 2.
MultiPoly reduce_roots(const MultiPoly& f) {
    MultiPoly out(f.vars());
    for (const auto& [e, c] : f.terms()) {
        MultiPoly::Exps ee = e;
        for (std::size_t i = 0; i < 3; ++i) {
            ee[i] += ee[3 + i] / 2;
            ee[3 + i] %= 2;
        }
        out += MultiPoly::monomial(f.vars(), ee, c);
    }
    return out;
}

MultiPoly flip_root_sign(const MultiPoly& f, std::size_t i) {
    MultiPoly out(f.vars());
    for (const auto& [e, c] : f.terms())
        out += MultiPoly::monomial(f.vars(), e, e[3 + i] % 2 == 0 ? c : -c);
    return out;
}

// Embeds Q[u1,u2] into Q[u1,u2,u3].
MultiPoly embed_u3(const MultiPoly& f) {
    MultiPoly out(kU3);
    for (const auto& [e, c] : f.terms()) out += MultiPoly::monomial(kU3, {e[0], e[1], 0}, c);
    return out;
}

MultiPoly weight2_form(const std::vector<std::string>& vars) {
    // A^2 - 64 B with A = 1 - 4u1 - 4u2, B = u1 u2, in the given ring
    // (vars must start with u1, u2).
    MultiPoly one = MultiPoly::constant(vars, 1);
    MultiPoly u1 = MultiPoly::variable(vars, 0);
    MultiPoly u2 = MultiPoly::variable(vars, 1);
    MultiPoly a = one - (u1 + u2).scale(Rational(4));
    return a * a - (u1 * u2).scale(Rational(64));
}

}  // namespace

QuarticInvariants quartic_invariants(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c,
                                     const MultiPoly& d, const MultiPoly& e) {
    if (a.vars() != b.vars() || a.vars() != c.vars() || a.vars() != d.vars() ||
        a.vars() != e.vars())
        throw std::invalid_argument("quartic_invariants: mixed coefficient rings");
    QuarticInvariants out;
    out.g2 = a * e - (b * d).scale(Rational(4)) + (c * c).scale(Rational(3));
    out.g3 = a * (c * e - d * d) - b * (b * e - c * d) + c * (b * d - c * c);
    out.disc = out.g2.pow(3) - out.g3.pow(2).scale(Rational(27));
    return out;
}

QuarticFamily elliptic_family() {
    QuarticFamily f;
    MultiPoly u1 = MultiPoly::variable(kU2, 0);
    MultiPoly u2 = MultiPoly::variable(kU2, 1);
    f.a = MultiPoly::constant(kU2, 1);
    f.b = MultiPoly::constant(kU2, Rational(1, 4));
    f.c = (MultiPoly::constant(kU2, Rational(1, 4)) + u1.scale(Rational(1, 2)) - u2)
              .scale(Rational(1, 6));
    f.d = u1.scale(Rational(1, 16));
    f.e = (u1 * u1).scale(Rational(1, 16));
    return f;
}

PolyCheck verify_family_invariants() {
    PolyCheck out;
    const QuarticFamily f = elliptic_family();
    const QuarticInvariants inv = quartic_invariants(f.a, f.b, f.c, f.d, f.e);

    MultiPoly one = MultiPoly::constant(kU2, 1);
    MultiPoly u1 = MultiPoly::variable(kU2, 0);
    MultiPoly u2 = MultiPoly::variable(kU2, 1);
    MultiPoly a = one - (u1 + u2).scale(Rational(4));
    MultiPoly b = u1 * u2;

    MultiPoly g2_expected = (a * a - b.scale(Rational(48))).scale(Rational(1, 192));
    MultiPoly g3_expected =
        (a * (a * a - b.scale(Rational(72)))).scale(Rational(-1, 13824));
    MultiPoly disc_expected = (b * b * (a * a - b.scale(Rational(64)))).scale(Rational(1, 4096));

    if (!(inv.g2 == g2_expected)) {
        out.detail = "g2 mismatch";
        return out;
    }
    if (!(inv.g3 == g3_expected)) {
        out.detail = "g3 mismatch";
        return out;
    }
    if (!(inv.disc == disc_expected)) {
        out.detail = "disc mismatch";
        return out;
    }
    out.ok = true;
    out.detail = "g2, g3, disc match their closed forms over Q[u1,u2]";
    return out;
}

PolyCheck verify_invariant_weights() {
    PolyCheck out;
    const std::vector<std::string> vars{"a", "b", "c", "d", "e", "l"};
    std::vector<MultiPoly> v;
    for (std::size_t i = 0; i < 6; ++i) v.push_back(MultiPoly::variable(vars, i));
    const MultiPoly& l = v[5];

    const QuarticInvariants plain = quartic_invariants(v[0], v[1], v[2], v[3], v[4]);
    // X -> lambda X sends the coefficient row (a, b, c, d, e) to
    // (l^4 a, l^3 b, l^2 c, l d, e).
    const QuarticInvariants scaled = quartic_invariants(
        v[0] * l.pow(4), v[1] * l.pow(3), v[2] * l.pow(2), v[3] * l, v[4]);

    if (!(scaled.g2 == plain.g2 * l.pow(4))) {
        out.detail = "g2 weight is not 4";
        return out;
    }
    if (!(scaled.g3 == plain.g3 * l.pow(6))) {
        out.detail = "g3 weight is not 6";
        return out;
    }
    if (!(scaled.disc == plain.disc * l.pow(12))) {
        out.detail = "disc weight is not 12";
        return out;
    }
    out.ok = true;
    out.detail = "generic quartic: (g2, g3, disc) scale with weights (4, 6, 12)";
    return out;
}

PolyCheck verify_singular_fibers() {
    PolyCheck out;
    const QuarticFamily f = elliptic_family();
    const QuarticInvariants inv = quartic_invariants(f.a, f.b, f.c, f.d, f.e);

    MultiPoly u1 = MultiPoly::variable(kU2, 0);
    MultiPoly u2 = MultiPoly::variable(kU2, 1);
    MultiPoly b2 = (u1 * u2).pow(2);
    auto quotient = inv.disc.scale(Rational(4096)).divide_exact(b2);
    if (!quotient || !(*quotient == weight2_form(kU2))) {
        out.detail = "4096 disc does not factor as (u1 u2)^2 (A^2 - 64 B)";
        return out;
    }

    // The cofactor A^2 - 64B, as a weight-2 form on P(1,2) in [A:B], vanishes
    // on the orbit [8:1] = [8t : t^2] identically in t, and B cuts out [1:0].
    const std::vector<std::string> tv{"t"};
    MultiPoly t = MultiPoly::variable(tv, 0);
    MultiPoly on_orbit = (t.scale(Rational(8))).pow(2) - (t * t).scale(Rational(64));
    if (!on_orbit.is_zero()) {
        out.detail = "A^2 - 64B does not vanish at [8:1]";
        return out;
    }
    out.ok = true;
    out.detail = "disc = (u1 u2)^2 (A^2 - 64B)/4096; fibers degenerate at [A:B] in {[1:0],[8:1]}";
    return out;
}

MultiPoly delta_sing() {
    MultiPoly one = MultiPoly::constant(kUS, 1);
    MultiPoly prod = one;
    for (int mask = 0; mask < 8; ++mask) {
        MultiPoly factor = one;
        for (std::size_t i = 0; i < 3; ++i) {
            Rational sign((mask >> i) & 1 ? -2 : 2);
            factor += MultiPoly::variable(kUS, 3 + i).scale(sign);
        }
        prod = reduce_roots(prod * factor);
    }
    for (std::size_t i = 0; i < 3; ++i)
        if (!(flip_root_sign(prod, i) == prod))
            throw std::logic_error("delta_sing: product not fixed by a root sign flip");
    MultiPoly out(kU3);
    for (const auto& [e, c] : prod.terms()) {
        if (e[3] != 0 || e[4] != 0 || e[5] != 0)
            throw std::logic_error("delta_sing: residual square-root monomial");
        out += MultiPoly::monomial(kU3, {e[0], e[1], e[2]}, c);
    }
    return out;
}

PolyCheck verify_degeneration() {
    PolyCheck out;
    const MultiPoly d = delta_sing();
    const MultiPoly slice = d.eval_partial({{2, Rational(0)}});
    const MultiPoly w2 = weight2_form(kU3);
    if (!(slice == w2 * w2)) {
        out.detail = "delta_sing(u1,u2,0) != (A^2 - 64B)^2";
        return out;
    }

    const QuarticFamily f = elliptic_family();
    const QuarticInvariants inv = quartic_invariants(f.a, f.b, f.c, f.d, f.e);
    MultiPoly u1 = MultiPoly::variable(kU2, 0);
    MultiPoly u2 = MultiPoly::variable(kU2, 1);
    auto quotient = inv.disc.scale(Rational(4096)).divide_exact((u1 * u2).pow(2));
    if (!quotient) {
        out.detail = "disc not divisible by (u1 u2)^2";
        return out;
    }
    if (!(slice == embed_u3(*quotient * *quotient))) {
        out.detail = "delta_sing(u1,u2,0) != (4096 disc/(u1 u2)^2)^2";
        return out;
    }
    out.ok = true;
    out.detail = "delta_sing(u1,u2,0) = ((1-4u1-4u2)^2 - 64u1u2)^2 = (4096 disc/(u1 u2)^2)^2";
    return out;
}

PolyCheck enriques_fixed_points() {
    PolyCheck out;
    std::vector<MultiPoly> s;
    for (std::size_t i = 0; i < 3; ++i) s.push_back(MultiPoly::variable(kUS, 3 + i));
    MultiPoly one = MultiPoly::constant(kUS, 1);
    MultiPoly u1 = MultiPoly::variable(kUS, 0);
    MultiPoly u2 = MultiPoly::variable(kUS, 1);
    MultiPoly u3 = MultiPoly::variable(kUS, 2);

    // f_u(x,y,z) = xyz(x+y+z+1) + u1 yz + u2 zx + u3 xy at (x,y,z) = (s1,s2,s3)
    MultiPoly f = s[0] * s[1] * s[2] * (s[0] + s[1] + s[2] + one) + u1 * s[1] * s[2] +
                  u2 * s[2] * s[0] + u3 * s[0] * s[1];
    MultiPoly target = s[0] * s[1] * s[2] *
                       (one + (s[0] + s[1] + s[2]).scale(Rational(2)));
    if (!(reduce_roots(f) == reduce_roots(target))) {
        out.detail = "f_u(s) != s1 s2 s3 (1 + 2s1 + 2s2 + 2s3) in the quotient ring";
        return out;
    }

    // u = (1/36, 1/36, 1/36): the sign choice (-,-,-) kills the factor
    // 1 + 2(s1+s2+s3) and the point (-1/6,-1/6,-1/6) lies on H(u).
    const Rational sixth(1, 6);
    Rational fixed_factor = Rational(1) - (sixth + sixth + sixth) * Rational(2);
    Rational on_surface =
        f.eval({Rational(1, 36), Rational(1, 36), Rational(1, 36), -sixth, -sixth, -sixth});
    if (!fixed_factor.is_zero() || !on_surface.is_zero()) {
        out.detail = "expected fixed point on H(u) at u = (1/36,1/36,1/36)";
        return out;
    }

    // u = (1,1,1): no sign pattern vanishes; no fixed point lies on H(u).
    for (int mask = 0; mask < 8; ++mask) {
        Rational e1((mask & 1) ? -1 : 1), e2((mask & 2) ? -1 : 1), e3((mask & 4) ? -1 : 1);
        Rational factor = Rational(1) + (e1 + e2 + e3) * Rational(2);
        Rational value = f.eval({Rational(1), Rational(1), Rational(1), e1, e2, e3});
        if (factor.is_zero() || value.is_zero()) {
            out.detail = "unexpected fixed point on H(u) at u = (1,1,1)";
            return out;
        }
    }
    out.ok = true;
    out.detail = "fixed points lie on H(u) exactly where a degeneration factor vanishes";
    return out;
}

}  // namespace hessk3
