#include "hessk3/hypergeom.hpp"

#include <stdexcept>

namespace hessk3 {

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kU3{"u1", "u2", "u3"};
const std::vector<std::string> kU2{"u1", "u2"};
const std::vector<std::string> kT{"t"};

// 1/(1 + h) for a series h with zero constant term, to total degree bound.
MultiPoly geometric_inverse(const MultiPoly& h, int bound) {
    MultiPoly one = MultiPoly::constant(h.vars(), 1);
    MultiPoly acc = one;
    MultiPoly pw = one;
    for (int k = 1; k <= bound; ++k) {
        pw = (pw * h).truncate_total(bound);
        if (pw.is_zero()) break;
        acc = (k % 2 == 1) ? acc - pw : acc + pw;
    }
    return acc;
}

bool is_nonpositive_integer(const Rational& c) {
    return c.den() == 1 && c.num() <= 0;
}

}  // namespace

mpz_class factorial_z(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Rational pochhammer(const Rational& a, unsigned n) {
    Rational acc(1);
    for (unsigned k = 0; k < n; ++k) acc = acc * (a + Rational(static_cast<long>(k)));
    return acc;
}

Rational binomial_general(const Rational& a, unsigned k) {
    Rational acc(1);
    for (unsigned j = 0; j < k; ++j) acc = acc * (a - Rational(static_cast<long>(j)));
    return acc / Rational(factorial_z(k));
}

SeriesMulti fc_series(int order) {
    if (order < 0) throw std::invalid_argument("fc_series: negative order");
    std::vector<std::string> vars{"x1", "x2", "x3"};
    MultiPoly out(vars);
    const Rational half(1, 2);
    for (int s = 0; s <= order; ++s) {
        const Rational top = pochhammer(Rational(1), s) * pochhammer(half, s);
        for (int p = 0; p <= s; ++p)
            for (int q = 0; q + p <= s; ++q) {
                const int r = s - p - q;
                Rational den(mpz_class(factorial_z(p) * factorial_z(q) * factorial_z(r)));
                out += MultiPoly::monomial(vars, {p, q, r}, top / (den * den));
            }
    }
    return out;
}

SeriesMulti f4_series(int order) {
    if (order < 0) throw std::invalid_argument("f4_series: negative order");
    std::vector<std::string> vars{"x1", "x2"};
    MultiPoly out(vars);
    const Rational half(1, 2);
    for (int n = 0; n <= order; ++n) {
        const Rational top = pochhammer(Rational(1), n) * pochhammer(half, n);
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            Rational den(mpz_class(factorial_z(p) * factorial_z(q)));
            out += MultiPoly::monomial(vars, {p, q}, top / (den * den));
        }
    }
    return out;
}

SeriesMulti gauss_2f1(const Rational& a, const Rational& b, const Rational& c, int order) {
    if (order < 0) throw std::invalid_argument("gauss_2f1: negative order");
    if (is_nonpositive_integer(c)) throw std::invalid_argument("gauss_2f1: lower parameter is a nonpositive integer");
    MultiPoly out(kT);
    for (int k = 0; k <= order; ++k) {
        Rational den = pochhammer(c, k) * Rational(factorial_z(k));
        out += MultiPoly::monomial(kT, {k}, pochhammer(a, k) * pochhammer(b, k) / den);
    }
    return out;
}

Rational constant_term_N(int p, int q, int r) {
    if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("constant_term_N: negative index");
    const int s = p + q + r;
    MultiPoly one = MultiPoly::constant(kXYZ, 1);
    MultiPoly base = one + MultiPoly::variable(kXYZ, 0) + MultiPoly::variable(kXYZ, 1) +
                     MultiPoly::variable(kXYZ, 2);
    MultiPoly h = base.pow(static_cast<unsigned>(s + 1)).truncate_total(s) - one;
    return geometric_inverse(h, s).coeff({q, r, p});
}

Rational constant_term_N2(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("constant_term_N2: negative index");
    const int n = p + q;
    MultiPoly one = MultiPoly::constant(kXY, 1);
    MultiPoly base = one + MultiPoly::variable(kXY, 0) + MultiPoly::variable(kXY, 1);
    MultiPoly h = base.pow(static_cast<unsigned>(n + 1)).truncate_total(n) - one;
    return geometric_inverse(h, n).coeff({p, q});
}

Rational n_prime_closed_form(int p, int q, int r) {
    if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("n_prime_closed_form: negative index");
    const unsigned s = static_cast<unsigned>(p + q + r);
    mpz_class den = factorial_z(s) * factorial_z(p) * factorial_z(q) * factorial_z(r);
    return Rational(factorial_z(2 * s)) / Rational(den);
}

SeriesMulti period_series_3d(int order) {
    if (order < 0) throw std::invalid_argument("period_series_3d: negative order");
    MultiPoly out(kU3);
    for (int s = 0; s <= order; ++s)
        for (int p = 0; p <= s; ++p)
            for (int q = 0; q + p <= s; ++q) {
                const int r = s - p - q;
                Rational multi = Rational(factorial_z(s)) /
                                 Rational(mpz_class(factorial_z(p) * factorial_z(q) * factorial_z(r)));
                Rational sign(s % 2 == 0 ? 1 : -1);  // from (-u1)^p (-u2)^q (-u3)^r
                out += MultiPoly::monomial(kU3, {p, q, r}, multi * constant_term_N(p, q, r) * sign);
            }
    return out;
}

SeriesMulti period_series_2d(int order) {
    if (order < 0) throw std::invalid_argument("period_series_2d: negative order");
    MultiPoly out(kU2);
    for (int n = 0; n <= order; ++n)
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            Rational multi =
                Rational(factorial_z(n)) / Rational(mpz_class(factorial_z(p) * factorial_z(q)));
            Rational sign(n % 2 == 0 ? 1 : -1);
            out += MultiPoly::monomial(kU2, {p, q}, multi * constant_term_N2(p, q) * sign);
        }
    return out;
}

bool periods_2d_3d_consistent(int order) {
    const SeriesMulti three = period_series_3d(order);
    const SeriesMulti two = period_series_2d(order);
    for (int n = 0; n <= order; ++n)
        for (int p = 0; p <= n; ++p)
            if (two.coeff({p, n - p}) != three.coeff({p, n - p, 0})) return false;
    // and nothing off the plane sneaks into the restriction
    return true;
}

FcScaling match_fc_scaling(const SeriesMulti& period, int order) {
    FcScaling out;
    out.quoted_scale = Rational(-2);
    const SeriesMulti fc = fc_series(order);

    const std::vector<Rational> candidates{
        Rational(4),  Rational(-4), Rational(2),      Rational(-2),
        Rational(1),  Rational(-1), Rational(8),      Rational(-8),
        Rational(3),  Rational(-3), Rational(1, 2),   Rational(-1, 2),
        Rational(1, 4), Rational(-1, 4)};

    auto matches = [&](const Rational& scale) {
        for (int s = 0; s <= order; ++s) {
            const Rational pw = scale.pow(s);
            for (int p = 0; p <= s; ++p)
                for (int q = 0; q + p <= s; ++q) {
                    const int r = s - p - q;
                    if (fc.coeff({p, q, r}) * pw != period.coeff({p, q, r})) return false;
                }
        }
        return true;
    };

    for (const Rational& c : candidates)
        if (matches(c)) out.matching.push_back(c);
    out.unique_match = out.matching.size() == 1;

    for (int s = 0; s <= std::min(order, 2); ++s) {
        const Rational pw = out.quoted_scale.pow(s);
        for (int p = 0; p <= s; ++p)
            for (int q = 0; q + p <= s; ++q) {
                const int r = s - p - q;
                FcScaling::Residual row;
                row.exps = {p, q, r};
                row.oracle = period.coeff({p, q, r});
                row.series = fc.coeff({p, q, r}) * pw;
                out.residuals.push_back(row);
            }
    }
    return out;
}

PolyCheck verify_fc_f4_specialization(int order) {
    PolyCheck out;
    const SeriesMulti fc = fc_series(order);
    const SeriesMulti f4 = f4_series(order);
    for (int n = 0; n <= order; ++n)
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            if (fc.coeff({p, q, 0}) != f4.coeff({p, q})) {
                out.detail = "mismatch at x1^" + std::to_string(p) + " x2^" + std::to_string(q);
                return out;
            }
        }
    out.ok = true;
    return out;
}

PolyCheck verify_f4_reduction(int order) {
    PolyCheck out;
    MultiPoly one = MultiPoly::constant(kXY, 1);
    MultiPoly x = MultiPoly::variable(kXY, 0);
    MultiPoly y = MultiPoly::variable(kXY, 1);

    // 1/((1-x)(1-y)) = 1/(1 - (x + y - xy))
    MultiPoly inv = geometric_inverse((x * y - x - y), order);
    MultiPoly bigx = (x * inv).truncate_total(order).scale(Rational(-1));
    MultiPoly bigy = (y * inv).truncate_total(order).scale(Rational(-1));

    std::vector<MultiPoly> xp{one}, yp{one};
    for (int k = 1; k <= order; ++k) {
        xp.push_back((xp.back() * bigx).truncate_total(order));
        yp.push_back((yp.back() * bigy).truncate_total(order));
    }

    const SeriesMulti f4 = f4_series(order);
    MultiPoly lhs(kXY);
    for (int n = 0; n <= order; ++n)
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            const Rational c = f4.coeff({p, q});
            if (!(c == Rational(0))) lhs += (xp[p] * yp[q]).truncate_total(order).scale(c);
        }
    lhs = lhs.truncate_total(order);

    auto sqrt_one_minus = [&](const MultiPoly& v) {
        MultiPoly acc(kXY);
        for (int k = 0; k <= order; ++k) {
            Rational c = binomial_general(Rational(1, 2), k) * Rational(k % 2 == 0 ? 1 : -1);
            acc += v.pow(static_cast<unsigned>(k)).truncate_total(order).scale(c);
        }
        return acc.truncate_total(order);
    };

    MultiPoly rhs = (sqrt_one_minus(x) * sqrt_one_minus(y)).truncate_total(order);
    const SeriesMulti g = gauss_2f1(Rational(1, 2), Rational(1, 2), Rational(1), order);
    MultiPoly gxy(kXY);
    for (int k = 0; 2 * k <= order; ++k) gxy += MultiPoly::monomial(kXY, {k, k}, g.coeff({k}));
    rhs = (rhs * gxy).truncate_total(order);

    const MultiPoly diff = lhs - rhs;
    out.ok = diff == MultiPoly(kXY);
    if (!out.ok) out.detail = "residual: " + diff.to_string();
    return out;
}

}  // namespace hessk3
