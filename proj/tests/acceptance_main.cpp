// Acceptance gate: one line per criterion, nonzero exit when any criterion
// fails. Tolerances and sample counts are pinned here on purpose.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hessk3/checks.hpp"
#include "hessk3/curve_lattice.hpp"
#include "hessk3/elliptic.hpp"
#include "hessk3/hypergeom.hpp"
#include "hessk3/isometry.hpp"
#include "hessk3/surfaces.hpp"
#include "hessk3/theta_suite.hpp"

using namespace hessk3;

namespace {

int g_failures = 0;

void report(int idx, const std::string& label, bool ok, const std::string& detail,
            double seconds) {
    std::printf("[%s] %2d. %-34s %s (%.2f s)\n", ok ? "PASS" : "FAIL", idx, label.c_str(),
                detail.c_str(), seconds);
    if (!ok) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

using M2 = std::array<std::array<long, 2>, 2>;

M2 mul2(const M2& a, const M2& b) {
    M2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

M2 add2(const M2& a, const M2& b) {
    M2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

long pick(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

M2 random_gl2(std::mt19937_64& rng) {
    M2 g{{{1, 0}, {0, 1}}};
    const long k = pick(rng, 1, 4);
    for (long i = 0; i < k; ++i) {
        const long c = pick(rng, 0, 2);
        if (c == 0) {
            const long n = pick(rng, -3, 3);
            const M2 t{{{1, n}, {0, 1}}};
            g = mul2(g, t);
        } else if (c == 1) {
            const M2 s{{{0, -1}, {1, 0}}};
            g = mul2(g, s);
        } else {
            const M2 u{{{1, 0}, {0, -1}}};
            g = mul2(g, u);
        }
    }
    return g;
}

M2 random_sym(std::mt19937_64& rng) {
    const long x = pick(rng, -3, 3);
    const long y = pick(rng, -3, 3);
    const long z = pick(rng, -3, 3);
    return M2{{{x, y}, {y, z}}};
}

IsometryNs random_word(std::mt19937_64& rng) {
    IsometryNs g = identity_ns();
    const long len = pick(rng, 1, 6);
    for (long i = 0; i < len; ++i) {
        const long c = pick(rng, 0, 3);
        if (c == 0) {
            g = g.then(embed_GL2(random_gl2(rng)));
        } else if (c == 1) {
            g = g.then(embed_sym(random_sym(rng)));
        } else if (c == 2) {
            g = g.then(w_element());
        } else {
            g = g.then(minus_one());
        }
    }
    return g;
}

SublatticeTriple random_norm12(std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        const long z = pick(rng, -30, 30);
        const long n = z * z + 3;
        std::vector<long> xs;
        for (long x = 1; x <= 50 && x <= n; ++x)
            if (n % x == 0 && n / x <= 50) xs.push_back(x);
        if (xs.empty()) continue;
        long x = xs[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(xs.size()) - 1))];
        long y = n / x;
        if (pick(rng, 0, 1) == 1) {
            x = -x;
            y = -y;
        }
        const long g = std::gcd(std::gcd(std::abs(x), std::abs(y)), std::abs(z));
        if (g != 1) continue;
        return {x, y, z};
    }
    return {1, 3, 0};
}

bool same_column(const std::vector<mpz_class>& got, const SublatticeTriple& want) {
    const std::vector<mpz_class> plus = {0, 0, want.x, want.y, want.z};
    bool eq_plus = true, eq_minus = true;
    for (std::size_t i = 0; i < 5; ++i) {
        if (got[i] != plus[i]) eq_plus = false;
        if (got[i] != -plus[i]) eq_minus = false;
    }
    return eq_plus || eq_minus;
}

void criterion1() {
    Timer timer;
    bool ok = true;
    std::string detail;

    const CurveConfig cfg;
    ok = ok && cfg.rank() == 17;
    ok = ok && mpz_class(abs(cfg.det17())) == 16;
    ok = ok && cfg.signature17() == std::make_pair(1, 16);

    const auto rels = lattice_relations(cfg);
    ok = ok && rels.size() == 3;
    for (const auto& [name, v] : rels) ok = ok && is_relation(cfg, v);

    const DiscriminantGroup disc(cfg);
    const auto inv = disc.invariant_factors();
    ok = ok && inv.size() == 3 && inv[0] == 2 && inv[1] == 2 && inv[2] == 4;
    ok = ok && disc.classes_distinct();
    ok = ok && disc.isotropic_two_torsion().size() == 3;

    const std::array<std::array<int, 3>, 3> eps_images = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 3}}};
    for (int axis = 0; axis < 3; ++axis) {
        const CurvePermutation eps = involution_eps(cfg, axis);
        ok = ok && eps.preserves_gram(cfg);
        ok = ok && induced_disc_map(disc, eps).gen_images == eps_images;
    }

    const OqGroup oq = enumerate_Oq(disc);
    ok = ok && oq.order() == 12 && !oq.is_abelian() && oq.center_order() == 2;

    const double sec = timer.seconds();
    ok = ok && sec < 5.0;
    detail = "rank/det/relations/disc/eps/O(q), budget 5 s";
    report(1, "curve lattice, exact", ok, detail, sec);
}

void criterion2() {
    Timer timer;
    const DiagonalSeries d = diagonal_series(64);
    const std::vector<long> exps = {0, 8, 16, 24, 32, 40, 48};
    const std::vector<long> want_theta = {1, 0, 72, 192, 504, 576, 2280};
    const std::vector<long> want_w4 = {0, 0, 1, -4, -2, 20, 5};
    const std::vector<long> want_chi = {0, 0, 0, 1, -6, 3, 40};
    const std::vector<long> want_psi = {0, 0, 0, 1, 6, -21, -56};
    bool ok = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        ok = ok && d.theta.coeff(exps[i]) == Rational(want_theta[i]);
        ok = ok && d.weight4.coeff(exps[i]) == Rational(want_w4[i]);
        ok = ok && d.chi.coeff(exps[i]) == Rational(want_chi[i]);
        ok = ok && d.psi.coeff(exps[i]) == Rational(want_psi[i]);
    }
    const double sec = timer.seconds();
    ok = ok && sec < 60.0;
    report(2, "diagonal expansions, D=64", ok, "28 pinned coefficients, budget 60 s", sec);
}

void criterion3() {
    Timer timer;
    const ThetaConstants tc = determine_theta_constants(64);
    bool ok = tc.c == Rational(1024) && tc.c4 == Rational(-1024) && tc.c5 == Rational(1024);
    ok = ok && tc.f4_sq_3f8 && tc.f6_relation;
    report(3, "embedding constants", ok, "(c,c4,c5)=(1024,-1024,1024), both relations",
           timer.seconds());
}

void criterion4() {
    Timer timer;
    bool ok = true;
    const auto dup = igusa_duplication(32);
    ok = ok && dup.size() == 10;
    for (const auto& c : dup) ok = ok && c.ok;
    const ChiProduct cp = chi_product(32);
    ok = ok && cp.matches && cp.c == Rational(1) && cp.restriction_zero;
    for (const auto& c : genus1_relations(32)) ok = ok && c.ok;
    const M6Restriction m6 = m6_restriction(32);
    ok = ok && m6.rank_without_chi == 3 && m6.rank_with_chi == 3 && m6.chi_restricts_to_zero;
    for (const auto& c : product_factorizations(32)) ok = ok && c.ok;
    const PhiImages phi = phi_images(32);
    ok = ok && phi.h1_matches && phi.h2_matches && phi.phi2_zero && phi.chi_zero &&
         phi.psi_zero && phi.theta_chi_zero && phi.complement_rank == 3;
    report(4, "theta-ring identities, D=32", ok,
           "duplication/chi-product/restrictions/Siegel images", timer.seconds());
}

void criterion5() {
    Timer timer;
    bool ok = true;
    const auto ids = h_identities(400);
    ok = ok && ids.size() == 4;
    for (const auto& row : ids) {
        ok = ok && row.ok;
        ok = ok && row.nonzero_coeffs >= 10;
    }
    // the E6 row must record the sign discrepancy against the quoted -512
    ok = ok && ids.size() == 4 && !ids[1].note.empty();
    const CuspNumeric cusp = cusp_numeric();
    ok = ok && cusp.ratio_error < 1e-4 && cusp.h1_error < 1e-4;
    report(5, "Siegel-image identities", ok, "4 rows, >=10 coeffs each, cusp [8:1] to 1e-4",
           timer.seconds());
}

void criterion6() {
    Timer timer;
    bool ok = true;
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; p + q <= 5; ++q)
            for (int r = 0; p + q + r <= 5; ++r) {
                const int s = p + q + r;
                const Rational sign = (s % 2 == 0) ? Rational(1) : Rational(-1);
                ok = ok && constant_term_N(p, q, r) == sign * n_prime_closed_form(p, q, r);
            }
    const FcScaling sc = match_fc_scaling(period_series_3d(6), 6);
    ok = ok && sc.unique_match && sc.matching.size() == 1 && sc.matching[0] == Rational(4);
    ok = ok && sc.quoted_scale == Rational(-2);
    bool deviates = false;
    for (const auto& res : sc.residuals)
        if (res.oracle != res.series) deviates = true;
    ok = ok && deviates;  // the quoted scale fails; recorded as a finding
    ok = ok && verify_fc_f4_specialization(8).ok;
    ok = ok && verify_f4_reduction(8).ok;
    report(6, "period oracle and F_C", ok, "closed form s<=5, unique scale 4, F4/2F1 to deg 8",
           timer.seconds());
}

void criterion7() {
    Timer timer;
    bool ok = verify_family_invariants().ok;
    ok = ok && verify_invariant_weights().ok;
    ok = ok && verify_degeneration().ok;
    ok = ok && verify_singular_fibers().ok;
    ok = ok && enriques_fixed_points().ok;
    report(7, "elliptic fibration invariants", ok, "g2/g3/disc, degeneration, fibers [1:0],[8:1]",
           timer.seconds());
}

void criterion8() {
    Timer timer;
    bool ok = stratum_loci().ok;
    ok = ok && ns1_dvg_consistency().ok;
    ok = ok && dvg_specialize_hps().ok;
    const HessianCheck h1 = hessian_ns1();
    const HessianCheck h2 = hessian_ns2();
    const HessianCheck hf = hessian_fermat();
    const HessianCheck hs = hessian_sylvester();
    ok = ok && h1.ok && h1.ratio == Rational(-1296);
    ok = ok && h2.ok && h2.ratio == Rational(1296);
    ok = ok && hf.ok && hf.ratio == Rational(1296);
    ok = ok && hs.ok && hs.ratio == Rational(1296);
    ok = ok && hessian_equivariance().ok;
    report(8, "strata and Hessians", ok, "loci, DvG rows, four proportionality constants",
           timer.seconds());
}

void criterion9() {
    Timer timer;
    bool ok = true;
    std::string note;
    std::mt19937_64 rng(7);
    const ZMatrix Q = q_form();

    for (int i = 0; i < 100 && ok; ++i) {
        const IsometryNs g = random_word(rng);
        ok = ok && g.is_orthogonal();
    }
    if (!ok) note = "random word broke t(g) Q g = Q";

    for (int i = 0; i < 50 && ok; ++i) {
        const M2 a = random_gl2(rng);
        const M2 b = random_gl2(rng);
        ok = ok && embed_GL2(a).then(embed_GL2(b)).mat == embed_GL2(mul2(b, a)).mat;
        const M2 s = random_sym(rng);
        const M2 t = random_sym(rng);
        ok = ok && embed_sym(s).then(embed_sym(t)).mat == embed_sym(add2(s, t)).mat;
        if (!ok) note = "homomorphism pair failed";
    }

    // Psi equivariance: 20 admissible points per generator kind.
    for (int kind = 0; kind < 3 && ok; ++kind) {
        int done = 0;
        for (int attempt = 0; attempt < 400 && done < 20; ++attempt) {
            const Rational z3(pick(rng, -5, 5), pick(rng, 1, 3));
            const Rational z4(pick(rng, -5, 5), pick(rng, 1, 3));
            const Rational z5(pick(rng, -5, 5), pick(rng, 1, 3));
            const std::vector<Rational> z = quadric_point(z3, z4, z5);
            const auto tau = psi(z);
            if (!tau) continue;
            if (kind == 0) {
                const M2 a = random_gl2(rng);
                const auto got = psi(apply_isometry(embed_GL2(a), z));
                if (!got) continue;
                if (!(*got == act_gl2(a, *tau))) ok = false;
            } else if (kind == 1) {
                const M2 b = random_sym(rng);
                const auto got = psi(apply_isometry(embed_sym(b), z));
                if (!got) continue;
                if (!(*got == translate(b, *tau))) ok = false;
            } else {
                const auto want = act_w(*tau);
                const auto got = psi(apply_isometry(w_element(), z));
                if (!want || !got) continue;
                if (!(*got == *want)) ok = false;
            }
            ++done;
        }
        ok = ok && done == 20;
        if (!ok) note = "Psi equivariance failed (kind " + std::to_string(kind) + ")";
    }

    for (int i = 0; i < 100 && ok; ++i) {
        const SublatticeTriple t = random_norm12(rng);
        const ReductionResult res = reduce_sublattice(t, 200);
        ok = ok && res.steps <= 200;
        const bool is_m1 = res.endpoint == SublatticeTriple{1, 3, 0};
        const bool is_m2 = res.endpoint == SublatticeTriple{2, 2, 1};
        ok = ok && (is_m1 || is_m2);
        ok = ok && res.transform.is_orthogonal();
        ok = ok && same_column(res.transform.mat.apply({0, 0, t.x, t.y, t.z}), res.endpoint);
        if (!ok) note = "reduction failed at (" + std::to_string(t.x) + "," +
                        std::to_string(t.y) + "," + std::to_string(t.z) + ")";
    }

    const auto sols = enumerate_solutions(50);
    int quoted = 0, extras = 0;
    for (const auto& s : sols) {
        ok = ok && s.x * s.y - s.z * s.z == 3;
        ok = ok && std::abs(s.x) > std::abs(s.z) && std::abs(s.y) > std::abs(s.z);
        const bool is_quoted = std::abs(s.x) == 2 && std::abs(s.y) == 2 && std::abs(s.z) == 1;
        if (is_quoted) {
            ++quoted;
        } else {
            ++extras;
            ok = ok && s.z == 0;  // every extra lies in the overlooked z = 0 family
        }
    }
    ok = ok && quoted == 4;
    if (note.empty())
        note = "finding: " + std::to_string(extras) + " z=0 solutions beyond the quoted four";
    report(9, "randomized group checks", ok, note, timer.seconds());
}

void criterion10() {
    Timer timer;
    RunConfig cfg;
    cfg.suites = {"all"};
    cfg.order = 16;
    cfg.seed = 11;
    cfg.samples = 30;
    const std::string a = render_json(run_checks(cfg)).dump();
    const std::string b = render_json(run_checks(cfg)).dump();
    const bool ok = !a.empty() && a == b;
    report(10, "deterministic reporting", ok, "two full runs, byte-identical JSON",
           timer.seconds());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures > 0) {
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
