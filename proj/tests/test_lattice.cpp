#include <doctest.h>

#include <set>

#include "hessk3/curve_lattice.hpp"
#include "hessk3/isometry.hpp"

using namespace hessk3;

TEST_CASE("curve configuration carries 20 distinctly named curves") {
    CurveConfig cfg;
    REQUIRE(cfg.labels().size() == 20);
    std::set<std::string> names;
    for (const auto& l : cfg.labels()) names.insert(l.name());
    CHECK(names.size() == 20);
    CHECK(names.count("E_000") == 1);
    CHECK(names.count("E_III") == 1);
    CHECK(cfg.gram().rows() == 20);
    CHECK(cfg.gram().is_symmetric());
}

TEST_CASE("incidence pattern of lines and exceptional curves") {
    CurveConfig cfg;
    const auto& g = cfg.gram();
    auto entry = [&](const std::string& a, const std::string& b) {
        return g.at(cfg.index_of(a), cfg.index_of(b));
    };
    // every curve is a smooth rational curve on a K3
    for (std::size_t i = 0; i < 20; ++i) CHECK(g.at(i, i) == -2);
    // the line with y = 0, z = 0 passes through the two A1 points it joins
    CHECK(entry("L_x00", "E_000") == 1);
    CHECK(entry("L_x00", "E_I00") == 1);
    CHECK(entry("L_x00", "E_0I0") == 0);
    CHECK(entry("L_x00", "E_III") == 0);
    // lines of the same kind are disjoint, exceptional curves likewise
    CHECK(entry("L_x00", "L_x0I") == 0);
    CHECK(entry("L_x00", "L_0yI") == 0);
    CHECK(entry("E_000", "E_I00") == 0);
}

TEST_CASE("rank, determinant, signature of the curve lattice") {
    CurveConfig cfg;
    CHECK(cfg.rank() == 17);
    CHECK(abs(cfg.det17()) == 16);
    CHECK(cfg.signature17() == std::pair<int, int>{1, 16});
    CHECK(cfg.basis17().size() == 17);
}

TEST_CASE("the three relations pair to zero and perturbations do not") {
    CurveConfig cfg;
    const auto rels = lattice_relations(cfg);
    REQUIRE(rels.size() == 3);
    for (const auto& [name, v] : rels) {
        CAPTURE(name);
        CHECK(is_relation(cfg, v));
        for (const auto& [other, w] : rels) CHECK(pair_divisors(cfg, v, w) == Rational(0));
    }
    Divisor bad = rels[0].second;
    bad[3] = bad[3] + Rational(1, 2);
    CHECK(!is_relation(cfg, bad));
}

TEST_CASE("discriminant group is (Z/2)^2 x Z/4 with distinct classes") {
    CurveConfig cfg;
    DiscriminantGroup d(cfg);
    const auto inv = d.invariant_factors();
    REQUIRE(inv.size() == 3);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 2);
    CHECK(inv[2] == 4);
    CHECK(d.all_classes().size() == 16);
    CHECK(d.classes_distinct());

    CHECK(d.in_dual(d.ell1()));
    CHECK(d.in_dual(d.ell2()));
    CHECK(d.in_dual(d.m()));
    CHECK(!d.in_lattice(d.m()));
    CHECK(d.class_order(d.m()) == 4);
    CHECK(d.class_order(d.ell1()) == 2);
    CHECK(d.class_order(zero_divisor()) == 1);
    CHECK(d.q_value(d.ell1()).is_zero());
    CHECK(d.q_value(d.ell2()).is_zero());
    CHECK(d.q_value(d.ell3()).is_zero());
    CHECK(!d.q_value(d.m()).is_zero());

    // ell3 = 2m + ell1 + ell2 as classes
    const Divisor twom = add(d.m(), d.m());
    CHECK(d.same_class(d.ell3(), add(twom, add(d.ell1(), d.ell2()))));

    const auto iso = d.isotropic_two_torsion();
    CHECK(iso.size() == 3);
}

TEST_CASE("coordinate symmetries preserve the Gram matrix, fake swaps do not") {
    CurveConfig cfg;
    for (int axis = 0; axis < 3; ++axis) {
        const CurvePermutation eps = involution_eps(cfg, axis);
        CHECK(eps.preserves_gram(cfg));
    }
    const CurvePermutation rot = coordinate_permutation(cfg, {1, 2, 0});
    CHECK(rot.preserves_gram(cfg));

    // identity induces the identity on the discriminant group
    DiscriminantGroup d(cfg);
    const CurvePermutation id = coordinate_permutation(cfg, {0, 1, 2});
    const DiscAutomorphism a = induced_disc_map(d, id);
    CHECK(a.gen_images == std::array<std::array<int, 3>, 3>{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});

    // swapping one line with an exceptional curve breaks the pairing
    CurvePermutation fake;
    fake.name = "fake";
    fake.image.resize(20);
    for (std::size_t i = 0; i < 20; ++i) fake.image[i] = i;
    std::swap(fake.image[cfg.index_of("E_000")], fake.image[cfg.index_of("L_x00")]);
    CHECK(!fake.preserves_gram(cfg));
}

TEST_CASE("O(q) has order 12 and permutes the isotropic triple faithfully mod center") {
    CurveConfig cfg;
    DiscriminantGroup d(cfg);
    const OqGroup g = enumerate_Oq(d);
    CHECK(g.order() == 12);
    CHECK(!g.is_abelian());
    CHECK(g.center_order() == 2);
    CHECK(g.derived_order() == 3);
    std::set<std::array<int, 3>> perms;
    for (const auto& a : g.elements) perms.insert(g.isotropic_action(a));
    CHECK(perms.size() == 6);
}

TEST_CASE("q_form is U + U(2) + <-4> and the basic words are isometries") {
    const ZMatrix q = q_form();
    CHECK(q == ZMatrix::from_rows({{0, 1, 0, 0, 0},
                                   {1, 0, 0, 0, 0},
                                   {0, 0, 0, 2, 0},
                                   {0, 0, 2, 0, 0},
                                   {0, 0, 0, 0, -4}}));
    CHECK(identity_ns().is_orthogonal());
    CHECK(w_element().is_orthogonal());
    CHECK(minus_one().is_orthogonal());
    CHECK(embed_GL2({{{2, 1}, {1, 1}}}).is_orthogonal());
    CHECK(embed_sym({{{1, 2}, {2, -1}}}).is_orthogonal());
    CHECK(swap34().is_orthogonal());
    CHECK(neg_e5().is_orthogonal());
    CHECK(reduction_move_r1(1).is_orthogonal());
    CHECK(reduction_move_r2(-1).is_orthogonal());

    // w squares to an element acting trivially on the Psi coordinates
    const Sym2 tau{Rational(1, 2), Rational(1, 3), Rational(2)};
    const auto w1 = act_w(tau);
    REQUIRE(w1.has_value());
    const auto w2 = act_w(*w1);
    REQUIRE(w2.has_value());
    CHECK(*w2 == tau);
}

TEST_CASE("psi equivariance on a fixed sample") {
    const std::vector<Rational> z = quadric_point(Rational(1, 2), Rational(-2, 3), Rational(1));
    const auto tau = psi(z);
    REQUIRE(tau.has_value());
    // the quadric relation z2 = -2(z3 z4 - z5^2) holds
    CHECK(z[1] == Rational(-2) * (z[2] * z[3] - z[4] * z[4]));

    const std::array<std::array<long, 2>, 2> a = {{{2, 1}, {1, 1}}};
    const auto lhs = psi(apply_isometry(embed_GL2(a), z));
    REQUIRE(lhs.has_value());
    CHECK(*lhs == act_gl2(a, *tau));

    const std::array<std::array<long, 2>, 2> b = {{{1, -2}, {-2, 3}}};
    const auto lhs_t = psi(apply_isometry(embed_sym(b), z));
    REQUIRE(lhs_t.has_value());
    CHECK(*lhs_t == translate(b, *tau));

    const auto lhs_w = psi(apply_isometry(w_element(), z));
    const auto rhs_w = act_w(*tau);
    REQUIRE(lhs_w.has_value());
    REQUIRE(rhs_w.has_value());
    CHECK(*lhs_w == *rhs_w);
}

TEST_CASE("sublattice reduction endpoints and enumeration") {
    CHECK(triple_norm({1, 3, 0}) == 12);
    CHECK(triple_norm({2, 2, 1}) == 12);
    const ReductionResult r1 = reduce_sublattice({1, 3, 0});
    CHECK(r1.tag == NormalFormTag::M1);
    CHECK(r1.endpoint == SublatticeTriple{1, 3, 0});
    const ReductionResult r2 = reduce_sublattice({2, 2, 1});
    CHECK(r2.tag == NormalFormTag::M2);
    CHECK(r2.endpoint == SublatticeTriple{2, 2, 1});

    const ReductionResult big = reduce_sublattice({7, 4, 5});  // 28 - 25 = 3
    CHECK(big.steps <= 200);
    CHECK((big.endpoint == SublatticeTriple{1, 3, 0} || big.endpoint == SublatticeTriple{2, 2, 1}));
    CHECK(big.transform.is_orthogonal());

    const auto sols = enumerate_solutions(10);
    bool found = false;
    for (const auto& s : sols) found = found || s == SublatticeTriple{2, 2, 1};
    CHECK(found);
    for (const auto& s : sols) {
        CHECK(s.x * s.y - s.z * s.z == 3);
        CHECK(std::abs(s.x) > std::abs(s.z));
        CHECK(std::abs(s.y) > std::abs(s.z));
    }
}

TEST_CASE("pair transitivity on a translated pair") {
    // x = g e1, y = g e2 for g = h(B) w
    const IsometryNs g = embed_sym({{{1, 1}, {1, 2}}}).then(w_element());
    const std::vector<mpz_class> e1 = {1, 0, 0, 0, 0}, e2 = {0, 1, 0, 0, 0};
    const std::vector<mpz_class> x = g.mat.apply(e1), y = g.mat.apply(e2);
    const PairTransitivityResult res = unimodular_pair_transitivity(x, y);
    REQUIRE(res.success);
    CHECK(res.gamma.mat.apply(x) == e1);
    CHECK(res.gamma.mat.apply(y) == e2);
}
