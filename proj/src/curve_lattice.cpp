#include "hessk3/curve_lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hessk3 {

namespace {

constexpr char kAxisChar[3] = {'x', 'y', 'z'};

// 0 renders as '0', oo renders as 'I'.
char coord_char(int c) { return c == 0 ? '0' : 'I'; }

} // namespace

CurveLabel CurveLabel::line(int axis, int t, int u) {
    CurveLabel l;
    l.kind = Kind::Line;
    l.axis = axis;
    l.at = {-1, -1, -1};
    int p = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == axis) continue;
        l.at[i] = (p == 0) ? t : u;
        ++p;
    }
    return l;
}

CurveLabel CurveLabel::exceptional(int a, int b, int c) {
    CurveLabel l;
    l.kind = Kind::Exceptional;
    l.axis = -1;
    l.at = {a, b, c};
    return l;
}

std::string CurveLabel::name() const {
    std::ostringstream os;
    if (kind == Kind::Line) {
        os << "L_";
        for (int i = 0; i < 3; ++i) {
            if (i == axis) {
                os << kAxisChar[i];
            } else {
                os << coord_char(at[i]);
            }
        }
    } else {
        os << "E_";
        for (int i = 0; i < 3; ++i) os << coord_char(at[i]);
    }
    return os.str();
}

bool CurveLabel::operator==(const CurveLabel& o) const {
    return kind == o.kind && axis == o.axis && at == o.at;
}

CurveConfig::CurveConfig() : gram_(0, 0) {
    for (int axis = 0; axis < 3; ++axis) {
        for (int t = 0; t < 2; ++t) {
            for (int u = 0; u < 2; ++u) {
                labels_.push_back(CurveLabel::line(axis, t, u));
            }
        }
    }
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                labels_.push_back(CurveLabel::exceptional(a, b, c));
            }
        }
    }

    const std::size_t n = labels_.size();
    gram_ = ZMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                gram_.at(i, j) = -2;
                continue;
            }
            const CurveLabel& a = labels_[i];
            const CurveLabel& b = labels_[j];
            if (a.kind == b.kind) {
                gram_.at(i, j) = 0;
                continue;
            }
            const CurveLabel& e = (a.kind == CurveLabel::Kind::Exceptional) ? a : b;
            const CurveLabel& l = (a.kind == CurveLabel::Kind::Exceptional) ? b : a;
            bool meets = true;
            for (int k = 0; k < 3; ++k) {
                if (k == l.axis) continue;
                if (e.at[k] != l.at[k]) meets = false;
            }
            gram_.at(i, j) = meets ? 1 : 0;
        }
    }

    const std::set<std::string> removed = {"E_000", "L_IyI", "L_IIz"};
    for (std::size_t i = 0; i < n; ++i) {
        if (removed.count(labels_[i].name()) == 0) basis17_.push_back(i);
    }
    if (basis17_.size() != 17) throw std::logic_error("basis17 construction failed");
}

std::size_t CurveConfig::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].name() == name) return i;
    }
    throw std::out_of_range("unknown curve label: " + name);
}

ZMatrix CurveConfig::gram17() const { return gram_.submatrix(basis17_, basis17_); }

std::size_t CurveConfig::rank() const { return gram_.rank(); }

mpz_class CurveConfig::det17() const { return gram17().det(); }

std::pair<int, int> CurveConfig::signature17() const { return gram17().signature(); }

Divisor zero_divisor() { return Divisor(20, Rational(0)); }

Divisor curve_divisor(const CurveConfig& cfg, const std::string& name) {
    Divisor d = zero_divisor();
    d[cfg.index_of(name)] = Rational(1);
    return d;
}

Divisor add(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Divisor sub(const Divisor& a, const Divisor& b) {
    Divisor r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Divisor scale(const Divisor& a, const Rational& c) {
    Divisor r = a;
    for (auto& x : r) x = x * c;
    return r;
}

namespace {

Divisor combo(const CurveConfig& cfg, const std::vector<std::pair<int, std::string>>& terms) {
    Divisor d = zero_divisor();
    for (const auto& [c, name] : terms) d[cfg.index_of(name)] = d[cfg.index_of(name)] + Rational(c);
    return d;
}

} // namespace

std::vector<std::pair<std::string, Divisor>> lattice_relations(const CurveConfig& cfg) {
    std::vector<std::pair<std::string, Divisor>> rels;

    Divisor r1 = combo(cfg, {{1, "E_000"},
                             {-1, "E_00I"},
                             {-1, "E_0I0"},
                             {-3, "E_0II"},
                             {3, "E_I00"},
                             {1, "E_I0I"},
                             {1, "E_II0"},
                             {-1, "E_III"},
                             {2, "L_x00"},
                             {-2, "L_xII"},
                             {-2, "L_0yI"},
                             {2, "L_Iy0"},
                             {-2, "L_0Iz"},
                             {2, "L_I0z"}});
    rels.emplace_back("E_000", r1);

    Divisor r2 = combo(cfg, {{1, "L_IyI"},
                             {-2, "E_0I0"},
                             {-2, "E_0II"},
                             {2, "E_I00"},
                             {2, "E_I0I"},
                             {1, "L_x00"},
                             {1, "L_x0I"},
                             {-1, "L_xI0"},
                             {-1, "L_xII"},
                             {-1, "L_0y0"},
                             {-1, "L_0yI"},
                             {1, "L_Iy0"},
                             {-2, "L_0Iz"},
                             {2, "L_I0z"}});
    rels.emplace_back("L_IyI", r2);

    Divisor r3 = combo(cfg, {{1, "L_IIz"},
                             {-2, "E_00I"},
                             {-2, "E_0II"},
                             {2, "E_I00"},
                             {2, "E_II0"},
                             {1, "L_x00"},
                             {-1, "L_x0I"},
                             {1, "L_xI0"},
                             {-1, "L_xII"},
                             {-1, "L_00z"},
                             {-2, "L_0yI"},
                             {2, "L_Iy0"},
                             {-1, "L_0Iz"},
                             {1, "L_I0z"}});
    rels.emplace_back("L_IIz", r3);

    return rels;
}

Rational pair_divisors(const CurveConfig& cfg, const Divisor& a, const Divisor& b) {
    const ZMatrix& g = cfg.gram();
    Rational out(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out = out + a[i] * b[j] * Rational(g.at(i, j));
        }
    }
    return out;
}

bool is_relation(const CurveConfig& cfg, const Divisor& v) {
    const ZMatrix& g = cfg.gram();
    for (std::size_t i = 0; i < 20; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < 20; ++j) {
            if (!v[j].is_zero()) s = s + Rational(g.at(i, j)) * v[j];
        }
        if (!s.is_zero()) return false;
    }
    return true;
}

DiscriminantGroup::DiscriminantGroup(const CurveConfig& cfg)
    : cfg_(&cfg), gram17_(cfg.gram17()) {
    // Rewrite coefficients for the removed curves, read off the relations.
    auto rels = lattice_relations(cfg);
    for (const auto& [name, rel] : rels) {
        std::size_t removed = cfg.index_of(name);
        std::vector<Rational> coeffs(17, Rational(0));
        for (std::size_t pos = 0; pos < cfg.basis17().size(); ++pos) {
            // rel = removed - expression, so removed = removed - rel on basis.
            coeffs[pos] = -rel[cfg.basis17()[pos]];
        }
        rewrite_[removed] = coeffs;
    }
}

std::vector<mpz_class> DiscriminantGroup::invariant_factors() const {
    SmithForm sf = smith_normal_form(gram17_);
    std::vector<mpz_class> out;
    for (const auto& d : sf.invariant_factors()) {
        if (d != 1) out.push_back(d);
    }
    return out;
}

Divisor DiscriminantGroup::ell1() const {
    Divisor d = combo(*cfg_, {{1, "L_0y0"}, {1, "L_0yI"}, {1, "L_00z"}, {1, "L_0Iz"}});
    return scale(d, Rational(1, 2));
}

Divisor DiscriminantGroup::ell2() const {
    Divisor d = combo(*cfg_, {{1, "L_x00"}, {1, "L_x0I"}, {1, "L_00z"}, {1, "L_I0z"}});
    return scale(d, Rational(1, 2));
}

Divisor DiscriminantGroup::m() const {
    Divisor d = combo(*cfg_, {{2, "E_0II"},
                              {2, "E_I0I"},
                              {2, "E_II0"},
                              {2, "E_III"},
                              {2, "L_x00"},
                              {3, "L_x0I"},
                              {3, "L_xI0"},
                              {2, "L_0y0"},
                              {1, "L_0yI"},
                              {1, "L_Iy0"},
                              {3, "L_0Iz"},
                              {1, "L_I0z"}});
    return scale(d, Rational(1, 4));
}

Divisor DiscriminantGroup::ell3() const {
    return add(scale(m(), Rational(2)), add(ell1(), ell2()));
}

std::vector<Rational> DiscriminantGroup::to_basis17(const Divisor& v) const {
    std::vector<Rational> out(17, Rational(0));
    const auto& basis = cfg_->basis17();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        auto it = rewrite_.find(i);
        if (it == rewrite_.end()) {
            auto pos = std::find(basis.begin(), basis.end(), i) - basis.begin();
            out[static_cast<std::size_t>(pos)] = out[static_cast<std::size_t>(pos)] + v[i];
        } else {
            for (std::size_t j = 0; j < 17; ++j) out[j] = out[j] + v[i] * it->second[j];
        }
    }
    return out;
}

bool DiscriminantGroup::in_dual(const Divisor& v) const {
    for (std::size_t b : cfg_->basis17()) {
        Rational s(0);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!v[j].is_zero()) s = s + v[j] * Rational(cfg_->gram().at(j, b));
        }
        if (!s.is_integer()) return false;
    }
    return true;
}

bool DiscriminantGroup::in_lattice(const Divisor& v) const {
    for (const Rational& c : to_basis17(v)) {
        if (!c.is_integer()) return false;
    }
    return true;
}

int DiscriminantGroup::class_order(const Divisor& v) const {
    if (in_lattice(v)) return 1;
    if (in_lattice(scale(v, Rational(2)))) return 2;
    if (in_lattice(scale(v, Rational(4)))) return 4;
    throw std::logic_error("divisor class order exceeds 4");
}

QmodTwo DiscriminantGroup::q_value(const Divisor& v) const {
    return QmodTwo(pair_divisors(*cfg_, v, v));
}

bool DiscriminantGroup::same_class(const Divisor& a, const Divisor& b) const {
    return in_lattice(sub(a, b));
}

std::vector<Divisor> DiscriminantGroup::all_classes() const {
    std::vector<Divisor> out;
    const Divisor e1 = ell1(), e2 = ell2(), mm = m();
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
            for (int u = 0; u < 4; ++u) {
                Divisor v = add(add(scale(e1, Rational(s)), scale(e2, Rational(t))),
                                scale(mm, Rational(u)));
                out.push_back(v);
            }
        }
    }
    return out;
}

bool DiscriminantGroup::classes_distinct() const {
    auto cls = all_classes();
    for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
            if (same_class(cls[i], cls[j])) return false;
        }
    }
    return true;
}

std::vector<Divisor> DiscriminantGroup::isotropic_two_torsion() const {
    std::vector<Divisor> out;
    for (const Divisor& v : all_classes()) {
        if (class_order(v) != 2) continue;
        if (q_value(v) == QmodTwo(Rational(0))) out.push_back(v);
    }
    return out;
}

Divisor CurvePermutation::apply(const Divisor& v) const {
    Divisor out(v.size(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[image[i]] = v[i];
    return out;
}

bool CurvePermutation::preserves_gram(const CurveConfig& cfg) const {
    const ZMatrix& g = cfg.gram();
    for (std::size_t i = 0; i < image.size(); ++i) {
        for (std::size_t j = 0; j < image.size(); ++j) {
            if (g.at(image[i], image[j]) != g.at(i, j)) return false;
        }
    }
    return true;
}

CurvePermutation involution_eps(const CurveConfig& cfg, int axis) {
    CurvePermutation p;
    p.name = std::string("eps_") + kAxisChar[axis];
    const auto& labels = cfg.labels();
    p.image.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        CurveLabel l = labels[i];
        if (l.kind == CurveLabel::Kind::Line && l.axis == axis) {
            p.image[i] = i; // lines along the axis are fixed
            continue;
        }
        l.at[axis] = 1 - l.at[axis];
        p.image[i] = cfg.index_of(l.name());
    }
    return p;
}

CurvePermutation coordinate_permutation(const CurveConfig& cfg, const std::array<int, 3>& sigma) {
    CurvePermutation p;
    {
        std::ostringstream os;
        os << "perm_" << kAxisChar[sigma[0]] << kAxisChar[sigma[1]] << kAxisChar[sigma[2]];
        p.name = os.str();
    }
    const auto& labels = cfg.labels();
    p.image.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const CurveLabel& l = labels[i];
        // coordinate k of the image point is coordinate sigma^{-1}(k) of the source
        std::array<int, 3> inv{};
        for (int k = 0; k < 3; ++k) inv[sigma[k]] = k;
        if (l.kind == CurveLabel::Kind::Exceptional) {
            p.image[i] = cfg.index_of(
                CurveLabel::exceptional(l.at[inv[0]], l.at[inv[1]], l.at[inv[2]]).name());
        } else {
            int new_axis = sigma[l.axis];
            std::array<int, 3> at{};
            for (int k = 0; k < 3; ++k) at[k] = (k == new_axis) ? -1 : l.at[inv[k]];
            int p1 = -1, p2 = -1;
            for (int k = 0; k < 3; ++k) {
                if (k == new_axis) continue;
                (p1 < 0 ? p1 : p2) = k;
            }
            p.image[i] = cfg.index_of(CurveLabel::line(new_axis, at[p1], at[p2]).name());
        }
    }
    return p;
}

std::array<int, 3> DiscAutomorphism::apply(const std::array<int, 3>& x) const {
    std::array<int, 3> out = {0, 0, 0};
    for (int g = 0; g < 3; ++g) {
        out[0] += x[g] * gen_images[g][0];
        out[1] += x[g] * gen_images[g][1];
        out[2] += x[g] * gen_images[g][2];
    }
    out[0] = ((out[0] % 2) + 2) % 2;
    out[1] = ((out[1] % 2) + 2) % 2;
    out[2] = ((out[2] % 4) + 4) % 4;
    return out;
}

bool DiscAutomorphism::operator==(const DiscAutomorphism& o) const {
    return gen_images == o.gen_images;
}

bool DiscAutomorphism::operator<(const DiscAutomorphism& o) const {
    return gen_images < o.gen_images;
}

namespace {

DiscAutomorphism compose(const DiscAutomorphism& a, const DiscAutomorphism& b) {
    // (a . b)(x) = a(b(x))
    DiscAutomorphism c;
    for (int g = 0; g < 3; ++g) c.gen_images[g] = a.apply(b.gen_images[g]);
    return c;
}

DiscAutomorphism identity_aut() {
    return DiscAutomorphism{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
}

DiscAutomorphism invert(const DiscAutomorphism& a) {
    DiscAutomorphism p = a;
    DiscAutomorphism prev = identity_aut();
    while (!(p == identity_aut())) {
        prev = p;
        p = compose(p, a);
    }
    return prev;
}

} // namespace

bool OqGroup::is_abelian() const {
    for (const auto& a : elements) {
        for (const auto& b : elements) {
            if (!(compose(a, b) == compose(b, a))) return false;
        }
    }
    return true;
}

std::size_t OqGroup::center_order() const {
    std::size_t n = 0;
    for (const auto& a : elements) {
        bool central = true;
        for (const auto& b : elements) {
            if (!(compose(a, b) == compose(b, a))) {
                central = false;
                break;
            }
        }
        if (central) ++n;
    }
    return n;
}

std::size_t OqGroup::derived_order() const {
    std::set<DiscAutomorphism> gen;
    for (const auto& a : elements) {
        for (const auto& b : elements) {
            gen.insert(compose(compose(a, b), compose(invert(a), invert(b))));
        }
    }
    // close under composition
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<DiscAutomorphism> next = gen;
        for (const auto& a : gen) {
            for (const auto& b : gen) {
                if (next.insert(compose(a, b)).second) grew = true;
            }
        }
        gen.swap(next);
    }
    return gen.size();
}

bool OqGroup::contains(const DiscAutomorphism& a) const {
    return std::find(elements.begin(), elements.end(), a) != elements.end();
}

std::array<int, 3> OqGroup::isotropic_action(const DiscAutomorphism& a) const {
    // isotropic classes in coordinates: ell1=(1,0,0), ell2=(0,1,0), ell3=(1,1,2)
    const std::array<std::array<int, 3>, 3> iso = {{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}};
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i) {
        auto im = a.apply(iso[i]);
        int found = -1;
        for (int j = 0; j < 3; ++j) {
            if (im == iso[j]) found = j;
        }
        if (found < 0) throw std::logic_error("automorphism does not permute isotropic classes");
        out[i] = found;
    }
    return out;
}

OqGroup enumerate_Oq(const DiscriminantGroup& disc) {
    // q-values of all 16 elements, indexed by (s,t,u).
    auto qv = [&](const std::array<int, 3>& x) {
        Divisor v = add(add(scale(disc.ell1(), Rational(x[0])), scale(disc.ell2(), Rational(x[1]))),
                        scale(disc.m(), Rational(x[2])));
        return disc.q_value(v);
    };
    std::map<std::array<int, 3>, QmodTwo> qtab;
    std::vector<std::array<int, 3>> all;
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
            for (int u = 0; u < 4; ++u) {
                all.push_back({s, t, u});
                qtab.emplace(std::array<int, 3>{s, t, u}, qv({s, t, u}));
            }
        }
    }

    std::vector<std::array<int, 3>> two_torsion;
    for (const auto& x : all) {
        if ((2 * x[2]) % 4 == 0) two_torsion.push_back(x);
    }

    OqGroup grp;
    for (const auto& a1 : two_torsion) {
        for (const auto& a2 : two_torsion) {
            for (const auto& c : all) {
                DiscAutomorphism cand{{a1, a2, c}};
                std::set<std::array<int, 3>> image;
                bool ok = true;
                for (const auto& x : all) {
                    auto y = cand.apply(x);
                    if (!(qtab.at(y) == qtab.at(x))) {
                        ok = false;
                        break;
                    }
                    image.insert(y);
                }
                if (ok && image.size() == all.size()) grp.elements.push_back(cand);
            }
        }
    }
    std::sort(grp.elements.begin(), grp.elements.end());
    return grp;
}

DiscAutomorphism induced_disc_map(const DiscriminantGroup& disc, const CurvePermutation& p) {
    const Divisor gens[3] = {disc.ell1(), disc.ell2(), disc.m()};
    DiscAutomorphism out;
    for (int g = 0; g < 3; ++g) {
        Divisor w = p.apply(gens[g]);
        bool found = false;
        for (int s = 0; s < 2 && !found; ++s) {
            for (int t = 0; t < 2 && !found; ++t) {
                for (int u = 0; u < 4 && !found; ++u) {
                    Divisor v = add(add(scale(gens[0], Rational(s)), scale(gens[1], Rational(t))),
                                    scale(gens[2], Rational(u)));
                    if (disc.same_class(w, v)) {
                        out.gen_images[g] = {s, t, u};
                        found = true;
                    }
                }
            }
        }
        if (!found) throw std::logic_error("permutation image not in discriminant group");
    }
    return out;
}

} // namespace hessk3
