#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hessk3/rational.hpp"
#include "hessk3/zmatrix.hpp"

namespace hessk3 {

// The 20 curves on the blown-up Hessian quartic: 12 lines L_{axis,t,u}
// (axis in {x,y,z}, t,u in {0,oo}) and 8 exceptional curves E_{abc} over the
// A1 points (a,b,c) in {0,oo}^3.  Coordinates use 0 for 0 and 1 for oo.
struct CurveLabel {
    enum class Kind { Line, Exceptional };
    Kind kind;
    int axis;              // 0,1,2 for lines; unused for exceptional
    std::array<int, 3> at; // at[axis] = -1 for lines (free coordinate)

    static CurveLabel line(int axis, int t, int u);
    static CurveLabel exceptional(int a, int b, int c);
    std::string name() const;
    bool operator==(const CurveLabel& o) const;
};

// Fixed-order curve configuration with intersection data.
class CurveConfig {
  public:
    CurveConfig();

    const std::vector<CurveLabel>& labels() const { return labels_; }
    std::size_t index_of(const std::string& name) const;
    const ZMatrix& gram() const { return gram_; }

    // Indices of the 17-curve basis (all curves except E_000, L_ooyoo, L_oooonz).
    const std::vector<std::size_t>& basis17() const { return basis17_; }
    ZMatrix gram17() const;

    std::size_t rank() const;
    mpz_class det17() const;
    std::pair<int, int> signature17() const;

  private:
    std::vector<CurveLabel> labels_;
    ZMatrix gram_;
    std::vector<std::size_t> basis17_;
};

// Rational divisor class supported on the 20 curves.
using Divisor = std::vector<Rational>;

Divisor zero_divisor();
Divisor curve_divisor(const CurveConfig& cfg, const std::string& name);
Divisor add(const Divisor& a, const Divisor& b);
Divisor sub(const Divisor& a, const Divisor& b);
Divisor scale(const Divisor& a, const Rational& c);

// The three relations from the redundancy of E_000, L_ooyoo, L_oooz,
// each returned as (lhs - rhs), which must pair to zero with every curve.
std::vector<std::pair<std::string, Divisor>> lattice_relations(const CurveConfig& cfg);

// Pairing <a, b> via the 20x20 Gram matrix.
Rational pair_divisors(const CurveConfig& cfg, const Divisor& a, const Divisor& b);

// True iff G * v = 0, i.e. v pairs to zero with all 20 curves.
bool is_relation(const CurveConfig& cfg, const Divisor& v);

// Discriminant group N*/N of the rank-17 lattice.
//
// Elements are represented by rational divisors; class arithmetic reduces
// through the relation rewriting onto the 17-curve basis.
class DiscriminantGroup {
  public:
    explicit DiscriminantGroup(const CurveConfig& cfg);

    const CurveConfig& config() const { return *cfg_; }
    std::vector<mpz_class> invariant_factors() const; // nontrivial ones

    // Generators ell_1, ell_2, m as rational 20-vectors.
    Divisor ell1() const;
    Divisor ell2() const;
    Divisor m() const;
    Divisor ell3() const; // 2m + ell1 + ell2

    // Rewrites a 20-vector to coordinates on the 17-curve basis.
    std::vector<Rational> to_basis17(const Divisor& v) const;
    bool in_dual(const Divisor& v) const;    // pairs integrally with N
    bool in_lattice(const Divisor& v) const; // integral basis17 coordinates

    int class_order(const Divisor& v) const; // order of [v] in N*/N (1,2,4)
    QmodTwo q_value(const Divisor& v) const; // q([v]) = <v,v> mod 2Z
    bool same_class(const Divisor& a, const Divisor& b) const;

    // All 16 classes as (s,t,u) . (ell1, ell2, m), s,t in {0,1}, u in {0..3}.
    std::vector<Divisor> all_classes() const;
    bool classes_distinct() const;

    // Order-2 classes with q = 0; expected {ell1, ell2, ell3}.
    std::vector<Divisor> isotropic_two_torsion() const;

  private:
    const CurveConfig* cfg_;
    ZMatrix gram17_;
    // relation rewriting: coefficients of each removed curve on the basis
    std::map<std::size_t, std::vector<Rational>> rewrite_;
};

// Label permutation acting on curves; represented by the image index table.
struct CurvePermutation {
    std::string name;
    std::vector<std::size_t> image; // curve i maps to curve image[i]

    Divisor apply(const Divisor& v) const;
    bool preserves_gram(const CurveConfig& cfg) const;
};

CurvePermutation involution_eps(const CurveConfig& cfg, int axis); // swap 0<->oo in one index
CurvePermutation coordinate_permutation(const CurveConfig& cfg, const std::array<int, 3>& sigma);

// An automorphism of the 16-element discriminant group, tabulated on
// (s,t,u) coordinates with s,t in Z/2 and u in Z/4.
struct DiscAutomorphism {
    // images of ell1, ell2, m in (s,t,u) coordinates
    std::array<std::array<int, 3>, 3> gen_images;

    std::array<int, 3> apply(const std::array<int, 3>& x) const;
    bool operator==(const DiscAutomorphism& o) const;
    bool operator<(const DiscAutomorphism& o) const;
};

// Structure report for O(q_N).
struct OqGroup {
    std::vector<DiscAutomorphism> elements;
    std::size_t order() const { return elements.size(); }
    bool is_abelian() const;
    std::size_t center_order() const;
    std::size_t derived_order() const;
    bool contains(const DiscAutomorphism& a) const;
    // permutation of the three isotropic classes induced by an element
    std::array<int, 3> isotropic_action(const DiscAutomorphism& a) const;
};

// Brute-force enumeration of automorphisms of (N*/N, q).
OqGroup enumerate_Oq(const DiscriminantGroup& disc);

// The automorphism induced on N*/N by a Gram-preserving curve permutation.
DiscAutomorphism induced_disc_map(const DiscriminantGroup& disc, const CurvePermutation& p);

} // namespace hessk3
