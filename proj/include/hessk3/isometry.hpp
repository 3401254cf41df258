#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hessk3/rational.hpp"
#include "hessk3/zmatrix.hpp"

namespace hessk3 {

// Bilinear form of the transcendental lattice U + U(2) + <-4> on Z^5.
ZMatrix q_form();

// An integer isometry of q_form(), carried with the word that produced it.
struct IsometryNs {
    ZMatrix mat;
    std::vector<std::string> word;

    bool is_orthogonal() const; // t(mat) Q mat == Q
    IsometryNs then(const IsometryNs& next) const; // next.mat * mat, words concatenated
};

IsometryNs identity_ns();
IsometryNs embed_GL2(const std::array<std::array<long, 2>, 2>& a); // Prop 2.5(1) block map
IsometryNs embed_sym(const std::array<std::array<long, 2>, 2>& b); // translation family
IsometryNs w_element();
IsometryNs minus_one();
IsometryNs swap34();  // = embed_GL2([[0,1],[1,0]])
IsometryNs neg_e5();  // = embed_GL2([[1,0],[0,-1]])
// The two |z|-decreasing multipliers from the sublattice reduction, sign +-1.
IsometryNs reduction_move_r1(int sign);
IsometryNs reduction_move_r2(int sign);

// 2x2 rational symmetric matrices, used for the Psi coordinates on the domain.
struct Sym2 {
    Rational a, b, d; // [[a, b], [b, d]]
    bool operator==(const Sym2& o) const { return a == o.a && b == o.b && d == o.d; }
    Rational det() const { return a * d - b * b; }
};

// A rational point of the quadric z2 = -2(z3 z4 - z5^2), normalized z1 = 1.
std::vector<Rational> quadric_point(const Rational& z3, const Rational& z4, const Rational& z5);

// Psi(z) = [[z3, z5], [z5, z4]] after renormalizing z1 to 1.
// Returns nullopt when z1 = 0 (point at infinity for this chart).
std::optional<Sym2> psi(const std::vector<Rational>& z);

std::vector<Rational> apply_isometry(const IsometryNs& g, const std::vector<Rational>& z);

// Expected Psi images under the three generator families.
Sym2 act_gl2(const std::array<std::array<long, 2>, 2>& a, const Sym2& tau); // A tau tA
Sym2 translate(const std::array<std::array<long, 2>, 2>& b, const Sym2& tau);
std::optional<Sym2> act_w(const Sym2& tau); // -(1/2) tau^{-1}, nullopt when singular

// --- sublattice reduction -------------------------------------------------

// Triple (x, y, z) encoding the primitive vector x e3 + y e4 + z e5.
struct SublatticeTriple {
    long x, y, z;
    bool operator==(const SublatticeTriple& o) const { return x == o.x && y == o.y && z == o.z; }
};

// 4xy - 4z^2, preserved by every reduction move.
long triple_norm(const SublatticeTriple& t);

enum class NormalFormTag { M1, M2 };

struct ReductionResult {
    NormalFormTag tag;
    SublatticeTriple endpoint; // (1,3,0) or (2,2,1)
    IsometryNs transform;      // certifies each step; endpoint = +-(transform applied to input)
    std::size_t steps;
};

// Reduces a norm-12 triple (xy - z^2 = 3, gcd 1) to M1 = (1,3,0) or M2 = (2,2,1).
ReductionResult reduce_sublattice(const SublatticeTriple& t, std::size_t step_bound = 200);

// Exhaustive integer solutions of xy = z^2 + 3, |x| > |z|, |y| > |z| inside the box.
std::vector<SublatticeTriple> enumerate_solutions(long bound);

// --- hyperbolic pair transitivity ------------------------------------------

struct PairTransitivityResult {
    bool success;
    IsometryNs gamma; // gamma x = e1, gamma y = e2 when success
    std::string note; // failure description otherwise
};

// For x, y with txQx = tyQy = 0, txQy = 1, finds gamma in the group generated
// by embed_GL2 / embed_sym / w / -1 with gamma x = e1 and gamma y = e2.
PairTransitivityResult unimodular_pair_transitivity(const std::vector<mpz_class>& x,
                                                    const std::vector<mpz_class>& y,
                                                    std::size_t budget = 256);

} // namespace hessk3
