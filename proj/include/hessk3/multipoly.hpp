#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hessk3/rational.hpp"

namespace hessk3 {

// Sparse multivariate polynomial over Q with a fixed, ordered variable list.
// Arithmetic requires identical variable lists on both operands.
class MultiPoly {
public:
    using Exps = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(const std::vector<std::string>& vars, const Rational& c);
    static MultiPoly variable(const std::vector<std::string>& vars, std::size_t index,
                              int power = 1);
    static MultiPoly monomial(const std::vector<std::string>& vars, const Exps& e,
                              const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exps, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const Exps& e) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scale(const Rational& c) const;
    MultiPoly pow(unsigned e) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    int total_degree() const;  // -1 for zero polynomial
    int degree_in(std::size_t var) const;
    bool is_homogeneous(int degree) const;
    // Weighted homogeneity in a subset of the variables.
    bool is_weighted_homogeneous(const std::vector<std::size_t>& vars,
                                 const std::vector<int>& weights, int degree) const;

    MultiPoly derivative(std::size_t var) const;
    MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
    Rational eval(const std::vector<Rational>& point) const;
    // Partial evaluation: fix a subset of variables to rationals.
    MultiPoly eval_partial(const std::map<std::size_t, Rational>& fixed) const;

    // Exact division in lex order; nullopt when the division leaves a remainder.
    std::optional<MultiPoly> divide_exact(const MultiPoly& g) const;

    // Truncation to total degree <= bound (used by the series layer).
    MultiPoly truncate_total(int bound) const;

    std::string to_string() const;

private:
    void add_term(const Exps& e, const Rational& c);
    void require_same_ring(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exps, Rational> terms_;
};

}  // namespace hessk3
