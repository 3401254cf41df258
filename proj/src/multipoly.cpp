#include "hessk3/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hessk3 {

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const Rational& c) {
    MultiPoly p(vars);
    if (!c.is_zero()) p.terms_[Exps(vars.size(), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, std::size_t index,
                              int power) {
    if (index >= vars.size()) throw std::invalid_argument("MultiPoly: variable index out of range");
    if (power < 0) throw std::invalid_argument("MultiPoly: negative power");
    MultiPoly p(vars);
    Exps e(vars.size(), 0);
    e[index] = power;
    p.terms_[e] = Rational(1);
    return p;
}

MultiPoly MultiPoly::monomial(const std::vector<std::string>& vars, const Exps& e,
                              const Rational& c) {
    if (e.size() != vars.size()) throw std::invalid_argument("MultiPoly: exponent length mismatch");
    MultiPoly p(vars);
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
    return terms_.begin()->second;
}

Rational MultiPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exps& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: mixed variable rings");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_ring(o);
    MultiPoly r(vars_);
    Exps e(vars_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scale(const Rational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool MultiPoly::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
    return true;
}

bool MultiPoly::is_weighted_homogeneous(const std::vector<std::size_t>& vars,
                                        const std::vector<int>& weights, int degree) const {
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (std::size_t k = 0; k < vars.size(); ++k) d += weights[k] * e[vars[k]];
        if (d != degree) return false;
    }
    return true;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
    require_same_ring(value);
    // Cache powers of the substituted value.
    std::vector<MultiPoly> powers = {constant(vars_, Rational(1))};
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= static_cast<std::size_t>(e[var]))
            powers.push_back(powers.back() * value);
        Exps rest = e;
        rest[var] = 0;
        r += monomial(vars_, rest, c) * powers[e[var]];
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("MultiPoly: eval arity mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= point[i].pow(e[i]);
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::eval_partial(const std::map<std::size_t, Rational>& fixed) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        Exps rest = e;
        for (const auto& [idx, val] : fixed) {
            if (e[idx] != 0) t *= val.pow(e[idx]);
            rest[idx] = 0;
        }
        r.add_term(rest, t);
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& g) const {
    require_same_ring(g);
    if (g.is_zero()) throw std::invalid_argument("MultiPoly: division by zero polynomial");
    MultiPoly q(vars_);
    MultiPoly r = *this;
    const auto& glt = *g.terms_.rbegin();  // lex-leading term
    while (!r.is_zero()) {
        const auto& rlt = *r.terms_.rbegin();
        Exps diff(vars_.size());
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] = rlt.first[i] - glt.first[i];
            if (diff[i] < 0) return std::nullopt;
        }
        MultiPoly t = monomial(vars_, diff, rlt.second / glt.second);
        q += t;
        r -= t * g;
    }
    return q;
}

MultiPoly MultiPoly::truncate_total(int bound) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) <= bound) r.terms_[e] = c;
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest lex term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        if (a != Rational(1) || !any_var) os << a.to_string();
        bool star = a != Rational(1) || !any_var;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

}  // namespace hessk3
