#include "hessk3/rational.hpp"

namespace hessk3 {

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(mpz_class(s));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    return Rational(num, den);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::invalid_argument("Rational: 0 to negative power");
        return Rational(0);
    }
    mpz_class n = num(), d = den();
    if (e < 0) {
        std::swap(n, d);
        e = -e;
        if (sgn(d) < 0) { n = -n; d = -d; }
    }
    mpz_class np, dp;
    mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(np, dp);
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

std::string Rational::to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

QmodTwo::QmodTwo(const Rational& r) {
    mpz_class half_floor = (r / Rational(2)).floor();
    rep_ = r - Rational(2) * Rational(half_floor);
}

}  // namespace hessk3
