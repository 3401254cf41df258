#include "hessk3/series.hpp"

#include <stdexcept>

namespace hessk3 {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}  // namespace

LaurentSeries1::LaurentSeries1(int unit, int order) : unit_(unit), order_(order) {
    if (unit <= 0) throw std::invalid_argument("LaurentSeries1: unit must be positive");
    if (order < 0) throw std::invalid_argument("LaurentSeries1: negative order");
}

LaurentSeries1 LaurentSeries1::one(int unit, int order) {
    LaurentSeries1 s(unit, order);
    s.c_[0] = Rational(1);
    return s;
}

LaurentSeries1 LaurentSeries1::monomial(int unit, int order, int exponent, const Rational& c) {
    LaurentSeries1 s(unit, order);
    s.set(exponent, c);
    return s;
}

Rational LaurentSeries1::coeff(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? Rational(0) : it->second;
}

void LaurentSeries1::set(int exponent, const Rational& c) {
    if (exponent < 0) throw std::invalid_argument("LaurentSeries1: negative exponent");
    if (exponent > order_ || c.is_zero()) {
        c_.erase(exponent);
        return;
    }
    c_[exponent] = c;
}

LaurentSeries1 LaurentSeries1::operator-() const {
    LaurentSeries1 r(unit_, order_);
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LaurentSeries1 LaurentSeries1::operator+(const LaurentSeries1& o) const {
    if (unit_ != o.unit_) throw std::invalid_argument("LaurentSeries1: unit mismatch");
    LaurentSeries1 r(unit_, std::min(order_, o.order_));
    for (const auto& [e, c] : c_)
        if (e <= r.order_) r.c_[e] = c;
    for (const auto& [e, c] : o.c_) {
        if (e > r.order_) continue;
        auto [it, fresh] = r.c_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r;
}

LaurentSeries1 LaurentSeries1::operator-(const LaurentSeries1& o) const { return *this + (-o); }

LaurentSeries1 LaurentSeries1::operator*(const LaurentSeries1& o) const {
    if (unit_ != o.unit_) throw std::invalid_argument("LaurentSeries1: unit mismatch");
    LaurentSeries1 r(unit_, std::min(order_, o.order_));
    for (const auto& [ea, ca] : c_) {
        if (ea > r.order_) break;
        for (const auto& [eb, cb] : o.c_) {
            int e = ea + eb;
            if (e > r.order_) break;
            auto [it, fresh] = r.c_.emplace(e, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    }
    return r;
}

LaurentSeries1 LaurentSeries1::scale(const Rational& c) const {
    LaurentSeries1 r(unit_, order_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : c_) r.c_[e] = v * c;
    return r;
}

LaurentSeries1 LaurentSeries1::pow(unsigned e) const {
    LaurentSeries1 r = one(unit_, order_);
    LaurentSeries1 base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

LaurentSeries1 LaurentSeries1::truncate(int order) const {
    LaurentSeries1 r(unit_, std::min(order, order_));
    for (const auto& [e, c] : c_)
        if (e <= r.order_) r.c_[e] = c;
    return r;
}

LaurentSeries1 LaurentSeries1::rescale_unit(int new_unit) const {
    if (new_unit <= 0) throw std::invalid_argument("LaurentSeries1: unit must be positive");
    long num = new_unit, den = unit_;
    LaurentSeries1 r(new_unit, static_cast<int>((static_cast<long>(order_) * num) / den));
    for (const auto& [e, c] : c_) {
        long scaled = static_cast<long>(e) * num;
        if (scaled % den != 0)
            throw std::invalid_argument("LaurentSeries1: exponent not integral in new unit");
        r.c_[static_cast<int>(scaled / den)] = c;
    }
    return r;
}

bool LaurentSeries1::agrees_with(const LaurentSeries1& o) const {
    if (unit_ != o.unit_) return false;
    int bound = std::min(order_, o.order_);
    for (const auto& [e, c] : c_)
        if (e <= bound && o.coeff(e) != c) return false;
    for (const auto& [e, c] : o.c_)
        if (e <= bound && coeff(e) != c) return false;
    return true;
}

int LaurentSeries1::first_difference(const LaurentSeries1& o) const {
    int bound = std::min(order_, o.order_);
    for (int e = 0; e <= bound; ++e)
        if (coeff(e) != o.coeff(e)) return e;
    return -1;
}

std::complex<double> LaurentSeries1::eval(const std::complex<double>& tau) const {
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> total = 0.0;
    for (const auto& [e, c] : c_)
        total += c.to_double() * std::exp(i * kPi * (double(e) / unit_) * tau);
    return total;
}

nlohmann::json LaurentSeries1::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : c_) {
        nlohmann::json t = nlohmann::json::array();
        t.push_back(e);
        t.push_back(c.num().get_str());
        t.push_back(c.den().get_str());
        terms.push_back(t);
    }
    return nlohmann::json{{"unit", unit_}, {"order", order_}, {"terms", terms}};
}

ConeSeries ConeSeries::one(int order) {
    ConeSeries s(order);
    s.c_[{0, 0, 0}] = Rational(1);
    return s;
}

Rational ConeSeries::coeff(int p, int m, int r) const {
    auto it = c_.find({p, m, r});
    return it == c_.end() ? Rational(0) : it->second;
}

void ConeSeries::check_key(int p, int m, int r) const {
    if (!in_cone(p, m, r))
        throw std::logic_error("ConeSeries: exponent outside cone");
}

void ConeSeries::set(int p, int m, int r, const Rational& c) {
    check_key(p, m, r);
    Key k{p, m, r};
    if (p + r > order_ || c.is_zero()) {
        c_.erase(k);
        return;
    }
    c_[k] = c;
}

ConeSeries ConeSeries::operator-() const {
    ConeSeries s(order_);
    for (const auto& [k, c] : c_) s.c_[k] = -c;
    return s;
}

ConeSeries ConeSeries::operator+(const ConeSeries& o) const {
    ConeSeries r(std::min(order_, o.order_));
    for (const auto& [k, c] : c_)
        if (k[0] + k[2] <= r.order_) r.c_[k] = c;
    for (const auto& [k, c] : o.c_) {
        if (k[0] + k[2] > r.order_) continue;
        auto [it, fresh] = r.c_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r;
}

ConeSeries ConeSeries::operator-(const ConeSeries& o) const { return *this + (-o); }

ConeSeries ConeSeries::operator*(const ConeSeries& o) const {
    ConeSeries r(std::min(order_, o.order_));
    for (const auto& [ka, ca] : c_) {
        int ga = ka[0] + ka[2];
        if (ga > r.order_) continue;
        for (const auto& [kb, cb] : o.c_) {
            if (ga + kb[0] + kb[2] > r.order_) continue;
            Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
            check_key(k[0], k[1], k[2]);  // closure of the cone under addition
            auto [it, fresh] = r.c_.emplace(k, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    }
    return r;
}

ConeSeries ConeSeries::scale(const Rational& c) const {
    ConeSeries r(order_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : c_) r.c_[k] = v * c;
    return r;
}

ConeSeries ConeSeries::pow(unsigned e) const {
    ConeSeries r = one(order_);
    ConeSeries base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

ConeSeries ConeSeries::truncate(int order) const {
    ConeSeries r(std::min(order, order_));
    for (const auto& [k, c] : c_)
        if (k[0] + k[2] <= r.order_) r.c_[k] = c;
    return r;
}

bool ConeSeries::agrees_with(const ConeSeries& o) const {
    int bound = std::min(order_, o.order_);
    for (const auto& [k, c] : c_)
        if (k[0] + k[2] <= bound && o.coeff(k[0], k[1], k[2]) != c) return false;
    for (const auto& [k, c] : o.c_)
        if (k[0] + k[2] <= bound && coeff(k[0], k[1], k[2]) != c) return false;
    return true;
}

std::complex<double> ConeSeries::eval(const std::complex<double>& tau1,
                                      const std::complex<double>& tau2,
                                      const std::complex<double>& tau3) const {
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> total = 0.0;
    for (const auto& [k, c] : c_) {
        std::complex<double> arg = (double(k[0]) * tau1 + double(k[1]) * tau2 +
                                    double(k[2]) * tau3) / 8.0;
        total += c.to_double() * std::exp(i * kPi * arg);
    }
    return total;
}

nlohmann::json ConeSeries::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : c_) {
        nlohmann::json t = nlohmann::json::array();
        t.push_back(k[0]);
        t.push_back(k[1]);
        t.push_back(k[2]);
        t.push_back(c.num().get_str());
        t.push_back(c.den().get_str());
        terms.push_back(t);
    }
    return nlohmann::json{{"unit", 8}, {"order", order_}, {"terms", terms}};
}

Rational ProductSeries::coeff(int p, int r) const {
    auto it = c_.find({p, r});
    return it == c_.end() ? Rational(0) : it->second;
}

void ProductSeries::set(int p, int r, const Rational& c) {
    if (p < 0 || r < 0) throw std::invalid_argument("ProductSeries: negative exponent");
    Key k{p, r};
    if (p + r > order_ || c.is_zero()) {
        c_.erase(k);
        return;
    }
    c_[k] = c;
}

ProductSeries ProductSeries::operator+(const ProductSeries& o) const {
    ProductSeries r(std::min(order_, o.order_));
    for (const auto& [k, c] : c_)
        if (k.first + k.second <= r.order_) r.c_[k] = c;
    for (const auto& [k, c] : o.c_) {
        if (k.first + k.second > r.order_) continue;
        auto [it, fresh] = r.c_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r;
}

ProductSeries ProductSeries::operator-(const ProductSeries& o) const {
    return *this + o.scale(Rational(-1));
}

ProductSeries ProductSeries::operator*(const ProductSeries& o) const {
    ProductSeries r(std::min(order_, o.order_));
    for (const auto& [ka, ca] : c_)
        for (const auto& [kb, cb] : o.c_) {
            int p = ka.first + kb.first, q = ka.second + kb.second;
            if (p + q > r.order_) continue;
            auto [it, fresh] = r.c_.emplace(Key{p, q}, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

ProductSeries ProductSeries::scale(const Rational& c) const {
    ProductSeries r(order_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : c_) r.c_[k] = v * c;
    return r;
}

bool ProductSeries::agrees_with(const ProductSeries& o) const {
    int bound = std::min(order_, o.order_);
    for (const auto& [k, c] : c_)
        if (k.first + k.second <= bound && o.coeff(k.first, k.second) != c) return false;
    for (const auto& [k, c] : o.c_)
        if (k.first + k.second <= bound && coeff(k.first, k.second) != c) return false;
    return true;
}

ProductSeries ProductSeries::outer(const LaurentSeries1& f, const LaurentSeries1& g) {
    if (f.unit() != 8 || g.unit() != 8)
        throw std::invalid_argument("ProductSeries: outer product expects unit-8 factors");
    ProductSeries r(std::min(f.order(), g.order()));
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) {
            if (ef + eg > r.order()) continue;
            r.set(ef, eg, r.coeff(ef, eg) + cf * cg);
        }
    return r;
}

nlohmann::json ProductSeries::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : c_) {
        nlohmann::json t = nlohmann::json::array();
        t.push_back(k.first);
        t.push_back(k.second);
        t.push_back(c.num().get_str());
        t.push_back(c.den().get_str());
        terms.push_back(t);
    }
    return nlohmann::json{{"unit", 8}, {"order", order_}, {"terms", terms}};
}

}  // namespace hessk3
