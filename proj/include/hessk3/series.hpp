#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "hessk3/rational.hpp"

namespace hessk3 {

// Truncated one-variable series. Exponent k encodes e^{pi*i*k*tau/unit};
// all exponents are >= 0 and <= order.
class LaurentSeries1 {
public:
    LaurentSeries1() : unit_(8), order_(0) {}
    LaurentSeries1(int unit, int order);
    static LaurentSeries1 one(int unit, int order);
    static LaurentSeries1 monomial(int unit, int order, int exponent, const Rational& c);

    int unit() const { return unit_; }
    int order() const { return order_; }
    const std::map<int, Rational>& terms() const { return c_; }
    Rational coeff(int exponent) const;
    bool is_zero() const { return c_.empty(); }
    std::size_t nonzero_count() const { return c_.size(); }
    void set(int exponent, const Rational& c);

    LaurentSeries1 operator-() const;
    LaurentSeries1 operator+(const LaurentSeries1& o) const;
    LaurentSeries1 operator-(const LaurentSeries1& o) const;
    LaurentSeries1 operator*(const LaurentSeries1& o) const;
    LaurentSeries1 scale(const Rational& c) const;
    LaurentSeries1 pow(unsigned e) const;
    LaurentSeries1 truncate(int order) const;
    // Re-expresses the series in a new exponent unit; every exponent k becomes
    // k * new_unit / unit, which must stay integral.
    LaurentSeries1 rescale_unit(int new_unit) const;

    // True when the two series agree on all exponents <= min(order, o.order).
    bool agrees_with(const LaurentSeries1& o) const;
    // First exponent where the two disagree (for failure reports), or -1.
    int first_difference(const LaurentSeries1& o) const;

    std::complex<double> eval(const std::complex<double>& tau) const;
    nlohmann::json to_json() const;

private:
    int unit_, order_;
    std::map<int, Rational> c_;
};

// Truncated three-variable exponential series supported on the cone
// {p >= 0, r >= 0, 4pr >= m^2}, graded by p + r <= order. Exponent
// (p, m, r) encodes e^{pi*i*(p*tau1 + m*tau2 + r*tau3)/8}.
class ConeSeries {
public:
    using Key = std::array<int, 3>;

    ConeSeries() : order_(0) {}
    explicit ConeSeries(int order) : order_(order) {}
    static ConeSeries one(int order);
    static bool in_cone(int p, int m, int r) {
        return p >= 0 && r >= 0 && 4L * p * r >= 1L * m * m;
    }

    int order() const { return order_; }
    const std::map<Key, Rational>& terms() const { return c_; }
    Rational coeff(int p, int m, int r) const;
    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const { return c_.size(); }
    void set(int p, int m, int r, const Rational& c);

    ConeSeries operator-() const;
    ConeSeries operator+(const ConeSeries& o) const;
    ConeSeries operator-(const ConeSeries& o) const;
    ConeSeries operator*(const ConeSeries& o) const;
    ConeSeries scale(const Rational& c) const;
    ConeSeries pow(unsigned e) const;
    ConeSeries truncate(int order) const;
    bool agrees_with(const ConeSeries& o) const;

    std::complex<double> eval(const std::complex<double>& tau1,
                              const std::complex<double>& tau2,
                              const std::complex<double>& tau3) const;
    nlohmann::json to_json() const;

private:
    void check_key(int p, int m, int r) const;
    int order_;
    std::map<Key, Rational> c_;
};

// Truncated two-variable series in (tau1, tau3), exponents in unit 1/8,
// graded by p + r <= order. Image of ConeSeries under tau2 -> 0.
class ProductSeries {
public:
    using Key = std::pair<int, int>;

    ProductSeries() : order_(0) {}
    explicit ProductSeries(int order) : order_(order) {}

    int order() const { return order_; }
    const std::map<Key, Rational>& terms() const { return c_; }
    Rational coeff(int p, int r) const;
    bool is_zero() const { return c_.empty(); }
    void set(int p, int r, const Rational& c);

    ProductSeries operator+(const ProductSeries& o) const;
    ProductSeries operator-(const ProductSeries& o) const;
    ProductSeries operator*(const ProductSeries& o) const;
    ProductSeries scale(const Rational& c) const;
    bool agrees_with(const ProductSeries& o) const;

    // f(tau1) * g(tau3) as a two-variable series; both factors must be unit 8.
    static ProductSeries outer(const LaurentSeries1& f, const LaurentSeries1& g);

    nlohmann::json to_json() const;

private:
    int order_;
    std::map<Key, Rational> c_;
};

}  // namespace hessk3
