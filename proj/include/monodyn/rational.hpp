#ifndef MONODYN_RATIONAL_HPP
#define MONODYN_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

namespace monodyn {

/// Exact rational over int64, always normalized with positive denominator.
/// Bound formulas only ever produce quarters, but the type is kept general.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }

    std::int64_t floor() const {
        if (num >= 0) return num / den;
        return -(((-num) + den - 1) / den);
    }
    std::int64_t ceil() const { return -Rational(-num, den).floor(); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(Rational a, Rational b) { return Rational(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rational operator-(Rational a, Rational b) { return Rational(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
    friend Rational operator/(Rational a, Rational b) { return Rational(a.num * b.den, a.den * b.num); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

} // namespace monodyn

#endif
