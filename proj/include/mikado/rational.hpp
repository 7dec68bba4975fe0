#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mikado {

/// Exact fraction with 64-bit numerator and positive denominator, always reduced.
/// Arithmetic goes through 128-bit intermediates and throws on overflow.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    /// Accepts "3", "-2", "3/2", "1.1", "0.125", "1e-3"-free decimals.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    Rational operator-() const { return Rational(-num_, den_); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// An integrability exponent in [1, inf]: an exact rational or infinity.
class Exponent {
public:
    Exponent(Rational value) : value_(value) {}
    Exponent(std::int64_t value) : value_(value) {}

    static Exponent infinity();

    /// "inf", "infinity" or a rational literal.
    static Exponent parse(std::string_view text);

    bool is_infinite() const { return infinite_; }
    /// Finite value; throws if infinite.
    Rational value() const;
    /// 1/p, with 1/inf = 0.
    Rational reciprocal() const;
    double to_double() const;
    std::string to_string() const;

    friend bool operator==(const Exponent& a, const Exponent& b);
    friend std::partial_ordering operator<=>(const Exponent& a, const Exponent& b);

private:
    Exponent() = default;
    bool infinite_ = false;
    Rational value_;
};

}  // namespace mikado
