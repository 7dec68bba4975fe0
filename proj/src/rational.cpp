#include "mikado/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "mikado/error.hpp"

namespace mikado {

namespace {

__extension__ typedef __int128 Wide;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        const Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(Wide num, Wide den) {
    if (den == 0) throw InvalidArgument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Wide g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
    constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) throw InvalidArgument("rational: overflow");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidArgument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = g > 1 ? num / g : num;
    den_ = g > 1 ? den / g : den;
}

Rational Rational::parse(std::string_view text) {
    const auto fail = [&]() -> Rational {
        throw InvalidArgument("cannot parse \"" + std::string(text) + "\" as an exact rational");
    };
    if (text.empty()) return fail();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational a = parse(text.substr(0, slash));
        const Rational b = parse(text.substr(slash + 1));
        if (b.num() == 0) return fail();
        return a / b;
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    Wide num = 0;
    Wide den = 1;
    bool digits = false;
    bool fraction = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.' && !fraction) {
            fraction = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
        digits = true;
        num = num * 10 + (c - '0');
        if (fraction) den *= 10;
        if (num > Wide(std::numeric_limits<std::int64_t>::max()) || den > Wide(std::numeric_limits<std::int64_t>::max())) {
            return fail();
        }
    }
    if (!digits) return fail();
    return make(negative ? -num : num, den);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return make(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidArgument("rational: division by zero");
    return make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Wide lhs = Wide(a.num_) * b.den_;
    const Wide rhs = Wide(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Exponent Exponent::infinity() {
    Exponent e;
    e.infinite_ = true;
    return e;
}

Exponent Exponent::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Inf" || text == "oo") return infinity();
    return Exponent(Rational::parse(text));
}

Rational Exponent::value() const {
    if (infinite_) throw InvalidArgument("exponent is infinite");
    return value_;
}

Rational Exponent::reciprocal() const {
    if (infinite_) return Rational(0);
    return Rational(1) / value_;
}

double Exponent::to_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_.to_double();
}

std::string Exponent::to_string() const {
    return infinite_ ? "inf" : value_.to_string();
}

bool operator==(const Exponent& a, const Exponent& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

std::partial_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
    if (a.infinite_) return std::partial_ordering::greater;
    if (b.infinite_) return std::partial_ordering::less;
    return a.value_ <=> b.value_;
}

}  // namespace mikado
