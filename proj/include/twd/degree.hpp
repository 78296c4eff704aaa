#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace twd {

using Rational = boost::multiprecision::cpp_rational;

// An exact rational number in [0,1]. Every similarity, satisfiability,
// approximability and confidence value is a Degree; no floating point is
// involved until a value is rendered for display.
class Degree {
public:
    Degree() = default;
    Degree(std::int64_t numerator, std::int64_t denominator);
    explicit Degree(Rational value);

    static Degree zero() { return Degree{}; }
    static Degree one() { return Degree{1, 1}; }

    // Accepts "0", "1", "0.3", ".25", "1/3". Throws InvalidArgument when the
    // text is malformed or the value lies outside [0,1].
    static Degree parse(std::string_view text);

    const Rational& value() const noexcept { return value_; }

    // 1 - u
    Degree complement() const;

    friend Degree operator*(const Degree& a, const Degree& b);

    friend bool operator==(const Degree& a, const Degree& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "25/36", "0", "1"
    std::string to_fraction() const;
    // Round-half-up to `places` decimals, trailing zeros trimmed: "0.694", "0.5", "1".
    std::string to_decimal(int places = 3) const;

    double to_double() const;

private:
    Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Degree& d);

}  // namespace twd
