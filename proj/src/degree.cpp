#include "twd/degree.hpp"

#include <cctype>
#include <ostream>

#include "twd/error.hpp"

namespace twd {

namespace {

using boost::multiprecision::cpp_int;

void check_unit(const Rational& r) {
    if (r < 0 || r > 1) {
        throw InvalidArgument("degree " + r.str() + " outside [0,1]");
    }
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Degree::Degree(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw InvalidArgument("degree with zero denominator");
    value_ = Rational(cpp_int(numerator), cpp_int(denominator));
    check_unit(value_);
}

Degree::Degree(Rational value) : value_(std::move(value)) { check_unit(value_); }

Degree Degree::parse(std::string_view text) {
    auto bad = [&] { return InvalidArgument("malformed degree '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw bad();
        cpp_int d{std::string(den)};
        if (d == 0) throw bad();
        return Degree(Rational(cpp_int(std::string(num)), d));
    }

    auto dot = text.find('.');
    auto whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw bad();
    if (!whole.empty() && !all_digits(whole)) throw bad();
    if (dot != std::string_view::npos && !all_digits(frac)) throw bad();

    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    cpp_int num = whole.empty() ? cpp_int(0) : cpp_int(std::string(whole));
    num *= scale;
    if (!frac.empty()) num += cpp_int(std::string(frac));
    return Degree(Rational(num, scale));
}

Degree Degree::complement() const { return Degree(Rational(1) - value_); }

Degree operator*(const Degree& a, const Degree& b) {
    Degree out;
    out.value_ = a.value_ * b.value_;
    return out;
}

std::string Degree::to_fraction() const {
    auto num = boost::multiprecision::numerator(value_);
    auto den = boost::multiprecision::denominator(value_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string Degree::to_decimal(int places) const {
    cpp_int scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    // floor(v * scale + 1/2); v >= 0 so integer division floors.
    auto num = boost::multiprecision::numerator(value_);
    auto den = boost::multiprecision::denominator(value_);
    cpp_int scaled = (2 * num * scale + den) / (2 * den);

    cpp_int whole = scaled / scale;
    cpp_int frac = scaled % scale;
    std::string out = whole.str();
    if (frac == 0) return out;

    std::string digits = frac.str();
    digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    return out + "." + digits;
}

double Degree::to_double() const { return value_.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.to_fraction(); }

}  // namespace twd
