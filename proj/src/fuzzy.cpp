#include "twd/fuzzy.hpp"

#include <algorithm>

#include "twd/error.hpp"

namespace twd::fuzzy {

std::string_view to_string(TNormKind kind) {
    switch (kind) {
        case TNormKind::Min: return "min";
        case TNormKind::Product: return "prod";
    }
    return "?";
}

TNormKind parse_tnorm(std::string_view text) {
    if (text == "min") return TNormKind::Min;
    if (text == "prod" || text == "product") return TNormKind::Product;
    throw InvalidArgument("unknown T-norm '" + std::string(text) + "' (expected min or prod)");
}

Degree tnorm(TNormKind kind, const Degree& a, const Degree& b) {
    switch (kind) {
        case TNormKind::Min: return std::min(a, b);
        case TNormKind::Product: return a * b;
    }
    return a;
}

Degree tnorm(TNormKind kind, std::span<const Degree> values) {
    if (values.empty()) throw InvalidArgument("T-norm of an empty list");
    // T(u1, ..., un) = T(u1, T(u2, ..., un))
    Degree acc = values.back();
    for (auto it = values.rbegin() + 1; it != values.rend(); ++it) {
        acc = tnorm(kind, *it, acc);
    }
    return acc;
}

Degree implication(TNormKind kind, const Degree& u1, const Degree& u2) {
    switch (kind) {
        case TNormKind::Min: return std::max(u1.complement(), u2);
        // 1 - u1 + u1*u2 == 1 - u1*(1 - u2), which stays inside [0,1] at every step.
        case TNormKind::Product: return (u1 * u2.complement()).complement();
    }
    return u2;
}

Degree negate(const Degree& u) { return u.complement(); }

}  // namespace twd::fuzzy
