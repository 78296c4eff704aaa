#pragma once

#include <span>
#include <string>
#include <string_view>

#include "twd/degree.hpp"

namespace twd::fuzzy {

// Each kind fixes both the T-norm and its dual S-implication:
// Min pairs with Kleene-Dienes, Product with Reichenbach.
enum class TNormKind { Min, Product };

std::string_view to_string(TNormKind kind);
// "min" | "prod" (also "product"); throws InvalidArgument otherwise.
TNormKind parse_tnorm(std::string_view text);

// n-ary T-norm, folded from the right. Throws InvalidArgument on an empty list.
Degree tnorm(TNormKind kind, std::span<const Degree> values);
Degree tnorm(TNormKind kind, const Degree& a, const Degree& b);

// Kleene-Dienes max(1-u1, u2) for Min, Reichenbach 1 - u1 + u1*u2 for Product.
Degree implication(TNormKind kind, const Degree& u1, const Degree& u2);

// Standard negator 1 - u.
Degree negate(const Degree& u);

}  // namespace twd::fuzzy
