#pragma once

#include <string>

#include "solvlen/perm.hpp"

namespace solvlen {

// Disjoint-cycle text format, the wire format for elements. Points are
// 1-based in text and 0-based in Perm. "()" is the identity.
//
// parse_cycles("(2,3,5)(4,6,7)", 7) -> permutation of degree 7 fixing point 0.
// The degree is max(min_degree, largest point mentioned); at least 1.
// Malformed text, repeated points and points above min_degree (when the
// declared degree is binding) raise Error with the offending position.
Perm parse_cycles(const std::string& text, uint32_t min_degree = 0);

// Disjoint cycles sorted by smallest moved point, fixed points omitted,
// identity rendered as "()".
std::string format_cycles(const Perm& p);

} // namespace solvlen
