#pragma once

#include <cstdint>

#include "solvlen/group.hpp"

namespace solvlen {

/// Imprimitive wreath product of base (degree m) and top (degree n) on mn
/// points, block b covering points b*m ... b*m+m-1. Generators: every base
/// generator embedded in every block, then the top generators permuting
/// blocks. With this point encoding the product is associative on the
/// nose, not merely up to relabeling.
PermutationGroup wreath_product(const PermutationGroup& base,
                                const PermutationGroup& top);

/// Left-associated tower h wr h wr ... wr h with `copies` factors; degree
/// (deg h)^copies, guarded at 10^4.
PermutationGroup iterated_wreath(const PermutationGroup& h, uint32_t copies);

} // namespace solvlen
