#pragma once

#include <cstdint>
#include <vector>

#include "solvlen/perm.hpp"

namespace solvlen::oracle {

/// Every element of <gens> by breadth-first products, independent of the
/// stabilizer-chain machinery. Throws if more than `limit` elements appear.
std::vector<Perm> closure_elements(uint32_t degree,
                                   const std::vector<Perm>& gens,
                                   size_t limit);

/// Same result, level-synchronous with OpenMP over each frontier.
std::vector<Perm> closure_elements_parallel(uint32_t degree,
                                            const std::vector<Perm>& gens,
                                            size_t limit);

/// Orders along the derived series computed on full element sets: all
/// commutators of all pairs, closed, repeatedly. Returns the element count
/// of every term (first entry is |G|, last is 1 for solvable input).
std::vector<size_t> derived_series_orders(uint32_t degree,
                                          const std::vector<Perm>& elements,
                                          size_t limit);

/// Number of index-2 subgroups, counted as the nonzero sign assignments of
/// the generators that extend to a homomorphism onto {+1,-1}; this is
/// independent of any Frattini-quotient reasoning.
size_t count_index2_subgroups(uint32_t degree, const std::vector<Perm>& gens,
                              const std::vector<Perm>& elements);

/// All n! permutations of degree n (n <= 8).
std::vector<Perm> all_perms(uint32_t n);

} // namespace solvlen::oracle
