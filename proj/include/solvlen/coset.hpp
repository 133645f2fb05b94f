#pragma once

#include <cstdint>
#include <vector>

#include "solvlen/group.hpp"
#include "solvlen/perm.hpp"

namespace solvlen {

/// Permutation action of g on the right cosets of a subgroup h. The
/// identity coset is point 0 and reps[0] is the identity.
struct CosetAction {
  PermutationGroup action; // degree == index
  std::vector<Perm> reps;
  PermutationGroup parent;
  PermutationGroup subgroup;

  /// Coset point of an element of the parent group.
  uint32_t point_of(const Perm& x) const;
};

// Checks h <= g by membership of h's generators and |g:h| <= bound before
// enumerating. The kernel of the action contains the core of h in g.
CosetAction coset_action(const PermutationGroup& g, const PermutationGroup& h,
                         uint64_t transversal_bound);

} // namespace solvlen
