#pragma once

#include <cstdint>
#include <vector>

#include "solvlen/factor.hpp"
#include "solvlen/group.hpp"

namespace solvlen {

struct SeriesReport {
  enum class Kind { derived, lower_central };
  Kind kind;
  std::vector<PermutationGroup> terms; // terms[0] is the input group
  std::vector<Factorization> orders;
  bool reached_trivial = false;

  /// Derived length: index of the first trivial term. Only meaningful for
  /// a derived series that reached the trivial group.
  uint32_t derived_length() const;
};

/// Smallest subgroup of g containing the seeds and closed under
/// conjugation by g's generators. Seeds must be members of g.
PermutationGroup normal_closure(const PermutationGroup& g,
                                const std::vector<Perm>& seeds);

/// Subgroup generated by commutators, as the normal closure of the
/// generator commutators inside g.
PermutationGroup derived_subgroup(const PermutationGroup& g);

/// G = G^(0) >= G^(1) >= ... until trivial (solvable) or stationary
/// (reported as not solvable via reached_trivial = false).
SeriesReport derived_series(const PermutationGroup& g,
                            uint32_t max_steps = 64);

/// gamma_1 = G, gamma_{i+1} = <[x,y] : x in gens(gamma_i), y in gens(G)>^G,
/// until stationary or max_terms terms.
SeriesReport lower_central_series(const PermutationGroup& g,
                                  uint32_t max_terms);

/// Exponent sum of the order; refuses groups that are not solvable, where
/// the prime-count formula would undercount the composition series.
uint64_t composition_length(const PermutationGroup& g);

/// Composition length of terms[i]/terms[i+1].
uint64_t quotient_clength(const SeriesReport& sr, size_t i);

/// Frattini subgroup of a 2-group: generated by the derived subgroup's
/// generators and the squares of g's generators.
PermutationGroup frattini_subgroup_2group(const PermutationGroup& g);

/// All index-2 (maximal) subgroups of a 2-group, one per hyperplane of
/// g/Phi(g), each generated by Schreier generators for a 2-element
/// transversal. Order of results follows the hyperplane enumeration and is
/// deterministic. Rank above 20 is refused.
std::vector<PermutationGroup>
maximal_index2_subgroups(const PermutationGroup& g);

/// Derived length of every subgroup in the list; data-parallel over the
/// subgroups (they are independent computations).
std::vector<uint32_t>
derived_lengths_parallel(const std::vector<PermutationGroup>& subgroups);

} // namespace solvlen
