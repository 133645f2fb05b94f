#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solvlen/group.hpp"

namespace solvlen {

PermutationGroup symmetric_group(uint32_t n);
PermutationGroup cyclic_group(uint32_t n);

/// Generators of a matrix group over the prime field F_p.
struct MatrixGroupSpec {
  uint32_t p = 0;
  uint32_t dim = 0;
  // generators[k][i][j]: row i, column j of the k-th generator.
  std::vector<std::vector<std::vector<uint32_t>>> generators;
};

enum class MatrixAction {
  linear_nonzero, // on the p^dim - 1 nonzero vectors
  linear_all, // on all p^dim vectors (faithful for unipotent groups)
  affine // on all vectors, with the translations v -> v + e_i appended
};

/// Vectors of F_p^dim enumerated base-p with the least significant
/// coordinate first; a matrix acts by v -> g v. Point labels are therefore
/// reproducible across runs. Non-invertible generators and degrees above
/// 2^16 are refused.
PermutationGroup matrix_to_perm(const MatrixGroupSpec& spec,
                                MatrixAction mode);

enum class NamedGroup { G8, G9, H7, A3, S2, S3, S4 };

PermutationGroup named_group(NamedGroup name);
NamedGroup parse_named_group(const std::string& name);

/// Unipotent upper-triangular n x n matrices over F_p as permutations of
/// the p^n vectors, generated by the n-1 elementary transvections
/// I + E_{i,i+1}. Order p^(n(n-1)/2).
PermutationGroup unitriangular(uint32_t p, uint32_t n);

/// "1 1;0 1" -> one matrix: rows separated by ';', entries by spaces.
std::vector<std::vector<uint32_t>> parse_matrix(const std::string& text,
                                                uint32_t p);

} // namespace solvlen
