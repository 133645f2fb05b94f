#pragma once

#include <cstdint>
#include <vector>

#include "solvlen/natural.hpp"
#include "solvlen/perm.hpp"

namespace solvlen {

/// Base and strong generating set with Schreier-vector transversals.
///
/// The build is the deterministic Schreier-Sims: base points are the
/// smallest moved points, basic orbits grow append-only with stable
/// back-pointer trees, and every Schreier generator is sifted before the
/// build is considered complete. Rebuilding from the same generator list
/// reproduces the same base and the same order.
///
/// Transversals are not stored; they are multiplied out of the Schreier
/// vectors on demand (degree-648 groups with chains a few hundred levels
/// deep make explicit transversal tables wasteful).
class StabilizerChain {
public:
  struct Level {
    uint32_t base_point = 0;
    std::vector<uint32_t> gen_ids; // pool ids of generators fixing all earlier base points
    std::vector<uint32_t> orbit; // discovery order; orbit[0] == base_point
    std::vector<int32_t> slot; // point -> index into orbit, -1 outside
    std::vector<uint32_t> tree_prev; // per orbit slot: predecessor point
    std::vector<int32_t> tree_gen; // per orbit slot: pool id of edge, -1 at root
    std::vector<uint32_t> checked; // per orbit slot: verified prefix of gen_ids
  };

  static StabilizerChain build(uint32_t degree,
                               const std::vector<Perm>& generators);

  uint32_t degree() const { return degree_; }
  size_t num_levels() const { return levels_.size(); }
  const Level& level(size_t i) const { return levels_[i]; }
  std::vector<uint32_t> base() const;
  const std::vector<Perm>& pool() const { return pool_; }

  Natural order() const;
  bool contains(const Perm& p) const;

  struct Sift {
    Perm residue;
    size_t stop_level; // == num_levels() with identity residue for members
  };
  Sift sift(const Perm& p, size_t from_level = 0) const;

  /// Transversal element mapping level's base point to `point`.
  Perm transversal(size_t level, uint32_t point) const;
  Perm schreier_generator(size_t level, uint32_t point, uint32_t gen_id) const;

  /// Re-sift every Schreier generator of every level. The build already
  /// guarantees this; these are the redundant-check kernels the tests and
  /// the benchmark compare.
  bool verify_serial() const;
  bool verify_parallel() const;

  /// Sift `count` seeded random generator words of length <= max_len.
  bool check_random_words(uint32_t count, uint32_t max_len,
                          uint64_t seed) const;

  /// Add one generator and restore completeness. Used by normal closure;
  /// groups never mutate a published chain.
  void extend(const Perm& g);

private:
  explicit StabilizerChain(uint32_t degree) : degree_(degree) {}

  void add_level(uint32_t base_point);
  void try_add_orbit_point(Level& lvl, uint32_t point, uint32_t prev,
                           int32_t gen_id);
  void grow_orbit(size_t lvl_index, size_t first_new_gen);
  void insert_strong_gen(const Perm& h, size_t lo, size_t hi);
  void insert_residue(const Perm& residue, size_t lo, size_t stop_level);
  void complete_from(size_t deepest_dirty);
  // Collect pool ids along the Schreier tree from `point` up to the base.
  void tree_path(const Level& lvl, uint32_t point,
                 std::vector<uint32_t>& out) const;

  uint32_t degree_ = 0;
  std::vector<Perm> pool_;
  std::vector<Perm> pool_inv_;
  std::vector<Level> levels_;
};

} // namespace solvlen
