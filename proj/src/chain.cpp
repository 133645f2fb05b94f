#include "solvlen/chain.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "solvlen/error.hpp"

namespace solvlen {

StabilizerChain StabilizerChain::build(uint32_t degree,
                                       const std::vector<Perm>& generators) {
  if (degree == 0) throw Error("stabilizer chain: degree must be positive");
  StabilizerChain c(degree);
  // First base point: the smallest point moved by any generator.
  uint32_t first_base = degree;
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      throw Error("stabilizer chain: generator degree mismatch");
    first_base = std::min(first_base, g.smallest_moved());
  }
  if (first_base < degree) c.add_level(first_base);
  for (const Perm& g : generators) {
    if (g.is_identity()) continue;
    Sift s = c.sift(g, 0);
    if (s.stop_level < c.levels_.size() || !s.residue.is_identity())
      c.insert_residue(s.residue, 0, s.stop_level);
  }
  c.complete_from(c.levels_.empty() ? 0 : c.levels_.size() - 1);
  // Completion bookkeeping doubles as the verification pass: every
  // (orbit point, generator) Schreier pair must have been sifted.
  for (const Level& lvl : c.levels_)
    for (uint32_t checked : lvl.checked)
      if (checked != lvl.gen_ids.size())
        throw Error("stabilizer chain: verification pass incomplete");
  return c;
}

std::vector<uint32_t> StabilizerChain::base() const {
  std::vector<uint32_t> b;
  b.reserve(levels_.size());
  for (const Level& l : levels_) b.push_back(l.base_point);
  return b;
}

Natural StabilizerChain::order() const {
  Natural n = 1;
  for (const Level& l : levels_) n *= Natural(l.orbit.size());
  return n;
}

StabilizerChain::Sift StabilizerChain::sift(const Perm& p,
                                            size_t from_level) const {
  std::vector<uint32_t> h = p.images();
  std::vector<uint32_t> path;
  for (size_t l = from_level; l < levels_.size(); ++l) {
    const Level& lvl = levels_[l];
    uint32_t beta = h[lvl.base_point];
    if (beta == lvl.base_point) continue;
    if (lvl.slot[beta] < 0)
      return Sift{Perm::unchecked(std::move(h)), l};
    // h := h * u_beta^-1; the tree path from beta yields the inverse
    // factors in application order.
    tree_path(lvl, beta, path);
    for (uint32_t i = 0; i < degree_; ++i) {
      uint32_t v = h[i];
      for (uint32_t gid : path) v = pool_inv_[gid][v];
      h[i] = v;
    }
  }
  return Sift{Perm::unchecked(std::move(h)), levels_.size()};
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.degree() != degree_) throw Error("contains: degree mismatch");
  Sift s = sift(p, 0);
  return s.stop_level == levels_.size() && s.residue.is_identity();
}

void StabilizerChain::tree_path(const Level& lvl, uint32_t point,
                                std::vector<uint32_t>& out) const {
  out.clear();
  uint32_t pt = point;
  for (;;) {
    int32_t slot = lvl.slot[pt];
    int32_t gid = lvl.tree_gen[slot];
    if (gid < 0) break;
    out.push_back(static_cast<uint32_t>(gid));
    pt = lvl.tree_prev[slot];
  }
}

Perm StabilizerChain::transversal(size_t level, uint32_t point) const {
  const Level& lvl = levels_[level];
  if (point >= degree_ || lvl.slot[point] < 0)
    throw Error("transversal: point not in basic orbit");
  std::vector<uint32_t> path;
  tree_path(lvl, point, path);
  std::vector<uint32_t> img(degree_);
  std::iota(img.begin(), img.end(), 0u);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Perm& g = pool_[*it];
    for (uint32_t i = 0; i < degree_; ++i) img[i] = g[img[i]];
  }
  return Perm::unchecked(std::move(img));
}

Perm StabilizerChain::schreier_generator(size_t level, uint32_t point,
                                         uint32_t gen_id) const {
  const Level& lvl = levels_[level];
  const Perm& s = pool_[gen_id];
  uint32_t gamma = s[point];
  std::vector<uint32_t> up, down;
  tree_path(lvl, point, up); // ids from point to base
  tree_path(lvl, gamma, down);
  std::vector<uint32_t> img(degree_);
  for (uint32_t i = 0; i < degree_; ++i) {
    uint32_t v = i;
    for (auto it = up.rbegin(); it != up.rend(); ++it) v = pool_[*it][v];
    v = s[v];
    for (uint32_t gid : down) v = pool_inv_[gid][v];
    img[i] = v;
  }
  return Perm::unchecked(std::move(img));
}

void StabilizerChain::add_level(uint32_t base_point) {
  Level lvl;
  lvl.base_point = base_point;
  lvl.slot.assign(degree_, -1);
  lvl.orbit.push_back(base_point);
  lvl.slot[base_point] = 0;
  lvl.tree_prev.push_back(base_point);
  lvl.tree_gen.push_back(-1);
  lvl.checked.push_back(0);
  levels_.push_back(std::move(lvl));
}

void StabilizerChain::try_add_orbit_point(Level& lvl, uint32_t point,
                                          uint32_t prev, int32_t gen_id) {
  if (lvl.slot[point] >= 0) return;
  lvl.slot[point] = static_cast<int32_t>(lvl.orbit.size());
  lvl.orbit.push_back(point);
  lvl.tree_prev.push_back(prev);
  lvl.tree_gen.push_back(gen_id);
  lvl.checked.push_back(0);
}

void StabilizerChain::grow_orbit(size_t lvl_index, size_t first_new_gen) {
  Level& lvl = levels_[lvl_index];
  size_t old_size = lvl.orbit.size();
  // Established points under the new generators only; the old tree is
  // append-only so existing transversals stay valid.
  for (size_t oi = 0; oi < old_size; ++oi) {
    uint32_t pt = lvl.orbit[oi];
    for (size_t gi = first_new_gen; gi < lvl.gen_ids.size(); ++gi)
      try_add_orbit_point(lvl, pool_[lvl.gen_ids[gi]][pt], pt,
                          static_cast<int32_t>(lvl.gen_ids[gi]));
  }
  // Fresh points under all generators (orbit keeps growing during the scan).
  for (size_t oi = old_size; oi < lvl.orbit.size(); ++oi) {
    uint32_t pt = lvl.orbit[oi];
    for (uint32_t gid : lvl.gen_ids)
      try_add_orbit_point(lvl, pool_[gid][pt], pt, static_cast<int32_t>(gid));
  }
}

void StabilizerChain::insert_strong_gen(const Perm& h, size_t lo, size_t hi) {
  pool_.push_back(h);
  pool_inv_.push_back(inverse(h));
  uint32_t id = static_cast<uint32_t>(pool_.size() - 1);
  for (size_t l = lo; l <= hi; ++l) {
    levels_[l].gen_ids.push_back(id);
    grow_orbit(l, levels_[l].gen_ids.size() - 1);
  }
}

void StabilizerChain::insert_residue(const Perm& residue, size_t lo,
                                     size_t stop_level) {
  size_t hi = stop_level;
  if (hi == levels_.size()) add_level(residue.smallest_moved());
  insert_strong_gen(residue, lo, hi);
}

void StabilizerChain::complete_from(size_t deepest_dirty) {
  if (levels_.empty()) return;
  ptrdiff_t i = static_cast<ptrdiff_t>(
      std::min(deepest_dirty, levels_.size() - 1));
  while (i >= 0) {
    bool jumped = false;
    for (size_t oi = 0; oi < levels_[i].orbit.size() && !jumped; ++oi) {
      while (levels_[i].checked[oi] < levels_[i].gen_ids.size()) {
        uint32_t gi = levels_[i].checked[oi]++;
        Perm sg = schreier_generator(static_cast<size_t>(i),
                                     levels_[i].orbit[oi],
                                     levels_[i].gen_ids[gi]);
        if (sg.is_identity()) continue;
        Sift s = sift(sg, static_cast<size_t>(i) + 1);
        if (s.stop_level == levels_.size() && s.residue.is_identity())
          continue;
        insert_residue(s.residue, static_cast<size_t>(i) + 1, s.stop_level);
        // The inserted levels have pending pairs; resume at the deepest.
        // (stop_level indexes the appended level when one was created.)
        i = static_cast<ptrdiff_t>(s.stop_level);
        jumped = true;
        break;
      }
    }
    if (!jumped) --i;
  }
}

void StabilizerChain::extend(const Perm& g) {
  if (g.degree() != degree_) throw Error("extend: degree mismatch");
  if (g.is_identity()) return;
  Sift s = sift(g, 0);
  if (s.stop_level == levels_.size() && s.residue.is_identity()) return;
  insert_residue(s.residue, 0, s.stop_level);
  complete_from(s.stop_level);
}

bool StabilizerChain::verify_serial() const {
  for (size_t l = 0; l < levels_.size(); ++l) {
    const Level& lvl = levels_[l];
    for (uint32_t pt : lvl.orbit)
      for (uint32_t gid : lvl.gen_ids) {
        Perm sg = schreier_generator(l, pt, gid);
        if (sg.is_identity()) continue;
        Sift s = sift(sg, l + 1);
        if (s.stop_level != levels_.size() || !s.residue.is_identity())
          return false;
      }
  }
  return true;
}

bool StabilizerChain::verify_parallel() const {
  // Flatten the (level, point, generator) triples, then check them in a
  // data-parallel sweep. Result is identical to verify_serial.
  struct Triple {
    uint32_t level, point, gen_id;
  };
  std::vector<Triple> work;
  for (size_t l = 0; l < levels_.size(); ++l)
    for (uint32_t pt : levels_[l].orbit)
      for (uint32_t gid : levels_[l].gen_ids)
        work.push_back({static_cast<uint32_t>(l), pt, gid});

  long failures = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failures)
  for (ptrdiff_t k = 0; k < static_cast<ptrdiff_t>(work.size()); ++k) {
    const Triple& t = work[k];
    Perm sg = schreier_generator(t.level, t.point, t.gen_id);
    if (sg.is_identity()) continue;
    Sift s = sift(sg, t.level + 1);
    if (s.stop_level != levels_.size() || !s.residue.is_identity())
      failures += 1;
  }
  return failures == 0;
}

bool StabilizerChain::check_random_words(uint32_t count, uint32_t max_len,
                                         uint64_t seed) const {
  if (pool_.empty() || levels_.empty()) return true;
  const std::vector<uint32_t>& gens0 = levels_[0].gen_ids;
  if (gens0.empty()) return true;
  std::mt19937_64 rng(seed);
  for (uint32_t k = 0; k < count; ++k) {
    uint32_t len = 1 + static_cast<uint32_t>(rng() % max_len);
    std::vector<uint32_t> img(degree_);
    std::iota(img.begin(), img.end(), 0u);
    for (uint32_t step = 0; step < len; ++step) {
      const Perm& g = pool_[gens0[rng() % gens0.size()]];
      for (uint32_t i = 0; i < degree_; ++i) img[i] = g[img[i]];
    }
    Sift s = sift(Perm::unchecked(std::move(img)), 0);
    if (s.stop_level != levels_.size() || !s.residue.is_identity())
      return false;
  }
  return true;
}

} // namespace solvlen
