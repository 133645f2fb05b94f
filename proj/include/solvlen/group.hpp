#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "solvlen/chain.hpp"
#include "solvlen/natural.hpp"
#include "solvlen/perm.hpp"

namespace solvlen {

/// Permutation group given by generators. Copies share one lazily built,
/// write-once stabilizer chain; all queries are safe under concurrent
/// readers (the cache fill runs under call_once).
class PermutationGroup {
public:
  PermutationGroup(uint32_t degree, std::vector<Perm> generators);

  // Adopt an already complete chain for these generators (normal closure
  // builds one incrementally and need not rebuild).
  PermutationGroup(uint32_t degree, std::vector<Perm> generators,
                   StabilizerChain chain);

  uint32_t degree() const;
  const std::vector<Perm>& generators() const;
  const StabilizerChain& chain() const;

  Natural order() const { return chain().order(); }
  bool contains(const Perm& p) const { return chain().contains(p); }
  bool is_trivial() const { return order() == 1; }

  /// Smallest generator-closed point set containing `point`, sorted.
  std::vector<uint32_t> orbit(uint32_t point) const;
  bool is_transitive() const;

private:
  struct Data;
  std::shared_ptr<Data> data_;
};

} // namespace solvlen
