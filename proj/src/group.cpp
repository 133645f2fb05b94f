#include "solvlen/group.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "solvlen/error.hpp"

namespace solvlen {

struct PermutationGroup::Data {
  uint32_t degree;
  std::vector<Perm> generators;
  mutable std::once_flag chain_once;
  mutable std::optional<StabilizerChain> chain;
};

PermutationGroup::PermutationGroup(uint32_t degree,
                                   std::vector<Perm> generators)
    : data_(std::make_shared<Data>()) {
  if (degree == 0) throw Error("group degree must be positive");
  for (const Perm& g : generators)
    if (g.degree() != degree) throw Error("generator degree mismatch");
  if (generators.empty()) generators.emplace_back(degree);
  data_->degree = degree;
  data_->generators = std::move(generators);
}

PermutationGroup::PermutationGroup(uint32_t degree,
                                   std::vector<Perm> generators,
                                   StabilizerChain chain)
    : PermutationGroup(degree, std::move(generators)) {
  data_->chain.emplace(std::move(chain));
  std::call_once(data_->chain_once, [] {});
}

uint32_t PermutationGroup::degree() const { return data_->degree; }

const std::vector<Perm>& PermutationGroup::generators() const {
  return data_->generators;
}

const StabilizerChain& PermutationGroup::chain() const {
  std::call_once(data_->chain_once, [this] {
    data_->chain.emplace(
        StabilizerChain::build(data_->degree, data_->generators));
  });
  return *data_->chain;
}

std::vector<uint32_t> PermutationGroup::orbit(uint32_t point) const {
  if (point >= degree()) throw Error("orbit: point out of range");
  std::vector<bool> in(degree(), false);
  std::vector<uint32_t> queue{point};
  in[point] = true;
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (const Perm& g : generators()) {
      uint32_t y = g[queue[qi]];
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool PermutationGroup::is_transitive() const {
  return orbit(0).size() == degree();
}

} // namespace solvlen
