#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "solvlen/error.hpp"

namespace solvlen::oracle {

namespace {

struct ImagesHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    return hash_images(v);
  }
};

using ImageSet = std::unordered_set<std::vector<uint32_t>, ImagesHash>;

std::vector<Perm> set_to_perms(const ImageSet& set) {
  std::vector<std::vector<uint32_t>> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Perm> out;
  out.reserve(sorted.size());
  for (auto& img : sorted) out.push_back(Perm::unchecked(std::move(img)));
  return out;
}

ImageSet closure_set(uint32_t degree, const std::vector<Perm>& gens,
                     size_t limit) {
  ImageSet seen;
  std::vector<std::vector<uint32_t>> frontier;
  std::vector<uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0u);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<std::vector<uint32_t>> next;
    for (const auto& x : frontier)
      for (const Perm& g : gens) {
        std::vector<uint32_t> y(degree);
        for (uint32_t i = 0; i < degree; ++i) y[i] = g[x[i]];
        if (seen.insert(y).second) {
          if (seen.size() > limit)
            throw Error("closure oracle: exceeded element limit " +
                        std::to_string(limit));
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

} // namespace

std::vector<Perm> closure_elements(uint32_t degree,
                                   const std::vector<Perm>& gens,
                                   size_t limit) {
  return set_to_perms(closure_set(degree, gens, limit));
}

std::vector<Perm> closure_elements_parallel(uint32_t degree,
                                            const std::vector<Perm>& gens,
                                            size_t limit) {
  // Level-synchronous BFS: products land in one flat buffer (no
  // allocations inside the parallel region), dedup runs over hash shards.
  // The element set, and hence the sorted output, matches the serial run.
  constexpr size_t kShards = 16;
  std::vector<ImageSet> seen(kShards);
  std::vector<uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0u);
  seen[hash_images(id) % kShards].insert(id);
  std::vector<std::vector<uint32_t>> frontier{id};
  size_t total = 1;
  while (!frontier.empty()) {
    size_t count = frontier.size() * gens.size();
    std::vector<uint32_t> flat(count * degree);
    std::vector<size_t> shard_of(count);
#pragma omp parallel for schedule(static)
    for (ptrdiff_t k = 0; k < static_cast<ptrdiff_t>(count); ++k) {
      const auto& x = frontier[k / gens.size()];
      const Perm& g = gens[k % gens.size()];
      uint32_t* y = flat.data() + size_t(k) * degree;
      for (uint32_t i = 0; i < degree; ++i) y[i] = g[x[i]];
      shard_of[k] = hash_images(y, degree) % kShards;
    }
    std::vector<std::vector<size_t>> buckets(kShards);
    for (size_t k = 0; k < count; ++k) buckets[shard_of[k]].push_back(k);
    std::vector<std::vector<std::vector<uint32_t>>> fresh(kShards);
#pragma omp parallel for schedule(dynamic, 1)
    for (ptrdiff_t s = 0; s < static_cast<ptrdiff_t>(kShards); ++s) {
      for (size_t k : buckets[s]) {
        const uint32_t* y = flat.data() + k * degree;
        std::vector<uint32_t> img(y, y + degree);
        if (seen[s].insert(img).second)
          fresh[s].push_back(std::move(img));
      }
    }
    frontier.clear();
    for (auto& shard : fresh) {
      total += shard.size();
      for (auto& y : shard) frontier.push_back(std::move(y));
    }
    if (total > limit)
      throw Error("closure oracle: exceeded element limit " +
                  std::to_string(limit));
  }
  std::vector<std::vector<uint32_t>> sorted;
  sorted.reserve(total);
  for (const auto& shard : seen)
    for (const auto& img : shard) sorted.push_back(img);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Perm> out;
  out.reserve(sorted.size());
  for (auto& img : sorted) out.push_back(Perm::unchecked(std::move(img)));
  return out;
}

std::vector<size_t> derived_series_orders(uint32_t degree,
                                          const std::vector<Perm>& elements,
                                          size_t limit) {
  std::vector<size_t> orders{elements.size()};
  std::vector<Perm> current = elements;
  while (current.size() > 1) {
    ImageSet comms;
    for (const Perm& a : current)
      for (const Perm& b : current) {
        Perm c = commutator(a, b);
        comms.insert(c.images());
      }
    std::vector<Perm> comm_gens = set_to_perms(comms);
    ImageSet next_set = closure_set(degree, comm_gens, limit);
    if (next_set.size() == current.size()) {
      orders.push_back(next_set.size());
      break; // perfect, not solvable
    }
    current = set_to_perms(next_set);
    orders.push_back(current.size());
  }
  return orders;
}

size_t count_index2_subgroups(uint32_t degree, const std::vector<Perm>& gens,
                              const std::vector<Perm>& elements) {
  if (gens.size() > 20)
    throw Error("index-2 oracle: too many generators to enumerate signs");
  // Index elements for sign propagation.
  std::unordered_map<std::vector<uint32_t>, uint32_t, ImagesHash> index;
  for (uint32_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i].images(), i);

  size_t count = 0;
  for (uint32_t mask = 1; mask < (1u << gens.size()); ++mask) {
    std::vector<int8_t> sign(elements.size(), -1);
    std::vector<uint32_t> id(degree);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<uint32_t> queue{index.at(id)};
    sign[queue[0]] = 0;
    bool consistent = true;
    for (size_t qi = 0; qi < queue.size() && consistent; ++qi) {
      const Perm& x = elements[queue[qi]];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Perm y = compose(x, gens[gi]);
        uint32_t yi = index.at(y.images());
        int8_t s = (sign[queue[qi]] + ((mask >> gi) & 1)) & 1;
        if (sign[yi] < 0) {
          sign[yi] = s;
          queue.push_back(yi);
        } else if (sign[yi] != s) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) ++count;
  }
  return count;
}

std::vector<Perm> all_perms(uint32_t n) {
  if (n > 8) throw Error("all_perms: degree too large");
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::unchecked(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

} // namespace solvlen::oracle
