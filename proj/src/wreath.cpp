#include "solvlen/wreath.hpp"

#include <numeric>

#include "solvlen/error.hpp"

namespace solvlen {

PermutationGroup wreath_product(const PermutationGroup& base,
                                const PermutationGroup& top) {
  uint64_t m = base.degree(), n = top.degree();
  uint64_t mn = m * n;
  if (mn > 100000)
    throw Error("wreath product: degree " + std::to_string(mn) +
                " exceeds the resource guard");
  uint32_t degree = static_cast<uint32_t>(mn);

  std::vector<Perm> gens;
  // Base generators in every block. Embedding in each block directly keeps
  // the product correct even for intransitive tops.
  for (uint64_t b = 0; b < n; ++b)
    for (const Perm& h : base.generators()) {
      if (h.is_identity()) continue;
      std::vector<uint32_t> img(degree);
      std::iota(img.begin(), img.end(), 0u);
      for (uint64_t j = 0; j < m; ++j)
        img[b * m + j] = static_cast<uint32_t>(b * m + h[j]);
      gens.push_back(Perm::unchecked(std::move(img)));
    }
  // Top generators permuting whole blocks.
  for (const Perm& s : top.generators()) {
    if (s.is_identity()) continue;
    std::vector<uint32_t> img(degree);
    for (uint64_t b = 0; b < n; ++b)
      for (uint64_t j = 0; j < m; ++j)
        img[b * m + j] = static_cast<uint32_t>(uint64_t(s[b]) * m + j);
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermutationGroup(degree, std::move(gens));
}

PermutationGroup iterated_wreath(const PermutationGroup& h, uint32_t copies) {
  if (copies < 1) throw Error("iterated wreath: need at least one copy");
  double degree_estimate = 1;
  for (uint32_t i = 0; i < copies; ++i) {
    degree_estimate *= h.degree();
    if (degree_estimate > 10000)
      throw Error("iterated wreath: degree " +
                  std::to_string(static_cast<uint64_t>(degree_estimate)) +
                  " exceeds the 10^4 resource guard");
  }
  PermutationGroup w = h;
  for (uint32_t i = 1; i < copies; ++i) w = wreath_product(w, h);
  return w;
}

} // namespace solvlen
