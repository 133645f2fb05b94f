#include "solvlen/coset.hpp"

#include "solvlen/error.hpp"

namespace solvlen {

uint32_t CosetAction::point_of(const Perm& x) const {
  for (uint32_t i = 0; i < reps.size(); ++i)
    if (subgroup.contains(compose(x, inverse(reps[i])))) return i;
  throw Error("coset point lookup: element is not in the parent group");
}

CosetAction coset_action(const PermutationGroup& g, const PermutationGroup& h,
                         uint64_t transversal_bound) {
  if (g.degree() != h.degree())
    throw Error("coset action: degree mismatch");
  for (const Perm& s : h.generators())
    if (!g.contains(s))
      throw Error("coset action: h is not a subgroup of g");
  Natural index = g.order() / h.order();
  if (index * h.order() != g.order() || index > Natural(transversal_bound))
    throw Error("coset action: index " + index.str() + " exceeds bound " +
                std::to_string(transversal_bound));
  uint32_t n = static_cast<uint32_t>(index);

  std::vector<Perm> reps{Perm(g.degree())};
  for (size_t qi = 0; qi < reps.size() && reps.size() < n; ++qi) {
    for (const Perm& s : g.generators()) {
      Perm y = compose(reps[qi], s);
      bool known = false;
      for (const Perm& r : reps)
        if (h.contains(compose(y, inverse(r)))) {
          known = true;
          break;
        }
      if (!known) {
        reps.push_back(std::move(y));
        if (reps.size() == n) break;
      }
    }
  }
  if (reps.size() != n)
    throw Error("coset action: enumeration found " +
                std::to_string(reps.size()) + " cosets, expected " +
                std::to_string(n));

  auto point_of = [&](const Perm& x) -> uint32_t {
    for (uint32_t i = 0; i < reps.size(); ++i)
      if (h.contains(compose(x, inverse(reps[i])))) return i;
    throw Error("coset action: internal rep lookup failure");
  };

  std::vector<Perm> action_gens;
  action_gens.reserve(g.generators().size());
  for (const Perm& s : g.generators()) {
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = point_of(compose(reps[i], s));
    action_gens.push_back(Perm(std::move(img)));
  }

  PermutationGroup action(n, std::move(action_gens));
  return CosetAction{std::move(action), std::move(reps), g, h};
}

} // namespace solvlen
