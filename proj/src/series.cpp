#include "solvlen/series.hpp"

#include <unordered_set>

#include "solvlen/coset.hpp"
#include "solvlen/error.hpp"

namespace solvlen {

namespace {

struct ImagesHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    return hash_images(v);
  }
};

// Deduplicate candidate elements by image table, dropping identities.
void push_unique(std::vector<Perm>& out,
                 std::unordered_set<std::vector<uint32_t>, ImagesHash>& seen,
                 Perm p) {
  if (p.is_identity()) return;
  if (seen.insert(p.images()).second) out.push_back(std::move(p));
}

} // namespace

uint32_t SeriesReport::derived_length() const {
  return static_cast<uint32_t>(terms.size()) - 1;
}

PermutationGroup normal_closure(const PermutationGroup& g,
                                const std::vector<Perm>& seeds) {
  for (const Perm& s : seeds)
    if (!g.contains(s)) throw Error("normal closure: seed is not a member");

  StabilizerChain closure = StabilizerChain::build(g.degree(), {});
  std::vector<Perm> gens;
  std::unordered_set<std::vector<uint32_t>, ImagesHash> tried;

  // Worklist: every adopted generator is conjugated by every generator of
  // g exactly once; members stay members when the closure grows, so a
  // candidate needs at most one test against the current chain.
  std::vector<Perm> queue;
  auto adopt = [&](const Perm& p) {
    if (p.is_identity() || !tried.insert(p.images()).second) return;
    if (closure.contains(p)) return;
    closure.extend(p);
    gens.push_back(p);
    queue.push_back(p);
  };
  for (const Perm& s : seeds) adopt(s);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Perm x = queue[qi]; // queue may reallocate while growing
    for (const Perm& c : g.generators()) adopt(conjugate(x, c));
  }

  if (gens.empty()) gens.emplace_back(g.degree());
  return PermutationGroup(g.degree(), std::move(gens), std::move(closure));
}

PermutationGroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Perm> seeds;
  std::unordered_set<std::vector<uint32_t>, ImagesHash> seen;
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      push_unique(seeds, seen, commutator(gens[i], gens[j]));
    }
  return normal_closure(g, seeds);
}

SeriesReport derived_series(const PermutationGroup& g, uint32_t max_steps) {
  if (max_steps < 1) throw Error("derived series: max_steps must be >= 1");
  SeriesReport sr;
  sr.kind = SeriesReport::Kind::derived;
  sr.terms.push_back(g);
  sr.orders.push_back(factorize(g.order()));
  while (!sr.terms.back().is_trivial()) {
    if (sr.terms.size() > max_steps)
      throw Error("derived series: did not terminate within max_steps");
    PermutationGroup next = derived_subgroup(sr.terms.back());
    if (next.order() == sr.terms.back().order()) return sr; // perfect: not solvable
    sr.terms.push_back(next);
    sr.orders.push_back(factorize(next.order()));
  }
  sr.reached_trivial = true;
  return sr;
}

SeriesReport lower_central_series(const PermutationGroup& g,
                                  uint32_t max_terms) {
  if (max_terms < 2) throw Error("lower central series: max_terms must be >= 2");
  SeriesReport sr;
  sr.kind = SeriesReport::Kind::lower_central;
  sr.terms.push_back(g);
  sr.orders.push_back(factorize(g.order()));
  while (sr.terms.size() < max_terms) {
    const PermutationGroup& prev = sr.terms.back();
    std::vector<Perm> seeds;
    std::unordered_set<std::vector<uint32_t>, ImagesHash> seen;
    for (const Perm& x : prev.generators())
      for (const Perm& y : g.generators())
        push_unique(seeds, seen, commutator(x, y));
    PermutationGroup next = normal_closure(g, seeds);
    if (next.order() == prev.order()) break; // stationary
    sr.terms.push_back(next);
    sr.orders.push_back(factorize(next.order()));
    if (next.is_trivial()) {
      sr.reached_trivial = true;
      break;
    }
  }
  if (!sr.terms.empty() && sr.terms.back().is_trivial())
    sr.reached_trivial = true;
  return sr;
}

uint64_t composition_length(const PermutationGroup& g) {
  SeriesReport sr = derived_series(g);
  if (!sr.reached_trivial)
    throw Error("composition length: group is not solvable");
  return factorize(g.order()).exponent_sum();
}

uint64_t quotient_clength(const SeriesReport& sr, size_t i) {
  if (i + 1 >= sr.orders.size())
    throw Error("quotient composition length: index out of range");
  return sr.orders[i].exponent_sum() - sr.orders[i + 1].exponent_sum();
}

PermutationGroup frattini_subgroup_2group(const PermutationGroup& g) {
  PermutationGroup derived = derived_subgroup(g);
  std::vector<Perm> gens;
  std::unordered_set<std::vector<uint32_t>, ImagesHash> seen;
  for (const Perm& x : derived.generators()) push_unique(gens, seen, x);
  for (const Perm& s : g.generators())
    push_unique(gens, seen, compose(s, s));
  if (gens.empty()) gens.emplace_back(g.degree());
  // Contains the derived subgroup, hence normal; equals G'G^2 because the
  // generator squares already generate the squares modulo G'.
  return PermutationGroup(g.degree(), std::move(gens));
}

std::vector<PermutationGroup>
maximal_index2_subgroups(const PermutationGroup& g) {
  Factorization f = factorize(g.order());
  if (!(f.factors.empty() ||
        (f.factors.size() == 1 && f.factors[0].first == 2)))
    throw Error("maximal index-2 subgroups: group is not a 2-group");

  PermutationGroup phi = frattini_subgroup_2group(g);
  Natural index = g.order() / phi.order();
  uint32_t rank = 0;
  while ((Natural(1) << rank) < index) ++rank;
  if ((Natural(1) << rank) != index)
    throw Error("maximal index-2 subgroups: Frattini index is not a 2-power");
  if (rank > 20)
    throw Error("maximal index-2 subgroups: rank " + std::to_string(rank) +
                " exceeds the enumeration bound 20");
  if (rank == 0) return {};

  CosetAction ca = coset_action(g, phi, uint64_t(1) << rank);
  uint32_t n_pts = ca.action.degree();

  // GF(2)-coordinates for the coset points. The action of g/Phi on the
  // Phi-cosets is regular, so each point is the coset of a unique element
  // and point labels inherit the vector-space structure.
  std::vector<uint32_t> coords(n_pts, 0);
  std::vector<bool> known(n_pts, false);
  known[0] = true;
  std::vector<uint32_t> known_list{0};
  std::vector<uint32_t> gen_coord(g.generators().size(), 0);
  uint32_t next_bit = 0;
  for (size_t si = 0; si < g.generators().size(); ++si) {
    const Perm& pi_s = ca.action.generators()[si];
    uint32_t p = pi_s[0];
    if (known[p]) {
      gen_coord[si] = coords[p];
      continue;
    }
    uint32_t bit = 1u << next_bit++;
    size_t old_count = known_list.size();
    for (size_t k = 0; k < old_count; ++k) {
      uint32_t q = known_list[k];
      uint32_t q2 = pi_s[q];
      coords[q2] = coords[q] | bit;
      known[q2] = true;
      known_list.push_back(q2);
    }
    gen_coord[si] = coords[p];
  }
  if (known_list.size() != n_pts || next_bit != rank)
    throw Error("maximal index-2 subgroups: coordinateization failed");

  auto parity = [](uint32_t x) { return __builtin_popcount(x) & 1; };

  std::vector<PermutationGroup> result;
  result.reserve((size_t(1) << rank) - 1);
  const auto& gens = g.generators();
  for (uint32_t functional = 1; functional < (1u << rank); ++functional) {
    // Transversal {e, t} with t any generator outside the hyperplane.
    int t_idx = -1;
    for (size_t si = 0; si < gens.size(); ++si)
      if (parity(functional & gen_coord[si])) {
        t_idx = static_cast<int>(si);
        break;
      }
    if (t_idx < 0)
      throw Error("maximal index-2 subgroups: functional vanished on all "
                  "generators");
    const Perm& t = gens[t_idx];
    const Perm t_inv = inverse(t);

    std::vector<Perm> sub_gens;
    std::unordered_set<std::vector<uint32_t>, ImagesHash> seen;
    for (int xi = 0; xi < 2; ++xi) {
      for (size_t si = 0; si < gens.size(); ++si) {
        Perm y = xi == 0 ? gens[si] : compose(t, gens[si]);
        bool outside = parity(functional &
                              (gen_coord[si] ^ (xi ? gen_coord[t_idx] : 0u)));
        Perm schreier = outside ? compose(y, t_inv) : std::move(y);
        push_unique(sub_gens, seen, std::move(schreier));
      }
    }
    if (sub_gens.empty()) sub_gens.emplace_back(g.degree());
    PermutationGroup m(g.degree(), std::move(sub_gens));
    if (g.order() != m.order() * 2)
      throw Error("maximal index-2 subgroups: subgroup has wrong index");
    result.push_back(std::move(m));
  }
  return result;
}

std::vector<uint32_t>
derived_lengths_parallel(const std::vector<PermutationGroup>& subgroups) {
  std::vector<uint32_t> lengths(subgroups.size(), 0);
  std::vector<std::string> errors(subgroups.size());
#pragma omp parallel for schedule(dynamic)
  for (ptrdiff_t i = 0; i < static_cast<ptrdiff_t>(subgroups.size()); ++i) {
    try {
      SeriesReport sr = derived_series(subgroups[i]);
      if (!sr.reached_trivial)
        errors[i] = "subgroup is not solvable";
      else
        lengths[i] = sr.derived_length();
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }
  for (const std::string& e : errors)
    if (!e.empty()) throw Error("derived lengths: " + e);
  return lengths;
}

} // namespace solvlen
