#pragma once

// The subgroup lattice of a finite group and its conjugation action.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "glat/groups.hpp"
#include "glat/lattice.hpp"

namespace glat {

struct SubgroupLattice {
  FiniteGroup group;
  std::vector<Subgroup> subgroups;  // sorted by (order, members)
  FiniteLattice lattice;            // element i is subgroups[i]

  std::size_t index_of(const Subgroup& h) const {
    auto it = std::find(subgroups.begin(), subgroups.end(), h);
    if (it == subgroups.end()) fail(errc::malformed_table, "not a subgroup of this lattice");
    return static_cast<std::size_t>(it - subgroups.begin());
  }
};

/// All subgroups: cyclic subgroups first, then joins of known subgroups
/// until no new subgroup appears. Every subgroup is the join of the cyclic
/// subgroups of its elements, so the fixpoint is complete.
inline SubgroupLattice subgroup_lattice(const FiniteGroup& G) {
  if (G.order() > 48) fail(errc::too_large, "subgroup lattice limited to |G| <= 48");
  std::vector<std::vector<std::size_t>> found;
  auto add = [&](std::vector<std::size_t> members) {
    if (std::find(found.begin(), found.end(), members) != found.end()) return false;
    found.push_back(std::move(members));
    return true;
  };
  for (std::size_t g = 0; g < G.order(); ++g) add(G.closure({g}));
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t current = found.size();
    for (std::size_t i = 0; i < current; ++i)
      for (std::size_t j = i + 1; j < current; ++j) {
        std::vector<std::size_t> u;
        std::set_union(found[i].begin(), found[i].end(), found[j].begin(), found[j].end(), std::back_inserter(u));
        grew |= add(G.closure(u));
      }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  const std::size_t m = found.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index[found[i]] = i;
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  std::vector<std::vector<std::size_t>> meet(m, std::vector<std::size_t>(m)), join(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      leq[i][j] = std::includes(found[j].begin(), found[j].end(), found[i].begin(), found[i].end());
      std::vector<std::size_t> inter, uni;
      std::set_intersection(found[i].begin(), found[i].end(), found[j].begin(), found[j].end(), std::back_inserter(inter));
      std::set_union(found[i].begin(), found[i].end(), found[j].begin(), found[j].end(), std::back_inserter(uni));
      meet[i][j] = index.at(inter);
      join[i][j] = index.at(G.closure(uni));
    }

  SubgroupLattice out;
  out.group = G;
  std::vector<std::string> labels;
  for (auto& f : found) {
    std::string s = "{";
    for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + G.label(f[k]);
    labels.push_back(s + "}");
    out.subgroups.push_back(Subgroup{f});
  }
  out.lattice = validate_lattice({std::move(leq), std::move(meet), std::move(join), std::move(labels)});
  return out;
}

/// g·H = gHg^{-1}.
inline GLatticeAction conjugation_glattice(const SubgroupLattice& S) {
  const auto& G = S.group;
  std::vector<std::vector<std::size_t>> table(G.order(), std::vector<std::size_t>(S.subgroups.size()));
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t i = 0; i < S.subgroups.size(); ++i) table[g][i] = S.index_of(conjugate(G, g, S.subgroups[i]));
  return GLatticeAction(G, S.lattice, table);
}

inline GLatticeAction conjugation_glattice(const FiniteGroup& G) { return conjugation_glattice(subgroup_lattice(G)); }

}  // namespace glat
