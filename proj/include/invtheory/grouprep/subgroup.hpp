#pragma once

#include <set>
#include <vector>

#include "invtheory/grouprep/group.hpp"

namespace invtheory {

/// A subgroup H of a parent group with a left-coset transversal of G/H.
template <class Field>
struct SubgroupHandle {
  GroupPtr<Field> parent;
  std::vector<std::size_t> members;      // sorted, starts with the identity
  std::vector<std::size_t> transversal;  // one representative per left coset; identity first

  std::size_t order() const noexcept { return members.size(); }
  std::size_t index() const noexcept { return transversal.size(); }
  bool contains(std::size_t g) const { return std::binary_search(members.begin(), members.end(), g); }
};

template <class Field>
bool is_closed_subset(const MatrixGroup<Field>& g, const std::vector<std::size_t>& members) {
  std::vector<bool> in(g.order(), false);
  for (auto m : members) {
    if (m >= g.order()) return false;
    in[m] = true;
  }
  if (!in[0]) return false;
  for (auto a : members) {
    for (auto b : members) {
      if (!in[g.cayley(a, b)]) return false;
    }
  }
  return true;
}

/// Left cosets gH of the subgroup with the given members.
template <class Field>
SubgroupHandle<Field> cosets(const GroupPtr<Field>& g, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_closed_subset(*g, members)) fail(ErrorKind::not_a_subgroup, "member set is not closed under multiplication");
  SubgroupHandle<Field> h{g, members, {}};
  std::vector<bool> covered(g->order(), false);
  for (std::size_t a = 0; a < g->order(); ++a) {
    if (covered[a]) continue;
    h.transversal.push_back(a);
    for (auto m : members) covered[g->cayley(a, m)] = true;
  }
  return h;
}

/// Member indices of the subgroup generated by the given elements.
template <class Field>
std::vector<std::size_t> generated_subgroup(const MatrixGroup<Field>& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (std::size_t cursor = 0; cursor < members.size(); ++cursor) {
    for (auto s : gens) {
      std::size_t next = g.cayley(s, members[cursor]);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline constexpr std::size_t kSubgroupEnumerationLimit = 16;

/// Every subgroup, by repeatedly adjoining one element; only for |G| <= 16.
template <class Field>
std::vector<SubgroupHandle<Field>> enumerate_subgroups(const GroupPtr<Field>& g) {
  if (g->order() > kSubgroupEnumerationLimit) {
    fail(ErrorKind::group_too_large, "subgroup enumeration is limited to |G| <= 16; supply subgroup generators");
  }
  std::set<std::vector<std::size_t>> seen{{0}};
  std::vector<std::vector<std::size_t>> queue{{0}};
  for (std::size_t cursor = 0; cursor < queue.size(); ++cursor) {
    const auto current = queue[cursor];
    for (std::size_t x = 0; x < g->order(); ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      auto gens = current;
      gens.push_back(x);
      auto next = generated_subgroup(*g, gens);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<SubgroupHandle<Field>> out;
  for (const auto& members : seen) out.push_back(cosets(g, members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
  });
  return out;
}

}  // namespace invtheory
