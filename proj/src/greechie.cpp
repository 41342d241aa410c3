#include "qlogic/greechie.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "qlogic/util.hpp"

namespace qlogic {

void validate(const GreechieDiagram& d) {
  std::map<std::string, std::size_t> index;
  for (const auto& a : d.atoms)
    if (!index.emplace(a, index.size()).second)
      throw StructuralError("duplicate atom '" + a + "'");
  if (d.blocks.empty()) throw StructuralError("diagram has no blocks");
  std::vector<bool> covered(d.atoms.size(), false);
  std::vector<std::set<std::size_t>> sets;
  for (const auto& block : d.blocks) {
    if (block.size() < 2) throw StructuralError("block with fewer than two atoms");
    if (block.size() >= 20) throw StructuralError("block too large");
    std::set<std::size_t> s;
    for (const auto& a : block) {
      auto it = index.find(a);
      if (it == index.end()) throw StructuralError("block mentions unknown atom '" + a + "'");
      if (!s.insert(it->second).second)
        throw StructuralError("atom '" + a + "' repeated in a block");
      covered[it->second] = true;
    }
    sets.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < covered.size(); ++i)
    if (!covered[i]) throw StructuralError("atom '" + d.atoms[i] + "' lies in no block");
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()))
        throw StructuralError("block " + std::to_string(i) + " is contained in block " +
                              std::to_string(j));
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

QuasiOrthoalgebra from_greechie(const GreechieDiagram& d) {
  validate(d);
  std::map<std::string, std::size_t> atom_index;
  for (std::size_t i = 0; i < d.atoms.size(); ++i) atom_index[d.atoms[i]] = i;

  const std::size_t nb = d.blocks.size();
  std::vector<std::vector<std::size_t>> block_atoms(nb);
  std::vector<std::size_t> offset(nb + 1, 0);
  for (std::size_t b = 0; b < nb; ++b) {
    for (const auto& a : d.blocks[b]) block_atoms[b].push_back(atom_index[a]);
    offset[b + 1] = offset[b] + (std::size_t{1} << block_atoms[b].size());
  }
  auto full = [&](std::size_t b) { return (std::size_t{1} << block_atoms[b].size()) - 1; };
  auto node = [&](std::size_t b, std::size_t mask) { return offset[b] + mask; };
  auto block_of = [&](std::size_t u) {
    return static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), u) -
                                    offset.begin() - 1);
  };

  UnionFind uf(offset.back());
  for (std::size_t b = 1; b < nb; ++b) {
    uf.unite(node(0, 0), node(b, 0));
    uf.unite(node(0, full(0)), node(b, full(b)));
  }
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t c = b + 1; c < nb; ++c) {
      // local bit positions of shared atoms in both blocks
      std::vector<std::pair<std::size_t, std::size_t>> shared;
      for (std::size_t i = 0; i < block_atoms[b].size(); ++i)
        for (std::size_t j = 0; j < block_atoms[c].size(); ++j)
          if (block_atoms[b][i] == block_atoms[c][j]) shared.emplace_back(i, j);
      for (std::size_t m = 0; m < (std::size_t{1} << shared.size()); ++m) {
        std::size_t mb = 0, mc = 0;
        for (std::size_t s = 0; s < shared.size(); ++s)
          if (m >> s & 1) {
            mb |= std::size_t{1} << shared[s].first;
            mc |= std::size_t{1} << shared[s].second;
          }
        uf.unite(node(b, mb), node(c, mc));
      }
    }

  auto complement_node = [&](std::size_t u) {
    const std::size_t b = block_of(u);
    return node(b, full(b) ^ (u - offset[b]));
  };
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::size_t, std::size_t> comp_of_class;
    for (std::size_t u = 0; u < offset.back(); ++u) {
      const std::size_t r = uf.find(u);
      auto [it, fresh] = comp_of_class.emplace(r, complement_node(u));
      if (!fresh && uf.unite(it->second, complement_node(u))) changed = true;
    }
  }

  for (std::size_t b = 0; b < nb; ++b) {
    std::set<std::size_t> roots;
    for (std::size_t m = 0; m <= full(b); ++m)
      if (!roots.insert(uf.find(node(b, m))).second)
        throw PastingError("inconsistent identification: two distinct elements of block " +
                           std::to_string(b) + " collapse");
  }

  // Classify each class for ordering and labelling.
  struct ClassInfo {
    int kind = 2;  // 0 atom, 1 coatom, 2 other
    std::size_t atom = 0;
    std::tuple<std::size_t, std::size_t, std::size_t> first{~std::size_t{0}, 0, 0};
    std::size_t first_node = 0;
  };
  std::map<std::size_t, ClassInfo> info;
  for (std::size_t u = 0; u < offset.back(); ++u) {
    const std::size_t b = block_of(u);
    const std::size_t m = u - offset[b];
    auto& ci = info[uf.find(u)];
    const auto key = std::tuple{static_cast<std::size_t>(__builtin_popcountll(m)), b, m};
    if (key < ci.first) {
      ci.first = key;
      ci.first_node = u;
    }
    std::optional<std::size_t> single;
    if (__builtin_popcountll(m) == 1) single = block_atoms[b][__builtin_ctzll(m)];
    if (single) {
      if (ci.kind == 0 && ci.atom != *single)
        throw PastingError("atoms '" + d.atoms[ci.atom] + "' and '" + d.atoms[*single] +
                           "' are identified");
      ci.kind = 0;
      ci.atom = *single;
    } else if (__builtin_popcountll(full(b) ^ m) == 1 && ci.kind == 2) {
      ci.kind = 1;
      ci.atom = block_atoms[b][__builtin_ctzll(full(b) ^ m)];
    }
  }

  const std::size_t zero_root = uf.find(node(0, 0));
  const std::size_t one_root = uf.find(node(0, full(0)));
  std::vector<std::pair<std::tuple<int, std::size_t, std::size_t, std::size_t, std::size_t>,
                        std::size_t>>
      order;
  for (const auto& [root, ci] : info) {
    int rank = ci.kind + 1;
    if (root == zero_root) rank = 0;
    if (root == one_root) rank = 4;
    const auto& [pc, b, m] = ci.first;
    order.push_back({{rank, ci.kind == 2 ? 0 : ci.atom, pc, b, m}, root});
  }
  std::sort(order.begin(), order.end());

  std::map<std::size_t, Element> element_of;
  std::vector<std::string> labels;
  for (const auto& [key, root] : order) {
    const auto& ci = info[root];
    element_of[root] = labels.size();
    if (root == zero_root) {
      labels.push_back("0");
    } else if (root == one_root) {
      labels.push_back("1");
    } else if (ci.kind == 0) {
      labels.push_back(d.atoms[ci.atom]);
    } else if (ci.kind == 1) {
      labels.push_back(d.atoms[ci.atom] + "'");
    } else {
      const std::size_t b = block_of(ci.first_node);
      const std::size_t m = ci.first_node - offset[b];
      std::vector<std::string> members;
      for (std::size_t i = 0; i < block_atoms[b].size(); ++i)
        if (m >> i & 1) members.push_back(d.atoms[block_atoms[b][i]]);
      labels.push_back(format_set(members));
    }
  }

  TableBuilder builder(labels);
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t s = 0; s <= full(b); ++s)
      for (std::size_t t = 0; t <= full(b); ++t)
        if ((s & t) == 0)
          builder.set(element_of[uf.find(node(b, s))], element_of[uf.find(node(b, t))],
                      element_of[uf.find(node(b, s | t))]);
  return builder.build(element_of[zero_root], element_of[one_root]);
}

}  // namespace qlogic
