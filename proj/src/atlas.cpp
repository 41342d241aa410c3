#include "qlogic/atlas.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "qlogic/util.hpp"

namespace qlogic {

namespace {

void check_chart(const BooleanChart& c, std::size_t index) {
  const std::string where = "chart " + std::to_string(index + 1);
  if (c.atoms.empty()) throw StructuralError(where + " has no atoms");
  if (c.atoms.size() >= 24) throw StructuralError(where + " has too many atoms");
  if (c.labels.size() != (std::size_t{1} << c.atoms.size()))
    throw StructuralError(where + " needs 2^|atoms| labels");
  std::set<std::string> seen;
  for (const auto& l : c.labels)
    if (!seen.insert(l).second) throw StructuralError(where + ": label collision on '" + l + "'");
}

void check_all(const BooleanAtlas& atlas) {
  if (atlas.charts.empty()) throw StructuralError("atlas has no charts");
  for (std::size_t i = 0; i < atlas.charts.size(); ++i) check_chart(atlas.charts[i], i);
}

std::vector<std::size_t> chart_order(const BooleanChart& c) {
  std::vector<std::size_t> masks(c.size());
  for (std::size_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](std::size_t a, std::size_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  return masks;
}

// Masks in chart i and chart j of every label the two charts share.
std::vector<std::pair<std::size_t, std::size_t>> overlap(const BooleanChart& ci,
                                                         const BooleanChart& cj) {
  std::map<std::string, std::size_t> in_j;
  for (std::size_t m = 0; m < cj.size(); ++m) in_j.emplace(cj.labels[m], m);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t m = 0; m < ci.size(); ++m)
    if (auto it = in_j.find(ci.labels[m]); it != in_j.end()) out.emplace_back(m, it->second);
  return out;
}

void add(AxiomReport& r, std::string axiom, std::vector<Element> witness, std::string detail) {
  if (r.find(axiom)) return;
  r.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

}  // namespace

std::optional<std::size_t> BooleanChart::mask_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

BooleanChart set_chart(const std::vector<std::string>& omega,
                       const std::vector<std::vector<std::string>>& cells) {
  BooleanChart c;
  std::vector<std::vector<std::size_t>> idx;
  for (const auto& cell : cells) {
    std::vector<std::size_t> members;
    for (const auto& p : cell) {
      auto it = std::find(omega.begin(), omega.end(), p);
      if (it == omega.end()) throw StructuralError("unknown point '" + p + "'");
      members.push_back(static_cast<std::size_t>(it - omega.begin()));
    }
    std::sort(members.begin(), members.end());
    idx.push_back(std::move(members));
  }
  auto name = [&](const std::vector<std::size_t>& s) {
    std::vector<std::string> out;
    for (auto x : s) out.push_back(omega[x]);
    return format_set(out);
  };
  for (const auto& s : idx) c.atoms.push_back(name(s));
  if (idx.size() >= 24) throw StructuralError("chart has too many cells");
  c.labels.resize(std::size_t{1} << idx.size());
  for (std::size_t m = 0; m < c.labels.size(); ++m) {
    std::vector<std::size_t> u;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (m >> i & 1) u.insert(u.end(), idx[i].begin(), idx[i].end());
    std::sort(u.begin(), u.end());
    c.labels[m] = name(u);
  }
  return c;
}

AxiomReport verify_atlas(const BooleanAtlas& atlas) {
  check_all(atlas);
  AxiomReport r;
  const auto& cs = atlas.charts;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j) continue;
      const auto& ci = cs[i];
      const auto& cj = cs[j];
      const auto ov = overlap(ci, cj);
      if (ov.size() == ci.size())
        add(r, "i", {i, j},
            ci.size() == cj.size() ? "charts " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " are duplicates"
                                   : "chart " + std::to_string(i + 1) + " lies inside chart " +
                                         std::to_string(j + 1));
      if (ci.labels.front() != cj.labels.front() || ci.labels.back() != cj.labels.back())
        add(r, "iii", {i, j}, "charts disagree on 0 or 1");
      std::map<std::size_t, std::size_t> to_j(ov.begin(), ov.end());
      for (auto [ma, na] : ov) {
        auto comp = to_j.find(ci.full() ^ ma);
        if (comp == to_j.end() || comp->second != (cj.full() ^ na))
          add(r, "iv", {i, j, ma}, "complement of " + ci.labels[ma] + " differs");
        for (auto [mb, nb] : ov) {
          const bool le_i = (ma & ~mb) == 0;
          const bool le_j = (na & ~nb) == 0;
          if (le_i != le_j)
            add(r, "ii", {i, j, ma, mb},
                "order of " + ci.labels[ma] + ", " + ci.labels[mb] + " differs");
          if ((ma & mb) == 0 && ci.labels[ma | mb] != cj.labels[na | nb])
            add(r, "v", {i, j, ma, mb},
                "join of " + ci.labels[ma] + ", " + ci.labels[mb] + " differs");
        }
      }
    }
  r.structure_class = r.ok() ? StructureClass::quasi_oa : StructureClass::not_quasi_oa;
  return r;
}

ManifoldReport is_manifold(const BooleanAtlas& atlas) {
  check_all(atlas);
  const auto& cs = atlas.charts;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const auto ov = overlap(cs[i], cs[j]);
      for (auto [ma, na] : ov)
        for (auto [mb, nb] : ov)
          if (cs[i].labels[ma | mb] != cs[j].labels[na | nb] ||
              cs[i].labels[ma & mb] != cs[j].labels[na & nb])
            return {false, std::tuple{i, j, cs[i].labels[ma], cs[i].labels[mb]}};
    }
  return {};
}

QuasiOrthoalgebra atlas_to_quasi_oa(const BooleanAtlas& atlas) {
  check_all(atlas);
  std::vector<std::string> labels;
  std::map<std::string, Element> index;
  for (const auto& c : atlas.charts)
    for (std::size_t m : chart_order(c))
      if (index.emplace(c.labels[m], labels.size()).second) labels.push_back(c.labels[m]);
  TableBuilder builder(labels);
  for (const auto& c : atlas.charts)
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = 0; b < c.size(); ++b)
        if ((a & b) == 0)
          builder.set(index.at(c.labels[a]), index.at(c.labels[b]), index.at(c.labels[a | b]));
  const auto& first = atlas.charts.front();
  return builder.build(index.at(first.labels.front()), index.at(first.labels.back()));
}

BooleanAtlas quasi_oa_to_atlas(const QuasiOrthoalgebra& t) {
  BooleanAtlas out;
  for (const auto& block : blocks(t)) {
    if (!is_boolean_suborthoalgebra(t, block))
      throw AxiomError("block", "block is not a Boolean suborthoalgebra");
    const auto at = local_atoms(t, block);
    BooleanChart c;
    for (Element a : at) c.atoms.push_back(t.label(a));
    std::vector<Element> value(std::size_t{1} << at.size(), t.zero());
    for (std::size_t m = 1; m < value.size(); ++m) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
      auto s = t.oplus(value[m & (m - 1)], at[low]);
      if (!s) throw AxiomError("block", "atom sum undefined inside a block");
      value[m] = *s;
    }
    for (Element e : value) c.labels.push_back(t.label(e));
    out.charts.push_back(std::move(c));
  }
  return out;
}

AtlasRelations::AtlasRelations(const BooleanAtlas& atlas) : atlas_(atlas) { check_all(atlas_); }

void AtlasRelations::check(const std::string& label) const {
  for (const auto& c : atlas_.charts)
    if (c.mask_of(label)) return;
  throw ValidationError("unknown element '" + label + "'");
}

bool AtlasRelations::compatible(const std::string& a, const std::string& b) const {
  return jointly_compatible({a, b});
}

bool AtlasRelations::orthogonal(const std::string& a, const std::string& b) const {
  check(a);
  check(b);
  for (const auto& c : atlas_.charts) {
    auto ma = c.mask_of(a), mb = c.mask_of(b);
    if (ma && mb && (*ma & *mb) == 0) return true;
  }
  return false;
}

bool AtlasRelations::jointly_compatible(const std::vector<std::string>& s) const {
  for (const auto& x : s) check(x);
  return std::any_of(atlas_.charts.begin(), atlas_.charts.end(), [&](const BooleanChart& c) {
    return std::all_of(s.begin(), s.end(), [&](const auto& x) { return c.mask_of(x).has_value(); });
  });
}

bool AtlasRelations::pairwise_compatible(const std::vector<std::string>& s) const {
  for (const auto& x : s) check(x);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!compatible(s[i], s[j])) return false;
  return true;
}

bool AtlasRelations::pairwise_orthogonal(const std::vector<std::string>& s) const {
  for (const auto& x : s) check(x);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] != s[j] && !orthogonal(s[i], s[j])) return false;
  return true;
}

bool AtlasRelations::jointly_orthogonal(const std::vector<std::string>& s) const {
  return jointly_compatible(s) && pairwise_orthogonal(s);
}

}  // namespace qlogic
