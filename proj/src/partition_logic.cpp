#include "qlogic/partition_logic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "qlogic/states.hpp"
#include "qlogic/util.hpp"

namespace qlogic {

namespace {

std::set<PointSet> cell_set(const Partition& p) { return {p.cells.begin(), p.cells.end()}; }

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// All cell unions of one partition, indexed by cell mask.
std::vector<PointSet> cell_unions(const Partition& p) {
  const std::size_t k = p.cells.size();
  if (k >= 24) throw StructuralError("partition has too many cells");
  std::vector<PointSet> out(std::size_t{1} << k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) out[m | half] = set_union(out[m], p.cells[i]);
  }
  return out;
}

}  // namespace

bool same_partition(const Partition& a, const Partition& b) {
  return a.cells.size() == b.cells.size() && cell_set(a) == cell_set(b);
}

PartitionLogic::PartitionLogic(std::vector<std::string> ground, std::vector<Partition> partitions)
    : ground_(std::move(ground)) {
  const std::size_t n = ground_.size();
  if (n == 0) throw StructuralError("partition logic needs a nonempty ground set");
  std::set<std::string> seen_labels;
  for (const auto& g : ground_)
    if (!seen_labels.insert(g).second) throw StructuralError("duplicate point '" + g + "'");
  if (partitions.empty()) throw StructuralError("partition logic needs at least one partition");

  for (auto& p : partitions) {
    std::vector<bool> covered(n, false);
    for (auto& cell : p.cells) {
      if (cell.empty()) throw StructuralError("partition has an empty cell");
      std::sort(cell.begin(), cell.end());
      for (std::size_t x : cell) {
        if (x >= n) throw StructuralError("cell point out of range");
        if (covered[x]) throw StructuralError("point '" + ground_[x] + "' lies in two cells");
        covered[x] = true;
      }
    }
    for (std::size_t x = 0; x < n; ++x)
      if (!covered[x]) throw StructuralError("point '" + ground_[x] + "' is not covered");
    bool duplicate = std::any_of(partitions_.begin(), partitions_.end(),
                                 [&](const Partition& q) { return same_partition(p, q); });
    if (!duplicate) partitions_.push_back(std::move(p));
  }
}

PartitionLogic PartitionLogic::from_labels(
    std::vector<std::string> ground,
    const std::vector<std::vector<std::vector<std::string>>>& partitions) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ground.size(); ++i) index[ground[i]] = i;
  std::vector<Partition> ps;
  for (const auto& p : partitions) {
    Partition q;
    for (const auto& cell : p) {
      PointSet s;
      for (const auto& label : cell) {
        auto it = index.find(label);
        if (it == index.end()) throw StructuralError("unknown point '" + label + "'");
        s.push_back(it->second);
      }
      q.cells.push_back(std::move(s));
    }
    ps.push_back(std::move(q));
  }
  return {std::move(ground), std::move(ps)};
}

std::string PartitionLogic::format(const PointSet& s) const {
  std::vector<std::string> members;
  for (std::size_t x : s) members.push_back(ground_.at(x));
  return format_set(members);
}

std::vector<PointSet> pasting_elements(const PartitionLogic& pl) {
  std::set<PointSet> all;
  for (const auto& p : pl.partitions())
    for (auto& u : cell_unions(p)) all.insert(std::move(u));
  std::vector<PointSet> out(all.begin(), all.end());
  const std::size_t n = pl.ground().size();
  std::stable_sort(out.begin(), out.end(), [&](const PointSet& a, const PointSet& b) {
    auto rank = [&](const PointSet& s) { return s.empty() ? 0 : (s.size() == n ? 2 : 1); };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

QuasiOrthoalgebra pasting_to_oa(const PartitionLogic& pl) {
  const auto elements = pasting_elements(pl);
  std::map<PointSet, Element> index;
  std::vector<std::string> labels;
  for (const auto& s : elements) {
    index.emplace(s, labels.size());
    labels.push_back(pl.format(s));
  }
  TableBuilder builder(std::move(labels));
  for (const auto& p : pl.partitions()) {
    const auto unions = cell_unions(p);
    for (std::size_t x = 0; x < unions.size(); ++x)
      for (std::size_t y = 0; y < unions.size(); ++y)
        if ((x & y) == 0)
          builder.set(index.at(unions[x]), index.at(unions[y]), index.at(unions[x | y]));
  }
  return builder.build(0, elements.size() - 1);
}

PartitionLogic oa_to_partition_logic(const QuasiOrthoalgebra& t) {
  const auto report = is_prime(t);
  if (!report.prime) {
    const auto [a, b] = *report.inseparable;
    throw NotPrimeError("not prime: no two-valued state separates " + t.label(a) + " and " +
                        t.label(b));
  }
  const std::size_t m = report.states.size();
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < m; ++i) ground.push_back(std::to_string(i + 1));

  auto p = [&](Element x) {
    PointSet s;
    for (std::size_t i = 0; i < m; ++i)
      if (report.states[i].values[x] == 1) s.push_back(i);
    return s;
  };
  const auto comp = complements(t);

  std::vector<Partition> partitions;
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = x; y < t.size(); ++y) {
      auto s = t.oplus(x, y);
      if (!s) continue;
      Partition r;
      for (PointSet cell : {p(x), p(y), p(comp.at(*s).value())})
        if (!cell.empty()) r.cells.push_back(std::move(cell));
      partitions.push_back(std::move(r));
    }
  return {std::move(ground), std::move(partitions)};
}

PartitionLogic urn_to_partition_logic(const UrnModel& urn) {
  if (urn.visible.size() != urn.ball_types.size())
    throw StructuralError("urn table needs one row per ball type");
  std::vector<Partition> partitions;
  for (std::size_t c = 0; c < urn.colors.size(); ++c) {
    std::vector<std::string> symbols;
    Partition p;
    for (std::size_t b = 0; b < urn.ball_types.size(); ++b) {
      if (urn.visible[b].size() != urn.colors.size())
        throw StructuralError("urn row for ball '" + urn.ball_types[b] +
                              "' needs one symbol per color");
      const auto& sym = urn.visible[b][c];
      auto it = std::find(symbols.begin(), symbols.end(), sym);
      if (it == symbols.end()) {
        symbols.push_back(sym);
        p.cells.push_back({b});
      } else {
        p.cells[static_cast<std::size_t>(it - symbols.begin())].push_back(b);
      }
    }
    partitions.push_back(std::move(p));
  }
  return {urn.ball_types, std::move(partitions)};
}

bool is_isomorphism(const QuasiOrthoalgebra& a, const QuasiOrthoalgebra& b,
                    const std::vector<Element>& mapping) {
  const std::size_t n = a.size();
  if (b.size() != n || mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Element x : mapping) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      auto s = a.oplus(x, y);
      auto t = b.oplus(mapping[x], mapping[y]);
      if (s.has_value() != t.has_value()) return false;
      if (s && mapping[*s] != *t) return false;
    }
  return true;
}

namespace {

using Invariant = std::tuple<bool, bool, std::size_t, std::size_t, std::size_t>;

std::vector<Invariant> invariants(const QuasiOrthoalgebra& t) {
  const std::size_t n = t.size();
  const auto le = order_matrix(t);
  std::vector<Invariant> out(n);
  for (Element x = 0; x < n; ++x) {
    std::size_t orth = 0, down = 0, up = 0;
    for (Element y = 0; y < n; ++y) {
      orth += t.orthogonal(x, y);
      down += le[y * n + x];
      up += le[x * n + y];
    }
    out[x] = {x == t.zero(), x == t.one(), orth, down, up};
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const QuasiOrthoalgebra& a, const QuasiOrthoalgebra& b)
      : a_(a), b_(b), inv_a_(invariants(a)), inv_b_(invariants(b)),
        comp_a_(complements(a)), comp_b_(complements(b)) {
    // atoms first: they usually determine everything else by propagation
    const auto at = atoms(a);
    order_ = at;
    for (Element x = 0; x < a.size(); ++x)
      if (!std::binary_search(at.begin(), at.end(), x)) order_.push_back(x);
  }

  std::optional<Isomorphism> run() {
    auto sa = inv_a_, sb = inv_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    State s{std::vector<std::optional<Element>>(a_.size()),
            std::vector<std::optional<Element>>(b_.size())};
    if (!assign(s, a_.zero(), b_.zero()) || !assign(s, a_.one(), b_.one())) return std::nullopt;
    return search(std::move(s));
  }

 private:
  struct State {
    std::vector<std::optional<Element>> fwd;
    std::vector<std::optional<Element>> back;
  };

  bool assign(State& s, Element x, Element y) {
    if (s.fwd[x]) return *s.fwd[x] == y;
    if (s.back[y] || inv_a_[x] != inv_b_[y]) return false;
    s.fwd[x] = y;
    s.back[y] = x;
    return true;
  }

  bool propagate(State& s) {
    const std::size_t n = a_.size();
    for (bool changed = true; changed;) {
      changed = false;
      for (Element x = 0; x < n; ++x) {
        if (!s.fwd[x]) continue;
        const Element fx = *s.fwd[x];
        if (comp_a_[x] && comp_b_[fx]) {
          const bool fresh = !s.fwd[*comp_a_[x]];
          if (!assign(s, *comp_a_[x], *comp_b_[fx])) return false;
          changed |= fresh;
        }
        for (Element y = 0; y < n; ++y) {
          if (!s.fwd[y]) continue;
          auto sa = a_.oplus(x, y);
          auto sb = b_.oplus(fx, *s.fwd[y]);
          if (sa.has_value() != sb.has_value()) return false;
          if (!sa) continue;
          const bool fresh = !s.fwd[*sa];
          if (!assign(s, *sa, *sb)) return false;
          changed |= fresh;
        }
      }
    }
    return true;
  }

  std::optional<Isomorphism> search(State s) {
    if (!propagate(s)) return std::nullopt;
    auto next = std::find_if(order_.begin(), order_.end(), [&](Element x) { return !s.fwd[x]; });
    if (next == order_.end()) {
      Isomorphism iso;
      for (const auto& y : s.fwd) iso.mapping.push_back(*y);
      if (is_isomorphism(a_, b_, iso.mapping)) return iso;
      return std::nullopt;
    }
    for (Element y = 0; y < b_.size(); ++y) {
      if (s.back[y] || inv_a_[*next] != inv_b_[y]) continue;
      State t = s;
      if (!assign(t, *next, y)) continue;
      if (auto found = search(std::move(t))) return found;
    }
    return std::nullopt;
  }

  const QuasiOrthoalgebra& a_;
  const QuasiOrthoalgebra& b_;
  std::vector<Invariant> inv_a_, inv_b_;
  std::vector<std::optional<Element>> comp_a_, comp_b_;
  std::vector<Element> order_;
};

}  // namespace

std::optional<Isomorphism> isomorphic(const QuasiOrthoalgebra& a, const QuasiOrthoalgebra& b) {
  if (a.size() != b.size() || a.defined_count() != b.defined_count()) return std::nullopt;
  return IsoSearch(a, b).run();
}

}  // namespace qlogic
