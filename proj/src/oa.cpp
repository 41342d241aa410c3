#include "qlogic/oa.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qlogic/util.hpp"

namespace qlogic {

QuasiOrthoalgebra::QuasiOrthoalgebra(std::vector<std::string> labels, Element zero,
                                     Element one, std::vector<Entry> table)
    : labels_(std::move(labels)), zero_(zero), one_(one), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n < 2) throw StructuralError("a quasi-orthoalgebra needs at least two elements");
  if (table_.size() != n * n)
    throw StructuralError("oplus table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(n * n));
  if (zero_ >= n || one_ >= n) throw StructuralError("0 or 1 is not an element");
  if (zero_ == one_) throw StructuralError("0 and 1 must be distinct");
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] && *table_[i] >= n)
      throw StructuralError("oplus(" + labels_[i / n] + ", " + labels_[i % n] +
                            ") lies outside the element set");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw StructuralError("duplicate element label '" + l + "'");
}

std::optional<Element> QuasiOrthoalgebra::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

Element QuasiOrthoalgebra::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw ValidationError("unknown element '" + std::string(label) + "'");
}

std::size_t QuasiOrthoalgebra::defined_count() const {
  return static_cast<std::size_t>(
      std::count_if(table_.begin(), table_.end(), [](const Entry& e) { return e.has_value(); }));
}

QuasiOrthoalgebra QuasiOrthoalgebra::permuted(const std::vector<Element>& perm) const {
  const std::size_t n = size();
  std::vector<std::string> labels(n);
  std::vector<Entry> table(n * n);
  for (Element a = 0; a < n; ++a) {
    labels[perm[a]] = labels_[a];
    for (Element b = 0; b < n; ++b)
      if (auto c = oplus(a, b)) table[perm[a] * n + perm[b]] = perm[*c];
  }
  return {std::move(labels), perm[zero_], perm[one_], std::move(table)};
}

TableBuilder::TableBuilder(std::vector<std::string> labels)
    : labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {}

Element TableBuilder::index(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw StructuralError("unknown label '" + std::string(label) + "'");
  return static_cast<Element>(it - labels_.begin());
}

TableBuilder& TableBuilder::set(Element a, Element b, Element c) {
  const std::size_t n = labels_.size();
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    auto& slot = table_.at(x * n + y);
    if (slot && *slot != c)
      throw PastingError("oplus(" + labels_[x] + ", " + labels_[y] + ") is forced to both " +
                         labels_[*slot] + " and " + labels_[c]);
    slot = c;
  }
  return *this;
}

TableBuilder& TableBuilder::set(std::string_view a, std::string_view b, std::string_view c) {
  return set(index(a), index(b), index(c));
}

TableBuilder& TableBuilder::with_zero_identity(Element zero) {
  for (Element x = 0; x < labels_.size(); ++x) set(x, zero, x);
  return *this;
}

QuasiOrthoalgebra TableBuilder::build(Element zero, Element one) const {
  return {labels_, zero, one, table_};
}

std::string_view to_string(StructureClass c) {
  switch (c) {
    case StructureClass::not_quasi_oa: return "not_quasi_oa";
    case StructureClass::quasi_oa: return "quasi_oa";
    case StructureClass::orthoalgebra: return "orthoalgebra";
    case StructureClass::omp: return "omp";
    case StructureClass::boolean: return "boolean";
  }
  return "?";
}

const Violation* AxiomReport::find(std::string_view axiom) const {
  for (const auto& v : violations)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

namespace {

// Records only the first witness for each axiom.
class ViolationSink {
 public:
  explicit ViolationSink(AxiomReport& r) : report_(r) {}
  bool failed(std::string_view axiom) const { return report_.find(axiom) != nullptr; }
  void add(std::string axiom, std::vector<Element> witness, std::string detail = {}) {
    if (failed(axiom)) return;
    report_.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }

 private:
  AxiomReport& report_;
};

void check_commutativity(const QuasiOrthoalgebra& t, ViolationSink& sink) {
  const std::size_t n = t.size();
  for (Element a = 0; a < n && !sink.failed("oai"); ++a)
    for (Element b = 0; b < n; ++b)
      if (t.oplus(a, b) != t.oplus(b, a)) {
        sink.add("oai", {a, b}, "a⊕b and b⊕a differ");
        break;
      }
}

void check_unique_complement(const QuasiOrthoalgebra& t, ViolationSink& sink) {
  const std::size_t n = t.size();
  for (Element a = 0; a < n; ++a) {
    std::size_t count = 0;
    for (Element b = 0; b < n; ++b)
      if (t.oplus(a, b) == t.one()) ++count;
    if (count != 1) {
      sink.add("oaiii", {a}, std::to_string(count) + " elements c with a⊕c = 1");
      return;
    }
  }
}

void check_associativity(const QuasiOrthoalgebra& t, ViolationSink& sink) {
  const std::size_t n = t.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      auto ab = t.oplus(a, b);
      if (!ab) continue;
      for (Element c = 0; c < n; ++c) {
        auto ab_c = t.oplus(*ab, c);
        if (!ab_c) continue;
        auto bc = t.oplus(b, c);
        auto a_bc = bc ? t.oplus(a, *bc) : std::nullopt;
        if (a_bc != ab_c) {
          sink.add("oavii", {a, b, c},
                   bc ? (a_bc ? "(a⊕b)⊕c ≠ a⊕(b⊕c)" : "a⊕(b⊕c) undefined") : "b⊕c undefined");
          return;
        }
      }
    }
}

std::optional<Element> join(const std::vector<bool>& le, std::size_t n, Element a, Element b) {
  std::vector<Element> upper;
  for (Element u = 0; u < n; ++u)
    if (le[a * n + u] && le[b * n + u]) upper.push_back(u);
  for (Element u : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](Element v) { return le[u * n + v]; }))
      return u;
  return std::nullopt;
}

}  // namespace

std::vector<std::optional<Element>> complements(const QuasiOrthoalgebra& t) {
  const std::size_t n = t.size();
  std::vector<std::optional<Element>> out(n);
  for (Element a = 0; a < n; ++a) {
    std::size_t count = 0;
    for (Element b = 0; b < n; ++b)
      if (t.oplus(a, b) == t.one()) {
        out[a] = b;
        ++count;
      }
    if (count != 1) out[a].reset();
  }
  return out;
}

Element orthocomplement(const QuasiOrthoalgebra& t, Element a) {
  std::optional<Element> found;
  for (Element b = 0; b < t.size(); ++b) {
    if (t.oplus(a, b) != t.one()) continue;
    if (found)
      throw AxiomError("oaiii", "element " + t.label(a) + " has several orthocomplements");
    found = b;
  }
  if (!found) throw AxiomError("oaiii", "element " + t.label(a) + " has no orthocomplement");
  return *found;
}

AxiomReport verify_quasi_oa(const QuasiOrthoalgebra& t) {
  AxiomReport report;
  ViolationSink sink(report);
  const std::size_t n = t.size();
  const Element zero = t.zero();

  check_commutativity(t, sink);

  for (Element a = 0; a < n; ++a)
    if (t.oplus(a, zero) != a) {
      sink.add("oaii", {a}, "a⊕0 is not a");
      break;
    }

  check_unique_complement(t, sink);
  const auto comp = complements(t);

  // (oaiv) a ⊕ (a' ⊕ b) defined ⟹ b = 0
  for (Element a = 0; a < n && !sink.failed("oaiv"); ++a) {
    if (!comp[a]) continue;
    for (Element b = 0; b < n; ++b) {
      auto d = t.oplus(*comp[a], b);
      if (d && t.orthogonal(a, *d) && b != zero) {
        sink.add("oaiv", {a, b}, "a⊕(a'⊕b) defined with b ≠ 0");
        break;
      }
    }
  }

  // (oav) a ⊕ (a ⊕ b) defined ⟹ a = 0
  for (Element a = 0; a < n && !sink.failed("oav"); ++a) {
    if (a == zero) continue;
    for (Element b = 0; b < n; ++b) {
      auto d = t.oplus(a, b);
      if (d && t.orthogonal(a, *d)) {
        sink.add("oav", {a, b}, "a⊕(a⊕b) defined with a ≠ 0");
        break;
      }
    }
  }

  // (oavi) a ⊕ b defined ⟹ b' = a ⊕ (a ⊕ b)'
  for (Element a = 0; a < n && !sink.failed("oavi"); ++a)
    for (Element b = 0; b < n; ++b) {
      auto d = t.oplus(a, b);
      if (!d) continue;
      const auto dc = comp[*d];
      const auto bc = comp[b];
      if (!dc || !bc) continue;  // reported under oaiii
      if (t.oplus(a, *dc) != bc) {
        sink.add("oavi", {a, b}, "a⊕(a⊕b)' is not b'");
        break;
      }
    }

  report.structure_class =
      report.ok() ? StructureClass::quasi_oa : StructureClass::not_quasi_oa;
  return report;
}

AxiomReport verify_oa(const QuasiOrthoalgebra& t) {
  AxiomReport report = verify_quasi_oa(t);
  if (!report.ok()) return report;
  ViolationSink sink(report);
  check_associativity(t, sink);
  report.structure_class = report.ok() ? StructureClass::orthoalgebra : StructureClass::quasi_oa;
  return report;
}

AxiomReport verify_oa_golfin(const QuasiOrthoalgebra& t) {
  AxiomReport report;
  ViolationSink sink(report);
  check_commutativity(t, sink);
  check_unique_complement(t, sink);
  check_associativity(t, sink);
  for (Element a = 0; a < t.size(); ++a)
    if (a != t.zero() && t.orthogonal(a, a)) {
      sink.add("oav*", {a}, "a⊕a defined with a ≠ 0");
      break;
    }
  if (report.ok())
    report.structure_class = StructureClass::orthoalgebra;
  else
    report.structure_class = verify_quasi_oa(t).structure_class;
  return report;
}

bool leq(const QuasiOrthoalgebra& t, Element a, Element b) {
  for (Element c = 0; c < t.size(); ++c)
    if (t.oplus(a, c) == b) return true;
  return false;
}

std::vector<bool> order_matrix(const QuasiOrthoalgebra& t) {
  const std::size_t n = t.size();
  std::vector<bool> le(n * n, false);
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c)
      if (auto b = t.oplus(a, c)) le[a * n + *b] = true;
  return le;
}

std::optional<std::array<Element, 3>> order_transitivity_counterexample(
    const QuasiOrthoalgebra& t) {
  const std::size_t n = t.size();
  const auto le = order_matrix(t);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!le[a * n + b]) continue;
      for (Element c = 0; c < n; ++c)
        if (le[b * n + c] && !le[a * n + c]) return std::array{a, b, c};
    }
  return std::nullopt;
}

AxiomReport is_omp(const QuasiOrthoalgebra& t) {
  AxiomReport report = verify_oa(t);
  if (!report.ok()) return report;
  ViolationSink sink(report);
  const std::size_t n = t.size();
  const auto le = order_matrix(t);
  const auto comp = complements(t);
  auto L = [&](Element a, Element b) { return static_cast<bool>(le[a * n + b]); };

  for (Element a = 0; a < n && !sink.failed("partial-order"); ++a) {
    if (!L(a, a)) sink.add("partial-order", {a}, "≤ not reflexive");
    for (Element b = 0; b < n; ++b) {
      if (a != b && L(a, b) && L(b, a)) sink.add("partial-order", {a, b}, "≤ not antisymmetric");
      for (Element c = 0; c < n; ++c)
        if (L(a, b) && L(b, c) && !L(a, c)) sink.add("partial-order", {a, b, c}, "≤ not transitive");
    }
  }
  for (Element a = 0; a < n; ++a)
    if (!L(t.zero(), a) || !L(a, t.one())) {
      sink.add("bounds", {a}, "0 ≤ a ≤ 1 fails");
      break;
    }
  // (i) involution
  for (Element a = 0; a < n; ++a)
    if (comp[*comp[a]] != a) {
      sink.add("omp-i", {a}, "(a')' ≠ a");
      break;
    }
  // (ii) order reversing
  for (Element a = 0; a < n && !sink.failed("omp-ii"); ++a)
    for (Element b = 0; b < n; ++b)
      if (L(a, b) && !L(*comp[b], *comp[a])) {
        sink.add("omp-ii", {a, b}, "a ≤ b but b' ≰ a'");
        break;
      }
  // (iii) a ∨ a' = 1
  for (Element a = 0; a < n; ++a)
    if (join(le, n, a, *comp[a]) != t.one()) {
      sink.add("omp-iii", {a}, "a ∨ a' is not 1");
      break;
    }
  // (iv) a ≤ b' ⟹ a ∨ b exists
  for (Element a = 0; a < n && !sink.failed("omp-iv"); ++a)
    for (Element b = 0; b < n; ++b)
      if (L(a, *comp[b]) && !join(le, n, a, b)) {
        sink.add("omp-iv", {a, b}, "orthogonal pair without a join");
        break;
      }
  // (v) a ≤ b ⟹ b = a ∨ (a ∨ b')'
  for (Element a = 0; a < n && !sink.failed("omp-v"); ++a)
    for (Element b = 0; b < n; ++b) {
      if (!L(a, b)) continue;
      auto inner = join(le, n, a, *comp[b]);
      auto outer = inner ? join(le, n, a, *comp[*inner]) : std::nullopt;
      if (outer != b) {
        sink.add("omp-v", {a, b}, "orthomodular law fails");
        break;
      }
    }

  report.structure_class = report.ok() ? StructureClass::omp : StructureClass::orthoalgebra;
  return report;
}

std::vector<Element> atoms(const QuasiOrthoalgebra& t) {
  std::vector<Element> all(t.size());
  std::iota(all.begin(), all.end(), Element{0});
  return local_atoms(t, all);
}

std::vector<Element> local_atoms(const QuasiOrthoalgebra& t, const std::vector<Element>& subset) {
  std::vector<Element> out;
  for (Element x : subset) {
    if (x == t.zero()) continue;
    bool minimal = true;
    for (Element y : subset)
      if (y != x && y != t.zero() && leq(t, y, x)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// ⊕-sums of all sub-multisets of `gens`, indexed by bit mask; nullopt if
// some sum is undefined. Summation follows the order of `gens`.
std::optional<std::vector<Element>> subset_sums(const QuasiOrthoalgebra& t,
                                                const std::vector<Element>& gens) {
  const std::size_t k = gens.size();
  if (k >= 20) return std::nullopt;
  std::vector<Element> sums(std::size_t{1} << k);
  sums[0] = t.zero();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) {
      auto s = t.oplus(sums[m], gens[i]);
      if (!s) return std::nullopt;
      sums[m | half] = *s;
    }
  }
  return sums;
}

}  // namespace

bool is_boolean_suborthoalgebra(const QuasiOrthoalgebra& t, const std::vector<Element>& subset) {
  std::vector<bool> in(t.size(), false);
  for (Element x : subset) in.at(x) = true;
  if (!in[t.zero()] || !in[t.one()]) return false;
  const auto comp = complements(t);
  for (Element x : subset)
    if (!comp[x] || !in[*comp[x]]) return false;
  for (Element x : subset)
    for (Element y : subset)
      if (auto s = t.oplus(x, y); s && !in[*s]) return false;

  const auto gens = local_atoms(t, subset);
  std::set<Element> distinct(subset.begin(), subset.end());
  if (gens.size() >= 20 || distinct.size() != (std::size_t{1} << gens.size())) return false;
  auto sums = subset_sums(t, gens);
  if (!sums) return false;
  std::set<Element> image(sums->begin(), sums->end());
  return image == distinct && (*sums).back() == t.one();
}

std::vector<std::vector<Element>> blocks(const QuasiOrthoalgebra& t) {
  const std::size_t n = t.size();
  std::set<std::vector<Element>> candidates;

  // Depth-first search over decompositions of 1 into nonzero elements
  // whose every partial sum is defined and distinct.
  std::vector<Element> sums{t.zero()};
  auto extend = [&](auto&& self, Element next_min) -> void {
    if (sums.back() == t.one()) {
      std::vector<Element> sorted = sums;
      std::sort(sorted.begin(), sorted.end());
      candidates.insert(std::move(sorted));
      return;
    }
    for (Element x = next_min; x < n; ++x) {
      if (x == t.zero()) continue;
      std::vector<Element> added;
      added.reserve(sums.size());
      bool ok = true;
      for (Element s : sums) {
        auto v = t.oplus(s, x);
        if (!v) {
          ok = false;
          break;
        }
        added.push_back(*v);
      }
      if (!ok) continue;
      std::set<Element> seen(sums.begin(), sums.end());
      for (Element v : added)
        if (!seen.insert(v).second) {
          ok = false;
          break;
        }
      if (!ok) continue;
      const std::size_t old = sums.size();
      sums.insert(sums.end(), added.begin(), added.end());
      // the full sum sits at the end of the appended half
      self(self, x + 1);
      sums.resize(old);
    }
  };
  extend(extend, 0);

  std::vector<std::vector<Element>> boolean;
  for (const auto& c : candidates)
    if (is_boolean_suborthoalgebra(t, c)) boolean.push_back(c);

  std::vector<std::vector<Element>> out;
  for (const auto& c : boolean) {
    bool maximal = std::none_of(boolean.begin(), boolean.end(), [&](const auto& d) {
      return d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end());
    });
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StructureClass classify(const QuasiOrthoalgebra& t) {
  auto report = is_omp(t);
  if (report.structure_class != StructureClass::omp) return report.structure_class;
  auto bs = blocks(t);
  if (bs.size() == 1 && bs.front().size() == t.size()) return StructureClass::boolean;
  return StructureClass::omp;
}

std::vector<MackeyTriple> mackey_decompositions(const QuasiOrthoalgebra& t, Element a,
                                                Element b) {
  const std::size_t n = t.size();
  std::vector<MackeyTriple> out;
  auto sum3 = [&](Element x, Element y, Element z) {
    auto xy = t.oplus(x, y);
    return xy && t.orthogonal(*xy, z);
  };
  for (Element a1 = 0; a1 < n; ++a1)
    for (Element b1 = 0; b1 < n; ++b1)
      for (Element c = 0; c < n; ++c) {
        if (t.oplus(a1, c) != a || t.oplus(b1, c) != b) continue;
        if (sum3(a1, b1, c) || sum3(a1, c, b1) || sum3(b1, c, a1))
          out.push_back({a1, b1, c});
      }
  return out;
}

QuasiOrthoalgebra boolean_algebra(const std::vector<std::string>& atom_labels) {
  const std::size_t k = atom_labels.size();
  if (k == 0 || k >= 16) throw StructuralError("boolean_algebra needs 1..15 atoms");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<std::string> members;
    for (std::size_t i = 0; i < k; ++i)
      if (m >> i & 1) members.push_back(atom_labels[i]);
    labels[m] = format_set(members);
  }
  TableBuilder builder(std::move(labels));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((x & y) == 0) builder.set(x, y, x | y);
  return builder.build(0, n - 1);
}

}  // namespace qlogic
