#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/errors.hpp"

namespace qlogic {

/// Index of an element inside a QuasiOrthoalgebra.
using Element = std::size_t;

/// A finite set with designated 0 and 1 and a partial binary operation ⊕,
/// stored as a dense n×n table. Nothing beyond well-formedness is enforced
/// here; the axiom systems are checked by the verify_* functions.
class QuasiOrthoalgebra {
 public:
  /// Partial ⊕ table entry.
  using Entry = std::optional<Element>;

  /// `table` is row-major with `labels.size()^2` entries.
  /// Throws StructuralError if the table is malformed or zero == one.
  QuasiOrthoalgebra(std::vector<std::string> labels, Element zero, Element one,
                    std::vector<Entry> table);

  std::size_t size() const noexcept { return labels_.size(); }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }

  const std::string& label(Element e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  /// Like find() but throws ValidationError for unknown labels.
  Element at(std::string_view label) const;

  Entry oplus(Element a, Element b) const { return table_[a * size() + b]; }
  bool orthogonal(Element a, Element b) const { return oplus(a, b).has_value(); }

  /// Number of defined (ordered) ⊕ entries.
  std::size_t defined_count() const;

  /// Same structure with element `e` renamed to position `perm[e]`.
  QuasiOrthoalgebra permuted(const std::vector<Element>& perm) const;

 private:
  std::vector<std::string> labels_;
  Element zero_;
  Element one_;
  std::vector<Entry> table_;
};

/// Builder for tables: set entries symmetrically, then freeze.
class TableBuilder {
 public:
  explicit TableBuilder(std::vector<std::string> labels);
  Element index(std::string_view label) const;
  /// Defines a ⊕ b = c and b ⊕ a = c. Throws PastingError if a
  /// different value was set before.
  TableBuilder& set(Element a, Element b, Element c);
  TableBuilder& set(std::string_view a, std::string_view b, std::string_view c);
  /// Adds x ⊕ 0 = x for every x.
  TableBuilder& with_zero_identity(Element zero);
  QuasiOrthoalgebra build(Element zero, Element one) const;

 private:
  std::vector<std::string> labels_;
  std::vector<QuasiOrthoalgebra::Entry> table_;
};

enum class StructureClass { not_quasi_oa, quasi_oa, orthoalgebra, omp, boolean };

std::string_view to_string(StructureClass c);

struct Violation {
  std::string axiom;
  std::vector<Element> witness;
  std::string detail;
};

struct AxiomReport {
  StructureClass structure_class = StructureClass::not_quasi_oa;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  const Violation* find(std::string_view axiom) const;
};

/// Checks (oai)–(oavi); one violation per failing axiom carrying the first
/// witness in lexicographic index order.
AxiomReport verify_quasi_oa(const QuasiOrthoalgebra& t);

/// verify_quasi_oa plus associativity (oavii).
AxiomReport verify_oa(const QuasiOrthoalgebra& t);

/// Golfin's axiom system: (oai), (oaiii), (oavii) and a ⊕ a defined ⟹ a = 0.
AxiomReport verify_oa_golfin(const QuasiOrthoalgebra& t);

/// OMP axioms on the order induced by ⊕. Returns the verify_oa report if
/// the table is not an orthoalgebra.
AxiomReport is_omp(const QuasiOrthoalgebra& t);

/// Most specific class the table belongs to.
StructureClass classify(const QuasiOrthoalgebra& t);

/// The unique a' with a ⊕ a' = 1. Throws AxiomError("oaiii") otherwise.
Element orthocomplement(const QuasiOrthoalgebra& t, Element a);

/// Orthocomplement for every element; nullopt where it is not unique.
std::vector<std::optional<Element>> complements(const QuasiOrthoalgebra& t);

/// a ≤ b iff a ⊕ c = b for some c.
bool leq(const QuasiOrthoalgebra& t, Element a, Element b);

/// Dense ≤ relation, row-major.
std::vector<bool> order_matrix(const QuasiOrthoalgebra& t);

/// First (a, b, c) with a ≤ b ≤ c and a ≰ c, if any.
std::optional<std::array<Element, 3>> order_transitivity_counterexample(
    const QuasiOrthoalgebra& t);

/// ≤-minimal nonzero elements.
std::vector<Element> atoms(const QuasiOrthoalgebra& t);

/// Maximal Boolean suborthoalgebras, each as a sorted element list; the
/// list itself is sorted lexicographically.
std::vector<std::vector<Element>> blocks(const QuasiOrthoalgebra& t);

/// Minimal nonzero elements of `subset` under the restricted order.
std::vector<Element> local_atoms(const QuasiOrthoalgebra& t,
                                 const std::vector<Element>& subset);

/// True if `subset` is a Boolean suborthoalgebra: contains 0 and 1, is
/// closed under ' and defined ⊕, and is freely generated by its local atoms.
bool is_boolean_suborthoalgebra(const QuasiOrthoalgebra& t,
                                const std::vector<Element>& subset);

struct MackeyTriple {
  Element a1;
  Element b1;
  Element c;
  friend bool operator==(const MackeyTriple&, const MackeyTriple&) = default;
};

/// All (a1, b1, c) with a = a1 ⊕ c, b = b1 ⊕ c and some bracketing of
/// a1 ⊕ b1 ⊕ c defined.
std::vector<MackeyTriple> mackey_decompositions(const QuasiOrthoalgebra& t,
                                                Element a, Element b);

/// Boolean algebra of all subsets of `atoms` labelled by set notation.
QuasiOrthoalgebra boolean_algebra(const std::vector<std::string>& atoms);

}  // namespace qlogic
