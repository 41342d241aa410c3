#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qlogic/oa.hpp"

namespace qlogic {

/// Boolean algebra 2^atoms whose elements carry global labels.
/// labels[mask] is the global label of the atom subset `mask`.
struct BooleanChart {
  std::vector<std::string> atoms;
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return labels.size(); }
  std::size_t full() const noexcept { return labels.size() - 1; }
  /// Mask of the element with this global label, if the chart contains it.
  std::optional<std::size_t> mask_of(const std::string& label) const;
};

struct BooleanAtlas {
  std::vector<BooleanChart> charts;
};

/// Chart of the Boolean algebra generated by a partition of `omega`; every
/// element is labelled by its sorted point set, e.g. "{3,4}".
BooleanChart set_chart(const std::vector<std::string>& omega,
                       const std::vector<std::vector<std::string>>& cells);

/// Atlas axioms: (i) no chart's image contains another's, (ii) order
/// agreement, (iii) shared 0 and 1, (iv) complement agreement, (v) join
/// agreement for disjoint pairs. Violation witnesses are
/// {chart i, chart j, mask in i, mask in i}. Throws StructuralError if a
/// chart's labels are not injective or its size is not 2^|atoms|.
AxiomReport verify_atlas(const BooleanAtlas& atlas);

struct ManifoldReport {
  bool manifold = true;
  /// chart i, chart j and the two labels whose join or meet differ.
  std::optional<std::tuple<std::size_t, std::size_t, std::string, std::string>> witness;
};

ManifoldReport is_manifold(const BooleanAtlas& atlas);

/// Union of the charts; a ⊕ b is defined iff some chart holds both with
/// a ∧ b = 0, and then equals their join there. Elements appear chart by
/// chart in order of (popcount, mask).
QuasiOrthoalgebra atlas_to_quasi_oa(const BooleanAtlas& atlas);

/// One chart per block, with the block's local atoms as chart atoms.
/// Throws AxiomError if a block fails the Boolean check.
BooleanAtlas quasi_oa_to_atlas(const QuasiOrthoalgebra& t);

/// Compatibility and orthogonality predicates on global labels. All
/// functions throw ValidationError for labels unknown to the atlas.
class AtlasRelations {
 public:
  explicit AtlasRelations(const BooleanAtlas& atlas);

  bool compatible(const std::string& a, const std::string& b) const;
  bool orthogonal(const std::string& a, const std::string& b) const;
  bool jointly_compatible(const std::vector<std::string>& s) const;
  bool pairwise_compatible(const std::vector<std::string>& s) const;
  bool jointly_orthogonal(const std::vector<std::string>& s) const;
  bool pairwise_orthogonal(const std::vector<std::string>& s) const;

 private:
  void check(const std::string& label) const;
  BooleanAtlas atlas_;
};

}  // namespace qlogic
