#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlogic/oa.hpp"

namespace qlogic {

/// Sorted list of point indices into a ground set.
using PointSet = std::vector<std::size_t>;

/// Cells in declared order. The order is meaningful: it fixes the output
/// symbol of each cell when a partition logic is realized as an automaton.
struct Partition {
  std::vector<PointSet> cells;
};

/// Same cells, ignoring order.
bool same_partition(const Partition& a, const Partition& b);

/// Family of partitions of a finite ground set, duplicates removed (first
/// occurrence kept).
class PartitionLogic {
 public:
  /// Throws StructuralError if a partition has an empty cell, overlapping
  /// cells, cells not covering the ground set, or point indices out of range.
  /// Points inside cells are sorted; duplicate partitions are dropped.
  PartitionLogic(std::vector<std::string> ground, std::vector<Partition> partitions);

  /// Convenience: partitions given as lists of cells of point labels.
  static PartitionLogic from_labels(
      std::vector<std::string> ground,
      const std::vector<std::vector<std::vector<std::string>>>& partitions);

  const std::vector<std::string>& ground() const noexcept { return ground_; }
  const std::vector<Partition>& partitions() const noexcept { return partitions_; }

  std::string format(const PointSet& s) const;

 private:
  std::vector<std::string> ground_;
  std::vector<Partition> partitions_;
};

/// Elements are the distinct cell unions of every partition, ordered
/// 0, then by (size, lexicographic), then 1; a ⊕ b is defined iff a and b are
/// disjoint cell unions of a common partition, with value a ∪ b.
QuasiOrthoalgebra pasting_to_oa(const PartitionLogic& pl);

/// Cell union of every element of pasting_to_oa(pl), in element order.
std::vector<PointSet> pasting_elements(const PartitionLogic& pl);

/// Realizes a prime table as a partition logic on its prime ideals:
/// x ⊥ y gives the partition {p(x), p(y), p((x⊕y)')} where p(x) is the set of
/// prime ideals not containing x. Empty cells are dropped and duplicates
/// merged. Points are labelled 1..m in the order of the two-valued states.
/// Throws NotPrimeError naming an inseparable pair.
PartitionLogic oa_to_partition_logic(const QuasiOrthoalgebra& t);

struct UrnModel {
  std::vector<std::string> ball_types;
  std::vector<std::string> colors;
  /// visible[ball][color]
  std::vector<std::vector<std::string>> visible;
};

/// One partition per color; cells are the ball types showing the same
/// symbol, in order of first appearance. Throws StructuralError on a
/// ragged table.
PartitionLogic urn_to_partition_logic(const UrnModel& urn);

struct Isomorphism {
  /// mapping[e] is the image of element e.
  std::vector<Element> mapping;
};

/// True if `mapping` is a bijection preserving definedness and values of ⊕
/// in both directions.
bool is_isomorphism(const QuasiOrthoalgebra& a, const QuasiOrthoalgebra& b,
                    const std::vector<Element>& mapping);

/// Backtracking search for a ⊕-isomorphism. Elements are matched only
/// against candidates with the same invariants (orthogonal-partner count,
/// down-set and up-set sizes); each choice is closed under ' and ⊕ before
/// branching further.
std::optional<Isomorphism> isomorphic(const QuasiOrthoalgebra& a, const QuasiOrthoalgebra& b);

}  // namespace qlogic
