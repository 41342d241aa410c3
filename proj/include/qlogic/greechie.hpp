#pragma once

#include <string>
#include <vector>

#include "qlogic/oa.hpp"

namespace qlogic {

/// Hypergraph of atoms; each block is a list of mutually orthogonal atoms
/// summing to 1.
struct GreechieDiagram {
  std::vector<std::string> atoms;
  std::vector<std::vector<std::string>> blocks;
};

/// Throws StructuralError unless every block has ≥ 2 distinct known atoms,
/// every atom lies in some block, and no block contains another.
void validate(const GreechieDiagram& d);

/// Pasting of the Boolean algebras 2^block.
///
/// Pairs (block, atom subset) are identified by the closure of: all empty
/// subsets together, all full subsets together, equal subsets of shared
/// atoms, and complements of identified pairs. ⊕ of two disjoint subsets of
/// one block is their union. Elements are ordered 0, atoms, coatoms, the
/// remaining elements, 1; atoms keep their own label and coatoms are
/// labelled `x'`.
///
/// Throws PastingError if the identification collapses two distinct
/// elements of one block or makes ⊕ multivalued.
QuasiOrthoalgebra from_greechie(const GreechieDiagram& d);

}  // namespace qlogic
