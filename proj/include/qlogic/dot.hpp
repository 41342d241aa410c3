#pragma once

#include <string>

#include "qlogic/greechie.hpp"

namespace qlogic {

/// Atoms of `t` and, for every block, its local atoms.
GreechieDiagram greechie_of(const QuasiOrthoalgebra& t);

/// `graph` with one node per atom and one subgraph per block whose atoms
/// are chained by edges.
std::string render_greechie(const GreechieDiagram& d);

/// `digraph` bottom to top with one node per element and an edge for each
/// covering pair of ≤. Throws ValidationError carrying the first violation
/// if the table is not a quasi-orthoalgebra.
std::string render_hasse(const QuasiOrthoalgebra& t);

}  // namespace qlogic
