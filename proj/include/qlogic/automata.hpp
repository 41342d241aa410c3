#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qlogic/partition_logic.hpp"

namespace qlogic {

using State = std::size_t;
using Symbol = std::size_t;
/// Preset experiment: a sequence of input indices.
using Word = std::vector<Symbol>;

struct MealyAutomaton {
  std::vector<std::string> states;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  /// delta[q * inputs.size() + a]
  std::vector<State> delta;
  /// lambda[q * inputs.size() + a], an index into outputs
  std::vector<std::size_t> lambda;

  State next(State q, Symbol a) const { return delta[q * inputs.size() + a]; }
  std::size_t out(State q, Symbol a) const { return lambda[q * inputs.size() + a]; }
};

struct MooreAutomaton {
  std::vector<std::string> states;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<State> delta;
  /// lambda[q]
  std::vector<std::size_t> lambda;

  State next(State q, Symbol a) const { return delta[q * inputs.size() + a]; }
};

/// Throws StructuralError unless the tables are total and in range.
void validate(const MealyAutomaton& m);
void validate(const MooreAutomaton& m);

/// Input labels to a word. Throws InputError for symbols outside the alphabet.
Word parse_word(const std::vector<std::string>& inputs, const std::vector<std::string>& symbols);

/// Outputs λ(q_{k-1}, a_k) along the run from q0.
std::vector<std::size_t> run(const MealyAutomaton& m, State q0, const Word& w);

/// Outputs λ(q_k) for k = 1..n; with include_initial, λ(q0) is emitted first.
std::vector<std::size_t> run(const MooreAutomaton& m, State q0, const Word& w,
                             bool include_initial = false);

/// Q modulo equality of output sequences under w; cells ordered by their
/// smallest state.
Partition experiment_partition(const MealyAutomaton& m, const Word& w);
Partition experiment_partition(const MooreAutomaton& m, const Word& w);

/// Partitions induced by every nonempty word of length ≤ max_length, words
/// taken in length-lexicographic order and duplicates dropped.
PartitionLogic propositional_calculus(const MealyAutomaton& m, std::size_t max_length);
PartitionLogic propositional_calculus(const MooreAutomaton& m, std::size_t max_length);

/// Inputs P1..Pk (one per partition), outputs 1..N where N is the largest
/// partition size. δ sends everything to the first point; λ(q, P) is the
/// 1-based position of q's cell in P.
MealyAutomaton partition_logic_to_mealy(const PartitionLogic& pl);

}  // namespace qlogic
