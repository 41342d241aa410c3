#include "qlogic/automata.hpp"

#include <algorithm>
#include <map>

namespace qlogic {

namespace {

template <class M>
void validate_common(const M& m) {
  const std::size_t nq = m.states.size(), na = m.inputs.size();
  if (nq == 0) throw StructuralError("automaton has no states");
  if (na == 0) throw StructuralError("automaton has no inputs");
  if (m.outputs.empty()) throw StructuralError("automaton has no outputs");
  if (m.delta.size() != nq * na) throw StructuralError("transition table is not total");
  for (State q : m.delta)
    if (q >= nq) throw StructuralError("transition to unknown state");
}

void check_word(std::size_t alphabet, const Word& w) {
  for (Symbol a : w)
    if (a >= alphabet) throw InputError("input symbol " + std::to_string(a) + " not in alphabet");
}

template <class M, class Run>
Partition partition_by(const M& m, Run&& outputs) {
  std::map<std::vector<std::size_t>, std::size_t> cell_of;
  Partition p;
  for (State q = 0; q < m.states.size(); ++q) {
    auto [it, fresh] = cell_of.emplace(outputs(q), p.cells.size());
    if (fresh) p.cells.emplace_back();
    p.cells[it->second].push_back(q);
  }
  return p;
}

template <class M>
PartitionLogic calculus(const M& m, std::size_t max_length) {
  if (max_length == 0) throw InputError("word length bound must be at least 1");
  validate(m);
  const std::size_t na = m.inputs.size();
  std::vector<Partition> parts;
  for (std::size_t len = 1; len <= max_length; ++len) {
    Word w(len, 0);
    for (;;) {
      parts.push_back(experiment_partition(m, w));
      std::size_t k = len;
      while (k > 0 && w[k - 1] + 1 == na) w[--k] = 0;
      if (k == 0) break;
      ++w[k - 1];
    }
  }
  return {m.states, std::move(parts)};
}

}  // namespace

void validate(const MealyAutomaton& m) {
  validate_common(m);
  if (m.lambda.size() != m.delta.size()) throw StructuralError("output table is not total");
  for (auto o : m.lambda)
    if (o >= m.outputs.size()) throw StructuralError("output symbol out of range");
}

void validate(const MooreAutomaton& m) {
  validate_common(m);
  if (m.lambda.size() != m.states.size()) throw StructuralError("output table is not total");
  for (auto o : m.lambda)
    if (o >= m.outputs.size()) throw StructuralError("output symbol out of range");
}

Word parse_word(const std::vector<std::string>& inputs, const std::vector<std::string>& symbols) {
  Word w;
  for (const auto& s : symbols) {
    auto it = std::find(inputs.begin(), inputs.end(), s);
    if (it == inputs.end()) throw InputError("input symbol '" + s + "' not in alphabet");
    w.push_back(static_cast<Symbol>(it - inputs.begin()));
  }
  return w;
}

std::vector<std::size_t> run(const MealyAutomaton& m, State q0, const Word& w) {
  if (q0 >= m.states.size()) throw InputError("unknown initial state");
  check_word(m.inputs.size(), w);
  std::vector<std::size_t> out;
  State q = q0;
  for (Symbol a : w) {
    out.push_back(m.out(q, a));
    q = m.next(q, a);
  }
  return out;
}

std::vector<std::size_t> run(const MooreAutomaton& m, State q0, const Word& w,
                             bool include_initial) {
  if (q0 >= m.states.size()) throw InputError("unknown initial state");
  check_word(m.inputs.size(), w);
  std::vector<std::size_t> out;
  State q = q0;
  if (include_initial) out.push_back(m.lambda[q]);
  for (Symbol a : w) {
    q = m.next(q, a);
    out.push_back(m.lambda[q]);
  }
  return out;
}

Partition experiment_partition(const MealyAutomaton& m, const Word& w) {
  check_word(m.inputs.size(), w);
  return partition_by(m, [&](State q) { return run(m, q, w); });
}

Partition experiment_partition(const MooreAutomaton& m, const Word& w) {
  check_word(m.inputs.size(), w);
  return partition_by(m, [&](State q) { return run(m, q, w); });
}

PartitionLogic propositional_calculus(const MealyAutomaton& m, std::size_t max_length) {
  return calculus(m, max_length);
}

PartitionLogic propositional_calculus(const MooreAutomaton& m, std::size_t max_length) {
  return calculus(m, max_length);
}

MealyAutomaton partition_logic_to_mealy(const PartitionLogic& pl) {
  MealyAutomaton m;
  m.states = pl.ground();
  const auto& ps = pl.partitions();
  std::size_t widest = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    m.inputs.push_back("P" + std::to_string(i + 1));
    widest = std::max(widest, ps[i].cells.size());
  }
  for (std::size_t o = 1; o <= widest; ++o) m.outputs.push_back(std::to_string(o));
  const std::size_t nq = m.states.size(), na = ps.size();
  m.delta.assign(nq * na, 0);
  m.lambda.assign(nq * na, 0);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t c = 0; c < ps[a].cells.size(); ++c)
      for (State q : ps[a].cells[c]) m.lambda[q * na + a] = c;
  return m;
}

}  // namespace qlogic
