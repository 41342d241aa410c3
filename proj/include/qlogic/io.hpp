#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qlogic/atlas.hpp"
#include "qlogic/automata.hpp"
#include "qlogic/greechie.hpp"
#include "qlogic/partition_logic.hpp"
#include "qlogic/test_spaces.hpp"

namespace qlogic {

/// Atlas given by partitions of a ground set, one per chart.
struct SetAtlas {
  std::vector<std::string> omega;
  /// charts[i] lists the atom cells of chart i as point labels.
  std::vector<std::vector<std::vector<std::string>>> charts;

  BooleanAtlas atlas() const;
};

enum class Kind { greechie, partition_logic, atlas, automaton, test_space, pts, urn };

std::string_view to_string(Kind k);
/// Throws InputError for an unknown name.
Kind kind_from_string(std::string_view name);

using Structure = std::variant<GreechieDiagram, PartitionLogic, SetAtlas, MealyAutomaton,
                               MooreAutomaton, TestSpace, PartitionTestSpace, UrnModel>;

Kind kind_of(const Structure& s);

/// Kind named by the first keyword line (`atoms:`, `points:`, `omega:`,
/// `states:`, `outcomes:`, `base:`, `colors:`). Throws ParseError.
Kind detect_kind(std::string_view text);

/// Syntax errors throw ParseError with the offending line. Structural
/// problems the format cannot express (e.g. overlapping cells) surface
/// from the module constructors as StructuralError.
GreechieDiagram parse_greechie(std::string_view text);
PartitionLogic parse_partition_logic(std::string_view text);
SetAtlas parse_atlas(std::string_view text);
/// MealyAutomaton or MooreAutomaton, depending on the lambda lines.
Structure parse_automaton(std::string_view text);
TestSpace parse_test_space(std::string_view text);
PartitionTestSpace parse_pts(std::string_view text);
UrnModel parse_urn(std::string_view text);

Structure parse(Kind kind, std::string_view text);
Structure parse(std::string_view text);

std::string serialize(const GreechieDiagram& d);
std::string serialize(const PartitionLogic& pl);
std::string serialize(const SetAtlas& a);
std::string serialize(const MealyAutomaton& m);
std::string serialize(const MooreAutomaton& m);
std::string serialize(const TestSpace& ts);
std::string serialize(const PartitionTestSpace& pts);
std::string serialize(const UrnModel& urn);
std::string serialize(const Structure& s);

/// Canonical text: serialize(parse(text)).
std::string canonical(std::string_view text);

/// The quasi-OA a structure stands for: pasting for diagrams and partition
/// logics, the union of charts for atlases, Π for (partition) test spaces,
/// and the propositional calculus (words up to `word_length`) for automata.
QuasiOrthoalgebra to_quasi_oa(const Structure& s, std::size_t word_length = 2);

/// Runs the verifier belonging to the structure's kind and throws
/// ValidationError if it fails.
void verify_structure(const Structure& s);

}  // namespace qlogic
