#include <cstdio>
#include <functional>
#include <iostream>

#include "support.hpp"

using namespace qlogic;
using support::table;

namespace {

using Rows = std::set<std::vector<int>>;

Rows atom_rows(const QuasiOrthoalgebra& t, const std::vector<std::string>& atom_labels) {
  Rows out;
  for (const auto& s : enumerate_two_valued_states(t)) {
    std::vector<int> row;
    for (const auto& a : atom_labels) row.push_back(s.values[t.at(a)]);
    out.insert(row);
  }
  return out;
}

TestSpace of_greechie(const std::string& id) {
  const auto d = std::get<GreechieDiagram>(corpus_entry(id).load());
  return TestSpace::from_labels(d.atoms, d.blocks);
}

bool iso(const QuasiOrthoalgebra& a, const QuasiOrthoalgebra& b) {
  return isomorphic(a, b).has_value();
}

bool wright_states() {
  const auto t = table("wright");
  const Rows expected{{1, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 1}, {0, 1, 0, 0, 1, 0}, {0, 1, 0, 1, 0, 1}};
  return enumerate_two_valued_states(t).size() == 4 &&
         atom_rows(t, {"a", "b", "c", "d", "e", "f"}) == expected;
}

bool fig12_states() {
  const auto t = table("fig12");
  const Rows expected{{1, 0, 0, 1, 0, 0, 1, 0, 1}, {1, 0, 0, 1, 0, 0, 0, 1, 0},
                     {0, 1, 0, 1, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 0, 1, 0},
                     {0, 0, 1, 0, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 1, 0, 0, 0, 1}};
  return enumerate_two_valued_states(t).size() == 6 &&
         atom_rows(t, {"a", "b", "c", "d", "e", "f", "g", "h", "i"}) == expected;
}

bool fano() {
  const auto t = table("fano");
  if (!enumerate_two_valued_states(t).empty() || is_prime(t).prime) return false;
  const auto s = state_space_solve(t);
  if (s.dimension != 0u || !s.sample) return false;
  for (Element a : support::raw_atoms(t))
    if (s.sample->values[a] != Rational(1, 3)) return false;
  return support::boost_state_dimension(t) == 0;
}

bool six_point() {
  const auto t = table("six-point-atlas");
  if (!verify_quasi_oa(t).ok() || verify_oa(t).ok()) return false;
  const auto c = order_transitivity_counterexample(t);
  return c && t.label((*c)[0]) == "{3}" && t.label((*c)[1]) == "{3,4}" &&
         t.label((*c)[2]) == "{3,4,5}";
}

bool round_trip() {
  for (const auto& id : {"firefly", "wright", "fig12", "fig15", "fig16"}) {
    const auto t = table(id);
    if (!iso(pasting_to_oa(oa_to_partition_logic(t)), t)) return false;
  }
  return true;
}

bool automata() {
  const auto w = std::get<MealyAutomaton>(corpus_entry("wright-mealy").load());
  const auto f = std::get<MealyAutomaton>(corpus_entry("fig12-mealy").load());
  return iso(pasting_to_oa(propositional_calculus(w, 2)), table("wright")) &&
         iso(pasting_to_oa(propositional_calculus(f, 2)), table("fig12"));
}

bool realization() {
  std::size_t seen = 0;
  for (const auto& e : corpus()) {
    if (e.kind != Kind::partition_logic) continue;
    const auto pl = std::get<PartitionLogic>(e.load());
    const auto back = propositional_calculus(partition_logic_to_mealy(pl), 1);
    if (!iso(pasting_to_oa(back), pasting_to_oa(pl))) return false;
    ++seen;
  }
  return seen > 0;
}

bool urns() {
  const auto ff = std::get<UrnModel>(corpus_entry("firefly-urn").load());
  const auto w = std::get<UrnModel>(corpus_entry("wright-urn").load());
  return iso(pasting_to_oa(urn_to_partition_logic(ff)), table("firefly")) &&
         iso(pasting_to_oa(urn_to_partition_logic(w)), table("wright"));
}

bool counts() {
  const auto ff = table("firefly");
  const auto w = table("wright");
  return ff.size() == 12 && blocks(ff).size() == 2 && w.size() == 14 &&
         blocks(w).size() == 3 && is_omp(ff).ok() && !is_omp(w).ok();
}

bool four_point() {
  const auto pts = std::get<PartitionTestSpace>(corpus_entry("four-point-pts").load());
  const auto ts = as_test_space(pts);
  if (!iso(pi_logic(ts), table("firefly"))) return false;
  const auto c = omp_conditions(pts);
  return !c.concrete_condition && c.concrete_witness &&
         ts.format((*c.concrete_witness)[0]) == "{{2}}" &&
         ts.format((*c.concrete_witness)[1]) == "{{3}}";
}

bool golfin() {
  for (const auto& e : corpus()) {
    const auto t = to_quasi_oa(e.load());
    if (verify_oa(t).ok() != verify_oa_golfin(t).ok()) return false;
  }
  support::TableSource src(20240601);
  std::size_t checked = 0, oa = 0, not_oa = 0;
  for (std::size_t draws = 0; checked < 1000 && draws < 100000; ++draws) {
    const auto t = src.next();
    if (t.size() > 8 || !verify_quasi_oa(t).ok()) continue;
    ++checked;
    const bool a = verify_oa(t).ok();
    if (a != verify_oa_golfin(t).ok()) return false;
    (a ? oa : not_oa)++;
  }
  std::cout << "  (" << checked << " random tables of <= 8 elements: " << oa
            << " orthoalgebras, " << not_oa << " not)\n";
  // every quasi-OA with at most 8 elements is an OA, so the sample above
  // never exercises disagreement; larger partition logic pastings do
  std::size_t big = 0, big_oa = 0, big_not = 0;
  for (std::size_t draws = 0; big < 300 && draws < 10000; ++draws) {
    const auto t = src.next_partition_logic();
    if (!verify_quasi_oa(t).ok()) continue;
    ++big;
    const bool a = verify_oa(t).ok();
    if (a != verify_oa_golfin(t).ok()) return false;
    (a ? big_oa : big_not)++;
  }
  std::cout << "  (" << big << " random partition logic pastings: " << big_oa
            << " orthoalgebras, " << big_not << " not)\n";
  return checked >= 1000 && oa > 0 && big >= 300 && big_oa > 0 && big_not > 0;
}

bool mackey() {
  for (const auto& e : corpus()) {
    const auto t = to_quasi_oa(e.load());
    if (!verify_oa(t).ok() || !is_prime(t).prime) continue;
    for (Element a = 0; a < t.size(); ++a)
      for (Element b = 0; b < t.size(); ++b)
        if (mackey_decompositions(t, a, b).size() > 1) return false;
  }
  return true;
}

bool oracle() {
  for (const auto& e : corpus()) {
    const auto t = to_quasi_oa(e.load());
    std::set<std::vector<std::uint8_t>> got;
    for (const auto& s : enumerate_two_valued_states(t)) got.insert(s.values);
    if (got != support::brute_force_states(t)) return false;
  }
  return true;
}

bool separation() {
  const auto pts = ts_to_partition_test_space(of_greechie("wright"));
  const auto pl = std::get<PartitionLogic>(corpus_entry("wright-pl").load());
  if (pts.base.size() != 4 || !iso(pasting_to_oa(pts_to_partition_logic(pts)), pasting_to_oa(pl)))
    return false;
  try {
    ts_to_partition_test_space(of_greechie("fano"));
  } catch (const SeparationError& e) {
    return std::string(e.what()).find("no separating two-valued weights") != std::string::npos;
  }
  return false;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"wright triangle: 4 two-valued states with the expected atom rows", wright_states},
      {"fig12: 6 two-valued states with the expected atom rows", fig12_states},
      {"fano: no two-valued states, not prime, state space a point with atoms at 1/3", fano},
      {"six-point atlas: quasi-OA, not OA, counterexample ({3},{3,4},{3,4,5})", six_point},
      {"prime logics round trip through partition logics", round_trip},
      {"corpus Mealy machines realize wright and fig12", automata},
      {"partition logics round trip through resetting Mealy machines", realization},
      {"urn models give firefly and wright", urns},
      {"firefly 12 elements / 2 blocks / OMP, wright 14 / 3 / not OMP", counts},
      {"four-point PTS: logic is firefly, not concrete, witness ({2},{3})", four_point},
      {"verify_oa and the alternative axiom set agree", golfin},
      {"at most one Mackey decomposition in prime orthoalgebras", mackey},
      {"state enumeration matches the brute-force oracle", oracle},
      {"wright test space gives a 4-point PTS, fano has no separating weights", separation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    std::string note;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      note = std::string(" [") + e.what() + "]";
    }
    std::cout << (ok ? "PASS " : "FAIL ") << i + 1 << ": " << criteria[i].first << note << '\n';
    failed += !ok;
  }
  return failed ? 1 : 0;
}
