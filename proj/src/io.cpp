#include "qlogic/io.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "qlogic/util.hpp"

namespace qlogic {

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::string rest;
};

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto colon = raw.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(number, "expected 'keyword: ...', got '" + std::string(raw) + "'");
    out.push_back({number, std::string(trim(raw.substr(0, colon))),
                   std::string(trim(raw.substr(colon + 1)))});
  }
  return out;
}

[[noreturn]] void unexpected(const Line& l) {
  throw ParseError(l.number, "unexpected keyword '" + l.key + "'");
}

std::vector<std::string> distinct_labels(const Line& l, std::string_view what) {
  auto items = split_ws(l.rest);
  if (items.empty()) throw ParseError(l.number, std::string(what) + " list is empty");
  std::set<std::string> seen;
  for (const auto& s : items) {
    if (s.find('|') != std::string::npos)
      throw ParseError(l.number, "unexpected '|' in " + std::string(what) + " list");
    if (!seen.insert(s).second)
      throw ParseError(l.number, "duplicate " + std::string(what) + " '" + s + "'");
  }
  return items;
}

std::vector<std::vector<std::string>> cells_of(const Line& l) {
  std::vector<std::vector<std::string>> out;
  std::set<std::string> seen;
  std::string_view rest = l.rest;
  for (;;) {
    const auto bar = rest.find('|');
    auto cell = split_ws(rest.substr(0, bar));
    if (cell.empty()) throw ParseError(l.number, "empty cell");
    for (const auto& p : cell)
      if (!seen.insert(p).second) throw ParseError(l.number, "point '" + p + "' repeated");
    out.push_back(std::move(cell));
    if (bar == std::string_view::npos) break;
    rest = rest.substr(bar + 1);
  }
  return out;
}

std::size_t lookup(const Line& l, const std::vector<std::string>& labels, const std::string& s,
                   std::string_view what) {
  auto it = std::find(labels.begin(), labels.end(), s);
  if (it == labels.end())
    throw ParseError(l.number, "unknown " + std::string(what) + " '" + s + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

// Header line that must come first and exactly once.
const Line& header(const std::vector<Line>& ls, std::string_view key) {
  if (ls.empty()) throw ParseError(1, "empty input");
  if (ls.front().key != key)
    throw ParseError(ls.front().number, "expected '" + std::string(key) + ":' first");
  return ls.front();
}

std::string join(const std::vector<std::string>& xs, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string cells_text(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::string> parts;
  for (const auto& c : cells) parts.push_back(join(c));
  return join(parts, " | ");
}

std::vector<std::vector<std::string>> cell_labels(const std::vector<std::string>& ground,
                                                  const std::vector<PointSet>& cells) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cells) {
    std::vector<std::string> labels;
    for (auto x : c) labels.push_back(ground.at(x));
    out.push_back(std::move(labels));
  }
  return out;
}

template <class M>
void parse_tables(const std::vector<Line>& ls, std::size_t from, M& m, bool& moore_seen,
                  bool& mealy_seen, std::vector<std::optional<std::size_t>>& delta,
                  std::vector<std::optional<std::size_t>>& lambda) {
  const std::size_t na = m.inputs.size();
  for (std::size_t i = from; i < ls.size(); ++i) {
    const auto& l = ls[i];
    const auto tok = split_ws(l.rest);
    auto put = [&](std::optional<std::size_t>& slot, std::size_t v) {
      if (slot && *slot != v) throw ParseError(l.number, "conflicting " + l.key + " entry");
      slot = v;
    };
    if (l.key == "delta") {
      if (tok.size() != 4 || tok[2] != "->") throw ParseError(l.number, "expected 'delta: q a -> q'");
      const auto q = lookup(l, m.states, tok[0], "state");
      const auto a = lookup(l, m.inputs, tok[1], "input");
      put(delta[q * na + a], lookup(l, m.states, tok[3], "state"));
    } else if (l.key == "lambda") {
      if (tok.size() == 4 && tok[2] == "->") {
        mealy_seen = true;
        const auto q = lookup(l, m.states, tok[0], "state");
        const auto a = lookup(l, m.inputs, tok[1], "input");
        put(lambda[q * na + a], lookup(l, m.outputs, tok[3], "output"));
      } else if (tok.size() == 3 && tok[1] == "->") {
        moore_seen = true;
        const auto q = lookup(l, m.states, tok[0], "state");
        put(lambda[q * na], lookup(l, m.outputs, tok[2], "output"));
        for (std::size_t a = 1; a < na; ++a) lambda[q * na + a] = lambda[q * na];
      } else {
        throw ParseError(l.number, "expected 'lambda: q a -> o' or 'lambda: q -> o'");
      }
      if (moore_seen && mealy_seen)
        throw ParseError(l.number, "mixes Moore and Mealy lambda lines");
    } else {
      unexpected(l);
    }
  }
}

}  // namespace

BooleanAtlas SetAtlas::atlas() const {
  BooleanAtlas out;
  for (const auto& c : charts) out.charts.push_back(set_chart(omega, c));
  return out;
}

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::greechie: return "greechie";
    case Kind::partition_logic: return "partition_logic";
    case Kind::atlas: return "atlas";
    case Kind::automaton: return "automaton";
    case Kind::test_space: return "test_space";
    case Kind::pts: return "partition_test_space";
    case Kind::urn: return "urn";
  }
  return "?";
}

Kind kind_from_string(std::string_view name) {
  for (Kind k : {Kind::greechie, Kind::partition_logic, Kind::atlas, Kind::automaton,
                 Kind::test_space, Kind::pts, Kind::urn})
    if (to_string(k) == name) return k;
  throw InputError("unknown kind '" + std::string(name) + "'");
}

Kind kind_of(const Structure& s) {
  switch (s.index()) {
    case 0: return Kind::greechie;
    case 1: return Kind::partition_logic;
    case 2: return Kind::atlas;
    case 3:
    case 4: return Kind::automaton;
    case 5: return Kind::test_space;
    case 6: return Kind::pts;
    default: return Kind::urn;
  }
}

Kind detect_kind(std::string_view text) {
  const auto ls = lines_of(text);
  if (ls.empty()) throw ParseError(1, "empty input");
  static const std::map<std::string, Kind, std::less<>> keys{
      {"atoms", Kind::greechie},     {"points", Kind::partition_logic}, {"omega", Kind::atlas},
      {"states", Kind::automaton},   {"outcomes", Kind::test_space},    {"base", Kind::pts},
      {"colors", Kind::urn}};
  auto it = keys.find(ls.front().key);
  if (it == keys.end())
    throw ParseError(ls.front().number, "cannot tell the input kind from '" + ls.front().key + ":'");
  return it->second;
}

GreechieDiagram parse_greechie(std::string_view text) {
  const auto ls = lines_of(text);
  GreechieDiagram d;
  d.atoms = distinct_labels(header(ls, "atoms"), "atom");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i].key != "block") unexpected(ls[i]);
    auto block = distinct_labels(ls[i], "atom");
    for (const auto& a : block) lookup(ls[i], d.atoms, a, "atom");
    d.blocks.push_back(std::move(block));
  }
  if (d.blocks.empty()) throw ParseError(ls.back().number, "no 'block:' lines");
  return d;
}

PartitionLogic parse_partition_logic(std::string_view text) {
  const auto ls = lines_of(text);
  auto ground = distinct_labels(header(ls, "points"), "point");
  std::vector<std::vector<std::vector<std::string>>> partitions;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i].key != "partition") unexpected(ls[i]);
    auto cells = cells_of(ls[i]);
    for (const auto& c : cells)
      for (const auto& p : c) lookup(ls[i], ground, p, "point");
    partitions.push_back(std::move(cells));
  }
  if (partitions.empty()) throw ParseError(ls.back().number, "no 'partition:' lines");
  return PartitionLogic::from_labels(std::move(ground), partitions);
}

SetAtlas parse_atlas(std::string_view text) {
  const auto ls = lines_of(text);
  SetAtlas a;
  a.omega = distinct_labels(header(ls, "omega"), "point");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i].key != "chart") unexpected(ls[i]);
    auto cells = cells_of(ls[i]);
    for (const auto& c : cells)
      for (const auto& p : c) lookup(ls[i], a.omega, p, "point");
    for (auto& c : cells)
      std::sort(c.begin(), c.end(), [&](const std::string& x, const std::string& y) {
        return lookup(ls[i], a.omega, x, "point") < lookup(ls[i], a.omega, y, "point");
      });
    a.charts.push_back(std::move(cells));
  }
  if (a.charts.empty()) throw ParseError(ls.back().number, "no 'chart:' lines");
  return a;
}

Structure parse_automaton(std::string_view text) {
  const auto ls = lines_of(text);
  MealyAutomaton m;
  m.states = distinct_labels(header(ls, "states"), "state");
  const char* order[] = {"inputs", "outputs"};
  for (std::size_t k = 0; k < 2; ++k) {
    if (ls.size() <= k + 1 || ls[k + 1].key != order[k])
      throw ParseError(ls.size() > k + 1 ? ls[k + 1].number : ls.back().number,
                       std::string("expected '") + order[k] + ":'");
  }
  m.inputs = distinct_labels(ls[1], "input");
  m.outputs = distinct_labels(ls[2], "output");
  const std::size_t nq = m.states.size(), na = m.inputs.size();
  std::vector<std::optional<std::size_t>> delta(nq * na), lambda(nq * na);
  bool moore = false, mealy = false;
  parse_tables(ls, 3, m, moore, mealy, delta, lambda);
  for (std::size_t q = 0; q < nq; ++q)
    for (std::size_t a = 0; a < na; ++a) {
      if (!delta[q * na + a])
        throw StructuralError("delta undefined for state " + m.states[q] + " and input " +
                              m.inputs[a]);
      if (!lambda[q * na + a])
        throw StructuralError("lambda undefined for state " + m.states[q] +
                              (moore ? "" : " and input " + m.inputs[a]));
      m.delta.push_back(*delta[q * na + a]);
      m.lambda.push_back(*lambda[q * na + a]);
    }
  if (moore) {
    MooreAutomaton out{m.states, m.inputs, m.outputs, m.delta, {}};
    for (std::size_t q = 0; q < nq; ++q) out.lambda.push_back(m.lambda[q * na]);
    validate(out);
    return out;
  }
  validate(m);
  return m;
}

TestSpace parse_test_space(std::string_view text) {
  const auto ls = lines_of(text);
  auto outcomes = distinct_labels(header(ls, "outcomes"), "outcome");
  std::vector<std::vector<std::string>> tests;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i].key != "test") unexpected(ls[i]);
    auto t = distinct_labels(ls[i], "outcome");
    for (const auto& o : t) lookup(ls[i], outcomes, o, "outcome");
    tests.push_back(std::move(t));
  }
  if (tests.empty()) throw ParseError(ls.back().number, "no 'test:' lines");
  if (outcomes.size() > 64) throw ParseError(ls.front().number, "at most 64 outcomes supported");
  return TestSpace::from_labels(std::move(outcomes), tests);
}

PartitionTestSpace parse_pts(std::string_view text) {
  const auto ls = lines_of(text);
  PartitionTestSpace pts;
  pts.base = distinct_labels(header(ls, "base"), "point");
  auto cell_index = [&](const Line& l, const std::vector<std::string>& cell) {
    PointSet s;
    for (const auto& p : cell) s.push_back(lookup(l, pts.base, p, "point"));
    std::sort(s.begin(), s.end());
    auto it = std::find(pts.cells.begin(), pts.cells.end(), s);
    if (it != pts.cells.end()) return static_cast<std::size_t>(it - pts.cells.begin());
    pts.cells.push_back(std::move(s));
    return pts.cells.size() - 1;
  };
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto& l = ls[i];
    if (l.key == "cells") {
      for (const auto& c : cells_of(l)) cell_index(l, c);
    } else if (l.key == "test") {
      std::vector<std::size_t> t;
      for (const auto& c : cells_of(l)) t.push_back(cell_index(l, c));
      pts.tests.push_back(std::move(t));
    } else {
      unexpected(l);
    }
  }
  if (pts.tests.empty()) throw ParseError(ls.back().number, "no 'test:' lines");
  validate(pts);
  return pts;
}

UrnModel parse_urn(std::string_view text) {
  const auto ls = lines_of(text);
  UrnModel urn;
  urn.colors = distinct_labels(header(ls, "colors"), "color");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto& l = ls[i];
    if (l.key != "ball") unexpected(l);
    auto tok = split_ws(l.rest);
    if (tok.size() != urn.colors.size() + 1)
      throw ParseError(l.number, "expected a ball type and " + std::to_string(urn.colors.size()) +
                                     " symbols");
    if (std::find(urn.ball_types.begin(), urn.ball_types.end(), tok[0]) != urn.ball_types.end())
      throw ParseError(l.number, "duplicate ball type '" + tok[0] + "'");
    urn.ball_types.push_back(tok[0]);
    urn.visible.emplace_back(tok.begin() + 1, tok.end());
  }
  if (urn.ball_types.empty()) throw ParseError(ls.back().number, "no 'ball:' lines");
  return urn;
}

Structure parse(Kind kind, std::string_view text) {
  switch (kind) {
    case Kind::greechie: return parse_greechie(text);
    case Kind::partition_logic: return parse_partition_logic(text);
    case Kind::atlas: return parse_atlas(text);
    case Kind::automaton: return parse_automaton(text);
    case Kind::test_space: return parse_test_space(text);
    case Kind::pts: return parse_pts(text);
    case Kind::urn: return parse_urn(text);
  }
  throw InputError("unknown kind");
}

Structure parse(std::string_view text) { return parse(detect_kind(text), text); }

std::string serialize(const GreechieDiagram& d) {
  std::string out = "atoms: " + join(d.atoms) + "\n";
  for (const auto& b : d.blocks) out += "block: " + join(b) + "\n";
  return out;
}

std::string serialize(const PartitionLogic& pl) {
  std::string out = "points: " + join(pl.ground()) + "\n";
  for (const auto& p : pl.partitions())
    out += "partition: " + cells_text(cell_labels(pl.ground(), p.cells)) + "\n";
  return out;
}

std::string serialize(const SetAtlas& a) {
  std::string out = "omega: " + join(a.omega) + "\n";
  for (const auto& c : a.charts) out += "chart: " + cells_text(c) + "\n";
  return out;
}

std::string serialize(const MealyAutomaton& m) {
  std::string out = "states: " + join(m.states) + "\ninputs: " + join(m.inputs) +
                    "\noutputs: " + join(m.outputs) + "\n";
  for (std::size_t q = 0; q < m.states.size(); ++q)
    for (std::size_t a = 0; a < m.inputs.size(); ++a)
      out += "delta: " + m.states[q] + " " + m.inputs[a] + " -> " + m.states[m.next(q, a)] + "\n";
  for (std::size_t q = 0; q < m.states.size(); ++q)
    for (std::size_t a = 0; a < m.inputs.size(); ++a)
      out += "lambda: " + m.states[q] + " " + m.inputs[a] + " -> " + m.outputs[m.out(q, a)] + "\n";
  return out;
}

std::string serialize(const MooreAutomaton& m) {
  std::string out = "states: " + join(m.states) + "\ninputs: " + join(m.inputs) +
                    "\noutputs: " + join(m.outputs) + "\n";
  for (std::size_t q = 0; q < m.states.size(); ++q)
    for (std::size_t a = 0; a < m.inputs.size(); ++a)
      out += "delta: " + m.states[q] + " " + m.inputs[a] + " -> " + m.states[m.next(q, a)] + "\n";
  for (std::size_t q = 0; q < m.states.size(); ++q)
    out += "lambda: " + m.states[q] + " -> " + m.outputs[m.lambda[q]] + "\n";
  return out;
}

std::string serialize(const TestSpace& ts) {
  std::string out = "outcomes: " + join(ts.outcomes()) + "\n";
  for (Event t : ts.tests()) {
    std::vector<std::string> members;
    for (std::size_t x = 0; x < ts.size(); ++x)
      if (t >> x & 1) members.push_back(ts.outcomes()[x]);
    out += "test: " + join(members) + "\n";
  }
  return out;
}

std::string serialize(const PartitionTestSpace& pts) {
  std::string out = "base: " + join(pts.base) + "\n";
  std::vector<bool> used(pts.cells.size(), false);
  for (const auto& t : pts.tests)
    for (auto y : t) used.at(y) = true;
  std::vector<PointSet> spare;
  for (std::size_t y = 0; y < pts.cells.size(); ++y)
    if (!used[y]) spare.push_back(pts.cells[y]);
  if (!spare.empty()) out += "cells: " + cells_text(cell_labels(pts.base, spare)) + "\n";
  for (const auto& t : pts.tests) {
    std::vector<PointSet> cells;
    for (auto y : t) cells.push_back(pts.cells[y]);
    out += "test: " + cells_text(cell_labels(pts.base, cells)) + "\n";
  }
  return out;
}

std::string serialize(const UrnModel& urn) {
  std::string out = "colors: " + join(urn.colors) + "\n";
  for (std::size_t b = 0; b < urn.ball_types.size(); ++b)
    out += "ball: " + urn.ball_types[b] + " " + join(urn.visible[b]) + "\n";
  return out;
}

std::string serialize(const Structure& s) {
  return std::visit([](const auto& x) { return serialize(x); }, s);
}

std::string canonical(std::string_view text) { return serialize(parse(text)); }

QuasiOrthoalgebra to_quasi_oa(const Structure& s, std::size_t word_length) {
  struct Visitor {
    std::size_t len;
    QuasiOrthoalgebra operator()(const GreechieDiagram& d) const { return from_greechie(d); }
    QuasiOrthoalgebra operator()(const PartitionLogic& pl) const { return pasting_to_oa(pl); }
    QuasiOrthoalgebra operator()(const SetAtlas& a) const {
      return atlas_to_quasi_oa(a.atlas());
    }
    QuasiOrthoalgebra operator()(const MealyAutomaton& m) const {
      return pasting_to_oa(propositional_calculus(m, len));
    }
    QuasiOrthoalgebra operator()(const MooreAutomaton& m) const {
      return pasting_to_oa(propositional_calculus(m, len));
    }
    QuasiOrthoalgebra operator()(const TestSpace& ts) const { return pi_logic(ts); }
    QuasiOrthoalgebra operator()(const PartitionTestSpace& pts) const {
      return pi_logic(as_test_space(pts));
    }
    QuasiOrthoalgebra operator()(const UrnModel& u) const {
      return pasting_to_oa(urn_to_partition_logic(u));
    }
  };
  return std::visit(Visitor{word_length}, s);
}

void verify_structure(const Structure& s) {
  auto fail = [](const AxiomReport& r, const std::string& what) {
    if (r.ok()) return;
    const auto& v = r.violations.front();
    throw ValidationError(what + " fails " + v.axiom + ": " + v.detail);
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GreechieDiagram>) {
          fail(verify_quasi_oa(from_greechie(x)), "pasting");
        } else if constexpr (std::is_same_v<T, PartitionLogic>) {
          fail(verify_quasi_oa(pasting_to_oa(x)), "pasting");
        } else if constexpr (std::is_same_v<T, SetAtlas>) {
          fail(verify_atlas(x.atlas()), "atlas");
        } else if constexpr (std::is_same_v<T, MealyAutomaton> ||
                             std::is_same_v<T, MooreAutomaton>) {
          validate(x);
        } else if constexpr (std::is_same_v<T, TestSpace>) {
          fail(verify_test_space(x), "test space");
        } else if constexpr (std::is_same_v<T, PartitionTestSpace>) {
          validate(x);
          if (!pts_cells_covered(x)) throw ValidationError("some cell lies in no test");
          fail(verify_test_space(as_test_space(x)), "test space");
        } else {
          fail(verify_quasi_oa(pasting_to_oa(urn_to_partition_logic(x))), "urn logic");
        }
      },
      s);
}

}  // namespace qlogic
