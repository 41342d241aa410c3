#include "qlogic/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qlogic/corpus.hpp"
#include "qlogic/dot.hpp"
#include "qlogic/io.hpp"
#include "qlogic/util.hpp"

namespace qlogic {

namespace {

using nlohmann::json;

struct Loaded {
  std::string source;
  Structure structure;
};

Loaded load(const std::string& spec, std::istream& in) {
  std::string text;
  if (spec.rfind("corpus:", 0) == 0) {
    const auto& e = corpus_entry(spec.substr(7));
    return {spec, e.load()};
  }
  if (spec == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(spec);
    if (!f) throw InputError("cannot read '" + spec + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  return {spec, parse(text)};
}

std::vector<std::string> labels_of(const QuasiOrthoalgebra& t, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(t.label(x));
  return out;
}

json violations_json(const QuasiOrthoalgebra& t, const AxiomReport& r) {
  json out = json::array();
  for (const auto& v : r.violations)
    out.push_back({{"axiom", v.axiom}, {"witness", labels_of(t, v.witness)}, {"detail", v.detail}});
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

StructureClass class_from_string(const std::string& s) {
  for (auto c : {StructureClass::not_quasi_oa, StructureClass::quasi_oa,
                 StructureClass::orthoalgebra, StructureClass::omp, StructureClass::boolean})
    if (to_string(c) == s) return c;
  throw InputError("unknown structure class '" + s + "'");
}

struct Options {
  bool json = false;
  std::vector<std::string> inputs;
  std::string require = "quasi_oa";
  bool solve = false;
  std::size_t length = 2;
  std::string style = "hasse";
  std::string query;
  std::vector<std::string> elements;
  std::vector<std::string> relate;
};

Report cmd_verify(const Options& o, std::istream& in) {
  Report r;
  const auto l = load(o.inputs.at(0), in);
  r.result["kind"] = to_string(kind_of(l.structure));
  try {
    verify_structure(l.structure);
  } catch (const ValidationError& e) {
    r.status = 1;
    r.message = e.what();
    r.result["valid"] = false;
    return r;
  }
  r.result["valid"] = true;
  const auto t = to_quasi_oa(l.structure, o.length);
  const auto cls = classify(t);
  auto report = verify_oa(t);
  if (report.ok()) report = is_omp(t);
  r.result["elements"] = t.size();
  r.result["class"] = to_string(cls);
  r.result["violations"] = violations_json(t, report);
  const auto need = class_from_string(o.require);
  r.status = cls >= need ? 0 : 1;
  std::ostringstream msg;
  msg << "kind: " << to_string(kind_of(l.structure)) << "\nelements: " << t.size()
      << "\nclass: " << to_string(cls);
  for (const auto& v : report.violations)
    msg << "\nviolation " << v.axiom << ": (" << join(labels_of(t, v.witness), ", ") << ") "
        << v.detail;
  r.message = msg.str();
  return r;
}

Report cmd_states(const Options& o, std::istream& in) {
  Report r;
  const auto t = to_quasi_oa(load(o.inputs.at(0), in).structure, o.length);
  const auto states = enumerate_two_valued_states(t);
  const auto at = atoms(t);
  std::ostringstream msg;
  msg << "state " << join(labels_of(t, at));
  json rows = json::array();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto row = atom_row(t, states[i]);
    rows.push_back(std::vector<int>(row.begin(), row.end()));
    msg << "\n" << i + 1;
    for (auto v : row) msg << " " << int(v);
  }
  r.result = {{"atoms", labels_of(t, at)}, {"count", states.size()}, {"states", rows}};
  if (o.solve) {
    const auto space = state_space_solve(t);
    r.result["dimension"] = space.dimension ? json(*space.dimension) : json(nullptr);
    msg << "\ndimension: " << (space.dimension ? std::to_string(*space.dimension) : "none");
    if (space.sample) {
      json sample = json::object();
      msg << "\nsample:";
      for (Element e = 0; e < t.size(); ++e) {
        sample[t.label(e)] = space.sample->values[e].get_str();
        msg << " " << t.label(e) << "=" << space.sample->values[e].get_str();
      }
      r.result["sample"] = sample;
    }
  }
  r.message = msg.str();
  return r;
}

Report cmd_prime(const Options& o, std::istream& in) {
  Report r;
  const auto t = to_quasi_oa(load(o.inputs.at(0), in).structure, o.length);
  const auto p = is_prime(t);
  r.result = {{"prime", p.prime}, {"states", p.states.size()}};
  if (p.prime) {
    r.message = "prime";
  } else {
    const auto [a, b] = *p.inseparable;
    r.status = 1;
    r.result["inseparable"] = {t.label(a), t.label(b)};
    r.message = "not prime: no two-valued state separates " + t.label(a) + " and " + t.label(b);
  }
  return r;
}

Report cmd_blocks(const Options& o, std::istream& in) {
  Report r;
  const auto t = to_quasi_oa(load(o.inputs.at(0), in).structure, o.length);
  const auto bs = blocks(t);
  json list = json::array();
  std::ostringstream msg;
  msg << bs.size() << " blocks";
  for (const auto& b : bs) {
    const auto at = labels_of(t, local_atoms(t, b));
    list.push_back({{"atoms", at}, {"elements", b.size()}});
    msg << "\n" << format_set(at) << " (" << b.size() << " elements)";
  }
  r.result = {{"count", bs.size()}, {"blocks", list}};
  r.message = msg.str();
  return r;
}

Report cmd_iso(const Options& o, std::istream& in) {
  if (o.inputs.size() != 2) throw InputError("iso needs two inputs");
  Report r;
  const auto a = to_quasi_oa(load(o.inputs[0], in).structure, o.length);
  const auto b = to_quasi_oa(load(o.inputs[1], in).structure, o.length);
  const auto iso = isomorphic(a, b);
  r.result["isomorphic"] = iso.has_value();
  if (!iso) {
    r.status = 1;
    r.message = "not isomorphic";
    return r;
  }
  json mapping = json::object();
  std::ostringstream msg;
  msg << "isomorphic";
  for (Element e = 0; e < a.size(); ++e) {
    mapping[a.label(e)] = b.label(iso->mapping[e]);
    msg << "\n" << a.label(e) << " -> " << b.label(iso->mapping[e]);
  }
  r.result["mapping"] = mapping;
  r.message = msg.str();
  return r;
}

Report cmd_to_pl(const Options& o, std::istream& in) {
  Report r;
  const auto t = to_quasi_oa(load(o.inputs.at(0), in).structure, o.length);
  const auto pl = oa_to_partition_logic(t);
  r.message = serialize(pl);
  r.result = {{"points", pl.ground().size()},
              {"partitions", pl.partitions().size()},
              {"text", r.message}};
  return r;
}

PartitionLogic as_partition_logic(const Structure& s, std::size_t length) {
  if (auto* pl = std::get_if<PartitionLogic>(&s)) return *pl;
  if (auto* u = std::get_if<UrnModel>(&s)) return urn_to_partition_logic(*u);
  if (auto* p = std::get_if<PartitionTestSpace>(&s)) return pts_to_partition_logic(*p);
  if (auto* m = std::get_if<MealyAutomaton>(&s)) return propositional_calculus(*m, length);
  if (auto* m = std::get_if<MooreAutomaton>(&s)) return propositional_calculus(*m, length);
  return oa_to_partition_logic(to_quasi_oa(s, length));
}

Report cmd_to_automaton(const Options& o, std::istream& in) {
  Report r;
  const auto pl = as_partition_logic(load(o.inputs.at(0), in).structure, o.length);
  const auto m = partition_logic_to_mealy(pl);
  r.message = serialize(m);
  r.result = {{"states", m.states.size()}, {"inputs", m.inputs.size()}, {"text", r.message}};
  return r;
}

Report cmd_from_automaton(const Options& o, std::istream& in) {
  Report r;
  const auto s = load(o.inputs.at(0), in).structure;
  if (kind_of(s) != Kind::automaton) throw InputError("from-automaton needs an automaton");
  const auto pl = as_partition_logic(s, o.length);
  r.message = serialize(pl);
  r.result = {{"points", pl.ground().size()},
              {"partitions", pl.partitions().size()},
              {"text", r.message}};
  return r;
}

bool atlas_query(const AtlasRelations& rel, const Options& o) {
  const auto& xs = o.elements;
  auto pair = [&] {
    if (xs.size() != 2) throw InputError(o.query + " needs exactly two elements");
  };
  try {
    if (o.query == "compatible") return pair(), rel.compatible(xs[0], xs[1]);
    if (o.query == "orthogonal") return pair(), rel.orthogonal(xs[0], xs[1]);
    if (o.query == "jointly-compatible") return rel.jointly_compatible(xs);
    if (o.query == "pairwise-compatible") return rel.pairwise_compatible(xs);
    if (o.query == "jointly-orthogonal") return rel.jointly_orthogonal(xs);
    if (o.query == "pairwise-orthogonal") return rel.pairwise_orthogonal(xs);
  } catch (const ValidationError& e) {
    throw InputError(e.what());
  }
  throw InputError("unknown query '" + o.query + "'");
}

Report cmd_atlas(const Options& o, std::istream& in) {
  Report r;
  const auto s = load(o.inputs.at(0), in).structure;
  BooleanAtlas atlas;
  std::ostringstream msg;
  if (auto* sa = std::get_if<SetAtlas>(&s)) {
    atlas = sa->atlas();
  } else {
    atlas = quasi_oa_to_atlas(to_quasi_oa(s, o.length));
  }
  json charts = json::array();
  msg << atlas.charts.size() << " charts";
  for (const auto& c : atlas.charts) {
    charts.push_back(c.atoms);
    msg << "\nchart " << format_set(c.atoms);
  }
  r.result["charts"] = charts;
  const auto report = verify_atlas(atlas);
  r.result["valid"] = report.ok();
  if (!report.ok()) {
    r.status = 1;
    json vs = json::array();
    for (const auto& v : report.violations) {
      vs.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
      msg << "\nviolation " << v.axiom << ": " << v.detail;
    }
    r.result["violations"] = vs;
    r.message = msg.str();
    return r;
  }
  const auto manifold = is_manifold(atlas);
  r.result["manifold"] = manifold.manifold;
  msg << "\nmanifold: " << (manifold.manifold ? "yes" : "no");
  if (manifold.witness) {
    const auto& [i, j, a, b] = *manifold.witness;
    r.result["manifold_witness"] = {{"charts", {i + 1, j + 1}}, {"elements", {a, b}}};
    msg << " (charts " << i + 1 << ", " << j + 1 << " on " << a << ", " << b << ")";
  }
  const auto t = atlas_to_quasi_oa(atlas);
  r.result["elements"] = t.size();
  r.result["class"] = to_string(classify(t));
  msg << "\nelements: " << t.size() << "\nclass: " << to_string(classify(t));
  if (auto c = order_transitivity_counterexample(t)) {
    const auto w = labels_of(t, {(*c)[0], (*c)[1], (*c)[2]});
    r.result["non_transitive"] = w;
    msg << "\norder not transitive: " << w[0] << " <= " << w[1] << " <= " << w[2] << " but "
        << w[0] << " !<= " << w[2];
  }
  if (!o.query.empty()) {
    const bool v = atlas_query(AtlasRelations(atlas), o);
    r.result["query"] = {{"relation", o.query}, {"elements", o.elements}, {"value", v}};
    msg << "\n" << o.query << " " << join(o.elements) << ": " << (v ? "true" : "false");
    r.status = v ? 0 : 1;
  }
  r.message = msg.str();
  return r;
}

Event event_from(const TestSpace& ts, const std::string& spec) {
  std::vector<std::string> labels;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');)
    if (!trim(item).empty()) labels.emplace_back(trim(item));
  try {
    return ts.event(labels);
  } catch (const ValidationError& e) {
    throw InputError(e.what());
  }
}

Report cmd_testspace(const Options& o, std::istream& in) {
  Report r;
  const auto s = load(o.inputs.at(0), in).structure;
  const PartitionTestSpace* pts = std::get_if<PartitionTestSpace>(&s);
  std::optional<TestSpace> ts;
  if (auto* t = std::get_if<TestSpace>(&s)) ts = *t;
  else if (pts) ts = as_test_space(*pts);
  else throw InputError("testspace needs a test space or a partition test space");

  std::ostringstream msg;
  const auto report = verify_test_space(*ts);
  r.result["valid"] = report.ok();
  msg << "outcomes: " << ts->size() << "\ntests: " << ts->tests().size()
      << "\nvalid: " << (report.ok() ? "yes" : "no");
  for (const auto& v : report.violations) msg << "\nviolation " << v.axiom << ": " << v.detail;
  if (!report.ok()) {
    r.status = 1;
    r.message = msg.str();
    return r;
  }
  r.result["events"] = events(*ts).size();
  const auto alg = is_algebraic(*ts);
  r.result["algebraic"] = alg.algebraic;
  msg << "\nevents: " << events(*ts).size() << "\nalgebraic: " << (alg.algebraic ? "yes" : "no");
  if (alg.witness) {
    const auto& [f, g, h] = *alg.witness;
    r.result["algebraic_witness"] = {ts->format(f), ts->format(g), ts->format(h)};
    msg << " (" << ts->format(f) << " ~ " << ts->format(g) << ", " << ts->format(f) << " loc "
        << ts->format(h) << ")";
  }
  const auto weights = enumerate_two_valued_weights(*ts);
  r.result["two_valued_weights"] = weights.size();
  msg << "\ntwo-valued weights: " << weights.size();
  if (!pts) {
    try {
      const auto image = ts_to_partition_test_space(*ts);
      r.result["partition_test_space"] = serialize(image);
      msg << "\nseparating: yes\n" << serialize(image);
    } catch (const SeparationError& e) {
      r.result["separating"] = false;
      msg << "\nseparating: no (" << e.what() << ")";
    }
  } else {
    const bool complete = is_complete(*pts);
    const auto omp = omp_conditions(*pts);
    r.result["complete"] = complete;
    r.result["triple_condition"] = omp.triple_condition;
    r.result["concrete_condition"] = omp.concrete_condition;
    msg << "\ncomplete: " << (complete ? "yes" : "no")
        << "\ntriple condition: " << (omp.triple_condition ? "yes" : "no");
    if (omp.triple_witness) {
      std::vector<std::string> w;
      for (Event e : *omp.triple_witness) w.push_back(ts->format(e));
      r.result["triple_witness"] = w;
      msg << " (" << join(w, ", ") << ")";
    }
    msg << "\nconcrete condition: " << (omp.concrete_condition ? "yes" : "no");
    if (omp.concrete_witness) {
      std::vector<std::string> w;
      for (Event e : *omp.concrete_witness) w.push_back(ts->format(e));
      r.result["concrete_witness"] = w;
      msg << " (" << join(w, ", ") << ")";
    }
  }
  if (!o.relate.empty()) {
    const Event f = event_from(*ts, o.relate.at(0)), g = event_from(*ts, o.relate.at(1));
    EventRelations rel;
    try {
      rel = event_relations(*ts, f, g);
    } catch (const ValidationError& e) {
      throw InputError(e.what());
    }
    std::vector<std::string> axes;
    for (Event h : rel.axes) axes.push_back(ts->format(h));
    r.result["relations"] = {{"orthogonal", rel.orthogonal},
                             {"loc", rel.loc},
                             {"perspective", rel.perspective},
                             {"axes", axes}};
    msg << "\n" << ts->format(f) << " vs " << ts->format(g) << ": orthogonal "
        << (rel.orthogonal ? "yes" : "no") << ", loc " << (rel.loc ? "yes" : "no")
        << ", perspective " << (rel.perspective ? "yes" : "no");
    if (!axes.empty()) msg << " (axes " << join(axes, ", ") << ")";
  }
  r.message = msg.str();
  return r;
}

Report cmd_complete(const Options& o, std::istream& in) {
  Report r;
  const auto s = load(o.inputs.at(0), in).structure;
  PartitionTestSpace pts;
  if (auto* p = std::get_if<PartitionTestSpace>(&s)) pts = *p;
  else if (auto* pl = std::get_if<PartitionLogic>(&s)) pts = partition_logic_to_pts(*pl);
  else throw InputError("complete needs a partition test space or a partition logic");
  const auto done = completion(pts);
  r.result = {{"added", done.tests.size() - pts.tests.size()},
              {"complete", done.tests.size() == pts.tests.size()},
              {"text", serialize(done)}};
  r.message = serialize(done);
  return r;
}

Report cmd_dot(const Options& o, std::istream& in) {
  Report r;
  const auto s = load(o.inputs.at(0), in).structure;
  if (o.style == "greechie") {
    if (auto* d = std::get_if<GreechieDiagram>(&s)) r.message = render_greechie(*d);
    else r.message = render_greechie(greechie_of(to_quasi_oa(s, o.length)));
  } else if (o.style == "hasse") {
    try {
      r.message = render_hasse(to_quasi_oa(s, o.length));
    } catch (const ValidationError& e) {
      r.status = 1;
      r.message = e.what();
      return r;
    }
  } else {
    throw InputError("unknown style '" + o.style + "'");
  }
  r.result["dot"] = r.message;
  return r;
}

Report cmd_corpus(const Options& o, std::istream&) {
  Report r;
  if (!o.inputs.empty()) {
    const auto& e = corpus_entry(o.inputs[0]);
    r.message = e.text;
    r.result = {{"id", e.id}, {"kind", to_string(e.kind)}, {"text", e.text}};
    return r;
  }
  json list = json::array();
  std::ostringstream msg;
  for (const auto& e : corpus()) {
    list.push_back({{"id", e.id}, {"kind", to_string(e.kind)}, {"description", e.description}});
    msg << e.id << "  " << to_string(e.kind) << "  " << e.description << "\n";
  }
  r.result["entries"] = list;
  r.message = msg.str();
  if (!r.message.empty()) r.message.pop_back();
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Finite quantum logic toolkit"};
  app.name("qlogic");
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit the machine-readable report");

  using Handler = Report (*)(const Options&, std::istream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h, bool two_inputs = false,
                 bool optional = false) {
    auto* sub = app.add_subcommand(name, help);
    auto* opt = sub->add_option("input", o.inputs, two_inputs ? "Two inputs" : "Input")
                    ->expected(optional ? 0 : (two_inputs ? 2 : 1), two_inputs ? 2 : 1);
    if (!optional) opt->required();
    sub->add_flag("--json", o.json, "Emit the machine-readable report");
    sub->add_option("--length", o.length, "Word length bound for automata")
        ->check(CLI::PositiveNumber);
    commands.emplace_back(sub, h);
    return sub;
  };
  auto* verify = add("verify", "Classify the structure and list axiom violations", cmd_verify);
  verify->add_option("--require", o.require, "Minimum class for exit status 0")
      ->check(CLI::IsMember({"not_quasi_oa", "quasi_oa", "orthoalgebra", "omp", "boolean"}));
  auto* states = add("states", "List two-valued states as atom rows", cmd_states);
  states->add_flag("--solve", o.solve, "Also solve the exact state space");
  add("prime", "Decide whether two-valued states separate elements", cmd_prime);
  add("blocks", "List maximal Boolean subalgebras", cmd_blocks);
  add("iso", "Search for an isomorphism between two inputs", cmd_iso, true);
  add("to-pl", "Represent a prime logic as a partition logic", cmd_to_pl);
  add("to-automaton", "Realize a partition logic as a Mealy automaton", cmd_to_automaton);
  add("from-automaton", "Propositional calculus of an automaton", cmd_from_automaton);
  auto* atlas = add("atlas", "Check a Boolean atlas or build one from blocks", cmd_atlas);
  atlas->add_option("--query", o.query, "Relation to evaluate")
      ->check(CLI::IsMember({"compatible", "orthogonal", "jointly-compatible",
                             "pairwise-compatible", "jointly-orthogonal", "pairwise-orthogonal"}));
  atlas->add_option("--elements", o.elements, "Element labels for --query");
  auto* ts = add("testspace", "Analyse a test space or partition test space", cmd_testspace);
  ts->add_option("--relate", o.relate, "Two events as comma-separated outcomes")->expected(2);
  add("complete", "Complete a partition test space", cmd_complete);
  auto* dot = add("dot", "Render a Greechie or Hasse diagram as DOT", cmd_dot);
  dot->add_option("--style", o.style, "greechie or hasse")
      ->check(CLI::IsMember({"greechie", "hasse"}));
  add("corpus", "List bundled examples or print one", cmd_corpus, false, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report r;
  for (const auto& [sub, handler] : commands)
    if (sub->parsed()) {
      r.command = sub->get_name();
      r.inputs = o.inputs;
      try {
        Report got = handler(o, in);
        got.command = r.command;
        got.inputs = r.inputs;
        r = std::move(got);
      } catch (const NotPrimeError& e) {
        r.status = 1;
        r.message = e.what();
      } catch (const SeparationError& e) {
        r.status = 1;
        r.message = e.what();
      } catch (const AlgebraicityError& e) {
        r.status = 1;
        r.message = e.what();
      } catch (const AxiomError& e) {
        r.status = 1;
        r.message = e.what();
      } catch (const std::exception& e) {
        r.status = 2;
        r.message = e.what();
      }
    }

  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else if (r.status == 2) {
    err << "qlogic: " << r.message << "\n";
  } else {
    out << r.message;
    if (!r.message.empty() && r.message.back() != '\n') out << "\n";
  }
  return r.status;
}

}  // namespace qlogic
