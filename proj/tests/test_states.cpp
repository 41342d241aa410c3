#include <doctest.h>

#include "qlogic/linear.hpp"
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

// every atom at `atom_value`, spread to the other elements by additivity
RationalState atoms_at(const QuasiOrthoalgebra& t, const Rational& atom_value) {
  std::vector<std::optional<Rational>> v(t.size());
  v[t.zero()] = Rational(0);
  for (Element a : atoms(t)) v[a] = atom_value;
  for (bool changed = true; changed;) {
    changed = false;
    for (Element a = 0; a < t.size(); ++a)
      for (Element b = 0; b < t.size(); ++b)
        if (auto c = t.oplus(a, b); c && v[a] && v[b] && !v[*c]) {
          v[*c] = *v[a] + *v[b];
          changed = true;
        }
  }
  RationalState s;
  for (const auto& x : v) s.values.push_back(x.value_or(Rational(-1)));
  return s;
}

}  // namespace

TEST_CASE("wright triangle two-valued states") {
  const Rows expected{{1, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 1}, {0, 1, 0, 0, 1, 0}, {0, 1, 0, 1, 0, 1}};
  CHECK(atom_rows(table("wright"), {"a", "b", "c", "d", "e", "f"}) == expected);
}

TEST_CASE("fig12 two-valued states") {
  const Rows expected{{1, 0, 0, 1, 0, 0, 1, 0, 1}, {1, 0, 0, 1, 0, 0, 0, 1, 0},
                      {0, 1, 0, 1, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 0, 1, 0},
                      {0, 0, 1, 0, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 1, 0, 0, 0, 1}};
  CHECK(atom_rows(table("fig12"), {"a", "b", "c", "d", "e", "f", "g", "h", "i"}) == expected);
}

TEST_CASE("fano has no two-valued states") {
  CHECK(enumerate_two_valued_states(table("fano")).empty());
}

TEST_CASE("enumeration matches the brute-force oracle") {
  for (const auto& id : support::greechie_ids()) {
    CAPTURE(id);
    const auto t = table(id);
    std::set<std::vector<std::uint8_t>> got;
    for (const auto& s : enumerate_two_valued_states(t)) got.insert(s.values);
    CHECK(got == support::brute_force_states(t));
  }
}

TEST_CASE("enumeration is sorted and duplicate free") {
  const auto states = enumerate_two_valued_states(table("fig15"));
  CHECK(std::is_sorted(states.begin(), states.end()));
  CHECK(std::adjacent_find(states.begin(), states.end()) == states.end());
}

TEST_CASE("rational states") {
  CHECK(is_state(table("fano"), atoms_at(table("fano"), Rational(1, 3))));
  CHECK(is_state(table("firefly"), atoms_at(table("firefly"), Rational(1, 3))));
  CHECK_FALSE(is_state(table("firefly"), atoms_at(table("firefly"), Rational(1, 2))));

  const auto w = table("wright");
  RationalState s;
  s.values.assign(w.size(), 0);
  s.values[w.one()] = 1;
  CHECK_FALSE(is_state(w, s));
  for (const auto& st : enumerate_two_valued_states(w)) CHECK(is_state(w, to_rational(st)));
}

TEST_CASE("prime ideals correspond to two-valued states") {
  const auto w = table("wright");
  const auto states = enumerate_two_valued_states(w);
  const auto row1 = std::find_if(states.begin(), states.end(), [&](const TwoValuedState& s) {
    return s.values[w.at("a")] == 1 && s.values[w.at("d")] == 1;
  });
  REQUIRE(row1 != states.end());
  const auto ideal = state_to_prime_ideal(w, *row1);
  for (const char* x : {"b", "c", "e", "f", "0"})
    CHECK(std::binary_search(ideal.members.begin(), ideal.members.end(), w.at(x)));
  for (const char* x : {"a", "d", "1"})
    CHECK_FALSE(std::binary_search(ideal.members.begin(), ideal.members.end(), w.at(x)));
  for (Element x : ideal.members)
    for (Element y = 0; y < w.size(); ++y)
      if (leq(w, y, x)) CHECK(std::binary_search(ideal.members.begin(), ideal.members.end(), y));

  for (const auto& id : support::greechie_ids()) {
    CAPTURE(id);
    const auto t = table(id);
    for (const auto& s : enumerate_two_valued_states(t)) {
      const auto i = state_to_prime_ideal(t, s);
      CHECK(is_prime_ideal(t, i));
      CHECK(prime_ideal_to_state(t, i) == s);
    }
  }
}

TEST_CASE("fig12 row with c, f, g") {
  const auto t = table("fig12");
  const auto states = enumerate_two_valued_states(t);
  const auto it = std::find_if(states.begin(), states.end(), [&](const TwoValuedState& s) {
    return s.values[t.at("c")] && s.values[t.at("f")] && s.values[t.at("g")];
  });
  REQUIRE(it != states.end());
  const auto ideal = state_to_prime_ideal(t, *it);
  std::vector<std::string> atoms_out;
  for (Element a : atoms(t))
    if (!std::binary_search(ideal.members.begin(), ideal.members.end(), a))
      atoms_out.push_back(t.label(a));
  CHECK(atoms_out == std::vector<std::string>{"c", "f", "g"});
}

TEST_CASE("state and ideal conversions validate their input") {
  const auto w = table("wright");
  TwoValuedState bad{std::vector<std::uint8_t>(w.size(), 1)};
  CHECK_THROWS_AS(state_to_prime_ideal(w, bad), ValidationError);
  CHECK_THROWS_AS(prime_ideal_to_state(w, PrimeIdeal{{w.one()}}), ValidationError);
  CHECK_THROWS_AS(prime_ideal_to_state(w, PrimeIdeal{{w.zero()}}), ValidationError);
}

TEST_CASE("primeness") {
  CHECK(is_prime(table("wright")).prime);
  const auto f = is_prime(table("fano"));
  CHECK_FALSE(f.prime);
  CHECK(f.inseparable.has_value());
  CHECK(is_prime(boolean_algebra({"1", "2"})).prime);
  for (const auto& id : {"firefly", "wright", "fig12", "fig15", "fig16"}) {
    CAPTURE(id);
    const auto t = table(id);
    const auto r = is_prime(t);
    REQUIRE(r.prime);
    for (Element a = 0; a < t.size(); ++a)
      for (Element b = a + 1; b < t.size(); ++b)
        CHECK(std::any_of(r.states.begin(), r.states.end(),
                          [&](const auto& s) { return s.values[a] != s.values[b]; }));
  }
}

TEST_CASE("state space") {
  const auto fano = state_space_solve(table("fano"));
  REQUIRE(fano.dimension);
  CHECK(*fano.dimension == 0);
  REQUIRE(fano.sample);
  const auto t = table("fano");
  for (Element a : atoms(t)) CHECK(fano.sample->values[a] == Rational(1, 3));

  const auto block = state_space_solve(support::greechie({"x", "y", "z"}, {{"x", "y", "z"}}));
  CHECK(block.dimension == 2u);

  const auto w = table("wright");
  const auto ws = state_space_solve(w);
  CHECK(ws.dimension == 3u);
  CHECK(support::boost_state_dimension(w) == 3u);
  REQUIRE(ws.sample);
  CHECK(is_state(w, *ws.sample));

  for (const auto& id : support::greechie_ids()) {
    CAPTURE(id);
    const auto t = table(id);
    CHECK(state_space_solve(t).dimension == support::boost_state_dimension(t));
  }
}

TEST_CASE("exact elimination") {
  RationalMatrix a{{1, 1}, {1, -1}};
  auto s = solve_exact(a, {2, 0});
  CHECK(s.consistent);
  CHECK(s.rank == 2);
  REQUIRE(s.particular);
  CHECK((*s.particular)[0] == 1);
  CHECK((*s.particular)[1] == 1);

  auto bad = solve_exact({{1, 1}, {2, 2}}, {1, 3});
  CHECK_FALSE(bad.consistent);
  auto under = solve_exact({{1, 1}}, {Rational(1, 2)});
  CHECK(under.rank == 1);
  CHECK((*under.particular)[0] + (*under.particular)[1] == Rational(1, 2));
}

TEST_CASE("prime ideals counted by brute force") {
  for (const auto& id : {"firefly", "wright"}) {
    CAPTURE(id);
    const auto t = table(id);
    std::size_t primes = 0;
    for (std::uint32_t mask = 0; mask < (1u << t.size()); ++mask) {
      PrimeIdeal i;
      for (Element e = 0; e < t.size(); ++e)
        if (mask >> e & 1) i.members.push_back(e);
      primes += is_prime_ideal(t, i);
    }
    CHECK(primes == enumerate_two_valued_states(t).size());
  }
}
