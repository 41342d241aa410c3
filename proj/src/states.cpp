#include "qlogic/states.hpp"

#include <algorithm>
#include <array>

#include "qlogic/linear.hpp"

namespace qlogic {

namespace {

struct SumConstraint {
  Element a, b, c;  // s(a) + s(b) = s(c)
};

std::vector<SumConstraint> sum_constraints(const QuasiOrthoalgebra& t) {
  std::vector<SumConstraint> out;
  for (Element a = 0; a < t.size(); ++a)
    for (Element b = a; b < t.size(); ++b)
      if (auto c = t.oplus(a, b)) out.push_back({a, b, *c});
  return out;
}

constexpr std::int8_t kUnknown = -1;

// Assigns v to x; false on conflict.
bool assign(std::vector<std::int8_t>& s, Element x, int v, bool& changed) {
  if (v < 0 || v > 1) return false;
  if (s[x] == kUnknown) {
    s[x] = static_cast<std::int8_t>(v);
    changed = true;
    return true;
  }
  return s[x] == v;
}

bool propagate(const std::vector<SumConstraint>& cs, std::vector<std::int8_t>& s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [a, b, c] : cs) {
      if (a == b) {
        // 2 s(a) = s(c) forces both to 0
        if (!assign(s, a, 0, changed) || !assign(s, c, 0, changed)) return false;
        continue;
      }
      const int va = s[a], vb = s[b], vc = s[c];
      if (va != kUnknown && vb != kUnknown) {
        if (!assign(s, c, va + vb, changed)) return false;
      } else if (vc != kUnknown && va != kUnknown) {
        if (!assign(s, b, vc - va, changed)) return false;
      } else if (vc != kUnknown && vb != kUnknown) {
        if (!assign(s, a, vc - vb, changed)) return false;
      } else if (vc == 0) {
        if (!assign(s, a, 0, changed) || !assign(s, b, 0, changed)) return false;
      } else if (va == 1 || vb == 1) {
        if (!assign(s, c, 1, changed)) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<TwoValuedState> enumerate_two_valued_states(const QuasiOrthoalgebra& t) {
  const auto cs = sum_constraints(t);
  std::vector<TwoValuedState> out;
  std::vector<std::int8_t> start(t.size(), kUnknown);
  start[t.one()] = 1;

  auto search = [&](auto&& self, std::vector<std::int8_t> s) -> void {
    if (!propagate(cs, s)) return;
    auto it = std::find(s.begin(), s.end(), kUnknown);
    if (it == s.end()) {
      TwoValuedState st{std::vector<std::uint8_t>(s.begin(), s.end())};
      if (is_two_valued_state(t, st)) out.push_back(std::move(st));
      return;
    }
    for (std::int8_t v : {0, 1}) {
      auto next = s;
      next[static_cast<std::size_t>(it - s.begin())] = v;
      self(self, std::move(next));
    }
  };
  search(search, std::move(start));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_valued_state(const QuasiOrthoalgebra& t, const TwoValuedState& s) {
  if (s.values.size() != t.size()) return false;
  if (std::any_of(s.values.begin(), s.values.end(), [](auto v) { return v > 1; })) return false;
  if (s.values[t.one()] != 1) return false;
  for (Element a = 0; a < t.size(); ++a)
    for (Element b = 0; b < t.size(); ++b)
      if (auto c = t.oplus(a, b); c && s.values[*c] != s.values[a] + s.values[b]) return false;
  return true;
}

bool is_state(const QuasiOrthoalgebra& t, const RationalState& s) {
  if (s.values.size() != t.size()) return false;
  if (s.values[t.one()] != 1) return false;
  for (const auto& v : s.values)
    if (v < 0 || v > 1) return false;
  for (Element a = 0; a < t.size(); ++a)
    for (Element b = 0; b < t.size(); ++b)
      if (auto c = t.oplus(a, b); c && s.values[*c] != s.values[a] + s.values[b]) return false;
  return true;
}

RationalState to_rational(const TwoValuedState& s) {
  RationalState out;
  out.values.reserve(s.values.size());
  for (auto v : s.values) out.values.emplace_back(static_cast<int>(v));
  return out;
}

bool is_prime_ideal(const QuasiOrthoalgebra& t, const PrimeIdeal& ideal) {
  std::vector<bool> in(t.size(), false);
  for (Element x : ideal.members) {
    if (x >= t.size()) return false;
    in[x] = true;
  }
  if (!in[t.zero()] || in[t.one()]) return false;
  for (Element a = 0; a < t.size(); ++a) {
    if (!in[a]) continue;
    for (Element b = 0; b < t.size(); ++b)
      if (!in[b] && leq(t, b, a)) return false;
  }
  for (Element a = 0; a < t.size(); ++a)
    for (Element b = 0; b < t.size(); ++b)
      if (auto c = t.oplus(a, b); c && in[a] && in[b] && !in[*c]) return false;
  for (Element a = 0; a < t.size(); ++a) {
    const Element ac = orthocomplement(t, a);
    if (in[a] == in[ac]) return false;
  }
  return true;
}

PrimeIdeal state_to_prime_ideal(const QuasiOrthoalgebra& t, const TwoValuedState& s) {
  if (!is_two_valued_state(t, s)) throw ValidationError("not a two-valued state");
  PrimeIdeal out;
  for (Element a = 0; a < t.size(); ++a)
    if (s.values[a] == 0) out.members.push_back(a);
  return out;
}

TwoValuedState prime_ideal_to_state(const QuasiOrthoalgebra& t, const PrimeIdeal& ideal) {
  if (!is_prime_ideal(t, ideal)) throw ValidationError("not a prime ideal");
  TwoValuedState out{std::vector<std::uint8_t>(t.size(), 1)};
  for (Element x : ideal.members) out.values[x] = 0;
  return out;
}

PrimeReport is_prime(const QuasiOrthoalgebra& t) {
  PrimeReport report;
  report.states = enumerate_two_valued_states(t);
  for (Element a = 0; a < t.size() && !report.inseparable; ++a)
    for (Element b = a + 1; b < t.size(); ++b) {
      bool separated = std::any_of(report.states.begin(), report.states.end(),
                                   [&](const auto& s) { return s.values[a] != s.values[b]; });
      if (!separated) {
        report.inseparable = std::pair{a, b};
        break;
      }
    }
  report.prime = !report.inseparable;
  return report;
}

StateSpace state_space_solve(const QuasiOrthoalgebra& t) {
  const std::size_t n = t.size();
  RationalMatrix a;
  std::vector<Rational> rhs;
  {
    std::vector<Rational> row(n, 0);
    row[t.one()] = 1;
    a.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  for (const auto& [x, y, z] : sum_constraints(t)) {
    std::vector<Rational> row(n, 0);
    row[x] += 1;
    row[y] += 1;
    row[z] -= 1;
    a.push_back(std::move(row));
    rhs.emplace_back(0);
  }
  const auto sol = solve_exact(std::move(a), std::move(rhs));

  StateSpace out;
  if (!sol.consistent) return out;
  out.dimension = n - sol.rank;

  const auto states = enumerate_two_valued_states(t);
  RationalState sample;
  if (!states.empty()) {
    sample.values.assign(n, 0);
    for (const auto& s : states)
      for (Element e = 0; e < n; ++e) sample.values[e] += s.values[e];
    for (auto& v : sample.values) v /= static_cast<long>(states.size());
  } else {
    sample.values = *sol.particular;
  }
  if (is_state(t, sample)) out.sample = std::move(sample);
  return out;
}

std::vector<std::uint8_t> atom_row(const QuasiOrthoalgebra& t, const TwoValuedState& s) {
  std::vector<std::uint8_t> out;
  for (Element a : atoms(t)) out.push_back(s.values.at(a));
  return out;
}

}  // namespace qlogic
