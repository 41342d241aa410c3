#pragma once

// Shared fixtures and independent oracles for the unit and acceptance tests.
// The oracles deliberately avoid the library's search routines: they work
// from the raw ⊕ table only.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "qlogic/corpus.hpp"
#include "qlogic/io.hpp"
#include "qlogic/states.hpp"

namespace support {

using qlogic::Element;
using qlogic::QuasiOrthoalgebra;

inline QuasiOrthoalgebra table(const std::string& id) {
  return qlogic::to_quasi_oa(qlogic::corpus_entry(id).load());
}

inline QuasiOrthoalgebra greechie(std::vector<std::string> atoms,
                                  std::vector<std::vector<std::string>> blocks) {
  return qlogic::from_greechie({std::move(atoms), std::move(blocks)});
}

inline const std::vector<std::string>& greechie_ids() {
  static const std::vector<std::string> ids{"firefly", "wright", "fano",
                                            "fig12",   "fig15",  "fig16"};
  return ids;
}

/// a ≤ b straight from the table.
inline bool raw_leq(const QuasiOrthoalgebra& t, Element a, Element b) {
  for (Element c = 0; c < t.size(); ++c)
    if (t.oplus(a, c) == b) return true;
  return false;
}

/// Nonzero elements with no nonzero element strictly below them.
inline std::vector<Element> raw_atoms(const QuasiOrthoalgebra& t) {
  std::vector<Element> out;
  for (Element a = 0; a < t.size(); ++a) {
    if (a == t.zero()) continue;
    bool minimal = true;
    for (Element b = 0; b < t.size() && minimal; ++b)
      if (b != a && b != t.zero() && raw_leq(t, b, a)) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

/// Brute force over every {0,1} assignment to the atoms. Values spread to
/// the rest of the table through s(a ⊕ b) = s(a) + s(b) until nothing
/// changes; the assignment is kept if every element got a value in {0,1},
/// no defined pair disagrees and s(1) = 1. Exact whenever each element is
/// an orthogonal sum of atoms, which covers every corpus table, including
/// ones whose order is not transitive.
inline std::set<std::vector<std::uint8_t>> brute_force_states(const QuasiOrthoalgebra& t) {
  const auto at = raw_atoms(t);
  const std::size_t n = t.size();
  std::set<std::vector<std::uint8_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << at.size()); ++mask) {
    std::vector<int> v(n, -1);
    v[t.zero()] = 0;
    for (std::size_t i = 0; i < at.size(); ++i) v[at[i]] = mask >> i & 1;
    bool ok = true, changed = true;
    while (ok && changed) {
      changed = false;
      for (Element a = 0; a < n && ok; ++a)
        for (Element b = 0; b < n && ok; ++b) {
          const auto c = t.oplus(a, b);
          if (!c || v[a] < 0 || v[b] < 0) continue;
          const int sum = v[a] + v[b];
          if (sum > 1 || (v[*c] >= 0 && v[*c] != sum)) ok = false;
          else if (v[*c] < 0) v[*c] = sum, changed = true;
        }
    }
    if (!ok || v[t.one()] != 1 || std::count(v.begin(), v.end(), -1) > 0) continue;
    out.insert(std::vector<std::uint8_t>(v.begin(), v.end()));
  }
  return out;
}

/// n minus the rank of {s(1) = 1, s(a) + s(b) = s(a ⊕ b)}, by elimination
/// over boost::rational.
inline std::size_t boost_state_dimension(const QuasiOrthoalgebra& t) {
  using Q = boost::rational<long long>;
  const std::size_t n = t.size();
  std::vector<std::vector<Q>> rows;
  std::vector<Q> top(n + 1, Q(0));
  top[t.one()] = 1;
  top[n] = 1;
  rows.push_back(top);
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b)
      if (auto c = t.oplus(a, b)) {
        std::vector<Q> r(n + 1, Q(0));
        r[a] += 1;
        r[b] += 1;
        r[*c] -= 1;
        rows.push_back(r);
      }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].numerator() == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].numerator() == 0) continue;
      const Q f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k <= n; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return n - rank;
}

/// Random small tables for the axiom-equivalence property: Boolean
/// algebras, horizontal sums of 2-element blocks, random partition logics
/// on up to three points, each randomly permuted and optionally with one
/// symmetric pair of entries deleted.
class TableSource {
 public:
  explicit TableSource(std::uint32_t seed) : rng_(seed) {}

  QuasiOrthoalgebra next() {
    QuasiOrthoalgebra base = pick_base();
    std::vector<Element> perm(base.size());
    for (Element e = 0; e < perm.size(); ++e) perm[e] = e;
    std::shuffle(perm.begin(), perm.end(), rng_);
    auto t = base.permuted(perm);
    if (coin(rng_) < 0.6) t = drop_pair(t);
    return t;
  }

 private:
  QuasiOrthoalgebra pick_base() {
    switch (std::uniform_int_distribution<int>(0, 4)(rng_)) {
      case 0:
        return qlogic::boolean_algebra(atoms_named(std::uniform_int_distribution<int>(1, 3)(rng_)));
      case 1: return greechie({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
      case 2: return greechie({"a", "b", "c", "d", "e", "f"}, {{"a", "b"}, {"c", "d"}, {"e", "f"}});
      default: return random_partition_logic(2, 3);
    }
  }

 public:
  /// Pasting of 2 or 3 random partitions of a 4- to 6-point set. Unlike
  /// next(), this reaches quasi-orthoalgebras that are not orthoalgebras.
  QuasiOrthoalgebra next_partition_logic() {
    return random_partition_logic(4, 6, 2);
  }

 private:

  static std::vector<std::string> atoms_named(int k) {
    std::vector<std::string> out;
    for (int i = 0; i < k; ++i) out.push_back(std::string(1, static_cast<char>('p' + i)));
    return out;
  }

  QuasiOrthoalgebra random_partition_logic(int min_points, int max_points, int min_count = 1) {
    const int points = std::uniform_int_distribution<int>(min_points, max_points)(rng_);
    std::vector<std::string> ground;
    for (int i = 0; i < points; ++i) ground.push_back(std::to_string(i + 1));
    std::vector<qlogic::Partition> parts;
    const int count = std::uniform_int_distribution<int>(min_count, 3)(rng_);
    for (int k = 0; k < count; ++k) {
      // random restricted growth string
      std::vector<int> label(points, 0);
      int used = 1;
      for (int i = 1; i < points; ++i) {
        label[i] = std::uniform_int_distribution<int>(0, used)(rng_);
        used = std::max(used, label[i] + 1);
      }
      qlogic::Partition p;
      p.cells.resize(used);
      for (int i = 0; i < points; ++i) p.cells[label[i]].push_back(i);
      parts.push_back(std::move(p));
    }
    return qlogic::pasting_to_oa(qlogic::PartitionLogic(ground, parts));
  }

  QuasiOrthoalgebra drop_pair(const QuasiOrthoalgebra& t) {
    std::vector<std::pair<Element, Element>> candidates;
    for (Element a = 0; a < t.size(); ++a)
      for (Element b = a; b < t.size(); ++b)
        if (a != t.zero() && b != t.zero() && t.oplus(a, b) && t.oplus(a, b) != t.one())
          candidates.emplace_back(a, b);
    if (candidates.empty()) return t;
    const auto [a, b] =
        candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng_)];
    std::vector<QuasiOrthoalgebra::Entry> cells;
    for (Element x = 0; x < t.size(); ++x)
      for (Element y = 0; y < t.size(); ++y)
        cells.push_back(((x == a && y == b) || (x == b && y == a)) ? std::nullopt : t.oplus(x, y));
    return {t.labels(), t.zero(), t.one(), std::move(cells)};
  }

  std::mt19937 rng_;
  std::uniform_real_distribution<double> coin{0.0, 1.0};
};

}  // namespace support
