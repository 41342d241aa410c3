#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qlogic/oa.hpp"

namespace qlogic {

using Rational = mpq_class;

/// {0,1}-valued additive assignment, stored for every element.
struct TwoValuedState {
  std::vector<std::uint8_t> values;
  friend auto operator<=>(const TwoValuedState&, const TwoValuedState&) = default;
};

struct RationalState {
  std::vector<Rational> values;
};

/// Sorted member list.
struct PrimeIdeal {
  std::vector<Element> members;
  friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
};

/// All two-valued states in lexicographic order of their value vectors.
/// Backtracks over elements in index order, propagating s(a') = 1 - s(a)
/// and s(a ⊕ b) = s(a) + s(b) to a fixpoint after every choice.
std::vector<TwoValuedState> enumerate_two_valued_states(const QuasiOrthoalgebra& t);

bool is_two_valued_state(const QuasiOrthoalgebra& t, const TwoValuedState& s);

/// Exact check of s(1) = 1, 0 ≤ s ≤ 1 and additivity over every defined pair.
bool is_state(const QuasiOrthoalgebra& t, const RationalState& s);

RationalState to_rational(const TwoValuedState& s);

bool is_prime_ideal(const QuasiOrthoalgebra& t, const PrimeIdeal& ideal);

/// {a : s(a) = 0}. Throws ValidationError if `s` is not a two-valued state.
PrimeIdeal state_to_prime_ideal(const QuasiOrthoalgebra& t, const TwoValuedState& s);

/// Indicator of the complement of `ideal`. Throws ValidationError if
/// `ideal` is not a prime ideal.
TwoValuedState prime_ideal_to_state(const QuasiOrthoalgebra& t, const PrimeIdeal& ideal);

struct PrimeReport {
  bool prime = false;
  std::vector<TwoValuedState> states;
  /// First pair of distinct elements no state separates.
  std::optional<std::pair<Element, Element>> inseparable;
};

PrimeReport is_prime(const QuasiOrthoalgebra& t);

struct StateSpace {
  /// Dimension of the affine solution set of {s(1) = 1, s(a)+s(b) = s(a⊕b)};
  /// nullopt when that system is inconsistent.
  std::optional<std::size_t> dimension;
  /// A solution that also satisfies 0 ≤ s ≤ 1, when one was found.
  std::optional<RationalState> sample;
};

/// Exact rational elimination on the additivity system. The sample is the
/// mean of all two-valued states when there are any, otherwise the basic
/// solution with free variables at 0; it is returned only if it lies in
/// [0,1].
StateSpace state_space_solve(const QuasiOrthoalgebra& t);

/// Values of `s` on the atoms of `t`, in element order.
std::vector<std::uint8_t> atom_row(const QuasiOrthoalgebra& t, const TwoValuedState& s);

}  // namespace qlogic
