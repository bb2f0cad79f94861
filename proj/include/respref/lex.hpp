#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "respref/algebra.hpp"

namespace respref {

// Lex_k(A): length-k tuples over a base algebra with bottom, where every
// component after the first collapsing one is bottom, compared
// lexicographically. These free functions take the *base* algebra; the
// "lex" instance kind in instances.hpp wraps them behind the Algebra
// interface (which additionally requires a residuated, bottom-absorbing
// base so that pointwise combination stays inside the carrier).

/// Validates membership; throws InvalidLexTupleError naming the offending
/// component index (0-based).
Value lex_make(const Algebra& base, Value::Tuple components);
void lex_validate(const Algebra& base, const Value& tuple);
bool lex_is_member(const Algebra& base, const Value& tuple);

Value lex_identity(const Algebra& base, std::size_t k);
Value lex_bottom(const Algebra& base, std::size_t k);

/// First-difference lexicographic verdict.
Ordering lex_compare(const Algebra& base, const Value& a, const Value& b);

/// Pointwise combination. The result is validated; combining over a base
/// whose bottom does not absorb can fall outside Lex_k and throws.
Value lex_combine(const Algebra& base, const Value& a, const Value& b);

/// Inductive least upper bound: the head joins all heads, each later
/// component joins the continuations of the tuples matching the prefix
/// computed so far (an unmatched prefix contributes the empty join, i.e.
/// bottom). Empty input yields bottom^arity.
Value lex_join(const Algebra& base, std::span<const Value> xs, std::size_t arity);

/// First index (1-based) whose componentwise residual collapses; k+1 if none.
std::size_t lex_gamma(const Algebra& base, const Value& a, const Value& b);

/// First index (1-based) where recombining the componentwise residual
/// drops strictly below the target; k+1 if none. Incomparable outcomes do
/// not count. Always k+1 or ≤ gamma.
std::size_t lex_delta(const Algebra& base, const Value& a, const Value& b);

/// Residuation in Lex_k, selected by gamma/delta:
///   - pointwise everywhere when gamma = delta = k+1;
///   - pointwise up to gamma then bottom-padded when gamma ≤ delta, gamma ≤ k;
///   - pointwise up to delta then the top of Lex_{k-delta} otherwise.
Value lex_residual(const Algebra& base, const Value& a, const Value& b);

/// ⋁Lex_k(A): top^k when the base top is cancellative, top·bottom^{k-1}
/// otherwise. Requires the base to have a top.
Value lex_top(const Algebra& base, std::size_t k);

/// All members of Lex_k over a finite base, in canonical order.
std::vector<Value> lex_enumerate(const Algebra& base, std::size_t k);

// Lex_ω(A), restricted to the eventually-constant representable fragment:
// a finite prefix followed by one of the constants bottom, identity, top.

Value omega_tail_constant(const Algebra& base, OmegaTail t);

/// Canonical tag for a constant value, if it is one of the three tail
/// constants. Collisions resolve identity-first, then bottom.
std::optional<OmegaTail> omega_tail_of(const Algebra& base, const Value& v);

/// Canonicalizes (re-tags colliding constants, strips a trailing run of
/// the tail constant) and validates membership in Lex_ω.
Value omega_make(const Algebra& base, Value::Tuple prefix, OmegaTail tail);

Value omega_identity(const Algebra& base);
Value omega_bottom(const Algebra& base);

/// ⋁Lex_ω(A): top^ω when the base top is cancellative, top·bottom^ω otherwise.
Value omega_top(const Algebra& base);

/// The i-th component (1-based) of the underlying stream.
Value omega_position(const Algebra& base, const Value& o, std::size_t i);

Ordering omega_compare(const Algebra& base, const Value& a, const Value& b);
Value omega_combine(const Algebra& base, const Value& a, const Value& b);
Value omega_join2(const Algebra& base, const Value& a, const Value& b);
Value omega_residual(const Algebra& base, const Value& a, const Value& b);

/// First k stream positions as a Lex_k tuple.
Value omega_truncate(const Algebra& base, const Value& o, std::size_t k);

bool omega_is_member(const Algebra& base, const Value& v);

}  // namespace respref
