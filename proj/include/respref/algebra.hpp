#pragma once

#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "respref/errors.hpp"
#include "respref/ordering.hpp"
#include "respref/value.hpp"

namespace respref {

/// Runtime descriptor of a partially ordered residuated monoid instance.
///
/// An instance supplies closed forms for the order, the monoidal operator,
/// finite joins, the residual and the collapsing predicate; the law harness
/// (laws.hpp) certifies those closed forms against brute-force oracles on
/// finite carriers. The public entry points validate carrier membership and
/// dispatch to the instance hooks.
///
/// Instances are immutable after construction and every operation is pure,
/// so a single descriptor may be shared freely across threads.
class Algebra {
public:
    virtual ~Algebra() = default;

    /// Short symbolic description, e.g. "lex(chain(3), 2)".
    virtual std::string name() const = 0;

    /// The JSON instance spec this algebra was built from.
    virtual nlohmann::json spec() const = 0;

    /// Whether the instance claims the adjunction b⊗c ≤ a ⟺ c ≤ a⊖b.
    /// An instance may provide a residual operation without claiming the
    /// adjunction (the power-set monoid does: its ⊥ coincides with 1, the
    /// brute-force join form exists but is not adjoint).
    virtual bool residuated() const = 0;

    /// Whether a residual closed form is available at all.
    virtual bool has_residual() const { return residuated(); }

    /// Whether bottom annihilates: a ⊗ ⊥ = ⊥.
    virtual bool zero_bottom() const = 0;

    /// Whether the instance claims finite distributivity over non-empty
    /// joins: a ⊗ ⋁X = ⋁(a ⊗ X).
    virtual bool distributive() const = 0;

    /// Whether every pair of carrier elements is comparable.
    virtual bool totally_ordered() const = 0;

    virtual bool finite() const = 0;

    /// Every carrier element, in a deterministic order.
    /// Throws UnsupportedError unless finite().
    virtual std::vector<Value> elements() const;

    virtual bool contains(const Value& v) const = 0;

    Ordering compare(const Value& a, const Value& b) const;
    bool leq(const Value& a, const Value& b) const { return is_leq(compare(a, b)); }
    bool lt(const Value& a, const Value& b) const { return is_lt(compare(a, b)); }

    Value combine(const Value& a, const Value& b) const;
    Value residual(const Value& a, const Value& b) const;

    /// LUB of a finite set; join of the empty set is bottom().
    Value join(std::span<const Value> xs) const;
    Value join(const Value& a, const Value& b) const;

    virtual Value identity() const = 0;
    virtual Value bottom() const = 0;
    virtual std::optional<Value> top() const = 0;

    /// Membership in C(A), the collapsing (non-cancellative) elements.
    bool is_collapsing(const Value& v) const;

    /// Membership in C'(A) (∃ a < b with a⊗c = b⊗c). Coincides with
    /// is_collapsing on finitely distributive instances.
    bool is_weakly_collapsing(const Value& v) const;

    /// Deterministic sample of a carrier element for law checking on
    /// non-enumerable carriers.
    virtual Value sample(std::mt19937_64& rng) const = 0;

    /// Carrier element literals, in the instance's JSON sub-format.
    virtual Value value_from_json(const nlohmann::json& j) const = 0;
    virtual nlohmann::json value_to_json(const Value& v) const = 0;

protected:
    virtual Ordering do_compare(const Value& a, const Value& b) const = 0;
    virtual Value do_combine(const Value& a, const Value& b) const = 0;
    virtual Value do_residual(const Value& a, const Value& b) const;
    virtual Value do_join2(const Value& a, const Value& b) const;
    virtual Value do_join(std::span<const Value> xs) const;
    virtual bool do_is_collapsing(const Value& v) const = 0;
    virtual bool do_is_weakly_collapsing(const Value& v) const;

    void require_member(const Value& v) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace respref
