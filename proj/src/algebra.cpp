#include "respref/algebra.hpp"

#include <nlohmann/json.hpp>

namespace respref {

std::vector<Value> Algebra::elements() const {
    throw UnsupportedError("carrier of " + name() + " is not finitely enumerable");
}

void Algebra::require_member(const Value& v) const {
    if (!contains(v))
        throw DomainError("value " + v.str() + " is not in the carrier of " + name());
}

Ordering Algebra::compare(const Value& a, const Value& b) const {
    require_member(a);
    require_member(b);
    if (a == b) return Ordering::Equal;
    return do_compare(a, b);
}

Value Algebra::combine(const Value& a, const Value& b) const {
    require_member(a);
    require_member(b);
    return do_combine(a, b);
}

Value Algebra::residual(const Value& a, const Value& b) const {
    require_member(a);
    require_member(b);
    return do_residual(a, b);
}

Value Algebra::do_residual(const Value&, const Value&) const {
    throw UnsupportedError(name() + " is not residuated");
}

Value Algebra::join(std::span<const Value> xs) const {
    for (const Value& v : xs) require_member(v);
    if (xs.empty()) return bottom();
    return do_join(xs);
}

Value Algebra::join(const Value& a, const Value& b) const {
    require_member(a);
    require_member(b);
    return do_join2(a, b);
}

Value Algebra::do_join(std::span<const Value> xs) const {
    Value acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = do_join2(acc, xs[i]);
    return acc;
}

Value Algebra::do_join2(const Value& a, const Value& b) const {
    // enough for chains; instances with incomparable pairs override
    if (a == b) return a;
    switch (do_compare(a, b)) {
        case Ordering::Less: return b;
        case Ordering::Incomparable:
            throw UnsupportedError(name() + " has no join for " + a.str() + " and " + b.str());
        default: return a;
    }
}

bool Algebra::is_collapsing(const Value& v) const {
    require_member(v);
    return do_is_collapsing(v);
}

bool Algebra::is_weakly_collapsing(const Value& v) const {
    require_member(v);
    return do_is_weakly_collapsing(v);
}

bool Algebra::do_is_weakly_collapsing(const Value& v) const {
    // On finitely distributive instances C'(A) = C(A); anything else
    // must supply its own closed form.
    if (distributive()) return do_is_collapsing(v);
    throw UnsupportedError(name() + " has no weak-collapsing closed form");
}

}  // namespace respref
