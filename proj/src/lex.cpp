#include "respref/lex.hpp"

#include <algorithm>
#include <set>

namespace respref {

namespace {

const Value::Tuple& components_of(const Value& v) {
    if (!v.is_tuple()) throw DomainError("not a lex tuple: " + v.str());
    return v.as_tuple();
}

std::size_t common_arity(const Value& a, const Value& b) {
    const auto& ta = components_of(a);
    const auto& tb = components_of(b);
    if (ta.size() != tb.size())
        throw DomainError("lex arity mismatch: " + a.str() + " vs " + b.str());
    return ta.size();
}

}  // namespace

void lex_validate(const Algebra& base, const Value& tuple) {
    const auto& t = components_of(tuple);
    if (t.empty()) throw InvalidLexTupleError("lex tuple must be non-empty", 0);
    const Value bot = base.bottom();
    bool collapsed = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!base.contains(t[i]))
            throw InvalidLexTupleError(
                "component " + t[i].str() + " is not in the base carrier (index " +
                    std::to_string(i) + ")",
                i);
        if (collapsed && !(t[i] == bot))
            throw InvalidLexTupleError(
                "component at index " + std::to_string(i) +
                    " must be bottom after a collapsing component: " + tuple.str(),
                i);
        if (!collapsed && base.is_collapsing(t[i])) collapsed = true;
    }
}

bool lex_is_member(const Algebra& base, const Value& tuple) {
    if (!tuple.is_tuple() || tuple.as_tuple().empty()) return false;
    try {
        lex_validate(base, tuple);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

Value lex_make(const Algebra& base, Value::Tuple components) {
    Value v = Value::tuple(std::move(components));
    lex_validate(base, v);
    return v;
}

Value lex_identity(const Algebra& base, std::size_t k) {
    return Value::tuple(Value::Tuple(k, base.identity()));
}

Value lex_bottom(const Algebra& base, std::size_t k) {
    return Value::tuple(Value::Tuple(k, base.bottom()));
}

Ordering lex_compare(const Algebra& base, const Value& a, const Value& b) {
    const std::size_t k = common_arity(a, b);
    const auto& ta = a.as_tuple();
    const auto& tb = b.as_tuple();
    for (std::size_t i = 0; i < k; ++i) {
        if (ta[i] == tb[i]) continue;
        return base.compare(ta[i], tb[i]);
    }
    return Ordering::Equal;
}

Value lex_combine(const Algebra& base, const Value& a, const Value& b) {
    const std::size_t k = common_arity(a, b);
    lex_validate(base, a);
    lex_validate(base, b);
    const auto& ta = a.as_tuple();
    const auto& tb = b.as_tuple();
    Value::Tuple out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(base.combine(ta[i], tb[i]));
    return lex_make(base, std::move(out));
}

Value lex_join(const Algebra& base, std::span<const Value> xs, std::size_t arity) {
    if (arity == 0) throw DomainError("lex arity must be positive");
    if (xs.empty()) return lex_bottom(base, arity);
    std::vector<const Value*> alive;
    alive.reserve(xs.size());
    for (const Value& x : xs) {
        lex_validate(base, x);
        if (x.as_tuple().size() != arity)
            throw DomainError("lex arity mismatch in join: " + x.str());
        alive.push_back(&x);
    }
    Value::Tuple out;
    out.reserve(arity);
    std::vector<Value> column;
    for (std::size_t i = 0; i < arity; ++i) {
        column.clear();
        for (const Value* x : alive) column.push_back(x->as_tuple()[i]);
        out.push_back(base.join(std::span<const Value>(column)));  // empty -> bottom
        // only tuples matching the computed prefix contribute further on
        std::erase_if(alive, [&](const Value* x) { return !(x->as_tuple()[i] == out[i]); });
    }
    return lex_make(base, std::move(out));
}

std::size_t lex_gamma(const Algebra& base, const Value& a, const Value& b) {
    const std::size_t k = common_arity(a, b);
    const auto& ta = a.as_tuple();
    const auto& tb = b.as_tuple();
    for (std::size_t i = 0; i < k; ++i)
        if (base.is_collapsing(base.residual(ta[i], tb[i]))) return i + 1;
    return k + 1;
}

std::size_t lex_delta(const Algebra& base, const Value& a, const Value& b) {
    const std::size_t k = common_arity(a, b);
    const auto& ta = a.as_tuple();
    const auto& tb = b.as_tuple();
    for (std::size_t i = 0; i < k; ++i) {
        const Value back = base.combine(base.residual(ta[i], tb[i]), tb[i]);
        if (base.lt(back, ta[i])) return i + 1;
    }
    return k + 1;
}

Value lex_top(const Algebra& base, std::size_t k) {
    if (k == 0) throw DomainError("lex arity must be positive");
    const auto top = base.top();
    if (!top) throw UnsupportedError("base " + base.name() + " has no top element");
    Value::Tuple out;
    if (base.is_collapsing(*top)) {
        out.assign(k, base.bottom());
        out[0] = *top;
    } else {
        out.assign(k, *top);
    }
    return lex_make(base, std::move(out));
}

Value lex_residual(const Algebra& base, const Value& a, const Value& b) {
    const std::size_t k = common_arity(a, b);
    lex_validate(base, a);
    lex_validate(base, b);
    const auto& ta = a.as_tuple();
    const auto& tb = b.as_tuple();
    const std::size_t gamma = lex_gamma(base, a, b);
    const std::size_t delta = lex_delta(base, a, b);
    auto pointwise_upto = [&](std::size_t upto) {
        Value::Tuple out;
        out.reserve(k);
        for (std::size_t i = 0; i < upto; ++i) out.push_back(base.residual(ta[i], tb[i]));
        return out;
    };
    if (gamma == k + 1 && delta == k + 1) return lex_make(base, pointwise_upto(k));
    if (gamma != k + 1 && gamma <= delta) {
        Value::Tuple out = pointwise_upto(gamma);
        out.resize(k, base.bottom());
        return lex_make(base, std::move(out));
    }
    // delta < gamma: pointwise up to delta, then the top of the remaining family
    Value::Tuple out = pointwise_upto(delta);
    if (delta < k) {
        const Value rest = lex_top(base, k - delta);
        for (const Value& c : rest.as_tuple()) out.push_back(c);
    }
    return lex_make(base, std::move(out));
}

std::vector<Value> lex_enumerate(const Algebra& base, std::size_t k) {
    if (k == 0) throw DomainError("lex arity must be positive");
    const std::vector<Value> all = base.elements();
    std::vector<Value> cancellative;
    for (const Value& v : all)
        if (!base.is_collapsing(v)) cancellative.push_back(v);
    const Value bot = base.bottom();

    // union over i of I(A)^i · A · {bottom}^{k-i-1}
    std::set<Value, decltype(&repr_less)> seen(&repr_less);
    Value::Tuple work(k, bot);
    auto emit = [&](std::size_t i, auto&& self) -> void {
        if (i + 1 > k) return;
        for (const Value& middle : all) {
            work[i] = middle;
            for (std::size_t j = i + 1; j < k; ++j) work[j] = bot;
            // fill the cancellative prefix positions recursively
            auto fill = [&](std::size_t pos, auto&& fill_self) -> void {
                if (pos == i) {
                    seen.insert(Value::tuple(work));
                    return;
                }
                for (const Value& c : cancellative) {
                    work[pos] = c;
                    fill_self(pos + 1, fill_self);
                }
            };
            fill(0, fill);
        }
        self(i + 1, self);
    };
    emit(0, emit);
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Lex_ω

namespace {

const Value::Omega& omega_of(const Value& v) {
    if (!v.is_omega()) throw DomainError("not an omega tuple: " + v.str());
    return v.as_omega();
}

}  // namespace

Value omega_tail_constant(const Algebra& base, OmegaTail t) {
    switch (t) {
        case OmegaTail::Bottom: return base.bottom();
        case OmegaTail::One: return base.identity();
        default: {
            const auto top = base.top();
            if (!top) throw UnsupportedError("base " + base.name() + " has no top element");
            return *top;
        }
    }
}

std::optional<OmegaTail> omega_tail_of(const Algebra& base, const Value& v) {
    if (v == base.identity()) return OmegaTail::One;
    if (v == base.bottom()) return OmegaTail::Bottom;
    if (const auto top = base.top(); top && v == *top) return OmegaTail::Top;
    return std::nullopt;
}

Value omega_make(const Algebra& base, Value::Tuple prefix, OmegaTail tail) {
    const Value constant = omega_tail_constant(base, tail);
    // one canonical tag per stream even when constants coincide
    tail = *omega_tail_of(base, constant);
    while (!prefix.empty() && prefix.back() == constant) prefix.pop_back();

    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (!base.contains(prefix[i]))
            throw InvalidLexTupleError(
                "component " + prefix[i].str() + " is not in the base carrier (index " +
                    std::to_string(i) + ")",
                i);
    switch (tail) {
        case OmegaTail::One:
            for (std::size_t i = 0; i < prefix.size(); ++i)
                if (base.is_collapsing(prefix[i]))
                    throw InvalidLexTupleError(
                        "a stream with identity tail must be cancellative throughout (index " +
                            std::to_string(i) + ")",
                        i);
            break;
        case OmegaTail::Bottom:
            for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
                if (base.is_collapsing(prefix[i]))
                    throw InvalidLexTupleError(
                        "only the last prefix component before a bottom tail may collapse "
                        "(index " +
                            std::to_string(i) + ")",
                        i);
            break;
        case OmegaTail::Top:
            if (base.is_collapsing(constant))
                throw InvalidLexTupleError("top tail requires a cancellative top element", 0);
            for (std::size_t i = 0; i < prefix.size(); ++i)
                if (base.is_collapsing(prefix[i]))
                    throw InvalidLexTupleError(
                        "a stream with top tail must be cancellative throughout (index " +
                            std::to_string(i) + ")",
                        i);
            break;
    }
    return Value::omega(std::move(prefix), tail);
}

bool omega_is_member(const Algebra& base, const Value& v) {
    if (!v.is_omega()) return false;
    try {
        return omega_make(base, v.as_omega().prefix, v.as_omega().tail) == v;
    } catch (const DomainError&) {
        return false;
    }
}

Value omega_identity(const Algebra& base) { return omega_make(base, {}, OmegaTail::One); }

Value omega_bottom(const Algebra& base) { return omega_make(base, {}, OmegaTail::Bottom); }

Value omega_top(const Algebra& base) {
    const auto top = base.top();
    if (!top) throw UnsupportedError("base " + base.name() + " has no top element");
    if (base.is_collapsing(*top)) return omega_make(base, {*top}, OmegaTail::Bottom);
    return omega_make(base, {}, OmegaTail::Top);
}

Value omega_position(const Algebra& base, const Value& o, std::size_t i) {
    const auto& w = omega_of(o);
    if (i == 0) throw DomainError("omega positions are 1-based");
    if (i <= w.prefix.size()) return w.prefix[i - 1];
    return omega_tail_constant(base, w.tail);
}

Ordering omega_compare(const Algebra& base, const Value& a, const Value& b) {
    const auto& wa = omega_of(a);
    const auto& wb = omega_of(b);
    const std::size_t horizon = std::max(wa.prefix.size(), wb.prefix.size()) + 1;
    for (std::size_t i = 1; i <= horizon; ++i) {
        const Value va = omega_position(base, a, i);
        const Value vb = omega_position(base, b, i);
        if (va == vb) continue;
        return base.compare(va, vb);
    }
    return Ordering::Equal;  // both constant and equal beyond the horizon
}

Value omega_combine(const Algebra& base, const Value& a, const Value& b) {
    const auto& wa = omega_of(a);
    const auto& wb = omega_of(b);
    const Value tail = base.combine(omega_tail_constant(base, wa.tail),
                                    omega_tail_constant(base, wb.tail));
    const auto tag = omega_tail_of(base, tail);
    if (!tag)
        throw UnsupportedError("tail combination " + tail.str() +
                               " is not representable as a tail constant");
    const std::size_t len = std::max(wa.prefix.size(), wb.prefix.size());
    Value::Tuple out;
    out.reserve(len);
    for (std::size_t i = 1; i <= len; ++i)
        out.push_back(base.combine(omega_position(base, a, i), omega_position(base, b, i)));
    return omega_make(base, std::move(out), *tag);
}

Value omega_join2(const Algebra& base, const Value& a, const Value& b) {
    // Join the truncations; the inductive join stabilises one position after
    // the longest prefix, so reading one more position gives the tail.
    const std::size_t horizon =
        std::max(omega_of(a).prefix.size(), omega_of(b).prefix.size()) + 2;
    const Value va = omega_truncate(base, a, horizon + 1);
    const Value vb = omega_truncate(base, b, horizon + 1);
    const std::array<Value, 2> xs{va, vb};
    const Value j = lex_join(base, std::span<const Value>(xs.data(), xs.size()), horizon + 1);
    const auto& t = j.as_tuple();
    const auto tag = omega_tail_of(base, t[horizon]);
    if (!tag)
        throw UnsupportedError("join tail " + t[horizon].str() +
                               " is not representable as a tail constant");
    return omega_make(base, Value::Tuple(t.begin(), t.begin() + horizon), *tag);
}

Value omega_residual(const Algebra& base, const Value& a, const Value& b) {
    const auto& wa = omega_of(a);
    const auto& wb = omega_of(b);
    // Positions beyond max prefix length behave identically, so gamma and
    // delta are decided within horizon+1 positions or not at all.
    const std::size_t horizon = std::max(wa.prefix.size(), wb.prefix.size()) + 1;
    constexpr std::size_t kNever = static_cast<std::size_t>(-1);
    std::size_t gamma = kNever, delta = kNever;
    std::vector<Value> residuals;
    residuals.reserve(horizon);
    for (std::size_t i = 1; i <= horizon; ++i) {
        const Value ai = omega_position(base, a, i);
        const Value bi = omega_position(base, b, i);
        const Value r = base.residual(ai, bi);
        residuals.push_back(r);
        if (gamma == kNever && base.is_collapsing(r)) gamma = i;
        if (delta == kNever && base.lt(base.combine(r, bi), ai)) delta = i;
        if (gamma != kNever && delta != kNever) break;
    }
    if (gamma == kNever && delta == kNever) {
        // pointwise everywhere; the tail is the residual of the constants
        const Value tail = residuals.back();
        const auto tag = omega_tail_of(base, tail);
        if (!tag)
            throw UnsupportedError("tail residual " + tail.str() +
                                   " is not representable as a tail constant");
        return omega_make(base, std::move(residuals), *tag);
    }
    if (gamma != kNever && (delta == kNever || gamma <= delta)) {
        residuals.resize(gamma);
        return omega_make(base, std::move(residuals), OmegaTail::Bottom);
    }
    // delta < gamma: pointwise up to delta, then the top stream
    residuals.resize(delta);
    const auto top = base.top();
    if (!top) throw UnsupportedError("base " + base.name() + " has no top element");
    if (base.is_collapsing(*top)) {
        residuals.push_back(*top);
        return omega_make(base, std::move(residuals), OmegaTail::Bottom);
    }
    return omega_make(base, std::move(residuals), OmegaTail::Top);
}

Value omega_truncate(const Algebra& base, const Value& o, std::size_t k) {
    if (k == 0) throw DomainError("lex arity must be positive");
    Value::Tuple out;
    out.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) out.push_back(omega_position(base, o, i));
    return lex_make(base, std::move(out));
}

}  // namespace respref
