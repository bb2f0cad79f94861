#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "respref/errors.hpp"

namespace respref {

/// An integer extended with the two infinities. The numeric carriers
/// (tropical, extended integers, chains, flat-capped segments) all embed
/// into this representation; each instance restricts it further.
struct Scalar {
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    Kind kind = Kind::Finite;
    long long n = 0;  // meaningful only when finite

    static Scalar finite(long long v) { return {Kind::Finite, v}; }
    static Scalar pos_inf() { return {Kind::PosInf, 0}; }
    static Scalar neg_inf() { return {Kind::NegInf, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_pos_inf() const { return kind == Kind::PosInf; }
    bool is_neg_inf() const { return kind == Kind::NegInf; }

    friend bool operator==(const Scalar&, const Scalar&) = default;
};

/// Tail constant of an eventually-constant infinite tuple.
enum class OmegaTail : std::uint8_t { Bottom, One, Top };

constexpr const char* to_string(OmegaTail t) {
    switch (t) {
        case OmegaTail::Bottom: return "bot";
        case OmegaTail::One: return "one";
        default: return "top";
    }
}

/// An element of some algebra's carrier. Closed under pairing (Cartesian
/// products), fixed-arity tuples (lexicographic products) and the
/// eventually-constant infinite tuples. Values are immutable and compared
/// structurally; which shapes are actually members of a carrier is the
/// owning algebra's business.
class Value {
public:
    using Tuple = std::vector<Value>;
    using Names = std::vector<std::string>;  // kept sorted and duplicate-free

    struct Omega {
        Tuple prefix;
        OmegaTail tail = OmegaTail::Bottom;
        friend bool operator==(const Omega&, const Omega&) = default;
    };

    Value() : rep_(Scalar{}) {}

    static Value scalar(Scalar s) { return Value(Rep(s)); }
    static Value integer(long long n) { return scalar(Scalar::finite(n)); }
    static Value names(Names ns);  // sorts and dedupes
    static Value tuple(Tuple t) { return Value(Rep(std::move(t))); }
    static Value pair(Value left, Value right);
    static Value omega(Tuple prefix, OmegaTail tail) {
        return Value(Rep(Omega{std::move(prefix), tail}));
    }

    bool is_scalar() const { return std::holds_alternative<Scalar>(rep_); }
    bool is_names() const { return std::holds_alternative<Names>(rep_); }
    bool is_tuple() const { return std::holds_alternative<Tuple>(rep_); }
    bool is_omega() const { return std::holds_alternative<Omega>(rep_); }

    const Scalar& as_scalar() const { return get<Scalar>("scalar"); }
    const Names& as_names() const { return get<Names>("name set"); }
    const Tuple& as_tuple() const { return get<Tuple>("tuple"); }
    const Omega& as_omega() const { return get<Omega>("omega tuple"); }

    friend bool operator==(const Value&, const Value&) = default;

    /// Total order on representations (not the algebra order); used for
    /// canonical sorting and set-like containers.
    static int repr_compare(const Value& a, const Value& b);

    /// Debug rendering, e.g. "inf", "{x,y}", "(3, 6)", "[3; one]".
    std::string str() const;

private:
    using Rep = std::variant<Scalar, Names, Tuple, Omega>;
    explicit Value(Rep rep) : rep_(std::move(rep)) {}

    template <class T>
    const T& get(const char* what) const {
        if (const T* p = std::get_if<T>(&rep_)) return *p;
        throw DomainError(std::string("value is not a ") + what + ": " + str());
    }

    Rep rep_;
};

inline bool repr_less(const Value& a, const Value& b) { return Value::repr_compare(a, b) < 0; }

/// Numeric-suffix-aware comparison: "v2" < "v10". Used wherever the spec
/// of an ordering says "name order" (variables, constraint ids).
bool natural_less(const std::string& a, const std::string& b);

}  // namespace respref
