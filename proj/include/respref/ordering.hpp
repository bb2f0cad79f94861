#pragma once

namespace respref {

/// Outcome of comparing two carrier elements of a partial order.
enum class Ordering { Less, Equal, Greater, Incomparable };

constexpr bool is_leq(Ordering o) { return o == Ordering::Less || o == Ordering::Equal; }
constexpr bool is_lt(Ordering o) { return o == Ordering::Less; }
constexpr bool is_geq(Ordering o) { return o == Ordering::Greater || o == Ordering::Equal; }

constexpr Ordering flipped(Ordering o) {
    switch (o) {
        case Ordering::Less: return Ordering::Greater;
        case Ordering::Greater: return Ordering::Less;
        default: return o;
    }
}

constexpr const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "LT";
        case Ordering::Equal: return "EQ";
        case Ordering::Greater: return "GT";
        default: return "INCOMPARABLE";
    }
}

}  // namespace respref
