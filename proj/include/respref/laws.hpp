#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "respref/algebra.hpp"

namespace respref {

/// Join of the full sub-solution set {c | b ⊗ c ≤ a}; the oracle the
/// closed-form residuals are certified against. The first overload walks
/// the finite carrier, the second an explicit candidate list (tests use
/// clipped slices of infinite carriers).
Value brute_force_residual(const Algebra& alg, const Value& a, const Value& b);
Value brute_force_residual(const Algebra& alg, std::span<const Value> carrier, const Value& a,
                           const Value& b);

struct CollapsingOracle {
    std::vector<Value> collapsing;        // exact C(A), canonical order
    std::vector<std::string> violations;  // ideal/primality defects (expected empty)

    bool contains(const Value& v) const;
};

/// Exhaustive pair search for C(A) on a finite carrier; also verifies that
/// C(A) is a prime ideal (equivalently that I(A) is a sub-monoid).
CollapsingOracle collapsing_oracle(const Algebra& alg);

/// Exhaustive C'(A): elements c with a < b and a ⊗ c = b ⊗ c.
std::vector<Value> weakly_collapsing_oracle(const Algebra& alg);

struct LawBudget {
    bool exhaustive = false;
    std::size_t samples = 40;
    std::uint64_t seed = 7;

    static LawBudget exhaustive_carrier() { return {true, 0, 0}; }
    static LawBudget sampled(std::size_t n, std::uint64_t seed = 7) { return {false, n, seed}; }
};

struct LawCheck {
    enum class Status { Pass, Fail, Skipped };

    std::string id;
    Status status = Status::Pass;
    std::string note;                  // skip reason or failure description
    std::vector<Value> counterexample; // replayable through the public ops
    std::size_t checked = 0;

    bool failed() const { return status == Status::Fail; }
};

struct LawReport {
    std::string algebra;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::size_t pool_size = 0;
    std::vector<LawCheck> laws;
    std::vector<Value> collapsing;         // finite carriers only
    std::vector<Value> weakly_collapsing;  // finite carriers only
    bool finite_carrier = false;

    bool all_passed() const;
    nlohmann::json to_json(const Algebra& alg) const;
};

/// Runs every applicable law: order axioms, monoid axioms, monotonicity,
/// non-empty finite distributivity, bottom annihilation, the adjunction,
/// residual-vs-enumeration, top/bottom residual identities, and the
/// collapsing-structure checks. Laws an instance does not claim are
/// reported as skipped (with the observed behaviour noted), not failed.
LawReport check_laws(const Algebra& alg, const LawBudget& budget = {});

}  // namespace respref
