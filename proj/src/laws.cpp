#include "respref/laws.hpp"

#include <algorithm>
#include <array>

#include <nlohmann/json.hpp>

#include "respref/instances.hpp"

namespace respref {

using nlohmann::json;

Value brute_force_residual(const Algebra& alg, std::span<const Value> carrier, const Value& a,
                           const Value& b) {
    std::vector<Value> sub;
    for (const Value& c : carrier)
        if (alg.leq(alg.combine(b, c), a)) sub.push_back(c);
    return alg.join(std::span<const Value>(sub));
}

Value brute_force_residual(const Algebra& alg, const Value& a, const Value& b) {
    const std::vector<Value> carrier = alg.elements();
    return brute_force_residual(alg, std::span<const Value>(carrier), a, b);
}

bool CollapsingOracle::contains(const Value& v) const {
    return std::binary_search(collapsing.begin(), collapsing.end(), v, repr_less);
}

CollapsingOracle collapsing_oracle(const Algebra& alg) {
    const std::vector<Value> carrier = alg.elements();
    CollapsingOracle out;
    for (const Value& c : carrier) {
        bool collapsing = false;
        for (std::size_t i = 0; i < carrier.size() && !collapsing; ++i)
            for (std::size_t j = i + 1; j < carrier.size(); ++j)
                if (alg.combine(carrier[i], c) == alg.combine(carrier[j], c)) {
                    collapsing = true;
                    break;
                }
        if (collapsing) out.collapsing.push_back(c);
    }
    std::sort(out.collapsing.begin(), out.collapsing.end(), repr_less);

    if (out.contains(alg.identity()))
        out.violations.push_back("identity is collapsing");
    for (const Value& a : carrier)
        for (const Value& b : carrier) {
            const bool pc = out.contains(alg.combine(a, b));
            const bool ac = out.contains(a);
            const bool bc = out.contains(b);
            if ((ac || bc) && !pc)
                out.violations.push_back("C(A) is not an ideal at " + a.str() + " ⊗ " + b.str());
            if (pc && !ac && !bc)
                out.violations.push_back("C(A) is not prime at " + a.str() + " ⊗ " + b.str());
        }
    return out;
}

std::vector<Value> weakly_collapsing_oracle(const Algebra& alg) {
    const std::vector<Value> carrier = alg.elements();
    std::vector<Value> out;
    for (const Value& c : carrier) {
        bool weak = false;
        for (std::size_t i = 0; i < carrier.size() && !weak; ++i)
            for (std::size_t j = 0; j < carrier.size(); ++j) {
                if (!alg.lt(carrier[i], carrier[j])) continue;
                if (alg.combine(carrier[i], c) == alg.combine(carrier[j], c)) {
                    weak = true;
                    break;
                }
            }
        if (weak) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), repr_less);
    return out;
}

bool LawReport::all_passed() const {
    return std::none_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.failed(); });
}

json LawReport::to_json(const Algebra& alg) const {
    json laws_json = json::array();
    for (const LawCheck& l : laws) {
        json cx = json::array();
        for (const Value& v : l.counterexample) cx.push_back(alg.value_to_json(v));
        laws_json.push_back(json{{"id", l.id},
                                 {"status", l.status == LawCheck::Status::Pass     ? "pass"
                                            : l.status == LawCheck::Status::Fail ? "fail"
                                                                                 : "skipped"},
                                 {"checked", l.checked},
                                 {"note", l.note},
                                 {"counterexample", cx}});
    }
    json info{{"residuated", alg.residuated()},
              {"has_residual", alg.has_residual()},
              {"zero_bottom", alg.zero_bottom()},
              {"distributive", alg.distributive()},
              {"totally_ordered", alg.totally_ordered()},
              {"finite", finite_carrier}};
    if (finite_carrier) {
        json c = json::array(), w = json::array();
        for (const Value& v : collapsing) c.push_back(alg.value_to_json(v));
        for (const Value& v : weakly_collapsing) w.push_back(alg.value_to_json(v));
        info["collapsing"] = c;
        info["weakly_collapsing"] = w;
    }
    return json{{"algebra", algebra},
                {"spec", alg.spec()},
                {"mode", exhaustive ? "exhaustive" : "sampled"},
                {"seed", seed},
                {"pool_size", pool_size},
                {"laws", laws_json},
                {"info", info},
                {"all_passed", all_passed()}};
}

namespace {

// One law's run state: count checks, capture the first violation.
struct Run {
    LawCheck check;

    explicit Run(std::string id) { check.id = std::move(id); }

    bool require(bool ok, std::vector<Value> witness, const std::string& why) {
        ++check.checked;
        if (ok || check.status == LawCheck::Status::Fail) return ok;
        check.status = LawCheck::Status::Fail;
        check.note = why;
        check.counterexample = std::move(witness);
        return false;
    }

    LawCheck skipped(const std::string& why) && {
        check.status = LawCheck::Status::Skipped;
        check.note = why;
        return std::move(check);
    }

    LawCheck done() && { return std::move(check); }
};

std::vector<Value> build_pool(const Algebra& alg, const LawBudget& budget) {
    if (budget.exhaustive) return alg.elements();
    std::mt19937_64 rng(budget.seed);
    std::vector<Value> pool;
    pool.push_back(alg.identity());
    pool.push_back(alg.bottom());
    if (const auto t = alg.top()) pool.push_back(*t);
    while (pool.size() < budget.samples) pool.push_back(alg.sample(rng));
    // dedupe, keeping first occurrences
    std::vector<Value> out;
    for (const Value& v : pool)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

}  // namespace

LawReport check_laws(const Algebra& alg, const LawBudget& budget) {
    LawReport report;
    report.algebra = alg.name();
    report.exhaustive = budget.exhaustive;
    report.seed = budget.exhaustive ? 0 : budget.seed;
    report.finite_carrier = alg.finite();

    const std::vector<Value> pool = build_pool(alg, budget);
    report.pool_size = pool.size();
    const Value one = alg.identity();
    const Value bot = alg.bottom();
    const auto top = alg.top();

    {
        Run r("order-reflexive");
        for (const Value& a : pool)
            if (!r.require(alg.compare(a, a) == Ordering::Equal, {a}, "compare(a,a) is not EQ"))
                break;
        report.laws.push_back(std::move(r).done());
    }
    {
        Run r("order-antisymmetric");
        for (const Value& a : pool) {
            for (const Value& b : pool)
                if (!r.require(alg.compare(a, b) == flipped(alg.compare(b, a)), {a, b},
                               "compare(a,b) does not mirror compare(b,a)"))
                    break;
            if (r.check.failed()) break;
        }
        report.laws.push_back(std::move(r).done());
    }
    {
        Run r("order-transitive");
        for (const Value& a : pool) {
            for (const Value& b : pool) {
                if (!alg.leq(a, b)) continue;
                for (const Value& c : pool) {
                    if (!alg.leq(b, c)) continue;
                    if (!r.require(alg.leq(a, c), {a, b, c}, "a ≤ b ≤ c but a ≰ c")) break;
                }
                if (r.check.failed()) break;
            }
            if (r.check.failed()) break;
        }
        report.laws.push_back(std::move(r).done());
    }
    {
        Run r("monoid-identity");
        for (const Value& a : pool)
            if (!r.require(alg.combine(a, one) == a, {a}, "a ⊗ 1 differs from a")) break;
        report.laws.push_back(std::move(r).done());
    }
    {
        Run r("monoid-closure");
        for (const Value& a : pool) {
            for (const Value& b : pool)
                if (!r.require(alg.contains(alg.combine(a, b)), {a, b},
                               "a ⊗ b falls outside the carrier"))
                    break;
            if (r.check.failed()) break;
        }
        report.laws.push_back(std::move(r).done());
    }
    {
        Run r("monoid-commutative");
        for (const Value& a : pool) {
            for (const Value& b : pool)
                if (!r.require(alg.combine(a, b) == alg.combine(b, a), {a, b},
                               "a ⊗ b differs from b ⊗ a"))
                    break;
            if (r.check.failed()) break;
        }
        report.laws.push_back(std::move(r).done());
    }
    {
        Run r("monoid-associative");
        for (const Value& a : pool) {
            for (const Value& b : pool) {
                for (const Value& c : pool)
                    if (!r.require(alg.combine(alg.combine(a, b), c) ==
                                       alg.combine(a, alg.combine(b, c)),
                                   {a, b, c}, "(a ⊗ b) ⊗ c differs from a ⊗ (b ⊗ c)"))
                        break;
                if (r.check.failed()) break;
            }
            if (r.check.failed()) break;
        }
        report.laws.push_back(std::move(r).done());
    }
    {
        Run r("combine-monotone");
        for (const Value& a : pool) {
            for (const Value& b : pool) {
                if (!alg.leq(a, b)) continue;
                for (const Value& c : pool)
                    if (!r.require(alg.leq(alg.combine(a, c), alg.combine(b, c)), {a, b, c},
                                   "a ≤ b but a ⊗ c ≰ b ⊗ c"))
                        break;
                if (r.check.failed()) break;
            }
            if (r.check.failed()) break;
        }
        report.laws.push_back(std::move(r).done());
    }
    {
        Run r("join-empty-is-bottom");
        r.require(alg.join(std::span<const Value>{}) == bot, {}, "join(∅) is not bottom");
        report.laws.push_back(std::move(r).done());
    }
    {
        Run r("join-least-upper-bound");
        for (const Value& a : pool) {
            for (const Value& b : pool) {
                const Value j = alg.join(a, b);
                bool ok = r.require(alg.leq(a, j) && alg.leq(b, j), {a, b},
                                    "join(a,b) is not an upper bound");
                if (ok && alg.compare(a, b) == Ordering::Less)
                    ok = r.require(j == b, {a, b}, "a < b but join(a,b) ≠ b");
                if (ok)
                    for (const Value& c : pool) {
                        if (!(alg.leq(a, c) && alg.leq(b, c))) continue;
                        if (!r.require(alg.leq(j, c), {a, b, c},
                                       "upper bound c below join(a,b)"))
                            break;
                    }
                if (r.check.failed()) break;
            }
            if (r.check.failed()) break;
        }
        report.laws.push_back(std::move(r).done());
    }
    {
        Run r("distributive-nonempty");
        // a ⊗ ⋁X = ⋁(a ⊗ X) over non-empty X of size ≤ 3
        const std::size_t m = std::min<std::size_t>(pool.size(), 12);
        bool violation_found = false;
        std::vector<Value> witness;
        for (const Value& a : pool) {
            for (std::size_t i = 0; i < m && !violation_found; ++i)
                for (std::size_t j = i; j < m && !violation_found; ++j)
                    for (std::size_t k = j; k < m; ++k) {
                        ++r.check.checked;
                        const std::array<Value, 3> xs{pool[i], pool[j], pool[k]};
                        const std::array<Value, 3> ys{alg.combine(a, xs[0]),
                                                      alg.combine(a, xs[1]),
                                                      alg.combine(a, xs[2])};
                        const Value lhs = alg.combine(a, alg.join(std::span<const Value>(xs)));
                        const Value rhs = alg.join(std::span<const Value>(ys));
                        if (!(lhs == rhs)) {
                            violation_found = true;
                            witness = {a, xs[0], xs[1], xs[2]};
                            break;
                        }
                    }
            if (violation_found) break;
        }
        if (!alg.distributive()) {
            std::string note = "finite distributivity not claimed";
            if (violation_found) {
                note += "; observed violation at a=" + witness[0].str() + ", X={" +
                        witness[1].str() + "," + witness[2].str() + "," + witness[3].str() + "}";
            }
            report.laws.push_back(std::move(r).skipped(note));
        } else {
            if (violation_found) {
                r.check.status = LawCheck::Status::Fail;
                r.check.note = "a ⊗ ⋁X differs from ⋁(a ⊗ X)";
                r.check.counterexample = witness;
            }
            report.laws.push_back(std::move(r).done());
        }
    }
    {
        Run r("bottom-absorbs");
        if (!alg.zero_bottom()) {
            report.laws.push_back(std::move(r).skipped("bottom is the identity here, not a zero"));
        } else {
            for (const Value& a : pool)
                if (!r.require(alg.combine(a, bot) == bot, {a}, "a ⊗ ⊥ is not ⊥")) break;
            report.laws.push_back(std::move(r).done());
        }
    }
    {
        Run r("adjunction");
        if (!alg.has_residual()) {
            report.laws.push_back(std::move(r).skipped("no residual operation"));
        } else {
            bool violation = false;
            std::vector<Value> witness;
            for (const Value& a : pool) {
                for (const Value& b : pool) {
                    const Value res = alg.residual(a, b);
                    for (const Value& c : pool) {
                        ++r.check.checked;
                        if (alg.leq(alg.combine(b, c), a) != alg.leq(c, res)) {
                            violation = true;
                            witness = {a, b, c};
                            break;
                        }
                    }
                    if (violation) break;
                }
                if (violation) break;
            }
            if (!alg.residuated()) {
                std::string note = "adjunction not claimed by this instance";
                if (violation)
                    note += "; observed violation at a=" + witness[0].str() +
                            ", b=" + witness[1].str() + ", c=" + witness[2].str();
                report.laws.push_back(std::move(r).skipped(note));
            } else {
                if (violation) {
                    r.check.status = LawCheck::Status::Fail;
                    r.check.note = "b ⊗ c ≤ a and c ≤ a ⊖ b disagree";
                    r.check.counterexample = witness;
                }
                report.laws.push_back(std::move(r).done());
            }
        }
    }
    {
        Run r("residual-matches-enumeration");
        if (!alg.has_residual())
            report.laws.push_back(std::move(r).skipped("no residual operation"));
        else if (!alg.finite())
            report.laws.push_back(std::move(r).skipped("carrier not finitely enumerable"));
        else {
            const std::vector<Value> carrier = alg.elements();
            for (const Value& a : carrier) {
                for (const Value& b : carrier)
                    if (!r.require(alg.residual(a, b) ==
                                       brute_force_residual(
                                           alg, std::span<const Value>(carrier), a, b),
                                   {a, b}, "closed form differs from enumeration join"))
                        break;
                if (r.check.failed()) break;
            }
            report.laws.push_back(std::move(r).done());
        }
    }
    {
        Run r("residual-bottom-is-top");
        if (!alg.has_residual() || !top)
            report.laws.push_back(std::move(r).skipped("needs a residual and a top"));
        else if (!alg.zero_bottom())
            report.laws.push_back(
                std::move(r).skipped("a ⊖ ⊥ = ⊤ needs an absorbing bottom"));
        else {
            for (const Value& a : pool)
                if (!r.require(alg.residual(a, bot) == *top, {a}, "a ⊖ ⊥ is not ⊤")) break;
            report.laws.push_back(std::move(r).done());
        }
    }
    {
        Run r("residual-from-top-is-top");
        if (!alg.has_residual() || !top)
            report.laws.push_back(std::move(r).skipped("needs a residual and a top"));
        else {
            for (const Value& b : pool)
                if (!r.require(alg.residual(*top, b) == *top, {b}, "⊤ ⊖ b is not ⊤")) break;
            report.laws.push_back(std::move(r).done());
        }
    }
    {
        Run r("identity-cancellative");
        r.require(!alg.is_collapsing(one), {one}, "is_collapsing(identity) is true");
        report.laws.push_back(std::move(r).done());
    }

    // collapsing structure needs the exhaustive pair search
    if (alg.finite()) {
        const CollapsingOracle oracle = collapsing_oracle(alg);
        const std::vector<Value> weak = weakly_collapsing_oracle(alg);
        report.collapsing = oracle.collapsing;
        report.weakly_collapsing = weak;
        const std::vector<Value> carrier = alg.elements();
        {
            Run r("collapsing-prime-ideal");
            r.require(oracle.violations.empty(), {},
                      oracle.violations.empty() ? "" : oracle.violations.front());
            report.laws.push_back(std::move(r).done());
        }
        {
            Run r("cancellative-submonoid");
            bool ok = r.require(!oracle.contains(one), {one}, "identity not in I(A)");
            for (const Value& a : carrier) {
                if (!ok) break;
                if (oracle.contains(a)) continue;
                for (const Value& b : carrier) {
                    if (oracle.contains(b)) continue;
                    if (!(ok = r.require(!oracle.contains(alg.combine(a, b)), {a, b},
                                         "I(A) not closed under ⊗")))
                        break;
                }
            }
            report.laws.push_back(std::move(r).done());
        }
        {
            Run r("collapsing-closed-form");
            for (const Value& v : carrier)
                if (!r.require(alg.is_collapsing(v) == oracle.contains(v), {v},
                               "is_collapsing disagrees with the pair-search oracle"))
                    break;
            report.laws.push_back(std::move(r).done());
        }
        {
            Run r("weakly-collapsing-closed-form");
            for (const Value& v : carrier) {
                const bool in_weak = std::binary_search(weak.begin(), weak.end(), v, repr_less);
                if (!r.require(alg.is_weakly_collapsing(v) == in_weak, {v},
                               "is_weakly_collapsing disagrees with the pair-search oracle"))
                    break;
            }
            report.laws.push_back(std::move(r).done());
        }
        {
            Run r("weakly-collapsing-equals-collapsing");
            const bool equal = weak == oracle.collapsing;
            if (!alg.distributive()) {
                std::string note = "needs finite distributivity";
                if (!equal) note += "; observed C'(A) ⊊ C(A) as expected";
                report.laws.push_back(std::move(r).skipped(note));
            } else {
                r.require(equal, {}, "C'(A) differs from C(A) on a distributive instance");
                report.laws.push_back(std::move(r).done());
            }
        }
        if (alg.spec().value("kind", "") == "product") {
            Run r("product-collapsing-decomposition");
            const AlgebraPtr left = make_algebra(alg.spec()["left"]);
            const AlgebraPtr right = make_algebra(alg.spec()["right"]);
            const CollapsingOracle cl = collapsing_oracle(*left);
            const CollapsingOracle cr = collapsing_oracle(*right);
            for (const Value& v : carrier) {
                const bool expected =
                    cl.contains(v.as_tuple()[0]) || cr.contains(v.as_tuple()[1]);
                if (!r.require(oracle.contains(v) == expected, {v},
                               "C(A1×A2) differs from C(A1)×A2 ∪ A1×C(A2)"))
                    break;
            }
            report.laws.push_back(std::move(r).done());
        }
    } else {
        for (const char* id :
             {"collapsing-prime-ideal", "cancellative-submonoid", "collapsing-closed-form",
              "weakly-collapsing-closed-form", "weakly-collapsing-equals-collapsing"}) {
            Run r(id);
            report.laws.push_back(std::move(r).skipped("carrier not finitely enumerable"));
        }
    }

    return report;
}

}  // namespace respref
