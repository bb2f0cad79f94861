#include "respref/instances.hpp"

#include <algorithm>
#include <array>
#include <set>

#include <nlohmann/json.hpp>

#include "respref/lex.hpp"

namespace respref {

namespace {

using nlohmann::json;

int nat_cmp(const Scalar& a, const Scalar& b) {
    // natural order with NegInf < finite < PosInf
    const int ka = a.is_neg_inf() ? -1 : a.is_pos_inf() ? 1 : 0;
    const int kb = b.is_neg_inf() ? -1 : b.is_pos_inf() ? 1 : 0;
    if (ka != kb) return ka < kb ? -1 : 1;
    if (ka != 0) return 0;
    return a.n < b.n ? -1 : a.n > b.n ? 1 : 0;
}

Ordering from_cmp(int c) {
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}

long long expect_integer(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw DomainError(std::string("expected an integer ") + what + ", got " + j.dump());
    return j.get<long long>();
}

// ---------------------------------------------------------------------------

class TropicalAlgebra final : public Algebra {
public:
    std::string name() const override { return "tropical"; }
    json spec() const override { return json{{"kind", "tropical"}}; }
    bool residuated() const override { return true; }
    bool zero_bottom() const override { return true; }
    bool distributive() const override { return true; }
    bool totally_ordered() const override { return true; }
    bool finite() const override { return false; }

    bool contains(const Value& v) const override {
        if (!v.is_scalar()) return false;
        const auto& s = v.as_scalar();
        return s.is_pos_inf() || (s.is_finite() && s.n >= 0);
    }

    Value identity() const override { return Value::integer(0); }
    Value bottom() const override { return Value::scalar(Scalar::pos_inf()); }
    std::optional<Value> top() const override { return Value::integer(0); }

    Value sample(std::mt19937_64& rng) const override {
        const auto d = rng();
        if (d % 8 == 0) return bottom();
        return Value::integer(static_cast<long long>((d >> 3) % 12));
    }

    Value value_from_json(const json& j) const override {
        if (j.is_string() && j.get<std::string>() == "inf") return bottom();
        const long long n = expect_integer(j, "or \"inf\" for a tropical value");
        if (n < 0) throw DomainError("tropical values are non-negative, got " + j.dump());
        return Value::integer(n);
    }

    json value_to_json(const Value& v) const override {
        const auto& s = v.as_scalar();
        return s.is_pos_inf() ? json("inf") : json(s.n);
    }

protected:
    Ordering do_compare(const Value& a, const Value& b) const override {
        // reversed order: numerically smaller cost is higher
        return from_cmp(-nat_cmp(a.as_scalar(), b.as_scalar()));
    }

    Value do_combine(const Value& a, const Value& b) const override {
        const auto& x = a.as_scalar();
        const auto& y = b.as_scalar();
        if (x.is_pos_inf() || y.is_pos_inf()) return bottom();
        return Value::integer(x.n + y.n);
    }

    Value do_residual(const Value& a, const Value& b) const override {
        const auto& x = a.as_scalar();
        const auto& y = b.as_scalar();
        if (y.is_pos_inf()) return identity();           // a ⊖ ⊥ = ⊤
        if (x.is_pos_inf()) return bottom();             // only ⊥ reaches ⊥ over a finite b
        return Value::integer(std::max(x.n - y.n, 0LL));
    }

    Value do_join2(const Value& a, const Value& b) const override {
        return nat_cmp(a.as_scalar(), b.as_scalar()) <= 0 ? a : b;  // min cost
    }

    bool do_is_collapsing(const Value& v) const override { return v.as_scalar().is_pos_inf(); }
};

// ---------------------------------------------------------------------------

class ExtendedIntAlgebra final : public Algebra {
public:
    std::string name() const override { return "extended-int"; }
    json spec() const override { return json{{"kind", "extended-int"}}; }
    bool residuated() const override { return true; }
    bool zero_bottom() const override { return true; }
    bool distributive() const override { return true; }
    bool totally_ordered() const override { return true; }
    bool finite() const override { return false; }

    bool contains(const Value& v) const override { return v.is_scalar(); }

    Value identity() const override { return Value::integer(0); }
    Value bottom() const override { return Value::scalar(Scalar::neg_inf()); }
    std::optional<Value> top() const override { return Value::scalar(Scalar::pos_inf()); }

    Value sample(std::mt19937_64& rng) const override {
        const auto d = rng();
        if (d % 8 == 0) return Value::scalar(Scalar::pos_inf());
        if (d % 8 == 1) return bottom();
        return Value::integer(static_cast<long long>((d >> 3) % 21) - 10);
    }

    Value value_from_json(const json& j) const override {
        if (j.is_string()) {
            const auto s = j.get<std::string>();
            if (s == "inf") return Value::scalar(Scalar::pos_inf());
            if (s == "-inf") return bottom();
            throw DomainError("expected an integer, \"inf\" or \"-inf\", got " + j.dump());
        }
        return Value::integer(expect_integer(j, "extended-int value"));
    }

    json value_to_json(const Value& v) const override {
        const auto& s = v.as_scalar();
        if (s.is_pos_inf()) return json("inf");
        if (s.is_neg_inf()) return json("-inf");
        return json(s.n);
    }

protected:
    Ordering do_compare(const Value& a, const Value& b) const override {
        return from_cmp(nat_cmp(a.as_scalar(), b.as_scalar()));
    }

    Value do_combine(const Value& a, const Value& b) const override {
        const auto& x = a.as_scalar();
        const auto& y = b.as_scalar();
        if (x.is_neg_inf() || y.is_neg_inf()) return bottom();  // +inf + (-inf) = -inf
        if (x.is_pos_inf() || y.is_pos_inf()) return Value::scalar(Scalar::pos_inf());
        return Value::integer(x.n + y.n);
    }

    Value do_residual(const Value& a, const Value& b) const override {
        // join form of {c | b + c <= a}, worked out per corner
        const auto& x = a.as_scalar();
        const auto& y = b.as_scalar();
        if (y.is_neg_inf() || x.is_pos_inf()) return Value::scalar(Scalar::pos_inf());
        if (y.is_pos_inf() || x.is_neg_inf()) return bottom();
        return Value::integer(x.n - y.n);
    }

    Value do_join2(const Value& a, const Value& b) const override {
        return nat_cmp(a.as_scalar(), b.as_scalar()) >= 0 ? a : b;
    }

    bool do_is_collapsing(const Value& v) const override { return !v.as_scalar().is_finite(); }
};

// ---------------------------------------------------------------------------

class ChainAlgebra final : public Algebra {
public:
    explicit ChainAlgebra(long long n) : n_(n) {}

    std::string name() const override { return "chain(" + std::to_string(n_) + ")"; }
    json spec() const override { return json{{"kind", "chain"}, {"n", n_}}; }
    bool residuated() const override { return true; }
    bool zero_bottom() const override { return true; }
    bool distributive() const override { return true; }
    bool totally_ordered() const override { return true; }
    bool finite() const override { return true; }

    std::vector<Value> elements() const override {
        std::vector<Value> out;
        out.reserve(static_cast<std::size_t>(n_) + 1);
        for (long long i = 0; i <= n_; ++i) out.push_back(Value::integer(i));
        return out;
    }

    bool contains(const Value& v) const override {
        if (!v.is_scalar()) return false;
        const auto& s = v.as_scalar();
        return s.is_finite() && s.n >= 0 && s.n <= n_;
    }

    Value identity() const override { return Value::integer(0); }
    Value bottom() const override { return Value::integer(n_); }
    std::optional<Value> top() const override { return Value::integer(0); }

    Value sample(std::mt19937_64& rng) const override {
        return Value::integer(static_cast<long long>(rng() % static_cast<std::uint64_t>(n_ + 1)));
    }

    Value value_from_json(const json& j) const override {
        const long long n = expect_integer(j, "chain value");
        if (n < 0 || n > n_)
            throw DomainError("chain value out of range [0.." + std::to_string(n_) +
                              "]: " + j.dump());
        return Value::integer(n);
    }

    json value_to_json(const Value& v) const override { return json(v.as_scalar().n); }

protected:
    Ordering do_compare(const Value& a, const Value& b) const override {
        return from_cmp(-nat_cmp(a.as_scalar(), b.as_scalar()));
    }

    Value do_combine(const Value& a, const Value& b) const override {
        return Value::integer(std::min(a.as_scalar().n + b.as_scalar().n, n_));
    }

    Value do_residual(const Value& a, const Value& b) const override {
        const long long x = a.as_scalar().n;
        const long long y = b.as_scalar().n;
        if (x == n_) return Value::integer(n_ - y);  // the saturated point divides further down
        return Value::integer(std::max(x - y, 0LL));
    }

    Value do_join2(const Value& a, const Value& b) const override {
        return a.as_scalar().n <= b.as_scalar().n ? a : b;
    }

    bool do_is_collapsing(const Value& v) const override { return v.as_scalar().n >= 1; }

private:
    long long n_;
};

// ---------------------------------------------------------------------------

class PowerSetAlgebra final : public Algebra {
public:
    explicit PowerSetAlgebra(std::vector<std::string> universe)
        : universe_(std::move(universe)) {}

    std::string name() const override {
        std::string out = "powerset{";
        for (std::size_t i = 0; i < universe_.size(); ++i)
            out += (i ? "," : "") + universe_[i];
        return out + "}";
    }
    json spec() const override { return json{{"kind", "powerset"}, {"universe", universe_}}; }

    // The union monoid's bottom is its identity, so x ↦ x∪b does not
    // preserve the empty join and no residual satisfies the adjunction;
    // the join-form closed residual is still provided.
    bool residuated() const override { return false; }
    bool has_residual() const override { return true; }
    bool zero_bottom() const override { return false; }
    bool distributive() const override { return true; }
    bool totally_ordered() const override { return universe_.size() <= 1; }
    bool finite() const override { return true; }

    std::vector<Value> elements() const override {
        if (universe_.size() > 20)
            throw UnsupportedError("powerset universe too large to enumerate");
        std::vector<Value> out;
        out.reserve(1u << universe_.size());
        for (std::uint64_t mask = 0; mask < (1ull << universe_.size()); ++mask) {
            Value::Names ns;
            for (std::size_t i = 0; i < universe_.size(); ++i)
                if (mask & (1ull << i)) ns.push_back(universe_[i]);
            out.push_back(Value::names(std::move(ns)));
        }
        std::sort(out.begin(), out.end(), repr_less);
        return out;
    }

    bool contains(const Value& v) const override {
        if (!v.is_names()) return false;
        return std::includes(universe_.begin(), universe_.end(), v.as_names().begin(),
                             v.as_names().end());
    }

    Value identity() const override { return Value::names({}); }
    Value bottom() const override { return Value::names({}); }
    std::optional<Value> top() const override { return Value::names(universe_); }

    Value sample(std::mt19937_64& rng) const override {
        const auto d = rng();
        Value::Names ns;
        for (std::size_t i = 0; i < universe_.size(); ++i)
            if (d & (1ull << (i % 64))) ns.push_back(universe_[i]);
        return Value::names(std::move(ns));
    }

    Value value_from_json(const json& j) const override {
        if (!j.is_array()) throw DomainError("expected an array of names, got " + j.dump());
        Value::Names ns;
        for (const auto& e : j) {
            if (!e.is_string()) throw DomainError("set members must be names, got " + e.dump());
            ns.push_back(e.get<std::string>());
        }
        Value v = Value::names(std::move(ns));
        if (!contains(v)) throw DomainError("set " + v.str() + " is not within " + name());
        return v;
    }

    json value_to_json(const Value& v) const override { return json(v.as_names()); }

protected:
    Ordering do_compare(const Value& a, const Value& b) const override {
        const auto& x = a.as_names();
        const auto& y = b.as_names();
        const bool ab = std::includes(y.begin(), y.end(), x.begin(), x.end());
        const bool ba = std::includes(x.begin(), x.end(), y.begin(), y.end());
        if (ab) return Ordering::Less;
        if (ba) return Ordering::Greater;
        return Ordering::Incomparable;
    }

    Value do_combine(const Value& a, const Value& b) const override {
        Value::Names out;
        const auto& x = a.as_names();
        const auto& y = b.as_names();
        std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
        return Value::names(std::move(out));
    }

    Value do_residual(const Value& a, const Value& b) const override {
        const auto& x = a.as_names();
        const auto& y = b.as_names();
        return std::includes(x.begin(), x.end(), y.begin(), y.end()) ? a : identity();
    }

    Value do_join2(const Value& a, const Value& b) const override { return do_combine(a, b); }

    bool do_is_collapsing(const Value& v) const override { return !v.as_names().empty(); }

private:
    std::vector<std::string> universe_;  // sorted, unique
};

// ---------------------------------------------------------------------------

class FlatCappedAlgebra final : public Algebra {
public:
    explicit FlatCappedAlgebra(long long n) : n_(n) {}

    std::string name() const override { return "flat-capped(" + std::to_string(n_) + ")"; }
    json spec() const override { return json{{"kind", "flat-capped"}, {"n", n_}}; }
    bool residuated() const override { return false; }
    bool zero_bottom() const override { return true; }
    bool distributive() const override { return false; }
    bool totally_ordered() const override { return false; }
    bool finite() const override { return true; }

    std::vector<Value> elements() const override {
        std::vector<Value> out;
        out.push_back(bottom());
        for (long long i = 0; i <= n_; ++i) out.push_back(Value::integer(i));
        out.push_back(Value::scalar(Scalar::pos_inf()));
        return out;
    }

    bool contains(const Value& v) const override {
        if (!v.is_scalar()) return false;
        const auto& s = v.as_scalar();
        return !s.is_finite() || (s.n >= 0 && s.n <= n_);
    }

    Value identity() const override { return Value::integer(0); }
    Value bottom() const override { return Value::scalar(Scalar::neg_inf()); }
    std::optional<Value> top() const override { return Value::scalar(Scalar::pos_inf()); }

    Value sample(std::mt19937_64& rng) const override {
        const auto d = rng();
        if (d % 8 == 0) return bottom();
        if (d % 8 == 1) return Value::scalar(Scalar::pos_inf());
        return Value::integer(static_cast<long long>((d >> 3) % static_cast<std::uint64_t>(n_ + 1)));
    }

    Value value_from_json(const json& j) const override {
        if (j.is_string()) {
            const auto s = j.get<std::string>();
            if (s == "bot") return bottom();
            if (s == "top") return Value::scalar(Scalar::pos_inf());
            throw DomainError("expected an integer, \"bot\" or \"top\", got " + j.dump());
        }
        const long long n = expect_integer(j, "flat-capped value");
        if (n < 0 || n > n_) throw DomainError("value out of range [0.." + std::to_string(n_) +
                                               "]: " + j.dump());
        return Value::integer(n);
    }

    json value_to_json(const Value& v) const override {
        const auto& s = v.as_scalar();
        if (s.is_neg_inf()) return json("bot");
        if (s.is_pos_inf()) return json("top");
        return json(s.n);
    }

protected:
    Ordering do_compare(const Value& a, const Value& b) const override {
        const auto& x = a.as_scalar();
        const auto& y = b.as_scalar();
        if (x.is_neg_inf() || y.is_pos_inf()) return Ordering::Less;
        if (y.is_neg_inf() || x.is_pos_inf()) return Ordering::Greater;
        return Ordering::Incomparable;  // the naturals carry the flat order
    }

    Value do_combine(const Value& a, const Value& b) const override {
        const auto& x = a.as_scalar();
        const auto& y = b.as_scalar();
        if (x.is_neg_inf() || y.is_neg_inf()) return bottom();
        if (x.is_pos_inf() || y.is_pos_inf()) return Value::scalar(Scalar::pos_inf());
        return Value::integer(std::min(x.n + y.n, n_));
    }

    Value do_join2(const Value& a, const Value& b) const override {
        const auto& x = a.as_scalar();
        if (x.is_neg_inf()) return b;
        if (b.as_scalar().is_neg_inf()) return a;
        if (a == b) return a;
        return Value::scalar(Scalar::pos_inf());
    }

    bool do_is_collapsing(const Value& v) const override {
        const auto& s = v.as_scalar();
        return !(s.is_finite() && s.n == 0);  // everything but the identity
    }

    bool do_is_weakly_collapsing(const Value& v) const override {
        return !v.as_scalar().is_finite();  // only the lifted endpoints
    }

private:
    long long n_;
};

// ---------------------------------------------------------------------------

bool is_trivial(const Algebra& a) { return a.finite() && a.elements().size() == 1; }

class ProductAlgebra final : public Algebra {
public:
    ProductAlgebra(AlgebraPtr left, AlgebraPtr right)
        : left_(std::move(left)), right_(std::move(right)) {}

    std::string name() const override {
        return "product(" + left_->name() + ", " + right_->name() + ")";
    }
    json spec() const override {
        return json{{"kind", "product"}, {"left", left_->spec()}, {"right", right_->spec()}};
    }
    bool residuated() const override { return left_->residuated() && right_->residuated(); }
    bool has_residual() const override { return left_->has_residual() && right_->has_residual(); }
    bool zero_bottom() const override { return left_->zero_bottom() && right_->zero_bottom(); }
    bool distributive() const override { return left_->distributive() && right_->distributive(); }
    bool totally_ordered() const override {
        return (left_->totally_ordered() && is_trivial(*right_)) ||
               (right_->totally_ordered() && is_trivial(*left_));
    }
    bool finite() const override { return left_->finite() && right_->finite(); }

    std::vector<Value> elements() const override {
        std::vector<Value> out;
        for (const Value& l : left_->elements())
            for (const Value& r : right_->elements()) out.push_back(Value::pair(l, r));
        return out;
    }

    bool contains(const Value& v) const override {
        if (!v.is_tuple() || v.as_tuple().size() != 2) return false;
        return left_->contains(v.as_tuple()[0]) && right_->contains(v.as_tuple()[1]);
    }

    Value identity() const override {
        return Value::pair(left_->identity(), right_->identity());
    }
    Value bottom() const override { return Value::pair(left_->bottom(), right_->bottom()); }
    std::optional<Value> top() const override {
        const auto l = left_->top();
        const auto r = right_->top();
        if (!l || !r) return std::nullopt;
        return Value::pair(*l, *r);
    }

    Value sample(std::mt19937_64& rng) const override {
        Value l = left_->sample(rng);
        return Value::pair(std::move(l), right_->sample(rng));
    }

    Value value_from_json(const json& j) const override {
        if (!j.is_array() || j.size() != 2)
            throw DomainError("expected a two-element array, got " + j.dump());
        return Value::pair(left_->value_from_json(j[0]), right_->value_from_json(j[1]));
    }

    json value_to_json(const Value& v) const override {
        return json::array({left_->value_to_json(v.as_tuple()[0]),
                            right_->value_to_json(v.as_tuple()[1])});
    }

protected:
    Ordering do_compare(const Value& a, const Value& b) const override {
        const Ordering l = left_->compare(a.as_tuple()[0], b.as_tuple()[0]);
        const Ordering r = right_->compare(a.as_tuple()[1], b.as_tuple()[1]);
        if (is_leq(l) && is_leq(r)) return Ordering::Less;  // not both EQ here
        if (is_geq(l) && is_geq(r)) return Ordering::Greater;
        return Ordering::Incomparable;
    }

    Value do_combine(const Value& a, const Value& b) const override {
        return Value::pair(left_->combine(a.as_tuple()[0], b.as_tuple()[0]),
                           right_->combine(a.as_tuple()[1], b.as_tuple()[1]));
    }

    Value do_residual(const Value& a, const Value& b) const override {
        return Value::pair(left_->residual(a.as_tuple()[0], b.as_tuple()[0]),
                           right_->residual(a.as_tuple()[1], b.as_tuple()[1]));
    }

    Value do_join2(const Value& a, const Value& b) const override {
        return Value::pair(left_->join(a.as_tuple()[0], b.as_tuple()[0]),
                           right_->join(a.as_tuple()[1], b.as_tuple()[1]));
    }

    bool do_is_collapsing(const Value& v) const override {
        // C(A1×A2) = C(A1)×A2 ∪ A1×C(A2)
        return left_->is_collapsing(v.as_tuple()[0]) || right_->is_collapsing(v.as_tuple()[1]);
    }

private:
    AlgebraPtr left_;
    AlgebraPtr right_;
};

// ---------------------------------------------------------------------------

void require_lex_base(const Algebra& base, const char* kind) {
    if (!base.residuated() || !base.zero_bottom())
        throw ValidationError(std::string(kind) + " requires a residuated base whose bottom " +
                              "absorbs under combination; " + base.name() + " does not qualify");
}

class LexAlgebra final : public Algebra {
public:
    LexAlgebra(AlgebraPtr base, std::size_t k) : base_(std::move(base)), k_(k) {
        require_lex_base(*base_, "lex");
    }

    std::string name() const override {
        return "lex(" + base_->name() + ", " + std::to_string(k_) + ")";
    }
    json spec() const override {
        return json{{"kind", "lex"}, {"base", base_->spec()}, {"k", k_}};
    }
    bool residuated() const override { return true; }
    bool zero_bottom() const override { return true; }
    bool distributive() const override { return true; }
    bool totally_ordered() const override { return base_->totally_ordered(); }
    bool finite() const override { return base_->finite(); }

    std::vector<Value> elements() const override { return lex_enumerate(*base_, k_); }

    bool contains(const Value& v) const override {
        return v.is_tuple() && v.as_tuple().size() == k_ && lex_is_member(*base_, v);
    }

    Value identity() const override { return lex_identity(*base_, k_); }
    Value bottom() const override { return lex_bottom(*base_, k_); }
    std::optional<Value> top() const override {
        if (!base_->top()) return std::nullopt;
        return lex_top(*base_, k_);
    }

    Value sample(std::mt19937_64& rng) const override {
        const std::size_t split = rng() % k_;  // the union-form index
        Value::Tuple out;
        out.reserve(k_);
        for (std::size_t i = 0; i < split; ++i) out.push_back(sample_cancellative(rng));
        out.push_back(base_->sample(rng));
        while (out.size() < k_) out.push_back(base_->bottom());
        return lex_make(*base_, std::move(out));
    }

    Value value_from_json(const json& j) const override {
        if (!j.is_array() || j.size() != k_)
            throw DomainError("expected an array of " + std::to_string(k_) +
                              " base values, got " + j.dump());
        Value::Tuple out;
        out.reserve(k_);
        for (const auto& e : j) out.push_back(base_->value_from_json(e));
        return lex_make(*base_, std::move(out));
    }

    json value_to_json(const Value& v) const override {
        json out = json::array();
        for (const Value& c : v.as_tuple()) out.push_back(base_->value_to_json(c));
        return out;
    }

protected:
    Ordering do_compare(const Value& a, const Value& b) const override {
        return lex_compare(*base_, a, b);
    }
    Value do_combine(const Value& a, const Value& b) const override {
        return lex_combine(*base_, a, b);
    }
    Value do_residual(const Value& a, const Value& b) const override {
        return lex_residual(*base_, a, b);
    }
    Value do_join(std::span<const Value> xs) const override {
        return lex_join(*base_, xs, k_);
    }
    Value do_join2(const Value& a, const Value& b) const override {
        const std::array<Value, 2> xs{a, b};
        return lex_join(*base_, std::span<const Value>(xs.data(), xs.size()), k_);
    }
    bool do_is_collapsing(const Value& v) const override {
        // cancellative tuples are exactly the all-cancellative ones
        for (const Value& c : v.as_tuple())
            if (base_->is_collapsing(c)) return true;
        return false;
    }

private:
    Value sample_cancellative(std::mt19937_64& rng) const {
        for (int tries = 0; tries < 64; ++tries) {
            Value v = base_->sample(rng);
            if (!base_->is_collapsing(v)) return v;
        }
        return base_->identity();
    }

    AlgebraPtr base_;
    std::size_t k_;
};

// ---------------------------------------------------------------------------

class LexOmegaAlgebra final : public Algebra {
public:
    explicit LexOmegaAlgebra(AlgebraPtr base) : base_(std::move(base)) {
        require_lex_base(*base_, "lex-omega");
        // The top tail is usable only when it is a genuine cancellative
        // constant and combining it with itself stays representable.
        if (const auto top = base_->top(); top && !base_->is_collapsing(*top))
            top_tail_ok_ = omega_tail_of(*base_, base_->combine(*top, *top)).has_value();
    }

    std::string name() const override { return "lex-omega(" + base_->name() + ")"; }
    json spec() const override { return json{{"kind", "lex-omega"}, {"base", base_->spec()}}; }
    bool residuated() const override { return true; }
    bool zero_bottom() const override { return true; }
    bool distributive() const override { return true; }
    bool totally_ordered() const override { return base_->totally_ordered(); }
    bool finite() const override { return false; }

    bool contains(const Value& v) const override {
        if (!omega_is_member(*base_, v)) return false;
        if (v.as_omega().tail == OmegaTail::Top && !top_tail_ok_) return false;
        return true;
    }

    Value identity() const override { return omega_identity(*base_); }
    Value bottom() const override { return omega_bottom(*base_); }
    std::optional<Value> top() const override {
        if (!base_->top()) return std::nullopt;
        return omega_top(*base_);
    }

    Value sample(std::mt19937_64& rng) const override {
        const auto shape = rng() % 4;
        if (shape == 0) return identity();
        if (shape == 1) return bottom();
        Value::Tuple prefix;
        const std::size_t len = 1 + rng() % 2;
        for (std::size_t i = 0; i + 1 < len; ++i) prefix.push_back(sample_cancellative(rng));
        if (shape == 2) {
            prefix.push_back(sample_cancellative(rng));
            return omega_make(*base_, std::move(prefix), OmegaTail::One);
        }
        prefix.push_back(base_->sample(rng));
        return omega_make(*base_, std::move(prefix), OmegaTail::Bottom);
    }

    Value value_from_json(const json& j) const override {
        if (!j.is_object() || !j.contains("prefix") || !j.contains("tail"))
            throw DomainError("expected {\"prefix\": [...], \"tail\": ...}, got " + j.dump());
        if (!j["prefix"].is_array())
            throw DomainError("omega prefix must be an array, got " + j["prefix"].dump());
        Value::Tuple prefix;
        for (const auto& e : j["prefix"]) prefix.push_back(base_->value_from_json(e));
        const std::string tail = j["tail"].is_string() ? j["tail"].get<std::string>() : "";
        OmegaTail t;
        if (tail == "bot")
            t = OmegaTail::Bottom;
        else if (tail == "one")
            t = OmegaTail::One;
        else if (tail == "top")
            t = OmegaTail::Top;
        else
            throw DomainError("omega tail must be \"bot\", \"one\" or \"top\", got " +
                              j["tail"].dump());
        Value v = omega_make(*base_, std::move(prefix), t);
        if (!contains(v)) throw DomainError("omega tuple not supported: " + v.str());
        return v;
    }

    json value_to_json(const Value& v) const override {
        const auto& w = v.as_omega();
        json prefix = json::array();
        for (const Value& c : w.prefix) prefix.push_back(base_->value_to_json(c));
        return json{{"prefix", prefix}, {"tail", to_string(w.tail)}};
    }

protected:
    Ordering do_compare(const Value& a, const Value& b) const override {
        return omega_compare(*base_, a, b);
    }
    Value do_combine(const Value& a, const Value& b) const override {
        return omega_combine(*base_, a, b);
    }
    Value do_residual(const Value& a, const Value& b) const override {
        return omega_residual(*base_, a, b);
    }
    Value do_join2(const Value& a, const Value& b) const override {
        return omega_join2(*base_, a, b);
    }
    bool do_is_collapsing(const Value& v) const override {
        const auto& w = v.as_omega();
        for (const Value& c : w.prefix)
            if (base_->is_collapsing(c)) return true;
        return base_->is_collapsing(omega_tail_constant(*base_, w.tail));
    }

private:
    Value sample_cancellative(std::mt19937_64& rng) const {
        for (int tries = 0; tries < 64; ++tries) {
            Value v = base_->sample(rng);
            if (!base_->is_collapsing(v)) return v;
        }
        return base_->identity();
    }

    AlgebraPtr base_;
    bool top_tail_ok_ = false;
};

long long positive_int_field(const json& spec, const char* field, const char* kind) {
    if (!spec.contains(field) || !spec[field].is_number_integer())
        throw ValidationError(std::string(kind) + " spec needs an integer \"" + field + "\"");
    const long long n = spec[field].get<long long>();
    if (n < 1) throw ValidationError(std::string(kind) + " \"" + field + "\" must be positive");
    return n;
}

}  // namespace

AlgebraPtr make_algebra(const json& spec) {
    if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
        throw ValidationError("algebra spec must be an object with a \"kind\" field");
    const std::string kind = spec["kind"].get<std::string>();
    if (kind == "tropical") return std::make_shared<TropicalAlgebra>();
    if (kind == "extended-int") return std::make_shared<ExtendedIntAlgebra>();
    if (kind == "chain")
        return std::make_shared<ChainAlgebra>(positive_int_field(spec, "n", "chain"));
    if (kind == "flat-capped")
        return std::make_shared<FlatCappedAlgebra>(positive_int_field(spec, "n", "flat-capped"));
    if (kind == "powerset") {
        if (!spec.contains("universe") || !spec["universe"].is_array())
            throw ValidationError("powerset spec needs a \"universe\" array of names");
        std::vector<std::string> names;
        for (const auto& e : spec["universe"]) {
            if (!e.is_string())
                throw ValidationError("powerset universe members must be strings");
            names.push_back(e.get<std::string>());
        }
        std::sort(names.begin(), names.end());
        if (std::adjacent_find(names.begin(), names.end()) != names.end())
            throw ValidationError("powerset universe names must be unique");
        return std::make_shared<PowerSetAlgebra>(std::move(names));
    }
    if (kind == "product") {
        if (!spec.contains("left") || !spec.contains("right"))
            throw ValidationError("product spec needs \"left\" and \"right\" sub-specs");
        return std::make_shared<ProductAlgebra>(make_algebra(spec["left"]),
                                                make_algebra(spec["right"]));
    }
    if (kind == "lex") {
        if (!spec.contains("base")) throw ValidationError("lex spec needs a \"base\" sub-spec");
        const long long k = positive_int_field(spec, "k", "lex");
        return std::make_shared<LexAlgebra>(make_algebra(spec["base"]),
                                            static_cast<std::size_t>(k));
    }
    if (kind == "lex-omega") {
        if (!spec.contains("base"))
            throw ValidationError("lex-omega spec needs a \"base\" sub-spec");
        return std::make_shared<LexOmegaAlgebra>(make_algebra(spec["base"]));
    }
    throw ValidationError("unknown algebra kind: " + kind);
}

AlgebraPtr make_algebra(const std::string& spec_text) {
    json spec;
    try {
        spec = json::parse(spec_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("algebra spec is not valid JSON: ") + e.what());
    }
    return make_algebra(spec);
}

}  // namespace respref
