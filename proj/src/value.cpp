#include "respref/value.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace respref {

Value Value::names(Names ns) {
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    return Value(Rep(std::move(ns)));
}

Value Value::pair(Value left, Value right) {
    Tuple t;
    t.reserve(2);
    t.push_back(std::move(left));
    t.push_back(std::move(right));
    return tuple(std::move(t));
}

namespace {

int cmp(long long a, long long b) { return a < b ? -1 : a > b ? 1 : 0; }

int scalar_repr_compare(const Scalar& a, const Scalar& b) {
    if (int c = cmp(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
    return a.is_finite() ? cmp(a.n, b.n) : 0;
}

int tuple_repr_compare(const Value::Tuple& a, const Value::Tuple& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (int c = Value::repr_compare(a[i], b[i])) return c;
    return cmp(static_cast<long long>(a.size()), static_cast<long long>(b.size()));
}

}  // namespace

int Value::repr_compare(const Value& a, const Value& b) {
    if (int c = cmp(static_cast<long long>(a.rep_.index()), static_cast<long long>(b.rep_.index())))
        return c;
    if (a.is_scalar()) return scalar_repr_compare(a.as_scalar(), b.as_scalar());
    if (a.is_names()) {
        const auto& x = a.as_names();
        const auto& y = b.as_names();
        if (x < y) return -1;
        return x == y ? 0 : 1;
    }
    if (a.is_tuple()) return tuple_repr_compare(a.as_tuple(), b.as_tuple());
    const auto& x = a.as_omega();
    const auto& y = b.as_omega();
    if (int c = cmp(static_cast<int>(x.tail), static_cast<int>(y.tail))) return c;
    return tuple_repr_compare(x.prefix, y.prefix);
}

std::string Value::str() const {
    std::ostringstream out;
    if (is_scalar()) {
        const auto& s = as_scalar();
        if (s.is_pos_inf())
            out << "inf";
        else if (s.is_neg_inf())
            out << "-inf";
        else
            out << s.n;
    } else if (is_names()) {
        out << '{';
        const auto& ns = as_names();
        for (std::size_t i = 0; i < ns.size(); ++i) out << (i ? "," : "") << ns[i];
        out << '}';
    } else if (is_tuple()) {
        out << '(';
        const auto& t = as_tuple();
        for (std::size_t i = 0; i < t.size(); ++i) out << (i ? ", " : "") << t[i].str();
        out << ')';
    } else {
        const auto& o = as_omega();
        out << '[';
        for (std::size_t i = 0; i < o.prefix.size(); ++i)
            out << (i ? ", " : "") << o.prefix[i].str();
        out << "; " << to_string(o.tail) << ']';
    }
    return out.str();
}

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            // compare whole digit runs numerically (no leading-zero fuss:
            // longer run of significant digits wins)
            std::size_t ia = i, jb = j;
            while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
            while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
            std::size_t sa = i, sb = j;
            while (sa < ia - 1 && a[sa] == '0') ++sa;
            while (sb < jb - 1 && b[sb] == '0') ++sb;
            const std::size_t la = ia - sa, lb = jb - sb;
            if (la != lb) return la < lb;
            for (std::size_t k = 0; k < la; ++k)
                if (a[sa + k] != b[sb + k]) return a[sa + k] < b[sb + k];
            i = ia;
            j = jb;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j);
}

}  // namespace respref
