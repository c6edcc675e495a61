#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "numeric.hpp"

namespace semicm {

// A monomial is just its exponent vector; the ambient variable count is the
// vector length. All exponents are arbitrary-precision and >= 0.
struct Monomial {
    IntVec e;

    Monomial() = default;
    explicit Monomial(IntVec exps) : e(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(IntVec(nvars, Int(0))); }
    static Monomial var(std::size_t nvars, std::size_t i, Int power = Int(1)) {
        Monomial m = one(nvars);
        m.e[i] = std::move(power);
        return m;
    }

    std::size_t nvars() const { return e.size(); }
    Int degree() const { return vec_sum(e); }
    bool is_one() const { return vec_is_zero(e); }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial(vec_add(a.e, b.e));
}

inline bool divides(const Monomial& a, const Monomial& b) {  // a | b
    return vec_le(a.e, b.e);
}

// b / a; caller guarantees divisibility
inline Monomial exact_div(const Monomial& b, const Monomial& a) {
    SEMICM_CHECK(divides(a, b), "exact_div: not divisible");
    return Monomial(vec_sub(b.e, a.e));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_size(a.e, b.e);
    IntVec r(a.e.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e[i], b.e[i]);
    return Monomial(std::move(r));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_size(a.e, b.e);
    IntVec r(a.e.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a.e[i], b.e[i]);
    return Monomial(std::move(r));
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    require_same_size(a.e, b.e);
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

enum class Cmp { Less, Equal, Greater };

// Graded reverse-lexicographic order with an explicit variable ranking.
// `ranking` lists variable indices from greatest to least. Ties in the degree
// are broken by scanning from the least-ranked variable upward: at the first
// difference, the monomial with the smaller exponent is the greater one.
//
// By default the grading is the total degree. A positive weight vector may be
// supplied instead; the saturation machinery needs reverse-lex orders graded
// by the semigroup weights, since the divide-out property only holds for
// orders graded compatibly with the homogeneity of the ideal.
struct MonomialOrder {
    std::vector<std::size_t> ranking;
    IntVec weights;  // empty = all ones

    std::size_t nvars() const { return ranking.size(); }

    Int degree(const Monomial& m) const {
        if (weights.empty()) return m.degree();
        Int d(0);
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] != 0) d += m.e[i] * weights[i];
        return d;
    }

    Cmp compare(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != ranking.size() || b.nvars() != ranking.size())
            throw dimension_error("monomial/order variable count mismatch");
        Int da = degree(a), db = degree(b);
        if (da != db) return da < db ? Cmp::Less : Cmp::Greater;
        for (auto it = ranking.rbegin(); it != ranking.rend(); ++it) {
            const Int& xa = a.e[*it];
            const Int& xb = b.e[*it];
            if (xa != xb) return xa < xb ? Cmp::Greater : Cmp::Less;
        }
        return Cmp::Equal;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::Less; }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::Greater;
    }
};

// degrevlex with the default ranking z_n > ... > z_1 (variable 0 least).
inline MonomialOrder degrevlex(std::size_t nvars) {
    MonomialOrder o;
    o.ranking.resize(nvars);
    for (std::size_t i = 0; i < nvars; ++i) o.ranking[i] = nvars - 1 - i;
    return o;
}

inline MonomialOrder degrevlex_ranked(std::vector<std::size_t> greatest_first,
                                      IntVec weights = {}) {
    std::vector<bool> seen(greatest_first.size(), false);
    for (std::size_t v : greatest_first) {
        if (v >= greatest_first.size() || seen[v])
            throw precondition_error("variable ranking is not a permutation");
        seen[v] = true;
    }
    if (!weights.empty()) {
        if (weights.size() != greatest_first.size())
            throw dimension_error("weight vector length mismatch");
        for (const Int& w : weights)
            if (w <= 0) throw precondition_error("order weights must be positive");
    }
    return MonomialOrder{std::move(greatest_first), std::move(weights)};
}

// Comparator adapter for ordered containers keyed by monomials.
struct MonomialLess {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

}  // namespace semicm
