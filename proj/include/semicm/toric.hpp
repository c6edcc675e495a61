#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "groebner.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "semigroup.hpp"

namespace semicm {

// Binomial ideal together with the semigroup grading of its ambient ring:
// grading[i] is the semigroup element the i-th variable maps to.
struct BinomialIdeal {
    std::size_t nvars = 0;
    std::vector<IntVec> grading;
    std::vector<Polynomial> gens;
};

inline IntVec gamma_degree(const Monomial& m, const std::vector<IntVec>& grading) {
    SEMICM_CHECK(m.nvars() == grading.size(), "gamma_degree: variable count mismatch");
    SEMICM_CHECK(!grading.empty(), "gamma_degree: empty grading");
    IntVec deg(grading[0].size(), Int(0));
    for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m.e[i] != 0) deg = vec_add(deg, vec_scale(m.e[i], grading[i]));
    return deg;
}

inline bool is_gamma_homogeneous(const Polynomial& f, const std::vector<IntVec>& grading) {
    if (f.is_zero()) return true;
    const IntVec d0 = gamma_degree(f.terms()[0].mono, grading);
    for (const Term& t : f.terms())
        if (gamma_degree(t.mono, grading) != d0) return false;
    return true;
}

inline IntVec gamma_degree(const Polynomial& f, const std::vector<IntVec>& grading) {
    SEMICM_CHECK(!f.is_zero(), "gamma_degree of zero polynomial");
    return gamma_degree(f.leading_monomial(), grading);
}

inline std::vector<IntVec> lattice_kernel(const IntMatrix& m) { return integer_kernel(m); }

// z^{v+} - z^{v-}
inline Polynomial binomial_from_vector(const IntVec& v, const MonomialOrder& order) {
    IntVec plus(v.size(), Int(0)), minus(v.size(), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        (v[i] >= 0 ? plus[i] : minus[i]) = boost::multiprecision::abs(v[i]);
    return Polynomial::monomial_diff(Monomial(std::move(plus)), Monomial(std::move(minus)), order);
}

namespace detail {

// Weighted revlex with variable i ranked least, the rest by descending index.
// The weights make the order graded for the given semigroup grading, which is
// what the divide-out saturation step requires.
inline MonomialOrder var_last_order(std::size_t nvars, std::size_t i, IntVec weights) {
    std::vector<std::size_t> ranking;
    for (std::size_t v = nvars; v-- > 0;)
        if (v != i) ranking.push_back(v);
    ranking.push_back(i);
    return degrevlex_ranked(std::move(ranking), std::move(weights));
}

// divide the whole element by the largest power of variable i dividing it
inline Polynomial divide_out(const Polynomial& f, std::size_t i, const MonomialOrder& order,
                             bool* changed) {
    if (f.is_zero()) return f;
    Int k = f.terms()[0].mono.e[i];
    for (const Term& t : f.terms()) k = std::min(k, t.mono.e[i]);
    if (k == 0) return f;
    *changed = true;
    std::vector<Term> ts = f.terms();
    for (Term& t : ts) t.mono.e[i] -= k;
    return Polynomial::from_terms(std::move(ts), order);
}

}  // namespace detail

inline IntMatrix generator_matrix(const AffineSemigroup& s) {
    IntMatrix m(s.dim, IntVec(s.ngens()));
    for (std::size_t j = 0; j < s.ngens(); ++j)
        for (std::size_t i = 0; i < s.dim; ++i) m[i][j] = s.generators[j][i];
    return m;
}

// Defining ideal I(S) = ker(z_i -> x^{m_i}): binomials from a lattice kernel
// basis, then saturation by every variable in turn. An element of a reduced
// degrevlex basis with z_i ranked least can be divided by its z_i content;
// looping until a full pass makes no division yields the saturated ideal,
// which is exactly ker(phi).
inline BinomialIdeal toric_ideal(const AffineSemigroup& s) {
    s.validate();
    BinomialIdeal ideal;
    ideal.nvars = s.ngens();
    ideal.grading = s.generators;

    IntVec weights;
    for (const IntVec& g : s.generators) weights.push_back(vec_sum(g));

    const MonomialOrder base_order = degrevlex(ideal.nvars);
    std::vector<Polynomial> cur;
    for (const IntVec& v : lattice_kernel(generator_matrix(s))) {
        if (vec_is_zero(v)) continue;
        cur.push_back(binomial_from_vector(v, base_order));
    }

    bool stable = false;
    while (!stable) {
        stable = true;
        for (std::size_t i = 0; i < ideal.nvars; ++i) {
            budget::check();
            const MonomialOrder ord = detail::var_last_order(ideal.nvars, i, weights);
            GroebnerBasis g = reduced_gb(cur, ord);
            bool changed = false;
            std::vector<Polynomial> next;
            for (const Polynomial& f : g.elements)
                next.push_back(detail::divide_out(f, i, ord, &changed));
            cur = std::move(next);
            if (changed) stable = false;
        }
    }

    ideal.gens = cur;
    for (const Polynomial& f : ideal.gens) {
        SEMICM_CHECK(f.is_monic_binomial() || f.size() == 1,
                     "toric ideal generator is not binomial");
        SEMICM_CHECK(is_gamma_homogeneous(f, ideal.grading),
                     "toric ideal generator fails the exponent identity");
    }
    return ideal;
}

struct MinimalGenerators {
    std::vector<Polynomial> gens;
    std::size_t mu = 0;
};

// Minimal generating set of a positively graded binomial ideal, by
// irredundantization: generators are scanned from the largest down (by
// coordinate sum of the semigroup degree, a positive grading, then by
// standard degree and leading monomial) and dropped when they lie in the
// ideal of all the others. Graded Nakayama makes the count independent of
// the choices.
inline MinimalGenerators minimalize(const BinomialIdeal& ideal, const MonomialOrder& order) {
    for (const IntVec& d : ideal.grading)
        if (vec_is_zero(d)) throw grading_error("minimalize: variable of degree zero");
    for (const Polynomial& f : ideal.gens)
        if (!is_gamma_homogeneous(f, ideal.grading))
            throw grading_error("minimalize: non-homogeneous generator");

    std::vector<Polynomial> live;
    for (const Polynomial& f : ideal.gens)
        if (!f.is_zero())
            live.push_back(Polynomial::from_terms(f.terms(), order).monic());

    auto key_less = [&](const Polynomial& a, const Polynomial& b) {
        const Int wa = vec_sum(gamma_degree(a, ideal.grading));
        const Int wb = vec_sum(gamma_degree(b, ideal.grading));
        if (wa != wb) return wa < wb;
        const Int da = a.leading_monomial().degree(), db = b.leading_monomial().degree();
        if (da != db) return da < db;
        return order.less(a.leading_monomial(), b.leading_monomial());
    };
    std::sort(live.begin(), live.end(), key_less);

    for (std::size_t pos = live.size(); pos-- > 0;) {
        budget::check();
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < live.size(); ++j)
            if (j != pos) others.push_back(live[j]);
        GroebnerBasis g = reduced_gb(others, order);
        if (normal_form(live[pos], g).is_zero())
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return MinimalGenerators{live, live.size()};
}

}  // namespace semicm
