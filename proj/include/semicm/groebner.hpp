#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "monomial.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"

namespace semicm {

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements;  // monic, interreduced, ascending by leading monomial
};

struct BuchbergerOptions {
    // Gebauer-Moller redundant-pair elimination (M/F/chain criteria). With it
    // off, only the coprime criterion is applied at selection time. Both
    // settings must produce the identical reduced basis.
    bool pair_elimination = true;
    // exponent-level S-polynomial construction for monic binomials; must
    // bit-match the generic path
    bool binomial_fastpath = true;
};

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& order, bool binomial_fastpath = true) {
    SEMICM_CHECK(!f.is_zero() && !g.is_zero(), "s_polynomial of zero input");
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    if (binomial_fastpath && f.is_monic_binomial() && g.is_monic_binomial()) {
        // S = (L/lm g) * tail(g)  -  (L/lm f) * tail(f), all coefficients +-1
        return Polynomial::from_terms(
            {Term{exact_div(l, g.leading_monomial()) * g.terms()[1].mono, Rat(1)},
             Term{exact_div(l, f.leading_monomial()) * f.terms()[1].mono, Rat(-1)}},
            order);
    }
    Polynomial a = sub_mul(Polynomial::zero(), -Rat(1) / f.leading_coeff(),
                           exact_div(l, f.leading_monomial()), f, order);
    Polynomial b = sub_mul(Polynomial::zero(), -Rat(1) / g.leading_coeff(),
                           exact_div(l, g.leading_monomial()), g, order);
    return sub(a, b, order);
}

// Complete multivariate division remainder: no term of the result is
// divisible by any leading monomial of G. Divisors are scanned in the order
// they are stored; for a Groebner basis the remainder does not depend on it.
// The dividend is re-normalized first, so it may come from another order.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                              const MonomialOrder& order) {
    std::vector<Term> remainder;
    Polynomial p = Polynomial::from_terms(f.terms(), order);
    while (!p.is_zero()) {
        budget::check();
        const Term& lt = p.leading();
        bool reduced = false;
        for (const Polynomial& d : g) {
            if (d.is_zero()) continue;
            if (!divides(d.leading_monomial(), lt.mono)) continue;
            p = sub_mul(p, lt.coeff / d.leading_coeff(), exact_div(lt.mono, d.leading_monomial()),
                        d, order);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lt);
            p = sub_mul(p, lt.coeff, Monomial::one(order.nvars()),
                        Polynomial::from_terms({Term{lt.mono, Rat(1)}}, order), order);
        }
    }
    return Polynomial::from_terms(std::move(remainder), order);
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
    return normal_form(f, g.elements, g.order);
}

namespace detail {

struct Pair {
    std::size_t i, j;
    Monomial l;
    Int deg;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        const Cmp c = order->compare(a.l, b.l);
        if (c != Cmp::Equal) return c == Cmp::Less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace detail

// Buchberger with normal strategy selection (lcm degree, then order) and the
// standard pair criteria; output is the unique reduced basis, elements monic
// and sorted ascending by leading monomial.
inline GroebnerBasis reduced_gb(const std::vector<Polynomial>& input, const MonomialOrder& order,
                                const BuchbergerOptions& opt = {}) {
    std::vector<Polynomial> basis;
    std::set<detail::Pair, detail::PairLess> pairs{detail::PairLess{&order}};

    auto make_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        Int d = l.degree();
        return detail::Pair{i, j, std::move(l), std::move(d)};
    };

    auto add_to_basis = [&](Polynomial h) {
        const std::size_t t = basis.size();
        basis.push_back(std::move(h));
        if (!opt.pair_elimination) {
            for (std::size_t i = 0; i < t; ++i) pairs.insert(make_pair(i, t));
            return;
        }
        // Gebauer-Moller update
        std::vector<detail::Pair> cand;
        for (std::size_t i = 0; i < t; ++i) cand.push_back(make_pair(i, t));
        // M: drop (i,t) when another lcm(j,t) strictly divides lcm(i,t)
        std::vector<bool> dead(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (a == b || dead[a] || dead[b]) continue;
                if (cand[b].l != cand[a].l && divides(cand[b].l, cand[a].l)) dead[a] = true;
            }
        // F + B: one survivor per lcm class, none at all if the class
        // contains a coprime pair
        std::vector<detail::Pair> survivors;
        std::vector<bool> used(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (dead[a] || used[a]) continue;
            bool coprime_class = false;
            for (std::size_t b = a; b < cand.size(); ++b) {
                if (dead[b] || cand[b].l != cand[a].l) continue;
                used[b] = true;
                if (coprime(basis[cand[b].i].leading_monomial(), basis[t].leading_monomial()))
                    coprime_class = true;
            }
            if (!coprime_class) survivors.push_back(cand[a]);
        }
        // chain criterion against the old pair set
        for (auto it = pairs.begin(); it != pairs.end();) {
            const bool drop = divides(basis[t].leading_monomial(), it->l) &&
                              lcm(basis[it->i].leading_monomial(), basis[t].leading_monomial()) !=
                                  it->l &&
                              lcm(basis[it->j].leading_monomial(), basis[t].leading_monomial()) !=
                                  it->l;
            it = drop ? pairs.erase(it) : std::next(it);
        }
        for (auto& p : survivors) pairs.insert(std::move(p));
    };

    for (const Polynomial& f : input) {
        if (f.is_zero()) continue;  // degenerate input dropped silently
        // inputs may carry another order's normal form; normal_form re-sorts
        Polynomial r = normal_form(f, basis, order);
        if (!r.is_zero()) add_to_basis(r.monic());
    }

    while (!pairs.empty()) {
        budget::check();
        detail::Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        if (!opt.pair_elimination &&
            coprime(basis[p.i].leading_monomial(), basis[p.j].leading_monomial()))
            continue;
        Polynomial s = s_polynomial(basis[p.i], basis[p.j], order, opt.binomial_fastpath);
        Polynomial r = normal_form(s, basis, order);
        if (!r.is_zero()) add_to_basis(r.monic());
    }

    // minimalize leading monomials
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const Cmp c = order.compare(basis[a].leading_monomial(), basis[b].leading_monomial());
        if (c != Cmp::Equal) return c == Cmp::Less;
        return a < b;
    });
    std::vector<Polynomial> kept;
    for (std::size_t i : idx) {
        bool divisible = false;
        for (const Polynomial& k : kept)
            if (divides(k.leading_monomial(), basis[i].leading_monomial())) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(basis[i]);
    }
    // tail reduction; leading monomials form an antichain so they are stable
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Polynomial r = normal_form(kept[i], others, order);
        SEMICM_CHECK(!r.is_zero() && r.leading_monomial() == kept[i].leading_monomial(),
                     "interreduction changed a minimal leading monomial");
        kept[i] = r.monic();
    }
    std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis{order, std::move(kept)};
}

// G(in(I)): the leading monomials of the reduced basis, which form the unique
// minimal generating set of the initial ideal.
inline std::vector<Monomial> initial_ideal_min_gens(const GroebnerBasis& g) {
    std::vector<Monomial> out;
    for (const Polynomial& p : g.elements) out.push_back(p.leading_monomial());
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = 0; b < out.size(); ++b)
            SEMICM_CHECK(a == b || !divides(out[a], out[b]),
                         "initial ideal generators are not an antichain");
    return out;
}

struct BlockStaircase {
    bool finite = false;
    std::vector<IntVec> exponents;  // full-length exponent vectors, sorted
};

// All exponent vectors supported on `block` whose monomial avoids in(I).
// Finite iff every block variable has a pure-power bound among the
// block-supported minimal generators of in(I).
inline BlockStaircase standard_monomials_block(const GroebnerBasis& g,
                                               const std::vector<std::size_t>& block) {
    const std::size_t n = g.order.nvars();
    const auto gens = initial_ideal_min_gens(g);
    std::vector<bool> in_block(n, false);
    for (std::size_t v : block) {
        SEMICM_CHECK(v < n && !in_block[v], "standard_monomials_block: bad block");
        in_block[v] = true;
    }
    std::vector<Monomial> block_gens;
    for (const Monomial& m : gens) {
        bool supported = true;
        for (std::size_t i = 0; i < n; ++i)
            if (m.e[i] > 0 && !in_block[i]) supported = false;
        if (supported) block_gens.push_back(m);
    }
    // pure-power bound per block variable
    std::vector<std::size_t> bound(block.size());
    for (std::size_t t = 0; t < block.size(); ++t) {
        std::optional<Int> best;
        for (const Monomial& m : block_gens) {
            bool pure = true;
            for (std::size_t i = 0; i < n; ++i)
                if (m.e[i] > 0 && i != block[t]) pure = false;
            if (pure && m.e[block[t]] > 0 && (!best || m.e[block[t]] < *best))
                best = m.e[block[t]];
        }
        if (!best) return BlockStaircase{false, {}};
        bound[t] = to_size(*best, "staircase bound");
    }
    BlockStaircase out;
    out.finite = true;
    IntVec cur(n, Int(0));
    std::vector<std::size_t> digit(block.size(), 0);
    while (true) {
        Monomial m(cur);
        bool excluded = false;
        for (const Monomial& bg : block_gens)
            if (divides(bg, m)) {
                excluded = true;
                break;
            }
        if (!excluded) out.exponents.push_back(cur);
        std::size_t t = 0;
        for (; t < block.size(); ++t) {
            if (digit[t] + 1 < bound[t]) {
                ++digit[t];
                cur[block[t]] += 1;
                break;
            }
            digit[t] = 0;
            cur[block[t]] = 0;
        }
        if (t == block.size()) break;
    }
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

}  // namespace semicm
