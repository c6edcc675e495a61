#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "projective.hpp"
#include "semigroup.hpp"
#include "toric.hpp"

namespace semicm {

struct LiftedSemigroup {
    AffineSemigroup base;
    Int k;
    AffineSemigroup lifted;  // extremal generators kept, the others scaled by k
};

inline LiftedSemigroup lift(const AffineSemigroup& s, const Int& k) {
    if (k <= 0) throw precondition_error("lift: k must be a positive integer");
    SEMICM_CHECK(s.extremal.has_value(), "lift: extremal rays not set");
    LiftedSemigroup out;
    out.base = s;
    out.k = k;
    out.lifted = s;
    for (std::size_t i : s.non_extremal_indices())
        out.lifted.generators[i] = vec_scale(k, s.generators[i]);
    out.lifted.validate();
    return out;
}

// The binomial transform: exponents of the extremal variables are multiplied
// by k, the rest are untouched.
inline Polynomial lift_binomial(const Polynomial& b, const Int& k,
                                const std::vector<std::size_t>& extremal_vars,
                                const MonomialOrder& order) {
    if (b.size() != 2) throw precondition_error("lift_binomial: input is not a binomial");
    std::vector<Term> ts = b.terms();
    for (Term& t : ts)
        for (std::size_t v : extremal_vars) t.mono.e[v] *= k;
    return Polynomial::from_terms(std::move(ts), order);
}

// ---- Betti numbers via squarefree divisor complexes -------------------------

struct BettiEntry {
    std::size_t index;  // homological index i
    IntVec degree;      // semigroup degree b
    std::size_t rank;   // beta_{i,b}
};

struct BettiTable {
    std::size_t bound = 0;              // sums of at most `bound` generators were examined
    std::vector<BettiEntry> entries;    // nonzero ranks, sorted by (index, degree)
    std::vector<std::size_t> totals;    // totals[i] = beta_i within the bound
};

namespace detail {

// reduced homology ranks of the complex whose faces are the given vertex
// subsets (bitmasks over nvert vertices, downward closed, containing 0)
inline std::vector<std::size_t> reduced_homology_ranks(const std::vector<std::uint32_t>& faces,
                                                       std::size_t nvert) {
    std::vector<std::vector<std::uint32_t>> by_size(nvert + 1);
    for (std::uint32_t f : faces) by_size[static_cast<std::size_t>(__builtin_popcount(f))].push_back(f);
    for (auto& v : by_size) std::sort(v.begin(), v.end());

    // rank of the boundary map from faces of size k to faces of size k-1
    std::vector<std::size_t> rank(nvert + 2, 0);
    for (std::size_t k = 1; k <= nvert; ++k) {
        if (by_size[k].empty()) continue;
        std::map<std::uint32_t, std::size_t> row_index;
        for (std::size_t i = 0; i < by_size[k - 1].size(); ++i) row_index[by_size[k - 1][i]] = i;
        RatMatrix m(by_size[k - 1].size(), RatVec(by_size[k].size(), Rat(0)));
        for (std::size_t c = 0; c < by_size[k].size(); ++c) {
            const std::uint32_t f = by_size[k][c];
            int sign = 1;
            for (std::size_t v = 0; v < nvert; ++v) {
                if (!(f & (1u << v))) continue;
                const std::uint32_t sub = f & ~(1u << v);
                auto it = row_index.find(sub);
                SEMICM_CHECK(it != row_index.end(), "complex is not downward closed");
                m[it->second][c] = Rat(sign);
                sign = -sign;
            }
        }
        rank[k] = rational_rank(std::move(m));
    }

    // beta_i = dim H~_{i-1} = #faces of size i - rank_i - rank_{i+1}
    std::vector<std::size_t> beta(nvert + 1, 0);
    for (std::size_t i = 0; i <= nvert; ++i) {
        const std::size_t fi = by_size[i].size();
        SEMICM_CHECK(fi >= rank[i] + rank[i + 1], "homology rank bookkeeping failed");
        beta[i] = fi - rank[i] - rank[i + 1];
    }
    return beta;
}

}  // namespace detail

// For every b in the semigroup expressible as a sum of at most `bound`
// generators, builds the squarefree divisor complex
//   Delta_b = { F subset of generators : b - sum_F in Gamma }
// and reports beta_{i,b} = rank H~_{i-1}(Delta_b) over the rationals. Values
// are exact within the bound; nothing is claimed beyond it. Simplices are
// skipped without linear algebra since they are acyclic.
inline BettiTable betti_numbers(const AffineSemigroup& s, std::size_t bound) {
    s.validate();
    if (bound < 1) throw precondition_error("betti_numbers: bound must be >= 1");
    const std::size_t n = s.ngens();
    SEMICM_CHECK(n < 31, "betti_numbers: too many generators for bitmask faces");
    MembershipOracle oracle(s);

    std::set<IntVec> values;
    std::set<IntVec> frontier;
    values.insert(IntVec(s.dim, Int(0)));
    frontier.insert(IntVec(s.dim, Int(0)));
    for (std::size_t step = 0; step < bound; ++step) {
        std::set<IntVec> next;
        for (const IntVec& u : frontier)
            for (const IntVec& g : s.generators) {
                IntVec w = vec_add(u, g);
                if (!values.count(w)) next.insert(w);
            }
        for (const IntVec& w : next) values.insert(w);
        frontier = std::move(next);
        budget::check();
    }

    BettiTable table;
    table.bound = bound;
    table.totals.assign(n + 1, 0);
    for (const IntVec& b : values) {
        budget::check();
        if (vec_is_zero(b)) {
            table.totals[0] += 1;
            table.entries.push_back(BettiEntry{0, b, 1});
            continue;
        }
        std::vector<std::size_t> vertices;
        for (std::size_t j = 0; j < n; ++j)
            if (oracle.contains(vec_sub(b, s.generators[j]))) vertices.push_back(j);
        SEMICM_CHECK(!vertices.empty(), "nonzero semigroup element with empty divisor complex");
        IntVec all = b;
        for (std::size_t j : vertices) all = vec_sub(all, s.generators[j]);
        if (oracle.contains(all)) continue;  // full simplex, acyclic

        std::vector<std::uint32_t> faces;
        const std::size_t w = vertices.size();
        for (std::uint32_t mask = 0; mask < (1u << w); ++mask) {
            IntVec rem = b;
            for (std::size_t t = 0; t < w; ++t)
                if (mask & (1u << t)) rem = vec_sub(rem, s.generators[vertices[t]]);
            if (oracle.contains(rem)) faces.push_back(mask);
        }
        const auto beta = detail::reduced_homology_ranks(faces, w);
        for (std::size_t i = 0; i < beta.size(); ++i) {
            if (beta[i] == 0) continue;
            table.totals[i] += beta[i];
            table.entries.push_back(BettiEntry{i, b, beta[i]});
        }
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const BettiEntry& a, const BettiEntry& b) {
                  if (a.index != b.index) return a.index < b.index;
                  return a.degree < b.degree;
              });
    SEMICM_CHECK(table.totals[0] == 1, "beta_0 must be 1");
    return table;
}

// ---- the lifting verification report ----------------------------------------

struct LiftReport {
    Int k;
    AffineSemigroup base;
    AffineSemigroup lifted;
    std::size_t mu_base = 0;
    std::size_t mu_lifted = 0;
    bool mu_equal = false;
    std::vector<Polynomial> lifted_generators;
    bool lifted_generators_in_ideal = false;
    // the lifted relation lattice is saturated; the faithfully-flat transfer
    // of resolutions (and with it the Apery statements) needs this
    bool flat = false;
    std::optional<bool> cm_base;    // affine verdict for d >= 2; always true for d = 1
    std::optional<bool> cm_lifted;
    bool cm_implication_ok = true;
    std::optional<bool> apery_size_equal;  // when the base ring is CM
    std::optional<bool> apery_scaled;      // Ap(Gamma_k, E) == k * Ap(Gamma, E)
    std::optional<AperySet> apery_base, apery_lifted;
    std::vector<std::string> notes;
};

inline LiftReport verify_lift(const AffineSemigroup& s_in, const Int& k) {
    const AffineSemigroup s = make_simplicial(s_in);
    LiftReport rep;
    rep.k = k;
    rep.base = s;
    const LiftedSemigroup ls = lift(s, k);
    rep.lifted = ls.lifted;

    const MonomialOrder ord = canonical_order(s);
    const BinomialIdeal ibase = toric_ideal(s);
    const BinomialIdeal ilift = toric_ideal(ls.lifted);
    const MinimalGenerators mbase = minimalize(ibase, ord);
    const MinimalGenerators mlift = minimalize(ilift, ord);
    rep.mu_base = mbase.mu;
    rep.mu_lifted = mlift.mu;
    rep.mu_equal = mbase.mu == mlift.mu;

    const GroebnerBasis glift = reduced_gb(ilift.gens, ord);
    rep.lifted_generators_in_ideal = true;
    for (const Polynomial& g : mbase.gens) {
        Polynomial bk = lift_binomial(g, k, *s.extremal, ord);
        SEMICM_CHECK(is_gamma_homogeneous(bk, ilift.grading),
                     "lifted binomial fails the Gamma_k exponent identity");
        if (!normal_form(bk, glift).is_zero()) rep.lifted_generators_in_ideal = false;
        rep.lifted_generators.push_back(std::move(bk));
    }

    // flatness: compare the transformed kernel lattice with the full one
    {
        const auto kernel_base = lattice_kernel(generator_matrix(s));
        const auto kernel_lift = lattice_kernel(generator_matrix(ls.lifted));
        SEMICM_CHECK(kernel_base.size() == kernel_lift.size(), "kernel ranks differ under lifting");
        if (kernel_base.empty()) {
            rep.flat = true;
        } else {
            RatMatrix basis_cols(ls.lifted.ngens(), RatVec(kernel_lift.size(), Rat(0)));
            for (std::size_t j = 0; j < kernel_lift.size(); ++j)
                for (std::size_t r = 0; r < ls.lifted.ngens(); ++r)
                    basis_cols[r][j] = Rat(kernel_lift[j][r]);
            RatMatrix coeffs(kernel_base.size(), RatVec(kernel_base.size(), Rat(0)));
            for (std::size_t j = 0; j < kernel_base.size(); ++j) {
                IntVec v = kernel_base[j];
                for (std::size_t i : *s.extremal) v[i] *= k;
                auto x = rational_solve(basis_cols, RatVec(v.begin(), v.end()));
                SEMICM_CHECK(x.has_value(), "transformed kernel vector outside the lifted kernel");
                coeffs[j] = *x;
            }
            const Rat det = rational_det(std::move(coeffs));
            rep.flat = boost::multiprecision::abs(det) == 1;
        }
        if (!rep.flat)
            rep.notes.push_back(
                "lifted relation lattice is not saturated; resolution transfer arguments do "
                "not apply to this instance");
    }

    if (s.dim >= 2) {
        rep.cm_base = is_cohen_macaulay(s).cm_affine;
        rep.cm_lifted = is_cohen_macaulay(ls.lifted).cm_affine;
    } else {
        rep.cm_base = true;  // one-dimensional semigroup rings are CM
        rep.cm_lifted = true;
    }
    rep.cm_implication_ok = !(*rep.cm_base) || *rep.cm_lifted;

    if (*rep.cm_base) {
        AperySet ap_base = apery(s);
        AperySet ap_lift = apery(ls.lifted);
        rep.apery_size_equal = ap_base.elements.size() == ap_lift.elements.size();
        std::vector<IntVec> scaled;
        for (const IntVec& b : ap_base.elements) scaled.push_back(vec_scale(k, b));
        std::sort(scaled.begin(), scaled.end());
        rep.apery_scaled = scaled == ap_lift.elements;
        rep.apery_base = std::move(ap_base);
        rep.apery_lifted = std::move(ap_lift);
    }
    return rep;
}

}  // namespace semicm
