#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "semigroup.hpp"
#include "toric.hpp"

namespace semicm {

// Order on the z0-adjoined ring: the affine ranking with z0 (variable index
// n) appended as the least variable.
inline MonomialOrder projective_order(const MonomialOrder& affine) {
    std::vector<std::size_t> ranking = affine.ranking;
    ranking.push_back(affine.nvars());
    return degrevlex_ranked(std::move(ranking));
}

inline Monomial extend_monomial(const Monomial& m) {
    IntVec e = m.e;
    e.push_back(Int(0));
    return Monomial(std::move(e));
}

inline Monomial truncate_monomial(const Monomial& m) {
    SEMICM_CHECK(m.nvars() > 0 && m.e.back() == 0, "truncate_monomial: z0 exponent nonzero");
    IntVec e(m.e.begin(), m.e.end() - 1);
    return Monomial(std::move(e));
}

// f^h = z0^{deg f} f(z1/z0, ...): every term padded up to deg f.
inline Polynomial homogenize(const Polynomial& f, const MonomialOrder& proj_order) {
    if (f.is_zero()) return f;
    Int deg(0);
    for (const Term& t : f.terms()) deg = std::max(deg, t.mono.degree());
    std::vector<Term> ts;
    for (const Term& t : f.terms()) {
        Monomial m = extend_monomial(t.mono);
        m.e.back() = deg - t.mono.degree();
        ts.push_back(Term{std::move(m), t.coeff});
    }
    return Polynomial::from_terms(std::move(ts), proj_order);
}

// The semigroup Gamma^h in N^{2d}. Variable alignment with the projective
// ring: generator i (i < n) -> (m_last - m_i, m_i), generator n -> (m_last, 0)
// is the one of z0.
struct ProjectiveClosure {
    AffineSemigroup base;  // simplicial, extremal rays set; homogenizing generator last
    AffineSemigroup gamma_h;
    std::vector<std::size_t> designated_extremal;  // gamma_h generator indices
};

inline ProjectiveClosure build_gamma_h(const AffineSemigroup& s) {
    SEMICM_CHECK(s.extremal.has_value(), "build_gamma_h: extremal rays not set");
    const std::size_t n = s.ngens();
    const IntVec& last = s.generators[n - 1];
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t c = 0; c < s.dim; ++c)
            if (s.generators[i][c] > last[c])
                throw domination_error(
                    "homogenizing generator does not dominate generator " + std::to_string(i + 1) +
                    " componentwise; choose another last generator");
    ProjectiveClosure p;
    p.base = s;
    p.gamma_h.dim = 2 * s.dim;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec g = vec_sub(last, s.generators[i]);
        g.insert(g.end(), s.generators[i].begin(), s.generators[i].end());
        SEMICM_CHECK(vec_sum(g) == vec_sum(last), "gamma_h generator halves do not sum to m_last");
        p.gamma_h.generators.push_back(std::move(g));
    }
    IntVec g0 = last;
    g0.insert(g0.end(), s.dim, Int(0));
    p.gamma_h.generators.push_back(std::move(g0));
    p.gamma_h.validate();
    for (std::size_t i : *s.extremal) p.designated_extremal.push_back(i);
    p.designated_extremal.push_back(n);
    return p;
}

// Reduced basis of I(Gamma^h) under prec_0 by homogenizing the reduced
// affine basis. Valid for every simplicial input, embedded or not.
inline GroebnerBasis homogenized_closure_gb(const GroebnerBasis& affine_gb) {
    const MonomialOrder ordh = projective_order(affine_gb.order);
    std::vector<Polynomial> hs;
    for (const Polynomial& g : affine_gb.elements) hs.push_back(homogenize(g, ordh));
    return reduced_gb(hs, ordh);
}

// Membership in Gamma^h without the N^{2d} embedding: (x, y) lies in Gamma^h
// iff x + y = l * m_last for an integer l >= 0 and y has a factorization in
// the base semigroup of length at most l.
class GammaHOracle {
  public:
    explicit GammaHOracle(const AffineSemigroup& base) : s_(&base) {}

    bool contains(const IntVec& xy) {
        SEMICM_CHECK(xy.size() == 2 * s_->dim, "GammaHOracle: query length");
        const IntVec x(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(s_->dim));
        const IntVec y(xy.begin() + static_cast<std::ptrdiff_t>(s_->dim), xy.end());
        const IntVec& last = s_->generators[s_->ngens() - 1];
        const IntVec sum = vec_add(x, y);
        std::optional<Int> level;
        for (std::size_t c = 0; c < s_->dim; ++c) {
            if (last[c] == 0) {
                if (sum[c] != 0) return false;
                continue;
            }
            if (sum[c] % last[c] != 0) return false;
            const Int l = sum[c] / last[c];
            if (level && *level != l) return false;
            level = l;
        }
        SEMICM_CHECK(level.has_value(), "GammaHOracle: zero homogenizing generator");
        if (*level < 0) return false;
        auto mp = min_parts(y);
        return mp.has_value() && *mp <= *level;
    }

    // least number of generators (with multiplicity) summing to y
    std::optional<Int> min_parts(const IntVec& y) {
        if (!vec_nonneg(y)) return std::nullopt;
        if (vec_is_zero(y)) return Int(0);
        auto it = cache_.find(y);
        if (it != cache_.end()) return it->second;
        budget::check();
        cache_.emplace(y, std::nullopt);
        std::optional<Int> best;
        for (const IntVec& g : s_->generators) {
            if (!vec_le(g, y)) continue;
            auto sub = min_parts(vec_sub(y, g));
            if (sub && (!best || *sub + 1 < *best)) best = *sub + 1;
        }
        cache_[y] = best;
        return best;
    }

  private:
    const AffineSemigroup* s_;
    std::map<IntVec, std::optional<Int>> cache_;
};

// Ap(Gamma^h, E_{Gamma^h}) under the Cohen-Macaulay hypothesis, through the
// standard-monomial set of the non-extremal block: each standard exponent
// alpha maps to sum alpha_i (m_last - m_i, m_i). Elements are returned as
// length-2d vectors (x followed by y).
struct GammaHApery {
    std::vector<IntVec> elements;
    std::vector<IntVec> maximal;
};

inline GammaHApery apery_gamma_h_from_staircase(const AffineSemigroup& s,
                                                const GroebnerBasis& affine_gb) {
    const BlockStaircase q = standard_monomials_block(affine_gb, s.non_extremal_indices());
    if (!q.finite)
        throw precondition_error(
            "apery_gamma_h: standard-monomial block is infinite; the closure is not "
            "arithmetically Cohen-Macaulay");
    const IntVec& last = s.generators[s.ngens() - 1];
    std::vector<IntVec> elems;
    for (const IntVec& alpha : q.exponents) {
        IntVec y(s.dim, Int(0));
        Int level(0);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            y = vec_add(y, vec_scale(alpha[i], s.generators[i]));
            level += alpha[i];
        }
        IntVec x = vec_sub(vec_scale(level, last), y);
        x.insert(x.end(), y.begin(), y.end());
        elems.push_back(std::move(x));
    }
    std::sort(elems.begin(), elems.end());
    SEMICM_CHECK(std::adjacent_find(elems.begin(), elems.end()) == elems.end(),
                 "apery_gamma_h: standard monomials do not map injectively");
    GammaHApery ap;
    ap.elements = std::move(elems);
    GammaHOracle oracle(s);
    for (const IntVec& b : ap.elements) {
        bool maximal = true;
        for (const IntVec& c : ap.elements) {
            if (c == b) continue;
            if (oracle.contains(vec_sub(c, b))) {
                maximal = false;
                break;
            }
        }
        if (maximal) ap.maximal.push_back(b);
    }
    return ap;
}

// ---- the d = 1 route: the closure of a monomial curve as a plane semigroup

// For exponents n_1 < ... < n_r the closure semigroup T in N^2 is generated
// by (n_r - n_i, n_i) for i = 1..r together with (n_r, 0). Generator order
// matches the curve convention: interior generators by increasing exponent,
// then (0, n_r), then (n_r, 0); the ranking is the list order, so the two
// extremal variables are the least-ranked pair.
struct CurveClosure {
    AffineSemigroup t;
    MonomialOrder order;
    std::vector<std::string> names;
};

inline CurveClosure curve_closure(const std::vector<Int>& exponents_in) {
    std::vector<Int> ns = exponents_in;
    std::sort(ns.begin(), ns.end());
    if (ns.empty() || ns.front() <= 0)
        throw precondition_error("curve exponents must be positive");
    for (std::size_t i = 0; i + 1 < ns.size(); ++i)
        if (ns[i] == ns[i + 1]) throw precondition_error("curve exponents must be distinct");
    const Int& nr = ns.back();
    CurveClosure c;
    c.t.dim = 2;
    for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
        c.t.generators.push_back(IntVec{nr - ns[i], ns[i]});
        c.names.push_back("x" + std::to_string(i + 1));
    }
    c.t.generators.push_back(IntVec{Int(0), nr});
    c.names.push_back("x" + std::to_string(ns.size()));
    c.t.generators.push_back(IntVec{nr, Int(0)});
    c.names.push_back("x0");
    c.t.validate();
    c.t.extremal = std::vector<std::size_t>{ns.size() - 1, ns.size()};
    std::vector<std::size_t> ranking(c.t.ngens());
    for (std::size_t i = 0; i < ranking.size(); ++i) ranking[i] = i;
    c.order = degrevlex_ranked(std::move(ranking));
    return c;
}

// ---- Cohen-Macaulay report ------------------------------------------------

struct CMReport {
    AffineSemigroup semigroup;  // the input presentation, extremal rays filled in
    std::vector<std::size_t> redundant_generators;  // indices that are sums of the others
    GroebnerBasis affine_gb;
    std::vector<Monomial> gin_affine;
    GroebnerBasis projective_gb;  // under prec_0, z0 = last variable
    std::optional<bool> cm_affine;  // absent when d = 1 (the affine ring is always CM)
    bool cm_projective = false;
    std::optional<std::string> witness;  // rendered offending monomial & variable
    std::optional<CurveClosure> curve;   // d = 1 only
    std::optional<GroebnerBasis> curve_gb;
    std::optional<GammaHApery> apery_gh;  // when CM
    std::optional<std::size_t> cm_type;   // when CM
    std::vector<std::string> warnings;
};

namespace detail {

inline std::optional<std::pair<Monomial, std::size_t>> divisibility_offender(
    const std::vector<Monomial>& gin, const std::vector<std::size_t>& vars) {
    for (const Monomial& m : gin)
        for (std::size_t v : vars)
            if (m.e[v] > 0) return std::make_pair(m, v);
    return std::nullopt;
}

}  // namespace detail

// Decides arithmetic Cohen-Macaulayness of K[Gamma] (d >= 2) and of the
// projective closure K[Gamma^h] via the divisibility criterion: no extremal
// variable (and projectively no z0) may divide a minimal generator of the
// initial ideal. The criterion presumes a minimal generator list; a redundant
// list is kept for everything it presents (ideal, bases, Apery data) but the
// ring verdicts are recomputed on the reduced list, with a warning. For d = 1
// the affine ring is always Cohen-Macaulay and the projective verdict is read
// off the plane closure semigroup T of the raw exponent list, with its two
// geometric extremal rays.
inline CMReport is_cohen_macaulay(const AffineSemigroup& s_input) {
    s_input.validate();
    CMReport rep;

    const AffineSemigroup s = make_simplicial(s_input);
    rep.semigroup = s;
    rep.redundant_generators = redundant_generators(s);
    const bool minimal = rep.redundant_generators.empty();
    if (!minimal)
        rep.warnings.push_back("input generators are not minimal");

    const MonomialOrder ord = canonical_order(s);
    const BinomialIdeal ideal = toric_ideal(s);
    rep.affine_gb = reduced_gb(ideal.gens, ord);
    rep.gin_affine = initial_ideal_min_gens(rep.affine_gb);

    rep.projective_gb = homogenized_closure_gb(rep.affine_gb);
    {
        const auto gin_h = initial_ideal_min_gens(rep.projective_gb);
        SEMICM_CHECK(gin_h.size() == rep.gin_affine.size(),
                     "G(in I(Gamma)) and G(in I(Gamma^h)) differ in size");
        std::vector<Monomial> trunc;
        for (const Monomial& m : gin_h) trunc.push_back(truncate_monomial(m));
        std::sort(trunc.begin(), trunc.end(), [&](const Monomial& a, const Monomial& b) {
            return ord.less(a, b);
        });
        std::vector<Monomial> aff = rep.gin_affine;
        std::sort(aff.begin(), aff.end(),
                  [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
        SEMICM_CHECK(trunc == aff, "G(in I(Gamma)) != G(in I(Gamma^h))");
    }

    // cross-check against the direct toric ideal of Gamma^h when it embeds
    {
        bool dominated = true;
        const IntVec& last = s.generators[s.ngens() - 1];
        for (const auto& g : s.generators)
            if (!vec_le(g, last)) dominated = false;
        if (dominated) {
            const ProjectiveClosure p = build_gamma_h(s);
            const BinomialIdeal ih = toric_ideal(p.gamma_h);
            const GroebnerBasis direct = reduced_gb(ih.gens, rep.projective_gb.order);
            SEMICM_CHECK(direct.elements == rep.projective_gb.elements,
                         "homogenization route and direct toric route disagree");
        } else {
            rep.warnings.push_back(
                "last generator does not dominate componentwise; Gamma^h analyzed through "
                "the homogenized ideal only");
        }
    }

    if (s.dim >= 2) {
        if (minimal) {
            auto off = detail::divisibility_offender(rep.gin_affine, *s.extremal);
            const bool cm = !off.has_value();
            rep.cm_affine = cm;
            rep.cm_projective = cm;
            if (off) {
                const auto names = variable_names(s.ngens(), "z");
                rep.witness = names[off->second] + " divides " + render(off->first, names);
            }
            if (cm) {
                GammaHApery ap = apery_gamma_h_from_staircase(s, rep.affine_gb);
                const AperySet base_ap = apery(s);
                SEMICM_CHECK(ap.elements.size() == base_ap.elements.size(),
                             "|Ap(Gamma^h)| != |Ap(Gamma)| under the CM hypothesis");
                rep.cm_type = ap.maximal.size();
                rep.apery_gh = std::move(ap);
            }
        } else {
            // the divisibility criterion is only valid for minimal lists
            AffineSemigroup reduced = s;
            reduced.extremal.reset();
            std::size_t guard = 0;
            while (true) {
                auto red = redundant_generators(reduced);
                if (red.empty()) break;
                reduced.generators.erase(reduced.generators.begin() +
                                         static_cast<std::ptrdiff_t>(red.back()));
                SEMICM_CHECK(++guard <= s.ngens(), "minimalization loop ran away");
            }
            CMReport inner = is_cohen_macaulay(reduced);
            rep.warnings.push_back("ring verdicts computed on the reduced generator list");
            rep.cm_affine = inner.cm_affine;
            rep.cm_projective = inner.cm_projective;
            rep.witness = inner.witness;
            rep.cm_type = inner.cm_type;
            rep.apery_gh = std::move(inner.apery_gh);
        }
    } else {
        rep.cm_affine = std::nullopt;  // one-dimensional semigroup rings are always CM
        std::vector<Int> exps;
        for (const auto& g : s.generators) exps.push_back(g[0]);
        CurveClosure cc = curve_closure(exps);
        const BinomialIdeal it = toric_ideal(cc.t);
        rep.curve_gb = reduced_gb(it.gens, cc.order);
        const auto gin_t = initial_ideal_min_gens(*rep.curve_gb);
        auto off = detail::divisibility_offender(gin_t, *cc.t.extremal);
        rep.cm_projective = !off.has_value();
        if (off) rep.witness = cc.names[off->second] + " divides " + render(off->first, cc.names);
        rep.curve = std::move(cc);
        if (rep.cm_projective) {
            const AperySet ap_t = apery(rep.curve->t);
            GammaHApery ap;
            ap.elements = ap_t.elements;
            ap.maximal = ap_t.maximal;
            rep.cm_type = ap.maximal.size();
            rep.apery_gh = std::move(ap);
        }
    }
    return rep;
}

// Convenience wrappers matching the per-operation contracts.

inline GroebnerBasis ideal_of_gamma_h(const ProjectiveClosure& p) {
    const MonomialOrder ord = canonical_order(p.base);
    const GroebnerBasis affine = reduced_gb(toric_ideal(p.base).gens, ord);
    GroebnerBasis route1 = homogenized_closure_gb(affine);
    const GroebnerBasis route2 = reduced_gb(toric_ideal(p.gamma_h).gens, route1.order);
    SEMICM_CHECK(route1.elements == route2.elements,
                 "homogenization route and direct toric route disagree");
    return route1;
}

inline std::size_t cm_type_projective(const AffineSemigroup& s) {
    CMReport rep = is_cohen_macaulay(s);
    if (!rep.cm_projective)
        throw precondition_error("cm_type_projective: closure is not arithmetically CM");
    return *rep.cm_type;
}

}  // namespace semicm
