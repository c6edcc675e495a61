#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "linalg.hpp"
#include "monomial.hpp"
#include "numeric.hpp"

namespace semicm {

// Finitely generated subsemigroup of N^d, given by its generator list. The
// generator order is meaningful: it fixes the variable labelling of the toric
// ideal, and by convention the homogenizing generator is the last one.
struct AffineSemigroup {
    std::size_t dim = 0;
    std::vector<IntVec> generators;
    // indices of the generators designated as extremal rays (one per ray),
    // filled by make_simplicial / extremal_rays
    std::optional<std::vector<std::size_t>> extremal;

    void validate() const {
        if (dim == 0) throw precondition_error("ambient dimension must be positive");
        if (generators.empty()) throw precondition_error("generator list is empty");
        std::set<IntVec> seen;
        for (const auto& g : generators) {
            if (g.size() != dim) throw dimension_error("generator has wrong length");
            if (!vec_nonneg(g)) throw precondition_error("generator with negative entry");
            if (vec_is_zero(g)) throw precondition_error("zero generator");
            if (!seen.insert(g).second) throw precondition_error("duplicate generator");
        }
        if (extremal)
            for (std::size_t i : *extremal)
                if (i >= generators.size()) throw precondition_error("extremal index out of range");
    }

    std::size_t ngens() const { return generators.size(); }

    std::vector<IntVec> extremal_generators() const {
        SEMICM_CHECK(extremal.has_value(), "extremal rays not computed");
        std::vector<IntVec> v;
        for (std::size_t i : *extremal) v.push_back(generators[i]);
        return v;
    }

    std::vector<std::size_t> non_extremal_indices() const {
        SEMICM_CHECK(extremal.has_value(), "extremal rays not computed");
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (std::find(extremal->begin(), extremal->end(), i) == extremal->end())
                v.push_back(i);
        return v;
    }
};

inline AffineSemigroup make_semigroup(std::size_t dim, std::vector<IntVec> gens) {
    AffineSemigroup s{dim, std::move(gens), std::nullopt};
    s.validate();
    return s;
}

namespace detail {
inline IntVec primitive(const IntVec& v) {
    const Int g = vec_content(v);
    IntVec p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
    return p;
}
}  // namespace detail

// Indices of the generators lying on extremal rays of cone(S); for collinear
// generators on one ray, the smallest is reported. A direction is extremal
// iff it is not a nonnegative rational combination of the other generators'
// directions.
inline std::vector<std::size_t> extremal_rays(const AffineSemigroup& s) {
    s.validate();
    IntMatrix rows(s.dim, IntVec(s.ngens()));
    for (std::size_t j = 0; j < s.ngens(); ++j)
        for (std::size_t i = 0; i < s.dim; ++i) rows[i][j] = s.generators[j][i];
    if (integer_rank(rows) != s.dim)
        throw precondition_error("generators do not span a full-dimensional cone");

    // group generators by primitive direction
    std::map<IntVec, std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < s.ngens(); ++j)
        groups[detail::primitive(s.generators[j])].push_back(j);

    std::vector<std::size_t> out;
    for (const auto& [dir, members] : groups) {
        std::vector<IntVec> others;
        for (const auto& [dir2, members2] : groups)
            if (dir2 != dir) others.push_back(dir2);
        if (cone_contains(others, dir)) continue;
        // smallest generator on the ray = smallest scalar multiple
        std::size_t best = members.front();
        for (std::size_t j : members)
            if (vec_sum(s.generators[j]) < vec_sum(s.generators[best])) best = j;
        out.push_back(best);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_simplicial(const AffineSemigroup& s) {
    try {
        return extremal_rays(s).size() == s.dim;
    } catch (const precondition_error&) {
        return false;  // degenerate cone
    }
}

// Copy of S with extremal ray indices filled in; throws if not simplicial.
inline AffineSemigroup make_simplicial(AffineSemigroup s) {
    auto ext = extremal_rays(s);
    if (ext.size() != s.dim)
        throw precondition_error("semigroup is not simplicial: " + std::to_string(ext.size()) +
                                 " extremal rays in dimension " + std::to_string(s.dim));
    s.extremal = std::move(ext);
    return s;
}

struct MembershipCertificate {
    IntVec coefficients;  // one per generator
};

// Complete membership search: breadth-first over all partial sums of
// generators dominated componentwise by v. Finite and exact because the
// generators are nonzero and nonnegative.
inline std::optional<MembershipCertificate> member(const AffineSemigroup& s, const IntVec& v) {
    if (v.size() != s.dim) throw dimension_error("member: query has wrong length");
    if (!vec_nonneg(v)) return std::nullopt;
    const IntVec zero(s.dim, Int(0));
    // visited point -> (predecessor, generator index used)
    std::map<IntVec, std::pair<IntVec, std::size_t>> visited;
    visited.emplace(zero, std::make_pair(zero, s.ngens()));
    std::deque<IntVec> queue{zero};
    while (!queue.empty()) {
        budget::check();
        IntVec u = std::move(queue.front());
        queue.pop_front();
        if (u == v) break;
        for (std::size_t j = 0; j < s.ngens(); ++j) {
            IntVec w = vec_add(u, s.generators[j]);
            if (!vec_le(w, v)) continue;
            if (visited.count(w)) continue;
            visited.emplace(w, std::make_pair(u, j));
            queue.push_back(w);
        }
    }
    auto it = visited.find(v);
    if (it == visited.end()) return std::nullopt;
    MembershipCertificate cert{IntVec(s.ngens(), Int(0))};
    IntVec cur = v;
    while (cur != zero) {
        const auto& [prev, j] = visited.at(cur);
        cert.coefficients[j] += 1;
        cur = prev;
    }
    IntVec check(s.dim, Int(0));
    for (std::size_t j = 0; j < s.ngens(); ++j)
        check = vec_add(check, vec_scale(cert.coefficients[j], s.generators[j]));
    SEMICM_CHECK(check == v, "member: certificate does not reproduce query");
    return cert;
}

// Memoized yes/no membership for the hot paths (Apery maximality, divisor
// complexes). Exact; true results are found by depth-first search with
// short-circuiting, false results by exhaustion of the dominated region.
class MembershipOracle {
  public:
    explicit MembershipOracle(const AffineSemigroup& s) : s_(&s) {}

    bool contains(const IntVec& v) {
        if (v.size() != s_->dim) throw dimension_error("membership query has wrong length");
        if (!vec_nonneg(v)) return false;
        return search(v);
    }

    const AffineSemigroup& semigroup() const { return *s_; }

  private:
    bool search(const IntVec& v) {
        if (vec_is_zero(v)) return true;
        auto it = cache_.find(v);
        if (it != cache_.end()) return it->second;
        budget::check();
        cache_.emplace(v, false);  // guards cycles; overwritten on success
        bool ok = false;
        for (std::size_t j = 0; j < s_->ngens() && !ok; ++j) {
            if (!vec_le(s_->generators[j], v)) continue;
            ok = search(vec_sub(v, s_->generators[j]));
        }
        cache_[v] = ok;
        return ok;
    }

    const AffineSemigroup* s_;
    std::map<IntVec, bool> cache_;
};

struct AperySet {
    std::vector<IntVec> elements;  // sorted
    std::vector<IntVec> maximal;   // maximal under the semigroup divisibility order
};

// Ap(S, E) for the designated extremal set E, by direct enumeration: every
// Apery element factors purely over the non-extremal generators, and the set
// of such exponent vectors with Apery value is downward closed, so a pruned
// breadth-first search over exponents is complete. Terminates whenever
// Ap(S, E) is finite, in particular for simplicial S with its extremal rays.
inline AperySet apery(const AffineSemigroup& s) {
    if (!s.extremal || s.extremal->empty())
        throw precondition_error("apery: a designated extremal ray set is required");
    MembershipOracle oracle(s);
    const auto ext = s.extremal_generators();
    const auto free_idx = s.non_extremal_indices();

    auto value_in_ap = [&](const IntVec& v) {
        for (const auto& e : ext)
            if (oracle.contains(vec_sub(v, e))) return false;
        return true;
    };

    std::set<IntVec> values;
    std::set<IntVec> seen_alpha;
    std::deque<IntVec> queue;
    const IntVec zero_alpha(free_idx.size(), Int(0));
    queue.push_back(zero_alpha);
    seen_alpha.insert(zero_alpha);
    constexpr std::size_t kStateCap = 2'000'000;
    while (!queue.empty()) {
        budget::check();
        IntVec alpha = std::move(queue.front());
        queue.pop_front();
        IntVec v(s.dim, Int(0));
        for (std::size_t t = 0; t < free_idx.size(); ++t)
            v = vec_add(v, vec_scale(alpha[t], s.generators[free_idx[t]]));
        if (!value_in_ap(v)) continue;
        values.insert(v);
        for (std::size_t t = 0; t < free_idx.size(); ++t) {
            IntVec next = alpha;
            next[t] += 1;
            if (seen_alpha.insert(next).second) queue.push_back(std::move(next));
        }
        if (seen_alpha.size() > kStateCap)
            throw internal_error("apery enumeration exceeded state cap; input not simplicial?");
    }

    AperySet ap;
    ap.elements.assign(values.begin(), values.end());
    for (const auto& b : ap.elements) {
        bool maximal = true;
        for (const auto& c : ap.elements) {
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

struct QuasiFrobenius {
    std::vector<IntVec> elements;  // may have negative entries
    std::size_t type = 0;
};

inline QuasiFrobenius quasi_frobenius(const AffineSemigroup& s, const AperySet& ap) {
    IntVec ext_sum(s.dim, Int(0));
    for (const auto& e : s.extremal_generators()) ext_sum = vec_add(ext_sum, e);
    QuasiFrobenius qf;
    for (const auto& b : ap.maximal) qf.elements.push_back(vec_sub(b, ext_sum));
    std::sort(qf.elements.begin(), qf.elements.end());
    qf.type = ap.maximal.size();
    return qf;
}

inline QuasiFrobenius quasi_frobenius(const AffineSemigroup& s) {
    return quasi_frobenius(s, apery(s));
}

// Indices of generators that are N-combinations of the other generators.
// Such inputs are accepted (a warning is surfaced in reports) but the ring
// verdicts are computed on the reduced list.
inline std::vector<std::size_t> redundant_generators(const AffineSemigroup& s) {
    std::vector<std::size_t> out;
    if (s.ngens() == 1) return out;
    for (std::size_t i = 0; i < s.ngens(); ++i) {
        AffineSemigroup rest;
        rest.dim = s.dim;
        for (std::size_t j = 0; j < s.ngens(); ++j)
            if (j != i) rest.generators.push_back(s.generators[j]);
        if (member(rest, s.generators[i])) out.push_back(i);
    }
    return out;
}

// Drops redundant generators one at a time (largest index first) until the
// list is minimal. The semigroup is unchanged as a set.
inline AffineSemigroup minimalized(AffineSemigroup s) {
    s.extremal.reset();
    while (true) {
        auto red = redundant_generators(s);
        if (red.empty()) return s;
        s.generators.erase(s.generators.begin() + static_cast<std::ptrdiff_t>(red.back()));
    }
}

// The order used throughout for I(S): degrevlex ranking the non-extremal
// variables above the extremal ones (each block by descending input
// position). For a generator list ordered extremal-first with the
// homogenizing generator last this is exactly degrevlex z1 < z2 < ... .
inline MonomialOrder canonical_order(const AffineSemigroup& s) {
    SEMICM_CHECK(s.extremal.has_value(), "canonical_order: extremal rays not set");
    std::vector<std::size_t> ranking;
    const auto free_idx = s.non_extremal_indices();
    for (auto it = free_idx.rbegin(); it != free_idx.rend(); ++it) ranking.push_back(*it);
    for (auto it = s.extremal->rbegin(); it != s.extremal->rend(); ++it) ranking.push_back(*it);
    return degrevlex_ranked(std::move(ranking));
}

}  // namespace semicm
