#include <catch2/catch_amalgamated.hpp>
#include <semicm/semicm.hpp>

#include <algorithm>
#include <random>

#include "support/oracles.hpp"

using namespace semicm;

namespace {
IntVec iv(std::initializer_list<int> xs) {
    IntVec v;
    for (int x : xs) v.push_back(Int(x));
    return v;
}

Monomial mono(std::initializer_list<int> exps) { return Monomial(iv(exps)); }

AffineSemigroup numerical(std::initializer_list<int> ns) {
    AffineSemigroup s;
    s.dim = 1;
    for (int n : ns) s.generators.push_back(iv({n}));
    s.validate();
    return s;
}
}  // namespace

TEST_CASE("free semigroups have the zero ideal") {
    auto s = make_simplicial(make_semigroup(2, {iv({1, 0}), iv({0, 1})}));
    const auto ideal = toric_ideal(s);
    CHECK(ideal.gens.empty());
    CHECK(minimalize(ideal, canonical_order(s)).mu == 0);
}

TEST_CASE("defining ideal of <3,4,5>") {
    auto s = make_simplicial(numerical({3, 4, 5}));
    const MonomialOrder o = canonical_order(s);
    const auto ideal = toric_ideal(s);
    const auto min = minimalize(ideal, o);
    CHECK(min.mu == 3);
    const std::vector<Polynomial> expect{
        Polynomial::monomial_diff(mono({0, 2, 0}), mono({1, 0, 1}), o),  // z2^2 - z1 z3
        Polynomial::monomial_diff(mono({2, 1, 0}), mono({0, 0, 2}), o),  // z1^2 z2 - z3^2
        Polynomial::monomial_diff(mono({3, 0, 0}), mono({0, 1, 1}), o),  // z1^3 - z2 z3
    };
    auto got = min.gens;
    auto norm = [](std::vector<Polynomial>& v) {
        std::sort(v.begin(), v.end(), [](const Polynomial& a, const Polynomial& b) {
            return a.leading_monomial().e < b.leading_monomial().e;
        });
    };
    auto want = expect;
    norm(got);
    norm(want);
    CHECK(got == want);
}

TEST_CASE("defining ideal of <(2,0),(0,2),(1,1)>") {
    auto s = make_simplicial(make_semigroup(2, {iv({2, 0}), iv({0, 2}), iv({1, 1})}));
    const MonomialOrder o = canonical_order(s);
    const auto min = minimalize(toric_ideal(s), o);
    REQUIRE(min.mu == 1);
    CHECK(min.gens[0] == Polynomial::monomial_diff(mono({0, 0, 2}), mono({1, 1, 0}), o));
}

TEST_CASE("every generator satisfies the exponent identity") {
    auto s = make_simplicial(make_semigroup(
        2, {iv({3, 1}), iv({2, 2}), iv({1, 3}), iv({0, 4}), iv({4, 0})}));
    const auto ideal = toric_ideal(s);
    for (const auto& f : ideal.gens) {
        CHECK(f.is_monic_binomial());
        CHECK(is_gamma_homogeneous(f, ideal.grading));
    }
}

TEST_CASE("saturation is idempotent") {
    for (auto s : {make_simplicial(numerical({3, 4, 5})),
                   make_simplicial(numerical({8, 15, 21}))}) {
        const auto ideal = toric_ideal(s);
        IntVec weights;
        for (const auto& g : s.generators) weights.push_back(vec_sum(g));
        // no element of a weighted reduced basis with z_i least retains a z_i
        // factor
        for (std::size_t i = 0; i < ideal.nvars; ++i) {
            std::vector<std::size_t> ranking;
            for (std::size_t v = ideal.nvars; v-- > 0;)
                if (v != i) ranking.push_back(v);
            ranking.push_back(i);
            const auto g = reduced_gb(ideal.gens, degrevlex_ranked(ranking, weights));
            for (const auto& f : g.elements) {
                Int least = f.terms()[0].mono.e[i];
                for (const auto& t : f.terms()) least = std::min(least, t.mono.e[i]);
                CHECK(least == 0);
            }
        }
    }
}

TEST_CASE("the saturation recovers relations plain degrevlex misses") {
    // 9*8 = 2*15 + 2*21: z1^9 - z2^2 z3^2 lies in the ideal of <8,15,21>
    auto s = make_simplicial(numerical({8, 15, 21}));
    const MonomialOrder o = canonical_order(s);
    const auto g = reduced_gb(toric_ideal(s).gens, o);
    const Polynomial rel = Polynomial::monomial_diff(
        Monomial(IntVec{Int(9), Int(0), Int(0)}), Monomial(IntVec{Int(0), Int(2), Int(2)}), o);
    CHECK(normal_form(rel, g).is_zero());
}

TEST_CASE("completeness: every small relation reduces to zero") {
    std::vector<AffineSemigroup> cases;
    cases.push_back(make_simplicial(numerical({3, 4, 5})));
    cases.push_back(make_simplicial(make_semigroup(2, {iv({2, 0}), iv({0, 2}), iv({1, 1})})));
    cases.push_back(make_simplicial(
        make_semigroup(2, {iv({3, 1}), iv({2, 2}), iv({1, 3}), iv({0, 4}), iv({4, 0})})));
    for (const auto& s : cases) {
        const MonomialOrder o = canonical_order(s);
        const auto g = reduced_gb(toric_ideal(s).gens, o);
        for (const auto& rel : oracles::brute_binomial_relations(s, 6, o))
            REQUIRE(normal_form(rel, g).is_zero());
    }
}

TEST_CASE("mu of the pentagon ideal is six") {
    auto s = make_simplicial(make_semigroup(
        2, {iv({3, 1}), iv({2, 2}), iv({1, 3}), iv({0, 4}), iv({4, 0})}));
    const auto min = minimalize(toric_ideal(s), canonical_order(s));
    CHECK(min.mu == 6);  // the minors of the 2x4 Hankel matrix are independent
    // dropping test: removing any single generator loses the ideal
    const MonomialOrder o = canonical_order(s);
    for (std::size_t drop = 0; drop < min.gens.size(); ++drop) {
        std::vector<Polynomial> rest;
        for (std::size_t j = 0; j < min.gens.size(); ++j)
            if (j != drop) rest.push_back(min.gens[j]);
        CHECK(!normal_form(min.gens[drop], reduced_gb(rest, o)).is_zero());
    }
}

TEST_CASE("mu agrees with the graded dimension-count oracle") {
    std::vector<AffineSemigroup> cases;
    cases.push_back(make_simplicial(numerical({3, 4, 5})));
    cases.push_back(make_simplicial(numerical({4, 6, 9})));
    cases.push_back(make_simplicial(make_semigroup(2, {iv({2, 0}), iv({0, 2}), iv({1, 1})})));
    for (const auto& s : cases) {
        const MonomialOrder o = canonical_order(s);
        const auto min = minimalize(toric_ideal(s), o);
        // candidate degrees: those of all small relations (covers every
        // minimal generator degree at this scale)
        std::set<IntVec> degrees;
        for (const auto& rel : oracles::brute_binomial_relations(s, 7, o))
            degrees.insert(gamma_degree(rel, s.generators));
        const std::size_t mu = oracles::mu_dimension_oracle(
            s, std::vector<IntVec>(degrees.begin(), degrees.end()));
        CHECK(min.mu == mu);
    }
}

TEST_CASE("mu is invariant under generator permutation") {
    const std::vector<IntVec> gens{iv({3, 1}), iv({2, 2}), iv({1, 3}), iv({0, 4}), iv({4, 0})};
    std::mt19937 rng(3);
    std::vector<IntVec> shuffled = gens;
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto s = make_simplicial(make_semigroup(2, shuffled));
        CHECK(minimalize(toric_ideal(s), canonical_order(s)).mu == 6);
    }
}

TEST_CASE("minimalize rejects non-homogeneous input") {
    const MonomialOrder o = degrevlex(2);
    BinomialIdeal ideal;
    ideal.nvars = 2;
    ideal.grading = {iv({2}), iv({3})};
    ideal.gens = {Polynomial::monomial_diff(mono({1, 0}), mono({0, 1}), o)};
    CHECK_THROWS_AS(minimalize(ideal, o), grading_error);
}
