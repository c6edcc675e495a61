#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "numeric.hpp"

namespace semicm {

struct Term {
    Monomial mono;
    Rat coeff;
};

// Sparse polynomial with exact rational coefficients. Terms are kept in
// strictly descending monomial order with respect to the order the value was
// built with; no zero coefficients, no duplicate monomials. Binomials (a
// difference of two monomials) are the dominant case in this library but
// nothing here assumes it.
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }

    static Polynomial from_terms(std::vector<Term> terms, const MonomialOrder& order) {
        std::map<Monomial, Rat, MonomialLess> acc{MonomialLess{&order}};
        for (auto& t : terms) {
            auto [it, fresh] = acc.emplace(std::move(t.mono), t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        Polynomial p;
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0) p.terms_.push_back(Term{it->first, it->second});
        return p;
    }

    static Polynomial monomial_diff(Monomial a, Monomial b, const MonomialOrder& order) {
        return from_terms({Term{std::move(a), Rat(1)}, Term{std::move(b), Rat(-1)}}, order);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading() const {
        SEMICM_CHECK(!terms_.empty(), "leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading().mono; }
    const Rat& leading_coeff() const { return leading().coeff; }

    // two terms with coefficients {1, -1}: the shape of toric relations
    bool is_monic_binomial() const {
        return terms_.size() == 2 && terms_[0].coeff == 1 && terms_[1].coeff == -1;
    }

    Polynomial monic() const {
        if (terms_.empty()) return *this;
        Polynomial p = *this;
        const Rat lc = p.terms_.front().coeff;
        for (auto& t : p.terms_) t.coeff /= lc;
        return p;
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    std::vector<Term> terms_;
};

inline Polynomial add(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    std::vector<Term> ts;
    ts.reserve(f.size() + g.size());
    ts.insert(ts.end(), f.terms().begin(), f.terms().end());
    ts.insert(ts.end(), g.terms().begin(), g.terms().end());
    return Polynomial::from_terms(std::move(ts), order);
}

inline Polynomial scale(const Rat& c, const Polynomial& f, const MonomialOrder& order) {
    if (c == 0) return Polynomial::zero();
    std::vector<Term> ts = f.terms();
    for (auto& t : ts) t.coeff *= c;
    return Polynomial::from_terms(std::move(ts), order);
}

inline Polynomial sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    return add(f, scale(Rat(-1), g, order), order);
}

// f - c * m * g, the division step
inline Polynomial sub_mul(const Polynomial& f, const Rat& c, const Monomial& m,
                          const Polynomial& g, const MonomialOrder& order) {
    std::vector<Term> ts = f.terms();
    ts.reserve(ts.size() + g.size());
    for (const Term& t : g.terms()) ts.push_back(Term{t.mono * m, -c * t.coeff});
    return Polynomial::from_terms(std::move(ts), order);
}

inline Polynomial mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    std::vector<Term> ts;
    ts.reserve(f.size() * g.size());
    for (const Term& a : f.terms())
        for (const Term& b : g.terms()) ts.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
    return Polynomial::from_terms(std::move(ts), order);
}

// ---- rendering -------------------------------------------------------------

inline std::string render(const Monomial& m, const std::vector<std::string>& names) {
    SEMICM_CHECK(m.nvars() == names.size(), "render: name count mismatch");
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m.e[i] != 1) s += "^" + m.e[i].str();
    }
    return s.empty() ? "1" : s;
}

inline std::string render(const Polynomial& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Term& t = f.terms()[i];
        Rat c = t.coeff;
        if (i == 0) {
            if (c < 0) { s += "-"; c = -c; }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        const std::string mono = render(t.mono, names);
        if (c != 1)
            s += to_string(c) + (mono == "1" ? "" : "*" + mono);
        else
            s += mono;
    }
    return s;
}

inline std::vector<std::string> variable_names(std::size_t n, const std::string& stem,
                                               std::size_t start = 1) {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(start + i));
    return v;
}

}  // namespace semicm
