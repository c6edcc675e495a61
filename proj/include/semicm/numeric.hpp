#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace semicm {

// Exact arbitrary-precision scalars. Everything in the library is computed
// over these; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense integer vector: exponent vectors, semigroup elements, lattice points.
using IntVec = std::vector<Int>;

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct domination_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct grading_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// An internal_error signals a broken invariant of the engine itself, never a
// bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

#define SEMICM_CHECK(cond, msg)                       \
    do {                                              \
        if (!(cond)) throw ::semicm::internal_error(msg); \
    } while (0)

inline void require_same_size(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw dimension_error("vector length mismatch: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()));
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
    require_same_size(a, b);
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    require_same_size(a, b);
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec vec_scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool vec_is_zero(const IntVec& a) {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

inline bool vec_nonneg(const IntVec& a) {
    for (const Int& x : a)
        if (x < 0) return false;
    return true;
}

// componentwise a <= b
inline bool vec_le(const IntVec& a, const IntVec& b) {
    require_same_size(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Int vec_sum(const IntVec& a) {
    Int s = 0;
    for (const Int& x : a) s += x;
    return s;
}

inline Int vec_content(const IntVec& a) {
    Int g = 0;
    for (const Int& x : a) g = boost::multiprecision::gcd(g, x);
    return g;  // 0 for the zero vector
}

inline std::size_t to_size(const Int& x, const char* what = "value") {
    if (x < 0 || x > Int(1) << 40)
        throw bound_error(std::string(what) + " out of addressable range");
    return static_cast<std::size_t>(static_cast<unsigned long long>(x));
}

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rat& x) {
    if (boost::multiprecision::denominator(x) == 1)
        return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

// Optional wall-clock budget, installed per invocation by the CLI. Checked
// inside the long-running engine loops; never affects results, only aborts.
namespace budget {

inline thread_local std::chrono::steady_clock::time_point deadline_{};
inline thread_local bool enabled_ = false;

inline void set_deadline_after(std::chrono::milliseconds ms) {
    deadline_ = std::chrono::steady_clock::now() + ms;
    enabled_ = true;
}
inline void clear() { enabled_ = false; }
inline void check() {
    if (enabled_ && std::chrono::steady_clock::now() > deadline_)
        throw budget_error("computation budget exceeded");
}

}  // namespace budget

}  // namespace semicm
