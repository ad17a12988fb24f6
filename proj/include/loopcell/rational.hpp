#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace loopcell {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rat>;

// Raised when a theorem-backed internal invariant fails (a bug, not bad input).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Canonical "p/q" form, lowest terms, positive denominator.
inline std::string rat_str(const Rat& q) {
    return rat_num(q).str() + "/" + rat_den(q).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rat parse_rat(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
}

inline bool in_open_unit(const Rat& q) { return q > 0 && q < 1; }

inline bool in_open_unit(const Vec& v) {
    for (const auto& c : v)
        if (!in_open_unit(c))
            return false;
    return true;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// sup-norm distance between equal-length vectors
inline Rat sup_dist(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("sup_dist: dimension mismatch");
    Rat best = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        Rat d = rat_abs(a[i] - b[i]);
        if (d > best)
            best = d;
    }
    return best;
}

inline Rat sq_norm(const Vec& v) {
    Rat s = 0;
    for (const auto& c : v)
        s += c * c;
    return s;
}

// Smallest non-negative integer M with M*M >= q.
inline Int ceil_isqrt(const Rat& q) {
    if (q <= 0)
        return 0;
    Int n = rat_num(q), d = rat_den(q);
    Int c = n / d + (n % d == 0 ? 0 : 1);   // ceil(q)
    Int r = boost::multiprecision::sqrt(c); // floor of sqrt(ceil(q))
    if (Rat(r * r) >= q)
        return r;
    return r + 1;
}

}  // namespace loopcell
