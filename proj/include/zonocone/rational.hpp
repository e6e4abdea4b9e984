#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zonocone {

using Rat = mpq_class;
using Int = mpz_class;
using QVec = std::vector<Rat>;
using IVec = std::vector<Int>;

/// Thrown when a computation would exceed a configured effort cap.
/// The CLI maps this to exit code 3.
struct effort_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scale a rational vector to coprime integers, keeping its orientation.
/// The zero vector maps to itself.
inline IVec primitive_direction(std::span<const Rat> v) {
    Int den = 1;
    for (const Rat& x : v) den = lcm(den, x.get_den());
    IVec out;
    out.reserve(v.size());
    Int g = 0;
    for (const Rat& x : v) {
        Int num = x.get_num() * (den / x.get_den());
        g = gcd(g, num);
        out.push_back(std::move(num));
    }
    if (g != 0)
        for (Int& x : out) x /= g;
    return out;
}

inline IVec primitive_direction(std::span<const Int> v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    IVec out(v.begin(), v.end());
    if (g != 0 && g != 1)
        for (Int& x : out) x /= g;
    return out;
}

/// Canonical rational from a numerator/denominator pair. mpq_class leaves
/// two-argument constructions uncanonicalized, which breaks its arithmetic;
/// route fraction literals through here.
inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "p", "-p" or "p/q" with q > 0 after canonicalization.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace zonocone
