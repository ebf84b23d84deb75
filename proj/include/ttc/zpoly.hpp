#pragma once

#include <cstdint>
#include <vector>

#include "ttc/modarith.hpp"

// Raw polynomial arithmetic over F_p on coefficient vectors (lowest degree
// first, no trailing zeros).  Backs the extension-field arithmetic and the
// irreducibility machinery; the generic Poly class sits on top of Field.
namespace ttc::zp {

using Z = std::vector<u64>;

inline void trim(Z& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Z& a) { return static_cast<int>(a.size()) - 1; }

inline Z add(const Z& a, const Z& b, u64 p) {
    Z r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = addmod(x, y, p);
    }
    trim(r);
    return r;
}

inline Z sub(const Z& a, const Z& b, u64 p) {
    Z r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = submod(x, y, p);
    }
    trim(r);
    return r;
}

inline Z mul(const Z& a, const Z& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Z r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

// Remainder of a modulo monic-up-to-unit divisor m (deg m >= 1).
inline Z mod(Z a, const Z& m, u64 p) {
    u64 lead_inv = invmod(m.back(), p);
    while (deg(a) >= deg(m)) {
        u64 c = mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = submod(a[shift + i], mulmod(c, m[i], p), p);
        trim(a);
    }
    return a;
}

inline Z mulmod_poly(const Z& a, const Z& b, const Z& m, u64 p) {
    return mod(mul(a, b, p), m, p);
}

inline Z powmod_poly(Z base, u64 e, const Z& m, u64 p) {
    Z r = {1 % p};
    base = mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = mulmod_poly(r, base, m, p);
        base = mulmod_poly(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline Z make_monic(Z a, u64 p) {
    if (a.empty()) return a;
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

inline Z gcd(Z a, Z b, u64 p) {
    while (!b.empty()) {
        Z r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

// Inverse of a modulo m in F_p[x] (extended Euclid); a nonzero mod m,
// gcd(a, m) = 1 required (m irreducible in our use).
inline Z invmod_poly(const Z& a, const Z& m, u64 p) {
    Z r0 = m, r1 = mod(a, m, p);
    Z t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        Z q;
        Z rem = r0;
        u64 lead_inv = invmod(r1.back(), p);
        if (deg(rem) >= deg(r1)) q.assign(rem.size() - r1.size() + 1, 0);
        while (deg(rem) >= deg(r1)) {
            u64 c = mulmod(rem.back(), lead_inv, p);
            std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = submod(rem[shift + i], mulmod(c, r1[i], p), p);
            trim(rem);
        }
        Z nt = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(rem);
        t0 = std::move(t1); t1 = std::move(nt);
    }
    // r0 = gcd (constant for coprime inputs); scale t0 by its inverse
    u64 s = invmod(r0.empty() ? 1 : r0[0], p);
    Z out = t0;
    for (auto& c : out) c = mulmod(c, s, p);
    trim(out);
    return mod(std::move(out), m, p);
}

// Irreducibility over F_p: f (monic, deg d >= 1) is irreducible iff it has no
// irreducible factor of degree <= d/2, which is exactly what the
// distinct-degree gcd test below certifies: gcd(x^{p^i} - x, f) = 1 for all
// i <= d/2.
inline bool is_irreducible(const Z& f, u64 p) {
    int d = deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    Z x = {0, 1};
    Z h = mod(x, f, p);
    for (int i = 1; i <= d / 2; ++i) {
        h = powmod_poly(h, p, f, p);  // h = x^{p^i} mod f
        Z g = gcd(sub(h, x, p), f, p);
        if (deg(g) > 0) return false;
    }
    return true;
}

}  // namespace ttc::zp
