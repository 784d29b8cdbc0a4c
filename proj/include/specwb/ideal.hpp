#pragma once

/**
 * @file ideal.hpp
 * @brief The ideal lattice of a finite ring: generation, radicals, primes.
 *
 * Ideals are element masks over a fixed ambient ring. The complete lattice
 * is computed as the join-closure (under ideal sum) of the principal
 * ideals: every ideal of a finite ring is a finite sum of principal ones,
 * so the closure finds exactly the fixed points of ideal_generated and the
 * cost is proportional to the lattice size rather than 2^n.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "specwb/common.hpp"
#include "specwb/ring.hpp"

namespace specwb {

/// Smallest ideal containing gens: closure under addition and ambient
/// multiplication.
inline ElemMask ideal_generated(const FiniteRing& r, ElemMask gens) {
    ElemMask m = gens | bit(r.zero);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a : mask_elements(m)) {
            for (int b : mask_elements(m)) {
                int s = r.add(a, b);
                if (!has(m, s)) {
                    m |= bit(s);
                    grew = true;
                }
            }
            for (int x = 0; x < r.n; ++x) {
                int p = r.mul(x, a);
                if (!has(m, p)) {
                    m |= bit(p);
                    grew = true;
                }
            }
        }
    }
    return m;
}

inline ElemMask principal_ideal(const FiniteRing& r, int a) {
    return ideal_generated(r, bit(a));
}

/// Sum of two ideals; the additive closure of their union suffices since
/// absorption is inherited.
inline ElemMask ideal_sum(const FiniteRing& r, ElemMask i, ElemMask j) {
    return ideal_generated(r, i | j);
}

/// The complete ideal lattice, sorted by (size, mask). Includes {0} and r.
inline std::vector<ElemMask> enumerate_ideals(const FiniteRing& r, const Caps& caps = {}) {
    if (r.n > caps.ideal_lattice_max)
        throw cap_error("enumerate_ideals: ring size " + std::to_string(r.n) + " exceeds cap " +
                        std::to_string(caps.ideal_lattice_max));
    std::vector<ElemMask> lattice;
    auto insert = [&](ElemMask m) {
        if (std::find(lattice.begin(), lattice.end(), m) == lattice.end()) {
            lattice.push_back(m);
            return true;
        }
        return false;
    };
    for (int a = 0; a < r.n; ++a) insert(principal_ideal(r, a));
    for (std::size_t i = 0; i < lattice.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) insert(ideal_sum(r, lattice[i], lattice[j]));

    std::sort(lattice.begin(), lattice.end(), [](ElemMask a, ElemMask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return lattice;
}

/// rad(I) = {a : a^k in I for some k >= 1}. Membership per element by
/// iterating powers until a repeat; the power sequence of a cycles within
/// |ring| steps, so the scan is exact.
inline ElemMask radical(const FiniteRing& r, ElemMask ideal) {
    ElemMask rad = 0;
    for (int a = 0; a < r.n; ++a) {
        ElemMask seen = 0;
        int v = a;
        while (!has(seen, v)) {
            if (has(ideal, v)) {
                rad |= bit(a);
                break;
            }
            seen |= bit(v);
            v = r.mul(v, a);
        }
    }
    return rad;
}

/// Proper, and ab in I implies a in I or b in I (full double scan).
inline bool is_prime_ideal(const FiniteRing& r, ElemMask ideal) {
    if (ideal == r.all_mask()) return false;
    for (int a = 0; a < r.n; ++a) {
        if (has(ideal, a)) continue;
        for (int b = 0; b <= a; ++b) {
            if (has(ideal, b)) continue;
            if (has(ideal, r.mul(a, b))) return false;
        }
    }
    return true;
}

/// Proper, and no ideal strictly between it and the ring (checked against
/// the enumerated lattice).
inline bool is_maximal_ideal(const FiniteRing& r, ElemMask ideal, const Caps& caps = {}) {
    if (ideal == r.all_mask()) return false;
    for (ElemMask j : enumerate_ideals(r, caps))
        if (ideal != j && j != r.all_mask() && subset(ideal, j)) return false;
    return true;
}

/// All prime ideals, sorted by (size, mask).
inline std::vector<ElemMask> spectrum(const FiniteRing& r, const Caps& caps = {}) {
    std::vector<ElemMask> primes;
    for (ElemMask i : enumerate_ideals(r, caps))
        if (is_prime_ideal(r, i)) primes.push_back(i);
    return primes;
}

inline std::vector<ElemMask> maximal_spectrum(const FiniteRing& r, const Caps& caps = {}) {
    std::vector<ElemMask> maxes;
    for (ElemMask i : enumerate_ideals(r, caps))
        if (is_maximal_ideal(r, i, caps)) maxes.push_back(i);
    return maxes;
}

/// Primes minimal under inclusion.
inline std::vector<ElemMask> minimal_spectrum(const FiniteRing& r, const Caps& caps = {}) {
    std::vector<ElemMask> primes = spectrum(r, caps);
    std::vector<ElemMask> mins;
    for (ElemMask p : primes) {
        bool minimal = true;
        for (ElemMask q : primes)
            if (q != p && subset(q, p)) {
                minimal = false;
                break;
            }
        if (minimal) mins.push_back(p);
    }
    return mins;
}

inline ElemMask nilradical(const FiniteRing& r) { return radical(r, bit(r.zero)); }

/// Intersection of all maximal ideals.
inline ElemMask jacobson_radical(const FiniteRing& r, const Caps& caps = {}) {
    ElemMask j = r.all_mask();
    for (ElemMask m : maximal_spectrum(r, caps)) j &= m;
    return j;
}

/// O_M: intersection of all primes contained in the maximal ideal m.
inline ElemMask om_ideal(const FiniteRing& r, ElemMask m, const Caps& caps = {}) {
    if (!is_maximal_ideal(r, m, caps))
        throw std::invalid_argument("om_ideal: input ideal is not maximal in " + r.name);
    ElemMask om = m;  // m itself is prime and contained in m
    for (ElemMask p : spectrum(r, caps))
        if (subset(p, m)) om &= p;
    return om;
}

/// Every prime lies in a unique maximal ideal. (True for every finite
/// commutative ring; computed honestly from the lattice.)
inline bool is_pm_ring(const FiniteRing& r, const Caps& caps = {}) {
    auto maxes = maximal_spectrum(r, caps);
    for (ElemMask p : spectrum(r, caps)) {
        int over = 0;
        for (ElemMask m : maxes)
            if (subset(p, m)) ++over;
        if (over != 1) return false;
    }
    return true;
}

/// Ideal rendered as its sorted element list, e.g. "{0,2,4}".
inline std::string ideal_to_string(ElemMask m) {
    std::string s = "{";
    bool first = true;
    for (int e : mask_elements(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

}  // namespace specwb
