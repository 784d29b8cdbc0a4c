#pragma once

/**
 * @file cn_criterion.hpp
 * @brief Equational witness search for completely normal spectra.
 *
 * A ring has a completely normal spectrum iff for all s, a there are x, x'
 * and k >= 1 with (s^k - x*s*a) * (s^k - x'*(s^2 - s*a)) = 0. The witness
 * search scans k = 1..|ring|: the power sequence of s enters a cycle within
 * |ring| steps, so larger exponents produce no new values of s^k. A failure
 * at the bound is reported as a failure value, never extended silently.
 */

#include <optional>
#include <vector>

#include "specwb/common.hpp"
#include "specwb/ring.hpp"

namespace specwb {

struct CnWitness {
    int s = 0;
    int a = 0;
    int x = 0;
    int x_prime = 0;
    int k = 1;
};

/// Recomputes (s^k - x*s*a)(s^k - x'*(s^2 - s*a)) from scratch; used to
/// re-check witnesses independently of the search loop.
inline int cn_expr_value(const FiniteRing& r, const CnWitness& w) {
    int sk = r.pow(w.s, w.k);
    int sa = r.mul(w.s, w.a);
    int left = r.sub(sk, r.mul(w.x, sa));
    int right = r.sub(sk, r.mul(w.x_prime, r.sub(r.mul(w.s, w.s), sa)));
    return r.mul(left, right);
}

/// Smallest-k witness for one (s, a) pair, scanning k then x then x'.
inline std::optional<CnWitness> cn_witness(const FiniteRing& r, int s, int a) {
    const int sa = r.mul(s, a);
    const int s2_minus_sa = r.sub(r.mul(s, s), sa);
    int sk = s;  // s^k, k = 1
    for (int k = 1; k <= r.n; ++k) {
        for (int x = 0; x < r.n; ++x) {
            const int left = r.sub(sk, r.mul(x, sa));
            for (int xp = 0; xp < r.n; ++xp) {
                const int right = r.sub(sk, r.mul(xp, s2_minus_sa));
                if (r.mul(left, right) == r.zero) return CnWitness{s, a, x, xp, k};
            }
        }
        sk = r.mul(sk, s);
    }
    return std::nullopt;
}

struct CnTable {
    bool completely_normal = false;
    std::vector<CnWitness> witnesses;            // one per (s, a) when successful
    std::optional<std::pair<int, int>> failed;   // (s, a) with no witness up to the bound
    int k_bound = 0;                             // the exhausted exponent bound on failure
};

/// Witness table over every (s, a) pair. True iff every pair has a witness.
inline CnTable cn_equational(const FiniteRing& r, const Caps& caps = {}) {
    if (r.n > caps.cn_equational_max)
        throw cap_error("cn_equational: ring size " + std::to_string(r.n) + " exceeds cap " +
                        std::to_string(caps.cn_equational_max));
    CnTable out;
    out.witnesses.reserve((std::size_t)r.n * r.n);
    for (int s = 0; s < r.n; ++s)
        for (int a = 0; a < r.n; ++a) {
            auto w = cn_witness(r, s, a);
            if (!w) {
                out.completely_normal = false;
                out.witnesses.clear();
                out.failed = {s, a};
                out.k_bound = r.n;
                return out;
            }
            out.witnesses.push_back(*w);
        }
    out.completely_normal = true;
    return out;
}

}  // namespace specwb
