#pragma once

// Test-only oracles, independent of the library's computation paths.
// Expected values in the suites are produced or cross-checked by these
// brute-force routes, never by the code under test.

#include <algorithm>
#include <numeric>
#include <vector>

#include "specwb/ring.hpp"
#include "specwb/topology.hpp"

namespace oracles {

using specwb::ElemMask;
using specwb::FiniteRing;
using specwb::SpectralSpace;

// Exhaustive ring-isomorphism search over permutations fixing 0 and 1.
// Any isomorphism must match zero and one, so this is complete. n <= 8.
inline bool brute_isomorphic(const FiniteRing& r1, const FiniteRing& r2) {
    if (r1.n != r2.n) return false;
    const int n = r1.n;
    if (n > 8) throw std::logic_error("brute_isomorphic oracle capped at 8 elements");
    std::vector<int> others1, others2;
    for (int i = 0; i < n; ++i)
        if (i != r1.zero && i != r1.one) others1.push_back(i);
    for (int i = 0; i < n; ++i)
        if (i != r2.zero && i != r2.one) others2.push_back(i);
    if (others1.size() != others2.size()) return false;

    std::sort(others2.begin(), others2.end());
    do {
        std::vector<int> map(n, -1);
        map[r1.zero] = r2.zero;
        map[r1.one] = r2.one;
        for (std::size_t i = 0; i < others1.size(); ++i) map[others1[i]] = others2[i];
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (map[r1.add(a, b)] != r2.add(map[a], map[b]) ||
                    map[r1.mul(a, b)] != r2.mul(map[a], map[b]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(others2.begin(), others2.end()));
    return false;
}

// A unital homomorphism out of Z_n is forced to be k -> k * 1, so r is
// isomorphic to Z_n exactly when that single map is a bijective
// homomorphism. Works at any size.
inline bool isomorphic_to_zn(int n, const FiniteRing& r) {
    if (r.n != n) return false;
    std::vector<int> map(n);
    map[0] = r.zero;
    for (int k = 1; k < n; ++k) map[k] = r.add(map[k - 1], r.one);
    std::vector<bool> hit(n, false);
    for (int v : map) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (map[(a + b) % n] != r.add(map[a], map[b])) return false;
            if (map[(a * b) % n] != r.mul(map[a], map[b])) return false;
        }
    return true;
}

inline void sort_by_size(std::vector<ElemMask>& v) {
    std::sort(v.begin(), v.end(), [](ElemMask a, ElemMask b) {
        int pa = specwb::popcount(a), pb = specwb::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
}

// Every subset scanned against the ideal axioms. n <= 12.
inline std::vector<ElemMask> brute_ideals(const FiniteRing& r) {
    if (r.n > 12) throw std::logic_error("brute_ideals oracle capped at 12 elements");
    std::vector<ElemMask> out;
    for (ElemMask m = 0; m < (ElemMask{1} << r.n); ++m) {
        if (!specwb::has(m, r.zero)) continue;
        bool ok = true;
        for (int a = 0; a < r.n && ok; ++a) {
            if (!specwb::has(m, a)) continue;
            for (int b = 0; b < r.n && ok; ++b) {
                if (specwb::has(m, b) && !specwb::has(m, r.add(a, b))) ok = false;
                if (!specwb::has(m, r.mul(b, a))) ok = false;
            }
        }
        if (ok) out.push_back(m);
    }
    sort_by_size(out);
    return out;
}

// Every subset scanned against the unital-subring axioms. n <= 12.
inline std::vector<ElemMask> brute_subrings(const FiniteRing& r) {
    if (r.n > 12) throw std::logic_error("brute_subrings oracle capped at 12 elements");
    std::vector<ElemMask> out;
    for (ElemMask m = 0; m < (ElemMask{1} << r.n); ++m) {
        if (!specwb::has(m, r.zero) || !specwb::has(m, r.one)) continue;
        bool ok = true;
        for (int a = 0; a < r.n && ok; ++a) {
            if (!specwb::has(m, a)) continue;
            if (!specwb::has(m, r.neg(a))) ok = false;
            for (int b = 0; b < r.n && ok; ++b)
                if (specwb::has(m, b) &&
                    (!specwb::has(m, r.add(a, b)) || !specwb::has(m, r.mul(a, b))))
                    ok = false;
        }
        if (ok) out.push_back(m);
    }
    sort_by_size(out);
    return out;
}

// Radical membership with a fresh power loop per exponent; powers of an
// element repeat within n steps, so k <= n is exact.
inline ElemMask brute_radical(const FiniteRing& r, ElemMask ideal) {
    ElemMask rad = 0;
    for (int a = 0; a < r.n; ++a)
        for (int k = 1; k <= r.n; ++k)
            if (specwb::has(ideal, r.pow(a, k))) {
                rad |= specwb::bit(a);
                break;
            }
    return rad;
}

inline std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        bool prime = p >= 2;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (prime) out.push_back(p);
    }
    return out;
}

// pZ_n as an element mask of Z_n.
inline ElemMask multiples_mask(int p, int n) {
    ElemMask m = 0;
    for (int k = 0; k < n; k += p) m |= specwb::bit(k);
    return m;
}

// Labeled posets counted by scanning every off-diagonal relation pattern
// for reflexive + antisymmetric + transitive. n <= 4.
inline long long brute_poset_count(int n) {
    if (n > 4) throw std::logic_error("brute_poset_count oracle capped at 4 points");
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) cells.push_back({i, j});
    long long count = 0;
    for (ElemMask pattern = 0; pattern < (ElemMask{1} << cells.size()); ++pattern) {
        bool leq[4][4] = {};
        for (int i = 0; i < n; ++i) leq[i][i] = true;
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (specwb::has(pattern, (int)c)) leq[cells[c].first][cells[c].second] = true;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (i != j && leq[i][j] && leq[j][i]) ok = false;
                for (int k = 0; k < n && ok; ++k)
                    if (leq[i][j] && leq[j][k] && !leq[i][k]) ok = false;
            }
        if (ok) ++count;
    }
    return count;
}

// Order-theoretic routes for the separation predicates, independent of the
// subset searches in the library:
//  - normality of a finite Alexandrov space reduces to: any two points with
//    a common lower bound have a common upper bound (specialize closed sets
//    to point closures one way; lift pairwise witnesses the other way);
//  - complete normality reduces to: incomparable points have no common
//    lower bound (separated sets are exactly the all-pairs-incomparable
//    ones, and minimal open neighborhoods decide disjointness).
inline bool pairwise_normal(const SpectralSpace& s) {
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < x; ++y)
            if ((s.down[x] & s.down[y]) != 0 && (s.up[x] & s.up[y]) == 0) return false;
    return true;
}

inline bool pairwise_completely_normal(const SpectralSpace& s) {
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < x; ++y) {
            if (s.leq(x, y) || s.leq(y, x)) continue;
            if ((s.down[x] & s.down[y]) != 0) return false;
        }
    return true;
}

// Fully literal separation checks: scan every pair of open sets for the
// disjoint neighborhoods instead of using minimal open hulls. n <= 4.
inline bool literal_normal(const SpectralSpace& s) {
    if (s.n > 4) throw std::logic_error("literal_normal oracle capped at 4 points");
    std::vector<ElemMask> opens;
    for (ElemMask m = 0; m < (ElemMask{1} << s.n); ++m)
        if (specwb::is_open_set(s, m)) opens.push_back(m);
    for (ElemMask c1 = 0; c1 < (ElemMask{1} << s.n); ++c1) {
        if (!specwb::is_closed_set(s, c1)) continue;
        for (ElemMask c2 = 0; c2 < (ElemMask{1} << s.n); ++c2) {
            if (!specwb::is_closed_set(s, c2) || (c1 & c2) != 0) continue;
            bool separated_by_opens = false;
            for (ElemMask u : opens) {
                if (!specwb::subset(c1, u)) continue;
                for (ElemMask v : opens)
                    if (specwb::subset(c2, v) && (u & v) == 0) {
                        separated_by_opens = true;
                        break;
                    }
                if (separated_by_opens) break;
            }
            if (!separated_by_opens) return false;
        }
    }
    return true;
}

inline bool literal_completely_normal(const SpectralSpace& s) {
    if (s.n > 4) throw std::logic_error("literal_completely_normal oracle capped at 4 points");
    std::vector<ElemMask> opens;
    for (ElemMask m = 0; m < (ElemMask{1} << s.n); ++m)
        if (specwb::is_open_set(s, m)) opens.push_back(m);
    for (ElemMask a = 1; a < (ElemMask{1} << s.n); ++a)
        for (ElemMask b = 1; b < (ElemMask{1} << s.n); ++b) {
            if ((specwb::closure(s, a) & b) != 0 || (a & specwb::closure(s, b)) != 0) continue;
            bool separated_by_opens = false;
            for (ElemMask u : opens) {
                if (!specwb::subset(a, u)) continue;
                for (ElemMask v : opens)
                    if (specwb::subset(b, v) && (u & v) == 0) {
                        separated_by_opens = true;
                        break;
                    }
                if (separated_by_opens) break;
            }
            if (!separated_by_opens) return false;
        }
    return true;
}

}  // namespace oracles
