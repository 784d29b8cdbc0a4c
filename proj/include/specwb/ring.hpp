#pragma once

/**
 * @file ring.hpp
 * @brief Finite commutative rings with identity, given by explicit tables.
 *
 * A ring is a set {0..n-1} with addition and multiplication tables, a zero
 * and a one. Everything is validated by full axiom scan at construction:
 * (add) abelian group, (mul) commutative monoid, distributivity. Rings are
 * immutable after construction and safe to share across threads.
 *
 * Constructions provided: Z_n, F_p[x]/(f) for monic f, direct products,
 * quotients by an ideal, localizations at a multiplicative subset, and
 * subring closures.
 *
 * Localization note: for a finite commutative ring R and multiplicative set
 * S (1 in S), the fraction ring S^-1 R coincides with R/K for the ideal
 * K = {a : sa = 0 for some s in S}. Indeed the canonical map R -> R/K sends
 * each s in S to a non-zero-divisor (if s*x lies in K then s'(sx) = 0 for
 * some s' in S, so x lies in K), and a non-zero-divisor of a finite ring is
 * a unit; by the universal property R/K receives and maps onto S^-1 R, and
 * the two maps compose to identities. So make_localization computes the
 * quotient by the S-annihilation congruence a ~ b iff s(a-b) = 0 for some
 * s in S.
 */

#include <algorithm>
#include <cassert>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "specwb/common.hpp"

namespace specwb {

struct FiniteRing {
    int n = 0;
    int zero = 0;
    int one = 0;
    std::string name;
    std::vector<int> add_tab;  // n*n, row-major
    std::vector<int> mul_tab;
    std::vector<int> neg_tab;  // additive inverses, derived

    int add(int a, int b) const { return add_tab[a * n + b]; }
    int mul(int a, int b) const { return mul_tab[a * n + b]; }
    int neg(int a) const { return neg_tab[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    int pow(int a, int k) const {
        int r = one;
        for (int i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }

    bool is_unit(int a) const {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == one) return true;
        return false;
    }

    /// Multiplicative inverse, or -1 when a is not a unit.
    int inverse(int a) const {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == one) return b;
        return -1;
    }

    ElemMask all_mask() const { return full_mask(n); }
};

/// Full axiom scan. Returns an empty string when r is a commutative unital
/// ring, otherwise a description of the first violation found.
inline std::string ring_axiom_violation(const FiniteRing& r) {
    std::ostringstream err;
    const int n = r.n;
    if (n < 1) return "size must be >= 1";
    if (n > kMaskBits) {
        err << "size " << n << " exceeds the supported maximum " << kMaskBits;
        return err.str();
    }
    if ((int)r.add_tab.size() != n * n || (int)r.mul_tab.size() != n * n)
        return "table size does not match ring size";
    for (int v : r.add_tab)
        if (v < 0 || v >= n) return "add table entry out of range";
    for (int v : r.mul_tab)
        if (v < 0 || v >= n) return "mul table entry out of range";
    if (r.zero < 0 || r.zero >= n || r.one < 0 || r.one >= n)
        return "zero/one out of range";
    if (r.one == r.zero && n != 1) return "one equals zero in a ring of size > 1";

    for (int a = 0; a < n; ++a) {
        if (r.add(a, r.zero) != a) {
            err << "zero is not an additive identity at " << a;
            return err.str();
        }
        if (r.mul(a, r.one) != a) {
            err << "one is not a multiplicative identity at " << a;
            return err.str();
        }
        bool inv = false;
        for (int b = 0; b < n && !inv; ++b) inv = r.add(a, b) == r.zero;
        if (!inv) {
            err << "element " << a << " has no additive inverse";
            return err.str();
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) {
                err << "addition not commutative at (" << a << "," << b << ")";
                return err.str();
            }
            if (r.mul(a, b) != r.mul(b, a)) {
                err << "multiplication not commutative at (" << a << "," << b << ")";
                return err.str();
            }
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
                    err << "addition not associative at (" << a << "," << b << "," << c << ")";
                    return err.str();
                }
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
                    err << "multiplication not associative at (" << a << "," << b << "," << c << ")";
                    return err.str();
                }
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
                    err << "distributivity fails at (" << a << "," << b << "," << c << ")";
                    return err.str();
                }
            }
    return {};
}

/// Fills the derived negation table and runs the axiom scan.
inline void finalize_ring(FiniteRing& r) {
    std::string bad = ring_axiom_violation(r);
    if (!bad.empty())
        throw std::invalid_argument("not a finite commutative ring (" + r.name + "): " + bad);
    r.neg_tab.assign(r.n, 0);
    for (int a = 0; a < r.n; ++a)
        for (int b = 0; b < r.n; ++b)
            if (r.add(a, b) == r.zero) {
                r.neg_tab[a] = b;
                break;
            }
}

/// The one-element ring. Excluded from corpora; Spec of it is empty.
inline FiniteRing make_zero_ring() {
    FiniteRing r;
    r.n = 1;
    r.zero = r.one = 0;
    r.name = "0";
    r.add_tab = {0};
    r.mul_tab = {0};
    finalize_ring(r);
    return r;
}

/// Z_n, the integers mod n. Requires n >= 2.
inline FiniteRing make_zn(int n) {
    if (n < 2) throw std::invalid_argument("make_zn: n must be >= 2");
    if (n > kMaskBits) throw std::invalid_argument("make_zn: n exceeds supported maximum");
    FiniteRing r;
    r.n = n;
    r.zero = 0;
    r.one = 1 % n;
    r.name = "Z_" + std::to_string(n);
    r.add_tab.resize(n * n);
    r.mul_tab.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            r.add_tab[a * n + b] = (a + b) % n;
            r.mul_tab[a * n + b] = (a * b) % n;
        }
    finalize_ring(r);
    return r;
}

inline bool is_prime_int(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/**
 * F_p[x]/(f) for a monic polynomial f over Z_p, given by its coefficient
 * vector in ascending degree order (so x^2+x+1 over F_2 is {1,1,1}).
 * The result has p^deg(f) elements; element index sum(c_i p^i) encodes the
 * residue polynomial sum(c_i x^i).
 */
inline FiniteRing make_poly_quotient(int p, const std::vector<int>& coeffs) {
    if (!is_prime_int(p)) throw std::invalid_argument("make_poly_quotient: p must be prime");
    const int deg = (int)coeffs.size() - 1;
    if (deg < 1) throw std::invalid_argument("make_poly_quotient: polynomial degree must be >= 1");
    for (int c : coeffs)
        if (c < 0 || c >= p)
            throw std::invalid_argument("make_poly_quotient: coefficients must lie in 0..p-1");
    if (coeffs.back() != 1) throw std::invalid_argument("make_poly_quotient: polynomial must be monic");

    long long size = 1;
    for (int i = 0; i < deg; ++i) {
        size *= p;
        if (size > kMaskBits)
            throw std::invalid_argument("make_poly_quotient: ring size exceeds supported maximum");
    }
    const int n = (int)size;

    auto decode = [&](int idx) {
        std::vector<int> c(deg);
        for (int i = 0; i < deg; ++i) {
            c[i] = idx % p;
            idx /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int idx = 0;
        for (int i = deg - 1; i >= 0; --i) idx = idx * p + c[i];
        return idx;
    };
    // Schoolbook product followed by reduction mod f (monic, so leading
    // coefficients eliminate top-down).
    auto mul_poly = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> prod(2 * deg - 1, 0);
        for (int i = 0; i < deg; ++i)
            for (int j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        for (int i = 2 * deg - 2; i >= deg; --i) {
            int c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (int j = 0; j < deg; ++j)
                prod[i - deg + j] = ((prod[i - deg + j] - c * coeffs[j]) % p + p * p) % p;
        }
        prod.resize(deg);
        return prod;
    };

    FiniteRing r;
    r.n = n;
    r.zero = 0;
    r.one = encode([&] {
        std::vector<int> c(deg, 0);
        c[0] = 1;
        return c;
    }());
    {
        std::ostringstream nm;
        nm << "F_" << p << "[x]/(";
        bool first = true;
        for (int i = deg; i >= 0; --i) {
            if (coeffs[i] == 0 && i != deg) continue;
            if (!first) nm << "+";
            if (i == 0 || coeffs[i] != 1) nm << coeffs[i];
            if (i >= 1) nm << "x";
            if (i >= 2) nm << "^" << i;
            first = false;
        }
        nm << ")";
        r.name = nm.str();
    }
    r.add_tab.resize(n * n);
    r.mul_tab.resize(n * n);
    for (int a = 0; a < n; ++a) {
        auto ca = decode(a);
        for (int b = 0; b < n; ++b) {
            auto cb = decode(b);
            std::vector<int> sum(deg);
            for (int i = 0; i < deg; ++i) sum[i] = (ca[i] + cb[i]) % p;
            r.add_tab[a * n + b] = encode(sum);
            r.mul_tab[a * n + b] = encode(mul_poly(ca, cb));
        }
    }
    finalize_ring(r);
    return r;
}

/// Direct product; element (i,j) is indexed as i*|r2|+j.
inline FiniteRing make_product(const FiniteRing& r1, const FiniteRing& r2) {
    if (r1.n < 2 || r2.n < 2)
        throw std::invalid_argument("make_product: factors must be nonzero rings");
    long long size = (long long)r1.n * r2.n;
    if (size > kMaskBits) throw std::invalid_argument("make_product: size exceeds supported maximum");
    const int n = (int)size;
    FiniteRing r;
    r.n = n;
    r.zero = r1.zero * r2.n + r2.zero;
    r.one = r1.one * r2.n + r2.one;
    r.name = "(" + r1.name + " x " + r2.name + ")";
    r.add_tab.resize(n * n);
    r.mul_tab.resize(n * n);
    for (int a = 0; a < n; ++a) {
        int a1 = a / r2.n, a2 = a % r2.n;
        for (int b = 0; b < n; ++b) {
            int b1 = b / r2.n, b2 = b % r2.n;
            r.add_tab[a * n + b] = r1.add(a1, b1) * r2.n + r2.add(a2, b2);
            r.mul_tab[a * n + b] = r1.mul(a1, b1) * r2.n + r2.mul(a2, b2);
        }
    }
    finalize_ring(r);
    return r;
}

// --- Homomorphisms -----------------------------------------------------------

struct RingHom {
    FiniteRing domain;
    FiniteRing codomain;
    std::vector<int> map;  // length |domain|
    std::string name;

    int operator()(int a) const { return map[a]; }

    ElemMask kernel() const {
        ElemMask k = 0;
        for (int a = 0; a < domain.n; ++a)
            if (map[a] == codomain.zero) k |= bit(a);
        return k;
    }

    ElemMask image() const {
        ElemMask im = 0;
        for (int a = 0; a < domain.n; ++a) im |= bit(map[a]);
        return im;
    }

    bool surjective() const { return image() == codomain.all_mask(); }
};

/// Empty string when h is a unital ring homomorphism, else the violation.
inline std::string hom_violation(const RingHom& h) {
    if ((int)h.map.size() != h.domain.n) return "map length mismatch";
    for (int v : h.map)
        if (v < 0 || v >= h.codomain.n) return "map value out of range";
    if (h.map[h.domain.zero] != h.codomain.zero) return "zero not preserved";
    if (h.map[h.domain.one] != h.codomain.one) return "one not preserved";
    for (int a = 0; a < h.domain.n; ++a)
        for (int b = 0; b < h.domain.n; ++b) {
            if (h.map[h.domain.add(a, b)] != h.codomain.add(h.map[a], h.map[b]))
                return "addition not preserved";
            if (h.map[h.domain.mul(a, b)] != h.codomain.mul(h.map[a], h.map[b]))
                return "multiplication not preserved";
        }
    return {};
}

inline RingHom make_hom(FiniteRing domain, FiniteRing codomain, std::vector<int> map,
                        std::string hom_name) {
    RingHom h{std::move(domain), std::move(codomain), std::move(map), std::move(hom_name)};
    std::string bad = hom_violation(h);
    if (!bad.empty()) throw std::invalid_argument("not a ring homomorphism (" + h.name + "): " + bad);
    return h;
}

inline RingHom identity_hom(const FiniteRing& r) {
    std::vector<int> m(r.n);
    std::iota(m.begin(), m.end(), 0);
    return make_hom(r, r, std::move(m), "id " + r.name);
}

/// The two projections of a product built by make_product.
inline std::pair<RingHom, RingHom> product_projections(const FiniteRing& r1, const FiniteRing& r2,
                                                       const FiniteRing& prod) {
    std::vector<int> p1(prod.n), p2(prod.n);
    for (int a = 0; a < prod.n; ++a) {
        p1[a] = a / r2.n;
        p2[a] = a % r2.n;
    }
    return {make_hom(prod, r1, std::move(p1), prod.name + " -> " + r1.name),
            make_hom(prod, r2, std::move(p2), prod.name + " -> " + r2.name)};
}

// --- Ideal masks (low level; the ideal lattice lives in ideal.hpp) -----------

/// Ideal axioms for a subset mask: contains zero, closed under addition,
/// absorbs ambient multiplication.
inline bool is_ideal_mask(const FiniteRing& r, ElemMask m) {
    if (!has(m, r.zero)) return false;
    for (int a = 0; a < r.n; ++a) {
        if (!has(m, a)) continue;
        for (int b = 0; b <= a; ++b)
            if (has(m, b) && !has(m, r.add(a, b))) return false;
        for (int x = 0; x < r.n; ++x)
            if (!has(m, r.mul(x, a))) return false;
    }
    return true;
}

// --- Quotients and localizations ---------------------------------------------

struct QuotientResult {
    FiniteRing ring;
    RingHom proj;  // canonical surjection; kernel equals the input ideal
};

/// Quotient by a proper ideal, on minimal coset representatives.
inline QuotientResult make_quotient(const FiniteRing& r, ElemMask ideal) {
    if (!is_ideal_mask(r, ideal))
        throw std::invalid_argument("make_quotient: subset is not an ideal of " + r.name);
    if (ideal == r.all_mask())
        throw std::invalid_argument("make_quotient: quotient by the whole ring is the zero ring");

    std::vector<int> coset_rep(r.n, -1);
    std::vector<int> reps;
    for (int a = 0; a < r.n; ++a) {
        if (coset_rep[a] != -1) continue;
        // a is the least element of its coset a + I
        reps.push_back(a);
        for (int i : mask_elements(ideal)) coset_rep[r.add(a, i)] = a;
    }
    const int q = (int)reps.size();
    std::vector<int> rep_index(r.n, -1);
    for (int i = 0; i < q; ++i) rep_index[reps[i]] = i;
    auto cls = [&](int a) { return rep_index[coset_rep[a]]; };

    FiniteRing out;
    out.n = q;
    out.zero = cls(r.zero);
    out.one = cls(r.one);
    {
        std::ostringstream nm;
        nm << r.name << "/{";
        bool first = true;
        for (int i : mask_elements(ideal)) {
            if (!first) nm << ",";
            nm << i;
            first = false;
        }
        nm << "}";
        out.name = nm.str();
    }
    out.add_tab.resize(q * q);
    out.mul_tab.resize(q * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            out.add_tab[i * q + j] = cls(r.add(reps[i], reps[j]));
            out.mul_tab[i * q + j] = cls(r.mul(reps[i], reps[j]));
        }
    finalize_ring(out);

    std::vector<int> proj(r.n);
    for (int a = 0; a < r.n; ++a) proj[a] = cls(a);
    RingHom h = make_hom(r, out, std::move(proj), r.name + " -> " + out.name);
    return {std::move(out), std::move(h)};
}

inline bool is_multiplicative_subset(const FiniteRing& r, ElemMask s) {
    if (!has(s, r.one)) return false;
    for (int a : mask_elements(s))
        for (int b : mask_elements(s))
            if (!has(s, r.mul(a, b))) return false;
    return true;
}

/// Localization at S, computed as the quotient by the S-annihilation
/// congruence (see file header). Kernel is {a : sa = 0 for some s in S}.
inline QuotientResult make_localization(const FiniteRing& r, ElemMask s,
                                        bool allow_zero_ring = false) {
    if (!is_multiplicative_subset(r, s))
        throw std::invalid_argument(
            "make_localization: S must be multiplicatively closed and contain 1");
    if (has(s, r.zero) && !allow_zero_ring)
        throw std::invalid_argument("make_localization: 0 in S yields the zero ring");

    ElemMask kernel = 0;
    for (int a = 0; a < r.n; ++a)
        for (int sv : mask_elements(s))
            if (r.mul(sv, a) == r.zero) {
                kernel |= bit(a);
                break;
            }
    if (kernel == r.all_mask() && !allow_zero_ring)
        throw std::invalid_argument("make_localization: congruence collapses to the zero ring");

    QuotientResult out;
    if (kernel == r.all_mask()) {
        out.ring = make_zero_ring();
        out.proj = make_hom(r, out.ring, std::vector<int>(r.n, 0), r.name + " -> 0");
    } else {
        out = make_quotient(r, kernel);
    }
    std::ostringstream nm;
    nm << "S^-1 " << r.name << ", S={";
    bool first = true;
    for (int i : mask_elements(s)) {
        if (!first) nm << ",";
        nm << i;
        first = false;
    }
    nm << "}";
    out.ring.name = nm.str();
    out.proj.codomain.name = out.ring.name;
    out.proj.name = r.name + " -> " + out.ring.name;
    return out;
}

/// Multiplicative closure {1, s, s^2, ...} of a single element.
inline ElemMask multiplicative_closure(const FiniteRing& r, int s) {
    ElemMask m = bit(r.one);
    int v = s;
    while (!has(m, v)) {
        m |= bit(v);
        v = r.mul(v, s);
    }
    return m;
}

// --- Subrings ------------------------------------------------------------------

struct SubringPair {
    FiniteRing ambient;  // the ring B
    ElemMask members;    // the unital subring A
};

/// Subring axioms: contains 0 and 1, closed under add and mul. Additive
/// inverses follow from finiteness but are asserted explicitly.
inline bool is_subring_mask(const FiniteRing& r, ElemMask m) {
    if (!has(m, r.zero) || !has(m, r.one)) return false;
    for (int a : mask_elements(m)) {
        if (!has(m, r.neg(a))) return false;
        for (int b : mask_elements(m))
            if (!has(m, r.add(a, b)) || !has(m, r.mul(a, b))) return false;
    }
    return true;
}

/// Smallest unital subring containing gens: fixed-point closure of
/// gens + {0,1} under addition and multiplication.
inline SubringPair subring_generated(const FiniteRing& r, ElemMask gens) {
    ElemMask m = gens | bit(r.zero) | bit(r.one);
    bool grew = true;
    while (grew) {
        grew = false;
        auto elems = mask_elements(m);
        for (int a : elems)
            for (int b : elems) {
                ElemMask nm = m | bit(r.add(a, b)) | bit(r.mul(a, b));
                if (nm != m) {
                    m = nm;
                    grew = true;
                }
            }
    }
    return {r, m};
}

struct SubringEnumeration {
    std::vector<ElemMask> subrings;  // sorted by (popcount, mask)
    bool complete;                   // false above the exact-search size
};

/**
 * All distinct unital subrings. Up to caps.subring_enum_exact elements this
 * closes every subset (complete by construction: a subring is a fixed point
 * of the closure); above that, closes every generator set of size <= 3 and
 * flags the result possibly incomplete.
 */
inline SubringEnumeration enumerate_subrings(const FiniteRing& r, const Caps& caps = {}) {
    if (r.n > caps.subring_enum_max) {
        std::ostringstream err;
        err << "enumerate_subrings: ring size " << r.n << " exceeds cap " << caps.subring_enum_max;
        throw cap_error(err.str());
    }
    std::vector<ElemMask> found;
    auto emit = [&](ElemMask m) { found.push_back(m); };

    if (r.n <= caps.subring_enum_exact) {
        std::vector<int> others;
        for (int a = 0; a < r.n; ++a)
            if (a != r.zero && a != r.one) others.push_back(a);
        const int k = (int)others.size();
        for (ElemMask pick = 0; pick < (ElemMask{1} << k); ++pick) {
            ElemMask gens = 0;
            for (int i = 0; i < k; ++i)
                if (has(pick, i)) gens |= bit(others[i]);
            emit(subring_generated(r, gens).members);
        }
    } else {
        emit(subring_generated(r, 0).members);
        for (int a = 0; a < r.n; ++a) {
            emit(subring_generated(r, bit(a)).members);
            for (int b = a + 1; b < r.n; ++b) {
                emit(subring_generated(r, bit(a) | bit(b)).members);
                for (int c = b + 1; c < r.n; ++c)
                    emit(subring_generated(r, bit(a) | bit(b) | bit(c)).members);
            }
        }
    }

    std::sort(found.begin(), found.end(), [](ElemMask a, ElemMask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return {std::move(found), r.n <= caps.subring_enum_exact};
}

/// A subring relabeled as a standalone ring, with index maps both ways.
struct ExtractedSubring {
    FiniteRing ring;
    std::vector<int> to_ambient;    // sub index -> ambient index
    std::vector<int> from_ambient;  // ambient index -> sub index, -1 outside
};

inline ExtractedSubring extract_subring(const SubringPair& p) {
    const FiniteRing& b = p.ambient;
    if (!is_subring_mask(b, p.members))
        throw std::invalid_argument("extract_subring: subset is not a unital subring of " + b.name);
    ExtractedSubring out;
    out.to_ambient = mask_elements(p.members);
    out.from_ambient.assign(b.n, -1);
    const int k = (int)out.to_ambient.size();
    for (int i = 0; i < k; ++i) out.from_ambient[out.to_ambient[i]] = i;

    FiniteRing& a = out.ring;
    a.n = k;
    a.zero = out.from_ambient[b.zero];
    a.one = out.from_ambient[b.one];
    a.name = b.name + "|sub" + std::to_string(k);
    a.add_tab.resize(k * k);
    a.mul_tab.resize(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            a.add_tab[i * k + j] = out.from_ambient[b.add(out.to_ambient[i], out.to_ambient[j])];
            a.mul_tab[i * k + j] = out.from_ambient[b.mul(out.to_ambient[i], out.to_ambient[j])];
        }
    finalize_ring(a);
    return out;
}

/// Inclusion homomorphism of a subring pair, domain relabeled.
inline RingHom inclusion_hom(const SubringPair& p) {
    ExtractedSubring ex = extract_subring(p);
    return make_hom(ex.ring, p.ambient, ex.to_ambient, ex.ring.name + " -> " + p.ambient.name);
}

/// Restricts an ambient subset to subring coordinates.
inline ElemMask restrict_mask(const ExtractedSubring& ex, ElemMask ambient_set) {
    ElemMask m = 0;
    for (int i = 0; i < (int)ex.to_ambient.size(); ++i)
        if (has(ambient_set, ex.to_ambient[i])) m |= bit(i);
    return m;
}

// --- Digests -------------------------------------------------------------------

inline void feed_ring(Digest& d, const FiniteRing& r) {
    d.feed(r.n);
    d.feed(r.zero);
    d.feed(r.one);
    for (int v : r.add_tab) d.feed(v);
    for (int v : r.mul_tab) d.feed(v);
}

inline std::string ring_digest(const FiniteRing& r) {
    Digest d;
    feed_ring(d, r);
    return d.hex();
}

// --- Text format -----------------------------------------------------------------
//
//   ring <name>
//   size <n>
//   zero <i>
//   one <i>
//   add
//   <n rows of n indices>
//   mul
//   <n rows of n indices>

inline void write_ring(std::ostream& os, const FiniteRing& r) {
    os << "ring " << r.name << "\n";
    os << "size " << r.n << "\n";
    os << "zero " << r.zero << "\n";
    os << "one " << r.one << "\n";
    for (int t = 0; t < 2; ++t) {
        const auto& tab = t == 0 ? r.add_tab : r.mul_tab;
        os << (t == 0 ? "add" : "mul") << "\n";
        for (int i = 0; i < r.n; ++i) {
            for (int j = 0; j < r.n; ++j) os << (j ? " " : "") << tab[i * r.n + j];
            os << "\n";
        }
    }
}

inline FiniteRing read_ring(std::istream& is) {
    auto fail = [](int line, const std::string& msg) {
        throw parse_error("ring format, line " + std::to_string(line) + ": " + msg);
    };
    int line_no = 0;
    std::string line;
    auto next_line = [&]() -> std::string {
        if (!std::getline(is, line)) fail(line_no + 1, "unexpected end of input");
        ++line_no;
        return line;
    };

    FiniteRing r;
    {
        std::string l = next_line();
        if (l.rfind("ring ", 0) != 0) fail(line_no, "expected 'ring <name>'");
        r.name = l.substr(5);
    }
    auto read_int_field = [&](const std::string& key) {
        std::string l = next_line();
        std::istringstream ss(l);
        std::string k;
        long long v;
        if (!(ss >> k >> v) || k != key) fail(line_no, "expected '" + key + " <integer>'");
        return (int)v;
    };
    r.n = read_int_field("size");
    if (r.n < 1 || r.n > kMaskBits) fail(line_no, "size out of supported range 1..64");
    r.zero = read_int_field("zero");
    r.one = read_int_field("one");

    for (int t = 0; t < 2; ++t) {
        const std::string key = t == 0 ? "add" : "mul";
        std::string l = next_line();
        if (l != key) fail(line_no, "expected '" + key + "' table header");
        auto& tab = t == 0 ? r.add_tab : r.mul_tab;
        tab.assign(r.n * r.n, 0);
        for (int i = 0; i < r.n; ++i) {
            std::istringstream row(next_line());
            for (int j = 0; j < r.n; ++j) {
                long long v;
                if (!(row >> v))
                    fail(line_no, key + " row " + std::to_string(i) + ": expected " +
                                      std::to_string(r.n) + " entries, got " + std::to_string(j));
                if (v < 0 || v >= r.n)
                    fail(line_no, key + "[" + std::to_string(i) + "][" + std::to_string(j) +
                                      "] = " + std::to_string(v) + " out of range 0.." +
                                      std::to_string(r.n - 1));
                tab[i * r.n + j] = (int)v;
            }
            long long extra;
            if (row >> extra)
                fail(line_no, key + " row " + std::to_string(i) + ": more than " +
                                  std::to_string(r.n) + " entries");
        }
    }
    finalize_ring(r);  // full axiom scan; rejects tables that parse but are not a ring
    return r;
}

}  // namespace specwb
