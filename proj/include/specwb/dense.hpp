#pragma once

/**
 * @file dense.hpp
 * @brief Density of a subring, spectrum contractions, and derived maps.
 *
 * A unital subring A of B is dense when for every ideal I of B and every
 * b outside rad(I) some a outside rad(I) has ab in A.
 *
 * Two checking modes are provided and must agree:
 *  - definition: quantifies over every ideal I of B;
 *  - primes: quantifies over prime ideals only.
 * The prime mode is sound: primes are radical ideals, so definition-mode
 * success covers them; conversely if b lies outside rad(I), some prime
 * P containing I avoids b, and a witness a outside P with ab in A also
 * lies outside rad(I) since rad(I) is contained in P.
 *
 * Derived maps, all computed and then verified rather than assumed:
 *  - contraction: a prime of the larger ring pulled back along a
 *    homomorphism (for inclusions, P maps to P intersect A);
 *  - the maximal-spectrum map sending a maximal ideal M of B to the unique
 *    maximal ideal of A over M intersect A;
 *  - the minimal-spectrum map P -> P intersect A on minimal primes, defined
 *    for dense pairs.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specwb/common.hpp"
#include "specwb/ideal.hpp"
#include "specwb/ring.hpp"
#include "specwb/topology.hpp"

namespace specwb {

enum class DensityMode { definition, primes };

inline const char* to_string(DensityMode m) {
    return m == DensityMode::definition ? "definition" : "primes";
}

struct DensityWitnessEntry {
    ElemMask ideal;  // the quantified ideal I
    int b;           // element outside rad(I)
    int a;           // witness with a outside rad(I) and ab in A
};

struct DensityReport {
    bool dense = false;
    DensityMode mode = DensityMode::primes;
    std::optional<std::pair<ElemMask, int>> witness_fail;  // (I, b) with no valid a
    std::vector<DensityWitnessEntry> witness_table;        // total over quantified pairs when dense
};

inline DensityReport is_dense(const SubringPair& p, DensityMode mode, const Caps& caps = {}) {
    const FiniteRing& b_ring = p.ambient;
    if (!is_subring_mask(b_ring, p.members))
        throw std::invalid_argument("is_dense: subset is not a unital subring of " + b_ring.name);
    if (mode == DensityMode::definition && b_ring.n > caps.density_definition_max)
        throw cap_error("is_dense: definition mode caps at ring size " +
                        std::to_string(caps.density_definition_max) + ", got " +
                        std::to_string(b_ring.n));

    DensityReport out;
    out.mode = mode;
    std::vector<ElemMask> quantified = mode == DensityMode::definition
                                           ? enumerate_ideals(b_ring, caps)
                                           : spectrum(b_ring, caps);
    for (ElemMask ideal : quantified) {
        ElemMask rad = radical(b_ring, ideal);
        for (int b = 0; b < b_ring.n; ++b) {
            if (has(rad, b)) continue;
            int witness = -1;
            for (int a = 0; a < b_ring.n; ++a) {
                if (has(rad, a)) continue;
                if (has(p.members, b_ring.mul(a, b))) {
                    witness = a;
                    break;
                }
            }
            if (witness < 0) {
                out.dense = false;
                out.witness_fail = {ideal, b};
                out.witness_table.clear();
                return out;
            }
            out.witness_table.push_back({ideal, b, witness});
        }
    }
    out.dense = true;
    return out;
}

/// Convenience: the density flag in prime mode (valid at every size).
inline bool is_dense_flag(const SubringPair& p, const Caps& caps = {}) {
    return is_dense(p, DensityMode::primes, caps).dense;
}

// --- Contractions ------------------------------------------------------------------

/// The spectral map Spec(codomain) -> Spec(domain), Q -> f^-1(Q).
inline SpectralMap contraction_map(const RingHom& h, const Caps& caps = {}) {
    SpectralMap m;
    m.source = space_from_ring(h.codomain, caps);
    m.target = space_from_ring(h.domain, caps);
    m.name = "contraction of " + h.name;
    m.pointmap.resize(m.source.n, -1);
    for (int i = 0; i < m.source.n; ++i) {
        ElemMask q = m.source.point_keys[i];
        ElemMask pre = 0;
        for (int x = 0; x < h.domain.n; ++x)
            if (has(q, h.map[x])) pre |= bit(x);
        for (int j = 0; j < m.target.n; ++j)
            if (m.target.point_keys[j] == pre) {
                m.pointmap[i] = j;
                break;
            }
        if (m.pointmap[i] < 0)
            throw std::logic_error("contraction_map: preimage of a prime is not in the spectrum");
    }
    return m;
}

/// Precomputed data shared by the per-pair checks: the extracted subring,
/// both spectra, and the contraction of every prime of the ambient ring.
struct PairContext {
    SubringPair pair;
    ExtractedSubring sub;               // A as a standalone ring
    std::vector<ElemMask> primes_b;     // Spec B, ambient coordinates
    std::vector<ElemMask> primes_a;     // Spec A, subring coordinates
    std::vector<ElemMask> maxes_b;      // max(B)
    std::vector<ElemMask> maxes_a;      // max(A)
    SpectralSpace spec_b;
    SpectralSpace spec_a;
    std::vector<ElemMask> contracted;   // P cap A per prime of B, subring coordinates
    SpectralMap i_star;                 // Spec B -> Spec A
};

inline PairContext make_pair_context(const SubringPair& p, const Caps& caps = {}) {
    PairContext ctx;
    ctx.pair = p;
    ctx.sub = extract_subring(p);
    ctx.primes_b = spectrum(p.ambient, caps);
    ctx.primes_a = spectrum(ctx.sub.ring, caps);
    ctx.maxes_b = maximal_spectrum(p.ambient, caps);
    ctx.maxes_a = maximal_spectrum(ctx.sub.ring, caps);
    ctx.spec_b = space_from_ring(p.ambient, caps);
    ctx.spec_a = space_from_ring(ctx.sub.ring, caps);

    ctx.i_star.source = ctx.spec_b;
    ctx.i_star.target = ctx.spec_a;
    ctx.i_star.name = "i* " + p.ambient.name;
    ctx.i_star.pointmap.resize(ctx.spec_b.n, -1);
    ctx.contracted.resize(ctx.primes_b.size());
    for (std::size_t i = 0; i < ctx.primes_b.size(); ++i) {
        ElemMask c = restrict_mask(ctx.sub, ctx.primes_b[i]);
        ctx.contracted[i] = c;
        for (int j = 0; j < ctx.spec_a.n; ++j)
            if (ctx.spec_a.point_keys[j] == c) {
                ctx.i_star.pointmap[i] = j;
                break;
            }
        if (ctx.i_star.pointmap[i] < 0)
            throw std::logic_error("make_pair_context: contraction of a prime is not prime");
    }
    return ctx;
}

// --- Maximal- and minimal-spectrum maps ------------------------------------------------

struct SpectrumMapResult {
    std::optional<SpectralMap> map;
    MapProps props;        // properties of the map when present
    std::string failure;   // nonempty iff map absent
};

/**
 * The map max(B) -> max(A) sending M to the unique maximal ideal of A
 * containing M cap A. Fails with a witness when that maximal ideal is not
 * unique (impossible over a pm subring; guarded anyway).
 */
inline SpectrumMapResult max_spectrum_map(const SubringPair& p, const Caps& caps = {}) {
    PairContext ctx = make_pair_context(p, caps);
    SpectrumMapResult out;

    ElemMask max_pts_b = 0, max_pts_a = 0;
    for (int i = 0; i < ctx.spec_b.n; ++i)
        for (const ElemMask& m : ctx.maxes_b)
            if (ctx.spec_b.point_keys[i] == m) max_pts_b |= bit(i);
    for (int j = 0; j < ctx.spec_a.n; ++j)
        for (const ElemMask& m : ctx.maxes_a)
            if (ctx.spec_a.point_keys[j] == m) max_pts_a |= bit(j);

    SpectralMap lambda;
    lambda.source = subspace(ctx.spec_b, max_pts_b);
    lambda.target = subspace(ctx.spec_a, max_pts_a);
    lambda.name = "max map " + p.ambient.name;
    lambda.pointmap.resize(lambda.source.n, -1);
    for (int i = 0; i < lambda.source.n; ++i) {
        ElemMask c = restrict_mask(ctx.sub, lambda.source.point_keys[i]);
        int found = 0, target_idx = -1;
        for (int j = 0; j < lambda.target.n; ++j)
            if (subset(c, lambda.target.point_keys[j])) {
                ++found;
                target_idx = j;
            }
        if (found != 1) {
            out.failure = "maximal ideal " + ideal_to_string(lambda.source.point_keys[i]) +
                          " contracts under " + std::to_string(found) + " maximal ideals";
            return out;
        }
        lambda.pointmap[i] = target_idx;
    }
    out.props = map_props(lambda, caps);
    out.map = std::move(lambda);
    return out;
}

/// The map min(B) -> min(A), P -> P cap A. Defined for dense pairs only;
/// inapplicable otherwise.
inline SpectrumMapResult min_spectrum_map(const SubringPair& p, const Caps& caps = {}) {
    SpectrumMapResult out;
    if (!is_dense_flag(p, caps)) {
        out.failure = "pair is not dense";
        return out;
    }
    PairContext ctx = make_pair_context(p, caps);

    auto point_mask_of = [](const SpectralSpace& s, const std::vector<ElemMask>& keys) {
        ElemMask pts = 0;
        for (int i = 0; i < s.n; ++i)
            for (const ElemMask& k : keys)
                if (s.point_keys[i] == k) pts |= bit(i);
        return pts;
    };
    SpectralMap theta;
    theta.source = subspace(ctx.spec_b, point_mask_of(ctx.spec_b, minimal_spectrum(p.ambient, caps)));
    theta.target = subspace(ctx.spec_a, point_mask_of(ctx.spec_a, minimal_spectrum(ctx.sub.ring, caps)));
    theta.name = "min map " + p.ambient.name;
    theta.pointmap.resize(theta.source.n, -1);
    for (int i = 0; i < theta.source.n; ++i) {
        ElemMask c = restrict_mask(ctx.sub, theta.source.point_keys[i]);
        for (int j = 0; j < theta.target.n; ++j)
            if (theta.target.point_keys[j] == c) {
                theta.pointmap[i] = j;
                break;
            }
        if (theta.pointmap[i] < 0) {
            out.failure = "contraction " + ideal_to_string(c) + " is not a minimal prime";
            return out;
        }
    }
    out.props = map_props(theta, caps);
    out.map = std::move(theta);
    return out;
}

// --- Relative weak complete normality and contraction sums ------------------------------

/// For any two distinct maximal ideals M, M' of B whose contractions are
/// incomparable, the closures of the contractions in Spec A are disjoint.
inline bool weak_cn_wrt(const SubringPair& p, const Caps& caps = {}) {
    PairContext ctx = make_pair_context(p, caps);
    auto point_of = [&](ElemMask key) {
        for (int j = 0; j < ctx.spec_a.n; ++j)
            if (ctx.spec_a.point_keys[j] == key) return j;
        throw std::logic_error("weak_cn_wrt: contraction is not prime");
    };
    for (std::size_t i = 0; i < ctx.maxes_b.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            ElemMask c1 = restrict_mask(ctx.sub, ctx.maxes_b[i]);
            ElemMask c2 = restrict_mask(ctx.sub, ctx.maxes_b[j]);
            if (subset(c1, c2) || subset(c2, c1)) continue;  // comparable: not quantified
            ElemMask cl1 = closure(ctx.spec_a, bit(point_of(c1)));
            ElemMask cl2 = closure(ctx.spec_a, bit(point_of(c2)));
            if ((cl1 & cl2) != 0) return false;
        }
    return true;
}

/// (M cap A) + (M' cap A) = A, computed inside A, for every distinct pair
/// of maximal ideals of B.
inline bool comaximal_contractions(const SubringPair& p, const Caps& caps = {}) {
    ExtractedSubring sub = extract_subring(p);
    auto maxes = maximal_spectrum(p.ambient, caps);
    for (std::size_t i = 0; i < maxes.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            ElemMask c1 = restrict_mask(sub, maxes[i]);
            ElemMask c2 = restrict_mask(sub, maxes[j]);
            if (ideal_sum(sub.ring, c1, c2) != sub.ring.all_mask()) return false;
        }
    return true;
}

// --- The unit-scaling ideal -------------------------------------------------------------

struct CvuResult {
    ElemMask set;       // {r in B : rv in A}, ambient coordinates
    bool inside_a;      // the set lies inside A
    bool ideal_of_a;    // the set is an ideal of the extracted A
    bool nonzero;       // contains a nonzero element
};

/// The set {r in B : rv in A} for u in A with uv = 1 in B. Each r in the
/// set equals (rv)u and hence lies in A; the set is checked to be an ideal
/// of A and nonzero.
inline CvuResult cvu_set(const SubringPair& p, int u, int v) {
    const FiniteRing& b = p.ambient;
    if (!has(p.members, u)) throw std::invalid_argument("cvu_set: u must lie in the subring");
    if (b.mul(u, v) != b.one) throw std::invalid_argument("cvu_set: uv must equal 1");
    CvuResult out{};
    for (int r = 0; r < b.n; ++r)
        if (has(p.members, b.mul(r, v))) out.set |= bit(r);
    out.inside_a = subset(out.set, p.members);
    ExtractedSubring sub = extract_subring(p);
    out.ideal_of_a = out.inside_a && is_ideal_mask(sub.ring, restrict_mask(sub, out.set));
    out.nonzero = (out.set & ~bit(b.zero)) != 0;
    return out;
}

// --- Homomorphism equivalence -------------------------------------------------------------

/// Three conditions on a ring homomorphism f : A -> B, each computed by an
/// independent route; they are equivalent for every homomorphism:
///  1. the kernel of f lies in the nilradical of A,
///  2. the contraction image f*(Spec B) is dense in Spec A,
///  3. every prime of A contains f*(Q) for some prime Q of B.
struct HomEquivalence {
    bool kernel_in_nilradical = false;
    bool image_dense = false;
    bool primes_dominated = false;
    bool consistent() const {
        return kernel_in_nilradical == image_dense && image_dense == primes_dominated;
    }
};

inline HomEquivalence hom_equivalence(const RingHom& h, const Caps& caps = {}) {
    HomEquivalence out;
    out.kernel_in_nilradical = subset(h.kernel(), nilradical(h.domain));

    SpectralMap f_star = contraction_map(h, caps);
    out.image_dense = closure(f_star.target, f_star.image()) == f_star.target.all_mask();

    // direct subset scan, independent of the topological closure route
    std::vector<ElemMask> contracted;
    for (ElemMask q : spectrum(h.codomain, caps)) {
        ElemMask pre = 0;
        for (int x = 0; x < h.domain.n; ++x)
            if (has(q, h.map[x])) pre |= bit(x);
        contracted.push_back(pre);
    }
    out.primes_dominated = true;
    for (ElemMask p : spectrum(h.domain, caps)) {
        bool dominated = false;
        for (ElemMask c : contracted)
            if (subset(c, p)) {
                dominated = true;
                break;
            }
        if (!dominated) {
            out.primes_dominated = false;
            break;
        }
    }
    return out;
}

}  // namespace specwb
