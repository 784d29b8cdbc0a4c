#pragma once

/**
 * @file corpus.hpp
 * @brief Deterministic test-corpus generation.
 *
 * Families: Z_n ranges, prime-power polynomial quotients, binary and
 * ternary direct products, subring pairs, nested subring triples,
 * homomorphisms (quotients, single-generator localizations, product
 * projections, inclusions), and all labeled posets up to a point cap.
 * Enumeration order is deterministic for a fixed spec; a nonzero seed
 * shuffles each stream reproducibly.
 */

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "specwb/claims.hpp"
#include "specwb/common.hpp"
#include "specwb/dense.hpp"
#include "specwb/ideal.hpp"
#include "specwb/ring.hpp"
#include "specwb/topology.hpp"

namespace specwb {

struct CorpusSpec {
    int zn_min = 2;
    int zn_max = 30;
    bool include_fields = true;  // F_4, F_8, F_9, F_16
    std::vector<int> poly_primes = {2, 3};
    int poly_max_degree = 3;
    int product_size_cap = 36;
    int product_factor_max = 9;  // pool: Z_n up to here, plus fields of size <= here
    bool ternary_products = true;
    int max_ring_size = 36;   // global filter on every ring family
    int hom_ring_max = 12;    // homomorphism sources capped separately
    int max_poset_points = 5;
    unsigned seed = 0;        // nonzero shuffles stream order reproducibly
    Caps caps;
};

struct Corpus {
    std::vector<FiniteRing> rings;
    std::vector<SubringPair> pairs;
    std::vector<TripleInstance> triples;
    std::vector<RingHom> homs;
    std::vector<SpectralSpace> posets;
    std::vector<SpectralMap> maps;  // contractions of the generated homs
    bool pairs_complete = true;     // false if any subring enumeration was capped
};

inline Corpus build_corpus(const CorpusSpec& spec) {
    if (spec.zn_max > kMaskBits)
        throw cap_error("corpus family zn: upper bound " + std::to_string(spec.zn_max) +
                        " exceeds the supported ring size " + std::to_string(kMaskBits));
    if (spec.max_poset_points > spec.caps.poset_enum_max)
        throw cap_error("corpus family posets: " + std::to_string(spec.max_poset_points) +
                        " points exceeds cap " + std::to_string(spec.caps.poset_enum_max));
    if (spec.max_ring_size > spec.caps.subring_enum_max)
        throw cap_error("corpus family subrings: ring size " + std::to_string(spec.max_ring_size) +
                        " exceeds cap " + std::to_string(spec.caps.subring_enum_max));

    Corpus out;
    std::set<std::string> seen;  // dedupe structurally identical rings by digest
    auto push_ring = [&](FiniteRing r) -> int {
        if (r.n > spec.max_ring_size) return -1;
        if (!seen.insert(ring_digest(r)).second) return -1;
        out.rings.push_back(std::move(r));
        return (int)out.rings.size() - 1;
    };

    // Z_n
    for (int n = spec.zn_min; n <= spec.zn_max; ++n) push_ring(make_zn(n));

    // the standard small fields
    if (spec.include_fields) {
        push_ring(make_poly_quotient(2, {1, 1, 1}));        // F_4
        push_ring(make_poly_quotient(2, {1, 1, 0, 1}));     // F_8
        push_ring(make_poly_quotient(3, {1, 0, 1}));        // F_9
        push_ring(make_poly_quotient(2, {1, 1, 0, 0, 1}));  // F_16
    }

    // every monic polynomial quotient up to the degree bound
    for (int p : spec.poly_primes) {
        for (int deg = 1; deg <= spec.poly_max_degree; ++deg) {
            long long count = 1;
            for (int i = 0; i < deg; ++i) count *= p;
            for (long long idx = 0; idx < count; ++idx) {
                std::vector<int> coeffs(deg + 1, 0);
                long long v = idx;
                for (int i = 0; i < deg; ++i) {
                    coeffs[i] = (int)(v % p);
                    v /= p;
                }
                coeffs[deg] = 1;
                long long size = 1;
                bool fits = true;
                for (int i = 0; i < deg && fits; ++i) {
                    size *= p;
                    if (size > spec.max_ring_size) fits = false;
                }
                if (fits) push_ring(make_poly_quotient(p, coeffs));
            }
        }
    }

    // products; remember factorizations so projections can be generated
    struct ProductEntry {
        FiniteRing left, right;  // right is the full right factor (nested for ternary)
        int ring_index;
    };
    std::vector<ProductEntry> products;
    {
        std::vector<FiniteRing> pool;
        for (int n = 2; n <= std::min(spec.product_factor_max, spec.zn_max); ++n)
            pool.push_back(make_zn(n));
        if (spec.include_fields) {
            pool.push_back(make_poly_quotient(2, {1, 1, 1}));  // F_4
            if (spec.product_factor_max >= 8) pool.push_back(make_poly_quotient(2, {1, 1, 0, 1}));
            if (spec.product_factor_max >= 9) pool.push_back(make_poly_quotient(3, {1, 0, 1}));
        }
        std::stable_sort(pool.begin(), pool.end(),
                         [](const FiniteRing& a, const FiniteRing& b) { return a.n < b.n; });
        const int cap = std::min(spec.product_size_cap, spec.max_ring_size);
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i; j < pool.size(); ++j) {
                if (pool[i].n * pool[j].n > cap) continue;
                FiniteRing prod = make_product(pool[i], pool[j]);
                if (int kept = push_ring(prod); kept >= 0)
                    products.push_back({pool[i], pool[j], kept});
                if (spec.ternary_products)
                    for (std::size_t k = j; k < pool.size(); ++k) {
                        long long sz = (long long)pool[i].n * pool[j].n * pool[k].n;
                        if (sz > cap) continue;
                        FiniteRing rear = make_product(pool[j], pool[k]);
                        FiniteRing triple = make_product(pool[i], rear);
                        if (int kept = push_ring(triple); kept >= 0)
                            products.push_back({pool[i], rear, kept});
                    }
            }
    }

    // subring pairs and nested triples
    for (const FiniteRing& r : out.rings) {
        SubringEnumeration subs = enumerate_subrings(r, spec.caps);
        if (!subs.complete) out.pairs_complete = false;
        for (ElemMask m : subs.subrings) out.pairs.push_back({r, m});
        for (ElemMask inner : subs.subrings)
            for (ElemMask middle : subs.subrings)
                if (subset(inner, middle)) out.triples.push_back({r, inner, middle});
    }

    // homomorphisms: quotients, localizations, projections, inclusions
    for (const FiniteRing& r : out.rings) {
        if (r.n > spec.hom_ring_max) continue;
        for (ElemMask ideal : enumerate_ideals(r, spec.caps)) {
            if (ideal == r.all_mask()) continue;
            out.homs.push_back(make_quotient(r, ideal).proj);
        }
        std::set<ElemMask> seen_subsets;
        for (int s = 0; s < r.n; ++s) {
            ElemMask closure_of_s = multiplicative_closure(r, s);
            if (has(closure_of_s, r.zero)) continue;  // would collapse to the zero ring
            if (!seen_subsets.insert(closure_of_s).second) continue;
            out.homs.push_back(make_localization(r, closure_of_s).proj);
        }
    }
    for (const ProductEntry& p : products) {
        const FiniteRing& prod = out.rings[p.ring_index];
        if (prod.n > spec.hom_ring_max) continue;
        auto [p1, p2] = product_projections(p.left, p.right, prod);
        out.homs.push_back(std::move(p1));
        out.homs.push_back(std::move(p2));
    }
    for (const SubringPair& p : out.pairs)
        if (p.ambient.n <= spec.hom_ring_max) out.homs.push_back(inclusion_hom(p));

    // posets
    for (int n = 1; n <= spec.max_poset_points; ++n)
        enumerate_posets(n, [&](const SpectralSpace& s) { out.posets.push_back(s); }, spec.caps);

    // spectral maps: contractions of every generated homomorphism
    for (const RingHom& h : out.homs) out.maps.push_back(contraction_map(h, spec.caps));

    if (spec.seed != 0) {
        std::mt19937 rng(spec.seed);
        std::shuffle(out.rings.begin(), out.rings.end(), rng);
        std::shuffle(out.pairs.begin(), out.pairs.end(), rng);
        std::shuffle(out.triples.begin(), out.triples.end(), rng);
        std::shuffle(out.homs.begin(), out.homs.end(), rng);
        std::shuffle(out.posets.begin(), out.posets.end(), rng);
        std::shuffle(out.maps.begin(), out.maps.end(), rng);
    }
    return out;
}

}  // namespace specwb
