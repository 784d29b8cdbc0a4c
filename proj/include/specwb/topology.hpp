#pragma once

/**
 * @file topology.hpp
 * @brief Finite spectral spaces as posets under specialization.
 *
 * Points are ordered by leq(p,q) meaning q lies in the closure of {p};
 * for prime spectra this is ideal inclusion. On a finite spectrum the
 * Zariski topology is the Alexandrov topology of that order: closed sets
 * are exactly the up-sets and open sets the down-sets. (Every up-set S of
 * primes equals V(I) for I the intersection of its members, because a
 * prime containing a finite intersection of primes contains one of them;
 * down-sets are unions of basic opens by complement.) All topology here is
 * therefore order computation, and the separation predicates are honest
 * exhaustive searches over closed or separated set pairs.
 */

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specwb/common.hpp"
#include "specwb/ideal.hpp"
#include "specwb/ring.hpp"

namespace specwb {

struct SpectralSpace {
    int n = 0;
    std::string name;
    std::vector<ElemMask> up;    // up[p] = cl{p} = {q : leq(p,q)}
    std::vector<ElemMask> down;  // down[p] = minimal open neighborhood of p
    std::vector<std::string> labels;
    std::vector<ElemMask> point_keys;  // prime-ideal masks for ring-derived spaces

    bool leq(int p, int q) const { return has(up[p], q); }
    ElemMask all_mask() const { return full_mask(n); }

    ElemMask maximal_points() const {
        ElemMask m = 0;
        for (int p = 0; p < n; ++p)
            if (up[p] == bit(p)) m |= bit(p);
        return m;
    }
    ElemMask minimal_points() const {
        ElemMask m = 0;
        for (int p = 0; p < n; ++p)
            if (down[p] == bit(p)) m |= bit(p);
        return m;
    }
};

/// Builds a space from strict relations (i,j) meaning leq(i,j); applies
/// transitive closure and rejects antisymmetry violations.
inline SpectralSpace make_space(int n, const std::vector<std::pair<int, int>>& strict,
                                std::string name = "poset") {
    if (n < 0 || n > kMaskBits) throw std::invalid_argument("make_space: bad point count");
    SpectralSpace s;
    s.n = n;
    s.name = std::move(name);
    s.up.assign(n, 0);
    for (int p = 0; p < n; ++p) s.up[p] = bit(p);
    for (auto [i, j] : strict) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("make_space: relation index out of range");
        s.up[i] |= bit(j);
    }
    // transitive closure
    bool grew = true;
    while (grew) {
        grew = false;
        for (int p = 0; p < n; ++p) {
            ElemMask m = s.up[p];
            for (int q : mask_elements(m)) m |= s.up[q];
            if (m != s.up[p]) {
                s.up[p] = m;
                grew = true;
            }
        }
    }
    for (int p = 0; p < n; ++p)
        for (int q : mask_elements(s.up[p]))
            if (q != p && has(s.up[q], p))
                throw std::invalid_argument("make_space: antisymmetry violated between points " +
                                            std::to_string(p) + " and " + std::to_string(q));
    s.down.assign(n, 0);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (has(s.up[q], p)) s.down[p] |= bit(q);
    s.labels.resize(n);
    for (int p = 0; p < n; ++p) s.labels[p] = std::to_string(p);
    return s;
}

/// Spec of a ring: points are the primes in lattice order, leq is inclusion.
inline SpectralSpace space_from_ring(const FiniteRing& r, const Caps& caps = {}) {
    std::vector<ElemMask> primes = spectrum(r, caps);
    const int k = (int)primes.size();
    SpectralSpace s;
    s.n = k;
    s.name = "Spec " + r.name;
    s.up.assign(k, 0);
    s.down.assign(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (subset(primes[i], primes[j])) {
                s.up[i] |= bit(j);
                s.down[j] |= bit(i);
            }
    s.labels.resize(k);
    for (int i = 0; i < k; ++i) s.labels[i] = ideal_to_string(primes[i]);
    s.point_keys = std::move(primes);
    return s;
}

/// Basic open X_f = {P : f not in P} as a point mask of a ring spectrum.
inline ElemMask basic_open(const SpectralSpace& s, int f) {
    ElemMask m = 0;
    for (int i = 0; i < s.n; ++i)
        if (!has(s.point_keys[i], f)) m |= bit(i);
    return m;
}

/// V(I) = {P : I subset of P} as a point mask of a ring spectrum.
inline ElemMask vanishing_set(const SpectralSpace& s, ElemMask ideal) {
    ElemMask m = 0;
    for (int i = 0; i < s.n; ++i)
        if (subset(ideal, s.point_keys[i])) m |= bit(i);
    return m;
}

inline ElemMask closure(const SpectralSpace& s, ElemMask pts) {
    ElemMask c = 0;
    for (int p : mask_elements(pts)) c |= s.up[p];
    return c;
}

/// Union of the minimal open neighborhoods: the smallest open set
/// containing pts.
inline ElemMask open_hull(const SpectralSpace& s, ElemMask pts) {
    ElemMask c = 0;
    for (int p : mask_elements(pts)) c |= s.down[p];
    return c;
}

inline bool is_closed_set(const SpectralSpace& s, ElemMask pts) { return closure(s, pts) == pts; }
inline bool is_open_set(const SpectralSpace& s, ElemMask pts) { return open_hull(s, pts) == pts; }

/// Subspace on the given points; induced order, labels and keys carried over.
inline SpectralSpace subspace(const SpectralSpace& s, ElemMask pts) {
    std::vector<int> keep = mask_elements(pts);
    const int k = (int)keep.size();
    std::vector<int> idx(s.n, -1);
    for (int i = 0; i < k; ++i) idx[keep[i]] = i;
    SpectralSpace out;
    out.n = k;
    out.name = s.name + " | " + std::to_string(k) + "pt";
    out.up.assign(k, 0);
    out.down.assign(k, 0);
    out.labels.resize(k);
    for (int i = 0; i < k; ++i) {
        out.labels[i] = s.labels[keep[i]];
        for (int j = 0; j < k; ++j)
            if (s.leq(keep[i], keep[j])) {
                out.up[i] |= bit(j);
                out.down[j] |= bit(i);
            }
    }
    if (!s.point_keys.empty()) {
        out.point_keys.resize(k);
        for (int i = 0; i < k; ++i) out.point_keys[i] = s.point_keys[keep[i]];
    }
    return out;
}

// --- pm / normality ------------------------------------------------------------

/// Every point lies below exactly one maximal point.
inline bool is_pm_space(const SpectralSpace& s) {
    ElemMask maxes = s.maximal_points();
    for (int p = 0; p < s.n; ++p)
        if (popcount(s.up[p] & maxes) != 1) return false;
    return true;
}

struct SpectralMap {
    SpectralSpace source;
    SpectralSpace target;
    std::vector<int> pointmap;
    std::string name;

    int operator()(int p) const { return pointmap[p]; }
    ElemMask image() const {
        ElemMask m = 0;
        for (int v : pointmap) m |= bit(v);
        return m;
    }
};

struct RetractionFailure {
    int witness_point = -1;  // a point with two maximal specializations
    std::string message;
};

/// The retraction sending each point to its unique maximal specialization.
/// Fails with a witness point when the space is not pm. The returned map is
/// verified to be a continuous retraction onto the maximal points.
inline std::optional<SpectralMap> max_retraction(const SpectralSpace& s,
                                                 RetractionFailure* failure = nullptr) {
    ElemMask maxes = s.maximal_points();
    std::vector<int> mu(s.n, -1);
    for (int p = 0; p < s.n; ++p) {
        ElemMask over = s.up[p] & maxes;
        if (popcount(over) != 1) {
            if (failure) {
                failure->witness_point = p;
                failure->message = "point " + s.labels[p] + " lies below " +
                                   std::to_string(popcount(over)) + " maximal points";
            }
            return std::nullopt;
        }
        mu[p] = mask_elements(over)[0];
    }
    SpectralMap m{s, subspace(s, maxes), {}, "mu " + s.name};
    // retraction lands in the subspace indexing
    std::vector<int> remap(s.n, -1);
    {
        auto keep = mask_elements(maxes);
        for (int i = 0; i < (int)keep.size(); ++i) remap[keep[i]] = i;
    }
    m.pointmap.resize(s.n);
    for (int p = 0; p < s.n; ++p) m.pointmap[p] = remap[mu[p]];
    // verify: fixes maximal points and is order-preserving
    for (int p : mask_elements(maxes))
        if (m.pointmap[p] != remap[p]) throw std::logic_error("max_retraction: not a retraction");
    for (int p = 0; p < s.n; ++p)
        for (int q : mask_elements(s.up[p]))
            if (!m.target.leq(m.pointmap[p], m.pointmap[q]))
                throw std::logic_error("max_retraction: not continuous");
    return m;
}

/// Exhaustive search for any continuous retraction onto the maximal points;
/// independent of max_retraction. Falls back to the pm construction when the
/// search space exceeds ~10^6 candidates.
inline bool retraction_onto_max_exists(const SpectralSpace& s) {
    ElemMask maxes = s.maximal_points();
    std::vector<int> maxlist = mask_elements(maxes);
    std::vector<int> free_pts;
    for (int p = 0; p < s.n; ++p)
        if (!has(maxes, p)) free_pts.push_back(p);

    double space_size = 1;
    for (std::size_t i = 0; i < free_pts.size(); ++i) space_size *= (double)maxlist.size();
    if (space_size > 1e6) return max_retraction(s).has_value();

    std::vector<int> f(s.n, -1);
    for (int m : maxlist) f[m] = m;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == free_pts.size()) {
            for (int p = 0; p < s.n; ++p)
                for (int q : mask_elements(s.up[p]))
                    if (!s.leq(f[p], f[q])) return false;
            return true;
        }
        for (int m : maxlist) {
            f[free_pts[i]] = m;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

/// Every two disjoint closed sets have disjoint open neighborhoods.
/// Exhaustive over pairs of up-sets; any open set containing a closed set C
/// contains its open hull, and the hull is itself open, so disjoint
/// neighborhoods exist iff the hulls are disjoint.
inline bool is_normal_topological(const SpectralSpace& s, const Caps& caps = {}) {
    if (s.n > caps.cn_topological_max)
        throw cap_error("is_normal_topological: " + std::to_string(s.n) + " points exceeds cap " +
                        std::to_string(caps.cn_topological_max));
    std::vector<ElemMask> closed_sets;
    std::vector<ElemMask> hulls;
    for (ElemMask m = 1; m < (ElemMask{1} << s.n); ++m)
        if (is_closed_set(s, m)) {
            closed_sets.push_back(m);
            hulls.push_back(open_hull(s, m));
        }
    for (std::size_t i = 0; i < closed_sets.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if ((closed_sets[i] & closed_sets[j]) == 0 && (hulls[i] & hulls[j]) != 0) return false;
    return true;
}

/// Every two separated sets (cl(S) and T disjoint, S and cl(T) disjoint)
/// have disjoint open neighborhoods. Exhaustive with pruning: the partner
/// of S can only avoid cl(S), so it ranges over subsets of the complement.
inline bool is_completely_normal_topological(const SpectralSpace& s, const Caps& caps = {}) {
    if (s.n > caps.cn_topological_max)
        throw cap_error("is_completely_normal_topological: " + std::to_string(s.n) +
                        " points exceeds cap " + std::to_string(caps.cn_topological_max));
    const ElemMask full = s.all_mask();
    std::vector<ElemMask> up_cl(ElemMask{1} << s.n, 0), down_cl(ElemMask{1} << s.n, 0);
    for (ElemMask m = 1; m < (ElemMask{1} << s.n); ++m) {
        int p = __builtin_ctzll(m);
        up_cl[m] = up_cl[m & (m - 1)] | s.up[p];
        down_cl[m] = down_cl[m & (m - 1)] | s.down[p];
    }
    for (ElemMask a = 1; a < (ElemMask{1} << s.n); ++a) {
        ElemMask allowed = full & ~up_cl[a];
        for (ElemMask b = allowed; b; b = (b - 1) & allowed) {
            if ((a & up_cl[b]) != 0) continue;       // not separated
            if ((down_cl[a] & down_cl[b]) != 0) return false;
        }
    }
    return true;
}

/// Chain form of complete normality: every cl{x} is a chain.
inline bool is_cn_chain(const SpectralSpace& s) {
    for (int p = 0; p < s.n; ++p) {
        auto ups = mask_elements(s.up[p]);
        for (std::size_t i = 0; i < ups.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (!s.leq(ups[i], ups[j]) && !s.leq(ups[j], ups[i])) return false;
    }
    return true;
}

/// Any two incomparable points have disjoint closures (no common
/// specialization).
///
/// Together with pm this forces the chain form of complete normality: two
/// points above x both specialize to maximal points, and the maximal point
/// over x is unique under pm, so the pair has a common upper bound and weak
/// complete normality makes it comparable.
inline bool is_weak_cn(const SpectralSpace& s) {
    for (int p = 0; p < s.n; ++p)
        for (int q = 0; q < p; ++q) {
            if (s.leq(p, q) || s.leq(q, p)) continue;
            if ((s.up[p] & s.up[q]) != 0) return false;
        }
    return true;
}

// --- Map properties ---------------------------------------------------------------

struct MapProps {
    bool continuous = false;        // preimages of opens are open
    bool continuous_order = false;  // order-preserving (must agree with the above)
    bool open_map = false;          // images of opens open in the image subspace
    bool open_into_target = false;  // images of opens open in the full target
    bool closed_map = false;        // images of closeds closed in the image subspace
    bool injective = false;
    bool surjective = false;
    bool dense_image = false;  // closure of the image is the whole target
    bool embedding = false;    // injective + continuous + open onto image
    bool homeomorphism = false;
};

inline MapProps map_props(const SpectralMap& m, const Caps& caps = {}) {
    const SpectralSpace& src = m.source;
    const SpectralSpace& tgt = m.target;
    if (src.n > caps.cn_topological_max + 4 || tgt.n > caps.cn_topological_max + 4)
        throw cap_error("map_props: space too large for exhaustive open-set scan");
    MapProps out;

    out.continuous_order = true;
    for (int p = 0; p < src.n && out.continuous_order; ++p)
        for (int q : mask_elements(src.up[p]))
            if (!tgt.leq(m.pointmap[p], m.pointmap[q])) {
                out.continuous_order = false;
                break;
            }

    ElemMask img = m.image();
    auto fwd = [&](ElemMask set) {
        ElemMask r = 0;
        for (int p : mask_elements(set)) r |= bit(m.pointmap[p]);
        return r;
    };
    auto pre = [&](ElemMask set) {
        ElemMask r = 0;
        for (int p = 0; p < src.n; ++p)
            if (has(set, m.pointmap[p])) r |= bit(p);
        return r;
    };
    // relative openness/closedness in the image carries the induced order
    auto rel_open = [&](ElemMask v) {
        for (int p : mask_elements(v))
            for (int q : mask_elements(tgt.down[p] & img))
                if (!has(v, q)) return false;
        return true;
    };
    auto rel_closed = [&](ElemMask v) {
        for (int p : mask_elements(v))
            for (int q : mask_elements(tgt.up[p] & img))
                if (!has(v, q)) return false;
        return true;
    };

    out.continuous = true;
    for (ElemMask u = 0; u < (ElemMask{1} << tgt.n); ++u) {
        if (!is_open_set(tgt, u)) continue;
        if (!is_open_set(src, pre(u))) {
            out.continuous = false;
            break;
        }
    }

    out.open_map = out.open_into_target = out.closed_map = true;
    for (ElemMask u = 0; u < (ElemMask{1} << src.n); ++u) {
        if (is_open_set(src, u)) {
            ElemMask v = fwd(u);
            if (!rel_open(v)) out.open_map = false;
            if (!is_open_set(tgt, v)) out.open_into_target = false;
        }
        if (is_closed_set(src, u) && !rel_closed(fwd(u))) out.closed_map = false;
        if (!out.open_map && !out.open_into_target && !out.closed_map) break;
    }

    out.injective = true;
    for (int p = 0; p < src.n && out.injective; ++p)
        for (int q = 0; q < p; ++q)
            if (m.pointmap[p] == m.pointmap[q]) {
                out.injective = false;
                break;
            }
    out.surjective = img == tgt.all_mask();
    out.dense_image = closure(tgt, img) == tgt.all_mask();
    out.embedding = out.injective && out.continuous && out.open_map;
    out.homeomorphism = out.embedding && out.surjective;
    return out;
}

// --- Hausdorff criteria on the maximal spectrum -------------------------------------

/// Is a finite space T2? Any two distinct points need disjoint opens, and
/// the minimal neighborhoods decide it.
inline bool is_t2(const SpectralSpace& s) {
    for (int p = 0; p < s.n; ++p)
        for (int q = 0; q < p; ++q)
            if ((s.down[p] & s.down[q]) != 0) return false;
    return true;
}

/// Hausdorffness of max(A) as a subspace of Spec A, computed from the
/// topology.
inline bool max_is_t2(const FiniteRing& r, const Caps& caps = {}) {
    SpectralSpace s = space_from_ring(r, caps);
    return is_t2(subspace(s, s.maximal_points()));
}

/// For every two distinct maximal ideals M, M' there are a not in M and
/// a' not in M' with a*a' in the Jacobson radical. Exhaustive element
/// search; equivalent to max(A) being Hausdorff.
inline bool jacobson_pair_criterion(const FiniteRing& r, const Caps& caps = {}) {
    auto maxes = maximal_spectrum(r, caps);
    ElemMask jac = jacobson_radical(r, caps);
    for (std::size_t i = 0; i < maxes.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            bool found = false;
            for (int a = 0; a < r.n && !found; ++a) {
                if (has(maxes[i], a)) continue;
                for (int ap = 0; ap < r.n && !found; ++ap) {
                    if (has(maxes[j], ap)) continue;
                    if (has(jac, r.mul(a, ap))) found = true;
                }
            }
            if (!found) return false;
        }
    return true;
}

// --- Labeled poset enumeration --------------------------------------------------------

/// Number of partial orders on n labeled points, n = 0..6.
inline constexpr long long kLabeledPosetCounts[] = {1, 1, 3, 19, 219, 4231, 130023};

/**
 * Streams every partial order on n labeled points. Pairs (a,b), a<b, are
 * assigned one of {incomparable, a<b, b<a} in a fixed order; a triple is
 * validated as soon as its last pair is assigned, which prunes transitivity
 * violations at the earliest possible depth. Deterministic order.
 */
inline void enumerate_posets(int n, const std::function<void(const SpectralSpace&)>& consume,
                             const Caps& caps = {}) {
    if (n < 1) throw std::invalid_argument("enumerate_posets: n must be >= 1");
    if (n > caps.poset_enum_max)
        throw cap_error("enumerate_posets: n = " + std::to_string(n) + " exceeds cap " +
                        std::to_string(caps.poset_enum_max));
    std::vector<std::pair<int, int>> pairs;  // (a,b), a<b, by round then position
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) pairs.push_back({a, b});

    // rel[a][b] for a<b: 0 incomparable, 1 a<b, 2 b<a
    std::vector<std::vector<int>> rel(n, std::vector<int>(n, 0));
    auto lt = [&](int x, int y) {  // strict order x < y among assigned pairs
        return x < y ? rel[x][y] == 1 : rel[y][x] == 2;
    };

    long long emitted = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == pairs.size()) {
            std::vector<std::pair<int, int>> strict;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (a != b && lt(a, b)) strict.push_back({a, b});
            SpectralSpace s = make_space(n, strict, "P" + std::to_string(n) + "#" +
                                                        std::to_string(emitted));
            ++emitted;
            consume(s);
            return;
        }
        auto [a, b] = pairs[k];
        for (int choice = 0; choice < 3; ++choice) {
            rel[a][b] = choice;
            bool ok = true;
            for (int z = 0; z < a && ok; ++z) {
                // all three pairs of {z,a,b} are assigned; check the triple
                int pts[3] = {z, a, b};
                for (int i = 0; i < 3 && ok; ++i)
                    for (int j = 0; j < 3 && ok; ++j)
                        for (int l = 0; l < 3 && ok; ++l)
                            if (lt(pts[i], pts[j]) && lt(pts[j], pts[l]) && !lt(pts[i], pts[l]))
                                ok = false;
            }
            if (ok) rec(k + 1);
        }
        rel[a][b] = 0;
    };
    rec(0);
}

inline std::vector<SpectralSpace> enumerate_posets(int n, const Caps& caps = {}) {
    std::vector<SpectralSpace> out;
    enumerate_posets(n, [&](const SpectralSpace& s) { out.push_back(s); }, caps);
    return out;
}

// --- Digests and text format -----------------------------------------------------------

inline void feed_space(Digest& d, const SpectralSpace& s) {
    d.feed(s.n);
    for (ElemMask m : s.up) d.feed(m);
}

inline std::string space_digest(const SpectralSpace& s) {
    Digest d;
    feed_space(d, s);
    return d.hex();
}

//   poset <name>
//   points <n>
//   le <i> <j>        (one strict relation per line, meaning j in cl{i})

inline void write_space(std::ostream& os, const SpectralSpace& s) {
    os << "poset " << s.name << "\n";
    os << "points " << s.n << "\n";
    for (int p = 0; p < s.n; ++p)
        for (int q : mask_elements(s.up[p]))
            if (q != p) os << "le " << p << " " << q << "\n";
}

inline SpectralSpace read_space(std::istream& is) {
    int line_no = 0;
    std::string line;
    auto fail = [&](const std::string& msg) {
        throw parse_error("poset format, line " + std::to_string(line_no) + ": " + msg);
    };

    std::string name;
    int n = -1;
    std::vector<std::pair<int, int>> strict;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "poset") {
            name = line.size() > 6 ? line.substr(6) : "poset";
        } else if (key == "points") {
            if (!(ss >> n) || n < 0) fail("expected 'points <n>'");
        } else if (key == "le") {
            int i, j;
            if (!(ss >> i >> j)) fail("expected 'le <i> <j>'");
            if (n < 0) fail("'le' before 'points'");
            if (i < 0 || i >= n || j < 0 || j >= n) fail("point index out of range");
            if (i != j) strict.push_back({i, j});
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (n < 0) fail("missing 'points' line");
    try {
        return make_space(n, strict, name.empty() ? "poset" : name);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("poset format: ") + e.what());
    }
}

}  // namespace specwb
