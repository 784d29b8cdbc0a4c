#pragma once

/**
 * @file common.hpp
 * @brief Shared primitives: element subsets as bitmasks, size caps, digests.
 *
 * Every structure in this library is small and dense: ring elements are
 * integer indices 0..n-1 with n <= 64, and subsets of elements (ideals,
 * subrings, point sets) are uint64_t bitmasks. All set algebra is mask
 * arithmetic.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace specwb {

using ElemMask = std::uint64_t;

/// Maximum number of elements representable in a subset mask.
inline constexpr int kMaskBits = 64;

inline ElemMask bit(int i) { return ElemMask{1} << i; }

inline bool has(ElemMask m, int i) { return (m >> i) & 1; }

inline int popcount(ElemMask m) { return __builtin_popcountll(m); }

/// Mask of all indices below n.
inline ElemMask full_mask(int n) {
    return n >= kMaskBits ? ~ElemMask{0} : (ElemMask{1} << n) - 1;
}

inline bool subset(ElemMask a, ElemMask b) { return (a & ~b) == 0; }

/// Elements of a mask as a sorted index list.
inline std::vector<int> mask_elements(ElemMask m) {
    std::vector<int> out;
    while (m) {
        int i = __builtin_ctzll(m);
        out.push_back(i);
        m &= m - 1;
    }
    return out;
}

inline ElemMask mask_of(const std::vector<int>& elems) {
    ElemMask m = 0;
    for (int e : elems) m |= bit(e);
    return m;
}

/// Thrown when an operation refuses an input that exceeds a configured
/// size cap. Refusal is always explicit; nothing truncates silently.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the text-format readers; messages carry line/row/column context.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Size caps for the exhaustive operations. Defaults keep the full audit
/// suite in the minutes range on a laptop.
struct Caps {
    int subring_enum_exact = 16;   // full subset closure up to here
    int subring_enum_max = 36;     // generator-set closure up to here
    int ideal_lattice_max = 64;    // full ideal lattice / spectrum
    int density_definition_max = 12;  // all-ideals density mode
    int cn_equational_max = 16;    // equational witness table (n^4 loop)
    int cn_topological_max = 12;   // separated-pair search (4^n loop)
    int poset_enum_max = 6;        // labeled poset enumeration
};

// --- FNV-1a content digests -------------------------------------------------
// Stable across runs and platforms; used as instance identity in reports.

struct Digest {
    std::uint64_t h = 1469598103934665603ull;  // FNV offset basis

    void feed(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;  // FNV prime
        }
    }
    void feed(int v) { feed(static_cast<std::uint64_t>(static_cast<std::uint32_t>(v))); }

    std::string hex() const {
        static const char* d = "0123456789abcdef";
        std::string s(16, '0');
        for (int i = 0; i < 16; ++i) s[15 - i] = d[(h >> (4 * i)) & 0xf];
        return s;
    }
};

}  // namespace specwb
