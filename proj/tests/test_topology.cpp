#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "specwb/topology.hpp"

using namespace specwb;

namespace {
// the two three-point shapes used throughout: a bottom point under two
// maximal points, and two minimal points under a common top
SpectralSpace v_poset() { return make_space(3, {{0, 1}, {0, 2}}, "V"); }
SpectralSpace lambda_poset() { return make_space(3, {{0, 2}, {1, 2}}, "L"); }
SpectralSpace antichain(int n) { return make_space(n, {}, "antichain"); }
SpectralSpace chain3() { return make_space(3, {{0, 1}, {1, 2}}, "chain"); }
}  // namespace

// =============================================================================
// Construction and closure
// =============================================================================

TEST_CASE("spaces from rings are discrete antichains") {
    SpectralSpace z6 = space_from_ring(make_zn(6));
    CHECK(z6.n == 2);
    CHECK(z6.maximal_points() == z6.all_mask());

    CHECK(space_from_ring(make_zn(4)).n == 1);

    FiniteRing z2_cubed = make_product(make_zn(2), make_product(make_zn(2), make_zn(2)));
    SpectralSpace s = space_from_ring(z2_cubed);
    CHECK(s.n == 3);
    for (int p = 0; p < s.n; ++p) CHECK(s.up[p] == bit(p));
}

TEST_CASE("closure is the up-closure") {
    CHECK(closure(antichain(2), bit(0)) == bit(0));
    CHECK(closure(chain3(), bit(0)) == mask_of({0, 1, 2}));
    CHECK(closure(lambda_poset(), bit(0)) == mask_of({0, 2}));
}

TEST_CASE("make_space applies transitive closure and rejects cycles") {
    SpectralSpace s = make_space(3, {{0, 1}, {1, 2}});
    CHECK(s.leq(0, 2));
    CHECK_THROWS_AS(make_space(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_space(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("ring-derived spaces: down-sets are unions of basic opens, up-sets are V(I)") {
    for (const FiniteRing& r :
         {make_zn(6), make_zn(4), make_zn(30), make_product(make_zn(2), make_zn(2))}) {
        SpectralSpace s = space_from_ring(r);
        for (ElemMask pts = 0; pts < (ElemMask{1} << s.n); ++pts) {
            if (is_open_set(s, pts)) {
                ElemMask covered = 0;
                for (int f = 0; f < r.n; ++f) {
                    ElemMask xf = basic_open(s, f);
                    if (subset(xf, pts)) covered |= xf;
                }
                CHECK(covered == pts);
            }
            if (is_closed_set(s, pts) && pts != 0) {
                ElemMask meet = r.all_mask();
                for (int i : mask_elements(pts)) meet &= s.point_keys[i];
                CHECK(vanishing_set(s, meet) == pts);
            }
        }
    }
}

// =============================================================================
// pm and retractions
// =============================================================================

TEST_CASE("pm and the retraction onto the maximal points") {
    CHECK(!is_pm_space(v_poset()));
    CHECK(is_pm_space(lambda_poset()));
    CHECK(is_pm_space(antichain(4)));

    RetractionFailure why;
    CHECK(!max_retraction(v_poset(), &why).has_value());
    CHECK(why.witness_point == 0);  // the bottom point sits below two maximals

    auto mu = max_retraction(lambda_poset());
    REQUIRE(mu.has_value());
    CHECK(mu->target.n == 1);
    for (int p = 0; p < 3; ++p) CHECK(mu->pointmap[p] == 0);

    auto mu_id = max_retraction(antichain(3));
    REQUIRE(mu_id.has_value());
    CHECK(mu_id->pointmap == std::vector<int>{0, 1, 2});
}

TEST_CASE("a continuous retraction exists exactly when the space is pm") {
    for (int n = 1; n <= 4; ++n)
        enumerate_posets(n, [&](const SpectralSpace& s) {
            CHECK(retraction_onto_max_exists(s) == is_pm_space(s));
        });
}

// =============================================================================
// Separation predicates
// =============================================================================

TEST_CASE("normality and complete normality on the worked shapes") {
    CHECK(is_normal_topological(antichain(3)));
    CHECK(is_completely_normal_topological(antichain(3)));

    CHECK(!is_normal_topological(v_poset()));
    CHECK(!is_completely_normal_topological(v_poset()));

    CHECK(is_normal_topological(chain3()));
    CHECK(is_completely_normal_topological(chain3()));

    // two minimal points under one top: pm, hence normal
    CHECK(is_normal_topological(lambda_poset()));
    CHECK(is_completely_normal_topological(lambda_poset()));
}

TEST_CASE("subset searches agree with the pairwise order-theoretic oracles") {
    for (int n = 1; n <= 4; ++n)
        enumerate_posets(n, [&](const SpectralSpace& s) {
            CHECK(is_normal_topological(s) == oracles::pairwise_normal(s));
            CHECK(is_completely_normal_topological(s) == oracles::pairwise_completely_normal(s));
        });
}

TEST_CASE("separation predicates agree with the literal all-open-pairs scans") {
    for (int n = 1; n <= 4; ++n)
        enumerate_posets(n, [&](const SpectralSpace& s) {
            CHECK(is_normal_topological(s) == oracles::literal_normal(s));
            CHECK(is_completely_normal_topological(s) == oracles::literal_completely_normal(s));
        });
}

TEST_CASE("relative openness agrees with literal subspace opens") {
    // f(U) is open in the image iff it equals V intersect image for some
    // open V of the target; check this literal form against map_props
    std::vector<SpectralSpace> spaces = enumerate_posets(3);
    const SpectralSpace& tgt = spaces[10];
    for (const SpectralSpace& src : spaces) {
        for (int code = 0; code < 27; ++code) {
            std::vector<int> f(3);
            int c = code;
            for (int i = 0; i < 3; ++i) {
                f[i] = c % 3;
                c /= 3;
            }
            SpectralMap m{src, tgt, f, "probe"};
            ElemMask img = m.image();
            bool literal_open = true;
            for (ElemMask u = 0; u < 8 && literal_open; ++u) {
                if (!is_open_set(src, u)) continue;
                ElemMask fu = 0;
                for (int p : mask_elements(u)) fu |= bit(f[p]);
                bool representable = false;
                for (ElemMask v = 0; v < 8 && !representable; ++v)
                    if (is_open_set(tgt, v) && (v & img) == fu) representable = true;
                if (!representable) literal_open = false;
            }
            CHECK(map_props(m).open_map == literal_open);
        }
    }
}

TEST_CASE("chain form of complete normality") {
    CHECK(is_cn_chain(lambda_poset()));
    CHECK(!is_cn_chain(v_poset()));
    CHECK(is_cn_chain(antichain(5)));
}

TEST_CASE("the chain form coincides with the topological form on finite posets") {
    for (int n = 1; n <= 4; ++n)
        enumerate_posets(n, [&](const SpectralSpace& s) {
            CHECK(is_cn_chain(s) == is_completely_normal_topological(s));
        });
}

TEST_CASE("weak complete normality") {
    CHECK(is_weak_cn(v_poset()));       // no common point above the two maximals
    CHECK(!is_weak_cn(lambda_poset())); // the top is above both minimal points
    CHECK(is_weak_cn(antichain(4)));
}

TEST_CASE("weak cn + pm implies the chain form, posets up to 4 points") {
    for (int n = 1; n <= 4; ++n)
        enumerate_posets(n, [&](const SpectralSpace& s) {
            if (is_weak_cn(s) && is_pm_space(s)) CHECK(is_cn_chain(s));
        });
}

TEST_CASE("size caps refuse instead of truncating") {
    Caps caps;
    caps.cn_topological_max = 2;
    CHECK_THROWS_AS(is_normal_topological(antichain(3), caps), cap_error);
    CHECK_THROWS_AS(is_completely_normal_topological(antichain(3), caps), cap_error);
}

// =============================================================================
// Map properties
// =============================================================================

TEST_CASE("map properties on the worked examples") {
    SpectralSpace two = antichain(2);
    SpectralMap ident{two, two, {0, 1}, "id"};
    MapProps p = map_props(ident);
    CHECK(p.continuous);
    CHECK(p.open_map);
    CHECK(p.closed_map);
    CHECK(p.injective);
    CHECK(p.dense_image);
    CHECK(p.embedding);
    CHECK(p.homeomorphism);

    SpectralMap constant{two, antichain(1), {0, 0}, "const"};
    MapProps c = map_props(constant);
    CHECK(c.continuous);
    CHECK(!c.injective);

    // the inclusion of one maximal point into the two-minimal/one-top shape
    SpectralSpace lam = lambda_poset();
    SpectralMap incl{subspace(lam, bit(0)), lam, {0}, "incl"};
    MapProps i = map_props(incl);
    CHECK(i.continuous);
    CHECK(i.injective);
    CHECK(!i.dense_image);  // cl{m1} misses the other minimal point
}

TEST_CASE("preimage continuity agrees with order preservation on all small maps") {
    std::vector<SpectralSpace> spaces = enumerate_posets(3);
    for (const SpectralSpace& src : spaces) {
        const SpectralSpace& tgt = spaces[7 % spaces.size()];
        std::vector<int> f(src.n, 0);
        // walk all 3^3 functions between the 3-point spaces
        for (int code = 0; code < 27; ++code) {
            int c = code;
            for (int i = 0; i < src.n; ++i) {
                f[i] = c % tgt.n;
                c /= tgt.n;
            }
            MapProps p = map_props({src, tgt, f, "probe"});
            CHECK(p.continuous == p.continuous_order);
        }
    }
}

TEST_CASE("subspace induces the restricted order") {
    SpectralSpace lam = lambda_poset();
    SpectralSpace maxes = subspace(lam, lam.maximal_points());
    CHECK(maxes.n == 1);
    SpectralSpace bottoms = subspace(lam, mask_of({0, 1}));
    CHECK(bottoms.n == 2);
    CHECK(!bottoms.leq(0, 1));
    CHECK(!bottoms.leq(1, 0));
}

// =============================================================================
// Hausdorff criteria
// =============================================================================

TEST_CASE("maximal spectra of finite rings are Hausdorff and satisfy the pair criterion") {
    FiniteRing z6 = make_zn(6);
    CHECK(max_is_t2(z6));
    CHECK(jacobson_pair_criterion(z6));
    // explicit witness for the pair (2Z_6, 3Z_6): 3 avoids 2Z_6, 2 avoids
    // 3Z_6, and 3*2 = 0 lies in the Jacobson radical
    CHECK(has(jacobson_radical(z6), z6.mul(3, 2)));

    CHECK(max_is_t2(make_zn(4)));  // a single maximal ideal
    CHECK(jacobson_pair_criterion(make_zn(4)));

    FiniteRing z2z2 = make_product(make_zn(2), make_zn(2));
    CHECK(max_is_t2(z2z2));
    CHECK(jacobson_pair_criterion(z2z2));
    CHECK(z2z2.mul(2, 1) == z2z2.zero);  // (1,0)*(0,1) = 0
}

TEST_CASE("is_t2 is discreteness for finite spaces") {
    CHECK(is_t2(antichain(3)));
    CHECK(!is_t2(chain3()));
    CHECK(!is_t2(v_poset()));
}

// =============================================================================
// Poset enumeration and the text format
// =============================================================================

TEST_CASE("labeled poset counts match the exhaustive-relation oracle") {
    for (int n = 1; n <= 4; ++n) {
        long long count = 0;
        enumerate_posets(n, [&](const SpectralSpace&) { ++count; });
        CHECK(count == oracles::brute_poset_count(n));
        CHECK(count == kLabeledPosetCounts[n]);
    }
}

TEST_CASE("poset counts at five and six points match the stored constants") {
    long long count5 = 0, count6 = 0;
    enumerate_posets(5, [&](const SpectralSpace&) { ++count5; });
    CHECK(count5 == kLabeledPosetCounts[5]);  // 4231
    enumerate_posets(6, [&](const SpectralSpace&) { ++count6; });
    CHECK(count6 == kLabeledPosetCounts[6]);  // 130023
}

TEST_CASE("poset enumeration yields distinct labeled posets") {
    std::vector<std::vector<ElemMask>> seen;
    enumerate_posets(3, [&](const SpectralSpace& s) { seen.push_back(s.up); });
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("poset enumeration refuses out-of-range sizes") {
    CHECK_THROWS_AS(enumerate_posets(7), cap_error);
    CHECK_THROWS_AS(enumerate_posets(0), std::invalid_argument);
}

TEST_CASE("poset text format is pinned byte for byte") {
    std::ostringstream out;
    write_space(out, lambda_poset());
    CHECK(out.str() ==
          "poset L\n"
          "points 3\n"
          "le 0 2\n"
          "le 1 2\n");
}

TEST_CASE("poset text format round-trips") {
    SpectralSpace lam = lambda_poset();
    std::ostringstream out;
    write_space(out, lam);
    std::istringstream in(out.str());
    SpectralSpace back = read_space(in);
    CHECK(back.up == lam.up);
    CHECK(back.name == lam.name);

    std::istringstream cyclic("poset bad\npoints 2\nle 0 1\nle 1 0\n");
    CHECK_THROWS_AS(read_space(cyclic), parse_error);
    std::istringstream out_of_range("poset bad\npoints 2\nle 0 7\n");
    CHECK_THROWS_AS(read_space(out_of_range), parse_error);
    std::istringstream junk("poset bad\npoints 2\nfoo 1 2\n");
    CHECK_THROWS_AS(read_space(junk), parse_error);
}
