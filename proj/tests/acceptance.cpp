// Acceptance suite: one criterion per run line, each with a hard time
// budget. Every expected value is pinned here; a criterion that cannot
// meet its stated tolerance fails loudly rather than being relaxed.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "specwb/specwb.hpp"

using namespace specwb;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<bool(std::string&)> run;
};

json strip_timing(json j) {
    j.erase("elapsed_ms");
    return j;
}

CorpusSpec default_spec(int max_ring) {
    CorpusSpec spec;
    spec.max_ring_size = max_ring;
    spec.max_poset_points = 1;  // poset streams are requested separately
    return spec;
}

// ---------------------------------------------------------------------------

bool c1_spectrum_oracle(std::string& msg) {
    for (int n = 2; n <= 60; ++n) {
        std::vector<ElemMask> expected;
        for (int p : oracles::prime_divisors(n)) expected.push_back(oracles::multiples_mask(p, n));
        oracles::sort_by_size(expected);
        if (spectrum(make_zn(n)) != expected) {
            msg = "spectrum(Z_" + std::to_string(n) + ") does not match the factorization oracle";
            return false;
        }
    }
    return true;
}

bool c2_radical_cross_check(std::string& msg) {
    Corpus corpus = build_corpus(default_spec(16));
    for (const FiniteRing& r : corpus.rings) {
        auto primes = spectrum(r);
        for (ElemMask i : enumerate_ideals(r)) {
            ElemMask meet = r.all_mask();
            for (ElemMask p : primes)
                if (subset(i, p)) meet &= p;
            if (radical(r, i) != meet) {
                msg = "radical mismatch in " + r.name + " at ideal " + ideal_to_string(i);
                return false;
            }
        }
    }
    return true;
}

bool c3_density_biconditional(std::string& msg) {
    Corpus corpus = build_corpus(default_spec(16));
    const std::string diag_digest = ring_digest(make_product(make_zn(2), make_zn(2)));
    bool diagonal_seen = false;
    for (const SubringPair& p : corpus.pairs) {
        bool dense = is_dense_flag(p);
        PairContext ctx = make_pair_context(p);
        MapProps props = map_props(ctx.i_star);
        bool one_one_open = props.injective && props.open_map;
        if (dense != one_one_open) {
            msg = "mismatch on " + p.ambient.name + " >= " + ideal_to_string(p.members);
            return false;
        }
        if (ring_digest(p.ambient) == diag_digest && p.members == mask_of({0, 3})) {
            diagonal_seen = true;
            if (dense || one_one_open) {
                msg = "the diagonal pair must evaluate false/false";
                return false;
            }
        }
        Verdict v = check_claim({"C6", PairInstance{p}});
        if (v.status != ClaimStatus::verified) {
            msg = "C6 not verified on " + p.ambient.name;
            return false;
        }
    }
    if (!diagonal_seen) {
        msg = "the diagonal pair of Z_2 x Z_2 did not appear in the corpus";
        return false;
    }
    return true;
}

bool c4_hom_equivalence(std::string& msg) {
    CorpusSpec spec = default_spec(12);
    spec.hom_ring_max = 12;
    Corpus corpus = build_corpus(spec);
    bool z6_localization_seen = false;
    const std::string z6_digest = ring_digest(make_zn(6));
    for (const RingHom& h : corpus.homs) {
        HomEquivalence eq = hom_equivalence(h);
        if (!eq.consistent()) {
            msg = "conditions disagree on " + h.name;
            return false;
        }
        Verdict v = check_claim({"C16", HomInstance{h}});
        if (v.status != ClaimStatus::verified) {
            msg = "C16 not verified on " + h.name;
            return false;
        }
        if (ring_digest(h.domain) == z6_digest && h.kernel() == mask_of({0, 2, 4})) {
            z6_localization_seen = true;
            if (eq.kernel_in_nilradical || eq.image_dense || eq.primes_dominated) {
                msg = "the Z_6 localization at {1,3} must evaluate all-false";
                return false;
            }
        }
    }
    if (!z6_localization_seen) {
        msg = "the Z_6 localization at {1,3} did not appear among the homomorphisms";
        return false;
    }
    return true;
}

bool c5_equational_criterion(std::string& msg) {
    Corpus corpus = build_corpus(default_spec(12));
    for (const FiniteRing& r : corpus.rings) {
        CnTable t = cn_equational(r);
        if (!t.completely_normal) {
            msg = "no witness table for " + r.name;
            return false;
        }
        if (t.witnesses.size() != (std::size_t)r.n * r.n) {
            msg = "incomplete witness table for " + r.name;
            return false;
        }
        for (const CnWitness& w : t.witnesses)
            if (cn_expr_value(r, w) != r.zero) {
                msg = "witness fails independent re-evaluation in " + r.name;
                return false;
            }
        Verdict v = check_claim({"C19", RingInstance{r}});
        if (v.status != ClaimStatus::verified) {
            msg = "C19 not verified on " + r.name;
            return false;
        }
    }
    return true;
}

bool c6_pm_equivalences(std::string& msg) {
    long long mismatches = 0, seen = 0;
    for (int n = 1; n <= 5; ++n)
        enumerate_posets(n, [&](const SpectralSpace& s) {
            ++seen;
            bool pm = is_pm_space(s);
            bool mu_exists = max_retraction(s).has_value();
            bool retract = retraction_onto_max_exists(s);
            bool normal = is_normal_topological(s);
            if (!(pm == mu_exists && mu_exists == retract && retract == normal)) ++mismatches;
        });
    if (seen != 1 + 3 + 19 + 219 + 4231) {
        msg = "poset enumeration count is off";
        return false;
    }
    if (mismatches != 0) {
        msg = std::to_string(mismatches) + " posets break the equivalence";
        return false;
    }
    return true;
}

bool c7_weak_cn_implication(std::string& msg) {
    long long violations = 0;
    for (int n = 1; n <= 5; ++n)
        enumerate_posets(n, [&](const SpectralSpace& s) {
            if (is_weak_cn(s) && is_pm_space(s) && !is_cn_chain(s)) ++violations;
        });
    if (violations != 0) {
        msg = std::to_string(violations) + " posets violate the implication";
        return false;
    }
    return true;
}

bool c8_dense_consequences(std::string& msg) {
    Corpus corpus = build_corpus(default_spec(16));
    for (const SubringPair& p : corpus.pairs) {
        if (!is_dense_flag(p)) continue;
        for (const char* id : {"C1", "C2", "C3", "C4", "C5", "C8", "C15"}) {
            Verdict v = check_claim({id, PairInstance{p}});
            if (v.status == ClaimStatus::refuted) {
                msg = std::string(id) + " refuted on " + p.ambient.name + " >= " +
                      ideal_to_string(p.members);
                return false;
            }
        }
        SpectrumMapResult theta = min_spectrum_map(p);
        if (!theta.map || !theta.props.injective || !theta.props.surjective ||
            !theta.props.continuous || !theta.props.open_map) {
            msg = "minimal-spectrum map not a homeomorphism on " + p.ambient.name;
            return false;
        }
    }
    return true;
}

bool c9_transitivity(std::string& msg) {
    Corpus corpus = build_corpus(default_spec(16));
    for (const TripleInstance& t : corpus.triples)
        for (const char* id : {"C9", "C10"}) {
            Verdict v = check_claim({id, t});
            if (v.status == ClaimStatus::refuted) {
                msg = std::string(id) + " refuted on a chain in " + t.ambient.name;
                return false;
            }
        }
    return true;
}

bool c10_hunters(std::string& msg) {
    CorpusSpec wcn_spec = default_spec(16);
    wcn_spec.max_poset_points = 5;
    AuditReport wcn = hunt_wcn_vs_cn(wcn_spec);
    bool v_found = false, lambda_found = false;
    for (const json& line : wcn.lines) {
        if (line.at("points") != 3) continue;
        bool weak = line.at("weak_cn"), chain = line.at("cn_chain"), pm = line.at("pm");
        if (weak && !chain && !pm) v_found = true;
        if (!weak && chain && pm) lambda_found = true;
    }
    if (!v_found || !lambda_found) {
        msg = "the two separating three-point shapes were not both reported";
        return false;
    }

    CorpusSpec hunt_spec = default_spec(24);
    AuditReport a = hunt_intermediate_density(hunt_spec);
    AuditReport b = hunt_intermediate_density(hunt_spec);
    if (strip_timing(a.summary) != strip_timing(b.summary) || a.lines.size() != b.lines.size()) {
        msg = "intermediate-density report is not deterministic";
        return false;
    }
    for (std::size_t i = 0; i < a.lines.size(); ++i)
        if (strip_timing(a.lines[i]) != strip_timing(b.lines[i])) {
            msg = "intermediate-density line " + std::to_string(i) + " differs across runs";
            return false;
        }
    if (!a.summary.contains("counterexamples") || !a.summary.contains("exhaustive")) {
        msg = "intermediate-density summary lacks the verdict fields";
        return false;
    }
    return true;
}

bool c11_mode_agreement(std::string& msg) {
    Corpus corpus = build_corpus(default_spec(12));
    for (const SubringPair& p : corpus.pairs) {
        bool by_def = is_dense(p, DensityMode::definition).dense;
        bool by_primes = is_dense(p, DensityMode::primes).dense;
        if (by_def != by_primes) {
            msg = "modes disagree on " + p.ambient.name + " >= " + ideal_to_string(p.members);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "spectrum of Z_n matches the factorization oracle, n = 2..60", 5, c1_spectrum_oracle},
        {2, "radical equals the intersection of containing primes, rings <= 16", 30,
         c2_radical_cross_check},
        {3, "density iff one-one + open contraction, all pairs <= 16", 120,
         c3_density_biconditional},
        {4, "kernel/density/domination equivalence on all generated homs <= 12", 120,
         c4_hom_equivalence},
        {5, "complete equational witness tables, rings <= 12", 180, c5_equational_criterion},
        {6, "pm = retract = normal on all posets <= 5 points", 60, c6_pm_equivalences},
        {7, "weak cn + pm implies chain cn on all posets <= 5 points", 30,
         c7_weak_cn_implication},
        {8, "dense-pair consequence suite, zero refutations", 60, c8_dense_consequences},
        {9, "transitivity suite over nested triples, zero refutations", 60, c9_transitivity},
        {10, "hunters report the separating shapes and terminate deterministically", 300,
         c10_hunters},
        {11, "definition-mode and prime-mode density agree, rings <= 12", 120,
         c11_mode_agreement},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string msg;
        bool ok = false;
        try {
            ok = c.run(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs > c.budget_s) {
            ok = false;
            msg = "exceeded the time budget of " + std::to_string(c.budget_s) + " s";
        }
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ["
             << secs << " s]";
        if (!ok) line << " -- " << msg;
        std::cout << line.str() << std::endl;
        if (!ok) ++failures;
    }
    if (failures == 0) std::cout << "acceptance: all " << criteria.size() << " criteria passed"
                                 << std::endl;
    else std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return failures;
}
