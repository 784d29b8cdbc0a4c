// specwb: command-line front end for the finite-ring spectral workbench.
//
// Subcommands:
//   audit     run the claim catalog over the generated corpus
//   spectrum  print the prime/maximal/minimal spectrum of a ring file
//   dense     check a subring for density inside an ambient ring file
//   hunt      counterexample hunters (intermediate-density, wcn-vs-cn)
//   posets    enumerate labeled posets with selected predicates
//
// Exit codes: 0 success; 1 usage or input error; 2 a proven claim was
// refuted by the audit. A hunter finding a counterexample is a success.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "specwb/specwb.hpp"

namespace {

using nlohmann::json;

specwb::FiniteRing load_ring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ring file: " + path);
    return specwb::read_ring(in);
}

std::vector<std::string> split_claims(const std::string& arg) {
    std::vector<std::string> out;
    if (arg.empty() || arg == "all") return out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

// Explains why a subset fails to be a unital subring; empty when it is one.
std::string subring_problem(const specwb::FiniteRing& r, specwb::ElemMask m) {
    using namespace specwb;
    if (!has(m, r.zero)) return "subset does not contain 0 (element " + std::to_string(r.zero) + ")";
    if (!has(m, r.one)) return "subset does not contain 1 (element " + std::to_string(r.one) + ")";
    for (int a : mask_elements(m)) {
        if (!has(m, r.neg(a)))
            return "not closed under negation: -" + std::to_string(a) + " = " +
                   std::to_string(r.neg(a)) + " is missing";
        for (int b : mask_elements(m)) {
            if (!has(m, r.add(a, b)))
                return "not closed under addition: " + std::to_string(a) + "+" + std::to_string(b) +
                       " = " + std::to_string(r.add(a, b)) + " is missing";
            if (!has(m, r.mul(a, b)))
                return "not closed under multiplication: " + std::to_string(a) + "*" +
                       std::to_string(b) + " = " + std::to_string(r.mul(a, b)) + " is missing";
        }
    }
    return {};
}

json mask_list(specwb::ElemMask m) {
    json a = json::array();
    for (int e : specwb::mask_elements(m)) a.push_back(e);
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"specwb: spectral workbench for finite commutative rings"};
    app.require_subcommand(1);

    // audit
    auto* audit = app.add_subcommand("audit", "run the claim catalog over the corpus");
    std::string audit_claims = "all";
    int audit_max_ring = 16;
    int audit_max_poset = 5;
    int audit_workers = 0;
    long long audit_budget_ms = 0;
    std::string audit_out;
    audit->add_option("--claims", audit_claims, "comma-separated claim ids, or 'all'");
    audit->add_option("--max-ring", audit_max_ring, "largest ring size in the corpus");
    audit->add_option("--max-poset", audit_max_poset, "largest labeled poset size");
    audit->add_option("--workers", audit_workers, "worker threads (0 = hardware)");
    audit->add_option("--time-budget-ms", audit_budget_ms,
                      "truncate the run after this many milliseconds (0 = unlimited)");
    audit->add_option("--out", audit_out, "write the JSONL report here instead of stdout");

    // spectrum
    auto* spect = app.add_subcommand("spectrum", "spectrum of a ring given as a ring file");
    std::string spect_ring;
    spect->add_option("--ring", spect_ring, "ring file")->required();

    // dense
    auto* dense = app.add_subcommand("dense", "density check of a subring");
    std::string dense_ambient, dense_subring, dense_mode = "primes";
    dense->add_option("--ambient", dense_ambient, "ambient ring file")->required();
    dense->add_option("--subring", dense_subring, "file of whitespace-separated element indices")
        ->required();
    dense->add_option("--mode", dense_mode, "definition | primes");

    // hunt
    auto* hunt = app.add_subcommand("hunt", "counterexample hunters");
    std::string hunt_kind;
    int hunt_max_ring = 24;
    int hunt_max_poset = 5;
    std::string hunt_out;
    hunt->add_option("kind", hunt_kind, "intermediate-density | wcn-vs-cn")->required();
    hunt->add_option("--max-ring", hunt_max_ring, "largest ring size in the corpus");
    hunt->add_option("--max-poset", hunt_max_poset, "largest labeled poset size");
    hunt->add_option("--out", hunt_out, "write the JSONL report here instead of stdout");

    // posets
    auto* posets = app.add_subcommand("posets", "enumerate labeled posets with predicates");
    int posets_n = 3;
    std::string posets_preds = "pm,cn,wcn";
    posets->add_option("--n", posets_n, "number of labeled points")->required();
    posets->add_option("--predicates", posets_preds,
                       "comma list of pm,cn,cntop,wcn,normal,t2");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*audit) {
            specwb::CorpusSpec spec;
            spec.max_ring_size = audit_max_ring;
            spec.max_poset_points = audit_max_poset;
            specwb::AuditReport rep = specwb::run_audit(spec, split_claims(audit_claims),
                                                        audit_workers, audit_budget_ms);
            std::ofstream file;
            specwb::write_report(open_out(file, audit_out), rep);
            if (rep.any_proven_refuted) {
                std::cerr << "audit: a proven claim was refuted\n";
                return 2;
            }
            return 0;
        }

        if (*spect) {
            specwb::FiniteRing r = load_ring(spect_ring);
            json out = {{"ring", r.name}, {"size", r.n}};
            json primes = json::array(), maxes = json::array(), mins = json::array();
            for (auto p : specwb::spectrum(r)) primes.push_back(mask_list(p));
            for (auto m : specwb::maximal_spectrum(r)) maxes.push_back(mask_list(m));
            for (auto m : specwb::minimal_spectrum(r)) mins.push_back(mask_list(m));
            out["spectrum"] = primes;
            out["maximal"] = maxes;
            out["minimal"] = mins;
            out["nilradical"] = mask_list(specwb::nilradical(r));
            out["jacobson"] = mask_list(specwb::jacobson_radical(r));
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (*dense) {
            specwb::FiniteRing r = load_ring(dense_ambient);
            std::ifstream in(dense_subring);
            if (!in) throw std::runtime_error("cannot open subring file: " + dense_subring);
            specwb::ElemMask members = 0;
            int e;
            while (in >> e) {
                if (e < 0 || e >= r.n)
                    throw std::runtime_error("subring element " + std::to_string(e) +
                                             " out of range 0.." + std::to_string(r.n - 1));
                members |= specwb::bit(e);
            }
            std::string problem = subring_problem(r, members);
            if (!problem.empty()) throw std::runtime_error("not a unital subring: " + problem);
            specwb::DensityMode mode = dense_mode == "definition" ? specwb::DensityMode::definition
                                                                  : specwb::DensityMode::primes;
            if (dense_mode != "definition" && dense_mode != "primes")
                throw std::runtime_error("unknown density mode: " + dense_mode);
            specwb::DensityReport rep = specwb::is_dense({r, members}, mode);
            json out = {{"ring", r.name},
                        {"subring", mask_list(members)},
                        {"mode", specwb::to_string(rep.mode)},
                        {"dense", rep.dense}};
            if (rep.witness_fail)
                out["witness_fail"] = {{"ideal", mask_list(rep.witness_fail->first)},
                                       {"b", rep.witness_fail->second}};
            else
                out["witnessed_pairs"] = rep.witness_table.size();
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (*hunt) {
            specwb::CorpusSpec spec;
            spec.max_ring_size = hunt_max_ring;
            spec.max_poset_points = hunt_max_poset;
            specwb::AuditReport rep;
            if (hunt_kind == "intermediate-density")
                rep = specwb::hunt_intermediate_density(spec);
            else if (hunt_kind == "wcn-vs-cn")
                rep = specwb::hunt_wcn_vs_cn(spec);
            else
                throw std::runtime_error("unknown hunt: " + hunt_kind);
            std::ofstream file;
            specwb::write_report(open_out(file, hunt_out), rep);
            if (rep.counterexample_found)
                std::cerr << "hunt: separating/counterexample instances found (see report)\n";
            return 0;
        }

        if (*posets) {
            std::vector<std::string> preds;
            {
                std::stringstream ss(posets_preds);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) preds.push_back(item);
            }
            specwb::Caps caps;
            specwb::enumerate_posets(posets_n, [&](const specwb::SpectralSpace& s) {
                json relations = json::array();
                for (int p = 0; p < s.n; ++p)
                    for (int q : specwb::mask_elements(s.up[p]))
                        if (q != p) relations.push_back({p, q});
                json line = {{"poset", s.name}, {"points", s.n}, {"relations", relations}};
                for (const std::string& pred : preds) {
                    if (pred == "pm") line["pm"] = specwb::is_pm_space(s);
                    else if (pred == "cn") line["cn"] = specwb::is_cn_chain(s);
                    else if (pred == "cntop")
                        line["cntop"] = specwb::is_completely_normal_topological(s, caps);
                    else if (pred == "wcn") line["wcn"] = specwb::is_weak_cn(s);
                    else if (pred == "normal")
                        line["normal"] = specwb::is_normal_topological(s, caps);
                    else if (pred == "t2") line["t2"] = specwb::is_t2(s);
                    else throw std::runtime_error("unknown predicate: " + pred);
                }
                std::cout << line.dump() << "\n";
            });
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "specwb: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
