#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dst/enumeration.hpp"
#include "dst/oracle.hpp"
#include "dst/sweep.hpp"

using nlohmann::json;

namespace {

// Exit codes, kept stable: 0 ok, 1 verification violation, 2 parse/flag
// error, 3 unsupported graph class, 4 oracle disagreement, 5 budget
// exhausted, 6 I/O error.
enum ExitCode {
    kOk = 0,
    kViolation = 1,
    kBadInput = 2,
    kUnsupported = 3,
    kOracleDisagreement = 4,
    kBudget = 5,
    kIo = 6,
};

int default_jobs() {
    const char* env = std::getenv("DISTINGUISH_JOBS");
    if (!env) return 0;
    int v = std::atoi(env);
    return v > 0 ? v : 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json vertex_witness_json(const dst::VertexLabeling& f, int n) {
    json arr = json::array();
    for (int v = 0; v < n; ++v) arr.push_back(f.labels[v]);
    return arr;
}

json edge_witness_json(const dst::Graph& g, const dst::EdgeLabeling& f) {
    json arr = json::array();
    for (int e = 0; e < g.m(); ++e)
        arr.push_back(json::array({g.edges[e].first, g.edges[e].second, f.labels[e]}));
    return arr;
}

json tree_report(const dst::Graph& g, const dst::TreeClassification& c, bool witnesses,
                 bool oracle_checked) {
    json r;
    r["n"] = g.n;
    r["m"] = g.m();
    r["family"] = "tree";
    r["D"] = c.D;
    r["Dprime"] = c.Dprime;
    r["in_family_T"] = c.family.in_family();
    r["center"] = c.center.bicentric ? "bicentric" : "unicentric";
    if (witnesses) {
        r["witness_vertex"] = vertex_witness_json(c.witness_vertex, g.n);
        r["witness_edge"] = edge_witness_json(g, c.witness_edge);
    }
    r["checked_against_oracle"] = oracle_checked;
    return r;
}

json unicyclic_report(const dst::Graph& g, const dst::UnicyclicClassification& c,
                      bool witnesses, bool oracle_checked) {
    json r;
    r["n"] = g.n;
    r["m"] = g.m();
    r["family"] = "unicyclic";
    r["D"] = c.D;
    r["Dprime"] = c.Dprime;
    r["cycle_length"] = c.cycle_length;
    if (witnesses) {
        r["witness_vertex"] = vertex_witness_json(c.witness_vertex, g.n);
        r["witness_edge"] = edge_witness_json(g, c.witness_edge);
    }
    r["checked_against_oracle"] = oracle_checked;
    return r;
}

int cmd_compute(const std::string& path, bool use_oracle, bool witnesses) {
    dst::Graph g;
    try {
        g = dst::parse_graph(read_file(path));
    } catch (const dst::ParseError& e) {
        std::cerr << "parse error: " << path << ": " << e.what() << "\n";
        return kBadInput;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }

    json report;
    int d = 0, dprime = 0;
    if (dst::is_tree(g)) {
        if (g.n < 3) {
            std::cerr << "unsupported: trees of order < 3 have no distinguishing index\n";
            return kUnsupported;
        }
        dst::TreeClassification c = dst::classify_tree(g, witnesses);
        d = c.D;
        dprime = c.Dprime;
        report = tree_report(g, c, witnesses, use_oracle);
    } else if (dst::unicyclic_cycle(g)) {
        dst::UnicyclicClassification c = dst::classify_unicyclic(g, witnesses);
        d = c.D;
        dprime = c.Dprime;
        report = unicyclic_report(g, c, witnesses, use_oracle);
    } else {
        std::cerr << "unsupported: graph is neither a tree nor connected unicyclic\n";
        return kUnsupported;
    }

    if (use_oracle) {
        try {
            int bd = dst::oracle::brute_D(g);
            int bdp = dst::oracle::brute_Dprime(g);
            if (bd != d || bdp != dprime) {
                std::cerr << "oracle disagreement: computed (D=" << d << ", D'=" << dprime
                          << ") brute force (D=" << bd << ", D'=" << bdp << ")\n";
                return kOracleDisagreement;
            }
        } catch (const dst::oracle::LimitError& e) {
            std::cerr << "oracle budget: " << e.what() << "\n";
            return kBudget;
        }
    }

    std::cout << report.dump() << "\n";
    std::cerr << "D=" << d << " D'=" << dprime << " (" << report["family"].get<std::string>()
              << ", n=" << g.n << ")\n";
    return kOk;
}

int cmd_verify(int theorem, int max_n, int oracle_max_n, int jobs) {
    if (max_n < 3) {
        std::cerr << "error: order at least 3 required\n";
        return kBadInput;
    }
    dst::SweepOptions opt;
    opt.max_n = max_n;
    opt.oracle_max_n = oracle_max_n;
    opt.jobs = jobs;
    dst::SweepResult res = dst::verify_theorem(theorem, opt);

    json out;
    out["theorem"] = theorem;
    out["max_n"] = max_n;
    out["oracle_max_n"] = oracle_max_n;
    out["instances"] = res.instances;
    out["violations"] = json::array();
    for (const auto& v : res.violations) {
        json item;
        item["detail"] = v.detail;
        item["edge_list"] = dst::to_edge_list(v.g);
        out["violations"].push_back(item);
    }
    out["seconds"] = res.seconds;
    std::cout << out.dump() << "\n";

    std::cerr << "theorem " << theorem << ": " << res.instances << " instances, "
              << res.violations.size() << " violations, " << res.seconds << " s\n";
    for (const auto& v : res.violations)
        std::cerr << "violation: " << v.detail << "\n" << dst::to_edge_list(v.g);
    if (res.budget_exhausted) {
        std::cerr << "error: oracle budget exhausted\n";
        return kBudget;
    }
    return res.violations.empty() ? kOk : kViolation;
}

int cmd_census(const std::string& family, int max_n, const std::vector<std::string>& filters,
               int cycle_min, int cycle_max, int oracle_max_n, const std::string& out_path,
               int jobs) {
    dst::GeneratorConfig cfg;
    cfg.jobs = jobs;
    if (family == "tree") {
        cfg.family = dst::Family::tree;
    } else if (family == "unicyclic") {
        cfg.family = dst::Family::unicyclic;
    } else {
        std::cerr << "error: --family must be tree or unicyclic\n";
        return kBadInput;
    }
    cfg.max_n = max_n;
    cfg.oracle_max_n = oracle_max_n;
    cfg.cycle_min = cycle_min;
    cfg.cycle_max = cycle_max;
    for (const std::string& f : filters) {
        if (f == "in-T" && cfg.family == dst::Family::tree) {
            cfg.in_family_T_only = true;
        } else if (f == "bicentric" && cfg.family == dst::Family::tree) {
            cfg.bicentric_only = true;
        } else {
            std::cerr << "error: unknown filter '" << f << "' for family " << family << "\n";
            return kBadInput;
        }
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return kIo;
        }
        out = &file;
    }

    long long written = 0;
    try {
        dst::census(cfg, [&](const dst::CensusRecord& rec) {
            json r = rec.tree ? tree_report(rec.g, *rec.tree, true, rec.oracle_checked)
                              : unicyclic_report(rec.g, *rec.unicyclic, true, rec.oracle_checked);
            (*out) << r.dump() << "\n";
            ++written;
        });
    } catch (const dst::oracle::LimitError& e) {
        std::cerr << "oracle budget: " << e.what() << "\n";
        return kBudget;
    }
    out->flush();
    if (out->fail()) {
        std::cerr << "error: write failure\n";
        return kIo;
    }
    std::cerr << "census: " << written << " reports\n";
    return kOk;
}

int cmd_oracle(const std::string& sub, const std::string& path, int root, int labels,
               int max_n, long long budget) {
    dst::Graph g;
    try {
        g = dst::parse_graph(read_file(path));
    } catch (const dst::ParseError& e) {
        std::cerr << "parse error: " << path << ": " << e.what() << "\n";
        return kBadInput;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }

    dst::oracle::Options opt;
    if (max_n > 0) opt.max_n = max_n;
    if (budget > 0) opt.budget = budget;

    try {
        json out;
        if (sub == "aut") {
            auto auts = dst::oracle::automorphisms(g, opt);
            out["n"] = g.n;
            out["aut_order"] = auts.size();
            json arr = json::array();
            for (const auto& p : auts) arr.push_back(p.image);
            out["automorphisms"] = arr;
            std::cerr << "|Aut| = " << auts.size() << "\n";
        } else if (sub == "D") {
            out["brute_D"] = dst::oracle::brute_D(g, opt);
        } else if (sub == "Dprime") {
            out["brute_Dprime"] = dst::oracle::brute_Dprime(g, opt);
        } else if (sub == "classes") {
            if (!dst::is_tree(g)) {
                std::cerr << "unsupported: classes requires a tree\n";
                return kUnsupported;
            }
            if (root < 0 || root >= g.n) {
                std::cerr << "error: --root out of range\n";
                return kBadInput;
            }
            dst::RootedTree r = dst::root_at(g, root);
            out["root"] = root;
            out["labels"] = labels;
            out["classes"] = dst::oracle::brute_class_count(r, labels, opt);
        } else {
            std::cerr << "error: unknown oracle subcommand\n";
            return kBadInput;
        }
        std::cout << out.dump() << "\n";
        return kOk;
    } catch (const dst::oracle::LimitError& e) {
        std::cerr << "oracle budget: " << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupported;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distinguishing number and index of trees and unicyclic graphs"};
    app.require_subcommand(1);

    // compute
    std::string compute_path;
    bool compute_oracle = false, compute_witness = false;
    auto* compute = app.add_subcommand("compute", "classify one graph from an edge-list file");
    compute->add_option("file", compute_path, "edge-list file")->required();
    compute->add_flag("--oracle", compute_oracle, "cross-check against brute force");
    compute->add_flag("--witness", compute_witness, "include witness labelings");

    // verify
    int theorem = 0, verify_max_n = 0, verify_oracle_max_n = 0;
    int jobs = default_jobs();
    auto* verify = app.add_subcommand("verify", "exhaustively verify a theorem");
    verify->add_option("--theorem", theorem, "1 (trees) or 2 (unicyclic)")
        ->required()
        ->check(CLI::Range(1, 2));
    verify->add_option("--max-n", verify_max_n, "largest order")->required();
    verify->add_option("--oracle-max-n", verify_oracle_max_n, "brute-force cross-check bound");
    verify->add_option("--jobs", jobs, "worker threads (1 = serial reference)");

    // census
    std::string census_family, census_out;
    int census_max_n = 0, census_oracle_max_n = 0, cycle_min = 0, cycle_max = 0;
    std::vector<std::string> census_filters;
    auto* census = app.add_subcommand("census", "classify every instance, one JSON per line");
    census->add_option("--family", census_family, "tree or unicyclic")->required();
    census->add_option("--max-n", census_max_n, "largest order")->required();
    census->add_option("--filter", census_filters, "in-T or bicentric (trees)");
    census->add_option("--cycle-min", cycle_min, "minimum cycle length (unicyclic)");
    census->add_option("--cycle-max", cycle_max, "maximum cycle length (unicyclic)");
    census->add_option("--oracle-max-n", census_oracle_max_n, "brute-force cross-check bound");
    census->add_option("--out", census_out, "output file (default stdout)");
    int census_jobs = default_jobs();
    census->add_option("--jobs", census_jobs, "worker threads (1 = serial)");

    // oracle
    std::string oracle_sub, oracle_path;
    int oracle_root = -1, oracle_labels = 2, oracle_max_n = 0;
    long long oracle_budget = 0;
    auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
    orc->add_option("sub", oracle_sub, "aut | D | Dprime | classes")->required();
    orc->add_option("file", oracle_path, "edge-list file")->required();
    orc->add_option("--root", oracle_root, "root vertex (classes)");
    orc->add_option("--labels", oracle_labels, "label count k (classes)");
    orc->add_option("--max-n", oracle_max_n, "override oracle size bound");
    orc->add_option("--budget", oracle_budget, "override enumeration budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (compute->parsed()) return cmd_compute(compute_path, compute_oracle, compute_witness);
        if (verify->parsed())
            return cmd_verify(theorem, verify_max_n, verify_oracle_max_n, jobs);
        if (census->parsed())
            return cmd_census(census_family, census_max_n, census_filters, cycle_min, cycle_max,
                              census_oracle_max_n, census_out, census_jobs);
        if (orc->parsed())
            return cmd_oracle(oracle_sub, oracle_path, oracle_root, oracle_labels, oracle_max_n,
                              oracle_budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
