// Exercises the command-line surface of the built `distinguish` binary:
// exit codes, JSON shape, determinism. The binary path comes from CMake.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dst/oracle.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

int failures = 0;
int checks = 0;

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

struct RunResult {
    int exit_code;
    std::string out;
};

fs::path tmpdir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "distinguish_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    fs::path out = tmpdir() / "stdout.txt";
    std::string cmd = std::string(DISTINGUISH_BIN) + " " + args + " > " + out.string() + " 2> " +
                      (tmpdir() / "stderr.txt").string();
    int rc = std::system(cmd.c_str());
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    return RunResult{WEXITSTATUS(rc), ss.str()};
}

std::string write_graph(const std::string& name, const std::string& contents) {
    fs::path p = tmpdir() / name;
    std::ofstream f(p);
    f << contents;
    return p.string();
}

void test_compute() {
    std::string p4 = write_graph("p4.edges", "4 3\n0 1\n1 2\n2 3\n");
    RunResult r = run("compute " + p4);
    expect(r.exit_code == 0, "compute p4 exits 0");
    json j = json::parse(r.out);
    expect(j["D"] == 2 && j["Dprime"] == 2, "p4 has D = D' = 2");
    expect(j["family"] == "tree" && j["in_family_T"] == false, "p4 report fields");
    expect(j["center"] == "bicentric", "p4 is bicentric");
    expect(!j.contains("witness_vertex"), "no witnesses without --witness");

    // the 18-vertex extremal tree
    std::ostringstream fig;
    fig << "18 17\n0 1\n";
    int next = 2;
    for (int side = 0; side < 2; ++side)
        for (int p = 0; p < 4; ++p) {
            fig << side << ' ' << next << '\n' << next << ' ' << next + 1 << '\n';
            next += 2;
        }
    std::string fig1 = write_graph("fig1.edges", fig.str());
    r = run("compute " + fig1 + " --witness");
    expect(r.exit_code == 0, "compute extremal tree exits 0");
    j = json::parse(r.out);
    expect(j["D"] == 2 && j["Dprime"] == 3 && j["in_family_T"] == true,
           "extremal tree D=2 D'=3 in family");
    expect(j["witness_vertex"].size() == 18, "vertex witness has length n");
    expect(j["witness_edge"].size() == 17, "edge witness has length m");
    for (const auto& lab : j["witness_vertex"])
        expect(lab.get<int>() >= 1 && lab.get<int>() <= 2, "vertex witness labels in [D]");
    for (const auto& e : j["witness_edge"])
        expect(e.size() == 3 && e[2].get<int>() >= 1 && e[2].get<int>() <= 3,
               "edge witness entries are [u, v, label]");

    // witnesses taken from the report must survive an oracle re-check
    {
        dst::Graph g = dst::parse_graph(fig.str());
        dst::oracle::Options big;
        big.max_n = 18;
        dst::VertexLabeling wv;
        wv.k = j["D"];
        for (const auto& lab : j["witness_vertex"]) wv.labels.push_back(lab.get<int>());
        expect(dst::oracle::is_distinguishing(g, wv, big), "vertex witness re-checks");
        dst::EdgeLabeling we;
        we.k = j["Dprime"];
        we.labels.assign(g.m(), 0);
        for (const auto& e : j["witness_edge"])
            we.labels[g.edge_index(e[0].get<int>(), e[1].get<int>())] = e[2].get<int>();
        expect(dst::oracle::is_distinguishing(g, we, big), "edge witness re-checks");
    }

    std::string c5 = write_graph("c5.edges", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    r = run("compute " + c5 + " --oracle");
    expect(r.exit_code == 0, "compute c5 --oracle exits 0");
    j = json::parse(r.out);
    expect(j["family"] == "unicyclic" && j["D"] == 3 && j["Dprime"] == 3, "c5 values");
    expect(j["checked_against_oracle"] == true, "oracle flag set");

    // report round-trips through serialization
    json reparsed = json::parse(j.dump());
    expect(reparsed == j, "report round-trips");

    std::string bad = write_graph("bad.edges", "3 2\n0 1\nx y\n");
    expect(run("compute " + bad).exit_code == 2, "parse error exits 2");

    std::string disc = write_graph("disc.edges", "4 2\n0 1\n2 3\n");
    expect(run("compute " + disc).exit_code == 3, "disconnected graph exits 3");

    std::string k2 = write_graph("k2.edges", "2 1\n0 1\n");
    expect(run("compute " + k2).exit_code == 3, "K2 exits 3 (no distinguishing index)");

    std::string dense = write_graph("k4.edges", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    expect(run("compute " + dense).exit_code == 3, "dense graph exits 3");

    expect(run("compute " + tmpdir().string() + "/missing.edges").exit_code == 6,
           "missing file exits 6");
}

void test_verify() {
    RunResult r = run("verify --theorem 1 --max-n 8 --oracle-max-n 5 --jobs 1");
    expect(r.exit_code == 0, "verify theorem 1 exits 0");
    json j = json::parse(r.out);
    expect(j["instances"] == 1 + 2 + 3 + 6 + 11 + 23, "verify theorem 1 instance count");
    expect(j["violations"].empty(), "no violations");

    RunResult again = run("verify --theorem 1 --max-n 8 --oracle-max-n 5 --jobs 1");
    json j2 = json::parse(again.out);
    j.erase("seconds");
    j2.erase("seconds");
    expect(j == j2, "verify output deterministic with --jobs 1");

    RunResult par = run("verify --theorem 1 --max-n 8 --oracle-max-n 5 --jobs 2");
    json jp = json::parse(par.out);
    jp.erase("seconds");
    expect(j == jp, "parallel verify matches serial");

    r = run("verify --theorem 2 --max-n 7 --oracle-max-n 5");
    expect(r.exit_code == 0, "verify theorem 2 exits 0");
    j = json::parse(r.out);
    expect(j["instances"] == 1 + 2 + 5 + 13 + 33, "verify theorem 2 instance count");

    // job count can come from the environment
    fs::path envout = tmpdir() / "env.txt";
    int rc = std::system(("DISTINGUISH_JOBS=2 " + std::string(DISTINGUISH_BIN) +
                          " verify --theorem 2 --max-n 6 > " + envout.string() + " 2>/dev/null")
                             .c_str());
    expect(WEXITSTATUS(rc) == 0, "DISTINGUISH_JOBS honored");
    std::ifstream envin(envout);
    std::ostringstream envss;
    envss << envin.rdbuf();
    expect(json::parse(envss.str())["violations"].empty(), "env-jobs run has no violations");

    expect(run("verify --theorem 1 --max-n 2").exit_code == 2,
           "theorem needs order at least 3");
    expect(run("verify --theorem 3 --max-n 5").exit_code == 2, "bad theorem flag exits 2");
}

void test_census() {
    fs::path outfile = tmpdir() / "census.jsonl";
    RunResult r = run("census --family tree --max-n 6 --filter in-T --out " + outfile.string());
    expect(r.exit_code == 0, "census exits 0");
    std::ifstream in(outfile);
    std::string line;
    bool found_double_star = false;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        json j = json::parse(line);
        expect(j["Dprime"] == j["D"].get<int>() + 1, "census in-T rows have D' = D + 1");
        if (j["n"] == 6 && j["D"] == 2 && j["Dprime"] == 3) found_double_star = true;
    }
    expect(lines > 0, "census produced rows");
    expect(found_double_star, "census contains the double star");

    RunResult second = run("census --family tree --max-n 6 --filter in-T");
    std::ifstream in2(outfile);
    std::ostringstream file_contents;
    file_contents << in2.rdbuf();
    expect(second.out == file_contents.str(), "census idempotent across runs");

    r = run("census --family unicyclic --max-n 5");
    expect(r.exit_code == 0, "unicyclic census exits 0");
    int rows = 0;
    std::istringstream rows_in(r.out);
    while (std::getline(rows_in, line)) {
        json j = json::parse(line);
        expect(j["D"] == j["Dprime"], "unicyclic rows have D = D'");
        ++rows;
    }
    expect(rows == 1 + 2 + 5, "unicyclic census row count");

    // empty result is a valid outcome
    r = run("census --family tree --max-n 3 --filter in-T");
    expect(r.exit_code == 0 && r.out.empty(), "empty census is valid");

    expect(run("census --family foo --max-n 5").exit_code == 2, "bad family exits 2");
    expect(run("census --family unicyclic --max-n 5 --filter in-T").exit_code == 2,
           "in-T filter rejected for unicyclic");
    expect(run("census --family tree --max-n 6 --out /nonexistent/dir/x.jsonl").exit_code == 6,
           "unwritable output exits 6");
}

void test_oracle() {
    std::string p4 = write_graph("p4b.edges", "4 3\n0 1\n1 2\n2 3\n");
    RunResult r = run("oracle aut " + p4);
    expect(r.exit_code == 0, "oracle aut exits 0");
    json j = json::parse(r.out);
    expect(j["aut_order"] == 2, "P4 has two automorphisms");
    expect(j["automorphisms"].size() == 2, "automorphism list present");

    std::string k13 = write_graph("k13.edges", "4 3\n0 1\n0 2\n0 3\n");
    r = run("oracle D " + k13);
    expect(json::parse(r.out)["brute_D"] == 3, "brute D of the claw");
    r = run("oracle Dprime " + k13);
    expect(json::parse(r.out)["brute_Dprime"] == 3, "brute D' of the claw");

    r = run("oracle classes " + k13 + " --root 0 --labels 3");
    expect(json::parse(r.out)["classes"] == 1, "claw has one class at k = 3");

    std::string c5 = write_graph("c5b.edges", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    expect(run("oracle D " + c5 + " --budget 2").exit_code == 5, "tiny budget exits 5");
    expect(run("oracle classes " + c5 + " --root 0 --labels 2").exit_code == 3,
           "classes on a non-tree exits 3");
    expect(run("oracle frobnicate " + c5).exit_code == 2, "unknown subcommand exits 2");
}

}  // namespace

int main() {
    test_compute();
    test_verify();
    test_census();
    test_oracle();
    if (failures == 0) {
        std::cout << "cli_tests: " << checks << " checks passed\n";
        return 0;
    }
    std::cout << "cli_tests: " << failures << " of " << checks << " checks FAILED\n";
    return 1;
}
