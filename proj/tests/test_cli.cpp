#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "qembed/graph6.hpp"
#include "qembed/multipartite.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const char* cli_path() {
    const char* path = std::getenv("QEMBED_CLI");
    REQUIRE_MESSAGE(path != nullptr, "QEMBED_CLI must point at the qembed binary");
    return path;
}

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string command =
        (env.empty() ? "" : env + " ") + std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("cli qec") {
    RunResult r = run("qec --multipartite 3,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("QEC = 0.4") != std::string::npos);
    CHECK(r.out.find("exact 2/5") != std::string::npos);
    CHECK(r.out.find("root-find") != std::string::npos);

    r = run("qec --g6 A_");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("QEC = -1") != std::string::npos);
    CHECK(r.out.find("eigen") != std::string::npos);

    r = run("qec --multipartite 2^3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("QEC = 0") != std::string::npos);

    r = run("qec --multipartite 3,2 --json");
    CHECK(r.exit_code == 0);
    auto record = nlohmann::json::parse(r.out);
    CHECK(record["result"]["qec"].get<double>() == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(record["result"]["exact"] == "2/5");
    CHECK(record["method"] == "root-find");

    r = run("qec --multipartite 3,2 --certificate");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("certificate = [") != std::string::npos);

    // eigen on a multipartite graph agrees with the closed form
    r = run("qec --multipartite 3,2 --method eigen --json");
    auto eigen_record = nlohmann::json::parse(r.out);
    CHECK(eigen_record["result"]["qec"].get<double>() == doctest::Approx(0.4).epsilon(1e-8));
    CHECK(eigen_record["method"] == "eigen");

    // method/input mismatch is a usage error
    CHECK(run("qec --g6 A_ --method closed-form").exit_code == 2);
    // malformed graph6 is a parse error
    CHECK(run("qec --g6 'D?'").exit_code == 2);
    // missing source
    CHECK(run("qec").exit_code == 2);
}

TEST_CASE("cli classify") {
    RunResult r = run("classify --multipartite 6,1,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("class: non-QE") != std::string::npos);
    CHECK(r.out.find("condition: (ii)") != std::string::npos);
    CHECK(r.out.find("K_{5,1,1}") != std::string::npos);
    CHECK(r.out.find("K_{4,1,1,1}") != std::string::npos);

    r = run("classify --multipartite 2,2,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("class: QE") != std::string::npos);

    // the non-multipartite 5-vertex primary graph, by its graph6 record
    r = run("classify --g6 DNw");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("class: non-QE") != std::string::npos);
}

TEST_CASE("cli embed") {
    RunResult r = run("embed --g6 Cr"); // a 4-vertex QE graph
    CHECK(r.exit_code == 0);
    auto payload = nlohmann::json::parse(r.out);
    CHECK(payload["dim"].get<int>() <= 3);
    CHECK(payload["residual"].get<double>() <= 1e-8);
    CHECK(payload["points"].size() == payload["n"].get<std::size_t>());

    CHECK(run("embed --multipartite 3,2").exit_code == 1);

    r = run("embed --g6 A_");
    CHECK(r.exit_code == 0);
    payload = nlohmann::json::parse(r.out);
    CHECK(payload["dim"] == 1);
}

TEST_CASE("cli scan") {
    RunResult r = run("scan -n 5 --non-qe-only");
    CHECK(r.exit_code == 0);
    int records = 0;
    bool summary_ok = false;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        auto obj = nlohmann::json::parse(line);
        if (obj.contains("summary")) {
            CHECK(obj["summary"]["total"] == 21);
            CHECK(obj["summary"]["non_qe"] == 2);
            CHECK(obj["summary"]["primary"] == 2);
            summary_ok = true;
        } else {
            ++records;
            CHECK(obj["class"] == "non-QE");
            // round trip: reparse the graph6 field, it is a valid record
            CHECK(qembed::parse_graph6(obj["graph6"].get<std::string>()).vertex_count() ==
                  obj["n"].get<int>());
        }
    }
    CHECK(records == 2);
    CHECK(summary_ok);

    // identical invocations are byte-identical
    CHECK(run("scan -n 5 --non-qe-only").out == r.out);
    // job count does not change the output, whether from the flag or the env
    CHECK(run("scan -n 5 --non-qe-only --jobs 4").out == r.out);
    CHECK(run("scan -n 5 --non-qe-only", "QEMBED_JOBS=3").out == r.out);

    RunResult csv = run("scan -n 4 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("graph6,n,edges,degree_sequence,qec,class,primary,witnesses,method,residual\n",
                        0) == 0);

    CHECK(run("scan").exit_code == 2);
    CHECK(run("scan -n 9").exit_code == 1);
}

TEST_CASE("cli scan from a graph6 file") {
    const std::string path = "cli_scan_input.g6";
    {
        std::ofstream out(path);
        out << ">>graph6<<\n";
        out << qembed::write_graph6(qembed::complete_multipartite_graph({3, 2})) << "\n";
        out << "A_\n";
    }
    RunResult r = run("scan --file " + path);
    CHECK(r.exit_code == 0);
    int records = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        auto obj = nlohmann::json::parse(line);
        if (!obj.contains("summary")) ++records;
    }
    CHECK(records == 2);
    std::remove(path.c_str());

    // disconnected input is a domain error without --skip-errors
    const std::string bad = "cli_scan_bad.g6";
    {
        std::ofstream out(bad);
        out << "A?\n"; // two isolated vertices
    }
    CHECK(run("scan --file " + bad).exit_code == 1);
    RunResult skipped = run("scan --file " + bad + " --skip-errors");
    CHECK(skipped.exit_code == 0);
    std::remove(bad.c_str());
}

TEST_CASE("cli contains") {
    RunResult r = run("contains --pattern-multipartite 3,2 --target-multipartite 3,3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("witness:", 0) == 0);

    r = run("contains --pattern-g6 Ch --target-g6 Cr"); // spanning path of C4: not isometric
    CHECK(r.exit_code == 0);
    CHECK(r.out == "none\n");

    r = run("contains --pattern-g6 A_ --target-multipartite 2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("witness:", 0) == 0);
}

TEST_CASE("cli edge-list input") {
    const std::string path = "cli_edges.txt";
    {
        std::ofstream out(path);
        out << "4 4\n0 1\n1 2\n2 3\n3 0\n"; // C4
    }
    RunResult r = run("qec --edges " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("QEC = ") != std::string::npos);
    CHECK(r.out.find("eigen") != std::string::npos);

    {
        std::ofstream out(path);
        out << "4 1\n0 0\n"; // self-loop
    }
    CHECK(run("qec --edges " + path).exit_code == 2);

    {
        std::ofstream out(path);
        out << "4 1\n0 2\n"; // disconnected but well-formed
    }
    CHECK(run("qec --edges " + path).exit_code == 1);
    std::remove(path.c_str());

    CHECK(run("qec --edges does_not_exist.txt").exit_code == 2);
}

TEST_CASE("cli embed writes a coordinate file") {
    const std::string path = "cli_coords.json";
    RunResult r = run("embed --g6 Cr --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("wrote " + path) != std::string::npos);
    std::ifstream in(path);
    REQUIRE(in.good());
    auto payload = nlohmann::json::parse(in);
    CHECK(payload["n"] == 4);
    CHECK(payload["points"].size() == 4);
    std::remove(path.c_str());
}

TEST_CASE("cli usage errors") {
    CHECK(run("definitely-not-a-command").exit_code == 2);
    CHECK(run("qec --multipartite 3,2 --method bogus").exit_code == 2);
    CHECK(run("qec --multipartite nonsense").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}
