// Command-line front end: QE constants, QE/non-QE classification, explicit
// quadratic embeddings, small-graph scans and isometric containment checks.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qembed/canonical.hpp"
#include "qembed/embedding_search.hpp"
#include "qembed/graph.hpp"
#include "qembed/graph6.hpp"
#include "qembed/multipartite.hpp"
#include "qembed/spectral.hpp"

using json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 success, 1 domain errors, 2 usage/parse errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

qembed::Graph parse_edge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open edge file: " + path);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw UsageError(path + ": expected header line \"n m\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw UsageError(path + ": expected " + std::to_string(m) + " edge lines");
        edges.emplace_back(u, v);
    }
    try {
        return qembed::graph_from_edges(n, edges);
    } catch (const qembed::Error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// One graph input: exactly one of --g6 / --edges / --multipartite.
struct GraphSource {
    std::string g6;
    std::string edges_path;
    std::string multipartite;

    void add_options(CLI::App* cmd, const std::string& prefix = "") {
        auto dash = [&](const std::string& name) { return "--" + prefix + name; };
        auto* a = cmd->add_option(dash("g6"), g6, "graph6 record");
        auto* b = cmd->add_option(dash("edges"), edges_path,
                                  "edge-list file: first line \"n m\", then m lines \"u v\"");
        auto* c = cmd->add_option(dash("multipartite"), multipartite,
                                  "complete multipartite part sizes, e.g. 4,1,1,1 or 2^4");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }

    bool is_multipartite() const { return !multipartite.empty(); }

    qembed::PartitionSpec parts() const {
        try {
            return qembed::PartitionSpec::parse(multipartite);
        } catch (const qembed::Error& e) {
            throw UsageError(e.what());
        }
    }

    qembed::Graph resolve() const {
        if (!g6.empty()) {
            try {
                return qembed::parse_graph6(g6);
            } catch (const qembed::Error& e) {
                throw UsageError(e.what());
            }
        }
        if (!edges_path.empty()) return parse_edge_file(edges_path);
        if (!multipartite.empty()) return qembed::complete_multipartite_graph(parts());
        throw UsageError("no graph given; use --g6, --edges or --multipartite");
    }

    json descriptor() const {
        if (!g6.empty()) return json{{"g6", g6}};
        if (!edges_path.empty()) return json{{"edges", edges_path}};
        return json{{"multipartite", multipartite}};
    }
};

std::vector<double> stationary_certificate(const qembed::PartitionSpec& parts, double alpha) {
    const qembed::StationarySolution sol = qembed::stationary_solution(parts, alpha);
    std::vector<double> f;
    f.reserve(parts.vertex_count());
    for (int i = 0; i < parts.part_count(); ++i)
        f.insert(f.end(), parts[i], sol.xi[i]);
    return f;
}

double certificate_energy(const std::vector<double>& f, const qembed::DistanceMatrix& d) {
    double energy = 0.0;
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j) energy += f[i] * d(i, j) * f[j];
    return energy;
}

void print_certificate(const std::vector<double>& f) {
    std::cout << "certificate = [";
    for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? ", " : "") << fmt(f[i]);
    std::cout << "]\n";
}

// ---------------------------------------------------------------------------
// qec

struct QecArgs {
    GraphSource source;
    std::string method = "auto";
    bool certificate = false;
    bool as_json = false;
};

void run_qec(const QecArgs& args) {
    Stopwatch watch;
    json result;
    std::string method_tag;
    double residual = 0.0;
    std::optional<std::vector<double>> certificate;

    const bool closed_form_path =
        args.source.is_multipartite() && (args.method == "auto" || args.method == "closed-form");
    if (args.method == "closed-form" && !args.source.is_multipartite())
        throw UsageError("--method closed-form requires --multipartite input");

    if (closed_form_path) {
        const qembed::PartitionSpec parts = args.source.parts();
        const qembed::QecClosedForm closed = qembed::qec_multipartite(parts);
        result["qec"] = closed.value;
        if (auto exact = qembed::qec_multipartite_exact(parts))
            result["exact"] = exact->to_string();
        if (closed.alpha_star) {
            result["alpha_star"] = *closed.alpha_star;
            residual = std::abs(qembed::psi(*closed.alpha_star, parts));
            method_tag = "root-find";
        } else {
            method_tag = "closed-form";
        }
        if (args.certificate) {
            const double alpha = closed.alpha_star ? *closed.alpha_star : -parts[0];
            certificate = stationary_certificate(parts, alpha);
        }
    } else {
        const qembed::Graph g = args.source.resolve();
        const qembed::DistanceMatrix d = qembed::bfs_distances(g);
        const qembed::QecResult qec = qembed::qec_numeric(d);
        result["qec"] = qec.value;
        if (args.source.is_multipartite())
            if (auto exact = qembed::qec_multipartite_exact(args.source.parts()))
                result["exact"] = exact->to_string();
        method_tag = to_string(qec.method);
        residual = std::abs(certificate_energy(qec.certificate, d) - qec.value);
        const qembed::Spectrum spectrum = qembed::distance_spectrum(d);
        result["lambda1"] = spectrum.values[0];
        result["lambda2"] = spectrum.values[1];
        result["lambda2_equals_qec"] = std::abs(spectrum.values[1] - qec.value) <= 1e-9;
        if (args.certificate) certificate = qec.certificate;
    }

    if (args.as_json) {
        json record{{"command", "qec"},
                    {"input", args.source.descriptor()},
                    {"result", result},
                    {"method", method_tag},
                    {"residual", residual},
                    {"tolerances", json{{"non_qe_threshold", qembed::kNonQeThreshold}}}};
        if (certificate) record["result"]["certificate"] = *certificate;
        record["wall_ms"] = watch.elapsed_ms();
        std::cout << record.dump() << "\n";
        return;
    }
    std::cout << "QEC = " << fmt(result["qec"].get<double>());
    if (result.contains("exact")) std::cout << " (exact " << result["exact"].get<std::string>() << ")";
    std::cout << "\n";
    std::cout << "method: " << method_tag << "\n";
    if (result.contains("alpha_star"))
        std::cout << "alpha_star = " << fmt(result["alpha_star"].get<double>()) << "\n";
    std::cout << "residual = " << fmt(residual) << "\n";
    if (result.contains("lambda1")) {
        std::cout << "lambda1 = " << fmt(result["lambda1"].get<double>())
                  << ", lambda2 = " << fmt(result["lambda2"].get<double>()) << "\n";
        std::cout << "lambda2_equals_qec: "
                  << (result["lambda2_equals_qec"].get<bool>() ? "yes" : "no") << "\n";
    }
    if (certificate) print_certificate(*certificate);
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyArgs {
    GraphSource source;
    bool as_json = false;
};

void run_classify(const ClassifyArgs& args) {
    Stopwatch watch;
    json result;
    std::string method_tag;
    static const char* kConditionNames[] = {"none", "(i)", "(ii)", "(iii)", "(iv)"};

    if (args.source.is_multipartite()) {
        const qembed::PartitionSpec parts = args.source.parts();
        const bool non_qe = qembed::classify_non_qe(parts);
        const int condition = qembed::non_qe_condition(parts);
        const qembed::QecClosedForm closed = qembed::qec_multipartite(parts);
        result["class"] = non_qe ? "non-QE" : "QE";
        result["condition"] = kConditionNames[condition];
        json primaries = json::array();
        for (qembed::PrimaryGraph tag : qembed::contains_primary(parts))
            primaries.push_back(to_string(tag));
        result["contains_primary"] = primaries;
        result["qec"] = closed.value;
        if (auto exact = qembed::qec_multipartite_exact(parts))
            result["exact"] = exact->to_string();
        method_tag = closed.alpha_star ? "root-find" : "closed-form";
    } else {
        const qembed::Graph g = args.source.resolve();
        const qembed::QecResult qec = qembed::qec_numeric(qembed::bfs_distances(g));
        result["class"] = qec.value > qembed::kNonQeThreshold ? "non-QE" : "QE";
        result["qec"] = qec.value;
        method_tag = to_string(qec.method);
    }

    if (args.as_json) {
        json record{{"command", "classify"},
                    {"input", args.source.descriptor()},
                    {"result", result},
                    {"method", method_tag},
                    {"tolerances", json{{"non_qe_threshold", qembed::kNonQeThreshold}}},
                    {"wall_ms", watch.elapsed_ms()}};
        std::cout << record.dump() << "\n";
        return;
    }
    std::cout << "class: " << result["class"].get<std::string>() << "\n";
    if (result.contains("condition")) {
        std::cout << "condition: " << result["condition"].get<std::string>() << "\n";
        std::string list;
        for (const auto& p : result["contains_primary"]) {
            if (!list.empty()) list += ", ";
            list += p.get<std::string>();
        }
        std::cout << "contains primary: " << (list.empty() ? "none" : list) << "\n";
    }
    std::cout << "QEC = " << fmt(result["qec"].get<double>());
    if (result.contains("exact")) std::cout << " (exact " << result["exact"].get<std::string>() << ")";
    std::cout << "\nmethod: " << method_tag << "\n";
}

// ---------------------------------------------------------------------------
// embed

struct EmbedArgs {
    GraphSource source;
    std::string out_path;
    double tol = 1e-9;
    bool as_json = false;
};

void run_embed(const EmbedArgs& args) {
    Stopwatch watch;
    const qembed::Graph g = args.source.resolve();
    const qembed::DistanceMatrix d = qembed::bfs_distances(g);
    const qembed::EmbeddingCoords coords = qembed::quadratic_embedding(d, args.tol);

    double residual = 0.0;
    for (int x = 0; x < coords.n; ++x)
        for (int y = x + 1; y < coords.n; ++y) {
            double sq = 0.0;
            for (int c = 0; c < coords.dim; ++c) {
                const double diff = coords.points[x][c] - coords.points[y][c];
                sq += diff * diff;
            }
            residual = std::max(residual, std::abs(sq - d(x, y)));
        }

    json payload{{"n", coords.n}, {"dim", coords.dim}, {"residual", residual}};
    json points = json::array();
    for (const auto& row : coords.points) points.push_back(row);
    payload["points"] = points;

    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out) throw qembed::Error(qembed::errc::invalid_argument,
                                      "cannot write " + args.out_path);
        out << payload.dump(2) << "\n";
    }

    if (args.as_json) {
        json record{{"command", "embed"},
                    {"input", args.source.descriptor()},
                    {"result", payload},
                    {"method", "eigen"},
                    {"residual", residual},
                    {"tolerances", json{{"embed_tol", args.tol}}},
                    {"wall_ms", watch.elapsed_ms()}};
        std::cout << record.dump() << "\n";
        return;
    }
    if (!args.out_path.empty()) {
        std::cout << "n = " << coords.n << ", dim = " << coords.dim << "\n";
        std::cout << "max residual = " << fmt(residual) << "\n";
        std::cout << "wrote " << args.out_path << "\n";
    } else {
        std::cout << payload.dump() << "\n";
    }
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
    int n = 0;
    std::string file;
    bool non_qe_only = false;
    bool primary_only = false;
    std::string format = "json";
    int jobs = 0; // 0: take QEMBED_JOBS, else 1
    bool skip_errors = false;
};

int default_jobs() {
    if (const char* env = std::getenv("QEMBED_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

json record_to_json(const qembed::ScanRecord& rec) {
    return json{{"graph6", rec.graph6},
                {"n", rec.order},
                {"edges", rec.size},
                {"degree_sequence", rec.degree_sequence},
                {"qec", rec.qec},
                {"class", rec.non_qe ? "non-QE" : "QE"},
                {"primary", rec.non_qe && rec.primary},
                {"witnesses", rec.witnesses},
                {"method", "eigen"},
                {"residual", rec.residual}};
}

std::string record_to_csv(const qembed::ScanRecord& rec) {
    std::string degrees, witnesses;
    for (std::size_t i = 0; i < rec.degree_sequence.size(); ++i) {
        if (i) degrees += ' ';
        degrees += std::to_string(rec.degree_sequence[i]);
    }
    for (std::size_t i = 0; i < rec.witnesses.size(); ++i) {
        if (i) witnesses += ';';
        witnesses += rec.witnesses[i];
    }
    std::string row = rec.graph6;
    row += ',' + std::to_string(rec.order);
    row += ',' + std::to_string(rec.size);
    row += ',' + degrees;
    row += ',' + fmt(rec.qec);
    row += rec.non_qe ? ",non-QE" : ",QE";
    row += (rec.non_qe && rec.primary) ? ",true" : ",false";
    row += ',' + witnesses;
    row += ",eigen";
    row += ',' + fmt(rec.residual);
    return row;
}

void run_scan(const ScanArgs& args) {
    const int jobs = args.jobs >= 1 ? args.jobs : default_jobs();

    qembed::ScanReport report;
    if (!args.file.empty()) {
        std::ifstream file_stream;
        std::istream* in = &std::cin;
        if (args.file != "-") {
            file_stream.open(args.file);
            if (!file_stream) throw UsageError("cannot open " + args.file);
            in = &file_stream;
        }
        std::vector<std::pair<qembed::Graph, std::size_t>> parsed;
        std::vector<qembed::Graph6Diagnostic> diagnostics;
        try {
            diagnostics = qembed::read_graph6_stream(
                *in,
                [&parsed](qembed::Graph g, std::size_t line) {
                    parsed.emplace_back(std::move(g), line);
                },
                args.skip_errors ? qembed::Graph6StreamMode::skip
                                 : qembed::Graph6StreamMode::fail_fast);
        } catch (const qembed::Error& e) {
            throw UsageError(e.what());
        }
        for (const auto& diag : diagnostics)
            std::cerr << args.file << ":" << diag.line_number << ": " << diag.message << "\n";
        std::vector<qembed::Graph> graphs;
        for (auto& [g, line] : parsed) {
            const char* reason = nullptr;
            qembed::errc code = qembed::errc::invalid_argument;
            if (!qembed::is_connected(g)) {
                reason = "disconnected graph";
                code = qembed::errc::disconnected_graph;
            } else if (g.vertex_count() < 2) {
                reason = "graph needs at least two vertices";
            } else if (g.vertex_count() > qembed::kCanonicalLabelCap) {
                reason = "graph too large for canonical labeling (n > 8)";
                code = qembed::errc::too_large;
            }
            if (reason) {
                if (!args.skip_errors)
                    throw qembed::Error(code,
                                        args.file + ":" + std::to_string(line) + ": " + reason);
                std::cerr << args.file << ":" << line << ": skipping: " << reason << "\n";
                continue;
            }
            graphs.push_back(std::move(g));
        }
        report = qembed::scan_graphs(graphs, jobs);
    } else {
        if (args.n == 0) throw UsageError("scan needs -n N or --file PATH");
        report = qembed::non_qe_scan(args.n, jobs);
    }

    const int total = report.total();
    const int non_qe = report.non_qe_count();
    const int primary = report.primary_count();

    std::vector<const qembed::ScanRecord*> selected;
    for (const auto& rec : report.records) {
        if (args.primary_only && !(rec.non_qe && rec.primary)) continue;
        if (args.non_qe_only && !rec.non_qe) continue;
        selected.push_back(&rec);
    }

    if (args.format == "csv") {
        std::cout << "graph6,n,edges,degree_sequence,qec,class,primary,witnesses,method,residual\n";
        for (const auto* rec : selected) std::cout << record_to_csv(*rec) << "\n";
        std::cerr << "total=" << total << " non_qe=" << non_qe << " primary=" << primary << "\n";
    } else {
        for (const auto* rec : selected) std::cout << record_to_json(*rec).dump() << "\n";
        std::cout << json{{"summary",
                           json{{"total", total}, {"non_qe", non_qe}, {"primary", primary}}}}
                         .dump()
                  << "\n";
    }
}

// ---------------------------------------------------------------------------
// contains

struct ContainsArgs {
    GraphSource pattern;
    GraphSource target;
    bool as_json = false;
};

void run_contains(const ContainsArgs& args) {
    Stopwatch watch;
    const qembed::Graph pattern = args.pattern.resolve();
    const qembed::Graph target = args.target.resolve();
    const auto witness = qembed::find_isometric_embedding(pattern, target);

    if (args.as_json) {
        json record{{"command", "contains"},
                    {"input", json{{"pattern", args.pattern.descriptor()},
                                   {"target", args.target.descriptor()}}},
                    {"result", json{{"witness", witness ? json(witness->mapping) : json(nullptr)}}},
                    {"wall_ms", watch.elapsed_ms()}};
        std::cout << record.dump() << "\n";
        return;
    }
    if (!witness) {
        std::cout << "none\n";
        return;
    }
    std::cout << "witness:";
    for (std::size_t v = 0; v < witness->mapping.size(); ++v)
        std::cout << " " << v << "->" << witness->mapping[v];
    std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic embedding constants of finite connected graphs"};
    app.require_subcommand(1);

    QecArgs qec_args;
    auto* qec_cmd = app.add_subcommand("qec", "compute the QE constant");
    qec_args.source.add_options(qec_cmd);
    qec_cmd->add_option("--method", qec_args.method, "auto | eigen | closed-form")
        ->check(CLI::IsMember({"auto", "eigen", "closed-form"}))
        ->capture_default_str();
    qec_cmd->add_flag("--certificate", qec_args.certificate, "print an optimizer vector");
    qec_cmd->add_flag("--json", qec_args.as_json, "machine-readable output");

    ClassifyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "QE / non-QE classification");
    classify_args.source.add_options(classify_cmd);
    classify_cmd->add_flag("--json", classify_args.as_json, "machine-readable output");

    EmbedArgs embed_args;
    auto* embed_cmd = app.add_subcommand("embed", "construct a quadratic embedding");
    embed_args.source.add_options(embed_cmd);
    embed_cmd->add_option("--out,-o", embed_args.out_path, "write coordinates to this JSON file");
    embed_cmd->add_option("--tol", embed_args.tol, "relative PSD tolerance")->capture_default_str();
    embed_cmd->add_flag("--json", embed_args.as_json, "machine-readable output");

    ScanArgs scan_args;
    auto* scan_cmd = app.add_subcommand("scan", "scan graphs and classify each");
    scan_cmd->add_option("-n", scan_args.n, "scan all connected graphs on n vertices (2..6)");
    scan_cmd->add_option("--file", scan_args.file, "graph6 file, one record per line (- for stdin)");
    scan_cmd->add_flag("--non-qe-only", scan_args.non_qe_only, "only emit non-QE records");
    scan_cmd->add_flag("--primary", scan_args.primary_only, "only emit primary non-QE records");
    scan_cmd->add_option("--format", scan_args.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    scan_cmd->add_option("--jobs", scan_args.jobs, "worker threads (default: QEMBED_JOBS or 1)");
    scan_cmd->add_flag("--skip-errors", scan_args.skip_errors,
                       "log malformed records and continue");

    ContainsArgs contains_args;
    auto* contains_cmd =
        app.add_subcommand("contains", "search for an isometric embedding of a pattern");
    contains_args.pattern.add_options(contains_cmd, "pattern-");
    contains_args.target.add_options(contains_cmd, "target-");
    contains_cmd->add_flag("--json", contains_args.as_json, "machine-readable output");

    qec_cmd->callback([&] { run_qec(qec_args); });
    classify_cmd->callback([&] { run_classify(classify_args); });
    embed_cmd->callback([&] { run_embed(embed_args); });
    scan_cmd->callback([&] { run_scan(scan_args); });
    contains_cmd->callback([&] { run_contains(contains_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qembed::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
