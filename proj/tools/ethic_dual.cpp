// Command-line front door: parses the text/JSON formats, dispatches to the
// library, and emits versioned JSON documents. Every document embeds its
// input and a "verified" flag recomputed by substitution, so any emitted
// file can be re-checked in a fresh process with --recheck.
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ethicdual/ethic.hpp"
#include "ethicdual/facial.hpp"
#include "ethicdual/graph.hpp"
#include "ethicdual/integer_duality.hpp"
#include "ethicdual/io.hpp"

using json = nlohmann::json;
using namespace ethicdual;

namespace {

constexpr const char* kSchema = "ethic-dual/1";
constexpr int kExitComputed = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

struct Outcome {
    json result;             // command-specific fields, merged into the document
    bool verified = false;   // recomputed by substitution at emission time
    bool negative = false;   // certified negative: infeasible / gap / violation
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return Graph(n, std::move(edges));
}

json separator_to_json(const std::map<Exponent, Rat>& sep) {
    json a = json::array();
    for (const auto& [alpha, value] : sep)
        a.push_back(json{{"alpha", to_json(alpha)}, {"value", rat_to_string(value)}});
    return a;
}

// ---------------------------------------------------------------------------
// compute functions: input JSON -> Outcome. All substitution checks live
// here so that --recheck exercises them in a fresh process.

Outcome compute_snf(const json& input) {
    IntMatrix a = int_matrix_from_json(input.at("matrix"));
    SmithDecomposition d = smith_normal_form(a);
    Outcome out;
    out.result["snf"] = to_json(d);
    out.result["invariant_factors"] = to_json(d.invariant_factors);
    out.result["rank"] = d.rank();
    out.verified = d.verify(a);
    return out;
}

Outcome compute_cokernel(const json& input) {
    IntMatrix a = int_matrix_from_json(input.at("matrix"));
    SmithDecomposition d = smith_normal_form(a);
    FgAbelianGroup g = cokernel(a);
    Outcome out;
    out.result["cokernel"] = to_json(g);
    Int product = 1;
    for (const Int& f : g.torsion_factors) product *= f;
    out.verified = d.verify(a) && g.free_rank == a.rows() - d.rank() &&
                   product == g.torsion_order();
    return out;
}

Outcome compute_jacobian(const json& input) {
    Graph g = graph_from_json(input.at("graph"));
    FgAbelianGroup jac = jacobian(g);
    Outcome out;
    out.result["jacobian"] = to_json(jac);
    // Kirchhoff cross-check: group order against the tree count
    out.verified = jac.torsion_order() == spanning_tree_count(g);
    return out;
}

Outcome compute_trees(const json& input) {
    Graph g = graph_from_json(input.at("graph"));
    Int tau = spanning_tree_count(g);
    Outcome out;
    out.result["tau"] = to_json(tau);
    // substitution: cofactor determinant of the reduced Laplacian
    IntMatrix l = laplacian(g);
    std::vector<std::size_t> keep;
    for (std::size_t i = 1; i < g.vertex_count(); ++i) keep.push_back(i);
    Int cofactor = g.vertex_count() == 1 ? Int(1) : l.submatrix(keep, keep).determinant();
    out.verified = tau == cofactor;
    return out;
}

Outcome compute_reduce(const json& input) {
    Graph g = graph_from_json(input.at("graph"));
    Divisor d{int_vec_from_json(input.at("divisor"))};
    std::size_t q = input.value("base", 0);
    if (d.values.size() != g.vertex_count())
        throw std::invalid_argument("divisor length does not match vertex count");
    if (q >= g.vertex_count()) throw std::invalid_argument("base vertex out of range");
    Divisor r = dhar_reduce(g, d, q);
    Outcome out;
    out.result["reduced"] = to_json(r.values);
    out.result["base"] = q;
    out.verified = is_q_reduced(g, r, q) &&
                   solve_integer(laplacian(g), sub(d.values, r.values)).has_value();
    return out;
}

Outcome compute_rank(const json& input) {
    Graph g = graph_from_json(input.at("graph"));
    Divisor d{int_vec_from_json(input.at("divisor"))};
    long cap = input.value("cap", 32L);
    if (d.values.size() != g.vertex_count())
        throw std::invalid_argument("divisor length does not match vertex count");
    long r = baker_norine_rank(g, d, cap);
    Outcome out;
    out.result["rank"] = r;
    // substitution: the Riemann-Roch identity ties r(D) to r(K-D)
    out.verified = riemann_roch_check(g, d, cap).holds;
    return out;
}

Outcome compute_rr_check(const json& input) {
    Graph g = graph_from_json(input.at("graph"));
    Divisor d{int_vec_from_json(input.at("divisor"))};
    long cap = input.value("cap", 32L);
    if (d.values.size() != g.vertex_count())
        throw std::invalid_argument("divisor length does not match vertex count");
    RiemannRochReport rep = riemann_roch_check(g, d, cap);
    Outcome out;
    out.result["lhs"] = rep.lhs;
    out.result["rhs"] = rep.rhs;
    out.result["holds"] = rep.holds;
    out.verified = rep.holds;
    out.negative = !rep.holds;
    return out;
}

Outcome compute_farkas(const json& input) {
    IntMatrix a = int_matrix_from_json(input.at("matrix"));
    IntVec b = int_vec_from_json(input.at("rhs"));
    unsigned long cap = input.value("cap", 1000000UL);
    FarkasOutcome fo = discrete_farkas(a, b, cap);
    Outcome out;
    out.result["feasible"] = fo.feasible;
    if (fo.witness) out.result["witness"] = to_json(*fo.witness);
    if (fo.separator) out.result["separator"] = separator_to_json(*fo.separator);
    if (fo.feasible) {
        bool ok = fo.witness && a * *fo.witness == b;
        for (const Int& v : fo.witness.value_or(IntVec{}))
            if (v < 0) ok = false;
        out.verified = ok;
    } else {
        // re-evaluate the separator on every truncated-cone generator and
        // on the target binomial z^b - 1
        out.negative = true;
        bool ok = fo.separator.has_value();
        if (ok) {
            const auto& y = *fo.separator;
            auto value_of = [&](const Exponent& e) {
                auto it = y.find(e);
                return it == y.end() ? Rat(0) : it->second;
            };
            for (const Exponent& alpha : farkas_shift_lattice(a, b, cap)) {
                for (std::size_t j = 0; j < a.cols() && ok; ++j) {
                    Exponent head = alpha;
                    for (std::size_t i = 0; i < head.size(); ++i) head[i] += a(i, j);
                    if (value_of(head) - value_of(alpha) < 0) ok = false;
                }
                if (!ok) break;
            }
            if (ok && value_of(b) - value_of(Exponent(b.size(), 0)) >= 0) ok = false;
        }
        out.verified = ok;
    }
    return out;
}

Outcome compute_intdual(const json& input) {
    IntMatrix a = int_matrix_from_json(input.at("matrix"));
    std::optional<IntVec> c;
    if (input.contains("objective")) c = int_vec_from_json(input.at("objective"));
    IntegerCertificate cert = torsion_certificate(a);
    Outcome out;
    out.result["torsion_free"] = cert.torsion_free;
    out.result["offending_factors"] = to_json(cert.offending_factors);
    out.result["invariant_factors"] = to_json(cert.snf.invariant_factors);
    bool ok = cert.snf.verify(a);
    if (c) {
        auto lambda = adjoint_solve(a, *c);
        if (lambda) {
            out.result["adjoint_multiplier"] = to_json(*lambda);
            if (a.transpose() * *lambda != negate(*c)) ok = false;
        } else {
            out.result["adjoint_multiplier"] = nullptr;
        }
    }
    out.verified = ok;
    out.negative = !cert.torsion_free;
    return out;
}

Outcome compute_certify(const json& input) {
    UnifiedProblem p = unified_problem_from_json(input.at("problem"));
    UnifiedCertificate cert = unified_certificate(p);
    Outcome out;
    out.result["certificate"] = to_json(cert);
    out.result["status"] = to_string(cert.status);
    out.verified = cert.verify(p);
    out.negative = cert.status != CertificateStatus::complete;
    return out;
}

MorphismChain chain_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("chain JSON must be a nonempty array of matrices");
    std::vector<IntMatrix> steps;
    for (const auto& e : j) {
        if (e.is_array() && !e.empty() && e[0].is_string() &&
            e[0].get<std::string>().find_first_of(" \t") != std::string::npos) {
            // matrix text format embedded as an array of lines
            std::string text;
            for (const auto& line : e) {
                text += line.get<std::string>();
                text += '\n';
            }
            steps.push_back(parse_matrix_string(text));
        } else {
            steps.push_back(int_matrix_from_json(e));
        }
    }
    return MorphismChain(std::move(steps));
}

Outcome compute_entropy(const json& input) {
    MorphismChain chain = chain_from_json(input.at("chain"));
    MemoryReport rep = ethic_entropy_profile(chain);
    auto decay = decay_report(chain);
    Outcome out;
    out.result["per_time"] = json::array();
    bool ok = true;
    for (std::size_t k = 0; k < rep.per_time.size(); ++k) {
        const MemoryEntry& e = rep.per_time[k];
        json entry{{"t", e.t},
                   {"memory", to_json(e.memory)},
                   {"torsion_order", to_json(e.torsion_order)},
                   {"entropy", e.entropy},
                   {"nonincreasing_from_previous", decay[k].nonincreasing_from_previous}};
        out.result["per_time"].push_back(std::move(entry));
        // substitution: the exact order is the product of the factors
        Int product = 1;
        for (const Int& f : e.memory.torsion_factors) product *= f;
        if (product != e.torsion_order) ok = false;
        if (ethic_memory(chain, e.t) != e.memory) ok = false;
    }
    out.verified = ok;
    return out;
}

Outcome compute_reversible(const json& input) {
    IntMatrix f = int_matrix_from_json(input.at("matrix"));
    ReversibilityReport rep = reversibility_check(f);
    Outcome out;
    out.result["reversible"] = rep.reversible;
    out.result["memory"] = to_json(rep.memory);
    out.verified = rep.reversible == rep.memory.is_trivial();
    out.negative = !rep.reversible;
    return out;
}

Outcome compute(const std::string& command, const json& input) {
    if (command == "snf") return compute_snf(input);
    if (command == "cokernel") return compute_cokernel(input);
    if (command == "jacobian") return compute_jacobian(input);
    if (command == "trees") return compute_trees(input);
    if (command == "reduce") return compute_reduce(input);
    if (command == "rank") return compute_rank(input);
    if (command == "rr-check") return compute_rr_check(input);
    if (command == "farkas") return compute_farkas(input);
    if (command == "intdual") return compute_intdual(input);
    if (command == "certify") return compute_certify(input);
    if (command == "entropy") return compute_entropy(input);
    if (command == "reversible") return compute_reversible(input);
    throw std::invalid_argument("unknown command '" + command + "'");
}

json make_document(const std::string& command, const json& input, const Outcome& out) {
    json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["input"] = input;
    doc.update(out.result);
    doc["verified"] = out.verified;
    return doc;
}

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot write " + out_path);
        f << doc.dump(2) << "\n";
    }
}

int run_command(const std::string& command, const json& input, const std::string& out_path) {
    Outcome out = compute(command, input);
    emit(make_document(command, input, out), out_path);
    if (!out.verified) return kExitNegative;
    return out.negative ? kExitNegative : kExitComputed;
}

/// Re-verify a previously emitted document: recompute from the embedded
/// input and demand both substitution success and result equality.
int run_recheck(const std::string& doc_path, const std::string& out_path) {
    json doc = json::parse(read_file(doc_path));
    if (doc.value("schema", "") != kSchema)
        throw std::invalid_argument("unrecognized schema in " + doc_path);
    std::string command = doc.at("command").get<std::string>();
    Outcome fresh = compute(command, doc.at("input"));
    json fresh_doc = make_document(command, doc.at("input"), fresh);
    bool matches = true;
    for (auto& [key, value] : fresh_doc.items()) {
        if (key == "verified") continue;
        if (!doc.contains(key) || doc.at(key) != value) matches = false;
    }
    bool ok = fresh.verified && matches && doc.value("verified", false);
    json report{{"schema", kSchema},
                {"command", command},
                {"recheck", true},
                {"matches_original", matches},
                {"verified", ok}};
    emit(report, out_path);
    return ok ? kExitComputed : kExitNegative;
}

/// Process every *.json job in a directory (files holding {command, input}
/// documents), writing <name>.out.json beside each.
int run_batch(const std::string& dir, unsigned jobs) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const fs::path& p = entry.path();
        if (p.extension() != ".json") continue;
        if (p.stem().string().ends_with(".out")) continue;
        files.push_back(p);
    }
    std::sort(files.begin(), files.end());
    std::atomic<std::size_t> next{0};
    std::atomic<int> worst{kExitComputed};
    std::mutex log_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= files.size()) return;
            const fs::path& p = files[i];
            int code;
            json doc;
            try {
                json job = json::parse(read_file(p.string()));
                std::string command = job.at("command").get<std::string>();
                Outcome out = compute(command, job.at("input"));
                doc = make_document(command, job.at("input"), out);
                code = out.verified ? (out.negative ? kExitNegative : kExitComputed)
                                    : kExitNegative;
            } catch (const std::exception& e) {
                doc = json{{"schema", kSchema}, {"error", e.what()}};
                code = kExitInputError;
            }
            fs::path out_path = p;
            out_path.replace_extension(".out.json");
            std::ofstream f(out_path);
            f << doc.dump(2) << "\n";
            int prev = worst.load();
            while (code > prev && !worst.compare_exchange_weak(prev, code)) {
            }
            std::lock_guard<std::mutex> lock(log_mutex);
            std::cout << p.filename().string() << " -> exit " << code << "\n";
        }
    };
    if (jobs == 0) jobs = 1;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return worst.load();
}

unsigned long env_cap(unsigned long fallback) {
    if (const char* s = std::getenv("ETHIC_DUAL_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("ETHIC_DUAL_CAP must be a positive integer");
    }
    return fallback;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological duality toolkit"};
    app.require_subcommand(0, 1);

    std::string out_path;
    app.add_option("--out", out_path, "write the JSON document to a file instead of stdout");

    std::string batch_dir;
    unsigned jobs = 1;
    app.add_option("--batch", batch_dir, "process a directory of {command, input} job files");
    app.add_option("--jobs", jobs, "worker threads for --batch");

    std::string matrix_path, rhs_path, objective_path, graph_path, divisor_path;
    std::string spec_path, chain_path, recheck_path;
    std::size_t base_vertex = 0;
    unsigned long cap = 0;
    bool cap_given = false;

    auto add_recheck = [&](CLI::App* cmd) {
        cmd->add_option("--recheck", recheck_path,
                        "re-verify a previously emitted document instead of computing");
    };
    auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", cap, "enumeration cap")->each([&](const std::string&) {
            cap_given = true;
        });
    };

    CLI::App* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("--matrix", matrix_path, "matrix text file");
    add_recheck(snf);

    CLI::App* coker = app.add_subcommand("cokernel", "cokernel structure of an integer matrix");
    coker->add_option("--matrix", matrix_path, "matrix text file");
    add_recheck(coker);

    CLI::App* jac = app.add_subcommand("jacobian", "Jacobian (sandpile) group of a graph");
    jac->add_option("--graph", graph_path, "graph text file");
    add_recheck(jac);

    CLI::App* trees = app.add_subcommand("trees", "spanning tree count of a graph");
    trees->add_option("--graph", graph_path, "graph text file");
    add_recheck(trees);

    CLI::App* reduce = app.add_subcommand("reduce", "q-reduced form of a divisor");
    reduce->add_option("--graph", graph_path, "graph text file");
    reduce->add_option("--divisor", divisor_path, "divisor file (n integers)");
    reduce->add_option("--base", base_vertex, "base vertex q (default 0)");
    add_recheck(reduce);

    CLI::App* rank = app.add_subcommand("rank", "Baker-Norine rank of a divisor");
    rank->add_option("--graph", graph_path, "graph text file");
    rank->add_option("--divisor", divisor_path, "divisor file (n integers)");
    add_cap(rank);
    add_recheck(rank);

    CLI::App* rr = app.add_subcommand("rr-check", "Riemann-Roch identity check");
    rr->add_option("--graph", graph_path, "graph text file");
    rr->add_option("--divisor", divisor_path, "divisor file (n integers)");
    add_cap(rr);
    add_recheck(rr);

    CLI::App* farkas = app.add_subcommand("farkas", "discrete Farkas feasibility of Ax = b over N");
    farkas->add_option("--matrix", matrix_path, "nonnegative matrix text file");
    farkas->add_option("--rhs", rhs_path, "nonnegative rhs file");
    add_cap(farkas);
    add_recheck(farkas);

    CLI::App* intdual = app.add_subcommand("intdual", "integer duality / torsion certificate");
    intdual->add_option("--matrix", matrix_path, "matrix text file");
    intdual->add_option("--objective", objective_path, "objective vector file (optional)");
    add_recheck(intdual);

    CLI::App* certify = app.add_subcommand("certify", "unified strong-duality certificate");
    certify->add_option("--spec", spec_path, "problem JSON file");
    add_recheck(certify);

    CLI::App* entropy = app.add_subcommand("entropy", "ethic memory / entropy profile of a chain");
    entropy->add_option("--chain", chain_path, "chain JSON file");
    add_recheck(entropy);

    CLI::App* reversible = app.add_subcommand("reversible", "hysteresis / reversibility check");
    reversible->add_option("--matrix", matrix_path, "square matrix text file");
    add_recheck(reversible);

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (!batch_dir.empty()) return run_batch(batch_dir, jobs);
        if (app.get_subcommands().empty())
            throw std::invalid_argument("no subcommand given (see --help)");
        CLI::App* cmd = app.get_subcommands().front();
        std::string name = cmd->get_name();

        if (!recheck_path.empty()) return run_recheck(recheck_path, out_path);

        auto need = [&](const std::string& value, const char* flag) -> const std::string& {
            if (value.empty())
                throw std::invalid_argument(name + " requires " + flag);
            return value;
        };
        json input;
        if (name == "snf" || name == "cokernel" || name == "reversible") {
            input["matrix"] = to_json(parse_matrix_string(read_file(need(matrix_path, "--matrix"))));
        } else if (name == "jacobian" || name == "trees") {
            input["graph"] = graph_to_json(parse_graph_string(read_file(need(graph_path, "--graph"))));
        } else if (name == "reduce" || name == "rank" || name == "rr-check") {
            input["graph"] = graph_to_json(parse_graph_string(read_file(need(graph_path, "--graph"))));
            input["divisor"] = to_json(parse_int_vector_string(read_file(need(divisor_path, "--divisor"))));
            if (name == "reduce") input["base"] = base_vertex;
            if (name != "reduce") input["cap"] = cap_given ? (long)cap : (long)env_cap(32);
        } else if (name == "farkas") {
            input["matrix"] = to_json(parse_matrix_string(read_file(need(matrix_path, "--matrix"))));
            input["rhs"] = to_json(parse_int_vector_string(read_file(need(rhs_path, "--rhs"))));
            input["cap"] = cap_given ? cap : env_cap(1000000);
        } else if (name == "intdual") {
            input["matrix"] = to_json(parse_matrix_string(read_file(need(matrix_path, "--matrix"))));
            if (!objective_path.empty())
                input["objective"] = to_json(parse_int_vector_string(read_file(objective_path)));
        } else if (name == "certify") {
            UnifiedProblem p = unified_problem_from_json(json::parse(read_file(need(spec_path, "--spec"))));
            input["problem"] = to_json(p);
        } else if (name == "entropy") {
            json raw = json::parse(read_file(need(chain_path, "--chain")));
            MorphismChain chain = chain_from_json(raw);
            json canonical = json::array();
            for (const IntMatrix& m : chain.steps) canonical.push_back(to_json(m));
            input["chain"] = std::move(canonical);
        }
        return run_command(name, input, out_path);
    } catch (const std::exception& e) {
        json err{{"schema", kSchema}, {"error", e.what()}};
        std::cout << err.dump(2) << "\n";
        return kExitInputError;
    }
}
