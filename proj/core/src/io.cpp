#include "ethicdual/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace ethicdual {

namespace {

// strip comment lines and join the rest into one token stream
std::string strip_comments(std::istream& in) {
    std::string out, line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        out += line;
        out += '\n';
    }
    return out;
}

Int read_int(std::istringstream& ts, const char* what) {
    std::string tok;
    if (!(ts >> tok)) throw std::invalid_argument(std::string("expected ") + what);
    try {
        return Int(tok);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string("bad integer token '") + tok + "'");
    }
}

}  // namespace

IntMatrix parse_matrix(std::istream& in) {
    std::istringstream ts(strip_comments(in));
    Int rows = read_int(ts, "row count");
    Int cols = read_int(ts, "column count");
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    IntMatrix m(rows.get_ui(), cols.get_ui());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = read_int(ts, "matrix entry");
    std::string extra;
    if (ts >> extra) throw std::invalid_argument("trailing tokens after matrix");
    return m;
}

IntMatrix parse_matrix_string(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

IntVec parse_int_vector(std::istream& in) {
    std::istringstream ts(strip_comments(in));
    IntVec v;
    std::string tok;
    while (ts >> tok) {
        try {
            v.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(std::string("bad integer token '") + tok + "'");
        }
    }
    if (v.empty()) throw std::invalid_argument("expected at least one integer");
    return v;
}

IntVec parse_int_vector_string(const std::string& text) {
    std::istringstream in(text);
    return parse_int_vector(in);
}

Graph parse_graph(std::istream& in) {
    std::istringstream ts(strip_comments(in));
    Int n = read_int(ts, "vertex count");
    Int m = read_int(ts, "edge count");
    if (n <= 0 || m < 0) throw std::invalid_argument("bad graph header");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (Int e = 0; e < m; ++e) {
        Int u = read_int(ts, "edge endpoint");
        Int v = read_int(ts, "edge endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        edges.emplace_back(u.get_ui(), v.get_ui());
    }
    std::string extra;
    if (ts >> extra) throw std::invalid_argument("trailing tokens after edge list");
    return Graph(n.get_ui(), std::move(edges));
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

using nlohmann::json;

json to_json(const Int& v) { return v.get_str(); }
json to_json(const Rat& v) { return rat_to_string(v); }

json to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.get_str());
    return a;
}

json to_json(const RatVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_to_string(x));
    return a;
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
        rows.push_back(std::move(r));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(r));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json to_json(const FgAbelianGroup& g) {
    return json{{"free_rank", g.free_rank},
                {"torsion_factors", to_json(g.torsion_factors)},
                {"display", g.to_string()}};
}

json to_json(const SmithDecomposition& d) {
    return json{{"U", to_json(d.U)},
                {"S", to_json(d.S)},
                {"V", to_json(d.V)},
                {"invariant_factors", to_json(d.invariant_factors)}};
}

json to_json(const UnifiedCertificate& c) {
    json j;
    j["status"] = to_string(c.status);
    if (!c.failing_component.empty()) j["failing_component"] = c.failing_component;
    if (c.integer_part) {
        json ip;
        ip["torsion_free"] = c.integer_part->torsion_free;
        ip["offending_factors"] = to_json(c.integer_part->offending_factors);
        ip["invariant_factors"] = to_json(c.integer_part->snf.invariant_factors);
        j["integer_part"] = std::move(ip);
    }
    if (c.face) {
        json f;
        f["zero_set"] = json::array();
        for (std::size_t i : c.face->zero_set) f["zero_set"].push_back(i);
        f["exposing_chain"] = json::array();
        for (const RatVec& y : c.face->exposing_chain) f["exposing_chain"].push_back(to_json(y));
        j["face"] = std::move(f);
        j["slater_on_face"] = c.slater_on_face;
    }
    if (c.lambda_Z) j["lambda_Z"] = to_json(*c.lambda_Z);
    if (c.lambda_R) j["lambda_R"] = to_json(*c.lambda_R);
    if (c.lambda_K) j["lambda_K"] = to_json(*c.lambda_K);
    if (c.primal_Z) j["primal_Z"] = to_json(*c.primal_Z);
    if (c.primal_R) j["primal_R"] = to_json(*c.primal_R);
    if (c.primal_K) j["primal_K"] = to_json(*c.primal_K);
    if (c.conic_infeasibility) j["conic_infeasibility"] = to_json(*c.conic_infeasibility);
    if (c.status == CertificateStatus::complete) {
        j["primal_value"] = rat_to_string(c.primal_value);
        j["dual_value"] = rat_to_string(c.dual_value);
    }
    return j;
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad integer string in JSON: " + j.get<std::string>());
        }
    }
    throw std::invalid_argument("expected integer (number or decimal string)");
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("expected rational (\"p/q\" string or integer)");
}

IntVec int_vec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected array of integers");
    IntVec v;
    for (const auto& e : j) v.push_back(int_from_json(e));
    return v;
}

RatVec rat_vec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected array of rationals");
    RatVec v;
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

namespace {

template <typename M, typename FromJson>
M matrix_from_json(const json& j, FromJson&& elem) {
    // either the {rows, cols, entries} object or a plain array of rows
    const json* entries = &j;
    if (j.is_object()) {
        if (!j.contains("entries")) throw std::invalid_argument("matrix object lacks 'entries'");
        entries = &j.at("entries");
    }
    if (!entries->is_array() || entries->empty())
        throw std::invalid_argument("matrix entries must be a nonempty array of rows");
    std::size_t rows = entries->size();
    std::size_t cols = (*entries)[0].size();
    M m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& r = (*entries)[i];
        if (!r.is_array() || r.size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = elem(r[k]);
    }
    return m;
}

}  // namespace

IntMatrix int_matrix_from_json(const json& j) {
    return matrix_from_json<IntMatrix>(j, int_from_json);
}

RatMatrix rat_matrix_from_json(const json& j) {
    return matrix_from_json<RatMatrix>(j, rat_from_json);
}

UnifiedProblem unified_problem_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("problem JSON must be an object");
    UnifiedProblem p;
    if (j.contains("integer")) {
        const auto& b = j.at("integer");
        p.integer = IntegerComponent{int_matrix_from_json(b.at("A")),
                                     int_vec_from_json(b.at("b")),
                                     int_vec_from_json(b.at("c"))};
    }
    if (j.contains("real")) {
        const auto& b = j.at("real");
        p.real = RationalComponent{rat_matrix_from_json(b.at("A")),
                                   rat_vec_from_json(b.at("b")),
                                   rat_vec_from_json(b.at("c"))};
    }
    if (j.contains("conic")) {
        const auto& b = j.at("conic");
        p.conic = RationalComponent{rat_matrix_from_json(b.at("A")),
                                    rat_vec_from_json(b.at("b")),
                                    rat_vec_from_json(b.at("c"))};
    }
    if (!p.integer && !p.real && !p.conic)
        throw std::invalid_argument("problem JSON has no component blocks");
    return p;
}

json to_json(const UnifiedProblem& p) {
    json j = json::object();
    if (p.integer)
        j["integer"] = json{{"A", to_json(p.integer->a)},
                            {"b", to_json(p.integer->b)},
                            {"c", to_json(p.integer->c)}};
    if (p.real)
        j["real"] = json{{"A", to_json(p.real->a)},
                         {"b", to_json(p.real->b)},
                         {"c", to_json(p.real->c)}};
    if (p.conic)
        j["conic"] = json{{"A", to_json(p.conic->a)},
                          {"b", to_json(p.conic->b)},
                          {"c", to_json(p.conic->c)}};
    return j;
}

}  // namespace ethicdual
