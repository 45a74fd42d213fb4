#ifndef ICRES_CLI_HPP
#define ICRES_CLI_HPP

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clutter.hpp"
#include "error.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "lp.hpp"
#include "oracle.hpp"
#include "polyhedra.hpp"
#include "rational.hpp"

namespace icres::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { Ok = 0, InputError = 1, CrossCheckMismatch = 2, TooLarge = 3 };

namespace detail {

inline Json vec(const RationalVector& v)
{
    auto out = Json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

inline Json vec(const IntVector& v)
{
    auto out = Json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

inline Json vec(const ExponentVector& v)
{
    auto out = Json::array();
    for (auto x : v)
        out.push_back(std::to_string(x));
    return out;
}

inline Json vertex_list(const PolyhedronVertices& q)
{
    auto out = Json::array();
    for (const auto& v : q.vertices)
        out.push_back(vec(v));
    return out;
}

inline Json clutter_json(const Clutter& c)
{
    Json out;
    out["vertices"] = c.vertex_count();
    out["edges"] = Json::array();
    for (const auto& e : c.edges()) {
        auto labels = Json::array();
        for (auto i : e.indices())
            labels.push_back(i + 1);
        out["edges"].push_back(std::move(labels));
    }
    return out;
}

inline bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

inline std::string text_value(const Json& j)
{
    if (j.is_array() && j.empty())
        return "none";
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "none";
    if (j.is_array()) {
        std::string out = "(";
        for (std::size_t i = 0; i < j.size(); ++i)
            out += (i ? ", " : "") + text_value(j[i]);
        return out + ")";
    }
    if (j.is_object()) {
        std::string out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out += (out.empty() ? "" : " ") + it.key() + "=" + text_value(it.value());
        return out;
    }
    return j.dump();
}

// One "key: value" line per scalar or vector; lists of vectors and records get one line per element.
inline void write_text(std::ostream& out, const Json& body, const std::string& prefix = "")
{
    for (auto it = body.begin(); it != body.end(); ++it) {
        const auto key = prefix + it.key();
        const auto& v = it.value();
        bool per_line = v.is_array() && !v.empty() && (!is_scalar(v[0]) || it.key() == "warnings");
        if (v.is_object())
            write_text(out, v, key + ".");
        else if (per_line)
            for (const auto& item : v)
                out << key << ": " << text_value(item) << '\n';
        else
            out << key << ": " << text_value(v) << '\n';
    }
}

struct Settings
{
    std::string format = "text";
    bool timing = false;
    std::uint64_t seed = 0;   // accepted for interface stability; nothing is random
};

inline void emit(std::ostream& out, const Settings& settings, const std::optional<ClutterDocument>& input,
                 Json body, std::chrono::steady_clock::time_point start)
{
    Json report;
    if (input) {
        Json echo;
        echo["name"] = input->name ? Json(*input->name) : Json(nullptr);
        auto body_of_input = clutter_json(input->clutter);
        echo["vertices"] = body_of_input["vertices"];
        echo["edges"] = body_of_input["edges"];
        report["input"] = std::move(echo);
    }
    for (auto it = body.begin(); it != body.end(); ++it)
        report[it.key()] = it.value();
    if (settings.timing) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report["elapsed_ms"] = ms;
    }
    else
        report["elapsed_ms"] = nullptr;

    if (settings.format == "json") {
        out << report.dump(2) << '\n';
        return;
    }
    if (input)
        out << "input: " << input->name.value_or("(unnamed)") << ' ' << input->clutter.to_string() << '\n';
    report.erase("input");
    if (!settings.timing)
        report.erase("elapsed_ms");
    write_text(out, report);
}

inline Json facet_json(const PrimitiveHalfspace& h)
{
    return vec(h.normal);
}

inline Json command_vertices(const Clutter& c, bool dual)
{
    auto q = covering_polyhedron_vertices(dual ? blocker(c) : c);
    Json out;
    out["polyhedron"] = dual ? "Q(I^v)" : "Q(I)";
    out["count"] = q.size();
    out["integral_count"] = q.integral_count;
    out["vertices"] = vertex_list(q);
    return out;
}

inline Json command_blocker(const Clutter& c)
{
    Json out;
    out["blocker"] = clutter_json(blocker(c));
    return out;
}

inline Json command_resurgence(const Clutter& c, const std::string& method)
{
    Json out;
    out["method"] = method;
    std::optional<Rational> by_duality, by_lp;
    Json duality = nullptr, lp = nullptr;
    if (method != "lp") {
        auto m = ic_resurgence(c);
        by_duality = m.rho;
        duality = Json::object();
        duality["rho_ic"] = to_string(m.rho);
        duality["min_inner_product"] = to_string(m.inner_product);
        duality["u"] = vec(m.u);
        duality["v"] = vec(m.v);
    }
    if (method != "duality") {
        auto facets = rees_cone_facets(c);
        auto details = rho_via_lp_details(facets);
        by_lp = details.rho;
        lp = Json::object();
        lp["rho_ic"] = to_string(details.rho);
        lp["per_facet"] = Json::array();
        for (std::size_t j = 0; j < facets.nontrivial.size(); ++j) {
            Json row;
            row["facet"] = facet_json(facets.nontrivial[j]);
            row["rho_j"] = to_string(details.per_facet[j]);
            lp["per_facet"].push_back(std::move(row));
        }
    }
    if (by_duality && by_lp && *by_duality != *by_lp)
        throw Error(ErrorKind::CrossCheckFailed, "duality formula gives " + to_string(*by_duality)
                    + " but the facet LPs give " + to_string(*by_lp));
    out["rho_ic"] = to_string(by_duality ? *by_duality : *by_lp);
    out["duality"] = std::move(duality);
    out["lp"] = std::move(lp);
    return out;
}

inline Json command_waldschmidt(const Clutter& c, bool dual)
{
    auto w = dual ? waldschmidt_dual(c) : waldschmidt(c);
    auto by_lp = waldschmidt_lp(dual ? blocker(c) : c);
    if (by_lp != w.value)
        throw Error(ErrorKind::CrossCheckFailed, "vertex minimum " + to_string(w.value) + " but the LP gives "
                    + to_string(by_lp));
    Json out;
    out["ideal"] = dual ? "I^v" : "I";
    out["waldschmidt"] = to_string(w.value);
    out["attained_at"] = vec(w.attained_at);
    return out;
}

inline Json command_classify(const Clutter& c)
{
    auto r = classify(c);
    Json out;
    out["rho_ic"] = to_string(r.rho_ic);
    out["rho_ic_dual"] = to_string(r.rho_ic_dual);
    out["waldschmidt"] = to_string(r.waldschmidt);
    out["waldschmidt_dual"] = to_string(r.waldschmidt_dual);
    out["alpha"] = r.alpha;
    out["alpha_dual"] = r.alpha_dual;
    out["q_integral"] = r.q_integral;
    out["q_dual_integral"] = r.q_dual_integral;
    out["bipartite"] = r.bipartite ? Json(*r.bipartite) : Json(nullptr);
    out["argmin_u"] = vec(r.argmin_u);
    out["argmin_v"] = vec(r.argmin_v);
    out["vertex_count"] = r.vertices.size();
    out["dual_vertex_count"] = r.dual_vertices.size();
    out["vertices"] = vertex_list(r.vertices);
    out["dual_vertices"] = vertex_list(r.dual_vertices);
    out["warnings"] = r.warnings;
    return out;
}

inline Json witness_json(const ContainmentOracle& oracle, const ContainmentWitness& w)
{
    const auto& h = oracle.facets().nontrivial[w.violated_facet];
    Integer value = 0;
    for (std::size_t k = 0; k < w.a.size(); ++k)
        value += h.normal[k] * w.a[k];
    Json out;
    out["a"] = vec(w.a);
    out["facet_index"] = w.violated_facet + 1;
    out["facet"] = facet_json(h);
    out["pairing"] = to_string(value);
    out["bound"] = to_string(Integer(h.d() * w.r - 1));
    return out;
}

inline Json command_containment(const Clutter& c, long long n, long long r, bool show_witness,
                                std::uint64_t budget)
{
    ContainmentOracle oracle(c, budget);
    auto res = oracle.containment(n, r);
    Json out;
    out["n"] = n;
    out["r"] = r;
    out["result"] = res.contained ? "CONTAINED" : "NOT CONTAINED";
    out["contained"] = res.contained;
    out["witness"] = (show_witness && res.witness) ? witness_json(oracle, *res.witness) : Json(nullptr);
    return out;
}

inline Json command_scan(const Clutter& c, long long n_max, long long r_max, std::uint64_t budget)
{
    ContainmentOracle oracle(c, budget);
    auto rho = ic_resurgence(c).rho;
    auto entries = oracle.witness_ratio_scan(n_max, r_max);
    std::optional<Rational> best;
    Json list = Json::array();
    for (const auto& e : entries) {
        if (e.ratio() > rho)
            throw Error(ErrorKind::CrossCheckFailed, "non-containment at (n, r) = (" + std::to_string(e.n) + ", "
                        + std::to_string(e.r) + ") exceeds rho_ic = " + to_string(rho));
        if (!best || e.ratio() > *best)
            best = e.ratio();
        Json row;
        row["n"] = e.n;
        row["r"] = e.r;
        row["ratio"] = to_string(e.ratio());
        row["a"] = vec(e.witness.a);
        row["facet"] = facet_json(oracle.facets().nontrivial[e.witness.violated_facet]);
        list.push_back(std::move(row));
    }
    Json out;
    out["n_max"] = n_max;
    out["r_max"] = r_max;
    out["rho_ic"] = to_string(rho);
    out["non_containment_count"] = entries.size();
    out["max_ratio"] = best ? Json(to_string(*best)) : Json(nullptr);
    out["entries"] = std::move(list);
    return out;
}

inline Json command_veronese(std::size_t d, std::size_t s, bool verify, std::size_t verify_limit)
{
    auto v = veronese_invariants(d, s, verify, verify_limit);
    Json out;
    out["d"] = d;
    out["s"] = s;
    out["rho_ic"] = to_string(v.rho);
    out["waldschmidt"] = to_string(v.wald);
    out["waldschmidt_dual"] = to_string(v.wald_dual);
    out["vertex_count"] = to_string(v.nv);
    out["dual_vertex_count"] = to_string(v.nv_dual);
    if (!verify)
        out["verification"] = "not requested";
    else if (v.verified)
        out["verification"] = "OK";
    else
        out["verification"] = "skipped (s > " + std::to_string(verify_limit) + ")";
    return out;
}

inline int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::CrossCheckFailed:
        return CrossCheckMismatch;
    case ErrorKind::ScaleExceeded:
        return TooLarge;
    default:
        return InputError;
    }
}

}   // namespace detail

/// Parses argv (including the program name), runs one subcommand, returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    using namespace detail;
    CLI::App app{"Exact ic-resurgence, Waldschmidt constants and covering polyhedra of squarefree monomial ideals",
                 "icres"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings settings;
    app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", settings.seed, "Accepted and ignored; every computation is deterministic");
    app.add_flag("--timing", settings.timing, "Report wall-clock time (makes output run-dependent)");

    std::string file, method = "both";
    bool dual = false, witness = false, verify = false;
    long long n = 0, r = 0, n_max = 0, r_max = 0;
    std::size_t d = 0, s = 0, verify_limit = 7;
    std::uint64_t budget = default_oracle_budget;

    auto* vertices = app.add_subcommand("vertices", "Vertices of Q(I), or of Q(I^v) with --dual");
    vertices->add_option("file", file)->required();
    vertices->add_flag("--dual", dual);
    auto* blocker_cmd = app.add_subcommand("blocker", "Minimal vertex covers");
    blocker_cmd->add_option("file", file)->required();
    auto* resurgence = app.add_subcommand("resurgence", "ic-resurgence");
    resurgence->add_option("file", file)->required();
    resurgence->add_option("--method", method)->check(CLI::IsMember({"duality", "lp", "both"}));
    auto* wald = app.add_subcommand("waldschmidt", "Waldschmidt constant of I, or of I^v with --dual");
    wald->add_option("file", file)->required();
    wald->add_flag("--dual", dual);
    auto* classify_cmd = app.add_subcommand("classify", "All invariants with consistency checks");
    classify_cmd->add_option("file", file)->required();
    auto* contain = app.add_subcommand("containment", "Is I^(n) contained in the integral closure of I^r?");
    contain->add_option("file", file)->required();
    contain->add_option("-n", n)->required()->check(CLI::PositiveNumber);
    contain->add_option("-r", r)->required()->check(CLI::PositiveNumber);
    contain->add_flag("--witness", witness);
    contain->add_option("--budget", budget, "Largest box volume the oracle may enumerate");
    auto* scan = app.add_subcommand("scan", "All non-containment pairs on a grid");
    scan->add_option("file", file)->required();
    scan->add_option("--nmax", n_max)->required()->check(CLI::PositiveNumber);
    scan->add_option("--rmax", r_max)->required()->check(CLI::PositiveNumber);
    scan->add_option("--budget", budget, "Largest box volume the oracle may enumerate");
    auto* veronese = app.add_subcommand("veronese", "Closed forms for the squarefree Veronese ideal I_{d,s}");
    veronese->add_option("-d", d)->required()->check(CLI::PositiveNumber);
    veronese->add_option("-s", s)->required()->check(CLI::PositiveNumber);
    veronese->add_flag("--verify", verify);
    veronese->add_option("--verify-limit", verify_limit, "Largest s checked polyhedrally");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : InputError;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (veronese->parsed()) {
            emit(out, settings, std::nullopt, command_veronese(d, s, verify, verify_limit), start);
            return Ok;
        }
        auto doc = read_clutter_file(file);
        const auto& c = doc.clutter;
        Json body;
        if (vertices->parsed())
            body = command_vertices(c, dual);
        else if (blocker_cmd->parsed())
            body = command_blocker(c);
        else if (resurgence->parsed())
            body = command_resurgence(c, method);
        else if (wald->parsed())
            body = command_waldschmidt(c, dual);
        else if (classify_cmd->parsed())
            body = command_classify(c);
        else if (contain->parsed())
            body = command_containment(c, n, r, witness, budget);
        else
            body = command_scan(c, n_max, r_max, budget);
        emit(out, settings, doc, std::move(body), start);
        return Ok;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    }
}

/// Same as above with the arguments after the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"icres"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}   // namespace icres::cli

#endif
