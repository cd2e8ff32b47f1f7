// Command-line front end: exact cover counts, Feynman graph sums, and
// the cross-verification reports, exported as text, JSON or CSV.
//
// Exit codes: 0 success / all verified, 1 verification mismatch,
// 2 usage or resource errors (including the work bound).

#include "hurwitz_cx/hurwitz_cx.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace hurwitz_cx;
using nlohmann::json;

namespace {

struct CommonOpts {
    long long work_bound = 1000000000LL;
    int threads = 1;
    std::string format = "text";
    std::string output;

    WorkPolicy policy() const {
        WorkPolicy p;
        p.work_bound = work_bound;
        p.threads = threads;
        return p;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--work-bound", opts.work_bound, "elementary-operation budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--threads", opts.threads, "worker threads (results are identical)")
        ->check(CLI::PositiveNumber)
        ->envname("HURWITZ_CX_THREADS")
        ->capture_default_str();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output, "write the report to this path instead of stdout");
}

int emit(const CommonOpts& opts, const std::string& body) {
    if (opts.output.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << opts.output << " for writing\n";
        return 2;
    }
    out << body;
    return 0;
}

Composition parse_composition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Composition(std::move(parts));
}

std::string joined(const std::vector<int>& v, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

json key_json(const CountKey& key) {
    return json{{"b", key.b}, {"d", key.d_comp.parts()}, {"e", key.e_comp.parts()}};
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

GraphClassVariant parse_variant(const std::string& name) {
    return name == "extended" ? GraphClassVariant::extended : GraphClassVariant::standard;
}

// ---- count ----------------------------------------------------------------

int run_count(const CommonOpts& opts, int b, const std::string& d_text, const std::string& e_text,
              bool brute) {
    const CountKey key{b, parse_composition(d_text), parse_composition(e_text)};
    const Int n = brute ? count_covers_bruteforce(key, opts.policy())
                        : count_covers_fast(key, opts.policy());
    std::ostringstream body;
    if (opts.format == "json") {
        json out{{"command", "count"}, {"key", key_json(key)}, {"n", n.str()}};
        body << out.dump(2) << '\n';
    } else if (opts.format == "csv") {
        body << "b,k,l,d,e,n\n"
             << key.b << ',' << key.d_comp.size() << ',' << key.e_comp.size() << ','
             << joined(key.d_comp.parts(), ';') << ',' << joined(key.e_comp.parts(), ';') << ','
             << n << '\n';
    } else {
        body << n << '\n';
    }
    return emit(opts, body.str());
}

// ---- graphs ---------------------------------------------------------------

int run_graphs(const CommonOpts& opts, int b, int k, int l, const std::string& variant) {
    const auto graphs = enumerate_graphs(b, k, l, parse_variant(variant));
    std::ostringstream body;
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& g : graphs)
            rows.push_back({{"graph", g.canonical_string()}, {"aut", aut_order(g).str()}});
        json out{{"command", "graphs"},
                 {"params", {{"b", b}, {"k", k}, {"l", l}, {"variant", variant}}},
                 {"count", graphs.size()},
                 {"rows", rows}};
        body << out.dump(2) << '\n';
    } else if (opts.format == "csv") {
        body << "graph,aut\n";
        for (const auto& g : graphs) body << '"' << g.canonical_string() << "\"," << aut_order(g) << '\n';
    } else {
        body << graphs.size() << (graphs.size() == 1 ? " graph\n" : " graphs\n");
        for (const auto& g : graphs) body << g.canonical_string() << "  aut=" << aut_order(g) << '\n';
    }
    return emit(opts, body.str());
}

// ---- integral ---------------------------------------------------------------

int run_integral(const CommonOpts& opts, int b, int k, int l, const std::string& d_text,
                 const std::string& e_text, const std::string& variant, bool numeric_check,
                 int quadrature_points) {
    const Composition d_comp = parse_composition(d_text);
    const Composition e_comp = parse_composition(e_text);
    if (d_comp.size() != k || e_comp.size() != l) {
        std::cerr << "error: --d needs " << k << " parts and --e needs " << l << " parts\n";
        return 2;
    }
    if (numeric_check && !(k == 1 && l == 1)) {
        std::cerr << "error: --numeric-check supports k = l = 1 only\n";
        return 2;
    }
    const auto graphs = enumerate_graphs(b, k, l, parse_variant(variant));

    Rational total = 0;
    std::vector<std::array<std::string, 4>> rows;  // graph, aut, integral, f_gamma
    for (const auto& g : graphs) {
        const Int coeff = integral_coefficient(g, d_comp, e_comp);
        const Rational f = Rational(coeff) / Rational(aut_order(g));
        total += f;
        std::ostringstream frac;
        frac << f;
        rows.push_back({g.canonical_string(), aut_order(g).str(), coeff.str(), frac.str()});
    }
    std::ostringstream total_text;
    total_text << total;

    std::string numeric_text, series_text;
    if (numeric_check) {
        const std::complex<double> z(0.2, 0.0), w(1.0, 0.0);
        std::complex<double> numeric = 0.0, series = 0.0;
        for (const auto& g : graphs) {
            numeric += numeric_contour_check(g, {z}, {w}, {}, quadrature_points) /
                       aut_order(g).convert_to<double>();
            series += truncated_series_value(g, {z}, {w}, 30) / aut_order(g).convert_to<double>();
        }
        numeric_text = format_double(numeric.real());
        series_text = format_double(series.real());
    }

    std::ostringstream body;
    if (opts.format == "json") {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back({{"graph", r[0]}, {"aut", r[1]}, {"integral", r[2]}, {"f_gamma", r[3]}});
        json out{{"command", "integral"},
                 {"params",
                  {{"b", b},
                   {"k", k},
                   {"l", l},
                   {"d", d_comp.parts()},
                   {"e", e_comp.parts()},
                   {"variant", variant}}},
                 {"rows", jrows},
                 {"total", total_text.str()}};
        if (numeric_check) {
            out["numeric_f"] = numeric_text;
            out["series_f"] = series_text;
        }
        body << out.dump(2) << '\n';
    } else if (opts.format == "csv") {
        body << "graph,aut,integral,f_gamma\n";
        for (const auto& r : rows)
            body << '"' << r[0] << "\"," << r[1] << ',' << r[2] << ',' << r[3] << '\n';
    } else {
        for (const auto& r : rows)
            body << r[0] << "  aut=" << r[1] << "  I=" << r[2] << "  F=" << r[3] << '\n';
        body << "total " << total_text.str() << '\n';
        if (numeric_check)
            body << "numeric F(0.2;1.0) = " << numeric_text << " vs series " << series_text << '\n';
    }
    return emit(opts, body.str());
}

// ---- table ------------------------------------------------------------------

int run_table(const CommonOpts& opts, int b, int k, int l, int d_max) {
    const auto table = build_table(b, k, l, d_max, opts.policy());
    std::ostringstream body;
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& [key, n] : table.entries())
            rows.push_back({{"key", key_json(key)}, {"n", n.str()}});
        json out{{"command", "table"},
                 {"params", {{"b", b}, {"k", k}, {"l", l}, {"d_max", d_max}}},
                 {"rows", rows}};
        body << out.dump(2) << '\n';
    } else if (opts.format == "csv") {
        body << "b,k,l,d,e,n\n";
        for (const auto& [key, n] : table.entries())
            body << key.b << ',' << k << ',' << l << ',' << joined(key.d_comp.parts(), ';') << ','
                 << joined(key.e_comp.parts(), ';') << ',' << n << '\n';
    } else {
        for (const auto& [key, n] : table.entries())
            body << "n_{" << key.b << ";" << key.d_comp.to_string() << ";"
                 << key.e_comp.to_string() << "} = " << n << '\n';
    }
    return emit(opts, body.str());
}

// ---- verify-boson -----------------------------------------------------------

int run_verify_boson(const CommonOpts& opts, int b_max, int k_max, int l_max, int d_max) {
    const auto report = verify_boson(b_max, k_max, l_max, d_max, opts.policy());
    std::ostringstream body;
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& row : report.rows)
            rows.push_back({{"key", key_json(row.key)},
                            {"oracle", row.oracle.str()},
                            {"graph_sum", row.graph_sum.str()},
                            {"match", row.match}});
        json out{{"command", "verify-boson"},
                 {"params",
                  {{"b_max", b_max}, {"k_max", k_max}, {"l_max", l_max}, {"d_max", d_max}}},
                 {"rows", rows},
                 {"all_match", report.all_match()}};
        body << out.dump(2) << '\n';
    } else if (opts.format == "csv") {
        body << "b,k,l,d,e,oracle,graph_sum,match\n";
        for (const auto& row : report.rows)
            body << row.key.b << ',' << row.key.d_comp.size() << ',' << row.key.e_comp.size() << ','
                 << joined(row.key.d_comp.parts(), ';') << ','
                 << joined(row.key.e_comp.parts(), ';') << ',' << row.oracle << ','
                 << row.graph_sum << ',' << (row.match ? "true" : "false") << '\n';
    } else {
        for (const auto& row : report.rows)
            body << "b=" << row.key.b << " d=" << row.key.d_comp.to_string()
                 << " e=" << row.key.e_comp.to_string() << " oracle=" << row.oracle
                 << " graph_sum=" << row.graph_sum << (row.match ? "" : "  MISMATCH") << '\n';
        body << (report.all_match() ? "all match" : "MISMATCHES FOUND") << " (" << report.rows.size()
             << " keys)\n";
    }
    const int rc = emit(opts, body.str());
    return rc != 0 ? rc : (report.all_match() ? 0 : 1);
}

// ---- verify-fermion ---------------------------------------------------------

int run_verify_fermion(const CommonOpts& opts, int b_max, int d_max) {
    const auto report = verify_fermion(b_max, d_max, opts.policy());
    std::ostringstream body;
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& row : report.rows)
            rows.push_back(
                {{"key", json{{"b", row.b}, {"d", {row.d}}, {"e", {row.d}}}},
                 {"oracle", row.cover_count.str()},
                 {"fermion_sum", row.fermion_sum.str()},
                 {"match", row.match}});
        json out{{"command", "verify-fermion"},
                 {"params", {{"b_max", b_max}, {"d_max", d_max}}},
                 {"rows", rows},
                 {"all_match", report.all_match()}};
        body << out.dump(2) << '\n';
    } else if (opts.format == "csv") {
        body << "b,d,oracle,fermion_sum,match\n";
        for (const auto& row : report.rows)
            body << row.b << ',' << row.d << ',' << row.cover_count << ',' << row.fermion_sum << ','
                 << (row.match ? "true" : "false") << '\n';
    } else {
        for (const auto& row : report.rows)
            body << "b=" << row.b << " d=" << row.d << " count=" << row.cover_count
                 << " fermion=" << row.fermion_sum << (row.match ? "" : "  MISMATCH") << '\n';
        body << (report.all_match() ? "all match" : "MISMATCHES FOUND") << " (" << report.rows.size()
             << " keys)\n";
    }
    const int rc = emit(opts, body.str());
    return rc != 0 ? rc : (report.all_match() ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cover counts of the punctured plane vs Feynman graph integrals"};
    app.require_subcommand(1);

    CommonOpts opts;

    // count
    auto* count_cmd = app.add_subcommand("count", "one coefficient n_{b;d;e}");
    int c_b = 0;
    std::string c_d, c_e;
    bool c_brute = false;
    count_cmd->add_option("--b", c_b, "number of simple branch points")->required()->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--d", c_d, "comma-separated composition over 0")->required();
    count_cmd->add_option("--e", c_e, "comma-separated composition over infinity")->required();
    count_cmd->add_flag("--brute", c_brute, "use the direct (g, tau) enumeration");
    add_common(count_cmd, opts);

    // graphs
    auto* graphs_cmd = app.add_subcommand("graphs", "enumerate the graph class");
    int g_b = 0, g_k = 1, g_l = 1;
    std::string g_variant = "standard";
    graphs_cmd->add_option("--b", g_b)->required()->check(CLI::NonNegativeNumber);
    graphs_cmd->add_option("--k", g_k)->required()->check(CLI::PositiveNumber);
    graphs_cmd->add_option("--l", g_l)->required()->check(CLI::PositiveNumber);
    graphs_cmd->add_option("--variant", g_variant)->check(CLI::IsMember({"standard", "extended"}));
    add_common(graphs_cmd, opts);

    // integral
    auto* integral_cmd = app.add_subcommand("integral", "per-graph integrals for one key");
    int i_b = 0, i_k = 1, i_l = 1, i_qp = 512;
    std::string i_d, i_e, i_variant = "standard";
    bool i_numeric = false;
    integral_cmd->add_option("--b", i_b)->required()->check(CLI::NonNegativeNumber);
    integral_cmd->add_option("--k", i_k)->required()->check(CLI::PositiveNumber);
    integral_cmd->add_option("--l", i_l)->required()->check(CLI::PositiveNumber);
    integral_cmd->add_option("--d", i_d)->required();
    integral_cmd->add_option("--e", i_e)->required();
    integral_cmd->add_option("--variant", i_variant)->check(CLI::IsMember({"standard", "extended"}));
    integral_cmd->add_flag("--numeric-check", i_numeric, "also evaluate the contour quadrature");
    integral_cmd->add_option("--quadrature-points", i_qp)->check(CLI::Range(64, 1 << 20));
    add_common(integral_cmd, opts);

    // table
    auto* table_cmd = app.add_subcommand("table", "all coefficients up to a total degree");
    int t_b = 0, t_k = 1, t_l = 1, t_dmax = 1;
    table_cmd->add_option("--b", t_b)->required()->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--k", t_k)->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--l", t_l)->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--d-max", t_dmax)->required()->check(CLI::PositiveNumber);
    add_common(table_cmd, opts);

    // verify-boson
    auto* vb_cmd = app.add_subcommand("verify-boson", "graph sums against brute-force counts");
    int vb_b = 0, vb_k = 1, vb_l = 1, vb_d = 1;
    vb_cmd->add_option("--b-max", vb_b)->required()->check(CLI::NonNegativeNumber);
    vb_cmd->add_option("--k-max", vb_k)->required()->check(CLI::PositiveNumber);
    vb_cmd->add_option("--l-max", vb_l)->required()->check(CLI::PositiveNumber);
    vb_cmd->add_option("--d-max", vb_d)->required()->check(CLI::PositiveNumber);
    add_common(vb_cmd, opts);

    // verify-fermion
    auto* vf_cmd = app.add_subcommand("verify-fermion", "diagonal counts against the theta product");
    int vf_b = 0, vf_d = 1;
    vf_cmd->add_option("--b-max", vf_b)->required()->check(CLI::NonNegativeNumber);
    vf_cmd->add_option("--d-max", vf_d)->required()->check(CLI::PositiveNumber);
    add_common(vf_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*count_cmd) return run_count(opts, c_b, c_d, c_e, c_brute);
        if (*graphs_cmd) return run_graphs(opts, g_b, g_k, g_l, g_variant);
        if (*integral_cmd)
            return run_integral(opts, i_b, i_k, i_l, i_d, i_e, i_variant, i_numeric, i_qp);
        if (*table_cmd) return run_table(opts, t_b, t_k, t_l, t_dmax);
        if (*vb_cmd) return run_verify_boson(opts, vb_b, vb_k, vb_l, vb_d);
        if (*vf_cmd) return run_verify_fermion(opts, vf_b, vf_d);
    } catch (const WorkBoundError& e) {
        std::cerr << "error: work bound exceeded: estimated cost " << e.estimated_cost()
                  << " > bound " << e.bound() << " (raise --work-bound to proceed)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
