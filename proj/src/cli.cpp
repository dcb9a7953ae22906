#include "wplab/cli.hpp"
#include "wplab/error.hpp"
#include "wplab/fuchsian.hpp"
#include "wplab/grunsky.hpp"
#include "wplab/liouville.hpp"
#include "wplab/maps.hpp"
#include "wplab/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace wplab::cli {

namespace {

using report::json;
constexpr double pi = std::numbers::pi;

const std::set<std::string> commands = {"pair",  "grunsky",  "logdet", "s1",   "identity",
                                        "invert", "fuchsian", "scl",    "sweep"};

struct HelpRequested {
    std::string text;
};

void build_app(CLI::App& app, RunConfig& c) {
    app.add_option("command", c.command, "pair | grunsky | logdet | s1 | identity | invert | fuchsian | scl | sweep")
        ->required();
    app.add_option("--family", c.family, "identity | ellipse | fourier_bump");
    app.add_option("--c", c.c, "ellipse parameter, 0 < c < 1");
    app.add_option("--eps", c.eps, "fourier_bump amplitude");
    app.add_option("--k", c.k, "fourier_bump frequency");
    app.add_option("--pair-file", c.pair_file, "pair JSON to use instead of the catalog");
    app.add_option("--N", c.N, "truncation order");
    app.add_option("--orders", c.orders, "increasing truncation orders")->delimiter(',');
    app.add_option("--grid", c.grid, "quadrature grid n_r x n_theta, e.g. 128x256");
    app.add_option("--samples", c.samples, "Theodorsen sample count (0 = automatic)");
    app.add_option("--tol", c.tol, "tolerance of the command's check");
    app.add_option("--s2", c.s2, "S2_dg value for scl");
    app.add_option("--genus", c.genus, "genus for scl");
    app.add_option("--L", c.L, "word length for fuchsian enumeration");
    app.add_option("--param", c.param, "sweep parameter (c or eps)");
    app.add_option("--values", c.values, "sweep values")->delimiter(',');
    app.add_option("--range", c.range, "sweep range start:stop:step");
    app.add_option("--output", c.output, "output file (default stdout, or $WPLAB_OUTPUT_DIR/<command>.<ext>)");
    app.add_option("--format", c.format, "json | csv");
    app.add_option("--dump-dir", c.dump_dir, "directory for matrix CSV dumps (grunsky)");
    app.add_flag("-v,--verbose", c.verbosity, "more diagnostics");
    app.set_config("--config", "", "key = value configuration file; flags override it");
}

std::pair<int, int> parse_grid(const std::string& s) {
    int a = 0, b = 0;
    char x = 0;
    std::istringstream is(s);
    if (!(is >> a >> x >> b) || (x != 'x' && x != 'X') || !is.eof() || a < 1 || b < 1)
        throw InvalidInput("grid must look like 128x256");
    if ((b & (b - 1)) != 0)
        throw InvalidInput("grid n_theta must be a power of two");
    return {a, b};
}

std::vector<double> sweep_values(const RunConfig& c) {
    if (!c.values.empty())
        return c.values;
    if (c.range.empty())
        throw InvalidInput("sweep needs --values or --range");
    double a = 0, b = 0, h = 0;
    char s1 = 0, s2 = 0;
    std::istringstream is(c.range);
    if (!(is >> a >> s1 >> b >> s2 >> h) || s1 != ':' || s2 != ':' || !(h > 0) || b < a)
        throw InvalidInput("range must look like start:stop:step with step > 0");
    std::vector<double> v;
    const long n = std::lround(std::floor((b - a) / h + 1e-9));
    for (long i = 0; i <= n; ++i)
        v.push_back(a + i * h);
    return v;
}

void validate(const RunConfig& c) {
    if (!commands.count(c.command))
        throw InvalidInput("unknown command '" + c.command + "'");
    parse_family(c.family);
    if (c.N < 1)
        throw InvalidInput("N must be >= 1");
    for (std::size_t i = 1; i < c.orders.size(); ++i)
        if (c.orders[i] <= c.orders[i - 1])
            throw InvalidInput("orders must be strictly increasing");
    if (!c.orders.empty() && c.orders.front() < 1)
        throw InvalidInput("orders must be positive");
    if (c.tol < 0 || !std::isfinite(c.tol))
        throw InvalidInput("tolerance must be positive");
    if (!c.format.empty() && c.format != "json" && c.format != "csv")
        throw InvalidInput("format must be json or csv");
    if (c.samples < 0)
        throw InvalidInput("samples must be >= 0");
    if (!c.grid.empty())
        parse_grid(c.grid);
}

std::map<std::string, double> family_params(const RunConfig& c, Family f) {
    switch (f) {
    case Family::Identity: return {};
    case Family::Ellipse: return {{"c", c.c}};
    case Family::FourierBump: return {{"eps", c.eps}, {"k", static_cast<double>(c.k)}};
    }
    return {};
}

CatalogOptions catalog_options(const RunConfig& c) {
    CatalogOptions o;
    o.samples = static_cast<std::size_t>(c.samples);
    o.strict = false;
    return o;
}

WeldingPair load_pair(const RunConfig& c) {
    if (!c.pair_file.empty()) {
        std::ifstream in(c.pair_file);
        if (!in)
            throw InvalidInput("cannot read pair file '" + c.pair_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return import_pair_json(ss.str());
    }
    const Family f = parse_family(c.family);
    return catalog(f, family_params(c, f), catalog_options(c));
}

double tol_or(const RunConfig& c, double d) { return c.tol > 0 ? c.tol : d; }

json envelope(const RunConfig& c) {
    return {{"command", c.command}, {"conventions", report::conventions()}};
}

// Flatten scalars of a JSON object to key,value rows.
void flatten(const json& j, const std::string& prefix, report::CsvTable& t) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), t);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", t);
    } else if (j.is_number_float()) {
        t.add_row({prefix, report::format_double(j.get<double>())});
    } else if (j.is_string()) {
        t.add_row({prefix, j.get<std::string>()});
    } else {
        t.add_row({prefix, j.dump()});
    }
}

struct Outcome {
    json doc;
    bool ok = true;
    std::string csv; ///< preformatted table (sweep)
};

Outcome cmd_pair(const RunConfig& c) {
    const auto p = load_pair(c);
    const double tol = tol_or(c, 1e-8);
    Outcome o{envelope(c), true, {}};
    o.doc["pair"] = json::parse(export_pair_json(p));
    const double br = boundary_residual(p, 1024);
    json uni = json::object();
    bool univalent = true;
    for (double r : {0.5, 0.9, 0.99}) {
        const double s = min_image_separation(p.f, r, 512);
        uni["f_r=" + report::format_double(r)] = s;
        univalent = univalent && s > 0.0;
    }
    for (double r : {1.01, 1.1, 2.0}) {
        const double s = min_image_separation(p.g, r, 512);
        uni["g_r=" + report::format_double(r)] = s;
        univalent = univalent && s > 0.0;
    }
    o.doc["checks"] = {{"boundary_residual", br}, {"boundary_tol", tol}, {"min_separation", uni}};
    o.ok = br <= tol && univalent;
    return o;
}

Outcome cmd_grunsky(const RunConfig& c) {
    const auto p = load_pair(c);
    const double tol = tol_or(c, 1e-6);
    const auto t = build_truncation(p, c.N);
    const auto r = grunsky_identity_residual(t);
    Outcome o{envelope(c), true, {}};
    o.doc["pair"] = report::to_json(p);
    o.doc["N"] = c.N;
    o.doc["block"] = std::max(c.N / 2, 1);
    o.doc["residuals"] = {r[0], r[1], r[2], r[3]};
    o.doc["norm_B1"] = spectral_norm(t.B1);
    o.doc["norm_B4"] = spectral_norm(t.B4);
    o.doc["B3_minus_B2T"] = (t.B3 - t.B2.transpose()).norm();
    o.doc["provenance"] = t.provenance;
    o.doc["tol"] = tol;
    o.ok = *std::max_element(r.begin(), r.end()) <= tol;
    if (!c.dump_dir.empty()) {
        std::filesystem::create_directories(c.dump_dir);
        const std::pair<const char*, const Matrix*> blocks[] = {
            {"B1", &t.B1}, {"B2", &t.B2}, {"B3", &t.B3}, {"B4", &t.B4}};
        for (const auto& [name, m] : blocks) {
            std::ofstream f(std::filesystem::path(c.dump_dir) / (std::string(name) + ".csv"));
            report::write_matrix_csv(f, *m);
        }
    }
    return o;
}

Outcome cmd_logdet(const RunConfig& c) {
    const auto p = load_pair(c);
    const double tol = tol_or(c, 1e-6);
    auto orders = c.orders.empty() ? std::vector<int>{c.N} : c.orders;
    const int N = orders.back();
    const auto r1 = logdet_potential(build_B1(p, N), orders);
    const auto r4 = logdet_potential(build_B4(p, N), orders);
    Outcome o{envelope(c), true, {}};
    o.doc["pair"] = report::to_json(p);
    o.doc["S2_univ_via_B1"] = report::to_json(r1);
    o.doc["S2_univ_via_B4"] = report::to_json(r4);
    o.doc["S2_dg"] = -r1.extrapolated;
    const double diff = std::abs(r1.extrapolated - r4.extrapolated);
    o.doc["residual_operators"] = diff;
    o.doc["tol"] = tol;
    o.ok = diff <= tol;
    return o;
}

Outcome cmd_s1(const RunConfig& c) {
    const auto p = load_pair(c);
    const double tol = tol_or(c, 1e-8);
    std::vector<std::pair<int, int>> grids =
        c.grid.empty() ? default_s1_grids() : std::vector<std::pair<int, int>>{parse_grid(c.grid)};
    const auto r = s1(p, grids);
    Outcome o{envelope(c), true, {}};
    o.doc["pair"] = report::to_json(p);
    o.doc["S1"] = report::to_json(r);
    json g = json::array();
    for (const auto& [a, b] : grids)
        g.push_back({a, b});
    o.doc["grids"] = g;
    o.ok = r.extrapolated >= -tol;
    return o;
}

Outcome cmd_identity(const RunConfig& c) {
    const auto p = load_pair(c);
    const double tol = tol_or(c, 1e-3);
    const auto [nr, nt] = c.grid.empty() ? std::pair<int, int>{256, 512} : parse_grid(c.grid);
    const auto r = identity_report(p, QuadratureGrid::make(nr, nt), c.N);
    Outcome o{envelope(c), true, {}};
    o.doc["pair"] = report::to_json(p);
    o.doc["identity"] = report::to_json(r);
    o.doc["tol"] = tol;
    o.ok = r.residual_identity_rel <= tol;
    return o;
}

Outcome cmd_invert(const RunConfig& c) {
    const auto p = load_pair(c);
    const double tol = tol_or(c, 1e-6);
    const auto r = inversion_check(p, c.N);
    Outcome o{envelope(c), true, {}};
    o.doc["pair"] = report::to_json(p);
    o.doc["S2_univ_pair_B1"] = r.s2_pair_B1;
    o.doc["S2_univ_inverted_B1"] = r.s2_inverted_B1;
    o.doc["S2_univ_pair_B4"] = r.s2_pair_B4;
    const double d1 = std::abs(r.s2_pair_B1 - r.s2_inverted_B1);
    const double d2 = std::abs(r.s2_pair_B1 - r.s2_pair_B4);
    o.doc["residual_inversion"] = d1;
    o.doc["residual_operators"] = d2;
    o.doc["N"] = c.N;
    o.doc["tol"] = tol;
    o.ok = d1 <= tol && d2 <= tol;
    return o;
}

Outcome cmd_fuchsian(const RunConfig& c) {
    const double tol = tol_or(c, 1e-10);
    const auto g = octagon_group();
    const auto e = enumerate(g, c.L);
    const double rel = relation_residual(g);
    const auto area = domain_area_integral(g);
    std::vector<std::pair<cplx, cplx>> pts;
    for (int i = 0; i < 16; ++i)
        pts.emplace_back(std::polar(0.1 + 0.05 * i, 0.7 * i), std::polar(0.85 - 0.04 * i, -1.3 * i));
    double autom = 0.0;
    for (const auto& G : g.generators)
        autom = std::max(autom, automorphy_residual(bergman_kernel, G, pts, KernelForm::Sesquiholomorphic));
    Outcome o{envelope(c), true, {}};
    json gens = json::array();
    for (const auto& G : g.generators)
        gens.push_back({{G.a().real(), G.a().imag()}, {G.b().real(), G.b().imag()},
                        {G.c().real(), G.c().imag()}, {G.d().real(), G.d().imag()}});
    o.doc["generators"] = gens;
    o.doc["relation_word"] = g.relation_word;
    o.doc["genus"] = g.genus;
    o.doc["vertex_radius"] = g.vertex_radius;
    o.doc["translation_length"] = g.translation_length;
    o.doc["L"] = c.L;
    o.doc["element_count"] = e.elements.size();
    o.doc["relation_residual"] = rel;
    o.doc["area_integral"] = {{"value", area.value}, {"coarse", area.coarse}, {"expected", g.genus - 1}};
    o.doc["automorphy_residual_bergman"] = autom;
    o.ok = rel <= tol && std::abs(area.value - (g.genus - 1)) <= 1e-4 && autom <= tol;
    return o;
}

Outcome cmd_scl(const RunConfig& c) {
    const auto r = s_cl_report(c.s2, c.genus);
    Outcome o{envelope(c), true, {}};
    o.doc["scl"] = report::to_json(r);
    o.ok = r.S_cl <= r.bound && r.slack >= 0.0;
    return o;
}

Outcome cmd_sweep(const RunConfig& c) {
    const Family f = parse_family(c.family);
    const auto values = sweep_values(c);
    std::string param = c.param;
    if (param.empty())
        param = f == Family::Ellipse ? "c" : f == Family::FourierBump ? "eps" : "none";
    if (f == Family::Ellipse && param != "c")
        throw InvalidInput("ellipse sweeps run over c");
    if (f == Family::FourierBump && param != "eps")
        throw InvalidInput("fourier_bump sweeps run over eps");
    const double tol = tol_or(c, 1e-3);
    const auto [nr, nt] = c.grid.empty() ? std::pair<int, int>{256, 512} : parse_grid(c.grid);
    report::CsvTable t({"family", "param", "value", "S1", "S2_via_B1", "S2_via_B4", "residual_identity",
                        "residual_identity_rel", "residual_operators", "S2_dg", "slack", "N", "grid",
                        "error"});
    Outcome o{envelope(c), true, {}};
    json rows = json::array();
    const auto fmt = report::format_double;
    for (double v : values) {
        RunConfig rc = c;
        if (param == "c")
            rc.c = v;
        else if (param == "eps")
            rc.eps = v;
        const std::string grid = std::to_string(nr) + "x" + std::to_string(nt);
        try {
            const auto p = catalog(f, family_params(rc, f), catalog_options(rc));
            const auto r = identity_report(p, QuadratureGrid::make(nr, nt), c.N);
            const double slack = 12.0 * pi * (-r.S2_univ_via_B1);
            t.add_row({family_name(f), param, fmt(v), fmt(r.S1), fmt(r.S2_univ_via_B1),
                       fmt(r.S2_univ_via_B4), fmt(r.residual_identity), fmt(r.residual_identity_rel),
                       fmt(r.residual_operators), fmt(-r.S2_univ_via_B1), fmt(slack),
                       std::to_string(c.N), grid, ""});
            if (!(r.residual_identity_rel <= tol))
                o.ok = false;
        } catch (const std::exception& ex) {
            t.add_row({family_name(f), param, fmt(v), "", "", "", "", "", "", "", "",
                       std::to_string(c.N), grid, ex.what()});
            o.ok = false;
        }
    }
    std::ostringstream os;
    t.write(os);
    o.csv = os.str();
    return o;
}

Outcome dispatch(const RunConfig& c) {
    if (c.command == "pair") return cmd_pair(c);
    if (c.command == "grunsky") return cmd_grunsky(c);
    if (c.command == "logdet") return cmd_logdet(c);
    if (c.command == "s1") return cmd_s1(c);
    if (c.command == "identity") return cmd_identity(c);
    if (c.command == "invert") return cmd_invert(c);
    if (c.command == "fuchsian") return cmd_fuchsian(c);
    if (c.command == "scl") return cmd_scl(c);
    return cmd_sweep(c);
}

std::string render(const RunConfig& c, const Outcome& o, const std::string& format) {
    if (c.command == "sweep" && format == "csv")
        return o.csv;
    json doc = o.doc;
    doc["status"] = o.ok ? "ok" : "check_failed";
    if (format == "csv") {
        report::CsvTable t({"key", "value"});
        flatten(doc, "", t);
        std::ostringstream os;
        t.write(os);
        return os.str();
    }
    if (c.command == "sweep")
        doc["table_csv"] = o.csv;
    return doc.dump(2) + "\n";
}

} // namespace

RunConfig parse_args(int argc, const char* const* argv) {
    RunConfig c;
    CLI::App app{"Weil-Petersson potential lab"};
    build_app(app, c);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw InvalidInput(std::string(e.what()) + "\n" + app.help());
    }
    try {
        validate(c);
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string(e.what()) + "\n" + app.help());
    }
    return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        const Outcome o = dispatch(config);
        const std::string format =
            !config.format.empty() ? config.format : (config.command == "sweep" ? "csv" : "json");
        const std::string text = render(config, o, format);
        std::string path = config.output;
        if (path.empty()) {
            if (const char* dir = std::getenv("WPLAB_OUTPUT_DIR"); dir && *dir)
                path = (std::filesystem::path(dir) / (config.command + "." + format)).string();
        }
        if (path.empty()) {
            out << text;
        } else {
            const auto parent = std::filesystem::path(path).parent_path();
            if (!parent.empty())
                std::filesystem::create_directories(parent);
            std::ofstream f(path, std::ios::binary);
            if (!f)
                throw InvalidInput("cannot write '" + path + "'");
            f << text;
            if (config.verbosity > 0)
                err << "wrote " << path << "\n";
        }
        if (!o.ok)
            err << config.command << ": check failed\n";
        return o.ok ? Ok : CheckFailed;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return BadInput;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << " (residual " << e.residual() << ")\n";
        return NumericFailure;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return BadInput;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    try {
        c = parse_args(argc, argv);
    } catch (const HelpRequested& h) {
        out << h.text;
        return Ok;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return BadInput;
    }
    return run(c, out, err);
}

} // namespace wplab::cli
