#include "wplab/error.hpp"
#include "wplab/report.hpp"

#include <cstdio>

namespace wplab::report {

json conventions() {
    return {
        {"basis_disk", "e_n(z) = sqrt(n/pi) z^(n-1), n >= 1"},
        {"basis_exterior", "e*_n(w) = sqrt(n/pi) w^(-n-1), n >= 1"},
        {"B_sign", "B[m,n] = -sqrt(mn) b_mn, b from the log generating function; "
                   "reported scalars depend only on B B*"},
        {"S2_univ", "log det(I - B1 B1*) <= 0"},
        {"S2_dg", "-S2_univ >= 0"},
        {"normalization", "f(0) = 0, f'(0) = 1, g(inf) = inf"},
        {"laurent_index", "coefficient k multiplies z^(1-k)"},
    };
}

json to_json(const ConvergenceReport& r) {
    return {{"orders", r.orders},
            {"estimates", r.estimates},
            {"extrapolated", r.extrapolated},
            {"residual_tail", r.residual_tail}};
}

json to_json(const S1Terms& t) {
    return {{"interior", t.interior},
            {"exterior", t.exterior},
            {"log_term", t.log_term},
            {"max_integrand", t.max_integrand}};
}

json to_json(const IdentityReport& r) {
    return {{"S1", r.S1},
            {"S1_terms", to_json(r.terms)},
            {"S2_univ_via_B1", r.S2_univ_via_B1},
            {"S2_univ_via_B4", r.S2_univ_via_B4},
            {"S2_dg", -r.S2_univ_via_B1},
            {"residual_identity", {{"abs", r.residual_identity}, {"rel", r.residual_identity_rel}}},
            {"residual_operators", {{"abs", r.residual_operators}, {"rel", r.residual_operators_rel}}},
            {"grid", {r.grid.first, r.grid.second}},
            {"N", r.N}};
}

json to_json(const SclReport& r) {
    return {{"S_cl", r.S_cl},
            {"bound", r.bound},
            {"slack", r.slack},
            {"is_fuchsian_point", r.is_fuchsian_point},
            {"genus", r.genus},
            {"s2_dg", r.s2_dg}};
}

json to_json(const WeldingPair& p) {
    return {{"family_tag", p.family_tag},
            {"params", p.params},
            {"g_prime_at_infinity", {p.g_prime_at_infinity.real(), p.g_prime_at_infinity.imag()}},
            {"M", p.samples},
            {"taylor_order", p.f.order()},
            {"laurent_order", p.g.order()},
            {"residuals", p.residuals}};
}

std::string format_double(double v) {
    char buf[40];
    // -0 prints as 0.
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

void write_matrix_csv(std::ostream& os, const Matrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        os << (j ? "," : "") << "re_" << j + 1 << ",im_" << j + 1;
    os << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << format_double(m(i, j).real()) << ','
               << format_double(m(i, j).imag());
        os << '\n';
    }
}

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvTable::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_.size())
        throw InvalidInput("csv: row has " + std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(columns_.size()));
    rows_.push_back(cells);
}

namespace {
std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}
} // namespace

void CsvTable::write(std::ostream& os) const {
    for (std::size_t i = 0; i < columns_.size(); ++i)
        os << (i ? "," : "") << quote(columns_[i]);
    os << '\n';
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << (i ? "," : "") << quote(r[i]);
        os << '\n';
    }
}

} // namespace wplab::report
