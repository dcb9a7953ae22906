#pragma once

#include "wplab/fuchsian.hpp"
#include "wplab/grunsky.hpp"
#include "wplab/liouville.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace wplab::report {

using nlohmann::json;

/// Basis, B1 sign and S2 sign conventions; every JSON report carries this block.
json conventions();

json to_json(const ConvergenceReport& r);
json to_json(const IdentityReport& r);
json to_json(const SclReport& r);
json to_json(const S1Terms& t);
json to_json(const WeldingPair& p); ///< metadata and residuals, no coefficients

/// %.17g
std::string format_double(double v);

/// Header row "col_1,...,col_N" then one row per matrix row with "re,im" pairs.
void write_matrix_csv(std::ostream& os, const Matrix& m);

/// Minimal CSV writer with a fixed column set.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns);
    void add_row(const std::vector<std::string>& cells);
    void write(std::ostream& os) const;
    std::size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace wplab::report
