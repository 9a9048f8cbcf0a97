#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftlab {

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    int column_index(const std::string& name) const;  // -1 when absent
};

// Reads comma-separated text with a mandatory header row. No quoting rules:
// the sweep schema never produces commas inside fields. Raises ParseError
// (with line number) on ragged rows or a missing header.
CsvTable read_csv(std::istream& in);

struct PlotSpec {
    std::string x_column = "param_value";
    std::string y_column = "p_hat";
    std::string series_column;  // empty = a single unnamed series
    bool ci_band = false;       // shade ci_low..ci_high behind each curve
    std::string title;
    std::string x_label;        // defaults to x_column
    std::string y_label;        // defaults to y_column
    int width = 840;
    int height = 520;
};

// Renders a self-contained SVG line chart: one polyline + markers per series,
// optional translucent confidence band, axes with tick labels, and a legend
// when a series column is set. Output is deterministic for identical input.
// Throws std::invalid_argument for missing columns or an empty table.
std::string render_line_chart(const CsvTable& table, const PlotSpec& spec);

}  // namespace shiftlab
