#include "shiftlab/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "shiftlab/errors.hpp"

namespace shiftlab {

int CsvTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (const char ch : line) {
        if (ch == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    out.push_back(field);
    return out;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_fields(line);
        if (table.columns.empty()) {
            table.columns = std::move(fields);
            continue;
        }
        if (fields.size() != table.columns.size())
            throw ParseError(line_no, "expected " + std::to_string(table.columns.size()) +
                                          " fields, got " + std::to_string(fields.size()));
        table.rows.push_back(std::move(fields));
    }
    if (table.columns.empty()) throw ParseError(line_no, "missing CSV header");
    return table;
}

namespace {

double parse_number(const std::string& text, int row, const std::string& column) {
    std::size_t used = 0;
    double v = std::numeric_limits<double>::quiet_NaN();
    try {
        v = std::stod(text, &used);
    } catch (...) {
        used = 0;
    }
    if (used != text.size() || !std::isfinite(v))
        throw std::invalid_argument("data row " + std::to_string(row + 1) + ", column '" +
                                    column + "': '" + text + "' is not a number");
    return v;
}

std::string xml_escape(const std::string& text) {
    std::string out;
    for (const char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

std::string coord(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

// Tick spacing of the form {1, 2, 5} * 10^k yielding at most max_ticks steps.
double nice_step(double span, int max_ticks) {
    const double raw = span / max_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (const double mult : {1.0, 2.0, 5.0, 10.0})
        if (mag * mult >= raw) return mag * mult;
    return mag * 10.0;
}

struct Point {
    double x, y, lo, hi;
};

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = static_cast<int>(sizeof(kPalette) / sizeof(kPalette[0]));

}  // namespace

std::string render_line_chart(const CsvTable& table, const PlotSpec& spec) {
    if (table.rows.empty()) throw std::invalid_argument("no data rows");
    const auto need = [&table](const std::string& name) {
        const int idx = table.column_index(name);
        if (idx < 0) throw std::invalid_argument("column '" + name + "' not present in CSV");
        return idx;
    };
    const int xi = need(spec.x_column);
    const int yi = need(spec.y_column);
    const int si = spec.series_column.empty() ? -1 : need(spec.series_column);
    const int lo_i = spec.ci_band ? need("ci_low") : -1;
    const int hi_i = spec.ci_band ? need("ci_high") : -1;

    // Group rows into series in first-appearance order.
    std::vector<std::string> names;
    std::vector<std::vector<Point>> series;
    for (int r = 0; r < static_cast<int>(table.rows.size()); ++r) {
        const std::vector<std::string>& row = table.rows[r];
        const std::string& name = si >= 0 ? row[si] : spec.y_column;
        int idx = -1;
        for (int k = 0; k < static_cast<int>(names.size()); ++k)
            if (names[k] == name) idx = k;
        if (idx < 0) {
            idx = static_cast<int>(names.size());
            names.push_back(name);
            series.emplace_back();
        }
        Point pt{};
        pt.x = parse_number(row[xi], r, spec.x_column);
        pt.y = parse_number(row[yi], r, spec.y_column);
        pt.lo = lo_i >= 0 ? parse_number(row[lo_i], r, "ci_low") : pt.y;
        pt.hi = hi_i >= 0 ? parse_number(row[hi_i], r, "ci_high") : pt.y;
        series[idx].push_back(pt);
    }
    for (std::vector<Point>& pts : series)
        std::stable_sort(pts.begin(), pts.end(),
                         [](const Point& a, const Point& b) { return a.x < b.x; });

    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = 0.0, y_hi = 1.0;  // probability axis by default; data may widen it
    for (const std::vector<Point>& pts : series) {
        for (const Point& pt : pts) {
            x_lo = std::min(x_lo, pt.x);
            x_hi = std::max(x_hi, pt.x);
            y_lo = std::min({y_lo, pt.y, pt.lo});
            y_hi = std::max({y_hi, pt.y, pt.hi});
        }
    }
    if (x_lo == x_hi) {
        x_lo -= 0.5;
        x_hi += 0.5;
    }

    const double ml = 62.0, mr = 18.0, mb = 48.0;
    const double mt = spec.title.empty() ? 18.0 : 42.0;
    const double pw = spec.width - ml - mr;
    const double ph = spec.height - mt - mb;
    const auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
    const auto py = [&](double y) { return mt + (y_hi - y) / (y_hi - y_lo) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << ' '
        << spec.height << "\">\n";
    svg << "<rect width=\"" << spec.width << "\" height=\"" << spec.height
        << "\" fill=\"white\"/>\n";

    // Gridlines and tick labels.
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
    const double x_step = nice_step(x_hi - x_lo, 6);
    for (double t = std::ceil(x_lo / x_step) * x_step; t <= x_hi + 1e-9 * x_step;
         t += x_step) {
        const double gx = px(t);
        svg << "<line x1=\"" << coord(gx) << "\" y1=\"" << coord(mt) << "\" x2=\""
            << coord(gx) << "\" y2=\"" << coord(mt + ph) << "\" stroke=\"#ddd\"/>\n";
        svg << "<text x=\"" << coord(gx) << "\" y=\"" << coord(mt + ph + 18)
            << "\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
    }
    const double y_step = nice_step(y_hi - y_lo, 5);
    for (double t = std::ceil(y_lo / y_step) * y_step; t <= y_hi + 1e-9 * y_step;
         t += y_step) {
        const double gy = py(t);
        svg << "<line x1=\"" << coord(ml) << "\" y1=\"" << coord(gy) << "\" x2=\""
            << coord(ml + pw) << "\" y2=\"" << coord(gy) << "\" stroke=\"#ddd\"/>\n";
        svg << "<text x=\"" << coord(ml - 8) << "\" y=\"" << coord(gy + 4)
            << "\" text-anchor=\"end\">" << fmt(t) << "</text>\n";
    }
    svg << "</g>\n";

    // Confidence bands under the curves.
    for (int k = 0; k < static_cast<int>(series.size()); ++k) {
        if (!spec.ci_band || series[k].size() < 2) continue;
        svg << "<polygon fill=\"" << kPalette[k % kPaletteSize]
            << "\" fill-opacity=\"0.18\" stroke=\"none\" points=\"";
        for (const Point& pt : series[k]) svg << coord(px(pt.x)) << ',' << coord(py(pt.hi)) << ' ';
        for (auto it = series[k].rbegin(); it != series[k].rend(); ++it)
            svg << coord(px(it->x)) << ',' << coord(py(it->lo)) << ' ';
        svg << "\"/>\n";
    }

    // Curves and markers.
    for (int k = 0; k < static_cast<int>(series.size()); ++k) {
        const char* color = kPalette[k % kPaletteSize];
        if (series[k].size() > 1) {
            svg << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.8\" points=\"";
            for (const Point& pt : series[k]) svg << coord(px(pt.x)) << ',' << coord(py(pt.y)) << ' ';
            svg << "\"/>\n";
        }
        for (const Point& pt : series[k])
            svg << "<circle cx=\"" << coord(px(pt.x)) << "\" cy=\"" << coord(py(pt.y))
                << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }

    // Plot frame above the grid.
    svg << "<rect x=\"" << coord(ml) << "\" y=\"" << coord(mt) << "\" width=\"" << coord(pw)
        << "\" height=\"" << coord(ph) << "\" fill=\"none\" stroke=\"#333\"/>\n";

    // Legend, one entry per named series.
    if (si >= 0) {
        std::size_t longest = 0;
        for (const std::string& name : names) longest = std::max(longest, name.size());
        const double box_w = 30.0 + 7.2 * static_cast<double>(longest);
        const double box_h = 8.0 + 18.0 * static_cast<double>(names.size());
        const double bx = ml + pw - box_w - 8.0;
        const double by = mt + 8.0;
        svg << "<rect x=\"" << coord(bx) << "\" y=\"" << coord(by) << "\" width=\""
            << coord(box_w) << "\" height=\"" << coord(box_h)
            << "\" fill=\"white\" fill-opacity=\"0.85\" stroke=\"#999\"/>\n";
        svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
        for (int k = 0; k < static_cast<int>(names.size()); ++k) {
            const double ly = by + 18.0 * (k + 1) - 5.0;
            svg << "<line x1=\"" << coord(bx + 6) << "\" y1=\"" << coord(ly - 4) << "\" x2=\""
                << coord(bx + 22) << "\" y2=\"" << coord(ly - 4) << "\" stroke=\""
                << kPalette[k % kPaletteSize] << "\" stroke-width=\"2.5\"/>\n";
            svg << "<text x=\"" << coord(bx + 26) << "\" y=\"" << coord(ly) << "\">"
                << xml_escape(names[k]) << "</text>\n";
        }
        svg << "</g>\n";
    }

    // Title and axis labels.
    svg << "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"#111\">\n";
    if (!spec.title.empty())
        svg << "<text x=\"" << coord(ml + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" "
            << "font-size=\"16\">" << xml_escape(spec.title) << "</text>\n";
    const std::string x_label = spec.x_label.empty() ? spec.x_column : spec.x_label;
    const std::string y_label = spec.y_label.empty() ? spec.y_column : spec.y_label;
    svg << "<text x=\"" << coord(ml + pw / 2) << "\" y=\"" << coord(mt + ph + 38)
        << "\" text-anchor=\"middle\">" << xml_escape(x_label) << "</text>\n";
    svg << "<text x=\"16\" y=\"" << coord(mt + ph / 2) << "\" text-anchor=\"middle\" "
        << "transform=\"rotate(-90 16 " << coord(mt + ph / 2) << ")\">" << xml_escape(y_label)
        << "</text>\n";
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace shiftlab
