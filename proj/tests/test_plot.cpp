#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <stdexcept>
#include <string>

#include "shiftlab/errors.hpp"
#include "shiftlab/svg_plot.hpp"

using namespace shiftlab;

namespace {

CsvTable table_of(const std::string& text) {
    std::istringstream in(text);
    return read_csv(in);
}

int count_of(const std::string& haystack, const std::string& needle) {
    int count = 0;
    for (std::size_t at = haystack.find(needle); at != std::string::npos;
         at = haystack.find(needle, at + needle.size()))
        ++count;
    return count;
}

const std::string kTwoSeries =
    "param_value,p_hat,ci_low,ci_high,shift_kind\n"
    "0,0.1,0.05,0.2,laplacian\n"
    "1,0.9,0.8,0.95,laplacian\n"
    "0,0.2,0.1,0.3,adjacency\n"
    "1,0.8,0.7,0.9,adjacency\n";

}  // namespace

TEST_CASE("read_csv parses header and rows") {
    const CsvTable t = table_of("a,b,c\n1,2,3\n4,5,6\n");
    REQUIRE(t.columns.size() == 3);
    CHECK(t.columns[1] == "b");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[1][2] == "6");
    CHECK(t.column_index("c") == 2);
    CHECK(t.column_index("z") == -1);
}

TEST_CASE("read_csv tolerates CRLF and blank lines") {
    const CsvTable t = table_of("a,b\r\n\r\n1,2\r\n\n3,4\n");
    CHECK(t.columns == std::vector<std::string>{"a", "b"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0] == std::vector<std::string>{"1", "2"});
    CHECK(t.rows[1] == std::vector<std::string>{"3", "4"});
}

TEST_CASE("read_csv rejects ragged rows and empty input") {
    try {
        table_of("a,b\n1,2,3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("expected 2 fields") != std::string::npos);
    }
    CHECK_THROWS_AS(table_of(""), ParseError);
    CHECK_THROWS_AS(table_of("\n\n"), ParseError);
    // A header alone parses; it just has no rows.
    CHECK(table_of("a,b\n").rows.empty());
}

TEST_CASE("line chart renders one polyline per series plus markers") {
    PlotSpec spec;
    spec.series_column = "shift_kind";
    const std::string svg = render_line_chart(table_of(kTwoSeries), spec);

    CHECK(svg.rfind("<svg ", 0) == 0);
    CHECK(count_of(svg, "</svg>") == 1);
    CHECK(count_of(svg, "<polyline") == 2);
    CHECK(count_of(svg, "<circle") == 4);
    CHECK(count_of(svg, "<polygon") == 0);  // no band requested
    // Legend with both series names.
    CHECK(count_of(svg, ">laplacian</text>") == 1);
    CHECK(count_of(svg, ">adjacency</text>") == 1);
    // Default axis labels come from the column names.
    CHECK(svg.find(">param_value</text>") != std::string::npos);
    CHECK(svg.find(">p_hat</text>") != std::string::npos);
}

TEST_CASE("confidence bands add one polygon per series") {
    PlotSpec spec;
    spec.series_column = "shift_kind";
    spec.ci_band = true;
    const std::string svg = render_line_chart(table_of(kTwoSeries), spec);
    CHECK(count_of(svg, "<polygon") == 2);
    CHECK(svg.find("fill-opacity=\"0.18\"") != std::string::npos);
}

TEST_CASE("probability axis always spans zero to one") {
    // Data confined to [0.4, 0.6] must not shrink the axis.
    const std::string svg = render_line_chart(
        table_of("param_value,p_hat\n0,0.4\n1,0.6\n"), PlotSpec{});
    CHECK(svg.find(">0</text>") != std::string::npos);
    CHECK(svg.find(">1</text>") != std::string::npos);
}

TEST_CASE("a single data point still renders") {
    const std::string svg = render_line_chart(table_of("param_value,p_hat\n3,0.5\n"),
                                              PlotSpec{});
    CHECK(count_of(svg, "<polyline") == 0);
    CHECK(count_of(svg, "<circle") == 1);
}

TEST_CASE("titles and custom labels are escaped") {
    PlotSpec spec;
    spec.title = "p < 1 & rising";
    spec.x_label = "edges";
    const std::string svg =
        render_line_chart(table_of("param_value,p_hat\n0,0\n1,1\n"), spec);
    CHECK(svg.find("p &lt; 1 &amp; rising") != std::string::npos);
    CHECK(svg.find(">edges</text>") != std::string::npos);
}

TEST_CASE("rendering failures are specific") {
    PlotSpec spec;
    try {
        render_line_chart(table_of("a,p_hat\n1,2\n"), PlotSpec{});
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("param_value") != std::string::npos);
    }
    CHECK_THROWS_AS(render_line_chart(table_of("param_value,p_hat\n"), PlotSpec{}),
                    std::invalid_argument);
    // ci_band needs the interval columns.
    spec.ci_band = true;
    CHECK_THROWS_AS(render_line_chart(table_of("param_value,p_hat\n0,0.5\n"), spec),
                    std::invalid_argument);
    // Non-numeric cells are named by row and column.
    try {
        render_line_chart(table_of("param_value,p_hat\n0,oops\n"), PlotSpec{});
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("p_hat") != std::string::npos);
        CHECK(std::string(e.what()).find("oops") != std::string::npos);
    }
}

TEST_CASE("rendering is deterministic") {
    PlotSpec spec;
    spec.series_column = "shift_kind";
    spec.ci_band = true;
    spec.title = "sweep";
    const std::string a = render_line_chart(table_of(kTwoSeries), spec);
    const std::string b = render_line_chart(table_of(kTwoSeries), spec);
    CHECK(a == b);
    CHECK(a.size() > 500);
}
