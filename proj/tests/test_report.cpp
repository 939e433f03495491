#include <doctest.h>

#include <sstream>

#include "critcode/errors.hpp"
#include "critcode/families.hpp"
#include "critcode/report.hpp"

using namespace critcode;

TEST_CASE("json reports round-trip") {
    const LinearCode full(MatrixGF(Field::make_q(3), 2, 2, {1, 0, 0, 1}));  // k = n: no kung value
    for (const auto& c : {simplex(2, 4), block_ones(3, 1), reed_solomon(5, 4, 2),
                          random_code(3, 6, 3, 77), full}) {
        const BoundReport r = analyze_code(c);
        const std::string text = render_report(r, ReportFormat::json);
        const BoundReport back = report_from_json(text);
        CHECK(back == r);
        CHECK(render_report(back, ReportFormat::json) == text);
    }
    CHECK_THROWS_AS(report_from_json("{"), ParseError);
    CHECK_THROWS_AS(report_from_json("{\"schema_version\":1}"), ParseError);
}

TEST_CASE("rendering is deterministic") {
    const BoundReport r = analyze_code(simplex(2, 4));
    for (ReportFormat f : {ReportFormat::table, ReportFormat::json, ReportFormat::csv})
        CHECK(render_report(r, f) == render_report(r, f));
}

TEST_CASE("csv layout") {
    const BoundReport r = analyze_code(block_ones(3, 1));
    const std::string csv = render_report(r, ReportFormat::csv);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "i,bound,c,t");
    std::getline(in, line);
    CHECK(line == "1,,1,");
    for (int i = 2; i <= 6; ++i) std::getline(in, line);
    CHECK(line == "6,,1,");
    std::getline(in, line);
    CHECK(line == "7,2,2,0");
    std::getline(in, line);
    CHECK(line == "8,4,2,2");
    std::getline(in, line);
    CHECK(line == "9,6,2,4");
    const bool trailing = static_cast<bool>(std::getline(in, line)) && !line.empty();
    CHECK_FALSE(trailing);
}

TEST_CASE("matrix files parse and print") {
    const LinearCode c = simplex(3, 2);
    std::istringstream in(code_to_file(c));
    const LinearCode back = parse_code_file(in);
    CHECK(back == c);

    std::istringstream bad_header("x");
    CHECK_THROWS_AS(parse_code_file(bad_header), ParseError);
    std::istringstream bad_q("12 3 1\n1 1 1\n");
    CHECK_THROWS_AS(parse_code_file(bad_q), ParseError);
    std::istringstream bad_entry("3 3 1\n1 5 1\n");
    CHECK_THROWS_AS(parse_code_file(bad_entry), ParseError);
    std::istringstream truncated("2 3 2\n1 0 1\n");
    CHECK_THROWS_AS(parse_code_file(truncated), ParseError);
    std::istringstream bad_k("2 3 4\n");
    CHECK_THROWS_AS(parse_code_file(bad_k), ParseError);
    CHECK_THROWS_AS(parse_code_file(std::string("/nonexistent/path.txt")), ParseError);
}

TEST_CASE("format names") {
    CHECK(report_format_from_name("table") == ReportFormat::table);
    CHECK(report_format_from_name("json") == ReportFormat::json);
    CHECK(report_format_from_name("csv") == ReportFormat::csv);
    CHECK_THROWS_AS(report_format_from_name("yaml"), ParseError);
}
