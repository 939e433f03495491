#include "critcode/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "critcode/errors.hpp"

namespace critcode {

ReportFormat report_format_from_name(const std::string& name) {
    if (name == "table") return ReportFormat::table;
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw ParseError("unknown format: " + name);
}

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s.empty() ? "none" : s;
}

std::string stamp_line() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return std::string(buf);
}

std::string render_table(const BoundReport& r, bool timestamps) {
    const CriticalProfile& p = r.profile;
    std::ostringstream out;
    if (timestamps) out << "generated: " << stamp_line() << "\n";
    out << "code: [" << p.n << "," << p.k << "] over GF(" << p.q << ")\n";
    out << "hierarchy: " << join_ints(p.hierarchy) << "\n";
    out << "dual hierarchy: " << join_ints(p.dual_hierarchy) << "\n";
    out << "dual defects: " << join_ints(p.dual_defects) << "\n";
    out << "d_max: " << p.d_max << "\n";
    out << "kung bound: " << (r.kung ? std::to_string(*r.kung) : std::string("-")) << "\n";
    out << "\n";
    if (p.bound.empty()) {
        out << "bound range [k+1, n] is empty (k = n)\n";
    } else {
        const std::vector<std::string> labels = {"i", "s^perp + 2", "c_i", "t_i"};
        std::size_t label_w = 0;
        for (const auto& l : labels) label_w = std::max(label_w, l.size());
        const int count = p.n - p.k;
        std::vector<std::vector<std::string>> cells(4, std::vector<std::string>(static_cast<std::size_t>(count)));
        for (int idx = 0; idx < count; ++idx) {
            const int i = p.k + 1 + idx;
            cells[0][static_cast<std::size_t>(idx)] = std::to_string(i);
            cells[1][static_cast<std::size_t>(idx)] = std::to_string(p.bound[static_cast<std::size_t>(idx)]);
            cells[2][static_cast<std::size_t>(idx)] = std::to_string(p.critical[static_cast<std::size_t>(i) - 1]);
            cells[3][static_cast<std::size_t>(idx)] = std::to_string(p.deficit[static_cast<std::size_t>(idx)]);
        }
        std::vector<std::size_t> col_w(static_cast<std::size_t>(count), 0);
        for (const auto& row : cells)
            for (int idx = 0; idx < count; ++idx)
                col_w[static_cast<std::size_t>(idx)] =
                    std::max(col_w[static_cast<std::size_t>(idx)], row[static_cast<std::size_t>(idx)].size());
        for (std::size_t row = 0; row < 4; ++row) {
            out << labels[row] << std::string(label_w - labels[row].size(), ' ') << " |";
            for (int idx = 0; idx < count; ++idx) {
                const auto& cell = cells[row][static_cast<std::size_t>(idx)];
                out << ' ' << std::string(col_w[static_cast<std::size_t>(idx)] - cell.size(), ' ') << cell;
            }
            out << "\n";
        }
        out << "\n";
        out << "sharp at: " << join_ints(r.sharp) << "\n";
        if (r.certifications.empty()) {
            out << "certified: none\n";
        } else {
            std::map<int, std::vector<std::string>> by_index;
            for (const auto& c : r.certifications) by_index[c.index].push_back(c.predicate);
            out << "certified: ";
            bool first = true;
            for (const auto& [i, preds] : by_index) {
                if (!first) out << ", ";
                first = false;
                out << i << " (";
                for (std::size_t j = 0; j < preds.size(); ++j) {
                    if (j) out << ", ";
                    out << preds[j];
                }
                out << ")";
            }
            out << "\n";
        }
        out << "refined check: "
            << (r.refined.applicable ? (r.refined.holds ? "holds" : "VIOLATED") : "not applicable") << "\n";
    }
    return out.str();
}

std::string render_csv(const BoundReport& r, bool timestamps) {
    const CriticalProfile& p = r.profile;
    std::ostringstream out;
    if (timestamps) out << "# generated: " << stamp_line() << "\n";
    out << "i,bound,c,t\n";
    for (int i = 1; i <= p.n; ++i) {
        out << i << ',';
        if (i > p.k) out << p.bound[static_cast<std::size_t>(i - p.k) - 1];
        out << ',' << p.critical[static_cast<std::size_t>(i) - 1] << ',';
        if (i > p.k) out << p.deficit[static_cast<std::size_t>(i - p.k) - 1];
        out << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const BoundReport& r) {
    const CriticalProfile& p = r.profile;
    nlohmann::json j;
    j["schema_version"] = 1;
    j["code"] = {{"q", p.q}, {"n", p.n}, {"k", p.k}};
    j["profile"] = {{"hierarchy", p.hierarchy},   {"dual_hierarchy", p.dual_hierarchy},
                    {"dual_defects", p.dual_defects}, {"critical", p.critical},
                    {"bound", p.bound},           {"deficit", p.deficit},
                    {"d_max", p.d_max}};
    if (r.kung)
        j["kung"] = *r.kung;
    else
        j["kung"] = nullptr;
    j["sharp"] = r.sharp;
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : r.certifications) certs.push_back({{"i", c.index}, {"predicate", c.predicate}});
    j["certifications"] = certs;
    j["refined_check"] = {{"applicable", r.refined.applicable},
                     {"holds", r.refined.applicable ? nlohmann::json(r.refined.holds) : nlohmann::json(nullptr)}};
    return j;
}

}  // namespace

std::string render_report(const BoundReport& r, ReportFormat format, bool timestamps) {
    switch (format) {
        case ReportFormat::table:
            return render_table(r, timestamps);
        case ReportFormat::csv:
            return render_csv(r, timestamps);
        case ReportFormat::json: {
            nlohmann::json j = to_json(r);
            if (timestamps) j["generated"] = stamp_line();
            return j.dump(2) + "\n";
        }
    }
    throw DomainError("unknown report format");
}

BoundReport report_from_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        BoundReport r;
        CriticalProfile& p = r.profile;
        p.q = j.at("code").at("q").get<long>();
        p.n = j.at("code").at("n").get<int>();
        p.k = j.at("code").at("k").get<int>();
        const auto& jp = j.at("profile");
        p.hierarchy = jp.at("hierarchy").get<std::vector<int>>();
        p.dual_hierarchy = jp.at("dual_hierarchy").get<std::vector<int>>();
        p.dual_defects = jp.at("dual_defects").get<std::vector<int>>();
        p.critical = jp.at("critical").get<std::vector<int>>();
        p.bound = jp.at("bound").get<std::vector<int>>();
        p.deficit = jp.at("deficit").get<std::vector<int>>();
        p.d_max = jp.at("d_max").get<long>();
        if (!j.at("kung").is_null()) r.kung = j.at("kung").get<int>();
        r.sharp = j.at("sharp").get<std::vector<int>>();
        for (const auto& c : j.at("certifications"))
            r.certifications.push_back({c.at("i").get<int>(), c.at("predicate").get<std::string>()});
        r.refined.applicable = j.at("refined_check").at("applicable").get<bool>();
        r.refined.holds = j.at("refined_check").at("holds").is_null() ? false : j.at("refined_check").at("holds").get<bool>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad report json: ") + e.what());
    }
}

LinearCode parse_code_file(std::istream& in) {
    long q = 0;
    int n = 0, k = 0;
    if (!(in >> q >> n >> k)) throw ParseError("expected header line: q n k");
    if (n < 1 || n > MatrixGF::max_cols) throw ParseError("length out of range (1..64)");
    if (k < 1 || k > n) throw ParseError("dimension out of range (1..n)");
    FieldPtr f;
    try {
        f = Field::make_q(q);
    } catch (const DomainError& e) {
        throw ParseError(std::string("bad field size: ") + e.what());
    }
    std::vector<std::uint32_t> entries;
    entries.reserve(static_cast<std::size_t>(k) * n);
    for (int i = 0; i < k * n; ++i) {
        long v = 0;
        if (!(in >> v)) throw ParseError("expected " + std::to_string(k * n) + " matrix entries");
        if (v < 0 || v >= q) throw ParseError("matrix entry out of [0, q)");
        entries.push_back(static_cast<std::uint32_t>(v));
    }
    return LinearCode(MatrixGF(f, k, n, std::move(entries)));
}

LinearCode parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_code_file(in);
}

std::string code_to_file(const LinearCode& c) {
    std::ostringstream out;
    out << c.q() << ' ' << c.length() << ' ' << c.dimension() << '\n';
    for (int i = 0; i < c.dimension(); ++i) {
        for (int j = 0; j < c.length(); ++j) {
            if (j) out << ' ';
            out << c.generator().at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace critcode
