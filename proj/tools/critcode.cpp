#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "critcode/bounds.hpp"
#include "critcode/errors.hpp"
#include "critcode/families.hpp"
#include "critcode/matroid.hpp"
#include "critcode/report.hpp"
#include "critcode/verify.hpp"

namespace {

using namespace critcode;

struct InputFlags {
    std::string family;
    std::string file;
    long q = 0, k = 0, r = 0, n = 0, m = 0, l = 0, j = 0, seed = 0;
    CLI::Option *oq = nullptr, *ok = nullptr, *orr = nullptr, *on = nullptr, *om = nullptr,
                *ol = nullptr, *oj = nullptr, *oseed = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "built-in family: simplex|hamming|rm1|rs|block-ones|multi-projective|random");
        cmd->add_option("--file", file, "matrix file: first line \"q n k\", then k rows of n entries");
        oq = cmd->add_option("--q", q, "field size (prime power)");
        ok = cmd->add_option("--k", k, "dimension parameter");
        orr = cmd->add_option("--r", r, "rank parameter (rm1)");
        on = cmd->add_option("--n", n, "length parameter (rs, random)");
        om = cmd->add_option("--m", m, "block count (block-ones)");
        ol = cmd->add_option("--l", l, "block half-width (block-ones)");
        oj = cmd->add_option("--j", j, "representatives per point (multi-projective)");
        oseed = cmd->add_option("--seed", seed, "random family seed");
    }

    LinearCode make(const Caps& caps) const {
        if (!family.empty() && !file.empty()) throw ParseError("choose one of --family / --file");
        if (family.empty() && file.empty()) throw ParseError("need --family or --file");
        if (!file.empty()) return parse_code_file(file);
        FamilySpec spec;
        spec.kind = family_kind_from_name(family);
        auto put = [&](const char* name, long v, const CLI::Option* o) {
            if (o != nullptr && o->count() > 0) spec.params[name] = v;
        };
        put("q", q, oq);
        put("k", k, ok);
        put("r", r, orr);
        put("n", n, on);
        put("m", m, om);
        put("l", l, ol);
        put("j", j, oj);
        put("seed", seed, oseed);
        return make_family(spec, caps);
    }
};

struct CapFlags {
    long max_n = 24;
    std::uint64_t max_enum = 1ull << 24;
    CLI::Option* oenum = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-n", max_n, "length cap for 2^n subset sweeps (default 24)");
        oenum = cmd->add_option("--max-enum", max_enum,
                                "cap on enumerated objects (default 2^24; subspace sweeps "
                                "default to 2^22 unless this is set)");
    }

    Caps caps() const {
        Caps c;
        c.max_n = static_cast<int>(max_n);
        c.max_enum = max_enum;
        c.max_subspaces = (oenum != nullptr && oenum->count() > 0) ? max_enum : (1ull << 22);
        return c;
    }
};

std::vector<int> parse_range(const std::string& spec, int n) {
    std::vector<int> js;
    if (spec.empty() || spec == "all") {
        for (int j = 0; j <= n; ++j) js.push_back(j);
        return js;
    }
    const auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            js.push_back(std::stoi(spec));
        } else {
            const int lo = std::stoi(spec.substr(0, dots));
            const int hi = std::stoi(spec.substr(dots + 2));
            for (int j = lo; j <= hi; ++j) js.push_back(j);
        }
    } catch (const std::exception&) {
        throw ParseError("bad range: " + spec);
    }
    for (int j : js)
        if (j < 0 || j > n) throw ParseError("range index outside [0, n]");
    return js;
}

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    std::string cur;
    for (char ch : spec + ",") {
        if (ch == ',') {
            if (!cur.empty()) {
                try {
                    out.push_back(std::stoi(cur));
                } catch (const std::exception&) {
                    throw ParseError("bad list entry: " + cur);
                }
                cur.clear();
            }
        } else {
            cur += ch;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants and sharpness reports for linear codes over GF(q)"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "full profile and bound report for one code");
    InputFlags ain;
    CapFlags acaps;
    ain.attach(analyze);
    acaps.attach(analyze);
    std::string format = "table";
    bool timestamps = false;
    analyze->add_option("--format", format, "table|json|csv (default table)");
    analyze->add_flag("--timestamps", timestamps, "include a generation timestamp");

    auto* verify = app.add_subcommand("verify", "run a built-in verification suite");
    std::string suite = "all";
    std::uint64_t seed = 1;
    int codes = 25;
    CapFlags vcaps;
    verify->add_option("--suite", suite, "tables|oracles|bounds|families|all");
    verify->add_option("--seed", seed, "seed for the randomized suites");
    verify->add_option("--codes", codes, "random-code budget for the bounds suite");
    vcaps.attach(verify);

    auto* poly = app.add_subcommand("poly", "extended weight polynomials P_j");
    InputFlags pin;
    CapFlags pcaps;
    pin.attach(poly);
    pcaps.attach(poly);
    std::string range = "all";
    std::string eval_m;
    poly->add_option("--range", range, "j selection: \"all\", \"3\", or \"2..5\"");
    poly->add_option("--eval-m", eval_m, "also evaluate at q^m for these m (comma list)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) {
            const Caps caps = acaps.caps();
            const LinearCode c = ain.make(caps);
            const BoundReport rep = analyze_code(c, caps);
            std::cout << render_report(rep, report_format_from_name(format), timestamps);
            return 0;
        }
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.random_codes = codes;
            opt.caps = vcaps.caps();
            const auto results = run_suite(suite, opt);
            int failed = 0;
            for (const auto& res : results) {
                if (res.pass) {
                    std::cout << "PASS " << res.name << "\n";
                } else {
                    ++failed;
                    std::cout << "FAIL " << res.name << ": " << res.detail << "\n";
                }
            }
            std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
                      << " checks passed\n";
            return failed == 0 ? 0 : 1;
        }
        if (poly->parsed()) {
            const Caps caps = pcaps.caps();
            const LinearCode c = pin.make(caps);
            const auto js = parse_range(range, c.length());
            const auto ms = parse_int_list(eval_m);
            for (int j : js) {
                const WeightPolynomial p = extended_weight_polynomial(c, j, caps);
                std::cout << "P_" << j << "(x) = " << p.str() << "\n";
                for (int m : ms) {
                    if (m < 1) throw ParseError("evaluation exponent must be >= 1");
                    const BigInt x = bigpow(BigInt(c.q()), static_cast<unsigned>(m));
                    std::cout << "P_" << j << "(" << x.str() << ") = " << p(x).str() << "\n";
                }
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;  // bad user-supplied parameters
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateCode& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
