// Command-line front end. Exit codes: 0 success, 1 usage or IO error,
// 2 a mathematical check failed.

#include "chowq/correspondence.hpp"
#include "chowq/diagram.hpp"
#include "chowq/errors.hpp"
#include "chowq/holes.hpp"
#include "chowq/patterns.hpp"
#include "chowq/ring.hpp"
#include "chowq/steenrod.hpp"
#include "chowq/structure.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

using namespace chowq;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

void print_cycle(const Cycle& c, bool as_json)
{
    if (as_json)
        std::cout << cycle_to_json(c).dump() << '\n';
    else
        std::cout << render_cycle(c) << '\n';
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" {}()"));
        item.erase(item.find_last_not_of(" {}()") + 1);
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw Error(Errc::syntax, "not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

json check_json(const CheckResult& r)
{
    return {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}

bool use_color()
{
    const char* env = std::getenv("CHOWQ_COLOR");
    if (env && std::string(env) == "0")
        return false;
    return isatty(STDOUT_FILENO) != 0;
}

Method parse_method(const std::string& s)
{
    if (s == "brute")
        return Method::brute;
    if (s == "bilinear")
        return Method::bilinear;
    return Method::automatic;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mod-2 Chow groups of powers of split quadrics"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    int D = -1;
    auto add_D = [&D](CLI::App* sub) { sub->add_option("-D,--dim", D, "Quadric dimension")->required(); };

    std::vector<std::string> cycles;

    auto* mul_cmd = app.add_subcommand("mul", "Product of cycles of equal arity");
    add_D(mul_cmd);
    mul_cmd->add_option("cycles", cycles, "Cycles")->required();

    int k = -1;
    auto* st_cmd = app.add_subcommand("steenrod", "Total or graded Steenrod operation");
    add_D(st_cmd);
    st_cmd->add_option("-k", k, "Degree (total operation when absent)");
    st_cmd->add_option("cycle", cycles, "Cycle")->required()->expected(1);

    auto* comp_cmd = app.add_subcommand("compose", "Composition b ∘ a of correspondences, first argument applied first");
    add_D(comp_cmd);
    comp_cmd->add_option("cycles", cycles, "Cycles a, b")->required()->expected(2);

    int di = 0, dj = 0;
    auto* der_cmd = app.add_subcommand("derive", "Derivative α·(h^i × h^j) of an arity-2 cycle");
    add_D(der_cmd);
    der_cmd->add_option("-i", di, "First exponent")->required();
    der_cmd->add_option("-j", dj, "Second exponent")->required();
    der_cmd->add_option("cycle", cycles, "Cycle")->required()->expected(1);

    std::string splitting_text;
    auto* diag_cmd = app.add_subcommand("diagram", "Pyramid picture of an arity-2 cycle");
    add_D(diag_cmd);
    diag_cmd->add_option("cycle", cycles, "Cycle")->expected(0, 1);
    diag_cmd->add_option("--splitting", splitting_text, "Higher Witt indices, comma separated");

    std::string family_file, inner_file;
    auto* check_cmd = app.add_subcommand("check", "Close a candidate family and run every checker");
    check_cmd->add_option("family", family_file, "Family JSON file")->required()->check(CLI::ExistingFile);
    check_cmd->add_option("inner", inner_file, "Family over the first isotropic step")->check(CLI::ExistingFile);
    bool known = false;
    check_cmd->add_flag("--known", known, "Also test the small-quadric shape of the arity-2 group");

    std::string what = "contradiction";
    int n = 0, m = 0, p = 0, i1 = 0;
    std::string method = "auto";
    unsigned jobs = 0;
    bool cross = false;
    std::string out_file;
    auto* verify_cmd = app.add_subcommand("verify", "Certify the contradiction computation or the i1 exclusion");
    verify_cmd->add_option("what", what, "contradiction | i1")->check(CLI::IsMember({"contradiction", "i1"}));
    verify_cmd->add_option("--n", n, "n");
    verify_cmd->add_option("--m", m, "m");
    verify_cmd->add_option("--p", p, "p");
    verify_cmd->add_option("--method", method, "auto | brute | bilinear")->check(CLI::IsMember({"auto", "brute", "bilinear"}));
    verify_cmd->add_option("--jobs", jobs, "Worker threads (default: available parallelism)");
    verify_cmd->add_flag("--cross-check", cross, "Run both methods");
    verify_cmd->add_option("-o,--output", out_file, "Also write the certificate to this file");
    verify_cmd->add_option("-D,--dim", D, "Quadric dimension (i1)");
    verify_cmd->add_option("--i1", i1, "First Witt index (i1)");

    std::string pkind;
    int cap = 0;
    std::string pattern_text;
    auto* pattern_cmd = app.add_subcommand("pattern", "Dimension sets and splitting patterns");
    pattern_cmd->add_option("kind", pkind, "dim-in | vishik | small | gap | min")
        ->required()
        ->check(CLI::IsMember({"dim-in", "vishik", "small", "gap", "min"}));
    pattern_cmd->add_option("--n", n, "n")->required();
    pattern_cmd->add_option("--m", m, "m");
    pattern_cmd->add_option("--cap", cap, "Upper bound (dim-in)");
    pattern_cmd->add_option("pattern", pattern_text, "Comma-separated pattern (gap, min)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*mul_cmd) {
            Geometry g(D);
            Cycle acc = parse_cycle(cycles.front(), g);
            for (std::size_t i = 1; i < cycles.size(); ++i)
                acc = mul(acc, parse_cycle(cycles[i], g, acc.arity()));
            print_cycle(acc, as_json);
            return kOk;
        }
        if (*st_cmd) {
            Geometry g(D);
            Cycle c = parse_cycle(cycles.front(), g);
            print_cycle(k < 0 ? steenrod_total(c) : steenrod_k(c, k), as_json);
            return kOk;
        }
        if (*comp_cmd) {
            Geometry g(D);
            print_cycle(compose(parse_cycle(cycles[0], g), parse_cycle(cycles[1], g)), as_json);
            return kOk;
        }
        if (*der_cmd) {
            Geometry g(D);
            print_cycle(derivative(parse_cycle(cycles.front(), g, 2), di, dj), as_json);
            return kOk;
        }
        if (*diag_cmd) {
            Geometry g(D);
            std::optional<Cycle> c;
            if (!cycles.empty())
                c = parse_cycle(cycles.front(), g, 2);
            DiagramOptions opts;
            if (!splitting_text.empty())
                opts.splitting = SplittingData{parse_int_list(splitting_text)};
            opts.color = !as_json && use_color();
            const std::string art = render_diagram(g, c ? &*c : nullptr, opts);
            if (as_json) {
                json rows = json::array();
                std::istringstream in(art);
                for (std::string line; std::getline(in, line);)
                    rows.push_back(line);
                std::cout << json{{"D", D}, {"rows", rows}}.dump() << '\n';
            } else {
                std::cout << art;
            }
            return kOk;
        }
        if (*check_cmd) {
            RationalFamily family = family_from_json(read_json_file(family_file));
            std::optional<RationalFamily> inner;
            if (!inner_file.empty())
                inner = family_from_json(read_json_file(inner_file));
            auto results = check_all(family, inner ? &*inner : nullptr);
            if (known) {
                if (!family.splitting)
                    throw std::runtime_error("--known needs a splitting in the family file");
                try {
                    results.push_back(check_known(closure(family), *family.splitting));
                } catch (const Error& e) {
                    results.push_back({"known", false, e.what()});
                }
            }
            bool ok = true;
            json report = json::array();
            for (const auto& r : results) {
                ok = ok && r.passed;
                report.push_back(check_json(r));
            }
            if (as_json) {
                std::cout << json{{"D", family.geometry().D()}, {"passed", ok}, {"checks", report}}.dump(2) << '\n';
            } else {
                for (const auto& r : results)
                    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail)
                              << '\n';
            }
            return ok ? kOk : kFailed;
        }
        if (*verify_cmd) {
            if (what == "i1") {
                if (D < 0 || i1 <= 0)
                    throw Error(Errc::invalid_argument, "verify i1 needs -D and --i1");
                const I1Exclusion r = i1_exclusion_via_steenrod(D, i1);
                if (as_json)
                    std::cout << json{{"D", D}, {"i1", i1}, {"power", r.power}, {"excluded", r.excluded}, {"reason", r.reason}}.dump()
                              << '\n';
                else
                    std::cout << (r.excluded ? "excluded" : "not excluded") << ": " << r.reason << '\n';
                return kOk;
            }
            ContradictionOptions opts;
            opts.method = parse_method(method);
            opts.jobs = jobs;
            opts.cross_check = cross;
            const Certificate cert = verify_contradiction(HoleParams::make(n, m, p), opts);
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                if (!out)
                    throw std::runtime_error("cannot write " + out_file);
                out << cert.json.dump(2) << '\n';
            }
            if (as_json) {
                std::cout << cert.json.dump(2) << '\n';
            } else {
                const auto& c = cert.json;
                std::cout << "parameters n=" << n << " m=" << m << " p=" << p << " (D=" << c["params"]["D"] << ", J="
                          << c["params"]["J"] << ")\n"
                          << "method " << c["method"].get<std::string>() << ", target " << c["target"].get<std::string>()
                          << '\n'
                          << (cert.certified ? "CERTIFIED" : "FALSIFIED") << '\n';
            }
            return cert.certified ? kOk : kFailed;
        }
        if (*pattern_cmd) {
            Pattern pat;
            json extra = json::object();
            bool ok = true;
            std::string detail;
            if (pkind == "dim-in") {
                pat = dim_In_set(n, cap);
            } else if (pkind == "vishik") {
                pat = vishik_pattern(n, m);
            } else if (pkind == "small") {
                pat = small_splitting_pattern(n, m);
                extra["height"] = static_cast<int>(pat.size()) - 1;
            } else {
                const auto values = parse_int_list(pattern_text);
                pat = Pattern(values.begin(), values.end());
                if (pkind == "gap") {
                    const GapVerdict v = gap_certificate(pat, n);
                    ok = v.passed;
                    detail = v.detail;
                    if (!v.passed)
                        extra["violation"] = {{"b", v.b}, {"c", v.c}, {"witness", v.witness}};
                } else {
                    const MinSplittingVerdict v = check_min_splitting(n, pat);
                    ok = v.passed;
                    detail = v.detail;
                }
                extra["passed"] = ok;
                extra["detail"] = detail;
            }
            if (as_json) {
                json j{{"kind", pkind}, {"n", n}, {"pattern", std::vector<int>(pat.begin(), pat.end())}};
                j.update(extra);
                std::cout << j.dump() << '\n';
            } else {
                std::cout << to_string(pat) << '\n';
                if (extra.contains("height"))
                    std::cout << "height " << extra["height"] << '\n';
                if (extra.contains("passed"))
                    std::cout << (ok ? "PASS" : "FAIL") << (detail.empty() ? "" : ": " + detail) << '\n';
            }
            return ok ? kOk : kFailed;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
