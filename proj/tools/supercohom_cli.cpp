// Batch front end. Reports are JSON lines (or CSV tables) on stdout or --out.
//
// Monomial syntax in reports: generators joined by '^' in basis order, an odd
// generator with exponent n > 1 written name~n, the empty monomial written 1.
// A cochain is a space-separated list of terms "+c*module|monomial", or "0".

#include "supercohom/cohomology.hpp"
#include "supercohom/cup.hpp"
#include "supercohom/io.hpp"
#include "supercohom/spectral.hpp"
#include "supercohom/superalgebra.hpp"
#include "supercohom/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace supercohom;

namespace {

enum Exit { Ok = 0, Mismatch = 1, Input = 2, Cap = 3, Unsupported = 4 };

struct RunConfig {
    std::vector<std::string> family;
    std::string input;
    std::string module = "adjoint";
    std::string window;
    int degree_cap = 0;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 1;
    bool all_zero = false;
    bool oracle = false;
    std::string scale = "default";
    bool mutate_dual_sign = false;
};

std::size_t parse_count(const std::string& s, const std::string& what)
{
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty() || s[0] == '-')
        throw InputError(what + ": expected a non-negative integer, got '" + s + "'");
    return v;
}

LieSuperalgebra load_algebra(const RunConfig& cfg)
{
    if (!cfg.family.empty() && !cfg.input.empty())
        throw InputError("give either --family or --input, not both");
    if (!cfg.input.empty())
        return load_algebra_file(cfg.input);
    if (cfg.family.empty())
        throw InputError("an algebra is required: --family {h m n | ba n | abelian r s} or --input FILE");
    const std::string& kind = cfg.family[0];
    auto arg = [&](std::size_t i) { return parse_count(cfg.family.at(i), "--family " + kind); };
    if (kind == "h" && cfg.family.size() == 3)
        return heisenberg_even(arg(1), arg(2));
    if (kind == "ba" && cfg.family.size() == 2)
        return heisenberg_odd(arg(1));
    if (kind == "abelian" && cfg.family.size() == 3)
        return abelian(arg(1), arg(2));
    throw InputError("unknown family specification; use h m n, ba n or abelian r s");
}

std::pair<int, int> parse_window(const std::string& text, std::pair<int, int> fallback)
{
    if (text.empty())
        return fallback;
    const auto dots = text.find("..");
    const std::string a = dots == std::string::npos ? text : text.substr(0, dots);
    const std::string b = dots == std::string::npos ? text : text.substr(dots + 2);
    const int lo = static_cast<int>(parse_count(a, "--k"));
    const int hi = static_cast<int>(parse_count(b, "--k"));
    if (hi < lo)
        throw InputError("--k window " + text + " is empty");
    return {lo, hi};
}

Limits make_limits(const RunConfig& cfg)
{
    Limits l = limits_from_env();
    if (cfg.degree_cap < 0)
        throw InputError("--degree-cap must be positive");
    if (cfg.degree_cap > 0)
        l.degree_cap = cfg.degree_cap;
    return l;
}

CoefficientModule make_module(const RunConfig& cfg, const LieSuperalgebra& alg)
{
    if (cfg.module == "adjoint")
        return adjoint_module(alg);
    if (cfg.module == "trivial")
        return trivial_module(alg);
    throw InputError("--module must be adjoint or trivial");
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw InputError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void line(const Json& j) { stream() << j.dump() << '\n'; }

private:
    std::ofstream file_;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

bool want_csv(const RunConfig& cfg)
{
    if (cfg.format != "json" && cfg.format != "csv")
        throw InputError("--format must be json or csv");
    return cfg.format == "csv";
}

// ---------------------------------------------------------------------------

int cmd_check(const RunConfig& cfg)
{
    const LieSuperalgebra alg = load_algebra(cfg);
    Output out(cfg.out);
    const ValidationReport rep = validate(alg);
    const auto names = alg.names();
    Json violations = Json::array();
    for (const auto& v : rep.violations) {
        Json where = Json::array();
        for (auto i : v.indices)
            where.push_back(names[i]);
        Json residual = Json::object();
        for (const auto& [i, c] : v.residual)
            residual[names[i]] = to_string(c);
        violations.push_back({{"axiom", axiom_name(v.kind)}, {"basis", where}, {"residual", residual}});
    }
    const auto [r, s] = alg.superdim();
    out.line({{"algebra", alg.name()},
              {"superdim", {r, s}},
              {"valid", rep.ok()},
              {"violations", violations}});
    return rep.ok() ? Ok : Mismatch;
}

int cmd_betti(const RunConfig& cfg)
{
    const LieSuperalgebra alg = load_algebra(cfg);
    const bool csv = want_csv(cfg);
    const auto [lo, hi] = parse_window(cfg.window, {0, 3});
    const Limits limits = make_limits(cfg);
    const CochainComplex cx(alg, make_module(cfg, alg), limits);
    Output out(cfg.out);
    if (csv)
        out.stream() << "k,betti,betti_even,betti_odd,cochain_dim,rank_d_k,rank_d_k_minus_1\n";
    for (int k = lo; k <= hi; ++k) {
        try {
            const CohomologyReport rep = betti(cx, k, !csv);
            if (csv) {
                out.stream() << rep.k << ',' << rep.betti << ',' << rep.betti_even << ',' << rep.betti_odd << ','
                             << rep.cochain_dim << ',' << rep.rank_dk << ',' << rep.rank_dk_minus_1 << '\n';
            } else {
                Json j{{"algebra", alg.name()}, {"module", cfg.module}};
                const Json body = cohomology_report_json(cx, rep);
                for (const auto& [key, v] : body.items())
                    j[key] = v;
                out.line(j);
            }
        } catch (const ResourceCapError& e) {
            if (csv)
                out.stream() << k << ",partial,,,,,\n";
            else
                out.line({{"algebra", alg.name()}, {"k", k}, {"partial", true}, {"error", e.what()}});
            std::cerr << "resource cap: " << e.what() << '\n';
            return Cap;
        }
    }
    return Ok;
}

int cmd_cup(const RunConfig& cfg)
{
    const LieSuperalgebra alg = load_algebra(cfg);
    const bool csv = want_csv(cfg);
    const auto [lo, hi] = parse_window(cfg.window, {0, 5});
    const int cap = cfg.degree_cap > 0 ? cfg.degree_cap : hi;
    const Limits limits = make_limits(cfg);
    const CochainComplex cx(alg, make_module(cfg, alg), limits);
    const StarProduct star = cfg.module == "adjoint" ? adjoint_star(alg) : trivial_star();
    Output out(cfg.out);
    if (csv)
        out.stream() << "p,q,i,j,class\n";
    bool all_zero = true;
    for (int p = lo; p <= hi; ++p)
        for (int q = lo; q <= hi && p + q <= cap; ++q) {
            CupTable table;
            try {
                table = cup_on_cohomology(cx, star, p, q);
            } catch (const ResourceCapError& e) {
                if (!csv)
                    out.line({{"algebra", alg.name()}, {"p", p}, {"q", q}, {"partial", true}, {"error", e.what()}});
                std::cerr << "resource cap: " << e.what() << '\n';
                return Cap;
            }
            if (cfg.oracle) {
                const CoboundarySpace coboundaries(cx, p + q);
                for (std::size_t i = 0; i < table.left.size(); ++i)
                    for (std::size_t j = 0; j < table.right.size(); ++j) {
                        const Cochain slow = cup_permutation_sum(star, cx.module().parities(), cx.generators(),
                                                                 table.left[i], table.right[j], limits.factorial_cap);
                        if (!(coboundaries.reduce(slow) == table.cells[i][j]))
                            throw MismatchError("cup (" + std::to_string(p) + "," + std::to_string(q) + ") cell " +
                                                std::to_string(i) + "," + std::to_string(j) +
                                                ": closed form and permutation sum disagree");
                    }
            }
            all_zero = all_zero && table.all_zero();
            if (csv) {
                const auto mnames = cx.module().names();
                const auto gnames = alg.names();
                for (std::size_t i = 0; i < table.cells.size(); ++i)
                    for (std::size_t j = 0; j < table.cells[i].size(); ++j)
                        out.stream() << p << ',' << q << ',' << i << ',' << j << ','
                                     << csv_field(format_cochain(mnames, gnames, table.cells[i][j])) << '\n';
            } else {
                Json j{{"algebra", alg.name()}, {"module", cfg.module}};
                const Json body = cup_table_json(cx, table);
                for (const auto& [key, v] : body.items())
                    j[key] = v;
                out.line(j);
            }
        }
    if (cfg.all_zero && !all_zero) {
        std::cerr << "cup product table has nonzero entries\n";
        return Mismatch;
    }
    return Ok;
}

int cmd_spectral(const RunConfig& cfg)
{
    const LieSuperalgebra alg = load_algebra(cfg);
    const auto [lo, hi] = parse_window(cfg.window, {0, 3});
    const Limits limits = make_limits(cfg);
    Output out(cfg.out);
    CentralLine line;
    try {
        line = central_line(alg);
    } catch (const UnsupportedError& e) {
        Json dims = Json::object();
        const auto c = center(alg);
        for (const auto& [pq, d] : e2_dimensions(alg, c, hi, limits))
            dims[std::to_string(pq.first) + "," + std::to_string(pq.second)] = d;
        out.line({{"algebra", alg.name()}, {"center_dim", c.size()}, {"supported", false}, {"reason", e.what()},
                  {"e2_dims", dims}});
        std::cerr << "unsupported: " << e.what() << '\n';
        return Unsupported;
    }
    const SpectralSequence ss(line, hi, limits);
    out.stream() << "{\"algebra\":" << Json(alg.name()).dump() << ",\"page\":" << page_json(ss.page(2)) << "}\n";
    out.stream() << "{\"algebra\":" << Json(alg.name()).dump() << ",\"page\":" << page_json(ss.page(3)) << "}\n";
    const CochainComplex cx(alg, adjoint_module(alg), limits);
    bool ok = ss.d2_squares_to_zero();
    for (int k = lo; k <= hi; ++k) {
        std::size_t total = 0;
        for (int q = 0; q <= k; ++q)
            if (ss.has_entry(k - q, q))
                total += ss.e3(k - q, q).dim();
        const std::size_t h = betti(cx, k).betti;
        ok = ok && total == h;
        out.line({{"algebra", alg.name()}, {"k", k}, {"e3_total", total}, {"betti", h}, {"match", total == h}});
    }
    return ok ? Ok : Mismatch;
}

int cmd_verify(const RunConfig& cfg)
{
    VerifyConfig vc;
    if (cfg.scale == "large")
        vc.scale = VerifyConfig::Scale::Large;
    else if (cfg.scale != "default")
        throw InputError("--scale must be default or large");
    vc.seed = cfg.seed;
    vc.mutate_dual_sign = cfg.mutate_dual_sign;
    vc.limits = make_limits(cfg);
    Output out(cfg.out);
    bool ok = true;
    for (int c = 1; c <= kVerificationChecks; ++c) {
        const CheckResult r = run_check(c, vc);
        ok = ok && r.passed;
        out.line(check_json(r));
        out.stream().flush();
    }
    return ok ? Ok : Mismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology of Lie superalgebras over the rationals"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family, "h m n | ba n | abelian r s")->expected(2, 3);
        sub->add_option("--input", cfg.input, "algebra JSON file");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "write the report here instead of stdout");
        sub->add_option("--degree-cap", cfg.degree_cap, "largest cochain degree");
    };

    auto* check = app.add_subcommand("check", "validate the axioms of an algebra");
    add_algebra(check);
    check->add_option("--out", cfg.out, "write the report here instead of stdout");

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers and representatives");
    add_algebra(betti_cmd);
    add_common(betti_cmd);
    betti_cmd->add_option("--module", cfg.module, "adjoint | trivial");
    betti_cmd->add_option("--k", cfg.window, "degree window A..B");
    betti_cmd->add_option("--format", cfg.format, "json | csv");

    auto* cup = app.add_subcommand("cup", "cup products on cohomology");
    add_algebra(cup);
    add_common(cup);
    cup->add_option("--module", cfg.module, "adjoint | trivial");
    cup->add_option("--k", cfg.window, "window for p and q");
    cup->add_option("--format", cfg.format, "json | csv");
    cup->add_flag("--all-zero", cfg.all_zero, "exit 1 if any product is nonzero");
    cup->add_flag("--oracle", cfg.oracle, "recompute every cell by the permutation sum");

    auto* spectral = app.add_subcommand("spectral", "E2 and E3 pages for a one-dimensional center");
    add_algebra(spectral);
    add_common(spectral);
    spectral->add_option("--k", cfg.window, "total degree window A..B");

    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    add_common(verify);
    verify->add_option("--seed", cfg.seed, "seed for the randomized subsets");
    verify->add_option("--scale", cfg.scale, "default | large");
    verify->add_flag("--mutate-dual-sign", cfg.mutate_dual_sign)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Input;
    }

    try {
        if (*check)
            return cmd_check(cfg);
        if (*betti_cmd)
            return cmd_betti(cfg);
        if (*cup)
            return cmd_cup(cfg);
        if (*spectral)
            return cmd_spectral(cfg);
        return cmd_verify(cfg);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return Input;
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return Cap;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return Unsupported;
    } catch (const MismatchError& e) {
        std::cerr << "mismatch: " << e.what() << '\n';
        return Mismatch;
    }
}
