// Command-line front end: construct Bezout pairs, sweep identity
// verifications over parameter grids, and evaluate incomplete beta values.
//
// Exit statuses: 0 all checks passed, 1 verification failure,
// 2 usage/config error, 3 quadrature non-convergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "chaundy/chaundy.hpp"

namespace {

using chaundy::CheckReport;
using chaundy::DensePoly;
using chaundy::Index;
using chaundy::Rational;
using ordered_json = nlohmann::ordered_json;

enum class Format { Human, Json, Csv };

Format parse_format(const std::string& f) {
    if (f == "human") return Format::Human;
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    throw chaundy::config_error("unknown format '" + f + "'");
}

std::vector<std::string> coeff_strings(const DensePoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(chaundy::to_string(c));
    if (out.empty()) out.push_back("0");
    return out;
}

std::string bracket_list(const std::vector<std::string>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i];
    }
    return out + "]";
}

bool looks_integral(const std::string& v) {
    if (v.empty()) return false;
    std::size_t i = v[0] == '-' ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
}

ordered_json report_json(const CheckReport& r) {
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : r.params) {
        if (looks_integral(value))
            params[name] = std::stoll(value);
        else
            params[name] = value;
    }
    ordered_json j;
    j["identity"] = r.identity;
    j["params"] = params;
    j["passed"] = r.passed;
    j["residual"] = r.residual;
    j["method"] = r.method;
    return j;
}

std::string csv_escape(const std::string& s) {
    bool needs_quotes = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quotes) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::string params_human(const chaundy::Params& params) {
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) out += " ";
        out += name + "=" + value;
    }
    return out;
}

// ---------------------------------------------------------------------------

int run_solve(Index n, Index m, Format fmt) {
    auto sol = chaundy::closed_form(n, m);
    DensePoly residual = chaundy::bezout_residual(sol.P, sol.Q, n, m);
    const std::string mu_str = chaundy::to_string(chaundy::mu(n, m));

    switch (fmt) {
        case Format::Json: {
            ordered_json j;
            j["P"] = coeff_strings(sol.P);
            j["Q"] = coeff_strings(sol.Q);
            j["mu"] = mu_str;
            j["residual"] = residual.str();
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "field,index,value\n";
            auto rows = [](const char* name, const std::vector<std::string>& vals) {
                for (std::size_t i = 0; i < vals.size(); ++i)
                    std::cout << name << "," << i << "," << csv_escape(vals[i]) << "\n";
            };
            rows("P", coeff_strings(sol.P));
            rows("Q", coeff_strings(sol.Q));
            std::cout << "mu,," << mu_str << "\n";
            std::cout << "residual,," << csv_escape(residual.str()) << "\n";
            break;
        }
        case Format::Human:
            std::cout << "P coefficients (ascending): " << bracket_list(coeff_strings(sol.P))
                      << "\n";
            std::cout << "Q coefficients (ascending): " << bracket_list(coeff_strings(sol.Q))
                      << "\n";
            std::cout << "P(x) = " << sol.P.str() << "\n";
            std::cout << "Q(x) = " << sol.Q.str() << "\n";
            std::cout << "mu = " << mu_str << "\n";
            std::cout << "residual = " << residual.str() << "\n";
            break;
    }
    return residual.is_zero() ? 0 : 1;
}

int run_table(const std::string& kind, Index n, Index m, Format fmt) {
    std::vector<std::string> values;
    if (kind == "P") {
        values = coeff_strings(chaundy::closed_form(n, m).P);
    } else if (kind == "Q") {
        values = coeff_strings(chaundy::closed_form(n, m).Q);
    } else if (kind == "mu") {
        values = {chaundy::to_string(chaundy::mu(n, m))};
    } else if (kind == "a_coeffs" || kind == "d_coeffs") {
        auto sp = chaundy::second_proof_coefficients(n, m);
        for (const auto& v : (kind == "a_coeffs" ? sp.a : sp.d))
            values.push_back(chaundy::to_string(v));
    } else {
        throw chaundy::config_error("unknown table kind '" + kind + "'");
    }

    switch (fmt) {
        case Format::Json: {
            ordered_json j;
            j["kind"] = kind;
            j["n"] = n;
            j["m"] = m;
            j["values"] = values;
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "index,value\n";
            for (std::size_t i = 0; i < values.size(); ++i)
                std::cout << i << "," << csv_escape(values[i]) << "\n";
            break;
        case Format::Human: {
            std::string joined;
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (i) joined += ", ";
                joined += values[i];
            }
            std::cout << joined << "\n";
            break;
        }
    }
    return 0;
}

int run_check(const chaundy::SweepConfig& cfg, Format fmt) {
    auto reports = chaundy::run_sweep(cfg);

    std::size_t passed = 0;
    if (fmt == Format::Csv) std::cout << "identity,params,passed,residual,method\n";
    for (const auto& r : reports) {
        passed += r.passed;
        switch (fmt) {
            case Format::Json: std::cout << report_json(r).dump() << "\n"; break;
            case Format::Csv:
                std::cout << r.identity << "," << csv_escape(params_human(r.params)) << ","
                          << (r.passed ? "true" : "false") << "," << csv_escape(r.residual)
                          << "," << csv_escape(r.method) << "\n";
                break;
            case Format::Human:
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.identity << " "
                          << params_human(r.params);
                if (!r.passed) std::cout << " residual=" << r.residual;
                std::cout << " (" << r.method << ")\n";
                break;
        }
    }

    // keep json/csv streams machine-parseable; the summary goes to stderr there
    std::ostream& summary = fmt == Format::Human ? std::cout : std::cerr;
    summary << "passed " << passed << "/" << reports.size() << "\n";
    return passed == reports.size() ? 0 : 1;
}

int run_beta(const std::string& x_text, const std::string& y_text,
             const std::optional<std::string>& a_text, std::size_t quad_budget, Format fmt) {
    const Rational x = chaundy::parse_rational(x_text);
    const Rational y = chaundy::parse_rational(y_text);
    std::optional<Rational> a;
    if (a_text) a = chaundy::parse_rational(*a_text);

    const bool exact = chaundy::is_integer(x) && chaundy::is_integer(y) && x >= 1 && y >= 1;
    if (exact) {
        const Index p = static_cast<Index>(chaundy::numer(x).convert_to<unsigned long>());
        const Index q = static_cast<Index>(chaundy::numer(y).convert_to<unsigned long>());
        DensePoly poly = chaundy::incomplete_beta_exact(p, q);
        std::optional<std::string> value;
        if (a) value = chaundy::to_string(poly.eval(*a));

        switch (fmt) {
            case Format::Json: {
                ordered_json j;
                j["mode"] = "exact";
                j["x"] = x_text;
                j["y"] = y_text;
                j["coeffs"] = coeff_strings(poly);
                j["polynomial"] = poly.str("a");
                if (value) {
                    j["a"] = *a_text;
                    j["value"] = *value;
                }
                std::cout << j.dump() << "\n";
                break;
            }
            case Format::Csv: {
                std::cout << "index,value\n";
                auto coeffs = coeff_strings(poly);
                for (std::size_t i = 0; i < coeffs.size(); ++i)
                    std::cout << i << "," << csv_escape(coeffs[i]) << "\n";
                if (value) std::cout << "at_a,," << *value << "\n";
                break;
            }
            case Format::Human:
                std::cout << "B_a(" << x_text << ", " << y_text << ") = " << poly.str("a")
                          << "\n";
                if (value)
                    std::cout << "value at a = " << chaundy::to_string(*a) << ": " << *value
                              << "\n";
                break;
        }
        return 0;
    }

    if (!a) throw chaundy::config_error("numeric beta evaluation needs --a");
    chaundy::QuadOptions opt;
    opt.max_subdivisions = quad_budget;
    const long double value = chaundy::incomplete_beta_numeric(
        chaundy::to_long_double(x), chaundy::to_long_double(y), chaundy::to_long_double(*a),
        opt);
    const std::string rendered = chaundy::decimal_string(value);

    switch (fmt) {
        case Format::Json: {
            ordered_json j;
            j["mode"] = "numeric";
            j["x"] = x_text;
            j["y"] = y_text;
            j["a"] = *a_text;
            j["value"] = rendered;
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "field,value\nvalue," << rendered << "\n";
            break;
        case Format::Human:
            std::cout << "B_" << chaundy::to_string(*a) << "(" << chaundy::to_string(x) << ", "
                      << chaundy::to_string(y) << ") ~= " << rendered << "\n";
            break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Bezout pairs and identity verification sweeps for the "
                 "Chaundy-Bullard partition of unity"};
    app.require_subcommand(1);

    std::string format = "human";

    // solve
    auto* solve = app.add_subcommand(
        "solve", "Construct the unique pair (P, Q) with x^(m+1) P + (1-x)^(n+1) Q = 1");
    Index solve_n = 0, solve_m = 0;
    solve->add_option("--n", solve_n, "degree bound for P")->required();
    solve->add_option("--m", solve_m, "degree bound for Q")->required();
    solve->add_option("--format", format, "human|json|csv");

    // check
    auto* check = app.add_subcommand("check", "Verify an identity over a parameter grid");
    std::string identity;
    std::string n_text = "0..0", m_text = "0..0", k_text = "0..0";
    std::string alpha_text, beta_text, a_text;
    unsigned jobs = 1;
    std::uint64_t seed = 12345;
    bool corrupt = false;
    check->add_option("--identity", identity, "one of: chaundy-bullard, symmetry, cancellation, "
                                              "brill, lemma42, w-telescoping, remark62, "
                                              "remark63, twin, gamma-ratio, beta, "
                                              "bezout-cross-check")
        ->required();
    check->add_option("--n", n_text, "n value or inclusive range lo..hi (p range for brill)");
    check->add_option("--m", m_text, "m value or inclusive range lo..hi");
    check->add_option("--k", k_text, "k value or inclusive range lo..hi (lemma42, "
                                     "w-telescoping, remark63)");
    check->add_option("--alpha", alpha_text, "rational or decimal literal (x for brill)");
    check->add_option("--beta", beta_text, "rational or decimal literal");
    check->add_option("--a", a_text, "evaluation point in [0,1] for the beta identity");
    check->add_option("--jobs", jobs, "worker count")->check(CLI::Range(1u, 1024u));
    check->add_option("--seed", seed, "seed for the random-rational sampler");
    check->add_option("--format", format, "human|json|csv");
    check->add_flag("--corrupt", corrupt)->group(""); // test hook, hidden

    // table
    auto* table = app.add_subcommand("table", "Emit a coefficient/constant table");
    std::string kind;
    Index table_n = 0, table_m = 0;
    table->add_option("--kind", kind, "P | Q | mu | a_coeffs | d_coeffs")
        ->required()
        ->check(CLI::IsMember({"P", "Q", "mu", "a_coeffs", "d_coeffs"}));
    table->add_option("--n", table_n)->required();
    table->add_option("--m", table_m)->required();
    table->add_option("--format", format, "human|json|csv");

    // beta
    auto* beta = app.add_subcommand(
        "beta", "Evaluate the incomplete beta function (exact polynomial for integer "
                "parameters, adaptive quadrature otherwise)");
    std::string beta_x, beta_y, beta_a;
    std::size_t quad_budget = chaundy::QuadOptions{}.max_subdivisions;
    beta->add_option("--x", beta_x, "first parameter, > 0")->required();
    beta->add_option("--y", beta_y, "second parameter, > 0")->required();
    beta->add_option("--a", beta_a, "upper integration limit in [0,1]");
    beta->add_option("--quad-budget", quad_budget, "max adaptive subdivisions");
    beta->add_option("--format", format, "human|json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format fmt = parse_format(format);
        if (*solve) return run_solve(solve_n, solve_m, fmt);
        if (*table) return run_table(kind, table_n, table_m, fmt);
        if (*beta)
            return run_beta(beta_x, beta_y,
                            beta_a.empty() ? std::nullopt
                                           : std::optional<std::string>(beta_a),
                            quad_budget, fmt);
        if (*check) {
            chaundy::SweepConfig cfg;
            cfg.identity = chaundy::identity_from_name(identity);
            cfg.n_range = chaundy::parse_range(n_text);
            cfg.m_range = chaundy::parse_range(m_text);
            cfg.k_range = chaundy::parse_range(k_text);
            cfg.has_k = check->count("--k") > 0;
            if (check->count("--alpha")) cfg.alpha = chaundy::parse_rational(alpha_text);
            if (check->count("--beta")) cfg.beta = chaundy::parse_rational(beta_text);
            if (check->count("--a")) cfg.a = chaundy::parse_rational(a_text);
            cfg.jobs = jobs;
            cfg.seed = seed;
            cfg.corrupt_first = corrupt;
            return run_check(cfg, fmt);
        }
    } catch (const chaundy::nonconvergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
