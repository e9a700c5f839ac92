// fano: verification pipeline for the chord variety M4 of the rational
// normal scroll R^4 in P^5, plus small Groebner / Hilbert / Schubert tools.

#include "fano/hilbert.hpp"
#include "fano/parse.hpp"
#include "fano/scenarios.hpp"
#include "fano/schubert.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "1.0.0";

using nlohmann::json;

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int run_verify(const std::vector<std::string>& names, const fano::FanoConfiguration& cfg,
               const std::string& out_path, bool verbose) {
    std::vector<std::string> selected = names;
    if (selected.size() == 1 && selected[0] == "all") selected.clear();
    // reject unknown names before any work
    for (const auto& n : selected) {
        const auto& known = fano::check_names();
        if (std::find(known.begin(), known.end(), n) == known.end()) {
            std::cerr << "unknown check name '" << n << "'; available:";
            for (const auto& k : known) std::cerr << " " << k;
            std::cerr << "\n";
            return 2;
        }
    }
    auto start = std::chrono::steady_clock::now();
    auto results = fano::run_checks(selected, cfg);
    auto total_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();

    bool overall = true;
    json checks = json::array();
    for (const auto& r : results) {
        overall = overall && r.status == "pass";
        checks.push_back({{"name", r.name},
                          {"status", r.status},
                          {"expected", r.expected},
                          {"computed", r.computed},
                          {"certificate", r.certificate},
                          {"prime", r.prime},
                          {"seeds", r.seeds},
                          {"ms", r.ms}});
        if (verbose) {
            std::cerr << r.name << ": " << r.status << " (" << r.ms << " ms)\n";
            if (r.status != "pass")
                std::cerr << "  expected: " << r.expected << "\n  computed: " << r.computed << "\n";
        }
    }
    json report{{"version", kVersion},
                {"config",
                 {{"prime", cfg.prime},
                  {"seed", cfg.master_seed},
                  {"method", cfg.method},
                  {"timeout_secs", cfg.timeout_secs},
                  {"checks", selected.empty() ? fano::check_names() : selected}}},
                {"checks", checks},
                {"overall", overall ? "pass" : "fail"},
                {"total_ms", total_ms}};
    std::string text = report.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open output file '" << out_path << "'\n";
            return 2;
        }
        out << text;
    }
    return overall ? 0 : 1;
}

fano::IdealFile load_ideal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ideal file '" + path + "'");
    return fano::parse_ideal_file(in);
}

template <class K>
int print_basis(const fano::RingPtr& ring, const std::vector<fano::Polynomial<K>>& polys,
                const fano::MonomialOrder& ord) {
    fano::Ideal<K> I(ring, polys);
    const auto& gb = I.groebner(ord);
    std::cout << fano::ring_header(*ring, ord) << "\n";
    for (const auto& g : gb.elements) std::cout << fano::to_string(g, ord) << "\n";
    return 0;
}

template <class K>
int print_hilbert(const fano::RingPtr& ring, const std::vector<fano::Polynomial<K>>& polys) {
    fano::Ideal<K> I(ring, polys);
    auto series = fano::hilbert_series(I);
    auto cancelled = series.cancelled();
    auto data = fano::hilbert_data_from_series(series);
    json numerator = json::array();
    for (const auto& c : cancelled.numerator) numerator.push_back(c.str());
    json poly = json::array();
    for (const auto& c : data.hilbert_polynomial) poly.push_back(c.str());
    json out{{"numerator", numerator},
             {"denominator_exponent", cancelled.denominator_exponent},
             {"projective_dimension", data.projective_dimension},
             {"degree", data.degree.str()},
             {"hilbert_polynomial", poly}};
    if (data.projective_dimension == 1) {
        fano::BigRational genus =
            fano::BigRational(1) - fano::ratpoly_eval(data.hilbert_polynomial, fano::BigRational(0));
        out["arithmetic_genus"] = fano::BigRational(genus).str();
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the classical facts about the chord variety M4 of the rational "
                 "normal scroll R^4 in P^5"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run named checks (or 'all') and emit a JSON report");
    std::vector<std::string> names{"all"};
    fano::FanoConfiguration cfg;
    std::string out_path;
    bool verbose = false;
    verify->add_option("names", names, "check names, or 'all'");
    verify->add_option("--prime", cfg.prime, "field characteristic (prime)")->capture_default_str();
    verify->add_option("--seed", cfg.master_seed, "master random seed")->capture_default_str();
    verify->add_option("--method", cfg.method, "degree route emphasis: hilbert | slice")
        ->check(CLI::IsMember({"hilbert", "slice"}))
        ->capture_default_str();
    verify->add_option("--timeout-secs", cfg.timeout_secs, "per-Groebner-run time budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--out", out_path, "report file (default: stdout)");
    verify->add_flag("-v,--verbose", verbose, "progress on stderr");

    // gb
    auto* gb = app.add_subcommand("gb", "print the reduced Groebner basis of an ideal file");
    std::string gb_file, gb_order = "grevlex";
    gb->add_option("file", gb_file, "ideal file")->required();
    gb->add_option("--order", gb_order, "lex | grevlex | elim:k")->capture_default_str();

    // hilbert
    auto* hil = app.add_subcommand("hilbert", "Hilbert series / dimension / degree of an ideal file");
    std::string hil_file;
    hil->add_option("file", hil_file, "ideal file")->required();

    // schubert-degree
    auto* sd = app.add_subcommand("schubert-degree", "Pluecker degree of the Grassmannian G(k,n)");
    int sd_k = 0, sd_n = 0;
    sd->add_option("k", sd_k, "subspace projective dimension")->required();
    sd->add_option("n", sd_n, "ambient projective dimension")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            if (!is_prime(cfg.prime)) {
                std::cerr << "--prime must be a prime number\n";
                return 2;
            }
            return run_verify(names, cfg, out_path, verbose);
        }
        if (*gb) {
            auto file = load_ideal(gb_file);
            fano::MonomialOrder ord = fano::MonomialOrder::parse(gb_order);
            if (file.is_prime_field())
                return print_basis(file.ring, std::get<std::vector<fano::PolyFp>>(file.polys), ord);
            return print_basis(file.ring, std::get<std::vector<fano::PolyQ>>(file.polys), ord);
        }
        if (*hil) {
            auto file = load_ideal(hil_file);
            if (file.is_prime_field())
                return print_hilbert(file.ring, std::get<std::vector<fano::PolyFp>>(file.polys));
            return print_hilbert(file.ring, std::get<std::vector<fano::PolyQ>>(file.polys));
        }
        if (*sd) {
            if (sd_k < 0 || sd_n <= 0 || sd_k + 1 > sd_n) {
                std::cerr << "require 0 <= k and k + 1 <= n\n";
                return 2;
            }
            std::cout << fano::grassmannian_degree(static_cast<std::size_t>(sd_k),
                                                   static_cast<std::size_t>(sd_n))
                      << "\n";
            return 0;
        }
    } catch (const fano::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
