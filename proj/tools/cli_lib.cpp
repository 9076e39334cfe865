#include "cli_lib.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "genexp/branching.hpp"
#include "genexp/extremal.hpp"
#include "genexp/genexp.hpp"
#include "genexp/oracle.hpp"
#include "genexp/partition.hpp"
#include "genexp/polynomial.hpp"
#include "genexp/text.hpp"

namespace genexp {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kGeneric = 1;
constexpr int kMalformed = 2;
constexpr int kIncompatible = 3;
constexpr int kCutoff = 4;
constexpr int kVerifyFailed = 5;

// Unparsable partition or weight text; maps to exit code 2.
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Request {
    std::string command;
    std::string variant;
    std::string lambda_text = "-";
    std::string nu_text = "-";
    std::string mu_text = "-";
    int rank = 0;
    int cutoff = 0;
    bool has_nu = false;
    bool has_mu = false;
    bool has_rank = false;
    bool has_cutoff = false;
    bool multi = false;
    bool witnesses = false;
    std::string format = "json";
    std::string cache_dir;
};

// What a command handler produces; the chosen format picks one rendering.
struct Outputs {
    ordered_json result;
    ordered_json witnesses;
    bool has_witnesses = false;
    std::string text;
    std::string csv;
    int exit_code = kOk;
};

std::string fnv1a_hex(const std::string& data) {
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

std::string canonical_query(const Request& r) {
    std::string q = "command=" + r.command + ";variant=" + r.variant +
                    ";lambda=" + r.lambda_text;
    if (r.has_nu) q += ";nu=" + r.nu_text;
    if (r.has_mu) q += ";mu=" + r.mu_text;
    if (r.has_rank) q += ";rank=" + std::to_string(r.rank);
    if (r.has_cutoff) q += ";cutoff=" + std::to_string(r.cutoff);
    q += std::string(";multi=") + (r.multi ? "1" : "0");
    q += std::string(";witnesses=") + (r.witnesses ? "1" : "0");
    q += ";format=" + r.format;
    return q;
}

ordered_json query_json(const Request& r) {
    ordered_json q;
    q["command"] = r.command;
    if (!r.variant.empty()) q["variant"] = r.variant;
    q["lambda"] = r.lambda_text;
    if (r.has_nu) q["nu"] = r.nu_text;
    if (r.has_mu) q["mu"] = r.mu_text;
    if (r.has_rank) q["rank"] = r.rank;
    if (r.has_cutoff) q["cutoff"] = r.cutoff;
    q["multi"] = r.multi;
    q["witnesses"] = r.witnesses;
    q["format"] = r.format;
    return q;
}

Partition parse_partition_arg(const std::string& text, const char* name) {
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw MalformedInput(std::string(name) + ": " + e.what());
    }
}

std::vector<int> parse_weight_arg(const std::string& text, const char* name) {
    std::vector<int> out;
    if (text.empty() || text == "-") return out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != token.size()) {
            throw MalformedInput(std::string(name) + ": not a number: '" +
                                 token + "'");
        }
        out.push_back(value);
    }
    if (!text.empty() && text.back() == ',') {
        throw MalformedInput(std::string(name) + ": trailing separator");
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    if (v.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

int monomial_degree(const Monomial& m) {
    return m.empty() ? 0 : m[0].second;
}

ordered_json poly_json(const SparsePolynomial& p, bool multi) {
    ordered_json coeffs = ordered_json::object();
    for (const auto& [m, c] : p.terms()) {
        if (multi) {
            coeffs[format_monomial(m)] = c;
        } else {
            coeffs[std::to_string(monomial_degree(m))] = c;
        }
    }
    return coeffs;
}

std::string poly_csv(const SparsePolynomial& p, bool multi) {
    std::string out = multi ? "monomial,coefficient\n" : "degree,coefficient\n";
    for (const auto& [m, c] : p.terms()) {
        if (multi) {
            out += format_monomial(m) + "," + std::to_string(c) + "\n";
        } else {
            out += std::to_string(monomial_degree(m)) + "," +
                   std::to_string(c) + "\n";
        }
    }
    return out;
}

ordered_json series_json(const TruncatedSeries& s) {
    ordered_json coeffs = ordered_json::object();
    for (int k = 0; k <= s.cutoff(); ++k) {
        if (s.coeff(k) != 0) coeffs[std::to_string(k)] = s.coeff(k);
    }
    return ordered_json{{"cutoff", s.cutoff()}, {"coeffs", coeffs}};
}

std::string series_csv(const TruncatedSeries& s) {
    std::string out = "degree,coefficient\n";
    for (int k = 0; k <= s.cutoff(); ++k) {
        if (s.coeff(k) != 0) {
            out += std::to_string(k) + "," + std::to_string(s.coeff(k)) + "\n";
        }
    }
    return out;
}

void fill_poly_outputs(Outputs& out, const SparsePolynomial& p, bool multi) {
    out.result = ordered_json{{"poly", poly_json(p, multi)}};
    out.text = p.to_string() + "\n";
    out.csv = poly_csv(p, multi);
}

void fill_series_outputs(Outputs& out, const TruncatedSeries& s) {
    out.result = ordered_json{{"series", series_json(s)}};
    out.text = s.to_string() + "\n";
    out.csv = series_csv(s);
}

void require_rank_flag(const Request& r) {
    if (!r.has_rank) throw std::invalid_argument("--rank is required");
}

void require_cutoff_flag(const Request& r) {
    if (!r.has_cutoff) throw std::invalid_argument("--cutoff is required");
}

void require_nu_flag(const Request& r) {
    if (!r.has_nu) throw std::invalid_argument("--nu is required");
}

Outputs handle_genexp(const Request& r, const Partition& lambda) {
    Outputs out;
    if (r.variant == "a" || r.variant == "c") {
        require_rank_flag(r);
        SparsePolynomial p;
        if (r.variant == "a") {
            p = r.multi ? genexp_A_multi(lambda, r.rank) : genexp_A(lambda, r.rank);
        } else {
            p = r.multi ? genexp_C_multi(lambda, r.rank) : genexp_C(lambda, r.rank);
        }
        fill_poly_outputs(out, p, r.multi);
        return out;
    }
    require_cutoff_flag(r);
    if (r.multi) {
        if (r.variant != "stable-c") {
            throw std::invalid_argument("--multi is only available for stable-c");
        }
        fill_poly_outputs(out, stable_C_multi(lambda, r.cutoff), true);
        return out;
    }
    TruncatedSeries s(r.cutoff);
    if (r.variant == "stable-c") {
        s = stable_C(lambda, r.cutoff);
    } else if (r.variant == "stable-b") {
        s = stable_B(lambda, r.cutoff);
    } else {
        s = stable_D(lambda, r.cutoff);
    }
    fill_series_outputs(out, s);
    return out;
}

Outputs handle_oracle(const Request& r, const Partition& lambda,
                      const std::vector<int>& mu) {
    Outputs out;
    require_rank_flag(r);
    if (r.multi) throw std::invalid_argument("--multi does not apply to oracle");
    const LieType type = r.variant == "a" ? LieType::A : LieType::C;
    const SparsePolynomial p =
        r.has_mu ? lusztig_t_analogue(type, r.rank, lambda, mu)
                 : lusztig_t_analogue_zero(type, r.rank, lambda);
    fill_poly_outputs(out, p, false);
    return out;
}

Outputs handle_branch(const Request& r, const Partition& lambda,
                      const Partition& nu) {
    Outputs out;
    require_rank_flag(r);
    require_nu_flag(r);
    const long long count = branching_sp(lambda, nu, r.rank);
    out.result = ordered_json{{"count", count}};
    out.text = std::to_string(count) + "\n";
    out.csv = "count\n" + std::to_string(count) + "\n";
    if (r.witnesses) {
        ordered_json w = ordered_json::array();
        for (const auto& s : sundaram_tableaux(lambda, nu, r.rank)) {
            w.push_back(ordered_json{{"kind", "sundaram"},
                                     {"tableau", format_skew(s.tableau)},
                                     {"weight", format_partition(s.weight)}});
            out.text += "sundaram " + format_skew(s.tableau) + " weight " +
                        format_partition(s.weight) + "\n";
        }
        for (const auto& t : kwon_tableaux(lambda, nu, r.rank)) {
            w.push_back(
                ordered_json{{"kind", "kwon"}, {"tableau", format_tableau(t)}});
            out.text += "kwon " + format_tableau(t) + "\n";
        }
        out.witnesses = std::move(w);
        out.has_witnesses = true;
    }
    return out;
}

Outputs handle_compare(const Request& r, const Partition& lambda,
                       const Partition& nu) {
    Outputs out;
    require_rank_flag(r);
    require_nu_flag(r);
    const BranchReport report = compare_rules(lambda, nu, r.rank, r.witnesses);
    ordered_json deltas = ordered_json::array();
    out.csv = "delta,lr,sundaram,admissible,elementwise,injective\n";
    for (const auto& d : report.deltas) {
        ordered_json dj =
            ordered_json{{"delta", format_partition(d.delta)},
                         {"lr", d.lr_count},
                         {"sundaram", d.sundaram_count},
                         {"admissible", d.admissible_count},
                         {"elementwise_match", d.elementwise_match},
                         {"injective_on_sundaram", d.injective_on_sundaram}};
        if (r.witnesses) {
            ordered_json cases = ordered_json::array();
            for (const auto& pc : d.cases) {
                cases.push_back(
                    ordered_json{{"tau", format_skew(pc.tau)},
                                 {"sundaram_admissible", pc.sundaram_admissible},
                                 {"companion", format_tableau(pc.companion)},
                                 {"swapped", format_tableau(pc.swapped)},
                                 {"evacuated", format_tableau(pc.evacuated)},
                                 {"passes_flag", pc.passes_flag}});
            }
            dj["cases"] = std::move(cases);
        }
        deltas.push_back(std::move(dj));
        out.text += "delta=" + format_partition(d.delta) +
                    " lr=" + std::to_string(d.lr_count) +
                    " sundaram=" + std::to_string(d.sundaram_count) +
                    " admissible=" + std::to_string(d.admissible_count) +
                    (d.elementwise_match ? " match=yes" : " match=no") +
                    (d.injective_on_sundaram ? " injective=yes\n"
                                             : " injective=no\n");
        out.csv += "\"" + format_partition(d.delta) + "\"," +
                   std::to_string(d.lr_count) + "," +
                   std::to_string(d.sundaram_count) + "," +
                   std::to_string(d.admissible_count) + "," +
                   (d.elementwise_match ? "1" : "0") + "," +
                   (d.injective_on_sundaram ? "1" : "0") + "\n";
    }
    out.text += "totals sundaram=" + std::to_string(report.sundaram_total) +
                " admissible=" + std::to_string(report.admissible_total) +
                (report.composition_bijective ? " bijective=yes\n"
                                              : " bijective=no\n");
    out.result = ordered_json{
        {"report",
         ordered_json{{"lambda", format_partition(report.lambda)},
                      {"nu", format_partition(report.nu)},
                      {"rank", report.rank},
                      {"sundaram_total", report.sundaram_total},
                      {"admissible_total", report.admissible_total},
                      {"totals_match", report.totals_match},
                      {"composition_bijective", report.composition_bijective},
                      {"deltas", std::move(deltas)}}}};
    return out;
}

Outputs handle_extremal(const Request& r, const Partition& lambda) {
    Outputs out;
    require_rank_flag(r);
    if (r.variant == "min" || r.variant == "max") {
        const long long value = r.variant == "min" ? min_power(lambda, r.rank)
                                                   : max_power(lambda, r.rank);
        out.result = ordered_json{{"value", value}};
        out.text = std::to_string(value) + "\n";
        out.csv = "value\n" + std::to_string(value) + "\n";
        return out;
    }
    const Tableau t = sigma_min(lambda, r.rank);
    out.result = ordered_json{{"tableau", format_tableau(t)},
                              {"barred", format_tableau_barred(t)},
                              {"charge", charge_C(t, r.rank)}};
    out.text = format_tableau(t) + "\n" + format_tableau_barred(t) + "\n";
    out.csv = "row,entries\n";
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        out.csv += std::to_string(i + 1) + ",";
        const auto& row = t.rows()[i];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out.csv += " ";
            out.csv += std::to_string(row[c]);
        }
        out.csv += "\n";
    }
    return out;
}

// ---- verify suites ----------------------------------------------------

struct SuiteResult {
    bool ok = true;
    long long checks = 0;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        ok = false;
        if (failures.size() < 20) failures.push_back(what);
    }
};

void each_partition(int max_size, int max_length,
                    const std::function<void(const Partition&)>& visit) {
    for (int s = 0; s <= max_size; ++s) {
        enumerate_partitions(s, max_length, s == 0 ? 1 : s, visit);
    }
}

SuiteResult verify_oracle_agreement() {
    SuiteResult res;
    for (int n = 2; n <= 3; ++n) {
        each_partition(4, n, [&](const Partition& lambda) {
            ++res.checks;
            if (genexp_A(lambda, n) != lusztig_t_analogue_zero(LieType::A, n, lambda)) {
                res.fail("type A mismatch at lambda=" + format_partition(lambda) +
                         " n=" + std::to_string(n));
            }
        });
    }
    each_partition(4, 2, [&](const Partition& lambda) {
        ++res.checks;
        if (genexp_C(lambda, 2) != lusztig_t_analogue_zero(LieType::C, 2, lambda)) {
            res.fail("type C mismatch at lambda=" + format_partition(lambda));
        }
    });
    return res;
}

SuiteResult verify_route_equality() {
    SuiteResult res;
    each_partition(4, 2, [&](const Partition& lambda) {
        ++res.checks;
        if (genexp_C(lambda, 2) != genexp_C_sundaram(lambda, 2)) {
            res.fail("routes disagree at lambda=" + format_partition(lambda));
        }
    });
    return res;
}

SuiteResult verify_stability() {
    SuiteResult res;
    TruncatedSeries expected(8);
    for (int k = 2; k <= 8; k += 2) expected.set_coeff(k, 1);
    ++res.checks;
    if (!(stable_C(Partition({1, 1}), 8) == expected)) {
        res.fail("stable series for the two-row column is wrong");
    }
    each_partition(4, 4, [&](const Partition& lambda) {
        ++res.checks;
        if (!(stable_B(lambda, 6) == stable_C(conjugate(lambda), 6))) {
            res.fail("conjugate relation fails at lambda=" +
                     format_partition(lambda));
        }
    });
    return res;
}

SuiteResult verify_theorem_ac() {
    SuiteResult res;
    for (int p = 1; p <= 2; ++p) {
        for (int n = 2 * p; n <= 4; ++n) {
            ++res.checks;
            const Partition lambda(std::vector<int>(2 * p, 1));
            std::vector<int> parts(p, 2);
            parts.insert(parts.end(), n - 2 * p, 1);
            const Partition mu(parts);
            if (genexp_C(lambda, n) != genexp_A(mu, n).substitute_t_squared()) {
                res.fail("square substitution fails at p=" + std::to_string(p) +
                         " n=" + std::to_string(n));
            }
        }
    }
    return res;
}

SuiteResult verify_growth() {
    SuiteResult res;
    each_partition(4, 2, [&](const Partition& lambda) {
        ++res.checks;
        try {
            if (!growth_delta(lambda, 2).nonnegative()) {
                res.fail("negative growth at lambda=" + format_partition(lambda));
            }
        } catch (const std::logic_error&) {
            res.fail("negative growth at lambda=" + format_partition(lambda));
        }
    });
    return res;
}

SuiteResult verify_extremal() {
    SuiteResult res;
    for (int n = 2; n <= 3; ++n) {
        each_partition(6, n, [&](const Partition& lambda) {
            if (lambda.size() % 2 != 0) return;
            ++res.checks;
            const SparsePolynomial p = genexp_C(lambda, n);
            if (p.is_zero()) {
                res.fail("empty polynomial at lambda=" + format_partition(lambda) +
                         " n=" + std::to_string(n));
                return;
            }
            if (p.min_degree() != min_power(lambda, n) ||
                p.max_degree() != max_power(lambda, n)) {
                res.fail("degree bounds fail at lambda=" +
                         format_partition(lambda) + " n=" + std::to_string(n));
            }
        });
    }
    return res;
}

SuiteResult verify_branching_equality() {
    SuiteResult res;
    each_partition(6, 4, [&](const Partition& nu) {
        each_partition(nu.size(), 2, [&](const Partition& lambda) {
            if (!nu.contains(lambda)) return;
            ++res.checks;
            try {
                branching_sp(lambda, nu, 2);
            } catch (const std::runtime_error& e) {
                res.fail(e.what());
            }
        });
    });
    return res;
}

SuiteResult verify_series_identity() {
    SuiteResult res;
    const int cutoff = 4;
    for (const Partition& lambda :
         {Partition(), Partition({2}), Partition({1, 1})}) {
        ++res.checks;
        const TruncatedSeries lhs =
            TruncatedSeries::from_polynomial(genexp_C(lambda, 2), cutoff) *
            series_inverse_product({2, 4}, cutoff);
        if (!(lhs == branching_series(lambda, 2, cutoff))) {
            res.fail("series identity fails at lambda=" +
                     format_partition(lambda));
        }
    }
    return res;
}

Outputs handle_verify(const Request& r) {
    SuiteResult res;
    if (r.variant == "oracle-agreement") {
        res = verify_oracle_agreement();
    } else if (r.variant == "route-equality") {
        res = verify_route_equality();
    } else if (r.variant == "stability") {
        res = verify_stability();
    } else if (r.variant == "theorem-ac") {
        res = verify_theorem_ac();
    } else if (r.variant == "growth") {
        res = verify_growth();
    } else if (r.variant == "extremal") {
        res = verify_extremal();
    } else if (r.variant == "branching-equality") {
        res = verify_branching_equality();
    } else {
        res = verify_series_identity();
    }
    Outputs out;
    ordered_json failures = ordered_json::array();
    for (const auto& f : res.failures) failures.push_back(f);
    out.result = ordered_json{{"verify", ordered_json{{"suite", r.variant},
                                                      {"ok", res.ok},
                                                      {"checks", res.checks},
                                                      {"failures", failures}}}};
    out.text = "suite " + r.variant + ": " + (res.ok ? "OK" : "FAILED") + " (" +
               std::to_string(res.checks) + " checks)\n";
    for (const auto& f : res.failures) out.text += f + "\n";
    out.csv = "suite,ok,checks\n" + r.variant + "," + (res.ok ? "1" : "0") +
              "," + std::to_string(res.checks) + "\n";
    out.exit_code = res.ok ? kOk : kVerifyFailed;
    return out;
}

// ---- cache -------------------------------------------------------------

std::string cache_directory(const Request& r) {
    if (!r.cache_dir.empty()) return r.cache_dir;
    const char* env = std::getenv("GENEXP_CACHE");
    return env != nullptr ? std::string(env) : std::string();
}

bool cacheable(const Request& r) { return r.command != "verify"; }

std::filesystem::path cache_path(const std::string& dir, const Request& r) {
    return std::filesystem::path(dir) / (fnv1a_hex(canonical_query(r)) + ".json");
}

bool cache_lookup(const std::string& dir, const Request& r, std::string& out) {
    std::ifstream in(cache_path(dir, r), std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

void cache_store(const std::string& dir, const Request& r,
                 const std::string& output) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    const std::filesystem::path final_path = cache_path(dir, r);
    const std::filesystem::path tmp_path =
        final_path.string() + ".tmp" +
        std::to_string(
            std::chrono::steady_clock::now().time_since_epoch().count());
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << output;
    out.close();
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) std::filesystem::remove(tmp_path, ec);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    Request req;

    CLI::App app{"generalized exponents for the classical crystal combinatorics"};
    app.require_subcommand(1);
    app.add_option("--lambda", req.lambda_text,
                   "partition, comma separated parts, - for empty");
    auto* opt_nu = app.add_option("--nu", req.nu_text, "outer partition");
    auto* opt_mu = app.add_option("--mu", req.mu_text,
                                  "dominant weight, comma separated");
    auto* opt_rank = app.add_option("--rank", req.rank, "rank n");
    auto* opt_cutoff = app.add_option("--cutoff", req.cutoff,
                                      "series truncation degree");
    app.add_flag("--multi", req.multi, "multivariable output");
    app.add_flag("--witnesses", req.witnesses, "include tableau witnesses");
    app.add_option("--format", req.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cache-dir", req.cache_dir,
                   "result cache directory (or env GENEXP_CACHE)");

    struct Command {
        std::string name;
        std::string help;
        std::vector<std::string> variants;
    };
    const std::vector<Command> commands =
        {{"genexp",
          "generalized exponent polynomial or stable series for a shape",
          {"a", "c", "stable-b", "stable-c", "stable-d"}},
         {"oracle",
          "t-analogue from the alternating weight-space sum",
          {"a", "c"}},
         {"branch",
          "symplectic branching multiplicity for --lambda inside --nu",
          {}},
         {"compare",
          "side-by-side report of the two branching rules",
          {}},
         {"extremal",
          "extreme degrees or the minimal-charge filling",
          {"min", "max", "sigma"}},
         {"verify",
          "rerun a self-check suite and report the outcome",
          {"oracle-agreement", "route-equality", "stability", "theorem-ac",
           "growth", "extremal", "branching-equality", "series-identity"}}};
    for (const auto& [name, help, variants] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        if (!variants.empty()) {
            sub->add_option("variant", req.variant)
                ->required()
                ->check(CLI::IsMember(variants));
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {kOk, app.help()};
    } catch (const CLI::ParseError& e) {
        return {kGeneric, std::string(e.what()) + "\n"};
    }

    req.command = app.get_subcommands().front()->get_name();
    req.has_nu = opt_nu->count() > 0;
    req.has_mu = opt_mu->count() > 0;
    req.has_rank = opt_rank->count() > 0;
    req.has_cutoff = opt_cutoff->count() > 0;

    if (req.has_cutoff && req.cutoff < 0) {
        return {kCutoff, "cutoff must be nonnegative\n"};
    }

    Partition lambda;
    Partition nu;
    std::vector<int> mu;
    try {
        lambda = parse_partition_arg(req.lambda_text, "--lambda");
        req.lambda_text = format_partition(lambda);
        if (req.has_nu) {
            nu = parse_partition_arg(req.nu_text, "--nu");
            req.nu_text = format_partition(nu);
        }
        if (req.has_mu) {
            mu = parse_weight_arg(req.mu_text, "--mu");
            req.mu_text = join_ints(mu);
        }
    } catch (const MalformedInput& e) {
        return {kMalformed, std::string(e.what()) + "\n"};
    }

    const std::string dir = cache_directory(req);
    if (!dir.empty() && cacheable(req)) {
        std::string cached;
        if (cache_lookup(dir, req, cached)) return {kOk, std::move(cached)};
    }

    Outputs out;
    try {
        if (req.command == "genexp") {
            out = handle_genexp(req, lambda);
        } else if (req.command == "oracle") {
            out = handle_oracle(req, lambda, mu);
        } else if (req.command == "branch") {
            out = handle_branch(req, lambda, nu);
        } else if (req.command == "compare") {
            out = handle_compare(req, lambda, nu);
        } else if (req.command == "extremal") {
            out = handle_extremal(req, lambda);
        } else {
            out = handle_verify(req);
        }
    } catch (const CutoffMismatchError& e) {
        return {kCutoff, std::string(e.what()) + "\n"};
    } catch (const std::invalid_argument& e) {
        return {kIncompatible, std::string(e.what()) + "\n"};
    } catch (const std::exception& e) {
        return {kGeneric, std::string(e.what()) + "\n"};
    }

    std::string output;
    if (req.format == "json") {
        ordered_json envelope;
        envelope["query"] = query_json(req);
        envelope["result"] = out.result;
        if (out.has_witnesses) envelope["witnesses"] = out.witnesses;
        envelope["conventions"] =
            ordered_json{{"reading", "japanese-column"},
                         {"sundaram-row-bound",
                          "odd-letter-2i+1-rows-at-most-n+i"}};
        output = envelope.dump(2) + "\n";
    } else if (req.format == "csv") {
        output = out.csv;
    } else {
        output = out.text;
    }

    if (!dir.empty() && cacheable(req) && out.exit_code == kOk) {
        cache_store(dir, req, output);
    }
    return {out.exit_code, std::move(output)};
}

}  // namespace genexp
