// hurwitz: command-line front end.
//
// Exit codes: 0 positive verdict, 1 negative verdict, 2 undecided,
// 3 malformed input. Stdout carries data only; diagnostics go to stderr.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "hurwitz/hurwitz.hpp"

using namespace hurwitz;

namespace {

enum Exit : int { positive = 0, negative = 1, undecided = 2, bad_input = 3 };

void emit(const json& j) { std::cout << j.dump() << '\n'; }

/// "-" reads stdin, "@path" reads a file, anything else is the literal text.
std::string slurp(const std::string& arg)
{
    if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument("cannot open " + arg.substr(1));
        return {std::istreambuf_iterator<char>(in), {}};
    }
    return arg;
}

/// JSON array of cycle strings, or cycle strings separated by ';'.
std::vector<Permutation> read_witness(const std::string& text, int degree)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') return perms_from_json(json::parse(text), degree);
    std::vector<Permutation> out;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ';');) out.push_back(parse_cycles(part, degree));
    return out;
}

double ms_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::optional<std::uint64_t> budget_of(std::uint64_t flag)
{
    if (flag == 0) return std::nullopt;
    return flag;
}

int cmd_validate(const std::string& datum_arg)
{
    const auto datum = read_datum(slurp(datum_arg), RowOrder::as_written);
    const auto report = validate_datum(datum);
    emit(to_json(report));
    return report.ok() ? positive : negative;
}

int cmd_admissible(const std::string& beta_arg)
{
    const auto verdict = decide_admissible(read_angles(slurp(beta_arg)));
    emit(to_json(verdict));
    return verdict.admissible ? positive : negative;
}

int cmd_certify(const std::string& datum_arg, const std::string& beta_arg, const SearchConfig& config)
{
    const auto datum = read_datum(slurp(datum_arg), RowOrder::as_written);
    if (!beta_arg.empty()) {
        const auto outcome = certify_exceptional(datum, read_angles(slurp(beta_arg)));
        if (const auto* cert = std::get_if<ExceptionalityCertificate>(&outcome)) {
            emit(to_json(*cert));
            return positive;
        }
        const auto& refusal = std::get<Refusal>(outcome);
        emit({{"certified", false}, {"reason", refusal.reason}});
        return negative;
    }
    if (const auto cert = search_certificate(datum, config)) {
        emit(to_json(*cert));
        return positive;
    }
    emit({{"certified", false}, {"reason", "no witness found"}});
    return negative;
}

int cmd_realize(const std::string& datum_arg, std::uint64_t budget)
{
    const auto datum = read_datum(slurp(datum_arg), RowOrder::as_written);
    const auto r = find_witness(datum, budget_of(budget));
    json out{{"datum", to_json(datum)}, {"status", to_string(r.status)}, {"nodes", r.nodes}};
    if (r.witness) out["witness"] = to_json(*r.witness);
    emit(out);
    switch (r.status) {
    case OracleStatus::realizable: return positive;
    case OracleStatus::unrealizable: return negative;
    case OracleStatus::unknown: break;
    }
    return undecided;
}

int cmd_enumerate(int degree, int branch_points, bool table)
{
    for_each_datum(degree, branch_points, [&](const BranchDatum& x) {
        if (table)
            std::cout << format_datum(x) << '\n';
        else
            emit(to_json(x));
        return true;
    });
    return positive;
}

struct CatalogOptions {
    int min_degree = 1;
    int max_degree = 7;
    int branch_points = 3;
    std::uint64_t budget = default_oracle_budget;
    bool table = false;
    bool timings = false;
    SearchConfig search;
};

struct DegreeCounts {
    int data = 0;
    std::map<std::string, int> verdicts;
    int contradictions = 0;
};

int cmd_catalog(const CatalogOptions& opt)
{
    static const char* const verdict_names[] = {"REALIZABLE", "EXCEPTIONAL_CERTIFIED", "EXCEPTIONAL_ORACLE",
                                                "UNKNOWN"};
    std::map<int, DegreeCounts> summary;
    int contradictions = 0, unknown = 0;
    for (int d = opt.min_degree; d <= opt.max_degree; ++d) {
        auto& counts = summary[d];
        for (const auto& name : verdict_names) counts.verdicts[name] = 0;
        for_each_datum(d, opt.branch_points, [&](const BranchDatum& x) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto cert = search_certificate(x, opt.search);
            const double search_ms = ms_since(t0);
            const auto t1 = std::chrono::steady_clock::now();
            const auto oracle = find_witness(x, budget_of(opt.budget));
            const double oracle_ms = ms_since(t1);

            std::string verdict;
            if (cert)
                verdict = "EXCEPTIONAL_CERTIFIED";
            else if (oracle.status == OracleStatus::realizable)
                verdict = "REALIZABLE";
            else if (oracle.status == OracleStatus::unrealizable)
                verdict = "EXCEPTIONAL_ORACLE";
            else
                verdict = "UNKNOWN";
            // a certified row whose oracle finds a witness would falsify the certificate
            const bool contradiction = cert && oracle.status == OracleStatus::realizable;

            ++counts.data;
            ++counts.verdicts[verdict];
            if (contradiction) {
                ++counts.contradictions;
                ++contradictions;
                std::cerr << "contradiction: " << format_datum(x) << '\n';
            }
            if (verdict == "UNKNOWN") ++unknown;

            if (opt.table) {
                std::cout << format_datum(x) << "  " << verdict;
                if (cert) std::cout << "  beta=" << format_angles(cert->witness_beta);
                if (contradiction) std::cout << "  CONTRADICTION";
                std::cout << '\n';
                return true;
            }
            json row{{"datum", to_json(x)},
                     {"text", format_datum(x)},
                     {"verdict", verdict},
                     {"oracle", to_string(oracle.status)},
                     {"oracle_nodes", oracle.nodes},
                     {"contradiction", contradiction}};
            if (cert) row["certificate"] = to_json(*cert);
            if (oracle.witness) row["witness"] = to_json(*oracle.witness);
            if (opt.timings) row["timings"] = {{"search_ms", search_ms}, {"oracle_ms", oracle_ms}};
            emit(row);
            return true;
        });
    }

    if (opt.table) {
        std::cout << "\n degree     data  REALIZABLE  CERTIFIED  ORACLE_ONLY  UNKNOWN  CONTRADICTIONS\n";
        for (const auto& [d, c] : summary) {
            char line[128];
            std::snprintf(line, sizeof line, "%7d %8d %11d %10d %12d %8d %15d\n", d, c.data, c.verdicts.at("REALIZABLE"),
                          c.verdicts.at("EXCEPTIONAL_CERTIFIED"), c.verdicts.at("EXCEPTIONAL_ORACLE"),
                          c.verdicts.at("UNKNOWN"), c.contradictions);
            std::cout << line;
        }
    } else {
        json per_degree = json::array();
        for (const auto& [d, c] : summary)
            per_degree.push_back(
                {{"degree", d}, {"data", c.data}, {"verdicts", c.verdicts}, {"contradictions", c.contradictions}});
        emit({{"summary", per_degree}});
    }
    if (contradictions > 0) return negative;
    return unknown > 0 ? undecided : positive;
}

int cmd_families(int degree, int nonprime, const std::string& family, const std::vector<int>& params)
{
    std::vector<FamilyInstance> out;
    if (degree > 0) {
        out = all_instances(degree);
    } else if (nonprime > 0) {
        out.push_back(nonprime_witness(nonprime));
    } else {
        auto need = [&](std::size_t n) {
            if (params.size() != n)
                throw FamilyError(family + " takes " + std::to_string(n) + " parameters, got " +
                                  std::to_string(params.size()));
        };
        if (family == "P2K_A" || family == "P2K_B") {
            need(3);
            out.push_back(family_2k(params[0], family == "P2K_A" ? Variant::A : Variant::B, params[1], params[2]));
        } else if (family == "P3K") {
            need(1);
            out.push_back(family_3k(params[0]));
        } else if (family == "PRK_A") {
            need(2);
            out.push_back(family_rk(params[0], params[1], Variant::A));
        } else if (family == "PRK_B") {
            need(4);
            out.push_back(family_rk(params[0], params[1], Variant::B, params[2], params[3]));
        } else {
            throw std::invalid_argument("unknown family '" + family + "'");
        }
    }
    for (const auto& f : out) emit(to_json(f));
    return out.empty() ? negative : positive;
}

int cmd_verify_certificate(const std::string& arg)
{
    const auto cert = certificate_from_json(json::parse(slurp(arg)));
    const auto problem = check_certificate(cert);
    json out{{"valid", problem.empty()}};
    if (!problem.empty()) out["reason"] = problem;
    emit(out);
    return problem.empty() ? positive : negative;
}

int cmd_verify_witness(const std::string& datum_arg, const std::string& witness_arg)
{
    const auto datum = read_datum(slurp(datum_arg), RowOrder::as_written);
    const auto perms = read_witness(slurp(witness_arg), datum.degree);
    const bool ok = verify_witness(datum, perms);
    emit({{"valid", ok}});
    return ok ? positive : negative;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spherical cone-angle admissibility, exceptional branch data certificates and a monodromy oracle"};
    app.require_subcommand(1);

    std::string datum, beta, witness;

    auto* validate = app.add_subcommand("validate", "Check the branch datum constraints");
    validate->add_option("datum", datum, "Datum text \"d: p,p | p,p\", JSON object, @file or -")->required();

    auto* admissible = app.add_subcommand("admissible", "Decide whether a cone-angle vector is admissible");
    admissible->add_option("beta", beta, "Angles \"p/q,p/q,...\", JSON array, @file or -")->required();

    SearchConfig search;
    auto* certify = app.add_subcommand("certify", "Certify a datum exceptional by lifting admissible angles");
    certify->add_option("datum", datum, "Branch datum; rows keep the given order")->required();
    certify->add_option("--beta", beta, "Use this base angle vector instead of searching");
    certify->add_option("--max-den", search.max_denominator, "Largest denominator in the search grid")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    certify->add_option("--max-num", search.max_numerator, "Largest numerator in the search grid")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::uint64_t budget = default_oracle_budget;
    auto* realize = app.add_subcommand("realize", "Search for a monodromy witness");
    realize->add_option("datum", datum, "Branch datum; the witness follows the given row order")->required();
    realize->add_option("--budget", budget, "Node budget, 0 for unlimited")->capture_default_str();

    int degree = 0, branch_points = 3;
    bool table = false;
    auto* enumerate = app.add_subcommand("enumerate", "List all valid data of one degree, one JSON object per line");
    enumerate->add_option("--degree", degree, "Degree d")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--branch-points", branch_points, "Number of branch points n")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    enumerate->add_flag("--table", table, "Print the text form instead of JSON");

    CatalogOptions cat;
    auto* catalog = app.add_subcommand("catalog", "Classify every datum up to a degree");
    catalog->add_option("--max-degree", cat.max_degree, "Largest degree")->capture_default_str()->check(CLI::PositiveNumber);
    catalog->add_option("--min-degree", cat.min_degree, "Smallest degree")->capture_default_str()->check(CLI::PositiveNumber);
    catalog->add_option("--branch-points", cat.branch_points, "Number of branch points n")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    catalog->add_option("--budget", cat.budget, "Oracle node budget per datum, 0 for unlimited")->capture_default_str();
    catalog->add_option("--max-den", cat.search.max_denominator, "Largest denominator in the search grid")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    catalog->add_option("--max-num", cat.search.max_numerator, "Largest numerator in the search grid")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    catalog->add_flag("--table", cat.table, "Human-readable rows and summary table");
    catalog->add_flag("--timings", cat.timings, "Add per-stage wall times to each row (not reproducible)");

    int family_degree = 0, nonprime = 0;
    std::string family;
    std::vector<int> params;
    auto* families = app.add_subcommand("families", "Generate exceptional family members with their base angles");
    auto* fd = families->add_option("--degree", family_degree, "Every family member of this degree");
    auto* fn = families->add_option("--nonprime", nonprime, "The standard exceptional datum of a composite degree");
    auto* ff = families->add_option("--family", family, "P2K_A, P2K_B, P3K, PRK_A or PRK_B");
    auto* fp = families->add_option("--params", params, "Family parameters, comma separated")->delimiter(',');
    ff->needs(fp);
    fp->needs(ff);
    fd->excludes(fn)->excludes(ff);
    fn->excludes(ff);

    std::string certificate;
    auto* verify_cert = app.add_subcommand("verify-certificate", "Re-check a certificate from scratch");
    verify_cert->add_option("certificate", certificate, "Certificate JSON, @file or -")->required();

    auto* verify_wit = app.add_subcommand("verify-witness", "Check a monodromy witness against a datum");
    verify_wit->add_option("datum", datum, "Branch datum; rows in witness order")->required();
    verify_wit->add_option("witness", witness, "JSON array of cycle strings or \"(1 2);(1 2)\", @file or -")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : bad_input;
    }

    try {
        if (*validate) return cmd_validate(datum);
        if (*admissible) return cmd_admissible(beta);
        if (*certify) return cmd_certify(datum, beta, search);
        if (*realize) return cmd_realize(datum, budget);
        if (*enumerate) return cmd_enumerate(degree, branch_points, table);
        if (*catalog) return cmd_catalog(cat);
        if (*families) {
            if (family_degree == 0 && nonprime == 0 && family.empty())
                throw std::invalid_argument("families: give --degree, --nonprime or --family with --params");
            return cmd_families(family_degree, nonprime, family, params);
        }
        if (*verify_cert) return cmd_verify_certificate(certificate);
        if (*verify_wit) return cmd_verify_witness(datum, witness);
    } catch (const FamilyError& e) {
        std::cerr << "hurwitz: " << e.what() << '\n';
        return negative;
    } catch (const std::exception& e) {
        std::cerr << "hurwitz: " << e.what() << '\n';
        return bad_input;
    }
    return bad_input;
}
