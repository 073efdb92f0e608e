// Exceptionality certificates from pulled-back cone metrics.
//
// If f realizes (d, Pi) and the base sphere carries a conical metric with
// angles beta, then f*g has angle Pi_i^j * beta_i at every preimage of branch
// point i. So an admissible beta whose lift is not admissible rules out every
// cover with that datum.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hurwitz/angles.hpp"
#include "hurwitz/branch_data.hpp"

namespace hurwitz {

/// Row-major concatenation of Pi_i^j * beta_i.
inline AngleVector lift_angles(const AngleVector& beta, const BranchDatum& datum)
{
    if (beta.size() != datum.rows.size())
        throw std::invalid_argument("lift_angles: " + std::to_string(beta.size()) + " angles for " +
                                    std::to_string(datum.rows.size()) + " rows");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < datum.rows.size(); ++i)
        for (int part : datum.rows[i]) out.push_back(beta[i] * part);
    return AngleVector(std::move(out));
}

struct ExceptionalityCertificate {
    BranchDatum datum;
    AngleVector witness_beta;
    AdmissibilityVerdict base_verdict;
    AngleVector lifted;
    AdmissibilityVerdict lifted_verdict;
};

enum class RefusalKind { base_not_admissible, lift_admissible };

struct Refusal {
    RefusalKind kind;
    std::string reason;
};

using CertifyOutcome = std::variant<ExceptionalityCertificate, Refusal>;

inline CertifyOutcome certify_exceptional(const BranchDatum& datum, const AngleVector& beta)
{
    if (const auto report = validate_datum(datum); !report.ok())
        throw std::invalid_argument("certify_exceptional: invalid datum: " + report.violations.front().message);
    if (beta.size() != datum.rows.size())
        throw std::invalid_argument("certify_exceptional: witness length does not match the number of rows");

    auto base = decide_admissible(beta);
    if (!base.admissible) return Refusal{RefusalKind::base_not_admissible, "base beta not admissible: " + base.reason};

    auto lifted = lift_angles(beta, datum);
    auto lifted_verdict = decide_admissible(lifted);
    if (lifted_verdict.admissible)
        return Refusal{RefusalKind::lift_admissible,
                       std::string("lift admissible (case ") + to_string(lifted_verdict.which) + ")"};

    return ExceptionalityCertificate{datum, beta, std::move(base), std::move(lifted), std::move(lifted_verdict)};
}

/// Re-derives every field of a certificate from its datum and witness.
/// Returns an empty string when the certificate holds, else the first failure.
inline std::string check_certificate(const ExceptionalityCertificate& cert)
{
    if (cert.datum.rows.empty() || cert.datum.degree < 1) return "datum has no rows";
    if (const auto report = validate_datum(cert.datum); !report.ok())
        return "datum invalid: " + report.violations.front().message;
    if (cert.witness_beta.size() != cert.datum.rows.size()) return "witness length does not match rows";
    const auto base = decide_admissible(cert.witness_beta);
    if (!base.admissible) return "witness not admissible: " + base.reason;
    if (base.which != cert.base_verdict.which || !cert.base_verdict.admissible) return "base verdict mismatch";
    const auto lifted = lift_angles(cert.witness_beta, cert.datum);
    if (!(lifted == cert.lifted)) return "lifted vector mismatch";
    const auto lv = decide_admissible(lifted);
    if (lv.admissible) return "lifted vector is admissible";
    if (cert.lifted_verdict.admissible) return "lifted verdict mismatch";
    return {};
}

inline bool verify_certificate(const ExceptionalityCertificate& cert) { return check_certificate(cert).empty(); }

struct SearchConfig {
    int max_denominator = 6;
    int max_numerator = 6;
    std::vector<AngleVector> extra_candidates;
};

namespace detail {

// Every distinct arrangement of the entries, in lexicographic order.
inline void for_each_arrangement(std::vector<Rational> v, const std::function<bool(const AngleVector&)>& f)
{
    std::sort(v.begin(), v.end());
    do {
        if (!f(AngleVector(v))) return;
    } while (std::next_permutation(v.begin(), v.end()));
}

} // namespace detail

/// Visits candidate witnesses in the fixed search order: the three hand-picked
/// templates (all arrangements), then extra candidates, then the p/q grid by
/// increasing largest denominator. Return false from the visitor to stop.
inline void for_each_candidate(const BranchDatum& datum, const SearchConfig& config,
                               const std::function<bool(const AngleVector&)>& visit)
{
    const std::size_t n = datum.rows.size();
    if (n == 0) return;
    bool stop = false;
    auto emit = [&](const AngleVector& b) {
        if (!stop && !visit(b)) stop = true;
        return !stop;
    };

    emit(AngleVector(std::vector<Rational>(n, Rational(1, 2))));
    if (stop) return;
    {
        std::vector<Rational> t(n, Rational(2, 3));
        t[0] = Rational(1, 2);
        detail::for_each_arrangement(t, emit);
        if (stop) return;
    }
    for (int r = 2; r <= datum.degree; ++r) {
        std::vector<Rational> t(n, Rational(1, r));
        t[0] = Rational(1);
        detail::for_each_arrangement(t, emit);
        if (stop) return;
    }
    for (const auto& b : config.extra_candidates)
        if (!emit(b)) return;

    std::set<Rational> values;
    for (int q = 1; q <= config.max_denominator; ++q)
        for (int p = 1; p <= config.max_numerator; ++p) values.insert(Rational(p, q));
    const std::vector<Rational> sorted(values.begin(), values.end());

    for (int level = 1; level <= config.max_denominator; ++level) {
        std::vector<Rational> pool;
        for (const auto& v : sorted)
            if (v.den() <= level) pool.push_back(v);
        if (pool.empty()) continue;
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            bool hits_level = false;
            std::vector<Rational> entries(n);
            for (std::size_t i = 0; i < n; ++i) {
                entries[i] = pool[idx[i]];
                hits_level = hits_level || entries[i].den() == level;
            }
            if (hits_level && !emit(AngleVector(std::move(entries)))) return;
            std::size_t pos = n;
            while (pos > 0 && ++idx[pos - 1] == pool.size()) {
                idx[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
}

/// First certificate in the candidate order, or nothing. Failure to find one
/// says nothing about realizability.
inline std::optional<ExceptionalityCertificate> search_certificate(const BranchDatum& datum,
                                                                   const SearchConfig& config = {})
{
    if (const auto report = validate_datum(datum); !report.ok())
        throw std::invalid_argument("search_certificate: invalid datum: " + report.violations.front().message);

    std::optional<ExceptionalityCertificate> found;
    for_each_candidate(datum, config, [&](const AngleVector& beta) {
        if (beta.size() != datum.rows.size()) return true;
        auto outcome = certify_exceptional(datum, beta);
        if (auto* cert = std::get_if<ExceptionalityCertificate>(&outcome)) {
            found = std::move(*cert);
            return false;
        }
        return true;
    });
    return found;
}

} // namespace hurwitz
