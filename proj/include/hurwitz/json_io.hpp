// JSON forms of data, angle vectors, verdicts, certificates and witnesses.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hurwitz/angles.hpp"
#include "hurwitz/branch_data.hpp"
#include "hurwitz/families.hpp"
#include "hurwitz/lift.hpp"
#include "hurwitz/monodromy.hpp"

namespace hurwitz {

using json = nlohmann::json;

inline json to_json(const BranchDatum& d)
{
    json rows = json::array();
    for (const auto& r : d.rows) rows.push_back(r.parts());
    return {{"degree", d.degree}, {"rows", rows}};
}

inline BranchDatum datum_from_json(const json& j, RowOrder order = RowOrder::canonical)
{
    BranchDatum d;
    d.degree = j.at("degree").get<int>();
    if (d.degree < 1) throw std::invalid_argument("datum: degree must be positive");
    for (const auto& row : j.at("rows")) d.rows.emplace_back(row.get<std::vector<int>>());
    if (d.rows.empty()) throw std::invalid_argument("datum: no rows");
    return order == RowOrder::canonical ? d.canonical() : d;
}

/// Accepts either the JSON object form or the "d: p,p | p,p" text form.
inline BranchDatum read_datum(std::string_view text, RowOrder order = RowOrder::canonical)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return datum_from_json(json::parse(text), order);
    return parse_datum(text, order);
}

inline json to_json(const AngleVector& beta)
{
    json out = json::array();
    for (const auto& b : beta) out.push_back(b.to_string());
    return out;
}

inline AngleVector angles_from_json(const json& j)
{
    std::vector<Rational> out;
    for (const auto& e : j) {
        if (e.is_string())
            out.push_back(parse_rational(e.get<std::string>()));
        else if (e.is_number_integer())
            out.emplace_back(e.get<std::int64_t>());
        else
            throw std::invalid_argument("angles: entries must be \"p/q\" strings");
    }
    return AngleVector(std::move(out));
}

inline AngleVector read_angles(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') return angles_from_json(json::parse(text));
    return parse_angles(text);
}

inline json to_json(const CoaxialWitness& w)
{
    return {{"signs", w.signs},
            {"k_prime", w.k_prime},
            {"k_double_prime", w.k_double_prime},
            {"eta", w.eta.to_string()},
            {"b", w.b}};
}

inline json to_json(const AdmissibilityVerdict& v)
{
    json j{{"admissible", v.admissible}, {"case", to_string(v.which)}};
    if (v.lattice) {
        j["distance"] = v.lattice->distance.to_string();
        j["nearest"] = v.lattice->nearest;
    } else {
        j["distance"] = nullptr;
        j["nearest"] = json::array();
    }
    if (v.coaxial) j["coaxial_witness"] = to_json(*v.coaxial);
    if (!v.admissible) j["reason"] = v.reason;
    return j;
}

inline AdmissibleCase case_from_string(const std::string& s)
{
    for (auto c : {AdmissibleCase::A, AdmissibleCase::B, AdmissibleCase::C, AdmissibleCase::D, AdmissibleCase::EMPTY,
                   AdmissibleCase::NONE})
        if (s == to_string(c)) return c;
    throw std::invalid_argument("unknown admissibility case '" + s + "'");
}

/// Reads the claim fields only; a verifier recomputes the rest.
inline AdmissibilityVerdict verdict_from_json(const json& j)
{
    AdmissibilityVerdict v;
    v.admissible = j.at("admissible").get<bool>();
    v.which = case_from_string(j.at("case").get<std::string>());
    if (j.contains("reason")) v.reason = j["reason"].get<std::string>();
    return v;
}

inline json to_json(const ExceptionalityCertificate& c)
{
    return {{"datum", to_json(c.datum)},
            {"beta", to_json(c.witness_beta)},
            {"base_verdict", to_json(c.base_verdict)},
            {"lifted", to_json(c.lifted)},
            {"lifted_verdict", to_json(c.lifted_verdict)}};
}

inline ExceptionalityCertificate certificate_from_json(const json& j)
{
    ExceptionalityCertificate c;
    // the witness is positional, so row order must survive the round trip
    c.datum = datum_from_json(j.at("datum"), RowOrder::as_written);
    c.witness_beta = angles_from_json(j.at("beta"));
    c.base_verdict = verdict_from_json(j.at("base_verdict"));
    c.lifted = angles_from_json(j.at("lifted"));
    c.lifted_verdict = verdict_from_json(j.at("lifted_verdict"));
    return c;
}

inline json to_json(const ValidationReport& r)
{
    json violations = json::array();
    for (const auto& v : r.violations) {
        json e{{"constraint", v.constraint}, {"message", v.message}};
        e["row"] = v.row ? json(*v.row) : json(nullptr);
        violations.push_back(e);
    }
    return {{"ok", r.ok()}, {"violations", violations}};
}

inline json perms_to_json(const std::vector<Permutation>& perms)
{
    json out = json::array();
    for (const auto& p : perms) out.push_back(format_cycles(p));
    return out;
}

inline std::vector<Permutation> perms_from_json(const json& j, int degree)
{
    std::vector<Permutation> out;
    for (const auto& e : j) out.push_back(parse_cycles(e.get<std::string>(), degree));
    return out;
}

inline json to_json(const MonodromyWitness& w) { return perms_to_json(w.perms); }

inline json to_json(const FamilyInstance& f)
{
    return {{"family", to_string(f.family)},
            {"params", f.params},
            {"datum", to_json(f.datum)},
            {"text", format_datum(f.datum)},
            {"beta", to_json(f.recommended_beta)}};
}

} // namespace hurwitz
