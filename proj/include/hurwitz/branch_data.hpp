// Branching data (d, Pi) for branched covers of the sphere by the sphere.
//
// A datum is a degree d plus one partition of d per branch point. Parts equal
// to 1 (unramified preimages) are always stored explicitly.
#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hurwitz {

/// A partition of a positive integer, parts kept non-increasing.
class Partition {
public:
    Partition() = default;

    Partition(std::vector<int> parts) : parts_(std::move(parts)) // NOLINT: implicit from vector is intended
    {
        if (parts_.empty()) throw std::invalid_argument("partition: no parts");
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("partition: part " + std::to_string(p) + " is not positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int largest() const { return parts_.front(); }

    int sum() const
    {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    /// Sum of (part - 1); the contribution of this row to Riemann-Hurwitz.
    int defect() const { return sum() - static_cast<int>(parts_.size()); }

    bool has_branching_part() const { return !parts_.empty() && parts_.front() >= 2; }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

/// Degree plus one partition per branch point. Rows keep the order they were
/// given in; canonical() sorts them lexicographically non-increasing.
struct BranchDatum {
    int degree = 0;
    std::vector<Partition> rows;

    std::size_t branch_points() const { return rows.size(); }

    BranchDatum canonical() const
    {
        BranchDatum c = *this;
        std::sort(c.rows.begin(), c.rows.end(), std::greater<>());
        return c;
    }

    bool is_canonical() const { return std::is_sorted(rows.begin(), rows.end(), std::greater<>()); }

    friend bool operator==(const BranchDatum&, const BranchDatum&) = default;
    friend auto operator<=>(const BranchDatum&, const BranchDatum&) = default;
};

/// True when two data agree up to row order.
inline bool same_datum(const BranchDatum& a, const BranchDatum& b) { return a.canonical() == b.canonical(); }

inline int total_defect(const std::vector<Partition>& rows)
{
    int s = 0;
    for (const auto& r : rows) s += r.defect();
    return s;
}

struct Violation {
    std::string constraint; // "row-sum", "has-branching-part" or "defect"
    std::string message;
    std::optional<std::size_t> row;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the three combinatorial constraints of a sphere-to-sphere datum:
/// every row sums to d, every row has a part >= 2, and the total defect is 2d - 2.
inline ValidationReport validate_datum(int degree, const std::vector<Partition>& rows)
{
    if (degree < 1) throw std::invalid_argument("validate_datum: degree must be positive");
    if (rows.empty()) throw std::invalid_argument("validate_datum: at least one row is required");

    ValidationReport report;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int s = rows[i].sum();
        if (s != degree)
            report.violations.push_back({"row-sum",
                                         "row " + std::to_string(i) + " sums to " + std::to_string(s) +
                                             ", expected " + std::to_string(degree),
                                         i});
        if (!rows[i].has_branching_part())
            report.violations.push_back(
                {"has-branching-part", "row " + std::to_string(i) + " has no part >= 2", i});
    }
    const int defect = total_defect(rows);
    if (defect != 2 * degree - 2)
        report.violations.push_back({"defect",
                                     "total defect " + std::to_string(defect) + " != 2d-2 = " +
                                         std::to_string(2 * degree - 2),
                                     std::nullopt});
    return report;
}

inline ValidationReport validate_datum(const BranchDatum& datum) { return validate_datum(datum.degree, datum.rows); }

// ---------------------------------------------------------------------------
// Enumeration

/// All partitions of n with every part <= max_part, reverse-lexicographic order
/// (so (n) comes first and (1,...,1) last). Results are memoized per (n, max_part).
inline const std::vector<std::vector<int>>& partitions_bounded(int n, int max_part)
{
    static thread_local std::map<std::pair<int, int>, std::vector<std::vector<int>>> memo;
    max_part = std::min(max_part, n);
    const auto key = std::make_pair(n, max_part);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
    } else {
        for (int first = max_part; first >= 1; --first) {
            for (const auto& tail : partitions_bounded(n - first, first)) {
                std::vector<int> p{first};
                p.insert(p.end(), tail.begin(), tail.end());
                out.push_back(std::move(p));
            }
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
}

inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    for (const auto& p : partitions_bounded(n, n)) out.emplace_back(p);
    return out;
}

/// Visits every valid datum of degree d with exactly n rows, once per row
/// multiset, rows lexicographically non-increasing. The visitor returns false to stop.
inline void for_each_datum(int degree, int n, const std::function<bool(const BranchDatum&)>& visit)
{
    if (degree < 2 || n < 1) return;
    std::vector<Partition> rows;
    for (auto& p : partitions_of(degree))
        if (p.has_branching_part()) rows.push_back(std::move(p)); // already reverse-lex

    const int target = 2 * degree - 2;
    const int max_defect = degree - 1;
    std::vector<std::size_t> pick;
    bool stop = false;

    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int remaining) {
        if (stop) return;
        const int left = n - static_cast<int>(pick.size());
        if (left == 0) {
            if (remaining != 0) return;
            BranchDatum d{degree, {}};
            for (auto i : pick) d.rows.push_back(rows[i]);
            if (!visit(d)) stop = true;
            return;
        }
        // each remaining row contributes a defect in [1, d-1]
        if (remaining < left || remaining > left * max_defect) return;
        for (std::size_t i = from; i < rows.size() && !stop; ++i) {
            pick.push_back(i);
            rec(i, remaining - rows[i].defect());
            pick.pop_back();
        }
    };
    rec(0, target);
}

inline std::vector<BranchDatum> enumerate_data(int degree, int n)
{
    std::vector<BranchDatum> out;
    for_each_datum(degree, n, [&](const BranchDatum& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Text format: "d: p,p,... | p,p,... | ..."

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class RowOrder { canonical, as_written };

inline BranchDatum parse_datum(std::string_view text, RowOrder order = RowOrder::canonical)
{
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) {
            std::size_t end = pos;
            while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',' &&
                   text[end] != '|' && text[end] != ':')
                ++end;
            const auto token = end > start ? std::string(text.substr(start, end - start))
                                           : (start < text.size() ? std::string(1, text[start]) : "end of input");
            throw ParseError("expected a positive integer, found '" + token + "'", start);
        }
        if (pos - start > 9) throw ParseError("integer too large", start);
        const int v = std::stoi(std::string(text.substr(start, pos - start)));
        if (v < 1) throw ParseError("expected a positive integer, found '0'", start);
        return v;
    };

    BranchDatum datum;
    datum.degree = read_int();
    skip_ws();
    if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':' after degree", pos);
    ++pos;

    for (;;) {
        std::vector<int> parts{read_int()};
        skip_ws();
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            parts.push_back(read_int());
            skip_ws();
        }
        datum.rows.emplace_back(std::move(parts));
        if (pos >= text.size()) break;
        if (text[pos] != '|') throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
        ++pos;
    }
    if (order == RowOrder::canonical) return datum.canonical();
    return datum;
}

inline std::string format_partition(const Partition& p)
{
    std::string s;
    for (std::size_t j = 0; j < p.parts().size(); ++j) {
        if (j) s += ',';
        s += std::to_string(p.parts()[j]);
    }
    return s;
}

inline std::string format_datum(const BranchDatum& datum)
{
    std::string s = std::to_string(datum.degree) + ":";
    for (std::size_t i = 0; i < datum.rows.size(); ++i) {
        s += i ? " | " : " ";
        s += format_partition(datum.rows[i]);
    }
    return s;
}

} // namespace hurwitz
