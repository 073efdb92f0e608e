// Realizability oracle via monodromy.
//
// A datum (d, Pi) with n rows is realized by a branched cover S^2 -> S^2 iff
// there are permutations g_1..g_n in S_d with cycle type of g_i equal to row i,
// g_1 g_2 ... g_n = 1, and <g_1, ..., g_n> transitive. The search below is
// exhaustive, so "unrealizable" is a proof at the sizes where it finishes.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/branch_data.hpp"

namespace hurwitz {

/// A bijection on {0, ..., d-1}; printed 1-based in cycle notation.
/// Products compose left to right: (p * q)(x) = q(p(x)).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        std::vector<char> seen(images_.size(), 0);
        for (int x : images_) {
            if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
                throw std::invalid_argument("permutation: images are not a bijection");
            seen[x] = 1;
        }
    }

    static Permutation identity(int degree)
    {
        std::vector<int> v(degree);
        std::iota(v.begin(), v.end(), 0);
        Permutation p;
        p.images_ = std::move(v);
        return p;
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const
    {
        for (int i = 0; i < degree(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    Permutation inverse() const
    {
        Permutation r;
        r.images_.resize(images_.size());
        for (int i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
        return r;
    }

    friend Permutation operator*(const Permutation& p, const Permutation& q)
    {
        if (p.degree() != q.degree()) throw std::invalid_argument("permutation: degree mismatch");
        Permutation r;
        r.images_.resize(p.images_.size());
        for (int i = 0; i < p.degree(); ++i) r.images_[i] = q.images_[p.images_[i]];
        return r;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

inline std::vector<std::vector<int>> cycles_of(const Permutation& p)
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(p.degree(), 0);
    for (int s = 0; s < p.degree(); ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        for (int x = s; !seen[x]; x = p(x)) {
            seen[x] = 1;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// Cycle lengths including fixed points, non-increasing.
inline Partition cycle_type(const Permutation& p)
{
    if (p.degree() == 0) throw std::invalid_argument("cycle_type: empty permutation");
    std::vector<int> lengths;
    for (const auto& c : cycles_of(p)) lengths.push_back(static_cast<int>(c.size()));
    return Partition(std::move(lengths));
}

/// Cycles on consecutive blocks: (1..t1)(t1+1..t1+t2)...
inline Permutation canonical_of_type(const Partition& type, int degree)
{
    if (type.sum() != degree) throw std::invalid_argument("canonical_of_type: type does not sum to the degree");
    std::vector<int> img(degree);
    int start = 0;
    for (int len : type) {
        for (int j = 0; j < len; ++j) img[start + j] = start + (j + 1) % len;
        start += len;
    }
    return Permutation(std::move(img));
}

/// Visits every permutation of the given cycle type exactly once, in a fixed
/// order. Each cycle is written from its least element; the least unused
/// element always opens the next cycle, so no permutation repeats.
/// The visitor returns false to stop early; the return value says whether the
/// iteration ran to completion.
inline bool for_each_in_class(const Partition& type, int degree, const std::function<bool(const Permutation&)>& visit)
{
    if (type.sum() != degree) throw std::invalid_argument("for_each_in_class: type does not sum to the degree");

    // remaining cycle lengths as (length, multiplicity), largest first
    std::vector<std::pair<int, int>> lengths;
    for (int len : type) {
        if (!lengths.empty() && lengths.back().first == len)
            ++lengths.back().second;
        else
            lengths.emplace_back(len, 1);
    }

    std::vector<int> img(degree, -1);
    std::vector<char> used(degree, 0);
    bool stopped = false;

    std::function<void()> open_cycle;
    std::function<void(int, int, int)> extend;

    // place the next element of a cycle that began at `head` and currently ends at `tail`
    extend = [&](int head, int tail, int left) {
        if (stopped) return;
        if (left == 0) {
            img[tail] = head;
            open_cycle();
            img[tail] = -1;
            return;
        }
        for (int x = head + 1; x < degree && !stopped; ++x) {
            if (used[x]) continue;
            used[x] = 1;
            img[tail] = x;
            extend(head, x, left - 1);
            img[tail] = -1;
            used[x] = 0;
        }
    };

    open_cycle = [&] {
        if (stopped) return;
        int head = 0;
        while (head < degree && used[head]) ++head;
        if (head == degree) {
            if (!visit(Permutation(img))) stopped = true;
            return;
        }
        used[head] = 1;
        for (auto& [len, mult] : lengths) {
            if (stopped) break;
            if (mult == 0) continue;
            --mult;
            extend(head, head, len - 1);
            ++mult;
        }
        used[head] = 0;
    };

    open_cycle();
    return !stopped;
}

inline std::vector<Permutation> conjugacy_class(const Partition& type, int degree)
{
    std::vector<Permutation> out;
    for_each_in_class(type, degree, [&](const Permutation& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

/// d! / (prod of parts * prod of multiplicity factorials).
inline std::uint64_t class_size(const Partition& type)
{
    std::uint64_t size = 1;
    const int d = type.sum();
    for (int i = 2; i <= d; ++i) size *= static_cast<std::uint64_t>(i);
    const auto& parts = type.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        for (std::size_t k = 1; k <= j - i; ++k) size /= static_cast<std::uint64_t>(parts[i]) * k;
        i = j;
    }
    return size;
}

inline bool is_transitive(const std::vector<Permutation>& perms, int degree)
{
    if (degree <= 1) return true;
    std::vector<int> parent(degree);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int components = degree;
    for (const auto& p : perms) {
        for (int x = 0; x < degree; ++x) {
            const int a = find(x);
            const int b = find(p(x));
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components == 1;
}

/// Checks the three defining properties directly, independent of any search.
inline bool verify_witness(const BranchDatum& datum, const std::vector<Permutation>& perms)
{
    if (perms.size() != datum.rows.size() || perms.empty()) return false;
    Permutation product = Permutation::identity(datum.degree);
    for (std::size_t i = 0; i < perms.size(); ++i) {
        if (perms[i].degree() != datum.degree) return false;
        if (!(cycle_type(perms[i]) == datum.rows[i])) return false;
        product = product * perms[i];
    }
    return product.is_identity() && is_transitive(perms, datum.degree);
}

struct MonodromyWitness {
    int degree = 0;
    std::vector<Permutation> perms;
};

enum class OracleStatus { realizable, unrealizable, unknown };

inline const char* to_string(OracleStatus s)
{
    switch (s) {
    case OracleStatus::realizable: return "realizable";
    case OracleStatus::unrealizable: return "unrealizable";
    case OracleStatus::unknown: return "unknown";
    }
    return "unknown";
}

struct OracleResult {
    OracleStatus status = OracleStatus::unknown;
    std::optional<MonodromyWitness> witness;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t default_oracle_budget = 100'000'000;

/// Exhaustive search for a monodromy witness.
///
/// Rows are searched in increasing class size: the largest class is never
/// enumerated (its element is forced as the inverse of the partial product) and
/// the second largest is pinned to its block representative, since solutions
/// are closed under simultaneous conjugation. A witness for the reordered rows
/// is carried back to the datum's order by braid moves
/// (a, b) -> (b, b^-1 a b), which keep the product, the cycle types and the
/// generated group.
///
/// `budget` caps the number of enumerated candidates; hitting it yields unknown.
inline OracleResult find_witness(const BranchDatum& datum, std::optional<std::uint64_t> budget = default_oracle_budget)
{
    if (const auto report = validate_datum(datum); !report.ok())
        throw std::invalid_argument("find_witness: invalid datum: " + report.violations.front().message);

    const int d = datum.degree;
    const std::size_t n = datum.rows.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return class_size(datum.rows[a]) < class_size(datum.rows[b]);
    });
    // order[n-1]: derived; order[n-2]: pinned; the rest enumerated
    std::vector<std::size_t> search_rows;
    if (n >= 2) search_rows.push_back(order[n - 2]);
    for (std::size_t i = 0; i + 2 < n; ++i) search_rows.push_back(order[i]);
    search_rows.push_back(order[n - 1]);
    if (n == 1) search_rows = {0};

    OracleResult result;
    std::vector<Permutation> tuple(n);
    tuple[0] = canonical_of_type(datum.rows[search_rows[0]], d);
    bool found = false;
    bool exhausted_budget = false;

    auto close_tuple = [&](const Permutation& prefix) {
        if (n == 1) {
            return prefix.is_identity() && is_transitive(tuple, d);
        }
        Permutation last = prefix.inverse();
        if (!(cycle_type(last) == datum.rows[search_rows[n - 1]])) return false;
        tuple[n - 1] = std::move(last);
        return is_transitive(tuple, d);
    };

    std::function<void(std::size_t, const Permutation&)> descend = [&](std::size_t level, const Permutation& prefix) {
        if (found || exhausted_budget) return;
        if (level + 1 >= n) {
            found = close_tuple(prefix);
            return;
        }
        for_each_in_class(datum.rows[search_rows[level]], d, [&](const Permutation& g) {
            if (budget && result.nodes >= *budget) {
                exhausted_budget = true;
                return false;
            }
            ++result.nodes;
            tuple[level] = g;
            descend(level + 1, prefix * g);
            return !found && !exhausted_budget;
        });
    };
    if (n == 1)
        found = close_tuple(tuple[0]);
    else
        descend(1, tuple[0]);

    if (found) {
        // bubble rows back into datum order with braid moves
        std::vector<std::size_t> pos = search_rows;
        for (std::size_t pass = 0; pass < n; ++pass) {
            for (std::size_t i = 0; i + 1 < n; ++i) {
                if (pos[i] > pos[i + 1]) {
                    const Permutation a = tuple[i];
                    const Permutation b = tuple[i + 1];
                    tuple[i] = b;
                    tuple[i + 1] = b.inverse() * a * b;
                    std::swap(pos[i], pos[i + 1]);
                }
            }
        }
        result.status = OracleStatus::realizable;
        result.witness = MonodromyWitness{d, tuple};
    } else {
        result.status = exhausted_budget ? OracleStatus::unknown : OracleStatus::unrealizable;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Cycle notation, 1-based: "(1 2)(3 4)"; the identity prints as "()".

inline std::string format_cycles(const Permutation& p)
{
    std::string s;
    for (const auto& c : cycles_of(p)) {
        if (c.size() < 2) continue;
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(c[i] + 1);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

inline Permutation parse_cycles(std::string_view text, int degree)
{
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> seen(degree, 0);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '('", pos);
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            const std::size_t start = pos;
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                if (v > degree) break;
                ++pos;
            }
            if (pos == start) throw ParseError("expected a point or ')'", pos);
            if (v < 1 || v > degree) throw ParseError("point out of range 1.." + std::to_string(degree), start);
            if (seen[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated", start);
            seen[v - 1] = 1;
            cycle.push_back(v - 1);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_ws();
    }
    return Permutation(std::move(img));
}

} // namespace hurwitz
