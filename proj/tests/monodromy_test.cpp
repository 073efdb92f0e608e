#include <algorithm>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hurwitz/monodromy.hpp"
#include "oracles.hpp"

namespace hurwitz {
namespace {

Permutation cyc(const char* text, int d) { return parse_cycles(text, d); }

TEST(Permutation, RejectsNonBijection)
{
    EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 3, 1}), std::invalid_argument);
}

TEST(Permutation, ComposesLeftToRight)
{
    const auto a = cyc("(1 2)", 3);
    const auto b = cyc("(2 3)", 3);
    // 1 -a-> 2 -b-> 3
    EXPECT_EQ((a * b)(0), 2);
    EXPECT_EQ(a * a.inverse(), Permutation::identity(3));
}

TEST(CycleType, Examples)
{
    EXPECT_EQ(cycle_type(Permutation::identity(4)), (Partition{1, 1, 1, 1}));
    EXPECT_EQ(cycle_type(cyc("(1 2)(3 4)", 4)), (Partition{2, 2}));
    EXPECT_EQ(cycle_type(cyc("(1 2 3)", 4)), (Partition{3, 1}));
}

TEST(CanonicalOfType, Blocks)
{
    EXPECT_EQ(canonical_of_type({2, 2}, 4), cyc("(1 2)(3 4)", 4));
    EXPECT_EQ(canonical_of_type({3, 1}, 4), cyc("(1 2 3)", 4));
    EXPECT_EQ(canonical_of_type({6}, 6), cyc("(1 2 3 4 5 6)", 6));
    EXPECT_THROW(canonical_of_type({3, 1}, 5), std::invalid_argument);
}

TEST(ConjugacyClass, SmallSizes)
{
    ASSERT_EQ(oracle::class_size_formula({2, 2}), 3u);
    ASSERT_EQ(oracle::class_size_formula({3, 1}), 8u);
    EXPECT_EQ(conjugacy_class({2, 2}, 4).size(), 3u);
    EXPECT_EQ(conjugacy_class({3, 1}, 4).size(), 8u);
    EXPECT_EQ(conjugacy_class({1, 1, 1, 1, 1}, 5), std::vector<Permutation>{Permutation::identity(5)});
}

TEST(ConjugacyClass, SizesMatchFormulaUpToEight)
{
    for (int d = 1; d <= 8; ++d)
        for (const auto& p : partitions_of(d)) {
            std::uint64_t count = 0;
            for_each_in_class(p, d, [&](const Permutation&) {
                ++count;
                return true;
            });
            EXPECT_EQ(count, oracle::class_size_formula(p.parts())) << format_partition(p);
            EXPECT_EQ(class_size(p), oracle::class_size_formula(p.parts()));
        }
}

// Element sets, not just counts, against filtering all of S_d.
TEST(ConjugacyClass, ElementsMatchFilterUpToSix)
{
    for (int d = 1; d <= 6; ++d)
        for (const auto& p : partitions_of(d)) {
            std::set<std::vector<int>> got;
            for_each_in_class(p, d, [&](const Permutation& g) {
                EXPECT_EQ(cycle_type(g), p);
                got.insert(g.images());
                return true;
            });
            EXPECT_EQ(got, oracle::class_by_filter(p.parts(), d)) << format_partition(p);
        }
}

TEST(ConjugacyClass, EarlyStop)
{
    int seen = 0;
    const bool complete = for_each_in_class({3, 1}, 4, [&](const Permutation&) { return ++seen < 3; });
    EXPECT_FALSE(complete);
    EXPECT_EQ(seen, 3);
}

TEST(IsTransitive, Examples)
{
    EXPECT_TRUE(is_transitive({cyc("(1 2)", 2)}, 2));
    EXPECT_FALSE(is_transitive({cyc("(1 2)(3 4)", 4)}, 4));
    EXPECT_TRUE(is_transitive({cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)}, 4));
}

TEST(VerifyWitness, Examples)
{
    const auto fig = parse_datum("2: 2 | 2");
    EXPECT_TRUE(verify_witness(fig, {cyc("(1 2)", 2), cyc("(1 2)", 2)}));

    const auto v4 = parse_datum("4: 2,2 | 2,2 | 2,2");
    EXPECT_TRUE(verify_witness(v4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4), cyc("(1 4)(2 3)", 4)}));
    EXPECT_FALSE(verify_witness(v4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4), cyc("(1 3)(2 4)", 4)}));
    EXPECT_FALSE(verify_witness(v4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)}));

    // correct types and identity product, but orbit {1,2}
    const BranchDatum split{4, {Partition{2, 2}, Partition{2, 2}}};
    EXPECT_FALSE(verify_witness(split, {cyc("(1 2)(3 4)", 4), cyc("(1 2)(3 4)", 4)}));
}

TEST(FindWitness, DoubleCover)
{
    const auto r = find_witness(parse_datum("2: 2 | 2"));
    ASSERT_EQ(r.status, OracleStatus::realizable);
    EXPECT_EQ(format_cycles(r.witness->perms[0]), "(1 2)");
    EXPECT_EQ(format_cycles(r.witness->perms[1]), "(1 2)");
}

TEST(FindWitness, KleinFour)
{
    const auto d = parse_datum("4: 2,2 | 2,2 | 2,2");
    const auto r = find_witness(d);
    ASSERT_EQ(r.status, OracleStatus::realizable);
    EXPECT_TRUE(verify_witness(d, r.witness->perms));
}

TEST(FindWitness, ThreeOneTwoTwoTwoTwoIsUnrealizable)
{
    const auto d = parse_datum("4: 3,1 | 2,2 | 2,2");
    ASSERT_FALSE(oracle::realizable_by_full_scan(4, {{3, 1}, {2, 2}, {2, 2}}));
    const auto r = find_witness(d, std::nullopt);
    EXPECT_EQ(r.status, OracleStatus::unrealizable);
    EXPECT_EQ(r.nodes, 3u);
}

TEST(FindWitness, DegreeNineFamilyUnrealizable)
{
    const auto r = find_witness(parse_datum("9: 2,2,2,2,1 | 3,3,3 | 3,3,3"), std::nullopt);
    EXPECT_EQ(r.status, OracleStatus::unrealizable);
}

TEST(FindWitness, WitnessFollowsRowOrderAsGiven)
{
    // rows deliberately not canonical and not sorted by class size
    const auto d = parse_datum("5: 2,1,1,1 | 5 | 3,1,1 | 2,1,1,1", RowOrder::as_written);
    ASSERT_TRUE(validate_datum(d).ok());
    const auto r = find_witness(d);
    ASSERT_EQ(r.status, OracleStatus::realizable);
    EXPECT_TRUE(verify_witness(d, r.witness->perms));
}

TEST(FindWitness, BudgetYieldsUnknown)
{
    const auto r = find_witness(parse_datum("6: 3,3 | 2,2,1,1 | 2,2,1,1 | 2,2,1,1"), 2);
    EXPECT_EQ(r.status, OracleStatus::unknown);
    EXPECT_EQ(r.nodes, 2u);
}

TEST(FindWitness, InvalidDatumThrows)
{
    EXPECT_THROW(find_witness(parse_datum("4: 2,2 | 2,2")), std::invalid_argument);
}

// Full scan with no symmetry reduction against the pruned search.
TEST(FindWitness, AgreesWithFullScanUpToFive)
{
    for (int d = 2; d <= 5; ++d)
        for (int n = 2; n <= 4; ++n)
            for (const auto& x : enumerate_data(d, n)) {
                std::vector<std::vector<int>> rows;
                for (const auto& r : x.rows) rows.push_back(r.parts());
                const bool expected = oracle::realizable_by_full_scan(d, rows);
                const auto got = find_witness(x, std::nullopt);
                EXPECT_EQ(got.status == OracleStatus::realizable, expected) << format_datum(x);
                EXPECT_NE(got.status, OracleStatus::unknown);
            }
}

TEST(FindWitness, RowOrderInvariance)
{
    for (int d = 3; d <= 6; ++d)
        for (const auto& x : enumerate_data(d, 3)) {
            auto rows = x.rows;
            const auto base = find_witness(x, std::nullopt).status;
            std::sort(rows.begin(), rows.end());
            do {
                const BranchDatum y{d, rows};
                const auto r = find_witness(y, std::nullopt);
                EXPECT_EQ(r.status, base) << format_datum(y);
                if (r.witness) {
                    EXPECT_TRUE(verify_witness(y, r.witness->perms));
                }
            } while (std::next_permutation(rows.begin(), rows.end()));
        }
}

TEST(FindWitness, WitnessesSatisfyRiemannHurwitz)
{
    for (int d = 2; d <= 6; ++d)
        for (const auto& x : enumerate_data(d, 3)) {
            const auto r = find_witness(x);
            if (!r.witness) continue;
            int defect = 0;
            for (const auto& g : r.witness->perms) defect += d - static_cast<int>(cycles_of(g).size());
            EXPECT_EQ(defect, 2 * d - 2);
        }
}

TEST(CycleNotation, RoundTrip)
{
    const auto g = cyc("(1 3 5)(2 4)", 6);
    EXPECT_EQ(format_cycles(g), "(1 3 5)(2 4)");
    EXPECT_EQ(format_cycles(Permutation::identity(3)), "()");
    EXPECT_EQ(parse_cycles("()", 3), Permutation::identity(3));
    EXPECT_EQ(parse_cycles("", 3), Permutation::identity(3));
    EXPECT_THROW(parse_cycles("(1 1)", 3), ParseError);
    EXPECT_THROW(parse_cycles("(1 4)", 3), ParseError);
    EXPECT_THROW(parse_cycles("1 2", 3), ParseError);
}

} // namespace
} // namespace hurwitz
