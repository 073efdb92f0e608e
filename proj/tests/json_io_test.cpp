#include <variant>

#include <gtest/gtest.h>

#include "hurwitz/json_io.hpp"

namespace hurwitz {
namespace {

TEST(JsonIo, DatumBothForms)
{
    const auto a = read_datum("4: 1,3 | 2,2 | 2,2");
    const auto b = read_datum(R"({"degree": 4, "rows": [[2,2],[1,3],[2,2]]})");
    EXPECT_EQ(a, b);
    EXPECT_EQ(to_json(a), json::parse(R"({"degree":4,"rows":[[3,1],[2,2],[2,2]]})"));
    EXPECT_THROW(read_datum(R"({"degree": 0, "rows": [[1]]})"), std::invalid_argument);
    EXPECT_THROW(read_datum(R"({"degree": 2, "rows": []})"), std::invalid_argument);
}

TEST(JsonIo, AnglesBothForms)
{
    EXPECT_EQ(read_angles("1/2,2/3,2/3"), read_angles(R"(["1/2","2/3","4/6"])"));
    EXPECT_EQ(to_json(parse_angles("1/2,1")), json::parse(R"(["1/2","1"])"));
    EXPECT_THROW(read_angles("[0.5]"), std::invalid_argument);
}

TEST(JsonIo, VerdictFields)
{
    const auto j = to_json(decide_admissible(parse_angles("1/2,1/2,2")));
    EXPECT_EQ(j["admissible"], true);
    EXPECT_EQ(j["case"], "D");
    EXPECT_EQ(j["distance"], "1");
    EXPECT_EQ(j["coaxial_witness"]["eta"], "1/2");
    EXPECT_FALSE(j.contains("reason"));

    const auto n = to_json(decide_admissible(parse_angles("1/2,3/2")));
    EXPECT_EQ(n["admissible"], false);
    EXPECT_EQ(n["case"], "NONE");
    EXPECT_TRUE(n.contains("reason"));
}

TEST(JsonIo, CertificateRoundTripKeepsRowOrder)
{
    const auto datum = parse_datum("9: 2,2,2,2,1 | 3,3,3 | 3,3,3", RowOrder::as_written);
    const auto out = certify_exceptional(datum, parse_angles("1/2,2/3,2/3"));
    const auto& cert = std::get<ExceptionalityCertificate>(out);
    const auto back = certificate_from_json(json::parse(to_json(cert).dump()));
    EXPECT_EQ(back.datum, datum);
    EXPECT_EQ(back.lifted, cert.lifted);
    EXPECT_TRUE(verify_certificate(back));
}

TEST(JsonIo, WitnessAsCycleStrings)
{
    const auto d = parse_datum("4: 2,2 | 2,2 | 2,2");
    const auto r = find_witness(d);
    ASSERT_TRUE(r.witness);
    const auto j = to_json(*r.witness);
    ASSERT_EQ(j.size(), 3u);
    const auto perms = perms_from_json(j, 4);
    EXPECT_TRUE(verify_witness(d, perms));
    EXPECT_EQ(perms_to_json({parse_cycles("(1 2)(3 4)", 4)}), json::parse(R"j(["(1 2)(3 4)"])j"));
}

TEST(JsonIo, ValidationReport)
{
    const auto j = to_json(validate_datum(parse_datum("4: 2,2 | 2,2")));
    EXPECT_EQ(j["ok"], false);
    ASSERT_EQ(j["violations"].size(), 1u);
    EXPECT_EQ(j["violations"][0]["constraint"], "defect");
    EXPECT_TRUE(j["violations"][0]["row"].is_null());
}

TEST(JsonIo, FamilyInstance)
{
    const auto j = to_json(family_rk(2, 3, Variant::B, 4, 2));
    EXPECT_EQ(j["family"], "PRK_B");
    EXPECT_EQ(j["params"], json::parse("[2,3,4,2]"));
    EXPECT_EQ(j["beta"], json::parse(R"(["1","1/2","1/2"])"));
}

} // namespace
} // namespace hurwitz
