#include <gtest/gtest.h>

#include "msfssp/instance_file.hpp"

using namespace msfssp;

TEST(InstanceFile, MinimalDocument) {
    auto inst = parse_instance(R"({"periods": [2, 3, 2]})");
    EXPECT_FALSE(inst.name);
    EXPECT_FALSE(inst.explicit_set);
    EXPECT_EQ(inst.assignment, (PeriodAssignment{2, 3, 2}));
    EXPECT_EQ(inst.assignment.cycle(), 6u);
}

TEST(InstanceFile, ExplicitSetWidensCycle) {
    auto inst = parse_instance(R"({"name": "pair", "periods": [2, 2], "period_set": [3, 2]})");
    EXPECT_EQ(inst.name, "pair");
    EXPECT_TRUE(inst.explicit_set);
    EXPECT_EQ(inst.assignment.cycle(), 6u);
}

TEST(InstanceFile, RoundTrip) {
    Instance inst{"x", PeriodAssignment({1, 3, 3}, PeriodSet{1, 2, 3}), true, std::nullopt};
    auto back = parse_instance(dump_instance(inst));
    EXPECT_EQ(back.name, inst.name);
    EXPECT_EQ(back.assignment, inst.assignment);
    EXPECT_TRUE(back.explicit_set);
    EXPECT_EQ(dump_instance(back), dump_instance(inst));
}

TEST(InstanceFile, ProvenanceRoundTrip) {
    auto t = theorem1_params(PeriodSet{2, 3}, 2);
    t.arrangement = arrangement_at(2, 3);
    Instance inst{"lb", theorem1_instance(t), true, t};
    auto text = dump_instance(inst);
    EXPECT_NE(text.find("\"family\": \"lower-bound\""), std::string::npos);
    auto back = parse_instance(text);
    ASSERT_TRUE(back.provenance);
    EXPECT_EQ(back.provenance->arrangement, t.arrangement);
    EXPECT_EQ(back.provenance->m, 2u);
    EXPECT_EQ(theorem1_instance(*back.provenance), back.assignment);
}

TEST(InstanceFile, Errors) {
    EXPECT_THROW(parse_instance("{"), InstanceError);
    EXPECT_THROW(parse_instance("[1,2]"), InstanceError);
    EXPECT_THROW(parse_instance("{}"), InstanceError);
    EXPECT_THROW(parse_instance(R"({"periods": []})"), InstanceError);
    EXPECT_THROW(parse_instance(R"({"periods": [0, 1]})"), InstanceError);
    EXPECT_THROW(parse_instance(R"({"periods": [1, -2]})"), InstanceError);
    EXPECT_THROW(parse_instance(R"({"periods": [1.5]})"), InstanceError);
    EXPECT_THROW(parse_instance(R"({"periods": [2, 5], "period_set": [2, 3]})"), InstanceError);
    EXPECT_THROW(parse_instance(R"({"name": 3, "periods": [1]})"), InstanceError);
    EXPECT_THROW(load_instance("/nonexistent/instance.json"), InstanceError);
}

TEST(InstanceFile, BadProvenance) {
    auto t = theorem1_params(PeriodSet{2, 3}, 1);
    auto doc = instance_to_json({"lb", theorem1_instance(t), true, t});
    doc["provenance"]["arrangement"] = "AAB";
    EXPECT_THROW(instance_from_json(doc), InstanceError);
    doc["provenance"]["arrangement"] = "AX";
    EXPECT_THROW(instance_from_json(doc), InstanceError);
    doc["provenance"].erase("q");
    EXPECT_THROW(instance_from_json(doc), InstanceError);
}
