#include <gtest/gtest.h>

#include "splitt/quiver.hpp"

using namespace splitt;

TEST(Quiver, ParsesVerticesAndArrows) {
    const Quiver q = parse_quiver("# A2\nvertex 1\nvertex 2\narrow a: 1 -> 2\n");
    EXPECT_EQ(q.vertex_count(), 2u);
    ASSERT_EQ(q.arrows().size(), 1u);
    EXPECT_TRUE(q.is_sink(1));
    EXPECT_TRUE(q.is_source(0));
}

TEST(Quiver, CycleReportsLine) {
    try {
        parse_quiver("vertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n");
        FAIL() << "cycle accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
    }
}

TEST(Quiver, RejectsUnknownVertexAndGarbage) {
    EXPECT_THROW(parse_quiver("vertex 1\narrow a: 1 -> 9\n"), ParseError);
    EXPECT_THROW(parse_quiver("vertex 1\nwibble\n"), ParseError);
    EXPECT_THROW(parse_quiver("vertex 1\nvertex 1\n"), ParseError);
}

TEST(Quiver, DisconnectedRejected) {
    EXPECT_THROW(parse_quiver("vertex 1\nvertex 2\n"), ParseError);
}

TEST(Quiver, DynkinClassification) {
    EXPECT_EQ(classify_dynkin(builtin_quiver("a3"))->name(), "A3");
    EXPECT_EQ(classify_dynkin(builtin_quiver("d4"))->name(), "D4");
    EXPECT_EQ(classify_dynkin(builtin_quiver("d5"))->name(), "D5");
    EXPECT_EQ(classify_dynkin(builtin_quiver("e6"))->name(), "E6");
    EXPECT_EQ(classify_dynkin(builtin_quiver("e8"))->positive_roots(), 120u);
    EXPECT_FALSE(classify_dynkin(builtin_quiver("kronecker")).has_value());
}

TEST(Quiver, ReflectionReversesIncidentArrows) {
    const Quiver q = builtin_quiver("a3");
    const Quiver r = q.reflected_at(2);
    EXPECT_TRUE(r.is_source(2));
    EXPECT_EQ(r.arrows().size(), q.arrows().size());
    EXPECT_EQ(q.opposite().opposite().arrows().size(), q.arrows().size());
}

TEST(Quiver, SinkOrderIsAdmissible) {
    for (const char* name : {"a4", "d5", "e6"}) {
        Quiver q = builtin_quiver(name);
        for (Vertex v : q.admissible_sink_order()) {
            EXPECT_TRUE(q.is_sink(v)) << name;
            q = q.reflected_at(v);
        }
    }
}
