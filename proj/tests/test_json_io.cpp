#include "splines/errors.hpp"
#include "splines/json_io.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace splines;
using namespace splines::testing;
using splines::io::json;

TEST(JsonIntegers, SafeRangeIsNumericWiderIsString)
{
    EXPECT_EQ(io::to_json(Integer(12)).dump(), "12");
    EXPECT_EQ(io::to_json(Integer(-7)).dump(), "-7");
    EXPECT_EQ(io::to_json(Integer("9007199254740991")).dump(), "9007199254740991");
    EXPECT_EQ(io::to_json(Integer("9007199254740992")).dump(), "\"9007199254740992\"");
    EXPECT_EQ(io::to_json(Integer("-9007199254740992")).dump(), "\"-9007199254740992\"");
}

TEST(JsonIntegers, ParseBothForms)
{
    EXPECT_EQ(io::integer_from_json(json(42)), 42);
    EXPECT_EQ(io::integer_from_json(json(-42)), -42);
    EXPECT_EQ(io::integer_from_json(json(18446744073709551615ull)), Integer("18446744073709551615"));
    EXPECT_EQ(io::integer_from_json(json("123456789012345678901234567890")),
              Integer("123456789012345678901234567890"));
    EXPECT_THROW(io::integer_from_json(json(1.5)), UsageError);
    EXPECT_THROW(io::integer_from_json(json("12a")), UsageError);
    EXPECT_THROW(io::integer_from_json(json(true)), UsageError);
}

TEST(JsonIntegers, RoundTripAcrossThreshold)
{
    std::mt19937_64 rng(61);
    for (int i = 0; i < 300; ++i) {
        Integer x = Integer(static_cast<unsigned long>(rng() >> (i % 64)));
        x *= Integer(static_cast<unsigned long>(rng() >> (i % 60)));
        if (i % 2)
            x = -x;
        ASSERT_EQ(io::integer_from_json(io::to_json(x)), x);
    }
}

TEST(GraphDocuments, AllFamiliesRoundTrip)
{
    const std::vector<EdgeLabeledGraph> graphs{
        make_cycle(big({2, 3, 5})),
        make_star(big({3, 7, 5, 6})),
        make_wheel(big({2, 3, 5}), big({2, 1, 5})),
        make_complete(big({2, 3, 5}), {big({2, 1, 5}), big({4, 4, 4, 4})}),
        EdgeLabeledGraph::general(4, {{1, 2, 3}, {3, 4, Integer("100000000000000000000")}}),
    };
    for (const auto& g : graphs)
        EXPECT_EQ(io::graph_from_json(io::graph_to_json(g)), g) << io::graph_to_json(g).dump();
}

TEST(GraphDocuments, ParsesDocumentedShapes)
{
    EXPECT_EQ(io::graph_from_json(json::parse(R"({"family":"cycle","labels":[2,3,5]})")), make_cycle(big({2, 3, 5})));
    EXPECT_EQ(io::graph_from_json(json::parse(R"({"family":"general","vertices":3,"edges":[[1,2,"4"],[2,3,6]]})"))
                  .edges()
                  .size(),
              2u);
}

TEST(GraphDocuments, Rejections)
{
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"family":"cycle","labels":[2,3,5],"extra":1})")), UsageError);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"family":"cycle"})")), UsageError);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"family":"hypercube","labels":[2]})")), UsageError);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"labels":[2,3,5]})")), UsageError);
    EXPECT_THROW(io::graph_from_json(json::parse(R"([2,3,5])")), UsageError);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"family":"cycle","labels":[2,0,5]})")), DomainError);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"family":"cycle","labels":[2,3.5,5]})")), UsageError);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"family":"general","vertices":2,"edges":[[1,2]]})")),
                 UsageError);
}

TEST(SplineDocuments, ParseAndEmit)
{
    const auto s = io::spline_from_json(json::parse(R"({"values":[1,"11",-13,17]})"));
    EXPECT_EQ(s, (Spline{1, 11, -13, 17}));
    EXPECT_EQ(io::spline_to_json(s).dump(), R"({"values":[1,11,-13,17]})");
    EXPECT_THROW(io::spline_from_json(json::parse(R"({"values":[1],"k":0})")), UsageError);
    EXPECT_THROW(io::spline_from_json(json::parse(R"({"vals":[1]})")), UsageError);
}

TEST(ResultDocuments, Shapes)
{
    EXPECT_EQ(io::basis_to_json(flowup_basis(big({2, 3, 5}))).dump(),
              R"({"basis":[[1,1,1],[0,2,5],[0,0,15]],"labels":[2,3,5]})");
    EXPECT_EQ(io::decomposition_to_json({big({1, 1, 3, 2})}).dump(), R"({"coefficients":[1,1,3,2]})");
    EXPECT_EQ(io::verdict_to_json(Verdict::ok()).dump(), R"({"valid":true})");
    EXPECT_EQ(io::verdict_to_json(Verdict{Violation{1, 1, 2, 2}}).dump(),
              R"({"edge":1,"label":2,"u":1,"v":2,"valid":false})");
    EXPECT_EQ(io::crt_to_json(CrtSolution{10, 210}, "value").dump(), R"({"modulus":210,"solvable":true,"value":10})");
    EXPECT_EQ(io::crt_to_json(std::nullopt, "value").dump(), R"({"solvable":false})");
}
