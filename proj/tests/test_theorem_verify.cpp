#include <doctest.h>

#include "curvlab/curvature_cd.hpp"
#include "curvlab/generators.hpp"
#include "curvlab/theorem_verify.hpp"
#include "oracles.hpp"

using namespace curvlab;
using doctest::Approx;

TEST_CASE("cd bound from neighbor degrees") {
    CHECK(cd_bound_girth5(gen::star(3), 0) == Approx(1.0));     // leaves have degree 1
    CHECK(cd_bound_girth5(gen::cycle(6), 0) == Approx(0.0));
    CHECK(cd_bound_girth5(gen::petersen(), 0) == Approx(-1.0 / 3.0));
    // Leaf of a star: the only neighbor has degree 3.
    CHECK(cd_bound_girth5(gen::star(3), 1) == Approx(-1.0 / 3.0));
    CHECK(cde_bound_girth5(gen::petersen(), 0) == -2.5);
    CHECK(cde_bound_girth5(gen::star(6), 0) == -4.0);
}

TEST_CASE("witness values") {
    CHECK(cd_witness_value(gen::star(3), 0, 0) == Approx(1.0).epsilon(1e-14));
    CHECK(cd_witness_value(gen::cycle(6), 2, 1) == Approx(0.0));
    CHECK(cd_witness_value(gen::petersen(), 7, 2) == Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(cd_witness_value(gen::complete(3), 0, 0), PreconditionFailed);
    CHECK_THROWS_AS(cd_witness_value(gen::cycle(4), 0, 0), PreconditionFailed);
    CHECK_THROWS_AS(cd_witness_value(gen::petersen(), 0, 3), std::out_of_range);

    for (const Graph& g : oracle::random_girth5_graphs(5, 300)) {
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
            const auto& nbrs = g.neighbors(x);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const double k = static_cast<double>(g.degree(nbrs[i]));
                CHECK(std::abs(cd_witness_value(g, x, i) + (k - 2.0) / k) <= 1e-12);
            }
        }
    }
}

TEST_CASE("cd theorem holds on trees and girth-5 graphs") {
    std::vector<Graph> corpus = oracle::random_trees(6, 40);
    corpus.push_back(gen::petersen());
    for (const Graph& g : oracle::random_girth5_graphs(6, 70)) corpus.push_back(g);
    for (const Graph& g : corpus) {
        const CurvatureReport r = verify_cd_theorem(g);
        CHECK_FALSE(r.any_fail());
        REQUIRE(r.records.size() == g.vertex_count());
        for (const VertexReport& v : r.records) {
            CHECK(v.verdict == Verdict::Pass);
            REQUIRE(v.cd_computed.has_value());
            CHECK(*v.cd_margin == *v.cd_computed - v.cd_bound);
            CHECK(*v.cd_margin >= kMarginTolerance);
            CHECK_FALSE(v.witness.has_value());
        }
    }
}

TEST_CASE("tightness on stars and cycles") {
    for (const Graph& g : {gen::star(3), gen::cycle(6), gen::cycle(9)}) {
        for (const VertexReport& v : verify_cd_theorem(g).records) {
            CHECK(std::abs(*v.cd_margin) <= 1e-8);
        }
    }
}

TEST_CASE("precondition gating") {
    const CurvatureReport tri = verify_theorems(gen::complete(3), Theorem::Both);
    CHECK(tri.all_precondition_not_met());
    for (const VertexReport& v : tri.records) {
        CHECK(v.verdict == Verdict::PreconditionNotMet);
        // Numbers are still reported for information.
        CHECK(v.cd_computed.has_value());
        CHECK(v.cde_sampled_min.has_value());
        CHECK_FALSE(v.witness.has_value());
        CHECK_FALSE(v.tight);
    }

    // A pendant path on a triangle: the path tip has infinite vertex girth,
    // the triangle vertices do not.
    const Graph g = parse_edge_list("0 1\n1 2\n2 0\n2 3\n3 4\n4 5");
    const CurvatureReport local = verify_cd_theorem(g);
    CHECK(local.records[0].verdict == Verdict::PreconditionNotMet);
    CHECK(local.records[5].verdict == Verdict::Pass);
    CHECK_FALSE(local.all_precondition_not_met());

    VerifyOptions global;
    global.global_girth = true;
    CHECK(verify_cd_theorem(g, global).all_precondition_not_met());

    VerifyOptions strict;
    strict.min_girth = 6;
    const CurvatureReport c5 = verify_cd_theorem(gen::cycle(5), strict);
    CHECK(c5.all_precondition_not_met());
}

TEST_CASE("cde theorem on small examples") {
    for (const Graph& g : {gen::star(3), gen::path(5), gen::petersen()}) {
        const CurvatureReport r = verify_cde_theorem(g, 2000, 42);
        CHECK_FALSE(r.any_fail());
        CHECK(r.seed == std::optional<std::uint64_t>(42));
        for (const VertexReport& v : r.records) {
            if (v.verdict == Verdict::PreconditionNotMet) continue;
            CHECK(v.cde_bound == -static_cast<double>(g.degree(v.vertex)) / 2.0 - 1.0);
            REQUIRE(v.cde_sampled_min.has_value());
            CHECK(*v.cde_margin >= kMarginTolerance);
            CHECK(v.samples_used == std::optional<std::size_t>(2000));
        }
    }
}

TEST_CASE("verification is deterministic for a fixed seed") {
    const Graph g = gen::random_with_girth(25, 30, 5, 3).graph;
    const CurvatureReport a = verify_theorems(g, Theorem::Both, {5, false, 300, 9});
    const CurvatureReport b = verify_theorems(g, Theorem::Both, {5, false, 300, 9});
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].cd_computed == b.records[i].cd_computed);
        CHECK(a.records[i].cde_sampled_min == b.records[i].cde_sampled_min);
        CHECK(a.records[i].vertex == i);
    }
}

TEST_CASE("verdict strings") {
    CHECK(to_string(Verdict::Pass) == "pass");
    CHECK(to_string(Verdict::Fail) == "fail");
    CHECK(to_string(Verdict::PreconditionNotMet) == "precondition_not_met");
}
