#include "oracles.hpp"

#include <ferrodim/explorer.hpp>
#include <ferrodim/recognition.hpp>

#include <json.hpp>

#include <doctest.h>

using namespace ferrodim;

namespace
{
    auto small_config() -> CampaignConfig
    {
        CampaignConfig c;
        c.seed = 7;
        c.threads = 2;
        c.symmetric_factor_n = 4;
        c.characterization_n = 3;
        c.cautionary_search_n = 3;
        c.co_interval_n = 4;
        c.bigraph_side = 2;
        c.boxicity_factor_n = 4;
        c.bounds_n = 4;
        c.total_cover_exhaustive_n = 2;
        c.at_most_two_n = 3;
        c.triangle_n = 4;
        c.chi_exhaustive_n = 3;
        c.random_samples = 20;
        c.fuzz_samples = 200;
        return c;
    }
}

TEST_CASE("isomorph-free enumeration counts")
{
    CHECK(enumerate_digraphs(1, false, false).size() == 2);
    CHECK(enumerate_digraphs(2, false, true).size() == 10);
    CHECK(enumerate_digraphs(3, false, true).size() == 104);
    CHECK(enumerate_digraphs(3, false, false).size() == 512);
    CHECK(enumerate_digraphs(2, true, true).size() == 3);
    CHECK(enumerate_digraphs(3, true, true).size() == 16);
    CHECK(enumerate_digraphs(4, true, true).size() == 218);

    CHECK(enumerate_reflexive_graphs(3, true).size() == 4);
    CHECK(enumerate_reflexive_graphs(4, true).size() == 11);
    CHECK(enumerate_reflexive_graphs(5, true).size() == 34);
    CHECK(enumerate_reflexive_graphs(6, true).size() == 156);
    CHECK(enumerate_reflexive_graphs(4, false).size() == 64);

    CHECK(enumerate_bigraphs(1, 1, true).size() == 2);
    CHECK(enumerate_bigraphs(2, 2, true).size() == 7);
    CHECK(enumerate_bigraphs(2, 3, false).size() == 64);
}

TEST_CASE("enumeration is pairwise non-isomorphic and respects caps")
{
    auto graphs = enumerate_reflexive_graphs(4, true);
    for (std::size_t i = 0 ; i < graphs.size() ; ++i)
        for (std::size_t j = i + 1 ; j < graphs.size() ; ++j)
            CHECK_FALSE(oracle::isomorphic(graphs[i].digraph(), graphs[j].digraph()));

    CHECK_THROWS_AS(enumerate_digraphs(5, false, false), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_reflexive_graphs(7, true), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_bigraphs(4, 1, false), std::invalid_argument);

    auto values = enumerate(EnumSpec{GraphClass::bigraph, 0, 1, 2, false});
    REQUIRE(values.size() == 4);
    CHECK(std::holds_alternative<Bigraph>(values.front()));
    auto loopless = enumerate(EnumSpec{GraphClass::loopless_digraph, 2, 0, 0, false});
    CHECK(loopless.size() == 4);
    for (const auto & v : loopless)
        CHECK(std::get<Digraph>(v).is_loopless());
}

TEST_CASE("report lines are JSON with a fixed key order")
{
    CheckReport r{"symmetric-factor", 12, {"ab"}, CheckStatus::fail, 3, {"n"}};
    auto line = to_json_line(r);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(line.rfind("{\"id\":\"symmetric-factor\",\"status\":\"fail\"", 0) == 0);
    auto j = nlohmann::json::parse(line);
    CHECK(j["instances"] == 12);
    CHECK(j["failures"][0] == "ab");
    CHECK(j["seed"] == 3);
    CHECK(to_string(CheckStatus::counterexample_found) == "counterexample-found");
}

TEST_CASE("every campaign check passes on small parameters")
{
    auto config = small_config();
    auto reports = run_campaign({}, config);
    CHECK(reports.size() == campaign_checks().size());
    for (const auto & r : reports) {
        INFO(to_json_line(r));
        CHECK(r.status != CheckStatus::fail);
        CHECK(r.failures.empty());
        CHECK(r.instances > 0);
    }
    auto table = summary_table(reports);
    CHECK(table.find("boxicity-bounds") != std::string::npos);
    CHECK_THROWS_AS(run_campaign({"nope"}, config), std::invalid_argument);
}

TEST_CASE("campaign output is independent of thread count")
{
    auto one = small_config(), many = small_config();
    one.threads = 1;
    many.threads = 3;
    for (const auto & id : {"total-cover", "certificates", "chi"}) {
        auto a = run_campaign({id}, one), b = run_campaign({id}, many);
        CHECK(to_json_line(a.front()) == to_json_line(b.front()));
    }
    auto again = run_campaign({"certificates"}, one);
    CHECK(to_json_line(again.front()) == to_json_line(run_campaign({"certificates"}, one).front()));
}

TEST_CASE("fixtures")
{
    auto factors = fixtures::c6_ferrers_factors();
    REQUIRE(factors.size() == 3);
    for (const auto & f : factors)
        CHECK(oracle::ferrers(f));
    CHECK(intersect(factors) == patterns::cycle(6).digraph());
    CHECK(fixtures::identity_example_digraph() == Digraph::from_rows({"100", "010", "001"}));
    for (const auto & r : fixtures::run_all()) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("thread count from the environment")
{
    CampaignConfig c;
    c.threads = 5;
    CHECK(worker_count(c) == 5);
    c.threads = 0;
    CHECK(worker_count(c) >= 1);
}
