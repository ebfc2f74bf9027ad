#include "oracles.hpp"

#include <ferrodim/constructions.hpp>
#include <ferrodim/recognition.hpp>

#include <doctest.h>

using namespace ferrodim;

namespace
{
    auto edge_names(const PositionGraph & h) -> std::set<std::pair<std::string, std::string>>
    {
        std::set<std::pair<std::string, std::string>> result;
        for (int i = 0 ; i < h.size() ; ++i)
            for (int j = i + 1 ; j < h.size() ; ++j)
                if (h.adjacent(i, j))
                    result.emplace(entry_name(h.vertices[i]), entry_name(h.vertices[j]));
        return result;
    }

    auto arrow_names(const JDigraph & j) -> std::set<std::pair<std::string, std::string>>
    {
        std::set<std::pair<std::string, std::string>> result;
        for (int s = 0 ; s < j.size() ; ++s)
            for (int t = 0 ; t < j.size() ; ++t)
                if (j.has_arrow(s, t))
                    result.emplace(entry_name(j.arcs[s]), entry_name(j.arcs[t]));
        return result;
    }
}

TEST_CASE("couple graph examples")
{
    auto h = couple_graph(Digraph::from_rows({"100", "010", "001"}));
    CHECK(h.size() == 6);
    CHECK(edge_names(h) == std::set<std::pair<std::string, std::string>>{{"ab", "ba"}, {"ac", "ca"}, {"bc", "cb"}});

    auto k4 = couple_graph(patterns::cycle(4).digraph());
    CHECK(k4.size() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(couple_graph(Digraph::full(3)).size() == 0);
}

TEST_CASE("couple graph matches the definition")
{
    std::mt19937_64 rng(2);
    for (int i = 0 ; i < 300 ; ++i) {
        auto d = oracle::random_digraph(rng, 1 + static_cast<int>(rng() % 6));
        auto h = couple_graph(d);
        auto zeros = d.zeros();
        REQUIRE(h.vertices == zeros);
        for (int x = 0 ; x < h.size() ; ++x)
            for (int y = 0 ; y < h.size() ; ++y) {
                auto [a, b] = zeros[x];
                auto [c, e] = zeros[y];
                bool couple = a != c && b != e && d.has(a, e) && d.has(c, b);
                CHECK(h.adjacent(x, y) == couple);
            }
    }
}

TEST_CASE("J digraph examples")
{
    CHECK(j_digraph(Digraph::from_rows({"01", "00"})).size() == 1);
    CHECK(arrow_names(j_digraph(Digraph::from_rows({"01", "00"}))).empty());
    CHECK(arrow_names(j_digraph(Digraph::from_rows({"01", "10"}))).empty());

    Digraph d(4);
    d.set(0, 1);
    d.set(2, 1);
    d.set(0, 3);
    std::set<std::pair<std::string, std::string>> want{{"ab", "ad"}, {"ab", "cb"}, {"ad", "ab"}, {"ad", "cb"}, {"cb", "ab"}};
    CHECK(arrow_names(j_digraph(d)) == want);
}

TEST_CASE("skeleton of J of the complement is the complement of the couple graph")
{
    auto check = [] (const Digraph & d) {
        auto skeleton = undirected_skeleton(j_digraph(complement(d)));
        auto h = couple_graph(d);
        auto co = complement(h);
        REQUIRE(skeleton.vertices == co.vertices);
        for (int i = 0 ; i < co.size() ; ++i)
            for (int j = 0 ; j < co.size() ; ++j)
                CHECK(skeleton.adjacent(i, j) == co.adjacent(i, j));
    };
    for (int n = 1 ; n <= 3 ; ++n)
        for (const auto & d : oracle::all_digraphs(n))
            check(d);
    std::mt19937_64 rng(17);
    for (int i = 0 ; i < 500 ; ++i)
        check(oracle::random_digraph(rng, 4 + static_cast<int>(rng() % 2)));

    CHECK(undirected_skeleton(j_digraph(Digraph(3))).size() == 0);
    CHECK(undirected_skeleton(j_digraph(Digraph::from_rows({"01", "00"}))).edge_count() == 0);
}

TEST_CASE("J of a subdigraph is a subdigraph of J")
{
    std::mt19937_64 rng(23);
    for (int i = 0 ; i < 300 ; ++i) {
        auto d = oracle::random_digraph(rng, 1 + static_cast<int>(rng() % 5));
        auto sub = intersect({d, oracle::random_digraph(rng, d.size())});
        auto jd = j_digraph(d), js = j_digraph(sub);
        for (int s = 0 ; s < js.size() ; ++s)
            for (int t = 0 ; t < js.size() ; ++t)
                if (js.has_arrow(s, t))
                    CHECK(jd.has_arrow(*jd.index_of(js.arcs[s]), *jd.index_of(js.arcs[t])));
    }
}

TEST_CASE("two-clique completion")
{
    auto k2 = hat(Bigraph::from_rows({"1"}));
    CHECK(k2.graph == patterns::complete(2));

    auto c4 = hat(Bigraph::from_rows({"10", "01"}));
    CHECK(oracle::isomorphic(c4.graph.digraph(), patterns::cycle(4).digraph()));
    CHECK_FALSE(is_interval(c4.graph));

    auto staircase = hat(Bigraph::from_rows({"10", "11"}));
    CHECK(is_interval(staircase.graph));
    CHECK(staircase.cover.x == 0b0011);
    CHECK(staircase.cover.y == 0b1100);
    CHECK(is_two_clique_cover(staircase.graph, staircase.cover));
    CHECK_THROWS_AS(hat(Bigraph(9, 8)), std::invalid_argument);

    std::mt19937_64 rng(1);
    for (int i = 0 ; i < 300 ; ++i) {
        auto b = oracle::random_bigraph(rng, 1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4));
        auto h = hat(b);
        CHECK(is_two_clique_cover(h.graph, h.cover));
        if (is_ferrers_bigraph(b))
            CHECK(is_interval(h.graph));
    }
}

TEST_CASE("two-clique interval graph to Ferrers block")
{
    auto p3 = two_clique_to_ferrers(patterns::path(3), TwoCliqueCover{0b001, 0b110});
    CHECK(p3.block == Bigraph::from_rows({"10"}));
    CHECK(p3.y_order == std::vector<int>{1, 2});
    CHECK(p3.model.represents(patterns::path(3)));

    auto k4 = two_clique_to_ferrers(patterns::complete(4), TwoCliqueCover{0b0011, 0b1100});
    CHECK(k4.block == Bigraph::full(2, 2));

    CHECK_THROWS_AS(two_clique_to_ferrers(patterns::cycle(4), TwoCliqueCover{0b0011, 0b1100}), std::invalid_argument);
    CHECK_THROWS_AS(two_clique_to_ferrers(patterns::path(3), TwoCliqueCover{0b101, 0b010}), std::invalid_argument);
    CHECK_THROWS_AS(two_clique_to_ferrers(patterns::path(3), TwoCliqueCover{0b001, 0b010}), std::invalid_argument);

    // Round trip through the completion of every Ferrers bigraph up to 3 x 3.
    for (int p = 1 ; p <= 3 ; ++p)
        for (int q = 1 ; q <= 3 ; ++q)
            for (std::uint32_t code = 0 ; code < (1u << (p * q)) ; ++code) {
                Bigraph b(p, q);
                for (int k = 0 ; k < p * q ; ++k)
                    b.set(k / q, k % q, (code >> k) & 1u);
                if (! is_ferrers_bigraph(b))
                    continue;
                auto h = hat(b);
                auto e = two_clique_to_ferrers(h.graph, h.cover);
                CHECK(is_ferrers_bigraph(e.block));
                CHECK(e.model.represents(h.graph));
                for (int x = 0 ; x < p ; ++x)
                    for (int y = 0 ; y < q ; ++y)
                        CHECK(e.block.has(x, y) == b.has(e.x_order[x], e.y_order[y] - p));
            }
}

TEST_CASE("Ferrers factor of an interval model")
{
    auto p3 = ferrers_factor(*is_interval(patterns::path(3)));
    auto want = Digraph::full(3);
    want.set(0, 2, false);
    CHECK(p3 == want);
    CHECK(ferrers_factor(IntervalModel{{{1, 1}}}) == Digraph::full(1));
    auto apart = ferrers_factor(IntervalModel{{{1, 1}, {2, 2}}});
    CHECK(apart.arc_count() == 3);
    CHECK(intersect({apart, transpose(apart)}) == ReflexiveGraph::edgeless(2).digraph());

    for (int n = 1 ; n <= 6 ; ++n)
        for (const auto & g : oracle::all_graphs(n)) {
            auto model = is_interval(g);
            if (! model)
                continue;
            auto f = ferrers_factor(*model);
            CHECK(f.is_reflexive());
            CHECK(oracle::ferrers(f));
            CHECK(intersect({f, transpose(f)}) == g.digraph());
        }
}
