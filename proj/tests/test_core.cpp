#include "oracles.hpp"

#include <ferrodim/core.hpp>

#include <doctest.h>

using namespace ferrodim;

TEST_CASE("digraph construction and bounds")
{
    CHECK_THROWS_AS(Digraph(17), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(-1), std::invalid_argument);
    Digraph d(3);
    CHECK_THROWS_AS(d.set(3, 0), std::out_of_range);
    CHECK_THROWS_AS(Digraph::from_rows({"10", "1"}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph::from_rows({"12", "00"}), std::invalid_argument);

    auto e = Digraph::from_rows({"110", "001", "000"});
    CHECK(e.arc_count() == 3);
    CHECK(e.zero_count() == 6);
    CHECK(e.column(2) == vertex_set({1}));
    CHECK(e.arcs() == std::vector<ZeroPosition>{{0, 0}, {0, 1}, {1, 2}});
    CHECK(e.zeros().front() == ZeroPosition{0, 2});
    CHECK(entry_name({0, 2}) == "ac");
}

TEST_CASE("reflexive graph validation")
{
    CHECK_THROWS_AS(ReflexiveGraph(Digraph::from_rows({"11", "01"})), std::invalid_argument);
    CHECK_THROWS_AS(ReflexiveGraph(Digraph::from_rows({"10", "00"})), std::invalid_argument);
    auto p3 = patterns::path(3);
    CHECK(p3.non_edges() == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(patterns::cycle(4).non_edges().size() == 2);
    CHECK(patterns::complete(5).is_complete());
    CHECK(ReflexiveGraph::edgeless(3).non_edges().size() == 3);
}

TEST_CASE("complement flips the diagonal")
{
    auto k3 = patterns::complete(3).digraph();
    CHECK(complement(k3) == Digraph(3));
    CHECK(complement(k3).is_loopless());
    CHECK(complement(Digraph(2)) == Digraph::full(2));
    CHECK(complement(patterns::cycle(4).digraph()).is_loopless());
}

TEST_CASE("intersect and unite small cases")
{
    auto id = Digraph::from_rows({"10", "01"});
    CHECK(intersect({id, Digraph(2)}) == Digraph(2));
    CHECK(unite({id, complement(id)}) == Digraph::full(2));
    CHECK(intersect({id, id}) == id);
    CHECK_THROWS_AS(intersect(std::span<const Digraph>{}), std::invalid_argument);
    CHECK_THROWS_AS(intersect({Digraph(2), Digraph(3)}), std::invalid_argument);
}

TEST_CASE("involutions and lattice laws on random digraphs")
{
    std::mt19937_64 rng(11);
    for (int i = 0 ; i < 500 ; ++i) {
        int n = 1 + static_cast<int>(rng() % 7);
        auto a = oracle::random_digraph(rng, n), b = oracle::random_digraph(rng, n), c = oracle::random_digraph(rng, n);
        CHECK(complement(complement(a)) == a);
        CHECK(transpose(transpose(a)) == a);
        CHECK(transpose(intersect({a, b})) == intersect({transpose(a), transpose(b)}));
        CHECK(intersect({a, b}) == intersect({b, a}));
        CHECK(intersect({intersect({a, b}), c}) == intersect({a, intersect({b, c})}));
        CHECK(unite({unite({a, b}), c}) == unite({a, unite({b, c})}));
        CHECK(unite({a, a}) == a);
        CHECK(complement(unite({a, b})) == intersect({complement(a), complement(b)}));
    }
}

TEST_CASE("induced subdigraphs")
{
    auto d = Digraph::from_rows({"0100", "0010", "0001", "1000"});
    CHECK(induced(d, {0, 1}) == Digraph::from_rows({"01", "00"}));
    CHECK(induced(d, {3, 0}) == Digraph::from_rows({"00", "10"}));
    CHECK_THROWS_AS(induced(d, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(induced(d, {4}), std::out_of_range);
}

TEST_CASE("bigraph padding and complement")
{
    auto b = Bigraph::from_rows({"101"});
    auto d = bigraph_to_digraph(b);
    CHECK(d.size() == 3);
    CHECK(d == Digraph::from_rows({"101", "000", "000"}));
    CHECK(complement(b) == Bigraph::from_rows({"010"}));
    CHECK(b.zero_count() == 1);
}

TEST_CASE("canonical form is a complete isomorphism invariant")
{
    std::mt19937_64 rng(5);
    for (int i = 0 ; i < 300 ; ++i) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto d = oracle::random_digraph(rng, n);
        auto p = oracle::random_permutation(rng, n);
        CHECK(canonical_form(relabel(d, p)) == canonical_form(d));
    }
    // Distinct forms exactly for non-isomorphic pairs, exhaustively on two vertices.
    auto all = oracle::all_digraphs(2);
    for (const auto & a : all)
        for (const auto & b : all)
            CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    CHECK_THROWS_AS(canonical_form(Digraph(8)), std::invalid_argument);
}

TEST_CASE("pattern library")
{
    auto arcs_2k2 = patterns::disjoint_arcs();
    CHECK(arcs_2k2.arcs() == std::vector<ZeroPosition>{{0, 1}, {2, 3}});
    CHECK(patterns::couple_identity() == Digraph::from_rows({"10", "01"}));
    CHECK(patterns::couple_swap() == Digraph::from_rows({"01", "10"}));
    CHECK(patterns::claw().non_edges().size() == 3);
    CHECK(patterns::cycle(6).digraph() == Digraph::from_rows({"110001", "111000", "011100", "001110", "000111", "100011"}));
}
