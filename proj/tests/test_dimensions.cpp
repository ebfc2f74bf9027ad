#include "oracles.hpp"

#include <ferrodim/dimensions.hpp>
#include <ferrodim/recognition.hpp>

#include <doctest.h>

using namespace ferrodim;

namespace
{
    auto bigraph_ferrers(const Bigraph & b) -> bool
    {
        for (int x = 0 ; x < b.rows() ; ++x)
            for (int y = 0 ; y < b.rows() ; ++y) {
                auto a = b.row(x), c = b.row(y);
                if ((a & ~c) && (c & ~a))
                    return false;
            }
        return true;
    }

    /// Two-colour the zeros so that the complement of each colour class is Ferrers.
    auto brute_interval_bigraph(const Bigraph & b) -> bool
    {
        std::vector<std::pair<int, int>> zeros;
        for (int x = 0 ; x < b.rows() ; ++x)
            for (int y = 0 ; y < b.cols() ; ++y)
                if (! b.has(x, y))
                    zeros.emplace_back(x, y);
        for (std::uint32_t code = 0 ; code < (1u << zeros.size()) ; ++code) {
            auto first = Bigraph::full(b.rows(), b.cols());
            auto second = first;
            for (std::size_t i = 0 ; i < zeros.size() ; ++i)
                ((code >> i) & 1u ? first : second).set(zeros[i].first, zeros[i].second, false);
            if (bigraph_ferrers(first) && bigraph_ferrers(second))
                return true;
        }
        return false;
    }

    auto all_bigraphs(int p, int q) -> std::vector<Bigraph>
    {
        std::vector<Bigraph> result;
        for (std::uint32_t code = 0 ; code < (1u << (p * q)) ; ++code) {
            Bigraph b(p, q);
            for (int k = 0 ; k < p * q ; ++k)
                b.set(k / q, k % q, (code >> k) & 1u);
            result.push_back(b);
        }
        return result;
    }
}

TEST_CASE("cycle fixtures")
{
    auto c4 = patterns::cycle(4), c6 = patterns::cycle(6);
    CHECK(boxicity(c4).boxicity == 2);
    CHECK(boxicity(c6).boxicity == 2);
    auto f4 = ferrers_dimension(c4.digraph());
    CHECK(f4.dimension == 4);
    CHECK(verify_certificate(f4.certificate, c4.digraph()));
    auto f6 = ferrers_dimension(c6.digraph());
    CHECK(f6.dimension == 3);
    CHECK(verify_certificate(f6.certificate, c6.digraph()));
    CHECK(f6.zero_cover.classes.size() == 3);
    for (const auto & cls : f6.zero_cover.classes)
        CHECK(is_ferrers_closed(cls));

    CHECK(boxicity(patterns::complete(5)).boxicity == 0);
    CHECK(boxicity(patterns::path(4)).boxicity == 1);
    CHECK(ferrers_dimension(Digraph::full(4)).dimension == 0);
}

TEST_CASE("Ferrers dimension agrees with intersections of Ferrers digraphs")
{
    for (int n = 1 ; n <= 3 ; ++n)
        for (const auto & d : oracle::all_digraphs(n)) {
            auto r = ferrers_dimension(d);
            CHECK(r.dimension == oracle::ferrers_dimension(d));
            CHECK(verify_certificate(r.certificate, d));
            CHECK(static_cast<int>(r.certificate.factors.size()) == r.dimension);
        }
    std::mt19937_64 rng(31);
    for (int i = 0 ; i < 200 ; ++i) {
        auto d = oracle::random_digraph(rng, 4, 0.6);
        CHECK(ferrers_dimension(d).dimension == oracle::ferrers_dimension(d));
    }
}

TEST_CASE("dimension at most two is bipartiteness of the couple graph")
{
    std::mt19937_64 rng(12);
    for (int i = 0 ; i < 500 ; ++i) {
        auto d = oracle::random_digraph(rng, 2 + static_cast<int>(rng() % 4), 0.7);
        CHECK(ferrers_dim_at_most_2(d) == (ferrers_dimension(d).dimension <= 2));
    }
}

TEST_CASE("boxicity agrees with intersections of interval graphs")
{
    for (int n = 1 ; n <= 5 ; ++n)
        for (const auto & g : oracle::all_graphs(n)) {
            auto r = boxicity(g);
            CHECK(r.boxicity == oracle::boxicity(g));
            CHECK(r.certificate.kind == FactorKind::interval);
            CHECK(verify_certificate(r.certificate, g.digraph()));
        }
}

TEST_CASE("total covering number agrees with a search over ideal subsets")
{
    for (int n = 1 ; n <= 3 ; ++n)
        for (const auto & d : oracle::all_digraphs(n)) {
            auto r = total_covering_number(d);
            CHECK(r.number == oracle::total_covering_number(d));
            CHECK(r.number == ferrers_dimension(d).dimension);
            CHECK(verify_certificate(r.certificate, d));
            for (const auto & s : r.cover.subsets) {
                CHECK(is_total_ideal(r.j, s));
                CHECK(oracle::total_ideal(r.j, s));
            }
        }
}

TEST_CASE("total ideal predicate matches the definition")
{
    std::mt19937_64 rng(9);
    for (int i = 0 ; i < 300 ; ++i) {
        auto d = oracle::random_digraph(rng, 2 + static_cast<int>(rng() % 3), 0.6);
        auto j = j_digraph(complement(d));
        if (j.size() == 0 || j.size() > 12)
            continue;
        std::vector<int> s;
        for (int v = 0 ; v < j.size() ; ++v)
            if (rng() % 2)
                s.push_back(v);
        CHECK(is_total_ideal(j, s) == oracle::total_ideal(j, s));
    }
    CHECK_THROWS_AS(is_total_ideal(j_digraph(Digraph::full(2)), {9}), std::out_of_range);
}

TEST_CASE("chromatic number")
{
    std::mt19937_64 rng(14);
    for (int i = 0 ; i < 300 ; ++i) {
        auto h = couple_graph(oracle::random_digraph(rng, 2 + static_cast<int>(rng() % 3), 0.6));
        auto r = chromatic_number(h);
        CHECK(r.colours == oracle::chromatic_number(h));
        CHECK(is_proper_colouring(h, r.colouring));
    }
    CHECK(chromatic_number(couple_graph(patterns::cycle(4).digraph())).colours == 4);
    CHECK(chromatic_number(couple_graph(Digraph::full(3))).colours == 0);
}

TEST_CASE("coloured example on the 3 x 3 identity")
{
    auto id = Digraph::from_rows({"100", "010", "001"});
    auto h = couple_graph(id);
    std::vector<int> colouring(h.size());
    for (int v = 0 ; v < h.size() ; ++v) {
        auto name = entry_name(h.vertices[v]);
        colouring[v] = name == "ab" || name == "bc" || name == "ca" ? 0 : 1;
    }
    CHECK(is_proper_colouring(h, colouring));
    CHECK_FALSE(is_ferrers_closed({{0, 1}, {1, 2}, {2, 0}}));
    CHECK(is_ferrers_closed({{0, 1}, {1, 2}, {0, 2}}));
    auto r = ferrers_dimension(id);
    CHECK(r.dimension == 2);
    CHECK(verify_certificate(r.certificate, id));
    CHECK(chromatic_number(h).colours == 2);
}

TEST_CASE("symmetric factor dimension")
{
    CHECK(min_symmetric_factor_dimension(patterns::cycle(4)).dimension == 2);
    CHECK(min_symmetric_factor_dimension(patterns::complete(3)).dimension == 0);
    auto p3 = min_symmetric_factor_dimension(patterns::path(3));
    CHECK(p3.dimension == 1);
    CHECK(intersect({p3.witness, transpose(p3.witness)}) == patterns::path(3).digraph());
    CHECK_THROWS_AS(min_symmetric_factor_dimension(ReflexiveGraph::edgeless(5)), std::invalid_argument);
}

TEST_CASE("bigraph Ferrers dimension is boxicity of the completion")
{
    for (int p = 1 ; p <= 2 ; ++p)
        for (int q = 1 ; q <= 3 ; ++q)
            for (const auto & b : all_bigraphs(p, q)) {
                auto r = bigraph_ferrers_dimension(b);
                CHECK(r.dimension == oracle::boxicity(hat(b).graph));
                CHECK(static_cast<int>(r.factors.size()) == r.dimension);
                for (const auto & f : r.factors)
                    CHECK(bigraph_ferrers(f));
            }
    CHECK(bigraph_ferrers_dimension(Bigraph::full(2, 3)).dimension == 0);
    CHECK(bigraph_ferrers_dimension(Bigraph::from_rows({"10", "01"})).dimension == 2);
}

TEST_CASE("interval bigraph witness agrees with a two-colouring search")
{
    for (int p = 1 ; p <= 3 ; ++p)
        for (int q = 1 ; q <= 3 ; ++q)
            for (const auto & b : all_bigraphs(p, q)) {
                auto w = interval_bigraph_witness(b);
                CHECK(w.has_value() == brute_interval_bigraph(b));
                if (w) {
                    CHECK(bigraph_ferrers(w->first));
                    CHECK(bigraph_ferrers(w->second));
                    for (int x = 0 ; x < p ; ++x)
                        for (int y = 0 ; y < q ; ++y) {
                            CHECK((w->first.has(x, y) && w->second.has(x, y)) == b.has(x, y));
                            CHECK((w->first.has(x, y) || w->second.has(x, y)));
                        }
                }
            }
    CHECK_FALSE(interval_bigraph_witness(Bigraph::from_rows({"011", "101", "110"})));
}

TEST_CASE("caps and budgets")
{
    CHECK_THROWS_AS(ferrers_dimension(Digraph(9)), std::invalid_argument);
    CHECK_THROWS_AS(total_covering_number(Digraph(7)), std::invalid_argument);
    CHECK_THROWS_AS(boxicity(ReflexiveGraph::edgeless(8)), std::invalid_argument);
    CHECK_THROWS_AS(bigraph_ferrers_dimension(Bigraph(5, 4)), std::invalid_argument);
    CHECK_THROWS_AS(interval_bigraph_witness(Bigraph(5, 5)), std::invalid_argument);

    SolveOptions tight{1};
    CHECK_THROWS_AS(total_covering_number(patterns::cycle(6).digraph(), tight), BudgetExceeded);
    CHECK_THROWS_AS(ferrers_dimension(patterns::cycle(6).digraph(), tight), BudgetExceeded);
    CHECK(ferrers_dimension(patterns::cycle(6).digraph(), SolveOptions{1000000}).dimension == 3);
}
