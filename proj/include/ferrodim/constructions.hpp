#pragma once

#include <ferrodim/core.hpp>
#include <ferrodim/recognition.hpp>

#include <bitset>
#include <optional>
#include <vector>

namespace ferrodim
{
    inline constexpr int max_positions = max_vertices * max_vertices;

    /// Subset of the vertices of a PositionGraph or JDigraph.
    using PositionSet = std::bitset<max_positions>;

    /**
     * Undirected graph whose vertices are entries of a source matrix. Used
     * for the couple graph H(D) and for undirected skeletons of J digraphs.
     */
    struct PositionGraph
    {
        std::vector<ZeroPosition> vertices;
        std::vector<PositionSet> adjacency;

        auto size() const -> int { return static_cast<int>(vertices.size()); }
        auto adjacent(int i, int j) const -> bool { return adjacency[i][j]; }
        auto degree(int i) const -> int { return static_cast<int>(adjacency[i].count()); }
        auto edge_count() const -> int;
        auto index_of(ZeroPosition z) const -> std::optional<int>;
    };

    using CoupleGraph = PositionGraph;

    /// J(D): one vertex per arc of D, arrow ab -> cd iff ab != cd and ad is an arc.
    struct JDigraph
    {
        std::vector<ZeroPosition> arcs;
        std::vector<PositionSet> arrows;

        auto size() const -> int { return static_cast<int>(arcs.size()); }
        auto has_arrow(int i, int j) const -> bool { return arrows[i][j]; }
        auto index_of(ZeroPosition z) const -> std::optional<int>;
    };

    struct TwoCliqueCover
    {
        VertexSet x = 0;
        VertexSet y = 0;
    };

    struct HatGraph
    {
        ReflexiveGraph graph;
        TwoCliqueCover cover;
    };

    struct FerrersExtraction
    {
        /// X x Y block, rows and columns in lexicographic interval order.
        Bigraph block;
        IntervalModel model;
        std::vector<int> x_order;
        std::vector<int> y_order;
    };

    /// H(D) on the zeros of d in row-major order.
    auto couple_graph(const Digraph & d) -> CoupleGraph;

    auto j_digraph(const Digraph & d) -> JDigraph;

    /// Arrows of J(D) with the direction dropped.
    auto undirected_skeleton(const JDigraph & j) -> PositionGraph;

    /// Vertex-set complement on the same position list, no self-pairs.
    auto complement(const PositionGraph & g) -> PositionGraph;

    /**
     * Two-clique completion: partite sets become cliques, loops everywhere.
     * Vertices 0..p-1 are X, p..p+q-1 are Y.
     */
    auto hat(const Bigraph & b) -> HatGraph;

    auto is_two_clique_cover(const ReflexiveGraph & g, const TwoCliqueCover & cover) -> bool;

    /**
     * Extracts the Ferrers X x Y block of a two-clique interval graph by
     * clamping the clique-ordering model. Throws std::invalid_argument if g is
     * not an interval graph or cover is not two disjoint covering cliques.
     */
    auto two_clique_to_ferrers(const ReflexiveGraph & g, const TwoCliqueCover & cover) -> FerrersExtraction;

    /// F with F intersected with its transpose equal to the model's graph; uv is missing iff I_u lies left of I_v.
    auto ferrers_factor(const IntervalModel & model) -> Digraph;
}
