#pragma once

#include <ferrodim/core.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace ferrodim
{
    /**
     * Row and column orders under which the matrix is a staircase: every
     * row's ones form a prefix of col_order, and the prefix lengths never
     * grow along row_order.
     */
    struct FerrersWitness
    {
        std::vector<int> row_order;
        std::vector<int> col_order;
    };

    struct Interval
    {
        int left = 0;
        int right = 0;

        auto operator== (const Interval &) const -> bool = default;
    };

    /// Closed integer interval per vertex.
    struct IntervalModel
    {
        std::vector<Interval> intervals;

        auto size() const -> int { return static_cast<int>(intervals.size()); }

        /// Intersection graph of the intervals.
        auto graph() const -> ReflexiveGraph;

        auto represents(const ReflexiveGraph & g) const -> bool;
    };

    struct CliqueOrdering
    {
        std::vector<VertexSet> cliques;
    };

    /// A loopless orientation of a symmetric loopless digraph.
    struct Orientation
    {
        Digraph arcs;
        Digraph source;
    };

    using Couple = std::pair<ZeroPosition, ZeroPosition>;

    /// Lexicographically first pair of zeros forming a 2x2 permutation submatrix.
    auto find_couple(const Digraph & d) -> std::optional<Couple>;

    auto is_ferrers(const Digraph & d) -> std::optional<FerrersWitness>;
    auto is_ferrers_bigraph(const Bigraph & b) -> std::optional<FerrersWitness>;

    /// Checks a staircase witness against a digraph or bigraph.
    auto is_staircase(const Digraph & d, const FerrersWitness & w) -> bool;
    auto is_staircase(const Bigraph & b, const FerrersWitness & w) -> bool;

    auto is_oriented(const Digraph & d) -> bool;
    auto is_transitive(const Digraph & d) -> bool;
    auto is_transitively_oriented(const Digraph & d) -> bool;

    /**
     * Some transitive orientation of a symmetric loopless digraph, found by
     * backtracking over edge directions with forcing. Throws
     * std::invalid_argument if g is not symmetric and loopless.
     */
    auto transitive_orientation(const Digraph & g) -> std::optional<Orientation>;

    /// Maximal cliques of the loopless skeleton, sorted by member list.
    auto maximal_cliques(const ReflexiveGraph & g) -> std::vector<VertexSet>;

    /// Lexicographically least ordering in which every vertex occupies a contiguous run.
    auto consecutive_arrangement(const std::vector<VertexSet> & cliques, int n) -> std::optional<CliqueOrdering>;

    /// Model built from a consecutive clique ordering, one-based clique indices.
    auto is_interval(const ReflexiveGraph & g) -> std::optional<IntervalModel>;

    inline constexpr int max_quasi_linear_vertices = 8;

    /**
     * Simultaneous row/column order under which the ones right of the
     * diagonal are consecutive in every row. Throws std::invalid_argument
     * for n > 8.
     */
    auto quasi_linear_order(const ReflexiveGraph & g) -> std::optional<std::vector<int>>;

    auto has_quasi_linear_property(const ReflexiveGraph & g, const std::vector<int> & order) -> bool;

    inline constexpr int max_induced_host_vertices = 10;

    /// Injective map from pattern vertices into host vertices, or nothing.
    auto contains_induced(const Digraph & host, const Digraph & pattern) -> std::optional<std::vector<int>>;

    /// Loopless, transitive, and ax, by in E implies ay or bx in E.
    auto is_interval_order(const Digraph & d) -> bool;

    /// Interval and claw-free.
    auto is_indifference(const ReflexiveGraph & g) -> bool;
}
