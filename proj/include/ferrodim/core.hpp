#pragma once

/**
 * Dense bit-matrix carriers for digraphs, reflexive undirected graphs and
 * bigraphs. One machine word per row; at most 16 vertices per side.
 */

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ferrodim
{
    inline constexpr int max_vertices = 16;

    /// Bit v set means vertex v is a member.
    using VertexSet = std::uint32_t;

    inline auto set_size(VertexSet s) -> int { return std::popcount(s); }

    inline auto contains(VertexSet s, int v) -> bool { return (s >> v) & 1u; }

    inline auto low_bits(int n) -> VertexSet { return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

    auto members(VertexSet s) -> std::vector<int>;

    auto vertex_set(std::initializer_list<int> vs) -> VertexSet;

    /// Letter used for vertex v in human-readable output (a..p).
    auto vertex_name(int v) -> char;

    struct ZeroPosition
    {
        int row = 0;
        int col = 0;

        auto operator<=> (const ZeroPosition &) const = default;
    };

    /// Two-letter name of a matrix entry, e.g. "ab" for (0,1).
    auto entry_name(ZeroPosition z) -> std::string;

    class Digraph
    {
        public:
            Digraph() = default;
            explicit Digraph(int n);

            static auto full(int n) -> Digraph;

            /// Build from 0/1 strings, one per row.
            static auto from_rows(std::initializer_list<std::string_view> rows) -> Digraph;
            static auto from_rows(std::span<const std::string> rows) -> Digraph;

            auto size() const noexcept -> int { return _n; }
            auto has(int u, int v) const noexcept -> bool { return (_rows[u] >> v) & 1u; }
            auto set(int u, int v, bool value = true) -> void;

            /// Successor set of u.
            auto row(int u) const noexcept -> VertexSet { return _rows[u]; }
            auto set_row(int u, VertexSet bits) -> void;

            /// Predecessor set of v.
            auto column(int v) const -> VertexSet;

            auto vertices() const noexcept -> VertexSet { return low_bits(_n); }

            auto arc_count() const -> int;
            auto zero_count() const -> int { return _n * _n - arc_count(); }

            /// Zero entries in row-major order.
            auto zeros() const -> std::vector<ZeroPosition>;

            /// Arcs (one entries) in row-major order.
            auto arcs() const -> std::vector<ZeroPosition>;

            auto is_symmetric() const -> bool;
            auto is_reflexive() const -> bool;
            auto is_loopless() const -> bool;

            auto operator== (const Digraph &) const -> bool = default;

        private:
            int _n = 0;
            std::array<VertexSet, max_vertices> _rows{};
    };

    /**
     * Undirected graph with a loop at every vertex, stored as its symmetric
     * adjacency matrix with an all-ones diagonal.
     */
    class ReflexiveGraph
    {
        public:
            ReflexiveGraph() = default;

            /// Throws std::invalid_argument unless d is symmetric and reflexive.
            explicit ReflexiveGraph(Digraph d);

            static auto edgeless(int n) -> ReflexiveGraph;
            static auto complete(int n) -> ReflexiveGraph;
            static auto from_edges(int n, std::initializer_list<std::pair<int, int>> edges) -> ReflexiveGraph;

            auto size() const noexcept -> int { return _d.size(); }
            auto adjacent(int u, int v) const noexcept -> bool { return _d.has(u, v); }

            /// Closed neighbourhood: includes v itself.
            auto neighbourhood(int v) const noexcept -> VertexSet { return _d.row(v); }

            auto digraph() const noexcept -> const Digraph & { return _d; }

            /// Unordered non-adjacent pairs (u < v) in lexicographic order.
            auto non_edges() const -> std::vector<std::pair<int, int>>;

            auto is_complete() const -> bool { return _d.zero_count() == 0; }

            auto operator== (const ReflexiveGraph &) const -> bool = default;

        private:
            Digraph _d;
    };

    /// Bigraph B(X, Y, E) by its p x q biadjacency matrix.
    class Bigraph
    {
        public:
            Bigraph() = default;
            Bigraph(int p, int q);

            static auto full(int p, int q) -> Bigraph;
            static auto from_rows(std::initializer_list<std::string_view> rows) -> Bigraph;
            static auto from_rows(int q, std::span<const std::string> rows) -> Bigraph;

            auto rows() const noexcept -> int { return _p; }
            auto cols() const noexcept -> int { return _q; }
            auto has(int x, int y) const noexcept -> bool { return (_bits[x] >> y) & 1u; }
            auto set(int x, int y, bool value = true) -> void;
            auto row(int x) const noexcept -> VertexSet { return _bits[x]; }
            auto column(int y) const -> VertexSet;
            auto zero_count() const -> int;

            auto operator== (const Bigraph &) const -> bool = default;

        private:
            int _p = 0;
            int _q = 0;
            std::array<VertexSet, max_vertices> _bits{};
    };

    /// Flip every bit, diagonal included.
    auto complement(const Digraph & d) -> Digraph;

    /// Bigraph complement (converse): flip every biadjacency bit.
    auto complement(const Bigraph & b) -> Bigraph;

    auto transpose(const Digraph & d) -> Digraph;

    /// Bitwise AND; throws std::invalid_argument on an empty list or mismatched sizes.
    auto intersect(std::span<const Digraph> ds) -> Digraph;
    auto intersect(std::initializer_list<Digraph> ds) -> Digraph;

    /// Bitwise OR, same contract as intersect.
    auto unite(std::span<const Digraph> ds) -> Digraph;
    auto unite(std::initializer_list<Digraph> ds) -> Digraph;

    auto intersect(std::span<const Bigraph> bs) -> Bigraph;

    /// Subdigraph induced by vs, relabelled in ascending vertex order.
    auto induced(const Digraph & d, std::span<const int> vs) -> Digraph;
    auto induced(const Digraph & d, std::initializer_list<int> vs) -> Digraph;

    /// D(G): the digraph with the same adjacency matrix as G.
    auto symmetric_digraph_of(const ReflexiveGraph & g) -> Digraph;

    /// Pads the biadjacency matrix with zero rows or columns to a square.
    auto bigraph_to_digraph(const Bigraph & b) -> Digraph;

    /// Applies the vertex relabelling v -> perm[v] to rows and columns.
    auto relabel(const Digraph & d, std::span<const int> perm) -> Digraph;

    inline constexpr int max_canonical_vertices = 7;

    /**
     * Lexicographically least row-major bit string over all simultaneous row
     * and column permutations. Throws std::invalid_argument for n > 7.
     */
    auto canonical_form(const Digraph & d) -> std::string;

    /// The same minimum packed into an integer, first entry most significant.
    auto canonical_key(const Digraph & d) -> std::uint64_t;

    namespace patterns
    {
        /// Arcs a->b and c->d only.
        auto disjoint_arcs() -> Digraph;

        /// The two 2x2 permutation matrices.
        auto couple_identity() -> Digraph;
        auto couple_swap() -> Digraph;

        auto cycle(int n) -> ReflexiveGraph;
        auto path(int n) -> ReflexiveGraph;
        auto claw() -> ReflexiveGraph;
        auto complete(int n) -> ReflexiveGraph;
    }
}
