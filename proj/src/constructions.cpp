#include <ferrodim/constructions.hpp>

#include <algorithm>
#include <stdexcept>
#include <tuple>

using namespace ferrodim;

namespace
{
    auto lookup(const std::vector<ZeroPosition> & list, ZeroPosition z) -> std::optional<int>
    {
        auto it = std::lower_bound(list.begin(), list.end(), z);
        if (it == list.end() || *it != z)
            return std::nullopt;
        return static_cast<int>(it - list.begin());
    }

    auto is_clique(const ReflexiveGraph & g, VertexSet s) -> bool
    {
        for (int v : members(s))
            if (s & ~g.neighbourhood(v))
                return false;
        return true;
    }
}

auto PositionGraph::edge_count() const -> int
{
    int c = 0;
    for (const auto & row : adjacency)
        c += static_cast<int>(row.count());
    return c / 2;
}

auto PositionGraph::index_of(ZeroPosition z) const -> std::optional<int>
{
    return lookup(vertices, z);
}

auto JDigraph::index_of(ZeroPosition z) const -> std::optional<int>
{
    return lookup(arcs, z);
}

auto ferrodim::couple_graph(const Digraph & d) -> CoupleGraph
{
    CoupleGraph h;
    h.vertices = d.zeros();
    h.adjacency.assign(h.vertices.size(), PositionSet{});
    for (int i = 0 ; i < h.size() ; ++i)
        for (int j = i + 1 ; j < h.size() ; ++j) {
            auto [a, b] = h.vertices[i];
            auto [c, e] = h.vertices[j];
            if (a != c && b != e && d.has(a, e) && d.has(c, b)) {
                h.adjacency[i][j] = true;
                h.adjacency[j][i] = true;
            }
        }
    return h;
}

auto ferrodim::j_digraph(const Digraph & d) -> JDigraph
{
    JDigraph j;
    j.arcs = d.arcs();
    j.arrows.assign(j.arcs.size(), PositionSet{});
    for (int s = 0 ; s < j.size() ; ++s)
        for (int t = 0 ; t < j.size() ; ++t)
            if (s != t && d.has(j.arcs[s].row, j.arcs[t].col))
                j.arrows[s][t] = true;
    return j;
}

auto ferrodim::undirected_skeleton(const JDigraph & j) -> PositionGraph
{
    PositionGraph g;
    g.vertices = j.arcs;
    g.adjacency.assign(j.size(), PositionSet{});
    for (int s = 0 ; s < j.size() ; ++s)
        for (int t = 0 ; t < j.size() ; ++t)
            if (j.has_arrow(s, t)) {
                g.adjacency[s][t] = true;
                g.adjacency[t][s] = true;
            }
    return g;
}

auto ferrodim::complement(const PositionGraph & g) -> PositionGraph
{
    PositionGraph r;
    r.vertices = g.vertices;
    r.adjacency.assign(g.size(), PositionSet{});
    for (int i = 0 ; i < g.size() ; ++i)
        for (int j = 0 ; j < g.size() ; ++j)
            if (i != j && ! g.adjacent(i, j))
                r.adjacency[i][j] = true;
    return r;
}

auto ferrodim::hat(const Bigraph & b) -> HatGraph
{
    const int p = b.rows(), q = b.cols();
    if (p + q > max_vertices)
        throw std::invalid_argument("two-clique completion needs p + q <= 16");

    Digraph d(p + q);
    VertexSet xs = low_bits(p);
    VertexSet ys = low_bits(p + q) & ~xs;
    for (int x = 0 ; x < p ; ++x)
        d.set_row(x, xs | (b.row(x) << p));
    for (int y = 0 ; y < q ; ++y)
        d.set_row(p + y, ys | b.column(y));
    return HatGraph{ReflexiveGraph(d), TwoCliqueCover{xs, ys}};
}

auto ferrodim::is_two_clique_cover(const ReflexiveGraph & g, const TwoCliqueCover & cover) -> bool
{
    return (cover.x & cover.y) == 0
        && (cover.x | cover.y) == low_bits(g.size())
        && is_clique(g, cover.x)
        && is_clique(g, cover.y);
}

auto ferrodim::two_clique_to_ferrers(const ReflexiveGraph & g, const TwoCliqueCover & cover) -> FerrersExtraction
{
    if (! is_two_clique_cover(g, cover))
        throw std::invalid_argument("cover is not two disjoint cliques covering every vertex");

    auto cliques = maximal_cliques(g);
    auto ordering = consecutive_arrangement(cliques, g.size());
    if (! ordering)
        throw std::invalid_argument("graph is not an interval graph");

    const int r = static_cast<int>(ordering->cliques.size());
    IntervalModel model;
    model.intervals.assign(g.size(), Interval{0, 0});
    for (int c = 0 ; c < r ; ++c)
        for (int v : members(ordering->cliques[c])) {
            if (model.intervals[v].left == 0)
                model.intervals[v].left = c + 1;
            model.intervals[v].right = c + 1;
        }

    auto first_containing = [&] (VertexSet s) {
        if (s == 0)
            return 1;
        for (int c = 0 ; c < r ; ++c)
            if ((s & ~ordering->cliques[c]) == 0)
                return c + 1;
        throw std::logic_error("clique is not contained in any maximal clique");
    };
    const int i = first_containing(cover.x);
    const int j = first_containing(cover.y);

    FerrersExtraction result;
    result.x_order = members(cover.x);
    result.y_order = members(cover.y);

    if (i == j) {
        // Both cliques sit in one maximal clique, so g is complete.
        result.block = Bigraph::full(set_size(cover.x), set_size(cover.y));
        result.model.intervals.assign(g.size(), Interval{1, 1});
        return result;
    }

    // For i < j the X intervals become [i, min(right, j)] and the Y intervals [max(left, i), j]; mirrored for i > j.
    auto clamp = [&] (VertexSet early, VertexSet late, int lo, int hi) {
        for (int v : members(early)) {
            auto & iv = model.intervals[v];
            iv.left = lo;
            iv.right = std::min(iv.right, hi);
        }
        for (int v : members(late)) {
            auto & iv = model.intervals[v];
            iv.left = std::max(iv.left, lo);
            iv.right = hi;
        }
    };
    if (i < j)
        clamp(cover.x, cover.y, i, j);
    else
        clamp(cover.y, cover.x, j, i);

    if (! model.represents(g))
        throw std::logic_error("clamped interval model no longer represents the graph");

    auto lexicographic = [&] (int a, int b) {
        const auto & ia = model.intervals[a];
        const auto & ib = model.intervals[b];
        return std::tie(ia.left, ia.right, a) < std::tie(ib.left, ib.right, b);
    };
    std::sort(result.x_order.begin(), result.x_order.end(), lexicographic);
    std::sort(result.y_order.begin(), result.y_order.end(), lexicographic);

    result.block = Bigraph(set_size(cover.x), set_size(cover.y));
    for (int a = 0 ; a < result.block.rows() ; ++a)
        for (int b = 0 ; b < result.block.cols() ; ++b)
            result.block.set(a, b, g.adjacent(result.x_order[a], result.y_order[b]));
    result.model = std::move(model);
    return result;
}

auto ferrodim::ferrers_factor(const IntervalModel & model) -> Digraph
{
    const int n = model.size();
    Digraph f = Digraph::full(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = 0 ; v < n ; ++v)
            if (model.intervals[u].right < model.intervals[v].left)
                f.set(u, v, false);
    return f;
}
