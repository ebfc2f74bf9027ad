#include <ferrodim/core.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

using namespace ferrodim;

namespace
{
    auto check_size(int n) -> void
    {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    }

    auto parse_row(std::string_view text, int width) -> VertexSet
    {
        if (static_cast<int>(text.size()) != width)
            throw std::invalid_argument("row '" + std::string(text) + "' does not have " + std::to_string(width) + " entries");
        VertexSet bits = 0;
        for (int i = 0 ; i < width ; ++i) {
            if (text[i] == '1')
                bits |= VertexSet{1} << i;
            else if (text[i] != '0')
                throw std::invalid_argument("row '" + std::string(text) + "' contains a character other than 0 or 1");
        }
        return bits;
    }

    template <typename T_, typename Op_>
    auto fold(std::span<const T_> ds, Op_ op) -> T_
    {
        if (ds.empty())
            throw std::invalid_argument("empty list of graphs");
        T_ result = ds.front();
        for (const auto & d : ds.subspan(1))
            result = op(result, d);
        return result;
    }

    auto combine(const Digraph & a, const Digraph & b, bool conjunction) -> Digraph
    {
        if (a.size() != b.size())
            throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
        Digraph r(a.size());
        for (int u = 0 ; u < a.size() ; ++u)
            r.set_row(u, conjunction ? (a.row(u) & b.row(u)) : (a.row(u) | b.row(u)));
        return r;
    }
}

auto ferrodim::members(VertexSet s) -> std::vector<int>
{
    std::vector<int> result;
    while (s) {
        result.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return result;
}

auto ferrodim::vertex_set(std::initializer_list<int> vs) -> VertexSet
{
    VertexSet s = 0;
    for (int v : vs)
        s |= VertexSet{1} << v;
    return s;
}

auto ferrodim::vertex_name(int v) -> char
{
    return static_cast<char>('a' + v);
}

auto ferrodim::entry_name(ZeroPosition z) -> std::string
{
    return std::string{vertex_name(z.row), vertex_name(z.col)};
}

Digraph::Digraph(int n) :
    _n(n)
{
    check_size(n);
}

auto Digraph::full(int n) -> Digraph
{
    Digraph d(n);
    for (int u = 0 ; u < n ; ++u)
        d._rows[u] = low_bits(n);
    return d;
}

auto Digraph::from_rows(std::initializer_list<std::string_view> rows) -> Digraph
{
    Digraph d(static_cast<int>(rows.size()));
    int u = 0;
    for (auto r : rows)
        d._rows[u++] = parse_row(r, d._n);
    return d;
}

auto Digraph::from_rows(std::span<const std::string> rows) -> Digraph
{
    Digraph d(static_cast<int>(rows.size()));
    for (int u = 0 ; u < d._n ; ++u)
        d._rows[u] = parse_row(rows[u], d._n);
    return d;
}

auto Digraph::set(int u, int v, bool value) -> void
{
    if (u < 0 || v < 0 || u >= _n || v >= _n)
        throw std::out_of_range("entry outside the matrix");
    if (value)
        _rows[u] |= VertexSet{1} << v;
    else
        _rows[u] &= ~(VertexSet{1} << v);
}

auto Digraph::set_row(int u, VertexSet bits) -> void
{
    _rows[u] = bits & vertices();
}

auto Digraph::column(int v) const -> VertexSet
{
    VertexSet c = 0;
    for (int u = 0 ; u < _n ; ++u)
        if (has(u, v))
            c |= VertexSet{1} << u;
    return c;
}

auto Digraph::arc_count() const -> int
{
    int c = 0;
    for (int u = 0 ; u < _n ; ++u)
        c += std::popcount(_rows[u]);
    return c;
}

auto Digraph::zeros() const -> std::vector<ZeroPosition>
{
    std::vector<ZeroPosition> result;
    for (int u = 0 ; u < _n ; ++u)
        for (int v = 0 ; v < _n ; ++v)
            if (! has(u, v))
                result.push_back({u, v});
    return result;
}

auto Digraph::arcs() const -> std::vector<ZeroPosition>
{
    std::vector<ZeroPosition> result;
    for (int u = 0 ; u < _n ; ++u)
        for (int v = 0 ; v < _n ; ++v)
            if (has(u, v))
                result.push_back({u, v});
    return result;
}

auto Digraph::is_symmetric() const -> bool
{
    for (int u = 0 ; u < _n ; ++u)
        if (_rows[u] != column(u))
            return false;
    return true;
}

auto Digraph::is_reflexive() const -> bool
{
    for (int u = 0 ; u < _n ; ++u)
        if (! has(u, u))
            return false;
    return true;
}

auto Digraph::is_loopless() const -> bool
{
    for (int u = 0 ; u < _n ; ++u)
        if (has(u, u))
            return false;
    return true;
}

ReflexiveGraph::ReflexiveGraph(Digraph d) :
    _d(std::move(d))
{
    if (! _d.is_symmetric())
        throw std::invalid_argument("graph adjacency matrix is not symmetric");
    if (! _d.is_reflexive())
        throw std::invalid_argument("graph adjacency matrix has a zero on the diagonal");
}

auto ReflexiveGraph::edgeless(int n) -> ReflexiveGraph
{
    Digraph d(n);
    for (int v = 0 ; v < n ; ++v)
        d.set(v, v);
    return ReflexiveGraph(d);
}

auto ReflexiveGraph::complete(int n) -> ReflexiveGraph
{
    return ReflexiveGraph(Digraph::full(n));
}

auto ReflexiveGraph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) -> ReflexiveGraph
{
    Digraph d = edgeless(n).digraph();
    for (auto [u, v] : edges) {
        d.set(u, v);
        d.set(v, u);
    }
    return ReflexiveGraph(d);
}

auto ReflexiveGraph::non_edges() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> result;
    for (int u = 0 ; u < size() ; ++u)
        for (int v = u + 1 ; v < size() ; ++v)
            if (! adjacent(u, v))
                result.emplace_back(u, v);
    return result;
}

Bigraph::Bigraph(int p, int q) :
    _p(p),
    _q(q)
{
    check_size(p);
    check_size(q);
}

auto Bigraph::full(int p, int q) -> Bigraph
{
    Bigraph b(p, q);
    for (int x = 0 ; x < p ; ++x)
        b._bits[x] = low_bits(q);
    return b;
}

auto Bigraph::from_rows(std::initializer_list<std::string_view> rows) -> Bigraph
{
    int q = rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Bigraph b(static_cast<int>(rows.size()), q);
    int x = 0;
    for (auto r : rows)
        b._bits[x++] = parse_row(r, q);
    return b;
}

auto Bigraph::from_rows(int q, std::span<const std::string> rows) -> Bigraph
{
    Bigraph b(static_cast<int>(rows.size()), q);
    for (int x = 0 ; x < b._p ; ++x)
        b._bits[x] = parse_row(rows[x], q);
    return b;
}

auto Bigraph::set(int x, int y, bool value) -> void
{
    if (x < 0 || y < 0 || x >= _p || y >= _q)
        throw std::out_of_range("entry outside the biadjacency matrix");
    if (value)
        _bits[x] |= VertexSet{1} << y;
    else
        _bits[x] &= ~(VertexSet{1} << y);
}

auto Bigraph::column(int y) const -> VertexSet
{
    VertexSet c = 0;
    for (int x = 0 ; x < _p ; ++x)
        if (has(x, y))
            c |= VertexSet{1} << x;
    return c;
}

auto Bigraph::zero_count() const -> int
{
    int ones = 0;
    for (int x = 0 ; x < _p ; ++x)
        ones += std::popcount(_bits[x]);
    return _p * _q - ones;
}

auto ferrodim::complement(const Digraph & d) -> Digraph
{
    Digraph r(d.size());
    for (int u = 0 ; u < d.size() ; ++u)
        r.set_row(u, ~d.row(u));
    return r;
}

auto ferrodim::complement(const Bigraph & b) -> Bigraph
{
    Bigraph r = Bigraph::full(b.rows(), b.cols());
    for (int x = 0 ; x < b.rows() ; ++x)
        for (int y = 0 ; y < b.cols() ; ++y)
            if (b.has(x, y))
                r.set(x, y, false);
    return r;
}

auto ferrodim::transpose(const Digraph & d) -> Digraph
{
    Digraph r(d.size());
    for (int v = 0 ; v < d.size() ; ++v)
        r.set_row(v, d.column(v));
    return r;
}

auto ferrodim::intersect(std::span<const Digraph> ds) -> Digraph
{
    return fold(ds, [] (const Digraph & a, const Digraph & b) { return combine(a, b, true); });
}

auto ferrodim::intersect(std::initializer_list<Digraph> ds) -> Digraph
{
    return intersect(std::span<const Digraph>(ds.begin(), ds.size()));
}

auto ferrodim::unite(std::span<const Digraph> ds) -> Digraph
{
    return fold(ds, [] (const Digraph & a, const Digraph & b) { return combine(a, b, false); });
}

auto ferrodim::unite(std::initializer_list<Digraph> ds) -> Digraph
{
    return unite(std::span<const Digraph>(ds.begin(), ds.size()));
}

auto ferrodim::intersect(std::span<const Bigraph> bs) -> Bigraph
{
    return fold(bs, [] (const Bigraph & a, const Bigraph & b) {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw std::invalid_argument("bigraph dimension mismatch");
        Bigraph r(a.rows(), a.cols());
        for (int x = 0 ; x < a.rows() ; ++x)
            for (int y = 0 ; y < a.cols() ; ++y)
                r.set(x, y, a.has(x, y) && b.has(x, y));
        return r;
    });
}

auto ferrodim::induced(const Digraph & d, std::span<const int> vs) -> Digraph
{
    std::vector<int> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("repeated vertex in induced subset");
    for (int v : sorted)
        if (v < 0 || v >= d.size())
            throw std::out_of_range("vertex " + std::to_string(v) + " outside the digraph");

    int k = static_cast<int>(sorted.size());
    Digraph r(k);
    for (int i = 0 ; i < k ; ++i)
        for (int j = 0 ; j < k ; ++j)
            if (d.has(sorted[i], sorted[j]))
                r.set(i, j);
    return r;
}

auto ferrodim::induced(const Digraph & d, std::initializer_list<int> vs) -> Digraph
{
    return induced(d, std::span<const int>(vs.begin(), vs.size()));
}

auto ferrodim::symmetric_digraph_of(const ReflexiveGraph & g) -> Digraph
{
    return g.digraph();
}

auto ferrodim::bigraph_to_digraph(const Bigraph & b) -> Digraph
{
    Digraph d(std::max(b.rows(), b.cols()));
    for (int x = 0 ; x < b.rows() ; ++x)
        d.set_row(x, b.row(x));
    return d;
}

auto ferrodim::relabel(const Digraph & d, std::span<const int> perm) -> Digraph
{
    if (static_cast<int>(perm.size()) != d.size())
        throw std::invalid_argument("permutation size does not match the digraph");
    Digraph r(d.size());
    for (int u = 0 ; u < d.size() ; ++u)
        for (int v = 0 ; v < d.size() ; ++v)
            if (d.has(u, v))
                r.set(perm[u], perm[v]);
    return r;
}

auto ferrodim::canonical_key(const Digraph & d) -> std::uint64_t
{
    const int n = d.size();
    if (n > max_canonical_vertices)
        throw std::invalid_argument("canonical form supports at most 7 vertices");

    // perm[i] is the original vertex placed at position i.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t key = 0;
        bool worse = false;
        for (int i = 0 ; i < n && ! worse ; ++i) {
            VertexSet r = d.row(perm[i]);
            for (int j = 0 ; j < n ; ++j)
                key = (key << 1) | ((r >> perm[j]) & 1u);
            // Rows are compared most significant first, so a larger prefix can be abandoned.
            worse = (key << ((n - 1 - i) * n)) > best;
        }
        if (! worse)
            best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? 0 : best;
}

auto ferrodim::canonical_form(const Digraph & d) -> std::string
{
    const int n = d.size();
    std::uint64_t key = canonical_key(d);
    std::string bits(n * n, '0');
    for (int i = 0 ; i < n * n ; ++i)
        if ((key >> (n * n - 1 - i)) & 1u)
            bits[i] = '1';
    return bits;
}

auto patterns::disjoint_arcs() -> Digraph
{
    return Digraph::from_rows({"0100", "0000", "0001", "0000"});
}

auto patterns::couple_identity() -> Digraph
{
    return Digraph::from_rows({"10", "01"});
}

auto patterns::couple_swap() -> Digraph
{
    return Digraph::from_rows({"01", "10"});
}

auto patterns::cycle(int n) -> ReflexiveGraph
{
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least three vertices");
    Digraph d = ReflexiveGraph::edgeless(n).digraph();
    for (int v = 0 ; v < n ; ++v) {
        d.set(v, (v + 1) % n);
        d.set((v + 1) % n, v);
    }
    return ReflexiveGraph(d);
}

auto patterns::path(int n) -> ReflexiveGraph
{
    Digraph d = ReflexiveGraph::edgeless(n).digraph();
    for (int v = 0 ; v + 1 < n ; ++v) {
        d.set(v, v + 1);
        d.set(v + 1, v);
    }
    return ReflexiveGraph(d);
}

auto patterns::claw() -> ReflexiveGraph
{
    return ReflexiveGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
}

auto patterns::complete(int n) -> ReflexiveGraph
{
    return ReflexiveGraph::complete(n);
}
