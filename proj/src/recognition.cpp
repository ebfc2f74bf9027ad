#include <ferrodim/recognition.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

using namespace ferrodim;

namespace
{
    /// Rows of a matrix with `cols` columns, shared by digraphs and bigraphs.
    auto staircase_witness(const std::vector<VertexSet> & rows, int cols) -> std::optional<FerrersWitness>
    {
        const int p = static_cast<int>(rows.size());
        FerrersWitness w;
        w.row_order.resize(p);
        std::iota(w.row_order.begin(), w.row_order.end(), 0);
        std::stable_sort(w.row_order.begin(), w.row_order.end(), [&] (int a, int b) {
            return set_size(rows[a]) > set_size(rows[b]);
        });

        // Successor sets must form a chain under inclusion.
        for (int i = 0 ; i + 1 < p ; ++i)
            if ((rows[w.row_order[i + 1]] & ~rows[w.row_order[i]]) != 0)
                return std::nullopt;

        std::vector<int> count(cols, 0);
        for (int c = 0 ; c < cols ; ++c)
            for (auto r : rows)
                count[c] += contains(r, c);
        w.col_order.resize(cols);
        std::iota(w.col_order.begin(), w.col_order.end(), 0);
        std::stable_sort(w.col_order.begin(), w.col_order.end(), [&] (int a, int b) {
            return count[a] > count[b];
        });
        return w;
    }

    auto check_staircase(const std::vector<VertexSet> & rows, int cols, const FerrersWitness & w) -> bool
    {
        const int p = static_cast<int>(rows.size());
        auto is_permutation = [] (std::vector<int> order, int size) {
            std::sort(order.begin(), order.end());
            std::vector<int> id(size);
            std::iota(id.begin(), id.end(), 0);
            return order == id;
        };
        if (! is_permutation(w.row_order, p) || ! is_permutation(w.col_order, cols))
            return false;

        int previous = cols;
        for (int r : w.row_order) {
            int len = set_size(rows[r]);
            if (len > previous)
                return false;
            for (int i = 0 ; i < cols ; ++i)
                if (contains(rows[r], w.col_order[i]) != (i < len))
                    return false;
            previous = len;
        }
        return true;
    }

    auto rows_of(const Digraph & d) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> rows(d.size());
        for (int u = 0 ; u < d.size() ; ++u)
            rows[u] = d.row(u);
        return rows;
    }

    auto rows_of(const Bigraph & b) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> rows(b.rows());
        for (int x = 0 ; x < b.rows() ; ++x)
            rows[x] = b.row(x);
        return rows;
    }

    class OrientationSearch
    {
        public:
            explicit OrientationSearch(const Digraph & g) :
                _g(g)
            {
            }

            auto run() -> std::optional<Digraph>
            {
                Digraph arcs(_g.size());
                return search(arcs);
            }

        private:
            const Digraph & _g;

            auto edge(int u, int v) const -> bool { return u != v && _g.has(u, v); }

            /// Assign u->v and everything it forces; false on a contradiction.
            auto force(Digraph & arcs, int u, int v) const -> bool
            {
                std::vector<std::pair<int, int>> queue;
                auto assign = [&] (int a, int b) {
                    if (arcs.has(b, a))
                        return false;
                    if (! arcs.has(a, b)) {
                        arcs.set(a, b);
                        queue.emplace_back(a, b);
                    }
                    return true;
                };

                if (! assign(u, v))
                    return false;

                const int n = _g.size();
                while (! queue.empty()) {
                    auto [a, b] = queue.back();
                    queue.pop_back();
                    for (int w = 0 ; w < n ; ++w) {
                        if (w == a || w == b)
                            continue;
                        // a->b with w~a, w!~b: w->a would need w->b, so a->w.
                        if (edge(a, w) && ! edge(b, w) && ! assign(a, w))
                            return false;
                        // a->b with w~b, w!~a: b->w would need a->w, so w->b.
                        if (edge(b, w) && ! edge(a, w) && ! assign(w, b))
                            return false;
                        if (arcs.has(b, w)) {
                            if (! edge(a, w) || ! assign(a, w))
                                return false;
                        }
                        if (arcs.has(w, a)) {
                            if (! edge(w, b) || ! assign(w, b))
                                return false;
                        }
                    }
                }
                return true;
            }

            auto search(const Digraph & arcs) const -> std::optional<Digraph>
            {
                const int n = _g.size();
                for (int u = 0 ; u < n ; ++u)
                    for (int v = u + 1 ; v < n ; ++v)
                        if (edge(u, v) && ! arcs.has(u, v) && ! arcs.has(v, u)) {
                            for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                                Digraph next = arcs;
                                if (force(next, a, b))
                                    if (auto result = search(next))
                                        return result;
                            }
                            return std::nullopt;
                        }
                return arcs;
            }
    };

    class ArrangementSearch
    {
        public:
            ArrangementSearch(const std::vector<VertexSet> & cliques) :
                _cliques(cliques)
            {
            }

            auto run() -> std::optional<std::vector<int>>
            {
                std::vector<int> order;
                if (place(order, 0, 0, -1))
                    return order;
                return std::nullopt;
            }

        private:
            const std::vector<VertexSet> & _cliques;
            std::unordered_set<std::uint64_t> _failed;

            // The closed vertices are exactly seen \ last clique, so (placed, last) is the full state.
            auto place(std::vector<int> & order, std::uint32_t placed, VertexSet seen, int last) -> bool
            {
                const int r = static_cast<int>(_cliques.size());
                if (static_cast<int>(order.size()) == r)
                    return true;

                std::uint64_t key = (std::uint64_t{placed} << 6) | static_cast<std::uint64_t>(last + 1);
                if (_failed.contains(key))
                    return false;

                VertexSet open = last >= 0 ? _cliques[last] : 0;
                VertexSet closed = seen & ~open;
                for (int c = 0 ; c < r ; ++c) {
                    if (contains(placed, c) || (_cliques[c] & closed))
                        continue;
                    order.push_back(c);
                    if (place(order, placed | (std::uint32_t{1} << c), seen | _cliques[c], c))
                        return true;
                    order.pop_back();
                }
                _failed.insert(key);
                return false;
            }
    };

    class QuasiLinearSearch
    {
        public:
            explicit QuasiLinearSearch(const ReflexiveGraph & g) :
                _g(g)
            {
            }

            auto run() -> std::optional<std::vector<int>>
            {
                std::vector<int> order;
                if (extend(order, 0, 0))
                    return order;
                return std::nullopt;
            }

        private:
            const ReflexiveGraph & _g;
            std::unordered_set<std::uint64_t> _failed;

            // A placed row is closed once a later position holds a non-neighbour.
            auto extend(std::vector<int> & order, VertexSet placed, VertexSet closed) -> bool
            {
                const int n = _g.size();
                if (static_cast<int>(order.size()) == n)
                    return true;

                std::uint64_t key = (std::uint64_t{placed} << 32) | closed;
                if (_failed.contains(key))
                    return false;

                for (int v = 0 ; v < n ; ++v) {
                    if (contains(placed, v))
                        continue;
                    VertexSet nbrs = _g.neighbourhood(v);
                    if (nbrs & closed)
                        continue;
                    order.push_back(v);
                    if (extend(order, placed | (VertexSet{1} << v), closed | (placed & ~nbrs)))
                        return true;
                    order.pop_back();
                }
                _failed.insert(key);
                return false;
            }
    };

    auto induced_search(const Digraph & host, const Digraph & pattern, std::vector<int> & map, VertexSet used) -> bool
    {
        const int i = static_cast<int>(map.size());
        if (i == pattern.size())
            return true;
        for (int h = 0 ; h < host.size() ; ++h) {
            if (contains(used, h))
                continue;
            bool ok = host.has(h, h) == pattern.has(i, i);
            for (int j = 0 ; j < i && ok ; ++j)
                ok = host.has(h, map[j]) == pattern.has(i, j) && host.has(map[j], h) == pattern.has(j, i);
            if (! ok)
                continue;
            map.push_back(h);
            if (induced_search(host, pattern, map, used | (VertexSet{1} << h)))
                return true;
            map.pop_back();
        }
        return false;
    }
}

auto IntervalModel::graph() const -> ReflexiveGraph
{
    const int n = size();
    Digraph d(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = 0 ; v < n ; ++v)
            if (intervals[u].left <= intervals[v].right && intervals[v].left <= intervals[u].right)
                d.set(u, v);
    return ReflexiveGraph(d);
}

auto IntervalModel::represents(const ReflexiveGraph & g) const -> bool
{
    if (size() != g.size())
        return false;
    for (const auto & i : intervals)
        if (i.left > i.right)
            return false;
    return graph() == g;
}

auto ferrodim::find_couple(const Digraph & d) -> std::optional<Couple>
{
    const int n = d.size();
    for (int a = 0 ; a < n ; ++a)
        for (int b = 0 ; b < n ; ++b) {
            if (d.has(a, b))
                continue;
            for (int c = 0 ; c < n ; ++c) {
                if (c == a || ! d.has(c, b))
                    continue;
                for (int e = 0 ; e < n ; ++e)
                    if (e != b && ! d.has(c, e) && d.has(a, e))
                        return Couple{{a, b}, {c, e}};
            }
        }
    return std::nullopt;
}

auto ferrodim::is_ferrers(const Digraph & d) -> std::optional<FerrersWitness>
{
    return staircase_witness(rows_of(d), d.size());
}

auto ferrodim::is_ferrers_bigraph(const Bigraph & b) -> std::optional<FerrersWitness>
{
    return staircase_witness(rows_of(b), b.cols());
}

auto ferrodim::is_staircase(const Digraph & d, const FerrersWitness & w) -> bool
{
    return check_staircase(rows_of(d), d.size(), w);
}

auto ferrodim::is_staircase(const Bigraph & b, const FerrersWitness & w) -> bool
{
    return check_staircase(rows_of(b), b.cols(), w);
}

auto ferrodim::is_oriented(const Digraph & d) -> bool
{
    for (int u = 0 ; u < d.size() ; ++u)
        if (d.row(u) & d.column(u))
            return false;
    return true;
}

auto ferrodim::is_transitive(const Digraph & d) -> bool
{
    for (int a = 0 ; a < d.size() ; ++a)
        for (int b : members(d.row(a)))
            if (d.row(b) & ~d.row(a))
                return false;
    return true;
}

auto ferrodim::is_transitively_oriented(const Digraph & d) -> bool
{
    return is_oriented(d) && is_transitive(d);
}

auto ferrodim::transitive_orientation(const Digraph & g) -> std::optional<Orientation>
{
    if (! g.is_symmetric() || ! g.is_loopless())
        throw std::invalid_argument("transitive orientation needs a symmetric loopless digraph");

    auto arcs = OrientationSearch(g).run();
    if (! arcs)
        return std::nullopt;
    if (! is_transitively_oriented(*arcs) || unite({*arcs, transpose(*arcs)}) != g)
        throw std::logic_error("orientation search produced an invalid orientation");
    return Orientation{*arcs, g};
}

auto ferrodim::maximal_cliques(const ReflexiveGraph & g) -> std::vector<VertexSet>
{
    const int n = g.size();
    std::vector<VertexSet> nbrs(n);
    for (int v = 0 ; v < n ; ++v)
        nbrs[v] = g.neighbourhood(v) & ~(VertexSet{1} << v);

    std::vector<VertexSet> result;
    auto expand = [&] (auto & self, VertexSet r, VertexSet p, VertexSet x) -> void {
        if (! p && ! x) {
            result.push_back(r);
            return;
        }
        int pivot = std::countr_zero(p | x);
        int best = -1;
        for (int u : members(p | x)) {
            int c = set_size(p & nbrs[u]);
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        for (int v : members(p & ~nbrs[pivot])) {
            VertexSet bit = VertexSet{1} << v;
            self(self, r | bit, p & nbrs[v], x & nbrs[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    if (n > 0)
        expand(expand, 0, low_bits(n), 0);

    std::sort(result.begin(), result.end(), [] (VertexSet a, VertexSet b) {
        return members(a) < members(b);
    });
    return result;
}

auto ferrodim::consecutive_arrangement(const std::vector<VertexSet> & cliques, int n) -> std::optional<CliqueOrdering>
{
    for (auto c : cliques)
        if (c & ~low_bits(n))
            throw std::invalid_argument("clique mentions a vertex outside the graph");

    // Every clique after the first introduces a fresh vertex, so a valid ordering has at most n cliques.
    if (static_cast<int>(cliques.size()) > n)
        return std::nullopt;

    auto order = ArrangementSearch(cliques).run();
    if (! order)
        return std::nullopt;
    CliqueOrdering result;
    for (int c : *order)
        result.cliques.push_back(cliques[c]);
    return result;
}

auto ferrodim::is_interval(const ReflexiveGraph & g) -> std::optional<IntervalModel>
{
    const int n = g.size();
    auto ordering = consecutive_arrangement(maximal_cliques(g), n);
    if (! ordering)
        return std::nullopt;

    IntervalModel model;
    model.intervals.assign(n, Interval{0, 0});
    for (int i = 0 ; i < static_cast<int>(ordering->cliques.size()) ; ++i)
        for (int v : members(ordering->cliques[i])) {
            if (model.intervals[v].left == 0)
                model.intervals[v].left = i + 1;
            model.intervals[v].right = i + 1;
        }
    if (! model.represents(g))
        throw std::logic_error("clique ordering produced an interval model that does not match the graph");
    return model;
}

auto ferrodim::quasi_linear_order(const ReflexiveGraph & g) -> std::optional<std::vector<int>>
{
    if (g.size() > max_quasi_linear_vertices)
        throw std::invalid_argument("quasi-linear search supports at most 8 vertices");
    return QuasiLinearSearch(g).run();
}

auto ferrodim::has_quasi_linear_property(const ReflexiveGraph & g, const std::vector<int> & order) -> bool
{
    const int n = g.size();
    if (static_cast<int>(order.size()) != n)
        return false;
    for (int i = 0 ; i < n ; ++i) {
        bool gap = false;
        for (int j = i + 1 ; j < n ; ++j) {
            bool one = g.adjacent(order[i], order[j]);
            if (one && gap)
                return false;
            gap = gap || ! one;
        }
    }
    return true;
}

auto ferrodim::contains_induced(const Digraph & host, const Digraph & pattern) -> std::optional<std::vector<int>>
{
    if (host.size() > max_induced_host_vertices)
        throw std::invalid_argument("induced containment supports hosts of at most 10 vertices");
    if (pattern.size() > host.size())
        throw std::invalid_argument("pattern is larger than the host");

    std::vector<int> map;
    if (induced_search(host, pattern, map, 0))
        return map;
    return std::nullopt;
}

auto ferrodim::is_interval_order(const Digraph & d) -> bool
{
    if (! d.is_loopless() || ! is_transitive(d))
        return false;
    const int n = d.size();
    for (int a = 0 ; a < n ; ++a)
        for (int b = 0 ; b < n ; ++b)
            for (int x : members(d.row(a)))
                for (int y : members(d.row(b)))
                    if (! d.has(a, y) && ! d.has(b, x))
                        return false;
    return true;
}

auto ferrodim::is_indifference(const ReflexiveGraph & g) -> bool
{
    if (! is_interval(g))
        return false;
    if (g.size() < 4)
        return true;
    return ! contains_induced(g.digraph(), patterns::claw().digraph());
}
