#include <ferrodim/dimensions.hpp>
#include <ferrodim/recognition.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

using namespace ferrodim;

namespace
{
    using Mask = std::uint64_t;

    auto bit(int i) -> Mask { return Mask{1} << i; }

    auto mask_members(Mask m) -> std::vector<int>
    {
        std::vector<int> result;
        while (m) {
            result.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return result;
    }

    auto keep_maximal(std::vector<Mask> sets) -> std::vector<Mask>
    {
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::stable_sort(sets.begin(), sets.end(), [] (Mask a, Mask b) {
            return std::popcount(a) > std::popcount(b);
        });
        std::vector<Mask> kept;
        for (Mask s : sets)
            if (std::none_of(kept.begin(), kept.end(), [s] (Mask k) { return (s & ~k) == 0; }))
                kept.push_back(s);
        return kept;
    }

    /**
     * Minimum cover of a universe of at most 64 elements by candidate sets.
     * Branches on the uncovered element of highest incompatibility degree;
     * bounds with a greedy set of pairwise incompatible elements, where two
     * elements are incompatible when no candidate holds both.
     */
    class SetCoverSearch
    {
        public:
            SetCoverSearch(Mask universe, std::vector<Mask> candidates, std::uint64_t budget, std::string name) :
                _universe(universe),
                _candidates(std::move(candidates)),
                _budget(budget),
                _name(std::move(name))
            {
                _containing.resize(64);
                _compatible.assign(64, 0);
                for (int c = 0 ; c < static_cast<int>(_candidates.size()) ; ++c)
                    for (int e : mask_members(_candidates[c] & _universe)) {
                        _containing[e].push_back(c);
                        _compatible[e] |= _candidates[c];
                    }
                for (int e : mask_members(_universe))
                    if (_containing[e].empty())
                        throw std::logic_error(_name + ": element not covered by any candidate");

                _priority = mask_members(_universe);
                std::stable_sort(_priority.begin(), _priority.end(), [&] (int a, int b) {
                    return std::popcount(_universe & ~_compatible[a]) > std::popcount(_universe & ~_compatible[b]);
                });
            }

            auto run() -> std::vector<Mask>
            {
                _best = greedy();
                if (lower_bound(_universe) < static_cast<int>(_best.size())) {
                    std::vector<Mask> chosen;
                    search(_universe, chosen);
                }
                return _best;
            }

            auto nodes() const -> std::uint64_t { return _nodes; }

            auto initial_lower_bound() const -> int { return lower_bound(_universe); }

        private:
            Mask _universe;
            std::vector<Mask> _candidates;
            std::uint64_t _budget;
            std::string _name;
            std::vector<std::vector<int>> _containing;
            std::vector<Mask> _compatible;
            std::vector<int> _priority;
            std::vector<Mask> _best;
            std::uint64_t _nodes = 0;

            auto greedy() const -> std::vector<Mask>
            {
                std::vector<Mask> chosen;
                Mask uncovered = _universe;
                while (uncovered) {
                    Mask best = 0;
                    for (Mask c : _candidates)
                        if (std::popcount(c & uncovered) > std::popcount(best & uncovered))
                            best = c;
                    chosen.push_back(best);
                    uncovered &= ~best;
                }
                return chosen;
            }

            auto lower_bound(Mask uncovered) const -> int
            {
                Mask picked = 0;
                int count = 0;
                for (int e : _priority)
                    if ((uncovered & bit(e)) && ! (_compatible[e] & picked)) {
                        picked |= bit(e);
                        ++count;
                    }
                return count;
            }

            auto search(Mask uncovered, std::vector<Mask> & chosen) -> void
            {
                if (_budget && ++_nodes > _budget)
                    throw BudgetExceeded(_name);
                else if (! _budget)
                    ++_nodes;

                if (! uncovered) {
                    if (chosen.size() < _best.size())
                        _best = chosen;
                    return;
                }
                if (static_cast<int>(chosen.size()) + lower_bound(uncovered) >= static_cast<int>(_best.size()))
                    return;

                int e = *std::find_if(_priority.begin(), _priority.end(), [&] (int x) { return (uncovered >> x) & 1u; });
                std::vector<int> options = _containing[e];
                std::stable_sort(options.begin(), options.end(), [&] (int a, int b) {
                    return std::popcount(_candidates[a] & uncovered) > std::popcount(_candidates[b] & uncovered);
                });
                for (int c : options) {
                    chosen.push_back(_candidates[c]);
                    search(uncovered & ~_candidates[c], chosen);
                    chosen.pop_back();
                }
            }
    };

    auto count_node(std::uint64_t & nodes, std::uint64_t budget, const char * name) -> void
    {
        ++nodes;
        if (budget && nodes > budget)
            throw BudgetExceeded(name);
    }

    class ColouringSearch
    {
        public:
            ColouringSearch(const PositionGraph & h, std::uint64_t budget) :
                _n(h.size()),
                _budget(budget),
                _adj(h.size(), 0),
                _colour(h.size(), -1)
            {
                for (int i = 0 ; i < _n ; ++i)
                    for (int j = 0 ; j < _n ; ++j)
                        if (h.adjacent(i, j))
                            _adj[i] |= bit(j);
            }

            auto run() -> ColouringResult
            {
                ColouringResult result;
                if (_n == 0)
                    return result;

                _lower = clique_bound();
                _best = dsatur_greedy();
                _best_k = 1 + *std::max_element(_best.begin(), _best.end());
                if (_best_k > _lower) {
                    std::vector<Mask> classes;
                    search(0, classes);
                }
                result.colours = _best_k;
                result.colouring = _best;
                result.nodes = _nodes;
                return result;
            }

        private:
            int _n;
            std::uint64_t _budget;
            std::vector<Mask> _adj;
            std::vector<int> _colour;
            std::vector<int> _best;
            int _best_k = 0;
            int _lower = 0;
            std::uint64_t _nodes = 0;

            auto clique_bound() const -> int
            {
                int best = 1;
                for (int start = 0 ; start < _n ; ++start) {
                    Mask clique = bit(start), cand = _adj[start];
                    while (cand) {
                        int v = mask_members(cand).front();
                        int deg = -1;
                        for (int u : mask_members(cand))
                            if (std::popcount(_adj[u] & cand) > deg) {
                                deg = std::popcount(_adj[u] & cand);
                                v = u;
                            }
                        clique |= bit(v);
                        cand &= _adj[v];
                    }
                    best = std::max(best, std::popcount(clique));
                }
                return best;
            }

            auto pick(const std::vector<Mask> & classes, Mask uncoloured) const -> int
            {
                int best = -1, best_sat = -1, best_deg = -1;
                for (int v : mask_members(uncoloured)) {
                    int sat = 0;
                    for (Mask c : classes)
                        sat += (c & _adj[v]) != 0;
                    int deg = std::popcount(_adj[v] & uncoloured);
                    if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                        best = v;
                        best_sat = sat;
                        best_deg = deg;
                    }
                }
                return best;
            }

            auto dsatur_greedy() const -> std::vector<int>
            {
                std::vector<int> colour(_n, -1);
                std::vector<Mask> classes;
                Mask uncoloured = _n == 64 ? ~Mask{0} : bit(_n) - 1;
                while (uncoloured) {
                    int v = pick(classes, uncoloured);
                    int c = 0;
                    while (c < static_cast<int>(classes.size()) && (classes[c] & _adj[v]))
                        ++c;
                    if (c == static_cast<int>(classes.size()))
                        classes.push_back(0);
                    classes[c] |= bit(v);
                    colour[v] = c;
                    uncoloured &= ~bit(v);
                }
                return colour;
            }

            auto search(int coloured, std::vector<Mask> & classes) -> void
            {
                count_node(_nodes, _budget, "chromatic_number");
                if (_best_k == _lower)
                    return;
                if (coloured == _n) {
                    _best_k = static_cast<int>(classes.size());
                    _best = _colour;
                    return;
                }
                Mask uncoloured = 0;
                for (int v = 0 ; v < _n ; ++v)
                    if (_colour[v] < 0)
                        uncoloured |= bit(v);
                int v = pick(classes, uncoloured);
                const int k = static_cast<int>(classes.size());
                for (int c = 0 ; c < k ; ++c)
                    if (! (classes[c] & _adj[v])) {
                        classes[c] |= bit(v);
                        _colour[v] = c;
                        search(coloured + 1, classes);
                        _colour[v] = -1;
                        classes[c] &= ~bit(v);
                    }
                if (k + 1 < _best_k) {
                    classes.push_back(bit(v));
                    _colour[v] = k;
                    search(coloured + 1, classes);
                    _colour[v] = -1;
                    classes.pop_back();
                }
            }
    };

    /**
     * Covers the vertices of J(complement of D) by total ideal vertex sets.
     * Vertices are split into blocks; a block is admissible when some total
     * ideal set contains it, found by repeatedly adding the witness of an
     * unsatisfied pair.
     */
    class TotalCoverSearch
    {
        public:
            TotalCoverSearch(const JDigraph & j, std::uint64_t budget) :
                _j(j),
                _m(j.size()),
                _budget(budget),
                _witness(j.size(), std::vector<int>(j.size(), -1)),
                _incompatible(j.size(), 0)
            {
                for (int s = 0 ; s < _m ; ++s)
                    for (int t = 0 ; t < _m ; ++t)
                        if (_j.has_arrow(s, t))
                            _witness[s][t] = *_j.index_of({_j.arcs[s].row, _j.arcs[t].col});
                for (int s = 0 ; s < _m ; ++s)
                    for (int t = 0 ; t < _m ; ++t)
                        if (s != t && ! _j.has_arrow(s, t) && ! _j.has_arrow(t, s))
                            _incompatible[s] |= bit(t);

                _order.resize(_m);
                std::iota(_order.begin(), _order.end(), 0);
                std::stable_sort(_order.begin(), _order.end(), [&] (int a, int b) {
                    return std::popcount(_incompatible[a]) > std::popcount(_incompatible[b]);
                });
            }

            auto run() -> std::vector<Mask>
            {
                if (_m == 0)
                    return {};
                for (int limit = lower_bound() ; ; ++limit) {
                    _limit = limit;
                    _blocks.clear();
                    _extensions.clear();
                    if (assign(0))
                        return _extensions;
                }
            }

            auto nodes() const -> std::uint64_t { return _nodes; }

            auto first_violation(Mask s) const -> std::optional<std::pair<int, int>>
            {
                for (int a : mask_members(s))
                    for (int b : mask_members(s & ~(bit(a + 1) - 1))) {
                        int w1 = _witness[a][b], w2 = _witness[b][a];
                        bool ok = (w1 >= 0 && ((s >> w1) & 1u)) || (w2 >= 0 && ((s >> w2) & 1u));
                        if (! ok)
                            return std::pair{a, b};
                    }
                return std::nullopt;
            }

        private:
            const JDigraph & _j;
            int _m;
            std::uint64_t _budget;
            std::vector<std::vector<int>> _witness;
            std::vector<Mask> _incompatible;
            std::vector<int> _order;
            int _limit = 0;
            std::vector<Mask> _blocks;
            std::vector<Mask> _extensions;
            std::unordered_set<Mask> _dead;
            std::unordered_map<Mask, Mask> _extended;
            std::uint64_t _nodes = 0;

            auto lower_bound() const -> int
            {
                Mask picked = 0;
                int count = 0;
                for (int v : _order)
                    if ((_incompatible[v] & picked) == picked) {
                        picked |= bit(v);
                        ++count;
                    }
                return std::max(count, 1);
            }

            auto extend(Mask s) -> std::optional<Mask>
            {
                if (auto it = _extended.find(s) ; it != _extended.end())
                    return it->second;
                if (_dead.contains(s))
                    return std::nullopt;
                count_node(_nodes, _budget, "total_covering_number");

                auto violation = first_violation(s);
                if (! violation) {
                    _extended.emplace(s, s);
                    return s;
                }
                auto [a, b] = *violation;
                for (int w : {_witness[a][b], _witness[b][a]})
                    if (w >= 0)
                        if (auto r = extend(s | bit(w))) {
                            _extended.emplace(s, *r);
                            return r;
                        }
                _dead.insert(s);
                return std::nullopt;
            }

            auto assign(int index) -> bool
            {
                count_node(_nodes, _budget, "total_covering_number");
                if (index == _m)
                    return true;

                const int used = static_cast<int>(_blocks.size());
                if (used == _limit) {
                    Mask unassigned = 0;
                    for (int i = index ; i < _m ; ++i)
                        unassigned |= bit(_order[i]);
                    Mask blocked_everywhere = unassigned;
                    for (Mask block : _blocks) {
                        Mask blocked = 0;
                        for (int p : mask_members(block))
                            blocked |= _incompatible[p];
                        blocked_everywhere &= blocked;
                    }
                    if (blocked_everywhere)
                        return false;
                }

                const int v = _order[index];
                for (int b = 0 ; b < used ; ++b) {
                    if (_incompatible[v] & _blocks[b])
                        continue;
                    auto ext = (_extensions[b] >> v) & 1u ? std::optional<Mask>(_extensions[b]) : extend(_blocks[b] | bit(v));
                    if (! ext)
                        continue;
                    Mask saved_block = _blocks[b], saved_ext = _extensions[b];
                    _blocks[b] |= bit(v);
                    _extensions[b] = *ext;
                    if (assign(index + 1))
                        return true;
                    _blocks[b] = saved_block;
                    _extensions[b] = saved_ext;
                }
                if (used < _limit) {
                    _blocks.push_back(bit(v));
                    _extensions.push_back(bit(v));
                    if (assign(index + 1))
                        return true;
                    _blocks.pop_back();
                    _extensions.pop_back();
                }
                return false;
            }
    };

    auto factor_in_class(const Digraph & f, FactorKind kind) -> bool
    {
        if (kind == FactorKind::ferrers)
            return is_ferrers(f).has_value();
        if (! f.is_symmetric() || ! f.is_reflexive())
            return false;
        return is_interval(ReflexiveGraph(f)).has_value();
    }

    auto verify_bigraph_factors(const std::vector<Bigraph> & factors, const Bigraph & b) -> bool
    {
        for (const auto & f : factors) {
            if (f.rows() != b.rows() || f.cols() != b.cols() || ! is_ferrers_bigraph(f))
                return false;
            for (int x = 0 ; x < b.rows() ; ++x)
                if (b.row(x) & ~f.row(x))
                    return false;
        }
        Bigraph meet = factors.empty() ? Bigraph::full(b.rows(), b.cols()) : intersect(std::span<const Bigraph>(factors));
        return meet == b;
    }
}

auto ferrodim::to_string(FactorKind k) -> std::string
{
    return k == FactorKind::ferrers ? "ferrers-factors" : "interval-factors";
}

auto ferrodim::verify_certificate(const CoverCertificate & cert, const Digraph & source) -> bool
{
    const int n = source.size();
    for (const auto & f : cert.factors) {
        if (f.size() != n || ! factor_in_class(f, cert.kind))
            return false;
        for (int u = 0 ; u < n ; ++u)
            if (source.row(u) & ~f.row(u))
                return false;
    }
    Digraph meet = cert.factors.empty() ? Digraph::full(n) : intersect(std::span<const Digraph>(cert.factors));
    return meet == source;
}

auto ferrodim::is_ferrers_closed(const std::vector<ZeroPosition> & zeros) -> bool
{
    auto member = [&] (ZeroPosition z) { return std::find(zeros.begin(), zeros.end(), z) != zeros.end(); };
    for (auto [a, b] : zeros)
        for (auto [c, d] : zeros)
            if (a != c && b != d && ! member({a, d}) && ! member({c, b}))
                return false;
    return true;
}

auto ferrodim::is_proper_colouring(const PositionGraph & h, const std::vector<int> & colouring) -> bool
{
    if (static_cast<int>(colouring.size()) != h.size())
        return false;
    for (int i = 0 ; i < h.size() ; ++i) {
        if (colouring[i] < 0)
            return false;
        for (int j = 0 ; j < h.size() ; ++j)
            if (h.adjacent(i, j) && colouring[i] == colouring[j])
                return false;
    }
    return true;
}

auto ferrodim::chromatic_number(const PositionGraph & h, const SolveOptions & options) -> ColouringResult
{
    if (h.size() > max_colouring_vertices)
        throw std::invalid_argument("chromatic number supports at most 64 vertices");
    auto result = ColouringSearch(h, options.node_budget).run();
    if (! is_proper_colouring(h, result.colouring))
        throw std::logic_error("colouring search produced an improper colouring");
    return result;
}

auto ferrodim::ferrers_dimension(const Digraph & d, const SolveOptions & options) -> FerrersDimensionResult
{
    const int n = d.size();
    if (n > max_ferrers_dimension_vertices)
        throw std::invalid_argument("Ferrers dimension supports at most 8 vertices");

    FerrersDimensionResult result;
    Mask zeros = 0;
    std::vector<VertexSet> zero_cols(n);
    for (int u = 0 ; u < n ; ++u) {
        zero_cols[u] = ~d.row(u) & low_bits(n);
        zeros |= Mask{zero_cols[u]} << (u * n);
    }
    if (! zeros)
        return result;

    // Along a row order the largest Ferrers-closed class keeps, in each row, the zero columns shared with all earlier rows.
    std::vector<Mask> classes;
    auto generate = [&] (auto & self, VertexSet used, VertexSet columns, Mask relation) -> void {
        if (used == low_bits(n) || columns == 0) {
            classes.push_back(relation);
            return;
        }
        for (int u = 0 ; u < n ; ++u)
            if (! contains(used, u)) {
                VertexSet next = columns & zero_cols[u];
                self(self, used | (VertexSet{1} << u), next, relation | (Mask{next} << (u * n)));
            }
    };
    generate(generate, 0, low_bits(n), 0);

    SetCoverSearch search(zeros, keep_maximal(std::move(classes)), options.node_budget, "ferrers_dimension");
    auto chosen = search.run();

    result.dimension = static_cast<int>(chosen.size());
    result.nodes = search.nodes();
    result.certificate.kind = FactorKind::ferrers;
    for (Mask c : chosen) {
        Digraph f = Digraph::full(n);
        std::vector<ZeroPosition> zs;
        for (int p : mask_members(c)) {
            f.set(p / n, p % n, false);
            zs.push_back({p / n, p % n});
        }
        result.certificate.factors.push_back(f);
        result.zero_cover.classes.push_back(std::move(zs));
    }
    if (! verify_certificate(result.certificate, d))
        throw std::logic_error("Ferrers dimension certificate failed verification");
    return result;
}

auto ferrodim::is_total_ideal(const JDigraph & j, const std::vector<int> & s) -> bool
{
    PositionSet in;
    for (int v : s) {
        if (v < 0 || v >= j.size())
            throw std::out_of_range("vertex outside the J digraph");
        in[v] = true;
    }
    auto kept_arrow = [&] (int x, int y) {
        if (! j.has_arrow(x, y))
            return false;
        auto w = j.index_of({j.arcs[x].row, j.arcs[y].col});
        return w && in[*w];
    };
    for (int x = 0 ; x < j.size() ; ++x)
        for (int y = x + 1 ; y < j.size() ; ++y)
            if (in[x] && in[y] && ! kept_arrow(x, y) && ! kept_arrow(y, x))
                return false;
    return true;
}

auto ferrodim::total_covering_number(const Digraph & d, const SolveOptions & options) -> TotalCoverResult
{
    const int n = d.size();
    if (n > max_total_cover_vertices)
        throw std::invalid_argument("total covering number supports at most 6 vertices");

    TotalCoverResult result;
    result.j = j_digraph(complement(d));
    TotalCoverSearch search(result.j, options.node_budget);
    auto sets = search.run();

    result.number = static_cast<int>(sets.size());
    result.nodes = search.nodes();
    result.certificate.kind = FactorKind::ferrers;
    PositionSet covered;
    for (Mask s : sets) {
        auto subset = mask_members(s);
        if (! is_total_ideal(result.j, subset))
            throw std::logic_error("total cover contains a set that is not total ideal");
        Digraph f = Digraph::full(n);
        for (int v : subset) {
            f.set(result.j.arcs[v].row, result.j.arcs[v].col, false);
            covered[v] = true;
        }
        result.cover.subsets.push_back(std::move(subset));
        result.certificate.factors.push_back(f);
    }
    if (static_cast<int>(covered.count()) != result.j.size())
        throw std::logic_error("total cover misses a vertex");
    if (! verify_certificate(result.certificate, d))
        throw std::logic_error("total cover certificate failed verification");
    return result;
}

auto ferrodim::boxicity(const ReflexiveGraph & g, const SolveOptions & options) -> BoxicityResult
{
    const int n = g.size();
    if (n > max_boxicity_vertices)
        throw std::invalid_argument("boxicity supports at most 7 vertices");

    BoxicityResult result;
    result.certificate.kind = FactorKind::interval;
    auto pairs = g.non_edges();
    if (pairs.empty())
        return result;

    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (int i = 0 ; i < static_cast<int>(pairs.size()) ; ++i) {
        index[pairs[i].first][pairs[i].second] = i;
        index[pairs[i].second][pairs[i].first] = i;
    }

    // For a vertex order, filling each row right of the diagonal up to its last neighbour
    // gives the least supergraph with that interval ordering; its non-edges form one class.
    std::vector<Mask> classes;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        Mask cls = 0;
        for (int i = 0 ; i < n ; ++i) {
            int last = i;
            for (int k = i + 1 ; k < n ; ++k)
                if (g.adjacent(order[i], order[k]))
                    last = k;
            for (int k = last + 1 ; k < n ; ++k)
                cls |= bit(index[order[i]][order[k]]);
        }
        classes.push_back(cls);
    } while (std::next_permutation(order.begin(), order.end()));

    Mask universe = bit(static_cast<int>(pairs.size())) - 1;
    SetCoverSearch search(universe, keep_maximal(std::move(classes)), options.node_budget, "boxicity");
    auto chosen = search.run();

    result.boxicity = static_cast<int>(chosen.size());
    result.nodes = search.nodes();
    for (Mask c : chosen) {
        Digraph f = Digraph::full(n);
        for (int p : mask_members(c)) {
            f.set(pairs[p].first, pairs[p].second, false);
            f.set(pairs[p].second, pairs[p].first, false);
        }
        result.certificate.factors.push_back(f);
    }
    if (! verify_certificate(result.certificate, g.digraph()))
        throw std::logic_error("boxicity certificate failed verification");
    return result;
}

auto ferrodim::min_symmetric_factor_dimension(const ReflexiveGraph & g, const SolveOptions & options) -> SymmetricFactorResult
{
    auto pairs = g.non_edges();
    const int m = static_cast<int>(pairs.size());
    if (m > max_symmetric_factor_non_edges)
        throw std::invalid_argument("symmetric factor search supports at most 9 non-adjacent pairs");

    SymmetricFactorResult result;
    result.witness = g.digraph();
    if (m == 0)
        return result;

    int total = 1;
    for (int i = 0 ; i < m ; ++i)
        total *= 3;

    result.dimension = -1;
    for (int code = 0 ; code < total ; ++code) {
        Digraph d = g.digraph();
        for (int i = 0, c = code ; i < m ; ++i, c /= 3) {
            auto [u, v] = pairs[i];
            if (c % 3 == 1)
                d.set(u, v);
            else if (c % 3 == 2)
                d.set(v, u);
        }
        ++result.candidates;
        int k = ferrers_dimension(d, options).dimension;
        if (result.dimension < 0 || k < result.dimension) {
            result.dimension = k;
            result.witness = d;
        }
        // A non-complete g leaves a zero in every candidate, so one is the floor.
        if (result.dimension == 1)
            break;
    }
    if (intersect({result.witness, transpose(result.witness)}) != g.digraph())
        throw std::logic_error("symmetric factor witness does not reproduce the graph");
    return result;
}

auto ferrodim::ferrers_dim_at_most_2(const Digraph & d) -> bool
{
    auto h = couple_graph(d);
    std::vector<int> side(h.size(), -1);
    for (int start = 0 ; start < h.size() ; ++start) {
        if (side[start] >= 0)
            continue;
        side[start] = 0;
        std::vector<int> stack{start};
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0 ; w < h.size() ; ++w)
                if (h.adjacent(v, w)) {
                    if (side[w] < 0) {
                        side[w] = 1 - side[v];
                        stack.push_back(w);
                    }
                    else if (side[w] == side[v])
                        return false;
                }
        }
    }
    return true;
}

auto ferrodim::bigraph_ferrers_dimension(const Bigraph & b, const SolveOptions & options) -> BigraphDimensionResult
{
    if (b.rows() + b.cols() > max_bigraph_dimension_vertices)
        throw std::invalid_argument("bigraph Ferrers dimension supports p + q <= 8");

    BigraphDimensionResult result;
    if (b.zero_count() == 0)
        return result;

    // Zero rows or columns added by padding sit harmlessly inside every Ferrers factor.
    auto padded = ferrers_dimension(bigraph_to_digraph(b), options);
    result.dimension = padded.dimension;
    result.nodes = padded.nodes;
    for (const auto & f : padded.certificate.factors) {
        Bigraph cropped(b.rows(), b.cols());
        for (int x = 0 ; x < b.rows() ; ++x)
            for (int y = 0 ; y < b.cols() ; ++y)
                cropped.set(x, y, f.has(x, y));
        result.factors.push_back(cropped);
    }
    if (! verify_bigraph_factors(result.factors, b))
        throw std::logic_error("bigraph Ferrers factors failed verification");
    return result;
}

auto ferrodim::interval_bigraph_witness(const Bigraph & b) -> std::optional<BigraphFactorPair>
{
    if (b.rows() * b.cols() > max_interval_bigraph_entries)
        throw std::invalid_argument("interval bigraph search supports p * q <= 20");

    std::vector<ZeroPosition> zeros;
    for (int x = 0 ; x < b.rows() ; ++x)
        for (int y = 0 ; y < b.cols() ; ++y)
            if (! b.has(x, y))
                zeros.push_back({x, y});
    const int k = static_cast<int>(zeros.size());

    std::vector<std::vector<int>> index(b.rows(), std::vector<int>(b.cols(), -1));
    for (int i = 0 ; i < k ; ++i)
        index[zeros[i].row][zeros[i].col] = i;

    std::vector<int> side(k, -1);
    // A witness can still join class c if it is a zero not already placed in the other class.
    auto available = [&] (int x, int y, int c) {
        int w = index[x][y];
        return w >= 0 && (side[w] < 0 || side[w] == c);
    };
    auto classes = [&] {
        std::array<std::vector<ZeroPosition>, 2> cls;
        for (int i = 0 ; i < k ; ++i)
            cls[side[i]].push_back(zeros[i]);
        return cls;
    };
    auto search = [&] (auto & self, int i) -> bool {
        if (i == k) {
            auto cls = classes();
            return is_ferrers_closed(cls[0]) && is_ferrers_closed(cls[1]);
        }
        for (int c : {0, 1}) {
            side[i] = c;
            bool ok = true;
            for (int j = 0 ; j < i && ok ; ++j) {
                if (side[j] != c)
                    continue;
                auto [a, bb] = zeros[i];
                auto [cc, d] = zeros[j];
                if (a != cc && bb != d)
                    ok = available(a, d, c) || available(cc, bb, c);
            }
            if (ok && self(self, i + 1))
                return true;
        }
        side[i] = -1;
        return false;
    };
    if (! search(search, 0))
        return std::nullopt;

    BigraphFactorPair pair{Bigraph::full(b.rows(), b.cols()), Bigraph::full(b.rows(), b.cols())};
    for (int i = 0 ; i < k ; ++i)
        (side[i] == 0 ? pair.first : pair.second).set(zeros[i].row, zeros[i].col, false);

    // Disjoint zero classes mean the union of the factors is complete.
    if (! is_ferrers_bigraph(pair.first) || ! is_ferrers_bigraph(pair.second)
            || intersect(std::vector<Bigraph>{pair.first, pair.second}) != b)
        throw std::logic_error("interval bigraph witness failed verification");
    return pair;
}
