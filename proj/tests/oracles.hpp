#pragma once

// Random generators and brute-force oracles shared by the unit tests. The
// oracles work straight from definitions and avoid the library's solvers.

#include <ferrodim/constructions.hpp>
#include <ferrodim/core.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle
{
    using namespace ferrodim;

    inline auto random_digraph(std::mt19937_64 & rng, int n, double density = 0.5) -> Digraph
    {
        std::bernoulli_distribution coin(density);
        Digraph d(n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v)
                d.set(u, v, coin(rng));
        return d;
    }

    inline auto random_graph(std::mt19937_64 & rng, int n, double density = 0.5) -> ReflexiveGraph
    {
        std::bernoulli_distribution coin(density);
        Digraph d(n);
        for (int u = 0 ; u < n ; ++u) {
            d.set(u, u);
            for (int v = u + 1 ; v < n ; ++v)
                if (coin(rng)) {
                    d.set(u, v);
                    d.set(v, u);
                }
        }
        return ReflexiveGraph(d);
    }

    inline auto random_bigraph(std::mt19937_64 & rng, int p, int q, double density = 0.5) -> Bigraph
    {
        std::bernoulli_distribution coin(density);
        Bigraph b(p, q);
        for (int x = 0 ; x < p ; ++x)
            for (int y = 0 ; y < q ; ++y)
                b.set(x, y, coin(rng));
        return b;
    }

    inline auto random_permutation(std::mt19937_64 & rng, int n) -> std::vector<int>
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }

    inline auto all_digraphs(int n) -> std::vector<Digraph>
    {
        std::vector<Digraph> result;
        for (std::uint64_t code = 0 ; code < (std::uint64_t{1} << (n * n)) ; ++code) {
            Digraph d(n);
            for (int i = 0 ; i < n * n ; ++i)
                if ((code >> i) & 1u)
                    d.set(i / n, i % n);
            result.push_back(d);
        }
        return result;
    }

    inline auto all_graphs(int n) -> std::vector<ReflexiveGraph>
    {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                pairs.emplace_back(u, v);
        std::vector<ReflexiveGraph> result;
        for (std::uint64_t code = 0 ; code < (std::uint64_t{1} << pairs.size()) ; ++code) {
            Digraph d(n);
            for (int v = 0 ; v < n ; ++v)
                d.set(v, v);
            for (std::size_t i = 0 ; i < pairs.size() ; ++i)
                if ((code >> i) & 1u) {
                    d.set(pairs[i].first, pairs[i].second);
                    d.set(pairs[i].second, pairs[i].first);
                }
            result.emplace_back(d);
        }
        return result;
    }

    /// Out-neighbourhoods pairwise comparable under inclusion.
    inline auto ferrers(const Digraph & d) -> bool
    {
        for (int u = 0 ; u < d.size() ; ++u)
            for (int v = 0 ; v < d.size() ; ++v) {
                auto a = d.row(u), b = d.row(v);
                if ((a & ~b) && (b & ~a))
                    return false;
            }
        return true;
    }

    /// Intervals with endpoints in 0..2n-1 assigned one vertex at a time.
    inline auto interval(const ReflexiveGraph & g) -> bool
    {
        const int n = g.size();
        std::vector<std::pair<int, int>> iv(n);
        std::function<bool (int)> place = [&] (int v) {
            if (v == n)
                return true;
            for (int l = 0 ; l < 2 * n ; ++l)
                for (int r = l ; r < 2 * n ; ++r) {
                    bool ok = true;
                    for (int u = 0 ; u < v && ok ; ++u) {
                        bool meet = std::max(l, iv[u].first) <= std::min(r, iv[u].second);
                        ok = meet == g.adjacent(u, v);
                    }
                    if (ok) {
                        iv[v] = {l, r};
                        if (place(v + 1))
                            return true;
                    }
                }
            return false;
        };
        return place(0);
    }

    /// Least number of members of family whose intersection is target, or -1.
    inline auto min_intersection(const Digraph & target, const std::vector<Digraph> & family) -> int
    {
        const int n = target.size();
        auto key = [&] (const Digraph & d) {
            std::uint64_t k = 0;
            for (int u = 0 ; u < n ; ++u)
                k |= std::uint64_t{d.row(u)} << (u * n);
            return k;
        };
        std::vector<std::uint64_t> members;
        for (const auto & f : family) {
            bool contains = true;
            for (int u = 0 ; u < n ; ++u)
                contains = contains && (target.row(u) & ~f.row(u)) == 0;
            if (contains)
                members.push_back(key(f));
        }
        const std::uint64_t goal = key(target);
        std::uint64_t all = 0;
        for (int u = 0 ; u < n ; ++u)
            all |= std::uint64_t{low_bits(n)} << (u * n);
        if (goal == all)
            return 0;
        std::set<std::uint64_t> frontier{all}, seen{all};
        for (int depth = 1 ; ! frontier.empty() ; ++depth) {
            std::set<std::uint64_t> next;
            for (auto s : frontier)
                for (auto m : members) {
                    auto t = s & m;
                    if (t == goal)
                        return depth;
                    if (seen.insert(t).second)
                        next.insert(t);
                }
            frontier = std::move(next);
        }
        return -1;
    }

    inline auto ferrers_dimension(const Digraph & d) -> int
    {
        static std::map<int, std::vector<Digraph>> cache;
        auto & family = cache[d.size()];
        if (family.empty())
            for (auto & f : all_digraphs(d.size()))
                if (ferrers(f))
                    family.push_back(f);
        return min_intersection(d, family);
    }

    inline auto boxicity(const ReflexiveGraph & g) -> int
    {
        static std::map<int, std::vector<Digraph>> cache;
        auto & family = cache[g.size()];
        if (family.empty())
            for (auto & h : all_graphs(g.size()))
                if (interval(h))
                    family.push_back(h.digraph());
        return min_intersection(g.digraph(), family);
    }

    /// Ideal closure rule and pairwise arrows, straight from the definitions.
    inline auto total_ideal(const JDigraph & j, const std::vector<int> & s) -> bool
    {
        std::set<int> in(s.begin(), s.end());
        for (int x : s)
            for (int y : s)
                if (x < y) {
                    bool joined = false;
                    for (auto [from, to] : {std::pair{x, y}, std::pair{y, x}}) {
                        ZeroPosition w{j.arcs[from].row, j.arcs[to].col};
                        auto idx = j.index_of(w);
                        if (j.has_arrow(from, to) && idx && in.contains(*idx))
                            joined = true;
                    }
                    if (! joined)
                        return false;
                }
        return true;
    }

    /// Minimum number of total ideal vertex sets covering J, by breadth-first search over unions.
    inline auto total_covering_number(const Digraph & d) -> int
    {
        auto j = j_digraph(complement(d));
        const int m = j.size();
        if (m == 0)
            return 0;
        std::vector<std::uint64_t> sets;
        for (std::uint64_t s = 1 ; s < (std::uint64_t{1} << m) ; ++s) {
            std::vector<int> vs;
            for (int i = 0 ; i < m ; ++i)
                if ((s >> i) & 1u)
                    vs.push_back(i);
            if (total_ideal(j, vs))
                sets.push_back(s);
        }
        const std::uint64_t goal = (std::uint64_t{1} << m) - 1;
        std::set<std::uint64_t> frontier{0}, seen{0};
        for (int depth = 1 ; ; ++depth) {
            std::set<std::uint64_t> next;
            for (auto f : frontier)
                for (auto s : sets) {
                    auto t = f | s;
                    if (t == goal)
                        return depth;
                    if (seen.insert(t).second)
                        next.insert(t);
                }
            frontier = std::move(next);
        }
    }

    inline auto chromatic_number(const PositionGraph & h) -> int
    {
        const int m = h.size();
        if (m == 0)
            return 0;
        for (int k = 1 ; ; ++k) {
            std::vector<int> colour(m, -1);
            std::function<bool (int)> assign = [&] (int v) {
                if (v == m)
                    return true;
                for (int c = 0 ; c < k ; ++c) {
                    bool ok = true;
                    for (int u = 0 ; u < v && ok ; ++u)
                        ok = ! (h.adjacent(u, v) && colour[u] == c);
                    if (ok) {
                        colour[v] = c;
                        if (assign(v + 1))
                            return true;
                    }
                }
                return false;
            };
            if (assign(0))
                return k;
        }
    }

    /// Isomorphism by trying every permutation.
    inline auto isomorphic(const Digraph & a, const Digraph & b) -> bool
    {
        if (a.size() != b.size())
            return false;
        std::vector<int> p(a.size());
        std::iota(p.begin(), p.end(), 0);
        do {
            if (relabel(a, p) == b)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    }
}
