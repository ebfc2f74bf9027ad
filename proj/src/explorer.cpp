#include <ferrodim/explorer.hpp>
#include <ferrodim/constructions.hpp>
#include <ferrodim/dimensions.hpp>
#include <ferrodim/recognition.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace ferrodim;

namespace
{
    constexpr std::size_t max_listed_failures = 20;

    struct Tally
    {
        std::uint64_t instances = 0;
        std::uint64_t failure_count = 0;
        std::vector<std::string> failures;
        std::vector<std::string> notes;

        auto fail(std::string what) -> void
        {
            ++failure_count;
            if (failures.size() < max_listed_failures)
                failures.push_back(std::move(what));
        }

        auto absorb(Tally && other) -> void
        {
            instances += other.instances;
            failure_count += other.failure_count;
            for (auto & f : other.failures)
                if (failures.size() < max_listed_failures)
                    failures.push_back(std::move(f));
            for (auto & n : other.notes)
                notes.push_back(std::move(n));
        }
    };

    /// Splits items into chunks handled by a pool of threads; chunk tallies merge in chunk order.
    template <typename T, typename Body>
    auto parallel_tally(const std::vector<T> & items, int threads, Body body) -> Tally
    {
        const std::size_t chunk_count = std::min(items.size(), static_cast<std::size_t>(threads) * 8);
        std::vector<Tally> parts(chunk_count);
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;

        auto worker = [&] {
            while (true) {
                std::size_t c = next++;
                if (c >= chunk_count)
                    return;
                std::size_t lo = items.size() * c / chunk_count, hi = items.size() * (c + 1) / chunk_count;
                try {
                    for (std::size_t i = lo ; i < hi ; ++i)
                        body(items[i], parts[c]);
                }
                catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (! error)
                        error = std::current_exception();
                    next = chunk_count;
                }
            }
        };

        if (threads <= 1 || chunk_count <= 1)
            worker();
        else {
            std::vector<std::thread> pool;
            for (int t = 0 ; t < threads ; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
        }
        if (error)
            std::rethrow_exception(error);

        Tally total;
        for (auto & part : parts)
            total.absorb(std::move(part));
        return total;
    }

    auto finish(std::string id, const CampaignConfig & config, Tally && tally) -> CheckReport
    {
        CheckReport r;
        r.id = std::move(id);
        r.seed = config.seed;
        r.instances = tally.instances;
        r.failures = std::move(tally.failures);
        r.notes = std::move(tally.notes);
        r.status = tally.failure_count == 0 ? CheckStatus::pass : CheckStatus::fail;
        if (tally.failure_count > r.failures.size())
            r.notes.push_back(std::to_string(tally.failure_count) + " failures, first "
                    + std::to_string(r.failures.size()) + " listed");
        return r;
    }

    auto describe(const std::string & what, const GraphValue & g) -> std::string
    {
        return what + "\n" + serialize(g);
    }

    auto options_of(const CampaignConfig & config) -> SolveOptions
    {
        return SolveOptions{config.node_budget};
    }

    auto check_cap(int value, int cap, const char * what) -> void
    {
        if (value < 0 || value > cap)
            throw std::invalid_argument(std::string(what) + " must be between 0 and " + std::to_string(cap));
    }

    auto all_digraphs_up_to(int max_n, bool loopless) -> std::vector<Digraph>
    {
        std::vector<Digraph> result;
        for (int n = 1 ; n <= max_n ; ++n)
            for (auto & d : enumerate_digraphs(n, loopless, false))
                result.push_back(std::move(d));
        return result;
    }

    auto all_reflexive_up_to(int max_n, bool dedup) -> std::vector<ReflexiveGraph>
    {
        std::vector<ReflexiveGraph> result;
        for (int n = 1 ; n <= max_n ; ++n)
            for (auto & g : enumerate_reflexive_graphs(n, dedup))
                result.push_back(std::move(g));
        return result;
    }

    auto all_bigraphs_up_to(int side) -> std::vector<Bigraph>
    {
        std::vector<Bigraph> result;
        for (int p = 1 ; p <= side ; ++p)
            for (int q = 1 ; q <= side ; ++q)
                for (auto & b : enumerate_bigraphs(p, q, false))
                    result.push_back(std::move(b));
        return result;
    }

    auto random_digraph(std::mt19937_64 & rng, int n) -> Digraph
    {
        Digraph d(n);
        for (int u = 0 ; u < n ; ++u) {
            auto bits = rng();
            for (int v = 0 ; v < n ; ++v)
                d.set(u, v, (bits >> v) & 1u);
        }
        return d;
    }

    auto random_reflexive_graph(std::mt19937_64 & rng, int n) -> ReflexiveGraph
    {
        Digraph d = Digraph(n);
        for (int u = 0 ; u < n ; ++u) {
            d.set(u, u);
            for (int v = u + 1 ; v < n ; ++v)
                if (rng() & 1u) {
                    d.set(u, v);
                    d.set(v, u);
                }
        }
        return ReflexiveGraph(d);
    }

    /// Every D with D meet its transpose equal to g, one per choice of uv, vu or neither on each non-adjacent pair.
    auto has_symmetric_ferrers_factor(const ReflexiveGraph & g) -> bool
    {
        auto pairs = g.non_edges();
        std::uint64_t total = 1;
        for (std::size_t i = 0 ; i < pairs.size() ; ++i)
            total *= 3;
        for (std::uint64_t code = 0 ; code < total ; ++code) {
            Digraph d = g.digraph();
            std::uint64_t c = code;
            for (auto [u, v] : pairs) {
                if (c % 3 == 1)
                    d.set(u, v);
                else if (c % 3 == 2)
                    d.set(v, u);
                c /= 3;
            }
            if (is_ferrers(d))
                return true;
        }
        return false;
    }

    /// Each way of orienting every edge of a loopless symmetric digraph.
    template <typename Visit>
    auto for_each_orientation(const Digraph & skeleton, Visit visit) -> void
    {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0 ; u < skeleton.size() ; ++u)
            for (int v = u + 1 ; v < skeleton.size() ; ++v)
                if (skeleton.has(u, v))
                    edges.emplace_back(u, v);
        for (std::uint64_t code = 0 ; code < (std::uint64_t{1} << edges.size()) ; ++code) {
            Digraph o(skeleton.size());
            for (std::size_t i = 0 ; i < edges.size() ; ++i) {
                auto [u, v] = edges[i];
                if ((code >> i) & 1u)
                    o.set(v, u);
                else
                    o.set(u, v);
            }
            if (! visit(o))
                return;
        }
    }

    /**
     * Certificate check built on different primitives from the solvers' own
     * verification: couple search for Ferrers factors, quasi-linear orders for
     * interval factors, and a row-wise intersection.
     */
    auto recheck_certificate(const CoverCertificate & cert, const Digraph & source) -> std::optional<std::string>
    {
        const int n = source.size();
        std::vector<VertexSet> meet(n, low_bits(n));
        for (std::size_t i = 0 ; i < cert.factors.size() ; ++i) {
            const auto & f = cert.factors[i];
            if (f.size() != n)
                return "factor " + std::to_string(i) + " has the wrong size";
            for (int u = 0 ; u < n ; ++u) {
                if (source.row(u) & ~f.row(u))
                    return "factor " + std::to_string(i) + " misses an arc of the source";
                meet[u] &= f.row(u);
            }
            if (cert.kind == FactorKind::ferrers) {
                if (find_couple(f))
                    return "factor " + std::to_string(i) + " contains a couple";
            }
            else {
                if (! f.is_symmetric() || ! f.is_reflexive())
                    return "factor " + std::to_string(i) + " is not a reflexive graph";
                if (! quasi_linear_order(ReflexiveGraph(f)))
                    return "factor " + std::to_string(i) + " has no quasi-linear order";
            }
        }
        for (int u = 0 ; u < n ; ++u)
            if (meet[u] != source.row(u))
                return std::string("factors do not intersect to the source");
        return std::nullopt;
    }

    auto colouring_text(const PositionGraph & h, const std::vector<int> & colouring) -> std::string
    {
        std::string out;
        for (int i = 0 ; i < h.size() ; ++i)
            out += entry_name(h.vertices[i]) + "=" + std::to_string(colouring[i]) + (i + 1 < h.size() ? " " : "");
        return out;
    }

    auto certificate_text(const CoverCertificate & cert) -> std::string
    {
        std::string out;
        for (const auto & f : cert.factors)
            out += serialize(f);
        return out;
    }

    auto c4_digraph() -> Digraph { return patterns::cycle(4).digraph(); }
    auto c6_digraph() -> Digraph { return patterns::cycle(6).digraph(); }
}

auto ferrodim::to_string(CheckStatus s) -> std::string
{
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::counterexample_found: return "counterexample-found";
    }
    return "fail";
}

auto ferrodim::enumerate_digraphs(int n, bool loopless, bool dedup, const EnumCaps & caps) -> std::vector<Digraph>
{
    check_cap(n, caps.digraph_n, "digraph size");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0 ; u < n ; ++u)
        for (int v = 0 ; v < n ; ++v)
            if (! loopless || u != v)
                slots.emplace_back(u, v);

    std::vector<Digraph> result;
    std::set<std::uint64_t> seen;
    for (std::uint64_t code = 0 ; code < (std::uint64_t{1} << slots.size()) ; ++code) {
        Digraph d(n);
        for (std::size_t i = 0 ; i < slots.size() ; ++i)
            if ((code >> i) & 1u)
                d.set(slots[i].first, slots[i].second);
        if (dedup && ! seen.insert(canonical_key(d)).second)
            continue;
        result.push_back(std::move(d));
    }
    return result;
}

auto ferrodim::enumerate_reflexive_graphs(int n, bool dedup, const EnumCaps & caps) -> std::vector<ReflexiveGraph>
{
    check_cap(n, caps.reflexive_n, "reflexive graph size");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            slots.emplace_back(u, v);

    std::vector<ReflexiveGraph> result;
    std::set<std::uint64_t> seen;
    for (std::uint64_t code = 0 ; code < (std::uint64_t{1} << slots.size()) ; ++code) {
        Digraph d(n);
        for (int v = 0 ; v < n ; ++v)
            d.set(v, v);
        for (std::size_t i = 0 ; i < slots.size() ; ++i)
            if ((code >> i) & 1u) {
                d.set(slots[i].first, slots[i].second);
                d.set(slots[i].second, slots[i].first);
            }
        if (dedup && ! seen.insert(canonical_key(d)).second)
            continue;
        result.emplace_back(d);
    }
    return result;
}

auto ferrodim::enumerate_bigraphs(int p, int q, bool dedup, const EnumCaps & caps) -> std::vector<Bigraph>
{
    check_cap(p, caps.bigraph_side, "bigraph rows");
    check_cap(q, caps.bigraph_side, "bigraph columns");

    auto key = [&] (const Bigraph & b) {
        std::vector<int> rows(p), cols(q);
        std::iota(rows.begin(), rows.end(), 0);
        std::uint64_t best = ~std::uint64_t{0};
        do {
            std::iota(cols.begin(), cols.end(), 0);
            do {
                std::uint64_t k = 0;
                for (int x = 0 ; x < p ; ++x)
                    for (int y = 0 ; y < q ; ++y)
                        k = (k << 1) | (b.has(rows[x], cols[y]) ? 1u : 0u);
                best = std::min(best, k);
            } while (std::next_permutation(cols.begin(), cols.end()));
        } while (std::next_permutation(rows.begin(), rows.end()));
        return best;
    };

    std::vector<Bigraph> result;
    std::set<std::uint64_t> seen;
    for (std::uint64_t code = 0 ; code < (std::uint64_t{1} << (p * q)) ; ++code) {
        Bigraph b(p, q);
        for (int i = 0 ; i < p * q ; ++i)
            if ((code >> i) & 1u)
                b.set(i / q, i % q);
        if (dedup && ! seen.insert(key(b)).second)
            continue;
        result.push_back(std::move(b));
    }
    return result;
}

auto ferrodim::enumerate(const EnumSpec & spec, const EnumCaps & caps) -> std::vector<GraphValue>
{
    std::vector<GraphValue> result;
    switch (spec.graph_class) {
        case GraphClass::digraph:
        case GraphClass::loopless_digraph:
            for (auto & d : enumerate_digraphs(spec.n, spec.graph_class == GraphClass::loopless_digraph, spec.dedup, caps))
                result.emplace_back(std::move(d));
            break;
        case GraphClass::reflexive_graph:
            for (auto & g : enumerate_reflexive_graphs(spec.n, spec.dedup, caps))
                result.emplace_back(std::move(g));
            break;
        case GraphClass::bigraph:
            for (auto & b : enumerate_bigraphs(spec.p, spec.q, spec.dedup, caps))
                result.emplace_back(std::move(b));
            break;
    }
    return result;
}

auto ferrodim::to_json_line(const CheckReport & r) -> std::string
{
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    j["instances"] = r.instances;
    j["failures"] = r.failures;
    j["seed"] = r.seed;
    j["notes"] = r.notes;
    return j.dump();
}

auto ferrodim::worker_count(const CampaignConfig & config) -> int
{
    if (config.threads > 0)
        return config.threads;
    if (const char * env = std::getenv("FERRODIM_THREADS")) {
        int t = std::atoi(env);
        if (t > 0)
            return t;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

auto ferrodim::check_interval_symmetric_factor(const CampaignConfig & config) -> CheckReport
{
    auto graphs = all_reflexive_up_to(config.symmetric_factor_n, false);
    auto tally = parallel_tally(graphs, worker_count(config), [&] (const ReflexiveGraph & g, Tally & t) {
        ++t.instances;
        auto model = is_interval(g);
        if (model) {
            Digraph f = ferrers_factor(*model);
            if (! f.is_reflexive() || ! is_ferrers(f) || intersect({f, transpose(f)}) != g.digraph())
                t.fail(describe("factor built from the interval model is not a reflexive Ferrers factor", g));
        }
        bool factor_exists = has_symmetric_ferrers_factor(g);
        if (model.has_value() != factor_exists)
            t.fail(describe(model ? "interval graph without a symmetric Ferrers factor"
                        : "non-interval graph with a symmetric Ferrers factor", g));
        if (static_cast<int>(g.non_edges().size()) <= max_symmetric_factor_non_edges) {
            int k = min_symmetric_factor_dimension(g, options_of(config)).dimension;
            if ((k <= 1) != factor_exists)
                t.fail(describe("minimum symmetric factor dimension disagrees with the direct search", g));
        }
    });
    return finish("symmetric-factor", config, std::move(tally));
}

auto ferrodim::check_ferrers_characterization(const CampaignConfig & config) -> CheckReport
{
    const Digraph arcs_2k2 = patterns::disjoint_arcs();
    auto digraphs = all_digraphs_up_to(config.characterization_n, true);
    auto tally = parallel_tally(digraphs, worker_count(config), [&] (const Digraph & d, Tally & t) {
        ++t.instances;
        bool free_of_2k2 = d.size() < arcs_2k2.size() || ! contains_induced(d, arcs_2k2);
        bool ferrers = is_ferrers(d).has_value();
        if (ferrers != (is_transitively_oriented(d) && free_of_2k2))
            t.fail(describe(ferrers ? "Ferrers digraph that is not a transitively oriented 2K2-free digraph"
                        : "transitively oriented 2K2-free digraph that is not Ferrers", d));
    });

    // The two cautionary combinations are searched for, smallest first.
    auto first_match = [&] (bool loopless, auto predicate) -> std::optional<Digraph> {
        for (int n = 1 ; n <= std::min(config.cautionary_search_n, 4) ; ++n)
            for (auto & d : enumerate_digraphs(n, loopless, false))
                if (predicate(d))
                    return d;
        return std::nullopt;
    };
    auto free_of_2k2 = [&] (const Digraph & d) { return d.size() < arcs_2k2.size() || ! contains_induced(d, arcs_2k2); };

    auto not_transitive = first_match(true, [&] (const Digraph & d) {
        return is_oriented(d) && free_of_2k2(d) && ! is_transitive(d);
    });
    if (not_transitive)
        tally.notes.push_back(describe("oriented, 2K2-free, not transitive, not Ferrers:", *not_transitive));
    else
        tally.fail("no oriented 2K2-free non-transitive digraph found");

    auto transitive_non_ferrers = [&] (const Digraph & d) {
        return is_transitive(d) && free_of_2k2(d) && ! is_ferrers(d);
    };
    if (auto loopless_hit = first_match(true, transitive_non_ferrers))
        tally.fail(describe("loopless transitive 2K2-free non-Ferrers digraph contradicts the characterization", *loopless_hit));
    else
        tally.notes.push_back("no loopless transitive 2K2-free non-Ferrers digraph up to "
                + std::to_string(std::min(config.cautionary_search_n, 4)) + " vertices; searching with loops allowed");
    if (auto hit = first_match(false, transitive_non_ferrers))
        tally.notes.push_back(describe("transitive, 2K2-free, not Ferrers:", *hit));
    else
        tally.fail("no transitive 2K2-free non-Ferrers digraph found");

    return finish("ferrers-characterization", config, std::move(tally));
}

auto ferrodim::check_interval_orders(const CampaignConfig & config) -> CheckReport
{
    auto digraphs = all_digraphs_up_to(config.characterization_n, true);
    auto tally = parallel_tally(digraphs, worker_count(config), [&] (const Digraph & d, Tally & t) {
        ++t.instances;
        if (is_interval_order(d) != (is_transitive(d) && is_ferrers(d).has_value()))
            t.fail(describe("interval order test disagrees with transitive and Ferrers", d));
    });
    return finish("interval-orders", config, std::move(tally));
}

auto ferrodim::check_co_interval_orientations(const CampaignConfig & config) -> CheckReport
{
    auto graphs = all_reflexive_up_to(config.co_interval_n, false);
    auto tally = parallel_tally(graphs, worker_count(config), [&] (const ReflexiveGraph & g, Tally & t) {
        ++t.instances;
        const bool interval = is_interval(g).has_value();
        const Digraph co = complement(g.digraph());
        bool transitive_non_ferrers = false, ferrers_orientation = false;
        for_each_orientation(co, [&] (const Digraph & o) {
            bool ferrers = is_ferrers(o).has_value();
            ferrers_orientation = ferrers_orientation || ferrers;
            transitive_non_ferrers = transitive_non_ferrers || (is_transitive(o) && ! ferrers);
            return ! (ferrers_orientation && transitive_non_ferrers);
        });
        if (interval && transitive_non_ferrers)
            t.fail(describe("co-interval graph with a transitive orientation that is not Ferrers", g));
        if (interval != ferrers_orientation)
            t.fail(describe(interval ? "interval graph whose complement has no Ferrers orientation"
                        : "non-interval graph whose complement has a Ferrers orientation", g));
        if (interval) {
            auto o = transitive_orientation(co);
            if (! o || ! is_ferrers(o->arcs))
                t.fail(describe("orientation found for a co-interval graph is not Ferrers", g));
        }
    });
    return finish("co-interval", config, std::move(tally));
}

auto ferrodim::check_two_clique_completion(const CampaignConfig & config) -> CheckReport
{
    auto bigraphs = all_bigraphs_up_to(config.bigraph_side);
    auto tally = parallel_tally(bigraphs, worker_count(config), [&] (const Bigraph & b, Tally & t) {
        ++t.instances;
        const bool ferrers = is_ferrers_bigraph(b).has_value();
        auto h = hat(b);
        if (! is_two_clique_cover(h.graph, h.cover))
            t.fail(describe("two-clique completion lost its clique cover", b));
        const bool interval = is_interval(h.graph).has_value();
        if (ferrers != interval)
            t.fail(describe(ferrers ? "Ferrers bigraph whose completion is not interval"
                        : "non-Ferrers bigraph whose completion is interval", b));
        if (interval) {
            if (! is_indifference(h.graph))
                t.fail(describe("two-clique interval graph that is not an indifference graph", b));
            auto extraction = two_clique_to_ferrers(h.graph, h.cover);
            bool same = is_ferrers_bigraph(extraction.block).has_value();
            for (int x = 0 ; x < b.rows() && same ; ++x)
                for (int y = 0 ; y < b.cols() && same ; ++y)
                    same = extraction.block.has(x, y) == b.has(extraction.x_order[x], extraction.y_order[y] - b.rows());
            if (! same)
                t.fail(describe("extracted block does not reproduce the bigraph", b));
        }
        if (ferrers != is_interval(hat(complement(b)).graph).has_value())
            t.fail(describe("graph complement test disagrees with the Ferrers test", b));
    });
    return finish("two-clique", config, std::move(tally));
}

auto ferrodim::check_boxicity_symmetric_factor(const CampaignConfig & config) -> CheckReport
{
    std::vector<ReflexiveGraph> graphs;
    for (auto & g : all_reflexive_up_to(config.boxicity_factor_n, true))
        if (static_cast<int>(g.non_edges().size()) <= config.boxicity_factor_non_edges)
            graphs.push_back(std::move(g));
    graphs.push_back(patterns::cycle(4));

    auto tally = parallel_tally(graphs, worker_count(config), [&] (const ReflexiveGraph & g, Tally & t) {
        ++t.instances;
        int b = boxicity(g, options_of(config)).boxicity;
        auto sym = min_symmetric_factor_dimension(g, options_of(config));
        if (b != sym.dimension)
            t.fail(describe("boxicity " + std::to_string(b) + " but minimum symmetric factor dimension "
                        + std::to_string(sym.dimension), g));
    });
    return finish("boxicity-factor", config, std::move(tally));
}

auto ferrodim::check_bigraph_boxicity(const CampaignConfig & config) -> CheckReport
{
    auto bigraphs = all_bigraphs_up_to(config.bigraph_side);
    auto tally = parallel_tally(bigraphs, worker_count(config), [&] (const Bigraph & b, Tally & t) {
        ++t.instances;
        int k = bigraph_ferrers_dimension(b, options_of(config)).dimension;
        int box = boxicity(hat(b).graph, options_of(config)).boxicity;
        if (k != box)
            t.fail(describe("Ferrers dimension " + std::to_string(k) + " but boxicity of the completion "
                        + std::to_string(box), b));
        if (interval_bigraph_witness(b) && k > 2)
            t.fail(describe("interval bigraph with Ferrers dimension above two", b));
    });
    return finish("bigraph-boxicity", config, std::move(tally));
}

auto ferrodim::check_boxicity_bounds(const CampaignConfig & config) -> CheckReport
{
    std::vector<ReflexiveGraph> graphs;
    for (auto & g : all_reflexive_up_to(config.bounds_n, true))
        if (! g.is_complete())
            graphs.push_back(std::move(g));

    std::atomic<std::uint64_t> upper_tight{0}, lower_tight{0};
    auto tally = parallel_tally(graphs, worker_count(config), [&] (const ReflexiveGraph & g, Tally & t) {
        ++t.instances;
        int b = boxicity(g, options_of(config)).boxicity;
        int k = ferrers_dimension(g.digraph(), options_of(config)).dimension;
        if (k > 2 * b || b > k - 1)
            t.fail(describe("boxicity " + std::to_string(b) + ", Ferrers dimension " + std::to_string(k)
                        + " violates the bounds", g));
        upper_tight += k == 2 * b;
        lower_tight += b == k - 1;
        int chi = chromatic_number(couple_graph(g.digraph()), options_of(config)).colours;
        if (chi > k)
            t.fail(describe("couple graph needs more colours than the Ferrers dimension", g));
    });

    auto fixture = [&] (const char * name, const ReflexiveGraph & g, int want_b, int want_k) {
        int b = boxicity(g).boxicity;
        int k = ferrers_dimension(g.digraph()).dimension;
        if (b != want_b || k != want_k)
            tally.fail(std::string(name) + ": boxicity " + std::to_string(b) + ", Ferrers dimension " + std::to_string(k));
    };
    fixture("C4", patterns::cycle(4), 2, 4);
    fixture("C6", patterns::cycle(6), 2, 3);

    auto factors = fixtures::c6_ferrers_factors();
    for (std::size_t i = 0 ; i < factors.size() ; ++i)
        if (! is_ferrers(factors[i]))
            tally.fail("C6 decomposition factor " + std::to_string(i + 1) + " is not Ferrers");
    if (intersect(std::span<const Digraph>(factors)) != c6_digraph())
        tally.fail("C6 decomposition does not intersect to D(C6)");

    tally.notes.push_back(std::to_string(upper_tight.load()) + " graphs with k = 2b");
    tally.notes.push_back(std::to_string(lower_tight.load()) + " graphs with b = k - 1");
    return finish("boxicity-bounds", config, std::move(tally));
}

auto ferrodim::check_total_cover(const CampaignConfig & config) -> CheckReport
{
    auto digraphs = all_digraphs_up_to(config.total_cover_exhaustive_n, false);
    std::mt19937_64 rng(config.seed);
    for (int n : {4, 5})
        for (int i = 0 ; i < config.random_samples ; ++i)
            digraphs.push_back(random_digraph(rng, n));

    auto tally = parallel_tally(digraphs, worker_count(config), [&] (const Digraph & d, Tally & t) {
        ++t.instances;
        auto df = ferrers_dimension(d, options_of(config));
        auto tc = total_covering_number(d, options_of(config));
        if (df.dimension != tc.number)
            t.fail(describe("Ferrers dimension " + std::to_string(df.dimension) + " but total covering number "
                        + std::to_string(tc.number), d));
        auto chi = chromatic_number(couple_graph(d), options_of(config));
        if (chi.colours > df.dimension)
            t.fail(describe("couple graph needs more colours than the Ferrers dimension", d));
        else if (chi.colours < df.dimension)
            t.notes.push_back(describe("strict: chi " + std::to_string(chi.colours) + " < d_F "
                        + std::to_string(df.dimension), d));
    });
    return finish("total-cover", config, std::move(tally));
}

auto ferrodim::check_at_most_two(const CampaignConfig & config) -> CheckReport
{
    auto digraphs = all_digraphs_up_to(config.at_most_two_n, false);
    auto tally = parallel_tally(digraphs, worker_count(config), [&] (const Digraph & d, Tally & t) {
        ++t.instances;
        bool bipartite = ferrers_dim_at_most_2(d);
        bool small = ferrers_dimension(d, options_of(config)).dimension <= 2;
        if (bipartite != small)
            t.fail(describe(bipartite ? "bipartite couple graph but Ferrers dimension above two"
                        : "Ferrers dimension at most two but couple graph not bipartite", d));
    });
    return finish("at-most-two", config, std::move(tally));
}

auto ferrodim::check_recognition_triangle(const CampaignConfig & config) -> CheckReport
{
    const Digraph c4 = c4_digraph();
    auto graphs = all_reflexive_up_to(config.triangle_n, false);
    auto tally = parallel_tally(graphs, worker_count(config), [&] (const ReflexiveGraph & g, Tally & t) {
        ++t.instances;
        bool interval = is_interval(g).has_value();
        auto order = quasi_linear_order(g);
        if (order && ! has_quasi_linear_property(g, *order))
            t.fail(describe("returned order lacks the quasi-linear property", g));
        bool c4_free = g.size() < 4 || ! contains_induced(g.digraph(), c4);
        bool co_orientable = transitive_orientation(complement(g.digraph())).has_value();
        if (interval != order.has_value() || interval != (c4_free && co_orientable))
            t.fail(describe("interval " + std::to_string(interval) + ", quasi-linear " + std::to_string(order.has_value())
                        + ", C4-free and co-orientable " + std::to_string(c4_free && co_orientable), g));
    });
    return finish("triangle", config, std::move(tally));
}

auto ferrodim::check_certificates(const CampaignConfig & config) -> CheckReport
{
    struct Input
    {
        Digraph digraph;
        ReflexiveGraph graph;
    };
    std::mt19937_64 rng(config.seed);
    std::vector<Input> inputs;
    for (int i = 0 ; i < config.fuzz_samples ; ++i) {
        int n = 1 + static_cast<int>(rng() % max_total_cover_vertices);
        Digraph d = random_digraph(rng, std::min(n, 5));
        int m = 1 + static_cast<int>(rng() % 6);
        inputs.push_back({d, random_reflexive_graph(rng, m)});
    }

    auto tally = parallel_tally(inputs, worker_count(config), [&] (const Input & in, Tally & t) {
        t.instances += 2;
        auto df = ferrers_dimension(in.digraph, options_of(config));
        if (auto why = recheck_certificate(df.certificate, in.digraph))
            t.fail(describe("Ferrers dimension certificate: " + *why, in.digraph));
        if (static_cast<int>(df.certificate.factors.size()) != df.dimension)
            t.fail(describe("Ferrers dimension certificate has the wrong factor count", in.digraph));

        auto tc = total_covering_number(in.digraph, options_of(config));
        if (auto why = recheck_certificate(tc.certificate, in.digraph))
            t.fail(describe("total cover certificate: " + *why, in.digraph));
        for (const auto & s : tc.cover.subsets)
            if (! is_total_ideal(tc.j, s))
                t.fail(describe("total cover contains a set that is not total ideal", in.digraph));

        auto box = boxicity(in.graph, options_of(config));
        if (auto why = recheck_certificate(box.certificate, in.graph.digraph()))
            t.fail(describe("boxicity certificate: " + *why, in.graph));
        if (static_cast<int>(box.certificate.factors.size()) != box.boxicity)
            t.fail(describe("boxicity certificate has the wrong factor count", in.graph));
    });
    return finish("certificates", config, std::move(tally));
}

auto ferrodim::check_identity_example(const CampaignConfig & config) -> CheckReport
{
    Tally tally;
    tally.instances = 1;
    const Digraph d = fixtures::identity_example_digraph();
    auto h = couple_graph(d);

    auto index = [&] (int r, int c) { return *h.index_of({r, c}); };
    std::vector<ZeroPosition> first{{0, 1}, {1, 2}, {2, 0}};
    std::vector<int> colouring(h.size(), 1);
    for (auto z : first)
        colouring[index(z.row, z.col)] = 0;

    if (! is_proper_colouring(h, colouring))
        tally.fail("colouring {ab, bc, ca} / {ba, cb, ac} is not proper");
    if (is_ferrers_closed(first))
        tally.fail("class {ab, bc, ca} is Ferrers-closed");

    auto result = ferrers_dimension(d, options_of(config));
    if (result.dimension != 2)
        tally.fail("Ferrers dimension " + std::to_string(result.dimension) + ", expected 2");
    if (! verify_certificate(result.certificate, d) || recheck_certificate(result.certificate, d))
        tally.fail("Ferrers dimension certificate does not verify");
    tally.notes.push_back("colouring " + colouring_text(h, colouring));
    return finish("identity-example", config, std::move(tally));
}

auto ferrodim::search_chi_counterexample(int max_n, const CampaignConfig & config) -> CheckReport
{
    check_cap(max_n, 4, "exhaustive chi search size");
    auto digraphs = all_digraphs_up_to(max_n, false);
    std::mt19937_64 rng(config.seed);
    for (int i = 0 ; i < config.random_samples ; ++i)
        digraphs.push_back(random_digraph(rng, 5));

    std::atomic<std::uint64_t> discoveries{0};
    auto tally = parallel_tally(digraphs, worker_count(config), [&] (const Digraph & d, Tally & t) {
        ++t.instances;
        auto chi = chromatic_number(couple_graph(d), options_of(config));
        auto df = ferrers_dimension(d, options_of(config));
        if (chi.colours > df.dimension)
            t.fail(describe("couple graph needs more colours than the Ferrers dimension", d));
        else if (chi.colours < df.dimension) {
            std::string artifact = describe("chi " + std::to_string(chi.colours) + " < d_F " + std::to_string(df.dimension), d)
                + "# colouring " + colouring_text(couple_graph(d), chi.colouring) + "\n"
                + "# Ferrers factors\n" + certificate_text(df.certificate);
            if (d.size() <= 3)
                t.fail(artifact);
            else {
                ++discoveries;
                t.notes.push_back(artifact);
            }
        }
    });
    auto report = finish("chi", config, std::move(tally));
    if (report.status == CheckStatus::pass && discoveries > 0)
        report.status = CheckStatus::counterexample_found;
    return report;
}

auto fixtures::c6_ferrers_factors() -> std::vector<Digraph>
{
    return {
        Digraph::from_rows({"110001", "111001", "111111", "111111", "111111", "111011"}),
        Digraph::from_rows({"111111", "111110", "011100", "011110", "111111", "111111"}),
        Digraph::from_rows({"111111", "111111", "111111", "101111", "000111", "100111"}),
    };
}

auto fixtures::identity_example_digraph() -> Digraph
{
    return Digraph::from_rows({"100", "010", "001"});
}

auto fixtures::run_all() -> std::vector<FixtureResult>
{
    std::vector<FixtureResult> results;
    auto record = [&] (std::string name, bool pass, std::string detail = "") {
        results.push_back({std::move(name), pass, std::move(detail)});
    };
    auto value = [] (int got, int want) { return "got " + std::to_string(got) + ", expected " + std::to_string(want); };

    const auto c4 = patterns::cycle(4);
    int box_c4 = boxicity(c4).boxicity;
    int df_c4 = ferrers_dimension(c4.digraph()).dimension;
    record("C4 boxicity", box_c4 == 2, value(box_c4, 2));
    record("C4 Ferrers dimension", df_c4 == 4, value(df_c4, 4));
    auto h4 = couple_graph(c4.digraph());
    record("C4 couple graph is K4", h4.size() == 4 && h4.edge_count() == 6);

    const auto c6 = patterns::cycle(6);
    int box_c6 = boxicity(c6).boxicity;
    int df_c6 = ferrers_dimension(c6.digraph()).dimension;
    record("C6 boxicity", box_c6 == 2, value(box_c6, 2));
    record("C6 Ferrers dimension", df_c6 == 3, value(df_c6, 3));
    auto factors = c6_ferrers_factors();
    for (std::size_t i = 0 ; i < factors.size() ; ++i)
        record("C6 factor " + std::to_string(i + 1) + " is Ferrers", is_ferrers(factors[i]).has_value());
    record("C6 factors intersect to D(C6)", intersect(std::span<const Digraph>(factors)) == c6.digraph());
    auto h6 = couple_graph(c6.digraph());
    auto ad = *h6.index_of({0, 3}), cf = *h6.index_of({2, 5}), eb = *h6.index_of({4, 1});
    record("C6 zeros ad, cf, eb form a triangle of couples",
            h6.adjacent(ad, cf) && h6.adjacent(ad, eb) && h6.adjacent(cf, eb));

    auto ex1 = check_identity_example({});
    record("identity example colouring proper, class not closed, dimension 2", ex1.status == CheckStatus::pass,
            ex1.failures.empty() ? "" : ex1.failures.front());

    const auto arcs_2k2 = patterns::disjoint_arcs();
    record("two disjoint arcs: transitively oriented", is_transitively_oriented(arcs_2k2));
    record("two disjoint arcs: not Ferrers", ! is_ferrers(arcs_2k2));

    const auto staircase = Bigraph::from_rows({"100", "110", "111"});
    record("completion of a staircase bigraph is interval", is_interval(hat(staircase).graph).has_value());
    const auto identity = Bigraph::from_rows({"10", "01"});
    record("completion of the 2x2 identity bigraph is not interval", ! is_interval(hat(identity).graph));
    int df_id = bigraph_ferrers_dimension(identity).dimension;
    int box_id = boxicity(hat(identity).graph).boxicity;
    record("2x2 identity bigraph: Ferrers dimension equals boxicity of completion", df_id == box_id && df_id == 2,
            "Ferrers dimension " + std::to_string(df_id) + ", boxicity " + std::to_string(box_id));

    record("P3 interval", is_interval(patterns::path(3)).has_value());
    int box_k5 = boxicity(patterns::complete(5)).boxicity;
    record("K5 boxicity", box_k5 == 0, value(box_k5, 0));
    return results;
}

auto ferrodim::campaign_checks() -> const std::vector<CheckEntry> &
{
    static const std::vector<CheckEntry> checks{
        {"symmetric-factor", "interval iff a reflexive Ferrers F has F meet F^T = G", check_interval_symmetric_factor},
        {"ferrers-characterization", "loopless Ferrers iff transitively oriented and 2K2-free", check_ferrers_characterization},
        {"interval-orders", "interval orders are the transitive Ferrers digraphs", check_interval_orders},
        {"co-interval", "orientations of co-interval graphs", check_co_interval_orientations},
        {"two-clique", "Ferrers bigraph iff two-clique completion is interval", check_two_clique_completion},
        {"boxicity-factor", "boxicity equals minimum symmetric factor dimension", check_boxicity_symmetric_factor},
        {"bigraph-boxicity", "bigraph Ferrers dimension equals boxicity of completion", check_bigraph_boxicity},
        {"boxicity-bounds", "k/2 <= b <= k - 1 with C4 and C6 tight", check_boxicity_bounds},
        {"total-cover", "Ferrers dimension equals total covering number", check_total_cover},
        {"at-most-two", "d_F <= 2 iff couple graph bipartite", check_at_most_two},
        {"triangle", "interval, quasi-linear, C4-free and co-orientable agree", check_recognition_triangle},
        {"chi", "search for chi(H) < d_F", [] (const CampaignConfig & c) { return search_chi_counterexample(c.chi_exhaustive_n, c); }},
        {"certificates", "random certificates re-verify", check_certificates},
        {"identity-example", "proper 2-colouring whose class is not Ferrers-closed", check_identity_example},
    };
    return checks;
}

auto ferrodim::run_campaign(const std::vector<std::string> & ids, const CampaignConfig & config) -> std::vector<CheckReport>
{
    const auto & checks = campaign_checks();
    for (const auto & id : ids)
        if (std::none_of(checks.begin(), checks.end(), [&] (const CheckEntry & c) { return c.id == id; }))
            throw std::invalid_argument("unknown check id '" + id + "'");

    std::vector<CheckReport> reports;
    for (const auto & c : checks)
        if (ids.empty() || std::find(ids.begin(), ids.end(), c.id) != ids.end())
            reports.push_back(c.run(config));
    return reports;
}

auto ferrodim::summary_table(const std::vector<CheckReport> & reports) -> std::string
{
    std::ostringstream out;
    out << std::left << std::setw(26) << "check" << std::setw(22) << "status" << std::right
        << std::setw(10) << "instances" << std::setw(10) << "failures" << "\n";
    for (const auto & r : reports)
        out << std::left << std::setw(26) << r.id << std::setw(22) << to_string(r.status) << std::right
            << std::setw(10) << r.instances << std::setw(10) << r.failures.size() << "\n";
    return out.str();
}
