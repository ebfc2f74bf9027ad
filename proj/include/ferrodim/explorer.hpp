#pragma once

/**
 * Exhaustive and seeded-random enumeration of small instances, and the
 * campaign of checks that re-derive each claimed equivalence, bound and
 * fixture from the solvers.
 */

#include <ferrodim/core.hpp>
#include <ferrodim/matrix_io.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ferrodim
{
    enum class GraphClass
    {
        digraph,
        reflexive_graph,
        loopless_digraph,
        bigraph
    };

    struct EnumSpec
    {
        GraphClass graph_class = GraphClass::digraph;
        int n = 0;
        /// Bigraph shape; n is ignored for bigraphs.
        int p = 0, q = 0;
        bool dedup = false;
    };

    /// Enumeration limits; enumerate() refuses anything larger.
    struct EnumCaps
    {
        int digraph_n = 4;
        int reflexive_n = 6;
        int bigraph_side = 3;
    };

    /**
     * Every labelled instance in increasing bit order, or with dedup the first
     * member of each isomorphism class in that order. Bigraphs are deduplicated
     * under independent row and column permutations.
     */
    auto enumerate(const EnumSpec & spec, const EnumCaps & caps = {}) -> std::vector<GraphValue>;

    auto enumerate_digraphs(int n, bool loopless, bool dedup, const EnumCaps & caps = {}) -> std::vector<Digraph>;
    auto enumerate_reflexive_graphs(int n, bool dedup, const EnumCaps & caps = {}) -> std::vector<ReflexiveGraph>;
    auto enumerate_bigraphs(int p, int q, bool dedup, const EnumCaps & caps = {}) -> std::vector<Bigraph>;

    enum class CheckStatus
    {
        pass,
        fail,
        counterexample_found
    };

    auto to_string(CheckStatus s) -> std::string;

    struct CheckReport
    {
        std::string id;
        std::uint64_t instances = 0;
        std::vector<std::string> failures;
        CheckStatus status = CheckStatus::pass;
        std::uint64_t seed = 0;
        std::vector<std::string> notes;
    };

    /// One JSON object, keys in a fixed order, no trailing newline.
    auto to_json_line(const CheckReport & r) -> std::string;

    struct CampaignConfig
    {
        std::uint64_t seed = 0;
        /// Zero reads FERRODIM_THREADS, falling back to the hardware count.
        int threads = 0;
        std::uint64_t node_budget = 0;

        int symmetric_factor_n = 5;
        int characterization_n = 4;
        int cautionary_search_n = 6;
        int co_interval_n = 5;
        int bigraph_side = 3;
        int boxicity_factor_n = 5;
        int boxicity_factor_non_edges = 4;
        int bounds_n = 6;
        int total_cover_exhaustive_n = 3;
        int at_most_two_n = 4;
        int triangle_n = 6;
        int chi_exhaustive_n = 4;

        int random_samples = 1000;
        int fuzz_samples = 10000;
    };

    auto worker_count(const CampaignConfig & config) -> int;

    auto check_interval_symmetric_factor(const CampaignConfig & config = {}) -> CheckReport;
    auto check_ferrers_characterization(const CampaignConfig & config = {}) -> CheckReport;
    auto check_interval_orders(const CampaignConfig & config = {}) -> CheckReport;
    auto check_co_interval_orientations(const CampaignConfig & config = {}) -> CheckReport;
    auto check_two_clique_completion(const CampaignConfig & config = {}) -> CheckReport;
    auto check_boxicity_symmetric_factor(const CampaignConfig & config = {}) -> CheckReport;
    auto check_bigraph_boxicity(const CampaignConfig & config = {}) -> CheckReport;
    auto check_boxicity_bounds(const CampaignConfig & config = {}) -> CheckReport;
    auto check_total_cover(const CampaignConfig & config = {}) -> CheckReport;
    auto check_at_most_two(const CampaignConfig & config = {}) -> CheckReport;
    auto check_recognition_triangle(const CampaignConfig & config = {}) -> CheckReport;
    auto check_certificates(const CampaignConfig & config = {}) -> CheckReport;
    auto check_identity_example(const CampaignConfig & config = {}) -> CheckReport;

    /**
     * Looks for D with chi(H(D)) < d_F(D): exhaustive up to max_n vertices,
     * then config.random_samples seeded digraphs on five vertices. A hit on
     * at most three vertices is a failure; larger hits are reported as
     * counterexamples with both certificates.
     */
    auto search_chi_counterexample(int max_n, const CampaignConfig & config = {}) -> CheckReport;

    namespace fixtures
    {
        /// Three Ferrers digraphs on a..f whose intersection is D(C6).
        auto c6_ferrers_factors() -> std::vector<Digraph>;

        /// Loops only on three vertices; its couple graph is a perfect matching.
        auto identity_example_digraph() -> Digraph;

        struct FixtureResult
        {
            std::string name;
            bool pass = false;
            std::string detail;
        };

        /// Fixed regression fixtures in a stable order.
        auto run_all() -> std::vector<FixtureResult>;
    }

    struct CheckEntry
    {
        std::string id;
        std::string description;
        std::function<CheckReport (const CampaignConfig &)> run;
    };

    /// All checks in campaign order.
    auto campaign_checks() -> const std::vector<CheckEntry> &;

    /// Runs the named checks, or all when ids is empty. Throws std::invalid_argument on an unknown id.
    auto run_campaign(const std::vector<std::string> & ids, const CampaignConfig & config = {}) -> std::vector<CheckReport>;

    /// Fixed-width summary table, one row per report.
    auto summary_table(const std::vector<CheckReport> & reports) -> std::string;
}
