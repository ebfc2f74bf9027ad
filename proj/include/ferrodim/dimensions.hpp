#pragma once

/**
 * Exact solvers for boxicity, Ferrers dimension and the related covering
 * numbers. Every solver returns a certificate that is re-verified before it
 * leaves this module.
 */

#include <ferrodim/constructions.hpp>
#include <ferrodim/core.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ferrodim
{
    struct SolveOptions
    {
        /// Search nodes allowed before giving up; zero means unlimited.
        std::uint64_t node_budget = 0;
    };

    /// Thrown when a solver exhausts its node budget; the answer is unknown.
    class BudgetExceeded : public std::runtime_error
    {
        public:
            explicit BudgetExceeded(const std::string & solver) :
                std::runtime_error(solver + ": node budget exceeded")
            {
            }
    };

    enum class FactorKind
    {
        interval,
        ferrers
    };

    auto to_string(FactorKind k) -> std::string;

    /// Factors on the source vertex set whose intersection is the source.
    struct CoverCertificate
    {
        FactorKind kind = FactorKind::ferrers;
        std::vector<Digraph> factors;
    };

    /**
     * Independent re-check: every factor is in its class and contains the
     * source, and the factors intersect to the source. An empty factor list
     * stands for the all-ones matrix.
     */
    auto verify_certificate(const CoverCertificate & cert, const Digraph & source) -> bool;

    struct ZeroCover
    {
        std::vector<std::vector<ZeroPosition>> classes;
    };

    /// For (a,b), (c,d) in the class with a != c and b != d, (a,d) or (c,b) is in the class.
    auto is_ferrers_closed(const std::vector<ZeroPosition> & zeros) -> bool;

    /// Subsets are vertex indices of J(complement of the source).
    struct TotalSubdigraphCover
    {
        std::vector<std::vector<int>> subsets;
    };

    struct ColouringResult
    {
        int colours = 0;
        std::vector<int> colouring;
        std::uint64_t nodes = 0;
    };

    struct FerrersDimensionResult
    {
        int dimension = 0;
        CoverCertificate certificate;
        ZeroCover zero_cover;
        std::uint64_t nodes = 0;
    };

    struct TotalCoverResult
    {
        int number = 0;
        JDigraph j;
        TotalSubdigraphCover cover;
        /// Ferrers factors read off the cover: complements of the subset digraphs.
        CoverCertificate certificate;
        std::uint64_t nodes = 0;
    };

    struct BoxicityResult
    {
        int boxicity = 0;
        CoverCertificate certificate;
        std::uint64_t nodes = 0;
    };

    struct SymmetricFactorResult
    {
        int dimension = 0;
        Digraph witness;
        std::uint64_t candidates = 0;
    };

    struct BigraphDimensionResult
    {
        int dimension = 0;
        std::vector<Bigraph> factors;
        std::uint64_t nodes = 0;
    };

    struct BigraphFactorPair
    {
        Bigraph first;
        Bigraph second;
    };

    inline constexpr int max_colouring_vertices = 64;
    inline constexpr int max_ferrers_dimension_vertices = 8;
    inline constexpr int max_total_cover_vertices = 6;
    inline constexpr int max_boxicity_vertices = 7;
    inline constexpr int max_symmetric_factor_non_edges = 9;
    inline constexpr int max_bigraph_dimension_vertices = 8;
    inline constexpr int max_interval_bigraph_entries = 20;

    /// Exact chromatic number with a proper colouring.
    auto chromatic_number(const PositionGraph & h, const SolveOptions & options = {}) -> ColouringResult;

    auto is_proper_colouring(const PositionGraph & h, const std::vector<int> & colouring) -> bool;

    /**
     * Minimum number of Ferrers digraphs intersecting to d. Zeros are covered
     * by maximal Ferrers-closed classes; each class is the nested prefix
     * intersection of zero rows along some row order.
     */
    auto ferrers_dimension(const Digraph & d, const SolveOptions & options = {}) -> FerrersDimensionResult;

    /// Minimum cover of J(complement of d) by total ideal subdigraphs.
    auto total_covering_number(const Digraph & d, const SolveOptions & options = {}) -> TotalCoverResult;

    /**
     * Whether the vertex set s spans a total ideal subdigraph of j. The
     * subdigraph keeps exactly those arrows ab -> cd of j whose witness ad
     * lies in s.
     */
    auto is_total_ideal(const JDigraph & j, const std::vector<int> & s) -> bool;

    auto boxicity(const ReflexiveGraph & g, const SolveOptions & options = {}) -> BoxicityResult;

    /// Minimum Ferrers dimension over all D with D intersected with its transpose equal to g.
    auto min_symmetric_factor_dimension(const ReflexiveGraph & g, const SolveOptions & options = {}) -> SymmetricFactorResult;

    /// Bipartiteness of the couple graph.
    auto ferrers_dim_at_most_2(const Digraph & d) -> bool;

    auto bigraph_ferrers_dimension(const Bigraph & b, const SolveOptions & options = {}) -> BigraphDimensionResult;

    /// Two Ferrers bigraphs with union complete whose intersection is b.
    auto interval_bigraph_witness(const Bigraph & b) -> std::optional<BigraphFactorPair>;
}
