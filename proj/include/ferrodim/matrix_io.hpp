#pragma once

#include <ferrodim/constructions.hpp>
#include <ferrodim/core.hpp>
#include <ferrodim/dimensions.hpp>

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ferrodim
{
    using GraphValue = std::variant<Digraph, ReflexiveGraph, Bigraph>;

    class ParseError : public std::runtime_error
    {
        public:
            ParseError(int line, const std::string & message) :
                std::runtime_error("line " + std::to_string(line) + ": " + message),
                _line(line)
            {
            }

            auto line() const noexcept -> int { return _line; }

        private:
            int _line;
    };

    /**
     * Reads `digraph n`, `graph n` or `bigraph p q` followed by one row of
     * 0/1 characters per line. Lines starting with '#' and blank lines are
     * skipped. A `graph` must be symmetric with ones on the diagonal.
     */
    auto parse_matrix_text(std::string_view text) -> GraphValue;

    /// Splits `;`-separated rows, for matrices given on the command line.
    auto parse_inline_matrix(std::string_view header, std::string_view rows) -> GraphValue;

    auto serialize(const Digraph & d) -> std::string;
    auto serialize(const ReflexiveGraph & g) -> std::string;
    auto serialize(const Bigraph & b) -> std::string;
    auto serialize(const GraphValue & v) -> std::string;

    /// Symmetric loopless `digraph` block preceded by a legend naming each vertex's source entry.
    auto serialize(const PositionGraph & h) -> std::string;
    auto serialize(const JDigraph & j) -> std::string;

    /// `# <index> = <entry>` lines, one per position.
    auto legend(const std::vector<ZeroPosition> & positions) -> std::string;

    /// Rows as strings with vertex letters, for human-readable tables.
    auto pretty(const Digraph & d) -> std::string;

    auto certificate_json(const std::string & invariant, int value, const std::vector<std::string> & factors,
            bool verified, std::uint64_t nodes) -> nlohmann::ordered_json;

    auto certificate_json(const std::string & invariant, int value, const CoverCertificate & cert,
            bool verified, std::uint64_t nodes) -> nlohmann::ordered_json;
}
