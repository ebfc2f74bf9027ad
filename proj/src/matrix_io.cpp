#include <ferrodim/matrix_io.hpp>

#include <charconv>
#include <sstream>

using namespace ferrodim;

namespace
{
    struct Line
    {
        int number;
        std::string_view text;
    };

    auto trim(std::string_view s) -> std::string_view
    {
        while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
            s.remove_prefix(1);
        while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    }

    auto content_lines(std::string_view text) -> std::vector<Line>
    {
        std::vector<Line> result;
        int number = 0;
        while (! text.empty()) {
            ++number;
            auto end = text.find('\n');
            auto raw = text.substr(0, end);
            text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
            auto line = trim(raw);
            if (line.empty() || line.front() == '#')
                continue;
            result.push_back({number, line});
        }
        return result;
    }

    auto split_words(std::string_view s) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> words;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
                ++i;
            std::size_t j = i;
            while (j < s.size() && s[j] != ' ' && s[j] != '\t')
                ++j;
            if (j > i)
                words.push_back(s.substr(i, j - i));
            i = j;
        }
        return words;
    }

    auto parse_size(std::string_view word, int line) -> int
    {
        int value = -1;
        auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc{} || ptr != word.data() + word.size() || value < 0 || value > max_vertices)
            throw ParseError(line, "size must be an integer between 0 and 16");
        return value;
    }

    auto read_rows(const std::vector<Line> & lines, int count, int width) -> std::vector<std::string>
    {
        if (static_cast<int>(lines.size()) - 1 != count)
            throw ParseError(lines.empty() ? 1 : lines.back().number,
                    "expected " + std::to_string(count) + " rows, found " + std::to_string(lines.size() - 1));
        std::vector<std::string> rows;
        for (int r = 1 ; r <= count ; ++r) {
            const auto & [number, text] = lines[r];
            if (static_cast<int>(text.size()) != width)
                throw ParseError(number, "expected " + std::to_string(width) + " columns, found " + std::to_string(text.size()));
            for (char c : text)
                if (c != '0' && c != '1')
                    throw ParseError(number, std::string("unexpected character '") + c + "'");
            rows.emplace_back(text);
        }
        return rows;
    }

    auto matrix_rows(const Digraph & d) -> std::string
    {
        std::string out;
        for (int u = 0 ; u < d.size() ; ++u) {
            for (int v = 0 ; v < d.size() ; ++v)
                out += d.has(u, v) ? '1' : '0';
            out += '\n';
        }
        return out;
    }
}

auto ferrodim::parse_matrix_text(std::string_view text) -> GraphValue
{
    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(1, "missing header");

    auto words = split_words(lines.front().text);
    const int header_line = lines.front().number;
    if (words.empty())
        throw ParseError(header_line, "missing header");

    if ((words[0] == "digraph" || words[0] == "graph") && words.size() == 2) {
        int n = parse_size(words[1], header_line);
        Digraph d = Digraph::from_rows(read_rows(lines, n, n));
        if (words[0] == "digraph")
            return d;
        if (! d.is_symmetric())
            throw ParseError(header_line, "graph matrix is not symmetric");
        if (! d.is_reflexive())
            throw ParseError(header_line, "graph matrix has a zero on the diagonal");
        return ReflexiveGraph(d);
    }
    if (words[0] == "bigraph" && words.size() == 3) {
        int p = parse_size(words[1], header_line);
        int q = parse_size(words[2], header_line);
        return Bigraph::from_rows(q, read_rows(lines, p, q));
    }
    throw ParseError(header_line, "header must be 'digraph n', 'graph n' or 'bigraph p q'");
}

auto ferrodim::parse_inline_matrix(std::string_view header, std::string_view rows) -> GraphValue
{
    std::string text(header);
    text += '\n';
    for (char c : rows)
        text += c == ';' ? '\n' : c;
    return parse_matrix_text(text);
}

auto ferrodim::serialize(const Digraph & d) -> std::string
{
    return "digraph " + std::to_string(d.size()) + "\n" + matrix_rows(d);
}

auto ferrodim::serialize(const ReflexiveGraph & g) -> std::string
{
    return "graph " + std::to_string(g.size()) + "\n" + matrix_rows(g.digraph());
}

auto ferrodim::serialize(const Bigraph & b) -> std::string
{
    std::string out = "bigraph " + std::to_string(b.rows()) + " " + std::to_string(b.cols()) + "\n";
    for (int x = 0 ; x < b.rows() ; ++x) {
        for (int y = 0 ; y < b.cols() ; ++y)
            out += b.has(x, y) ? '1' : '0';
        out += '\n';
    }
    return out;
}

auto ferrodim::serialize(const GraphValue & v) -> std::string
{
    return std::visit([] (const auto & g) { return serialize(g); }, v);
}

auto ferrodim::legend(const std::vector<ZeroPosition> & positions) -> std::string
{
    std::string out;
    for (std::size_t i = 0 ; i < positions.size() ; ++i)
        out += "# " + std::to_string(i) + " = " + entry_name(positions[i]) + "\n";
    return out;
}

auto ferrodim::serialize(const PositionGraph & h) -> std::string
{
    const int m = h.size();
    std::string out = legend(h.vertices) + "digraph " + std::to_string(m) + "\n";
    for (int i = 0 ; i < m ; ++i) {
        for (int j = 0 ; j < m ; ++j)
            out += h.adjacent(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

auto ferrodim::serialize(const JDigraph & j) -> std::string
{
    const int m = j.size();
    std::string out = legend(j.arcs) + "digraph " + std::to_string(m) + "\n";
    for (int s = 0 ; s < m ; ++s) {
        for (int t = 0 ; t < m ; ++t)
            out += j.has_arrow(s, t) ? '1' : '0';
        out += '\n';
    }
    return out;
}

auto ferrodim::pretty(const Digraph & d) -> std::string
{
    std::string out = "  ";
    for (int v = 0 ; v < d.size() ; ++v)
        out += vertex_name(v);
    out += '\n';
    for (int u = 0 ; u < d.size() ; ++u) {
        out += vertex_name(u);
        out += ' ';
        for (int v = 0 ; v < d.size() ; ++v)
            out += d.has(u, v) ? '1' : '0';
        out += '\n';
    }
    return out;
}

auto ferrodim::certificate_json(const std::string & invariant, int value, const std::vector<std::string> & factors,
        bool verified, std::uint64_t nodes) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    j["invariant"] = invariant;
    j["value"] = value;
    j["factors"] = factors;
    j["verified"] = verified;
    j["nodes"] = nodes;
    return j;
}

auto ferrodim::certificate_json(const std::string & invariant, int value, const CoverCertificate & cert,
        bool verified, std::uint64_t nodes) -> nlohmann::ordered_json
{
    std::vector<std::string> factors;
    for (const auto & f : cert.factors)
        factors.push_back(cert.kind == FactorKind::interval ? serialize(ReflexiveGraph(f)) : serialize(f));
    return certificate_json(invariant, value, factors, verified, nodes);
}
