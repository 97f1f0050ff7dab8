#include "ncode/formats.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace ncode {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

/// Non-blank lines with comments stripped, split on spaces and tabs.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t pos = 0;
        while (pos < raw.size()) {
            while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r')) ++pos;
            std::size_t end = pos;
            while (end < raw.size() && raw[end] != ' ' && raw[end] != '\t' && raw[end] != '\r') ++end;
            if (end > pos) line.tokens.push_back(raw.substr(pos, end - pos));
            pos = end;
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

int parse_int(std::string_view token, std::size_t line, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
}

/// Accepts "key: value" split as ["key:", "value"] or ["key:value"].
std::string_view header_value(const Line& line, std::string_view key) {
    const std::string prefix = std::string(key) + ":";
    if (line.tokens.size() == 2 && line.tokens[0] == prefix) return line.tokens[1];
    if (line.tokens.size() == 1 && line.tokens[0].starts_with(prefix) && line.tokens[0].size() > prefix.size()) {
        return line.tokens[0].substr(prefix.size());
    }
    throw ParseError(line.number, "expected '" + prefix + " <value>'");
}

}  // namespace

NeuralCode parse_code(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "missing 'neurons:' header");
    const int n = parse_int(header_value(lines[0], "neurons"), lines[0].number, "a neuron count");
    if (n < 0 || n > kMaxNeurons) {
        throw ParseError(lines[0].number, "neuron count must lie in 0.." + std::to_string(kMaxNeurons));
    }
    std::vector<Codeword> words;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens.size() == 1 && line.tokens[0] == "-") {
            words.emplace_back();
            continue;
        }
        Codeword w;
        for (std::string_view tok : line.tokens) {
            const int idx = parse_int(tok, line.number, "a neuron index or '-'");
            if (idx < 1 || idx > n) {
                throw ParseError(line.number, "neuron " + std::to_string(idx) + " outside 1.." + std::to_string(n));
            }
            if (w.contains(idx)) throw ParseError(line.number, "neuron " + std::to_string(idx) + " repeated");
            if (!w.empty() && idx < w.max_member()) {
                throw ParseError(line.number, "neuron indices must be increasing");
            }
            w = w.with(idx);
        }
        words.push_back(w);
    }
    return NeuralCode(n, std::move(words));
}

std::string serialize_code(const NeuralCode& code) {
    std::string out = "neurons: " + std::to_string(code.neuron_count()) + "\n";
    for (Codeword w : code.words()) out += w.to_string() + "\n";
    return out;
}

Arrangement parse_arrangement(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.size() < 2) throw ParseError(0, "missing 'dimension:' and 'topology:' headers");
    const int dim = parse_int(header_value(lines[0], "dimension"), lines[0].number, "a dimension");
    if (dim < 1) throw ParseError(lines[0].number, "dimension must be positive");
    const std::string_view topo = header_value(lines[1], "topology");
    Topology topology;
    if (topo == "open") topology = Topology::open;
    else if (topo == "closed") topology = Topology::closed;
    else throw ParseError(lines[1].number, "topology must be 'open' or 'closed'");

    std::vector<Polyhedron> sets;
    for (std::size_t k = 2; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens[0] == "set") {
            if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'set <index>'");
            const int idx = parse_int(line.tokens[1], line.number, "a set index");
            if (idx != static_cast<int>(sets.size()) + 1) {
                throw ParseError(line.number, "expected set " + std::to_string(sets.size() + 1));
            }
            if (idx > kMaxNeurons) throw ParseError(line.number, "too many sets");
            sets.push_back(Polyhedron{dim, {}});
            continue;
        }
        if (sets.empty()) throw ParseError(line.number, "constraint row before the first 'set'");
        if (line.tokens.size() != static_cast<std::size_t>(dim) + 2) {
            throw ParseError(line.number, "expected " + std::to_string(dim) + " coefficients, a relation and a bound");
        }
        LinearConstraint row;
        try {
            for (int j = 0; j < dim; ++j) row.coeffs.push_back(parse_rational(line.tokens[j]));
            row.bound = parse_rational(line.tokens[dim + 1]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line.number, e.what());
        }
        const std::string_view rel = line.tokens[dim];
        if (rel == "<=") {
            row.relation = Relation::weak_le;
        } else if (rel == "=") {
            if (topology == Topology::open) throw ParseError(line.number, "equality row not allowed under open topology");
            row.relation = Relation::eq;
        } else {
            throw ParseError(line.number, "relation must be '<=' or '=', got '" + std::string(rel) + "'");
        }
        sets.back().constraints.push_back(std::move(row));
    }
    return Arrangement(dim, topology, std::move(sets));
}

std::string serialize_arrangement(const Arrangement& arr) {
    std::ostringstream out;
    out << "dimension: " << arr.dim() << "\n";
    out << "topology: " << to_string(arr.topology()) << "\n";
    for (int i = 0; i < arr.size(); ++i) {
        out << "set " << (i + 1) << "\n";
        for (const auto& row : arr.sets()[i].constraints) {
            for (const auto& a : row.coeffs) out << to_string(a) << ' ';
            out << (row.relation == Relation::eq ? "=" : "<=") << ' ' << to_string(row.bound) << "\n";
        }
    }
    return out.str();
}

}  // namespace ncode
