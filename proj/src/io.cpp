#include "imd/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace imd {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool parse_integer(std::string_view token, long long& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

long long require_integer(std::string_view token, std::size_t line, const char* what) {
    long long value;
    if (!parse_integer(token, value))
        throw ParseError(line, std::string(what) + " '" + std::string(token) + "' is not an integer");
    return value;
}

// Splits text into (line number, content) pairs, dropping '#' comments and
// blank lines.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++line_no;
        std::size_t stop = text.find('\n', start);
        if (stop == std::string_view::npos) stop = text.size();
        std::string_view line = text.substr(start, stop - start);
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos)
            lines.emplace_back(line_no, line);
        if (stop == text.size()) break;
        start = stop + 1;
    }
    return lines;
}

}  // namespace

ParseError::ParseError(std::size_t line_no, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}

ChainComplex parse_boundary_format(std::string_view text) {
    std::vector<Cell> cells;
    std::vector<std::vector<CellId>> boundary;
    std::unordered_map<CellId, std::size_t> declared;

    for (const auto& [line_no, line] : content_lines(text)) {
        const auto tokens = tokenize(line);
        if (tokens.size() < 4 || tokens[3] != ":")
            throw ParseError(line_no, "expected 'id dim filtration : faces...'");

        const long long id_value = require_integer(tokens[0], line_no, "cell id");
        if (id_value < 0 || id_value > UINT32_MAX)
            throw ParseError(line_no, "cell id out of range");
        const CellId id = static_cast<CellId>(id_value);

        const long long dim = require_integer(tokens[1], line_no, "dimension");
        if (dim < 0) throw ParseError(line_no, "negative dimension");

        const long long filtration = require_integer(tokens[2], line_no, "filtration value");
        if (filtration < INT32_MIN || filtration > INT32_MAX)
            throw ParseError(line_no, "filtration value out of range");

        if (declared.count(id))
            throw ParseError(line_no, "duplicate cell id " + std::to_string(id));

        std::vector<CellId> faces;
        for (std::size_t t = 4; t < tokens.size(); ++t) {
            const long long face_value = require_integer(tokens[t], line_no, "face id");
            if (face_value < 0 || face_value > UINT32_MAX)
                throw ParseError(line_no, "face id out of range");
            const CellId face = static_cast<CellId>(face_value);
            auto it = declared.find(face);
            if (it == declared.end())
                throw ParseError(line_no, "face " + std::to_string(face) +
                                              " has not been declared on an earlier line");
            if (cells[it->second].dim != dim - 1)
                throw ParseError(line_no, "face " + std::to_string(face) +
                                              " does not have dimension " + std::to_string(dim - 1));
            faces.push_back(face);
        }
        std::sort(faces.begin(), faces.end());
        for (std::size_t k = 0; k + 1 < faces.size(); ++k)
            if (faces[k] == faces[k + 1])
                throw ParseError(line_no, "face " + std::to_string(faces[k]) + " listed twice");

        declared.emplace(id, cells.size());
        cells.push_back({id, static_cast<int>(dim), static_cast<int>(filtration)});
        boundary.push_back(std::move(faces));
    }
    return ChainComplex(std::move(cells), std::move(boundary));
}

ChainComplex parse_simplicial_format(std::string_view text) {
    struct Simplex {
        std::vector<long long> vertices;  // sorted labels
        int filtration;
        std::size_t line;
    };
    std::vector<Simplex> simplices;
    std::map<std::vector<long long>, std::size_t> index;

    for (const auto& [line_no, line] : content_lines(text)) {
        const auto tokens = tokenize(line);
        if (tokens.size() < 3 || tokens[1] != ":")
            throw ParseError(line_no, "expected 'filtration : v0 v1 ...'");

        const long long filtration = require_integer(tokens[0], line_no, "filtration value");
        if (filtration < INT32_MIN || filtration > INT32_MAX)
            throw ParseError(line_no, "filtration value out of range");

        std::vector<long long> vertices;
        for (std::size_t t = 2; t < tokens.size(); ++t)
            vertices.push_back(require_integer(tokens[t], line_no, "vertex label"));
        std::sort(vertices.begin(), vertices.end());
        for (std::size_t k = 0; k + 1 < vertices.size(); ++k)
            if (vertices[k] == vertices[k + 1])
                throw ParseError(line_no, "vertex " + std::to_string(vertices[k]) +
                                              " listed twice in one simplex");

        if (!index.emplace(vertices, simplices.size()).second)
            throw ParseError(line_no, "simplex listed twice");
        simplices.push_back({std::move(vertices), static_cast<int>(filtration), line_no});
    }

    std::vector<Cell> cells;
    std::vector<std::vector<CellId>> boundary;
    cells.reserve(simplices.size());
    boundary.reserve(simplices.size());
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const Simplex& simplex = simplices[i];
        const int dim = static_cast<int>(simplex.vertices.size()) - 1;
        std::vector<CellId> faces;
        for (std::size_t drop = 0; dim > 0 && drop < simplex.vertices.size(); ++drop) {
            std::vector<long long> facet;
            facet.reserve(simplex.vertices.size() - 1);
            for (std::size_t v = 0; v < simplex.vertices.size(); ++v)
                if (v != drop) facet.push_back(simplex.vertices[v]);
            auto it = index.find(facet);
            if (it == index.end()) {
                std::string name;
                for (long long v : facet) name += (name.empty() ? "" : " ") + std::to_string(v);
                throw ParseError(simplex.line, "face simplex '" + name + "' is missing");
            }
            if (simplices[it->second].filtration > simplex.filtration)
                throw ParseError(simplex.line,
                                 "face declared at a larger filtration value (line " +
                                     std::to_string(simplices[it->second].line) + ")");
            faces.push_back(static_cast<CellId>(it->second));
        }
        cells.push_back({static_cast<CellId>(i), dim, simplex.filtration});
        boundary.push_back(std::move(faces));
    }
    return ChainComplex(std::move(cells), std::move(boundary));
}

std::string emit_boundary_format(const ChainComplex& complex) {
    std::ostringstream out;
    for (std::size_t index : complex.sorted_order()) {
        const Cell& cell = complex.cell(index);
        out << cell.id << ' ' << cell.dim << ' ' << cell.filtration << " :";
        for (CellId face : complex.boundary_ids(index)) out << ' ' << face;
        out << '\n';
    }
    return out.str();
}

std::string format_intervals(const PersistenceIntervals& intervals) {
    PersistenceIntervals sorted = intervals;
    sort_intervals(sorted);
    std::ostringstream out;
    for (const PersistenceInterval& interval : sorted) {
        out << interval.dim << ' ' << interval.birth << ' ';
        if (interval.death)
            out << *interval.death;
        else
            out << "inf";
        out << '\n';
    }
    return out.str();
}

std::string format_betti(const std::vector<std::size_t>& betti) {
    std::ostringstream out;
    for (std::size_t p = 0; p < betti.size(); ++p) {
        if (p) out << ' ';
        out << betti[p];
    }
    out << '\n';
    return out.str();
}

}  // namespace imd
