#include "support/fixtures.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "imd/io.hpp"

#ifndef IMD_FIXTURE_DIR
#error "IMD_FIXTURE_DIR must be defined"
#endif
#ifndef IMD_CLI_PATH
#define IMD_CLI_PATH ""
#endif

namespace imd::testing {

ChainComplex make_complex(const std::vector<CellSpec>& specs) {
    std::vector<Cell> cells;
    std::vector<std::vector<CellId>> boundary;
    cells.reserve(specs.size());
    boundary.reserve(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        cells.push_back({static_cast<CellId>(i), specs[i].dim, specs[i].filtration});
        boundary.push_back(specs[i].faces);
    }
    return ChainComplex(std::move(cells), std::move(boundary));
}

ChainComplex single_vertex() { return make_complex({{0, 0, {}}}); }

ChainComplex single_edge() {
    return make_complex({{0, 0, {}}, {0, 0, {}}, {1, 0, {0, 1}}});
}

ChainComplex hollow_triangle() {
    return make_complex({{0, 0, {}},
                         {0, 0, {}},
                         {0, 0, {}},
                         {1, 0, {0, 1}},
                         {1, 0, {0, 2}},
                         {1, 0, {1, 2}}});
}

ChainComplex filled_triangle() {
    return make_complex({{0, 0, {}},
                         {0, 0, {}},
                         {0, 0, {}},
                         {1, 0, {0, 1}},
                         {1, 0, {0, 2}},
                         {1, 0, {1, 2}},
                         {2, 0, {3, 4, 5}}});
}

ChainComplex tetrahedron_boundary() {
    return make_complex({{0, 0, {}},           // 0
                         {0, 0, {}},           // 1
                         {0, 0, {}},           // 2
                         {0, 0, {}},           // 3
                         {1, 0, {0, 1}},       // 4
                         {1, 0, {0, 2}},       // 5
                         {1, 0, {0, 3}},       // 6
                         {1, 0, {1, 2}},       // 7
                         {1, 0, {1, 3}},       // 8
                         {1, 0, {2, 3}},       // 9
                         {2, 0, {4, 5, 7}},    // 012
                         {2, 0, {4, 6, 8}},    // 013
                         {2, 0, {5, 6, 9}},    // 023
                         {2, 0, {7, 8, 9}}});  // 123
}

ChainComplex two_path_complex() {
    return make_complex({{0, 0, {}},          // u
                         {0, 0, {}},          // v
                         {0, 0, {}},          // d
                         {1, 0, {0, 1}},      // A
                         {1, 0, {0, 2}},      // e1
                         {1, 0, {1, 2}}});    // e2
}

Matching two_path_matching() {
    Matching matching;
    matching.pairs = {{0, 4}, {1, 5}};  // u with e1, v with e2
    matching.critical = {2, 3};         // d and A stay critical
    return matching;
}

ChainComplex fig10_complex() {
    return make_complex({{0, 0, {}},       // a
                         {0, 0, {}},       // b
                         {0, 0, {}},       // c
                         {0, 0, {}},       // d
                         {1, 1, {0, 2}},   // ac
                         {1, 1, {1, 3}},   // bd
                         {1, 2, {0, 1}},   // ab
                         {1, 3, {2, 3}}}); // cd
}

ChainComplex fig12_complex() {
    return make_complex({{0, 0, {}}, {0, 0, {}}, {1, 1, {0, 1}}, {1, 2, {0, 1}}});
}

ChainComplex fig8_initial() {
    return make_complex({{0, 1, {}},       // a
                         {0, 1, {}},       // b
                         {0, 3, {}},       // q, cancels against f
                         {1, 3, {0, 1}},   // e
                         {1, 3, {1, 2}},   // f
                         {1, 4, {0, 1}},   // c
                         {1, 5, {0, 1}},   // d
                         {2, 6, {3, 5}},   // X
                         {2, 6, {5, 6}}}); // Y
}

std::string fixture_path(const std::string& name) {
    return std::string(IMD_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ChainComplex load_fixture(const std::string& name) {
    const std::string text = read_file(fixture_path(name));
    if (name.size() >= 4 && name.substr(name.size() - 4) == ".smp")
        return parse_simplicial_format(text);
    return parse_boundary_format(text);
}

CommandResult run_cli_command(const std::string& args) {
    const std::string command = std::string(IMD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    const int status = pclose(pipe);
    const int exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {exit_code, std::move(output)};
}

}  // namespace imd::testing
