#ifndef IMD_TESTS_FIXTURES_HPP
#define IMD_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "imd/cell_complex.hpp"
#include "imd/morse.hpp"

namespace imd::testing {

struct CellSpec {
    int dim;
    int filtration;
    std::vector<CellId> faces;
};

// Cells receive ids 0..n-1 in declaration order.
ChainComplex make_complex(const std::vector<CellSpec>& specs);

ChainComplex single_vertex();
ChainComplex single_edge();             // two vertices and one edge, all at level 0
ChainComplex hollow_triangle();         // circle, all at level 0
ChainComplex filled_triangle();
ChainComplex tetrahedron_boundary();    // 2-sphere, 14 cells

// Hollow triangle with vertices u=0, v=1, d=2 and edges A=3 {u,v},
// e1=4 {u,d}, e2=5 {v,d}. With e1 and e2 matched downwards there are two
// directed paths from A to d, so d drops out of A's Morse boundary.
ChainComplex two_path_complex();
Matching two_path_matching();

ChainComplex fig10_complex();   // same complex as fixtures/fig10.bnd
ChainComplex fig12_complex();   // same complex as fixtures/fig12.bnd
ChainComplex fig8_initial();    // same complex as fixtures/fig8.bnd

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);
ChainComplex load_fixture(const std::string& name);  // picks the parser by extension

struct CommandResult {
    int exit_code;
    std::string output;  // stdout only
};

// Runs the CLI with the given arguments (stderr silenced).
CommandResult run_cli_command(const std::string& args);

}  // namespace imd::testing

#endif
