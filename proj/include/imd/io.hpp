#ifndef IMD_IO_HPP
#define IMD_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "imd/cell_complex.hpp"
#include "imd/persistence.hpp"

namespace imd {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& message);
    std::size_t line;
};

// Boundary format, one cell per line:
//   id dim filtration : face_id face_id ...
// '#' starts a comment, blank lines are skipped. Faces must be declared on
// earlier lines and have dimension dim - 1. This is the general format: any
// chain complex can be written, including the non-simplicial ones produced
// by Morse iteration.
ChainComplex parse_boundary_format(std::string_view text);

// Simplicial format, one simplex per line:
//   filtration : v0 v1 ... vp
// Every proper face of a listed simplex must be listed somewhere in the
// file, with filtration not exceeding the cofacet's.
ChainComplex parse_simplicial_format(std::string_view text);

// Writes a complex in boundary format, cells in (filtration, dim, id)
// order; parse_boundary_format(emit_boundary_format(c)) reproduces c.
std::string emit_boundary_format(const ChainComplex& complex);

// One "dim birth death" line per interval, death printed as "inf" for
// infinite intervals, sorted by (dim, birth, death).
std::string format_intervals(const PersistenceIntervals& intervals);

// Space-separated Betti numbers on one line.
std::string format_betti(const std::vector<std::size_t>& betti);

}  // namespace imd

#endif
