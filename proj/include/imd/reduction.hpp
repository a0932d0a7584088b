#ifndef IMD_REDUCTION_HPP
#define IMD_REDUCTION_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

#include "imd/cell_complex.hpp"
#include "imd/persistence.hpp"

namespace imd {

// Z2 boundary matrix with columns in (filtration, dim, id) order. Column j
// lists the positions of the faces of cell j, sorted ascending; low(j) is
// the last entry. Independent ground truth for the Morse pipeline.
struct SortedBoundaryMatrix {
    static constexpr std::uint32_t npos = UINT32_MAX;

    std::vector<Cell> cells;                          // by column position
    std::vector<std::vector<std::uint32_t>> columns;  // sorted face positions

    std::size_t size() const { return columns.size(); }
    // Row of the lowest one in column j, or npos for a zero column.
    std::uint32_t low(std::size_t j) const {
        return columns[j].empty() ? npos : columns[j].back();
    }
};

SortedBoundaryMatrix build_matrix(const ChainComplex& complex);

struct ColumnAddition {
    std::uint32_t source;  // column added
    std::uint32_t target;  // column reduced

    bool operator==(const ColumnAddition&) const = default;
};

// Left-to-right reduction: while some earlier column shares the target's
// low, add it (mod 2). No collisions remain afterwards. The optional log
// records every addition in execution order.
SortedBoundaryMatrix matrix_reduce(SortedBoundaryMatrix matrix,
                                   std::vector<ColumnAddition>* log = nullptr);

struct IntervalReadout {
    PersistenceIntervals intervals;       // zero-length pairs excluded
    std::size_t zero_length_pairs = 0;    // diagnostics: pairs with g(b) == g(A)
};

// Reads intervals from a reduced matrix: a nonzero column j with k = low(j)
// pairs cell k (birth) with cell j (death); a zero column whose cell is
// nobody's low creates an infinite interval. Throws std::invalid_argument
// if the matrix still has collisions.
IntervalReadout read_intervals(const SortedBoundaryMatrix& reduced);

// Betti numbers by Z2 Gaussian elimination per dimension:
// beta_p = (n_p - rank d_p) - rank d_{p+1}.
std::vector<std::size_t> betti_rank_oracle(const ChainComplex& complex);

}  // namespace imd

#endif
