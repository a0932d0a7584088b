#ifndef IMD_HOMOLOGY_HPP
#define IMD_HOMOLOGY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "imd/cell_complex.hpp"
#include "imd/morse.hpp"

namespace imd {

struct IterationTrace {
    // Cardinality of the initial complex followed by the cardinality after
    // every pass that matched at least one pair. Strictly decreasing.
    std::vector<std::size_t> sizes;
    // Number of Morse passes run, including the final pass that matched
    // nothing and detected the fixpoint. At most floor(n / 2) + 1.
    std::size_t iterations = 0;
};

// Repeats Morse complex construction under the policy until a pass matches
// no pair. The result is the fixpoint M^inf of the iteration; under the
// unconstrained policy every surviving cell has empty boundary and empty
// coboundary.
std::pair<ChainComplex, IterationTrace> iterate_to_fixpoint(const ChainComplex& complex,
                                                            const MatchingPolicy& policy);

// Betti numbers over Z2: cells of the unconstrained fixpoint counted per
// dimension. The vector has top_dim + 1 entries, zero-padded.
std::vector<std::size_t> betti_numbers(const ChainComplex& complex);

}  // namespace imd

#endif
