#include "imd/homology.hpp"

namespace imd {

std::pair<ChainComplex, IterationTrace> iterate_to_fixpoint(const ChainComplex& complex,
                                                            const MatchingPolicy& policy) {
    IterationTrace trace;
    trace.sizes.push_back(complex.size());

    ChainComplex current = complex;
    for (;;) {
        ++trace.iterations;
        Matching matching = compute_matching(current, policy);
        if (matching.pairs.empty()) break;
        current = morse_complex_from_matching(current, matching);
        trace.sizes.push_back(current.size());
    }
    return {std::move(current), std::move(trace)};
}

std::vector<std::size_t> betti_numbers(const ChainComplex& complex) {
    const int top = complex.top_dim();
    std::vector<std::size_t> betti(top >= 0 ? static_cast<std::size_t>(top) + 1 : 0, 0);

    auto [fixpoint, trace] = iterate_to_fixpoint(complex, MatchingPolicy::unconstrained());
    for (const Cell& cell : fixpoint.cells()) ++betti[static_cast<std::size_t>(cell.dim)];
    return betti;
}

}  // namespace imd
