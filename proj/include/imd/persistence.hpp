#ifndef IMD_PERSISTENCE_HPP
#define IMD_PERSISTENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "imd/cell_complex.hpp"
#include "imd/homology.hpp"

namespace imd {

struct PersistenceInterval {
    int dim = 0;
    int birth = 0;
    std::optional<int> death;  // nullopt = infinite

    bool finite() const { return death.has_value(); }

    bool operator==(const PersistenceInterval&) const = default;
};

// (dim, birth, death) with infinite death ordered last within a group.
bool interval_less(const PersistenceInterval& a, const PersistenceInterval& b);

// Multiset of intervals, kept sorted so equality is multiset equality.
using PersistenceIntervals = std::vector<PersistenceInterval>;

void sort_intervals(PersistenceIntervals& intervals);

// Fixpoint of Morse iteration under filtration-compatible matchings.
// Persistence is unchanged; the result has 2p + k cells, where p and k
// count the finite and infinite intervals, and every cell's filtration
// strictly exceeds each of its faces'.
ChainComplex simplify_filtered(const ChainComplex& complex, IterationTrace* trace = nullptr);

// Persistence intervals of a filtration-compatible fixpoint, by downward
// matchings processed level by level in increasing filtration order. Each
// committed pair (coface A, face b) emits [g(b), g(A)]; the survivors emit
// [g(c), inf]. Every finite interval has positive length.
// Requires the strict-face property (the simplify_filtered postcondition);
// violating inputs throw std::invalid_argument.
PersistenceIntervals persistence_via_morse(const ChainComplex& complex);

// simplify_filtered followed by persistence_via_morse: end-to-end intervals
// of an arbitrary valid filtered complex.
PersistenceIntervals persistence_pipeline(const ChainComplex& complex,
                                          IterationTrace* trace = nullptr);

namespace detail {

// Level loop of persistence_via_morse with a caller-chosen level order and
// pairs matched at exactly the given level. The public entry point uses the
// increasing filtration order, which is the only order that produces correct
// intervals; this hook exists so tests can demonstrate what out-of-order
// processing breaks.
PersistenceIntervals persistence_with_level_order(const ChainComplex& complex,
                                                  const std::vector<int>& levels);

}  // namespace detail

}  // namespace imd

#endif
