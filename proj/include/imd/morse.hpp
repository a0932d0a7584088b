#ifndef IMD_MORSE_HPP
#define IMD_MORSE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "imd/cell_complex.hpp"

namespace imd {

enum class MatchingMode {
    unconstrained,           // any incident pair may be matched
    filtration_compatible,   // only pairs with g(coface) == g(face)
    downward_max_face,       // g(face) < g(coface); face of maximal filtration
};

struct MatchingPolicy {
    MatchingMode mode = MatchingMode::unconstrained;
    // downward_max_face only: cofaces A with g(A) > level_cap are not matched.
    std::optional<int> level_cap;

    static MatchingPolicy unconstrained() { return {MatchingMode::unconstrained, {}}; }
    static MatchingPolicy filtration_compatible() {
        return {MatchingMode::filtration_compatible, {}};
    }
    static MatchingPolicy downward_max_face(std::optional<int> cap = {}) {
        return {MatchingMode::downward_max_face, cap};
    }

    bool admits(const Cell& coface, const Cell& face) const;
};

// Partial pairing of cells with one coface each; the unpaired cells are
// critical. pairs and critical together partition the cell set.
struct Matching {
    std::vector<std::pair<CellId, CellId>> pairs;  // (face, coface), sorted by face id
    std::vector<CellId> critical;                  // sorted by id

    bool empty() const { return pairs.empty(); }
    std::optional<CellId> coface_of(CellId face) const;
};

// Directed graph over the cells of a complex. One edge per incidence
// relation: coface -> face when the pair is unmatched, face -> coface when
// matched. A matching is valid exactly when this graph is acyclic; its
// directed paths are the V-paths.
struct MorseGraph {
    const ChainComplex* complex = nullptr;
    std::vector<std::vector<std::uint32_t>> out;  // adjacency by cell index

    std::size_t vertex_count() const { return out.size(); }
    std::size_t edge_count() const;
};

// Builds the Morse graph of a matching. Throws std::invalid_argument when
// the matching references unknown cells or non-incident pairs.
MorseGraph build_morse_graph(const ChainComplex& complex, const Matching& matching);

// Empty result when the graph is acyclic; otherwise one directed cycle as a
// cell-id sequence v0 .. vk with edges v0->v1, .., vk->v0.
std::optional<std::vector<CellId>> find_cycle(const MorseGraph& graph);

inline bool is_acyclic(const MorseGraph& graph) { return !find_cycle(graph).has_value(); }

// Greedy acyclic matching, restricted by the policy:
//  - unconstrained / filtration_compatible run the coreduction-style loop:
//    repeatedly declare a minimal cell critical (smallest dimension first,
//    then filtration, then id), then drain all cells having a unique
//    policy-admissible face among the cells that are neither matched nor
//    critical. Drains run globally, before the first marking and after
//    every one.
//  - downward_max_face yields at most one pair per call: the smallest-id
//    coface within the level cap owning a face of strictly smaller
//    filtration, paired with its maximal-filtration face (ties by smallest
//    id). Single reversals are always acyclic; callers commit pairs one at
//    a time.
// Deterministic given the complex's total order, and nonempty whenever any
// policy-admissible incident pair exists.
Matching compute_matching(const ChainComplex& complex, const MatchingPolicy& policy);

// Morse boundary of every critical cell: the critical cells of one lower
// dimension reached by an odd number of directed paths. Uses one shared
// topological sort; every critical source then gets its own parity sweep
// starting at its position, so the cost is O(c * (V + E)). Sweeps are
// independent and run on worker threads for large graphs.
// Throws std::invalid_argument when the graph has a cycle or when critical
// is not exactly the unmatched cell set implied by the graph.
std::map<CellId, Chain> morse_boundary(const MorseGraph& graph,
                                       const std::vector<CellId>& critical);

// Chain complex on the critical cells of the matching, with the Morse
// boundary; id, dim and filtration of the survivors are inherited.
ChainComplex morse_complex_from_matching(const ChainComplex& complex, const Matching& matching);

struct MorseResult {
    ChainComplex complex;
    Matching matching;
};

MorseResult build_morse_complex(const ChainComplex& complex, const MatchingPolicy& policy);

// Morse complex of the single pair (face, coface) by the direct boundary
// rewrite: cells X with face in their boundary get
//   d'X = (dX \ face) symdiff (d(coface) \ face),
// cells with coface in their boundary just lose it, and the pair is removed.
// Equivalent to morse_boundary on the one-pair matching, without the graph.
ChainComplex morse_step_single_pair(const ChainComplex& complex, CellId face, CellId coface);

}  // namespace imd

#endif
