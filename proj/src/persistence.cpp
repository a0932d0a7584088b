#include "imd/persistence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "imd/morse.hpp"

namespace imd {

namespace {

// The simplify_filtered postcondition: every face sits strictly below its
// coface in the filtration. persistence_via_morse relies on it, so inputs
// that skipped the simplification step are rejected up front.
void require_strict_faces(const ChainComplex& complex) {
    for (std::size_t i = 0; i < complex.size(); ++i) {
        const Cell& cell = complex.cell(i);
        for (CellId face_id : complex.boundary_ids(i)) {
            const Cell& face = complex.cell_by_id(face_id);
            if (face.filtration >= cell.filtration)
                throw std::invalid_argument(
                    "persistence_via_morse: face " + std::to_string(face.id) + " of cell " +
                    std::to_string(cell.id) +
                    " does not sit strictly below it in the filtration; run the "
                    "filtration-compatible simplification first");
        }
    }
}

void emit_survivors(const ChainComplex& complex, PersistenceIntervals& intervals) {
    for (const Cell& cell : complex.cells())
        intervals.push_back({cell.dim, cell.filtration, std::nullopt});
}

std::vector<int> ascending_levels(const ChainComplex& complex) {
    std::vector<int> levels;
    levels.reserve(complex.size());
    for (const Cell& cell : complex.cells()) levels.push_back(cell.filtration);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

}  // namespace

bool interval_less(const PersistenceInterval& a, const PersistenceInterval& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death.has_value() != b.death.has_value()) return a.death.has_value();
    if (a.death && b.death) return *a.death < *b.death;
    return false;
}

void sort_intervals(PersistenceIntervals& intervals) {
    std::sort(intervals.begin(), intervals.end(), interval_less);
}

ChainComplex simplify_filtered(const ChainComplex& complex, IterationTrace* trace) {
    auto [fixpoint, t] = iterate_to_fixpoint(complex, MatchingPolicy::filtration_compatible());
    if (trace) *trace = std::move(t);
    return std::move(fixpoint);
}

PersistenceIntervals persistence_via_morse(const ChainComplex& complex) {
    require_strict_faces(complex);

    // Filtration levels in increasing order, skipping the minimum: no
    // downward pair can have its coface at the lowest level.
    std::vector<int> levels = ascending_levels(complex);
    if (!levels.empty()) levels.erase(levels.begin());

    PersistenceIntervals intervals;
    ChainComplex current = complex;
    for (int level : levels) {
        for (;;) {
            const Matching matching =
                compute_matching(current, MatchingPolicy::downward_max_face(level));
            if (matching.pairs.empty()) break;
            const auto [face_id, coface_id] = matching.pairs.front();
            const Cell& face = current.cell_by_id(face_id);
            const Cell& coface = current.cell_by_id(coface_id);
            intervals.push_back({face.dim, face.filtration, coface.filtration});
            current = morse_step_single_pair(current, face_id, coface_id);
        }
    }
    emit_survivors(current, intervals);
    sort_intervals(intervals);
    return intervals;
}

PersistenceIntervals persistence_pipeline(const ChainComplex& complex, IterationTrace* trace) {
    return persistence_via_morse(simplify_filtered(complex, trace));
}

namespace detail {

PersistenceIntervals persistence_with_level_order(const ChainComplex& complex,
                                                  const std::vector<int>& levels) {
    require_strict_faces(complex);

    PersistenceIntervals intervals;
    ChainComplex current = complex;
    for (int level : levels) {
        for (;;) {
            // Pairs whose coface sits at exactly this level: smallest coface
            // id first, face of maximal filtration, ties by smallest face id.
            const Cell* best_coface = nullptr;
            const Cell* best_face = nullptr;
            for (std::size_t i = 0; i < current.size(); ++i) {
                const Cell& coface = current.cell(i);
                if (coface.filtration != level) continue;
                if (best_coface && best_coface->id < coface.id) continue;
                const Cell* face = nullptr;
                for (CellId face_id : current.boundary_ids(i)) {
                    const Cell& candidate = current.cell_by_id(face_id);
                    if (candidate.filtration >= coface.filtration) continue;
                    if (!face || candidate.filtration > face->filtration) face = &candidate;
                }
                if (!face) continue;
                best_coface = &coface;
                best_face = face;
            }
            if (!best_coface) break;
            intervals.push_back({best_face->dim, best_face->filtration, best_coface->filtration});
            current = morse_step_single_pair(current, best_face->id, best_coface->id);
        }
    }
    emit_survivors(current, intervals);
    sort_intervals(intervals);
    return intervals;
}

}  // namespace detail

}  // namespace imd
