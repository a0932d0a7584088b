#include "imd/morse.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <thread>

namespace imd {

namespace {

constexpr std::uint32_t kNoCell = UINT32_MAX;

enum class CellState : std::uint8_t { unmarked, critical, matched };

// Sorted-vector set difference by a single element.
std::vector<CellId> erase_id(const std::vector<CellId>& set, CellId id) {
    std::vector<CellId> out;
    out.reserve(set.size() - 1);
    for (CellId x : set)
        if (x != id) out.push_back(x);
    return out;
}

std::vector<CellId> symmetric_difference(const std::vector<CellId>& x,
                                         const std::vector<CellId>& y) {
    std::vector<CellId> out;
    out.reserve(x.size() + y.size());
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(),
                                  std::back_inserter(out));
    return out;
}

// Greedy matching for the unconstrained and filtration-compatible modes.
// Coreduction loop: a cell becomes matchable when exactly one of its faces
// is neither matched nor critical; draining runs before the first critical
// marking and after every one. Critical cells are picked by
// (dim, filtration, id), drains by (filtration, dim, id).
Matching matching_by_coreduction(const ChainComplex& complex, const MatchingPolicy& policy) {
    const std::size_t n = complex.size();
    std::vector<CellState> state(n, CellState::unmarked);
    std::vector<std::uint32_t> unmarked_faces(n);
    for (std::size_t i = 0; i < n; ++i)
        unmarked_faces[i] = static_cast<std::uint32_t>(complex.boundary_ids(i).size());

    const auto& rank = complex.sorted_rank();
    using Entry = std::pair<std::size_t, std::uint32_t>;  // (canonical rank, index)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> candidates;

    std::vector<std::pair<CellId, CellId>> pairs;

    auto notify_cofaces = [&](std::size_t cell_index) {
        for (CellId coface_id : complex.coboundary_ids(cell_index)) {
            const std::size_t ci = complex.index_of(coface_id);
            if (state[ci] != CellState::unmarked) continue;
            if (--unmarked_faces[ci] == 1)
                candidates.push({rank[ci], static_cast<std::uint32_t>(ci)});
        }
    };

    auto drain = [&]() {
        while (!candidates.empty()) {
            const auto [r, ci] = candidates.top();
            candidates.pop();
            if (state[ci] != CellState::unmarked || unmarked_faces[ci] != 1) continue;
            std::size_t fi = kNoCell;
            for (CellId face_id : complex.boundary_ids(ci)) {
                const std::size_t f = complex.index_of(face_id);
                if (state[f] == CellState::unmarked) {
                    fi = f;
                    break;
                }
            }
            if (fi == kNoCell) continue;  // stale counter cannot happen on valid complexes
            if (!policy.admits(complex.cell(ci), complex.cell(fi))) continue;
            state[ci] = CellState::matched;
            state[fi] = CellState::matched;
            pairs.emplace_back(complex.cell(fi).id, complex.cell(ci).id);
            notify_cofaces(ci);
            notify_cofaces(fi);
        }
    };

    for (std::size_t i = 0; i < n; ++i)
        if (unmarked_faces[i] == 1) candidates.push({rank[i], static_cast<std::uint32_t>(i)});
    drain();

    std::vector<std::size_t> scan(n);
    std::iota(scan.begin(), scan.end(), std::size_t{0});
    std::sort(scan.begin(), scan.end(), [&](std::size_t a, std::size_t b) {
        const Cell& ca = complex.cell(a);
        const Cell& cb = complex.cell(b);
        if (ca.dim != cb.dim) return ca.dim < cb.dim;
        if (ca.filtration != cb.filtration) return ca.filtration < cb.filtration;
        return ca.id < cb.id;
    });

    for (std::size_t index : scan) {
        if (state[index] != CellState::unmarked) continue;
        state[index] = CellState::critical;
        notify_cofaces(index);
        drain();
    }

    Matching matching;
    matching.pairs = std::move(pairs);
    std::sort(matching.pairs.begin(), matching.pairs.end());
    for (std::size_t i = 0; i < n; ++i)
        if (state[i] == CellState::critical) matching.critical.push_back(complex.cell(i).id);
    std::sort(matching.critical.begin(), matching.critical.end());
    return matching;
}

// downward_max_face: one pair per call. A single reversed edge can never
// close a cycle, so no acyclicity bookkeeping is needed; callers iterate.
Matching matching_by_downward_pair(const ChainComplex& complex, const MatchingPolicy& policy) {
    const Cell* best_coface = nullptr;
    const Cell* best_face = nullptr;

    for (std::size_t i = 0; i < complex.size(); ++i) {
        const Cell& coface = complex.cell(i);
        if (policy.level_cap && coface.filtration > *policy.level_cap) continue;
        const Cell* face = nullptr;
        for (CellId face_id : complex.boundary_ids(i)) {
            const Cell& candidate = complex.cell_by_id(face_id);
            if (candidate.filtration >= coface.filtration) continue;
            if (!face || candidate.filtration > face->filtration) face = &candidate;
        }
        if (!face) continue;
        if (!best_coface || coface.id < best_coface->id) {
            best_coface = &coface;
            best_face = face;
        }
    }

    Matching matching;
    if (best_coface) matching.pairs.emplace_back(best_face->id, best_coface->id);
    for (const Cell& cell : complex.cells())
        if (!best_coface || (cell.id != best_coface->id && cell.id != best_face->id))
            matching.critical.push_back(cell.id);
    std::sort(matching.critical.begin(), matching.critical.end());
    return matching;
}

}  // namespace

bool MatchingPolicy::admits(const Cell& coface, const Cell& face) const {
    switch (mode) {
        case MatchingMode::unconstrained:
            return true;
        case MatchingMode::filtration_compatible:
            return coface.filtration == face.filtration;
        case MatchingMode::downward_max_face:
            return face.filtration < coface.filtration &&
                   (!level_cap || coface.filtration <= *level_cap);
    }
    return false;
}

std::optional<CellId> Matching::coface_of(CellId face) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), face,
                               [](const auto& pair, CellId id) { return pair.first < id; });
    if (it == pairs.end() || it->first != face) return std::nullopt;
    return it->second;
}

std::size_t MorseGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& adjacency : out) total += adjacency.size();
    return total;
}

Matching compute_matching(const ChainComplex& complex, const MatchingPolicy& policy) {
    if (policy.mode == MatchingMode::downward_max_face)
        return matching_by_downward_pair(complex, policy);
    return matching_by_coreduction(complex, policy);
}

MorseGraph build_morse_graph(const ChainComplex& complex, const Matching& matching) {
    const std::size_t n = complex.size();

    // matched_with[i] = index of the partner, in either direction
    std::vector<std::uint32_t> coface_of_face(n, kNoCell);
    std::vector<bool> in_pair(n, false);
    for (const auto& [face_id, coface_id] : matching.pairs) {
        if (!complex.contains(face_id) || !complex.contains(coface_id))
            throw std::invalid_argument("build_morse_graph: matching references unknown cell");
        const std::size_t fi = complex.index_of(face_id);
        const std::size_t ci = complex.index_of(coface_id);
        const auto& faces = complex.boundary_ids(ci);
        if (!std::binary_search(faces.begin(), faces.end(), face_id))
            throw std::invalid_argument("build_morse_graph: matched cells are not incident");
        if (in_pair[fi] || in_pair[ci])
            throw std::invalid_argument("build_morse_graph: cell matched twice");
        in_pair[fi] = in_pair[ci] = true;
        coface_of_face[fi] = static_cast<std::uint32_t>(ci);
    }

    MorseGraph graph;
    graph.complex = &complex;
    graph.out.resize(n);
    for (std::size_t ci = 0; ci < n; ++ci) {
        for (CellId face_id : complex.boundary_ids(ci)) {
            const std::size_t fi = complex.index_of(face_id);
            if (coface_of_face[fi] == ci)
                graph.out[fi].push_back(static_cast<std::uint32_t>(ci));
            else
                graph.out[ci].push_back(static_cast<std::uint32_t>(fi));
        }
    }
    return graph;
}

std::optional<std::vector<CellId>> find_cycle(const MorseGraph& graph) {
    const std::size_t n = graph.out.size();
    std::vector<std::uint32_t> indegree(n, 0);
    for (const auto& adjacency : graph.out)
        for (std::uint32_t v : adjacency) ++indegree[v];

    std::deque<std::uint32_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push_back(static_cast<std::uint32_t>(v));

    std::size_t peeled = 0;
    std::vector<bool> removed(n, false);
    while (!ready.empty()) {
        const std::uint32_t u = ready.front();
        ready.pop_front();
        removed[u] = true;
        ++peeled;
        for (std::uint32_t v : graph.out[u])
            if (--indegree[v] == 0) ready.push_back(v);
    }
    if (peeled == n) return std::nullopt;

    // The remaining vertices all keep an incoming edge from the remaining
    // set; walking backwards must revisit a vertex, closing a cycle.
    std::vector<std::vector<std::uint32_t>> in(n);
    for (std::size_t u = 0; u < n; ++u) {
        if (removed[u]) continue;
        for (std::uint32_t v : graph.out[u])
            if (!removed[v]) in[v].push_back(static_cast<std::uint32_t>(u));
    }
    std::uint32_t start = 0;
    while (removed[start]) ++start;

    std::vector<std::uint32_t> walk;
    std::vector<std::uint32_t> position(n, kNoCell);
    std::uint32_t u = start;
    while (position[u] == kNoCell) {
        position[u] = static_cast<std::uint32_t>(walk.size());
        walk.push_back(u);
        u = in[u].front();
    }
    std::vector<CellId> cycle;
    for (std::size_t k = walk.size(); k > position[u]; --k)
        cycle.push_back(graph.complex->cell(walk[k - 1]).id);
    return cycle;
}

std::map<CellId, Chain> morse_boundary(const MorseGraph& graph,
                                       const std::vector<CellId>& critical) {
    if (!graph.complex) throw std::invalid_argument("morse_boundary: graph has no complex");
    const ChainComplex& complex = *graph.complex;
    const std::size_t n = graph.out.size();

    // shared topological order
    std::vector<std::uint32_t> indegree(n, 0);
    for (const auto& adjacency : graph.out)
        for (std::uint32_t v : adjacency) ++indegree[v];
    std::vector<std::uint32_t> topo;
    topo.reserve(n);
    std::deque<std::uint32_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push_back(static_cast<std::uint32_t>(v));
    while (!ready.empty()) {
        const std::uint32_t u = ready.front();
        ready.pop_front();
        topo.push_back(u);
        for (std::uint32_t v : graph.out[u])
            if (--indegree[v] == 0) ready.push_back(v);
    }
    if (topo.size() != n) throw std::invalid_argument("morse_boundary: graph has a cycle");

    std::vector<std::uint32_t> position(n);
    for (std::uint32_t t = 0; t < topo.size(); ++t) position[topo[t]] = t;

    // critical must be exactly the cells not incident to a reversed edge
    std::vector<std::uint8_t> is_critical(n, 1);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::uint32_t v : graph.out[u]) {
            if (complex.cell(u).dim < complex.cell(v).dim) {
                is_critical[u] = 0;
                is_critical[v] = 0;
            }
        }
    }
    std::vector<std::size_t> sources;
    sources.reserve(critical.size());
    for (CellId id : critical) {
        const std::size_t index = complex.index_of(id);
        if (!is_critical[index])
            throw std::invalid_argument("morse_boundary: matched cell listed as critical");
        sources.push_back(index);
    }
    std::size_t critical_count = 0;
    for (std::uint8_t flag : is_critical) critical_count += flag;
    if (critical_count != sources.size())
        throw std::invalid_argument("morse_boundary: critical set does not cover all unmatched cells");

    std::vector<Chain> chains(sources.size());

    // Parity of the path count from the source to every later vertex.
    // Propagation stops at critical vertices; of those, only the ones a
    // dimension below the source belong to its boundary.
    auto sweep_range = [&](std::size_t begin, std::size_t end, std::vector<std::uint8_t>& parity) {
        for (std::size_t s = begin; s < end; ++s) {
            const std::size_t source = sources[s];
            const int target_dim = complex.cell(source).dim - 1;
            const std::uint32_t start = position[source];
            std::fill(parity.begin() + start, parity.end(), 0);
            parity[start] = 1;
            std::vector<CellId>& support = chains[s].support;
            for (std::uint32_t t = start; t < n; ++t) {
                if (!parity[t]) continue;
                const std::uint32_t u = topo[t];
                if (t != start && is_critical[u]) {
                    if (complex.cell(u).dim == target_dim) support.push_back(complex.cell(u).id);
                    continue;
                }
                for (std::uint32_t v : graph.out[u]) parity[position[v]] ^= 1;
            }
            std::sort(support.begin(), support.end());
            chains[s].dim = support.empty() ? -1 : target_dim;
        }
    };

    const std::size_t work = sources.size() * (n + graph.edge_count());
    const unsigned hardware = std::thread::hardware_concurrency();
    if (work > (std::size_t{1} << 24) && hardware > 1 && sources.size() > 1) {
        const std::size_t workers = std::min<std::size_t>(hardware, sources.size());
        std::vector<std::thread> threads;
        threads.reserve(workers);
        const std::size_t chunk = (sources.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(begin + chunk, sources.size());
            if (begin >= end) break;
            threads.emplace_back([&, begin, end]() {
                std::vector<std::uint8_t> parity(n, 0);
                sweep_range(begin, end, parity);
            });
        }
        for (auto& thread : threads) thread.join();
    } else {
        std::vector<std::uint8_t> parity(n, 0);
        sweep_range(0, sources.size(), parity);
    }

    std::map<CellId, Chain> result;
    for (std::size_t s = 0; s < sources.size(); ++s)
        result.emplace(complex.cell(sources[s]).id, std::move(chains[s]));
    return result;
}

ChainComplex morse_complex_from_matching(const ChainComplex& complex, const Matching& matching) {
    const MorseGraph graph = build_morse_graph(complex, matching);
    auto boundaries = morse_boundary(graph, matching.critical);

    std::vector<Cell> cells;
    std::vector<std::vector<CellId>> boundary;
    cells.reserve(boundaries.size());
    boundary.reserve(boundaries.size());
    for (std::size_t i = 0; i < complex.size(); ++i) {
        const Cell& cell = complex.cell(i);
        auto it = boundaries.find(cell.id);
        if (it == boundaries.end()) continue;
        cells.push_back(cell);
        boundary.push_back(std::move(it->second.support));
    }
    return ChainComplex(std::move(cells), std::move(boundary));
}

MorseResult build_morse_complex(const ChainComplex& complex, const MatchingPolicy& policy) {
    Matching matching = compute_matching(complex, policy);
    ChainComplex morse = morse_complex_from_matching(complex, matching);
    return {std::move(morse), std::move(matching)};
}

ChainComplex morse_step_single_pair(const ChainComplex& complex, CellId face, CellId coface) {
    const std::size_t fi = complex.index_of(face);
    const std::size_t ci = complex.index_of(coface);
    if (complex.cell(ci).dim != complex.cell(fi).dim + 1)
        throw std::invalid_argument("morse_step_single_pair: pair dimensions are not consecutive");
    const auto& coface_boundary = complex.boundary_ids(ci);
    if (!std::binary_search(coface_boundary.begin(), coface_boundary.end(), face))
        throw std::invalid_argument("morse_step_single_pair: cells are not incident");

    const std::vector<CellId> transfer = erase_id(coface_boundary, face);

    std::vector<Cell> cells;
    std::vector<std::vector<CellId>> boundary;
    cells.reserve(complex.size() - 2);
    boundary.reserve(complex.size() - 2);
    for (std::size_t i = 0; i < complex.size(); ++i) {
        if (i == fi || i == ci) continue;
        const auto& faces = complex.boundary_ids(i);
        cells.push_back(complex.cell(i));
        if (std::binary_search(faces.begin(), faces.end(), face))
            boundary.push_back(symmetric_difference(erase_id(faces, face), transfer));
        else if (std::binary_search(faces.begin(), faces.end(), coface))
            boundary.push_back(erase_id(faces, coface));
        else
            boundary.push_back(faces);
    }
    return ChainComplex(std::move(cells), std::move(boundary));
}

}  // namespace imd
