#include "support/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace imd::testing {

namespace {

struct Structure {
    std::size_t n0 = 0;
    std::vector<std::vector<CellId>> edges;  // vertex ids
    std::vector<std::vector<CellId>> faces;  // edge ids (already offset by n0)
};

ChainComplex realize(const Structure& s, const std::vector<int>& filtration) {
    std::vector<Cell> cells;
    std::vector<std::vector<CellId>> boundary;
    const std::size_t total = s.n0 + s.edges.size() + s.faces.size();
    cells.reserve(total);
    boundary.reserve(total);
    std::size_t i = 0;
    for (std::size_t v = 0; v < s.n0; ++v, ++i) {
        cells.push_back({static_cast<CellId>(i), 0, filtration[i]});
        boundary.push_back({});
    }
    for (const auto& edge : s.edges) {
        cells.push_back({static_cast<CellId>(i), 1, filtration[i]});
        boundary.push_back(edge);
        ++i;
    }
    for (const auto& face : s.faces) {
        cells.push_back({static_cast<CellId>(i), 2, filtration[i]});
        boundary.push_back(face);
        ++i;
    }
    return ChainComplex(std::move(cells), std::move(boundary));
}

// All monotone assignments from `values` (ascending) to the cells of s.
void emit_filtrations(const Structure& s, const std::vector<int>& values,
                      const std::function<void(const ChainComplex&)>& fn) {
    const std::size_t total = s.n0 + s.edges.size() + s.faces.size();
    std::vector<int> filtration(total, 0);

    auto faces_of = [&](std::size_t i) -> const std::vector<CellId>* {
        if (i >= s.n0 + s.edges.size()) return &s.faces[i - s.n0 - s.edges.size()];
        if (i >= s.n0) return &s.edges[i - s.n0];
        return nullptr;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == total) {
            fn(realize(s, filtration));
            return;
        }
        int lowest = values.front();
        if (const auto* faces = faces_of(i))
            for (CellId face : *faces) lowest = std::max(lowest, filtration[face]);
        for (int value : values) {
            if (value < lowest) continue;
            filtration[i] = value;
            rec(i + 1);
        }
    };
    rec(0);
}

void each_multiset(std::size_t options, std::size_t size,
                   const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> current;
    std::function<void()> rec = [&]() {
        if (current.size() == size) {
            fn(current);
            return;
        }
        for (std::size_t i = current.empty() ? 0 : current.back(); i < options; ++i) {
            current.push_back(i);
            rec();
            current.pop_back();
        }
    };
    rec();
}

}  // namespace

void enumerate_small_complexes(const std::function<void(const ChainComplex&)>& fn) {
    for (std::size_t n0 = 1; n0 <= 3; ++n0) {
        // edge boundary shapes: empty, dangling, and every vertex pair
        std::vector<std::vector<CellId>> edge_options;
        edge_options.push_back({});
        for (std::size_t v = 0; v < n0; ++v) edge_options.push_back({static_cast<CellId>(v)});
        for (std::size_t u = 0; u < n0; ++u)
            for (std::size_t v = u + 1; v < n0; ++v)
                edge_options.push_back({static_cast<CellId>(u), static_cast<CellId>(v)});

        std::vector<std::uint32_t> option_parity;
        for (const auto& option : edge_options) {
            std::uint32_t mask = 0;
            for (CellId v : option) mask ^= 1u << v;
            option_parity.push_back(mask);
        }

        for (std::size_t n1 = 0; n1 <= 3; ++n1) {
            each_multiset(edge_options.size(), n1, [&](const std::vector<std::size_t>& picks) {
                Structure s;
                s.n0 = n0;
                std::vector<std::uint32_t> edge_parity;
                for (std::size_t pick : picks) {
                    s.edges.push_back(edge_options[pick]);
                    edge_parity.push_back(option_parity[pick]);
                }

                // 2-cell shapes: subsets of the edges with zero Z2 vertex sum
                std::vector<std::vector<CellId>> face_options;
                for (std::uint32_t mask = 0; mask < (1u << n1); ++mask) {
                    std::uint32_t parity = 0;
                    for (std::size_t k = 0; k < n1; ++k)
                        if (mask >> k & 1) parity ^= edge_parity[k];
                    if (parity != 0) continue;
                    std::vector<CellId> face;
                    for (std::size_t k = 0; k < n1; ++k)
                        if (mask >> k & 1) face.push_back(static_cast<CellId>(n0 + k));
                    face_options.push_back(std::move(face));
                }

                for (std::size_t n2 = 0; n2 <= 2; ++n2) {
                    const std::size_t total = n0 + n1 + n2;
                    if (total > 8) continue;
                    each_multiset(face_options.size(), n2,
                                  [&](const std::vector<std::size_t>& face_picks) {
                                      Structure with_faces = s;
                                      for (std::size_t pick : face_picks)
                                          with_faces.faces.push_back(face_options[pick]);
                                      const std::vector<int> values =
                                          total <= 5 ? std::vector<int>{0, 1, 2}
                                                     : std::vector<int>{0, 1};
                                      emit_filtrations(with_faces, values, fn);
                                  });
                }
            });
        }
    }
}

namespace {

ChainComplex random_multigraph(std::mt19937& rng, bool with_faces) {
    const std::size_t n0 = 1 + rng() % 8;
    const std::size_t n1 = rng() % 13;

    std::vector<std::vector<CellId>> edges;
    std::vector<std::uint32_t> edge_parity;
    for (std::size_t k = 0; k < n1; ++k) {
        const std::uint32_t roll = rng() % 10;
        std::vector<CellId> faces;
        if (roll < 7 && n0 >= 2) {
            const CellId u = static_cast<CellId>(rng() % n0);
            CellId v = static_cast<CellId>(rng() % (n0 - 1));
            if (v >= u) ++v;
            faces = {std::min(u, v), std::max(u, v)};
        } else if (roll < 9) {
            faces = {static_cast<CellId>(rng() % n0)};
        }
        std::uint32_t parity = 0;
        for (CellId v : faces) parity ^= 1u << v;
        edges.push_back(std::move(faces));
        edge_parity.push_back(parity);
    }

    std::vector<std::vector<CellId>> faces2;
    if (with_faces && n1 > 0) {
        for (int attempt = 0; attempt < 8 && faces2.size() < 4; ++attempt) {
            const std::uint32_t mask = rng() & ((1u << n1) - 1);
            std::uint32_t parity = 0;
            for (std::size_t k = 0; k < n1; ++k)
                if (mask >> k & 1) parity ^= edge_parity[k];
            if (parity != 0) continue;
            std::vector<CellId> face;
            for (std::size_t k = 0; k < n1; ++k)
                if (mask >> k & 1) face.push_back(static_cast<CellId>(n0 + k));
            faces2.push_back(std::move(face));
        }
    }

    std::vector<Cell> cells;
    std::vector<std::vector<CellId>> boundary;
    std::vector<int> filtration;
    for (std::size_t v = 0; v < n0; ++v) {
        cells.push_back({static_cast<CellId>(cells.size()), 0, static_cast<int>(rng() % 4)});
        boundary.push_back({});
        filtration.push_back(cells.back().filtration);
    }
    for (const auto& edge : edges) {
        int base = 0;
        for (CellId v : edge) base = std::max(base, filtration[v]);
        const int value = base + static_cast<int>(rng() % 3);
        cells.push_back({static_cast<CellId>(cells.size()), 1, value});
        boundary.push_back(edge);
        filtration.push_back(value);
    }
    for (const auto& face : faces2) {
        int base = 0;
        for (CellId e : face) base = std::max(base, filtration[e]);
        const int value = base + static_cast<int>(rng() % 3);
        cells.push_back({static_cast<CellId>(cells.size()), 2, value});
        boundary.push_back(face);
        filtration.push_back(value);
    }
    return ChainComplex(std::move(cells), std::move(boundary));
}

}  // namespace

ChainComplex random_complex(std::mt19937& rng) {
    switch (rng() % 3) {
        case 0:
            return random_flag_complex(rng, 4 + rng() % 6, 1 + static_cast<int>(rng() % 5), 60);
        case 1:
            return random_multigraph(rng, false);
        default:
            return random_multigraph(rng, true);
    }
}

ChainComplex random_flag_complex(std::mt19937& rng, std::size_t vertices, int max_weight,
                                 std::size_t max_cells) {
    std::vector<std::vector<int>> weight(vertices, std::vector<int>(vertices, 0));
    for (std::size_t i = 0; i < vertices; ++i)
        for (std::size_t j = i + 1; j < vertices; ++j)
            weight[i][j] = weight[j][i] = 1 + static_cast<int>(rng() % max_weight);

    std::vector<Cell> cells;
    std::vector<std::vector<CellId>> boundary;
    auto budget_left = [&]() { return cells.size() < max_cells; };

    for (std::size_t i = 0; i < vertices && budget_left(); ++i) {
        cells.push_back({static_cast<CellId>(cells.size()), 0, 0});
        boundary.push_back({});
    }

    std::map<std::pair<std::size_t, std::size_t>, CellId> edge_id;
    for (std::size_t i = 0; i < vertices && budget_left(); ++i) {
        for (std::size_t j = i + 1; j < vertices && budget_left(); ++j) {
            const CellId id = static_cast<CellId>(cells.size());
            edge_id[{i, j}] = id;
            cells.push_back({id, 1, weight[i][j]});
            boundary.push_back({static_cast<CellId>(i), static_cast<CellId>(j)});
        }
    }

    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, CellId> triangle_id;
    for (std::size_t i = 0; i < vertices && budget_left(); ++i) {
        for (std::size_t j = i + 1; j < vertices && budget_left(); ++j) {
            for (std::size_t k = j + 1; k < vertices && budget_left(); ++k) {
                auto e_ij = edge_id.find({i, j});
                auto e_ik = edge_id.find({i, k});
                auto e_jk = edge_id.find({j, k});
                if (e_ij == edge_id.end() || e_ik == edge_id.end() || e_jk == edge_id.end())
                    continue;
                const int filtration =
                    std::max({weight[i][j], weight[i][k], weight[j][k]});
                const CellId id = static_cast<CellId>(cells.size());
                triangle_id[{i, j, k}] = id;
                cells.push_back({id, 2, filtration});
                boundary.push_back({e_ij->second, e_ik->second, e_jk->second});
            }
        }
    }

    for (std::size_t i = 0; i < vertices && budget_left(); ++i) {
        for (std::size_t j = i + 1; j < vertices && budget_left(); ++j) {
            for (std::size_t k = j + 1; k < vertices && budget_left(); ++k) {
                for (std::size_t l = k + 1; l < vertices && budget_left(); ++l) {
                    auto t0 = triangle_id.find({i, j, k});
                    auto t1 = triangle_id.find({i, j, l});
                    auto t2 = triangle_id.find({i, k, l});
                    auto t3 = triangle_id.find({j, k, l});
                    if (t0 == triangle_id.end() || t1 == triangle_id.end() ||
                        t2 == triangle_id.end() || t3 == triangle_id.end())
                        continue;
                    const int filtration = std::max(
                        {std::max({weight[i][j], weight[i][k], weight[i][l]}),
                         std::max({weight[j][k], weight[j][l], weight[k][l]})});
                    cells.push_back({static_cast<CellId>(cells.size()), 3, filtration});
                    boundary.push_back(
                        {t0->second, t1->second, t2->second, t3->second});
                }
            }
        }
    }
    return ChainComplex(std::move(cells), std::move(boundary));
}

}  // namespace imd::testing
