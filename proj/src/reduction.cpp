#include "imd/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace imd {

namespace {

std::vector<std::uint32_t> add_columns(const std::vector<std::uint32_t>& x,
                                       const std::vector<std::uint32_t>& y) {
    std::vector<std::uint32_t> out;
    out.reserve(x.size() + y.size());
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(),
                                  std::back_inserter(out));
    return out;
}

// Rank of a Z2 matrix given as bit-packed columns.
std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> columns) {
    std::vector<std::vector<std::uint64_t>> pivots;   // reduced pivot columns
    std::vector<std::size_t> pivot_bits;

    auto top_bit = [](const std::vector<std::uint64_t>& column) -> std::size_t {
        for (std::size_t w = column.size(); w > 0; --w) {
            if (column[w - 1] == 0) continue;
            std::size_t bit = 63;
            while (!(column[w - 1] >> bit & 1)) --bit;
            return (w - 1) * 64 + bit;
        }
        return SIZE_MAX;
    };

    std::size_t rank = 0;
    for (auto& column : columns) {
        std::size_t bit = top_bit(column);
        while (bit != SIZE_MAX) {
            std::size_t k = 0;
            while (k < pivot_bits.size() && pivot_bits[k] != bit) ++k;
            if (k == pivot_bits.size()) break;
            for (std::size_t w = 0; w < column.size(); ++w) column[w] ^= pivots[k][w];
            bit = top_bit(column);
        }
        if (bit != SIZE_MAX) {
            pivots.push_back(std::move(column));
            pivot_bits.push_back(bit);
            ++rank;
        }
    }
    return rank;
}

}  // namespace

SortedBoundaryMatrix build_matrix(const ChainComplex& complex) {
    SortedBoundaryMatrix matrix;
    const auto& order = complex.sorted_order();
    const auto& rank = complex.sorted_rank();

    matrix.cells.reserve(order.size());
    matrix.columns.reserve(order.size());
    for (std::size_t index : order) {
        matrix.cells.push_back(complex.cell(index));
        std::vector<std::uint32_t> column;
        column.reserve(complex.boundary_ids(index).size());
        for (CellId face_id : complex.boundary_ids(index))
            column.push_back(static_cast<std::uint32_t>(rank[complex.index_of(face_id)]));
        std::sort(column.begin(), column.end());
        matrix.columns.push_back(std::move(column));
    }
    return matrix;
}

SortedBoundaryMatrix matrix_reduce(SortedBoundaryMatrix matrix,
                                   std::vector<ColumnAddition>* log) {
    const std::size_t n = matrix.size();
    std::vector<std::uint32_t> owner(n, SortedBoundaryMatrix::npos);  // low row -> column

    for (std::uint32_t j = 0; j < n; ++j) {
        std::uint32_t l = matrix.low(j);
        while (l != SortedBoundaryMatrix::npos && owner[l] != SortedBoundaryMatrix::npos) {
            const std::uint32_t k = owner[l];
            if (log) log->push_back({k, j});
            matrix.columns[j] = add_columns(matrix.columns[j], matrix.columns[k]);
            l = matrix.low(j);
        }
        if (l != SortedBoundaryMatrix::npos) owner[l] = j;
    }
    return matrix;
}

IntervalReadout read_intervals(const SortedBoundaryMatrix& reduced) {
    const std::size_t n = reduced.size();
    std::vector<std::uint32_t> owner(n, SortedBoundaryMatrix::npos);

    for (std::uint32_t j = 0; j < n; ++j) {
        const std::uint32_t l = reduced.low(j);
        if (l == SortedBoundaryMatrix::npos) continue;
        if (owner[l] != SortedBoundaryMatrix::npos)
            throw std::invalid_argument("read_intervals: matrix still has collisions");
        owner[l] = j;
    }

    IntervalReadout readout;
    for (std::uint32_t j = 0; j < n; ++j) {
        const std::uint32_t l = reduced.low(j);
        if (l != SortedBoundaryMatrix::npos) {
            const Cell& birth = reduced.cells[l];
            const Cell& death = reduced.cells[j];
            if (birth.filtration == death.filtration)
                ++readout.zero_length_pairs;
            else
                readout.intervals.push_back({birth.dim, birth.filtration, death.filtration});
        } else if (owner[j] == SortedBoundaryMatrix::npos) {
            const Cell& birth = reduced.cells[j];
            readout.intervals.push_back({birth.dim, birth.filtration, std::nullopt});
        }
    }
    sort_intervals(readout.intervals);
    return readout;
}

std::vector<std::size_t> betti_rank_oracle(const ChainComplex& complex) {
    const int top = complex.top_dim();
    if (top < 0) return {};

    // cells grouped by dimension, with a per-dimension position for rows
    std::vector<std::vector<std::size_t>> by_dim(static_cast<std::size_t>(top) + 1);
    std::vector<std::size_t> row(complex.size(), 0);
    for (std::size_t i = 0; i < complex.size(); ++i) {
        auto& group = by_dim[static_cast<std::size_t>(complex.cell(i).dim)];
        row[i] = group.size();
        group.push_back(i);
    }

    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    for (int p = 1; p <= top; ++p) {
        const auto& cols = by_dim[static_cast<std::size_t>(p)];
        const std::size_t rows = by_dim[static_cast<std::size_t>(p - 1)].size();
        const std::size_t words = (rows + 63) / 64;
        std::vector<std::vector<std::uint64_t>> packed;
        packed.reserve(cols.size());
        for (std::size_t index : cols) {
            std::vector<std::uint64_t> column(words, 0);
            for (CellId face_id : complex.boundary_ids(index)) {
                const std::size_t r = row[complex.index_of(face_id)];
                column[r / 64] ^= std::uint64_t{1} << (r % 64);
            }
            packed.push_back(std::move(column));
        }
        rank[static_cast<std::size_t>(p)] = gf2_rank(std::move(packed));
    }

    std::vector<std::size_t> betti(static_cast<std::size_t>(top) + 1, 0);
    for (int p = 0; p <= top; ++p) {
        const std::size_t np = by_dim[static_cast<std::size_t>(p)].size();
        betti[static_cast<std::size_t>(p)] =
            np - rank[static_cast<std::size_t>(p)] - rank[static_cast<std::size_t>(p) + 1];
    }
    return betti;
}

}  // namespace imd
