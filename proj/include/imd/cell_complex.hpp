#ifndef IMD_CELL_COMPLEX_HPP
#define IMD_CELL_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace imd {

// Identifier of a cell. Ids are assigned when a complex is first built and
// survive into every complex derived from it (a Morse complex keeps the ids
// of its critical cells), so ids of a derived complex need not be contiguous.
using CellId = std::uint32_t;

struct Cell {
    CellId id = 0;
    int dim = 0;
    int filtration = 0;
};

// Z2 chain: a sorted set of cell ids, all of the same dimension.
// dim == -1 marks the empty chain, which is compatible with any dimension.
struct Chain {
    int dim = -1;
    std::vector<CellId> support;

    bool empty() const { return support.empty(); }
    std::size_t size() const { return support.size(); }
    bool contains(CellId id) const;

    bool operator==(const Chain&) const = default;
};

// Sum modulo 2: symmetric difference of the supports.
// Throws std::invalid_argument when both chains are nonempty and their
// dimensions differ.
Chain chain_add(const Chain& x, const Chain& y);

struct ValidationIssue {
    enum class Kind {
        duplicate_face,    // a face listed twice in one boundary
        face_dimension,    // face dim != cell dim - 1
        filtration_order,  // g(face) > g(cell)
        boundary_square,   // dd != 0, witnessed at a (p-2)-cell
    };

    Kind kind;
    CellId cell;
    CellId other;

    bool operator==(const ValidationIssue&) const = default;
};

std::string to_string(const ValidationIssue& issue);

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Finite filtered chain complex over Z2. The boundary map stores, per cell,
// the set of faces with incidence 1; it is the single source of boundary
// truth. Immutable after construction and safe to share between threads.
class ChainComplex {
  public:
    ChainComplex() = default;

    // boundary[i] lists the ids of the faces of cells[i]. Every referenced id
    // must name a cell of the complex and cell ids must be unique; both are
    // enforced here (std::invalid_argument). Everything else -- face
    // dimensions, dd = 0, filtration monotonicity -- is validate()'s job, so
    // that broken complexes can be represented and reported.
    ChainComplex(std::vector<Cell> cells, std::vector<std::vector<CellId>> boundary);

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    int top_dim() const { return top_dim_; }

    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(std::size_t index) const { return cells_[index]; }

    bool contains(CellId id) const;
    // Throws std::out_of_range for ids not in the complex.
    std::size_t index_of(CellId id) const;
    const Cell& cell_by_id(CellId id) const { return cells_[index_of(id)]; }

    const std::vector<CellId>& boundary_ids(std::size_t index) const { return boundary_[index]; }
    const std::vector<CellId>& coboundary_ids(std::size_t index) const { return coboundary_[index]; }

    // Total number of incidence relations (= edges of the Morse graph).
    std::size_t incidence_count() const { return incidences_; }

    // Cell indices ordered by (filtration, dim, id): the canonical total
    // order used for boundary-matrix columns and all tie-breaking.
    const std::vector<std::size_t>& sorted_order() const { return order_; }

    // Position of each cell in sorted_order(), indexed by cell index.
    const std::vector<std::size_t>& sorted_rank() const { return rank_; }

    // (filtration, dim, id) comparison of two cells given by index.
    bool precedes(std::size_t a, std::size_t b) const { return rank_[a] < rank_[b]; }

  private:
    std::vector<Cell> cells_;
    std::vector<std::vector<CellId>> boundary_;
    std::vector<std::vector<CellId>> coboundary_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> rank_;
    std::unordered_map<CellId, std::size_t> index_;
    std::size_t incidences_ = 0;
    int top_dim_ = -1;
};

// Faces of c with incidence 1, as a (p-1)-chain.
Chain boundary_of(const ChainComplex& complex, CellId c);

// Cofaces B with c in the boundary of B, as a (p+1)-chain.
Chain coboundary_of(const ChainComplex& complex, CellId c);

// Checks every structural invariant: face dimensions, dd = 0 (each
// (p-2)-cell must appear an even number of times among the boundaries of a
// cell's faces), and filtration monotonicity g(face) <= g(cell). Violations
// are reported as data, never thrown.
ValidationReport validate(const ChainComplex& complex);

}  // namespace imd

#endif
