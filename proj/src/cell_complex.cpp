#include "imd/cell_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace imd {

bool Chain::contains(CellId id) const {
    return std::binary_search(support.begin(), support.end(), id);
}

Chain chain_add(const Chain& x, const Chain& y) {
    if (x.empty()) return y;
    if (y.empty()) return x;
    if (x.dim != y.dim) throw std::invalid_argument("chain_add: dimension mismatch");
    Chain out;
    out.support.reserve(x.support.size() + y.support.size());
    std::set_symmetric_difference(x.support.begin(), x.support.end(), y.support.begin(),
                                  y.support.end(), std::back_inserter(out.support));
    out.dim = out.support.empty() ? -1 : x.dim;
    return out;
}

std::string to_string(const ValidationIssue& issue) {
    using Kind = ValidationIssue::Kind;
    const std::string cell = std::to_string(issue.cell);
    const std::string other = std::to_string(issue.other);
    switch (issue.kind) {
        case Kind::duplicate_face:
            return "cell " + cell + ": face " + other + " listed twice";
        case Kind::face_dimension:
            return "cell " + cell + ": face " + other + " does not have dimension one less";
        case Kind::filtration_order:
            return "cell " + cell + ": face " + other + " has larger filtration value";
        case Kind::boundary_square:
            return "cell " + cell + ": boundary of boundary contains " + other;
    }
    return "unknown issue";
}

ChainComplex::ChainComplex(std::vector<Cell> cells, std::vector<std::vector<CellId>> boundary)
    : cells_(std::move(cells)), boundary_(std::move(boundary)) {
    if (boundary_.size() != cells_.size())
        throw std::invalid_argument("ChainComplex: one boundary list per cell required");

    index_.reserve(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (!index_.emplace(cells_[i].id, i).second)
            throw std::invalid_argument("ChainComplex: duplicate cell id " +
                                        std::to_string(cells_[i].id));
        if (cells_[i].dim < 0)
            throw std::invalid_argument("ChainComplex: negative dimension");
        top_dim_ = std::max(top_dim_, cells_[i].dim);
    }

    coboundary_.resize(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        std::sort(boundary_[i].begin(), boundary_[i].end());
        for (CellId face : boundary_[i]) {
            auto it = index_.find(face);
            if (it == index_.end())
                throw std::invalid_argument("ChainComplex: boundary of cell " +
                                            std::to_string(cells_[i].id) +
                                            " references unknown cell " + std::to_string(face));
            coboundary_[it->second].push_back(cells_[i].id);
        }
        incidences_ += boundary_[i].size();
    }
    for (auto& cob : coboundary_) std::sort(cob.begin(), cob.end());

    order_.resize(cells_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
        const Cell& ca = cells_[a];
        const Cell& cb = cells_[b];
        if (ca.filtration != cb.filtration) return ca.filtration < cb.filtration;
        if (ca.dim != cb.dim) return ca.dim < cb.dim;
        return ca.id < cb.id;
    });
    rank_.resize(cells_.size());
    for (std::size_t pos = 0; pos < order_.size(); ++pos) rank_[order_[pos]] = pos;
}

bool ChainComplex::contains(CellId id) const { return index_.find(id) != index_.end(); }

std::size_t ChainComplex::index_of(CellId id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::out_of_range("ChainComplex: no cell with id " + std::to_string(id));
    return it->second;
}

Chain boundary_of(const ChainComplex& complex, CellId c) {
    const std::size_t index = complex.index_of(c);
    Chain chain;
    chain.support = complex.boundary_ids(index);
    chain.dim = chain.support.empty() ? -1 : complex.cell(index).dim - 1;
    return chain;
}

Chain coboundary_of(const ChainComplex& complex, CellId c) {
    const std::size_t index = complex.index_of(c);
    Chain chain;
    chain.support = complex.coboundary_ids(index);
    chain.dim = chain.support.empty() ? -1 : complex.cell(index).dim + 1;
    return chain;
}

ValidationReport validate(const ChainComplex& complex) {
    ValidationReport report;
    std::unordered_map<CellId, int> square;  // (p-2)-cell -> parity

    for (std::size_t i = 0; i < complex.size(); ++i) {
        const Cell& cell = complex.cell(i);
        const auto& faces = complex.boundary_ids(i);

        for (std::size_t k = 0; k + 1 < faces.size(); ++k) {
            if (faces[k] == faces[k + 1])
                report.issues.push_back(
                    {ValidationIssue::Kind::duplicate_face, cell.id, faces[k]});
        }

        square.clear();
        for (CellId face_id : faces) {
            const std::size_t face_index = complex.index_of(face_id);
            const Cell& face = complex.cell(face_index);
            if (face.dim != cell.dim - 1)
                report.issues.push_back(
                    {ValidationIssue::Kind::face_dimension, cell.id, face_id});
            if (face.filtration > cell.filtration)
                report.issues.push_back(
                    {ValidationIssue::Kind::filtration_order, cell.id, face_id});
            for (CellId grandface : complex.boundary_ids(face_index)) square[grandface] ^= 1;
        }

        std::vector<CellId> odd;
        for (const auto& [grandface, parity] : square)
            if (parity) odd.push_back(grandface);
        std::sort(odd.begin(), odd.end());
        for (CellId grandface : odd)
            report.issues.push_back(
                {ValidationIssue::Kind::boundary_square, cell.id, grandface});
    }
    return report;
}

}  // namespace imd
