#include "gtcomb/weight.hpp"

#include "gtcomb/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gtcomb {

Weight::Weight(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw std::invalid_argument("weight needs at least one row");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) {
            throw std::invalid_argument("weight row " + std::to_string(i + 1) +
                                        " is empty");
        }
    }
}

std::vector<int> Weight::dims() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        out.push_back(static_cast<int>(row.size()));
    }
    return out;
}

std::vector<OmegaIndex> strandOrder(const Weight& weight) {
    std::vector<OmegaIndex> cells;
    for (int i = 1; i <= weight.numRows(); ++i) {
        for (int r = 1; r <= weight.rowSize(i); ++r) {
            cells.push_back({i, r});
        }
    }
    std::stable_sort(cells.begin(), cells.end(),
                     [&weight](const OmegaIndex& a, const OmegaIndex& b) {
                         const Rational& va = weight.at(a.row, a.slot);
                         const Rational& vb = weight.at(b.row, b.slot);
                         if (va != vb) {
                             return va < vb;
                         }
                         if (a.row != b.row) {
                             return a.row > b.row;
                         }
                         return a.slot > b.slot;
                     });
    return cells;
}

std::vector<int> wordOfWeight(const Weight& weight) {
    std::vector<int> letters;
    for (const OmegaIndex& cell : strandOrder(weight)) {
        letters.push_back(cell.row);
    }
    return letters;
}

namespace {

/// Relation of (k,r) to (k+1,s) from the sign of value(k,r) - value(k+1,s).
Cover coverOf(const Rational& lowerRowValue, const Rational& upperRowValue) {
    const Rational diff = lowerRowValue - upperRowValue;
    if (!isInteger(diff)) {
        return Cover::Incomparable;
    }
    return diff < 0 ? Cover::Below : Cover::AboveOrEqual;
}

} // namespace

PartialOrderRelation partialOrder(const Weight& weight) {
    PartialOrderRelation rel;
    rel.dims = weight.dims();
    const int n = weight.numRows();

    // Flat ids for reachability.
    std::vector<OmegaIndex> cells;
    std::vector<std::vector<int>> idOf(n + 1);
    for (int i = 1; i <= n; ++i) {
        idOf[i].assign(weight.rowSize(i) + 1, -1);
        for (int r = 1; r <= weight.rowSize(i); ++r) {
            idOf[i][r] = static_cast<int>(cells.size());
            cells.push_back({i, r});
        }
    }

    std::vector<std::vector<int>> edges(cells.size());
    rel.covers.resize(n - 1);
    for (int k = 1; k <= n - 1; ++k) {
        auto& matrix = rel.covers[k - 1];
        matrix.assign(weight.rowSize(k),
                      std::vector<Cover>(weight.rowSize(k + 1), Cover::Incomparable));
        for (int r = 1; r <= weight.rowSize(k); ++r) {
            for (int s = 1; s <= weight.rowSize(k + 1); ++s) {
                const Cover c = coverOf(weight.at(k, r), weight.at(k + 1, s));
                matrix[r - 1][s - 1] = c;
                if (c == Cover::Below) {
                    edges[idOf[k][r]].push_back(idOf[k + 1][s]);
                } else if (c == Cover::AboveOrEqual) {
                    edges[idOf[k + 1][s]].push_back(idOf[k][r]);
                }
            }
        }
    }

    // Reachability along the cover arrows; the arrow graph is acyclic
    // because values weakly increase along every arrow and strictly
    // increase along Below arrows, while AboveOrEqual arrows always step
    // down a row.
    const std::size_t total = cells.size();
    std::vector<std::vector<bool>> reach(total, std::vector<bool>(total, false));
    std::function<void(std::size_t, std::size_t)> visit =
        [&](std::size_t origin, std::size_t node) {
            for (int next : edges[node]) {
                if (!reach[origin][next]) {
                    reach[origin][next] = true;
                    visit(origin, static_cast<std::size_t>(next));
                }
            }
        };
    for (std::size_t a = 0; a < total; ++a) {
        visit(a, a);
    }
    for (std::size_t a = 0; a < total; ++a) {
        for (std::size_t b = 0; b < total; ++b) {
            if (reach[a][b]) {
                rel.closure.emplace_back(cells[a], cells[b]);
            }
        }
    }
    std::sort(rel.closure.begin(), rel.closure.end());
    return rel;
}

bool weightsEquivalent(const Weight& a, const Weight& b) {
    if (a.dims() != b.dims()) {
        throw std::invalid_argument("weights have different dimension vectors");
    }
    for (int i = 1; i <= a.numRows(); ++i) {
        for (int r = 1; r <= a.rowSize(i); ++r) {
            if (!integerDifference(a.at(i, r), b.at(i, r))) {
                return false;
            }
        }
    }
    return partialOrder(a).covers == partialOrder(b).covers;
}

namespace {

std::vector<std::string> splitOn(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

} // namespace

Weight parseTableau(const std::string& text) {
    const std::vector<std::string> rowTexts = splitOn(text, ';');
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < rowTexts.size(); ++i) {
        const std::string rowLabel = "row " + std::to_string(i + 1);
        std::vector<Rational> row;
        for (const std::string& entry : splitOn(rowTexts[i], ',')) {
            try {
                row.push_back(parseRational(entry));
            } catch (const ParseError& e) {
                throw ParseError(rowLabel + ": " + e.what());
            }
        }
        if (row.empty()) {
            throw ParseError(rowLabel + ": empty row");
        }
        rows.push_back(std::move(row));
    }
    return Weight(std::move(rows));
}

std::string renderTableau(const Weight& weight) {
    std::ostringstream out;
    for (int i = 1; i <= weight.numRows(); ++i) {
        if (i > 1) {
            out << ';';
        }
        std::vector<Rational> row = weight.rows()[i - 1];
        std::sort(row.begin(), row.end(), std::greater<>());
        for (std::size_t r = 0; r < row.size(); ++r) {
            if (r > 0) {
                out << ',';
            }
            out << toString(row[r]);
        }
    }
    return out.str();
}

} // namespace gtcomb
