#pragma once

#include <gmpxx.h>

#include <vector>

#include "schurmzf/partition.hpp"

namespace schurmzf {

/// Streaming enumerator of SSYT_N(lambda): fillings with weakly increasing rows,
/// strictly increasing columns and entries bounded by N. Tableaux are produced in
/// lexicographic order of the row-major entry sequence, one at a time, so shapes
/// with huge tableau counts never materialize a list.
class SsytEnumerator {
  public:
    SsytEnumerator(Partition shape, long bound) : shape_(std::move(shape)), bound_(bound) {
        cells_ = shape_.cells();
        entries_.assign(cells_.size(), 0);
        valid_ = fill_minimal_from(0);
    }

    bool valid() const { return valid_; }

    /// Row-major entries of the current tableau.
    const std::vector<int>& entries() const { return entries_; }

    int entry(int i, int j) const { return entries_[index_of(i, j)]; }

    /// Advances to the lexicographically next tableau; false when exhausted.
    bool advance() {
        if (!valid_) return false;
        for (int k = static_cast<int>(cells_.size()) - 1; k >= 0; --k) {
            ++entries_[static_cast<std::size_t>(k)];
            if (entries_[static_cast<std::size_t>(k)] <= bound_ &&
                fill_minimal_from(k + 1))
                return true;
        }
        valid_ = false;
        return false;
    }

  private:
    std::size_t index_of(int i, int j) const {
        std::size_t idx = 0;
        for (int r = 1; r < i; ++r) idx += static_cast<std::size_t>(shape_.part(r));
        return idx + static_cast<std::size_t>(j - 1);
    }

    // Fills cells[from..] with their minimal admissible entries; false if some
    // cell would exceed the bound.
    bool fill_minimal_from(std::size_t from) {
        for (std::size_t k = from; k < cells_.size(); ++k) {
            const Cell c = cells_[k];
            int lo = 1;
            if (c.col > 1) lo = std::max(lo, entries_[index_of(c.row, c.col - 1)]);
            if (c.row > 1) lo = std::max(lo, entries_[index_of(c.row - 1, c.col)] + 1);
            if (lo > bound_) return false;
            entries_[k] = lo;
        }
        return true;
    }

    Partition shape_;
    long bound_;
    std::vector<Cell> cells_;
    std::vector<int> entries_;
    bool valid_ = false;
};

/// Number of SSYT_N(lambda) by the hook content formula,
/// prod over cells of (N + j - i) / h(i,j). Exact integer.
inline mpz_class count_ssyt(const Partition& lambda, long bound) {
    mpq_class acc(1);
    for (const Cell& c : lambda.cells()) {
        long content = bound + c.col - c.row;
        if (content <= 0) return 0;
        acc *= mpq_class(content, lambda.hook_length(c.row, c.col));
    }
    acc.canonicalize();
    if (acc.get_den() != 1)
        throw std::logic_error("hook content product is not an integer");
    return acc.get_num();
}

}  // namespace schurmzf
