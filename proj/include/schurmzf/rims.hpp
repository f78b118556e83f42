#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "schurmzf/partition.hpp"
#include "schurmzf/series.hpp"
#include "schurmzf/tableau.hpp"

namespace schurmzf {

enum class RimFlavor { H, E };

/// Border strip: connected cells, one per diagonal, no 2x2 block. Stored in
/// increasing diagonal order; may be empty.
struct Ribbon {
    std::vector<Cell> cells;

    bool empty() const { return cells.empty(); }

    int end_diagonal() const { return cells.back().diagonal(); }
};

/// Tiling of D(lambda) by ribbons theta_1..theta_t (empties allowed) together
/// with its permutation type and sign. H ribbons start at (i,1), E ribbons at
/// (1,i), and every prefix union is again a Young diagram.
struct RimDecomposition {
    RimFlavor flavor = RimFlavor::H;
    std::vector<Ribbon> ribbons;
    std::vector<int> sigma;  // sigma[i-1] = image of i, a bijection on 1..t
    int sign = 1;

    /// Grid of ribbon labels in the row layout of the shape,
    /// e.g. "1 1 3 3 / 3 3 3 / 3 4 4 / 4 4".
    std::string label_grid(const Partition& shape) const {
        std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.rows()));
        for (int i = 1; i <= shape.rows(); ++i)
            grid[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(shape.part(i)), 0);
        for (std::size_t t = 0; t < ribbons.size(); ++t)
            for (const Cell& c : ribbons[t].cells)
                grid[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] =
                    static_cast<int>(t + 1);
        std::string out;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (i) out += " / ";
            for (std::size_t j = 0; j < grid[i].size(); ++j) {
                if (j) out += ' ';
                out += std::to_string(grid[i][j]);
            }
        }
        return out;
    }
};

namespace detail {

inline int permutation_sign(const std::vector<int>& sigma) {
    int inv = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// Type of a decomposition by the end-diagonal rule: theta_i ending on diagonal
// e maps to the row j with lambda_j - j = e; an empty theta_i maps to the row
// j with lambda_j - j = -i (the zero-length path). The values lambda_j - j are
// strictly decreasing, so the row is unique whenever it exists.
inline std::vector<int> type_of(const Partition& lambda, const std::vector<Ribbon>& ribbons) {
    std::vector<int> sigma;
    sigma.reserve(ribbons.size());
    for (std::size_t i = 0; i < ribbons.size(); ++i) {
        int target = ribbons[i].empty() ? -static_cast<int>(i + 1)
                                        : ribbons[i].end_diagonal();
        int image = 0;
        for (int j = 1; j <= lambda.rows(); ++j)
            if (lambda.part(j) - j == target) {
                image = j;
                break;
            }
        if (image == 0)
            throw std::logic_error("rim decomposition with unmappable end diagonal");
        sigma.push_back(image);
    }
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j)
        if (sorted[j] != static_cast<int>(j + 1))
            throw std::logic_error("rim decomposition type is not a bijection");
    return sigma;
}

// Removes walk cells from the row-length profile; nullopt-style false when the
// removed cells are not row suffixes or the remainder is not a Young diagram.
inline bool remove_strip(const std::vector<int>& rows, const std::vector<Cell>& strip,
                         std::vector<int>* out) {
    std::vector<int> result = rows;
    std::vector<int> lo(rows.size() + 1, 0), hi(rows.size() + 1, 0);
    for (const Cell& c : strip) {
        auto r = static_cast<std::size_t>(c.row);
        if (lo[r] == 0) {
            lo[r] = hi[r] = c.col;
        } else {
            lo[r] = std::min(lo[r], c.col);
            hi[r] = std::max(hi[r], c.col);
        }
    }
    for (std::size_t r = 1; r < lo.size(); ++r) {
        if (lo[r] == 0) continue;
        if (hi[r] != rows[r - 1]) return false;  // not a suffix of the row
        result[r - 1] = lo[r] - 1;
    }
    for (std::size_t r = 1; r < result.size(); ++r)
        if (result[r] > result[r - 1]) return false;
    while (!result.empty() && result.back() == 0) result.pop_back();
    *out = std::move(result);
    return true;
}

}  // namespace detail

/// All H-rim decompositions of lambda. Ribbons are peeled from label r down to
/// label 1: when the remaining diagram still has exactly k rows, theta_k is a
/// removable border strip walked up-right from (k,1); with fewer rows it is
/// forced empty. Output order is deterministic (DFS by increasing strip end).
inline std::vector<RimDecomposition> enumerate_h_rims(const Partition& lambda) {
    std::vector<RimDecomposition> out;
    std::vector<Ribbon> stack(static_cast<std::size_t>(lambda.rows()));

    std::function<void(const std::vector<int>&, int)> peel = [&](const std::vector<int>& rows,
                                                                 int k) {
        int nrows = static_cast<int>(rows.size());
        if (k == 0) {
            if (nrows != 0) return;
            RimDecomposition dec;
            dec.flavor = RimFlavor::H;
            dec.ribbons = stack;
            dec.sigma = detail::type_of(lambda, dec.ribbons);
            dec.sign = detail::permutation_sign(dec.sigma);
            out.push_back(std::move(dec));
            return;
        }
        if (nrows > k) return;
        if (nrows < k) {
            stack[static_cast<std::size_t>(k - 1)] = Ribbon{};
            peel(rows, k - 1);
            return;
        }
        // Walk up-right from (k,1); every prefix of the walk is a candidate strip.
        std::vector<Cell> walk;
        std::function<void(int, int)> extend = [&](int i, int j) {
            walk.push_back({i, j});
            std::vector<int> rest;
            if (detail::remove_strip(rows, walk, &rest)) {
                stack[static_cast<std::size_t>(k - 1)] = Ribbon{walk};
                peel(rest, k - 1);
            }
            if (j + 1 <= rows[static_cast<std::size_t>(i - 1)]) extend(i, j + 1);
            if (i > 1 && j <= rows[static_cast<std::size_t>(i - 2)]) extend(i - 1, j);
            walk.pop_back();
        };
        extend(k, 1);
    };

    std::vector<int> rows = lambda.parts();
    peel(rows, lambda.rows());
    return out;
}

/// All E-rim decompositions: H-rim decompositions of the conjugate shape
/// transposed back, so theta_i starts at (1,i). Types and signs carry over.
inline std::vector<RimDecomposition> enumerate_e_rims(const Partition& lambda) {
    std::vector<RimDecomposition> out;
    for (RimDecomposition dec : enumerate_h_rims(lambda.conjugate())) {
        dec.flavor = RimFlavor::E;
        for (Ribbon& ribbon : dec.ribbons) {
            for (Cell& c : ribbon.cells) std::swap(c.row, c.col);
            std::reverse(ribbon.cells.begin(), ribbon.cells.end());
        }
        out.push_back(std::move(dec));
    }
    return out;
}

/// Exponent word of a ribbon: increasing diagonal order for H (fed to the
/// weak-chain sums), decreasing for E (fed to the strict-chain sums).
inline SymbolWord reading_word(const Ribbon& ribbon, const VarTableau& t, RimFlavor flavor) {
    SymbolWord out;
    out.reserve(ribbon.cells.size());
    for (const Cell& c : ribbon.cells) out.push_back(t.at(c));
    if (flavor == RimFlavor::E) std::reverse(out.begin(), out.end());
    return out;
}

/// Alternating rim sum: over all H-rim (or E-rim) decompositions, the sign
/// times the product of truncated zeta-star (or zeta) values of ribbon words.
template <class Mode>
typename Mode::Scalar rim_alt_sum(Evaluator<Mode>& ev, const VarTableau& t,
                                  const TypedAssignment<Mode>& a, long bound,
                                  RimFlavor flavor) {
    const auto decs =
        flavor == RimFlavor::H ? enumerate_h_rims(t.shape) : enumerate_e_rims(t.shape);
    typename Mode::Scalar acc = Mode::zero();
    for (const RimDecomposition& dec : decs) {
        typename Mode::Scalar prod = Mode::one();
        for (const Ribbon& ribbon : dec.ribbons) {
            if (ribbon.empty()) continue;
            auto word = resolve_word<Mode>(reading_word(ribbon, t, flavor), a);
            prod *= flavor == RimFlavor::H ? ev.zeta_star(word, bound) : ev.zeta(word, bound);
        }
        if (dec.sign > 0)
            acc += prod;
        else
            acc -= prod;
    }
    return acc;
}

}  // namespace schurmzf
