#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "schurmzf/partition.hpp"
#include "schurmzf/rims.hpp"
#include "schurmzf/series.hpp"
#include "schurmzf/tableau.hpp"

namespace schurmzf {

/// Result of pushing a full row (H) or column (E) of new boxes into a tableau.
struct PushOutcome {
    Partition shape;
    VarTableau tableau;
    std::vector<int> positions;  // column indices (H) or row indices (E), 1-based
};

namespace detail {

inline VarTableau columns_to_tableau(const std::vector<SymbolWord>& cols) {
    std::vector<int> heights;
    heights.reserve(cols.size());
    for (const auto& col : cols) heights.push_back(static_cast<int>(col.size()));
    Partition colshape(heights);
    Partition rowshape = colshape.conjugate();
    std::vector<SymbolWord> rows;
    for (int i = 1; i <= rowshape.rows(); ++i) {
        SymbolWord row;
        for (int j = 1; j <= rowshape.part(i); ++j)
            row.push_back(cols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)]);
        rows.push_back(std::move(row));
    }
    return {std::move(rowshape), std::move(rows)};
}

}  // namespace detail

/// Pushing rule for a row of boxes: each box lands on top of a column (the old
/// column shifts down one) or appends just right of the first row; a placement
/// is kept only if the shape is again a Young diagram after every single
/// insertion, and later boxes go strictly further right. Outcomes come in
/// lexicographic order of the placement vector.
inline std::vector<PushOutcome> push_h(const VarTableau& t, const SymbolWord& boxes) {
    if (boxes.empty()) throw input_error("push_h: no boxes to insert");
    std::vector<SymbolWord> cols;
    for (int j = 1; j <= t.shape.part(1); ++j) {
        SymbolWord col;
        for (int i = 1; i <= t.shape.rows() && t.shape.has_cell(i, j); ++i)
            col.push_back(t.at(i, j));
        cols.push_back(std::move(col));
    }

    std::vector<PushOutcome> out;
    std::vector<int> placement;
    std::function<void(std::size_t, int)> place = [&](std::size_t next, int min_col) {
        if (next == boxes.size()) {
            PushOutcome o;
            o.tableau = detail::columns_to_tableau(cols);
            o.shape = o.tableau.shape;
            o.positions = placement;
            out.push_back(std::move(o));
            return;
        }
        const int width = static_cast<int>(cols.size());
        for (int j = std::max(min_col, 1); j <= width + 1; ++j) {
            if (j <= width) {
                // push on top of column j: valid when the new height profile
                // stays weakly decreasing
                std::size_t h = cols[static_cast<std::size_t>(j - 1)].size();
                if (j > 1 && cols[static_cast<std::size_t>(j - 2)].size() <= h) continue;
                cols[static_cast<std::size_t>(j - 1)].insert(
                    cols[static_cast<std::size_t>(j - 1)].begin(), boxes[next]);
                placement.push_back(j);
                place(next + 1, j + 1);
                placement.pop_back();
                cols[static_cast<std::size_t>(j - 1)].erase(
                    cols[static_cast<std::size_t>(j - 1)].begin());
            } else {
                cols.push_back({boxes[next]});
                placement.push_back(j);
                place(next + 1, j + 1);
                placement.pop_back();
                cols.pop_back();
            }
        }
    };
    place(0, 1);
    return out;
}

/// Pushing rule for a column of boxes: mirror of push_h on rows; each box
/// lands to the left of a row or appends below the first column, later boxes
/// strictly lower.
inline std::vector<PushOutcome> push_e(const VarTableau& t, const SymbolWord& boxes) {
    if (boxes.empty()) throw input_error("push_e: no boxes to insert");
    std::vector<SymbolWord> rows = t.rows;

    std::vector<PushOutcome> out;
    std::vector<int> placement;
    std::function<void(std::size_t, int)> place = [&](std::size_t next, int min_row) {
        if (next == boxes.size()) {
            std::vector<int> lens;
            lens.reserve(rows.size());
            for (const auto& row : rows) lens.push_back(static_cast<int>(row.size()));
            PushOutcome o;
            o.shape = Partition(lens);
            o.tableau = VarTableau(o.shape, rows);
            o.positions = placement;
            out.push_back(std::move(o));
            return;
        }
        const int height = static_cast<int>(rows.size());
        for (int i = std::max(min_row, 1); i <= height + 1; ++i) {
            if (i <= height) {
                std::size_t len = rows[static_cast<std::size_t>(i - 1)].size();
                if (i > 1 && rows[static_cast<std::size_t>(i - 2)].size() <= len) continue;
                rows[static_cast<std::size_t>(i - 1)].insert(
                    rows[static_cast<std::size_t>(i - 1)].begin(), boxes[next]);
                placement.push_back(i);
                place(next + 1, i + 1);
                placement.pop_back();
                rows[static_cast<std::size_t>(i - 1)].erase(
                    rows[static_cast<std::size_t>(i - 1)].begin());
            } else {
                rows.push_back({boxes[next]});
                placement.push_back(i);
                place(next + 1, i + 1);
                placement.pop_back();
                rows.pop_back();
            }
        }
    };
    place(0, 1);
    return out;
}

inline std::vector<PushOutcome> push(const VarTableau& t, const SymbolWord& boxes,
                                     RimFlavor flavor) {
    return flavor == RimFlavor::H ? push_h(t, boxes) : push_e(t, boxes);
}

// ---------------------------------------------------------------------------
// Symmetrization over a designated symbol set.
// ---------------------------------------------------------------------------

inline long long factorial(std::size_t n) {
    long long f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= static_cast<long long>(k);
    return f;
}

namespace detail {

// k-th lexicographic permutation of 0..n-1 via the factorial number system.
inline std::vector<int> nth_permutation(std::size_t n, long long k) {
    std::vector<int> pool(n), perm;
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<int>(i);
    perm.reserve(n);
    for (std::size_t i = n; i > 0; --i) {
        long long f = factorial(i - 1);
        long long idx = k / f;
        k %= f;
        perm.push_back(pool[static_cast<std::size_t>(idx)]);
        pool.erase(pool.begin() + idx);
    }
    return perm;
}

}  // namespace detail

/// Sum of f over all permutations of the values assigned to the listed
/// symbols; slots permute even when values coincide. f receives the rewritten
/// assignment plus a worker-local evaluator. Permutations run in lexicographic
/// order; with several threads the range splits into index chunks whose
/// partial sums reduce in chunk order, so exact-mode results are independent
/// of the thread count.
template <class Mode, class F>
typename Mode::Scalar sum_sym(const std::vector<Symbol>& symbols,
                              const TypedAssignment<Mode>& a, F&& f, int threads = 1) {
    using Scalar = typename Mode::Scalar;
    std::vector<typename Mode::Exp> values;
    values.reserve(symbols.size());
    for (const Symbol& sym : symbols) values.push_back(lookup<Mode>(a, sym));

    const long long total = factorial(symbols.size());
    auto run_range = [&](long long lo, long long hi, Scalar* sink) {
        Evaluator<Mode> ev;
        Scalar acc = Mode::zero();
        if (lo >= hi) {
            *sink = acc;
            return;
        }
        std::vector<int> perm = detail::nth_permutation(symbols.size(), lo);
        for (long long k = lo; k < hi; ++k) {
            TypedAssignment<Mode> b = a;
            for (std::size_t i = 0; i < symbols.size(); ++i)
                b[symbols[i]] = values[static_cast<std::size_t>(perm[i])];
            acc += f(static_cast<const TypedAssignment<Mode>&>(b), ev);
            std::next_permutation(perm.begin(), perm.end());
        }
        *sink = acc;
    };

    if (threads <= 1 || total < 2) {
        Scalar acc = Mode::zero();
        run_range(0, total, &acc);
        return acc;
    }
    const int nworkers = static_cast<int>(std::min<long long>(threads, total));
    std::vector<Scalar> partials(static_cast<std::size_t>(nworkers), Mode::zero());
    std::vector<std::thread> pool;
    const long long chunk = (total + nworkers - 1) / nworkers;
    for (int w = 0; w < nworkers; ++w) {
        long long lo = static_cast<long long>(w) * chunk;
        long long hi = std::min(total, lo + chunk);
        pool.emplace_back(run_range, lo, hi, &partials[static_cast<std::size_t>(w)]);
    }
    for (auto& th : pool) th.join();
    Scalar acc = Mode::zero();
    for (const Scalar& p : partials) acc += p;
    return acc;
}

// ---------------------------------------------------------------------------
// Hook-shape product errors.
// ---------------------------------------------------------------------------

/// Builds the hook tableau with row (head, arm_1..arm_l) and leg cells below.
inline VarTableau hook_tableau(const Symbol& head, const SymbolWord& arm,
                               const SymbolWord& leg) {
    std::vector<int> parts{static_cast<int>(arm.size()) + 1};
    for (std::size_t i = 0; i < leg.size(); ++i) parts.push_back(1);
    std::vector<SymbolWord> rows;
    SymbolWord row1{head};
    row1.insert(row1.end(), arm.begin(), arm.end());
    rows.push_back(std::move(row1));
    for (const Symbol& sym : leg) rows.push_back({sym});
    return {Partition(std::move(parts)), std::move(rows)};
}

/// Residual of the column Pieri product on a hook: the truncated value of
/// zeta_hook times zeta_column minus the pushed-tableaux sum. Vanishes when
/// the column of the hook and all but the tail of the new column carry one
/// common exponent.
template <class Mode>
typename Mode::Scalar pieri_error_hook_column(Evaluator<Mode>& ev, const VarTableau& hook,
                                              const SymbolWord& zs,
                                              const TypedAssignment<Mode>& a, long bound) {
    using Scalar = typename Mode::Scalar;
    Scalar lhs = ev.schur_zeta(hook, a, bound) * ev.zeta(resolve_word<Mode>(zs, a), bound);
    Scalar rhs = Mode::zero();
    for (const PushOutcome& o : push_e(hook, zs)) rhs += ev.schur_zeta(o.tableau, a, bound);
    return lhs - rhs;
}

/// The (2,{1}^{k-1}) x ({1}^k) case: x_1..x_k down the first column, y beside
/// x_1, boxes z_1..z_k.
template <class Mode>
typename Mode::Scalar pieri_error_k(Evaluator<Mode>& ev, int k,
                                    const TypedAssignment<Mode>& a, long bound) {
    if (k < 1) throw input_error("pieri error: k must be positive");
    SymbolWord leg, zs;
    for (int i = 2; i <= k; ++i) leg.push_back("x" + std::to_string(i));
    for (int i = 1; i <= k; ++i) zs.push_back("z" + std::to_string(i));
    VarTableau hook = hook_tableau("x1", {"y"}, leg);
    return pieri_error_hook_column(ev, hook, zs, a, bound);
}

/// The general (l+1,{1}^{k-1}) x ({1}^m) case with arm y_1..y_l and column
/// z_1..z_m.
template <class Mode>
typename Mode::Scalar pieri_error_klm(Evaluator<Mode>& ev, int k, int l, int m,
                                      const TypedAssignment<Mode>& a, long bound) {
    if (k < 1 || l < 0 || m < 1) throw input_error("pieri error: bad hook parameters");
    SymbolWord arm, leg, zs;
    for (int i = 1; i <= l; ++i) arm.push_back("y" + std::to_string(i));
    for (int i = 2; i <= k; ++i) leg.push_back("x" + std::to_string(i));
    for (int i = 1; i <= m; ++i) zs.push_back("z" + std::to_string(i));
    VarTableau hook = hook_tableau("x1", arm, leg);
    return pieri_error_hook_column(ev, hook, zs, a, bound);
}

/// Classical Pieri shape list: partitions obtained from lambda by adding m
/// boxes, no two in the same column (row = true) or row (row = false).
/// Independent oracle for the pushed-shape multiset.
inline std::vector<Partition> pieri_shapes(const Partition& lambda, int m, bool row) {
    std::vector<Partition> out;
    if (row) {
        // mu interlaces lambda: mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
        std::function<void(int, int, std::vector<int>&)> rec = [&](int i, int left,
                                                                   std::vector<int>& acc) {
            if (left == 0) {
                std::vector<int> parts = acc;
                for (int r = i; r <= lambda.rows(); ++r) parts.push_back(lambda.part(r));
                while (!parts.empty() && parts.back() == 0) parts.pop_back();
                out.push_back(Partition(parts));
                return;
            }
            if (i > lambda.rows() + 1) return;
            int lo = lambda.part(i);
            int hi = i == 1 ? lambda.part(1) + left
                            : std::min(lambda.part(i - 1), lambda.part(i) + left);
            for (int v = lo; v <= hi; ++v) {
                acc.push_back(v);
                rec(i + 1, left - (v - lambda.part(i)), acc);
                acc.pop_back();
            }
        };
        std::vector<int> acc;
        rec(1, m, acc);
        std::sort(out.begin(), out.end());
        return out;
    }
    for (const Partition& conj : pieri_shapes(lambda.conjugate(), m, true))
        out.push_back(conj.conjugate());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace schurmzf
