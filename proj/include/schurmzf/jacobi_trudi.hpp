#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "schurmzf/partition.hpp"
#include "schurmzf/rims.hpp"
#include "schurmzf/series.hpp"
#include "schurmzf/tableau.hpp"

namespace schurmzf {

/// One entry of a Jacobi-Trudi determinant: a ribbon word, the constant 1, or 0.
struct DetEntry {
    enum class Kind { Word, One, Zero };

    Kind kind = Kind::Zero;
    SymbolWord word;

    static DetEntry make_word(SymbolWord w) { return {Kind::Word, std::move(w)}; }
    static DetEntry one() { return {Kind::One, {}}; }
    static DetEntry zero() { return {Kind::Zero, {}}; }
};

/// Square matrix of zeta words. Flavor H feeds entries to the weak-chain sums
/// (zeta-star), flavor E to the strict-chain sums (zeta).
struct DetSpec {
    int size = 0;
    RimFlavor flavor = RimFlavor::H;
    std::vector<std::vector<DetEntry>> entries;

    const DetEntry& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }

    /// Grid rendering with comma-joined words, "1" and "0", row per line.
    std::string dump() const {
        std::string out;
        for (int i = 1; i <= size; ++i) {
            for (int j = 1; j <= size; ++j) {
                if (j > 1) out += " | ";
                const DetEntry& e = at(i, j);
                switch (e.kind) {
                    case DetEntry::Kind::Word: {
                        for (std::size_t k = 0; k < e.word.size(); ++k) {
                            if (k) out += ',';
                            out += e.word[k];
                        }
                        break;
                    }
                    case DetEntry::Kind::One: out += '1'; break;
                    case DetEntry::Kind::Zero: out += '0'; break;
                }
            }
            out += '\n';
        }
        return out;
    }
};

namespace detail {

// r x r matrix over the rows of an H-oriented tableau. Entry (i,j) carries the
// word of the ribbon that starts at (j,1) and ends on diagonal lambda_i - i:
// for i <= j it climbs through rows j..i hugging the row ends, for i > j it is
// the row-j prefix of length lambda_i - i + j, degenerating to the constant 1
// at length zero and to 0 below that.
inline DetSpec h_form_matrix(const VarTableau& t, RimFlavor flavor) {
    const Partition& lambda = t.shape;
    const int r = lambda.rows();
    DetSpec spec;
    spec.size = r;
    spec.flavor = flavor;
    spec.entries.assign(static_cast<std::size_t>(r),
                        std::vector<DetEntry>(static_cast<std::size_t>(r)));
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
            DetEntry entry;
            if (i <= j) {
                SymbolWord word;
                for (int c = 1; c <= lambda.part(j); ++c) word.push_back(t.at(j, c));
                for (int k = j - 1; k >= i; --k)
                    for (int c = lambda.part(k + 1); c <= lambda.part(k); ++c)
                        word.push_back(t.at(k, c));
                entry = DetEntry::make_word(std::move(word));
            } else {
                int len = lambda.part(i) - i + j;
                if (len > 0) {
                    SymbolWord word;
                    for (int c = 1; c <= len; ++c) word.push_back(t.at(j, c));
                    entry = DetEntry::make_word(std::move(word));
                } else {
                    entry = len == 0 ? DetEntry::one() : DetEntry::zero();
                }
            }
            spec.entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                std::move(entry);
        }
    }
    return spec;
}

}  // namespace detail

/// Jacobi-Trudi matrix in multiple zeta star values, rows of t as base words.
inline DetSpec jts_matrix(const VarTableau& t) {
    return detail::h_form_matrix(t, RimFlavor::H);
}

/// Conjugate Jacobi-Trudi matrix in multiple zeta values: the H construction
/// applied to the transposed tableau, entries read down columns.
inline DetSpec jt_matrix(const VarTableau& t) {
    return detail::h_form_matrix(t.transpose(), RimFlavor::E);
}

/// Leibniz expansion of the determinant; entries are evaluated words, so the
/// expansion stays division-free in exact mode.
template <class Mode>
typename Mode::Scalar det_eval(Evaluator<Mode>& ev, const DetSpec& spec,
                               const TypedAssignment<Mode>& a, long bound) {
    using Scalar = typename Mode::Scalar;
    const int r = spec.size;
    if (r == 0) return Mode::one();
    std::vector<int> perm(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    Scalar det = Mode::zero();
    do {
        int inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        Scalar prod = Mode::one();
        bool zero = false;
        for (int i = 1; i <= r && !zero; ++i) {
            const DetEntry& e = spec.at(i, perm[static_cast<std::size_t>(i - 1)]);
            switch (e.kind) {
                case DetEntry::Kind::Zero: zero = true; break;
                case DetEntry::Kind::One: break;
                case DetEntry::Kind::Word: {
                    auto word = resolve_word<Mode>(e.word, a);
                    prod *= spec.flavor == RimFlavor::H ? ev.zeta_star(word, bound)
                                                        : ev.zeta(word, bound);
                    break;
                }
            }
        }
        if (zero) continue;
        if (inv % 2 == 0)
            det += prod;
        else
            det -= prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Definitional error term: alternating rim sum minus the determinant main
/// term. Vanishes identically on two-row shapes and on (m,n,{1}^X).
template <class Mode>
typename Mode::Scalar jtse_def(Evaluator<Mode>& ev, const VarTableau& t,
                               const TypedAssignment<Mode>& a, long bound,
                               RimFlavor flavor = RimFlavor::H) {
    const DetSpec spec = flavor == RimFlavor::H ? jts_matrix(t) : jt_matrix(t);
    return rim_alt_sum(ev, t, a, bound, flavor) - det_eval(ev, spec, a, bound);
}

template <class Mode>
typename Mode::Scalar jte_def(Evaluator<Mode>& ev, const VarTableau& t,
                              const TypedAssignment<Mode>& a, long bound) {
    return jtse_def(ev, t, a, bound, RimFlavor::E);
}

namespace detail {

template <class Mode>
typename Mode::Scalar zeta_of(Evaluator<Mode>& ev, const SymbolWord& word,
                              const TypedAssignment<Mode>& a, long bound, RimFlavor flavor) {
    auto resolved = resolve_word<Mode>(word, a);
    return flavor == RimFlavor::H ? ev.zeta_star(resolved, bound) : ev.zeta(resolved, bound);
}

inline VarTableau from_rows(std::vector<SymbolWord> rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return {Partition(std::move(parts)), std::move(rows)};
}

// Recursive form of the error term for H-oriented rows of shape
// (m, n, {2}^{X-2}). The recursion peels the ribbon covering row 1: it either
// ends at the row-1 or row-2 endpoint, or is empty, merging rows 1 and 2 into
// the two displayed (m+1, n+1, {2}^{X-3}) tableaux.
template <class Mode>
typename Mode::Scalar jtse_recursive_rows(Evaluator<Mode>& ev,
                                          const std::vector<SymbolWord>& rows,
                                          const TypedAssignment<Mode>& a, long bound,
                                          RimFlavor flavor) {
    const int X = static_cast<int>(rows.size());
    if (X <= 2) return Mode::zero();
    const auto m = rows[0].size();
    const auto n = rows[1].size();
    if (n < 2 || m < n) throw input_error("jtse recursion expects shape (m,n,{2}^{X-2})");
    for (int i = 2; i < X; ++i)
        if (rows[static_cast<std::size_t>(i)].size() != 2)
            throw input_error("jtse recursion expects shape (m,n,{2}^{X-2})");

    const SymbolWord& row1 = rows[0];
    const SymbolWord prefix(row1.begin(), row1.begin() + static_cast<long>(n) - 1);
    // (s_{2,1..n}, s_{1,n..m}) : rows 1 and 2 merged along the row-2 endpoint.
    SymbolWord merged = rows[1];
    merged.insert(merged.end(), row1.begin() + static_cast<long>(n) - 1, row1.end());
    // (s_{2,1}, s_{1,1..m}) : row 2 head pushed in front of row 1.
    SymbolWord headed;
    headed.push_back(rows[1][0]);
    headed.insert(headed.end(), row1.begin(), row1.end());
    // (s_{3,1}, s_{3,2}, s_{2,2..n}) : row 3 extended by the row-2 tail.
    SymbolWord second = rows[2];
    second.insert(second.end(), rows[1].begin() + 1, rows[1].end());

    std::vector<SymbolWord> tail1(rows.begin() + 1, rows.end());
    std::vector<SymbolWord> tail2;
    tail2.push_back(merged);
    tail2.insert(tail2.end(), rows.begin() + 2, rows.end());
    std::vector<SymbolWord> merged_rows;
    merged_rows.push_back(merged);
    merged_rows.push_back(second);
    merged_rows.insert(merged_rows.end(), rows.begin() + 3, rows.end());
    std::vector<SymbolWord> headed_rows;
    headed_rows.push_back(headed);
    headed_rows.push_back(second);
    headed_rows.insert(headed_rows.end(), rows.begin() + 3, rows.end());

    using Scalar = typename Mode::Scalar;
    Scalar acc = zeta_of(ev, row1, a, bound, flavor) *
                 jtse_recursive_rows(ev, tail1, a, bound, flavor);
    acc -= zeta_of(ev, prefix, a, bound, flavor) *
           jtse_recursive_rows(ev, tail2, a, bound, flavor);
    acc -= det_eval(ev, h_form_matrix(from_rows(merged_rows), flavor), a, bound);
    acc += det_eval(ev, h_form_matrix(from_rows(headed_rows), flavor), a, bound);
    acc += jtse_recursive_rows(ev, headed_rows, a, bound, flavor);
    return acc;
}

}  // namespace detail

/// Recursive error term for shape (m, n, {2}^{X-2}); agrees with jtse_def.
template <class Mode>
typename Mode::Scalar jtse_recursive(Evaluator<Mode>& ev, int m, int n, int X,
                                     const VarTableau& t, const TypedAssignment<Mode>& a,
                                     long bound) {
    std::vector<int> expect{m, n};
    for (int i = 2; i < X; ++i) expect.push_back(2);
    if (X < 2 || t.shape != Partition(expect))
        throw input_error("jtse_recursive: tableau shape is not (m,n,{2}^{X-2})");
    return detail::jtse_recursive_rows(ev, t.rows, a, bound, RimFlavor::H);
}

/// Conjugate recursion for shape ({X}^2, {2}^{n-2}, {1}^{m-n}); agrees with jte_def.
template <class Mode>
typename Mode::Scalar jte_recursive(Evaluator<Mode>& ev, int m, int n, int X,
                                    const VarTableau& t, const TypedAssignment<Mode>& a,
                                    long bound) {
    std::vector<int> expect{m, n};
    for (int i = 2; i < X; ++i) expect.push_back(2);
    VarTableau flipped = t.transpose();
    if (X < 2 || flipped.shape != Partition(expect))
        throw input_error("jte_recursive: tableau shape is not ({X}^2,{2}^{n-2},{1}^{m-n})");
    return detail::jtse_recursive_rows(ev, flipped.rows, a, bound, RimFlavor::E);
}

// ---------------------------------------------------------------------------
// Diagonal symmetrization.
// ---------------------------------------------------------------------------

/// Permutation sets used per diagonal class: the full symmetric group, or only
/// the identity and the swap of the two topmost cells.
enum class DiagMode { Full, TopPair };

inline long long sum_diag_term_count(const Partition& lambda, DiagMode mode = DiagMode::Full) {
    long long count = 1;
    for (const auto& klass : multi_cell_diagonals(lambda)) {
        if (mode == DiagMode::TopPair) {
            count *= 2;
        } else {
            long long f = 1;
            for (std::size_t k = 2; k <= klass.size(); ++k) f *= static_cast<long long>(k);
            count *= f;
        }
    }
    return count;
}

/// Sum of f over all tableaux obtained by permuting symbols within each
/// diagonal class of t. f maps VarTableau to a Mode scalar.
template <class Mode, class F>
typename Mode::Scalar sum_diag(const VarTableau& t, F&& f, DiagMode mode = DiagMode::Full) {
    using Scalar = typename Mode::Scalar;
    const auto classes = multi_cell_diagonals(t.shape);
    std::vector<std::vector<std::vector<int>>> perms_per_class;
    for (const auto& klass : classes) {
        std::vector<std::vector<int>> perms;
        std::vector<int> idx(klass.size());
        for (std::size_t k = 0; k < klass.size(); ++k) idx[k] = static_cast<int>(k);
        if (mode == DiagMode::TopPair) {
            perms.push_back(idx);
            std::swap(idx[0], idx[1]);
            perms.push_back(idx);
        } else {
            do perms.push_back(idx);
            while (std::next_permutation(idx.begin(), idx.end()));
        }
        perms_per_class.push_back(std::move(perms));
    }

    Scalar acc = Mode::zero();
    std::vector<std::size_t> odom(classes.size(), 0);
    while (true) {
        VarTableau permuted = t;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            const auto& klass = classes[c];
            const auto& p = perms_per_class[c][odom[c]];
            for (std::size_t k = 0; k < klass.size(); ++k)
                permuted.at(klass[k]) = t.at(klass[static_cast<std::size_t>(p[k])]);
        }
        acc += f(static_cast<const VarTableau&>(permuted));
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            if (++odom[c] < perms_per_class[c].size()) break;
            odom[c] = 0;
        }
        if (c == classes.size()) break;
    }
    return acc;
}

}  // namespace schurmzf
