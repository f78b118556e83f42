#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "schurmzf/partition.hpp"
#include "schurmzf/scalar.hpp"

namespace schurmzf {

using Symbol = std::string;
using SymbolWord = std::vector<Symbol>;

/// Mapping from tableau symbols to exponent values. Tagged entries; an
/// evaluation rejects assignments mixing exact and approximate kinds.
using Assignment = std::map<Symbol, Exponent>;

/// Filling of D(lambda) with opaque symbols; duplicates are allowed, so the
/// same indeterminate may occupy several boxes.
struct VarTableau {
    Partition shape;
    std::vector<SymbolWord> rows;

    VarTableau() = default;

    VarTableau(Partition shape_, std::vector<SymbolWord> rows_)
        : shape(std::move(shape_)), rows(std::move(rows_)) {
        if (static_cast<int>(rows.size()) != shape.rows())
            throw input_error("tableau row count does not match shape");
        for (int i = 1; i <= shape.rows(); ++i)
            if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != shape.part(i))
                throw input_error("tableau row length does not match shape");
    }

    /// Tableau with the standard symbols s11, s12, ... per box.
    static VarTableau canonical(const Partition& lambda) {
        std::vector<SymbolWord> rows;
        for (int i = 1; i <= lambda.rows(); ++i) {
            SymbolWord row;
            for (int j = 1; j <= lambda.part(i); ++j)
                row.push_back("s" + std::to_string(i) + std::to_string(j));
            rows.push_back(std::move(row));
        }
        return {lambda, std::move(rows)};
    }

    const Symbol& at(int i, int j) const {
        if (!shape.has_cell(i, j)) throw input_error("tableau cell outside shape");
        return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }

    Symbol& at(int i, int j) {
        if (!shape.has_cell(i, j)) throw input_error("tableau cell outside shape");
        return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }

    const Symbol& at(const Cell& c) const { return at(c.row, c.col); }
    Symbol& at(const Cell& c) { return at(c.row, c.col); }

    VarTableau transpose() const {
        Partition conj = shape.conjugate();
        std::vector<SymbolWord> cols;
        for (int j = 1; j <= conj.rows(); ++j) {
            SymbolWord col;
            for (int i = 1; i <= conj.part(j); ++i) col.push_back(at(i, j));
            cols.push_back(std::move(col));
        }
        return {std::move(conj), std::move(cols)};
    }

    std::set<Symbol> symbols() const {
        std::set<Symbol> out;
        for (const auto& row : rows) out.insert(row.begin(), row.end());
        return out;
    }
};

/// Assignment already narrowed to one arithmetic mode.
template <class Mode>
using TypedAssignment = std::map<Symbol, typename Mode::Exp>;

inline bool assignment_is_exact(const Assignment& a) {
    bool has_exact = false, has_approx = false;
    for (const auto& [sym, e] : a)
        (e.kind == Exponent::Kind::Exact ? has_exact : has_approx) = true;
    if (has_exact && has_approx)
        throw input_error("assignment mixes exact and approximate exponents");
    return !has_approx;
}

template <class Mode>
TypedAssignment<Mode> narrow_assignment(const Assignment& a);

template <>
inline TypedAssignment<ExactMode> narrow_assignment<ExactMode>(const Assignment& a) {
    TypedAssignment<ExactMode> out;
    for (const auto& [sym, e] : a) {
        if (e.kind != Exponent::Kind::Exact)
            throw input_error("symbol '" + sym + "' is not an exact exponent");
        out[sym] = e.exact;
    }
    return out;
}

template <>
inline TypedAssignment<FloatMode> narrow_assignment<FloatMode>(const Assignment& a) {
    TypedAssignment<FloatMode> out;
    for (const auto& [sym, e] : a)
        out[sym] = e.kind == Exponent::Kind::Exact
                       ? std::complex<double>(static_cast<double>(e.exact), 0.0)
                       : e.approx;
    return out;
}

template <class Mode>
typename Mode::Exp lookup(const TypedAssignment<Mode>& a, const Symbol& sym) {
    auto it = a.find(sym);
    if (it == a.end()) throw input_error("assignment missing symbol '" + sym + "'");
    return it->second;
}

template <class Mode>
std::vector<typename Mode::Exp> resolve_word(const SymbolWord& word,
                                             const TypedAssignment<Mode>& a) {
    std::vector<typename Mode::Exp> out;
    out.reserve(word.size());
    for (const Symbol& sym : word) out.push_back(lookup<Mode>(a, sym));
    return out;
}

/// True when the assignment covers every symbol of the tableau.
inline void require_total(const VarTableau& t, const Assignment& a) {
    for (const Symbol& sym : t.symbols())
        if (!a.count(sym)) throw input_error("assignment missing symbol '" + sym + "'");
}

}  // namespace schurmzf
