#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "schurmzf/partition.hpp"
#include "schurmzf/scalar.hpp"
#include "schurmzf/ssyt.hpp"
#include "schurmzf/tableau.hpp"

namespace schurmzf {

/// Evaluation session for truncated zeta sums over one arithmetic mode.
/// Holds the per-(n, s) power table, so a session is cheap to reuse across the
/// many closely related words of a determinant or symmetrized sum. Sessions
/// are not shared between threads; each worker owns one.
template <class Mode>
class Evaluator {
  public:
    using Scalar = typename Mode::Scalar;
    using Exp = typename Mode::Exp;
    using Word = std::vector<Exp>;

    /// n^{-s} for a summation index 1 <= n.
    Scalar term(long n, const Exp& s) {
        if constexpr (std::is_same_v<Mode, ExactMode>) {
            auto key = std::make_pair(n, s);
            auto it = power_memo_.find(key);
            if (it != power_memo_.end()) return it->second;
            if (s < 0) throw input_error("exact exponents must be nonnegative");
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n),
                          static_cast<unsigned long>(s));
            mpq_class value(mpz_class(1), p);
            value.canonicalize();
            power_memo_.emplace(key, value);
            return value;
        } else {
            return std::exp(-s * std::log(static_cast<double>(n)));
        }
    }

    /// Truncated multiple zeta star: sum over 1 <= n_1 <= ... <= n_r <= N.
    /// Dynamic programming over prefix sums, O(r N) scalar operations.
    Scalar zeta_star(const Word& word, long bound) { return chain_sum(word, bound, false); }

    /// Truncated multiple zeta: strict chains 1 <= n_1 < ... < n_r <= N.
    Scalar zeta(const Word& word, long bound) { return chain_sum(word, bound, true); }

    Scalar chain_sum(const Word& word, long bound, bool strict) {
        if (word.empty()) return Mode::one();
        if (bound <= 0) return Mode::zero();
        if constexpr (std::is_same_v<Mode, ExactMode>) {
            WordKey key{strict, bound, word};
            auto it = word_memo_.find(key);
            if (it != word_memo_.end()) return it->second;
            Scalar value = chain_sum_impl(word, bound, strict);
            word_memo_.emplace(std::move(key), value);
            return value;
        } else {
            return chain_sum_impl(word, bound, strict);
        }
    }

    /// Truncated Schur multiple zeta value: sum over SSYT_N(shape) of the
    /// product of entries raised to minus the boxed exponents.
    Scalar schur_zeta(const Partition& shape, const std::vector<std::vector<Exp>>& exps,
                      long bound) {
        Scalar acc = Mode::zero();
        for (SsytEnumerator en(shape, bound); en.valid(); en.advance()) {
            Scalar prod = Mode::one();
            std::size_t k = 0;
            for (int i = 1; i <= shape.rows(); ++i)
                for (int j = 1; j <= shape.part(i); ++j, ++k)
                    prod *= term(en.entries()[k],
                                 exps[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
            acc += prod;
        }
        return acc;
    }

    Scalar schur_zeta(const VarTableau& t, const TypedAssignment<Mode>& a, long bound) {
        std::vector<std::vector<Exp>> exps;
        exps.reserve(t.rows.size());
        for (const auto& row : t.rows) exps.push_back(resolve_word<Mode>(row, a));
        return schur_zeta(t.shape, exps, bound);
    }

    /// Schur polynomial s_lambda(1^{-s}, ..., N^{-s}) through the determinant
    /// in complete homogeneous sums, themselves built by generating-function
    /// dynamic programming. Independent of the SSYT enumeration path.
    Scalar schur_poly(const Partition& lambda, const Exp& s, long bound) {
        int r = lambda.rows();
        if (r == 0) return Mode::one();
        int max_k = lambda.part(1) + r;
        std::vector<Scalar> h(static_cast<std::size_t>(max_k) + 1, Mode::zero());
        h[0] = Mode::one();
        for (long n = 1; n <= bound; ++n) {
            Scalar x = term(n, s);
            for (int k = 1; k <= max_k; ++k)
                h[static_cast<std::size_t>(k)] += x * h[static_cast<std::size_t>(k - 1)];
        }
        auto h_at = [&](int k) -> Scalar {
            if (k < 0) return Mode::zero();
            return h[static_cast<std::size_t>(k)];
        };
        // Leibniz expansion of det[h_{lambda_i - i + j}]; r stays small here.
        std::vector<int> perm(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
        Scalar det = Mode::zero();
        int sign = 1;
        do {
            Scalar prod = Mode::one();
            for (int i = 0; i < r; ++i)
                prod *= h_at(lambda.part(i + 1) - (i + 1) + perm[static_cast<std::size_t>(i)] + 1);
            det += sign > 0 ? prod : -prod;
        } while (next_permutation_signed(perm, sign));
        return det;
    }

  private:
    Scalar chain_sum_impl(const Word& word, long bound, bool strict) {
        // state[n-1] = sum over admissible chains ending exactly at n.
        std::vector<Scalar> state(static_cast<std::size_t>(bound), Mode::one());
        for (std::size_t k = 0; k < word.size(); ++k) {
            Scalar prefix = Mode::zero();
            std::vector<Scalar> next(static_cast<std::size_t>(bound), Mode::zero());
            for (long n = 1; n <= bound; ++n) {
                if (!strict) prefix += state[static_cast<std::size_t>(n - 1)];
                Scalar base = (k == 0) ? Mode::one() : prefix;
                next[static_cast<std::size_t>(n - 1)] = base * term(n, word[k]);
                if (strict) prefix += state[static_cast<std::size_t>(n - 1)];
            }
            state = std::move(next);
        }
        Scalar total = Mode::zero();
        for (long n = 1; n <= bound; ++n) total += state[static_cast<std::size_t>(n - 1)];
        return total;
    }

    static bool next_permutation_signed(std::vector<int>& perm, int& sign) {
        // std::next_permutation performs an odd number of transpositions per
        // step only in general; track parity by recomputing inversions.
        if (!std::next_permutation(perm.begin(), perm.end())) return false;
        int inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        sign = inv % 2 == 0 ? 1 : -1;
        return true;
    }

    struct WordKey {
        bool strict;
        long bound;
        std::vector<std::int64_t> word;
        bool operator<(const WordKey& o) const {
            if (strict != o.strict) return strict < o.strict;
            if (bound != o.bound) return bound < o.bound;
            return word < o.word;
        }
    };

    std::map<std::pair<long, std::int64_t>, mpq_class> power_memo_;
    std::map<WordKey, mpq_class> word_memo_;
};

// ---------------------------------------------------------------------------
// Symbol-level fronts.
// ---------------------------------------------------------------------------

template <class Mode>
typename Mode::Scalar mzv_star_trunc(Evaluator<Mode>& ev, const SymbolWord& word,
                                     const TypedAssignment<Mode>& a, long bound) {
    return ev.zeta_star(resolve_word<Mode>(word, a), bound);
}

template <class Mode>
typename Mode::Scalar mzv_trunc(Evaluator<Mode>& ev, const SymbolWord& word,
                                const TypedAssignment<Mode>& a, long bound) {
    return ev.zeta(resolve_word<Mode>(word, a), bound);
}

/// True when all exponents have real part >= 1 and those over the named region
/// have real part strictly greater than 1. Only limit-mode runs are gated on
/// this; finite-N identity checks accept arbitrary exponents.
inline bool region_check(const VarTableau& t, const Assignment& a, RegionKind kind) {
    require_total(t, a);
    for (const Cell& c : t.shape.cells())
        if (a.at(t.at(c)).real() < 1.0) return false;
    for (const Cell& c : region_cells(t.shape, kind))
        if (a.at(t.at(c)).real() <= 1.0) return false;
    return true;
}

}  // namespace schurmzf
