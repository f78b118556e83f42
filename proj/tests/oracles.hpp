#pragma once

// Test-only brute-force oracles, independent of the library's evaluation
// paths: plain chain enumeration with rational arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

namespace test_oracles {

inline mpq_class power_term(long n, std::int64_t s) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(s));
    mpq_class q(mpz_class(1), p);
    q.canonicalize();
    return q;
}

/// Sum over chains n_1 R n_2 R ... R n_r <= N with R = "<=" (weak) or "<".
inline mpq_class brute_chain_sum(const std::vector<std::int64_t>& word, long bound,
                                 bool strict) {
    mpq_class total(0);
    std::function<void(std::size_t, long, mpq_class)> rec = [&](std::size_t k, long lo,
                                                                mpq_class acc) {
        if (k == word.size()) {
            total += acc;
            return;
        }
        for (long n = lo; n <= bound; ++n)
            rec(k + 1, strict ? n + 1 : n, acc * power_term(n, word[k]));
    };
    rec(0, 1, mpq_class(1));
    return total;
}

inline mpq_class brute_mzv_star(const std::vector<std::int64_t>& word, long bound) {
    return brute_chain_sum(word, bound, false);
}

inline mpq_class brute_mzv(const std::vector<std::int64_t>& word, long bound) {
    return brute_chain_sum(word, bound, true);
}

}  // namespace test_oracles
