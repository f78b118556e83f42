#pragma once

#include <bitset>
#include <cstdint>
#include <functional>
#include <vector>

#include "schurmzf/partition.hpp"
#include "schurmzf/rims.hpp"
#include "schurmzf/series.hpp"
#include "schurmzf/tableau.hpp"

namespace schurmzf {

/// Signed weight sums of the lattice-path model behind the alternating rim
/// sum: paths l_i run from (r+1-i, 1) to (r+1-sigma(i)+lambda_sigma(i), N)
/// with unit right/up steps; the k-th horizontal edge at height h contributes
/// h^{-s} for the exponent s boxed at the k-th cell of the matching ribbon.
template <class Mode>
struct PathCensus {
    typename Mode::Scalar all_signed;              // full signed pattern sum (= rim_alt_sum)
    typename Mode::Scalar intersecting_signed;     // signed sum over crossing tuples
    typename Mode::Scalar nonintersecting_signed;  // signed sum over disjoint tuples
    long long tuples = 0;
    long long intersecting = 0;
    bool nonintersecting_all_identity = true;
};

namespace detail {

using PointMask = std::bitset<256>;

struct PathChoice {
    PointMask points;
    std::vector<int> heights;  // heights of the horizontal edges, weakly increasing
};

// All monotone paths with `len` horizontal edges, from x-column `x0`, heights
// bounded by N. Point masks cover every lattice point the path visits.
inline void enumerate_paths(int x0, int len, long bound, int grid_height,
                            std::vector<PathChoice>* out) {
    std::vector<int> heights(static_cast<std::size_t>(len));
    std::function<void(int, int)> rec = [&](int k, int lo) {
        if (k == len) {
            PathChoice choice;
            choice.heights = heights;
            int x = x0, y = 1;
            auto mark = [&](int px, int py) {
                std::size_t bit = static_cast<std::size_t>(px) *
                                      static_cast<std::size_t>(grid_height + 1) +
                                  static_cast<std::size_t>(py);
                if (bit >= choice.points.size())
                    throw budget_error("lattice grid too large for the path census");
                choice.points.set(bit);
            };
            mark(x, y);
            for (int h : heights) {
                while (y < h) mark(x, ++y);
                mark(++x, y);
            }
            while (y < bound) mark(x, ++y);
            out->push_back(std::move(choice));
            return;
        }
        for (int h = lo; h <= bound; ++h) {
            heights[static_cast<std::size_t>(k)] = h;
            rec(k + 1, h);
        }
    };
    rec(0, 1);
}

}  // namespace detail

/// Brute-force enumeration of every pattern tuple, classified by whether some
/// pair of paths meets. `budget` caps the number of tuples.
template <class Mode>
PathCensus<Mode> path_census(Evaluator<Mode>& ev, const VarTableau& t,
                             const TypedAssignment<Mode>& a, long bound,
                             long long budget = 1000000) {
    using Scalar = typename Mode::Scalar;
    const Partition& lambda = t.shape;
    const int r = lambda.rows();

    PathCensus<Mode> census;
    census.all_signed = Mode::zero();
    census.intersecting_signed = Mode::zero();
    census.nonintersecting_signed = Mode::zero();

    const int grid_height = static_cast<int>(bound);
    for (const RimDecomposition& dec : enumerate_h_rims(lambda)) {
        // Per-path alternatives for this type.
        std::vector<std::vector<detail::PathChoice>> options;
        long long tuple_count = 1;
        for (int i = 1; i <= r; ++i) {
            const Ribbon& ribbon = dec.ribbons[static_cast<std::size_t>(i - 1)];
            std::vector<detail::PathChoice> paths;
            detail::enumerate_paths(r + 1 - i, static_cast<int>(ribbon.cells.size()), bound,
                                    grid_height, &paths);
            tuple_count *= static_cast<long long>(paths.size());
            options.push_back(std::move(paths));
        }
        census.tuples += tuple_count;
        if (census.tuples > budget)
            throw budget_error("pattern enumeration exceeds the tuple budget");

        std::vector<std::size_t> odom(static_cast<std::size_t>(r), 0);
        while (true) {
            Scalar weight = Mode::one();
            bool crossing = false;
            detail::PointMask seen;
            for (int i = 1; i <= r; ++i) {
                const auto& choice = options[static_cast<std::size_t>(i - 1)]
                                            [odom[static_cast<std::size_t>(i - 1)]];
                if ((seen & choice.points).any()) crossing = true;
                seen |= choice.points;
                const Ribbon& ribbon = dec.ribbons[static_cast<std::size_t>(i - 1)];
                for (std::size_t k = 0; k < choice.heights.size(); ++k)
                    weight *= ev.term(choice.heights[k],
                                      lookup<Mode>(a, t.at(ribbon.cells[k])));
            }
            Scalar signed_weight = dec.sign > 0 ? weight : -weight;
            census.all_signed += signed_weight;
            if (crossing) {
                ++census.intersecting;
                census.intersecting_signed += signed_weight;
            } else {
                census.nonintersecting_signed += signed_weight;
                bool identity = true;
                for (std::size_t i = 0; i < dec.sigma.size(); ++i)
                    if (dec.sigma[i] != static_cast<int>(i + 1)) identity = false;
                if (!identity) census.nonintersecting_all_identity = false;
            }
            std::size_t c = 0;
            for (; c < odom.size(); ++c) {
                if (++odom[c] < options[c].size()) break;
                odom[c] = 0;
            }
            if (c == odom.size()) break;
        }
    }
    return census;
}

}  // namespace schurmzf
