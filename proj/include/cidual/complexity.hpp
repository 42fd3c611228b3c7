#pragma once

// Polynomial growth rate of a dimension sequence. The even- and odd-indexed
// subsequences are fitted separately: Ext over a complete intersection is
// finitely generated over a polynomial ring on degree-2 operators, so each
// parity is eventually polynomial.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cidual/error.hpp"

namespace cidual {

struct ParityFit {
    int degree = -1;            ///< polynomial degree of the tail; -1 when the tail is zero
    std::size_t tail_length = 0;
    std::size_t confirmations = 0;  ///< vanishing (degree+1)-th differences seen
    bool stable = false;
};

struct ComplexityEstimate {
    int complexity = 0;
    ParityFit even, odd;
    std::size_t window = 0;
    bool stable = false;
};

inline constexpr std::size_t kMinFitLength = 12;
inline constexpr std::size_t kVanishingWindow = 6;

namespace detail {

inline ParityFit fit_parity(const std::vector<long long>& q) {
    ParityFit f;
    const std::size_t tail = std::min<std::size_t>(q.size(), std::max<std::size_t>(6, (q.size() + 1) / 2));
    f.tail_length = tail;
    std::vector<long long> diff(q.end() - static_cast<std::ptrdiff_t>(tail), q.end());
    if (std::all_of(diff.begin(), diff.end(), [](long long v) { return v == 0; })) {
        f.degree = -1;
        f.confirmations = diff.size();
        f.stable = true;
        return f;
    }
    // smallest delta whose (delta+1)-th differences vanish on at least two points
    for (int delta = 0; diff.size() >= 3; ++delta) {
        std::vector<long long> next;
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
        diff = std::move(next);
        if (std::all_of(diff.begin(), diff.end(), [](long long v) { return v == 0; })) {
            f.degree = delta;
            f.confirmations = diff.size();
            f.stable = diff.size() >= 2;
            return f;
        }
    }
    f.stable = false;
    return f;
}

}  // namespace detail

/// d = 1 + max(parity degrees), d = 0 when both parities are eventually zero.
/// Throws UnstableFit when some parity does not settle inside its tail.
inline ComplexityEstimate complexity_fit(const std::vector<std::size_t>& seq) {
    if (seq.size() < kMinFitLength)
        throw PreconditionError("complexity_fit: need at least " + std::to_string(kMinFitLength) + " values, got " + std::to_string(seq.size()));
    std::vector<long long> even, odd;
    for (std::size_t i = 0; i < seq.size(); ++i) (i % 2 ? odd : even).push_back(static_cast<long long>(seq[i]));
    ComplexityEstimate e;
    e.window = seq.size();
    e.even = detail::fit_parity(even);
    e.odd = detail::fit_parity(odd);
    e.stable = e.even.stable && e.odd.stable;
    if (!e.stable) throw UnstableFit("unstable window, increase n_max");
    e.complexity = 1 + std::max(e.even.degree, e.odd.degree);
    return e;
}

/// Heuristic "vanishes for all i >> 0": the last kVanishingWindow values are
/// zero and the fitted complexity is 0.
inline bool eventually_vanishes(const std::vector<std::size_t>& seq) {
    if (seq.size() < kVanishingWindow) return false;
    bool tail_zero = std::all_of(seq.end() - kVanishingWindow, seq.end(), [](std::size_t v) { return v == 0; });
    return tail_zero && complexity_fit(seq).complexity == 0;
}

}  // namespace cidual
