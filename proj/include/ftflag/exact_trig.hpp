#pragma once

#include <optional>

namespace ftflag {

/// 4cos²(π/k) when that number is an integer, nullopt otherwise. Exact.
///
/// 4cos²(π/k) = 2 + 2cos(2π/k), so the question is whether t = 2cos(2π/k)
/// is one of the integers -2..2. For such t the sequence V_0 = 2, V_1 = t,
/// V_{j+1} = t·V_j - V_{j-1} equals 2cos(jφ) with t = 2cos φ, and its first
/// return to 2 happens at j = 2π/φ. Hence t = 2cos(2π/k) exactly when that
/// first return is at j = k. Only integer arithmetic is involved.
inline std::optional<int> four_cos_sq_pi_over(int k) {
    if (k < 1) return std::nullopt;
    for (int c = 0; c <= 4; ++c) {
        const long t = c - 2;
        long prev = 2, cur = t;
        int first_return = 0;
        for (int j = 1; j <= k; ++j) {
            if (cur == 2) {
                first_return = j;
                break;
            }
            const long next = t * cur - prev;
            prev = cur;
            cur = next;
        }
        if (first_return == k) return c;
    }
    return std::nullopt;
}

} // namespace ftflag
