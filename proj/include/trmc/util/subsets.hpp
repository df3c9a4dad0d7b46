#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace trmc {

// Calls f on every k-subset of {0..n-1} in lexicographic order; f returns
// false to stop early.
template <class F>
void for_each_subset(size_t n, size_t k, F&& f) {
    if (k > n) return;
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (!f(idx)) return;
        size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace trmc
