#include "rrbleib/shuffles.hpp"

namespace rrbleib {

static int signature(const std::vector<int>& image) {
    int inv = 0;
    for (std::size_t a = 0; a < image.size(); ++a)
        for (std::size_t b = a + 1; b < image.size(); ++b)
            if (image[a] > image[b]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

std::vector<Shuffle> shuffles(int i, int j) {
    int n = i + j;
    std::vector<Shuffle> out;
    // Enumerate i-subsets of {0..n-1} in lexicographic order; the subset is
    // the (sorted) image of the first block, its complement the second.
    std::vector<int> pick(i);
    for (int k = 0; k < i; ++k) pick[k] = k;
    while (true) {
        Shuffle s;
        s.image = pick;
        std::vector<bool> used(n, false);
        for (int x : pick) used[x] = true;
        for (int x = 0; x < n; ++x)
            if (!used[x]) s.image.push_back(x);
        s.sign = signature(s.image);
        out.push_back(std::move(s));
        // next i-combination
        int k = i - 1;
        while (k >= 0 && pick[k] == n - i + k) --k;
        if (k < 0) break;
        ++pick[k];
        for (int t = k + 1; t < i; ++t) pick[t] = pick[t - 1] + 1;
    }
    return out;
}

}  // namespace rrbleib
