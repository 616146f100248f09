#pragma once

#include <vector>

namespace rrbleib {

/// A permutation stored as its image word: image[k] = sigma(k+1) - 1,
/// i.e. 0-based positions.
struct Shuffle {
    std::vector<int> image;
    int sign = 1;
};

/// All (i,j)-shuffles of {1..i+j}: permutations increasing on the first i
/// and on the last j positions, in lexicographic order of the image word,
/// each with its ordinary signature. Count = binomial(i+j, i).
std::vector<Shuffle> shuffles(int i, int j);

}  // namespace rrbleib
