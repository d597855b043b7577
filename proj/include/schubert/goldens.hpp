// Frozen enumeration counts guarding regressions in the permissible-alcove
// search. Values were produced by the exhaustive box enumeration and
// cross-checked against the unpruned brute-force enumeration in the unit
// tests before freezing.
#pragma once

#include <vector>

namespace schubert {

struct GoldenCount {
    int n;
    std::vector<int> lambda;
    long long count;
};

inline std::vector<GoldenCount> golden_permissible_counts() {
    return {
        {2, {0, 0}, 1},
        {2, {1, 0}, 3},
        {2, {1, 1}, 1},
        {2, {2, 0}, 5},
        {2, {2, 1}, 3},
        {2, {2, 2}, 1},
        {3, {0, 0, 0}, 1},
        {3, {1, 0, 0}, 7},
        {3, {1, 1, 0}, 7},
        {3, {1, 1, 1}, 1},
        {3, {2, 0, 0}, 19},
        {3, {2, 1, 0}, 25},
        {3, {2, 1, 1}, 7},
        {3, {2, 2, 0}, 19},
        {3, {2, 2, 1}, 7},
        {3, {2, 2, 2}, 1},
        {4, {1, 0, 0, 0}, 15},
        {4, {1, 1, 0, 0}, 33},
        {4, {1, 1, 1, 0}, 15},
    };
}

}  // namespace schubert
