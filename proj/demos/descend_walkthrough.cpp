// Walk one permissible alcove down to the constant alcove, printing the
// descent data and the witness verdict at every step.
//
//   ./descend_walkthrough [n] [lambda...]   (default: n=3, lambda = 2,1,0)

#include <cstdio>

#include "schubert/schubert.hpp"

using namespace schubert;

int main(int argc, char** argv) {
    int n = 3;
    Coweight lambda{2, 1, 0};
    if (argc > 2) {
        n = std::atoi(argv[1]);
        std::vector<int> entries;
        for (int i = 2; i < argc; ++i) entries.push_back(std::atoi(argv[i]));
        lambda = Coweight(entries);
        if (lambda.rank() != n || !is_dominant(lambda)) {
            std::fprintf(stderr, "need a dominant coweight of rank %d\n", n);
            return 2;
        }
    }

    const std::vector<Alcove> all = enumerate_permissible(lambda);
    std::printf("%zu permissible alcoves for lambda = %s\n", all.size(),
                to_json(lambda).dump().c_str());
    if (all.empty()) return 0;

    Alcove x = all.back();
    Coweight lam = lambda;
    std::printf("starting from x = %s\n", to_json(x).dump().c_str());
    while (lam[0] != lam[n - 1]) {
        int k = 1;
        while (lam[k - 1] <= lam[k]) ++k;
        const ConvolutionWitness w = build_convolution_witness(x, lam, k);
        std::printf("  peel w_%d: y = %s, z = %s, checks %s\n", k,
                    to_json(w.y).dump().c_str(), to_json(w.z).dump().c_str(),
                    w.all_pass() ? "pass" : "FAIL");
        x = w.y;
        lam = lam - fundamental(k, n);
    }
    std::printf("reached the constant alcove for lambda = %s\n", to_json(lam).dump().c_str());
    return 0;
}
