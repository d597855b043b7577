// Build the one-parameter degeneration family of a fundamental-coweight
// alcove and print the matrices, the twisted evaluation at zero, and two
// specializations.

#include <cstdio>

#include "schubert/schubert.hpp"

using namespace schubert;

int main() {
    const Alcove x =
        validate_alcove({Coweight{0, 1, 0}, Coweight{1, 1, 0}, Coweight{1, 1, 1}});
    const int t = 1;

    const DegenerationFamily fam = build_family(x, t);
    std::printf("alcove %s, t = %d, N = %lld\n", to_json(x).dump().c_str(), t, fam.N);
    for (int i = 1; i <= fam.n; ++i) {
        std::printf("A^(%d)(u):\n", i);
        const LaurentMatrix& a = fam.A[static_cast<size_t>(i - 1)];
        for (int r = 0; r < a.rows(); ++r) {
            std::printf("  [");
            for (int c = 0; c < a.cols(); ++c)
                std::printf(" %s%s", a.at(r, c).to_string("u").c_str(),
                            c + 1 < a.cols() ? "," : " ");
            std::printf("]\n");
        }
    }
    for (int i = 2; i <= fam.n; ++i)
        std::printf("B^(%d)(u) (LaTeX): %s\n", i,
                    to_latex(fam.B[static_cast<size_t>(i - 2)]).c_str());

    for (const Rat& z : {Rat(0), Rat(1, 2)}) {
        const LatticeFamily f = specialize(fam, z);
        std::printf("specialize at z = %s: base = %s, members in the w_%d closure: %s\n",
                    rat_to_string(z).c_str(), rat_to_string(f.base).c_str(), t,
                    in_global_schubert(f, fundamental(t, f.rank())) ? "yes" : "NO");
    }
    return 0;
}
