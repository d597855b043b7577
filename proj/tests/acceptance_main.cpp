// Acceptance runner: one line of output per criterion, exit 0 only when every
// criterion passes. Each criterion runs an exhaustive (or fixed-sample-count)
// grid with exact arithmetic; there are no tolerances anywhere.

#include <cstdio>
#include <string>

#include "schubert/schubert.hpp"

namespace {

int failures_total = 0;

void report(int number, const std::string& label, const schubert::VerificationReport& rep) {
    std::printf("[%s] criterion %d: %s (instances=%lld, failures=%zu, %.1fs)\n",
                rep.pass() ? "PASS" : "FAIL", number, label.c_str(), rep.instances,
                rep.failures.size(), rep.wall_time_s);
    if (!rep.pass()) {
        ++failures_total;
        const auto& f = rep.failures.front();
        std::printf("        first failure: %s | %s | %s\n", f.check.c_str(), f.input.c_str(),
                    f.detail.c_str());
    }
    std::fflush(stdout);
}

}  // namespace

int main() {
    using namespace schubert;

    // 1. membership/permissibility equivalence, n in {2,3}, entries in [0,2]
    report(1, "special-family membership equals permissibility",
           suite_membership_equivalence(3, 2));

    // 2. diagonal-representative oracle for closure/orbit membership,
    //    mu entries in [-1,2], n in {2,3}
    report(2, "closure/orbit membership against the dominance oracle", suite_lattice(3));

    // 3. degeneration pipeline for every fundamental coweight, n in {2,3,4}
    report(3, "minuscule degeneration families", suite_minuscule(4));

    // 4. descent theorem with per-step increment identities, n in {2,3},
    //    entries in [0,2], every admissible direction, wrap-around included
    report(4, "descent to a mu-permissible alcove", suite_order(3, 2));

    // 5. rotation laws and order transport on 1000 random alcoves per rank
    report(5, "rotation laws and order transport", suite_alcove(4, 1000, 0, false));

    // 6. dominance bound after subtracting a fundamental coweight,
    //    mu entries in [0,3], n up to 4, brute force
    report(6, "dominance bound under fundamental subtraction", suite_dominance(4, 3));

    // 7. convolution witnesses over the descent grid
    report(7, "convolution witnesses", suite_convolution(3, 2));

    // 8. complete descent certificates, n in {2,3}, entries in [0,2]
    report(8, "main-theorem chain certificates", suite_chain_certificates(3, 2));

    // 9. frozen enumeration counts
    report(9, "permissible-alcove count goldens", suite_golden_counts());

    if (failures_total > 0) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures_total);
        return 1;
    }
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
}
