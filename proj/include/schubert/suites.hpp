// Named verification suites driving the library over exhaustive desk-scale
// grids, with machine-readable reports. The CLI `verify` subcommand and the
// acceptance runner both go through these drivers.
#pragma once

#include <chrono>
#include <map>
#include <random>

#include "schubert/goldens.hpp"
#include "schubert/json_io.hpp"
#include "schubert/parallel.hpp"

namespace schubert {

struct Failure {
    std::string input;
    std::string check;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    long long instances = 0;
    std::vector<Failure> failures;
    double wall_time_s = 0;
    unsigned seed = 0;
    std::map<std::string, std::string> params;
    std::vector<std::string> notes;
    json details = json::object();  // suite-specific structured extras

    bool pass() const { return failures.empty(); }
};

// Every field is deterministic for fixed inputs and seed except wall_time_s.
inline json to_json(const VerificationReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back(json{{"input", f.input}, {"check", f.check}, {"detail", f.detail}});
    json j{{"schema", "v1"},
           {"suite", r.suite},
           {"instances", r.instances},
           {"failures", std::move(fails)},
           {"wall_time_s", r.wall_time_s},
           {"seed", r.seed},
           {"params", r.params},
           {"notes", r.notes},
           {"pass", r.pass()}};
    if (!r.details.empty()) j["details"] = r.details;
    return j;
}

// Fixed convention reminder carried on family-level reports: the family chain
// closes onto (t - y) times its first member.
inline const char* family_tail_note() {
    return "family chain tail convention: (t - y) * member 1";
}

namespace detail {

class SuiteTimer {
  public:
    SuiteTimer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string describe_coweight(const Coweight& c) {
    std::string s = "(";
    for (int i = 0; i < c.rank(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

inline std::string describe_alcove(const Alcove& x) {
    std::string s = "[";
    for (int i = 1; i <= x.rank(); ++i) s += (i > 1 ? " " : "") + describe_coweight(x.term(i));
    return s + "]";
}

inline std::vector<Coweight> dominant_box(int n, int lo, int hi) {
    std::vector<Coweight> out;
    std::vector<int> cur(static_cast<size_t>(n));
    std::function<void(int, int)> walk = [&](int pos, int capv) {
        if (pos == n) {
            out.push_back(Coweight{std::vector<int>(cur)});
            return;
        }
        for (int e = std::min(hi, capv); e >= lo; --e) {
            cur[static_cast<size_t>(pos)] = e;
            walk(pos + 1, e);
        }
    };
    walk(0, hi);
    return out;
}

inline Alcove random_alcove(int n, std::mt19937_64& rng, int spread = 3) {
    std::uniform_int_distribution<int> entry(-spread, spread);
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    std::vector<int> tr(static_cast<size_t>(n));
    for (auto& e : tr) e = entry(rng);
    ExtendedWeylElement w(Permutation(std::move(img)), Coweight(std::move(tr)));
    return wext_act(w, base_alcove(n));
}

}  // namespace detail

// --- dominance suite -------------------------------------------------------
// Subtracting a fundamental coweight respects the dominance bound: for
// dominant mu, lambda = mu + w_t, and every dominant lambda' <= lambda,
// dom(lambda' - w_t) <= mu. Also checks the partial-order axioms.
inline VerificationReport suite_dominance(int n_max = 4, int max_entry = 3) {
    VerificationReport rep;
    rep.suite = "dominance";
    rep.params = {{"n_max", std::to_string(n_max)}, {"max_entry", std::to_string(max_entry)}};
    detail::SuiteTimer timer;
    for (int n = 2; n <= n_max; ++n) {
        for (const Coweight& mu : detail::dominant_box(n, 0, max_entry)) {
            for (int t = 1; t <= n - 1; ++t) {
                const Coweight lambda = mu + fundamental(t, n);
                for (const Coweight& lp : dominated_set(lambda)) {
                    ++rep.instances;
                    if (!leq_dominance(dom(lp - fundamental(t, n)), mu))
                        rep.failures.push_back({"mu=" + detail::describe_coweight(mu) +
                                                    " t=" + std::to_string(t) +
                                                    " lambda'=" + detail::describe_coweight(lp),
                                                "dom_subtract", "dominance bound fails"});
                }
            }
        }
        // order axioms on dominant coweights with entries in [-2, 2]
        std::map<long long, std::vector<Coweight>> by_size;
        for (const Coweight& c : detail::dominant_box(n, -2, 2)) by_size[size(c)].push_back(c);
        for (const auto& [sz, bucket] : by_size) {
            (void)sz;
            for (const auto& a : bucket)
                for (const auto& b : bucket) {
                    ++rep.instances;
                    if (a == b && !leq_dominance(a, b))
                        rep.failures.push_back({detail::describe_coweight(a), "reflexivity", ""});
                    if (leq_dominance(a, b) && leq_dominance(b, a) && a != b)
                        rep.failures.push_back({detail::describe_coweight(a) + " vs " +
                                                    detail::describe_coweight(b),
                                                "antisymmetry", ""});
                    for (const auto& c : bucket)
                        if (leq_dominance(a, b) && leq_dominance(b, c) && !leq_dominance(a, c))
                            rep.failures.push_back({detail::describe_coweight(a) + " via " +
                                                        detail::describe_coweight(b),
                                                    "transitivity", ""});
                }
        }
    }
    rep.wall_time_s = timer.seconds();
    return rep;
}

// --- golden counts ---------------------------------------------------------
// Recomputes the permissible-alcove enumeration over the frozen grid.
inline VerificationReport suite_golden_counts() {
    VerificationReport rep;
    rep.suite = "golden_counts";
    detail::SuiteTimer timer;
    for (const GoldenCount& g : golden_permissible_counts()) {
        ++rep.instances;
        const long long got =
            static_cast<long long>(enumerate_permissible(Coweight{g.lambda}).size());
        if (got != g.count)
            rep.failures.push_back(
                {"n=" + std::to_string(g.n) + " lambda=" + detail::describe_coweight(Coweight{g.lambda}),
                 "golden_count",
                 "expected " + std::to_string(g.count) + ", got " + std::to_string(got)});
    }
    rep.wall_time_s = timer.seconds();
    return rep;
}

// --- alcove suite ----------------------------------------------------------
// Rotation laws and the index-order comparison rules on random alcoves, plus
// (optionally) the frozen enumeration counts.
inline VerificationReport suite_alcove(int n_max = 4, int samples = 1000, unsigned seed = 0,
                                       bool include_goldens = true) {
    VerificationReport rep;
    rep.suite = "alcove";
    rep.seed = seed;
    rep.params = {{"n_max", std::to_string(n_max)}, {"samples", std::to_string(samples)}};
    detail::SuiteTimer timer;
    for (int n = 2; n <= n_max; ++n) {
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<unsigned>(n));
        const Permutation c = Permutation::long_cycle(n);
        const Permutation cinv = c.inverse();
        for (int s = 0; s < samples; ++s) {
            const Alcove x = detail::random_alcove(n, rng);
            ++rep.instances;
            const std::string id = "n=" + std::to_string(n) + " " + detail::describe_alcove(x);
            if (rotate_pow(x, n) != x)
                rep.failures.push_back({id, "rotate_order_n", "rot^n(x) != x"});
            const Alcove rx = rotate(x);
            if (spine_permutation(rx) != cinv * spine_permutation(x) * c)
                rep.failures.push_back({id, "rotate_spine_conjugation", ""});
            const int p1 = spine_permutation(x)(1);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    const bool orig = alcove_index_leq(x, i, j);
                    const bool rot = alcove_index_leq(rx, cinv(i), cinv(j));
                    if (p1 == 1 && orig != rot)
                        rep.failures.push_back({id, "order_transport_trivial_spine", ""});
                    if (i != p1 && j != p1 && orig != rot)
                        rep.failures.push_back({id, "order_transport_off_spine", ""});
                    if (i == p1 && orig && !rot)
                        rep.failures.push_back({id, "order_transport_spine_moves", ""});
                }
            for (int m = -4; m <= 4; ++m) {
                std::vector<int> fx = fix_set(x, m);
                for (int& e : fx) e = cinv(e);
                std::sort(fx.begin(), fx.end());
                if (fx != fix_set(rx, m))
                    rep.failures.push_back({id, "fix_transport", "m=" + std::to_string(m)});
            }
        }
    }
    if (include_goldens) {
        const VerificationReport goldens = suite_golden_counts();
        rep.instances += goldens.instances;
        for (const auto& f : goldens.failures) rep.failures.push_back(f);
    }
    rep.wall_time_s = timer.seconds();
    return rep;
}

// --- order suite -----------------------------------------------------------
// Descent existence and the per-step increment identity over the full
// permissible grid.
inline VerificationReport suite_order(int n_max = 3, int max_entry = 2) {
    VerificationReport rep;
    rep.suite = "order";
    rep.params = {{"n_max", std::to_string(n_max)}, {"max_entry", std::to_string(max_entry)}};
    detail::SuiteTimer timer;
    struct Instance {
        Coweight lambda;
        Alcove x;
        int t;
    };
    std::vector<Instance> grid;
    for (int n = 2; n <= n_max; ++n)
        for (const Coweight& lambda : detail::dominant_box(n, 0, max_entry))
            for (int t = 1; t <= n - 1; ++t) {
                if (lambda[t - 1] <= lambda[t]) continue;
                for (const Alcove& x : enumerate_permissible(lambda)) grid.push_back({lambda, x, t});
            }
    rep.instances = static_cast<long long>(grid.size());
    std::vector<std::vector<Failure>> slots(grid.size());
    parallel_for(grid.size(), [&](size_t idx) {
        const auto& inst = grid[idx];
        const int n = inst.x.rank();
        const std::string id = "lambda=" + detail::describe_coweight(inst.lambda) +
                               " t=" + std::to_string(inst.t) + " x=" +
                               detail::describe_alcove(inst.x);
        try {
            const Alcove y = descend(inst.x, inst.lambda, inst.t);
            const Coweight mu = inst.lambda - fundamental(inst.t, n);
            if (!is_permissible(y, mu))
                slots[idx].push_back({id, "descend_mu_permissible", ""});
            auto pos = relative_position(inst.x, y);
            if (!pos || *pos != fundamental(inst.t, n))
                slots[idx].push_back({id, "descend_relative_position", ""});
            const std::vector<Permutation> deltas = delta_sequence(inst.x);
            for (int k = 1; k <= n; ++k) {
                const int b = descent_step(inst.x, deltas, inst.t, k);
                const Coweight got = y.term_ext(k + 1) - y.term(k);
                if (got != basis_coweight(b, n))
                    slots[idx].push_back({id, "descent_step_k=" + std::to_string(k),
                                          "increment does not match the step index"});
            }
        } catch (const std::exception& e) {
            slots[idx].push_back({id, "descend", e.what()});
        }
    });
    for (auto& s : slots)
        for (auto& f : s) rep.failures.push_back(std::move(f));
    rep.wall_time_s = timer.seconds();
    return rep;
}

// --- lattice suite ---------------------------------------------------------
// The diagonal-representative oracle for the Schubert membership tests.
inline VerificationReport suite_lattice(int n_max = 3) {
    VerificationReport rep;
    rep.suite = "lattice";
    rep.params = {{"n_max", std::to_string(n_max)}};
    rep.notes.push_back(family_tail_note());
    detail::SuiteTimer timer;
    for (int n = 2; n <= n_max; ++n) {
        std::vector<Coweight> box;
        {
            std::vector<int> cur(static_cast<size_t>(n));
            std::function<void(int)> walk = [&](int pos) {
                if (pos == n) {
                    box.push_back(Coweight{std::vector<int>(cur)});
                    return;
                }
                for (int e = -1; e <= 2; ++e) {
                    cur[static_cast<size_t>(pos)] = e;
                    walk(pos + 1);
                }
            };
            walk(0);
        }
        const std::vector<Coweight> lambdas = detail::dominant_box(n, -1, 2);
        for (const Coweight& mu : box) {
            const Lattice lmu = coweight_lattice(mu);
            for (const Coweight& lambda : lambdas) {
                ++rep.instances;
                const std::string id = "mu=" + detail::describe_coweight(mu) +
                                       " lambda=" + detail::describe_coweight(lambda);
                if (in_schubert_closure(lmu, lambda) != leq_dominance(dom(mu), lambda))
                    rep.failures.push_back({id, "closure_oracle", ""});
                if (in_schubert_orbit(lmu, lambda) != (dom(mu) == lambda))
                    rep.failures.push_back({id, "orbit_oracle", ""});
            }
        }
    }
    rep.wall_time_s = timer.seconds();
    return rep;
}

// --- minuscule suite -------------------------------------------------------
// Full degeneration pipeline over every w_t-permissible alcove, with one
// reversed-ordering smoke instance per (n, t) to confirm the verdict does not
// depend on the initial zero-tuple ordering.
inline VerificationReport suite_minuscule(int n_max = 4, unsigned seed = 0) {
    VerificationReport rep;
    rep.suite = "minuscule";
    rep.seed = seed;
    rep.params = {{"n_max", std::to_string(n_max)}};
    rep.notes.push_back(family_tail_note());
    detail::SuiteTimer timer;
    struct Instance {
        int n, t;
        Alcove x;
        bool reversed;
    };
    std::vector<Instance> grid;
    for (int n = 2; n <= n_max; ++n)
        for (int t = 1; t <= n - 1; ++t) {
            const std::vector<Alcove> xs = enumerate_permissible(fundamental(t, n));
            for (const Alcove& x : xs) grid.push_back({n, t, x, false});
            if (!xs.empty()) grid.push_back({n, t, xs.front(), true});
        }
    rep.instances = static_cast<long long>(grid.size());
    std::vector<std::vector<Failure>> slots(grid.size());
    std::vector<long long> exponents(grid.size(), 0);
    parallel_for(grid.size(), [&](size_t idx) {
        const auto& inst = grid[idx];
        const std::string id = "n=" + std::to_string(inst.n) + " t=" + std::to_string(inst.t) +
                               " x=" + detail::describe_alcove(inst.x) +
                               (inst.reversed ? " (reversed)" : "");
        try {
            const DegenerationReport dr = verify_degeneration(
                inst.x, inst.t, seed,
                inst.reversed ? ZeroOrder::descending : ZeroOrder::ascending);
            exponents[idx] = dr.N;
            for (const auto& c : dr.checks)
                if (!c.pass) slots[idx].push_back({id, c.name, c.detail});
        } catch (const std::exception& e) {
            slots[idx].push_back({id, "pipeline", e.what()});
        }
    });
    long long max_exponent = 0;
    json per_alcove = json::array();
    for (size_t i = 0; i < grid.size(); ++i) {
        max_exponent = std::max(max_exponent, exponents[i]);
        for (auto& f : slots[i]) rep.failures.push_back(std::move(f));
        if (!grid[i].reversed)
            per_alcove.push_back(json{{"alcove", to_json(grid[i].x)},
                                      {"t", grid[i].t},
                                      {"N", exponents[i]}});
    }
    rep.params["max_N"] = std::to_string(max_exponent);
    rep.details["N_per_alcove"] = std::move(per_alcove);
    rep.wall_time_s = timer.seconds();
    return rep;
}

// --- convolution suite -----------------------------------------------------
// Witness construction over the descent grid.
inline VerificationReport suite_convolution(int n_max = 3, int max_entry = 2) {
    VerificationReport rep;
    rep.suite = "convolution";
    rep.params = {{"n_max", std::to_string(n_max)}, {"max_entry", std::to_string(max_entry)}};
    rep.notes.push_back(family_tail_note());
    detail::SuiteTimer timer;
    struct Instance {
        Coweight lambda;
        Alcove x;
        int k;
    };
    std::vector<Instance> grid;
    for (int n = 2; n <= n_max; ++n)
        for (const Coweight& lambda : detail::dominant_box(n, 0, max_entry))
            for (int k = 1; k <= n - 1; ++k) {
                if (lambda[k - 1] <= lambda[k]) continue;
                for (const Alcove& x : enumerate_permissible(lambda)) grid.push_back({lambda, x, k});
            }
    rep.instances = static_cast<long long>(grid.size());
    std::vector<std::vector<Failure>> slots(grid.size());
    parallel_for(grid.size(), [&](size_t idx) {
        const auto& inst = grid[idx];
        const std::string id = "lambda=" + detail::describe_coweight(inst.lambda) +
                               " k=" + std::to_string(inst.k) + " x=" +
                               detail::describe_alcove(inst.x);
        try {
            const ConvolutionWitness w =
                build_convolution_witness(inst.x, inst.lambda, inst.k, /*strict=*/false);
            for (const auto& c : w.checks)
                if (!c.pass) slots[idx].push_back({id, c.name, c.detail});
        } catch (const std::exception& e) {
            slots[idx].push_back({id, "witness", e.what()});
        }
    });
    for (auto& s : slots)
        for (auto& f : s) rep.failures.push_back(std::move(f));
    rep.wall_time_s = timer.seconds();
    return rep;
}

// --- main-theorem chain ----------------------------------------------------

struct ChainStep {
    Coweight lambda;
    int k = 0;
    Alcove y;
    bool witness_pass = false;
};

struct ChainEntry {
    Alcove x;
    std::vector<ChainStep> steps;
    bool final_constant_ok = false;
    bool membership_ok = false;

    bool pass() const {
        if (!final_constant_ok || !membership_ok) return false;
        for (const auto& s : steps)
            if (!s.witness_pass) return false;
        return true;
    }
};

struct ChainCertificate {
    int n = 0;
    Coweight lambda;
    std::vector<ChainEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass()) return false;
        return true;
    }
};

// For every lambda-permissible alcove, peels fundamental coweights off lambda
// (always at the first strict descent) down to a constant coweight, recording
// a verified convolution witness per step. The terminal alcove must be the
// translated base alcove, the unique one permissible for a constant coweight.
inline ChainCertificate main_theorem_chain(const Coweight& lambda) {
    require(is_dominant(lambda), "chain needs a dominant coweight");
    const int n = lambda.rank();
    ChainCertificate cert;
    cert.n = n;
    cert.lambda = lambda;
    const std::vector<Alcove> xs = enumerate_permissible(lambda);
    cert.entries.resize(xs.size());
    parallel_for(xs.size(), [&](size_t idx) {
        ChainEntry entry;
        entry.x = xs[idx];
        Alcove cur = xs[idx];
        Coweight lam = lambda;
        try {
            while (lam[0] != lam[n - 1]) {
                int k = 0;
                for (int i = 1; i <= n - 1; ++i)
                    if (lam[i - 1] > lam[i]) {
                        k = i;
                        break;
                    }
                const ConvolutionWitness w = build_convolution_witness(cur, lam, k, false);
                entry.steps.push_back({lam, k, w.y, w.all_pass()});
                cur = w.y;
                lam = lam - fundamental(k, n);
            }
            const Coweight shift{std::vector<int>(static_cast<size_t>(n), lam[0])};
            const Alcove constant_alcove =
                wext_act(ExtendedWeylElement(Permutation::identity(n), shift), base_alcove(n));
            entry.final_constant_ok = (cur == constant_alcove);
            entry.membership_ok =
                in_global_schubert(special_family_from_alcove(xs[idx]), lambda);
        } catch (const std::exception&) {
            entry.final_constant_ok = false;
        }
        cert.entries[idx] = std::move(entry);
    });
    return cert;
}

inline json to_json(const ChainCertificate& cert) {
    json entries = json::array();
    for (const auto& e : cert.entries) {
        json steps = json::array();
        for (const auto& s : e.steps)
            steps.push_back(json{{"lambda", to_json(s.lambda)},
                                 {"k", s.k},
                                 {"y", to_json(s.y)},
                                 {"witness_pass", s.witness_pass}});
        entries.push_back(json{{"x", to_json(e.x)},
                               {"steps", std::move(steps)},
                               {"final_constant_ok", e.final_constant_ok},
                               {"membership_ok", e.membership_ok},
                               {"pass", e.pass()}});
    }
    return json{{"schema", "v1"},
                {"n", cert.n},
                {"lambda", to_json(cert.lambda)},
                {"instances", cert.entries.size()},
                {"entries", std::move(entries)},
                {"pass", cert.all_pass()}};
}

// --- membership equivalence ------------------------------------------------
// The permissibility/membership equivalence over a box around each dominant
// coweight: alcoves with first-term entries within one of the coweight's
// range and size within one of its size, so both sides of the equivalence are
// exercised in both truth values.
inline VerificationReport suite_membership_equivalence(int n_max = 3, int max_entry = 2) {
    VerificationReport rep;
    rep.suite = "membership_equivalence";
    rep.params = {{"n_max", std::to_string(n_max)}, {"max_entry", std::to_string(max_entry)}};
    rep.notes.push_back(family_tail_note());
    detail::SuiteTimer timer;
    struct Instance {
        Coweight lambda;
        Alcove x;
    };
    std::vector<Instance> grid;
    for (int n = 2; n <= n_max; ++n)
        for (const Coweight& lambda : detail::dominant_box(n, 0, max_entry)) {
            const long long sz = size(lambda);
            for (const Alcove& x : enumerate_alcoves_box(n, lambda[n - 1] - 1, lambda[0] + 1,
                                                         sz - 1, sz + 1))
                grid.push_back({lambda, x});
        }
    std::vector<std::vector<Failure>> slots(grid.size());
    parallel_for(grid.size(), [&](size_t idx) {
        const auto& inst = grid[idx];
        const std::string id = "lambda=" + detail::describe_coweight(inst.lambda) + " x=" +
                               detail::describe_alcove(inst.x);
        try {
            const bool member =
                in_global_schubert(special_family_from_alcove(inst.x), inst.lambda);
            const bool permissible = is_permissible(inst.x, inst.lambda);
            if (member != permissible)
                slots[idx].push_back({id, "membership_equivalence",
                                      member ? "member but not permissible"
                                             : "permissible but not member"});
        } catch (const std::exception& e) {
            slots[idx].push_back({id, "membership_equivalence", e.what()});
        }
    });
    rep.instances = static_cast<long long>(grid.size());
    for (auto& s : slots)
        for (auto& f : s) rep.failures.push_back(std::move(f));
    rep.wall_time_s = timer.seconds();
    return rep;
}

// --- chain certificates ----------------------------------------------------
inline VerificationReport suite_chain_certificates(int n_max = 3, int max_entry = 2) {
    VerificationReport rep;
    rep.suite = "chain_certificates";
    rep.params = {{"n_max", std::to_string(n_max)}, {"max_entry", std::to_string(max_entry)}};
    rep.notes.push_back(family_tail_note());
    detail::SuiteTimer timer;
    for (int n = 2; n <= n_max; ++n)
        for (const Coweight& lambda : detail::dominant_box(n, 0, max_entry)) {
            const ChainCertificate cert = main_theorem_chain(lambda);
            rep.instances += static_cast<long long>(cert.entries.size());
            for (const auto& e : cert.entries)
                if (!e.pass())
                    rep.failures.push_back(
                        {"lambda=" + detail::describe_coweight(lambda) + " x=" +
                             detail::describe_alcove(e.x),
                         "chain_certificate",
                         e.final_constant_ok ? "witness or membership failure"
                                             : "chain did not end at the constant alcove"});
        }
    rep.wall_time_s = timer.seconds();
    return rep;
}

// --- main suite ------------------------------------------------------------
// Equivalence plus chain certificates; the CLI's "main".
inline VerificationReport suite_main(int n_max = 3, int max_entry = 2) {
    VerificationReport rep = suite_membership_equivalence(n_max, max_entry);
    const VerificationReport chains = suite_chain_certificates(n_max, max_entry);
    rep.suite = "main";
    rep.instances += chains.instances;
    for (const auto& f : chains.failures) rep.failures.push_back(f);
    rep.wall_time_s += chains.wall_time_s;
    return rep;
}

}  // namespace schubert
