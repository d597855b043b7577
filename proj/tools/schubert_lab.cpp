// schubert-lab: enumeration, descent, convolution witnesses, degeneration
// families, and the named verification suites, all emitting JSON.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "schubert/schubert.hpp"

namespace {

using namespace schubert;

Coweight parse_lambda(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        entries.push_back(std::stoi(item));
    require(!entries.empty(), "empty coweight");
    return Coweight(std::move(entries));
}

// Reads the JSON input object from --input (path or "-" for stdin).
json read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return json::parse(buf.str());
    }
    std::ifstream in(path);
    require(in.good(), "cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

// Inline flags take precedence; any field not covered by a flag is read from
// the JSON input object (a file via --input, or stdin).
struct ProblemInput {
    std::string input_path = "-";
    std::string alcove_text;
    std::string lambda_text;
    int t = 0;
    int k = 0;

    json object_for_missing(bool lambda_needed, bool t_needed, bool k_needed) const {
        const bool missing = alcove_text.empty() || (lambda_needed && lambda_text.empty()) ||
                             (t_needed && t <= 0) || (k_needed && k <= 0);
        if (!missing) return json();
        try {
            return read_input(input_path);
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("cannot parse JSON input: ") + e.what());
        }
    }

    Alcove alcove(const json& obj) const {
        if (!alcove_text.empty()) return alcove_from_json(json::parse(alcove_text));
        require(obj.contains("alcove"), "missing alcove (flag --alcove or JSON key)");
        return alcove_from_json(obj["alcove"]);
    }
    Coweight lambda(const json& obj) const {
        if (!lambda_text.empty()) return parse_lambda(lambda_text);
        require(obj.contains("lambda"), "missing lambda (flag --lambda or JSON key)");
        return coweight_from_json(obj["lambda"]);
    }
    int index(const json& obj, int flag_value, const char* key) const {
        if (flag_value > 0) return flag_value;
        require(obj.contains(key) && obj[key].is_number_integer(),
                std::string("missing index (flag --") + key + " or JSON key)");
        return obj[key].get<int>();
    }
};

int emit_and_exit(const json& j, bool pass) {
    std::cout << j.dump(2) << "\n";
    return pass ? 0 : 1;
}

int run_enumerate(int n, const std::string& lambda_text, const std::string& format,
                  const std::string& shard) {
    Coweight lambda = parse_lambda(lambda_text);
    require(lambda.rank() == n, "lambda rank does not match -n");
    require(is_dominant(lambda), "lambda must be dominant");
    std::vector<Alcove> alcoves = enumerate_permissible(lambda);

    if (!shard.empty()) {
        auto slash = shard.find('/');
        require(slash != std::string::npos, "shard must look like i/m");
        const long long part = std::stoll(shard.substr(0, slash));
        const long long parts = std::stoll(shard.substr(slash + 1));
        require(parts >= 1 && part >= 0 && part < parts, "shard index out of range");
        // partition by first term: alcoves sharing a first term stay together
        std::vector<Coweight> firsts;
        for (const auto& x : alcoves)
            if (firsts.empty() || firsts.back() != x.term(1)) firsts.push_back(x.term(1));
        std::vector<Alcove> kept;
        for (const auto& x : alcoves) {
            const long long group =
                std::lower_bound(firsts.begin(), firsts.end(), x.term(1)) - firsts.begin();
            if (group % parts == part) kept.push_back(x);
        }
        alcoves = std::move(kept);
    }

    if (format == "csv") {
        for (const auto& x : alcoves) {
            std::string line;
            for (int i = 1; i <= x.rank(); ++i)
                for (int j = 0; j < x.rank(); ++j)
                    line += (line.empty() ? "" : ",") + std::to_string(x.term(i)[j]);
            std::cout << line << "\n";
        }
        std::cout << "count," << alcoves.size() << "\n";
    } else {
        for (const auto& x : alcoves) std::cout << to_json(x).dump() << "\n";
        std::cout << json{{"count", alcoves.size()}}.dump() << "\n";
    }
    return 0;
}

int run_descend(const ProblemInput& in) {
    const json obj = in.object_for_missing(true, true, false);
    const Alcove x = in.alcove(obj);
    const Coweight lambda = in.lambda(obj);
    const int t = in.index(obj, in.t, "t");

    const Alcove y = descend(x, lambda, t);
    const std::vector<Permutation> deltas = delta_sequence(x);
    json delta_json = json::array();
    for (const auto& d : deltas) delta_json.push_back(to_json(d));
    json steps = json::array();
    json checks = json::array();
    bool pass = true;
    const int n = x.rank();
    for (int k = 1; k <= n; ++k) {
        const int b = descent_step(x, deltas, t, k);
        steps.push_back(b);
        const bool ok = (y.term_ext(k + 1) - y.term(k)) == basis_coweight(b, n);
        pass = pass && ok;
        checks.push_back(json{{"name", "step_increment_k=" + std::to_string(k)}, {"pass", ok}});
    }
    const Coweight mu = lambda - fundamental(t, n);
    const bool mu_ok = is_permissible(y, mu);
    auto pos = relative_position(x, y);
    const bool pos_ok = pos && *pos == fundamental(t, n);
    pass = pass && mu_ok && pos_ok;
    checks.push_back(json{{"name", "y_mu_permissible"}, {"pass", mu_ok}});
    checks.push_back(json{{"name", "relative_position"}, {"pass", pos_ok}});
    return emit_and_exit(json{{"y", to_json(y)},
                              {"delta_sequence", delta_json},
                              {"b_steps", steps},
                              {"checks", checks},
                              {"pass", pass}},
                         pass);
}

int run_witness(const ProblemInput& in) {
    const json obj = in.object_for_missing(true, false, true);
    const Alcove x = in.alcove(obj);
    const Coweight lambda = in.lambda(obj);
    const int k = in.index(obj, in.k, "k");
    const ConvolutionWitness w = build_convolution_witness(x, lambda, k, /*strict=*/false);
    json j = to_json(w);
    j["conventions"] = json::array({family_tail_note()});
    return emit_and_exit(j, w.all_pass());
}

int run_degenerate(const ProblemInput& in, bool emit_latex, unsigned seed) {
    const json obj = in.object_for_missing(false, true, false);
    const Alcove x = in.alcove(obj);
    const int t = in.index(obj, in.t, "t");
    const DegenerationFamily fam = build_family(x, t);
    const DegenerationReport rep = verify_degeneration(x, t, seed);
    json j = to_json(fam);
    // columns of the inverse-twisted matrices at u = 0 (the zero-position matrices)
    json eval0 = json::array();
    for (int i = 1; i <= fam.n; ++i) {
        const RatMatrix w =
            evaluate_matrix(lead_row_shift(fam.A[static_cast<size_t>(i - 1)], i - 1, -fam.N), Rat(0));
        json rows = json::array();
        for (int r = 0; r < w.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < w.cols(); ++c) row.push_back(rat_to_string(w.at(r, c)));
            rows.push_back(std::move(row));
        }
        eval0.push_back(std::move(rows));
    }
    j["evaluation_at_zero"] = std::move(eval0);
    j["report"] = to_json(rep);
    j["conventions"] = json::array({family_tail_note()});
    if (emit_latex) {
        json latex_a = json::array(), latex_b = json::array();
        for (const auto& m : fam.A) latex_a.push_back(to_latex(m));
        for (const auto& m : fam.B) latex_b.push_back(to_latex(m));
        j["latex"] = json{{"A", std::move(latex_a)}, {"B", std::move(latex_b)}};
    }
    return emit_and_exit(j, rep.all_pass());
}

int run_chain(int n, const std::string& lambda_text) {
    Coweight lambda = parse_lambda(lambda_text);
    require(lambda.rank() == n, "lambda rank does not match -n");
    const ChainCertificate cert = main_theorem_chain(lambda);
    json j = to_json(cert);
    j["conventions"] = json::array({family_tail_note()});
    return emit_and_exit(j, cert.all_pass());
}

int run_verify(const std::string& suite, int n, int max_entry, unsigned seed,
               const std::string& format) {
    VerificationReport rep;
    if (suite == "dominance") {
        rep = suite_dominance(n > 0 ? n : 4, max_entry > 0 ? max_entry : 3);
    } else if (suite == "alcove") {
        rep = suite_alcove(n > 0 ? n : 4, 1000, seed);
    } else if (suite == "order") {
        rep = suite_order(n > 0 ? n : 3, max_entry > 0 ? max_entry : 2);
    } else if (suite == "lattice") {
        rep = suite_lattice(n > 0 ? n : 3);
    } else if (suite == "minuscule") {
        rep = suite_minuscule(n > 0 ? n : 4, seed);
    } else if (suite == "convolution") {
        rep = suite_convolution(n > 0 ? n : 3, max_entry > 0 ? max_entry : 2);
    } else if (suite == "main") {
        rep = suite_main(n > 0 ? n : 3, max_entry > 0 ? max_entry : 2);
    } else {
        throw CLI::ValidationError("unknown suite: " + suite);
    }
    rep.params["workers"] = std::to_string(worker_count());
    if (format == "csv") {
        std::cout << "suite,instances,failures,wall_time_s\n"
                  << rep.suite << "," << rep.instances << "," << rep.failures.size() << ","
                  << rep.wall_time_s << "\n";
        for (const auto& f : rep.failures)
            std::cout << "failure," << f.check << "," << f.input << "\n";
        return rep.pass() ? 0 : 1;
    }
    return emit_and_exit(to_json(rep), rep.pass());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for alcove combinatorics, lattice-model Schubert "
                 "membership, degeneration families, and convolution witnesses"};
    app.require_subcommand(1);

    int n = 0, max_entry = 0;
    unsigned seed = 0;
    std::string lambda_text, format = "json", shard;
    ProblemInput input;
    bool emit_latex = false;
    std::string suite;

    auto* enumerate = app.add_subcommand("enumerate", "stream the permissible alcoves of lambda");
    enumerate->add_option("-n", n, "rank")->required();
    enumerate->add_option("--lambda", lambda_text, "dominant coweight, comma separated")->required();
    enumerate->add_option("--format", format, "json|csv");
    enumerate->add_option("--shard", shard, "i/m partition by first term");

    auto* descend_cmd = app.add_subcommand("descend", "descend a permissible alcove by w_t");
    descend_cmd->add_option("--input", input.input_path, "JSON {alcove, lambda, t} (- for stdin)");
    descend_cmd->add_option("--alcove", input.alcove_text, "alcove as JSON array");
    descend_cmd->add_option("--lambda", input.lambda_text, "dominant coweight, comma separated");
    descend_cmd->add_option("--t", input.t, "fundamental index");

    auto* witness = app.add_subcommand("witness", "build and verify a convolution witness");
    witness->add_option("--input", input.input_path, "JSON {alcove, lambda, k} (- for stdin)");
    witness->add_option("--alcove", input.alcove_text, "alcove as JSON array");
    witness->add_option("--lambda", input.lambda_text, "dominant coweight, comma separated");
    witness->add_option("--k", input.k, "fundamental index");

    auto* degenerate = app.add_subcommand("degenerate", "build a degeneration family and verify it");
    degenerate->add_option("--input", input.input_path, "JSON {alcove, t} (- for stdin)");
    degenerate->add_option("--alcove", input.alcove_text, "alcove as JSON array");
    degenerate->add_option("--t", input.t, "fundamental index");
    degenerate->add_option("--seed", seed, "sample-point seed");
    degenerate->add_flag("--emit-latex", emit_latex, "include LaTeX renderings of the matrices");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "dominance|alcove|order|lattice|minuscule|convolution|main")
        ->required();
    verify->add_option("-n", n, "largest rank to cover");
    verify->add_option("--max-entry", max_entry, "largest coweight entry");
    verify->add_option("--seed", seed, "seed for sampled instances");
    verify->add_option("--format", format, "json|csv");

    auto* chain = app.add_subcommand("chain", "emit the full descent certificate for lambda");
    chain->add_option("-n", n, "rank")->required();
    chain->add_option("--lambda", lambda_text, "dominant coweight, comma separated")->required();

    try {
        app.parse(argc, argv);
        if (enumerate->parsed()) return run_enumerate(n, lambda_text, format, shard);
        if (descend_cmd->parsed()) return run_descend(input);
        if (witness->parsed()) return run_witness(input);
        if (degenerate->parsed()) return run_degenerate(input, emit_latex, seed);
        if (verify->parsed()) return run_verify(suite, n, max_entry, seed, format);
        if (chain->parsed()) return run_chain(n, lambda_text);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
