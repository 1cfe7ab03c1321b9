// lqn: build, search, verify and tabulate representations of the relation
// algebras L(q,n) over two copies of F_q x F_q.
//
// Exit codes: 0 success, 1 input or parse error, 2 negative result
// (search exhausted / verification found violations).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lqn/bounds.hpp"
#include "lqn/coloring.hpp"
#include "lqn/gf.hpp"
#include "lqn/io.hpp"
#include "lqn/mc.hpp"
#include "lqn/verify.hpp"

namespace {

using namespace lqn;

const char* kind_name(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::MalformedEntry: return "malformed_entry";
        case Violation::Kind::ForbiddenTriangle: return "forbidden_triangle";
        case Violation::Kind::MissingWitness: return "missing_witness";
    }
    return "?";
}

nlohmann::json violation_json(const Violation& v, const AtomStructure& s) {
    nlohmann::json j{{"kind", kind_name(v.kind)},
                     {"x", v.x},
                     {"y", v.y},
                     {"label", s.atom_name(v.c)}};
    if (v.z) j["z"] = *v.z;
    if (v.kind != Violation::Kind::MalformedEntry) {
        j["d"] = s.atom_name(v.d);
        j["e"] = s.atom_name(v.e);
    } else {
        j["reverse"] = s.atom_name(v.d);
    }
    return j;
}

int cmd_represent(unsigned long q, unsigned long n, std::uint64_t seed,
                  unsigned long max_rounds, const std::string& out_path, bool full_rescan) {
    if (!is_prime_power(q) || q < 2) {
        std::cerr << q << " is not a prime power\n";
        return 1;
    }
    if (2 * n > q)
        std::cerr << "warning: 2n > q, so L(" << q << "," << n
                  << ") has no representation; the search cannot succeed\n";
    RepresentOptions opts;
    opts.max_rounds = max_rounds;
    opts.full_rescan = full_rescan;
    RepresentResult res = represent(q, static_cast<unsigned>(n), seed, opts);

    std::string path = out_path;
    if (path.empty())
        path = "lqn_q" + std::to_string(q) + "_n" + std::to_string(n) + "_seed" +
               std::to_string(seed) + ".lqn";
    const bool success = res.run.outcome == ColoringOutcome::Success;
    if (success) save_matrix(res.matrix, path);

    nlohmann::json report{{"seed", res.run.seed},
                          {"rounds", res.run.rounds_used},
                          {"resamples", res.run.resample_count},
                          {"q", q},
                          {"n", n},
                          {"outcome", success ? "success" : "exhausted"}};
    std::cout << report.dump() << "\n";
    return success ? 0 : 2;
}

int cmd_verify(const std::string& path, bool exhaustive, unsigned threads) {
    LabelMatrix m = load_matrix(path);  // ParseError handled in main
    AtomStructure s = AtomStructure::build(m.q(), m.n());
    VerifyOptions opts;
    opts.exhaustive = exhaustive;
    opts.threads = threads;
    VerifyResult res = verify_full(m, s, opts);

    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : res.violations) violations.push_back(violation_json(v, s));
    nlohmann::json report{{"file", path},
                          {"q", m.q()},
                          {"n", m.n()},
                          {"V", m.vertex_count()},
                          {"valid", res.valid},
                          {"violation_count", res.violations.size()},
                          {"violations", violations}};
    std::cout << report.dump() << "\n";
    return res.valid ? 0 : 2;
}

int cmd_mc(unsigned long q, unsigned long n, unsigned long trials, std::uint64_t seed,
           unsigned threads, bool csv) {
    if (!is_prime_power(q) || q < 2) {
        std::cerr << q << " is not a prime power\n";
        return 1;
    }
    McStats st = mc_estimate(q, n, trials, seed, threads);
    if (csv) {
        std::ostringstream out;
        out << "q,n,trials,seed,att_empirical,att_analytic,att_sigma,"
               "tatta_empirical,tatta_analytic,tatta_sigma,any_fail,any_fail_sigma,union_bound\n"
            << st.q << "," << st.n << "," << st.trials << "," << st.base_seed << ","
            << st.att_freq() << "," << st.att_analytic() << "," << st.att_sigma() << ","
            << st.tatta_freq() << "," << st.tatta_analytic() << "," << st.tatta_sigma() << ","
            << st.any_fail_freq() << "," << st.any_fail_sigma() << "," << st.union_bound
            << "\n";
        std::cout << out.str();
    } else {
        std::cout << st.to_json() << "\n";
    }
    return 0;
}

int cmd_table(unsigned long nmin, unsigned long nmax, bool csv) {
    if (csv) {
        std::cout << figure1_csv(nmin, nmax);
        return 0;
    }
    std::vector<ThresholdRow> rows;
    if (nmin <= nmax) rows = threshold_table(nmin, nmax);
    std::cout << std::setw(4) << "n" << std::setw(9) << "q_union" << std::setw(7) << "q_lll"
              << "\n";
    for (const auto& r : rows)
        std::cout << std::setw(4) << r.n << std::setw(9) << r.q_union << std::setw(7) << r.q_lll
                  << "\n";
    return 0;
}

int write_csv(const std::string& csv, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return 1;
        }
        f << csv;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"representations and probabilistic thresholds for the algebras L(q,n)"};
    app.require_subcommand(1);

    unsigned long q = 0, n = 0, trials = 10000, nmin = 2, nmax = 20, max_rounds = 0, cap = 1000000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    bool exhaustive = false, csv = false, full_rescan = false;
    std::string out_path, file, eps_grid = "0.5,1,1.5,2";
    double eps = 0.0;

    auto* rep = app.add_subcommand("represent", "search for a representation of L(q,n)");
    rep->add_option("--q", q, "field order (prime power)")->required();
    rep->add_option("--n", n, "number of t-colors")->required()->check(CLI::PositiveNumber);
    rep->add_option("--seed", seed, "RNG seed (echoed in the report)");
    rep->add_option("--max-rounds", max_rounds, "resample budget (default 1000*V)");
    rep->add_option("--out", out_path, "representation file (default lqn_q<q>_n<n>_seed<s>.lqn)");
    rep->add_flag("--full-rescan", full_rescan, "rescan every edge after each resample");

    auto* ver = app.add_subcommand("verify", "check a representation file");
    ver->add_option("file", file, "representation file")->required();
    ver->add_flag("--exhaustive", exhaustive, "report every violation, not just the first");
    ver->add_option("--threads", threads, "scan width (0 = hardware)");

    auto* mc = app.add_subcommand("mc", "Monte Carlo failure frequencies vs analytic values");
    mc->add_option("--q", q, "field order (prime power)")->required();
    mc->add_option("--n", n, "number of t-colors")->required()->check(CLI::Range(2ul, 1000000ul));
    mc->add_option("--trials", trials, "independent colorings")->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed, "base seed; trial t uses seed+t");
    mc->add_option("--threads", threads, "worker count (0 = hardware)");
    mc->add_flag("--csv", csv, "CSV instead of JSON");

    auto* bnd = app.add_subcommand("bounds", "union-bound and local-lemma report for (q,n)");
    bnd->add_option("--q", q, "field order")->required()->check(CLI::Range(2ul, 100000000ul));
    bnd->add_option("--n", n, "number of t-colors")->required()->check(CLI::PositiveNumber);

    auto* tab = app.add_subcommand("table", "smallest prime powers per n meeting each bound");
    tab->add_option("--nmin", nmin, "first n (>= 2)");
    tab->add_option("--nmax", nmax, "last n");
    tab->add_flag("--csv", csv, "CSV instead of aligned text");

    auto* f1 = app.add_subcommand("fig1", "CSV of threshold prime powers vs n");
    f1->add_option("--nmin", nmin, "first n (>= 2)");
    f1->add_option("--nmax", nmax, "last n");
    f1->add_option("--out", out_path, "write to file instead of stdout");

    auto* f2 = app.add_subcommand("fig2", "CSV of smallest n per epsilon");
    f2->add_option("--eps-grid", eps_grid, "comma-separated epsilon values");
    f2->add_option("--eps", eps, "single epsilon (overrides the grid)");
    f2->add_option("--cap", cap, "search cap on n");
    f2->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help/usage text
        return code == 0 ? 0 : 1;
    }

    try {
        if (rep->parsed()) return cmd_represent(q, n, seed, max_rounds, out_path, full_rescan);
        if (ver->parsed()) return cmd_verify(file, exhaustive, threads);
        if (mc->parsed()) return cmd_mc(q, n, trials, seed, threads, csv);
        if (bnd->parsed()) {
            std::cout << bounds_report(q, n).to_json() << "\n";
            return 0;
        }
        if (tab->parsed()) return cmd_table(nmin, nmax, csv);
        if (f1->parsed()) return write_csv(figure1_csv(nmin, nmax), out_path);
        if (f2->parsed()) {
            std::vector<double> grid;
            if (f2->count("--eps")) {
                grid.push_back(eps);
            } else {
                std::istringstream gs(eps_grid);
                std::string tok;
                while (std::getline(gs, tok, ',')) grid.push_back(std::stod(tok));
            }
            return write_csv(figure2_csv(grid, cap), out_path);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
