// Command-line driver: every library module exposed as a subcommand with
// JSON/CSV output and reproducible seeds.
//
// Exit codes: 0 success (verdict true where one exists), 1 verdict false,
// 2 usage/constraint error, 3 inconclusive enclosure (raise J and retry).

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include <omp.h>

#include "dhz/atoms.hpp"
#include "dhz/counterexample.hpp"
#include "dhz/fastops.hpp"
#include "dhz/json_io.hpp"
#include "dhz/lab.hpp"
#include "dhz/window_ops.hpp"

namespace {

using nlohmann::json;

struct OutputOptions {
    std::string path;  // empty = stdout
    std::string format = "json";
    bool no_timestamp = false;
};

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void emit(const OutputOptions& opt, json payload, const dhz::ExperimentReport* report = nullptr) {
    if (!opt.no_timestamp) payload["timestamp"] = iso_timestamp();
    std::string text;
    if (opt.format == "csv" && report != nullptr) {
        text = dhz::to_csv(*report);
    } else {
        text = payload.dump(2);
        text += "\n";
    }
    if (opt.path.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(opt.path);
        if (!file) throw dhz::UsageError("cannot open output path: " + opt.path);
        file << text;
    }
}

dhz::Sequence load_sequence(const std::string& inline_json, const std::string& file) {
    if (!inline_json.empty() && !file.empty())
        throw dhz::UsageError("give either --seq or --in, not both");
    if (inline_json.empty() && file.empty())
        throw dhz::UsageError("a sequence is required (--seq or --in)");
    json j;
    try {
        if (!inline_json.empty()) {
            j = json::parse(inline_json);
        } else {
            std::ifstream in(file);
            if (!in) throw dhz::UsageError("cannot open input file: " + file);
            in >> j;
        }
    } catch (const json::parse_error& e) {
        throw dhz::UsageError(std::string("malformed sequence JSON: ") + e.what());
    }
    return dhz::sequence_from_json(j);
}

int report_exit(const dhz::ExperimentReport& r) { return r.verdict ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Hardy space operator toolkit"};
    app.fallthrough();

    OutputOptions out;
    int threads = 0;
    app.add_option("--out", out.path, "write the report to this path instead of stdout");
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--no-timestamp", out.no_timestamp, "omit the timestamp field");
    app.add_option("--threads", threads, "cap OpenMP parallelism (default: DISCRETE_HARDY_THREADS)");

    std::string seq_inline, seq_file;
    long long j_point = 0, w_lo = 0, w_hi = 0, J = 0;
    bool has_window = false;
    double gamma = 0.0, alpha = 0.0, beta = 0.0, p = 1.0, q = 0.0, tol = 1e-10;
    std::uint64_t seed = 1;

    const CLI::callback_t window_parser = [&](const CLI::results_t& res) {
        if (res.size() != 2) return false;
        w_lo = std::stoll(res[0]);
        w_hi = std::stoll(res[1]);
        has_window = true;
        return true;
    };

    // ---- apply ----
    auto* apply = app.add_subcommand("apply", "apply an operator at a point or over a window");
    apply->add_option("--seq", seq_inline, "inline sequence JSON");
    apply->add_option("--in", seq_file, "sequence JSON file");
    auto* opt_j = apply->add_option("--j", j_point, "single evaluation point");
    apply->add_option("--window", window_parser, "output window LO HI")->expected(2);

    auto* ap_h = apply->add_subcommand("H", "discrete Hilbert transform");
    auto* ap_m = apply->add_subcommand("M", "centered maximal operator");
    auto* ap_r = apply->add_subcommand("riesz", "discrete Riesz potential");
    ap_r->add_option("--gamma", gamma, "order in (0,1)")->required();
    auto* ap_f = apply->add_subcommand("frac", "two-singularity fractional operator");
    ap_f->add_option("--gamma", gamma, "gamma in [0,1)")->required();
    auto* ap_f_alpha = ap_f->add_option("--alpha", alpha, "left exponent (default symmetric)");
    ap_f->add_option("--beta", beta, "right exponent")->needs(ap_f_alpha);
    apply->require_subcommand(1);

    // ---- norm ----
    auto* norm = app.add_subcommand("norm", "lp norm or Hardy quasi-norm enclosure");
    bool hardy = false;
    norm->add_option("--seq", seq_inline, "inline sequence JSON");
    norm->add_option("--in", seq_file, "sequence JSON file");
    norm->add_option("--p", p, "exponent")->required();
    norm->add_flag("--hardy", hardy, "compute the Hardy quasi-norm enclosure");
    norm->add_option("--J", J, "truncation point for the transform sum");

    // ---- atom ----
    auto* atom = app.add_subcommand("atom", "atom validation / generation / projection");
    double atom_q = std::numeric_limits<double>::infinity();
    int atom_d = 0, proj_L = 0;
    long long n0 = 0, m = 1;
    auto* at_v = atom->add_subcommand("validate", "check the three atom conditions");
    at_v->add_option("--seq", seq_inline);
    at_v->add_option("--in", seq_file);
    at_v->add_option("--p", p)->required();
    at_v->add_option("--q", atom_q, "size-condition exponent (default inf)");
    at_v->add_option("--d", atom_d);
    at_v->add_option("--center", n0);
    at_v->add_option("--m", m)->required();
    at_v->add_option("--tol", tol);
    auto* at_r = atom->add_subcommand("random", "draw a seeded random atom");
    at_r->add_option("--p", p)->required();
    at_r->add_option("--q", atom_q);
    at_r->add_option("--d", atom_d);
    at_r->add_option("--center", n0);
    at_r->add_option("--m", m)->required();
    at_r->add_option("--seed", seed);
    auto* at_p = atom->add_subcommand("project", "nearest moment-free sequence on a window");
    at_p->add_option("--seq", seq_inline);
    at_p->add_option("--in", seq_file);
    at_p->add_option("--L", proj_L)->required();
    at_p->add_option("--window", window_parser, "projection window LO HI")->expected(2)->required();
    atom->require_subcommand(1);

    // ---- counterexample ----
    auto* ce = app.add_subcommand("counterexample", "certified unboundedness example");
    auto* ce_sum = ce->add_subcommand("sum", "enclosure of the image's total sum");
    ce_sum->add_option("--gamma", gamma)->required();
    ce_sum->add_option("--J", J)->required();
    auto* ce_chain = ce->add_subcommand("chain", "verify the negativity inequality chain");
    ce_chain->add_option("--gamma", gamma)->required();
    auto* ce_eps = ce->add_subcommand("epsilon", "bisection enclosure of the g = h root");
    ce_eps->add_option("--tol", tol);
    auto* ce_cert = ce->add_subcommand("certify", "assemble the unboundedness certificate");
    ce_cert->add_option("--gamma", gamma)->required();
    ce_cert->add_option("--p", p)->required();
    auto* ce_cert_q = ce_cert->add_option("--q", q, "target exponent; must satisfy 1/q = 1/p - gamma");
    ce_cert->add_option("--J", J)->required();
    auto* ce_scan = ce->add_subcommand("scan", "sign of the total sum across a gamma grid");
    std::vector<double> grid;
    ce_scan->add_option("--grid", grid, "gamma values");
    ce_scan->add_option("--J", J)->required();
    ce->require_subcommand(1);

    // ---- lab ----
    auto* lab = app.add_subcommand("lab", "empirical inequality checks");
    long long trials = 1000, max_support = 64, trials_per_m = 50;
    std::vector<long long> m_values{1, 4, 16, 64, 256};
    std::vector<long long> J_list;
    std::vector<double> alphas;
    double lab_q = 1.5;
    long long j0 = 1;
    auto* lb_hi = lab->add_subcommand("hilbert-ineq", "quadratic-form inequality on random data");
    lb_hi->add_option("--trials", trials);
    lb_hi->add_option("--max-support", max_support);
    lb_hi->add_option("--seed", seed);
    auto* lb_hlp = lab->add_subcommand("hlp", "bilinear-form constant stability");
    lb_hlp->add_option("--p", p)->required();
    lb_hlp->add_option("--q", lab_q)->required();
    lb_hlp->add_option("--trials", trials);
    lb_hlp->add_option("--seed", seed);
    auto* lb_inv = lab->add_subcommand("involution", "H(Hb) = b up to truncation");
    lb_inv->add_option("--seq", seq_inline);
    lb_inv->add_option("--in", seq_file);
    lb_inv->add_option("--J", J)->required();
    auto* lb_wt = lab->add_subcommand("weak-type", "maximal level-set counts");
    lb_wt->add_option("--seq", seq_inline);
    lb_wt->add_option("--in", seq_file);
    lb_wt->add_option("--alphas", alphas, "levels")->required();
    lb_wt->add_option("--window", window_parser, "window LO HI")->expected(2);
    auto* lb_dom = lab->add_subcommand("domination", "three-region pointwise estimates");
    lb_dom->add_option("--seq", seq_inline);
    lb_dom->add_option("--in", seq_file);
    lb_dom->add_option("--j0", j0)->required();
    lb_dom->add_option("--alpha", alpha)->required();
    lb_dom->add_option("--beta", beta)->required();
    lb_dom->add_option("--p", p);
    auto* lb_sweep = lab->add_subcommand("atom-sweep", "uniformity of atom image norms");
    lb_sweep->add_option("--p", p)->required();
    lb_sweep->add_option("--gamma", gamma)->required();
    lb_sweep->add_option("--m-values", m_values);
    lb_sweep->add_option("--trials-per-m", trials_per_m);
    lb_sweep->add_option("--seed", seed);
    auto* lb_unb = lab->add_subcommand("unbounded-demo", "divergence of the standard examples");
    lb_unb->add_option("--gamma", gamma)->required();
    lb_unb->add_option("--J-list", J_list)->required();
    lab->require_subcommand(1);

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "direct vs fast path throughput");
    std::vector<long long> sizes{1024, 2048, 4096, 8192, 16384, 32768, 65536};
    int repeats = 2;
    bench->add_option("--sizes", sizes);
    bench->add_option("--repeats", repeats);

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (threads <= 0) {
            if (const char* env = std::getenv("DISCRETE_HARDY_THREADS")) threads = std::atoi(env);
        }
        if (threads > 0) omp_set_num_threads(threads);

        if (apply->parsed()) {
            const dhz::Sequence b = load_sequence(seq_inline, seq_file);
            if (!has_window && opt_j->count() == 0) throw dhz::UsageError("apply needs --j or --window");
            if (has_window && w_hi < w_lo) throw dhz::UsageError("window must satisfy LO <= HI");
            json result;
            auto run_op = [&](auto&& f, const char* name) {
                result["operator"] = name;
                if (has_window) {
                    result["window"] = {w_lo, w_hi};
                    json vals = json::array();
                    for (long long jj = w_lo; jj <= w_hi; ++jj) vals.push_back(f(jj));
                    result["values"] = vals;
                } else {
                    result["j"] = j_point;
                    result["value"] = f(j_point);
                }
            };
            if (ap_h->parsed()) run_op([&](long long jj) { return dhz::hilbert_apply(b, jj); }, "H");
            if (ap_m->parsed()) run_op([&](long long jj) { return dhz::maximal_apply(b, jj); }, "M");
            if (ap_r->parsed())
                run_op([&](long long jj) { return dhz::riesz_apply(b, gamma, jj); }, "riesz");
            if (ap_f->parsed()) {
                const dhz::OperatorParams params =
                    ap_f_alpha->count() ? dhz::OperatorParams(gamma, alpha, beta)
                                        : dhz::OperatorParams::symmetric(gamma);
                run_op([&](long long jj) { return dhz::fractional_apply(b, params, jj); }, "frac");
            }
            emit(out, result);
            return 0;
        }

        if (norm->parsed()) {
            const dhz::Sequence b = load_sequence(seq_inline, seq_file);
            json result;
            if (hardy) {
                if (J <= 0) throw dhz::UsageError("--hardy requires --J");
                const auto r = dhz::hardy_quasinorm(b, p, J);
                result["p"] = p;
                result["J"] = J;
                result["diverged"] = r.diverged;
                if (r.diverged) {
                    result["witness_moment"] = r.witness_moment;
                } else {
                    result["enclosure"] = dhz::to_json(r.value);
                }
            } else {
                result["p"] = p;
                result["value"] = dhz::lp_norm(b, p);
            }
            emit(out, result);
            return 0;
        }

        if (atom->parsed()) {
            json result;
            if (at_v->parsed()) {
                const dhz::Sequence a = load_sequence(seq_inline, seq_file);
                const dhz::AtomSpec spec(p, atom_q, atom_d, n0, m);
                const dhz::AtomReport rep = dhz::validate_atom(a, spec, tol);
                emit(out, dhz::to_json(rep));
                return rep.verdict() ? 0 : 1;
            }
            if (at_r->parsed()) {
                const dhz::AtomSpec spec(p, atom_q, atom_d, n0, m);
                result["atom"] = dhz::to_json(dhz::random_atom(spec, seed));
                result["seed"] = seed;
                emit(out, result);
                return 0;
            }
            const dhz::Sequence b = load_sequence(seq_inline, seq_file);
            result["projection"] = dhz::to_json(dhz::nearest_moment_free(b, proj_L, w_lo, w_hi));
            emit(out, result);
            return 0;
        }

        if (ce->parsed()) {
            if (ce_sum->parsed()) {
                const dhz::Enclosure e = dhz::total_sum_enclosure(gamma, J);
                json result = {{"gamma", gamma}, {"J", J}, {"enclosure", dhz::to_json(e)}};
                emit(out, result);
                return e.excludes_zero() ? 0 : 3;
            }
            if (ce_chain->parsed()) {
                const auto rep = dhz::chain_check(gamma);
                emit(out, dhz::to_json(rep), &rep);
                return report_exit(rep);
            }
            if (ce_eps->parsed()) {
                const dhz::Enclosure e = dhz::epsilon_root(tol);
                json result = {{"tolerance", tol}, {"enclosure", dhz::to_json(e)}};
                emit(out, result);
                return 0;
            }
            if (ce_cert->parsed()) {
                if (ce_cert_q->count() && std::abs(1.0 / q - (1.0 / p - gamma)) > 1e-9)
                    throw dhz::UsageError("certify: 1/q = 1/p - gamma violated");
                const auto cert = dhz::certify_unbounded(gamma, p, J);
                emit(out, dhz::to_json(cert));
                return cert.conclusion ? 0 : 1;
            }
            const auto rep = dhz::sign_scan(grid, J);
            emit(out, dhz::to_json(rep), &rep);
            return rep.verdict ? 0 : 3;
        }

        if (lab->parsed()) {
            dhz::ExperimentReport rep;
            if (lb_hi->parsed()) {
                rep = dhz::hilbert_inequality_check(trials, max_support, seed);
            } else if (lb_hlp->parsed()) {
                rep = dhz::hlp_inequality_check(p, lab_q, trials, seed);
            } else if (lb_inv->parsed()) {
                rep = dhz::involution_check(load_sequence(seq_inline, seq_file), J);
            } else if (lb_wt->parsed()) {
                const dhz::Sequence b = load_sequence(seq_inline, seq_file);
                if (!has_window && !b.is_zero()) {
                    w_lo = b.first();
                    w_hi = b.last();
                }
                rep = dhz::weak_type_check(b, alphas, w_lo, w_hi);
            } else if (lb_dom->parsed()) {
                const dhz::Sequence b = load_sequence(seq_inline, seq_file);
                rep = dhz::pointwise_domination_check(b, j0, dhz::OperatorParams(0.0, alpha, beta), p);
            } else if (lb_sweep->parsed()) {
                rep = dhz::atom_image_sweep(p, gamma, m_values, trials_per_m, seed);
            } else {
                rep = dhz::unbounded_examples_demo(gamma, J_list);
            }
            emit(out, dhz::to_json(rep), &rep);
            return report_exit(rep);
        }

        // bench
        if (sizes.empty()) throw dhz::UsageError("at least one size required");
        std::vector<std::size_t> zsizes;
        for (long long s : sizes) zsizes.push_back(static_cast<std::size_t>(s));
        const auto rep = dhz::throughput_benchmark(zsizes, repeats);
        emit(out, dhz::to_json(rep), &rep);
        return report_exit(rep);
    } catch (const dhz::InconclusiveEnclosure& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const dhz::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
