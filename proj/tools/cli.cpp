#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "speh/json.hpp"
#include "speh/speh.hpp"

namespace speh::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProblemArgs {
    int a = 0, b = 0, c = 0, d = 0, tau_rank = 1;

    void attach(CLI::App& cmd) {
        cmd.add_option("--a", a, "segment length of tau_a")->required();
        cmd.add_option("--b", b, "segment length of tau_b")->required();
        cmd.add_option("--c", c, "Speh height of the first factor")->required();
        cmd.add_option("--d", d, "Speh height of the second factor")->required();
        cmd.add_option("--tau-rank", tau_rank, "rank t of the supercuspidal tau (metadata)");
    }

    InductionProblem problem() const {
        if (a < 1 || b < 1 || c < 1 || d < 1 || tau_rank < 1) throw UsageError("parameters must be ≥ 1");
        return {a, b, c, d, tau_rank};
    }
};

std::string format_number(long double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.18Lg", x);
    return buf;
}

std::string coord(HalfInt w, bool s_coords) { return s_coords ? format_halved(w) : w.to_string(); }

std::string render_exceptional(const std::set<HalfInt>& points, bool s_coords) {
    std::string s = "{";
    bool first = true;
    for (HalfInt w : points) {
        if (w < HalfInt(0)) continue;
        if (!first) s += ", ";
        first = false;
        s += (points.contains(-w) ? "±" : "") + coord(w, s_coords);
    }
    return s + "}";
}

std::string render_mirrored(const LFactorProduct& x) {
    std::string s;
    for (auto [n, e] : x) {
        if (!s.empty()) s += "*";
        s += LFactorProduct::render_factor(n, e, "-w");
    }
    return s.empty() ? "1" : s;
}

int cmd_factors(const InductionProblem& p, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << factor_report(p).dump(2) << "\n";
        return ok;
    }
    const LFactorProduct a = alpha(p), b = beta(p);
    out << "alpha = " << a.to_string() << "\n";
    out << "beta = " << b.to_string() << "\n";
    out << "gamma = " << gamma(p).to_string() << "\n";
    out << "poles(alpha) = " << a.pole_part().to_string() << "\n";
    out << "poles(beta) = " << b.pole_part().to_string() << "\n";
    out << "common poles = " << common_pole_part(a, b).to_string() << "\n";
    if (p.c == p.d) {
        LocalCoefficient cp = c_psi(p);
        out << "c_psi = " << render_mirrored(cp.mirrored) << " / (" << cp.denominator.to_string() << ")\n";
        out << "poles(c_psi) = " << cp.poles().to_string() << "\n";
        out << "zeros(c_psi) = " << cp.zeros().to_string() << "\n";
    }
    return ok;
}

int cmd_classify(const InductionProblem& p, const std::string& format, bool s_coords, std::ostream& out) {
    const std::vector<PointVerdict> verdicts = classify(p);
    const std::set<HalfInt> exceptional = exceptional_points(p);
    if (format == "json") {
        Json j = {{"problem", p}, {"coords", s_coords ? "s" : "w"}, {"verdicts", verdicts}};
        Json ex = Json::array();
        for (HalfInt w : exceptional) ex.push_back(coord(w, s_coords));
        j["exceptional"] = ex;
        out << j.dump(2) << "\n";
        return ok;
    }
    char line[160];
    std::snprintf(line, sizeof line, "%8s %8s %5s %6s %11s %10s  %s\n", "w", "s", "beta", "alpha", "dual_alpha",
                  "reducible", "tier");
    out << line;
    for (const PointVerdict& v : verdicts) {
        std::snprintf(line, sizeof line, "%8s %8s %5d %6d %11d %10s  %s\n", v.point.to_string().c_str(),
                      format_halved(v.point).c_str(), v.beta_order, v.alpha_order, v.dual_alpha_order,
                      v.reducible ? "yes" : "no", std::string(to_string(v.tier)).c_str());
        out << line;
    }
    out << "exceptional set (" << (s_coords ? "s" : "w") << ") = " << render_exceptional(exceptional, s_coords)
        << "\n";
    return ok;
}

int cmd_matrix(const InductionProblem& p, const std::string& which, const std::string& format, std::ostream& out) {
    PoleMatrix m = pole_matrix(p, which == "beta" ? Which::beta : Which::alpha);
    out << (format == "latex" ? m.to_latex() : m.to_text());
    return ok;
}

int cmd_certify(const InductionProblem& p, const std::string& format, std::ostream& out) {
    HolomorphyCertificate discrete = certify_discrete(p);
    std::optional<HolomorphyCertificate> cuspidal;
    if (p.a == 1 && p.b == 1) cuspidal = certify_supercuspidal(p.c, p.d);
    const bool verdict = discrete.verdict && (!cuspidal || cuspidal->verdict);

    if (format == "text") {
        auto dump = [&](const HolomorphyCertificate& c, const char* label) {
            out << label << ": " << (c.verdict ? "PASS" : "FAIL") << "\n";
            for (const LedgerEntry& e : c.entries) {
                out << "  j2=" << e.j2 << " window=[" << e.window.lo << ", " << e.window.hi_exclusive
                    << ") floor=" << e.rank_one_floor;
                for (const NamedCheck& ch : e.checks) out << " " << ch.name << "=" << (ch.passed ? "ok" : "FAIL");
                out << "\n";
            }
            out << "  supercuspidal_distinctness=" << std::boolalpha << c.supercuspidal_distinctness
                << " alpha_matching=" << c.alpha_matching << "\n";
        };
        dump(discrete, "discrete");
        if (cuspidal) dump(*cuspidal, "supercuspidal");
        out << "verdict: " << (verdict ? "PASS" : "FAIL") << "\n";
    } else {
        Json j = {{"discrete", discrete}, {"supercuspidal", nullptr}, {"verdict", verdict}};
        if (cuspidal) j["supercuspidal"] = *cuspidal;
        out << j.dump(2) << "\n";
    }
    return verdict ? ok : failure;
}

int cmd_eval(const InductionProblem& p, double q, double s, const std::string& format, std::ostream& out,
             std::ostream& err) {
    if (!(q > 1.0)) throw UsageError("q must be > 1");
    const long double w = 2.0L * static_cast<long double>(s);
    const long double ql = q;
    std::map<std::string, long double> values;
    const std::pair<const char*, LFactorProduct> products[] = {{"alpha", alpha(p)}, {"beta", beta(p)}, {"gamma", gamma(p)}};
    for (const auto& [name, product] : products) {
        try {
            values[name] = product.evaluate(ql, w);
        } catch (const EvaluationAtPole& e) {
            err << name << ": " << e.what() << "\n";
            return failure;
        }
    }
    const long double quotient = values["alpha"] / values["beta"];
    const long double discrepancy = std::fabs(values["gamma"] - quotient) / std::fabs(quotient);
    if (format == "json") {
        Json j = {{"problem", p},
                  {"q", q},
                  {"s", s},
                  {"alpha", static_cast<double>(values["alpha"])},
                  {"beta", static_cast<double>(values["beta"])},
                  {"gamma", static_cast<double>(values["gamma"])},
                  {"alpha_over_beta", static_cast<double>(quotient)},
                  {"relative_discrepancy", static_cast<double>(discrepancy)}};
        out << j.dump(2) << "\n";
    } else {
        out << "alpha = " << format_number(values["alpha"]) << "\n";
        out << "beta = " << format_number(values["beta"]) << "\n";
        out << "gamma = " << format_number(values["gamma"]) << "\n";
        out << "alpha/beta = " << format_number(quotient) << "\n";
        out << "relative discrepancy = " << format_number(discrepancy) << "\n";
    }
    if (!(discrepancy < 1e-10L)) {
        err << "gamma and alpha/beta disagree beyond 1e-10\n";
        return failure;
    }
    return ok;
}

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text, Range fallback) {
    if (text.empty()) return fallback;
    Range r;
    char sep = 0;
    std::istringstream in(text);
    if (!(in >> r.lo >> sep >> r.hi) || sep != ':' || !in.eof()) throw UsageError("range must look like LO:HI");
    return r;
}

struct SweepArgs {
    int min = 1, max = 4;
    std::string range_a, range_b, range_c, range_d;
    std::string out = "-";
    std::string format = "csv";
    bool only_noncoprime = false;
    bool only_exceptional = false;
    unsigned threads = 0;
};

std::string csv_line(const SweepRow& r) {
    auto flag = [](bool x) { return x ? "true" : "false"; };
    std::ostringstream s;
    s << r.problem.a << "," << r.problem.b << "," << r.problem.c << "," << r.problem.d << ","
      << flag(r.coprime_closed) << "," << flag(r.coprime_brute) << "," << r.candidates << "," << r.theorem_only
      << "," << flag(r.certified);
    return s.str();
}

Json row_json(const SweepRow& r) {
    return {{"a", r.problem.a},
            {"b", r.problem.b},
            {"c", r.problem.c},
            {"d", r.problem.d},
            {"coprime_closed", r.coprime_closed},
            {"coprime_brute", r.coprime_brute},
            {"candidates", r.candidates},
            {"theorem_only", r.theorem_only},
            {"certified", r.certified}};
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    const Range fallback{args.min, args.max};
    const Range ranges[4] = {parse_range(args.range_a, fallback), parse_range(args.range_b, fallback),
                             parse_range(args.range_c, fallback), parse_range(args.range_d, fallback)};
    for (const Range& r : ranges) {
        if (r.lo > r.hi) throw UsageError("empty range");
        if (r.lo < 1 || r.hi > 64) throw UsageError("ranges must lie within [1, 64]");
    }

    std::vector<InductionProblem> problems;
    for (int a = ranges[0].lo; a <= ranges[0].hi; ++a)
        for (int b = ranges[1].lo; b <= ranges[1].hi; ++b)
            for (int c = ranges[2].lo; c <= ranges[2].hi; ++c)
                for (int d = ranges[3].lo; d <= ranges[3].hi; ++d) problems.emplace_back(a, b, c, d);

    // Rows are computed out of order but stored by index.
    std::vector<SweepRow> rows(problems.size());
    std::atomic<std::size_t> next{0};
    unsigned workers = args.threads ? args.threads : std::max(1u, std::thread::hardware_concurrency());
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < problems.size();) rows[i] = sweep_row(problems[i]);
            });
    }
    std::erase_if(rows, [&](const SweepRow& r) {
        return (args.only_noncoprime && r.coprime_closed) || (args.only_exceptional && r.theorem_only == 0);
    });

    std::ofstream file;
    std::ostream* sink = &out;
    if (args.out != "-") {
        file.open(args.out);
        if (!file) {
            err << "cannot open output file: " << args.out << "\n";
            return io;
        }
        sink = &file;
    }
    if (args.format == "json") {
        Json j = Json::array();
        for (const SweepRow& r : rows) j.push_back(row_json(r));
        *sink << j.dump(2) << "\n";
    } else {
        *sink << kSweepHeader << "\n";
        for (const SweepRow& r : rows) *sink << csv_line(r) << "\n";
    }
    sink->flush();
    if (!*sink) {
        err << "write failed: " << args.out << "\n";
        return io;
    }
    return ok;
}

}  // namespace

bool certified(const InductionProblem& p) {
    bool verdict = certify_discrete(p).verdict;
    if (p.a == 1 && p.b == 1) verdict = verdict && certify_supercuspidal(p.c, p.d).verdict;
    return verdict;
}

SweepRow sweep_row(const InductionProblem& p) {
    SweepRow r;
    r.problem = p;
    r.coprime_closed = coprime_closed_form(p);
    r.coprime_brute = coprime_bruteforce(p);
    r.candidates = static_cast<int>(candidate_points(p).distinct());
    r.theorem_only = static_cast<int>(exceptional_points(p).size());
    r.certified = certified(p);
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reducibility calculator for products of two Speh representations", "spehred"};
    app.require_subcommand(1);

    ProblemArgs problem;
    std::string format = "text";
    std::string coords = "w";
    std::string which = "alpha";
    std::string certify_format = "json";
    double q = 0.0, s = 0.0;
    SweepArgs sweep;

    auto* factors = app.add_subcommand("factors", "alpha, beta, gamma and their pole parts");
    problem.attach(*factors);
    factors->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* classify_cmd = app.add_subcommand("classify", "reducibility points with certification tiers");
    problem.attach(*classify_cmd);
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    classify_cmd->add_option("--coords", coords, "display points as w = 2s or as s")
        ->check(CLI::IsMember({"w", "s"}));

    auto* matrix = app.add_subcommand("matrix", "pole matrix with common poles flagged");
    problem.attach(*matrix);
    matrix->add_option("--which", which)->check(CLI::IsMember({"alpha", "beta"}));
    matrix->add_option("--format", format)->check(CLI::IsMember({"text", "latex"}));

    auto* certify = app.add_subcommand("certify", "replay the holomorphy inequalities; exit 0 iff they hold");
    problem.attach(*certify);
    certify->add_option("--format", certify_format)->check(CLI::IsMember({"text", "json"}));

    auto* eval = app.add_subcommand("eval", "numeric values of alpha, beta, gamma at (q, w = 2s)");
    problem.attach(*eval);
    eval->add_option("--q", q)->required();
    eval->add_option("--s", s)->required();
    eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "tabulate a parameter grid");
    sweep_cmd->add_option("--min", sweep.min, "lower bound for every parameter");
    sweep_cmd->add_option("--max", sweep.max, "upper bound for every parameter");
    sweep_cmd->add_option("--range-a", sweep.range_a, "LO:HI override for a");
    sweep_cmd->add_option("--range-b", sweep.range_b, "LO:HI override for b");
    sweep_cmd->add_option("--range-c", sweep.range_c, "LO:HI override for c");
    sweep_cmd->add_option("--range-d", sweep.range_d, "LO:HI override for d");
    sweep_cmd->add_option("--out", sweep.out, "output path, '-' for stdout");
    sweep_cmd->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_flag("--only-noncoprime", sweep.only_noncoprime);
    sweep_cmd->add_flag("--only-exceptional", sweep.only_exceptional);
    sweep_cmd->add_option("--threads", sweep.threads, "worker threads (0 = hardware)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    try {
        if (factors->parsed()) return cmd_factors(problem.problem(), format, out);
        if (classify_cmd->parsed()) return cmd_classify(problem.problem(), format, coords == "s", out);
        if (matrix->parsed()) return cmd_matrix(problem.problem(), which, format, out);
        if (certify->parsed()) return cmd_certify(problem.problem(), certify_format, out);
        if (eval->parsed()) return cmd_eval(problem.problem(), q, s, format, out, err);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

}  // namespace speh::cli
