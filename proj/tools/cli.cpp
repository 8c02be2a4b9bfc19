#include "cli.hpp"

#include "motzhankel/errors.hpp"
#include "motzhankel/hankel.hpp"
#include "motzhankel/paths.hpp"
#include "motzhankel/sequences.hpp"
#include "motzhankel/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace motzhankel::cli {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct ToolConfig {
    int n_max_symbolic = 12;
    int n_max_integer = 24;
    unsigned parallel_workers = 0;
    OutputFormat output_format = OutputFormat::Json;
};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

ToolConfig load_config() {
    ToolConfig cfg;
    const char* path = std::getenv(kConfigEnv);
    if (path == nullptr || *path == '\0') return cfg;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(std::string("cannot open config file ") + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "n_max_symbolic") cfg.n_max_symbolic = std::stoi(value);
            else if (key == "n_max_integer") cfg.n_max_integer = std::stoi(value);
            else if (key == "parallel_workers") cfg.parallel_workers = static_cast<unsigned>(std::stoul(value));
            else if (key == "output_format") cfg.output_format = parse_output_format(value);
            else throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::logic_error& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

void check_cap(int n, int cap, bool unsafe, const char* what, std::ostream& err) {
    if (n <= cap) return;
    if (!unsafe)
        throw DimensionTooLarge(std::string(what) + " size " + std::to_string(n) + " exceeds the cap " +
                                std::to_string(cap) + " (use --unsafe-n-max to override)");
    err << "warning: " << what << " size " << n << " exceeds the cap " << cap << "; running anyway\n";
}

struct GfArgs {
    int n = 0, k = 0, l = 0;
    bool restricted = false;
    std::string method = "closed";
};

int cmd_gf(const GfArgs& a, std::ostream& out) {
    if (a.n < 0) throw PreconditionViolation("--n must be nonnegative");
    auto closed = [&] { return a.restricted ? gf_restricted(a.n, a.k, a.l) : gf_unrestricted(a.n, a.k, a.l); };
    auto dp = [&] { return gf_dp(a.n, a.k, a.l, a.restricted); };
    auto reflection = [&] {
        if (!a.restricted) throw std::invalid_argument("--method reflection needs --restricted");
        return gf_restricted_reflection(a.n, a.k, a.l);
    };
    if (a.method == "closed") out << closed() << '\n';
    else if (a.method == "dp") out << dp() << '\n';
    else if (a.method == "reflection") out << reflection() << '\n';
    else {
        const LaurentPoly c = closed(), d = dp();
        out << "closed: " << c << '\n' << "dp: " << d << '\n';
        bool agree = c == d;
        if (a.restricted) {
            const LaurentPoly r = reflection();
            out << "reflection: " << r << '\n';
            agree = agree && r == c;
        }
        out << (agree ? "agree" : "disagree") << '\n';
        return agree ? 0 : kExitFail;
    }
    return 0;
}

struct HankelArgs {
    std::string seq;
    int k = 0;
    int n = 1;
    int shift = 0;
    int transform = 0;
    std::string point = "symbolic";
    bool unsafe = false;
};

int cmd_hankel(const HankelArgs& a, const ToolConfig& cfg, std::ostream& out, std::ostream& err) {
    if (a.shift != 0 && a.shift != 1) throw std::invalid_argument("--shift must be 0 or 1");
    const SeqSpec seq = parse_seq_name(a.seq, a.k);
    const bool symbolic_point = a.point == "symbolic";
    const std::optional<SpecPoint> point =
        symbolic_point ? std::nullopt : std::optional<SpecPoint>(parse_spec_point(a.point));
    const bool symbolic = is_symbolic(seq) && symbolic_point;
    const int size = a.transform > 0 ? a.transform : a.n;
    if (size < 1) throw std::invalid_argument("matrix size must be positive");
    check_cap(size, symbolic ? cfg.n_max_symbolic : cfg.n_max_integer, a.unsafe,
              symbolic ? "symbolic Hankel" : "integer Hankel", err);

    if (symbolic) {
        auto det_of = [&](int m) {
            return det_bareiss(build_hankel(
                HankelSpec{static_cast<std::size_t>(m), a.shift, [&](int t) { return symbolic_element(seq, t); }}));
        };
        if (a.transform > 0)
            for (int m = 1; m <= a.transform; ++m) out << det_of(m) << '\n';
        else
            out << det_of(a.n) << '\n';
        return 0;
    }

    auto source = [&](int t) { return integer_element(seq, t, point); };
    if (a.transform > 0) {
        const auto dets = hankel_transform(source, static_cast<std::size_t>(a.transform), a.shift);
        for (std::size_t i = 0; i < dets.size(); ++i) out << (i ? " " : "") << dets[i];
        out << '\n';
    } else {
        out << det_bareiss(build_int_hankel(static_cast<std::size_t>(a.n), a.shift, source)) << '\n';
    }
    return 0;
}

struct SeqArgs {
    std::string name;
    int count = 0;
    bool json = false;
};

int cmd_seq(const SeqArgs& a, std::ostream& out) {
    if (a.count < 0) throw std::invalid_argument("--count must be nonnegative");
    const SeqSpec seq = parse_seq_name(a.name);
    if (is_symbolic(seq)) throw std::invalid_argument("sequence '" + a.name + "' is symbolic; use gf or hankel");
    std::vector<Integer> values;
    for (int t = 0; t < a.count; ++t) values.push_back(integer_element(seq, t));
    if (a.json) {
        std::string body;
        for (std::size_t i = 0; i < values.size(); ++i) body += (i ? ", " : "") + values[i].get_str();
        out << '[' << body << "]\n";
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
        out << '\n';
    }
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> theorems;
    int n_max = 6;
    int k_max = 2;
    std::vector<int> shifts{0, 1};
    bool parallel = false;
    unsigned workers = 0;
    std::string format;
    bool unsafe = false;
    std::uint64_t seed = 20240229;
};

int cmd_verify(const VerifyArgs& a, const ToolConfig& cfg, const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    SweepConfig sweep;
    for (const auto& t : a.theorems) {
        if (t == "all") sweep.checks = known_checks();
        else sweep.checks.push_back(t);
    }
    sweep.n_max = a.n_max;
    sweep.k_max = a.k_max;
    sweep.shifts = a.shifts;
    sweep.parallel = a.parallel || a.workers > 0 || cfg.parallel_workers > 0;
    sweep.workers = a.workers ? a.workers : cfg.parallel_workers;
    sweep.output_format = a.format.empty() ? cfg.output_format : parse_output_format(a.format);
    sweep.n_max_symbolic = cfg.n_max_symbolic;
    sweep.n_max_integer = cfg.n_max_integer;
    sweep.unsafe = a.unsafe;
    sweep.seed = a.seed;
    if (a.unsafe) {
        for (const auto& id : sweep.checks) {
            const int cap = is_symbolic_check(id) ? sweep.n_max_symbolic : sweep.n_max_integer;
            if (sweep.n_max > cap)
                err << "warning: n_max " << sweep.n_max << " exceeds the cap " << cap << " for " << id
                    << "; running anyway\n";
        }
    }
    Report report = run_verify(sweep);
    std::string command;
    for (const auto& s : args) command += (command.empty() ? "" : " ") + s;
    report.command = command;
    out << render(report, sweep.output_format);
    return report.ok() ? 0 : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hankel determinants of Motzkin path generating functions", "motzhankel"};
    app.require_subcommand(1);

    GfArgs gf;
    auto* gf_cmd = app.add_subcommand("gf", "Generating function of three-step paths");
    gf_cmd->add_option("--n", gf.n, "Number of steps")->required();
    gf_cmd->add_option("--k", gf.k, "Start height")->required();
    gf_cmd->add_option("--l", gf.l, "End height")->required();
    gf_cmd->add_flag("--restricted", gf.restricted, "Never go below height 0");
    gf_cmd->add_option("--method", gf.method, "closed, dp, reflection or all")
        ->check(CLI::IsMember({"closed", "dp", "reflection", "all"}));

    HankelArgs hk;
    auto* hk_cmd = app.add_subcommand("hankel", "Hankel determinant or Hankel transform");
    hk_cmd->add_option("--seq", hk.seq, "prefix, restricted0, mp, motzkin, catalan or corollary:<id>")->required();
    hk_cmd->add_option("--k", hk.k, "Start height");
    hk_cmd->add_option("--n", hk.n, "Matrix size");
    hk_cmd->add_option("--shift", hk.shift, "Hankel shift (0 or 1)");
    hk_cmd->add_option("--transform", hk.transform, "Print the determinants of sizes 1..N");
    hk_cmd->add_option("--point", hk.point, "i, omega, one, minus_one or symbolic")
        ->check(CLI::IsMember({"i", "omega", "one", "minus_one", "symbolic"}));
    hk_cmd->add_flag("--unsafe-n-max", hk.unsafe, "Ignore the size cap");

    VerifyArgs vf;
    auto* vf_cmd = app.add_subcommand("verify", "Sweep theorems and identities over a parameter grid");
    vf_cmd->add_option("--theorems", vf.theorems, "Comma separated check ids, or all")->required()->delimiter(',');
    vf_cmd->add_option("--n-max", vf.n_max, "Largest n");
    vf_cmd->add_option("--k-max", vf.k_max, "Largest k");
    vf_cmd->add_option("--shifts", vf.shifts, "Comma separated Hankel shifts")->delimiter(',');
    vf_cmd->add_flag("--parallel", vf.parallel, "Run cells on worker threads");
    vf_cmd->add_option("--workers", vf.workers, "Worker thread count");
    vf_cmd->add_option("--format", vf.format, "json, csv or text");
    vf_cmd->add_flag("--unsafe-n-max", vf.unsafe, "Ignore the n_max caps");
    vf_cmd->add_option("--seed", vf.seed, "Seed for the randomized checks");

    SeqArgs sq;
    auto* sq_cmd = app.add_subcommand("seq", "Print integer sequences");
    sq_cmd->add_option("--name", sq.name, "mp, motzkin, catalan, mp_k:<k> or band:<id>:<k>")->required();
    sq_cmd->add_option("--count", sq.count, "Number of terms")->required();
    sq_cmd->add_flag("--json", sq.json, "Print a JSON array");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : kExitUsage;
    }

    try {
        const ToolConfig cfg = load_config();
        if (*gf_cmd) return cmd_gf(gf, out);
        if (*hk_cmd) return cmd_hankel(hk, cfg, out, err);
        if (*vf_cmd) return cmd_verify(vf, cfg, args, out, err);
        if (*sq_cmd) return cmd_seq(sq, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace motzhankel::cli
