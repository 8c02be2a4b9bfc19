#include "motzhankel/verify.hpp"

#include "motzhankel/closedform.hpp"
#include "motzhankel/connection.hpp"
#include "motzhankel/errors.hpp"
#include "motzhankel/hankel.hpp"
#include "motzhankel/hypergeom.hpp"
#include "motzhankel/paths.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace motzhankel {

namespace {

using Task = std::function<Cell()>;
using Params = std::vector<std::pair<std::string, long>>;

Cell make_cell(std::string check, Params params, bool ok, std::string lhs, std::string rhs, std::string diff) {
    Cell c;
    c.check = std::move(check);
    c.params = std::move(params);
    c.status = ok ? "pass" : "fail";
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.diff = ok ? "0" : std::move(diff);
    return c;
}

Cell poly_cell(std::string check, Params params, const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return make_cell(std::move(check), std::move(params), lhs == rhs, lhs.to_string(), rhs.to_string(),
                     (lhs - rhs).to_string());
}

Cell identity_cell(std::string check, Params params, const IdentityCheck& r) {
    return make_cell(std::move(check), std::move(params), r.holds, r.lhs, r.rhs, r.diff);
}

Cell int_cell(std::string check, Params params, const Integer& lhs, const Integer& rhs) {
    return make_cell(std::move(check), std::move(params), lhs == rhs, lhs.get_str(), rhs.get_str(),
                     Integer(lhs - rhs).get_str());
}

const std::vector<std::string> kTheorems{"T1", "T2", "T3", "T4"};
const std::vector<std::string> kCorollaries{"C13", "C14", "C15", "C16", "C17", "C18", "T19"};

void add_theorem_tasks(std::vector<Task>& tasks, const std::string& id, const SweepConfig& cfg) {
    const TheoremId tid = parse_theorem_id(id);
    const bool prefix = tid == TheoremId::T3 || tid == TheoremId::T4;
    const int shift = (tid == TheoremId::T2 || tid == TheoremId::T4) ? 1 : 0;
    for (int k = 0; k <= cfg.k_max; ++k)
        for (int n = 1; n <= cfg.n_max; ++n)
            tasks.push_back([=] {
                const PolyMatrix m = prefix ? prefix_hankel(n, k, shift)
                                            : build_hankel(HankelSpec{static_cast<std::size_t>(n), shift,
                                                                      [k](int t) { return gf_restricted(t, 0, k); }});
                Cell c = poly_cell(id, {{"n", n}, {"k", k}, {"shift", shift}}, det_bareiss(m), theorem_rhs(tid, n, k));
                c.note = "case line " + std::to_string(resolve_theorem_case(tid, n, k).case_index);
                return c;
            });
}

// The determinant against the specialized theorem decides the status. A
// disagreeing literal case table is reported as an expected mismatch.
void add_corollary_tasks(std::vector<Task>& tasks, const std::string& id, const SweepConfig& cfg) {
    const CorollaryId cid = parse_corollary_id(id);
    for (int k = 0; k <= cfg.k_max; ++k)
        for (int n = 1; n <= cfg.n_max; ++n)
            tasks.push_back([=] {
                IntMatrix m(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) m(i, j) = corollary_lhs_entry(cid, i, j, k);
                const Integer det = det_bareiss(m);
                const CorollaryEvaluation ev = evaluate_corollary(cid, n, k);
                Cell c = int_cell(id, {{"n", n}, {"k", k}}, det, ev.specialized);
                std::string note;
                if (!ev.agree)
                    note = "case table line " + std::to_string(ev.literal_case.case_index) + " gives " +
                           ev.literal.get_str();
                if (const auto printed = corollary_printed_special(cid, n, k); printed && *printed != det)
                    note += std::string(note.empty() ? "" : "; ") + "printed special-case table gives " +
                            printed->get_str();
                if (!note.empty()) {
                    c.note = note + ", determinant is " + det.get_str();
                    if (c.status == "pass") c.status = "expected_mismatch";
                }
                return c;
            });
}

template <typename Gen>
Rational random_rational(Gen& gen, int num_range, int max_den) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational q(num(gen), den(gen));
    q.canonicalize();
    return q;
}

void add_random_tasks(std::vector<Task>& tasks, const std::string& id, const SweepConfig& cfg) {
    std::mt19937_64 gen(cfg.seed);
    if (id == "chu") {
        std::uniform_int_distribution<unsigned> nd(0, 12);
        for (int idx = 0; idx < 200; ++idx) {
            for (;;) {
                const Rational a = random_rational(gen, 20, 6);
                const Rational c = random_rational(gen, 20, 6);
                const unsigned N = nd(gen);
                try {
                    const bool ok = check_chu_vandermonde(a, N, c);
                    tasks.push_back([=] {
                        return make_cell("chu", {{"index", idx}, {"N", N}}, ok, "2F1[" + a.get_str() + ",-" +
                                         std::to_string(N) + ";" + c.get_str() + ";1]", "(c-a)_N/(c)_N", ok ? "0" : "nonzero");
                    });
                    break;
                } catch (const LowerParamZeroDivision&) {
                }
            }
        }
    } else if (id == "lemma10") {
        std::uniform_int_distribution<unsigned> nd(1, 10);
        for (int idx = 0; idx < 100; ++idx) {
            for (;;) {
                const unsigned n = nd(gen);
                const Rational A = random_rational(gen, 20, 5);
                const Rational B = random_rational(gen, 20, 5);
                try {
                    const Rational lhs = eval_terminating(lemma10_series(n, A, B));
                    const Rational rhs = lemma10_rhs(n, A, B);
                    tasks.push_back([=] {
                        Cell c = make_cell("lemma10", {{"index", idx}, {"n", n}}, lhs == rhs, lhs.get_str(),
                                           rhs.get_str(), Rational(lhs - rhs).get_str());
                        c.note = "A=" + A.get_str() + " B=" + B.get_str();
                        return c;
                    });
                    break;
                } catch (const LowerParamZeroDivision&) {
                }
            }
        }
    } else if (id == "contiguous") {
        std::uniform_int_distribution<int> nd(2, 8), td(1, 5), hd(0, 6);
        const Rational half(1, 2);
        for (int idx = 0; idx < 50; ++idx) {
            for (;;) {
                const int n = nd(gen), t = td(gen), l = hd(gen), k = hd(gen);
                if (l == k || l - k - n == 0) continue;
                Rational b1(n * t, l - k - n);
                b1.canonicalize();
                if (b1 == 0) continue;
                const std::vector<Rational> upper{Rational(-t), Rational(-l + k - t), b1 + 1, Rational(-n) * half,
                                                  half - Rational(n) * half};
                const std::vector<Rational> lower{b1, Rational(1 - n), half - Rational(l) * half + Rational(k) * half - t,
                                                  1 - Rational(l) * half + Rational(k) * half - t};
                try {
                    const bool ok = check_contiguous_5f4(upper, lower);
                    tasks.push_back([=] {
                        return make_cell("contiguous", {{"index", idx}, {"n", n}, {"t", t}, {"l", l}, {"k", k}}, ok,
                                         "5F4", "contiguous combination", ok ? "0" : "nonzero");
                    });
                    break;
                } catch (const LowerParamZeroDivision&) {
                } catch (const PreconditionViolation&) {
                }
            }
        }
    }
}

std::vector<Task> build_tasks(const SweepConfig& cfg) {
    std::vector<Task> tasks;
    const int N = cfg.n_max, K = cfg.k_max;
    for (const auto& id : cfg.checks) {
        if (std::find(kTheorems.begin(), kTheorems.end(), id) != kTheorems.end()) {
            add_theorem_tasks(tasks, id, cfg);
        } else if (std::find(kCorollaries.begin(), kCorollaries.end(), id) != kCorollaries.end()) {
            add_corollary_tasks(tasks, id, cfg);
        } else if (id == "lemma5") {
            for (int n = 2; n <= N; ++n)
                for (int j = 0; j <= n - 2; ++j)
                    tasks.push_back([=] { return identity_cell(id, {{"n", n}, {"j", j}}, last_row_identity(n, j)); });
        } else if (id == "lemma6") {
            for (int n = 1; n <= N; ++n)
                tasks.push_back([=] { return poly_cell(id, {{"n", n}}, det_bareiss(connection_matrix(n)), LaurentPoly(1)); });
        } else if (id == "lemma7") {
            for (int n = 1; n <= N; ++n)
                tasks.push_back([=] { return identity_cell(id, {{"n", n}}, lemma7_identity(n)); });
        } else if (id == "lemma8") {
            for (int m = 0; m <= N; ++m)
                for (int k = 0; k <= K; ++k)
                    tasks.push_back([=] { return identity_cell(id, {{"m", m}, {"k", k}}, lemma8_identity(m, k)); });
        } else if (id == "lemma9") {
            for (int n = 1; n <= N; ++n)
                for (int m = 0; m <= n; ++m)
                    for (int k = 0; k <= K; ++k)
                        tasks.push_back([=] {
                            return identity_cell(id, {{"m", m}, {"n", n}, {"k", k}}, lemma9_identity(m, n, k));
                        });
        } else if (id == "path_cutting") {
            for (int i = 0; i <= N; ++i)
                for (int j = 0; i + j <= N; ++j)
                    for (int k = 0; k <= K; ++k)
                        tasks.push_back([=] {
                            return identity_cell(id, {{"i", i}, {"j", j}, {"k", k}}, path_cutting_identity(i, j, k));
                        });
        } else if (id == "lemma11" || id == "lemma12" || id == "factorization") {
            std::vector<int> shifts = id == "lemma11" ? std::vector<int>{0} : id == "lemma12" ? std::vector<int>{1} : cfg.shifts;
            for (int s : shifts)
                for (int n = 1; n <= N; ++n)
                    for (int k = 0; k <= K; ++k)
                        tasks.push_back([=] {
                            return identity_cell(id, {{"n", n}, {"k", k}, {"shift", s}}, factorization_identity(n, k, s));
                        });
        } else if (id == "symmetry") {
            for (int n = 0; n <= N; ++n)
                for (int k = 0; k <= n; ++k)
                    for (int l = 0; l <= n; ++l)
                        tasks.push_back([=] {
                            return poly_cell(id, {{"n", n}, {"k", k}, {"l", l}}, gf_restricted(n, k, l),
                                             down_weight_pow(0).shifted(k - l, k - l) * gf_restricted(n, l, k));
                        });
        } else if (id == "oracle") {
            for (int n = 0; n <= N; ++n)
                for (int k = -n; k <= n; ++k)
                    for (int l = -n; l <= n; ++l)
                        tasks.push_back([=] {
                            Params p{{"n", n}, {"k", k}, {"l", l}};
                            const LaurentPoly closed = gf_unrestricted(n, k, l);
                            if (k < 0 || l < 0) return poly_cell(id, p, closed, gf_dp(n, k, l, false));
                            const LaurentPoly restricted = gf_restricted(n, k, l);
                            const bool ok = closed == gf_dp(n, k, l, false) && restricted == gf_dp(n, k, l, true) &&
                                            restricted == gf_restricted_reflection(n, k, l);
                            return make_cell(id, p, ok, restricted.to_string(), gf_dp(n, k, l, true).to_string(),
                                             ok ? "0" : "closed form, dp and reflection disagree");
                        });
        } else if (id == "specialization") {
            for (SpecPoint pt : {SpecPoint::I, SpecPoint::Omega, SpecPoint::One, SpecPoint::MinusOne})
                for (int n = 0; n <= N; ++n)
                    for (int k = 0; k <= K; ++k)
                        tasks.push_back([=] {
                            const auto [xv, yv] = spec_point_values(pt);
                            const QuadElem v = lp_eval_quad(prefix_gf(n, k), xv, yv);
                            const Integer closed = spec_prefix_int(pt, n, k);
                            Cell c = make_cell(id, {{"n", n}, {"k", k}}, v == Rational(closed), v.to_string(),
                                               closed.get_str(), "specialized value differs");
                            c.note = std::string("point ") + std::string(to_string(pt));
                            return c;
                        });
        } else if (id == "chu" || id == "lemma10" || id == "contiguous") {
            add_random_tasks(tasks, id, cfg);
        } else {
            throw std::invalid_argument("unknown check '" + id + "'");
        }
    }
    return tasks;
}

nlohmann::json config_json(const SweepConfig& cfg) {
    return {{"n_max", cfg.n_max},   {"k_max", cfg.k_max},     {"shifts", cfg.shifts},
            {"checks", cfg.checks}, {"parallel", cfg.parallel}, {"seed", cfg.seed}};
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "json" || name == "JSON") return OutputFormat::Json;
    if (name == "csv" || name == "CSV") return OutputFormat::Csv;
    if (name == "text" || name == "TEXT") return OutputFormat::Text;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

std::size_t Report::count(const std::string& status) const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [&](const Cell& c) { return c.status == status; }));
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v = kTheorems;
        v.insert(v.end(), kCorollaries.begin(), kCorollaries.end());
        for (const char* s : {"lemma5", "lemma6", "lemma7", "lemma8", "lemma9", "path_cutting", "lemma11", "lemma12",
                              "factorization", "symmetry", "oracle", "specialization", "chu", "lemma10", "contiguous"})
            v.emplace_back(s);
        return v;
    }();
    return ids;
}

bool is_symbolic_check(const std::string& id) {
    return std::find(kCorollaries.begin(), kCorollaries.end(), id) == kCorollaries.end() && id != "chu" &&
           id != "lemma10" && id != "contiguous";
}

void validate(const SweepConfig& cfg) {
    if (cfg.checks.empty()) throw std::invalid_argument("no checks selected");
    if (cfg.n_max < 1) throw std::invalid_argument("n_max must be positive");
    if (cfg.k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
    for (int s : cfg.shifts)
        if (s != 0 && s != 1) throw std::invalid_argument("shifts must be 0 or 1");
    const auto& ids = known_checks();
    for (const auto& id : cfg.checks) {
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw std::invalid_argument("unknown check '" + id + "'");
        if (cfg.unsafe) continue;
        const int cap = is_symbolic_check(id) ? cfg.n_max_symbolic : cfg.n_max_integer;
        if (cfg.n_max > cap)
            throw std::invalid_argument("n_max " + std::to_string(cfg.n_max) + " exceeds the cap " +
                                        std::to_string(cap) + " for " + id + " (use --unsafe-n-max to override)");
    }
}

Report run_verify(const SweepConfig& cfg) {
    validate(cfg);
    const std::vector<Task> tasks = build_tasks(cfg);
    Report report;
    report.config = cfg;
    report.cells.resize(tasks.size());

    auto run_one = [&](std::size_t i) {
        try {
            report.cells[i] = tasks[i]();
        } catch (const std::exception& e) {
            Cell c;
            c.status = "fail";
            c.note = std::string("exception: ") + e.what();
            report.cells[i] = std::move(c);
        }
    };

    unsigned workers = cfg.workers ? cfg.workers : std::max(1U, std::thread::hardware_concurrency());
    if (!cfg.parallel || workers <= 1 || tasks.size() < 2) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
        return report;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) run_one(i);
        });
    for (auto& t : pool) t.join();
    return report;
}

std::string render(const Report& report, OutputFormat format) {
    std::ostringstream os;
    const std::size_t pass = report.count("pass"), fail = report.count("fail"), expected = report.count("expected_mismatch");
    switch (format) {
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["command"] = report.command;
            j["config"] = config_json(report.config);
            j["cells"] = nlohmann::ordered_json::array();
            for (const auto& c : report.cells) {
                nlohmann::ordered_json params = nlohmann::ordered_json::object();
                for (const auto& [k, v] : c.params) params[k] = v;
                nlohmann::ordered_json cell{{"check", c.check}, {"params", params}, {"status", c.status},
                                            {"lhs", c.lhs},     {"rhs", c.rhs},     {"diff", c.diff}};
                if (!c.note.empty()) cell["note"] = c.note;
                j["cells"].push_back(std::move(cell));
            }
            j["summary"] = {{"total", report.cells.size()}, {"pass", pass}, {"fail", fail},
                            {"expected_mismatch", expected}, {"ok", report.ok()}};
            os << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv: {
            auto quote = [](const std::string& s) {
                std::string out = "\"";
                for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                return out + "\"";
            };
            os << "check,params,status,lhs,rhs,diff,note\n";
            for (const auto& c : report.cells) {
                std::string params;
                for (const auto& [k, v] : c.params) params += (params.empty() ? "" : ";") + k + "=" + std::to_string(v);
                os << c.check << ',' << quote(params) << ',' << c.status << ',' << quote(c.lhs) << ',' << quote(c.rhs)
                   << ',' << quote(c.diff) << ',' << quote(c.note) << '\n';
            }
            break;
        }
        case OutputFormat::Text: {
            for (const auto& c : report.cells) {
                os << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "XMIS") << ' ' << c.check;
                for (const auto& [k, v] : c.params) os << ' ' << k << '=' << v;
                if (c.status != "pass") os << "  lhs=" << c.lhs << "  rhs=" << c.rhs << "  diff=" << c.diff;
                if (!c.note.empty() && c.status != "pass") os << "  (" << c.note << ')';
                os << '\n';
            }
            os << "summary: " << pass << " pass, " << fail << " fail, " << expected << " expected mismatch\n";
            break;
        }
    }
    return os.str();
}

}  // namespace motzhankel
