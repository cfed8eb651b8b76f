// quadclass: class groups of imaginary quadratic fields, exact bounded
// solving of x^2 + D = y^n, criterion checks and validation sweeps.
// Data goes to stdout as JSON lines (or CSV for sweeps), diagnostics to
// stderr. Exit codes: 0 ok, 1 counterexample found, 2 usage/domain error.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadclass/quadclass.hpp"

namespace {

using quadclass::CriterionId;
using quadclass::CriterionReport;
using quadclass::Integer;
using quadclass::JsonValue;
using quadclass::SweepConfig;
using quadclass::ValidationRecord;
using quadclass::Verdict;

Integer parse_integer(const std::string& s, const char* what) {
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw std::domain_error(std::string(what) + ": not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::domain_error(std::string(what) + ": not an integer: '" + s + "'");
    return Integer(s);
}

Integer env_or(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    return parse_integer(v, name);
}

void emit_line(const JsonValue& v) {
    const std::string line = v.dump();
    std::fwrite(line.data(), 1, line.size(), stdout);
    std::fputc('\n', stdout);
}

JsonValue solution_json(const quadclass::DiophSolution& s) {
    JsonValue o = JsonValue::object();
    o.set("x", s.x).set("y", s.y).set("n", s.n);
    return o;
}

JsonValue solutions_json(const std::vector<quadclass::DiophSolution>& sols) {
    JsonValue arr = JsonValue::array();
    for (const auto& s : sols) arr.push(solution_json(s));
    return arr;
}

JsonValue report_json(const CriterionReport& rep, Verdict verdict) {
    JsonValue o = JsonValue::object();
    o.set("criterion", quadclass::to_string(rep.id));
    JsonValue inputs = JsonValue::object();
    for (const auto& [k, v] : rep.inputs) inputs.set(k, v);
    o.set("inputs", std::move(inputs));
    o.set("hypotheses_hold", rep.hypotheses_hold);
    JsonValue detail = JsonValue::object();
    for (const auto& [k, v] : rep.hypothesis_detail) detail.set(k, v);
    o.set("hypothesis_detail", std::move(detail));
    o.set("claim", rep.claim);
    if (rep.claim_holds_empirically.has_value())
        o.set("claim_holds_empirically", *rep.claim_holds_empirically);
    JsonValue ev = JsonValue::object();
    if (rep.evidence.D) ev.set("D", *rep.evidence.D);
    if (rep.evidence.h) ev.set("h", *rep.evidence.h);
    if (rep.evidence.exponent) ev.set("exponent", *rep.evidence.exponent);
    if (rep.evidence.y_max) {
        ev.set("y_max", *rep.evidence.y_max);
        ev.set("solutions", solutions_json(rep.evidence.solutions));
    }
    if (rep.id == CriterionId::golden) ev.set("expected", solutions_json(rep.evidence.expected));
    o.set("evidence", std::move(ev));
    o.set("verdict", quadclass::to_string(verdict));
    return o;
}

// Flat row for one sweep record: inputs in declared order, derived D when it
// is not itself an input, then class-group invariants and search results.
JsonValue record_row(const ValidationRecord& rec) {
    JsonValue o = JsonValue::object();
    o.set("criterion", quadclass::to_string(rec.id));
    o.set("verdict", quadclass::to_string(rec.verdict));
    bool has_d_input = false;
    for (const auto& [k, v] : rec.inputs) {
        o.set(k, v);
        if (k == "D") has_d_input = true;
    }
    const auto& ev = rec.detail.evidence;
    if (!has_d_input && ev.D) o.set("D", *ev.D);
    if (ev.h) o.set("h", *ev.h);
    if (ev.exponent) o.set("exponent", *ev.exponent);
    if (rec.detail.claim_holds_empirically.has_value())
        o.set("claim_holds", *rec.detail.claim_holds_empirically);
    if (!ev.solutions.empty()) o.set("solutions", solutions_json(ev.solutions));
    if (rec.id == CriterionId::golden) o.set("expected", solutions_json(ev.expected));
    return o;
}

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols = {
        "criterion", "verdict", "D",        "n",          "p",         "x",       "n_max",
        "y_max",     "h",       "exponent", "claim_holds", "solutions", "expected"};
    return cols;
}

std::string solutions_csv(const std::vector<quadclass::DiophSolution>& sols) {
    std::string out;
    for (std::size_t i = 0; i < sols.size(); ++i) {
        if (i) out += ';';
        out += sols[i].x.str() + ":" + sols[i].y.str() + ":" + sols[i].n.str();
    }
    return out;
}

std::string record_csv(const ValidationRecord& rec) {
    std::map<std::string, std::string> cells;
    cells["criterion"] = quadclass::to_string(rec.id);
    cells["verdict"] = quadclass::to_string(rec.verdict);
    for (const auto& [k, v] : rec.inputs) cells[k] = v.str();
    const auto& ev = rec.detail.evidence;
    if (!cells.count("D") && ev.D) cells["D"] = ev.D->str();
    if (ev.h) cells["h"] = ev.h->str();
    if (ev.exponent) cells["exponent"] = ev.exponent->str();
    if (rec.detail.claim_holds_empirically.has_value())
        cells["claim_holds"] = *rec.detail.claim_holds_empirically ? "true" : "false";
    cells["solutions"] = solutions_csv(ev.solutions);
    if (rec.id == CriterionId::golden) cells["expected"] = solutions_csv(ev.expected);
    std::vector<std::string> row;
    for (const std::string& col : csv_columns())
        row.push_back(cells.count(col) ? cells[col] : "");
    return quadclass::csv_join(row);
}

int run_classnum(const Integer& D) {
    const auto cg = quadclass::class_group(D);
    JsonValue o = JsonValue::object();
    o.set("D", D).set("disc", cg.disc.value()).set("h", cg.h).set("exponent", cg.exponent);
    emit_line(o);
    return 0;
}

int run_classgroup(const Integer& D) {
    const auto cg = quadclass::class_group(D);
    const auto forms = quadclass::enumerate_reduced_forms(cg.disc);
    for (const auto& f : forms) {
        JsonValue o = JsonValue::object();
        o.set("a", f.a()).set("b", f.b()).set("c", f.c());
        o.set("order", quadclass::form_order(f));
        emit_line(o);
    }
    JsonValue summary = JsonValue::object();
    summary.set("D", D).set("disc", cg.disc.value()).set("h", cg.h).set("exponent", cg.exponent);
    emit_line(summary);
    return 0;
}

int run_solve(const Integer& D, const std::optional<Integer>& n, const Integer& n_max,
              const Integer& y_max, bool odd_only) {
    std::vector<quadclass::DiophSolution> sols;
    Integer n_min, n_hi;
    if (n.has_value()) {
        sols = quadclass::solve_general(D, *n, y_max);
        n_min = n_hi = *n;
    } else {
        sols = quadclass::solve_all_n(D, n_max, y_max, odd_only);
        n_min = odd_only ? 3 : 2;
        n_hi = n_max;
    }
    for (const auto& s : sols) emit_line(solution_json(s));
    JsonValue summary = JsonValue::object();
    summary.set("D", D)
        .set("n_min", n_min)
        .set("n_max", n_hi)
        .set("y_max", y_max)
        .set("odd_only", odd_only)
        .set("count", Integer(sols.size()));
    emit_line(summary);
    return 0;
}

int run_check(const std::string& criterion, const std::map<std::string, std::optional<Integer>>& in,
              const Integer& y_max) {
    auto need = [&](const char* key) -> const Integer& {
        const auto it = in.find(key);
        if (it == in.end() || !it->second.has_value())
            throw std::domain_error(std::string("check --criterion ") + criterion +
                                    " requires --" + key);
        return *it->second;
    };
    CriterionReport rep;
    if (criterion == "thm21") {
        rep = quadclass::thm21_insolvability(need("d"), need("n"), y_max);
    } else if (criterion == "cor22") {
        rep = quadclass::cor22_divisibility(need("d"), need("p"), y_max);
    } else if (criterion == "thm23") {
        rep = quadclass::thm23_check(need("x"), need("p"), need("n"));
    } else if (criterion == "cor24") {
        rep = quadclass::cor24_hypothesis(need("x"), need("y"), need("n"));
    } else {
        throw std::domain_error("unknown criterion: " + criterion);
    }
    const Verdict verdict = quadclass::verdict_of(rep);
    emit_line(report_json(rep, verdict));
    return verdict == Verdict::counterexample ? 1 : 0;
}

int run_sweep(const std::string& suite, const SweepConfig& cfg, const std::string& format) {
    if (suite != "thm21" && suite != "cor22" && suite != "thm23" && suite != "golden" &&
        suite != "all")
        throw std::domain_error("unknown suite: " + suite);
    std::vector<ValidationRecord> records;
    auto append = [&](std::vector<ValidationRecord> part) {
        records.insert(records.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
    };
    if (suite == "thm21" || suite == "all") append(quadclass::sweep_thm21(cfg));
    if (suite == "cor22" || suite == "all") append(quadclass::sweep_cor22(cfg));
    if (suite == "thm23" || suite == "all") append(quadclass::sweep_thm23(cfg));
    if (suite == "golden" || suite == "all") append(quadclass::golden_fixtures());

    std::map<Verdict, long long> counts;
    for (const auto& rec : records) ++counts[rec.verdict];

    if (format == "csv") {
        std::string header = quadclass::csv_join(csv_columns());
        std::fwrite(header.data(), 1, header.size(), stdout);
        std::fputc('\n', stdout);
        for (const auto& rec : records) {
            const std::string row = record_csv(rec);
            std::fwrite(row.data(), 1, row.size(), stdout);
            std::fputc('\n', stdout);
        }
    } else {
        for (const auto& rec : records) emit_line(record_row(rec));
    }

    JsonValue summary = JsonValue::object();
    summary.set("agree", counts[Verdict::agree])
        .set("counterexample", counts[Verdict::counterexample])
        .set("hypothesis_fail", counts[Verdict::hypothesis_fail])
        .set("inconclusive", counts[Verdict::inconclusive]);
    if (format == "csv") {
        // keep stdout pure CSV; the summary is still available on stderr
        const std::string line = summary.dump();
        std::fwrite(line.data(), 1, line.size(), stderr);
        std::fputc('\n', stderr);
    } else {
        emit_line(summary);
    }
    return counts[Verdict::counterexample] > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"class numbers of Q(sqrt(-D)) and the equation x^2 + D = y^n"};
    app.require_subcommand(1);

    std::string d_str, n_str, nmax_str, ymax_str, p_str, x_str, y_str;
    std::string criterion, suite = "all", format = "jsonl";
    std::vector<std::string> n_list;
    std::string dmin_str = "2", dmax_str = "200", pmax_str = "13", xmax_str = "20";
    bool odd_only = false;
    unsigned jobs = 1;

    auto* cmd_classnum = app.add_subcommand("classnum", "class number and exponent of Q(sqrt(-D))");
    cmd_classnum->add_option("D", d_str, "squarefree positive integer")->required();

    auto* cmd_classgroup =
        app.add_subcommand("classgroup", "reduced forms of Q(sqrt(-D)) with their orders");
    cmd_classgroup->add_option("D", d_str, "squarefree positive integer")->required();

    auto* cmd_solve = app.add_subcommand("solve", "solutions of x^2 + D = y^n with y <= y-max");
    cmd_solve->add_option("D", d_str, "positive integer")->required();
    auto* solve_n = cmd_solve->add_option("--n", n_str, "single exponent n >= 2");
    cmd_solve->add_option("--n-max", nmax_str, "search n up to this bound (default 19, env QUADCLASS_N_MAX)")
        ->excludes(solve_n);
    cmd_solve->add_option("--y-max", ymax_str, "y bound (default 100000, env QUADCLASS_Y_MAX)");
    cmd_solve->add_flag("--odd-only", odd_only, "restrict to odd n");

    auto* cmd_check = app.add_subcommand("check", "evaluate one criterion on one input");
    cmd_check->add_option("--criterion", criterion, "thm21|cor22|thm23|cor24")->required();
    cmd_check->add_option("--d", d_str, "D for thm21/cor22");
    cmd_check->add_option("--n", n_str, "odd exponent n > 1");
    cmd_check->add_option("--p", p_str, "prime");
    cmd_check->add_option("--x", x_str, "x (thm23) or x0 (cor24)");
    cmd_check->add_option("--y", y_str, "y0 (cor24)");
    cmd_check->add_option("--y-max", ymax_str, "search bound for empirical checks (default 10000)");

    auto* cmd_sweep = app.add_subcommand("sweep", "run a validation suite over a parameter grid");
    cmd_sweep->add_option("--suite", suite, "thm21|cor22|thm23|golden|all")->required();
    cmd_sweep->add_option("--d-min", dmin_str, "lower D bound (default 2)");
    cmd_sweep->add_option("--d-max", dmax_str, "upper D bound (default 200)");
    cmd_sweep->add_option("--n", n_list, "odd exponents (repeat or comma-separate; default 3,5,7)")
        ->delimiter(',');
    cmd_sweep->add_option("--p-max", pmax_str, "prime bound (default 13)");
    cmd_sweep->add_option("--x-max", xmax_str, "x bound (default 20)");
    cmd_sweep->add_option("--y-max", ymax_str, "search bound (default 10000, env QUADCLASS_Y_MAX)");
    cmd_sweep->add_option("--format", format, "jsonl|csv (default jsonl)");
    cmd_sweep->add_option("--jobs", jobs, "worker threads (default 1; output is order-independent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_classnum->parsed()) return run_classnum(parse_integer(d_str, "D"));
        if (cmd_classgroup->parsed()) return run_classgroup(parse_integer(d_str, "D"));
        if (cmd_solve->parsed()) {
            const Integer D = parse_integer(d_str, "D");
            std::optional<Integer> n;
            if (!n_str.empty()) n = parse_integer(n_str, "--n");
            const Integer n_max =
                nmax_str.empty() ? env_or("QUADCLASS_N_MAX", 19) : parse_integer(nmax_str, "--n-max");
            const Integer y_max =
                ymax_str.empty() ? env_or("QUADCLASS_Y_MAX", 100000) : parse_integer(ymax_str, "--y-max");
            return run_solve(D, n, n_max, y_max, odd_only);
        }
        if (cmd_check->parsed()) {
            std::map<std::string, std::optional<Integer>> in;
            auto opt = [](const std::string& s, const char* what) -> std::optional<Integer> {
                if (s.empty()) return std::nullopt;
                return parse_integer(s, what);
            };
            in["d"] = opt(d_str, "--d");
            in["n"] = opt(n_str, "--n");
            in["p"] = opt(p_str, "--p");
            in["x"] = opt(x_str, "--x");
            in["y"] = opt(y_str, "--y");
            const Integer y_max =
                ymax_str.empty() ? env_or("QUADCLASS_Y_MAX", 10000) : parse_integer(ymax_str, "--y-max");
            return run_check(criterion, in, y_max);
        }
        if (cmd_sweep->parsed()) {
            if (format != "jsonl" && format != "csv")
                throw std::domain_error("--format must be jsonl or csv");
            SweepConfig cfg;
            cfg.d_lo = parse_integer(dmin_str, "--d-min");
            cfg.d_hi = parse_integer(dmax_str, "--d-max");
            if (!n_list.empty()) {
                cfg.n_set.clear();
                for (const auto& s : n_list) cfg.n_set.push_back(parse_integer(s, "--n"));
            }
            cfg.p_max = parse_integer(pmax_str, "--p-max");
            cfg.x_max = parse_integer(xmax_str, "--x-max");
            cfg.y_max =
                ymax_str.empty() ? env_or("QUADCLASS_Y_MAX", 10000) : parse_integer(ymax_str, "--y-max");
            cfg.jobs = jobs;
            cfg.validate();
            return run_sweep(suite, cfg, format);
        }
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
    return 2;
}
