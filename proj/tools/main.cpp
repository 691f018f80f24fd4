#include "hitcalc/error.hpp"
#include "hitcalc/fixtures.hpp"
#include "hitcalc/hit_solver.hpp"
#include "hitcalc/relation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

using namespace hitcalc;

// Runs job(i) for every i with a small worker pool; results keep input order.
template <class Fn>
auto run_parallel(std::size_t count, Fn job) -> std::vector<decltype(job(std::size_t{}))>
{
    using Result = decltype(job(std::size_t{}));
    std::vector<Result> results(count);
    std::atomic<std::size_t> next{0};
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < count; i = next++)
                results[i] = job(i);
        }));
    for (auto& f : pool)
        f.get();
    return results;
}

int cmd_cohit(std::size_t k, std::uint64_t n, const std::string& json_path, bool q_r)
{
    const SolverOptions options;
    const HitReport report = cohit(k, n, options);
    std::cout << "k=" << report.vars << " degree=" << report.degree << " monomials=" << report.monomials
              << " hit_rank=" << report.hit_rank << " dimension=" << report.dimension << "\n";
    if (q_r) {
        const QrSplit split = qr_split(k, n, options);
        std::cout << "Q=" << split.q_dim << " R=" << split.r_dim << "\n";
        if (split.q_dim + split.r_dim != report.dimension) {
            std::cout << "Q + R does not add up to the total\n";
            return kFail;
        }
    }
    for (const Monomial& m : report.admissible)
        std::cout << to_string(m) << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out)
            throw Error("cannot write " + json_path);
        out << to_json(report) << "\n";
    }
    return kPass;
}

int cmd_is_hit(std::size_t k, const std::string& poly)
{
    const Polynomial f = parse_polynomial(poly);
    for (const Monomial& m : f.terms())
        if (m.vars() != k)
            throw DegreeError("term " + to_string(m) + " does not have " + std::to_string(k) + " variables");
    const bool hit = is_hit(f);
    std::cout << (hit ? "hit" : "not hit") << "\n";
    return kPass;
}

struct FileOutcome
{
    std::string text;
    bool failed = false;
    bool capacity = false;
};

// A malformed fixture counts as a failure of that file; capacity problems are reported apart.
template <class Fn>
FileOutcome guarded(const std::string& path, Fn body)
{
    try {
        return body();
    } catch (const CapacityError& e) {
        return {path + ": " + e.what() + "\n", false, true};
    } catch (const Error& e) {
        return {path + ": FAIL " + e.what() + "\n", true, false};
    }
}

int summarize(const std::vector<FileOutcome>& outcomes)
{
    bool failed = false, capacity = false;
    for (const auto& o : outcomes) {
        std::cout << o.text;
        failed = failed || o.failed;
        capacity = capacity || o.capacity;
    }
    return failed ? kFail : capacity ? kUsage : kPass;
}

int cmd_verify_relations(const std::vector<std::string>& paths)
{
    const auto outcomes = run_parallel(paths.size(), [&](std::size_t i) { return guarded(paths[i], [&] {
        FileOutcome o;
        std::ostringstream os;
        std::vector<std::string> warnings;
        const auto entries = load_relation_file(paths[i], &warnings);
        std::size_t exact = 0, mod_l = 0, fails = 0;
        for (const auto& w : warnings)
            os << paths[i] << ": warning: " << w << "\n";
        for (const auto& e : entries) {
            const RelationVerdict v = verify_relation(e.relation);
            if (v.status == RelationStatus::exact)
                ++exact;
            else if (v.status == RelationStatus::holds_mod_L)
                ++mod_l;
            else {
                ++fails;
                os << paths[i] << ":" << e.line << ": FAIL " << e.label << "\n  residual " << to_string(v.residual)
                   << "\n";
            }
        }
        os << paths[i] << ": " << entries.size() << " relations, " << exact << " exact, " << mod_l
           << " holds_mod_L, " << fails << " failed\n";
        o.text = os.str();
        o.failed = fails != 0;
        return o;
    }); });
    return summarize(outcomes);
}

int cmd_verify_table(const std::string& path, const std::string& tier)
{
    const auto rows = load_table(path);
    HitSpaceCache cache;
    const TableReport report =
        verify_table(rows, tier == "all" ? TierSelection::all : TierSelection::required, cache);
    for (const auto& r : report.rows) {
        std::cout << (r.status == RowStatus::pass ? "pass" : r.status == RowStatus::fail ? "FAIL" : "skipped") << "  "
                  << r.row.family << " s=" << (r.row.params.s ? std::to_string(*r.row.params.s) : "-")
                  << " t=" << (r.row.params.t ? std::to_string(*r.row.params.t) : "-")
                  << " u=" << (r.row.params.u ? std::to_string(*r.row.params.u) : "-") << " n=" << r.row.degree
                  << " expected=" << r.row.expected;
        if (r.status == RowStatus::skipped)
            std::cout << " (" << r.note << ")";
        else
            std::cout << " computed=" << r.computed;
        std::cout << "\n";
    }
    std::cout << report.passed << " passed, " << report.failed << " failed, " << report.skipped << " skipped\n";
    if (report.failed != 0)
        return kFail;
    return report.skipped != 0 ? kUsage : kPass;
}

int cmd_verify_basis(const std::vector<std::string>& paths)
{
    HitSpaceCache cache;
    const auto outcomes = run_parallel(paths.size(), [&](std::size_t i) { return guarded(paths[i], [&] {
        FileOutcome o;
        std::ostringstream os;
        const BasisFixture fix = load_basis(paths[i]);
        const BasisDiff diff = verify_basis(fix, cache);
        if (diff.match()) {
            os << paths[i] << ": match (k=" << fix.vars << ", n=" << fix.degree << ", " << fix.expected.size()
               << " monomials)\n";
        } else {
            o.failed = true;
            os << paths[i] << ": MISMATCH (k=" << fix.vars << ", n=" << fix.degree << ")\n";
            for (const Monomial& m : diff.missing)
                os << "  missing " << to_string(m) << "\n";
            for (const Monomial& m : diff.extra)
                os << "  extra   " << to_string(m) << "\n";
        }
        o.text = os.str();
        return o;
    }); });
    return summarize(outcomes);
}

int cmd_kameko(std::size_t k, std::uint64_t n)
{
    const KamekoResult r = kameko_check(k, n);
    std::cout << "kameko k=" << k << " n=" << n << ": " << to_string(r.status);
    if (r.status != KamekoStatus::not_applicable)
        std::cout << " (lower degree " << r.lower_degree << ", dimensions " << r.upper_dimension << " / "
                  << r.lower_dimension << ", image rank " << r.image_rank << ")";
    else
        std::cout << " (beta(" << n << ") = " << beta(n) << ")";
    std::cout << "\n";
    return r.status == KamekoStatus::fail ? kFail : kPass;
}

int cmd_filters(std::size_t k, std::uint64_t n)
{
    const HitSpace space = HitSpace::build(k, n);
    std::size_t wood_hits = 0, singer_hits = 0, hit = 0, contradictions = 0;
    for (const Monomial& m : space.universe().monomials()) {
        const bool w = wood_filter(m) == Verdict::hit;
        const bool s = singer_filter(m) == Verdict::hit;
        const bool h = space.is_hit(m);
        wood_hits += w;
        singer_hits += s;
        hit += h;
        const bool bad = (w || s) && !h;
        contradictions += bad;
        std::cout << to_string(m) << " wood=" << (w ? "hit" : "unknown") << " singer=" << (s ? "hit" : "unknown")
                  << " oracle=" << (h ? "hit" : "not-hit") << (bad ? "  CONTRADICTION" : "") << "\n";
    }
    std::cout << space.universe().size() << " monomials: " << hit << " hit, wood " << wood_hits << ", singer "
              << singer_hits << ", contradictions " << contradictions << "\n";
    return contradictions != 0 ? kFail : kPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hit problem calculator for the polynomial algebra over F_2"};
    app.require_subcommand(1);

    std::size_t k = 4;
    std::uint64_t n = 0;
    std::string json_path, poly, tier = "required";
    bool q_r = false;
    std::vector<std::string> paths;
    std::string table_path;

    auto* cohit_cmd = app.add_subcommand("cohit", "Dimension and admissible basis in degree N");
    cohit_cmd->add_option("--vars", k, "Number of variables")->required()->check(CLI::Range(1, int(kMaxVars)));
    cohit_cmd->add_option("--degree", n, "Degree")->required();
    cohit_cmd->add_option("--json", json_path, "Write the report as JSON");
    cohit_cmd->add_flag("--q-r", q_r, "Also report the Q/R split");

    auto* hit_cmd = app.add_subcommand("is-hit", "Decide whether a homogeneous polynomial is hit");
    hit_cmd->add_option("--vars", k, "Number of variables")->required()->check(CLI::Range(1, int(kMaxVars)));
    hit_cmd->add_option("--poly", poly, "Polynomial, e.g. \"(2,1)+(1,2)\"")->required();

    auto* rel_cmd = app.add_subcommand("verify-relations", "Check relation files");
    rel_cmd->add_option("paths", paths, "Relation files")->required()->check(CLI::ExistingFile);

    auto* table_cmd = app.add_subcommand("verify-table", "Compare dimensions with a table fixture");
    table_cmd->add_option("path", table_path, "Table CSV")->required()->check(CLI::ExistingFile);
    table_cmd->add_option("--tier", tier, "required or all")->check(CLI::IsMember({"required", "all"}));

    auto* basis_cmd = app.add_subcommand("verify-basis", "Compare admissible sets with basis fixtures");
    basis_cmd->add_option("paths", paths, "Basis JSON files")->required()->check(CLI::ExistingFile);

    auto* kameko_cmd = app.add_subcommand("kameko", "Check the Kameko isomorphism in degree N");
    kameko_cmd->add_option("--vars", k, "Number of variables")->required()->check(CLI::Range(1, int(kMaxVars)));
    kameko_cmd->add_option("--degree", n, "Degree")->required();

    auto* filters_cmd = app.add_subcommand("filters", "Wood and Singer verdicts against the exact hit test");
    filters_cmd->add_option("--vars", k, "Number of variables")->required()->check(CLI::Range(1, int(kMaxVars)));
    filters_cmd->add_option("--degree", n, "Degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*cohit_cmd)
            return cmd_cohit(k, n, json_path, q_r);
        if (*hit_cmd)
            return cmd_is_hit(k, poly);
        if (*rel_cmd)
            return cmd_verify_relations(paths);
        if (*table_cmd)
            return cmd_verify_table(table_path, tier);
        if (*basis_cmd)
            return cmd_verify_basis(paths);
        if (*kameko_cmd)
            return cmd_kameko(k, n);
        if (*filters_cmd)
            return cmd_filters(k, n);
    } catch (const CapacityError& e) {
        std::cerr << "hitcalc: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "hitcalc: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
