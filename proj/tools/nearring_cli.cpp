// nearring: build, check and enumerate finite (left) nearrings.
//
// Exit codes: 0 success / every applicable check holds, 1 a check produced a verified
// counterexample (or oracle mismatch), 2 input or usage error.

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nearring/checks.hpp"
#include "nearring/enumerator.hpp"
#include "nearring/io.hpp"

namespace {

using namespace nearring;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kInputError = 2;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string set_text(const FiniteGroup& g, ElementSet s) {
    std::string out = "{";
    bool first = true;
    for (int x : s.members()) {
        out += (first ? "" : ", ") + g.name(x);
        first = false;
    }
    return out + "}";
}

std::string counts_line(const CensusCounts& c) {
    std::ostringstream os;
    os << "total " << c.total << " / identity " << c.with_identity << " / zero-symmetric " << c.zero_symmetric
       << " / semidistributive " << c.semidistributive << " / distributive " << c.distributive;
    return os.str();
}

void print_report(const SuiteReport& rep, std::ostream& os) {
    os << "instance " << rep.instance << ": " << (rep.overall ? "PASS" : "FAIL") << "\n";
    if (!rep.axioms_hold) os << "  warning: table is not a nearring (" << rep.axiom_note << ")\n";
    for (const auto& v : rep.verdicts) {
        os << "  " << std::left << std::setw(18) << v.check_id;
        if (!v.applicable) {
            os << "n/a    (" << v.notes << ")\n";
            continue;
        }
        os << (v.holds ? "holds" : "FAILS");
        if (v.witness) {
            os << "  " << v.witness->law << " at";
            for (const auto& [k, val] : v.witness->bindings) os << " " << k << "=" << val;
            os << ": lhs " << v.witness->lhs;
            if (v.witness->rhs >= 0) {
                os << " != rhs " << v.witness->rhs;
            } else {
                os << " not in {";
                for (std::size_t i = 0; i < v.witness->set.size(); ++i) os << (i ? "," : "") << v.witness->set[i];
                os << "}";
            }
        } else if (!v.notes.empty()) {
            os << "  (" << v.notes << ")";
        }
        os << "\n";
    }
}

void print_tally(const SuiteTally& tally, std::ostream& os) {
    os << "instances " << tally.instances << ", failing " << tally.failing_instances << "\n";
    for (const auto& id : check_ids()) {
        const auto it = tally.per_check.find(id);
        const CheckTally t = it == tally.per_check.end() ? CheckTally{} : it->second;
        os << "  " << std::left << std::setw(18) << id << "applicable " << std::setw(6) << t.applicable << "failed "
           << t.failed << "\n";
    }
}

json tally_to_json(const SuiteTally& tally) {
    json per = json::object();
    for (const auto& [id, t] : tally.per_check) per[id] = {{"applicable", t.applicable}, {"failed", t.failed}};
    return {{"instances", tally.instances}, {"failing_instances", tally.failing_instances}, {"per_check", per}};
}

int report_exit(const SuiteReport& rep) {
    if (!rep.overall) return kCounterexample;
    return rep.axioms_hold ? kOk : kInputError;
}

struct Options {
    std::string target;
    std::vector<std::string> filters;
    bool no_iso = false;
    int workers = 1;
    std::string out;
    std::string format = "text";
    std::string census_spec;
    std::string catalog;
};

int cmd_census(const Options& o) {
    SearchSpec spec{build_group(o.target), {}, !o.no_iso, o.workers};
    for (const auto& f : o.filters) spec.filters.enable(f);
    const CensusResult r = census(spec);
    const std::string path = o.out.empty() ? o.target + ".catalog.jsonl" : o.out;
    write_catalog(path, r);
    if (o.format == "json") {
        json j{{"group", r.group_spec}, {"counts", counts_to_json(r.counts)}, {"iso_reduction", r.iso_reduction},
               {"filters", r.filters.names()}, {"catalog", path}, {"raw_tables", r.meta.raw_tables},
               {"nodes_visited", r.meta.nodes_visited}, {"workers", r.meta.workers},
               {"elapsed_seconds", r.meta.elapsed_seconds}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group " << r.group_spec << (r.iso_reduction ? " (isomorphism classes)" : " (raw tables)")
                  << "\n"
                  << counts_line(r.counts) << "\n"
                  << "raw tables " << r.meta.raw_tables << ", nodes " << r.meta.nodes_visited << ", workers "
                  << r.meta.workers << ", " << std::fixed << std::setprecision(3) << r.meta.elapsed_seconds << " s\n"
                  << "catalog written to " << path << "\n";
    }
    return kOk;
}

int cmd_check(const Options& o) {
    const Nearring r = parse_nearring_file(o.target);
    const PropertyFlags f = r.flags();
    const FiniteGroup& g = r.group();
    const ElementSet dist = distributive_elements(r);
    const auto ids = ideals(r);
    std::optional<ElementSet> u;
    if (r.identity()) u = units(r);
    if (o.format == "json") {
        json ideal_list = json::array();
        for (auto s : ids) ideal_list.push_back(s.members());
        json j{{"name", r.name()},
               {"group", group_to_json(g)},
               {"flags", flags_to_json(f)},
               {"identity", r.identity() ? json(int(*r.identity())) : json(nullptr)},
               {"units", u ? json(u->members()) : json(nullptr)},
               {"ideals", ideal_list},
               {"distributive_elements", dist.members()},
               {"simple", is_simple(r)}};
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << "nearring " << (r.name().empty() ? o.target : r.name()) << " on " << g.spec() << " (order "
              << g.order() << ")\n"
              << "zero-symmetric: " << yes_no(f.zero_symmetric) << ", semidistributive: " << yes_no(f.semidistributive)
              << ", distributive: " << yes_no(f.distributive)
              << ", identity: " << (r.identity() ? g.name(*r.identity()) : std::string("none")) << "\n"
              << "abelian addition: " << yes_no(f.abelian_addition) << "\n"
              << "units: " << (u ? set_text(g, *u) : std::string("n/a")) << "\n"
              << "distributive elements: " << set_text(g, dist) << "\n"
              << "ideals (" << ids.size() << "):";
    for (auto s : ids) std::cout << " " << set_text(g, s);
    std::cout << "\n";
    return kOk;
}

int cmd_lemmas(const Options& o) {
    const int sources = !o.target.empty() + !o.census_spec.empty() + !o.catalog.empty();
    if (sources != 1) throw InputError("lemmas needs exactly one of <file>, --census <groupspec>, --catalog <path>");
    if (!o.target.empty()) {
        const Nearring r = parse_nearring_file(o.target, false);
        const SuiteReport rep = run_suite(r, r.name().empty() ? o.target : r.name());
        if (o.format == "json") {
            std::cout << report_to_json(rep).dump(2) << "\n";
        } else {
            print_report(rep, std::cout);
        }
        return report_exit(rep);
    }

    SuiteTally tally;
    std::vector<SuiteReport> reports;
    if (!o.census_spec.empty()) {
        auto res = census_suite(SearchSpec{build_group(o.census_spec), {}, true, o.workers});
        reports = std::move(res.reports);
        tally = res.tally;
    } else {
        const CensusResult cat = read_catalog(o.catalog);
        const FiniteGroup g = build_group(cat.group_spec);
        for (std::size_t k = 0; k < cat.representatives.size(); ++k) {
            reports.push_back(run_suite(validate({g, cat.representatives[k].mul}), g.spec() + "#" + std::to_string(k)));
            tally.add(reports.back());
        }
    }
    if (o.format == "json") {
        json list = json::array();
        for (const auto& rep : reports) list.push_back(report_to_json(rep));
        std::cout << json{{"reports", list}, {"tally", tally_to_json(tally)},
                          {"overall", tally.all_pass() ? "pass" : "fail"}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& rep : reports)
            if (!rep.overall) print_report(rep, std::cout);
        print_tally(tally, std::cout);
        std::cout << "overall: " << (tally.all_pass() ? "pass" : "fail") << "\n";
    }
    return tally.all_pass() ? kOk : kCounterexample;
}

int cmd_example(const Options& o) {
    std::cout << serialize_nearring(builtin(o.target));
    return kOk;
}

int cmd_ideals(const Options& o) {
    const Nearring r = parse_nearring_file(o.target);
    const auto ids = ideals(r);
    if (o.format == "json") {
        json list = json::array();
        for (auto s : ids) list.push_back(s.members());
        std::cout << json{{"ideals", list}, {"simple", is_simple(r)}}.dump(2) << "\n";
        return kOk;
    }
    for (auto s : ids) std::cout << set_text(r.group(), s) << "\n";
    std::cout << ids.size() << " ideal(s); simple: " << yes_no(is_simple(r)) << "\n";
    return kOk;
}

int cmd_oracle(const Options& o) {
    const FiniteGroup g = build_group(o.target);
    const CensusResult brute = brute_force_oracle(g);
    const CensusResult searched = census(SearchSpec{g, {}, true, 1});
    const bool same_counts = brute.counts == searched.counts;
    const bool same_reps = brute.representatives == searched.representatives;
    std::cout << "oracle " << counts_line(brute.counts) << "\n"
              << "search " << counts_line(searched.counts) << "\n"
              << "raw nearring tables: oracle " << brute.meta.raw_tables << ", search " << searched.meta.raw_tables << "\n"
              << "counts " << (same_counts ? "match" : "DIFFER") << ", representatives "
              << (same_reps ? "match" : "DIFFER") << "\n";
    return same_counts && same_reps ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, check and enumerate finite nearrings"};
    app.require_subcommand(1);
    Options o;

    auto* census_cmd = app.add_subcommand("census", "Enumerate nearrings on a group up to isomorphism");
    census_cmd->add_option("groupspec", o.target, "Group spec, e.g. S3, Z2xZ2, D8, Q8")->required();
    census_cmd->add_option("--filter", o.filters, "identity | zero-symmetric | semidistributive | distributive");
    census_cmd->add_flag("--no-iso", o.no_iso, "Count raw tables instead of isomorphism classes");
    census_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    census_cmd->add_option("--out", o.out, "Catalog path (default <groupspec>.catalog.jsonl)");
    census_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* check_cmd = app.add_subcommand("check", "Validate a nearring file and print its properties");
    check_cmd->add_option("file", o.target, "Nearring file ('-' for stdin)")->required();
    check_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* lemmas_cmd = app.add_subcommand("lemmas", "Run the theorem checks");
    lemmas_cmd->add_option("file", o.target, "Nearring file ('-' for stdin)");
    lemmas_cmd->add_option("--census", o.census_spec, "Run over every class of a census");
    lemmas_cmd->add_option("--catalog", o.catalog, "Run over a previously written catalog");
    lemmas_cmd->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
    lemmas_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* example_cmd = app.add_subcommand("example", "Print a builtin nearring");
    example_cmd->add_option("name", o.target, "s3-example | map-z2 | zero:<groupspec> | ring:Z<n>")->required();

    auto* ideals_cmd = app.add_subcommand("ideals", "List the ideals of a nearring file");
    ideals_cmd->add_option("file", o.target)->required();
    ideals_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "Compare the search against brute force (order <= 3)");
    oracle_cmd->add_option("groupspec", o.target)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (census_cmd->parsed()) return cmd_census(o);
        if (check_cmd->parsed()) return cmd_check(o);
        if (lemmas_cmd->parsed()) return cmd_lemmas(o);
        if (example_cmd->parsed()) return cmd_example(o);
        if (ideals_cmd->parsed()) return cmd_ideals(o);
        if (oracle_cmd->parsed()) return cmd_oracle(o);
    } catch (const AxiomViolation& e) {
        std::cerr << "axiom violation: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
