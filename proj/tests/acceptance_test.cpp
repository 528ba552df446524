// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nearring/enumerator.hpp"
#include "nearring/io.hpp"
#include "witness_oracle.hpp"

using namespace nearring;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    int code;
    std::string out;
};

Outcome cli(const std::string& args) {
    const std::string cmd = std::string("'") + NEARRING_CLI + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::string counts_line(const CensusCounts& c) {
    std::ostringstream s;
    s << "total " << c.total << " / identity " << c.with_identity << " / zero-symmetric " << c.zero_symmetric
      << " / semidistributive " << c.semidistributive << " / distributive " << c.distributive;
    return s.str();
}

std::string elements(ElementSet s) {
    std::string out = "{";
    for (int x : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
}

struct Criterion {
    int id;
    std::string title;
    std::function<bool(std::ostream& detail)> run;
};

const fs::path kScratch = fs::temp_directory_path() / ("nearring_acceptance_" + std::to_string(::getpid()));

// Shared order <= 8 sweep for criteria 5 and 8.
const std::vector<std::pair<std::string, CensusSuiteResult>>& sweep() {
    static const auto results = [] {
        std::vector<std::pair<std::string, CensusSuiteResult>> out;
        for (const auto& spec : named_groups_up_to(8))
            out.emplace_back(spec, census_suite(SearchSpec{build_group(spec), {}, true, 2}));
        return out;
    }();
    return results;
}

bool s3_census(std::ostream& d) {
    const auto t = Clock::now();
    const FiniteGroup g = build_group("S3");
    const CensusResult c = census_serial(SearchSpec{g, {}, true, 1});
    const double secs = seconds_since(t);
    d << counts_line(c.counts) << "; " << secs << " s single-threaded";
    d << "; mirrored convention: " << counts_line(mirrored_counts(c, g));
    const Outcome o = cli("census S3 --workers 1 --out '" + (kScratch / "c1.jsonl").string() + "'");
    const bool cli_ok = o.code == 0 && o.out.find(counts_line(c.counts)) != std::string::npos;
    if (!cli_ok) d << "; CLI output mismatch";
    return c.counts.total == 39 && c.counts.semidistributive == 4 && c.counts.distributive == 2 && secs < 60 && cli_ok;
}

bool oracle_equivalence(std::ostream& d) {
    const auto t = Clock::now();
    bool ok = true;
    const std::array<std::uint64_t, 3> expect = {1, 3, 5};
    for (int k = 0; k < 3; ++k) {
        const std::string spec = "Z" + std::to_string(k + 1);
        const FiniteGroup g = build_group(spec);
        const CensusResult a = brute_force_oracle(g);
        const CensusResult b = census_serial(SearchSpec{g, {}, true, 1});
        const bool same = a.counts == b.counts && a.representatives == b.representatives;
        ok = ok && same && a.counts.total == expect[k];
        d << spec << " " << a.counts.total << (same ? "=" : "!=") << b.counts.total << "; ";
    }
    const double secs = seconds_since(t);
    d << secs << " s";
    return ok && secs < 5;
}

bool s3_example_check(std::ostream& d) {
    const Nearring r = parse_nearring(cli("example s3-example").out);
    const PropertyFlags f = r.flags();
    const ElementSet dist = distributive_elements(r);
    const ElementSet ann = annihilator(regular_module(r));

    // Direct scans of the table.
    const FiniteGroup& g = r.group();
    ElementSet dist_scan, ann_scan;
    for (int t = 0; t < r.order(); ++t) {
        bool distributes = true, kills = true;
        for (int a = 0; a < r.order(); ++a) {
            kills = kills && r.mul(a, t) == 0;
            for (int b = 0; b < r.order(); ++b)
                distributes = distributes && r.mul(g.add(a, b), t) == g.add(r.mul(a, t), r.mul(b, t));
        }
        if (distributes) dist_scan.insert(t);
        if (kills) ann_scan.insert(t);
    }
    const ElementSet expect = ElementSet::of({0, 1, 2});
    d << "zero-symmetric " << f.zero_symmetric << ", semidistributive " << f.semidistributive << ", distributive "
      << f.distributive << ", identity " << f.has_identity << "; distributive elements " << elements(dist)
      << "; annihilator " << elements(ann);
    return r.axioms_verified() && f.zero_symmetric && f.semidistributive && !f.distributive && !f.has_identity &&
           dist == expect && dist_scan == expect && ann == expect && ann_scan == expect;
}

bool map_remark(std::ostream& d) {
    const Nearring r = builtin("map-z2");
    int witness = -1;
    for (int s = 0; s < r.order() && witness < 0; ++s)
        if (element_order(r.group(), r.mul(0, s)) == 2) witness = s;
    d << "semidistributive " << r.flags().semidistributive << ", distributive " << r.flags().distributive;
    if (witness >= 0) d << "; 0*s has order 2 at s=" << witness;
    return r.flags().semidistributive && !r.flags().distributive && witness >= 0;
}

bool soundness_sweep(std::ostream& d) {
    const auto t = Clock::now();
    SuiteTally total;
    for (const auto& [spec, res] : sweep())
        for (const auto& rep : res.reports) total.add(rep);
    const double secs = seconds_since(t);
    int failed = 0;
    for (const auto& [id, tally] : total.per_check) failed += tally.failed;
    d << total.instances << " instances over " << sweep().size() << " groups, " << failed << " failing verdicts; applicable:";
    bool nonvacuous = true;
    for (const auto& id : check_ids()) {
        const int a = total.per_check[id].applicable;
        d << " " << id << "=" << a;
        if (id == "abelian" || id == "exponent" || id == "p_ideals" || id == "odd_distributive" || id == "no_order2")
            nonvacuous = nonvacuous && a > 0;
    }
    d << "; " << secs << " s";
    return failed == 0 && total.failing_instances == 0 && nonvacuous && secs < 600;
}

bool fault_injection(std::ostream& d) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(NEARRING_CORPUS_DIR))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::set<std::string> covered;
    bool ok = true;
    for (const auto& path : files) {
        const Nearring r = parse_nearring_file(path, false);
        const std::string target = r.meta().at("target");
        const Outcome o = cli("lemmas --format json '" + path.string() + "'");
        bool genuine = false;
        if (o.code == 1) {
            const json report = json::parse(o.out);
            for (const auto& v : report["verdicts"]) {
                if (v["check_id"] != target || !v.contains("witness")) continue;
                Witness w;
                w.law = v["witness"]["law"];
                for (const auto& [k, b] : v["witness"]["bindings"].items()) w.bindings.emplace_back(k, b.get<int>());
                w.lhs = v["witness"]["lhs"];
                w.rhs = v["witness"]["rhs"];
                if (v["witness"].contains("set")) w.set = v["witness"]["set"].get<std::vector<int>>();
                genuine = testing::WitnessOracle(r.group().table(), r.mul_table()).genuine(target, w);
            }
        }
        if (genuine) covered.insert(target);
        ok = ok && genuine;
        if (!genuine) d << path.filename().string() << " exit " << o.code << " not re-verified; ";
    }
    const bool all_checks = covered == std::set<std::string>(check_ids().begin(), check_ids().end());
    d << covered.size() << "/" << check_ids().size() << " checks fail with re-verified witnesses";
    return ok && all_checks;
}

bool determinism(std::ostream& d) {
    bool ok = true;
    for (const char* spec : {"S3", "Z8"}) {
        std::string reference;
        int files = 0;
        for (int run = 0; run < 2; ++run)
            for (int w : {1, 2, 8}) {
                const fs::path out = kScratch / (std::string(spec) + "_" + std::to_string(run) + "_" + std::to_string(w));
                const Outcome o = cli(std::string("census ") + spec + " --workers " + std::to_string(w) + " --out '" +
                                      out.string() + "'");
                const std::string bytes = slurp(out);
                if (o.code != 0 || bytes.empty()) ok = false;
                if (files++ == 0) reference = bytes;
                ok = ok && bytes == reference;
            }
        d << spec << " " << files << " catalogs of " << reference.size() << " bytes; ";
    }
    d << (ok ? "identical" : "differ");
    return ok;
}

bool exponent_at_scale(std::ostream& d) {
    int instances = 0, units_checked = 0, exceptions = 0;
    for (const auto& [spec, res] : sweep()) {
        const FiniteGroup g = build_group(spec);
        int exp = 1;
        for (int x = 0; x < g.order(); ++x) exp = std::lcm(exp, element_order(g, x));
        for (const auto& e : res.census.representatives) {
            const auto i = find_identity(e.mul);
            if (!i) continue;
            ++instances;
            if (element_order(g, *i) != exp) ++exceptions;
            for (int u = 0; u < g.order(); ++u) {
                bool unit = false;
                for (int v = 0; v < g.order(); ++v) unit = unit || (e.mul(u, v) == *i && e.mul(v, u) == *i);
                if (!unit) continue;
                ++units_checked;
                if (element_order(g, u) != exp) ++exceptions;
            }
        }
    }
    d << instances << " instances with identity, " << units_checked << " units, " << exceptions << " exceptions";
    return instances > 0 && exceptions == 0;
}

}  // namespace

int main() {
    fs::create_directories(kScratch);
    const std::vector<Criterion> criteria = {
        {1, "S3 census reproduces 39/4/2", s3_census},
        {2, "search agrees with exhaustive oracle on Z1, Z2, Z3", oracle_equivalence},
        {3, "worked S3 example: flags, distributive elements, annihilator", s3_example_check},
        {4, "map-z2 semidistributive, not distributive, 0*s of order 2", map_remark},
        {5, "theory suite sound over all groups of order <= 8", soundness_sweep},
        {6, "fault corpus: exit 1 with genuine witnesses", fault_injection},
        {7, "catalogs byte-identical across runs and worker counts", determinism},
        {8, "exponent equals additive order of identity and units", exponent_at_scale},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
        }
        failures += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- " << detail.str()
                  << std::endl;
    }
    fs::remove_all(kScratch);
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
