#include "nearring/enumerator.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <set>

namespace nearring {

namespace {

std::uint64_t pack(const std::vector<Elem>& images) {
    std::uint64_t key = 0;
    for (std::size_t x = 0; x < images.size(); ++x) key |= static_cast<std::uint64_t>(images[x]) << (4 * x);
    return key;
}

constexpr std::size_t kMaxCompositionTable = std::size_t{1} << 22;

GroupMap inverse(const GroupMap& f) {
    GroupMap inv;
    inv.images.resize(f.images.size());
    for (std::size_t x = 0; x < f.images.size(); ++x) inv.images[f.images[x]] = static_cast<Elem>(x);
    return inv;
}

void finish(CensusResult& r) {
    std::sort(r.representatives.begin(), r.representatives.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.mul < b.mul; });
    r.representatives.erase(std::unique(r.representatives.begin(), r.representatives.end()), r.representatives.end());
    r.counts = {};
    for (const auto& e : r.representatives) r.counts.add(e.flags);
}

// Collects accepted tables of one (sub)tree.
class Collector {
public:
    Collector(const SearchSpec& spec, const std::vector<GroupMap>& auts, const std::vector<GroupMap>& invs)
        : spec_(spec), auts_(auts), invs_(invs) {}

    void operator()(const Table& t) {
        if (spec_.iso_reduction && !is_canonical(t, auts_, invs_)) return;
        if (auto v = find_axiom_violation(spec_.group, t)) {
            throw InvariantViolation(std::string("search produced a non-nearring: ") + v->what());
        }
        const PropertyFlags f = classify(spec_.group, t);
        if (spec_.filters.accepts(f)) entries.push_back({t, f});
    }

    std::vector<CensusEntry> entries;

private:
    const SearchSpec& spec_;
    const std::vector<GroupMap>& auts_;
    const std::vector<GroupMap>& invs_;
};

struct Automorphisms {
    std::vector<GroupMap> maps;
    std::vector<GroupMap> inverses;
};

Automorphisms automorphisms_of(const std::vector<GroupMap>& endos) {
    Automorphisms a;
    for (const auto& f : endos)
        if (f.is_bijective()) {
            a.maps.push_back(f);
            a.inverses.push_back(inverse(f));
        }
    return a;
}

}  // namespace

bool Filters::accepts(const PropertyFlags& f) const {
    return (!with_identity || f.has_identity) && (!zero_symmetric || f.zero_symmetric) &&
           (!semidistributive || f.semidistributive) && (!distributive || f.distributive);
}

std::vector<std::string> Filters::names() const {
    std::vector<std::string> out;
    if (with_identity) out.push_back("identity");
    if (zero_symmetric) out.push_back("zero-symmetric");
    if (semidistributive) out.push_back("semidistributive");
    if (distributive) out.push_back("distributive");
    return out;
}

void Filters::enable(const std::string& name) {
    if (name == "identity" || name == "with_identity") {
        with_identity = true;
    } else if (name == "zero-symmetric" || name == "zero_symmetric") {
        zero_symmetric = true;
    } else if (name == "semidistributive") {
        semidistributive = true;
    } else if (name == "distributive") {
        distributive = true;
    } else {
        throw InputError("unknown filter '" + name + "'");
    }
}

void CensusCounts::add(const PropertyFlags& f) {
    ++total;
    with_identity += f.has_identity;
    zero_symmetric += f.zero_symmetric;
    semidistributive += f.semidistributive;
    distributive += f.distributive;
}

struct CandidateSearch::State {
    std::vector<int> phi;
    std::vector<int> trail;
    std::vector<int> queue;
};

CandidateSearch::CandidateSearch(const FiniteGroup& g) : group_(g) {
    if (g.order() > kMaxOrder) throw InputError("groups above order 16 are not supported");
    endos_ = nearring::endomorphisms(g);
    for (std::size_t k = 0; k < endos_.size(); ++k) index_of_.emplace(pack(endos_[k].images), static_cast<int>(k));
    const std::size_t e = endos_.size();
    if (e * e <= kMaxCompositionTable) {
        comp_.resize(e * e);
        for (std::size_t f = 0; f < e; ++f)
            for (std::size_t h = 0; h < e; ++h)
                comp_[f * e + h] = index_of_.at(pack(compose(endos_[f], endos_[h]).images));
    }
}

int CandidateSearch::composition(int f, int g) const {
    if (!comp_.empty()) return comp_[static_cast<std::size_t>(f) * endos_.size() + g];
    const auto& a = endos_[f].images;
    const auto& b = endos_[g].images;
    std::uint64_t key = 0;
    for (std::size_t x = 0; x < b.size(); ++x) key |= static_cast<std::uint64_t>(a[b[x]]) << (4 * x);
    return index_of_.at(key);
}

bool CandidateSearch::assign(State& st, int x, int e) const {
    const int n = group_.order();
    st.phi[x] = e;
    st.trail.push_back(x);
    st.queue.clear();
    st.queue.push_back(x);
    while (!st.queue.empty()) {
        const int u = st.queue.back();
        st.queue.pop_back();
        for (int y = 0; y < n; ++y) {
            if (st.phi[y] < 0) continue;
            for (int side = 0; side < 2; ++side) {
                const int p = side == 0 ? u : y;
                const int q = side == 0 ? y : u;
                const int t = endos_[st.phi[p]].images[q];
                const int want = composition(st.phi[p], st.phi[q]);
                if (st.phi[t] < 0) {
                    st.phi[t] = want;
                    st.trail.push_back(t);
                    st.queue.push_back(t);
                } else if (st.phi[t] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

void CandidateSearch::descend(State& st, const Visitor& visit, SearchStats& stats) const {
    const int n = group_.order();
    int x = 0;
    while (x < n && st.phi[x] >= 0) ++x;
    if (x == n) {
        Table t(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t(a, b) = endos_[st.phi[a]].images[b];
        ++stats.candidates;
        visit(t);
        return;
    }
    const int e = root_branches();
    for (int k = 0; k < e; ++k) {
        ++stats.nodes;
        const std::size_t mark = st.trail.size();
        if (assign(st, x, k)) descend(st, visit, stats);
        while (st.trail.size() > mark) {
            st.phi[st.trail.back()] = -1;
            st.trail.pop_back();
        }
    }
}

void CandidateSearch::run(const Visitor& visit, SearchStats& stats) const {
    State st{std::vector<int>(group_.order(), -1), {}, {}};
    descend(st, visit, stats);
}

void CandidateSearch::run_branch(int branch, const Visitor& visit, SearchStats& stats) const {
    State st{std::vector<int>(group_.order(), -1), {}, {}};
    ++stats.nodes;
    if (assign(st, 0, branch)) descend(st, visit, stats);
}

std::vector<Table> candidate_tables(const FiniteGroup& g) {
    std::vector<Table> out;
    SearchStats stats;
    CandidateSearch(g).run([&](const Table& t) { out.push_back(t); }, stats);
    return out;
}

Table relabel(const Table& mul, const GroupMap& theta) {
    const int n = mul.size();
    std::vector<Elem> inv(n);
    for (int x = 0; x < n; ++x) inv[theta(x)] = static_cast<Elem>(x);
    Table t(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t(x, y) = inv[mul(theta(x), theta(y))];
    return t;
}

Table canonicalize(const Table& mul, const std::vector<GroupMap>& automorphisms) {
    Table best = mul;
    for (const auto& theta : automorphisms) best = std::min(best, relabel(mul, theta));
    return best;
}

Table canonicalize(const FiniteGroup& g, const Table& mul) { return canonicalize(mul, endomorphisms(g, true)); }

bool is_canonical(const Table& mul, const std::vector<GroupMap>& automorphisms, const std::vector<GroupMap>& inverses) {
    const int n = mul.size();
    for (std::size_t k = 0; k < automorphisms.size(); ++k) {
        const GroupMap& theta = automorphisms[k];
        const GroupMap& inv = inverses[k];
        for (int x = 0; x < n; ++x) {
            int y = 0;
            for (; y < n; ++y) {
                const Elem c = inv(mul(theta(x), theta(y)));
                if (c < mul(x, y)) return false;
                if (c > mul(x, y)) break;
            }
            if (y < n) break;
        }
    }
    return true;
}

CensusResult census_serial(const SearchSpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    const CandidateSearch search(spec.group);
    const Automorphisms auts = automorphisms_of(search.endomorphisms());
    Collector collect(spec, auts.maps, auts.inverses);
    SearchStats stats;
    search.run([&](const Table& t) { collect(t); }, stats);

    CensusResult r;
    r.group_spec = spec.group.spec();
    r.iso_reduction = spec.iso_reduction;
    r.filters = spec.filters;
    r.representatives = std::move(collect.entries);
    finish(r);
    r.meta.nodes_visited = stats.nodes;
    r.meta.raw_tables = stats.candidates;
    r.meta.workers = 1;
    r.meta.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

CensusResult census_parallel(const SearchSpec& spec) {
    if (spec.worker_count < 1) throw InputError("worker_count must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    const CandidateSearch search(spec.group);
    const Automorphisms auts = automorphisms_of(search.endomorphisms());
    const int branches = search.root_branches();

    std::vector<std::vector<CensusEntry>> per_branch(branches);
    std::vector<SearchStats> branch_stats(branches);
    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1) num_threads(spec.worker_count)
    for (int b = 0; b < branches; ++b) {
        try {
            Collector collect(spec, auts.maps, auts.inverses);
            search.run_branch(b, [&](const Table& t) { collect(t); }, branch_stats[b]);
            per_branch[b] = std::move(collect.entries);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    CensusResult r;
    r.group_spec = spec.group.spec();
    r.iso_reduction = spec.iso_reduction;
    r.filters = spec.filters;
    for (int b = 0; b < branches; ++b) {
        r.representatives.insert(r.representatives.end(), per_branch[b].begin(), per_branch[b].end());
        r.meta.nodes_visited += branch_stats[b].nodes;
        r.meta.raw_tables += branch_stats[b].candidates;
    }
    finish(r);
    r.meta.workers = spec.worker_count;
    r.meta.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

CensusResult census(const SearchSpec& spec) {
    if (spec.worker_count < 1) throw InputError("worker_count must be at least 1");
    return spec.worker_count == 1 ? census_serial(spec) : census_parallel(spec);
}

CensusResult brute_force_oracle(const FiniteGroup& g) {
    const int n = g.order();
    if (n > 3) throw InputError("brute-force oracle supports order <= 3 only, got " + std::to_string(n));
    const auto start = std::chrono::steady_clock::now();
    const Table& add = g.table();

    std::vector<std::vector<int>> autos;
    std::vector<int> perm(n);
    for (int x = 0; x < n; ++x) perm[x] = x;
    do {
        bool hom = perm[0] == 0;
        for (int x = 0; x < n && hom; ++x)
            for (int y = 0; y < n && hom; ++y) hom = perm[add(x, y)] == add(perm[x], perm[y]);
        if (hom) autos.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::vector<Elem>> classes;
    std::uint64_t valid = 0;
    std::vector<Elem> cells(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int x, int y) { return cells[static_cast<std::size_t>(x) * n + y]; };
    for (;;) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                for (int z = 0; z < n && ok; ++z)
                    ok = at(at(x, y), z) == at(x, at(y, z)) && at(x, add(y, z)) == add(at(x, y), at(x, z));
        if (ok) {
            ++valid;
            std::vector<Elem> best = cells;
            for (const auto& p : autos) {
                std::vector<int> inv(n);
                for (int x = 0; x < n; ++x) inv[p[x]] = x;
                std::vector<Elem> img(cells.size());
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) img[static_cast<std::size_t>(x) * n + y] = static_cast<Elem>(inv[at(p[x], p[y])]);
                best = std::min(best, img);
            }
            classes.insert(best);
        }
        std::size_t k = 0;
        while (k < cells.size() && ++cells[k] == n) cells[k++] = 0;
        if (k == cells.size()) break;
    }

    CensusResult r;
    r.group_spec = g.spec();
    r.iso_reduction = true;
    for (const auto& c : classes) {
        Table t(n, c);
        r.representatives.push_back({t, classify(g, t)});
    }
    finish(r);
    r.meta.raw_tables = valid;
    r.meta.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

CensusSuiteResult census_suite(const SearchSpec& spec) {
    CensusSuiteResult out;
    out.census = census(spec);
    const auto& reps = out.census.representatives;
    out.reports.resize(reps.size());
    const int count = static_cast<int>(reps.size());
    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 4) num_threads(spec.worker_count)
    for (int k = 0; k < count; ++k) {
        try {
            const Nearring r = validate({spec.group, reps[k].mul});
            out.reports[k] = run_suite(r, spec.group.spec() + "#" + std::to_string(k));
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    for (const auto& rep : out.reports) out.tally.add(rep);
    return out;
}

CensusCounts mirrored_counts(const CensusResult& result, const FiniteGroup& g) {
    CensusCounts c;
    for (const auto& e : result.representatives) c.add(classify(g, transpose(e.mul)));
    return c;
}

}  // namespace nearring
