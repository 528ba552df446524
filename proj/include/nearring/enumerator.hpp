#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nearring/checks.hpp"
#include "nearring/group.hpp"
#include "nearring/nearring.hpp"

namespace nearring {

struct Filters {
    bool with_identity = false;
    bool zero_symmetric = false;
    bool semidistributive = false;
    bool distributive = false;

    bool accepts(const PropertyFlags& f) const;
    /// Names of the active filters ("identity", "zero-symmetric", "semidistributive", "distributive").
    std::vector<std::string> names() const;
    /// Throws InputError for an unknown name.
    void enable(const std::string& name);
};

struct SearchSpec {
    FiniteGroup group;
    Filters filters;
    bool iso_reduction = true;
    int worker_count = 1;
};

struct CensusCounts {
    std::uint64_t total = 0;
    std::uint64_t with_identity = 0;
    std::uint64_t zero_symmetric = 0;
    std::uint64_t semidistributive = 0;
    std::uint64_t distributive = 0;

    void add(const PropertyFlags& f);
    friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

struct CensusEntry {
    Table mul;
    PropertyFlags flags;

    friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

struct CensusResult {
    std::string group_spec;
    bool iso_reduction = true;
    Filters filters;
    CensusCounts counts;
    std::vector<CensusEntry> representatives;  // sorted by table

    struct Meta {
        double elapsed_seconds = 0;
        std::uint64_t nodes_visited = 0;
        std::uint64_t raw_tables = 0;
        int workers = 1;
    } meta;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t candidates = 0;
};

/// Backtracking search for every nearring multiplication on a fixed group.
///
/// Each element x is assigned an endomorphism phi_x and x*y := phi_x(y), so left
/// distributivity holds by construction. Associativity is the closure constraint
/// phi_{phi_x(y)} = phi_x . phi_y for all x, y; every new assignment is checked against all
/// assigned pairs and the forced assignments it implies are propagated to a fixpoint.
class CandidateSearch {
public:
    using Visitor = std::function<void(const Table&)>;

    /// Throws InputError above order 16.
    explicit CandidateSearch(const FiniteGroup& g);

    const FiniteGroup& group() const { return group_; }
    const std::vector<GroupMap>& endomorphisms() const { return endos_; }
    /// Number of first-level branches (choices of phi_0).
    int root_branches() const { return static_cast<int>(endos_.size()); }

    void run(const Visitor& visit, SearchStats& stats) const;
    /// Only the subtree with phi_0 = endomorphisms()[branch].
    void run_branch(int branch, const Visitor& visit, SearchStats& stats) const;

private:
    struct State;
    int composition(int f, int g) const;
    bool assign(State& st, int x, int e) const;
    void descend(State& st, const Visitor& visit, SearchStats& stats) const;

    FiniteGroup group_;
    std::vector<GroupMap> endos_;
    std::unordered_map<std::uint64_t, int> index_of_;
    std::vector<int> comp_;  // |End|^2 table of composition indices; empty when too large
};

/// Every table the search produces, in stream order.
std::vector<Table> candidate_tables(const FiniteGroup& g);

/// mul'[x][y] = theta^-1(mul[theta(x)][theta(y)]).
Table relabel(const Table& mul, const GroupMap& theta);

/// Lexicographically least relabeling over the given automorphisms.
Table canonicalize(const Table& mul, const std::vector<GroupMap>& automorphisms);
Table canonicalize(const FiniteGroup& g, const Table& mul);

/// True iff no automorphism yields a lexicographically smaller relabeling.
bool is_canonical(const Table& mul, const std::vector<GroupMap>& automorphisms,
                  const std::vector<GroupMap>& inverses);

/// Single-threaded reference census.
CensusResult census_serial(const SearchSpec& spec);
/// OpenMP census: the tree is split at phi_0 and branch results merged in canonical order.
CensusResult census_parallel(const SearchSpec& spec);
/// census_serial when worker_count == 1, census_parallel otherwise.
CensusResult census(const SearchSpec& spec);

/// Enumerates all n^(n^2) tables directly (order <= 3 only). Independent of CandidateSearch.
CensusResult brute_force_oracle(const FiniteGroup& g);

struct CensusSuiteResult {
    CensusResult census;
    std::vector<SuiteReport> reports;
    SuiteTally tally;
};

CensusSuiteResult census_suite(const SearchSpec& spec);

/// Counts after mirroring every representative into a right nearring (x*'y = y*x) and
/// re-evaluating the flag formulas literally on the mirrored tables.
CensusCounts mirrored_counts(const CensusResult& result, const FiniteGroup& g);

}  // namespace nearring
