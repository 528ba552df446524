#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nearring/nearring.hpp"

namespace nearring {

/// A concrete counterexample. `law` names the identity that fails; `bindings` are the elements
/// (or integers such as n or p) it was evaluated at; `lhs`/`rhs` are the two evaluated sides.
/// For set-membership laws `rhs` is -1 and `set` holds the set the value escapes from.
struct Witness {
    std::string law;
    std::vector<std::pair<std::string, int>> bindings;
    int lhs = 0;
    int rhs = 0;
    std::vector<int> set;

    int binding(const std::string& key) const;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckVerdict {
    std::string check_id;
    bool applicable = false;
    bool holds = true;
    std::optional<Witness> witness;
    std::string notes;
};

struct SuiteReport {
    std::string instance;
    bool axioms_hold = true;
    std::string axiom_note;
    std::vector<CheckVerdict> verdicts;
    bool overall = true;
};

/// Statements (1)-(3) of the arithmetic lemma for semidistributive nearrings. Statement (3) is
/// checked as rs = 0*s for coprime additive orders, which reduces to rs = 0 whenever s has odd
/// order or R is zero-symmetric.
CheckVerdict check_arithmetic(const Nearring& r);
CheckVerdict check_abelian(const Nearring& r);
CheckVerdict check_exponent(const Nearring& r);
CheckVerdict check_odd_distributive(const Nearring& r);
CheckVerdict check_p_ideals(const Nearring& r);
CheckVerdict check_annihilator_ideal(const RModule& m);
CheckVerdict check_lemma8(const RModule& m);
CheckVerdict check_theorem_simple(const Nearring& r);
CheckVerdict check_no_order2(const Nearring& r);

/// Check ids in suite order.
const std::vector<std::string>& check_ids();

/// Runs every check (module checks on the regular module).
SuiteReport run_suite(const Nearring& r, std::string instance);

/// Per-check totals across many reports.
struct CheckTally {
    int applicable = 0;
    int failed = 0;
};

struct SuiteTally {
    int instances = 0;
    int failing_instances = 0;
    std::map<std::string, CheckTally> per_check;

    void add(const SuiteReport& report);
    bool all_pass() const { return failing_instances == 0; }
};

}  // namespace nearring
