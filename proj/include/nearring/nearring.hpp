#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nearring/group.hpp"
#include "nearring/types.hpp"

namespace nearring {

/// A multiplication table over a group, before any algebraic law is checked.
struct CandidateMultiplication {
    FiniteGroup group;
    Table mul;
};

struct PropertyFlags {
    bool zero_symmetric = false;
    bool semidistributive = false;
    bool distributive = false;
    bool has_identity = false;
    bool abelian_addition = false;

    friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

/// A (left) nearring: (R,+) a group, (R,*) a semigroup, x(y+z) = xy + xz.
///
/// Values made by `validate` are guaranteed to satisfy the axioms. `unchecked` wraps an
/// arbitrary table so the theory checks can be pointed at deliberately corrupted inputs;
/// such values report `axioms_verified() == false`.
class Nearring {
public:
    const FiniteGroup& group() const { return group_; }
    const Table& mul_table() const { return mul_; }
    int order() const { return mul_.size(); }
    Elem mul(int x, int y) const { return mul_(x, y); }
    Elem add(int x, int y) const { return group_.add(x, y); }
    Elem neg(int x) const { return group_.neg(x); }

    const std::optional<Elem>& identity() const { return identity_; }
    const PropertyFlags& flags() const { return flags_; }
    bool axioms_verified() const { return verified_; }

    const std::string& name() const { return name_; }
    const std::map<std::string, std::string>& meta() const { return meta_; }
    Nearring with_name(std::string name) const;
    Nearring with_meta(std::string key, std::string value) const;

    static Nearring unchecked(FiniteGroup group, Table mul);

    friend bool operator==(const Nearring&, const Nearring&) = default;

private:
    friend Nearring validate(CandidateMultiplication c);
    Nearring(FiniteGroup group, Table mul, bool verified);

    FiniteGroup group_;
    Table mul_;
    std::optional<Elem> identity_;
    PropertyFlags flags_;
    bool verified_ = false;
    std::string name_;
    std::map<std::string, std::string> meta_;
};

/// First associativity or left-distributivity failure in row-major (x,y,z) order. Associativity
/// is scanned completely before left distributivity.
std::optional<AxiomViolation> find_axiom_violation(const FiniteGroup& g, const Table& mul);

/// Throws InputError for a size mismatch and AxiomViolation for a failing law.
Nearring validate(CandidateMultiplication c);

/// Unique two-sided multiplicative identity, if any.
std::optional<Elem> find_identity(const Table& mul);

/// Recomputes the flags from the tables (never reads the cache on `r`).
PropertyFlags classify(const Nearring& r);
PropertyFlags classify(const FiniteGroup& g, const Table& mul);

/// Right distributivity, associativity and left distributivity; the first failing law with its
/// witness triple, or nullopt when the table is an associative ring.
struct LawFailure {
    std::string law;  // "right-distributivity", "associativity", "left-distributivity"
    int x, y, z;
};
std::optional<LawFailure> find_ring_law_failure(const FiniteGroup& g, const Table& mul);

/// Elements with a two-sided inverse. Throws PreconditionError without identity.
ElementSet units(const Nearring& r);

/// All t with (r+s)t = rt + st for every r, s.
ElementSet distributive_elements(const Nearring& r);

/// Left translations y -> s*y as additive endomorphisms.
struct TranslationEmbedding {
    enum class Composition {
        /// lambda_s o lambda_t = lambda_{s*t} with lambda_t applied first.
        homomorphism,
        /// lambda_s o lambda_t = lambda_{t*s}.
        anti_homomorphism,
    };

    std::vector<GroupMap> translations;       // indexed by element
    std::vector<Elem> unit_elements;          // units(R), ascending
    std::vector<GroupMap> unit_translations;  // translations of the units, same order
    Composition composition = Composition::homomorphism;
    ElementSet image_of_identity;             // {lambda(i) : lambda in T}
    ElementSet unit_image_of_identity;        // {lambda(i) : lambda in A}
};

/// Builds and verifies the embedding; throws InvariantViolation on any failed assertion.
TranslationEmbedding translation_embedding(const Nearring& r);

/// Normal subgroup with r*a in I and (r+a)s - rs in I for all r, s and a in I.
bool is_ideal(const Nearring& r, ElementSet candidate);

/// Why `candidate` fails to be an ideal, if it does.
struct IdealFailure {
    std::string condition;  // "subgroup", "normal", "absorb", "shift"
    std::vector<int> witness;
    int value;              // the element that escapes the set
};
std::optional<IdealFailure> find_ideal_failure(const Nearring& r, ElementSet candidate);

/// Ideals in the order of subgroups(group, normal_only = true).
std::vector<ElementSet> ideals(const Nearring& r);

bool is_simple(const Nearring& r);

/// |G| x |R| table of g*r.
class ActionTable {
public:
    ActionTable() = default;
    ActionTable(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Elem operator()(int g, int r) const { return cells_[static_cast<std::size_t>(g) * cols_ + r]; }
    Elem& operator()(int g, int r) { return cells_[static_cast<std::size_t>(g) * cols_ + r]; }

    friend bool operator==(const ActionTable&, const ActionTable&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Elem> cells_;
};

/// A group G with a right action g*r of a nearring, satisfying (gr)s = g(rs) and
/// g(r+s) = gr + gs.
class RModule {
public:
    /// Throws InvariantViolation if the action violates the module laws.
    static RModule make(FiniteGroup carrier, Nearring ring, ActionTable action);
    static RModule unchecked(FiniteGroup carrier, Nearring ring, ActionTable action);

    const FiniteGroup& carrier() const { return carrier_; }
    const Nearring& ring() const { return ring_; }
    Elem act(int g, int r) const { return action_(g, r); }
    const ActionTable& action() const { return action_; }

private:
    RModule(FiniteGroup carrier, Nearring ring, ActionTable action);

    FiniteGroup carrier_;
    Nearring ring_;
    ActionTable action_;
};

/// First (g, r, s) violating a module law, or nullopt.
std::optional<AxiomViolation> find_module_violation(const FiniteGroup& carrier, const Nearring& ring,
                                                    const ActionTable& action);

/// R+ acted on by right multiplication. Module laws are asserted when r is verified.
RModule regular_module(const Nearring& r);

ElementSet annihilator(const RModule& m);
bool is_faithful(const RModule& m);

/// "s3-example", "map-z2", "zero:<groupspec>", "ring:Z<n>". Throws InputError otherwise.
Nearring builtin(const std::string& name);

/// Mirror image x*'y = y*x (turns a left nearring into a right nearring and back).
Table transpose(const Table& mul);

}  // namespace nearring
