#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nearring/types.hpp"

namespace nearring {

/// A finite group given by its Cayley table. Element 0 is the neutral element.
///
/// Instances are immutable once constructed; every constructor path checks the
/// group axioms, so a FiniteGroup value is always a genuine group.
class FiniteGroup {
public:
    /// Validates `add` as a group table (Latin square, identity 0, associative).
    /// Throws AxiomViolation naming the failing triple.
    static FiniteGroup from_table(const Table& add, std::string spec = "table",
                                  std::vector<std::string> names = {});

    int order() const { return add_.size(); }
    Elem add(int x, int y) const { return add_(x, y); }
    Elem neg(int x) const { return neg_[x]; }
    /// x - y, i.e. x + (-y).
    Elem sub(int x, int y) const { return add_(x, neg_[y]); }
    /// x added to itself k times (k >= 0).
    Elem multiple(int x, long k) const;

    const Table& table() const { return add_; }
    const std::string& spec() const { return spec_; }
    const std::string& name(int x) const { return names_[x]; }
    const std::vector<std::string>& names() const { return names_; }
    /// Generating set used for homomorphism extension.
    const std::vector<Elem>& generators() const { return generators_; }

    /// Same recipe as `from_table` but keeps the caller's generating set.
    FiniteGroup with_generators(std::vector<Elem> gens) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.add_ == b.add_; }

private:
    FiniteGroup() = default;

    Table add_;
    std::vector<Elem> neg_;
    std::vector<std::string> names_;
    std::string spec_;
    std::vector<Elem> generators_;
};

/// Builds a group from a spec string: "Z<n>", "Z<a>xZ<b>[xZ<c>...]", "D<m>" (m even, order m),
/// "Q8", "S3". Orders above 16 are rejected.
///
/// Element orders: cyclic groups use residues 0..n-1; products use lexicographic tuples with the
/// first factor most significant; D<m> and S3 use a*k + b*e at index k + (m/2)*e, so S3 is
/// 0, a, 2a, b, a+b, 2a+b; Q8 is 1, -1, i, -i, j, -j, k, -k (written additively).
FiniteGroup build_group(std::string_view spec);

/// Every named family this library can build with order <= max_order, in a fixed order.
std::vector<std::string> named_groups_up_to(int max_order);

/// A homomorphism G -> G given by its image vector.
struct GroupMap {
    std::vector<Elem> images;

    Elem operator()(int x) const { return images[x]; }
    bool is_bijective() const;
    friend auto operator<=>(const GroupMap&, const GroupMap&) = default;
};

GroupMap identity_map(int n);
/// (f . g)(x) = f(g(x)).
GroupMap compose(const GroupMap& f, const GroupMap& g);
bool is_homomorphism(const FiniteGroup& g, const GroupMap& f);

struct Subgroup {
    ElementSet members;

    std::vector<int> elements() const { return members.members(); }
    int size() const { return members.size(); }
    friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

int element_order(const FiniteGroup& g, int x);
int exponent(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

/// All endomorphisms (or automorphisms), sorted by image vector. Built by extending
/// assignments of the generating set, never by scanning all n^n functions.
std::vector<GroupMap> endomorphisms(const FiniteGroup& g, bool invertible_only = false);

/// Smallest subgroup containing `seed`.
ElementSet closure(const FiniteGroup& g, ElementSet seed);
bool is_subgroup(const FiniteGroup& g, ElementSet s);
bool is_normal_subgroup(const FiniteGroup& g, ElementSet s);

/// All subgroups (or normal subgroups), ordered by size then member list.
std::vector<Subgroup> subgroups(const FiniteGroup& g, bool normal_only = false);

/// Elements of p-power order (not necessarily a subgroup when g is nonabelian).
ElementSet p_power_elements(const FiniteGroup& g, int p);

/// The p-component of an abelian group. Throws PreconditionError for nonabelian g.
Subgroup p_component(const FiniteGroup& g, int p);

std::vector<int> prime_divisors(int n);

}  // namespace nearring
