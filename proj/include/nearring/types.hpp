#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nearring {

/// Index into a group's documented element order; 0 is always the neutral element.
using Elem = std::uint8_t;

inline constexpr int kMaxOrder = 16;

/// Dense n x n table of element indices, row-major.
class Table {
public:
    Table() = default;
    explicit Table(int n, Elem fill = 0) : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {}
    Table(int n, std::vector<Elem> cells);

    static Table from_rows(const std::vector<std::vector<int>>& rows);

    int size() const { return n_; }
    Elem operator()(int x, int y) const { return cells_[static_cast<std::size_t>(x) * n_ + y]; }
    Elem& operator()(int x, int y) { return cells_[static_cast<std::size_t>(x) * n_ + y]; }
    const std::vector<Elem>& cells() const { return cells_; }

    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const Table&, const Table&) = default;
    friend auto operator<=>(const Table& a, const Table& b) { return a.cells_ <=> b.cells_; }

private:
    int n_ = 0;
    std::vector<Elem> cells_;
};

/// Set of element indices of a group of order <= 16, stored as a bitmask.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

    static ElementSet all(int n) { return ElementSet(n >= 32 ? ~0u : ((1u << n) - 1u)); }
    static ElementSet of(const std::vector<int>& members);

    bool contains(int x) const { return (bits_ >> x) & 1u; }
    void insert(int x) { bits_ |= (1u << x); }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint32_t bits() const { return bits_; }
    std::vector<int> members() const;

    friend bool operator==(ElementSet, ElementSet) = default;

private:
    std::uint32_t bits_ = 0;
};

/// Malformed input: unknown names, bad syntax, out-of-range indices.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called on a value outside its domain (e.g. units() without identity).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A guaranteed structural property failed to hold; indicates a bug or corrupt input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A group or nearring axiom fails on an explicit table.
class AxiomViolation : public std::runtime_error {
public:
    AxiomViolation(std::string axiom, std::vector<int> witness);

    const std::string& axiom() const { return axiom_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::vector<int> witness_;
};

}  // namespace nearring
