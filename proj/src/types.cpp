#include "nearring/types.hpp"

#include <sstream>

namespace nearring {

Table::Table(int n, std::vector<Elem> cells) : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != static_cast<std::size_t>(n) * n) {
        throw InputError("table has " + std::to_string(cells_.size()) + " cells, expected " +
                         std::to_string(n * n));
    }
}

Table Table::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0 || n > kMaxOrder) {
        throw InputError("table must have between 1 and 16 rows, got " + std::to_string(n));
    }
    Table t(n);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(rows[x].size()) != n) {
            throw InputError("ragged table: row " + std::to_string(x) + " has " +
                             std::to_string(rows[x].size()) + " entries, expected " + std::to_string(n));
        }
        for (int y = 0; y < n; ++y) {
            const int v = rows[x][y];
            if (v < 0 || v >= n) {
                throw InputError("entry " + std::to_string(v) + " at [" + std::to_string(x) + "][" +
                                 std::to_string(y) + "] is out of range 0.." + std::to_string(n - 1));
            }
            t(x, y) = static_cast<Elem>(v);
        }
    }
    return t;
}

std::vector<std::vector<int>> Table::rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) out[x][y] = (*this)(x, y);
    return out;
}

ElementSet ElementSet::of(const std::vector<int>& members) {
    ElementSet s;
    for (int m : members) {
        if (m < 0 || m >= kMaxOrder) throw InputError("element index " + std::to_string(m) + " out of range");
        s.insert(m);
    }
    return s;
}

std::vector<int> ElementSet::members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

namespace {

std::string describe(const std::string& axiom, const std::vector<int>& w) {
    std::ostringstream os;
    os << axiom << " fails at (";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::vector<int> witness)
    : std::runtime_error(describe(axiom, witness)), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

}  // namespace nearring
