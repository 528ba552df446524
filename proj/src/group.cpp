#include "nearring/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace nearring {

namespace {

std::vector<Elem> greedy_generators(const FiniteGroup& g) {
    std::vector<Elem> gens;
    ElementSet span = closure(g, ElementSet{1u});
    for (int x = 1; x < g.order(); ++x) {
        if (!span.contains(x)) {
            gens.push_back(static_cast<Elem>(x));
            ElementSet seed = span;
            seed.insert(x);
            span = closure(g, seed);
        }
    }
    return gens;
}

void check_group_axioms(const Table& add) {
    const int n = add.size();
    for (int x = 0; x < n; ++x) {
        if (add(0, x) != x || add(x, 0) != x) throw AxiomViolation("identity", {0, x});
    }
    for (int x = 0; x < n; ++x) {
        ElementSet row, col;
        for (int y = 0; y < n; ++y) {
            if (row.contains(add(x, y))) throw AxiomViolation("latin-square", {x, y});
            if (col.contains(add(y, x))) throw AxiomViolation("latin-square", {y, x});
            row.insert(add(x, y));
            col.insert(add(y, x));
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (add(add(x, y), z) != add(x, add(y, z))) throw AxiomViolation("associativity", {x, y, z});
    for (int x = 0; x < n; ++x) {
        bool found = false;
        for (int y = 0; y < n && !found; ++y) found = add(x, y) == 0 && add(y, x) == 0;
        if (!found) throw AxiomViolation("inverse", {x});
    }
}

int parse_positive(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v <= 0) {
        throw InputError("malformed group spec '" + std::string(whole) + "'");
    }
    return v;
}

FiniteGroup cyclic_product(const std::vector<int>& moduli, std::string spec) {
    int n = 1;
    for (int m : moduli) {
        n *= m;
        if (n > kMaxOrder) throw InputError("group '" + spec + "' has order above 16");
    }
    auto digits = [&](int x) {
        std::vector<int> d(moduli.size());
        for (int k = static_cast<int>(moduli.size()) - 1; k >= 0; --k) {
            d[k] = x % moduli[k];
            x /= moduli[k];
        }
        return d;
    };
    auto index = [&](const std::vector<int>& d) {
        int x = 0;
        for (std::size_t k = 0; k < moduli.size(); ++k) x = x * moduli[k] + d[k];
        return x;
    };
    Table add(n);
    std::vector<std::string> names(n);
    for (int x = 0; x < n; ++x) {
        const auto dx = digits(x);
        for (int y = 0; y < n; ++y) {
            auto dy = digits(y);
            for (std::size_t k = 0; k < moduli.size(); ++k) dy[k] = (dx[k] + dy[k]) % moduli[k];
            add(x, y) = static_cast<Elem>(index(dy));
        }
        if (moduli.size() == 1) {
            names[x] = std::to_string(x);
        } else {
            std::string s = "(";
            for (std::size_t k = 0; k < dx.size(); ++k) s += (k ? "," : "") + std::to_string(dx[k]);
            names[x] = s + ")";
        }
    }
    std::vector<Elem> gens;
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        if (moduli[k] == 1) continue;
        std::vector<int> d(moduli.size(), 0);
        d[k] = 1;
        gens.push_back(static_cast<Elem>(index(d)));
    }
    return FiniteGroup::from_table(add, std::move(spec), std::move(names)).with_generators(std::move(gens));
}

FiniteGroup dihedral(int m, std::string spec) {
    if (m % 2 != 0 || m < 2) throw InputError("dihedral spec '" + spec + "' needs an even order >= 2");
    if (m > kMaxOrder) throw InputError("group '" + spec + "' has order above 16");
    const int h = m / 2;
    Table add(m);
    for (int x = 0; x < m; ++x) {
        const int k1 = x % h, e1 = x / h;
        for (int y = 0; y < m; ++y) {
            const int k2 = y % h, e2 = y / h;
            const int k = ((k1 + (e1 ? -k2 : k2)) % h + h) % h;
            add(x, y) = static_cast<Elem>(k + h * (e1 ^ e2));
        }
    }
    std::vector<std::string> names(m);
    for (int x = 0; x < m; ++x) {
        const int k = x % h, e = x / h;
        std::string rot = k == 0 ? "" : (k == 1 ? "a" : std::to_string(k) + "a");
        if (e == 0) {
            names[x] = rot.empty() ? "0" : rot;
        } else {
            names[x] = rot.empty() ? "b" : rot + "+b";
        }
    }
    std::vector<Elem> gens;
    if (h > 1) gens.push_back(1);
    gens.push_back(static_cast<Elem>(h));
    return FiniteGroup::from_table(add, std::move(spec), std::move(names)).with_generators(std::move(gens));
}

FiniteGroup quaternion() {
    // Unit products for 1, i, j, k: (unit, sign).
    static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    Table add(8);
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            const int ux = x / 2, sx = x % 2, uy = y / 2, sy = y % 2;
            add(x, y) = static_cast<Elem>(2 * unit[ux][uy] + (sx ^ sy ^ sign[ux][uy]));
        }
    }
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return FiniteGroup::from_table(add, "Q8", std::move(names)).with_generators({2, 4});
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const Table& add, std::string spec, std::vector<std::string> names) {
    const int n = add.size();
    if (n < 1 || n > kMaxOrder) throw InputError("group order must be between 1 and 16");
    check_group_axioms(add);
    FiniteGroup g;
    g.add_ = add;
    g.spec_ = std::move(spec);
    g.neg_.resize(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (add(x, y) == 0) g.neg_[x] = static_cast<Elem>(y);
    if (names.empty()) {
        for (int x = 0; x < n; ++x) names.push_back(std::to_string(x));
    }
    if (static_cast<int>(names.size()) != n) throw InputError("group names do not match the order");
    g.names_ = std::move(names);
    g.generators_ = greedy_generators(g);
    return g;
}

FiniteGroup FiniteGroup::with_generators(std::vector<Elem> gens) const {
    ElementSet seed{1u};
    for (Elem x : gens) seed.insert(x);
    if (closure(*this, seed) != ElementSet::all(order())) {
        throw InvariantViolation("generating set does not generate group " + spec_);
    }
    FiniteGroup g = *this;
    g.generators_ = std::move(gens);
    return g;
}

Elem FiniteGroup::multiple(int x, long k) const {
    Elem acc = 0;
    for (long i = 0; i < k; ++i) acc = add_(acc, x);
    return acc;
}

FiniteGroup build_group(std::string_view spec) {
    const std::string whole(spec);
    if (spec == "S3") return dihedral(6, "S3");
    if (spec == "Q8") return quaternion();
    if (spec.starts_with("D")) return dihedral(parse_positive(spec.substr(1), spec), whole);
    if (spec.starts_with("Z")) {
        std::vector<int> moduli;
        std::size_t pos = 0;
        while (pos <= spec.size()) {
            const std::size_t next = spec.find('x', pos);
            std::string_view part = spec.substr(pos, next == std::string_view::npos ? spec.npos : next - pos);
            if (!part.starts_with("Z")) throw InputError("malformed group spec '" + whole + "'");
            moduli.push_back(parse_positive(part.substr(1), spec));
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        return cyclic_product(moduli, whole);
    }
    throw InputError("unknown group spec '" + whole + "'");
}

std::vector<std::string> named_groups_up_to(int max_order) {
    static const std::vector<std::pair<int, std::string>> all = {
        {1, "Z1"},   {2, "Z2"},       {3, "Z3"},         {4, "Z4"},     {4, "Z2xZ2"},  {5, "Z5"},
        {6, "Z6"},   {6, "S3"},       {7, "Z7"},         {8, "Z8"},     {8, "Z2xZ4"},  {8, "Z2xZ2xZ2"},
        {8, "D8"},   {8, "Q8"},       {9, "Z9"},         {9, "Z3xZ3"},  {10, "Z10"},   {10, "D10"},
        {11, "Z11"}, {12, "Z12"},     {12, "Z2xZ6"},     {12, "D12"},   {13, "Z13"},   {14, "Z14"},
        {14, "D14"}, {15, "Z15"},     {16, "Z16"},       {16, "Z2xZ8"}, {16, "Z4xZ4"}, {16, "Z2xZ2xZ4"},
        {16, "Z2xZ2xZ2xZ2"},          {16, "D16"},
    };
    std::vector<std::string> out;
    for (const auto& [order, name] : all)
        if (order <= max_order) out.push_back(name);
    return out;
}

bool GroupMap::is_bijective() const {
    ElementSet seen;
    for (Elem y : images) seen.insert(y);
    return seen.size() == static_cast<int>(images.size());
}

GroupMap identity_map(int n) {
    GroupMap m;
    m.images.resize(n);
    std::iota(m.images.begin(), m.images.end(), Elem{0});
    return m;
}

GroupMap compose(const GroupMap& f, const GroupMap& g) {
    GroupMap h;
    h.images.resize(g.images.size());
    for (std::size_t x = 0; x < g.images.size(); ++x) h.images[x] = f.images[g.images[x]];
    return h;
}

bool is_homomorphism(const FiniteGroup& g, const GroupMap& f) {
    const int n = g.order();
    if (static_cast<int>(f.images.size()) != n) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (f(g.add(x, y)) != g.add(f(x), f(y))) return false;
    return true;
}

int element_order(const FiniteGroup& g, int x) {
    int k = 1;
    for (Elem acc = static_cast<Elem>(x); acc != 0; acc = g.add(acc, x)) ++k;
    return k;
}

int exponent(const FiniteGroup& g) {
    int e = 1;
    for (int x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
    return e;
}

bool is_abelian(const FiniteGroup& g) {
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y)
            if (g.add(x, y) != g.add(y, x)) return false;
    return true;
}

std::vector<GroupMap> endomorphisms(const FiniteGroup& g, bool invertible_only) {
    const int n = g.order();
    const auto& gens = g.generators();
    std::vector<std::vector<Elem>> choices(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const int ord = element_order(g, gens[j]);
        for (int y = 0; y < n; ++y)
            if (ord % element_order(g, y) == 0) choices[j].push_back(static_cast<Elem>(y));
    }

    std::vector<GroupMap> out;
    std::vector<Elem> gen_images(gens.size());
    std::vector<int> images(n);
    std::vector<Elem> queue(n);

    // Defines f by f(x + g_j) = f(x) + f(g_j) over a BFS from 0; consistency on every edge
    // is equivalent to f being a homomorphism.
    auto extend = [&]() -> bool {
        std::fill(images.begin(), images.end(), -1);
        images[0] = 0;
        int head = 0, tail = 0;
        queue[tail++] = 0;
        while (head < tail) {
            const Elem x = queue[head++];
            for (std::size_t j = 0; j < gens.size(); ++j) {
                const Elem y = g.add(x, gens[j]);
                const int want = g.add(images[x], gen_images[j]);
                if (images[y] < 0) {
                    images[y] = want;
                    queue[tail++] = y;
                } else if (images[y] != want) {
                    return false;
                }
            }
        }
        return true;
    };

    auto recurse = [&](auto&& self, std::size_t j) -> void {
        if (j == gens.size()) {
            if (!extend()) return;
            GroupMap f;
            f.images.assign(images.begin(), images.end());
            if (!invertible_only || f.is_bijective()) out.push_back(std::move(f));
            return;
        }
        for (Elem y : choices[j]) {
            gen_images[j] = y;
            self(self, j + 1);
        }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ElementSet closure(const FiniteGroup& g, ElementSet seed) {
    seed.insert(0);
    std::vector<int> members = seed.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            for (Elem z : {g.add(members[i], members[j]), g.add(members[j], members[i])}) {
                if (!seed.contains(z)) {
                    seed.insert(z);
                    members.push_back(z);
                }
            }
        }
    }
    return seed;
}

bool is_subgroup(const FiniteGroup& g, ElementSet s) {
    if (!s.contains(0)) return false;
    for (int x : s.members()) {
        if (!s.contains(g.neg(x))) return false;
        for (int y : s.members())
            if (!s.contains(g.add(x, y))) return false;
    }
    return true;
}

bool is_normal_subgroup(const FiniteGroup& g, ElementSet s) {
    if (!is_subgroup(g, s)) return false;
    for (int x = 0; x < g.order(); ++x)
        for (int a : s.members())
            if (!s.contains(g.sub(g.add(x, a), x))) return false;
    return true;
}

std::vector<Subgroup> subgroups(const FiniteGroup& g, bool normal_only) {
    std::set<std::uint32_t> found{closure(g, ElementSet{}).bits()};
    std::vector<std::uint32_t> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t bits : frontier) {
            for (int x = 0; x < g.order(); ++x) {
                ElementSet seed{bits};
                if (seed.contains(x)) continue;
                seed.insert(x);
                const ElementSet h = closure(g, seed);
                if (found.insert(h.bits()).second) next.push_back(h.bits());
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (std::uint32_t bits : found) {
        const ElementSet s{bits};
        if (!normal_only || is_normal_subgroup(g, s)) out.push_back(Subgroup{s});
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements() < b.elements();
    });
    return out;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    return ps;
}

ElementSet p_power_elements(const FiniteGroup& g, int p) {
    ElementSet s;
    for (int x = 0; x < g.order(); ++x) {
        int ord = element_order(g, x);
        while (ord % p == 0) ord /= p;
        if (ord == 1) s.insert(x);
    }
    return s;
}

Subgroup p_component(const FiniteGroup& g, int p) {
    if (!is_abelian(g)) throw PreconditionError("p_component requires an abelian group, got " + g.spec());
    return Subgroup{p_power_elements(g, p)};
}

}  // namespace nearring
