#include "nearring/checks.hpp"

#include <numeric>

namespace nearring {

namespace {

CheckVerdict not_applicable(std::string id, std::string why) {
    CheckVerdict v;
    v.check_id = std::move(id);
    v.applicable = false;
    v.holds = true;
    v.notes = std::move(why);
    return v;
}

CheckVerdict applicable(std::string id) {
    CheckVerdict v;
    v.check_id = std::move(id);
    v.applicable = true;
    return v;
}

void fail(CheckVerdict& v, Witness w) {
    v.holds = false;
    v.witness = std::move(w);
}

struct Hypotheses {
    bool semidistributive;
    std::optional<Elem> identity;
};

Hypotheses hypotheses(const Nearring& r) { return {classify(r).semidistributive, find_identity(r.mul_table())}; }

std::string unmet(const Hypotheses& h) {
    std::string s;
    if (!h.semidistributive) s += "not semidistributive";
    if (!h.identity) s += std::string(s.empty() ? "" : "; ") + "no identity";
    return s;
}

Witness ring_law_witness(const Nearring& r, const LawFailure& f) {
    const FiniteGroup& g = r.group();
    const Table& m = r.mul_table();
    Witness w;
    w.law = "ring:" + f.law;
    w.bindings = {{"x", f.x}, {"y", f.y}, {"z", f.z}};
    if (f.law == "right-distributivity") {
        w.lhs = m(g.add(f.x, f.y), f.z);
        w.rhs = g.add(m(f.x, f.z), m(f.y, f.z));
    } else if (f.law == "associativity") {
        w.lhs = m(m(f.x, f.y), f.z);
        w.rhs = m(f.x, m(f.y, f.z));
    } else {
        w.lhs = m(f.x, g.add(f.y, f.z));
        w.rhs = g.add(m(f.x, f.y), m(f.x, f.z));
    }
    return w;
}

Witness ideal_witness(const IdealFailure& f, ElementSet set, std::vector<std::pair<std::string, int>> prefix) {
    static const std::map<std::string, std::vector<std::string>> names = {
        {"subgroup", {"a", "b"}}, {"normal", {"x", "a"}}, {"absorb", {"r", "a"}}, {"shift", {"r", "s", "a"}}};
    Witness w;
    w.law = "ideal:" + f.condition;
    w.bindings = std::move(prefix);
    const auto& keys = names.at(f.condition);
    for (std::size_t k = 0; k < f.witness.size(); ++k) w.bindings.emplace_back(keys[k], f.witness[k]);
    w.lhs = f.value;
    w.rhs = -1;
    w.set = set.members();
    return w;
}

bool has_order_two(const FiniteGroup& g) {
    for (int x = 0; x < g.order(); ++x)
        if (element_order(g, x) == 2) return true;
    return false;
}

}  // namespace

int Witness::binding(const std::string& key) const {
    for (const auto& [k, v] : bindings)
        if (k == key) return v;
    throw InputError("witness has no binding '" + key + "'");
}

CheckVerdict check_arithmetic(const Nearring& r) {
    const std::string id = "arithmetic";
    if (!classify(r).semidistributive) return not_applicable(id, "not semidistributive");
    CheckVerdict v = applicable(id);
    const FiniteGroup& g = r.group();
    const Table& m = r.mul_table();
    const int n = g.order();
    std::vector<int> ord(n);
    for (int x = 0; x < n; ++x) ord[x] = element_order(g, x);

    for (int a = 0; a < n; ++a)
        for (int s = 0; s < n; ++s)
            if (m(g.neg(a), s) != g.neg(m(a, s))) {
                fail(v, {"negation", {{"r", a}, {"s", s}}, m(g.neg(a), s), g.neg(m(a, s)), {}});
                return v;
            }
    for (int s = 0; s < n; ++s)
        if (ord[m(0, s)] > 2) {
            fail(v, {"zero-product-order", {{"s", s}}, ord[m(0, s)], 2, {}});
            return v;
        }
    for (int a = 0; a < n; ++a)
        if (ord[a] % 2 == 1 && m(0, a) != 0) {
            fail(v, {"zero-product-odd", {{"r", a}}, m(0, a), 0, {}});
            return v;
        }

    const int top = exponent(g) + 1;
    for (int a = 0; a < n; ++a)
        for (int s = 0; s < n; ++s)
            for (int k = 1; k <= top; ++k) {
                const Elem lhs = m(g.multiple(a, k), s);
                Elem rhs = g.multiple(m(a, s), k);
                if (k % 2 == 0) rhs = g.add(rhs, m(0, s));
                if (lhs != rhs) {
                    fail(v, {k % 2 ? "multiple-odd" : "multiple-even", {{"r", a}, {"s", s}, {"n", k}}, lhs, rhs, {}});
                    return v;
                }
            }

    int literal_misses = 0;
    for (int a = 0; a < n; ++a)
        for (int s = 0; s < n; ++s) {
            if (std::gcd(ord[a], ord[s]) != 1) continue;
            if (m(a, s) != m(0, s)) {
                fail(v, {"coprime", {{"r", a}, {"s", s}}, m(a, s), m(0, s), {}});
                return v;
            }
            if (m(a, s) != 0) ++literal_misses;
        }
    if (literal_misses > 0) {
        v.notes = std::to_string(literal_misses) + " coprime pair(s) with rs = 0*s != 0";
    }
    return v;
}

CheckVerdict check_abelian(const Nearring& r) {
    const std::string id = "abelian";
    const Hypotheses h = hypotheses(r);
    if (!h.semidistributive || !h.identity) return not_applicable(id, unmet(h));
    CheckVerdict v = applicable(id);
    const FiniteGroup& g = r.group();
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (g.add(a, b) != g.add(b, a)) {
                fail(v, {"commutativity", {{"r", a}, {"s", b}}, g.add(a, b), g.add(b, a), {}});
                return v;
            }
    return v;
}

CheckVerdict check_exponent(const Nearring& r) {
    const std::string id = "exponent";
    const auto i = find_identity(r.mul_table());
    if (!i) return not_applicable(id, "no identity");
    CheckVerdict v = applicable(id);
    const FiniteGroup& g = r.group();
    const Table& m = r.mul_table();
    const int exp = exponent(g);
    if (element_order(g, *i) != exp) {
        fail(v, {"identity-order", {{"i", *i}}, element_order(g, *i), exp, {}});
        return v;
    }
    for (int u = 0; u < g.order(); ++u) {
        bool unit = false;
        for (int w = 0; w < g.order() && !unit; ++w) unit = m(u, w) == *i && m(w, u) == *i;
        if (unit && element_order(g, u) != exp) {
            fail(v, {"unit-order", {{"u", u}}, element_order(g, u), exp, {}});
            return v;
        }
    }
    return v;
}

CheckVerdict check_odd_distributive(const Nearring& r) {
    const std::string id = "odd_distributive";
    const Hypotheses h = hypotheses(r);
    if (!h.semidistributive || !h.identity) return not_applicable(id, unmet(h));
    CheckVerdict v = applicable(id);
    const FiniteGroup& g = r.group();
    const Table& m = r.mul_table();
    const int n = g.order();
    for (int t = 0; t < n; ++t) {
        if (element_order(g, t) % 2 == 0) continue;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (m(g.add(a, b), t) != g.add(m(a, t), m(b, t))) {
                    fail(v, {"odd-distributive", {{"r", a}, {"s", b}, {"t", t}}, m(g.add(a, b), t),
                             g.add(m(a, t), m(b, t)), {}});
                    return v;
                }
    }
    if (n % 2 == 1) {
        if (auto f = find_ring_law_failure(g, m)) fail(v, ring_law_witness(r, *f));
    }
    return v;
}

CheckVerdict check_p_ideals(const Nearring& r) {
    const std::string id = "p_ideals";
    const Hypotheses h = hypotheses(r);
    if (!h.semidistributive || !h.identity) return not_applicable(id, unmet(h));
    CheckVerdict v = applicable(id);
    for (int p : prime_divisors(r.order())) {
        const ElementSet component = p_power_elements(r.group(), p);
        if (auto f = find_ideal_failure(r, component)) {
            fail(v, ideal_witness(*f, component, {{"p", p}}));
            return v;
        }
    }
    return v;
}

CheckVerdict check_annihilator_ideal(const RModule& mod) {
    CheckVerdict v = applicable("annihilator_ideal");
    const ElementSet ann = annihilator(mod);
    if (auto f = find_ideal_failure(mod.ring(), ann)) fail(v, ideal_witness(*f, ann, {}));
    return v;
}

CheckVerdict check_lemma8(const RModule& mod) {
    const std::string id = "lemma8";
    std::string why;
    if (!is_faithful(mod)) why = "not faithful";
    if (!is_abelian(mod.carrier())) why += std::string(why.empty() ? "" : "; ") + "carrier nonabelian";
    const FiniteGroup& c = mod.carrier();
    bool endo = true;
    for (int x = 0; x < mod.ring().order() && endo; ++x)
        for (int a = 0; a < c.order() && endo; ++a)
            for (int b = 0; b < c.order() && endo; ++b) endo = mod.act(c.add(a, b), x) == c.add(mod.act(a, x), mod.act(b, x));
    if (!endo) why += std::string(why.empty() ? "" : "; ") + "some element does not act as an endomorphism";
    if (!why.empty()) return not_applicable(id, why);
    CheckVerdict v = applicable(id);
    if (auto f = find_ring_law_failure(mod.ring().group(), mod.ring().mul_table())) {
        fail(v, ring_law_witness(mod.ring(), *f));
    }
    return v;
}

CheckVerdict check_theorem_simple(const Nearring& r) {
    const std::string id = "theorem_simple";
    if (r.order() == 1) return not_applicable(id, "trivial nearring");
    const Hypotheses h = hypotheses(r);
    if (!h.semidistributive || !h.identity) return not_applicable(id, unmet(h));
    const auto found = ideals(r);
    if (found.size() != 2) return not_applicable(id, std::to_string(found.size()) + " ideals");
    CheckVerdict v = applicable(id);
    if (auto f = find_ring_law_failure(r.group(), r.mul_table())) fail(v, ring_law_witness(r, *f));
    return v;
}

CheckVerdict check_no_order2(const Nearring& r) {
    const std::string id = "no_order2";
    const Hypotheses h = hypotheses(r);
    if (!h.semidistributive || !h.identity) return not_applicable(id, unmet(h));
    if (has_order_two(r.group())) return not_applicable(id, "has elements of order 2");
    CheckVerdict v = applicable(id);
    if (auto f = find_ring_law_failure(r.group(), r.mul_table())) fail(v, ring_law_witness(r, *f));
    return v;
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = {"arithmetic",        "abelian", "exponent",       "odd_distributive",
                                                 "p_ideals",          "annihilator_ideal",
                                                 "lemma8",            "theorem_simple", "no_order2"};
    return ids;
}

SuiteReport run_suite(const Nearring& r, std::string instance) {
    SuiteReport rep;
    rep.instance = std::move(instance);
    if (!r.axioms_verified()) {
        if (auto v = find_axiom_violation(r.group(), r.mul_table())) {
            rep.axioms_hold = false;
            rep.axiom_note = v->what();
        }
    }
    const RModule mod = regular_module(r);
    rep.verdicts = {check_arithmetic(r),   check_abelian(r),       check_exponent(r),
                    check_odd_distributive(r), check_p_ideals(r),  check_annihilator_ideal(mod),
                    check_lemma8(mod),     check_theorem_simple(r), check_no_order2(r)};
    for (const auto& v : rep.verdicts) rep.overall = rep.overall && (!v.applicable || v.holds);
    return rep;
}

void SuiteTally::add(const SuiteReport& report) {
    ++instances;
    if (!report.overall) ++failing_instances;
    for (const auto& v : report.verdicts) {
        CheckTally& t = per_check[v.check_id];
        if (v.applicable) ++t.applicable;
        if (v.applicable && !v.holds) ++t.failed;
    }
}

}  // namespace nearring
