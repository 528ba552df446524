#include "nearring/nearring.hpp"

#include <algorithm>

namespace nearring {

Nearring::Nearring(FiniteGroup group, Table mul, bool verified)
    : group_(std::move(group)), mul_(std::move(mul)), verified_(verified) {
    identity_ = find_identity(mul_);
    flags_ = classify(*this);
}

Nearring Nearring::unchecked(FiniteGroup group, Table mul) {
    if (mul.size() != group.order()) {
        throw InputError("multiplication table has size " + std::to_string(mul.size()) + " but the group has order " +
                         std::to_string(group.order()));
    }
    return Nearring(std::move(group), std::move(mul), false);
}

Nearring Nearring::with_name(std::string name) const {
    Nearring r = *this;
    r.name_ = std::move(name);
    return r;
}

Nearring Nearring::with_meta(std::string key, std::string value) const {
    Nearring r = *this;
    r.meta_[std::move(key)] = std::move(value);
    return r;
}

std::optional<AxiomViolation> find_axiom_violation(const FiniteGroup& g, const Table& mul) {
    const int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (mul(mul(x, y), z) != mul(x, mul(y, z))) return AxiomViolation("associativity", {x, y, z});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (mul(x, g.add(y, z)) != g.add(mul(x, y), mul(x, z)))
                    return AxiomViolation("left-distributivity", {x, y, z});
    return std::nullopt;
}

Nearring validate(CandidateMultiplication c) {
    if (c.mul.size() != c.group.order()) {
        throw InputError("multiplication table has size " + std::to_string(c.mul.size()) +
                         " but the group has order " + std::to_string(c.group.order()));
    }
    if (auto v = find_axiom_violation(c.group, c.mul)) throw *v;
    return Nearring(std::move(c.group), std::move(c.mul), true);
}

std::optional<Elem> find_identity(const Table& mul) {
    const int n = mul.size();
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mul(i, x) == x && mul(x, i) == x;
        if (ok) return static_cast<Elem>(i);
    }
    return std::nullopt;
}

PropertyFlags classify(const Nearring& r) { return classify(r.group(), r.mul_table()); }

PropertyFlags classify(const FiniteGroup& g, const Table& m) {
    const int n = g.order();
    PropertyFlags f;
    f.zero_symmetric = true;
    for (int x = 0; x < n; ++x) f.zero_symmetric = f.zero_symmetric && m(0, x) == 0;
    f.semidistributive = true;
    f.distributive = true;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const Elem aba = g.add(g.add(a, b), a);
            const Elem ab = g.add(a, b);
            for (int t = 0; t < n; ++t) {
                if (f.semidistributive && m(aba, t) != g.add(g.add(m(a, t), m(b, t)), m(a, t)))
                    f.semidistributive = false;
                if (f.distributive && m(ab, t) != g.add(m(a, t), m(b, t))) f.distributive = false;
            }
        }
    }
    f.has_identity = find_identity(m).has_value();
    f.abelian_addition = is_abelian(g);
    return f;
}

std::optional<LawFailure> find_ring_law_failure(const FiniteGroup& g, const Table& m) {
    const int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (m(g.add(x, y), z) != g.add(m(x, z), m(y, z))) return LawFailure{"right-distributivity", x, y, z};
    if (auto v = find_axiom_violation(g, m)) {
        const auto& w = v->witness();
        return LawFailure{v->axiom(), w[0], w[1], w[2]};
    }
    return std::nullopt;
}

ElementSet units(const Nearring& r) {
    if (!r.identity()) throw PreconditionError("units() requires a multiplicative identity");
    const int i = *r.identity();
    ElementSet out;
    for (int x = 0; x < r.order(); ++x)
        for (int y = 0; y < r.order(); ++y)
            if (r.mul(x, y) == i && r.mul(y, x) == i) {
                out.insert(x);
                break;
            }
    return out;
}

ElementSet distributive_elements(const Nearring& r) {
    ElementSet out;
    const int n = r.order();
    for (int t = 0; t < n; ++t) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) ok = r.mul(r.add(a, b), t) == r.add(r.mul(a, t), r.mul(b, t));
        if (ok) out.insert(t);
    }
    return out;
}

TranslationEmbedding translation_embedding(const Nearring& r) {
    if (!r.identity()) throw PreconditionError("translation_embedding() requires a multiplicative identity");
    const int n = r.order();
    const int i = *r.identity();
    TranslationEmbedding emb;
    for (int s = 0; s < n; ++s) {
        GroupMap lambda;
        lambda.images.resize(n);
        for (int y = 0; y < n; ++y) lambda.images[y] = r.mul(s, y);
        if (!is_homomorphism(r.group(), lambda)) {
            throw InvariantViolation("left translation by " + std::to_string(s) + " is not an endomorphism");
        }
        emb.translations.push_back(std::move(lambda));
    }
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (emb.translations[s] == emb.translations[t]) {
                throw InvariantViolation("translations of " + std::to_string(s) + " and " + std::to_string(t) +
                                         " coincide");
            }

    bool hom = true, anti = true;
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            const GroupMap c = compose(emb.translations[s], emb.translations[t]);
            hom = hom && c == emb.translations[r.mul(s, t)];
            anti = anti && c == emb.translations[r.mul(t, s)];
        }
    }
    if (!hom && !anti) throw InvariantViolation("translations are not multiplication-compatible");
    emb.composition = hom ? TranslationEmbedding::Composition::homomorphism
                          : TranslationEmbedding::Composition::anti_homomorphism;

    for (const auto& lambda : emb.translations) emb.image_of_identity.insert(lambda(i));
    if (emb.image_of_identity != ElementSet::all(n)) throw InvariantViolation("i^T differs from R");

    const ElementSet u = units(r);
    for (int x : u.members()) {
        emb.unit_elements.push_back(static_cast<Elem>(x));
        emb.unit_translations.push_back(emb.translations[x]);
        if (!emb.translations[x].is_bijective()) {
            throw InvariantViolation("translation of unit " + std::to_string(x) + " is not an automorphism");
        }
        emb.unit_image_of_identity.insert(emb.translations[x](i));
    }
    for (int x = 0; x < n; ++x) {
        if (!u.contains(x) && emb.translations[x].is_bijective()) {
            throw InvariantViolation("non-unit " + std::to_string(x) + " translates by an automorphism");
        }
    }
    if (emb.unit_image_of_identity != u) throw InvariantViolation("i^A differs from the unit group");
    return emb;
}

std::optional<IdealFailure> find_ideal_failure(const Nearring& r, ElementSet s) {
    const FiniteGroup& g = r.group();
    const int n = r.order();
    if (!s.contains(0)) return IdealFailure{"subgroup", {}, 0};
    const auto members = s.members();
    for (int a : members) {
        if (!s.contains(g.neg(a))) return IdealFailure{"subgroup", {a}, g.neg(a)};
        for (int b : members)
            if (!s.contains(g.add(a, b))) return IdealFailure{"subgroup", {a, b}, g.add(a, b)};
    }
    for (int x = 0; x < n; ++x)
        for (int a : members) {
            const Elem conj = g.sub(g.add(x, a), x);
            if (!s.contains(conj)) return IdealFailure{"normal", {x, a}, conj};
        }
    for (int x = 0; x < n; ++x)
        for (int a : members)
            if (!s.contains(r.mul(x, a))) return IdealFailure{"absorb", {x, a}, r.mul(x, a)};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int a : members) {
                const Elem v = g.sub(r.mul(g.add(x, a), y), r.mul(x, y));
                if (!s.contains(v)) return IdealFailure{"shift", {x, y, a}, v};
            }
    return std::nullopt;
}

bool is_ideal(const Nearring& r, ElementSet s) { return !find_ideal_failure(r, s).has_value(); }

std::vector<ElementSet> ideals(const Nearring& r) {
    std::vector<ElementSet> out;
    for (const auto& h : subgroups(r.group(), true))
        if (is_ideal(r, h.members)) out.push_back(h.members);
    return out;
}

bool is_simple(const Nearring& r) { return r.order() > 1 && ideals(r).size() == 2; }

RModule::RModule(FiniteGroup carrier, Nearring ring, ActionTable action)
    : carrier_(std::move(carrier)), ring_(std::move(ring)), action_(std::move(action)) {}

std::optional<AxiomViolation> find_module_violation(const FiniteGroup& carrier, const Nearring& ring,
                                                    const ActionTable& action) {
    const int n = ring.order();
    for (int g = 0; g < carrier.order(); ++g)
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) {
                if (action(action(g, r), s) != action(g, ring.mul(r, s)))
                    return AxiomViolation("module-associativity", {g, r, s});
                if (action(g, ring.add(r, s)) != carrier.add(action(g, r), action(g, s)))
                    return AxiomViolation("module-distributivity", {g, r, s});
            }
    return std::nullopt;
}

RModule RModule::make(FiniteGroup carrier, Nearring ring, ActionTable action) {
    if (action.rows() != carrier.order() || action.cols() != ring.order()) {
        throw InvariantViolation("action table shape does not match carrier and ring");
    }
    if (auto v = find_module_violation(carrier, ring, action)) throw InvariantViolation(v->what());
    return RModule(std::move(carrier), std::move(ring), std::move(action));
}

RModule RModule::unchecked(FiniteGroup carrier, Nearring ring, ActionTable action) {
    return RModule(std::move(carrier), std::move(ring), std::move(action));
}

RModule regular_module(const Nearring& r) {
    const int n = r.order();
    ActionTable action(n, n);
    for (int g = 0; g < n; ++g)
        for (int x = 0; x < n; ++x) action(g, x) = r.mul(g, x);
    if (r.axioms_verified()) return RModule::make(r.group(), r, std::move(action));
    return RModule::unchecked(r.group(), r, std::move(action));
}

ElementSet annihilator(const RModule& m) {
    ElementSet out;
    for (int x = 0; x < m.ring().order(); ++x) {
        bool zero = true;
        for (int g = 0; g < m.carrier().order() && zero; ++g) zero = m.act(g, x) == 0;
        if (zero) out.insert(x);
    }
    return out;
}

bool is_faithful(const RModule& m) { return annihilator(m) == ElementSet{1u}; }

Table transpose(const Table& mul) {
    Table t(mul.size());
    for (int x = 0; x < mul.size(); ++x)
        for (int y = 0; y < mul.size(); ++y) t(x, y) = mul(y, x);
    return t;
}

namespace {

Nearring s3_example() {
    FiniteGroup g = build_group("S3");
    Table m(6);
    for (int x = 3; x < 6; ++x)
        for (int y = 3; y < 6; ++y) m(x, y) = static_cast<Elem>(x);
    return validate({std::move(g), std::move(m)});
}

// Functions f: Z2 -> Z2 encoded as the tuple (f(0), f(1)), i.e. index 2*f(0) + f(1), which is the
// element order of Z2xZ2 under pointwise addition.
Nearring map_z2() {
    FiniteGroup g = build_group("Z2xZ2");
    auto apply = [](int f, int x) { return x == 0 ? f / 2 : f % 2; };
    auto encode = [](int v0, int v1) { return static_cast<Elem>(2 * v0 + v1); };
    Table feed_through(4), apply_after(4);
    for (int f = 0; f < 4; ++f) {
        for (int h = 0; h < 4; ++h) {
            feed_through(f, h) = encode(apply(h, apply(f, 0)), apply(h, apply(f, 1)));  // h after f
            apply_after(f, h) = encode(apply(f, apply(h, 0)), apply(f, apply(h, 1)));   // f after h
        }
    }
    if (!find_axiom_violation(g, feed_through)) {
        return validate({g, feed_through}).with_meta("composition", "(f*g)(x) = g(f(x))");
    }
    if (!find_axiom_violation(g, apply_after)) {
        return validate({g, apply_after}).with_meta("composition", "(f*g)(x) = f(g(x))");
    }
    throw InvariantViolation("neither composition order gives a left nearring on Map(Z2)");
}

}  // namespace

Nearring builtin(const std::string& name) {
    Nearring r = [&] {
        if (name == "s3-example") return s3_example();
        if (name == "map-z2") return map_z2();
        if (name.starts_with("zero:")) {
            FiniteGroup g = build_group(name.substr(5));
            const int n = g.order();
            return validate({std::move(g), Table(n)});
        }
        if (name.starts_with("ring:Z")) {
            FiniteGroup g = build_group(name.substr(5));
            if (g.spec().find('x') != std::string::npos) throw InputError("ring builtin needs a cyclic group: " + name);
            const int n = g.order();
            Table m(n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) m(x, y) = static_cast<Elem>((x * y) % n);
            return validate({std::move(g), std::move(m)});
        }
        throw InputError("unknown builtin nearring '" + name + "'");
    }();
    return r.with_name(name);
}

}  // namespace nearring
