#include <gtest/gtest.h>

#include "nearring/enumerator.hpp"
#include "nearring/nearring.hpp"
#include "test_util.hpp"

using namespace nearring;

namespace {

Table s3_example_table() {
    Table m(6);
    for (int x = 3; x < 6; ++x)
        for (int y = 3; y < 6; ++y) m(x, y) = static_cast<Elem>(x);
    return m;
}

// I is an ideal iff x ~ y <=> x - y in I is a congruence for + and *: the kernel definition.
bool congruence_ideal(const Nearring& r, ElementSet s) {
    const FiniteGroup& g = r.group();
    const int n = g.order();
    auto related = [&](int x, int y) { return s.contains(g.add(x, g.neg(y))); };
    if (!s.contains(0)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (related(x, y) && related(y, z) && !related(x, z)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (related(x, y) != related(y, x)) return false;
    for (int x = 0; x < n; ++x)
        for (int x2 = 0; x2 < n; ++x2) {
            if (!related(x, x2)) continue;
            for (int y = 0; y < n; ++y)
                for (int y2 = 0; y2 < n; ++y2) {
                    if (!related(y, y2)) continue;
                    if (!related(g.add(x, y), g.add(x2, y2))) return false;
                    if (!related(r.mul(x, y), r.mul(x2, y2))) return false;
                }
        }
    return true;
}

std::vector<Nearring> census_instances(const std::string& spec) {
    const FiniteGroup g = build_group(spec);
    std::vector<Nearring> out;
    for (const auto& e : census(SearchSpec{g, {}, true, 1}).representatives) out.push_back(validate({g, e.mul}));
    return out;
}

}  // namespace

TEST(Validate, S3ExampleIsANearringWithoutIdentity) {
    const Nearring r = validate({build_group("S3"), s3_example_table()});
    EXPECT_TRUE(r.axioms_verified());
    EXPECT_FALSE(r.identity().has_value());
}

TEST(Validate, ModularRingHasIdentityOne) {
    const Nearring r = builtin("ring:Z6");
    ASSERT_TRUE(r.identity().has_value());
    EXPECT_EQ(*r.identity(), 1);
}

TEST(Validate, MutatedS3ExampleTableReportsFirstAssociativityFailure) {
    Table m = s3_example_table();
    m(3, 3) = 1;
    try {
        validate({build_group("S3"), m});
        FAIL() << "expected an axiom violation";
    } catch (const AxiomViolation& e) {
        EXPECT_EQ(e.axiom(), "associativity");
        EXPECT_EQ(e.witness(), (std::vector<int>{3, 3, 4}));
    }
}

TEST(Validate, LeftDistributivityFailure) {
    // Associative (x*y = x) but x(y+z) = x != xy + xz = 2x for x != 0.
    Table m(3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) m(x, y) = static_cast<Elem>(x);
    try {
        validate({build_group("Z3"), m});
        FAIL() << "expected an axiom violation";
    } catch (const AxiomViolation& e) {
        EXPECT_EQ(e.axiom(), "left-distributivity");
        EXPECT_EQ(e.witness(), (std::vector<int>{1, 0, 0}));
    }
}

TEST(Validate, SizeMismatchIsAnInputError) {
    EXPECT_THROW(validate({build_group("Z3"), Table(2)}), InputError);
}

TEST(Validate, OneSidedIdentityIsNotAnIdentity) {
    // x*y = y: every element is a left identity, none is two-sided for n > 1.
    Table m(2);
    m(0, 1) = 1;
    m(1, 1) = 1;
    const Nearring r = validate({build_group("Z2"), m});
    EXPECT_FALSE(r.identity().has_value());
}

TEST(Classify, S3Example) {
    const PropertyFlags f = classify(builtin("s3-example"));
    EXPECT_TRUE(f.zero_symmetric);
    EXPECT_TRUE(f.semidistributive);
    EXPECT_FALSE(f.distributive);
    EXPECT_FALSE(f.has_identity);
    EXPECT_FALSE(f.abelian_addition);
}

TEST(Classify, ZeroMultiplication) {
    for (const auto& spec : {"Z1", "S3", "Q8", "Z2xZ2xZ2"}) {
        const PropertyFlags f = classify(builtin(std::string("zero:") + spec));
        EXPECT_TRUE(f.zero_symmetric);
        EXPECT_TRUE(f.semidistributive);
        EXPECT_TRUE(f.distributive);
    }
}

TEST(Classify, MapZ2) {
    const Nearring r = builtin("map-z2");
    const PropertyFlags f = classify(r);
    EXPECT_TRUE(f.semidistributive);
    EXPECT_FALSE(f.distributive);
    EXPECT_TRUE(f.has_identity);
    EXPECT_FALSE(f.zero_symmetric);
}

TEST(Classify, FlagsAreConsistentOnCensusInstances) {
    for (const auto& spec : {"Z2xZ2", "S3", "Z6", "D8"}) {
        for (const auto& r : census_instances(spec)) {
            EXPECT_EQ(classify(r), r.flags());
            if (r.flags().distributive) EXPECT_TRUE(r.flags().semidistributive);
            for (int x = 0; x < r.order(); ++x) EXPECT_EQ(r.mul(x, 0), 0);
        }
    }
}

TEST(Units, Examples) {
    EXPECT_EQ(units(builtin("ring:Z6")).members(), (std::vector<int>{1, 5}));
    EXPECT_EQ(units(builtin("ring:Z5")).members(), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(units(builtin("map-z2")).members(), (std::vector<int>{1, 2}));  // identity and swap
    EXPECT_THROW(units(builtin("s3-example")), PreconditionError);
}

TEST(Units, ContainIdentityAndAreClosed) {
    for (const auto& spec : {"Z2xZ2", "Z2xZ4", "D8"}) {
        for (const auto& r : census_instances(spec)) {
            if (!r.identity()) continue;
            const ElementSet u = units(r);
            EXPECT_TRUE(u.contains(*r.identity()));
            for (int a : u.members())
                for (int b : u.members()) EXPECT_TRUE(u.contains(r.mul(a, b)));
        }
    }
}

TEST(DistributiveElements, Examples) {
    EXPECT_EQ(distributive_elements(builtin("s3-example")).members(), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(distributive_elements(builtin("ring:Z6")), ElementSet::all(6));
    EXPECT_EQ(distributive_elements(builtin("zero:Q8")), ElementSet::all(8));
    // Witness for b: (a+b)*b = a+b but a*b + b*b = 0 + b = b.
    const Nearring r = builtin("s3-example");
    EXPECT_EQ(r.mul(4, 3), 4);
    EXPECT_EQ(r.add(r.mul(1, 3), r.mul(3, 3)), 3);
}

TEST(TranslationEmbedding, ModSixRing) {
    const TranslationEmbedding emb = translation_embedding(builtin("ring:Z6"));
    EXPECT_EQ(emb.translations.size(), 6u);
    EXPECT_EQ(emb.unit_elements, (std::vector<Elem>{1, 5}));
    ASSERT_EQ(emb.unit_translations.size(), 2u);
    EXPECT_EQ(emb.unit_translations[0], identity_map(6));
    EXPECT_EQ(emb.unit_translations[1].images, (std::vector<Elem>{0, 5, 4, 3, 2, 1}));
    EXPECT_EQ(emb.unit_image_of_identity.members(), (std::vector<int>{1, 5}));
    EXPECT_EQ(emb.composition, TranslationEmbedding::Composition::homomorphism);
}

TEST(TranslationEmbedding, ModTwoRing) {
    const TranslationEmbedding emb = translation_embedding(builtin("ring:Z2"));
    ASSERT_EQ(emb.translations.size(), 2u);
    EXPECT_EQ(emb.translations[0].images, (std::vector<Elem>{0, 0}));
    EXPECT_EQ(emb.translations[1], identity_map(2));
}

TEST(TranslationEmbedding, HoldsForEveryCensusInstanceWithIdentity) {
    int checked = 0;
    for (const auto& spec : {"Z2xZ2", "Z6", "Z2xZ4", "D8", "Z2xZ2xZ2"}) {
        for (const auto& r : census_instances(spec)) {
            if (!r.identity()) continue;
            const TranslationEmbedding emb = translation_embedding(r);
            EXPECT_EQ(emb.translations[*r.identity()], identity_map(r.order()));
            EXPECT_EQ(emb.unit_image_of_identity, units(r));
            EXPECT_EQ(emb.image_of_identity, ElementSet::all(r.order()));
            ++checked;
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(TranslationEmbedding, RequiresIdentity) {
    EXPECT_THROW(translation_embedding(builtin("s3-example")), PreconditionError);
}

TEST(TranslationEmbedding, CorruptTableIsAnInvariantViolation) {
    Table m = builtin("ring:Z3").mul_table();
    m(2, 2) = 2;  // lambda_2 = (0, 2, 2) is no longer additive
    EXPECT_THROW(translation_embedding(Nearring::unchecked(build_group("Z3"), m)), InvariantViolation);
}

TEST(Ideals, IsIdealExamples) {
    EXPECT_TRUE(is_ideal(builtin("ring:Z6"), ElementSet::of({0, 3})));
    EXPECT_FALSE(is_ideal(builtin("ring:Z6"), ElementSet::of({0, 1})));
    EXPECT_TRUE(is_ideal(builtin("s3-example"), ElementSet::of({0, 1, 2})));
    EXPECT_FALSE(is_ideal(builtin("s3-example"), ElementSet::of({0, 3})));  // not normal
}

TEST(Ideals, Enumeration) {
    EXPECT_EQ(ideals(builtin("ring:Z6")).size(), 4u);
    EXPECT_EQ(ideals(builtin("ring:Z5")).size(), 2u);
    EXPECT_TRUE(is_simple(builtin("ring:Z5")));
    EXPECT_FALSE(is_simple(builtin("ring:Z6")));
    EXPECT_FALSE(is_simple(builtin("zero:Z1")));
    const auto s3 = ideals(builtin("s3-example"));
    ASSERT_EQ(s3.size(), 3u);
    EXPECT_EQ(s3[0].members(), (std::vector<int>{0}));
    EXPECT_EQ(s3[1].members(), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(s3[2], ElementSet::all(6));
}

TEST(Ideals, AgreeWithCongruenceDefinitionOnEverySubset) {
    for (const auto& spec : {"Z2xZ2", "S3", "Z6", "Z5"}) {
        for (const auto& r : census_instances(spec)) {
            const int n = r.order();
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                const ElementSet s{bits};
                ASSERT_EQ(is_ideal(r, s), congruence_ideal(r, s)) << spec << " subset " << bits;
            }
        }
    }
}

TEST(RegularModule, Examples) {
    const RModule z6 = regular_module(builtin("ring:Z6"));
    for (int g = 0; g < 6; ++g)
        for (int r = 0; r < 6; ++r) EXPECT_EQ(z6.act(g, r), (g * r) % 6);
    EXPECT_EQ(annihilator(z6).members(), (std::vector<int>{0}));
    EXPECT_TRUE(is_faithful(z6));

    const RModule zero = regular_module(builtin("zero:Z2"));
    for (int g = 0; g < 2; ++g)
        for (int r = 0; r < 2; ++r) EXPECT_EQ(zero.act(g, r), 0);
    EXPECT_EQ(annihilator(zero), ElementSet::all(2));

    const RModule example = regular_module(builtin("s3-example"));
    EXPECT_FALSE(find_module_violation(example.carrier(), example.ring(), example.action()).has_value());
    EXPECT_EQ(annihilator(example).members(), (std::vector<int>{0, 1, 2}));
    EXPECT_FALSE(is_faithful(example));
}

TEST(RegularModule, MakeRejectsBrokenAction) {
    const Nearring r = builtin("ring:Z3");
    ActionTable bad(3, 3);
    bad(1, 1) = 1;  // 1*(1+1) = 0 but 1*1 + 1*1 = 2
    EXPECT_THROW(RModule::make(r.group(), r, bad), InvariantViolation);
}

TEST(RegularModule, AnnihilatorIsAlwaysAnIdeal) {
    for (const auto& spec : {"Z2xZ2", "S3", "Z2xZ4", "Q8"}) {
        for (const auto& r : census_instances(spec)) {
            const ElementSet ann = annihilator(regular_module(r));
            EXPECT_TRUE(is_ideal(r, ann));
        }
    }
}

TEST(Builtin, S3ExampleTable) {
    const Nearring r = builtin("s3-example");
    EXPECT_EQ(r.mul(3, 4), 3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 6; ++y) EXPECT_EQ(r.mul(x, y), 0);
    for (int x = 3; x < 6; ++x)
        for (int y = 0; y < 6; ++y) EXPECT_EQ(r.mul(x, y), y < 3 ? 0 : x);
    EXPECT_EQ(r.name(), "s3-example");
}

TEST(Builtin, MapZ2ComposesLeftFactorFirst) {
    const Nearring r = builtin("map-z2");
    EXPECT_EQ(r.meta().at("composition"), "(f*g)(x) = g(f(x))");
    EXPECT_EQ(r.group().spec(), "Z2xZ2");
    // 0*s is the constant function s(0); it has order 2 exactly when s(0) = 1.
    bool order_two = false;
    for (int s = 0; s < 4; ++s) order_two = order_two || element_order(r.group(), r.mul(0, s)) == 2;
    EXPECT_TRUE(order_two);
    EXPECT_EQ(r.mul(0, 2), 3);  // s = (1,0): 0*s = constant 1
}

TEST(Builtin, RingAndErrors) {
    EXPECT_EQ(*builtin("ring:Z6").identity(), 1);
    EXPECT_TRUE(builtin("ring:Z1").identity().has_value());
    EXPECT_THROW(builtin("ring:S3"), InputError);
    EXPECT_THROW(builtin("ring:Z2xZ2"), InputError);
    EXPECT_THROW(builtin("nope"), InputError);
    EXPECT_THROW(builtin("zero:Z99"), InputError);
}

TEST(Transpose, MirrorsTheTable) {
    const Table t = builtin("s3-example").mul_table();
    EXPECT_EQ(transpose(transpose(t)), t);
    EXPECT_EQ(transpose(t)(4, 3), t(3, 4));
}
