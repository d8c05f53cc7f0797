#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "tautilt/error.hpp"
#include "tautilt/tautilt.hpp"

using namespace tautilt;
using fixtures::from_maps;

namespace {

std::size_t id(const ARIndex& ix, const std::string& label) {
    for (std::size_t k = 0; k < ix.size(); ++k) {
        if (ix.label(k) == label) return k;
    }
    throw std::out_of_range("no indecomposable " + label);
}

ModuleClass cls(const ARIndex& ix, std::initializer_list<const char*> labels) {
    std::vector<std::size_t> ids;
    for (const char* l : labels) ids.push_back(id(ix, l));
    return ModuleClass(ids);
}

std::set<std::string> names(const ARIndex& ix, const ModuleClass& c) {
    std::set<std::string> out;
    for (std::size_t k : c.members) out.insert(ix.label(k));
    return out;
}

ModuleClass tau_of(const ARIndex& ix, const ModuleClass& c) {
    std::vector<std::size_t> out;
    for (std::size_t k : c.members) {
        if (const auto t = ix.data().tau[k]) out.push_back(*t);
    }
    return ModuleClass(out);
}

std::size_t position(const ModuleClass& c, std::size_t k) {
    return static_cast<std::size_t>(std::find(c.members.begin(), c.members.end(), k) - c.members.begin());
}

const std::vector<std::string> kFinite = {"a2.alg", "a3lin.alg", "a3rel.alg", "skewed.alg", "wild4.alg"};

}  // namespace

TEST(TauRigid, Examples) {
    const ARIndex lin = ARIndex::of(fixtures::load("a3lin.alg"));
    EXPECT_TRUE(is_tau_rigid(lin.sum(cls(lin, {"010", "111"}))));
    EXPECT_TRUE(is_tau_rigid(lin, cls(lin, {"010", "111"})));
    EXPECT_TRUE(is_tau_rigid(regular(lin.algebra())));
    EXPECT_FALSE(is_tau_rigid(lin.sum(cls(lin, {"010", "100"}))));

    const auto sk = fixtures::load("skewed.alg");
    // the 111 with a = 0, which is not projective
    const auto bar = from_maps(sk, {1, 1, 1}, {{}, {{1}}, {{1}}});
    EXPECT_FALSE(is_tau_rigid(bar));
    EXPECT_TRUE(is_tau_rigid(projective(sk, 0)));
    EXPECT_FALSE(is_tau_rigid(lin.module(id(lin, "010")), projective(lin.algebra(), 1)));
    EXPECT_TRUE(is_tau_rigid(lin.module(id(lin, "010")), projective(lin.algebra(), 2)));
}

TEST(Classes, GenAndCogen) {
    const ARIndex lin = ARIndex::of(fixtures::load("a3lin.alg"));
    const auto [g, c] = gen_cogen_class(lin, lin.sum(cls(lin, {"010", "111"})));
    EXPECT_EQ(names(lin, g), (std::set<std::string>{"010", "111", "110", "100"}));
    EXPECT_EQ(names(lin, c), (std::set<std::string>{"010", "111", "011", "001"}));
    EXPECT_EQ(gen_class(lin, lin.projectives()), lin.all());
    EXPECT_TRUE(gen_class(lin, ModuleClass()).empty());
    EXPECT_TRUE(cogen_class(lin, ModuleClass()).empty());
}

TEST(Classes, TorsionClassTest) {
    const ARIndex a2 = ARIndex::of(fixtures::load("a2.alg"));
    EXPECT_TRUE(is_torsion_class(a2, cls(a2, {"10"})).ok);
    const ClassCheck c = is_torsion_class(a2, cls(a2, {"11"}));
    EXPECT_FALSE(c.ok);
    ASSERT_TRUE(c.witness);
    EXPECT_EQ(a2.label(*c.witness), "10");
    EXPECT_TRUE(is_torsion_class(a2, a2.all()).ok);
    EXPECT_TRUE(is_torsion_class(a2, ModuleClass()).ok);
    EXPECT_TRUE(is_torsion_free_class(a2, cls(a2, {"11", "01"})).ok);
    EXPECT_TRUE(is_torsion_free_class(a2, cls(a2, {"10"})).ok);
    EXPECT_FALSE(is_torsion_free_class(a2, cls(a2, {"11"})).ok);
}

TEST(Oracle, KroneckerOneArrowTable) {
    const ARIndex a2 = ARIndex::of(fixtures::load("a2.alg"));
    const auto classes = enumerate_torsion_classes_oracle(a2);
    std::set<std::pair<std::set<std::string>, std::set<std::string>>> got;
    for (const auto& t : classes) got.emplace(names(a2, t), names(a2, torsion_pair(a2, t).torsion_free));
    const std::set<std::pair<std::set<std::string>, std::set<std::string>>> want = {
        {{}, {"11", "01", "10"}},
        {{"01"}, {"10"}},
        {{"10"}, {"11", "01"}},
        {{"11", "10"}, {"01"}},
        {{"11", "01", "10"}, {}},
    };
    EXPECT_EQ(got, want);
}

TEST(Oracle, Counts) {
    EXPECT_EQ(enumerate_torsion_classes_oracle(ARIndex::of(fixtures::load("point.alg"))).size(), 2u);
    EXPECT_EQ(enumerate_torsion_classes_oracle(ARIndex::of(fixtures::load("a3rel.alg"))).size(), 12u);
    // linear A_n has Catalan(n+1) torsion classes
    EXPECT_EQ(enumerate_torsion_classes_oracle(ARIndex::of(fixtures::load("a3lin.alg"))).size(), 14u);
}

TEST(Oracle, RefusesLargeInputs) {
    const auto a6 = load_algebra("algebra A6 { vertices: 1, 2, 3, 4, 5, 6; arrows: a: 1->2, b: 2->3, c: 3->4, d: 4->5, e: 5->6; }");
    const ARIndex ix = ARIndex::of(a6);
    EXPECT_EQ(ix.size(), 21u);
    EXPECT_THROW((void)enumerate_torsion_classes_oracle(ix), DomainError);
}

TEST(Classes, TorsionTheoryOf) {
    const ARIndex a2 = ARIndex::of(fixtures::load("a2.alg"));
    const auto& p1 = a2.module(id(a2, "11"));
    // Hom(10, 11) = 0 since the socle of 11 is 01
    auto t = torsion_theory_of(a2, cls(a2, {"10"}), p1);
    EXPECT_TRUE(t.torsion_part.module.is_zero());
    EXPECT_EQ(t.free_part.module.label(), "11");

    t = torsion_theory_of(a2, cls(a2, {"11", "10"}), p1);
    EXPECT_EQ(t.torsion_part.module.label(), "11");
    EXPECT_TRUE(t.free_part.module.is_zero());

    const ARIndex lin = ARIndex::of(fixtures::load("a3lin.alg"));
    const ModuleClass g = gen_class(lin, cls(lin, {"010", "111"}));
    const ModuleClass f = torsion_pair(lin, g).torsion_free;
    for (std::size_t x = 0; x < lin.size(); ++x) {
        const auto d = torsion_theory_of(lin, g, lin.module(x));
        for (std::size_t k : lin.locate(d.torsion_part.module)) EXPECT_TRUE(g.contains(k));
        for (std::size_t k : lin.locate(d.free_part.module)) EXPECT_TRUE(f.contains(k));
        EXPECT_EQ(d.torsion_part.module.total_dim() + d.free_part.module.total_dim(), lin.module(x).total_dim());
    }
    const auto d = torsion_theory_of(lin, g, lin.module(id(lin, "011")));
    EXPECT_TRUE(d.torsion_part.module.is_zero());
    EXPECT_EQ(d.free_part.module.label(), "011");
}

TEST(ExtProjectives, WorkedExample) {
    const ARIndex lin = ARIndex::of(fixtures::load("a3lin.alg"));
    const ModuleClass t = gen_class(lin, cls(lin, {"010", "111"}));
    const ModuleClass f = torsion_pair(lin, t).torsion_free;
    EXPECT_EQ(names(lin, f), (std::set<std::string>{"001", "011"}));
    EXPECT_EQ(names(lin, ext_projectives(lin, t)), (std::set<std::string>{"010", "111", "110"}));
    EXPECT_EQ(ext_projectives_exact(lin, t), ext_projectives(lin, t));
    EXPECT_EQ(names(lin, ext_injectives(lin, f)), (std::set<std::string>{"001", "011"}));
    EXPECT_EQ(names(lin, ext_injectives_exact(lin, t)), (std::set<std::string>{"111", "110", "100"}));
    EXPECT_EQ(names(lin, ext_projectives_exact(lin, f)), (std::set<std::string>{"001", "011"}));
    EXPECT_EQ(ext_projectives(lin, lin.all()), lin.projectives());
}

TEST(Tilting, Checks) {
    const ARIndex a2 = ARIndex::of(fixtures::load("a2.alg"));
    EXPECT_TRUE(tilting_checks(regular(a2.algebra())).tilting);
    EXPECT_TRUE(tilting_checks(a2.sum(cls(a2, {"11", "10"}))).tilting);
    const auto part = tilting_checks(a2.module(id(a2, "10")));
    EXPECT_TRUE(part.partial_tilting);
    EXPECT_FALSE(part.tilting);

    const ARIndex lin = ARIndex::of(fixtures::load("a3lin.alg"));
    EXPECT_TRUE(tilting_checks(lin.sum(cls(lin, {"010", "111", "110"}))).tilting);
    EXPECT_FALSE(tilting_checks(lin.sum(cls(lin, {"010", "100"}))).partial_tilting);

    const ARIndex rel = ARIndex::of(fixtures::load("a3rel.alg"));
    // 100 has projective dimension 2 here
    EXPECT_FALSE(proj_dim_le1(rel.module(id(rel, "100"))));
    EXPECT_FALSE(tilting_checks(rel.module(id(rel, "100"))).partial_tilting);
}

TEST(Tilting, BongartzCompletion) {
    const ARIndex a2 = ARIndex::of(fixtures::load("a2.alg"));
    const auto t = bongartz_tilting(a2.module(id(a2, "10")));
    EXPECT_TRUE(tilting_checks(t).tilting);
    EXPECT_EQ(names(a2, a2.summands(t)), (std::set<std::string>{"11", "10"}));
    EXPECT_EQ(a2.summands(bongartz_tilting(regular(a2.algebra()))), a2.projectives());

    for (const auto& name : {"a3lin.alg", "a3rel.alg", "skewed.alg"}) {
        const ARIndex ix = ARIndex::of(fixtures::load(name));
        for (std::size_t x = 0; x < ix.size(); ++x) {
            if (!tilting_checks(ix.module(x)).partial_tilting) continue;
            const auto b = bongartz_tilting(ix.module(x));
            EXPECT_TRUE(tilting_checks(b).tilting) << name << " " << ix.label(x);
            EXPECT_TRUE(ix.summands(b).contains(x));
        }
        const ModuleClass tilt = ix.summands(bongartz_tilting(ix.sum(ix.projectives())));
        EXPECT_EQ(tilt, ix.projectives());
    }
    EXPECT_THROW((void)bongartz_tilting(a2.sum(cls(a2, {"01", "10"}))), ContractViolation);
}

TEST(BongartzTau, Examples) {
    const ARIndex lin = ARIndex::of(fixtures::load("a3lin.alg"));
    EXPECT_EQ(names(lin, bongartz_class(lin, cls(lin, {"010"}))), (std::set<std::string>{"010", "011", "110", "111", "100"}));
    EXPECT_EQ(names(lin, bongartz_tau(lin, cls(lin, {"010"}))), (std::set<std::string>{"010", "011", "111"}));
    EXPECT_EQ(bongartz_tau(lin, cls(lin, {"011"})), lin.projectives());
    const ModuleClass tt = cls(lin, {"010", "111", "110"});
    EXPECT_EQ(bongartz_tau(lin, tt), tt);
    EXPECT_THROW((void)bongartz_tau(lin, cls(lin, {"010", "100"})), DomainError);
}

TEST(SupportTauTilting, ChecksAndCompletion) {
    const ARIndex lin = ARIndex::of(fixtures::load("a3lin.alg"));
    EXPECT_FALSE(support_tau_tilting_check(lin, cls(lin, {"010", "111"})));
    const ModuleClass p = ext_projectives(lin, gen_class(lin, cls(lin, {"010", "111"})));
    EXPECT_TRUE(support_tau_tilting_check(lin, p));
    EXPECT_TRUE(complete_pair(lin, p).killed.empty());
    EXPECT_EQ(complete_pair(lin, ModuleClass()).killed, (std::vector<int>{0, 1, 2}));
    const auto pair = complete_pair(lin, cls(lin, {"010"}));
    EXPECT_EQ(pair.killed, (std::vector<int>{0, 2}));
    EXPECT_TRUE(is_valid_pair(lin, pair));
    EXPECT_THROW((void)complete_pair(lin, cls(lin, {"010", "111"})), DomainError);
}

TEST(Mutate, KroneckerOneArrow) {
    const ARIndex a2 = ARIndex::of(fixtures::load("a2.alg"));
    const SupportTauTiltingPair top{cls(a2, {"01", "11"}), {}};
    Mutation m = mutate(a2, top, position(top.summands, id(a2, "01")));
    EXPECT_EQ(m.result, (SupportTauTiltingPair{cls(a2, {"11", "10"}), {}}));
    EXPECT_EQ(m.direction, Direction::left);

    m = mutate(a2, top, position(top.summands, id(a2, "11")));
    EXPECT_EQ(m.result, (SupportTauTiltingPair{cls(a2, {"01"}), {0}}));
    EXPECT_EQ(m.direction, Direction::left);

    const SupportTauTiltingPair bottom{ModuleClass(), {0, 1}};
    m = mutate(a2, bottom, 0);
    EXPECT_EQ(m.result, (SupportTauTiltingPair{cls(a2, {"10"}), {1}}));
    EXPECT_EQ(m.direction, Direction::right);
}

TEST(Mutate, IsAnInvolution) {
    for (const auto& name : kFinite) {
        const ARIndex ix = ARIndex::of(fixtures::load(name));
        const HasseQuiver h = hasse(ix);
        for (const auto& p : h.vertices) {
            for (std::size_t k = 0; k < ix.rank(); ++k) {
                const Mutation m = mutate(ix, p, k);
                EXPECT_TRUE(is_valid_pair(ix, m.result));
                // the exchanged piece sits at the same kind of position on the other side
                bool back = false;
                for (std::size_t j = 0; j < ix.rank(); ++j) back = back || mutate(ix, m.result, j).result == p;
                EXPECT_TRUE(back) << name << " " << pair_label(ix, p);
            }
        }
    }
}

TEST(Exchange, Examples) {
    const ARIndex a2 = ARIndex::of(fixtures::load("a2.alg"));
    auto es = exchange_sequence(a2.module(id(a2, "11")), {a2.module(id(a2, "01"))});
    EXPECT_TRUE(es.y.is_zero());
    EXPECT_EQ(es.killed, 0);
    es = exchange_sequence(a2.module(id(a2, "11")), {a2.module(id(a2, "10"))});
    EXPECT_TRUE(es.y.is_zero());
    EXPECT_EQ(es.killed, 1);
    es = exchange_sequence(a2.module(id(a2, "01")), {a2.module(id(a2, "11"))});
    EXPECT_EQ(es.y.label(), "10");

    const ARIndex lin = ARIndex::of(fixtures::load("a3lin.alg"));
    const SupportTauTiltingPair t{bongartz_tau(lin, cls(lin, {"010"})), {}};
    const std::size_t k = position(t.summands, id(lin, "011"));
    const auto via_exchange = exchange_mutation(lin, t, k);
    const Mutation m = mutate(lin, t, k);
    EXPECT_EQ(m.direction, Direction::left);
    EXPECT_EQ(via_exchange, m.result);
    EXPECT_EQ(names(lin, via_exchange.summands), (std::set<std::string>{"010", "111", "110"}));
}

TEST(Approximations, MinimalAndWakamatsu) {
    for (const auto& name : kFinite) {
        const ARIndex ix = ARIndex::of(fixtures::load(name));
        for (const ModuleClass& t : tau_rigid_classes(ix)) {
            if (t.empty() || t.size() > 2) continue;
            std::vector<Representation> us;
            for (std::size_t k : t.members) us.push_back(ix.module(k));
            const ModuleClass taus = tau_of(ix, t);
            for (std::size_t x = 0; x < ix.size(); ++x) {
                const auto& m = ix.module(x);
                const auto left = minimal_left_approximation(m, us);
                EXPECT_TRUE(is_left_approximation(left, m, us));
                const auto right = minimal_right_approximation(m, us);
                EXPECT_TRUE(is_right_approximation(right, m, us));
                // dropping any component breaks the approximation
                if (left.parts.size() == 1 && !left.target.is_zero()) {
                    LeftApproximation none{Representation::zero(m.algebra()), zero_morphism(m, Representation::zero(m.algebra())), {}};
                    EXPECT_FALSE(is_left_approximation(none, m, us));
                }
                const auto ker = kernel_module(right.g, right.source).module;
                for (std::size_t k : ix.locate(ker)) {
                    for (std::size_t tk : taus.members) EXPECT_EQ(ix.hom(k, tk), 0u) << name;
                }
            }
        }
    }
}

TEST(Hasse, Counts) {
    const ARIndex a2 = ARIndex::of(fixtures::load("a2.alg"));
    HasseQuiver h = hasse(a2);
    EXPECT_EQ(h.vertices.size(), 5u);
    EXPECT_EQ(h.edges.size(), 5u);

    const ARIndex rel = ARIndex::of(fixtures::load("a3rel.alg"));
    h = hasse(rel);
    EXPECT_EQ(h.vertices.size(), 12u);
    EXPECT_EQ(h.edges.size(), 18u);
    const HasseReport r = check_hasse(rel, h);
    EXPECT_TRUE(r.regular);
    EXPECT_TRUE(r.edges_match);
    ASSERT_TRUE(r.source && r.sink);
    EXPECT_EQ(h.vertices[*r.source], (SupportTauTiltingPair{rel.projectives(), {}}));
    EXPECT_EQ(h.vertices[*r.sink], (SupportTauTiltingPair{ModuleClass(), {0, 1, 2}}));

    const ARIndex sk = ARIndex::of(fixtures::load("skewed.alg"));
    h = hasse(sk);
    EXPECT_EQ(h.vertices.size(), enumerate_torsion_classes_oracle(sk).size());
    EXPECT_EQ(h.vertices.size(), 18u);
    EXPECT_THROW((void)hasse(sk, 10), DomainError);
}

TEST(Hasse, MatchesOracleOnFiniteFixtures) {
    for (const auto& name : kFinite) {
        const ARIndex ix = ARIndex::of(fixtures::load(name));
        const HasseQuiver h = hasse(ix);
        const HasseReport r = check_hasse(ix, h);
        EXPECT_TRUE(r.regular) << name;
        EXPECT_TRUE(r.edges_match) << name;
        EXPECT_TRUE(r.source && r.sink) << name;

        // T -> gen T is a bijection onto the torsion classes and P(gen T) = T
        const auto oracle = enumerate_torsion_classes_oracle(ix);
        std::set<ModuleClass> gens(h.torsion.begin(), h.torsion.end());
        EXPECT_EQ(gens.size(), h.vertices.size()) << name;
        EXPECT_EQ(gens, std::set<ModuleClass>(oracle.begin(), oracle.end())) << name;
        for (std::size_t v = 0; v < h.vertices.size(); ++v) {
            EXPECT_EQ(ext_projectives(ix, h.torsion[v]), h.vertices[v].summands);
            EXPECT_TRUE(support_tau_tilting_check(ix, h.vertices[v].summands));
        }
        std::vector<std::pair<std::size_t, std::size_t>> mapped;
        for (auto [big, small] : inclusion_covers(oracle)) {
            mapped.emplace_back(*h.index_of(pair_of_class(ix, oracle[big])), *h.index_of(pair_of_class(ix, oracle[small])));
        }
        std::sort(mapped.begin(), mapped.end());
        EXPECT_EQ(mapped, h.edge_pairs()) << name;
    }
}

TEST(Dagger, Examples) {
    const auto a = fixtures::load("a2.alg");
    const ARIndex ix = ARIndex::of(a);
    const ARIndex op = ARIndex::of(opposite_of(a));
    const SupportTauTiltingPair top{ix.projectives(), {}};
    const SupportTauTiltingPair bottom{ModuleClass(), {0, 1}};
    EXPECT_EQ(dagger(ix, op, top), (SupportTauTiltingPair{ModuleClass(), {0, 1}}));
    EXPECT_EQ(dagger(ix, op, bottom), (SupportTauTiltingPair{op.projectives(), {}}));
    const SupportTauTiltingPair p{cls(ix, {"11", "10"}), {}};
    const auto d = dagger(ix, op, p);
    EXPECT_EQ(d.summands.size() + d.killed.size(), 2u);
    EXPECT_TRUE(is_valid_pair(op, d));
    EXPECT_EQ(dagger(op, ix, d), p);
}

TEST(Dagger, InvolutionOnFiniteFixtures) {
    for (const auto& name : kFinite) {
        const auto a = fixtures::load(name);
        const ARIndex ix = ARIndex::of(a);
        const ARIndex op = ARIndex::of(opposite_of(a));
        const HasseQuiver h = hasse(ix);
        std::set<SupportTauTiltingPair> images;
        for (const auto& p : h.vertices) {
            const auto d = dagger(ix, op, p);
            EXPECT_TRUE(is_valid_pair(op, d)) << name;
            EXPECT_EQ(dagger(op, ix, d), p) << name;
            images.insert(d);
        }
        EXPECT_EQ(images.size(), h.vertices.size());
        EXPECT_EQ(hasse(op).vertices.size(), h.vertices.size());
    }
}

TEST(Bricks, Examples) {
    const auto sk = fixtures::load("skewed.alg");
    const ARIndex ix = ARIndex::of(sk);
    for (int v = 0; v < 3; ++v) EXPECT_EQ(ix.hom(ix.find(simple(sk, v)), ix.find(simple(sk, v))), 1u);
    // End(121) = {[[l, x], [0, l]] at vertex 2}, by hand
    const std::size_t m121 = id(ix, "121");
    EXPECT_EQ(ix.hom(m121, m121), 2u);
    const auto recs = bricks(ix);
    EXPECT_FALSE(recs[m121].is_brick);
    const auto bar = from_maps(sk, {1, 1, 1}, {{}, {{1}}, {{1}}});
    EXPECT_TRUE(isomorphic(recs[m121].fbrick_image, bar));
    for (const auto& r : recs) {
        if (r.is_brick) EXPECT_TRUE(isomorphic(r.fbrick_image, r.module));
        EXPECT_EQ(endomorphism_ring(r.fbrick_image).dim(), 1u);
    }
}

TEST(Bricks, WildFamilyArrowsDoNotBothAct) {
    const auto a = fixtures::load("wild4.alg");
    const ARIndex ix = ARIndex::of(a);
    const int alpha = a->arrow_index("alpha");
    const int beta = a->arrow_index("beta");
    std::size_t count = 0;
    for (const auto& r : bricks(ix)) {
        if (!r.is_brick) continue;
        ++count;
        EXPECT_TRUE(r.module.map(alpha).is_zero() || r.module.map(beta).is_zero()) << r.module.label();
    }
    EXPECT_GT(count, 0u);
}

TEST(Probe, Verdicts) {
    auto r = finiteness_probe(fixtures::load("a3rel.alg"));
    EXPECT_EQ(r.verdict, Finiteness::finite);
    EXPECT_EQ(r.pairs, 12u);
    EXPECT_EQ(r.oracle, 12u);

    r = finiteness_probe(fixtures::load("wild4.alg"));
    EXPECT_EQ(r.verdict, Finiteness::finite);
    ASSERT_TRUE(r.oracle);
    EXPECT_EQ(r.pairs, *r.oracle);

    ProbeCaps small;
    small.dim_cap = 16;
    r = finiteness_probe(fixtures::load("kronecker.alg"), small);
    EXPECT_EQ(r.verdict, Finiteness::unknown);
    EXPECT_FALSE(r.oracle);
}

TEST(Properties, GVectorsAndSupportBound) {
    for (const auto& name : kFinite) {
        const ARIndex ix = ARIndex::of(fixtures::load(name));
        for (const ModuleClass& t : tau_rigid_classes(ix)) {
            EXPECT_TRUE(g_vectors_independent(ix, t)) << name << " " << ix.label(t);
            EXPECT_LE(t.size(), support_rank(ix, t)) << name << " " << ix.label(t);
            EXPECT_EQ(t.size() == support_rank(ix, t), support_tau_tilting_check(ix, t));
        }
    }
}

TEST(Properties, BongartzClassIsSincereTorsion) {
    for (const auto& name : kFinite) {
        const ARIndex ix = ARIndex::of(fixtures::load(name));
        for (const ModuleClass& u : tau_rigid_classes(ix)) {
            const ModuleClass c = bongartz_class(ix, u);
            EXPECT_EQ(support_rank(ix, c), ix.rank());
            const ModuleClass b = bongartz_tau(ix, u);
            EXPECT_EQ(gen_class(ix, b), left_perp(ix, tau_of(ix, b))) << name << " " << ix.label(u);
        }
    }
}

TEST(Properties, AuslanderSmalo) {
    for (const auto& name : {"a2.alg", "a3lin.alg", "a3rel.alg", "skewed.alg"}) {
        const ARIndex ix = ARIndex::of(fixtures::load(name));
        for (std::size_t n = 0; n < ix.size(); ++n) {
            const ModuleClass g = gen_class(ix, ModuleClass({n}));
            for (std::size_t m = 0; m < ix.size(); ++m) {
                const bool no_ext = std::all_of(g.members.begin(), g.members.end(), [&](std::size_t y) { return ix.ext(m, y) == 0; });
                EXPECT_EQ(ix.hom_tau(n, m) == 0, no_ext) << name << " " << ix.label(n) << " " << ix.label(m);
            }
        }
    }
}

TEST(Properties, TauMatchesExtProjectivesWithExtInjectives) {
    for (const auto& name : kFinite) {
        const ARIndex ix = ARIndex::of(fixtures::load(name));
        for (const auto& t : enumerate_torsion_classes_oracle(ix)) {
            const ModuleClass f = torsion_pair(ix, t).torsion_free;
            std::set<std::size_t> from;
            for (std::size_t x : ext_projectives(ix, t).members) {
                if (!ix.data().projective[x]) from.insert(*ix.data().tau[x]);
            }
            std::set<std::size_t> to;
            for (std::size_t y : ext_injectives(ix, f).members) {
                if (!ix.data().injective[y]) to.insert(y);
            }
            EXPECT_EQ(from, to) << name << " " << ix.label(t);
        }
    }
}

TEST(Properties, QuotientStability) {
    for (const auto& name : {"a3lin.alg", "a3rel.alg", "skewed.alg", "wild4.alg"}) {
        const auto a = fixtures::load(name);
        const int n = a->vertex_count();
        for (int v = 0; v < n; ++v) {
            const auto b = quotient_by_vertices(*a, {v});
            const ARIndex ix = ARIndex::of(b);
            for (std::size_t x = 0; x < ix.size(); ++x) {
                for (std::size_t y = x; y < ix.size(); ++y) {
                    const auto m = direct_sum_module({ix.module(x), ix.module(y)});
                    EXPECT_EQ(is_tau_rigid(m), is_tau_rigid(inflate(m, a))) << name << " kill " << v << " " << m.label();
                }
            }
        }
    }
}
