#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <stdexcept>

#include "frob/frobenius.hpp"
#include "frob/kernel.hpp"
#include "frob/pipeline.hpp"
#include "oracles.hpp"

using frob::FrobeniusContext;
using frob::Permutation;
using frob::PermutationGroup;
using frob::point_t;

namespace {

PermutationGroup make(std::vector<Permutation> elements) {
    point_t n = elements.front().degree();
    return PermutationGroup::from_elements(n, std::move(elements));
}

PermutationGroup s3() { return make(oracles::all_permutations(3)); }
PermutationGroup a4() { return make(oracles::alternating_group(4)); }
PermutationGroup d5() { return make(oracles::dihedral_group(5)); }
PermutationGroup agl5() { return make(oracles::affine_group(5)); }
PermutationGroup agl7() { return make(oracles::affine_group(7)); }

std::vector<PermutationGroup> corpus() { return {s3(), a4(), d5(), agl5(), agl7()}; }

}  // namespace

TEST_CASE("phi values and preconditions") {
    FrobeniusContext ctx = frob::build_context(s3());
    CHECK(frob::phi(ctx, 0, 2) == frob::from_cycles(3, {{1, 2}}));
    CHECK(frob::phi(ctx, 0, 2) == ctx.alpha(0, 2));
    for (point_t b = 0; b < 3; ++b) CHECK(frob::phi(ctx, b, 1).is_identity());
    CHECK_THROWS_AS(frob::phi(ctx, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(frob::phi(ctx, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(frob::phi(frob::build_context(d5()), 0, 2), std::invalid_argument);
}

TEST_CASE("phi lands in the stabilizer of b and fixes exactly b") {
    for (const auto& g : corpus()) {
        FrobeniusContext ctx = frob::build_context(g);
        for (point_t b = 0; b < g.degree(); ++b) {
            PermutationGroup stab = g.point_stabilizer(b);
            for (point_t a : ctx.e_star()) {
                if (a == ctx.zero()) continue;
                Permutation p = frob::phi(ctx, b, a);
                CHECK(stab.contains(p));
                if (a != ctx.one())
                    CHECK(frob::fixed_points(p) == std::vector<point_t>{b});
            }
        }
    }
}

TEST_CASE("psi pinned values and identity cases") {
    FrobeniusContext ctx = frob::build_context(s3());
    CHECK(frob::psi(ctx, 1, 2, 0) == frob::from_cycles(3, {{0, 2, 1}}));
    CHECK(frob::psi(ctx, 2, 2, 0) == frob::from_cycles(3, {{0, 1, 2}}));
    for (point_t b = 0; b < 3; ++b) {
        CHECK(frob::psi(ctx, b, 2, b).is_identity());
        for (point_t d = 0; d < 3; ++d) CHECK(frob::psi(ctx, b, 1, d).is_identity());
    }
    CHECK_THROWS_AS(frob::psi(ctx, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("psi is fixed-point-free exactly when its base points differ") {
    for (const auto& g : corpus()) {
        FrobeniusContext ctx = frob::build_context(g);
        for (point_t a : ctx.e_star()) {
            if (a == ctx.zero() || a == ctx.one()) continue;
            for (point_t b = 0; b < g.degree(); ++b)
                for (point_t d = 0; d < g.degree(); ++d) {
                    Permutation p = frob::psi(ctx, b, a, d);
                    if (b == d)
                        CHECK(p.is_identity());
                    else
                        CHECK(frob::is_fixed_point_free(p));
                }
        }
        CHECK(frob::verify_phi_psi(ctx).ok());
    }
}

TEST_CASE("phi family fills each point stabilizer exactly") {
    FrobeniusContext ctx3 = frob::build_context(s3());
    CHECK(frob::phi_family(ctx3, 0) ==
          std::vector<Permutation>{Permutation::identity(3), frob::from_cycles(3, {{1, 2}})});
    for (const auto& g : corpus()) {
        FrobeniusContext ctx = frob::build_context(g);
        for (point_t b = 0; b < g.degree(); ++b) {
            std::vector<Permutation> family = frob::phi_family(ctx, b);
            CHECK(family == g.point_stabilizer(b).elements());
            CHECK(family.size() == ctx.e_star().size() - 1);
        }
    }
}

TEST_CASE("build_T pinned result for the degree-3 group") {
    FrobeniusContext ctx = frob::build_context(s3());
    std::vector<Permutation> t = frob::build_T(ctx, 2);
    CHECK(t == std::vector<Permutation>{Permutation::identity(3),
                                        frob::from_cycles(3, {{0, 1, 2}}),
                                        frob::from_cycles(3, {{0, 2, 1}})});
    CHECK_THROWS_AS(frob::build_T(ctx, 0), std::invalid_argument);
    CHECK_THROWS_AS(frob::build_T(ctx, 1), std::invalid_argument);
    CHECK_THROWS_AS(frob::build_T(ctx, 3), std::invalid_argument);
    CHECK_THROWS_AS(frob::build_T(frob::build_context(d5()), 2), std::invalid_argument);
}

TEST_CASE("build_T output is a sharply transitive set of the right size") {
    for (const auto& g : corpus()) {
        FrobeniusContext ctx = frob::build_context(g);
        for (point_t a0 : ctx.e_star()) {
            if (a0 == ctx.zero() || a0 == ctx.one()) continue;
            std::vector<Permutation> t = frob::build_T(ctx, a0);
            CHECK(t.size() == static_cast<std::size_t>(g.degree()));
            CHECK(std::binary_search(t.begin(), t.end(), Permutation::identity(g.degree())));
            CHECK(frob::is_sharply_transitive(t, g.degree()));
        }
    }
}

TEST_CASE("the Klein four-group appears inside the alternating group") {
    FrobeniusContext ctx = frob::build_context(a4());
    std::vector<Permutation> t = frob::build_T(ctx, 2);
    REQUIRE(t.size() == 4);
    for (const auto& p : t) CHECK(compose(p, p).is_identity());  // all involutions or id
    std::size_t double_transpositions = 0;
    for (const auto& p : t)
        if (frob::is_fixed_point_free(p)) ++double_transpositions;
    CHECK(double_transpositions == 3);
}

TEST_CASE("regular cyclic kernels for the affine groups") {
    FrobeniusContext ctx = frob::build_context(agl5());
    std::vector<Permutation> t = frob::build_T(ctx, 2);
    CHECK(t == oracles::cyclic_group(5));  // the translations x -> x + b

    std::vector<Permutation> t7 = frob::build_T(frob::build_context(agl7()), 2);
    CHECK(t7 == oracles::cyclic_group(7));
}

TEST_CASE("brute-force kernel collects the fixed-point-free elements plus id") {
    std::vector<Permutation> k3 = frob::brute_force_kernel(s3());
    CHECK(k3 == std::vector<Permutation>{Permutation::identity(3),
                                         frob::from_cycles(3, {{0, 1, 2}}),
                                         frob::from_cycles(3, {{0, 2, 1}})});

    std::vector<Permutation> k4 = frob::brute_force_kernel(a4());
    CHECK(k4.size() == 4);

    std::vector<Permutation> k7 = frob::brute_force_kernel(agl7());
    CHECK(k7.size() == 7);
    for (const auto& p : k7)
        if (!p.is_identity()) CHECK(frob::cycle_string(p).size() == 15);  // a full 7-cycle

    CHECK_THROWS_AS(frob::brute_force_kernel(make(oracles::all_permutations(4))),
                    std::invalid_argument);
    CHECK_THROWS_AS(frob::brute_force_kernel(make(oracles::cyclic_group(5))),
                    std::invalid_argument);
}

TEST_CASE("constructed kernel equals the oracle for every admissible a0") {
    for (const auto& g : corpus()) {
        FrobeniusContext ctx = frob::build_context(g);
        std::vector<Permutation> oracle = frob::brute_force_kernel(g);
        CHECK(oracle.size() == static_cast<std::size_t>(g.degree()));
        for (point_t a0 : ctx.e_star()) {
            if (a0 == ctx.zero() || a0 == ctx.one()) continue;
            CHECK(frob::build_T(ctx, a0) == oracle);
        }
    }
}

TEST_CASE("counting laws") {
    for (const auto& g : corpus()) {
        std::size_t fpf = 0;
        for (const auto& p : g.elements())
            if (frob::is_fixed_point_free(p)) ++fpf;
        CHECK(fpf == static_cast<std::size_t>(g.degree()) - 1);
        CHECK(g.order() ==
              static_cast<std::size_t>(g.degree()) * g.point_stabilizer(0).order());
    }
}

TEST_CASE("left transversal verification") {
    PermutationGroup g = s3();
    FrobeniusContext ctx = frob::build_context(g);
    std::vector<Permutation> t = frob::build_T(ctx, 2);
    CHECK(frob::verify_left_transversal(t, g, ctx.h0()).ok);
    for (point_t a = 0; a < 3; ++a)
        CHECK(frob::verify_left_transversal(t, g, g.point_stabilizer(a)).ok);

    // swap a kernel element for a stabilizer element: two of the set now
    // share the coset of the identity
    std::vector<Permutation> corrupted = t;
    corrupted[1] = frob::from_cycles(3, {{1, 2}});
    frob::TransversalCheck tc = frob::verify_left_transversal(corrupted, g, ctx.h0());
    CHECK_FALSE(tc.ok);
    CHECK(tc.witness == "coset of id contains 2 elements of the set");

    frob::TransversalCheck small = frob::verify_left_transversal(
        {Permutation::identity(3)}, g, ctx.h0());
    CHECK_FALSE(small.ok);
    CHECK(small.witness.find("size") != std::string::npos);

    CHECK_THROWS_AS(
        frob::verify_left_transversal({Permutation::identity(4)}, g, ctx.h0()),
        std::invalid_argument);
}

TEST_CASE("loop transversal evidence across the corpus") {
    for (const auto& g : corpus()) {
        FrobeniusContext ctx = frob::build_context(g);
        std::vector<Permutation> t = frob::build_T(ctx, ctx.e_star()[2] == ctx.one()
                                                           ? ctx.e_star().back()
                                                           : ctx.e_star()[2]);
        for (point_t a = 0; a < g.degree(); ++a)
            CHECK(frob::verify_left_transversal(t, g, g.point_stabilizer(a)).ok);
    }
}

TEST_CASE("subgroup and normality verification") {
    PermutationGroup g = s3();
    std::vector<Permutation> t = frob::build_T(frob::build_context(g), 2);
    frob::SubgroupNormalReport good = frob::verify_subgroup_and_normal(t, g);
    CHECK(good.subgroup());
    CHECK(good.normal());
    CHECK(good.normal_generators);
    CHECK(good.normal_full_scan);

    // {id, (0 1)} is a subgroup of the degree-3 symmetric group but not normal
    PermutationGroup gen3 = PermutationGroup::generate(
        {frob::from_cycles(3, {{0, 1, 2}}), frob::from_cycles(3, {{0, 1}})}, 3);
    std::vector<Permutation> sub{Permutation::identity(3), frob::from_cycles(3, {{0, 1}})};
    frob::SubgroupNormalReport r = frob::verify_subgroup_and_normal(sub, gen3);
    CHECK(r.subgroup());
    CHECK_FALSE(r.normal());
    CHECK_FALSE(r.normal_generators);
    CHECK_FALSE(r.normal_full_scan);
    CHECK(r.normal_witness.find("(1 2)") != std::string::npos);

    // {id, (0 1 2)} is not closed under product or inverse
    std::vector<Permutation> notsub{Permutation::identity(3), frob::from_cycles(3, {{0, 1, 2}})};
    frob::SubgroupNormalReport nr = frob::verify_subgroup_and_normal(notsub, gen3);
    CHECK_FALSE(nr.closed_under_product);
    CHECK_FALSE(nr.closed_under_inverse);
    CHECK(nr.product_witness.find("(0 2 1)") != std::string::npos);

    CHECK_THROWS_AS(frob::verify_subgroup_and_normal({Permutation::identity(4)}, g),
                    std::invalid_argument);
}

TEST_CASE("group decomposes into stabilizers plus the kernel") {
    for (const auto& g : corpus()) {
        std::set<Permutation> covered;
        for (point_t a = 0; a < g.degree(); ++a) {
            const PermutationGroup stab = g.point_stabilizer(a);
            for (const auto& p : stab.elements()) covered.insert(p);
        }
        for (const auto& p : frob::brute_force_kernel(g)) covered.insert(p);
        CHECK(covered.size() == g.order());
    }
}

TEST_CASE("stabilizers indexed by e_star alone undercover some groups") {
    PermutationGroup g = d5();
    FrobeniusContext ctx = frob::build_context(g);
    REQUIRE(ctx.e_star() == std::vector<point_t>{0, 1, 4});
    std::set<Permutation> covered;
    for (point_t a : ctx.e_star()) {
        const PermutationGroup stab = g.point_stabilizer(a);
        for (const auto& p : stab.elements()) covered.insert(p);
    }
    for (const auto& p : frob::brute_force_kernel(g)) covered.insert(p);
    CHECK(covered.size() == 8);  // misses the reflections fixing 2 and 3
    CHECK(covered.size() < g.order());
}

TEST_CASE("pipeline certificates for genuine groups") {
    for (const auto& g : corpus()) {
        frob::KernelCertificate cert = frob::kernel_pipeline(g);
        CHECK(cert.ok());
        CHECK(cert.accepted);
        CHECK(cert.s_system_ok);
        CHECK(cert.orthogonality_ok);
        CHECK(cert.phi_psi_ok);
        CHECK(cert.a0_invariant);
        CHECK(cert.sharply_transitive);
        CHECK(cert.equals_oracle);
        CHECK(cert.left_transversal_h0);
        CHECK(cert.loop_transversal);
        CHECK(cert.closed_under_product);
        CHECK(cert.closed_under_inverse);
        CHECK(cert.normal);
        CHECK(cert.witnesses.empty());
        CHECK(cert.t.size() == static_cast<std::size_t>(g.degree()));
        CHECK(cert.fixed_point_free_count == static_cast<std::size_t>(g.degree()) - 1);
        CHECK(cert.group_order == static_cast<std::size_t>(g.degree()) * cert.h0_order);
        CHECK(cert.normal_paths == "generators,full-scan");
    }
}

TEST_CASE("pipeline rejects non-Frobenius input with the detector's reason") {
    frob::KernelCertificate s4cert = frob::kernel_pipeline(make(oracles::all_permutations(4)));
    CHECK_FALSE(s4cert.accepted);
    CHECK_FALSE(s4cert.ok());
    CHECK(s4cert.rejection_reason == "not Frobenius: St_{0,1} contains (2 3)");

    frob::KernelCertificate c5cert = frob::kernel_pipeline(make(oracles::cyclic_group(5)));
    CHECK_FALSE(c5cert.accepted);
    CHECK(c5cert.rejection_reason.find("regular") != std::string::npos);

    frob::KernelCertificate icert = frob::kernel_pipeline(
        PermutationGroup::generate({frob::from_cycles(3, {{0, 1}})}, 3));
    CHECK_FALSE(icert.accepted);
    CHECK(icert.rejection_reason.find("not transitive") != std::string::npos);
}

TEST_CASE("a0 policy all tests every admissible point") {
    frob::PipelineOptions opts;
    opts.a0_policy = frob::A0Policy::all;
    frob::KernelCertificate cert = frob::kernel_pipeline(agl5(), opts);
    CHECK(cert.a0_tested == std::vector<point_t>{2, 3, 4});
    CHECK(cert.a0 == 2);
    CHECK(cert.a0_invariant);
    CHECK(cert.ok());

    CHECK(frob::parse_a0_policy("first") == frob::A0Policy::first);
    CHECK(frob::parse_a0_policy("all") == frob::A0Policy::all);
    CHECK_THROWS_AS(frob::parse_a0_policy("some"), std::invalid_argument);
}

TEST_CASE("kernel is invariant under base points, sigma policy, and a0") {
    for (const auto& g : corpus()) {
        frob::KernelCertificate reference = frob::kernel_pipeline(g);
        for (frob::PipelineOptions opts :
             {frob::PipelineOptions{1, 2, frob::A0Policy::all, frob::SigmaPolicy::lex()},
              frob::PipelineOptions{0, 1, frob::A0Policy::all, frob::SigmaPolicy::seeded(7)},
              frob::PipelineOptions{2, 0, frob::A0Policy::all,
                                    frob::SigmaPolicy::seeded(99)}}) {
            frob::KernelCertificate cert = frob::kernel_pipeline(g, opts);
            CHECK(cert.ok());
            CHECK(cert.t == reference.t);
        }
    }
}

TEST_CASE("certificate rendering is deterministic and complete") {
    PermutationGroup g = s3();
    frob::KernelCertificate c1 = frob::kernel_pipeline(g);
    frob::KernelCertificate c2 = frob::kernel_pipeline(g);
    std::string doc1 = frob::render_certificate(c1, frob::CertFormat::structured);
    std::string doc2 = frob::render_certificate(c2, frob::CertFormat::structured);
    CHECK(doc1 == doc2);
    CHECK(doc1.find("certificate: frobenius-kernel v1\n") == 0);
    CHECK(doc1.find("status: accepted\n") != std::string::npos);
    CHECK(doc1.find("t: id\nt: (0 1 2)\nt: (0 2 1)\n") != std::string::npos);
    CHECK(doc1.find("flag sharply-transitive: pass\n") != std::string::npos);
    CHECK(doc1.find("flag normal: pass\n") != std::string::npos);
    CHECK(doc1.find("result: pass\n") != std::string::npos);
    CHECK(doc1.find("witness") == std::string::npos);

    std::string text = frob::render_certificate(c1, frob::CertFormat::text);
    CHECK(text.find("result: PASS") != std::string::npos);

    frob::KernelCertificate rej = frob::kernel_pipeline(make(oracles::all_permutations(4)));
    std::string rdoc = frob::render_certificate(rej, frob::CertFormat::structured);
    CHECK(rdoc.find("status: rejected\n") != std::string::npos);
    CHECK(rdoc.find("reason: not Frobenius: St_{0,1} contains (2 3)\n") != std::string::npos);
    CHECK(rdoc.find("result: fail\n") != std::string::npos);

    CHECK(frob::parse_cert_format("text") == frob::CertFormat::text);
    CHECK(frob::parse_cert_format("structured") == frob::CertFormat::structured);
    CHECK(frob::parse_cert_format("json-like-structured") == frob::CertFormat::structured);
    CHECK_THROWS_AS(frob::parse_cert_format("xml"), std::invalid_argument);
}
