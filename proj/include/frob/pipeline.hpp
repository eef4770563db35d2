// End-to-end kernel certification: detection, context construction,
// S-system and orthogonality verification, phi/psi structure, T
// construction under an a0 policy, oracle comparison, and the
// transversal/subgroup/normality flags, assembled into a certificate that
// renders as a human report or a byte-stable structured document.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frob/frobenius.hpp"
#include "frob/kernel.hpp"
#include "frob/perm_group.hpp"
#include "frob/s_system.hpp"

namespace frob {

enum class A0Policy { first, all };

inline A0Policy parse_a0_policy(std::string_view text) {
    if (text == "first") return A0Policy::first;
    if (text == "all") return A0Policy::all;
    throw std::invalid_argument("a0 policy: expected 'first' or 'all', got '" +
                                std::string(text) + "'");
}

inline const char* a0_policy_name(A0Policy p) {
    return p == A0Policy::first ? "first" : "all";
}

struct PipelineOptions {
    point_t zero = 0;
    point_t one = 1;
    A0Policy a0_policy = A0Policy::first;
    SigmaPolicy sigma = SigmaPolicy::lex();
};

struct KernelCertificate {
    bool accepted = false;
    std::string rejection_reason;

    point_t degree = 0;
    std::size_t group_order = 0;
    std::vector<std::string> generators;

    point_t zero = 0;
    point_t one = 1;
    std::string sigma_desc;
    std::size_t h0_order = 0;
    std::vector<point_t> e_star;
    std::size_t fixed_point_free_count = 0;

    bool s_system_ok = false;
    std::string star_group_desc;
    bool orthogonality_ok = false;
    bool phi_psi_ok = false;

    std::string a0_policy_desc;
    point_t a0 = -1;
    std::vector<point_t> a0_tested;
    bool a0_invariant = false;

    std::vector<Permutation> t;
    std::vector<Permutation> oracle;

    bool sharply_transitive = false;
    bool equals_oracle = false;
    bool left_transversal_h0 = false;
    bool loop_transversal = false;
    bool closed_under_product = false;
    bool closed_under_inverse = false;
    bool normal = false;

    // key -> counterexample text, keyed by the stage or flag name.
    std::map<std::string, std::string> witnesses;
    std::string normal_paths = "generators,full-scan";

    bool ok() const {
        return accepted && s_system_ok && orthogonality_ok && phi_psi_ok && a0_invariant &&
               sharply_transitive && equals_oracle && left_transversal_h0 &&
               loop_transversal && closed_under_product && closed_under_inverse && normal;
    }
};

inline KernelCertificate kernel_pipeline(const PermutationGroup& g,
                                         const PipelineOptions& opts = {}) {
    KernelCertificate cert;
    cert.degree = g.degree();
    cert.group_order = g.order();
    for (const auto& gen : g.generators()) cert.generators.push_back(cycle_string(gen));
    cert.a0_policy_desc = a0_policy_name(opts.a0_policy);
    cert.sigma_desc = opts.sigma.describe();

    FrobeniusReport detection = check_frobenius(g);
    if (!detection.ok()) {
        cert.accepted = false;
        cert.rejection_reason = detection.describe();
        return cert;
    }
    cert.accepted = true;

    FrobeniusContext ctx = build_context(g, opts.zero, opts.one, opts.sigma);
    ContextReport ctx_report = verify_context(ctx);
    if (!ctx_report.ok())
        throw std::logic_error("kernel_pipeline: context invariant failed: " +
                               ctx_report.failures.front());

    cert.zero = ctx.zero();
    cert.one = ctx.one();
    cert.h0_order = ctx.h0().order();
    cert.e_star = ctx.e_star();
    for (const auto& p : g.elements())
        if (is_fixed_point_free(p)) ++cert.fixed_point_free_count;

    SSystemReport ss = verify_right_s_system(ctx);
    cert.s_system_ok = ss.ok();
    cert.star_group_desc = ss.star_structure;
    if (!ss.ok() && !ss.failures.empty()) cert.witnesses["s-system"] = ss.failures.front();

    cert.orthogonality_ok = true;
    for (std::size_t i = 0; i < cert.e_star.size() && cert.orthogonality_ok; ++i)
        for (std::size_t j = i + 1; j < cert.e_star.size(); ++j) {
            OrthogonalityCheck oc = check_orthogonal(ctx, cert.e_star[i], cert.e_star[j]);
            if (!oc.ok) {
                cert.orthogonality_ok = false;
                cert.witnesses["orthogonality"] =
                    "a=" + std::to_string(cert.e_star[i]) + ", b=" +
                    std::to_string(cert.e_star[j]) + ": " + oc.describe();
                break;
            }
        }

    PhiPsiReport pp = verify_phi_psi(ctx);
    cert.phi_psi_ok = pp.ok();
    if (!pp.ok() && !pp.failures.empty()) cert.witnesses["phi-psi"] = pp.failures.front();

    std::vector<point_t> admissible;
    for (point_t a : ctx.e_star())
        if (a != ctx.zero() && a != ctx.one()) admissible.push_back(a);
    if (admissible.empty())
        throw std::logic_error("kernel_pipeline: no admissible a0");
    if (opts.a0_policy == A0Policy::first)
        cert.a0_tested.push_back(admissible.front());
    else
        cert.a0_tested = admissible;
    cert.a0 = cert.a0_tested.front();

    cert.t = build_T(ctx, cert.a0);
    cert.a0_invariant = true;
    for (std::size_t i = 1; i < cert.a0_tested.size(); ++i) {
        if (build_T(ctx, cert.a0_tested[i]) != cert.t) {
            cert.a0_invariant = false;
            cert.witnesses["a0-invariant"] = "a0=" + std::to_string(cert.a0_tested[i]) +
                                             " yields a different set than a0=" +
                                             std::to_string(cert.a0);
            break;
        }
    }

    cert.oracle = brute_force_kernel(g);

    SharpTransitivityCheck stc = check_sharply_transitive(cert.t, g.degree());
    cert.sharply_transitive = stc.ok;
    if (!stc.ok) cert.witnesses["sharply-transitive"] = stc.describe();

    cert.equals_oracle = (cert.t == cert.oracle);
    if (!cert.equals_oracle) {
        for (const auto& p : cert.t)
            if (!std::binary_search(cert.oracle.begin(), cert.oracle.end(), p)) {
                cert.witnesses["equals-oracle"] =
                    cycle_string(p) + " is in T but not in the oracle kernel";
                break;
            }
        if (!cert.witnesses.count("equals-oracle"))
            for (const auto& p : cert.oracle)
                if (!std::binary_search(cert.t.begin(), cert.t.end(), p)) {
                    cert.witnesses["equals-oracle"] =
                        cycle_string(p) + " is in the oracle kernel but not in T";
                    break;
                }
    }

    TransversalCheck h0_check = verify_left_transversal(cert.t, g, ctx.h0());
    cert.left_transversal_h0 = h0_check.ok;
    if (!h0_check.ok) cert.witnesses["left-transversal-h0"] = h0_check.witness;

    cert.loop_transversal = true;
    for (point_t a = 0; a < g.degree(); ++a) {
        TransversalCheck tc = verify_left_transversal(cert.t, g, g.point_stabilizer(a));
        if (!tc.ok) {
            cert.loop_transversal = false;
            cert.witnesses["loop-transversal"] =
                "stabilizer of " + std::to_string(a) + ": " + tc.witness;
            break;
        }
    }

    SubgroupNormalReport sn = verify_subgroup_and_normal(cert.t, g);
    cert.closed_under_product = sn.closed_under_product;
    cert.closed_under_inverse = sn.closed_under_inverse;
    cert.normal = sn.normal();
    if (!sn.closed_under_product) cert.witnesses["closed-under-product"] = sn.product_witness;
    if (!sn.closed_under_inverse) cert.witnesses["closed-under-inverse"] = sn.inverse_witness;
    if (!sn.normal()) cert.witnesses["normal"] = sn.normal_witness;

    return cert;
}

enum class CertFormat { text, structured };

inline CertFormat parse_cert_format(std::string_view text) {
    if (text == "text") return CertFormat::text;
    if (text == "structured" || text == "json-like-structured") return CertFormat::structured;
    throw std::invalid_argument("format: expected 'text' or 'structured', got '" +
                                std::string(text) + "'");
}

namespace detail {

inline std::string join_points(const std::vector<point_t>& pts) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(pts[i]);
    }
    return out;
}

inline std::string render_structured(const KernelCertificate& c) {
    std::string out;
    auto line = [&](const std::string& key, const std::string& value) {
        out += key + ": " + value + "\n";
    };
    auto pass_line = [&](const std::string& key, bool ok) {
        line(key, ok ? "pass" : "fail");
        auto it = c.witnesses.find(key.starts_with("flag ") ? key.substr(5) : key);
        if (!ok && it != c.witnesses.end()) line("witness " + it->first, it->second);
    };

    line("certificate", "frobenius-kernel v1");
    line("status", c.accepted ? "accepted" : "rejected");
    line("degree", std::to_string(c.degree));
    line("group-order", std::to_string(c.group_order));
    for (const auto& gen : c.generators) line("generator", gen);
    if (!c.accepted) {
        line("reason", c.rejection_reason);
        line("result", "fail");
        return out;
    }
    line("zero", std::to_string(c.zero));
    line("one", std::to_string(c.one));
    line("sigma", c.sigma_desc);
    line("h0-order", std::to_string(c.h0_order));
    line("e-star", join_points(c.e_star));
    line("fixed-point-free", std::to_string(c.fixed_point_free_count));
    pass_line("s-system", c.s_system_ok);
    line("star-group", c.star_group_desc);
    pass_line("orthogonality", c.orthogonality_ok);
    pass_line("phi-psi", c.phi_psi_ok);
    line("a0-policy", c.a0_policy_desc);
    line("a0", std::to_string(c.a0));
    line("a0-tested", join_points(c.a0_tested));
    pass_line("a0-invariant", c.a0_invariant);
    line("t-size", std::to_string(c.t.size()));
    for (const auto& p : c.t) line("t", cycle_string(p));
    line("oracle-size", std::to_string(c.oracle.size()));
    pass_line("flag sharply-transitive", c.sharply_transitive);
    pass_line("flag equals-oracle", c.equals_oracle);
    pass_line("flag left-transversal-h0", c.left_transversal_h0);
    pass_line("flag loop-transversal", c.loop_transversal);
    pass_line("flag closed-under-product", c.closed_under_product);
    pass_line("flag closed-under-inverse", c.closed_under_inverse);
    pass_line("flag normal", c.normal);
    line("normal-paths", c.normal_paths);
    line("result", c.ok() ? "pass" : "fail");
    return out;
}

inline std::string render_text(const KernelCertificate& c) {
    std::string out = "Frobenius kernel certificate\n";
    out += "  input: degree " + std::to_string(c.degree) + ", order " +
           std::to_string(c.group_order) + ", generators:";
    if (c.generators.empty()) out += " (none)";
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        out += (i ? ", " : " ") + c.generators[i];
    out += "\n";
    if (!c.accepted) {
        out += "  status: rejected\n";
        out += "  reason: " + c.rejection_reason + "\n";
        out += "  result: FAIL\n";
        return out;
    }
    out += "  status: accepted\n";
    out += "  base points: zero=" + std::to_string(c.zero) + " one=" + std::to_string(c.one) +
           ", sigma=" + c.sigma_desc + "\n";
    out += "  H0 order " + std::to_string(c.h0_order) + "; e_star = {";
    for (std::size_t i = 0; i < c.e_star.size(); ++i)
        out += (i ? ", " : "") + std::to_string(c.e_star[i]);
    out += "}; fixed-point-free elements: " + std::to_string(c.fixed_point_free_count) + "\n";
    auto flag = [&](const std::string& name, bool ok) {
        out += "  " + name + ": " + (ok ? "pass" : "fail") + "\n";
        auto it = c.witnesses.find(name);
        if (!ok && it != c.witnesses.end()) out += "    witness: " + it->second + "\n";
    };
    flag("s-system", c.s_system_ok);
    out += "  star group: " + c.star_group_desc + "\n";
    flag("orthogonality", c.orthogonality_ok);
    flag("phi-psi", c.phi_psi_ok);
    out += "  a0 policy " + c.a0_policy_desc + "; tested a0 = " + join_points(c.a0_tested) +
           "\n";
    flag("a0-invariant", c.a0_invariant);
    out += "  T (" + std::to_string(c.t.size()) + " elements):";
    for (std::size_t i = 0; i < c.t.size(); ++i)
        out += (i ? ", " : " ") + cycle_string(c.t[i]);
    out += "\n  oracle kernel (" + std::to_string(c.oracle.size()) + " elements):";
    for (std::size_t i = 0; i < c.oracle.size(); ++i)
        out += (i ? ", " : " ") + cycle_string(c.oracle[i]);
    out += "\n";
    flag("sharply-transitive", c.sharply_transitive);
    flag("equals-oracle", c.equals_oracle);
    flag("left-transversal-h0", c.left_transversal_h0);
    flag("loop-transversal", c.loop_transversal);
    flag("closed-under-product", c.closed_under_product);
    flag("closed-under-inverse", c.closed_under_inverse);
    flag("normal", c.normal);
    out += "  normality checked via: " + c.normal_paths + "\n";
    out += std::string("  result: ") + (c.ok() ? "PASS" : "FAIL") + "\n";
    return out;
}

}  // namespace detail

inline std::string render_certificate(const KernelCertificate& c, CertFormat format) {
    return format == CertFormat::structured ? detail::render_structured(c)
                                            : detail::render_text(c);
}

}  // namespace frob
