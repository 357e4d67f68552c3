// Command line interface for the deformed CMS toolkit.
//
// Exit codes: 0 success, 1 theorem violation, 2 usage error,
//             3 domain error, 4 resource bound exceeded.
#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cmsdef/bipart.hpp"
#include "cmsdef/diagram.hpp"
#include "cmsdef/io.hpp"
#include "cmsdef/spectral.hpp"
#include "cmsdef/verify.hpp"

using namespace cmsdef;

namespace {

constexpr const char* kSchema = "cmsdef/1";

Partition parse_partition(const std::string& s) {
    Partition p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("malformed partition: " + s);
        p.push_back(v);
    }
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) throw std::invalid_argument("partition parts must not increase");
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (int v : p)
        if (v < 0) throw std::invalid_argument("partition parts must be nonnegative");
    return p;
}

int run_eqclass(int n, int m, const std::string& weight, bool json) {
    Weight chi = Weight::parse(weight, n, m);
    EqClassReport rep = eq_class(chi);
    if (json) {
        std::cout << "{\"schema\":\"" << kSchema << "\",\"command\":\"eqclass\",\"n\":" << n
                  << ",\"m\":" << m << ",\"report\":" << to_json(rep) << "}\n";
        return 0;
    }
    std::cout << "eqclass (n,m)=(" << n << "," << m << ") weight " << chi.str() << "\n";
    std::cout << "class size " << rep.members.size() << " (r = " << rep.r << "), chi_min "
              << rep.chi_min.str() << "\n";
    std::cout << "members:";
    for (const auto& w : rep.members) std::cout << " " << w.str();
    std::cout << "\n";
    for (size_t t = 0; t < rep.nu.size(); ++t) {
        std::cout << "beta[" << t + 1 << "] = "
                  << Weight(n, m, rep.nu[t].beta).str() << ", cells";
        for (const auto& c : rep.nu[t].cells)
            std::cout << " (" << c.first << "," << c.second << ")";
        std::cout << "\n";
    }
    std::cout << render_ascii(chi);
    return 0;
}

int run_bipartition(int n, int m, bool to_weight, const std::string& from_weight,
                    const std::string& lam_s, const std::string& mu_s, bool json) {
    if (to_weight == !from_weight.empty())
        throw std::invalid_argument("choose exactly one of --to-weight / --from-weight");
    if (to_weight) {
        Partition lam = parse_partition(lam_s), mu = parse_partition(mu_s);
        Weight p = pi_map(lam, mu, n, m);
        Weight s = sigma_map(lam, mu, n, m);
        bool sigma_ok = p == s;
        if (json) {
            std::cout << "{\"schema\":\"" << kSchema
                      << "\",\"command\":\"bipartition\",\"n\":" << n << ",\"m\":" << m
                      << ",\"direction\":\"to-weight\","
                      << "\"bipartition\":" << bipartition_to_json(lam, mu)
                      << ",\"weight\":\"" << p.str() << "\",\"sigma_check\":"
                      << (sigma_ok ? "\"pass\"" : "\"fail\"") << "}\n";
        } else {
            std::cout << "pi" << bipartition_to_json(lam, mu) << " = " << p.str()
                      << "  sigma_check=" << (sigma_ok ? "pass" : "fail") << "\n";
        }
        return sigma_ok ? 0 : 1;
    }
    Weight chi = Weight::parse(from_weight, n, m);
    auto [lam, mu] = pi_inverse(chi);
    bool roundtrip = pi_map(lam, mu, n, m) == chi;
    if (json) {
        std::cout << "{\"schema\":\"" << kSchema
                  << "\",\"command\":\"bipartition\",\"n\":" << n << ",\"m\":" << m
                  << ",\"direction\":\"from-weight\","
                  << "\"weight\":\"" << chi.str() << "\",\"bipartition\":"
                  << bipartition_to_json(lam, mu) << ",\"roundtrip\":"
                  << (roundtrip ? "\"pass\"" : "\"fail\"") << "}\n";
    } else {
        std::cout << "pi^-1(" << chi.str() << ") = " << bipartition_to_json(lam, mu)
                  << "  roundtrip=" << (roundtrip ? "pass" : "fail") << "\n";
    }
    return roundtrip ? 0 : 1;
}

int run_spectral(int n, int m, const std::string& weight, bool json) {
    Weight chi = Weight::parse(weight, n, m);
    if (!is_dominant(chi)) throw std::domain_error("weight not dominant");
    if (!is_regular(chi))
        throw std::domain_error(
            "not in X_reg: some odd positive root has (chi+rho,alpha) = (alpha,alpha)/2; "
            "use the minimal class representative");
    GenEigenspace ge = gen_eigenspace(chi);
    LocalAlgebraReport rep = image_algebra(ge);
    LaurentPoly j = eigenfunction(ge);
    bool dim_ok = static_cast<int>(ge.vectors.size()) == (1 << ge.cls.r);
    bool eigen_ok = true;
    for (int r = 1; r <= std::min(4, n + m + 2); ++r)
        eigen_ok = eigen_ok && integral_apply(r, j) == j * ge.theta[r - 1];
    if (json) {
        std::cout << "{\"schema\":\"" << kSchema << "\",\"command\":\"spectral\",\"n\":" << n
                  << ",\"m\":" << m << ",\"weight\":\"" << chi.str()
                  << "\",\"class\":" << to_json(ge.cls)
                  << ",\"module_dim\":" << ge.space.basis.size()
                  << ",\"eigenspace_dim\":" << ge.vectors.size()
                  << ",\"dim_is_2_pow_r\":" << (dim_ok ? "true" : "false")
                  << ",\"algebra\":" << to_json(rep) << ",\"eigenfunction\":" << to_json(j)
                  << ",\"eigenfunction_check\":" << (eigen_ok ? "\"pass\"" : "\"fail\"")
                  << "}\n";
    } else {
        std::cout << "spectral (n,m)=(" << n << "," << m << ") weight " << chi.str() << "\n";
        std::cout << "class " << ge.cls.chi_min.str() << " (r = " << ge.cls.r
                  << "), ambient module dim " << ge.space.basis.size() << "\n";
        std::cout << "generalized eigenspace dim " << ge.vectors.size() << " (2^r check: "
                  << (dim_ok ? "pass" : "fail") << ")\n";
        std::cout << "image algebra: dim " << rep.dimension << ", nilpotency index "
                  << rep.nilpotency_index << ", dim m/m^2 = " << rep.cotangent_dim
                  << ", C[eps]^r profile: " << (rep.local_structure_ok ? "pass" : "fail")
                  << "\n";
        std::cout << "regular representation witness: "
                  << (rep.regular_representation_ok ? "pass" : "fail") << "\n";
        std::cout << "eigenfunction J = " << to_text(j) << "\n";
        std::cout << "L_r J = theta_chi(L_r) J for r <= 4: " << (eigen_ok ? "pass" : "fail")
                  << "\n";
        std::cout << "theta values:";
        for (int r = 1; r <= n + m; ++r) std::cout << " L_" << r << "=" << ge.theta[r - 1].str();
        std::cout << "\n";
    }
    bool ok = dim_ok && eigen_ok && rep.local_structure_ok && rep.regular_representation_ok;
    return ok ? 0 : 1;
}

int run_verify(const std::string& suite, int n, int m, int box, int rmax,
               const std::string& ksample, bool json) {
    verify::NmList nms{{n, m}};
    if (!ksample.empty()) {
        // probabilistic screen first; the exact run below remains authoritative
        mpq_class q(ksample);
        q.canonicalize();
        auto bad = verify::k_sample_screen(nms, box, rmax, q);
        std::cerr << "k-sample screen at k=" << q << ": "
                  << (bad ? *bad : std::string("no counterexample")) << "\n";
    }
    verify::CheckResult res;
    if (suite == "commute") {
        res = verify::commutation(nms, rmax, 60);
    } else if (suite == "bernoulli") {
        res = verify::bernoulli_identity(nms, box, rmax);
    } else if (suite == "bijection") {
        res = verify::bijection(nms, 2 * box, box);
    } else if (suite == "spectral") {
        std::vector<Weight> targets;
        for (const Weight& w : verify::dominant_box(n, m, box))
            if (is_regular(w)) targets.push_back(w);
        res = verify::spectral_dimensions(targets);
    } else {
        throw std::invalid_argument("unknown verify suite: " + suite);
    }
    if (json) {
        std::cout << "{\"schema\":\"" << kSchema << "\",\"command\":\"verify\",\"suite\":\""
                  << suite << "\",\"n\":" << n << ",\"m\":" << m
                  << ",\"pass\":" << (res.pass ? "true" : "false")
                  << ",\"cases\":" << res.cases << ",\"detail\":\"" << res.detail << "\"}\n";
    } else {
        std::cout << "[" << (res.pass ? "PASS" : "FAIL") << "] " << res.name << " ("
                  << res.cases << " cases) " << res.detail << "\n";
    }
    return res.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for the deformed CMS system of type A(n-1,m-1)"};
    app.require_subcommand(1);

    int n = 1, m = 1, box = 2, rmax = 3;
    std::string weight, suite, lam_s, mu_s, from_weight, ksample;
    bool json = false, to_weight_flag = false, timing = false;

    auto add_common = [&](CLI::App* sub, bool with_weight) {
        sub->add_option("--n", n, "even block size")->required();
        sub->add_option("--m", m, "odd block size")->required();
        if (with_weight)
            sub->add_option("--weight", weight, "weight \"(a1,..,an|b1,..,bm)\"")->required();
        sub->add_flag("--json", json, "machine readable output");
        sub->add_flag("--timing", timing, "print wall time to stderr");
    };

    CLI::App* eq = app.add_subcommand("eqclass", "equivalence class of a dominant weight");
    add_common(eq, true);

    CLI::App* bp = app.add_subcommand("bipartition", "pi / sigma bijection with Cr(n,m)");
    add_common(bp, false);
    bp->add_flag("--to-weight", to_weight_flag, "map a bipartition to its weight");
    bp->add_option("--from-weight", from_weight, "weight to pull back through pi");
    bp->add_option("--lambda", lam_s, "first partition, comma separated");
    bp->add_option("--mu", mu_s, "second partition, comma separated");

    CLI::App* sp = app.add_subcommand("spectral", "generalized eigenspace and image algebra");
    add_common(sp, true);

    CLI::App* vf = app.add_subcommand("verify", "batch verification suites");
    vf->add_option("suite", suite, "commute | bernoulli | bijection | spectral")->required();
    add_common(vf, false);
    vf->add_option("--box", box, "weight box / size bound");
    vf->add_option("--rmax", rmax, "largest integral order");
    vf->add_option("--k-sample", ksample, "rational sample for the probabilistic pre-screen");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (n < 0 || m < 0 || n + m < 1) throw std::invalid_argument("need n,m >= 0, n+m >= 1");
        if (eq->parsed()) code = run_eqclass(n, m, weight, json);
        else if (bp->parsed())
            code = run_bipartition(n, m, to_weight_flag, from_weight, lam_s, mu_s, json);
        else if (sp->parsed()) code = run_spectral(n, m, weight, json);
        else if (vf->parsed()) code = run_verify(suite, n, m, box, rmax, ksample, json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::length_error& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "theorem violation or internal error: " << e.what() << "\n";
        return 1;
    }
    if (timing) {
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cerr << "elapsed " << dt << "s\n";
    }
    return code;
}
