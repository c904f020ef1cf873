#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypspec/acceptance.hpp"
#include "hypspec/bumps.hpp"
#include "hypspec/complex_parse.hpp"
#include "hypspec/csv_format.hpp"
#include "hypspec/eisenstein2d.hpp"
#include "hypspec/finite_model_io.hpp"
#include "hypspec/finite_ops.hpp"
#include "hypspec/finite_sobolev.hpp"
#include "hypspec/harish_chandra.hpp"
#include "hypspec/regularization.hpp"
#include "hypspec/sobolev.hpp"
#include "hypspec/spherical.hpp"

using namespace hypspec;
using nlohmann::json;

namespace {

// Atomic write: stage into <path>.tmp and rename into place.
void write_file(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw precondition_error("output path writable", "'" + path + "'");
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

// "start:stop:count" inclusive linear range
std::vector<double> parse_range(const std::string& text) {
    double lo, hi;
    int count;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 || count < 1)
        throw precondition_error("range must be start:stop:count", "'" + text + "'");
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    return out;
}

rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return rational(bigint(text));
        return rational(bigint(text.substr(0, slash)), bigint(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw precondition_error("rational must be p or p/q", "'" + text + "'");
    }
}

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

int fail(const std::string& code, const std::exception& e) {
    json err{{"error", code}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypspec: spherical functions, Eisenstein series and finite "
                 "Gelfand-pair verification on hyperbolic space"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path = "-";
    app.add_option("-o,--output", out_path, "output file ('-' for stdout)")
        ->capture_default_str();

    // ---- cfun ----
    auto* cfun = app.add_subcommand("cfun", "Harish-Chandra c-function along the critical line");
    int cfun_n = 3;
    std::string cfun_range = "0.1:100:200";
    cfun->add_option("--n", cfun_n, "dimension of X")->capture_default_str();
    cfun->add_option("--tau-range", cfun_range, "tau grid start:stop:count")
        ->capture_default_str();

    // ---- spherical ----
    auto* sph = app.add_subcommand("spherical", "zonal spherical function psi_s(t) samples");
    int sph_n = 2;
    std::string sph_s = "0.5+1i", sph_trange = "0:6:121";
    sph->add_option("--n", sph_n, "dimension")->capture_default_str();
    sph->add_option("--s", sph_s, "spectral parameter (re+imi)")->capture_default_str();
    sph->add_option("--t-range", sph_trange, "radial grid")->capture_default_str();

    // ---- transform ----
    auto* tr = app.add_subcommand("transform", "spherical transform of a radial function");
    int tr_n = 2;
    std::string tr_input, tr_bump = "gauss";
    double tr_taumax = 14.0, tr_tmax = 9.0;
    int tr_nodes = 769, tr_radial = 352;
    tr->add_option("--n", tr_n, "dimension")->capture_default_str();
    tr->add_option("--input", tr_input, "CSV of samples (t,value_re,value_im); "
                                        "overrides --bump");
    tr->add_option("--bump", tr_bump, "builtin bump name")->capture_default_str();
    tr->add_option("--tau-max", tr_taumax, "critical line truncation")->capture_default_str();
    tr->add_option("--nodes", tr_nodes, "line nodes")->capture_default_str();
    tr->add_option("--t-max", tr_tmax, "radial truncation")->capture_default_str();
    tr->add_option("--radial-nodes", tr_radial, "radial nodes")->capture_default_str();

    // ---- fundamental ----
    auto* fu = app.add_subcommand("fundamental", "fundamental solution of (-Delta-lambda)^N");
    int fu_n = 2, fu_N = 2, fu_nodes = 2049;
    std::string fu_lambda = "-5", fu_trange = "0.05:4:80";
    double fu_taumax = 48.0;
    fu->add_option("--n", fu_n, "dimension")->capture_default_str();
    fu->add_option("--N", fu_N, "operator power")->capture_default_str();
    fu->add_option("--lambda", fu_lambda, "spectral shift (re+imi)")->capture_default_str();
    fu->add_option("--t-range", fu_trange, "radial output grid")->capture_default_str();
    fu->add_option("--tau-max", fu_taumax, "line truncation")->capture_default_str();
    fu->add_option("--nodes", fu_nodes, "line nodes")->capture_default_str();

    // ---- eisenstein ----
    auto* ei = app.add_subcommand("eisenstein", "real-analytic Eisenstein series (n=2)");
    std::string ei_s = "0.5+3i", ei_mode = "values", ei_xrange = "0:0.5:6",
                ei_yrange = "0.8:2:4", ei_heights = "2:6:5";
    int ei_trunc = 200;
    ei->add_option("--s", ei_s, "spectral parameter")->capture_default_str();
    ei->add_option("--mode", ei_mode, "values | constant-term")->capture_default_str();
    ei->add_option("--x-range", ei_xrange, "x grid")->capture_default_str();
    ei->add_option("--y-range", ei_yrange, "y grid")->capture_default_str();
    ei->add_option("--heights", ei_heights, "heights for the constant-term fit")
        ->capture_default_str();
    ei->add_option("--trunc", ei_trunc, "lattice truncation")->capture_default_str();

    // ---- regularize ----
    auto* re = app.add_subcommand("regularize", "singular subtraction list for E_a E_b");
    std::string re_a = "1.2", re_b = "0.5+3i", re_ca, re_cb;
    re->add_option("--a", re_a, "parameter a")->capture_default_str();
    re->add_option("--b", re_b, "parameter b")->capture_default_str();
    re->add_option("--ca", re_ca, "override c_a (re+imi); default from constant term");
    re->add_option("--cb", re_cb, "override c_b");

    // ---- finite-verify ----
    auto* fv = app.add_subcommand("finite-verify", "run the finite-model verification suite");
    std::string fv_model;
    std::string fv_lambda = "-3";
    int fv_N = 2, fv_pairs = 20;
    uint64_t fv_seed = 2026;
    bool fv_exact = true;
    fv->add_option("--model", fv_model, "model spec JSON path")->required();
    fv->add_option("--N", fv_N, "operator power")->capture_default_str();
    fv->add_option("--lambda", fv_lambda, "rational shift p or p/q")->capture_default_str();
    fv->add_option("--pairs", fv_pairs, "random (f,f') pairs")->capture_default_str();
    fv->add_option("--seed", fv_seed, "RNG seed")->capture_default_str();
    fv->add_flag("--exact,!--float", fv_exact, "rational mode (default on)")
        ->capture_default_str();

    // ---- report ----
    auto* rp = app.add_subcommand("report", "run the acceptance suite and emit a JSON summary");
    std::string rp_models = "models";
    rp->add_option("--models-dir", rp_models, "directory with bundled model specs")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        std::ostringstream os;

        if (*cfun) {
            os << csv_header_cfun << "\n";
            for (double tau : parse_range(cfun_range)) {
                const cplx c = c_function(SpectralParameter::critical_line(tau, cfun_n));
                os << format_double(tau) << "," << format_double(c.real()) << ","
                   << format_double(c.imag()) << ","
                   << format_double(plancherel_density(tau, cfun_n)) << "\n";
            }
            write_file(out_path, os.str());
        } else if (*sph) {
            const SpectralParameter p(parse_complex(sph_s), sph_n);
            os << csv_header_radial << "\n";
            for (double t : parse_range(sph_trange)) {
                const cplx v = psi(p, t);
                os << format_double(t) << "," << format_double(v.real()) << ","
                   << format_double(v.imag()) << "\n";
            }
            write_file(out_path, os.str());
        } else if (*tr) {
            QuadratureSpec q;
            q.tau_max = tr_taumax;
            q.nodes = tr_nodes;
            q.radial_t_max = tr_tmax;
            q.radial_nodes = tr_radial;
            RadialFunction f;
            if (!tr_input.empty()) {
                std::ifstream in(tr_input);
                if (!in) throw precondition_error("input readable", "'" + tr_input + "'");
                std::string line;
                std::getline(in, line);  // header
                std::vector<double> ts;
                std::vector<cplx> vals;
                double t, vr, vi;
                while (std::getline(in, line))
                    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &vr, &vi) == 3) {
                        ts.push_back(t);
                        vals.push_back(cplx(vr, vi));
                    }
                f = RadialFunction::from_samples(std::move(ts), std::move(vals), tr_n);
            } else {
                const AnalyticBump* bump = nullptr;
                for (const auto& b : transform_bumps())
                    if (b.name == tr_bump) bump = &b;
                if (!bump)
                    throw precondition_error("known bump name", "'" + tr_bump + "'");
                f = bump_radial(*bump, tr_n, q.radial_t_max);
            }
            const SphericalTransform F = spherical_transform(f, q);
            os << csv_header_transform << "\n";
            for (size_t j = 0; j < F.tau.size(); ++j)
                os << format_double(F.tau[j]) << "," << format_double(F.values[j].real())
                   << "," << format_double(F.values[j].imag()) << "\n";
            write_file(out_path, os.str());
        } else if (*fu) {
            QuadratureSpec q;
            q.tau_max = fu_taumax;
            q.nodes = fu_nodes;
            const FundamentalSolutionSpec spec(fu_N, parse_complex(fu_lambda), fu_n, q);
            const std::vector<double> ts = parse_range(fu_trange);
            const auto u = fundamental_solution_profile(spec, ts);
            os << csv_header_fundamental << "\n";
            for (size_t i = 0; i < ts.size(); ++i)
                os << format_double(ts[i]) << "," << format_double(u[i].real()) << ","
                   << format_double(u[i].imag()) << "\n";
            write_file(out_path, os.str());
        } else if (*ei) {
            const cplx s = parse_complex(ei_s);
            if (ei_mode == "values") {
                os << csv_header_eisenstein << "\n";
                for (double y : parse_range(ei_yrange))
                    for (double x : parse_range(ei_xrange)) {
                        const cplx v = eisenstein_eval(
                            s, HyperbolicPoint::half_space({x}, y), ei_trunc);
                        os << format_double(x) << "," << format_double(y) << ","
                           << format_double(v.real()) << "," << format_double(v.imag())
                           << "\n";
                    }
            } else if (ei_mode == "constant-term") {
                const auto ct = constant_term(s, parse_range(ei_heights),
                                              EisensteinMethod::automatic, ei_trunc);
                os << csv_header_constant_term << "\n";
                os << format_double(s.real()) << "," << format_double(s.imag()) << ","
                   << format_double(ct.leading.real()) << ","
                   << format_double(ct.leading.imag()) << ","
                   << format_double(ct.c_s.real()) << "," << format_double(ct.c_s.imag())
                   << "," << format_double(ct.residual) << "\n";
            } else {
                throw precondition_error("mode in {values, constant-term}",
                                         "'" + ei_mode + "'");
            }
            write_file(out_path, os.str());
        } else if (*re) {
            const cplx a = parse_complex(re_a), b = parse_complex(re_b);
            ScatteringValues cv;
            cv.at_a = re_ca.empty() ? scattering_c(a) : parse_complex(re_ca);
            cv.at_b = re_cb.empty() ? scattering_c(b) : parse_complex(re_cb);
            const auto reg = regularize(a, b, cv);
            json j{{"a", complex_json(a)},
                   {"b", complex_json(b)},
                   {"subtractions", json::array()},
                   {"certificate",
                    {{"worst_surviving_re", reg.certificate.sigma},
                     {"classification", to_string(reg.certificate.classification)}}}};
            for (const auto& sub : reg.subtractions)
                j["subtractions"].push_back(
                    {{"coeff_tag", to_string(sub.tag)},
                     {"coeff_value", complex_json(sub.coefficient)},
                     {"parameter", complex_json(sub.parameter)}});
            write_file(out_path, j.dump(2) + "\n");
        } else if (*fv) {
            const FiniteModel m = FiniteModel::build(load_model_spec(fv_model));
            json j{{"model", m.name},
                   {"order", m.G.order()},
                   {"points", m.nX},
                   {"exact_mode", m.exact()},
                   {"gelfand_pair", m.gelfand_pair},
                   {"eigenvalues", m.eigenvalue_list()}};
            if (fv_exact && !m.exact())
                throw precondition_error("rational mode available",
                                         "model spectrum is not integral");
            if (fv_exact) {
                const auto pd =
                    poincare_series<rational>(m, fv_N, parse_rational(fv_lambda));
                j["poincare_sum_equals_solve"] = true;  // asserted in the call
                std::mt19937_64 rng(fv_seed);
                bool pairs_ok = true;
                for (int trial = 0; trial < fv_pairs; ++trial) {
                    const int l1 = trial % m.spec.levels.size();
                    const int l2 = (trial * 7 + 1) % m.spec.levels.size();
                    const QVector f = random_eigenvector(m, l1, rng);
                    const QVector fp = random_eigenvector(m, l2, rng);
                    period_extraction<rational>(m, pd, l1, f);
                    pairs_ok = pairs_ok &&
                               verify_two_expansions<rational>(m, pd, f, fp).exact_equal;
                }
                j["two_expansions_exact"] = pairs_ok;
                j["period_identity_exact"] = true;  // throws otherwise
                const auto sob = automorphic_sobolev_suite(m, fv_seed);
                j["delta_expansion_exact"] = sob.delta_expansion_exact;
                j["parseval_exact"] = sob.parseval_exact;
                j["duality_worst_ratio"] = sob.duality_worst_ratio;
                j["resolvent_scaling_exact"] = sob.resolvent_scaling_exact;
                j["counting_monotone"] = sob.counting_monotone;
                if (m.has_parabolic && !m.characters.empty()) {
                    bool weights_ok = true;
                    for (const auto& [na, ca] : m.characters)
                        for (const auto& [nb, cb] : m.characters) {
                            const auto fa = m.eisenstein_vector(na);
                            const auto fb = m.eisenstein_vector(nb);
                            QVector qa(m.nX), qb(m.nX);
                            for (int x = 0; x < m.nX; ++x) {
                                qa[x] = rational(static_cast<long long>(std::llround(fa[x])));
                                qb[x] = rational(static_cast<long long>(std::llround(fb[x])));
                            }
                            const auto wr = weight_reassembly<rational>(m, pd.u, qa, qb);
                            weights_ok = weights_ok && wr.equal;
                        }
                    j["weight_reassembly_exact"] = weights_ok;
                }
                bool all = pairs_ok && sob.delta_expansion_exact && sob.parseval_exact &&
                           sob.resolvent_scaling_exact && sob.counting_monotone &&
                           (!j.contains("weight_reassembly_exact") ||
                            j["weight_reassembly_exact"].get<bool>());
                j["all_pass"] = all;
                write_file(out_path, j.dump(2) + "\n");
                if (!all) return 2;
            } else {
                const auto pd = poincare_series<double>(
                    m, fv_N, static_cast<double>(parse_rational(fv_lambda)));
                std::mt19937_64 rng(fv_seed);
                std::uniform_real_distribution<double> coef(-1.0, 1.0);
                double worst = 0.0;
                for (int trial = 0; trial < fv_pairs; ++trial) {
                    std::vector<double> f(m.nX), fp(m.nX);
                    for (auto& v : f) v = coef(rng);
                    for (auto& v : fp) v = coef(rng);
                    const auto rep = verify_two_expansions<double>(m, pd, f, fp);
                    worst = std::max(worst, rep.max_rel_diff);
                }
                j["two_expansions_max_rel_diff"] = worst;
                j["all_pass"] = worst < 1e-10;
                write_file(out_path, j.dump(2) + "\n");
                if (!(worst < 1e-10)) return 2;
            }
        } else if (*rp) {
            const auto results = run_acceptance(rp_models);
            json j{{"criteria", json::array()}};
            bool all = true;
            for (const auto& r : results) {
                all = all && r.pass;
                j["criteria"].push_back({{"name", r.name},
                                         {"pass", r.pass},
                                         {"elapsed_ms", r.elapsed_ms},
                                         {"details", r.details}});
            }
            j["all_pass"] = all;
            write_file(out_path, j.dump(2) + "\n");
            if (!all) return 2;
        }
        return 0;
    } catch (const precondition_error& e) {
        return fail("precondition", e);
    } catch (const pole_error& e) {
        return fail("pole", e);
    } catch (const quadrature_error& e) {
        return fail("quadrature", e);
    } catch (const conditioning_error& e) {
        return fail("conditioning", e);
    } catch (const boundary_error& e) {
        return fail("boundary", e);
    } catch (const std::exception& e) {
        return fail("error", e);
    }
}
