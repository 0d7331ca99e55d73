#include "bcabe/cli/commands.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bcabe/cli/state_file.hpp"
#include "bcabe/cuts/analysis.hpp"
#include "bcabe/cuts/certificate.hpp"
#include "bcabe/states/basis.hpp"
#include "bcabe/states/checks.hpp"
#include "bcabe/states/families.hpp"
#include "bcabe/tensor/ops.hpp"

namespace bcabe::cli {

namespace {

void require_size(int size)
{
    if (size != 4 && size != 6 && size != 8)
        throw UsageError("--size must be 4, 6 or 8");
}

FamilyLabel family_arg(const std::string& text)
{
    try {
        return parse_family(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("--family must be one of rho+, rho-, sigma+, sigma-");
    }
}

std::string placement_name(BellPlacement p)
{
    return p == BellPlacement::Leading ? "leading" : "trailing";
}

std::string fam(FamilyLabel f)
{
    return std::string(to_string(f));
}

ordered_json edge_json(const EdgeWeights& w)
{
    ordered_json out = ordered_json::array();
    for (int i = 1; i <= w.num_parties(); ++i)
        for (int j = i + 1; j <= w.num_parties(); ++j)
            if (w.at(i, j) != 0.0)
                out.push_back({{"i", i}, {"j", j}, {"ebits", w.at(i, j)}});
    return out;
}

ordered_json cut_json(const CutReport& r, bool asserted)
{
    ordered_json j;
    j["cut"] = r.cut.to_string();
    j["side_size"] = r.cut.smaller_side().size();
    j["min_pt_eigenvalue"] = r.min_pt_eigenvalue;
    j["negativity"] = r.negativity;
    j["classification"] = to_string(r.classification);
    j["margin"] = r.margin;
    j["asserted"] = asserted;
    return j;
}

// Expectation of X^{(x)n} and Z^{(x)n}.
std::pair<double, double> parity_expectations(const DensityMatrix& rho)
{
    const Matrix& m = rho.matrix();
    const Eigen::Index dim = m.rows();
    double x = 0.0, z = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        x += m(i, dim - 1 - i).real();
        z += (std::popcount(static_cast<std::uint64_t>(i)) % 2 == 0 ? 1.0 : -1.0) * m(i, i).real();
    }
    return {x, z};
}

double max_abs(const Matrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void emit(const Report& report, const Options& opts, std::ostream& out)
{
    const std::string text = report.render(utc_timestamp());
    if (opts.out.empty()) {
        out << text;
        return;
    }
    write_text_file(opts.out, text);
    out << report.payload()["command"].get<std::string>() << ": " << (report.checks().size() - report.failures())
        << "/" << report.checks().size() << " checks passed -> " << opts.out << "\n";
}

} // namespace

void cmd_state(const Options& opts)
{
    require_size(opts.size);
    if (opts.out.empty())
        throw UsageError("state needs --out");
    write_state_file(opts.out, build_family(opts.size, family_arg(opts.family)));
}

Report cmd_verify(const Options& opts)
{
    require_size(opts.size);
    const int n = opts.size;
    const double tol = opts.tolerance.value_or(kVerifyTolerance);
    Report rep("verify");
    rep.parameters()["size"] = n;
    rep.parameters()["tamper"] = opts.tamper;
    rep.tolerances()["structure"] = tol;

    std::vector<DensityMatrix> states;
    for (FamilyLabel f : kAllFamilies)
        states.push_back(build_family(n, f));
    if (opts.tamper) {
        const auto dim = states[0].dimension();
        Matrix m = 0.9 * states[0].matrix() + 0.1 * Matrix::Identity(static_cast<Eigen::Index>(dim),
                                                                       static_cast<Eigen::Index>(dim)) /
                                                   static_cast<double>(dim);
        states[0] = DensityMatrix::trusted(n, std::move(m));
    }
    const double rank = std::ldexp(1.0, n - 2);

    // Basis structure.
    const auto expected = static_cast<double>(std::size_t{1} << (n - 2));
    for (auto [name, sf] : {std::pair{"p", StringFamily::P}, std::pair{"q", StringFamily::Q}}) {
        const auto count = static_cast<double>(enumerate_parity_strings(n, sf).size());
        rep.results()["parity_strings"][name] = count;
        rep.check(std::string("basis/") + name + "-strings/count", count, "==", expected);
    }
    {
        const auto basis = ghz_basis(n);
        Matrix g(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(basis.size()));
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b)
                g(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                    basis[a].state.amplitudes().dot(basis[b].state.amplitudes());
        const double residual = max_abs(g - Matrix::Identity(g.rows(), g.cols()));
        rep.results()["ghz_gram_residual"] = residual;
        rep.check("basis/ghz-orthonormal", residual, "<", tol);
    }

    // Each family: parity signature and scaled projector.
    for (std::size_t k = 0; k < states.size(); ++k) {
        const FamilyLabel f = kAllFamilies[k];
        const auto [x, z] = parity_expectations(states[k]);
        const double xe = sign_of(f) > 0 ? 1.0 : -1.0;
        const double ze = is_rho(f) ? 1.0 : -1.0;
        const Matrix p = rank * states[k].matrix();
        rep.check("family/" + fam(f) + "/x-parity", std::abs(x - xe), "<", tol);
        rep.check("family/" + fam(f) + "/z-parity", std::abs(z - ze), "<", tol);
        rep.check("family/" + fam(f) + "/projector", max_abs(p * p - p), "<", tol);
    }

    // Recursion.
    for (std::size_t k = 0; k < states.size(); ++k)
        for (BellPlacement pl : {BellPlacement::Leading, BellPlacement::Trailing}) {
            const FamilyLabel f = kAllFamilies[k];
            const double d = trace_distance(states[k], recursion_rhs(n, f, pl));
            rep.results()["recursion"][fam(f)][placement_name(pl)] = d;
            rep.check("recursion/" + fam(f) + "/" + placement_name(pl), d, "<", tol);
        }

    // Orthogonality.
    for (std::size_t a = 0; a < states.size(); ++a)
        for (std::size_t b = a + 1; b < states.size(); ++b) {
            const double ov = std::abs((states[a].matrix() * states[b].matrix()).trace());
            rep.results()["overlaps"][fam(kAllFamilies[a]) + "," + fam(kAllFamilies[b])] = ov;
            rep.check("orthogonality/" + fam(kAllFamilies[a]) + "/" + fam(kAllFamilies[b]), ov, "<", tol);
        }

    // Pauli connections.
    ordered_json links = ordered_json::array();
    for (FamilyLabel a : kAllFamilies)
        for (FamilyLabel b : kAllFamilies) {
            if (a == b)
                continue;
            const auto link = pauli_connection_search(a, b, n);
            ordered_json j{{"from", fam(a)}, {"to", fam(b)}};
            if (link) {
                j["qubit"] = link->qubit;
                j["pauli"] = std::string(to_string(link->pauli));
            } else {
                j["qubit"] = nullptr;
            }
            links.push_back(std::move(j));
            rep.check_flag("pauli/" + fam(a) + "->" + fam(b), link.has_value());
        }
    rep.results()["pauli_connections"] = std::move(links);

    // Permutation symmetry and Bell-tuple structure.
    for (std::size_t k = 0; k < states.size(); ++k) {
        const FamilyLabel f = kAllFamilies[k];
        const double d = permutation_invariance_check(n, f);
        rep.results()["permutation_distance"][fam(f)] = d;
        rep.check("permutation/" + fam(f), d, "<", tol);

        try {
            const auto dec = bell_tuple_decomposition(states[k], disjoint_pairing(n));
            rep.results()["bell_tuples"][fam(f)] = dec.terms.size();
            rep.check("bell-tuples/" + fam(f) + "/count", static_cast<double>(dec.terms.size()), "==", expected);
            rep.check("bell-tuples/" + fam(f) + "/reconstruction", dec.reconstruction_error, "<", tol);
        } catch (const NotBellCorrelated& ex) {
            rep.results()["bell_tuples"][fam(f)] = nullptr;
            rep.check("bell-tuples/" + fam(f) + "/reconstruction", ex.error(), "<", tol);
        }
    }

    if (n == 4) {
        const double d = trace_distance(states[0], smolin_state());
        rep.results()["smolin_distance"] = d;
        rep.check("smolin-equivalence", d, "<", tol);
    }
    return rep;
}

Report cmd_cuts(const Options& opts)
{
    require_size(opts.size);
    const FamilyLabel f = family_arg(opts.family);
    const double tol = opts.tolerance.value_or(kCutTolerance);
    Report rep("cuts");
    rep.parameters()["size"] = opts.size;
    rep.parameters()["family"] = fam(f);
    rep.tolerances()["npt_threshold"] = -tol;

    const auto cuts = enumerate_cuts(opts.size);
    const auto reports = analyze_cuts(build_family(opts.size, f), cuts);
    ordered_json list = ordered_json::array();
    int npt = 0, ppt = 0;
    for (const auto& r : reports) {
        const auto side = r.cut.smaller_side().size();
        const bool asserted = side <= 2;
        list.push_back(cut_json(r, asserted));
        (r.classification == Classification::NPT ? npt : ppt) += 1;
        if (side == 1)
            rep.check("npt/" + r.cut.to_string(), r.min_pt_eigenvalue, "<", -tol);
        else if (side == 2)
            rep.check("ppt/" + r.cut.to_string(), r.min_pt_eigenvalue, ">=", -tol);
    }
    rep.results()["cut_count"] = reports.size();
    rep.results()["npt_count"] = npt;
    rep.results()["ppt_count"] = ppt;
    rep.results()["cuts"] = std::move(list);
    return rep;
}

std::string transcript_path(const std::string& report_path)
{
    return report_path + ".transcript.jsonl";
}

Report cmd_certify(const Options& opts)
{
    require_size(opts.size);
    const FamilyLabel f = family_arg(opts.family);
    if (opts.samples < 1)
        throw UsageError("--samples must be positive");
    PrepareMode mode = opts.size <= kMaxExactParties ? PrepareMode::Exact : PrepareMode::Sampled;
    if (opts.mode) {
        if (*opts.mode == "exact")
            mode = PrepareMode::Exact;
        else if (*opts.mode == "sampled")
            mode = PrepareMode::Sampled;
        else
            throw UsageError("--mode must be exact or sampled");
    }
    if (mode == PrepareMode::Exact && opts.size > kMaxExactParties)
        throw UsageError("exact mode supports --size up to " + std::to_string(kMaxExactParties));
    const bool exact_mode = mode == PrepareMode::Exact;
    const double tol = opts.tolerance.value_or(exact_mode ? kExactTolerance : kSampledTolerance);

    Report rep("certify");
    rep.parameters()["size"] = opts.size;
    rep.parameters()["family"] = fam(f);
    rep.parameters()["mode"] = exact_mode ? "exact" : "sampled";
    if (!exact_mode) {
        rep.parameters()["samples"] = opts.samples;
        rep.parameters()["seed"] = opts.seed;
    }
    rep.tolerances()["state"] = tol;
    rep.tolerances()["cost"] = 1e-9;

    const auto cert = cost_certificate(opts.size, f, {mode, opts.samples, opts.seed});

    auto& res = rep.results();
    res["lower_bound"] = cert.lower_bound;
    res["achieved"] = cert.achieved;
    res["exact"] = cert.exact;
    res["witness_weights"] = edge_json(cert.witness_weights);
    res["achieved_weights"] = edge_json(cert.achieved_weights);
    res["lp_dual"] = cert.lp_dual;
    res["preparation_distance"] = cert.preparation_distance;
    res["transcripts"] = cert.transcripts.size();
    res["protocol_transcript_id"] = cert.protocol_transcript_id;
    ordered_json cut_list = ordered_json::array();
    for (const auto& c : cert.cuts) {
        ordered_json j = cut_json(c.report, true);
        j["activation_fidelity"] = c.activation_fidelity;
        j["justified"] = c.justified;
        cut_list.push_back(std::move(j));
    }
    res["cuts"] = std::move(cut_list);

    if (!opts.out.empty()) {
        const std::string path = transcript_path(opts.out);
        std::ostringstream ss;
        write_transcripts(ss, cert.transcripts);
        write_text_file(path, ss.str());
        res["transcript_path"] = path;
    }

    rep.check("cost/lower-bound-equals-achieved", std::abs(cert.lower_bound - cert.achieved), "<", 1e-9);
    rep.check("state/preparation-distance", cert.preparation_distance, "<", tol);
    rep.check_flag("protocol/locc-audit", true);
    return rep;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Entanglement-cost toolkit for activable bound entangled states", "bcabe"};
    app.require_subcommand(1);
    Options opts;
    std::string mode;

    const std::vector<std::string> families{"rho+", "rho-", "sigma+", "sigma-"};
    auto add_size = [&](CLI::App* sub) { sub->add_option("--size", opts.size, "Number of qubits 2N (4, 6 or 8)")->required(); };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", opts.family, "rho+, rho-, sigma+ or sigma-")
            ->check(CLI::IsMember(families))
            ->capture_default_str();
    };
    auto add_out = [&](CLI::App* sub, const char* what) { sub->add_option("--out", opts.out, what); };
    auto add_tol = [&](CLI::App* sub, const char* what) {
        sub->add_option("--tolerance", opts.tolerance, what)->check(CLI::PositiveNumber);
    };

    auto* state = app.add_subcommand("state", "Write a family density matrix as JSON");
    add_size(state);
    add_family(state);
    state->add_option("--out", opts.out, "Output state file")->required();

    auto* verify = app.add_subcommand("verify", "Check the structural identities of the four families");
    add_size(verify);
    add_out(verify, "Report file (default: stdout)");
    add_tol(verify, "Absolute tolerance for every check (default 1e-12)");
    verify->add_flag("--tamper-state", opts.tamper, "Perturb rho+ before checking")->group("");

    auto* cuts = app.add_subcommand("cuts", "Partial-transpose report over every bipartition");
    add_size(cuts);
    add_family(cuts);
    add_out(cuts, "Report file (default: stdout)");
    add_tol(cuts, "NPT threshold magnitude (default 1e-10)");

    auto* certify = app.add_subcommand("certify", "Entanglement-cost certificate: LP bound vs LOCC protocol");
    add_size(certify);
    add_family(certify);
    certify->add_option("--mode", mode, "exact (size <= 6) or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    certify->add_option("--samples", opts.samples, "Sampled-mode protocol runs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    certify->add_option("--seed", opts.seed, "Sampled-mode seed")->capture_default_str();
    add_out(certify, "Report file (default: stdout); transcripts go to <out>.transcript.jsonl");
    add_tol(certify, "Trace-distance tolerance for the prepared state (default 1e-12 exact, 0.05 sampled)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }
    if (!mode.empty())
        opts.mode = mode;

    try {
        if (state->parsed()) {
            cmd_state(opts);
            out << "state: wrote " << opts.family << " at size " << opts.size << " -> " << opts.out << "\n";
            return exit_code::ok;
        }
        Report rep = verify->parsed() ? cmd_verify(opts) : cuts->parsed() ? cmd_cuts(opts) : cmd_certify(opts);
        emit(rep, opts, out);
        for (const auto& c : rep.checks())
            if (!c.passed)
                err << "FAILED " << c.name << ": " << c.value << " " << c.relation << " " << c.threshold << "\n";
        return rep.passed() ? exit_code::ok : exit_code::check_failed;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return exit_code::io;
    } catch (const std::exception& e) {
        err << "check failed: " << e.what() << "\n";
        return exit_code::check_failed;
    }
}

} // namespace bcabe::cli
