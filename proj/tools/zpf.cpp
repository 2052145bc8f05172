// zpf: command-line front end. Subcommands wrap one library operation each;
// summaries go out as a single-line JSON envelope, streams (verify
// counterexamples, minor-search reports) as JSON lines before it.
//
// Exit codes: 0 success, 2 usage or input error, 3 violated mathematical
// invariant, 4 budget exhausted where a proof was requested.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zpfourier/field.hpp"
#include "zpfourier/fourier.hpp"
#include "zpfourier/json_io.hpp"
#include "zpfourier/minors.hpp"
#include "zpfourier/progressions.hpp"
#include "zpfourier/uncertainty.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    bool no_timestamp = false;
};

std::string now_iso_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Envelope {
    const GlobalOpts& g;
    std::string command;
    json config = json::object();
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    Envelope(const GlobalOpts& go, std::string cmd) : g(go), command(std::move(cmd)) {}

    void emit(json result) const {
        json env{{"tool", "zpf"},
                 {"version", ZPF_VERSION},
                 {"command", command},
                 {"config", config},
                 {"result", std::move(result)}};
        if (!g.no_timestamp) {
            env["timestamp"] = now_iso_utc();
            env["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
        }
        std::cout << env.dump() << "\n";
    }
};

struct FieldArgs {
    std::uint64_t ch = 0;
    std::uint64_t deg = 1;
    std::vector<std::uint64_t> modulus;
    std::uint64_t mod_seed = 0;
};

void add_field_flags(CLI::App* cmd, FieldArgs& fa) {
    cmd->add_option("--char", fa.ch, "field characteristic (prime)")->required();
    cmd->add_option("--deg", fa.deg, "extension degree, default 1");
    cmd->add_option("--modulus", fa.modulus,
                    "modulus coefficients c0,...,ck (constant term first, monic); "
                    "searched from --mod-seed when omitted")
        ->delimiter(',');
    cmd->add_option("--mod-seed", fa.mod_seed, "seed for the irreducible-modulus search");
}

zpf::Field make_field(const FieldArgs& fa) {
    if (fa.deg == 1 && fa.modulus.empty()) return zpf::Field(fa.ch);
    std::vector<std::uint64_t> mod = fa.modulus;
    if (mod.empty()) mod = zpf::find_irreducible(fa.ch, fa.deg, fa.mod_seed);
    return zpf::Field(fa.ch, fa.deg, mod);
}

zpf::Fe parse_element(const zpf::Field& field, const std::vector<std::uint64_t>& raw) {
    if (field.degree() == 1) {
        if (raw.size() != 1) zpf::fail(zpf::Errc::bad_argument, "prime-field element is a single residue");
        return field.from_value(raw[0]);
    }
    return field.from_coeffs(raw);
}

json element_json(const zpf::Field& field, zpf::Fe x) {
    return json::parse(zpf::element_to_json(field, x));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) zpf::fail(zpf::Errc::io_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) zpf::fail(zpf::Errc::io_error, "cannot open " + path + " for writing");
    out << content;
    if (!out) zpf::fail(zpf::Errc::io_error, "write to " + path + " failed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier transform on Z/p over a finite field, with support-size bound checks"};
    app.require_subcommand(1);

    GlobalOpts g;
    int exit_code = 0;
    app.add_flag("--no-timestamp", g.no_timestamp,
                 "omit timestamp and elapsed time so identical runs give identical bytes");

    // root
    auto* root = app.add_subcommand("root", "principal p-th root of unity in the field");
    static std::uint64_t root_p = 0;
    static FieldArgs root_field;
    root->add_option("--p", root_p, "transform length (prime)")->required();
    add_field_flags(root, root_field);
    root->callback([&] {
        Envelope env{g, "root"};
        zpf::Field field = make_field(root_field);
        zpf::FourierContext ctx(root_p, field);
        env.config = {{"p", root_p}, {"field", json::parse(zpf::field_to_json(field))}};
        env.emit(json{{"omega", element_json(field, ctx.omega())},
                      {"generator", element_json(field, field.generator())},
                      {"p_inv", element_json(field, ctx.p_inverse())}});
    });

    // transform
    auto* tr = app.add_subcommand("transform", "apply the transform to a signal file");
    static std::string tr_in, tr_out, tr_strategy = "naive";
    static bool tr_inverse = false, tr_check = false;
    static std::vector<std::uint64_t> tr_omega;
    tr->add_option("--in", tr_in, "input signal or spectrum document")->required();
    tr->add_option("--out", tr_out, "output path; stdout when omitted");
    tr->add_flag("--inverse", tr_inverse, "apply the inverse transform");
    tr->add_option("--strategy", tr_strategy, "naive or rader (forward only)")
        ->check(CLI::IsMember({"naive", "rader"}));
    tr->add_flag("--check", tr_check, "run both forward strategies and require agreement");
    auto* tr_omega_opt = tr->add_option("--omega", tr_omega, "root-of-unity override")->delimiter(',');
    tr->callback([&] {
        zpf::SignalDoc doc = zpf::signal_from_json(read_file(tr_in));
        std::optional<zpf::Fe> omega;
        if (tr_omega_opt->count()) omega = parse_element(doc.field, tr_omega);
        zpf::FourierContext ctx(doc.p, doc.field, omega);

        std::string payload;
        if (tr_inverse) {
            if (tr_strategy == "rader" || tr_check)
                zpf::fail(zpf::Errc::bad_argument, "--strategy rader and --check apply to the forward transform");
            zpf::Spectrum s;
            s.values = doc.signal.values;
            zpf::Signal f = zpf::inverse(ctx, s);
            payload = zpf::signal_to_json(doc.field, doc.p, f);
        } else {
            zpf::Spectrum naive;
            bool agree = true;
            if (tr_check) {
                naive = zpf::forward(ctx, doc.signal);
                zpf::Spectrum fast = zpf::forward_rader(ctx, doc.signal);
                agree = naive.values == fast.values;
                if (!agree) throw zpf::HardFailure("forward strategies disagree on " + tr_in);
            } else if (tr_strategy == "rader") {
                naive = zpf::forward_rader(ctx, doc.signal);
            } else {
                naive = zpf::forward(ctx, doc.signal);
            }
            payload = zpf::spectrum_to_json(doc.field, doc.p, naive);
        }
        json out = json::parse(payload);
        out["omega"] = element_json(doc.field, ctx.omega());
        if (tr_out.empty()) std::cout << out.dump() << "\n";
        else write_file(tr_out, out.dump() + "\n");
        if (tr_check) std::cout << json{{"check", "strategies_agree"}}.dump() << "\n";
    });

    // rfree
    auto* rf = app.add_subcommand("rfree", "largest progression-free subset size of Z/p");
    static std::uint64_t rf_p = 0, rf_m = 0, rf_budget = 100'000'000;
    rf->add_option("--p", rf_p, "modulus (prime)")->required();
    rf->add_option("--m", rf_m, "progression length")->required();
    rf->add_option("--budget", rf_budget, "search node budget");
    rf->callback([&] {
        Envelope env{g, "rfree"};
        env.config = {{"p", rf_p}, {"m", rf_m}, {"budget", rf_budget}};
        zpf::ApFreeResult r = zpf::exact_r(rf_p, rf_m, zpf::RmOptions{rf_budget});
        env.emit(json::parse(zpf::apfree_to_json(r)));
        if (!r.proven_optimal) exit_code = 4;
    });

    // minor
    auto* mn = app.add_subcommand("minor", "rank and determinant of one transform minor");
    static std::uint64_t mn_p = 0;
    static FieldArgs mn_field;
    static std::vector<std::uint32_t> mn_rows, mn_cols;
    static std::vector<std::uint64_t> mn_omega;
    mn->add_option("--p", mn_p, "transform length (prime)")->required();
    add_field_flags(mn, mn_field);
    mn->add_option("--rows", mn_rows, "row indices")->delimiter(',')->required();
    mn->add_option("--cols", mn_cols, "column indices")->delimiter(',')->required();
    auto* mn_omega_opt = mn->add_option("--omega", mn_omega, "root-of-unity override")->delimiter(',');
    mn->callback([&] {
        Envelope env{g, "minor"};
        zpf::Field field = make_field(mn_field);
        std::optional<zpf::Fe> omega;
        if (mn_omega_opt->count()) omega = parse_element(field, mn_omega);
        zpf::FourierContext ctx(mn_p, field, omega);
        env.config = {{"p", mn_p},
                      {"field", json::parse(zpf::field_to_json(field))},
                      {"omega", element_json(field, ctx.omega())},
                      {"rows", mn_rows},
                      {"cols", mn_cols}};

        zpf::MinorIndex idx{mn_rows, mn_cols};
        zpf::FqMatrix a = zpf::build_minor(ctx, idx);
        zpf::RankDet rd = zpf::rank_det(field, a);
        zpf::MinorReport rep;
        rep.index = idx;
        rep.rank = rd.rank;
        rep.det = rd.det;
        rep.is_degenerate = rd.rank < mn_rows.size();
        if (rep.is_degenerate) rep.kernel = zpf::kernel_vector(field, a);
        rep.row_scale_omitted = ctx.p_inverse();
        json result = json::parse(zpf::minor_report_to_json(field, rep));

        // When the rows are listed in progression order the closed-form
        // product applies; report it next to the elimination determinant.
        const std::size_t m = mn_rows.size();
        bool progression = m >= 1 && mn_cols.size() == m;
        std::uint64_t b = 1;
        if (m > 1) {
            b = (mn_rows[1] + mn_p - mn_rows[0]) % mn_p;
            for (std::size_t i = 0; progression && i < m; ++i)
                progression = mn_rows[i] == (mn_rows[0] + i * b) % mn_p;
        }
        if (progression && b != 0) {
            zpf::Fe v = zpf::vandermonde_det(ctx, zpf::ApSpec{mn_rows[0], b, m}, mn_cols);
            zpf::Fe sign = (m * (m - 1) / 2) % 2 ? field.neg(field.one()) : field.one();
            result["vandermonde_det"] = element_json(field, v);
            result["vandermonde_sign_factor"] = element_json(field, sign);
        }
        env.emit(std::move(result));
    });

    // minor-search
    auto* ms = app.add_subcommand("minor-search", "search for rank-deficient minors");
    static std::uint64_t ms_p = 0, ms_m = 0, ms_budget = 1'000'000, ms_seed = 0;
    static FieldArgs ms_field;
    static std::vector<std::uint64_t> ms_omega;
    ms->add_option("--p", ms_p, "transform length (prime)")->required();
    add_field_flags(ms, ms_field);
    ms->add_option("--m", ms_m, "minor size")->required();
    ms->add_option("--budget", ms_budget, "sampled index pairs when not exhaustive");
    ms->add_option("--seed", ms_seed, "sampling seed");
    auto* ms_omega_opt = ms->add_option("--omega", ms_omega, "root-of-unity override")->delimiter(',');
    ms->callback([&] {
        Envelope env{g, "minor-search"};
        zpf::Field field = make_field(ms_field);
        std::optional<zpf::Fe> omega;
        if (ms_omega_opt->count()) omega = parse_element(field, ms_omega);
        zpf::FourierContext ctx(ms_p, field, omega);
        env.config = {{"p", ms_p},
                      {"field", json::parse(zpf::field_to_json(field))},
                      {"omega", element_json(field, ctx.omega())},
                      {"m", ms_m},
                      {"budget", ms_budget},
                      {"seed", ms_seed}};
        zpf::MinorSearchResult res =
            zpf::degenerate_minor_search(ctx, ms_m, zpf::MinorSearchOptions{ms_budget, ms_seed});
        for (const zpf::MinorReport& rep : res.reports)
            std::cout << zpf::minor_report_to_json(field, rep) << "\n";
        env.emit(json{{"degenerate_found", res.reports.size()},
                      {"pairs_examined", res.pairs_examined},
                      {"exhaustive", res.exhaustive}});
    });

    // verify
    auto* vf = app.add_subcommand("verify", "scan functions of one support size and check every bound");
    static std::uint64_t vf_p = 0, vf_m = 0, vf_samples = 0, vf_seed = 0, vf_cap = 10'000'000;
    static std::uint64_t vf_max_findings = 1000, vf_rm_budget = 100'000'000;
    static unsigned vf_threads = 1;
    static bool vf_exhaustive = false;
    static FieldArgs vf_field;
    static std::vector<std::uint64_t> vf_omega;
    vf->add_option("--p", vf_p, "transform length (prime)")->required();
    add_field_flags(vf, vf_field);
    vf->add_option("--m", vf_m, "support size to scan")->required();
    vf->add_flag("--exhaustive", vf_exhaustive, "enumerate every support and projective vector");
    vf->add_option("--samples", vf_samples, "random mode: number of sampled functions");
    vf->add_option("--seed", vf_seed, "random mode seed");
    vf->add_option("--cap", vf_cap, "exhaustive instance cap");
    vf->add_option("--threads", vf_threads, "worker threads")->envname("ZPF_THREADS");
    vf->add_option("--max-findings", vf_max_findings, "stored counterexample limit");
    vf->add_option("--rm-budget", vf_rm_budget, "node budget for the extremal-subset search");
    auto* vf_omega_opt = vf->add_option("--omega", vf_omega, "root-of-unity override")->delimiter(',');
    vf->callback([&] {
        Envelope env{g, "verify"};
        if (vf_exhaustive == (vf_samples > 0))
            zpf::fail(zpf::Errc::bad_argument, "choose exactly one of --exhaustive or --samples N");
        zpf::Field field = make_field(vf_field);
        std::optional<zpf::Fe> omega;
        if (vf_omega_opt->count()) omega = parse_element(field, vf_omega);
        zpf::FourierContext ctx(vf_p, field, omega);

        zpf::ScanOptions opts;
        opts.mode = vf_exhaustive ? zpf::ScanMode::exhaustive : zpf::ScanMode::random;
        opts.seed = vf_seed;
        opts.samples = vf_samples;
        opts.cap = vf_cap;
        opts.threads = vf_threads;
        opts.max_stored_findings = vf_max_findings;
        opts.rm_options = zpf::RmOptions{vf_rm_budget};

        env.config = {{"p", vf_p},
                      {"field", json::parse(zpf::field_to_json(field))},
                      {"omega", element_json(field, ctx.omega())},
                      {"m", vf_m},
                      {"mode", vf_exhaustive ? "exhaustive" : "random"},
                      {"seed", vf_seed},
                      {"samples", vf_samples},
                      {"cap", vf_cap},
                      {"threads", vf_threads},
                      {"max_findings", vf_max_findings},
                      {"rm_budget", vf_rm_budget}};

        zpf::ScanResult res = zpf::extremal_scan(ctx, vf_m, opts);
        for (const zpf::StrongFinding& x : res.strong_findings)
            std::cout << zpf::strong_finding_to_json(field, x) << "\n";
        json result = json::parse(zpf::scan_to_json(field, res));
        result["findings_streamed"] = res.strong_findings.size();
        env.emit(std::move(result));
        if (vf_exhaustive && res.r_provenance == zpf::RProvenance::assumed) exit_code = 4;
    });

    // bounds
    auto* bd = app.add_subcommand("bounds", "evaluate the progression-free upper bound");
    static std::uint64_t bd_p = 0, bd_m = 0;
    static double bd_override = 0;
    static std::string bd_base = "natural";
    bd->add_option("--p", bd_p, "modulus")->required();
    bd->add_option("--m", bd_m, "progression length")->required();
    auto* bd_override_opt = bd->add_option("--exponent-override", bd_override, "substitute exponent");
    bd->add_option("--log-base", bd_base, "natural or base2")->check(CLI::IsMember({"natural", "base2"}));
    bd->callback([&] {
        Envelope env{g, "bounds"};
        std::optional<double> override_val;
        if (bd_override_opt->count()) override_val = bd_override;
        zpf::LogBase base = bd_base == "base2" ? zpf::LogBase::base2 : zpf::LogBase::natural;
        env.config = {{"p", bd_p}, {"m", bd_m}, {"log_base", bd_base}};
        if (override_val) env.config["exponent_override"] = *override_val;
        zpf::BoundReport rep = zpf::gowers_bound(bd_p, bd_m, override_val, base);
        env.emit(json::parse(zpf::bound_to_json(rep)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const zpf::HardFailure& e) {
        std::cerr << "hard failure: " << e.what() << "\n";
        return 3;
    } catch (const zpf::Error& e) {
        std::cerr << "error [" << zpf::errc_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
