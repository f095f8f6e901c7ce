#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "apolar/report.hpp"

namespace {

using namespace apolar;

struct CommonOpts {
    RunConfig cfg;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--e", opts.cfg.e, "embedding dimension");
    cmd->add_option("--s", opts.cfg.s, "socle degree");
    cmd->add_option("--prime", opts.cfg.prime, "coefficient prime (> s)");
    cmd->add_option("--seed", opts.cfg.seed, "sampling seed");
    cmd->add_option("--trunc", opts.cfg.trunc, "homological truncation");
    cmd->add_option("--degree-bound", opts.cfg.degree_bound, "internal degree override");
    cmd->add_option("--format", opts.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out, "output path (default stdout)");
    cmd->add_flag("--allow-s3", opts.cfg.allow_s3, "allow the excluded socle degree 3");
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out);
    if (!f) throw Error("IoError", "cannot open " + opts.out);
    f << text;
}

std::string report_text(const CommonOpts& opts, const VerificationReport& rep) {
    if (opts.format == "csv") {
        std::ostringstream os;
        rep.write_csv(os);
        return os.str();
    }
    return rep.to_json().dump(2) + "\n";
}

Instance load_or_sample(const CommonOpts& opts, const std::string& input) {
    if (!input.empty()) {
        std::ifstream f(input);
        if (!f) throw Error("IoError", "cannot open " + input);
        DualGenerator g = DualGenerator::parse(f, opts.cfg.prime);
        auto r = std::make_shared<const GradedArtinianAlgebra>(
            GradedArtinianAlgebra::from_dual_generator(g));
        return Instance{std::move(g), std::move(r), 0, {}};
    }
    return sample_compressed_instance(opts.cfg);
}

int run_gen(const CommonOpts& opts, bool raw) {
    std::ostringstream os;
    if (raw) {
        DualGenerator g = sample_dual_generator(opts.cfg.e, opts.cfg.s, opts.cfg.prime, opts.cfg.seed);
        os << "# e=" << opts.cfg.e << " s=" << opts.cfg.s << " p=" << opts.cfg.prime
           << " seed=" << opts.cfg.seed << " raw\n";
        g.write(os);
    } else {
        Instance inst = sample_compressed_instance(opts.cfg);
        os << "# e=" << opts.cfg.e << " s=" << opts.cfg.s << " p=" << opts.cfg.prime
           << " seed=" << opts.cfg.seed << " retries=" << inst.retries << "\n";
        inst.generator.write(os);
    }
    emit(opts, os.str());
    return 0;
}

int run_hilbert(const CommonOpts& opts, const std::string& input) {
    Instance inst = load_or_sample(opts, input);
    const auto& r = *inst.algebra;
    if (opts.format == "csv") {
        std::ostringstream os;
        os << "d,h\n";
        auto h = r.hilbert_function();
        for (std::size_t d = 0; d < h.size(); ++d) os << d << ',' << h[d] << '\n';
        emit(opts, os.str());
        return 0;
    }
    nlohmann::json j;
    j["schema"] = 1;
    j["hilbert"] = r.hilbert_function();
    j["length"] = r.length();
    j["effective_e"] = r.effective_embedding_dim();
    j["socle_degree"] = r.socle_degree();
    j["initial_ideal_degree"] = r.initial_ideal_degree();
    emit(opts, j.dump(2) + "\n");
    return 0;
}

int run_betti(const CommonOpts& opts, const std::string& ring, const std::string& module,
              const std::string& input) {
    Instance inst = load_or_sample(opts, input);
    auto r = inst.algebra;
    const int t = r->initial_ideal_degree();

    std::shared_ptr<const RingBackend> backend;
    if (ring == "q") {
        backend = std::make_shared<const RingBackend>(RingBackend::polynomial(r->ring_ptr()));
    } else if (ring == "p") {
        backend = std::make_shared<const RingBackend>(
            RingBackend::hypersurface(r->ring_ptr(), choose_hypersurface_form(*r, t), t));
    } else {
        backend = std::make_shared<const RingBackend>(RingBackend::artinian(r));
    }

    FiniteModule mod = FiniteModule::zero(r->vars(), r->modulus());
    if (module == "k") {
        mod = FiniteModule::residue_field(r->vars(), r->modulus());
    } else if (module == "r") {
        mod = FiniteModule::of_algebra(r);
    } else if (module == "socle-quotient") {
        auto quot = std::make_shared<const GradedArtinianAlgebra>(quotient_algebra(*r, socle(*r)));
        mod = FiniteModule::of_algebra(quot);
    } else if (module.rfind("power:", 0) == 0) {
        int i = std::stoi(module.substr(6));
        if (i < 0 || i > r->socle_degree() + 1)
            throw Error("InvalidParameters", "power index out of range");
        mod = FiniteModule::power_submodule(r, i);
    } else {
        throw Error("InvalidParameters", "unknown module " + module);
    }

    int n = opts.cfg.trunc >= 0 ? opts.cfg.trunc
                                : (ring == "q" ? r->vars() : opts.cfg.effective_trunc());
    GradedResolution res = minimal_resolution(backend, mod, n, opts.cfg.degree_bound);
    BettiTable table = res.betti();
    if (opts.format == "csv") {
        std::ostringstream os;
        table.write_csv(os);
        emit(opts, os.str());
        return 0;
    }
    nlohmann::json j = table.to_json();
    j["schema"] = 1;
    j["ring"] = ring;
    j["module"] = module;
    j["trunc"] = n;
    j["degree_bound"] = res.degree_bound();
    j["audit"] = resolution_audit(res);
    j["minimal"] = res.is_minimal();
    emit(opts, j.dump(2) + "\n");
    return 0;
}

int run_dr(const CommonOpts& opts, const std::string& via) {
    nlohmann::json j;
    j["schema"] = 1;
    j["via"] = via;
    IntegerPolynomial d_r;
    if (via == "t2") {
        d_r = dr_even_closed_form(opts.cfg.e, opts.cfg.s);
    } else if (via == "lemma56") {
        IntegerPolynomial po_q = po_q_even_closed_form(opts.cfg.e, opts.cfg.s);
        d_r = dr_from_po_q(po_q, opts.cfg.e, 1);
        j["po_q_r"] = po_q.coeffs();
    } else {
        opts.cfg.validate();
        Instance inst = sample_compressed_instance(opts.cfg);
        FiniteModule mod = FiniteModule::of_algebra(inst.algebra);
        BettiTable koszul = koszul_betti(inst.algebra->ring(), mod);
        IntegerPolynomial po_q(koszul.totals());
        GradedIdeal soc = socle(*inst.algebra);
        std::int64_t a = 0;
        for (int d = profile(opts.cfg.e, opts.cfg.s).r; d <= opts.cfg.s; ++d) a += soc.dim(d);
        d_r = dr_from_po_q(po_q, opts.cfg.e, a);
        j["po_q_r"] = po_q.coeffs();
        j["a"] = a;
        j["retries"] = inst.retries;
    }
    j["d_r"] = d_r.coeffs();
    j["degree"] = d_r.degree();
    if (opts.format == "csv") {
        std::ostringstream os;
        os << "i,coeff\n";
        for (int i = 0; i <= d_r.degree(); ++i) os << i << ',' << d_r.coeff(i) << '\n';
        emit(opts, os.str());
    } else {
        emit(opts, j.dump(2) + "\n");
    }
    return 0;
}

int run_verify(const CommonOpts& opts, const std::string& suite) {
    std::vector<VerificationReport> reports;
    if (suite == "main" || suite == "all") reports.push_back(run_main_theorem_suite(opts.cfg));
    if (suite == "golod-powers" || suite == "all") reports.push_back(run_golod_powers_suite(opts.cfg));
    if (suite == "socle" || suite == "all") reports.push_back(run_socle_quotient_suite(opts.cfg));

    int code = 0;
    for (const auto& r : reports) code = std::max(code, r.exit_code());

    if (reports.size() == 1) {
        emit(opts, report_text(opts, reports[0]));
        return code;
    }
    if (opts.format == "csv") {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << "# suite " << r.suite << "\n";
            r.write_csv(os);
        }
        emit(opts, os.str());
        return code;
    }
    nlohmann::json j;
    j["schema"] = 1;
    nlohmann::json arr = nlohmann::json::array();
    std::string overall = "pass";
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        if (r.overall() == "fail")
            overall = "fail";
        else if (r.overall() == "inconclusive" && overall == "pass")
            overall = "inconclusive";
    }
    j["suites"] = arr;
    j["overall"] = overall;
    emit(opts, j.dump(2) + "\n");
    return code;
}

int run_maps(const CommonOpts& opts, const std::string& check) {
    MapCheck which = MapCheck::nu;
    if (check == "phi") which = MapCheck::phi;
    else if (check == "rho") which = MapCheck::rho;
    else if (check == "golod-criterion") which = MapCheck::golod_criterion;
    VerificationReport rep = run_map_checks(opts.cfg, which);
    emit(opts, report_text(opts, rep));
    return rep.exit_code();
}

bool is_usage_error(const Error& err) {
    return err.code() == "BadPrime" || err.code() == "InvalidParameters" ||
           err.code() == "SocleDegreeExcluded" || err.code() == "ParseError" ||
           err.code() == "IoError";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic verification of graded Gorenstein quotient invariants"};
    app.require_subcommand(1);

    CommonOpts opts;
    bool raw = false;
    std::string input, ring = "q", module = "k", via = "t1", suite = "main", check = "nu";

    CLI::App* gen = app.add_subcommand("gen", "emit a dual generator file");
    add_common(gen, opts);
    gen->add_flag("--raw", raw, "skip the retry-until-compressed loop");

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function of the sampled algebra");
    add_common(hilbert, opts);
    hilbert->add_option("--in", input, "read the dual generator from a file");

    CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers of a module");
    add_common(betti, opts);
    betti->add_option("--ring", ring, "q|p|r")->check(CLI::IsMember({"q", "p", "r"}));
    betti->add_option("--module", module, "k|r|power:i|socle-quotient");
    betti->add_option("--in", input, "read the dual generator from a file");

    CLI::App* dr = app.add_subcommand("dr", "denominator polynomial");
    add_common(dr, opts);
    dr->add_option("--via", via, "t1|t2|lemma56")->check(CLI::IsMember({"t1", "t2", "lemma56"}));

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, opts);
    verify->add_option("--suite", suite, "main|golod-powers|socle|all")
        ->check(CLI::IsMember({"main", "golod-powers", "socle", "all"}));
    verify->add_flag("--with-maps", opts.cfg.with_maps, "include the induced-map checks");
    verify->add_flag("--with-socle-factorization", opts.cfg.with_socle_factorization,
                     "include the socle factorization check");
    verify->add_flag("--timings", opts.cfg.with_timings,
                     "include wall-clock timings (breaks byte-for-byte determinism)");

    CLI::App* maps = app.add_subcommand("maps", "induced maps on Tor");
    add_common(maps, opts);
    maps->add_option("--check", check, "nu|phi|rho|golod-criterion")
        ->check(CLI::IsMember({"nu", "phi", "rho", "golod-criterion"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (gen->parsed()) return run_gen(opts, raw);
        if (hilbert->parsed()) return run_hilbert(opts, input);
        if (betti->parsed()) return run_betti(opts, ring, module, input);
        if (dr->parsed()) return run_dr(opts, via);
        if (verify->parsed()) return run_verify(opts, suite);
        if (maps->parsed()) return run_maps(opts, check);
    } catch (const Error& e) {
        nlohmann::json j = {{"schema", 1}, {"error", e.code()}, {"message", e.what()}};
        std::cerr << j.dump(2) << "\n";
        return is_usage_error(e) ? 3 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 3;
}
