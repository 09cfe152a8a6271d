// ramsum: generalized Ramanujan sums, explicit formulas over zeta zeros,
// Dirichlet-series diagnostics, and Bartz-type zero sums, as CSV.
//
// Exit codes: 0 success, 2 usage error, 3 numeric failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ramsum/arith.hpp"
#include "ramsum/bartz.hpp"
#include "ramsum/cli_util.hpp"
#include "ramsum/explicit_formula.hpp"
#include "ramsum/series.hpp"
#include "ramsum/zeta.hpp"

namespace {

using namespace ramsum;

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty() || path == "stdout") return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file " + path);
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

std::string default_table_path() {
    const char* env = std::getenv("RAMSUM_ZERO_TABLE");
    return env ? env : "bundled";
}

// Table handle: the compiled-in table or a file load.
const ZeroTable& resolve_table(const std::string& spec, std::unique_ptr<ZeroTable>& holder) {
    if (spec == "bundled") return bundled_zero_table();
    holder = std::make_unique<ZeroTable>(load_zero_table(spec));
    return *holder;
}

void emit_manifest(std::ostream& out, const std::string& sub, const std::string& params,
                   const ZeroTable* table = nullptr) {
    RunManifest m;
    m.subcommand = sub;
    m.parameters = params;
    if (table) {
        m.table_source = table->source();
        m.table_count = table->size();
    }
    m.write(out);
}

int run(int argc, char** argv) {
    CLI::App app{"generalized Ramanujan sums and explicit formulas over zeta zeros"};
    app.require_subcommand(1);

    // common option storage
    long long n = 1, m = 1, qmax = 100, xmax_ll = 100000, q_arg = 2;
    int beta = 1;
    std::size_t pairs = 25;
    double xmin = 5.0, xmax = 100.0, xstep = 1.0, tol = 1e-12, eps = 1e-3;
    double gamma0 = 0.0;
    std::string s_text = "2", z_text = "1+1i", cutoffs_text = "100,1000";
    std::string table_spec = default_table_path();
    std::string out_path = "stdout";

    auto add_table = [&](CLI::App* cmd) {
        cmd->add_option("--table", table_spec, "zero table: 'bundled' or a file path");
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (default stdout)");
    };

    // ---- csum ----
    auto* csum = app.add_subcommand("csum", "c_q^(beta)(n) for q = 1..qmax");
    csum->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    csum->add_option("--beta", beta)->required()->check(CLI::PositiveNumber);
    csum->add_option("--qmax", qmax)->required()->check(CLI::PositiveNumber);
    add_out(csum);

    // ---- explicit-c ----
    auto* exc = app.add_subcommand("explicit-c",
                                   "summatory c-function against its explicit formula");
    exc->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    exc->add_option("--beta", beta)->required()->check(CLI::PositiveNumber);
    exc->add_option("--xmin", xmin)->required();
    exc->add_option("--xmax", xmax)->required();
    exc->add_option("--xstep", xstep);
    exc->add_option("--pairs", pairs)->required();
    exc->add_option("--tol", tol);
    add_table(exc);
    add_out(exc);

    // ---- explicit-psi ----
    auto* exp_psi = app.add_subcommand("explicit-psi",
                                       "generalized Chebyshev function against its formula");
    exp_psi->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    exp_psi->add_option("--beta", beta)->required()->check(CLI::PositiveNumber);
    exp_psi->add_option("--xmin", xmin)->required();
    exp_psi->add_option("--xmax", xmax)->required();
    exp_psi->add_option("--xstep", xstep);
    exp_psi->add_option("--pairs", pairs)->required();
    exp_psi->add_option("--tol", tol);
    add_table(exp_psi);
    add_out(exp_psi);

    // ---- series ----
    auto* ser = app.add_subcommand("series", "Dirichlet partial sums against the closed form");
    ser->add_option("--s", s_text)->required();
    ser->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    ser->add_option("--beta", beta)->required()->check(CLI::PositiveNumber);
    ser->add_option("--cutoffs", cutoffs_text)->required();
    add_out(ser);

    // ---- growth ----
    auto* gro = app.add_subcommand("growth", "growth exponent of the summatory c-function");
    gro->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    gro->add_option("--beta", beta)->required()->check(CLI::PositiveNumber);
    gro->add_option("--xmax", xmax_ll)->required()->check(CLI::PositiveNumber);
    add_out(gro);

    // ---- zeros ----
    auto* zeros = app.add_subcommand("zeros", "zero-table management");
    zeros->require_subcommand(1);
    auto* zverify = zeros->add_subcommand("verify", "re-verify every ordinate");
    add_table(zverify);
    add_out(zverify);
    auto* zrefine = zeros->add_subcommand("refine", "Newton-refine a seed ordinate");
    zrefine->add_option("--gamma0", gamma0)->required();
    add_out(zrefine);
    auto* zdump = zeros->add_subcommand("dump", "write the table in its file format");
    add_table(zdump);
    add_out(zdump);

    // ---- bartz ----
    auto* bz = app.add_subcommand("bartz", "Bartz zero sums and their checks");
    bz->require_subcommand(1);
    std::size_t zero_count = 100;
    long long q_cutoff = 10000;
    auto* bdec = bz->add_subcommand("decomp", "zero sum against the contour decomposition");
    auto* bfe = bz->add_subcommand("fe", "functional-equation residual");
    auto* bres = bz->add_subcommand("residue", "residue probe at z = log q");
    auto* ba = bz->add_subcommand("a", "companion series, both in-text forms");
    for (auto* cmd : {bdec, bfe, ba}) {
        cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--beta", beta)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--z", z_text)->required();
        add_out(cmd);
    }
    for (auto* cmd : {bdec, bfe}) {
        cmd->add_option("--zeros", zero_count);
        cmd->add_option("--qmax", q_cutoff);
        add_table(cmd);
    }
    bres->add_option("--q", q_arg)->required()->check(CLI::PositiveNumber);
    bres->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    bres->add_option("--beta", beta)->required()->check(CLI::PositiveNumber);
    bres->add_option("--eps", eps);
    bres->add_option("--qmax", q_cutoff);
    add_out(bres);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    OutputTarget target;
    target.open(out_path);
    std::ostream& out = target.out();
    std::unique_ptr<ZeroTable> table_holder;

    if (*csum) {
        const SumParams params{n, beta};
        std::ostringstream ps;
        ps << "n=" << n << " beta=" << beta << " qmax=" << qmax;
        emit_manifest(out, "csum", ps.str());
        out << "q,c_q\n";
        const auto c = cohen_sum_range(qmax, params);
        for (long long q = 1; q <= qmax; ++q)
            out << q << "," << c[static_cast<std::size_t>(q - 1)] << "\n";
        return 0;
    }

    if (*exc || *exp_psi) {
        const bool is_c = static_cast<bool>(*exc);
        const ZeroTable& table = resolve_table(table_spec, table_holder);
        std::ostringstream ps;
        if (is_c)
            ps << "n=" << n;
        else
            ps << "m=" << m;
        ps << " beta=" << beta << " xmin=" << xmin << " xmax=" << xmax << " xstep=" << xstep
           << " pairs=" << pairs << " tol=" << tol
           << " implied_height=" << csv_num(table.implied_height(pairs));
        emit_manifest(out, is_c ? "explicit-c" : "explicit-psi", ps.str(), &table);
        out << "x,actual_sharp,formula,residual\n";
        for (double x = xmin; x <= xmax + 1e-12; x += xstep) {
            const ExplicitEvaluation ev =
                is_c ? explicit_c(x, SumParams{n, beta}, table, pairs, tol)
                     : explicit_psi(x, m, beta, table, pairs, tol);
            out << csv_num(x) << "," << csv_num(ev.actual_sharp) << ","
                << csv_num(ev.formula_total) << "," << csv_num(ev.residual) << "\n";
        }
        return 0;
    }

    if (*ser) {
        const SumParams params{n, beta};
        const cplx s = parse_complex(s_text);
        const auto cutoffs = parse_cutoffs(cutoffs_text);
        std::ostringstream ps;
        ps << "s=" << s_text << " n=" << n << " beta=" << beta << " cutoffs=" << cutoffs_text;
        emit_manifest(out, "series", ps.str());
        out << "Q,partial_re,partial_im,target_re,target_im,residual\n";
        const SeriesDiagnostic diag = convergence_sweep(s, params, cutoffs);
        for (std::size_t i = 0; i < diag.cutoffs.size(); ++i)
            out << diag.cutoffs[i] << "," << csv_num(diag.partials[i]) << ","
                << csv_num(diag.target) << "," << csv_num(diag.residuals[i]) << "\n";
        return 0;
    }

    if (*gro) {
        const SumParams params{n, beta};
        std::ostringstream ps;
        ps << "n=" << n << " beta=" << beta << " xmax=" << xmax_ll;
        emit_manifest(out, "growth", ps.str());
        out << "xmax,exponent,degenerate\n";
        const auto est = growth_exponent(params, xmax_ll);
        out << xmax_ll << "," << (est ? csv_num(*est) : "nan") << "," << (est ? 0 : 1)
            << "\n";
        return 0;
    }

    if (*zverify) {
        const ZeroTable& table = resolve_table(table_spec, table_holder);
        emit_manifest(out, "zeros verify", "table=" + table_spec, &table);
        out << "k,gamma,abs_zeta,zeta_prime_re,zeta_prime_im\n";
        for (std::size_t k = 0; k < table.size(); ++k) {
            const double g = table.ordinate(k);
            out << (k + 1) << "," << csv_num(g) << ","
                << csv_num(std::abs(zeta_eval(cplx{0.5, g}))) << ","
                << csv_num(table.zeta_prime_at(k)) << "\n";
        }
        return 0;
    }

    if (*zrefine) {
        emit_manifest(out, "zeros refine", "gamma0=" + csv_num(gamma0));
        const double g = refine_zero(gamma0);
        out << "gamma0,gamma,abs_zeta\n";
        out << csv_num(gamma0) << "," << csv_num(g) << ","
            << csv_num(std::abs(zeta_eval(cplx{0.5, g}))) << "\n";
        return 0;
    }

    if (*zdump) {
        const ZeroTable& table = resolve_table(table_spec, table_holder);
        dump_zero_table(table, out); // bare format, round-trips bit-exactly
        return 0;
    }

    if (*bdec || *bfe || *ba || *bres) {
        const SumParams params{n, beta};
        TruncationConfig cfg;
        cfg.zero_pairs = zero_count;
        cfg.q_cutoff = q_cutoff;
        if (*ba) {
            const cplx z = parse_complex(z_text);
            std::ostringstream ps;
            ps << "n=" << n << " beta=" << beta << " z=" << z_text;
            emit_manifest(out, "bartz a", ps.str());
            out << "z_re,z_im,a_re,a_im,a_variant_re,a_variant_im\n";
            out << csv_num(z) << "," << csv_num(a_series(z, params)) << ","
                << csv_num(a_series_variant(z, params)) << "\n";
            return 0;
        }
        if (*bres) {
            std::ostringstream ps;
            ps << "q=" << q_arg << " n=" << n << " beta=" << beta << " eps=" << eps
               << " qmax=" << cfg.q_cutoff;
            emit_manifest(out, "bartz residue", ps.str());
            const cplx est = residue_probe(q_arg, params, eps, cfg);
            const cplx expected = -static_cast<double>(cohen_sum(q_arg, params)) /
                                  cplx{0.0, 2.0 * std::numbers::pi};
            out << "q,estimate_re,estimate_im,expected_re,expected_im,rel_err\n";
            out << q_arg << "," << csv_num(est) << "," << csv_num(expected) << ","
                << csv_num(std::abs(est - expected) / std::abs(expected)) << "\n";
            return 0;
        }
        const ZeroTable& table = resolve_table(table_spec, table_holder);
        cfg.zero_pairs = std::min<std::size_t>(cfg.zero_pairs, table.size());
        const cplx z = parse_complex(z_text);
        std::ostringstream ps;
        ps << "n=" << n << " beta=" << beta << " z=" << z_text << " zeros=" << cfg.zero_pairs
           << " qmax=" << cfg.q_cutoff;
        if (*bdec) {
            emit_manifest(out, "bartz decomp", ps.str(), &table);
            const BartzEvaluation ev = decompose(z, params, table, cfg);
            out << "z_re,z_im,varpi_re,varpi_im,v1_re,v1_im,v2_re,v2_im,v3_re,v3_im,"
                   "residual_abs\n";
            out << csv_num(ev.z) << "," << csv_num(ev.varpi_zero_sum) << ","
                << csv_num(ev.varpi1) << "," << csv_num(ev.varpi2) << ","
                << csv_num(ev.varpi3) << "," << csv_num(std::abs(ev.decomposition_residual))
                << "\n";
        } else {
            emit_manifest(out, "bartz fe", ps.str(), &table);
            const cplx r = functional_equation_residual(z, params, table, cfg);
            const cplx rv = functional_equation_residual_variant(z, params, table, cfg);
            out << "z_re,z_im,residual_re,residual_im,residual_abs,variant_residual_abs\n";
            out << csv_num(z) << "," << csv_num(r) << "," << csv_num(std::abs(r)) << ","
                << csv_num(std::abs(rv)) << "\n";
        }
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ramsum::table_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const ramsum::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
