// Command-line front end. Talks to the engine exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mzv.h"

namespace {

struct StringOut {
    char* ptr = nullptr;
    ~StringOut() { mzv_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct SpecHandle {
    mzv_spec* ptr = nullptr;
    ~SpecHandle() { mzv_spec_free(ptr); }
};

int report_failure(int status, const StringOut& error) {
    std::cerr << (error.ptr ? error.str() : "unknown error") << "\n";
    return status == MZV_OK ? MZV_EINTERNAL : status;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open '" << path << "'\n";
        std::exit(MZV_EPARSE);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            std::cerr << "invalid integer '" << item << "' in list\n";
            std::exit(MZV_EPARSE);
        }
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            std::cerr << "invalid number '" << item << "' in list\n";
            std::exit(MZV_EPARSE);
        }
    }
    return out;
}

void print_numeric(double re, double im, double chop = 1e-300) {
    char buf[96];
    if (im > -chop && im < chop) {
        std::snprintf(buf, sizeof buf, "%.12g", re);
    } else {
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
    }
    std::cout << "numeric: " << buf << "\n";
}

int load_spec(const std::string& path, SpecHandle& handle) {
    StringOut error;
    std::string text = read_file(path);
    int status = mzv_spec_parse(text.c_str(), &handle.ptr, &error.ptr);
    if (status != MZV_OK) return report_failure(status, error);
    return MZV_OK;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact values of partially twisted multiple zeta functions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", mzv_version());

    // value
    auto* value_cmd = app.add_subcommand("value", "evaluate a problem at s = -N");
    std::string value_spec_path, value_at, value_path = "auto";
    bool value_numeric = false, value_trace = false, value_raw = false;
    value_cmd->add_option("spec", value_spec_path, "problem JSON file")->required();
    value_cmd->add_option("--at", value_at, "comma-separated N (the point is s = -N)")->required();
    value_cmd->add_option("--path", value_path, "auto|d1|d2|general")
        ->check(CLI::IsMember({"auto", "d1", "d2", "general"}));
    value_cmd->add_flag("--numeric", value_numeric, "also print a float render");
    value_cmd->add_flag("--trace", value_trace, "print the per-term JSON log");
    value_cmd->add_flag("--raw", value_raw, "skip closed-form simplification");

    // dc
    auto* dc_cmd = app.add_subcommand("dc", "evaluate a fully twisted point");
    std::string dc_path;
    dc_cmd->add_option("file", dc_path, "request JSON file (polys/k or args/twists)")->required();

    // lerch
    auto* lerch_cmd = app.add_subcommand("lerch", "a single Lerch zeta value");
    std::string lerch_mu;
    long long lerch_arg = 0;
    bool lerch_decimal = false;
    lerch_cmd->add_option("--mu", lerch_mu, "twist a/b")->required();
    lerch_cmd->add_option("--arg", lerch_arg, "integer argument")->required();
    lerch_cmd->add_flag("--decimal", lerch_decimal, "also print a decimal render");

    // sing
    auto* sing_cmd = app.add_subcommand("sing", "candidate singular hyperplanes");
    std::string sing_spec_path;
    std::vector<std::string> sing_window;
    int sing_max_index = 24;
    sing_cmd->add_option("spec", sing_spec_path, "problem JSON file")->required();
    sing_cmd->add_option("--window", sing_window, "lo hi (rationals)")->expected(2)->required();
    sing_cmd->add_option("--max-index", sing_max_index, "index bound for the enumeration");

    // check
    auto* check_cmd = app.add_subcommand("check", "validate a problem file");
    std::string check_spec_path;
    check_cmd->add_option("spec", check_spec_path, "problem JSON file")->required();

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "numeric ground-truth checks");
    oracle_cmd->require_subcommand(1);

    auto* n1_cmd = oracle_cmd->add_subcommand("n1", "continuation of sum P(m)^(-s)");
    std::string n1_poly;
    double n1_sre = 0.0, n1_sim = 0.0;
    int n1_cutoff = 48, n1_order = 24;
    n1_cmd->add_option("--poly", n1_poly, "one-variable polynomial")->required();
    n1_cmd->add_option("--s-re", n1_sre, "Re s")->required();
    n1_cmd->add_option("--s-im", n1_sim, "Im s");
    n1_cmd->add_option("--cutoff", n1_cutoff, "directly summed terms");
    n1_cmd->add_option("--order", n1_order, "binomial orders kept");

    auto* mb_cmd = oracle_cmd->add_subcommand("mb", "vertical-line identity residual");
    double mb_s = 0.0, mb_lam_re = 0.0, mb_lam_im = 0.0, mb_c = -0.5, mb_height = 40.0;
    mb_cmd->add_option("--s", mb_s, "exponent (real)")->required();
    mb_cmd->add_option("--lam", mb_lam_re, "lambda (real part)")->required();
    mb_cmd->add_option("--lam-im", mb_lam_im, "lambda (imaginary part)");
    mb_cmd->add_option("--c", mb_c, "line abscissa, -Re s < c < 0");
    mb_cmd->add_option("--height", mb_height, "truncation height");

    auto* mmb_cmd = oracle_cmd->add_subcommand("mmb", "iterated identity residual (r <= 2)");
    double mmb_s = 0.0, mmb_height = 30.0;
    std::string mmb_lams, mmb_rhos;
    mmb_cmd->add_option("--s", mmb_s, "exponent (real)")->required();
    mmb_cmd->add_option("--lams", mmb_lams, "lam_0..lam_r, comma-separated")->required();
    mmb_cmd->add_option("--rhos", mmb_rhos, "rho_1..rho_r, comma-separated")->required();
    mmb_cmd->add_option("--height", mmb_height, "truncation height");

    auto* fact_cmd = oracle_cmd->add_subcommand("factorized", "per-variable factor evaluation");
    std::string fact_spec_path, fact_s;
    fact_cmd->add_option("spec", fact_spec_path, "problem JSON file")->required();
    fact_cmd->add_option("--s", fact_s, "comma-separated exponents")->required();

    CLI11_PARSE(app, argc, argv);

    if (value_cmd->parsed()) {
        SpecHandle spec;
        if (int status = load_spec(value_spec_path, spec); status != MZV_OK) return status;
        std::vector<long long> N = parse_int_list(value_at);
        StringOut value, trace, error;
        int status = mzv_value_at(spec.ptr, N.data(), N.size(), value_path.c_str(),
                                  value_raw ? 0 : -1, &value.ptr,
                                  value_trace ? &trace.ptr : nullptr, &error.ptr);
        if (status != MZV_OK) return report_failure(status, error);
        std::cout << value.str() << "\n";
        int opt_numeric = 0;
        double tolerance = 1e-10;
        mzv_spec_options(spec.ptr, nullptr, &opt_numeric, &tolerance);
        if (value_numeric || opt_numeric) {
            double re = 0.0, im = 0.0;
            StringOut nerror;
            status = mzv_value_numeric(spec.ptr, N.data(), N.size(), value_path.c_str(), &re, &im,
                                       &nerror.ptr);
            if (status != MZV_OK) return report_failure(status, nerror);
            print_numeric(re, im, tolerance);
        }
        if (value_trace) std::cout << trace.str() << "\n";
        return 0;
    }

    if (dc_cmd->parsed()) {
        StringOut value, error;
        std::string text = read_file(dc_path);
        int status = mzv_dc_eval(text.c_str(), &value.ptr, &error.ptr);
        if (status != MZV_OK) return report_failure(status, error);
        std::cout << value.str() << "\n";
        return 0;
    }

    if (lerch_cmd->parsed()) {
        auto slash = lerch_mu.find('/');
        if (slash == std::string::npos) {
            std::cerr << "--mu must be a/b\n";
            return MZV_EPARSE;
        }
        long num = 0, den = 0;
        try {
            num = std::stol(lerch_mu.substr(0, slash));
            den = std::stol(lerch_mu.substr(slash + 1));
        } catch (const std::exception&) {
            std::cerr << "invalid twist '" << lerch_mu << "'\n";
            return MZV_EPARSE;
        }
        StringOut error;
        if (lerch_arg <= 0) {
            StringOut value;
            int status = mzv_lerch_exact(num, den, lerch_arg, &value.ptr, &error.ptr);
            if (status != MZV_OK) return report_failure(status, error);
            std::cout << value.str() << "\n";
            if (lerch_decimal) {
                double re = 0.0, im = 0.0;
                StringOut derror;
                status = mzv_lerch_exact_eval(num, den, lerch_arg, &re, &im, &derror.ptr);
                if (status != MZV_OK) return report_failure(status, derror);
                print_numeric(re, im, 1e-12);
            }
        } else {
            double re = 0.0, im = 0.0;
            int status = mzv_lerch_numeric(num, den, lerch_arg, &re, &im, &error.ptr);
            if (status != MZV_OK) return report_failure(status, error);
            print_numeric(re, im);
        }
        return 0;
    }

    if (sing_cmd->parsed()) {
        SpecHandle spec;
        if (int status = load_spec(sing_spec_path, spec); status != MZV_OK) return status;
        StringOut report, error;
        int status = mzv_singularities(spec.ptr, sing_window[0].c_str(), sing_window[1].c_str(),
                                       sing_max_index, &report.ptr, &error.ptr);
        if (status != MZV_OK) return report_failure(status, error);
        std::cout << report.str() << "\n";
        return 0;
    }

    if (check_cmd->parsed()) {
        SpecHandle spec;
        if (int status = load_spec(check_spec_path, spec); status != MZV_OK) return status;
        StringOut report, error;
        int status = mzv_spec_check(spec.ptr, &report.ptr, &error.ptr);
        std::cout << report.str() << "\n";
        if (status != MZV_OK) return status;
        return 0;
    }

    if (n1_cmd->parsed()) {
        StringOut out, error;
        int status = mzv_oracle_n1(n1_poly.c_str(), n1_sre, n1_sim, n1_cutoff, n1_order, &out.ptr,
                                   &error.ptr);
        if (status != MZV_OK) return report_failure(status, error);
        std::cout << out.str() << "\n";
        return 0;
    }

    if (mb_cmd->parsed()) {
        StringOut error;
        double residual = 0.0;
        int status = mzv_oracle_mb(mb_s, 0.0, mb_lam_re, mb_lam_im, mb_c, mb_height, &residual,
                                   &error.ptr);
        if (status != MZV_OK) return report_failure(status, error);
        std::printf("{\"residual\": %.15g}\n", residual);
        return 0;
    }

    if (mmb_cmd->parsed()) {
        std::vector<double> lams = parse_double_list(mmb_lams);
        std::vector<double> rhos = parse_double_list(mmb_rhos);
        std::vector<double> lams_im(lams.size(), 0.0);
        StringOut error;
        double residual = 0.0;
        int status = mzv_oracle_mmb(mmb_s, 0.0, lams.data(), lams_im.data(), lams.size(),
                                    rhos.data(), rhos.size(), mmb_height, &residual, &error.ptr);
        if (status != MZV_OK) return report_failure(status, error);
        std::printf("{\"residual\": %.15g}\n", residual);
        return 0;
    }

    if (fact_cmd->parsed()) {
        SpecHandle spec;
        if (int status = load_spec(fact_spec_path, spec); status != MZV_OK) return status;
        std::vector<double> s = parse_double_list(fact_s);
        std::vector<double> s_im(s.size(), 0.0);
        StringOut out, error;
        int status = mzv_oracle_factorized(spec.ptr, s.data(), s_im.data(), s.size(), &out.ptr,
                                           &error.ptr);
        if (status != MZV_OK) return report_failure(status, error);
        std::cout << out.str() << "\n";
        return 0;
    }

    return 0;
}
