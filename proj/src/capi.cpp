#include "mzv.h"

#include <cstring>
#include <string>

#include "mzv/error.hpp"
#include "mzv/oracle.hpp"
#include "mzv/partial_values.hpp"
#include "mzv/singularities.hpp"
#include "mzv/spec_json.hpp"

using namespace mzv;

struct mzv_spec_s {
    SpecFile file;
};

namespace {

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int status_of(errc code) {
    switch (code) {
        case errc::parse_error:
            return MZV_EPARSE;
        case errc::var_arity_mismatch:
        case errc::zero_polynomial:
        case errc::parts_mismatch:
        case errc::not_certified_positive:
        case errc::certification_failed:
        case errc::validation_failed:
        case errc::invalid_root_of_unity:
            return MZV_EVALIDATION;
        case errc::crosscheck_mismatch:
            return MZV_ECROSSCHECK;
        case errc::unsupported_argument:
        case errc::near_pole:
        case errc::tail_divergent:
        case errc::unsupported_depth:
        case errc::not_factorizable:
        case errc::wrong_shape:
        case errc::division_by_zero:
            return MZV_EUNSUPPORTED;
        case errc::resource_limit:
            return MZV_ERESOURCE;
        case errc::internal_positivity_violation:
        case errc::internal_error:
            return MZV_EINTERNAL;
    }
    return MZV_EINTERNAL;
}

template <typename Fn>
int guarded(char** out_error, Fn&& fn) {
    try {
        fn();
        return MZV_OK;
    } catch (const MzvError& e) {
        if (out_error) *out_error = copy_string(e.what());
        return status_of(e.code());
    } catch (const std::exception& e) {
        if (out_error) *out_error = copy_string(e.what());
        return MZV_EINTERNAL;
    } catch (...) {
        if (out_error) *out_error = copy_string("unknown error");
        return MZV_EINTERNAL;
    }
}

struct ValueComputation {
    ValueExpr expr;
    std::string trace;
};

ValueComputation compute_value(const SpecFile& file, const long long* N, size_t n_len,
                               const char* path, int simplify_mode, bool want_trace) {
    bool simplify_out = simplify_mode < 0 ? file.options.simplify : simplify_mode != 0;
    std::vector<long long> Nvec(N, N + n_len);
    EvalPoint point(std::move(Nvec));
    std::string mode = path ? path : "auto";
    std::vector<TraceEntry> trace;
    ValueOptions options;
    if (want_trace) options.trace = &trace;

    const ProblemSpec& spec = file.spec;
    auto maybe_simplify = [&](const ValueExpr& e) { return simplify_out ? simplify(e) : e; };

    ValueExpr result;
    if (mode == "general") {
        result = value_general(spec, point, options);
    } else if (mode == "d1") {
        result = value_d1(spec, point, options);
    } else if (mode == "d2") {
        result = value_d2(spec, point, D2Mode::standard, options);
    } else if (mode == "auto") {
        result = value_general(spec, point, options);
        if (spec.d() == 1 && spec.a[0] == 0) {
            ValueExpr other = value_d1(spec, point);
            if (simplify(other) != simplify(result))
                fail(errc::crosscheck_mismatch,
                     "the d=1 path disagrees with the general formula: '" +
                         simplify(other).str() + "' vs '" + simplify(result).str() + "'");
        } else if (spec.d() == 2 && spec.a[0] == 0) {
            ValueExpr other = value_d2(spec, point, D2Mode::standard);
            if (simplify(other) != simplify(result))
                fail(errc::crosscheck_mismatch,
                     "the d=2 path disagrees with the general formula: '" +
                         simplify(other).str() + "' vs '" + simplify(result).str() + "'");
        }
    } else {
        fail(errc::unsupported_argument, "unknown path '" + mode + "'");
    }

    ValueComputation out;
    out.expr = maybe_simplify(result);
    if (want_trace) out.trace = trace_json(trace);
    return out;
}

} // namespace

extern "C" {

const char* mzv_version(void) { return "mzv 1.0.0"; }

void mzv_string_free(char* s) { delete[] s; }

int mzv_spec_parse(const char* json_text, mzv_spec** out_spec, char** out_error) {
    if (!json_text || !out_spec) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        auto* handle = new mzv_spec_s{parse_spec_json(json_text)};
        *out_spec = handle;
    });
}

void mzv_spec_free(mzv_spec* spec) { delete spec; }

int mzv_spec_options(const mzv_spec* spec, int* out_simplify, int* out_numeric,
                     double* out_tolerance) {
    if (!spec) return MZV_EINTERNAL;
    if (out_simplify) *out_simplify = spec->file.options.simplify ? 1 : 0;
    if (out_numeric) *out_numeric = spec->file.options.numeric ? 1 : 0;
    if (out_tolerance) *out_tolerance = spec->file.options.tolerance;
    return MZV_OK;
}

int mzv_spec_check(const mzv_spec* spec, char** out_report, char** out_error) {
    if (!spec || !out_report) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        ValidationReport report = validate(spec->file.spec);
        *out_report = copy_string(report.str());
        if (!report.ok()) fail(errc::validation_failed, report.str());
    });
}

int mzv_value_at(const mzv_spec* spec, const long long* N, size_t n_len, const char* path,
                 int simplify, char** out_value, char** out_trace, char** out_error) {
    if (!spec || !N || !out_value) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        ValueComputation c =
            compute_value(spec->file, N, n_len, path, simplify, out_trace != nullptr);
        *out_value = copy_string(c.expr.str());
        if (out_trace) *out_trace = copy_string(c.trace);
    });
}

int mzv_value_numeric(const mzv_spec* spec, const long long* N, size_t n_len, const char* path,
                      double* out_re, double* out_im, char** out_error) {
    if (!spec || !N || !out_re || !out_im) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        ValueComputation c = compute_value(spec->file, N, n_len, path, 1, false);
        std::complex<double> v = c.expr.numeric();
        *out_re = v.real();
        *out_im = v.imag();
    });
}

int mzv_dc_eval(const char* json_text, char** out_value, char** out_error) {
    if (!json_text || !out_value) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        DCPoint point = parse_dc_request_json(json_text);
        ValueExpr value = dc_value_mixed(point);
        *out_value = copy_string(value.str());
    });
}

int mzv_lerch_exact(long mu_num, long mu_den, long long arg, char** out_value, char** out_error) {
    if (!out_value) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        if (arg > 0)
            fail(errc::unsupported_argument, "exact Lerch values live at arguments <= 0");
        RootOfUnity mu(mu_num, mu_den);
        Cyclotomic v = lerch_nonpos_stirling(mu, static_cast<unsigned>(-arg));
        *out_value = copy_string(v.is_rational() ? to_string(v.rational_value()) : v.str());
    });
}

int mzv_lerch_exact_eval(long mu_num, long mu_den, long long arg, double* out_re, double* out_im,
                         char** out_error) {
    if (!out_re || !out_im) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        if (arg > 0)
            fail(errc::unsupported_argument, "exact Lerch values live at arguments <= 0");
        RootOfUnity mu(mu_num, mu_den);
        std::complex<double> v = lerch_nonpos_stirling(mu, static_cast<unsigned>(-arg)).eval();
        *out_re = v.real();
        *out_im = v.imag();
    });
}

int mzv_lerch_numeric(long mu_num, long mu_den, long long arg, double* out_re, double* out_im,
                      char** out_error) {
    if (!out_re || !out_im) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        RootOfUnity mu(mu_num, mu_den);
        std::complex<double> v = lerch_numeric(mu, arg);
        *out_re = v.real();
        *out_im = v.imag();
    });
}

int mzv_singularities(const mzv_spec* spec, const char* lo, const char* hi, int max_index,
                      char** out_json, char** out_error) {
    if (!spec || !lo || !hi || !out_json) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        SingularityReport report = candidate_hyperplanes(spec->file.spec, parse_rational(lo),
                                                         parse_rational(hi), max_index);
        *out_json = copy_string(report.json());
    });
}

int mzv_oracle_n1(const char* poly_text, double s_re, double s_im, int cutoff, int order,
                  char** out_json, char** out_error) {
    if (!poly_text || !out_json) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        MultiPoly poly = MultiPoly::parse(poly_text, 1);
        OracleResult r = n1_binomial_continuation(poly, {s_re, s_im}, cutoff, order);
        *out_json = copy_string(r.json());
    });
}

int mzv_oracle_mb(double s_re, double s_im, double lam_re, double lam_im, double c, double height,
                  double* out_residual, char** out_error) {
    if (!out_residual) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        *out_residual = mb_identity_check({s_re, s_im}, {lam_re, lam_im}, c, height);
    });
}

int mzv_oracle_mmb(double s_re, double s_im, const double* lam_re, const double* lam_im,
                   size_t n_lam, const double* rhos, size_t n_rho, double height,
                   double* out_residual, char** out_error) {
    if (!lam_re || !lam_im || !rhos || !out_residual) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        std::vector<std::complex<double>> lams;
        for (size_t i = 0; i < n_lam; ++i) lams.emplace_back(lam_re[i], lam_im[i]);
        std::vector<double> rho(rhos, rhos + n_rho);
        *out_residual = mmb_identity_check({s_re, s_im}, lams, rho, height);
    });
}

int mzv_oracle_factorized(const mzv_spec* spec, const double* s_re, const double* s_im,
                          size_t s_len, char** out_json, char** out_error) {
    if (!spec || !s_re || !s_im || !out_json) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        std::vector<std::complex<double>> s;
        for (size_t i = 0; i < s_len; ++i) s.emplace_back(s_re[i], s_im[i]);
        OracleResult r = factorized_series_oracle(spec->file.spec, s);
        *out_json = copy_string(r.json());
    });
}

int mzv_value_expr_canonical(const char* text, char** out_canonical, char** out_error) {
    if (!text || !out_canonical) return MZV_EINTERNAL;
    return guarded(out_error, [&] {
        ValueExpr parsed = ValueExpr::parse(text);
        *out_canonical = copy_string(parsed.str());
    });
}

} // extern "C"
