#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mzv/dc_values.hpp"
#include "mzv/multipoly.hpp"

namespace mzv {

/// The full problem input: the twisted outer polynomials P_1..P_{T-1} over
/// n-1 variables, the inner polynomial P_T over n variables (decomposed by
/// powers of X_n into Q_j and strictly increasing exponents a_j), and one
/// twist per outer variable.
struct ProblemSpec {
    int n = 1;
    int T = 1;
    std::vector<MultiPoly> P;        // T-1 polynomials over n-1 variables
    MultiPoly PT{1};                 // over n variables
    std::vector<RootOfUnity> twists; // n-1 twists

    // derived by decompose_xn
    std::vector<MultiPoly> Q; // d+1 polynomials over n-1 variables
    std::vector<int> a;       // exponents, strictly increasing
    std::vector<int> alpha;   // a_j - a_0 for j = 1..d

    ProblemSpec() = default;
    ProblemSpec(int n_in, int T_in, std::vector<MultiPoly> P_in, MultiPoly PT_in,
                std::vector<RootOfUnity> twists_in);

    int d() const { return static_cast<int>(a.size()) - 1; }

    /// The fully twisted factor list (P_1, ..., P_{T-1}, Q_0, ..., Q_d).
    std::vector<MultiPoly> dc_factors() const;
};

struct EvalPoint {
    std::vector<long long> N; // the point is s = -N, entries >= 0

    explicit EvalPoint(std::vector<long long> N_in);
};

struct ValidationReport {
    std::vector<std::string> errors;
    Rational abscissa_bound; // the series converges for Re s_T > this bound

    bool ok() const { return errors.empty(); }
    std::string str() const;
};

ValidationReport validate(const ProblemSpec& spec);

/// One pair (i, l) of the boundary sum of the general value formula:
/// 0 <= i <= floor((a_d N_T + 1)/alpha_d) and
/// sum_{j<d} (a_d - a_j) l_j = 1 + a_d N_T - i alpha_d.
/// Every returned pair satisfies |l| + i - N_T >= 1 (asserted).
struct SecondSumTerm {
    long long i;
    std::vector<long long> ell; // length d-1
};

std::vector<SecondSumTerm> enumerate_second_sum(long long N_T, std::span<const int> a);

/// Per-term audit record emitted under --trace.
struct TraceEntry {
    std::string sum;          // "interior" or "boundary"
    std::vector<long long> index;
    std::string coefficient;  // exact rational text
    std::string point;        // fully twisted evaluation point
    std::string kind;         // reduction tag or "exact"
    std::string value;        // rendered term value
};

struct ValueOptions {
    std::size_t term_cap = 0;               // 0 = default cap
    std::vector<TraceEntry>* trace = nullptr;
};

/// The general value formula at s = -N (any d >= 0, with the degenerate
/// d = 0 branch splitting off a Riemann zeta factor).
ValueExpr value_general(const ProblemSpec& spec, const EvalPoint& point,
                        const ValueOptions& options = {});

/// The specialized d = 1, a_0 = 0 formula (binomial sum plus the
/// Kronecker-delta boundary term present only when a_1 = 1).
ValueExpr value_d1(const ProblemSpec& spec, const EvalPoint& point,
                   const ValueOptions& options = {});

enum class D2Mode { standard, a1_1_a2_2 };

/// The specialized d = 2, a_0 = 0 formula, with the reparametrized variant
/// available when (a_1, a_2) = (1, 2).
ValueExpr value_d2(const ProblemSpec& spec, const EvalPoint& point,
                   D2Mode mode = D2Mode::standard, const ValueOptions& options = {});

/// Rewrites atoms with known closed forms: each all-(mu = -1, even argument)
/// product with rational coefficient folds into pi powers; any nonpositive
/// arguments fold into the constant. Everything else is untouched.
ValueExpr simplify(const ValueExpr& expr);

} // namespace mzv
