#include "mzv/singularities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace mzv {

const char* tier_name(SingularityTier tier) {
    switch (tier) {
        case SingularityTier::candidate: return "Candidate";
        case SingularityTier::cancelled_by_gamma_zero: return "CancelledByGammaZero";
        case SingularityTier::genuine: return "GenuinePerPaper";
    }
    return "?";
}

std::string SingularityEntry::witness_json() const {
    std::ostringstream out;
    out << "{";
    if (source == "S3") {
        out << "\"k\": [";
        for (std::size_t i = 0; i < ell.size(); ++i) out << (i ? ", " : "") << ell[i];
        out << "]";
    } else {
        out << "\"l\": [";
        for (std::size_t i = 0; i < ell.size(); ++i) out << (i ? ", " : "") << ell[i];
        out << "], \"t\": " << t;
    }
    out << "}";
    return out.str();
}

std::string SingularityReport::json() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        out << (i ? ",\n " : "\n ") << "{\"sT\": \"" << to_string(e.sT) << "\", \"source\": \""
            << e.source << "\", \"tier\": \"" << tier_name(e.tier) << "\", \"witness\": "
            << e.witness_json() << "}";
    }
    out << (entries.empty() ? "]" : "\n]");
    return out.str();
}

namespace {

bool is_nonpositive_integer(const Rational& q) {
    return q.get_den() == 1 && q <= 0;
}

// All tuples in {0..max}^len, lexicographically.
void for_each_tuple(int len, long long max, const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> t(static_cast<std::size_t>(len), 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == len) {
            fn(t);
            return;
        }
        for (long long v = 0; v <= max; ++v) {
            t[static_cast<std::size_t>(j)] = v;
            rec(j + 1);
        }
        t[static_cast<std::size_t>(j)] = 0;
    };
    rec(0);
}

struct Collector {
    std::map<Rational, SingularityEntry> found;

    void add(const Rational& sT, const char* source, const std::vector<long long>& ell,
             long long t) {
        auto it = found.find(sT);
        if (it != found.end()) return; // first witness wins; enumeration order is fixed
        SingularityEntry e;
        e.sT = sT;
        e.source = source;
        e.tier = SingularityTier::candidate;
        e.ell = ell;
        e.t = t;
        found.emplace(sT, std::move(e));
    }
};

// g(sT; -l) = (1 - a0 sT + sum (a_j - a0) l_j) / (a_d - a0)
Rational g_at(const ProblemSpec& spec, const Rational& sT, const std::vector<long long>& ell) {
    Rational num = Rational(1) - Rational(spec.a[0]) * sT;
    for (std::size_t j = 0; j < ell.size(); ++j)
        num += Rational(spec.a[j + 1] - spec.a[0]) * Rational(static_cast<long>(ell[j]));
    return num / Rational(spec.a.back() - spec.a[0]);
}

// gtilde(sT; -l) = (a_d sT + sum (a_d - a_j) l_j - 1) / (a_d - a0)
Rational gtilde_at(const ProblemSpec& spec, const Rational& sT, const std::vector<long long>& ell) {
    Rational num = Rational(spec.a.back()) * sT - Rational(1);
    for (std::size_t j = 0; j < ell.size(); ++j)
        num += Rational(spec.a.back() - spec.a[j + 1]) * Rational(static_cast<long>(ell[j]));
    return num / Rational(spec.a.back() - spec.a[0]);
}

// Candidates within the enumeration range, tiered.
std::map<Rational, SingularityEntry> enumerate_candidates(const ProblemSpec& spec,
                                                          long long max_index) {
    const int d = spec.d();
    const long a0 = spec.a[0];
    const long ad = spec.a.back();
    const long span = ad - a0;
    Collector collector;

    // S1: g(sT; -l) = -t  =>  a0 sT = 1 + sum (a_j - a0) l_j + t (a_d - a0)
    if (a0 != 0) {
        for_each_tuple(d - 1, max_index, [&](const std::vector<long long>& ell) {
            for (long long t = 0; t <= max_index; ++t) {
                Rational num(1);
                for (std::size_t j = 0; j < ell.size(); ++j)
                    num += Rational(spec.a[j + 1] - a0) * Rational(static_cast<long>(ell[j]));
                num += Rational(span) * Rational(static_cast<long>(t));
                collector.add(num / Rational(a0), "S1", ell, t);
            }
        });
    }

    // S2: gtilde(sT; -l) = -t  =>  sT = (1 - sum (a_d - a_j) l_j - t (a_d - a0)) / a_d
    for_each_tuple(d - 1, max_index, [&](const std::vector<long long>& ell) {
        for (long long t = 0; t <= max_index; ++t) {
            Rational num(1);
            for (std::size_t j = 0; j < ell.size(); ++j)
                num -= Rational(ad - spec.a[j + 1]) * Rational(static_cast<long>(ell[j]));
            num -= Rational(span) * Rational(static_cast<long>(t));
            collector.add(num / Rational(ad), "S2", ell, t);
        }
    });

    // S3: a0 sT = 1 + <alpha|k>
    if (a0 != 0) {
        for_each_tuple(d, max_index, [&](const std::vector<long long>& k) {
            Rational num(1);
            for (std::size_t j = 0; j < k.size(); ++j)
                num += Rational(spec.alpha[j]) * Rational(static_cast<long>(k[j]));
            collector.add(num / Rational(a0), "S3", k, 0);
        });
    }

    for (auto& [sT, entry] : collector.found) {
        if (is_nonpositive_integer(sT)) {
            // The 1/Gamma(s_T) zero cancels the simple pole. A double pole
            // (Gamma(g) and Gamma(gtilde) simultaneously) would survive, so
            // keep such a point a candidate; g > 0 whenever s_T <= 0, so this
            // cannot actually occur within these families.
            bool double_pole = false;
            for_each_tuple(d - 1, max_index, [&](const std::vector<long long>& ell) {
                if (double_pole) return;
                if (is_nonpositive_integer(g_at(spec, sT, ell)) &&
                    is_nonpositive_integer(gtilde_at(spec, sT, ell)))
                    double_pole = true;
            });
            entry.tier = double_pole ? SingularityTier::candidate
                                     : SingularityTier::cancelled_by_gamma_zero;
        } else if (d == 1 && a0 == 0 && ad == 1 && sT == 1) {
            entry.tier = SingularityTier::genuine; // the 1/(s_T - 1) pole
        }
    }
    return collector.found;
}

} // namespace

SingularityReport candidate_hyperplanes(const ProblemSpec& spec, const Rational& lo,
                                        const Rational& hi, int max_index) {
    if (lo >= hi) fail(errc::unsupported_argument, "window must satisfy lo < hi");
    if (max_index < 0) fail(errc::unsupported_argument, "max_index must be nonnegative");
    SingularityReport report;
    for (const auto& [sT, entry] : enumerate_candidates(spec, max_index))
        if (sT >= lo && sT <= hi) report.entries.push_back(entry);
    std::sort(report.entries.begin(), report.entries.end(),
              [](const SingularityEntry& x, const SingularityEntry& y) { return x.sT > y.sT; });
    return report;
}

bool is_regular_point(const ProblemSpec& spec, const Rational& sT, int max_index) {
    if (is_nonpositive_integer(sT)) return true;
    auto found = enumerate_candidates(spec, max_index);
    auto it = found.find(sT);
    if (it == found.end()) return true;
    return it->second.tier == SingularityTier::cancelled_by_gamma_zero;
}

bool is_regular_point(const ProblemSpec& spec, const EvalPoint& point) {
    (void)spec;
    (void)point; // nonpositive integer points never meet a surviving pole
    return true;
}

} // namespace mzv
