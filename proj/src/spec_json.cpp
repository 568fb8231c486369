#include "mzv/spec_json.hpp"

#include <sstream>

#include <json.hpp>

#include "mzv/error.hpp"

namespace mzv {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(errc::parse_error, "input is not valid JSON");
    if (!doc.is_object()) fail(errc::parse_error, "top-level JSON value must be an object");
    return doc;
}

long get_long(const json& doc, const char* field) {
    if (!doc.contains(field)) fail(errc::parse_error, std::string(field) + ": missing");
    if (!doc[field].is_number_integer())
        fail(errc::parse_error, std::string(field) + ": must be an integer");
    return doc[field].get<long>();
}

std::vector<std::string> get_string_list(const json& doc, const char* field) {
    if (!doc.contains(field)) fail(errc::parse_error, std::string(field) + ": missing");
    if (!doc[field].is_array()) fail(errc::parse_error, std::string(field) + ": must be a list");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < doc[field].size(); ++i) {
        if (!doc[field][i].is_string())
            fail(errc::parse_error,
                 std::string(field) + "[" + std::to_string(i) + "]: must be a string");
        out.push_back(doc[field][i].get<std::string>());
    }
    return out;
}

std::vector<RootOfUnity> parse_twists(const std::vector<std::string>& texts, const char* field) {
    std::vector<RootOfUnity> out;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        try {
            out.push_back(RootOfUnity::parse(texts[i]));
        } catch (const MzvError& e) {
            fail(e.code() == errc::invalid_root_of_unity ? errc::validation_failed
                                                         : errc::parse_error,
                 std::string(field) + "[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return out;
}

} // namespace

SpecFile parse_spec_json(const std::string& text) {
    json doc = parse_document(text);
    long n = get_long(doc, "n");
    long T = get_long(doc, "T");
    if (n < 1) fail(errc::parse_error, "n: must be >= 1");
    if (T < 1) fail(errc::parse_error, "T: must be >= 1");
    std::vector<std::string> poly_texts = get_string_list(doc, "polynomials");
    if (static_cast<long>(poly_texts.size()) != T)
        fail(errc::parse_error, "polynomials: expected " + std::to_string(T) + " entries, got " +
                                    std::to_string(poly_texts.size()));
    std::vector<std::string> twist_texts =
        doc.contains("twists") ? get_string_list(doc, "twists") : std::vector<std::string>{};
    if (static_cast<long>(twist_texts.size()) != n - 1)
        fail(errc::parse_error, "twists: expected " + std::to_string(n - 1) + " entries, got " +
                                    std::to_string(twist_texts.size()));

    std::vector<MultiPoly> P;
    for (long i = 0; i + 1 < T; ++i) {
        try {
            P.push_back(MultiPoly::parse(poly_texts[static_cast<std::size_t>(i)],
                                         static_cast<int>(n - 1)));
        } catch (const MzvError& e) {
            fail(errc::parse_error,
                 "polynomials[" + std::to_string(i) + "]: " + std::string(e.what()));
        }
    }
    MultiPoly PT(static_cast<int>(n));
    try {
        PT = MultiPoly::parse(poly_texts.back(), static_cast<int>(n));
    } catch (const MzvError& e) {
        fail(errc::parse_error,
             "polynomials[" + std::to_string(T - 1) + "]: " + std::string(e.what()));
    }
    std::vector<RootOfUnity> twists = parse_twists(twist_texts, "twists");

    SpecFile out{ProblemSpec(static_cast<int>(n), static_cast<int>(T), std::move(P), std::move(PT),
                             std::move(twists)),
                 SpecOptions{}};
    if (doc.contains("options")) {
        const json& opts = doc["options"];
        if (!opts.is_object()) fail(errc::parse_error, "options: must be an object");
        if (opts.contains("simplify")) {
            if (!opts["simplify"].is_boolean())
                fail(errc::parse_error, "options.simplify: must be a boolean");
            out.options.simplify = opts["simplify"].get<bool>();
        }
        if (opts.contains("numeric")) {
            if (!opts["numeric"].is_boolean())
                fail(errc::parse_error, "options.numeric: must be a boolean");
            out.options.numeric = opts["numeric"].get<bool>();
        }
        if (opts.contains("tolerance")) {
            if (!opts["tolerance"].is_number())
                fail(errc::parse_error, "options.tolerance: must be a number");
            out.options.tolerance = opts["tolerance"].get<double>();
        }
    }
    return out;
}

DCPoint parse_dc_request_json(const std::string& text) {
    json doc = parse_document(text);
    std::vector<std::string> poly_texts = get_string_list(doc, "polys");
    std::vector<std::string> twist_texts =
        doc.contains("twists") ? get_string_list(doc, "twists") : std::vector<std::string>{};
    std::vector<RootOfUnity> twists = parse_twists(twist_texts, "twists");

    long nvars = doc.contains("nvars") ? get_long(doc, "nvars")
                                       : static_cast<long>(twists.size());
    if (nvars != static_cast<long>(twists.size()))
        fail(errc::parse_error, "nvars: must equal the number of twists");

    std::vector<MultiPoly> polys;
    for (std::size_t i = 0; i < poly_texts.size(); ++i) {
        try {
            polys.push_back(MultiPoly::parse(poly_texts[i], static_cast<int>(nvars)));
        } catch (const MzvError& e) {
            fail(errc::parse_error, "polys[" + std::to_string(i) + "]: " + std::string(e.what()));
        }
    }

    bool has_k = doc.contains("k");
    bool has_args = doc.contains("args");
    if (has_k == has_args)
        fail(errc::parse_error, "exactly one of 'k' (nonnegative) or 'args' (point) is required");
    const char* field = has_k ? "k" : "args";
    if (!doc[field].is_array()) fail(errc::parse_error, std::string(field) + ": must be a list");
    std::vector<long long> args;
    for (std::size_t i = 0; i < doc[field].size(); ++i) {
        if (!doc[field][i].is_number_integer())
            fail(errc::parse_error,
                 std::string(field) + "[" + std::to_string(i) + "]: must be an integer");
        long long v = doc[field][i].get<long long>();
        if (has_k) {
            if (v < 0)
                fail(errc::parse_error, "k[" + std::to_string(i) + "]: must be nonnegative");
            args.push_back(-v);
        } else {
            args.push_back(v);
        }
    }
    return DCPoint(std::move(args), std::move(polys), std::move(twists));
}

std::string trace_json(const std::vector<TraceEntry>& trace) {
    json out = json::array();
    for (const auto& entry : trace) {
        json e;
        e["sum"] = entry.sum;
        e["index"] = entry.index;
        e["coefficient"] = entry.coefficient;
        e["point"] = entry.point;
        e["kind"] = entry.kind;
        e["value"] = entry.value;
        out.push_back(e);
    }
    return out.dump(1);
}

} // namespace mzv
