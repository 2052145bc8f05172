#include "zpfourier/json_io.hpp"

#include <json.hpp>

namespace zpf {

using nlohmann::json;

namespace {

json field_json(const Field& field) {
    json j{{"char", field.characteristic()}, {"deg", field.degree()}};
    if (field.degree() > 1) j["modulus"] = field.modulus();
    return j;
}

json element_json(const Field& field, Fe x) {
    if (field.degree() == 1) return x.v;
    return field.coeffs(x);
}

json values_json(const Field& field, const std::vector<Fe>& values) {
    json arr = json::array();
    for (Fe v : values) arr.push_back(element_json(field, v));
    return arr;
}

Fe element_from_json(const Field& field, const json& j) {
    if (field.degree() == 1) {
        if (!j.is_number_unsigned()) fail(Errc::io_error, "prime-field element must be an unsigned integer");
        return field.from_value(j.get<std::uint64_t>());
    }
    if (!j.is_array() || j.size() != field.degree())
        fail(Errc::io_error, "extension-field element must be a coefficient array of length " +
                                 std::to_string(field.degree()));
    std::vector<std::uint64_t> coeffs;
    for (const json& c : j) {
        if (!c.is_number_unsigned()) fail(Errc::io_error, "element coefficients must be unsigned integers");
        coeffs.push_back(c.get<std::uint64_t>());
    }
    return field.from_coeffs(coeffs);
}

} // namespace

std::string field_to_json(const Field& field) {
    return field_json(field).dump();
}

Field field_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(Errc::io_error, std::string("field document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("char") || !j["char"].is_number_unsigned())
        fail(Errc::io_error, "field document needs an unsigned \"char\"");
    const std::uint64_t ell = j["char"].get<std::uint64_t>();
    std::uint64_t deg = 1;
    if (j.contains("deg")) {
        if (!j["deg"].is_number_unsigned()) fail(Errc::io_error, "\"deg\" must be an unsigned integer");
        deg = j["deg"].get<std::uint64_t>();
    }
    std::vector<std::uint64_t> modulus;
    if (j.contains("modulus")) {
        if (!j["modulus"].is_array()) fail(Errc::io_error, "\"modulus\" must be an array");
        for (const json& c : j["modulus"]) {
            if (!c.is_number_unsigned()) fail(Errc::io_error, "modulus coefficients must be unsigned integers");
            modulus.push_back(c.get<std::uint64_t>());
        }
    } else if (deg > 1) {
        fail(Errc::io_error, "extension field document needs a \"modulus\"");
    }
    if (deg == 1) return Field(ell);
    return Field(ell, deg, modulus);
}

std::string element_to_json(const Field& field, Fe x) {
    return element_json(field, x).dump();
}

std::string signal_to_json(const Field& field, std::uint64_t p, const Signal& f) {
    json j{{"p", p}, {"field", field_json(field)}, {"values", values_json(field, f.values)}};
    return j.dump();
}

std::string spectrum_to_json(const Field& field, std::uint64_t p, const Spectrum& s) {
    auto supp = support(s);
    json j{{"kind", "spectrum"},
           {"p", p},
           {"field", field_json(field)},
           {"values", values_json(field, s.values)},
           {"support", supp},
           {"support_size", supp.size()}};
    return j.dump();
}

SignalDoc signal_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(Errc::io_error, std::string("signal document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("p") || !j["p"].is_number_unsigned())
        fail(Errc::io_error, "signal document needs an unsigned \"p\"");
    if (!j.contains("field")) fail(Errc::io_error, "signal document needs a \"field\"");
    if (!j.contains("values") || !j["values"].is_array())
        fail(Errc::io_error, "signal document needs a \"values\" array");

    const std::uint64_t p = j["p"].get<std::uint64_t>();
    Field field = field_from_json(j["field"].dump());
    Signal sig;
    for (const json& v : j["values"]) sig.values.push_back(element_from_json(field, v));
    if (sig.values.size() != p)
        fail(Errc::io_error, "signal document has " + std::to_string(sig.values.size()) +
                                 " values but p = " + std::to_string(p));
    return SignalDoc{p, std::move(field), std::move(sig)};
}

std::string apfree_to_json(const ApFreeResult& r) {
    json j{{"p", r.p},          {"m", r.m},
           {"r", r.r},          {"witness", r.witness.elements()},
           {"proven", r.proven_optimal}, {"nodes", r.nodes_explored}};
    return j.dump();
}

std::string bound_to_json(const BoundReport& r) {
    json j{{"p", r.p},
           {"m", r.m},
           {"log_base", r.base == LogBase::natural ? "natural" : "base2"},
           {"override_used", r.override_used},
           {"exponent_log2", r.exponent_log2},
           {"loglog_p", r.loglog_p},
           {"bound", r.bound},
           {"bound_log2", r.bound_log2},
           {"deficit_log2", r.deficit_log2},
           {"vacuous", r.vacuous}};
    return j.dump();
}

std::string minor_report_to_json(const Field& field, const MinorReport& r) {
    json j{{"rows", r.index.rows},
           {"cols", r.index.cols},
           {"rank", r.rank},
           {"det", element_json(field, r.det)},
           {"degenerate", r.is_degenerate},
           {"omitted_row_scale", element_json(field, r.row_scale_omitted)}};
    j["kernel"] = r.kernel ? values_json(field, *r.kernel) : json(nullptr);
    return j.dump();
}

std::string scan_to_json(const Field& field, const ScanResult& r) {
    json j{{"p", r.p},
           {"m", r.m},
           {"mode", r.mode == ScanMode::exhaustive ? "exhaustive" : "random"},
           {"min_spectrum_support", r.min_spectrum_support},
           {"witness", values_json(field, r.witness.values)},
           {"instances_checked", r.instances_checked},
           {"skipped_vectors", r.skipped_vectors},
           {"supports_enumerated", r.supports_enumerated},
           {"strong_failures", r.strong_failures_total},
           {"r_used", r.r_used},
           {"r_provenance", r.r_provenance == RProvenance::exact ? "exact" : "assumed"}};
    if (r.mode == ScanMode::random) {
        j["seed"] = r.seed;
        j["samples"] = r.samples;
    }
    return j.dump();
}

std::string strong_finding_to_json(const Field& field, const StrongFinding& x) {
    json j{{"kind", "strong_counterexample"},
           {"values", values_json(field, x.values)},
           {"support_size", x.support_size},
           {"spectrum_support", x.spectrum_support}};
    return j.dump();
}

} // namespace zpf
