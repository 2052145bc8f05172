#pragma once

#include <cstdint>
#include <string>

#include "zpfourier/field.hpp"
#include "zpfourier/fourier.hpp"
#include "zpfourier/minors.hpp"
#include "zpfourier/progressions.hpp"
#include "zpfourier/uncertainty.hpp"

namespace zpf {

// All documents are compact single-line JSON, suitable for JSON-lines
// streams. Non-finite doubles (possible only in bound reports) render as
// null.

// {"char": l, "deg": k, "modulus": [c0, ..., ck]}; the modulus is omitted
// for prime fields.
std::string field_to_json(const Field& field);
Field field_from_json(const std::string& text);

// Plain integer for prime fields, coefficient array (constant term first)
// for extensions.
std::string element_to_json(const Field& field, Fe x);

// {"p": .., "field": {..}, "values": [..]}
std::string signal_to_json(const Field& field, std::uint64_t p, const Signal& f);

// Mirrors the signal document plus "kind": "spectrum", "support",
// "support_size".
std::string spectrum_to_json(const Field& field, std::uint64_t p, const Spectrum& s);

struct SignalDoc {
    std::uint64_t p = 0;
    Field field;
    Signal signal;
};

// Accepts both signal and spectrum documents; keys beyond p/field/values
// are ignored. Errors: io_error on malformed input.
SignalDoc signal_from_json(const std::string& text);

// {"p", "m", "r", "witness": [..], "proven", "nodes"}
std::string apfree_to_json(const ApFreeResult& r);

std::string bound_to_json(const BoundReport& r);

std::string minor_report_to_json(const Field& field, const MinorReport& r);

std::string scan_to_json(const Field& field, const ScanResult& r);

// One JSON line per violation of the additive bound.
std::string strong_finding_to_json(const Field& field, const StrongFinding& x);

} // namespace zpf
