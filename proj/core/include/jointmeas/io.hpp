#pragma once

#include <string>
#include <vector>

#include "jointmeas/operators.hpp"
#include "jointmeas/steering.hpp"

namespace jointmeas {

/// Deterministic JSON encoding of a joint observable:
///   {"dim": d, "effects": {"<tuple-key>": [[[re,im],...],...], ...},
///    "slots": [[...], ...]}
/// Keys are sorted, floats use 17 significant digits.
std::string povm_to_json(const JointObservable& g);

/// Parses the format produced by povm_to_json. Throws std::runtime_error on
/// malformed input.
JointObservable povm_from_json(const std::string& text);

/// Single-slot wrapper so plain observables share the same file format.
JointObservable as_joint(const Observable& obs);

std::string witness_report_to_json(const WitnessReport& report);

/// CSV table with columns config,M_or_d,lambda_construction,lambda_witness,
/// tight; one row per id, rows sorted by id, floats with 12 significant
/// digits.
std::string threshold_table_csv(const std::vector<std::string>& ids);

/// JSON array counterpart of threshold_table_csv.
std::string threshold_table_json(const std::vector<std::string>& ids);

std::string format_double_json(double v);  // 17 significant digits
std::string format_double_csv(double v);   // 12 significant digits

}  // namespace jointmeas
