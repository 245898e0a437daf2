#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "amalgam/ideal.hpp"
#include "amalgam/qf.hpp"

namespace amalgam {

enum class Format { Text, Structured };

/// One report record with a fixed field order.
using Record = nlohmann::ordered_json;

/// Text: "key: value" lines (or space-separated key=value when `one_line`).
/// Structured: compact JSON, always one line. No trailing newline.
std::string render(const Record& rec, Format fmt, bool one_line = false);

/// Element labels for a list of indices.
nlohmann::json labels_of(const RingTable& r, const std::vector<Element>& xs);

/// {"size": .., "members": [..], "labels": [..]} for an ideal.
Record ideal_record(const IdealSet& i);

Record qf_report_record(const RingTable& r, const QfReport& rep);

Record theorem_record(const RingTable& r, const ExprPtr& ring_expr, const IdealSet& i,
                      const TheoremVerdict& v);

std::string hex64(std::uint64_t v);

}  // namespace amalgam
