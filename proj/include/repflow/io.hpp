#pragma once

#include <string>
#include <vector>

#include "repflow/characters.hpp"
#include "repflow/group.hpp"
#include "repflow/kempf_ness.hpp"
#include "repflow/retraction.hpp"

namespace repflow {

inline constexpr const char* kToolVersion = "repflow 0.1.0";

// Representation files are JSON with fields group / rank / matrices; every
// entry is a [re, im] pair. Numbers are written with 17 significant digits,
// so write -> read -> write is byte-identical.
std::string representation_to_text(const RepresentationTuple& rho);
RepresentationTuple representation_from_text(const std::string& text, double tol = kMembershipTol);

void save_representation(const RepresentationTuple& rho, const std::string& path);
RepresentationTuple load_representation(const std::string& path, double tol = kMembershipTol);

// Key/value pairs recorded under "options" in a report, in insertion order.
struct ReportMeta {
  std::string command;
  std::vector<std::pair<std::string, std::string>> options;  // values already rendered
};

std::string balance_report_to_text(const ReportMeta& meta, const BalanceReport& report);
std::string path_report_to_text(const ReportMeta& meta, const RetractionPath& path);
std::string trace_report_to_text(const ReportMeta& meta, const TraceVector& traces);

void write_text_file(const std::string& path, const std::string& text);  // throws IoError
std::string read_text_file(const std::string& path);                     // throws IoError

// Canonical decimal form used across all file output (17 significant
// digits: round-trip exact for doubles).
std::string format_double(double x);

}  // namespace repflow
