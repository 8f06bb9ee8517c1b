#include "repflow/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace repflow {

namespace {

using nlohmann::json;

std::string quote(const std::string& s) {
  // Command names, descriptors and option keys are plain ASCII; escape the
  // two characters JSON requires anyway.
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void append_entry(std::string& out, const Complex& z) {
  out += '[';
  out += format_double(z.real());
  out += ", ";
  out += format_double(z.imag());
  out += ']';
}

void append_matrix(std::string& out, const ComplexMatrix& m, const std::string& indent) {
  out += "[\n";
  for (int i = 0; i < m.size(); ++i) {
    out += indent + "  [";
    for (int j = 0; j < m.size(); ++j) {
      if (j > 0) out += ", ";
      append_entry(out, m(i, j));
    }
    out += i + 1 < m.size() ? "],\n" : "]\n";
  }
  out += indent + "]";
}

void append_tuple(std::string& out, const RepresentationTuple& rho, const std::string& indent) {
  out += "{\n";
  out += indent + "  \"group\": " + quote(rho.descriptor().to_string()) + ",\n";
  out += indent + "  \"rank\": " + std::to_string(rho.rank()) + ",\n";
  out += indent + "  \"matrices\": [\n";
  for (int i = 0; i < rho.rank(); ++i) {
    out += indent + "    ";
    append_matrix(out, rho.element(i).matrix(), indent + "    ");
    out += i + 1 < rho.rank() ? ",\n" : "\n";
  }
  out += indent + "  ]\n";
  out += indent + "}";
}

void append_real_list(std::string& out, const std::vector<double>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(xs[i]);
  }
  out += ']';
}

std::string report_text(const ReportMeta& meta, const std::string& payload) {
  std::string out = "{\n";
  out += "  \"command\": " + quote(meta.command) + ",\n";
  out += "  \"options\": {";
  for (std::size_t i = 0; i < meta.options.size(); ++i) {
    out += i > 0 ? ", " : "";
    out += quote(meta.options[i].first) + ": " + meta.options[i].second;
  }
  out += "},\n";
  out += "  \"payload\": " + payload + ",\n";
  out += "  \"version\": " + quote(kToolVersion) + "\n";
  out += "}\n";
  return out;
}

Complex entry_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("matrix entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string representation_to_text(const RepresentationTuple& rho) {
  std::string out;
  append_tuple(out, rho, "");
  out += '\n';
  return out;
}

RepresentationTuple representation_from_text(const std::string& text, double tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid representation file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("group") || !j.contains("rank") || !j.contains("matrices"))
    throw ParseError("representation file needs group, rank and matrices fields");
  if (!j["group"].is_string() || !j["rank"].is_number_integer() || !j["matrices"].is_array())
    throw ParseError("representation file has wrongly typed fields");

  const GroupDescriptor desc = GroupDescriptor::parse(j["group"].get<std::string>());
  const int rank = j["rank"].get<int>();
  if (rank < 1) throw ParseError("rank must be at least 1");
  if (j["matrices"].size() != static_cast<std::size_t>(rank))
    throw ParseError("matrix count does not match rank");

  std::vector<ComplexMatrix> matrices;
  matrices.reserve(static_cast<std::size_t>(rank));
  for (const json& jm : j["matrices"]) {
    if (!jm.is_array() || jm.size() != static_cast<std::size_t>(desc.n))
      throw ParseError("each matrix needs " + std::to_string(desc.n) + " rows");
    ComplexMatrix m(desc.n);
    for (int i = 0; i < desc.n; ++i) {
      const json& row = jm[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(desc.n))
        throw ParseError("each row needs " + std::to_string(desc.n) + " entries");
      for (int k = 0; k < desc.n; ++k) m(i, k) = entry_from_json(row[static_cast<std::size_t>(k)]);
    }
    matrices.push_back(std::move(m));
  }
  return RepresentationTuple::from_matrices(desc, matrices, tol);
}

void save_representation(const RepresentationTuple& rho, const std::string& path) {
  write_text_file(path, representation_to_text(rho));
}

RepresentationTuple load_representation(const std::string& path, double tol) {
  return representation_from_text(read_text_file(path), tol);
}

std::string balance_report_to_text(const ReportMeta& meta, const BalanceReport& report) {
  std::string p = "{\n";
  p += "    \"verdict\": " + quote(to_string(report.verdict)) + ",\n";
  p += "    \"iterations\": " + std::to_string(report.iterations) + ",\n";
  p += "    \"conjugator_condition\": " + format_double(report.conjugator_condition) + ",\n";
  p += "    \"witness_residual\": " + format_double(report.witness_residual) + ",\n";
  p += "    \"orbit_norm\": " + format_double(report.norm_trajectory.back()) + ",\n";
  p += "    \"norm_trajectory\": ";
  append_real_list(p, report.norm_trajectory);
  p += ",\n";
  p += "    \"residual_trajectory\": ";
  append_real_list(p, report.residual_trajectory);
  p += ",\n";
  p += "    \"final\": ";
  append_tuple(p, report.final_tuple, "    ");
  p += "\n  }";
  return report_text(meta, p);
}

std::string path_report_to_text(const ReportMeta& meta, const RetractionPath& path) {
  std::string p = "{\n    \"samples\": [\n";
  for (std::size_t i = 0; i < path.samples.size(); ++i) {
    p += "      {\"t\": " + format_double(path.samples[i].first) + ", \"image\": ";
    append_tuple(p, path.samples[i].second, "      ");
    p += i + 1 < path.samples.size() ? "},\n" : "}\n";
  }
  p += "    ]\n  }";
  return report_text(meta, p);
}

std::string trace_report_to_text(const ReportMeta& meta, const TraceVector& traces) {
  std::string p = "{\n    \"traces\": [\n";
  for (std::size_t i = 0; i < traces.words.size(); ++i) {
    p += "      {\"word\": " + quote(traces.words[i].to_string()) + ", \"value\": ";
    append_entry(p, traces.values[i]);
    p += i + 1 < traces.words.size() ? "},\n" : "}\n";
  }
  p += "    ]\n  }";
  return report_text(meta, p);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed for " + path);
  return ss.str();
}

}  // namespace repflow
