#include "geobench/harness/raw_csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace geobench {

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// RFC 4180 fields of one record; nullopt at end of input.
std::optional<std::vector<std::string>> next_record(std::istream& in, std::size_t& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false, any = false;
  char c;
  ++line;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      return fields;
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  if (quoted) throw RawFormatError("line " + std::to_string(line) + ": unterminated quoted field");
  if (!any) return std::nullopt;
  fields.push_back(std::move(field));
  return fields;
}

template <typename T>
T parse_number(const std::string& s, std::size_t line, const char* what) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw RawFormatError("line " + std::to_string(line) + ": bad " + what + " '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_raw_row(const RawSample& s) {
  char millis[64];
  std::snprintf(millis, sizeof millis, "%.3f", s.millis);
  std::string out;
  for (const auto* f : {&s.workload, &s.query_id, &s.store, &s.cache_state}) out += quote(*f) + ",";
  out += std::to_string(s.run_idx) + "," + millis + "," + quote(s.status) + ",";
  if (s.cardinality) out += std::to_string(*s.cardinality);
  out += "," + quote(s.digest);
  return out;
}

RawWriter::RawWriter(const std::filesystem::path& path) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  out_.open(path, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open " + path.string() + " for appending");
  if (fresh) out_ << kRawHeader << '\n' << std::flush;
}

void RawWriter::append(const RawSample& s) {
  out_ << format_raw_row(s) << '\n' << std::flush;
  if (!out_) throw std::runtime_error("write to raw results failed");
}

RawSink RawWriter::sink() {
  return [this](const RawSample& s) { append(s); };
}

std::vector<RawSample> read_raw(std::istream& in) {
  std::size_t line = 0;
  const auto header = next_record(in, line);
  if (!header) return {};
  std::string joined;
  for (std::size_t i = 0; i < header->size(); ++i) joined += (i ? "," : "") + (*header)[i];
  if (joined != kRawHeader) throw RawFormatError("line 1: unexpected header '" + joined + "'");
  std::vector<RawSample> out;
  while (auto rec = next_record(in, line)) {
    if (rec->size() == 1 && rec->front().empty()) continue;
    if (rec->size() != 9) {
      throw RawFormatError("line " + std::to_string(line) + ": expected 9 fields, got " +
                           std::to_string(rec->size()));
    }
    auto& f = *rec;
    RawSample s;
    s.workload = f[0];
    s.query_id = f[1];
    s.store = f[2];
    s.cache_state = f[3];
    s.run_idx = parse_number<int>(f[4], line, "run_idx");
    s.millis = parse_number<double>(f[5], line, "millis");
    if (!std::isfinite(s.millis) || s.millis < 0) throw RawFormatError("line " + std::to_string(line) + ": bad millis");
    s.status = f[6];
    if (s.status != "ok" && s.status != "timeout" && s.status != "error" && s.status != "skipped") {
      throw RawFormatError("line " + std::to_string(line) + ": unknown status '" + s.status + "'");
    }
    if (!f[7].empty()) s.cardinality = parse_number<std::uint64_t>(f[7], line, "cardinality");
    s.digest = f[8];
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<RawSample> read_raw_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RawFormatError("cannot read " + path.string());
  return read_raw(in);
}

}  // namespace geobench
