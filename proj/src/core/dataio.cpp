#include "dataio.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace greyfrac {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(trimmed(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trimmed(cur));
  return out;
}

bool parse_double(const std::string& cell, double* out) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  if (begin != end && *begin == '+') ++begin;
  const auto res = std::from_chars(begin, end, *out);
  return res.ec == std::errc() && res.ptr == end && begin != end;
}

[[noreturn]] void parse_fail(const std::filesystem::path& path, std::size_t line,
                             const std::string& what) {
  raise(errc::parse, path.string() + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<NamedSeries> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::io, "cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && trimmed(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) parse_fail(path, 1, "empty file");

  const auto header = split_cells(lines[0]);
  double probe = 0.0;
  if (header.size() == 1) {
    if (!parse_double(header[0], &probe)) {
      parse_fail(path, 1, "single-column input must be numeric (cell '" + header[0] + "')");
    }
    NamedSeries s;
    bool terminated = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto cells = split_cells(lines[i]);
      if (cells.size() != 1) parse_fail(path, i + 1, "expected a single column");
      if (cells[0].empty()) {
        terminated = true;
        continue;
      }
      if (terminated) parse_fail(path, i + 1, "value after the series was terminated");
      double v = 0.0;
      if (!parse_double(cells[0], &v)) {
        parse_fail(path, i + 1, "not a number: '" + cells[0] + "'");
      }
      s.values.push_back(v);
    }
    return {std::move(s)};
  }

  std::vector<NamedSeries> out(header.size() - 1);
  std::vector<bool> terminated(header.size() - 1, false);
  for (std::size_t j = 1; j < header.size(); ++j) {
    if (header[j].empty()) parse_fail(path, 1, "empty series name in header");
    out[j - 1].name = header[j];
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_cells(lines[i]);
    if (cells.size() != header.size()) {
      parse_fail(path, i + 1,
                 "expected " + std::to_string(header.size()) + " cells, got " +
                     std::to_string(cells.size()));
    }
    for (std::size_t j = 1; j < cells.size(); ++j) {
      if (cells[j].empty()) {
        terminated[j - 1] = true;
        continue;
      }
      if (terminated[j - 1]) {
        parse_fail(path, i + 1, "value in column '" + out[j - 1].name +
                                    "' after the series was terminated");
      }
      double v = 0.0;
      if (!parse_double(cells[j], &v)) {
        parse_fail(path, i + 1,
                   "not a number in column '" + out[j - 1].name + "': '" + cells[j] + "'");
      }
      out[j - 1].values.push_back(v);
      out[j - 1].labels.push_back(cells[0]);
    }
  }
  return out;
}

std::vector<NamedSeries> bundled_ng_dataset() {
  static const std::array<std::pair<const char*, std::array<double, 9>>, 11> data = {{
      {"UAE", {50.2, 48.8, 51.3, 52.3, 54.3, 54.6, 54.2, 60.2, 61.9}},
      {"Brazil", {14, 11.9, 14.6, 16.7, 19.3, 21.3, 22.7, 23.1, 23.5}},
      {"Bolivia", {14.3, 12.3, 14.2, 15.6, 17.8, 20.3, 21, 20.3, 19.7}},
      {"Denmark", {10, 8.4, 8.2, 6.6, 5.7, 4.8, 4.6, 4.6, 4.5}},
      {"Netherlands", {66.5, 62.7, 70.5, 64.1, 63.8, 68.6, 57.9, 43.3, 40.2}},
      {"Qatar", {77, 89.3, 131.2, 145.3, 157, 177.6, 174.1, 178.5, 181.2}},
      {"Nigeria", {36.2, 26, 37.3, 40.6, 43.3, 36.2, 45, 50.1, 44.9}},
      {"Turkmenistan", {66.1, 36.4, 42.4, 59.5, 62.3, 62.3, 67.1, 69.6, 66.8}},
      {"Brunei", {12.2, 11.4, 12.3, 12.8, 12.6, 12.2, 11.9, 11.6, 11.2}},
      {"Italy", {8.4, 7.3, 7.6, 7.7, 7.8, 7, 6.5, 6.2, 5.3}},
      {"India", {30.5, 37.6, 49.3, 44.5, 38.9, 32.1, 30.5, 29.3, 27.6}},
  }};
  std::vector<NamedSeries> out;
  out.reserve(data.size());
  for (const auto& [name, values] : data) {
    NamedSeries s;
    s.name = name;
    for (int year = 2008; year <= 2016; ++year) s.labels.push_back(std::to_string(year));
    s.values.assign(values.begin(), values.end());
    out.push_back(std::move(s));
  }
  return out;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string format_cell(const Cell& c) {
  if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
  if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
  return std::get<std::string>(c);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q.push_back(c);
  }
  q += "\"";
  return q;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(errc::io, "cannot write " + path.string());
  out << content;
  if (!out) raise(errc::io, "write failed for " + path.string());
}

void write_report_csv(const ReportDocument& doc, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) raise(errc::io, "cannot create directory " + dir.string());
  {
    std::string body = "key,value\n";
    for (const auto& [k, v] : doc.metadata) {
      body += csv_escape(k) + "," + csv_escape(v) + "\n";
    }
    write_text_file(dir / "metadata.csv", body);
  }
  for (const Table& t : doc.tables) {
    std::string body;
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      if (j) body += ",";
      body += csv_escape(t.columns[j]);
    }
    body += "\n";
    for (const auto& row : t.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) body += ",";
        body += csv_escape(format_cell(row[j]));
      }
      body += "\n";
    }
    write_text_file(dir / (t.name + ".csv"), body);
  }
}

void write_report_json(const ReportDocument& doc, const std::filesystem::path& path) {
  nlohmann::ordered_json root;
  auto& meta = root["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.metadata) meta[k] = v;
  auto& tables = root["tables"] = nlohmann::ordered_json::array();
  for (const Table& t : doc.tables) {
    nlohmann::ordered_json jt;
    jt["name"] = t.name;
    jt["columns"] = t.columns;
    auto& rows = jt["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json jr = nlohmann::ordered_json::array();
      for (const Cell& c : row) {
        if (std::holds_alternative<std::int64_t>(c)) {
          jr.push_back(std::get<std::int64_t>(c));
        } else if (std::holds_alternative<double>(c)) {
          jr.push_back(std::get<double>(c));
        } else {
          jr.push_back(std::get<std::string>(c));
        }
      }
      rows.push_back(std::move(jr));
    }
    tables.push_back(std::move(jt));
  }
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) raise(errc::io, "cannot create directory " + path.parent_path().string());
  }
  write_text_file(path, root.dump(2) + "\n");
}

}  // namespace

void write_report(const ReportDocument& doc, ReportFormat format,
                  const std::filesystem::path& path) {
  if (format == ReportFormat::csv) {
    write_report_csv(doc, path);
  } else {
    write_report_json(doc, path);
  }
}

}  // namespace greyfrac
