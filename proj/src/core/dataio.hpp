#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <variant>

#include "fracops.hpp"

namespace greyfrac {

struct NamedSeries {
  std::string name;
  std::vector<std::string> labels;  // optional; matches values in length when present
  Series values;
};

// Accepts either a headerless single numeric column (one unnamed series) or a
// header row naming a label column plus one column per series. A blank cell
// terminates its series; cells after the termination must stay blank.
std::vector<NamedSeries> read_csv(const std::filesystem::path& path);

// Annual natural gas production of 11 countries, 2008-2016, embedded verbatim.
std::vector<NamedSeries> bundled_ng_dataset();

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct ReportDocument {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<Table> tables;
};

enum class ReportFormat { csv, json };

// csv writes one file per table (plus metadata.csv) into the directory at
// path; json writes a single document. Numbers use shortest round-trip form.
void write_report(const ReportDocument& doc, ReportFormat format,
                  const std::filesystem::path& path);

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

std::string format_cell(const Cell& c);

}  // namespace greyfrac
