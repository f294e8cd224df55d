#pragma once

#include <ostream>
#include <string>
#include <vector>

// Deterministic serialization.  Numbers are always rendered with
// format_double17 (17 significant digits, C locale) and the *same* rendered
// string is embedded in CSV and JSON, so the two formats carry identical
// digits byte for byte.

namespace bsc {

/// "%.17g" with a C-locale decimal point.
std::string format_double17(double x);

struct TableColumn {
    std::string name;
    bool is_number = true;
    std::vector<std::string> cells;  // preformatted
};

enum class MetaKind { kNumber, kString, kRaw };

struct MetaEntry {
    std::string key;
    std::string value;  // preformatted; kRaw is embedded verbatim in JSON
    MetaKind kind = MetaKind::kString;
};

/// RFC-4180 field quoting (quotes only when the cell needs it; our numeric
/// cells never do).
std::string csv_escape(const std::string& cell);

/// Header line plus one line per row, '\n' line endings, no trailing junk.
void write_csv(std::ostream& os, const std::vector<TableColumn>& columns);

/// One object: {"metadata": {...}, "columns": {name: [...], ...}}.
void write_json(std::ostream& os, const std::vector<TableColumn>& columns,
                const std::vector<MetaEntry>& metadata);

std::string json_escape(const std::string& s);

}  // namespace bsc
