#include "bsc_exponents/report.hpp"

#include <cstdio>

namespace bsc {

std::string format_double17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream& os, const std::vector<TableColumn>& columns) {
    if (columns.empty()) return;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) os << ',';
        os << csv_escape(columns[c].name);
    }
    os << '\n';
    const std::size_t rows = columns.front().cells.size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) os << ',';
            os << csv_escape(columns[c].cells[r]);
        }
        os << '\n';
    }
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void write_json(std::ostream& os, const std::vector<TableColumn>& columns,
                const std::vector<MetaEntry>& metadata) {
    os << "{\n  \"metadata\": {";
    for (std::size_t i = 0; i < metadata.size(); ++i) {
        if (i) os << ',';
        os << "\n    \"" << json_escape(metadata[i].key) << "\": ";
        if (metadata[i].kind == MetaKind::kString) {
            os << '"' << json_escape(metadata[i].value) << '"';
        } else {
            os << metadata[i].value;  // number or raw fragment, preformatted
        }
    }
    os << (metadata.empty() ? "" : "\n  ") << "},\n  \"columns\": {";
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) os << ',';
        os << "\n    \"" << json_escape(columns[c].name) << "\": [";
        for (std::size_t r = 0; r < columns[c].cells.size(); ++r) {
            if (r) os << ", ";
            if (columns[c].is_number) {
                os << columns[c].cells[r];
            } else {
                os << '"' << json_escape(columns[c].cells[r]) << '"';
            }
        }
        os << ']';
    }
    os << (columns.empty() ? "" : "\n  ") << "}\n}\n";
}

}  // namespace bsc
