#include "recur/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace recur {

void CsvWriter::meta(const std::string& line) { meta_.push_back("# " + line); }

void CsvWriter::header(const std::vector<std::string>& cols) {
    if (has_header_) throw std::logic_error("CsvWriter: header already written");
    std::string line;
    for (size_t i = 0; i < cols.size(); ++i) {
        if (i) line += ',';
        line += cols[i];
    }
    lines_.push_back(line);
    has_header_ = true;
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (!has_header_) throw std::logic_error("CsvWriter: header row is mandatory before data");
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    lines_.push_back(line);
}

std::string CsvWriter::str() const {
    std::string out;
    for (const auto& m : meta_) out += m + "\n";
    for (const auto& l : lines_) out += l + "\n";
    return out;
}

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("CsvWriter: cannot open " + path);
    f << str();
}

std::string CsvWriter::fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string CsvWriter::fmt(long v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%ld", v);
    return buf;
}

}  // namespace recur
