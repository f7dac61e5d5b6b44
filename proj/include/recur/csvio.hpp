#ifndef RECUR_CSVIO_HPP
#define RECUR_CSVIO_HPP

#include <string>
#include <vector>

namespace recur {

// CSV writer: '#'-prefixed metadata lines (the originating config among
// them), then a mandatory header row, then rows. Numbers are printed
// with 17 significant digits so they round-trip bit-exactly.
class CsvWriter {
  public:
    void meta(const std::string& line);              // one metadata line, no '#'
    void header(const std::vector<std::string>& cols);
    void row(const std::vector<std::string>& cells);

    std::string str() const;
    void write_file(const std::string& path) const;

    static std::string fmt(double v);
    static std::string fmt(long v);

  private:
    std::vector<std::string> meta_;
    std::vector<std::string> lines_;
    bool has_header_ = false;
};

}  // namespace recur

#endif
