#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mikado {

inline constexpr std::string_view kCsvSchema = "mikado-lab/1";

struct SlopeFit {
    double slope;
    double intercept;
    double std_error;  // standard error of the slope; 0 for an exact fit
};

/// Ordinary least squares of log(value) against log(mu). Needs at least three
/// points, positive mu and positive values.
SlopeFit fit_slope(std::span<const double> mu, std::span<const double> values);

/// FNV-1a 64-bit hash of a config echo, printed as 16 hex digits.
std::uint64_t config_hash(std::string_view text);
std::string config_id(std::string_view config_echo);

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

/// CSV document with a fixed preamble:
///   # schema=mikado-lab/1
///   # command=<command>
///   # config=<one line per config entry>
///   # config_id=<hash>
/// followed by a header row and data rows. Every row starts with config_id.
class CsvReport {
public:
    CsvReport(std::string command, std::string config_echo);

    void set_columns(std::vector<std::string> names);
    void add_row(const std::vector<std::string>& cells);
    void add_comment(std::string_view text);

    const std::string& id() const { return id_; }
    std::size_t rows() const { return rows_; }
    std::string str() const;

    /// Writes through a temporary file and renames it into place.
    void save(const std::filesystem::path& path) const;

private:
    std::string id_;
    std::string preamble_;
    std::vector<std::string> columns_;
    std::string body_;
    std::size_t rows_ = 0;
};

}  // namespace mikado
