#include "mikado/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mikado/error.hpp"
#include "mikado/field_io.hpp"

namespace mikado {

SlopeFit fit_slope(std::span<const double> mu, std::span<const double> values) {
    if (mu.size() != values.size()) throw InvalidArgument("fit_slope: mu and values differ in length");
    const std::size_t n = mu.size();
    if (n < 3) throw InvalidArgument("fit_slope: need at least 3 points, got " + std::to_string(n));
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mu[i] > 0.0) || !std::isfinite(mu[i])) throw InvalidArgument("fit_slope: mu values must be positive");
        if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
            throw InvalidArgument("fit_slope: values must be positive and finite, got " + format_number(values[i]));
        }
        x[i] = std::log(mu[i]);
        y[i] = std::log(values[i]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) throw InvalidArgument("fit_slope: mu values must not all coincide");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - intercept - slope * x[i];
        ssr += r * r;
    }
    return {slope, intercept, std::sqrt(ssr / static_cast<double>(n - 2) / sxx)};
}

std::uint64_t config_hash(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_id(std::string_view config_echo) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(config_hash(config_echo)));
    return buf;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

CsvReport::CsvReport(std::string command, std::string config_echo) : id_(config_id(config_echo)) {
    std::ostringstream out;
    out << "# schema=" << kCsvSchema << '\n' << "# command=" << command << '\n';
    std::istringstream lines(config_echo);
    for (std::string line; std::getline(lines, line);) {
        if (!line.empty()) out << "# config=" << line << '\n';
    }
    out << "# config_id=" << id_ << '\n';
    preamble_ = out.str();
}

void CsvReport::set_columns(std::vector<std::string> names) { columns_ = std::move(names); }

void CsvReport::add_row(const std::vector<std::string>& cells) {
    if (!columns_.empty() && cells.size() != columns_.size()) {
        throw InvalidArgument("csv row has " + std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(columns_.size()));
    }
    body_ += id_;
    for (const auto& c : cells) body_ += "," + c;
    body_ += '\n';
    ++rows_;
}

void CsvReport::add_comment(std::string_view text) {
    body_ += "# ";
    body_ += text;
    body_ += '\n';
}

std::string CsvReport::str() const {
    std::string out = preamble_ + "config_id";
    for (const auto& c : columns_) out += "," + c;
    out += '\n';
    return out + body_;
}

void CsvReport::save(const std::filesystem::path& path) const { write_file_atomic(path, str()); }

}  // namespace mikado
