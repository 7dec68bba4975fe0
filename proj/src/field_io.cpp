#include "mikado/field_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "mikado/error.hpp"

namespace mikado {

namespace {

void put_u64(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
}

std::uint64_t get_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

/// Reads exactly `count` bytes or reports the offset where the stream ran dry.
void read_exact(std::istream& in, unsigned char* dst, std::size_t count, std::uint64_t offset, const char* what) {
    in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(count));
    const auto got = static_cast<std::uint64_t>(in.gcount());
    if (got != count) throw FormatError(std::string("truncated ") + what, offset + got);
}

}  // namespace

void write_container(std::ostream& out, const FieldBundle& b) {
    for (const auto& c : b.components) require_same_grid(b.spec, c.spec(), "write_container");
    std::string header(kContainerMagic, 4);
    put_u64(header, static_cast<std::uint64_t>(b.spec.dim));
    put_u64(header, b.spec.n);
    put_u64(header, b.spec.nt);
    put_u64(header, std::bit_cast<std::uint64_t>(b.spec.t_end));
    put_u64(header, b.components.size());
    out.write(header.data(), static_cast<std::streamsize>(header.size()));

    std::string chunk;
    for (const auto& c : b.components) {
        chunk.clear();
        chunk.reserve(c.values().size() * 8);
        for (double v : c.values()) put_u64(chunk, std::bit_cast<std::uint64_t>(v));
        out.write(chunk.data(), static_cast<std::streamsize>(chunk.size()));
    }
    if (!out) throw Error("write_container: stream write failed");
}

FieldBundle read_container(std::istream& in) {
    unsigned char header[kContainerHeaderBytes];
    read_exact(in, header, 4, 0, "magic");
    if (std::memcmp(header, kContainerMagic, 4) != 0) throw FormatError("bad magic, expected \"MKF1\"", 0);
    read_exact(in, header + 4, kContainerHeaderBytes - 4, 4, "header");

    const std::uint64_t d = get_u64(header + 4);
    const std::uint64_t n = get_u64(header + 12);
    const std::uint64_t nt = get_u64(header + 20);
    const double t_end = std::bit_cast<double>(get_u64(header + 28));
    const std::uint64_t ncomp = get_u64(header + 36);

    if (d < 1 || d > static_cast<std::uint64_t>(kMaxDim)) throw FormatError("unsupported dimension " + std::to_string(d), 4);
    if (n < 2 || n > (1u << 20)) throw FormatError("implausible N " + std::to_string(n), 12);
    if (nt < 1 || nt > (1u << 20)) throw FormatError("implausible Nt " + std::to_string(nt), 20);
    if (!std::isfinite(t_end) || t_end < 0.0) throw FormatError("invalid time horizon", 28);
    if (ncomp > 64) throw FormatError("implausible component count " + std::to_string(ncomp), 36);

    GridSpec spec{static_cast<int>(d), static_cast<std::size_t>(n), static_cast<std::size_t>(nt), t_end};
    try {
        spec.validate();
    } catch (const InvalidArgument& e) {
        throw FormatError(e.what(), 4);
    }

    FieldBundle out{spec, {}};
    const std::size_t count = spec.samples();
    std::vector<unsigned char> raw(count * 8);
    std::uint64_t offset = kContainerHeaderBytes;
    for (std::uint64_t c = 0; c < ncomp; ++c) {
        read_exact(in, raw.data(), raw.size(), offset, "sample data");
        std::vector<double> values(count);
        for (std::size_t i = 0; i < count; ++i) {
            values[i] = std::bit_cast<double>(get_u64(raw.data() + 8 * i));
            if (!std::isfinite(values[i])) throw FormatError("non-finite sample", offset + 8 * i);
        }
        out.components.emplace_back(spec, std::move(values));
        offset += raw.size();
    }
    if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes after sample data", offset);
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw Error("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, path);
}

void save_container(const std::filesystem::path& path, const FieldBundle& b) {
    std::ostringstream buf(std::ios::binary);
    write_container(buf, b);
    write_file_atomic(path, buf.str());
}

FieldBundle load_container(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return read_container(in);
}

FieldBundle bundle(const ScalarField& f) {
    return FieldBundle{f.spec(), {f}};
}

FieldBundle bundle(const VectorField& v) {
    return FieldBundle{v.spec(), v.components()};
}

FieldBundle bundle_state(const ScalarField& rho, const VectorField& u) {
    require_same_grid(rho.spec(), u.spec(), "bundle_state");
    FieldBundle b{rho.spec(), {rho}};
    for (const auto& c : u.components()) b.components.push_back(c);
    return b;
}

ScalarField scalar_from(const FieldBundle& b) {
    if (b.components.size() != 1) throw InvalidArgument("container holds " + std::to_string(b.components.size()) +
                                                        " components, expected 1");
    return b.components.front();
}

VectorField vector_from(const FieldBundle& b) {
    if (static_cast<int>(b.components.size()) != b.spec.dim) {
        throw InvalidArgument("container holds " + std::to_string(b.components.size()) + " components, expected " +
                              std::to_string(b.spec.dim));
    }
    return VectorField(b.components);
}

StateFields state_from(const FieldBundle& b) {
    if (static_cast<int>(b.components.size()) != b.spec.dim + 1) {
        throw InvalidArgument("state container holds " + std::to_string(b.components.size()) +
                              " components, expected d + 1 = " + std::to_string(b.spec.dim + 1));
    }
    std::vector<ScalarField> u(b.components.begin() + 1, b.components.end());
    return StateFields{b.components.front(), VectorField(std::move(u))};
}

}  // namespace mikado
