#include <tproduct/io.hpp>

#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace tproduct::io {

namespace {

template <typename U>
void put_le(std::ostream& out, U value) {
    char bytes[sizeof(U)];
    for (std::size_t i = 0; i < sizeof(U); ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFFu);
    out.write(bytes, sizeof(U));
}

template <typename U>
U get_le(const unsigned char* bytes) {
    U value = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) value |= static_cast<U>(bytes[i]) << (8 * i);
    return value;
}

std::size_t checked_count(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3) {
    constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / 8;
    if (n1 > limit / n2 || n1 * n2 > limit / n3) throw ParseError("TNS3 header: extents overflow");
    return static_cast<std::size_t>(n1 * n2 * n3);
}

}  // namespace

Tensor3 read_tensor(std::istream& in) {
    unsigned char header[kHeaderBytes];
    in.read(reinterpret_cast<char*>(header), kHeaderBytes);
    if (in.gcount() != static_cast<std::streamsize>(kHeaderBytes)) throw ParseError("TNS3: truncated header");

    if (!std::equal(kMagic.begin(), kMagic.end(), header))
        throw ParseError("TNS3: bad magic '" + std::string(reinterpret_cast<char*>(header), 4) + "'");
    const auto version = get_le<std::uint32_t>(header + 4);
    if (version != kVersion) throw ParseError("TNS3: unsupported version " + std::to_string(version));

    const auto n1 = get_le<std::uint64_t>(header + 8);
    const auto n2 = get_le<std::uint64_t>(header + 16);
    const auto n3 = get_le<std::uint64_t>(header + 24);
    if (n1 == 0 || n2 == 0 || n3 == 0) throw ParseError("TNS3: extents must be positive");
    const std::size_t count = checked_count(n1, n2, n3);

    std::vector<double> data;
    data.reserve(count);
    unsigned char word[8];
    for (std::size_t e = 0; e < count; ++e) {
        in.read(reinterpret_cast<char*>(word), 8);
        if (in.gcount() != 8)
            throw ParseError("TNS3: truncated payload, header declares " + std::to_string(count) +
                             " values but only " + std::to_string(e) + " are present");
        const double x = std::bit_cast<double>(get_le<std::uint64_t>(word));
        if (!std::isfinite(x)) throw ParseError("TNS3: non-finite value at position " + std::to_string(e));
        data.push_back(x);
    }
    if (in.peek() != std::char_traits<char>::eof()) throw ParseError("TNS3: trailing bytes after payload");

    return Tensor3(Shape{static_cast<std::size_t>(n1), static_cast<std::size_t>(n2), static_cast<std::size_t>(n3)},
                   std::move(data));
}

Tensor3 read_tensor(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return read_tensor(in);
}

void write_tensor(std::ostream& out, const Tensor3& a) {
    out.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(out, kVersion);
    put_le<std::uint64_t>(out, a.n1());
    put_le<std::uint64_t>(out, a.n2());
    put_le<std::uint64_t>(out, a.n3());
    for (double x : a.data()) put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(x));
}

void write_tensor(const std::filesystem::path& path, const Tensor3& a) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_tensor(out, a);
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace tproduct::io
