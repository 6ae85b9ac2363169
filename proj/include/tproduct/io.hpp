#pragma once

#include <tproduct/tensor3.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>

namespace tproduct::io {

// TNS3 layout, all integers little-endian:
//   bytes 0..3    magic "TNS3"
//   bytes 4..7    version (uint32) = 1
//   bytes 8..31   n1, n2, n3 (uint64 each)
//   bytes 32..    n1*n2*n3 IEEE-754 doubles in Tensor3 storage order

inline constexpr std::array<char, 4> kMagic{'T', 'N', 'S', '3'};
inline constexpr std::uint32_t kVersion = 1;
inline constexpr std::size_t kHeaderBytes = 32;

struct TensorFileHeader {
    std::array<char, 4> magic = kMagic;
    std::uint32_t version = kVersion;
    std::uint64_t n1 = 0;
    std::uint64_t n2 = 0;
    std::uint64_t n3 = 0;
};

/// Parses a TNS3 stream. Throws ParseError on a bad header, zero extents,
/// truncated payload, trailing bytes or non-finite values.
Tensor3 read_tensor(std::istream& in);
Tensor3 read_tensor(const std::filesystem::path& path);

void write_tensor(std::ostream& out, const Tensor3& a);
/// Throws IoError when the file cannot be written.
void write_tensor(const std::filesystem::path& path, const Tensor3& a);

}  // namespace tproduct::io
