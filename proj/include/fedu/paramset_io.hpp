#pragma once

// ParamSet binary format:
//   "FESP" | version u32 | tensor count u32 |
//   per tensor: name length u32, UTF-8 name, rank u32, dims u32[rank],
//               data as little-endian IEEE-754 doubles.
// Blobs written to a retention store append a CRC32 (little-endian u32) of
// everything before it.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "fedu/tensor.hpp"

namespace fedu {

inline constexpr std::uint32_t kParamSetVersion = 1;

std::vector<std::uint8_t> encode_paramset(const ParamSet& params);
// Throws FormatError on truncated or malformed input.
ParamSet decode_paramset(std::span<const std::uint8_t> bytes);

std::uint32_t crc32_of(std::span<const std::uint8_t> bytes);

// encode_paramset + trailing CRC32.
std::vector<std::uint8_t> encode_blob(const ParamSet& params);
// Throws IntegrityError if the checksum does not match.
ParamSet decode_blob(std::span<const std::uint8_t> bytes);

void write_paramset(const std::filesystem::path& path, const ParamSet& params);
ParamSet read_paramset(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
// Writes to `path.tmp` then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace fedu
