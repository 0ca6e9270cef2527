#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mailsift/pipeline.hpp"

namespace mailsift {

/// Layout, all integers little-endian:
///   magic "MSFT1" (5 bytes) | format_version u32 | payload_length u64 |
///   checksum u32 (CRC-32 of payload) | payload
inline constexpr char kArtifactMagic[5] = {'M', 'S', 'F', 'T', '1'};
inline constexpr std::uint32_t kArtifactFormatVersion = 1;

std::vector<std::uint8_t> encode_artifact(const Pipeline& pipeline);
/// Throws CorruptArtifact, UnsupportedVersion, ModelVectorizerMismatch.
Pipeline decode_artifact(const std::vector<std::uint8_t>& bytes);

/// Throws IoError on write failure.
void save_artifact(const Pipeline& pipeline, const std::filesystem::path& path);
/// Throws IoError, CorruptArtifact, UnsupportedVersion, ModelVectorizerMismatch.
Pipeline load_artifact(const std::filesystem::path& path);

namespace detail {
/// Serialized pipeline without the header. Does not validate dimensions.
std::vector<std::uint8_t> encode_payload(const Pipeline& pipeline);
std::vector<std::uint8_t> wrap_payload(const std::vector<std::uint8_t>& payload, std::uint32_t version);
}  // namespace detail

}  // namespace mailsift
