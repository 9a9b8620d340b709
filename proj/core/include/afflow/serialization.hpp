#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "afflow/support_function.hpp"

namespace afflow {

inline constexpr std::uint32_t kSupportFormatVersion = 1;

/// Binary layout: "AFSF" magic, u32 format version, u32 grid size, then
/// the raw little-endian f64 samples. Round-trips bit-exactly.
std::vector<std::byte> support_to_bytes(const SupportFunction& s);
SupportFunction support_from_bytes(std::span<const std::byte> bytes);

void save_support_binary(const SupportFunction& s, const std::filesystem::path& path);
SupportFunction load_support_binary(const std::filesystem::path& path);

/// JSON form: {"format_version":1,"n":<N>,"samples":[...]} with
/// shortest-round-trip number formatting.
std::string support_to_json_text(const SupportFunction& s);
SupportFunction support_from_json_text(const std::string& text);

void save_support_json(const SupportFunction& s, const std::filesystem::path& path);
SupportFunction load_support_json(const std::filesystem::path& path);

/// Dispatches on the binary magic, falling back to JSON.
SupportFunction load_support_auto(const std::filesystem::path& path);

}  // namespace afflow
