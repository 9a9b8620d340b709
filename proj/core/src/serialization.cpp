#include "afflow/serialization.hpp"

#include <json.hpp>

#include <bit>
#include <cstring>
#include <fstream>

#include "afflow/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "binary body files assume a little-endian host");

namespace afflow {

namespace {

constexpr char kMagic[4] = {'A', 'F', 'S', 'F'};

void append_u32(std::vector<std::byte>& out, std::uint32_t v) {
  std::byte raw[sizeof v];
  std::memcpy(raw, &v, sizeof v);
  out.insert(out.end(), raw, raw + sizeof v);
}

std::uint32_t read_u32(std::span<const std::byte> bytes, std::size_t offset) {
  std::uint32_t v = 0;
  std::memcpy(&v, bytes.data() + offset, sizeof v);
  return v;
}

std::vector<std::byte> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SerializationError("cannot open " + path.string());
  std::vector<char> raw((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
  std::vector<std::byte> bytes(raw.size());
  std::memcpy(bytes.data(), raw.data(), raw.size());
  return bytes;
}

}  // namespace

std::vector<std::byte> support_to_bytes(const SupportFunction& s) {
  std::vector<std::byte> out;
  out.reserve(12 + s.size() * sizeof(double));
  out.insert(out.end(), reinterpret_cast<const std::byte*>(kMagic),
             reinterpret_cast<const std::byte*>(kMagic) + 4);
  append_u32(out, kSupportFormatVersion);
  append_u32(out, static_cast<std::uint32_t>(s.size()));
  const auto samples = s.samples();
  const auto* raw = reinterpret_cast<const std::byte*>(samples.data());
  out.insert(out.end(), raw, raw + samples.size() * sizeof(double));
  return out;
}

SupportFunction support_from_bytes(std::span<const std::byte> bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw SerializationError("missing AFSF magic");
  }
  const std::uint32_t version = read_u32(bytes, 4);
  if (version != kSupportFormatVersion) {
    throw SerializationError("unsupported format version " + std::to_string(version));
  }
  const std::uint32_t n = read_u32(bytes, 8);
  if (bytes.size() != 12 + static_cast<std::size_t>(n) * sizeof(double)) {
    throw SerializationError("sample payload size mismatch");
  }
  std::vector<double> samples(n);
  std::memcpy(samples.data(), bytes.data() + 12, n * sizeof(double));
  return SupportFunction(std::move(samples));
}

void save_support_binary(const SupportFunction& s, const std::filesystem::path& path) {
  const auto bytes = support_to_bytes(s);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SerializationError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

SupportFunction load_support_binary(const std::filesystem::path& path) {
  return support_from_bytes(read_file(path));
}

std::string support_to_json_text(const SupportFunction& s) {
  nlohmann::ordered_json j;
  j["format_version"] = kSupportFormatVersion;
  j["n"] = s.size();
  j["samples"] = s.samples();
  return j.dump();
}

SupportFunction support_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SerializationError(std::string("bad JSON body file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format_version") || !j.contains("n") ||
      !j.contains("samples")) {
    throw SerializationError("body JSON needs format_version, n and samples");
  }
  if (j["format_version"] != kSupportFormatVersion) {
    throw SerializationError("unsupported format version");
  }
  std::vector<double> samples;
  try {
    samples = j["samples"].get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw SerializationError(std::string("bad samples array: ") + e.what());
  }
  if (samples.size() != j["n"].get<std::size_t>()) {
    throw SerializationError("n does not match the samples array length");
  }
  return SupportFunction(std::move(samples));
}

void save_support_json(const SupportFunction& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw SerializationError("cannot write " + path.string());
  out << support_to_json_text(s) << '\n';
}

SupportFunction load_support_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SerializationError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return support_from_json_text(text);
}

SupportFunction load_support_auto(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  if (bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic, 4) == 0) {
    return support_from_bytes(bytes);
  }
  std::string text(bytes.size(), '\0');
  std::memcpy(text.data(), bytes.data(), bytes.size());
  return support_from_json_text(text);
}

}  // namespace afflow
