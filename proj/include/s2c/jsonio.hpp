#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

namespace s2c {

// All persisted JSON goes through ordered_json so that key order — and with
// it the serialized byte stream — is deterministic.
using json = nlohmann::ordered_json;

std::string read_text_file(const std::filesystem::path& path);

// Parses text as JSON; `what` names the source in error messages.
json parse_json_text(const std::string& text, const std::string& what);
json parse_json_file(const std::filesystem::path& path);

// Canonical serialization used for every artifact file: 1-space indent plus a
// trailing newline.
std::string dump_json(const json& j);

void write_text_file(const std::filesystem::path& path, const std::string& content);

// Writes only when the target is missing or its bytes differ; returns whether
// a write happened. Keeps stage reruns from touching up-to-date artifacts.
bool write_text_file_if_different(const std::filesystem::path& path, const std::string& content);

}  // namespace s2c
