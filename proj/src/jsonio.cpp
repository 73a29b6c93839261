#include "s2c/jsonio.hpp"

#include <fstream>
#include <sstream>

#include "s2c/error.hpp"

namespace s2c {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open file: " + path.string());
    }
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad()) {
        throw DataError("error while reading file: " + path.string());
    }
    return std::move(out).str();
}

json parse_json_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw FormatError(what + ": not valid JSON");
    }
    return j;
}

json parse_json_file(const std::filesystem::path& path) {
    return parse_json_text(read_text_file(path), path.string());
}

std::string dump_json(const json& j) {
    return j.dump(1) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw DataError("cannot open file for writing: " + path.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
        throw DataError("error while writing file: " + path.string());
    }
}

bool write_text_file_if_different(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
        std::ifstream in(path, std::ios::binary);
        if (in) {
            std::ostringstream existing;
            existing << in.rdbuf();
            if (in && existing.str() == content) {
                return false;
            }
        }
    }
    write_text_file(path, content);
    return true;
}

}  // namespace s2c
