#include "currier/jsonl.hpp"

#include <istream>

namespace currier {
namespace jsonl {

std::optional<Json> next_object(std::istream& in, std::size_t& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Json obj = Json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            throw Error(ErrorCode::Parse,
                        "line " + std::to_string(line_no) + " is not a JSON object");
        }
        return obj;
    }
    return std::nullopt;
}

namespace {
const Json& require(const Json& obj, const char* key, std::size_t line_no) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                          " missing field \"" + key + "\"");
    }
    return *it;
}
} // namespace

std::string get_string(const Json& obj, const char* key, std::size_t line_no) {
    const Json& v = require(obj, key, line_no);
    if (!v.is_string()) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + " field \"" +
                                          key + "\" must be a string");
    }
    return v.get<std::string>();
}

double get_number(const Json& obj, const char* key, std::size_t line_no) {
    const Json& v = require(obj, key, line_no);
    if (!v.is_number()) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + " field \"" +
                                          key + "\" must be a number");
    }
    return v.get<double>();
}

std::int64_t get_int(const Json& obj, const char* key, std::size_t line_no) {
    const Json& v = require(obj, key, line_no);
    if (!v.is_number_integer()) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + " field \"" +
                                          key + "\" must be an integer");
    }
    return v.get<std::int64_t>();
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path + " for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
    return out;
}

} // namespace jsonl
} // namespace currier
