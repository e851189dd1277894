#pragma once

#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "currier/error.hpp"

namespace currier {

// Field order in emitted objects follows the documented file layouts, so
// all writers use ordered_json.
using Json = nlohmann::ordered_json;

namespace jsonl {

// Next non-empty line parsed as a JSON object; nullopt at end of stream.
// Throws Parse on malformed JSON or non-object lines. line_no is advanced
// for error reporting.
std::optional<Json> next_object(std::istream& in, std::size_t& line_no);

// Required-field accessors with Parse errors naming the line and field.
std::string get_string(const Json& obj, const char* key, std::size_t line_no);
double get_number(const Json& obj, const char* key, std::size_t line_no);
std::int64_t get_int(const Json& obj, const char* key, std::size_t line_no);

std::ifstream open_input(const std::string& path);
std::ofstream open_output(const std::string& path);

} // namespace jsonl
} // namespace currier
