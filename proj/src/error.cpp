#include "s2c/error.hpp"

namespace s2c {

namespace {
std::string at(const std::string& msg, int line, int column) {
    return msg + " at line " + std::to_string(line) + ", column " + std::to_string(column);
}
}  // namespace

LexicalError::LexicalError(const std::string& msg, int line_, int column_)
    : Error(at(msg, line_, column_)), line(line_), column(column_) {}

SyntaxError::SyntaxError(const std::string& msg, int line_, int column_)
    : Error(at(msg, line_, column_)), line(line_), column(column_) {}

UnsupportedFeatureError::UnsupportedFeatureError(std::string feature_, int line_, int column_)
    : Error(at("unsupported feature: " + feature_, line_, column_)),
      feature(std::move(feature_)),
      line(line_),
      column(column_) {}

}  // namespace s2c
