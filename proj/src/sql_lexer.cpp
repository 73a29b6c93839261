#include <cctype>
#include <string>

#include "s2c/error.hpp"
#include "s2c/sql.hpp"

namespace s2c {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_keyword(const std::string& lexeme) {
    std::string up;
    up.reserve(lexeme.size());
    for (char c : lexeme) up += std::toupper(static_cast<unsigned char>(c));
    return up == "SELECT" || up == "FROM" || up == "WHERE" || up == "AND" ||
           up == "OR" || up == "LIKE";
}

}  // namespace

std::vector<Token> tokenize(const std::string& sql) {
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1;
    int column = 1;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (sql[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };
    auto push = [&](TokenKind kind, std::size_t start, int start_line,
                    int start_col) {
        out.push_back({kind, sql.substr(start, i - start), start, start_line,
                       start_col});
    };

    while (i < sql.size()) {
        const char c = sql[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        const std::size_t start = i;
        const int start_line = line;
        const int start_col = column;

        if (is_ident_start(c)) {
            advance(1);
            while (i < sql.size() && is_ident_char(sql[i])) advance(1);
            // A dot directly followed by an identifier extends the token to
            // a qualified name; "rel.attr" stays one lexeme.
            if (i + 1 < sql.size() && sql[i] == '.' &&
                is_ident_start(sql[i + 1])) {
                advance(2);
                while (i < sql.size() && is_ident_char(sql[i])) advance(1);
            }
            push(is_keyword(sql.substr(start, i - start)) ? TokenKind::keyword
                                                          : TokenKind::identifier,
                 start, start_line, start_col);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            advance(1);
            while (i < sql.size() &&
                   std::isdigit(static_cast<unsigned char>(sql[i])))
                advance(1);
            if (i + 1 < sql.size() && sql[i] == '.' &&
                std::isdigit(static_cast<unsigned char>(sql[i + 1]))) {
                advance(2);
                while (i < sql.size() &&
                       std::isdigit(static_cast<unsigned char>(sql[i])))
                    advance(1);
            }
            push(TokenKind::number_lit, start, start_line, start_col);
            continue;
        }
        if (c == '\'') {
            advance(1);
            while (i < sql.size() && sql[i] != '\'') advance(1);
            if (i == sql.size())
                throw LexicalError("unterminated string literal", start_line,
                                   start_col);
            advance(1);  // closing quote
            push(TokenKind::string_lit, start, start_line, start_col);
            continue;
        }
        if (c == '<') {
            advance(1);
            if (i < sql.size() && (sql[i] == '=' || sql[i] == '>')) advance(1);
            push(TokenKind::op, start, start_line, start_col);
            continue;
        }
        if (c == '>') {
            advance(1);
            if (i < sql.size() && sql[i] == '=') advance(1);
            push(TokenKind::op, start, start_line, start_col);
            continue;
        }
        if (c == '=') {
            advance(1);
            push(TokenKind::op, start, start_line, start_col);
            continue;
        }
        if (c == ',' || c == '(' || c == ')' || c == ';') {
            advance(1);
            push(TokenKind::punct, start, start_line, start_col);
            continue;
        }
        throw LexicalError(std::string("illegal character '") + c + "'",
                           start_line, start_col);
    }
    return out;
}

}  // namespace s2c
