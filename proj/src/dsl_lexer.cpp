#include <cctype>

#include "termrw/dsl.hpp"
#include "termrw/error.hpp"

namespace termrw::dsl {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return is_alpha(c) || is_digit(c); }

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) break;
            out.push_back(next());
        }
        out.push_back({TokenKind::end, "", line_, col_});
        return out;
    }

private:
    char peek(std::size_t k = 0) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = peek();
            if (c == '#') {
                while (pos_ < text_.size() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                advance();
            } else {
                break;
            }
        }
    }

    Token next() {
        const std::size_t line = line_, col = col_, start = pos_;
        const char c = peek();
        if (is_alpha(c)) {
            while (is_alnum(peek())) advance();
            if (peek() == '_') advance();
            if (is_alnum(peek()) || peek() == '_') {
                throw ParseError("a trailing '_' must end an identifier", line_, col_);
            }
            std::string word(text_.substr(start, pos_ - start));
            if (word == "expect" && text_.substr(pos_, 6) == "-exact" && !is_alnum(peek(6)) && peek(6) != '_') {
                for (int i = 0; i < 6; ++i) advance();
                word = "expect-exact";
            }
            return {TokenKind::identifier, word, line, col};
        }
        if (is_digit(c)) {
            while (is_digit(peek())) advance();
            if (is_alpha(peek()) || peek() == '_') throw ParseError("malformed number", line_, col_);
            return {TokenKind::number, std::string(text_.substr(start, pos_ - start)), line, col};
        }
        if (c == '_') {
            advance();
            if (is_alnum(peek()) || peek() == '_') throw ParseError("identifiers must start with a letter", line, col);
            return {TokenKind::hole, "_", line, col};
        }
        if (c == '"') {
            advance();
            std::string s;
            while (peek() != '"') {
                if (pos_ >= text_.size() || peek() == '\n') throw ParseError("unterminated string", line, col);
                s += peek();
                advance();
            }
            advance();
            return {TokenKind::string, s, line, col};
        }
        if (c == ':' && peek(1) == '=') {
            advance();
            advance();
            return {TokenKind::punct, ":=", line, col};
        }
        static constexpr std::string_view singles = "()[],;+-*/^";
        if (singles.find(c) != std::string_view::npos) {
            advance();
            return {TokenKind::punct, std::string(1, c), line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace termrw::dsl
