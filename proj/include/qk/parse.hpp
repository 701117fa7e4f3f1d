#pragma once

#include <string_view>
#include <vector>

#include "qk/polynomial.hpp"

namespace qk {

// Token/parser machinery shared by the polynomial syntax and the .ring file
// grammar. Polynomial syntax: + - * ^, integer literals, variable
// identifiers, parentheses; ^ binds tighter than * binds tighter than +/-;
// whitespace-insensitive; '#' starts a comment running to end of line.

struct Token {
    enum class Kind {
        integer, ident, plus, minus, star, caret, comma, colon,
        lparen, rparen, lbracket, rbracket, newline, eof,
    };
    Kind kind;
    std::string text;
    int line = 1;
    int col = 1;
};

class TokenStream {
public:
    // newline_is_space: CLI strings treat newlines as blanks; the .ring
    // grammar is line-oriented and keeps them as tokens.
    TokenStream(std::string_view src, std::string source_name, bool newline_is_space);

    const Token& peek() const { return tokens_[idx_]; }
    const Token& get() { return tokens_[idx_ == tokens_.size() - 1 ? idx_ : idx_++]; }
    bool at(Token::Kind k) const { return peek().kind == k; }
    bool accept(Token::Kind k) {
        if (!at(k)) return false;
        get();
        return true;
    }
    Token expect(Token::Kind k, const std::string& what);

    // ParseError annotated with source name, line text, and a caret.
    [[noreturn]] void fail(const Token& where, const std::string& message,
                           ParseError::Kind kind = ParseError::Kind::syntactic) const;

private:
    std::vector<Token> tokens_;
    std::vector<std::string> lines_;
    std::string source_name_;
    size_t idx_ = 0;
};

// Expression parser; consumes tokens up to the first token that cannot
// continue a polynomial.
Polynomial parse_poly_expr(TokenStream& ts, const PolyRing& ring, const MonomialOrder& ord);

Polynomial parse_polynomial(std::string_view text, const PolyRing& ring, const MonomialOrder& ord,
                            std::string source_name = "<string>");
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRing& ring,
                                              const MonomialOrder& ord,
                                              std::string source_name = "<string>");

} // namespace qk
