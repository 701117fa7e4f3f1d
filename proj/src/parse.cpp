#include "qk/parse.hpp"

#include <cctype>

namespace qk {

ParseError::ParseError(std::string message, int line, int column, std::string snippet)
    : Error(std::move(message)), line_(line), column_(column), snippet_(std::move(snippet)) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace

TokenStream::TokenStream(std::string_view src, std::string source_name, bool newline_is_space)
    : source_name_(std::move(source_name)) {
    // keep the raw lines for caret snippets
    size_t start = 0;
    while (start <= src.size()) {
        size_t nl = src.find('\n', start);
        if (nl == std::string_view::npos) {
            lines_.emplace_back(src.substr(start));
            break;
        }
        lines_.emplace_back(src.substr(start, nl - start));
        start = nl + 1;
    }

    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Token::Kind k, std::string text, int l, int c) {
        tokens_.push_back({k, std::move(text), l, c});
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') { // comment to end of line
            while (i < src.size() && src[i] != '\n') ++i, ++col;
            continue;
        }
        if (c == '\n') {
            if (!newline_is_space) push(Token::Kind::newline, "\n", line, col);
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++col;
            continue;
        }
        int tl = line, tc = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                num += src[i];
                ++i;
                ++col;
            }
            push(Token::Kind::integer, std::move(num), tl, tc);
            continue;
        }
        if (ident_start(c)) {
            std::string id;
            while (i < src.size() && ident_char(src[i])) {
                id += src[i];
                ++i;
                ++col;
            }
            push(Token::Kind::ident, std::move(id), tl, tc);
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::plus; break;
            case '-': k = Token::Kind::minus; break;
            case '*': k = Token::Kind::star; break;
            case '^': k = Token::Kind::caret; break;
            case ',': k = Token::Kind::comma; break;
            case ':': k = Token::Kind::colon; break;
            case '(': k = Token::Kind::lparen; break;
            case ')': k = Token::Kind::rparen; break;
            case '[': k = Token::Kind::lbracket; break;
            case ']': k = Token::Kind::rbracket; break;
            default: {
                tokens_.push_back({Token::Kind::eof, "", tl, tc});
                fail(tokens_.back(), std::string("unexpected character '") + c + "'",
                     ParseError::Kind::lexical);
            }
        }
        push(k, std::string(1, c), tl, tc);
        ++i;
        ++col;
    }
    push(Token::Kind::eof, "", line, col);
}

Token TokenStream::expect(Token::Kind k, const std::string& what) {
    if (!at(k)) fail(peek(), "expected " + what);
    return get();
}

void TokenStream::fail(const Token& where, const std::string& message,
                       ParseError::Kind kind) const {
    std::string text = source_name_ + ":" + std::to_string(where.line) + ":" +
                       std::to_string(where.col) + ": " + message;
    std::string snippet;
    if (where.line >= 1 && static_cast<size_t>(where.line) <= lines_.size()) {
        snippet = lines_[static_cast<size_t>(where.line - 1)];
        text += "\n  " + snippet + "\n  " + std::string(static_cast<size_t>(where.col - 1), ' ') +
                "^";
    }
    ParseError e(text, where.line, where.col, snippet);
    e.kind = kind;
    throw e;
}

namespace {

Polynomial poly_pow(const Polynomial& base, uint32_t e, const PolyRing& ring,
                    const MonomialOrder& ord) {
    Polynomial acc = Polynomial::constant(ring, ring.element(1));
    Polynomial sq = base;
    while (e > 0) {
        if (e & 1u) acc = poly_mul(acc, sq, ord);
        e >>= 1u;
        if (e) sq = poly_mul(sq, sq, ord);
    }
    return acc;
}

Polynomial parse_atom(TokenStream& ts, const PolyRing& ring, const MonomialOrder& ord) {
    const Token& t = ts.peek();
    switch (t.kind) {
        case Token::Kind::integer: {
            Token tok = ts.get();
            if (tok.text.size() > 18) ts.fail(tok, "integer literal too large");
            return Polynomial::constant(ring, ring.element(std::stoll(tok.text)));
        }
        case Token::Kind::ident: {
            Token tok = ts.get();
            int idx = ring.var_index(tok.text);
            if (idx < 0)
                ts.fail(tok, "unknown variable '" + tok.text + "'", ParseError::Kind::semantic);
            return Polynomial::from_monomial(ring, Monomial::var(ring.nvars(), idx));
        }
        case Token::Kind::lparen: {
            ts.get();
            Polynomial inner = parse_poly_expr(ts, ring, ord);
            ts.expect(Token::Kind::rparen, "')'");
            return inner;
        }
        default:
            ts.fail(t, "expected a variable, integer, or '('");
    }
}

Polynomial parse_power(TokenStream& ts, const PolyRing& ring, const MonomialOrder& ord) {
    Polynomial base = parse_atom(ts, ring, ord);
    if (ts.accept(Token::Kind::caret)) {
        Token e = ts.expect(Token::Kind::integer, "an integer exponent");
        if (e.text.size() > 9) ts.fail(e, "exponent too large", ParseError::Kind::semantic);
        long v = std::stol(e.text);
        if (v > kMaxExponent)
            ts.fail(e, "exponent exceeds cap " + std::to_string(kMaxExponent),
                    ParseError::Kind::semantic);
        return poly_pow(base, static_cast<uint32_t>(v), ring, ord);
    }
    return base;
}

Polynomial parse_product(TokenStream& ts, const PolyRing& ring, const MonomialOrder& ord) {
    Polynomial f = parse_power(ts, ring, ord);
    while (ts.accept(Token::Kind::star)) f = poly_mul(f, parse_power(ts, ring, ord), ord);
    return f;
}

} // namespace

Polynomial parse_poly_expr(TokenStream& ts, const PolyRing& ring, const MonomialOrder& ord) {
    bool negate = false;
    if (ts.at(Token::Kind::minus)) {
        ts.get();
        negate = true;
    } else {
        ts.accept(Token::Kind::plus);
    }
    Polynomial f = parse_product(ts, ring, ord);
    if (negate) f = poly_neg(f);
    for (;;) {
        if (ts.accept(Token::Kind::plus)) {
            f = poly_add(f, parse_product(ts, ring, ord), ord);
        } else if (ts.accept(Token::Kind::minus)) {
            f = poly_sub(f, parse_product(ts, ring, ord), ord);
        } else {
            return f;
        }
    }
}

Polynomial parse_polynomial(std::string_view text, const PolyRing& ring, const MonomialOrder& ord,
                            std::string source_name) {
    TokenStream ts(text, std::move(source_name), /*newline_is_space=*/true);
    Polynomial f = parse_poly_expr(ts, ring, ord);
    if (!ts.at(Token::Kind::eof)) ts.fail(ts.peek(), "trailing input after polynomial");
    return f;
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRing& ring,
                                              const MonomialOrder& ord, std::string source_name) {
    TokenStream ts(text, std::move(source_name), /*newline_is_space=*/true);
    std::vector<Polynomial> polys;
    polys.push_back(parse_poly_expr(ts, ring, ord));
    while (ts.accept(Token::Kind::comma)) polys.push_back(parse_poly_expr(ts, ring, ord));
    if (!ts.at(Token::Kind::eof)) ts.fail(ts.peek(), "trailing input after polynomial list");
    return polys;
}

} // namespace qk
