#include "calc.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

namespace semifield::cli {

namespace {

enum class Tok { number, ident, lparen, rparen, add_lo, add_up, mul_lo, mul_up, end };

struct Token {
    Tok kind;
    std::size_t column;
    std::string text;
    double value = 0.0;
};

bool starts_number(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; }

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t col = i;
        if (c == '(' || c == ')') {
            out.push_back({c == '(' ? Tok::lparen : Tok::rparen, col, std::string(1, c)});
            ++i;
        } else if (c == '+' || c == '*') {
            char d = i + 1 < s.size() ? s[i + 1] : '\0';
            if (d != '.' && d != '^') {
                throw CalcParseError(std::string("operator '") + c + "' needs '.' or '^'", col);
            }
            Tok kind = c == '+' ? (d == '.' ? Tok::add_lo : Tok::add_up)
                                : (d == '.' ? Tok::mul_lo : Tok::mul_up);
            out.push_back({kind, col, std::string(s.substr(i, 2))});
            i += 2;
        } else if (starts_number(c) || (c == '-' && i + 1 < s.size() && starts_number(s[i + 1]))) {
            double value = 0.0;
            auto [end, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
            if (ec != std::errc()) throw CalcParseError("malformed number", col);
            std::size_t len = static_cast<std::size_t>(end - (s.data() + i));
            out.push_back({Tok::number, col, std::string(s.substr(i, len)), value});
            i += len;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '-') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            std::string word(s.substr(i, j - i));
            for (char& ch : word) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            out.push_back({Tok::ident, col, word});
            i = j;
        } else {
            throw CalcParseError(std::string("unexpected character '") + c + "'", col);
        }
    }
    out.push_back({Tok::end, s.size(), ""});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const Semifield& f, bool eval)
        : toks_(std::move(toks)), f_(f), eval_(eval) {}

    ExtendedReal parse() {
        ExtendedReal v = expr();
        if (peek().kind != Tok::end) throw CalcParseError("unexpected '" + peek().text + "'", peek().column);
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    ExtendedReal expr() {
        ExtendedReal v = term();
        while (peek().kind == Tok::add_lo || peek().kind == Tok::add_up) {
            Dotting d = next().kind == Tok::add_lo ? Dotting::lower : Dotting::upper;
            ExtendedReal rhs = term();
            v = eval_ ? f_.add(d, v, rhs) : v;
        }
        return v;
    }

    ExtendedReal term() {
        ExtendedReal v = unary();
        while (peek().kind == Tok::mul_lo || peek().kind == Tok::mul_up) {
            Dotting d = next().kind == Tok::mul_lo ? Dotting::lower : Dotting::upper;
            ExtendedReal rhs = unary();
            v = eval_ ? f_.mul(d, v, rhs) : v;
        }
        return v;
    }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) {
            throw CalcParseError(std::string("expected ") + what, peek().column);
        }
        next();
    }

    ExtendedReal unary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::lparen: {
                next();
                ExtendedReal v = expr();
                expect(Tok::rparen, "')'");
                return v;
            }
            case Tok::number:
                next();
                return t.value;
            case Tok::ident:
                return ident();
            default:
                throw CalcParseError("expected an operand", t.column);
        }
    }

    ExtendedReal ident() {
        const Token& t = next();
        if (t.text == "inv") {
            expect(Tok::lparen, "'(' after inv");
            ExtendedReal v = expr();
            expect(Tok::rparen, "')'");
            return eval_ ? f_.inverse(v) : v;
        }
        if (t.text == "inf") return INFINITY;
        if (t.text == "-inf") return -INFINITY;
        if (t.text == "bot") return f_.bottom();
        if (t.text == "top") return f_.top();
        if (t.text == "e") return f_.unit();
        throw CalcParseError("unknown name '" + t.text + "'", t.column);
    }

    std::vector<Token> toks_;
    const Semifield& f_;
    bool eval_;
    std::size_t pos_ = 0;
};

}  // namespace

ExtendedReal evaluate(std::string_view expr, const Semifield& field) {
    std::vector<Token> toks = tokenize(expr);
    // Syntax is checked in full before any operation can raise a domain error.
    Parser(toks, field, false).parse();
    return Parser(std::move(toks), field, true).parse();
}

std::string caret_diagnostic(std::string_view expr, std::size_t column) {
    return "  " + std::string(expr) + "\n  " + std::string(column, ' ') + "^";
}

}  // namespace semifield::cli
