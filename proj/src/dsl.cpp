/* dsl.cpp
 * -------
 * Recursive-descent parser and evaluator for tangle expressions.
 */
#include "symun/dsl.hpp"

#include <cctype>
#include <sstream>

namespace symun {

bool TangleExpr::operator==(const TangleExpr& o) const {
    return kind == o.kind && p == o.p && q == o.q && n == o.n && name == o.name && args == o.args;
}

bool ClosureExpr::operator==(const ClosureExpr& o) const {
    return kind == o.kind && first == o.first && second == o.second;
}

namespace {

struct Token {
    enum class Type { Word, Int, LParen, RParen, Comma, Slash, End };
    Type type;
    std::string text;
    long long value = 0;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
        int line = line_, col = col_;
        if (pos_ >= s_.size()) return {Token::Type::End, "", 0, line, col};
        char c = s_[pos_];
        if (c == '(') { advance(); return {Token::Type::LParen, "(", 0, line, col}; }
        if (c == ')') { advance(); return {Token::Type::RParen, ")", 0, line, col}; }
        if (c == ',') { advance(); return {Token::Type::Comma, ",", 0, line, col}; }
        if (c == '/') { advance(); return {Token::Type::Slash, "/", 0, line, col}; }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)) ||
            std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            if (c == '-') { word += c; advance(); }
            while (pos_ < s_.size()) {
                char d = s_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
                    word += d;
                    advance();
                } else {
                    break;
                }
            }
            if (word.empty() || word == "-")
                throw SyntaxError(line, col, "stray '-'");
            bool is_int = (word[0] == '-' || std::isdigit(static_cast<unsigned char>(word[0])));
            for (std::size_t i = (word[0] == '-') ? 1 : 0; i < word.size() && is_int; ++i)
                if (!std::isdigit(static_cast<unsigned char>(word[i]))) is_int = false;
            if (is_int) {
                try {
                    return {Token::Type::Int, word, std::stoll(word), line, col};
                } catch (const std::exception&) {
                    throw SyntaxError(line, col, "integer out of range");
                }
            }
            if (word[0] == '-') throw SyntaxError(line, col, "names cannot start with '-'");
            return {Token::Type::Word, word, 0, line, col};
        }
        throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (s_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
        ++pos_;
    }
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { cur_ = lex_.next(); }

    TangleExpr tangle() {
        Token t = expect(Token::Type::Word, "a tangle expression");
        if (t.text == "T") {
            expect(Token::Type::LParen, "'('");
            long long p = integer();
            expect(Token::Type::Slash, "'/'");
            long long q = integer();
            expect(Token::Type::RParen, "')'");
            TangleExpr e;
            e.kind = TangleExpr::Kind::Rational;
            e.p = p;
            e.q = q;
            return e;
        }
        if (t.text == "twist") {
            expect(Token::Type::LParen, "'('");
            long long n = integer();
            expect(Token::Type::RParen, "')'");
            TangleExpr e;
            e.kind = TangleExpr::Kind::Twist;
            e.n = static_cast<int>(n);
            return e;
        }
        if (t.text == "named") {
            expect(Token::Type::LParen, "'('");
            Token name = expect(Token::Type::Word, "a catalog name");
            expect(Token::Type::RParen, "')'");
            TangleExpr e;
            e.kind = TangleExpr::Kind::Named;
            e.name = name.text;
            return e;
        }
        if (t.text == "sum") {
            expect(Token::Type::LParen, "'('");
            TangleExpr a = tangle();
            expect(Token::Type::Comma, "','");
            TangleExpr b = tangle();
            expect(Token::Type::RParen, "')'");
            TangleExpr e;
            e.kind = TangleExpr::Kind::Sum;
            e.args = {std::move(a), std::move(b)};
            return e;
        }
        if (t.text == "rot" || t.text == "reflect") {
            expect(Token::Type::LParen, "'('");
            TangleExpr a = tangle();
            expect(Token::Type::RParen, "')'");
            TangleExpr e;
            e.kind = t.text == "rot" ? TangleExpr::Kind::RotatePi : TangleExpr::Kind::Reflect;
            e.args = {std::move(a)};
            return e;
        }
        // bare name: shorthand for named(...)
        TangleExpr e;
        e.kind = TangleExpr::Kind::Named;
        e.name = t.text;
        return e;
    }

    ClosureExpr closure() {
        Token t = expect(Token::Type::Word, "'N', 'D' or 'extsym'");
        ClosureExpr e;
        if (t.text == "N" || t.text == "D") {
            e.kind = t.text == "N" ? ClosureExpr::Kind::Numerator : ClosureExpr::Kind::Denominator;
            expect(Token::Type::LParen, "'('");
            e.first = tangle();
            expect(Token::Type::RParen, "')'");
            return e;
        }
        if (t.text == "extsym") {
            e.kind = ClosureExpr::Kind::ExtSym;
            expect(Token::Type::LParen, "'('");
            e.first = tangle();
            expect(Token::Type::Comma, "','");
            e.second = tangle();
            expect(Token::Type::RParen, "')'");
            return e;
        }
        throw SyntaxError(t.line, t.col, "expected 'N', 'D' or 'extsym', got '" + t.text + "'");
    }

    void finish() {
        if (cur_.type != Token::Type::End)
            throw SyntaxError(cur_.line, cur_.col, "unexpected trailing input '" + cur_.text + "'");
    }

private:
    Token expect(Token::Type type, const std::string& what) {
        if (cur_.type != type)
            throw SyntaxError(cur_.line, cur_.col,
                              "expected " + what + ", got '" +
                                  (cur_.type == Token::Type::End ? "end of input" : cur_.text) + "'");
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }
    long long integer() {
        Token t = expect(Token::Type::Int, "an integer");
        return t.value;
    }
    Lexer lex_;
    Token cur_;
};

}  // namespace

TangleExpr parse_tangle_expr(const std::string& text) {
    Parser p(text);
    TangleExpr e = p.tangle();
    p.finish();
    return e;
}

ClosureExpr parse_closure_expr(const std::string& text) {
    Parser p(text);
    ClosureExpr e = p.closure();
    p.finish();
    return e;
}

std::string print_expr(const TangleExpr& e) {
    std::ostringstream os;
    switch (e.kind) {
        case TangleExpr::Kind::Rational:
            os << "T(" << e.p << "/" << e.q << ")";
            break;
        case TangleExpr::Kind::Twist:
            os << "twist(" << e.n << ")";
            break;
        case TangleExpr::Kind::Named:
            os << e.name;
            break;
        case TangleExpr::Kind::Sum:
            os << "sum(" << print_expr(e.args[0]) << ", " << print_expr(e.args[1]) << ")";
            break;
        case TangleExpr::Kind::RotatePi:
            os << "rot(" << print_expr(e.args[0]) << ")";
            break;
        case TangleExpr::Kind::Reflect:
            os << "reflect(" << print_expr(e.args[0]) << ")";
            break;
    }
    return os.str();
}

std::string print_expr(const ClosureExpr& e) {
    switch (e.kind) {
        case ClosureExpr::Kind::Numerator:
            return "N(" + print_expr(e.first) + ")";
        case ClosureExpr::Kind::Denominator:
            return "D(" + print_expr(e.first) + ")";
        default:
            return "extsym(" + print_expr(e.first) + ", " + print_expr(*e.second) + ")";
    }
}

Tangle eval_tangle(const TangleExpr& e, const Catalog& cat) {
    switch (e.kind) {
        case TangleExpr::Kind::Rational:
            return rational_tangle(e.p, e.q);
        case TangleExpr::Kind::Twist:
            return twist_tangle(e.n);
        case TangleExpr::Kind::Named:
            return cat.at(e.name).tangle;
        case TangleExpr::Kind::Sum:
            return tangle_sum(eval_tangle(e.args[0], cat), eval_tangle(e.args[1], cat));
        case TangleExpr::Kind::RotatePi:
            return rotate_pi(eval_tangle(e.args[0], cat));
        default:
            return reflect_switch(eval_tangle(e.args[0], cat));
    }
}

ClosedDiagram eval_closure(const ClosureExpr& e, const Catalog& cat) {
    if (e.kind == ClosureExpr::Kind::Numerator) return numerator_closure(eval_tangle(e.first, cat));
    if (e.kind == ClosureExpr::Kind::Denominator)
        return denominator_closure(eval_tangle(e.first, cat));
    throw TangleError("extsym expressions build a symmetric union, not a plain closure");
}

SymmetricUnion eval_symmetric_union(const ClosureExpr& e, const Catalog& cat) {
    if (e.kind != ClosureExpr::Kind::ExtSym)
        throw TangleError("expression is not a symmetric union");
    return extended_symmetric_union(eval_tangle(e.first, cat), eval_tangle(*e.second, cat));
}

}  // namespace symun
