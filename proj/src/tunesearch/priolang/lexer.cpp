#include "tunesearch/priolang/lexer.hpp"

#include <cctype>

namespace tunesearch::priolang {

namespace {

bool is_keyword(const std::string& s) {
    return s == "def" || s == "return" || s == "for" || s == "in" || s == "if" ||
           s == "elif" || s == "else" || s == "and" || s == "or" || s == "not";
}

struct Cursor {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= src.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    char advance() {
        char c = src[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
};

} // namespace

std::vector<Token> tokenize(const std::string& source) {
    std::vector<Token> out;
    Cursor cur{source};
    std::vector<int> indents{0};
    int bracket_depth = 0;
    bool at_line_start = true;

    auto push = [&](Tok kind, std::size_t begin, int line, int col) {
        out.push_back(Token{kind, source.substr(begin, cur.pos - begin), line, col, begin, cur.pos});
    };

    while (!cur.done()) {
        if (at_line_start && bracket_depth == 0) {
            // Measure indentation; tabs count to the next multiple of 4.
            int indent = 0;
            while (!cur.done() && (cur.peek() == ' ' || cur.peek() == '\t')) {
                indent = cur.peek() == '\t' ? (indent / 4 + 1) * 4 : indent + 1;
                cur.advance();
            }
            if (cur.done()) break;
            if (cur.peek() == '\n' || cur.peek() == '\r' || cur.peek() == '#') {
                // Blank or comment-only line: consume to end of line.
                while (!cur.done() && cur.peek() != '\n') cur.advance();
                if (!cur.done()) cur.advance();
                continue;
            }
            if (indent > indents.back()) {
                indents.push_back(indent);
                out.push_back(Token{Tok::Indent, "", cur.line, 1, cur.pos, cur.pos});
            } else {
                while (indent < indents.back()) {
                    indents.pop_back();
                    out.push_back(Token{Tok::Dedent, "", cur.line, 1, cur.pos, cur.pos});
                }
                if (indent != indents.back())
                    throw ParseError("inconsistent indentation", cur.line, indent + 1);
            }
            at_line_start = false;
        }

        char c = cur.peek();
        std::size_t begin = cur.pos;
        int line = cur.line, col = cur.col;

        if (c == '\n' || c == '\r') {
            cur.advance();
            if (c == '\r' && cur.peek() == '\n') cur.advance();
            if (bracket_depth == 0) {
                out.push_back(Token{Tok::Newline, "", line, col, begin, cur.pos});
                at_line_start = true;
            }
            continue;
        }
        if (c == ' ' || c == '\t') {
            cur.advance();
            continue;
        }
        if (c == '#') {
            while (!cur.done() && cur.peek() != '\n') cur.advance();
            continue;
        }
        if (c == '\\' && (cur.peek(1) == '\n' || cur.peek(1) == '\r')) {
            cur.advance();
            cur.advance();
            if (cur.peek() == '\n') cur.advance();
            continue;
        }

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (!cur.done() &&
                   (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_'))
                cur.advance();
            std::string word = source.substr(begin, cur.pos - begin);
            out.push_back(Token{is_keyword(word) ? Tok::Keyword : Tok::Name, word, line, col, begin, cur.pos});
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(cur.peek(1))))) {
            while (std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.advance();
            if (cur.peek() == '.' && cur.peek(1) != '.') {
                cur.advance();
                while (std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.advance();
            }
            if (cur.peek() == 'e' || cur.peek() == 'E') {
                std::size_t mark = cur.pos;
                cur.advance();
                if (cur.peek() == '+' || cur.peek() == '-') cur.advance();
                if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.advance();
                } else {
                    cur.pos = mark; // 'e' was the start of a name, not an exponent
                }
            }
            push(Tok::Number, begin, line, col);
            continue;
        }

        if (c == '\'' || c == '"') {
            char quote = c;
            cur.advance();
            std::string text;
            while (true) {
                if (cur.done() || cur.peek() == '\n')
                    throw ParseError("unterminated string literal", line, col);
                char d = cur.advance();
                if (d == quote) break;
                if (d == '\\') {
                    char e = cur.advance();
                    switch (e) {
                    case 'n': text += '\n'; break;
                    case 't': text += '\t'; break;
                    case '\\': text += '\\'; break;
                    case '\'': text += '\''; break;
                    case '"': text += '"'; break;
                    default: throw ParseError("unsupported escape sequence", line, col);
                    }
                } else {
                    text += d;
                }
            }
            out.push_back(Token{Tok::String, text, line, col, begin, cur.pos});
            continue;
        }

        auto two = [&](char second) { return cur.peek(1) == second; };
        Tok kind;
        int len = 1;
        switch (c) {
        case '(': kind = Tok::LParen; ++bracket_depth; break;
        case ')': kind = Tok::RParen; --bracket_depth; break;
        case '[': kind = Tok::LBracket; ++bracket_depth; break;
        case ']': kind = Tok::RBracket; --bracket_depth; break;
        case ',': kind = Tok::Comma; break;
        case ':': kind = Tok::Colon; break;
        case '+': kind = two('=') ? (len = 2, Tok::PlusEq) : Tok::Plus; break;
        case '-':
            if (two('=')) { kind = Tok::MinusEq; len = 2; }
            else if (two('>')) { kind = Tok::Arrow; len = 2; }
            else kind = Tok::Minus;
            break;
        case '*':
            if (two('*')) { kind = Tok::DoubleStar; len = 2; }
            else if (two('=')) { kind = Tok::StarEq; len = 2; }
            else kind = Tok::Star;
            break;
        case '/':
            if (two('/')) { kind = Tok::DoubleSlash; len = 2; }
            else if (two('=')) { kind = Tok::SlashEq; len = 2; }
            else kind = Tok::Slash;
            break;
        case '%': kind = two('=') ? (len = 2, Tok::PercentEq) : Tok::Percent; break;
        case '&': kind = Tok::Amp; break;
        case '|': kind = Tok::Pipe; break;
        case '=': kind = two('=') ? (len = 2, Tok::EqEq) : Tok::Eq; break;
        case '!':
            if (!two('=')) throw ParseError("unexpected character '!'", line, col);
            kind = Tok::NotEq;
            len = 2;
            break;
        case '<': kind = two('=') ? (len = 2, Tok::Le) : Tok::Lt; break;
        case '>': kind = two('=') ? (len = 2, Tok::Ge) : Tok::Gt; break;
        case '.':
            if (cur.peek(1) == '.' && cur.peek(2) == '.') { kind = Tok::Ellipsis; len = 3; }
            else kind = Tok::Dot;
            break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        for (int i = 0; i < len; ++i) cur.advance();
        push(kind, begin, line, col);
        if (bracket_depth < 0) throw ParseError("unbalanced bracket", line, col);
    }

    if (!out.empty() && out.back().kind != Tok::Newline)
        out.push_back(Token{Tok::Newline, "", cur.line, cur.col, cur.pos, cur.pos});
    while (indents.back() > 0) {
        indents.pop_back();
        out.push_back(Token{Tok::Dedent, "", cur.line, 1, cur.pos, cur.pos});
    }
    out.push_back(Token{Tok::EndOfFile, "", cur.line, cur.col, cur.pos, cur.pos});
    return out;
}

} // namespace tunesearch::priolang
