#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tunesearch/common/errors.hpp"

namespace tunesearch::priolang {

// Source constructs outside the accepted grammar.
struct ParseError : Error {
    ParseError(std::string msg, int line, int col)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line(line), col(col) {}
    int line;
    int col;
};

// A tunable(...) call whose argument is not a non-empty literal list.
struct TunableError : ParseError {
    using ParseError::ParseError;
};

enum class Tok {
    Name, Number, String, Keyword,
    Newline, Indent, Dedent, EndOfFile,
    LParen, RParen, LBracket, RBracket, Comma, Colon, Arrow, Ellipsis, Dot,
    Plus, Minus, Star, Slash, DoubleSlash, Percent, DoubleStar, Amp, Pipe,
    Eq, PlusEq, MinusEq, StarEq, SlashEq, PercentEq,
    EqEq, NotEq, Lt, Gt, Le, Ge,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
    std::size_t begin; // byte offset in source
    std::size_t end;
};

// Tokenizes a full source text, producing INDENT/DEDENT/NEWLINE structure.
// Newlines inside brackets are implicit continuations; '#' comments are
// skipped.
std::vector<Token> tokenize(const std::string& source);

} // namespace tunesearch::priolang
