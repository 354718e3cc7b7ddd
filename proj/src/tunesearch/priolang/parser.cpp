#include <cstdlib>
#include <map>
#include <optional>

#include "tunesearch/priolang/lexer.hpp"
#include "tunesearch/priolang/program.hpp"

namespace tunesearch::priolang {

namespace {

const std::map<std::string, BuiltinFn> kBuiltins = {
    {"abs", BuiltinFn::Abs},     {"min", BuiltinFn::Min},   {"max", BuiltinFn::Max},
    {"sum", BuiltinFn::Sum},     {"len", BuiltinFn::Len},   {"range", BuiltinFn::Range},
    {"enumerate", BuiltinFn::Enumerate}, {"log", BuiltinFn::Log}, {"log1p", BuiltinFn::Log1p},
    {"exp", BuiltinFn::Exp},     {"tanh", BuiltinFn::Tanh}, {"sqrt", BuiltinFn::Sqrt},
};

class Parser {
public:
    Parser(const std::string& source, std::vector<Token> tokens)
        : source_(source), toks_(std::move(tokens)) {}

    TunableProgram parse_module(const SourceProgram& src) {
        auto module = std::make_shared<Module>();
        while (!check(Tok::EndOfFile)) {
            if (check(Tok::Newline)) {
                advance();
                continue;
            }
            module->functions.push_back(parse_funcdef());
        }
        if (module->functions.empty())
            throw ParseError("expected at least one function definition", 1, 1);
        TunableProgram tp;
        tp.source = src;
        tp.function_name = module->functions.back().name;
        tp.sites = std::move(sites_);
        tp.module = std::move(module);
        return tp;
    }

private:
    const std::string& source_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<TunableSite> sites_;

    Function* fn_ = nullptr;
    std::map<std::string, int> slots_;

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& advance() { return toks_[pos_++]; }
    bool check(Tok k) const { return peek().kind == k; }
    bool check_kw(const char* kw) const { return peek().kind == Tok::Keyword && peek().text == kw; }
    bool match(Tok k) {
        if (!check(k)) return false;
        advance();
        return true;
    }
    bool match_kw(const char* kw) {
        if (!check_kw(kw)) return false;
        advance();
        return true;
    }
    const Token& expect(Tok k, const char* what) {
        if (!check(k)) throw err(std::string("expected ") + what);
        return advance();
    }
    void expect_kw(const char* kw) {
        if (!match_kw(kw)) throw err(std::string("expected '") + kw + "'");
    }
    ParseError err(const std::string& msg) const {
        return ParseError(msg, peek().line, peek().col);
    }

    int slot_of(const std::string& name) {
        auto it = slots_.find(name);
        if (it != slots_.end()) return it->second;
        int s = static_cast<int>(fn_->slot_names.size());
        fn_->slot_names.push_back(name);
        slots_.emplace(name, s);
        return s;
    }

    std::string name_token(const char* what) {
        if (!check(Tok::Name)) throw err(std::string("expected ") + what);
        const Token& t = advance();
        if (kBuiltins.count(t.text) || t.text == "tunable")
            throw ParseError("builtin name '" + t.text + "' used as identifier", t.line, t.col);
        return t.text;
    }

    // Consumes an annotation as a raw source slice, stopping at ',' / ')' /
    // ':' at the enclosing bracket level.
    std::string skip_annotation(bool until_colon) {
        std::size_t begin = peek().begin;
        std::size_t end = begin;
        int depth = 0;
        while (true) {
            const Token& t = peek();
            if (t.kind == Tok::EndOfFile || t.kind == Tok::Newline) throw err("unterminated annotation");
            if (depth == 0) {
                if (until_colon && t.kind == Tok::Colon) break;
                if (!until_colon && (t.kind == Tok::Comma || t.kind == Tok::RParen)) break;
            }
            if (t.kind == Tok::LParen || t.kind == Tok::LBracket) ++depth;
            if (t.kind == Tok::RParen || t.kind == Tok::RBracket) --depth;
            end = t.end;
            advance();
        }
        return source_.substr(begin, end - begin);
    }

    Function parse_funcdef() {
        expect_kw("def");
        Function fn;
        fn_ = &fn;
        slots_.clear();

        if (!check(Tok::Name)) throw err("expected function name");
        fn.name = advance().text;

        expect(Tok::LParen, "'('");
        if (!check(Tok::RParen)) {
            while (true) {
                Param p;
                p.name = name_token("parameter name");
                slot_of(p.name);
                if (match(Tok::Colon)) p.annotation = skip_annotation(false);
                fn.params.push_back(std::move(p));
                if (!match(Tok::Comma)) break;
                if (check(Tok::RParen)) break; // trailing comma
            }
        }
        expect(Tok::RParen, "')'");
        if (match(Tok::Arrow)) fn.return_annotation = skip_annotation(true);
        expect(Tok::Colon, "':'");
        fn.body = parse_block();
        fn_ = nullptr;
        return fn;
    }

    Block parse_block() {
        expect(Tok::Newline, "end of line");
        expect(Tok::Indent, "an indented block");
        Block body;
        while (!check(Tok::Dedent)) body.push_back(parse_stmt());
        expect(Tok::Dedent, "dedent");
        return body;
    }

    StmtPtr parse_stmt() {
        if (check_kw("return")) {
            advance();
            auto s = std::make_unique<Stmt>(Stmt::Kind::Return);
            s->value = parse_expr();
            expect(Tok::Newline, "end of line");
            return s;
        }
        if (check_kw("for")) return parse_for();
        if (check_kw("if")) return parse_if();
        if (check(Tok::Name)) return parse_assign();
        throw err("expected a statement");
    }

    StmtPtr parse_assign() {
        std::string target = name_token("assignment target");
        Tok op = peek().kind;
        if (op == Tok::Eq) {
            advance();
            auto s = std::make_unique<Stmt>(Stmt::Kind::Assign);
            s->name = target;
            s->slot = slot_of(target);
            s->value = parse_expr();
            expect(Tok::Newline, "end of line");
            return s;
        }
        BinOp aug;
        switch (op) {
        case Tok::PlusEq: aug = BinOp::Add; break;
        case Tok::MinusEq: aug = BinOp::Sub; break;
        case Tok::StarEq: aug = BinOp::Mul; break;
        case Tok::SlashEq: aug = BinOp::Div; break;
        case Tok::PercentEq: aug = BinOp::Mod; break;
        default: throw err("expected '=' or an augmented assignment");
        }
        advance();
        auto s = std::make_unique<Stmt>(Stmt::Kind::AugAssign);
        s->name = target;
        s->slot = slot_of(target);
        s->aug = aug;
        s->value = parse_expr();
        expect(Tok::Newline, "end of line");
        return s;
    }

    StmtPtr parse_for() {
        expect_kw("for");
        auto s = std::make_unique<Stmt>(Stmt::Kind::For);
        while (true) {
            std::string t = name_token("loop variable");
            s->target_names.push_back(t);
            s->target_slots.push_back(slot_of(t));
            if (!match(Tok::Comma)) break;
        }
        expect_kw("in");
        if (!check(Tok::Name) || (peek().text != "range" && peek().text != "enumerate"))
            throw err("for statement iterable must be range(...) or enumerate(...)");
        s->iter_enumerate = advance().text == "enumerate";
        expect(Tok::LParen, "'('");
        s->iter = parse_expr();
        expect(Tok::RParen, "')'");
        expect(Tok::Colon, "':'");
        s->body = parse_block();
        return s;
    }

    StmtPtr parse_if() {
        auto s = std::make_unique<Stmt>(Stmt::Kind::If);
        expect_kw("if");
        while (true) {
            IfArm arm;
            arm.cond = parse_expr();
            expect(Tok::Colon, "':'");
            arm.body = parse_block();
            s->arms.push_back(std::move(arm));
            if (!match_kw("elif")) break;
        }
        if (match_kw("else")) {
            expect(Tok::Colon, "':'");
            s->orelse = parse_block();
        }
        return s;
    }

    // --- expressions ------------------------------------------------------

    ExprPtr parse_expr() { return parse_conditional(); }

    ExprPtr parse_conditional() {
        ExprPtr value = parse_or();
        if (!check_kw("if")) return value;
        advance();
        auto e = std::make_unique<Expr>(Expr::Kind::Conditional);
        e->a = std::move(value);
        e->cond = parse_or();
        expect_kw("else");
        e->b = parse_conditional();
        return e;
    }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (match_kw("or")) {
            auto e = std::make_unique<Expr>(Expr::Kind::BoolOr);
            e->a = std::move(lhs);
            e->b = parse_and();
            lhs = std::move(e);
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_not();
        while (match_kw("and")) {
            auto e = std::make_unique<Expr>(Expr::Kind::BoolAnd);
            e->a = std::move(lhs);
            e->b = parse_not();
            lhs = std::move(e);
        }
        return lhs;
    }

    ExprPtr parse_not() {
        if (match_kw("not")) {
            auto e = std::make_unique<Expr>(Expr::Kind::Not);
            e->a = parse_not();
            return e;
        }
        return parse_comparison();
    }

    ExprPtr parse_comparison() {
        ExprPtr lhs = parse_bitor();
        std::optional<CmpOp> op;
        switch (peek().kind) {
        case Tok::EqEq: op = CmpOp::Eq; break;
        case Tok::NotEq: op = CmpOp::Ne; break;
        case Tok::Lt: op = CmpOp::Lt; break;
        case Tok::Gt: op = CmpOp::Gt; break;
        case Tok::Le: op = CmpOp::Le; break;
        case Tok::Ge: op = CmpOp::Ge; break;
        default: return lhs;
        }
        advance();
        auto e = std::make_unique<Expr>(Expr::Kind::Compare);
        e->cmp = *op;
        e->a = std::move(lhs);
        e->b = parse_bitor();
        // chained comparisons are outside the grammar
        switch (peek().kind) {
        case Tok::EqEq: case Tok::NotEq: case Tok::Lt:
        case Tok::Gt: case Tok::Le: case Tok::Ge:
            throw err("chained comparison is not supported");
        default: break;
        }
        return e;
    }

    ExprPtr binary(ExprPtr a, BinOp op, ExprPtr b) {
        auto e = std::make_unique<Expr>(Expr::Kind::Binary);
        e->bin = op;
        e->a = std::move(a);
        e->b = std::move(b);
        return e;
    }

    ExprPtr parse_bitor() {
        ExprPtr lhs = parse_bitand();
        while (match(Tok::Pipe)) lhs = binary(std::move(lhs), BinOp::Or, parse_bitand());
        return lhs;
    }

    ExprPtr parse_bitand() {
        ExprPtr lhs = parse_arith();
        while (match(Tok::Amp)) lhs = binary(std::move(lhs), BinOp::And, parse_arith());
        return lhs;
    }

    ExprPtr parse_arith() {
        ExprPtr lhs = parse_term();
        while (true) {
            if (match(Tok::Plus)) lhs = binary(std::move(lhs), BinOp::Add, parse_term());
            else if (match(Tok::Minus)) lhs = binary(std::move(lhs), BinOp::Sub, parse_term());
            else return lhs;
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (true) {
            if (match(Tok::Star)) lhs = binary(std::move(lhs), BinOp::Mul, parse_factor());
            else if (match(Tok::Slash)) lhs = binary(std::move(lhs), BinOp::Div, parse_factor());
            else if (match(Tok::DoubleSlash)) lhs = binary(std::move(lhs), BinOp::FloorDiv, parse_factor());
            else if (match(Tok::Percent)) lhs = binary(std::move(lhs), BinOp::Mod, parse_factor());
            else return lhs;
        }
    }

    ExprPtr parse_factor() {
        if (match(Tok::Minus)) {
            auto e = std::make_unique<Expr>(Expr::Kind::Negate);
            e->a = parse_factor();
            return e;
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_postfix();
        if (match(Tok::DoubleStar)) return binary(std::move(base), BinOp::Pow, parse_factor());
        return base;
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_atom();
        while (match(Tok::LBracket)) {
            auto sub = std::make_unique<Expr>(Expr::Kind::Subscript);
            sub->a = std::move(e);
            sub->b = parse_expr();
            expect(Tok::RBracket, "']'");
            e = std::move(sub);
        }
        return e;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Number: {
            advance();
            auto e = std::make_unique<Expr>(Expr::Kind::Number);
            e->number = std::strtod(t.text.c_str(), nullptr);
            return e;
        }
        case Tok::String: {
            advance();
            auto e = std::make_unique<Expr>(Expr::Kind::String);
            e->str = t.text;
            return e;
        }
        case Tok::LParen: {
            advance();
            ExprPtr first = parse_expr();
            if (check_kw("for"))
                throw err("generator expression is only allowed as the argument of sum()");
            if (check(Tok::Comma)) {
                auto e = std::make_unique<Expr>(Expr::Kind::TupleLit);
                e->items.push_back(std::move(first));
                while (match(Tok::Comma)) {
                    if (check(Tok::RParen)) break;
                    e->items.push_back(parse_expr());
                }
                expect(Tok::RParen, "')'");
                return e;
            }
            expect(Tok::RParen, "')'");
            return first;
        }
        case Tok::LBracket:
            return parse_list();
        case Tok::Name:
            return parse_name_or_call();
        default:
            throw err("expected an expression");
        }
    }

    ExprPtr parse_list() {
        expect(Tok::LBracket, "'['");
        auto e = std::make_unique<Expr>(Expr::Kind::ListLit);
        if (match(Tok::RBracket)) return e;
        ExprPtr first = parse_expr();
        if (check_kw("for")) {
            ExprPtr comp = parse_comprehension(std::move(first), /*is_list=*/true);
            expect(Tok::RBracket, "']'");
            return comp;
        }
        e->items.push_back(std::move(first));
        while (match(Tok::Comma)) {
            if (check(Tok::RBracket)) break;
            e->items.push_back(parse_expr());
        }
        expect(Tok::RBracket, "']'");
        return e;
    }

    ExprPtr parse_comprehension(ExprPtr element, bool is_list) {
        expect_kw("for");
        auto e = std::make_unique<Expr>(Expr::Kind::Comprehension);
        e->comp_is_list = is_list;
        e->a = std::move(element);
        e->target_name = name_token("comprehension variable");
        e->target_slot = slot_of(e->target_name);
        expect_kw("in");
        e->b = parse_or();
        if (match_kw("if")) e->cond = parse_or();
        return e;
    }

    ExprPtr parse_name_or_call() {
        const Token& t = advance();
        bool is_call = check(Tok::LParen);
        if (t.text == "tunable") {
            if (!is_call) throw TunableError("'tunable' must be called", t.line, t.col);
            return parse_tunable(t);
        }
        auto builtin = kBuiltins.find(t.text);
        if (is_call) {
            if (builtin == kBuiltins.end())
                throw ParseError("call to unknown function '" + t.text + "'", t.line, t.col);
            return parse_builtin_call(builtin->second, t);
        }
        if (builtin != kBuiltins.end())
            throw ParseError("builtin name '" + t.text + "' used as identifier", t.line, t.col);
        auto e = std::make_unique<Expr>(Expr::Kind::Name);
        e->name = t.text;
        e->slot = slot_of(t.text);
        return e;
    }

    ExprPtr parse_builtin_call(BuiltinFn fn, const Token& t) {
        expect(Tok::LParen, "'('");
        auto e = std::make_unique<Expr>(Expr::Kind::Call);
        e->builtin = fn;
        if (!check(Tok::RParen)) {
            ExprPtr first = parse_expr();
            if (check_kw("for")) {
                if (fn != BuiltinFn::Sum)
                    throw ParseError("generator expression is only allowed as the argument of sum()",
                                     t.line, t.col);
                e->items.push_back(parse_comprehension(std::move(first), /*is_list=*/false));
            } else {
                e->items.push_back(std::move(first));
                while (match(Tok::Comma)) {
                    if (check(Tok::RParen)) break;
                    e->items.push_back(parse_expr());
                }
            }
        }
        expect(Tok::RParen, "')'");

        std::size_t n = e->items.size();
        switch (fn) {
        case BuiltinFn::Min:
        case BuiltinFn::Max:
            if (n < 1) throw ParseError("min()/max() need at least one argument", t.line, t.col);
            break;
        case BuiltinFn::Sum:
            if (n != 1) throw ParseError("sum() takes exactly one argument", t.line, t.col);
            break;
        default:
            if (n != 1)
                throw ParseError("'" + t.text + "' takes exactly one argument", t.line, t.col);
        }
        return e;
    }

    // tunable([lit, lit, ...]) -> SiteRef
    ExprPtr parse_tunable(const Token& head) {
        expect(Tok::LParen, "'('");
        if (!check(Tok::LBracket))
            throw TunableError("tunable() requires a literal list argument", peek().line, peek().col);
        advance();
        TunableSite site;
        site.site_id = static_cast<int>(sites_.size());
        site.span_begin = head.begin;
        while (true) {
            if (check(Tok::RBracket)) break;
            site.options.push_back(parse_literal_option());
            if (!match(Tok::Comma)) break;
        }
        expect(Tok::RBracket, "']'");
        const Token& close = expect(Tok::RParen, "')'");
        site.span_end = close.end;
        if (site.options.empty())
            throw TunableError("tunable() options list is empty", head.line, head.col);

        auto e = std::make_unique<Expr>(Expr::Kind::SiteRef);
        e->site_id = site.site_id;
        sites_.push_back(std::move(site));
        return e;
    }

    TunableOption parse_literal_option() {
        const Token& first = peek();
        bool neg = false;
        if (check(Tok::Minus)) {
            neg = true;
            advance();
        }
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            advance();
            double v = std::strtod(t.text.c_str(), nullptr);
            return TunableOption{Value(neg ? -v : v), source_.substr(first.begin, t.end - first.begin)};
        }
        if (t.kind == Tok::String && !neg) {
            advance();
            return TunableOption{Value(t.text), source_.substr(first.begin, t.end - first.begin)};
        }
        throw TunableError("tunable() options must be number or string literals", t.line, t.col);
    }
};

} // namespace

TunableProgram parse(const SourceProgram& source) {
    if (source.text.empty()) throw ParseError("empty source", 1, 1);
    Parser parser(source.text, tokenize(source.text));
    return parser.parse_module(source);
}

} // namespace tunesearch::priolang
