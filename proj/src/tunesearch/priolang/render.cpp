#include "tunesearch/priolang/render.hpp"

#include <charconv>
#include <sstream>

namespace tunesearch::priolang {

namespace {

// Grammar precedence levels, used to decide where parentheses are required.
enum Prec {
    kCond = 1, kOr = 2, kAnd = 3, kNot = 4, kCmp = 5,
    kPipe = 6, kAmp = 7, kAdd = 8, kMul = 9, kUnary = 10, kPow = 11, kAtom = 12,
};

int binop_prec(BinOp op) {
    switch (op) {
    case BinOp::Or: return kPipe;
    case BinOp::And: return kAmp;
    case BinOp::Add:
    case BinOp::Sub: return kAdd;
    case BinOp::Mul:
    case BinOp::Div:
    case BinOp::FloorDiv:
    case BinOp::Mod: return kMul;
    case BinOp::Pow: return kPow;
    }
    return kAtom;
}

const char* binop_symbol(BinOp op) {
    switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::FloorDiv: return "//";
    case BinOp::Mod: return "%";
    case BinOp::Pow: return "**";
    case BinOp::And: return "&";
    case BinOp::Or: return "|";
    }
    return "?";
}

const char* cmp_symbol(CmpOp op) {
    switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Gt: return ">";
    case CmpOp::Le: return "<=";
    case CmpOp::Ge: return ">=";
    }
    return "?";
}

const char* builtin_name(BuiltinFn fn) {
    switch (fn) {
    case BuiltinFn::Abs: return "abs";
    case BuiltinFn::Min: return "min";
    case BuiltinFn::Max: return "max";
    case BuiltinFn::Sum: return "sum";
    case BuiltinFn::Len: return "len";
    case BuiltinFn::Range: return "range";
    case BuiltinFn::Enumerate: return "enumerate";
    case BuiltinFn::Log: return "log";
    case BuiltinFn::Log1p: return "log1p";
    case BuiltinFn::Exp: return "exp";
    case BuiltinFn::Tanh: return "tanh";
    case BuiltinFn::Sqrt: return "sqrt";
    }
    return "?";
}

std::string quote_string(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        switch (c) {
        case '\\': out += "\\\\"; break;
        case '\'': out += "\\'"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    out += '\'';
    return out;
}

class Renderer {
public:
    explicit Renderer(std::span<const TunableSite> sites) : sites_(sites) {}

    std::string run(const Module& module) {
        for (std::size_t i = 0; i < module.functions.size(); ++i) {
            if (i > 0) out_ += "\n";
            function(module.functions[i]);
        }
        return std::move(out_);
    }

private:
    std::span<const TunableSite> sites_;
    std::string out_;

    void line(int indent, const std::string& text) {
        out_.append(static_cast<std::size_t>(indent) * 4, ' ');
        out_ += text;
        out_ += '\n';
    }

    void function(const Function& fn) {
        std::string head = "def " + fn.name + "(";
        for (std::size_t i = 0; i < fn.params.size(); ++i) {
            if (i > 0) head += ", ";
            head += fn.params[i].name;
            if (!fn.params[i].annotation.empty()) head += ": " + fn.params[i].annotation;
        }
        head += ")";
        if (!fn.return_annotation.empty()) head += " -> " + fn.return_annotation;
        head += ":";
        line(0, head);
        block(fn.body, 1);
    }

    void block(const Block& body, int indent) {
        for (const auto& s : body) stmt(*s, indent);
    }

    void stmt(const Stmt& s, int indent) {
        switch (s.kind) {
        case Stmt::Kind::Assign:
            line(indent, s.name + " = " + expr(*s.value, kCond));
            break;
        case Stmt::Kind::AugAssign:
            line(indent, s.name + " " + binop_symbol(s.aug) + "= " + expr(*s.value, kCond));
            break;
        case Stmt::Kind::Return:
            line(indent, "return " + expr(*s.value, kCond));
            break;
        case Stmt::Kind::For: {
            std::string head = "for ";
            for (std::size_t i = 0; i < s.target_names.size(); ++i) {
                if (i > 0) head += ", ";
                head += s.target_names[i];
            }
            head += " in ";
            head += s.iter_enumerate ? "enumerate(" : "range(";
            head += expr(*s.iter, kCond);
            head += "):";
            line(indent, head);
            block(s.body, indent + 1);
            break;
        }
        case Stmt::Kind::If: {
            for (std::size_t i = 0; i < s.arms.size(); ++i) {
                line(indent, std::string(i == 0 ? "if " : "elif ") + expr(*s.arms[i].cond, kCond) + ":");
                block(s.arms[i].body, indent + 1);
            }
            if (!s.orelse.empty()) {
                line(indent, "else:");
                block(s.orelse, indent + 1);
            }
            break;
        }
        }
    }

    std::string expr(const Expr& e, int min_prec) {
        int prec;
        std::string text = bare(e, prec);
        if (prec < min_prec) return "(" + text + ")";
        return text;
    }

    std::string bare(const Expr& e, int& prec) {
        prec = kAtom;
        switch (e.kind) {
        case Expr::Kind::Number:
            if (e.number < 0) prec = kUnary; // parenthesize like unary minus
            return format_number(e.number);
        case Expr::Kind::String:
            return quote_string(e.str);
        case Expr::Kind::Name:
            return e.name;
        case Expr::Kind::ListLit: {
            std::string out = "[";
            for (std::size_t i = 0; i < e.items.size(); ++i) {
                if (i > 0) out += ", ";
                out += expr(*e.items[i], kCond);
            }
            return out + "]";
        }
        case Expr::Kind::TupleLit: {
            std::string out = "(";
            for (std::size_t i = 0; i < e.items.size(); ++i) {
                if (i > 0) out += ", ";
                out += expr(*e.items[i], kCond);
            }
            if (e.items.size() == 1) out += ",";
            return out + ")";
        }
        case Expr::Kind::Subscript:
            return expr(*e.a, kAtom) + "[" + expr(*e.b, kCond) + "]";
        case Expr::Kind::Binary: {
            int level = binop_prec(e.bin);
            prec = level;
            if (e.bin == BinOp::Pow)
                return expr(*e.a, kAtom) + " ** " + expr(*e.b, kUnary);
            return expr(*e.a, level) + " " + binop_symbol(e.bin) + " " + expr(*e.b, level + 1);
        }
        case Expr::Kind::Negate:
            prec = kUnary;
            return "-" + expr(*e.a, kUnary);
        case Expr::Kind::BoolAnd:
            prec = kAnd;
            return expr(*e.a, kAnd) + " and " + expr(*e.b, kNot);
        case Expr::Kind::BoolOr:
            prec = kOr;
            return expr(*e.a, kOr) + " or " + expr(*e.b, kAnd);
        case Expr::Kind::Not:
            prec = kNot;
            return "not " + expr(*e.a, kNot);
        case Expr::Kind::Compare:
            prec = kCmp;
            return expr(*e.a, kPipe) + " " + cmp_symbol(e.cmp) + " " + expr(*e.b, kPipe);
        case Expr::Kind::Conditional:
            prec = kCond;
            return expr(*e.a, kOr) + " if " + expr(*e.cond, kOr) + " else " + expr(*e.b, kCond);
        case Expr::Kind::Call: {
            std::string out = builtin_name(e.builtin);
            out += "(";
            for (std::size_t i = 0; i < e.items.size(); ++i) {
                if (i > 0) out += ", ";
                if (e.items[i]->kind == Expr::Kind::Comprehension && !e.items[i]->comp_is_list) {
                    int ignored;
                    out += bare(*e.items[i], ignored);
                } else {
                    out += expr(*e.items[i], kCond);
                }
            }
            return out + ")";
        }
        case Expr::Kind::Comprehension: {
            std::string body = expr(*e.a, kCond) + " for " + e.target_name + " in " + expr(*e.b, kOr);
            if (e.cond) body += " if " + expr(*e.cond, kOr);
            if (e.comp_is_list) return "[" + body + "]";
            return body;
        }
        case Expr::Kind::SiteRef: {
            const TunableSite& site = sites_[static_cast<std::size_t>(e.site_id)];
            std::string out = "tunable([";
            for (std::size_t i = 0; i < site.options.size(); ++i) {
                if (i > 0) out += ", ";
                out += site.options[i].lexeme;
            }
            return out + "])";
        }
        }
        return "?";
    }
};

} // namespace

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string render(const Module& module, std::span<const TunableSite> sites) {
    return Renderer(sites).run(module);
}

std::string render(const TunableProgram& tp) {
    return render(*tp.module, tp.sites);
}

std::string render(const ConcreteProgram& cp) {
    return render(*cp.module, {});
}

std::string canonical_source(const std::string& text) {
    return render(parse(SourceProgram{text, Origin::User}));
}

} // namespace tunesearch::priolang
