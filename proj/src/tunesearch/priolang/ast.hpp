#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tunesearch/priolang/value.hpp"

namespace tunesearch::priolang {

enum class BinOp { Add, Sub, Mul, Div, FloorDiv, Mod, Pow, And, Or };
enum class CmpOp { Eq, Ne, Lt, Gt, Le, Ge };

enum class BuiltinFn { Abs, Min, Max, Sum, Len, Range, Enumerate, Log, Log1p, Exp, Tanh, Sqrt };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// One tagged node type for the whole expression grammar. Fields are reused
// per kind; see the parser for which get filled in.
struct Expr {
    enum class Kind {
        Number,      // number
        String,      // str
        Name,        // name, slot
        ListLit,     // items
        TupleLit,    // items
        Subscript,   // a[b]
        Binary,      // a bin b   (arithmetic and logical &, |)
        Negate,      // -a
        BoolAnd,     // a and b   (short-circuit)
        BoolOr,      // a or b
        Not,         // not a
        Compare,     // a cmp b
        Conditional, // a if cond else b
        Call,        // builtin(items...)
        Comprehension, // a for target in b [if cond]; list or generator
        SiteRef,     // tunable site placeholder, site_id
    };

    Kind kind;

    double number = 0.0;
    std::string str;
    std::string name;
    int slot = -1;

    std::vector<ExprPtr> items;
    ExprPtr a, b, cond;

    BinOp bin = BinOp::Add;
    CmpOp cmp = CmpOp::Eq;
    BuiltinFn builtin = BuiltinFn::Abs;

    std::string target_name; // comprehension loop variable
    int target_slot = -1;
    bool comp_is_list = false;

    int site_id = -1;

    explicit Expr(Kind k) : kind(k) {}
    ExprPtr clone() const;
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;
using Block = std::vector<StmtPtr>;

struct IfArm {
    ExprPtr cond;
    Block body;
};

struct Stmt {
    enum class Kind { Assign, AugAssign, For, If, Return };

    Kind kind;

    std::string name; // assign target
    int slot = -1;
    BinOp aug = BinOp::Add;
    ExprPtr value; // assign / return value

    std::vector<std::string> target_names; // for targets
    std::vector<int> target_slots;
    bool iter_enumerate = false; // for ... in enumerate(...) vs range(...)
    ExprPtr iter;
    Block body;

    std::vector<IfArm> arms;
    Block orelse;

    explicit Stmt(Kind k) : kind(k) {}
    StmtPtr clone() const;
};

struct Param {
    std::string name;
    std::string annotation; // raw source text, kept for rendering only
};

struct Function {
    std::string name;
    std::vector<Param> params;
    std::string return_annotation;
    std::vector<std::string> slot_names; // params first, then locals
    Block body;

    Function clone() const;
};

struct Module {
    std::vector<Function> functions; // the last one is the entry point

    Module clone() const;
    const Function& entry() const { return functions.back(); }
};

Block clone_block(const Block& b);

} // namespace tunesearch::priolang
