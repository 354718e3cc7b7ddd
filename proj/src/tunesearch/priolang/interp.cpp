#include "tunesearch/priolang/interp.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace tunesearch::priolang {

namespace {

double py_mod(double a, double b) {
    if (b == 0.0) throw EvalError("modulo by zero");
    double r = std::fmod(a, b);
    if (r != 0.0 && ((r < 0.0) != (b < 0.0))) r += b;
    return r;
}

double py_floordiv(double a, double b) {
    if (b == 0.0) throw EvalError("division by zero");
    return std::floor(a / b);
}

double py_pow(double a, double b) {
    if (a == 0.0 && b < 0.0) throw EvalError("zero raised to a negative power");
    double r = std::pow(a, b);
    if (std::isnan(r)) throw EvalError("invalid power operand");
    return r;
}

class Interpreter {
public:
    Interpreter(const Module& module, const EvalLimits& limits)
        : module_(module), max_steps_(limits.max_steps) {}

    double call_entry(std::span<const Value> args) {
        const Function& fn = module_.entry();
        if (args.size() != fn.params.size())
            throw EvalError("function takes " + std::to_string(fn.params.size()) +
                            " arguments, got " + std::to_string(args.size()));
        slots_.assign(fn.slot_names.size(), Value());
        bound_.assign(fn.slot_names.size(), false);
        for (std::size_t i = 0; i < args.size(); ++i) {
            slots_[i] = args[i];
            bound_[i] = true;
        }
        std::optional<Value> result = exec_block(fn.body);
        if (!result) throw EvalError("function returned no value");
        if (!result->is_number()) throw EvalError("priority function must return a number");
        double v = result->number();
        if (std::isnan(v)) throw EvalError("priority function returned NaN");
        return v;
    }

private:
    const Module& module_;
    std::uint64_t max_steps_;
    std::uint64_t steps_ = 0;
    std::vector<Value> slots_;
    std::vector<bool> bound_;

    void tick() {
        if (++steps_ > max_steps_) throw EvalTimeout("step budget exceeded");
    }

    const Value& load(int slot, const std::string& name) {
        if (!bound_[static_cast<std::size_t>(slot)])
            throw EvalError("undefined identifier '" + name + "'");
        return slots_[static_cast<std::size_t>(slot)];
    }

    void store(int slot, Value v) {
        slots_[static_cast<std::size_t>(slot)] = std::move(v);
        bound_[static_cast<std::size_t>(slot)] = true;
    }

    std::optional<Value> exec_block(const Block& body) {
        for (const auto& s : body) {
            std::optional<Value> r = exec_stmt(*s);
            if (r) return r;
        }
        return std::nullopt;
    }

    std::optional<Value> exec_stmt(const Stmt& s) {
        tick();
        switch (s.kind) {
        case Stmt::Kind::Assign:
            store(s.slot, eval(*s.value));
            return std::nullopt;
        case Stmt::Kind::AugAssign: {
            const Value& old = load(s.slot, s.name);
            store(s.slot, binary(s.aug, old, eval(*s.value)));
            return std::nullopt;
        }
        case Stmt::Kind::Return:
            return eval(*s.value);
        case Stmt::Kind::For:
            return exec_for(s);
        case Stmt::Kind::If:
            for (const auto& arm : s.arms) {
                if (eval(*arm.cond).truthy()) return exec_block(arm.body);
            }
            return exec_block(s.orelse);
        }
        return std::nullopt;
    }

    std::optional<Value> exec_for(const Stmt& s) {
        Value arg = eval(*s.iter);
        if (!s.iter_enumerate) {
            // for i in range(e)
            if (s.target_slots.size() != 1)
                throw EvalError("range() yields a single value per iteration");
            long long stop = to_index(arg, "range() argument");
            for (long long i = 0; i < stop; ++i) {
                tick();
                store(s.target_slots[0], Value(static_cast<double>(i)));
                std::optional<Value> r = exec_block(s.body);
                if (r) return r;
            }
            return std::nullopt;
        }
        // for [i, x] in enumerate(e)
        if (!arg.is_sequence()) throw EvalError("enumerate() argument is not iterable");
        const auto& items = arg.items();
        for (std::size_t i = 0; i < items.size(); ++i) {
            tick();
            if (s.target_slots.size() == 2) {
                store(s.target_slots[0], Value(static_cast<double>(i)));
                store(s.target_slots[1], items[i]);
            } else if (s.target_slots.size() == 1) {
                store(s.target_slots[0], Value::tuple({Value(static_cast<double>(i)), items[i]}));
            } else {
                throw EvalError("enumerate() yields two values per iteration");
            }
            std::optional<Value> r = exec_block(s.body);
            if (r) return r;
        }
        return std::nullopt;
    }

    static long long to_index(const Value& v, const char* what) {
        double x = v.number();
        double r = std::nearbyint(x);
        if (std::abs(x - r) > 1e-9) throw EvalError(std::string(what) + " is not an integer");
        return static_cast<long long>(r);
    }

    Value binary(BinOp op, const Value& a, const Value& b) {
        switch (op) {
        case BinOp::Add: return Value(a.number() + b.number());
        case BinOp::Sub: return Value(a.number() - b.number());
        case BinOp::Mul: return Value(a.number() * b.number());
        case BinOp::Div: {
            double d = b.number();
            if (d == 0.0) throw EvalError("division by zero");
            return Value(a.number() / d);
        }
        case BinOp::FloorDiv: return Value(py_floordiv(a.number(), b.number()));
        case BinOp::Mod: return Value(py_mod(a.number(), b.number()));
        case BinOp::Pow: return Value(py_pow(a.number(), b.number()));
        case BinOp::And: return Value(a.number() != 0.0 && b.number() != 0.0 ? 1.0 : 0.0);
        case BinOp::Or: return Value(a.number() != 0.0 || b.number() != 0.0 ? 1.0 : 0.0);
        }
        throw EvalError("bad operator");
    }

    Value compare(CmpOp op, const Value& a, const Value& b) {
        bool result;
        if (a.is_number() && b.is_number()) {
            double x = a.number(), y = b.number();
            switch (op) {
            case CmpOp::Eq: result = x == y; break;
            case CmpOp::Ne: result = x != y; break;
            case CmpOp::Lt: result = x < y; break;
            case CmpOp::Gt: result = x > y; break;
            case CmpOp::Le: result = x <= y; break;
            case CmpOp::Ge: result = x >= y; break;
            }
        } else if (a.is_string() && b.is_string()) {
            int c = a.str().compare(b.str());
            switch (op) {
            case CmpOp::Eq: result = c == 0; break;
            case CmpOp::Ne: result = c != 0; break;
            case CmpOp::Lt: result = c < 0; break;
            case CmpOp::Gt: result = c > 0; break;
            case CmpOp::Le: result = c <= 0; break;
            case CmpOp::Ge: result = c >= 0; break;
            }
        } else if (op == CmpOp::Eq) {
            result = a.equals(b);
        } else if (op == CmpOp::Ne) {
            result = !a.equals(b);
        } else {
            throw EvalError("unsupported comparison between mixed types");
        }
        return Value(result ? 1.0 : 0.0);
    }

    Value subscript(const Value& obj, const Value& idx) {
        long long i = to_index(idx, "subscript index");
        if (obj.is_sequence()) {
            const auto& items = obj.items();
            long long n = static_cast<long long>(items.size());
            if (i < 0) i += n;
            if (i < 0 || i >= n) throw EvalError("index out of range");
            return items[static_cast<std::size_t>(i)];
        }
        if (obj.is_string()) {
            const std::string& s = obj.str();
            long long n = static_cast<long long>(s.size());
            if (i < 0) i += n;
            if (i < 0 || i >= n) throw EvalError("index out of range");
            return Value(std::string(1, s[static_cast<std::size_t>(i)]));
        }
        throw EvalError("value is not subscriptable");
    }

    Value eval(const Expr& e) {
        tick();
        switch (e.kind) {
        case Expr::Kind::Number: return Value(e.number);
        case Expr::Kind::String: return Value(e.str);
        case Expr::Kind::Name: return load(e.slot, e.name);
        case Expr::Kind::ListLit: {
            std::vector<Value> items;
            items.reserve(e.items.size());
            for (const auto& it : e.items) items.push_back(eval(*it));
            return Value::list(std::move(items));
        }
        case Expr::Kind::TupleLit: {
            std::vector<Value> items;
            items.reserve(e.items.size());
            for (const auto& it : e.items) items.push_back(eval(*it));
            return Value::tuple(std::move(items));
        }
        case Expr::Kind::Subscript: return subscript(eval(*e.a), eval(*e.b));
        case Expr::Kind::Binary: return binary(e.bin, eval(*e.a), eval(*e.b));
        case Expr::Kind::Negate: return Value(-eval(*e.a).number());
        case Expr::Kind::BoolAnd: {
            if (!eval(*e.a).truthy()) return Value(0.0);
            return Value(eval(*e.b).truthy() ? 1.0 : 0.0);
        }
        case Expr::Kind::BoolOr: {
            if (eval(*e.a).truthy()) return Value(1.0);
            return Value(eval(*e.b).truthy() ? 1.0 : 0.0);
        }
        case Expr::Kind::Not: return Value(eval(*e.a).truthy() ? 0.0 : 1.0);
        case Expr::Kind::Compare: return compare(e.cmp, eval(*e.a), eval(*e.b));
        case Expr::Kind::Conditional:
            return eval(*e.cond).truthy() ? eval(*e.a) : eval(*e.b);
        case Expr::Kind::Call: return call(e);
        case Expr::Kind::Comprehension: return comprehension(e);
        case Expr::Kind::SiteRef:
            throw EvalError("cannot evaluate a tunable program; substitute a decision first");
        }
        throw EvalError("bad expression");
    }

    Value comprehension(const Expr& e) {
        Value iterable = eval(*e.b);
        if (!iterable.is_sequence()) throw EvalError("comprehension iterable is not a sequence");
        // The loop variable shadows any outer binding for the duration of
        // the comprehension, as in Python.
        std::size_t slot = static_cast<std::size_t>(e.target_slot);
        Value saved = slots_[slot];
        bool saved_bound = bound_[slot];
        std::vector<Value> items;
        for (const Value& item : iterable.items()) {
            tick();
            store(e.target_slot, item);
            if (e.cond && !eval(*e.cond).truthy()) continue;
            items.push_back(eval(*e.a));
        }
        slots_[slot] = std::move(saved);
        bound_[slot] = saved_bound;
        return e.comp_is_list ? Value::list(std::move(items)) : Value::tuple(std::move(items));
    }

    Value call(const Expr& e) {
        switch (e.builtin) {
        case BuiltinFn::Abs: return Value(std::abs(eval(*e.items[0]).number()));
        case BuiltinFn::Log: {
            double x = eval(*e.items[0]).number();
            if (x <= 0.0) throw EvalError("log() domain error");
            return Value(std::log(x));
        }
        case BuiltinFn::Log1p: {
            double x = eval(*e.items[0]).number();
            if (x <= -1.0) throw EvalError("log1p() domain error");
            return Value(std::log1p(x));
        }
        case BuiltinFn::Exp: return Value(std::exp(eval(*e.items[0]).number()));
        case BuiltinFn::Tanh: return Value(std::tanh(eval(*e.items[0]).number()));
        case BuiltinFn::Sqrt: {
            double x = eval(*e.items[0]).number();
            if (x < 0.0) throw EvalError("sqrt() domain error");
            return Value(std::sqrt(x));
        }
        case BuiltinFn::Len: {
            Value v = eval(*e.items[0]);
            if (v.is_sequence()) return Value(static_cast<double>(v.items().size()));
            if (v.is_string()) return Value(static_cast<double>(v.str().size()));
            throw EvalError("len() argument has no length");
        }
        case BuiltinFn::Sum: {
            Value v = eval(*e.items[0]);
            if (!v.is_sequence()) throw EvalError("sum() argument is not iterable");
            double acc = 0.0;
            for (const Value& item : v.items()) {
                tick();
                acc += item.number();
            }
            return Value(acc);
        }
        case BuiltinFn::Min:
        case BuiltinFn::Max: {
            bool want_min = e.builtin == BuiltinFn::Min;
            std::vector<Value> args;
            for (const auto& it : e.items) args.push_back(eval(*it));
            const std::vector<Value>* pool = &args;
            if (args.size() == 1) {
                if (!args[0].is_sequence())
                    throw EvalError("min()/max() single argument must be iterable");
                pool = &args[0].items();
                if (pool->empty()) throw EvalError("min()/max() of an empty sequence");
            }
            double best = (*pool)[0].number();
            for (const Value& v : *pool) {
                double x = v.number();
                if (want_min ? x < best : x > best) best = x;
            }
            return Value(best);
        }
        case BuiltinFn::Range: {
            long long stop = to_index(eval(*e.items[0]), "range() argument");
            std::vector<Value> items;
            for (long long i = 0; i < stop; ++i) {
                tick();
                items.push_back(Value(static_cast<double>(i)));
            }
            return Value::tuple(std::move(items));
        }
        case BuiltinFn::Enumerate: {
            Value v = eval(*e.items[0]);
            if (!v.is_sequence()) throw EvalError("enumerate() argument is not iterable");
            std::vector<Value> items;
            items.reserve(v.items().size());
            for (std::size_t i = 0; i < v.items().size(); ++i) {
                tick();
                items.push_back(Value::tuple({Value(static_cast<double>(i)), v.items()[i]}));
            }
            return Value::tuple(std::move(items));
        }
        }
        throw EvalError("bad builtin");
    }
};

} // namespace

double eval_priority(const ConcreteProgram& cp, std::span<const Value> args,
                     const EvalLimits& limits) {
    return Interpreter(*cp.module, limits).call_entry(args);
}

} // namespace tunesearch::priolang
