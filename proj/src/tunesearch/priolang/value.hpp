#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tunesearch/common/errors.hpp"

namespace tunesearch::priolang {

// Runtime error raised while evaluating a program (bad index, division by
// zero, undefined name, type misuse). Programs that raise are scored invalid.
struct EvalError : Error {
    using Error::Error;
};

// Step budget exceeded.
struct EvalTimeout : EvalError {
    using EvalError::EvalError;
};

// Tagged runtime value: number, string, tuple or list. The grammar has no
// mutation of container contents, so both sequence kinds share immutable
// storage and differ only in their tag.
class Value {
public:
    enum class Kind { Number, String, Tuple, List };

    Value() : kind_(Kind::Number), num_(0.0) {}
    explicit Value(double v) : kind_(Kind::Number), num_(v) {}
    explicit Value(std::string s) : kind_(Kind::String), str_(std::make_shared<std::string>(std::move(s))) {}

    static Value tuple(std::vector<Value> items) {
        return Value(Kind::Tuple, std::make_shared<std::vector<Value>>(std::move(items)));
    }
    static Value list(std::vector<Value> items) {
        return Value(Kind::List, std::make_shared<std::vector<Value>>(std::move(items)));
    }

    Kind kind() const { return kind_; }
    bool is_number() const { return kind_ == Kind::Number; }
    bool is_string() const { return kind_ == Kind::String; }
    bool is_sequence() const { return kind_ == Kind::Tuple || kind_ == Kind::List; }

    double number() const {
        if (!is_number()) throw EvalError("non-numeric operand to arithmetic");
        return num_;
    }
    const std::string& str() const { return *str_; }
    const std::vector<Value>& items() const { return *items_; }

    bool truthy() const {
        switch (kind_) {
        case Kind::Number: return num_ != 0.0;
        case Kind::String: return !str_->empty();
        default: return !items_->empty();
        }
    }

    bool equals(const Value& o) const {
        if (kind_ == Kind::Number && o.kind_ == Kind::Number) return num_ == o.num_;
        if (kind_ == Kind::String && o.kind_ == Kind::String) return *str_ == *o.str_;
        if (is_sequence() && o.is_sequence()) {
            const auto& a = *items_;
            const auto& b = *o.items_;
            if (a.size() != b.size()) return false;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (!a[i].equals(b[i])) return false;
            return true;
        }
        return false;
    }

private:
    Value(Kind k, std::shared_ptr<std::vector<Value>> items) : kind_(k), items_(std::move(items)) {}

    Kind kind_;
    double num_ = 0.0;
    std::shared_ptr<std::string> str_;
    std::shared_ptr<std::vector<Value>> items_;
};

} // namespace tunesearch::priolang
