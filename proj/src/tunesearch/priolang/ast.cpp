#include "tunesearch/priolang/ast.hpp"

namespace tunesearch::priolang {

ExprPtr Expr::clone() const {
    auto e = std::make_unique<Expr>(kind);
    e->number = number;
    e->str = str;
    e->name = name;
    e->slot = slot;
    for (const auto& it : items) e->items.push_back(it->clone());
    if (a) e->a = a->clone();
    if (b) e->b = b->clone();
    if (cond) e->cond = cond->clone();
    e->bin = bin;
    e->cmp = cmp;
    e->builtin = builtin;
    e->target_name = target_name;
    e->target_slot = target_slot;
    e->comp_is_list = comp_is_list;
    e->site_id = site_id;
    return e;
}

Block clone_block(const Block& b) {
    Block out;
    out.reserve(b.size());
    for (const auto& s : b) out.push_back(s->clone());
    return out;
}

StmtPtr Stmt::clone() const {
    auto s = std::make_unique<Stmt>(kind);
    s->name = name;
    s->slot = slot;
    s->aug = aug;
    if (value) s->value = value->clone();
    s->target_names = target_names;
    s->target_slots = target_slots;
    s->iter_enumerate = iter_enumerate;
    if (iter) s->iter = iter->clone();
    s->body = clone_block(body);
    for (const auto& arm : arms) s->arms.push_back(IfArm{arm.cond->clone(), clone_block(arm.body)});
    s->orelse = clone_block(orelse);
    return s;
}

Function Function::clone() const {
    Function f;
    f.name = name;
    f.params = params;
    f.return_annotation = return_annotation;
    f.slot_names = slot_names;
    f.body = clone_block(body);
    return f;
}

Module Module::clone() const {
    Module m;
    for (const auto& f : functions) m.functions.push_back(f.clone());
    return m;
}

} // namespace tunesearch::priolang
