#include "tunesearch/priolang/program.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tunesearch::priolang {

namespace {

void check_decision(const TunableProgram& tp, const DecisionVector& dv) {
    if (dv.indices.size() != tp.sites.size())
        throw std::out_of_range("decision vector length " + std::to_string(dv.indices.size()) +
                                " does not match site count " + std::to_string(tp.sites.size()));
    for (std::size_t i = 0; i < dv.indices.size(); ++i) {
        int idx = dv.indices[i];
        if (idx < 0 || static_cast<std::size_t>(idx) >= tp.sites[i].options.size())
            throw std::out_of_range("option index " + std::to_string(idx) +
                                    " out of range for site " + std::to_string(i));
    }
}

// Replaces each site's span in the original text. Sites are stored in
// source order, so a single left-to-right pass suffices.
std::string splice(const std::string& text, const std::vector<TunableSite>& sites,
                   const std::vector<std::string>& replacements) {
    std::string out;
    out.reserve(text.size());
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        out.append(text, cursor, sites[i].span_begin - cursor);
        out += replacements[i];
        cursor = sites[i].span_end;
    }
    out.append(text, cursor, text.size() - cursor);
    return out;
}

ExprPtr literal_expr(const TunableOption& opt) {
    if (opt.value.is_string()) {
        auto e = std::make_unique<Expr>(Expr::Kind::String);
        e->str = opt.value.str();
        return e;
    }
    double v = opt.value.number();
    auto num = std::make_unique<Expr>(Expr::Kind::Number);
    if (std::signbit(v)) {
        num->number = -v;
        auto neg = std::make_unique<Expr>(Expr::Kind::Negate);
        neg->a = std::move(num);
        return neg;
    }
    num->number = v;
    return num;
}

void replace_sites(Expr& e, const TunableProgram& tp, const DecisionVector& dv) {
    for (auto& item : e.items) {
        if (item->kind == Expr::Kind::SiteRef) {
            item = literal_expr(tp.sites[item->site_id].options[dv.indices[item->site_id]]);
        } else {
            replace_sites(*item, tp, dv);
        }
    }
    for (ExprPtr* child : {&e.a, &e.b, &e.cond}) {
        if (!*child) continue;
        if ((*child)->kind == Expr::Kind::SiteRef) {
            *child = literal_expr(tp.sites[(*child)->site_id].options[dv.indices[(*child)->site_id]]);
        } else {
            replace_sites(**child, tp, dv);
        }
    }
}

void replace_sites(Block& body, const TunableProgram& tp, const DecisionVector& dv);

void replace_in_value(ExprPtr& value, const TunableProgram& tp, const DecisionVector& dv) {
    if (!value) return;
    if (value->kind == Expr::Kind::SiteRef) {
        value = literal_expr(tp.sites[value->site_id].options[dv.indices[value->site_id]]);
    } else {
        replace_sites(*value, tp, dv);
    }
}

void replace_sites(Stmt& s, const TunableProgram& tp, const DecisionVector& dv) {
    replace_in_value(s.value, tp, dv);
    replace_in_value(s.iter, tp, dv);
    replace_sites(s.body, tp, dv);
    for (auto& arm : s.arms) {
        replace_in_value(arm.cond, tp, dv);
        replace_sites(arm.body, tp, dv);
    }
    replace_sites(s.orelse, tp, dv);
}

void replace_sites(Block& body, const TunableProgram& tp, const DecisionVector& dv) {
    for (auto& s : body) replace_sites(*s, tp, dv);
}

} // namespace

BigInt solution_space_size(const TunableProgram& tp) {
    BigInt size = 1;
    for (const TunableSite& site : tp.sites) size *= static_cast<unsigned>(site.options.size());
    return size;
}

ConcreteProgram substitute(const TunableProgram& tp, const DecisionVector& dv) {
    check_decision(tp, dv);

    std::vector<std::string> replacements;
    replacements.reserve(tp.sites.size());
    for (std::size_t i = 0; i < tp.sites.size(); ++i)
        replacements.push_back(tp.sites[i].options[dv.indices[i]].lexeme);

    auto module = std::make_shared<Module>(tp.module->clone());
    for (Function& fn : module->functions) replace_sites(fn.body, tp, dv);

    ConcreteProgram cp;
    cp.text = splice(tp.source.text, tp.sites, replacements);
    cp.function_name = tp.function_name;
    cp.module = std::move(module);
    cp.decision = dv;
    return cp;
}

SourceProgram compact(const TunableProgram& tp, const std::vector<DecisionVector>& kept) {
    if (kept.empty()) throw Error("compact requires at least one kept decision");
    for (const DecisionVector& dv : kept) check_decision(tp, dv);

    std::vector<std::string> replacements;
    replacements.reserve(tp.sites.size());
    for (std::size_t i = 0; i < tp.sites.size(); ++i) {
        std::set<int> chosen;
        for (const DecisionVector& dv : kept) chosen.insert(dv.indices[i]);
        if (chosen.size() == 1) {
            replacements.push_back(tp.sites[i].options[*chosen.begin()].lexeme);
        } else {
            std::string call = "tunable([";
            bool first = true;
            for (int idx : chosen) { // std::set iterates in option order
                if (!first) call += ", ";
                first = false;
                call += tp.sites[i].options[idx].lexeme;
            }
            call += "])";
            replacements.push_back(std::move(call));
        }
    }
    return SourceProgram{splice(tp.source.text, tp.sites, replacements), Origin::Compacted};
}

} // namespace tunesearch::priolang
