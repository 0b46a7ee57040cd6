#include "grl/qf_formula.hpp"

#include "grl/syntax.hpp"

#include <sstream>

namespace grl {

QFPtr QF::lit(LitRel rel, TermPtr lhs, TermPtr rhs) {
    return std::make_shared<QF>(Kind::Lit, rel, std::move(lhs), std::move(rhs), nullptr,
                                nullptr);
}
QFPtr QF::conj(QFPtr l, QFPtr r) {
    return std::make_shared<QF>(Kind::And, LitRel::Eq, nullptr, nullptr, std::move(l),
                                std::move(r));
}
QFPtr QF::disj(QFPtr l, QFPtr r) {
    return std::make_shared<QF>(Kind::Or, LitRel::Eq, nullptr, nullptr, std::move(l),
                                std::move(r));
}
QFPtr QF::neg(QFPtr f) {
    return std::make_shared<QF>(Kind::Not, LitRel::Eq, nullptr, nullptr, std::move(f), nullptr);
}
QFPtr QF::top() {
    static const QFPtr t =
        std::make_shared<QF>(Kind::True, LitRel::Eq, nullptr, nullptr, nullptr, nullptr);
    return t;
}
QFPtr QF::bot() {
    static const QFPtr f =
        std::make_shared<QF>(Kind::False, LitRel::Eq, nullptr, nullptr, nullptr, nullptr);
    return f;
}

QFPtr QF::conj_all(const std::vector<QFPtr>& fs) {
    if (fs.empty()) return top();
    QFPtr acc = fs[0];
    for (size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
    return acc;
}

QFPtr QF::disj_all(const std::vector<QFPtr>& fs) {
    if (fs.empty()) return bot();
    QFPtr acc = fs[0];
    for (size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
    return acc;
}

std::set<std::string> qf_free_vars(const QFPtr& f) {
    std::set<std::string> out;
    std::function<void(const QFPtr&)> walk = [&](const QFPtr& g) {
        if (!g) return;
        if (g->kind() == QF::Kind::Lit) {
            collect_free_vars(g->lhs(), out);
            collect_free_vars(g->rhs(), out);
            return;
        }
        walk(g->left());
        walk(g->right());
    };
    walk(f);
    return out;
}

LiteralConjunction LiteralConjunction::from_literals(const std::vector<Literal>& lits) {
    LiteralConjunction out;
    auto pos = [&out](LitRel rel, const TermPtr& l, const TermPtr& r) {
        out.positive.push_back(Literal{rel, l, r, false});
    };
    auto neg_eq = [&out](const TermPtr& l, const TermPtr& r) {
        out.negative.push_back(Literal{LitRel::Eq, l, r, true});
    };
    for (const auto& lit : lits) {
        if (!lit.negated) {
            switch (lit.rel) {
                case LitRel::Eq: pos(LitRel::Eq, lit.lhs, lit.rhs); break;
                case LitRel::Le: pos(LitRel::Le, lit.lhs, lit.rhs); break;
                case LitRel::Lt:
                    pos(LitRel::Le, lit.lhs, lit.rhs);
                    neg_eq(lit.lhs, lit.rhs);
                    break;
            }
        } else {
            switch (lit.rel) {
                case LitRel::Eq: neg_eq(lit.lhs, lit.rhs); break;
                case LitRel::Le:  // !(s<=t) = t<s
                    pos(LitRel::Le, lit.rhs, lit.lhs);
                    neg_eq(lit.rhs, lit.lhs);
                    break;
                case LitRel::Lt:  // !(s<t) = t<=s
                    pos(LitRel::Le, lit.rhs, lit.lhs);
                    break;
            }
        }
    }
    return out;
}

QFPtr LiteralConjunction::to_formula() const {
    std::vector<QFPtr> parts;
    for (const auto& l : positive) parts.push_back(QF::lit(l.rel, l.lhs, l.rhs));
    for (const auto& l : negative) parts.push_back(QF::neg(QF::lit(l.rel, l.lhs, l.rhs)));
    return QF::conj_all(parts);
}

QFPtr LiteralConjunction::positive_formula() const {
    std::vector<QFPtr> parts;
    for (const auto& l : positive) parts.push_back(QF::lit(l.rel, l.lhs, l.rhs));
    return QF::conj_all(parts);
}

std::set<std::string> LiteralConjunction::vars() const {
    std::set<std::string> out;
    for (const auto& l : positive) {
        collect_free_vars(l.lhs, out);
        collect_free_vars(l.rhs, out);
    }
    for (const auto& l : negative) {
        collect_free_vars(l.lhs, out);
        collect_free_vars(l.rhs, out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text parsing: formula connectives are split textually at paren depth 0;
// term fragments are handed to parse_term.

namespace {

[[noreturn]] void qf_fail(const std::string& src, const std::string& msg) {
    ParseError err;
    err.message = msg + " in \"" + src + "\"";
    throw ParseException(err);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Split at top-level occurrences of a two-character operator.
std::vector<std::string> split_top(const std::string& s, const std::string& op) {
    std::vector<std::string> parts;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i + op.size() <= s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && s.compare(i, op.size(), op) == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + op.size();
            i += op.size() - 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

bool has_top_level_formula_op(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0) {
            if (c == '!' || c == '=') return true;
            if (c == '<') return true;
            if (c == '&' && i + 1 < s.size() && s[i + 1] == '&') return true;
            if (c == '|' && i + 1 < s.size() && s[i + 1] == '|') return true;
        }
    }
    return false;
}

QFPtr parse_or(const std::string& src, Sig sig);

QFPtr parse_not(const std::string& raw, Sig sig) {
    std::string s = trim(raw);
    if (s.empty()) qf_fail(raw, "empty formula");
    if (s[0] == '!') return QF::neg(parse_not(s.substr(1), sig));
    if (s == "true") return QF::top();
    if (s == "false") return QF::bot();
    if (s[0] == '(') {
        int depth = 0;
        size_t close = std::string::npos;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            else if (s[i] == ')' && --depth == 0) {
                close = i;
                break;
            }
        }
        if (close == s.size() - 1) {
            std::string inner = s.substr(1, close - 1);
            if (has_top_level_formula_op(inner)) return parse_or(inner, sig);
        }
    }
    // literal: first top-level relation
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0) {
            LitRel rel;
            size_t len = 0;
            if (c == '=' && i + 1 < s.size() && s[i + 1] == '=') {
                rel = LitRel::Eq;
                len = 2;
            } else if (c == '<' && i + 1 < s.size() && s[i + 1] == '=') {
                rel = LitRel::Le;
                len = 2;
            } else if (c == '<') {
                rel = LitRel::Lt;
                len = 1;
            } else {
                continue;
            }
            TermPtr lhs = parse_term(trim(s.substr(0, i)), sig);
            TermPtr rhs = parse_term(trim(s.substr(i + len)), sig);
            return QF::lit(rel, std::move(lhs), std::move(rhs));
        }
    }
    qf_fail(raw, "expected a literal (term == term, term <= term, term < term)");
}

QFPtr parse_and(const std::string& src, Sig sig) {
    std::vector<QFPtr> parts;
    for (const auto& p : split_top(src, "&&")) parts.push_back(parse_not(p, sig));
    return QF::conj_all(parts);
}

QFPtr parse_or(const std::string& src, Sig sig) {
    std::vector<QFPtr> parts;
    for (const auto& p : split_top(src, "||")) parts.push_back(parse_and(p, sig));
    return QF::disj_all(parts);
}

}  // namespace

QFPtr parse_qf(const std::string& src, Sig sig) { return parse_or(src, sig); }

LiteralConjunction parse_literal_conjunction(const std::string& src, Sig sig) {
    std::vector<Literal> lits;
    for (const auto& part : split_top(src, "&&")) {
        std::string s = trim(part);
        bool negated = false;
        while (!s.empty() && s[0] == '!') {
            negated = !negated;
            s = trim(s.substr(1));
        }
        QFPtr f = parse_not(s, sig);
        if (f->kind() != QF::Kind::Lit)
            qf_fail(src, "expected a conjunction of literals");
        lits.push_back(Literal{f->rel(), f->lhs(), f->rhs(), negated});
    }
    return LiteralConjunction::from_literals(lits);
}

namespace {

const char* rel_text(LitRel r) {
    switch (r) {
        case LitRel::Eq: return " == ";
        case LitRel::Le: return " <= ";
        case LitRel::Lt: return " < ";
    }
    return "?";
}

// precedence: atoms 0, ! 1, && 2, || 3
void print_rec(std::ostringstream& out, const QFPtr& f, Sig sig, int parent) {
    int prec = 0;
    switch (f->kind()) {
        case QF::Kind::Not: prec = 1; break;
        case QF::Kind::And: prec = 2; break;
        case QF::Kind::Or: prec = 3; break;
        default: prec = 0;
    }
    bool parens = prec > parent;
    if (parens) out << '(';
    switch (f->kind()) {
        case QF::Kind::True: out << "true"; break;
        case QF::Kind::False: out << "false"; break;
        case QF::Kind::Lit:
            out << print_term(f->lhs(), sig) << rel_text(f->rel())
                << print_term(f->rhs(), sig);
            break;
        case QF::Kind::Not:
            out << '!';
            print_rec(out, f->left(), sig, 0);
            break;
        case QF::Kind::And:
            print_rec(out, f->left(), sig, 2);
            out << " && ";
            print_rec(out, f->right(), sig, 2);
            break;
        case QF::Kind::Or:
            print_rec(out, f->left(), sig, 3);
            out << " || ";
            print_rec(out, f->right(), sig, 3);
            break;
    }
    if (parens) out << ')';
}

}  // namespace

std::string print_qf(const QFPtr& f, Sig sig) {
    std::ostringstream out;
    print_rec(out, f, sig, 100);
    return out.str();
}

}  // namespace grl
