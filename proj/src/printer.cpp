#include "grl/syntax.hpp"

#include <sstream>

namespace grl {

namespace {

// Precedence levels used by the core printer; smaller binds tighter.
// atoms 0, unary 2, mul 3, meet 5, join 6, guard 7.
int prec_of(const TermPtr& t) {
    switch (t->kind()) {
        case Kind::Var:
        case Kind::E:
        case Kind::Zero: return 0;
        case Kind::Delta: return 2;
        case Kind::Prod:
        case Kind::LRes:
        case Kind::RRes: return 3;
        case Kind::Meet: return 5;
        case Kind::Join: return 6;
        case Kind::Guard: return 7;
    }
    return 0;
}

const char* op_text(Kind k) {
    switch (k) {
        case Kind::Meet: return " & ";
        case Kind::Join: return " | ";
        case Kind::Prod: return "*";
        case Kind::LRes: return "\\";
        case Kind::RRes: return "/";
        case Kind::Guard: return " |> ";
        default: return "?";
    }
}

void print_rec(std::ostringstream& out, const TermPtr& t, int parent_prec, bool right_side) {
    int p = prec_of(t);
    // Left-assoc levels need parens on an equal-precedence right child; the
    // right-assoc guard needs them on an equal-precedence left child. Mixed
    // mul-level chains are always parenthesized.
    bool parens = p > parent_prec ||
                  (p == parent_prec && (t->kind() == Kind::Guard ? !right_side : right_side));
    if (parens) out << '(';
    switch (t->kind()) {
        case Kind::Var: out << t->name(); break;
        case Kind::E: out << 'e'; break;
        case Kind::Zero: out << '0'; break;
        case Kind::Delta:
            out << "D ";
            print_rec(out, t->left(), 2, false);
            break;
        case Kind::Prod:
        case Kind::LRes:
        case Kind::RRes: {
            auto mul_child = [&](const TermPtr& c, bool rhs) {
                bool mixed = prec_of(c) == 3 && c->kind() != t->kind();
                print_rec(out, c, mixed ? 0 : 3, rhs);
            };
            mul_child(t->left(), false);
            out << op_text(t->kind());
            mul_child(t->right(), true);
            break;
        }
        default:
            print_rec(out, t->left(), p, false);
            out << op_text(t->kind());
            print_rec(out, t->right(), p, true);
            break;
    }
    if (parens) out << ')';
}

}  // namespace

std::string print_term(const TermPtr& t, Sig /*sig*/) {
    std::ostringstream out;
    print_rec(out, t, 100, false);
    return out.str();
}

std::string print_conclusion(const Conclusion& c, Sig sig) {
    return c.is_lambda() ? "LAMBDA" : print_term(c.term, sig);
}

namespace {

// LA sugar printer. Levels: atoms 0, unary - 2, +/- 4, & 5, | 6, |> 7.
int sugar_prec(const TermPtr& t) {
    switch (t->kind()) {
        case Kind::Var:
        case Kind::E:
        case Kind::Zero: return 0;
        case Kind::Prod:
        case Kind::RRes: return 4;
        case Kind::LRes:
            return t->right()->kind() == Kind::E ? 2 : 4;  // a\e prints as -a
        case Kind::Meet: return 5;
        case Kind::Join: return 6;
        case Kind::Guard: return 7;
        case Kind::Delta: return 2;
    }
    return 0;
}

void sugar_rec(std::ostringstream& out, const TermPtr& t, int parent_prec, bool right_side) {
    int p = sugar_prec(t);
    bool parens = p > parent_prec || (p == parent_prec && right_side);
    if (parens) out << '(';
    switch (t->kind()) {
        case Kind::Var: out << t->name(); break;
        case Kind::E: out << 'e'; break;
        case Kind::Zero: out << '0'; break;
        case Kind::Prod:
            sugar_rec(out, t->left(), 4, false);
            out << " + ";
            sugar_rec(out, t->right(), 4, true);
            break;
        case Kind::LRes:
            if (t->right()->kind() == Kind::E) {  // a\e = -a
                out << '-';
                sugar_rec(out, t->left(), 2, false);
            } else {  // a\b = b - a
                sugar_rec(out, t->right(), 4, false);
                out << " - ";
                sugar_rec(out, t->left(), 4, true);
            }
            break;
        case Kind::RRes:  // a/b = a - b
            sugar_rec(out, t->left(), 4, false);
            out << " - ";
            sugar_rec(out, t->right(), 4, true);
            break;
        case Kind::Meet:
            sugar_rec(out, t->left(), 5, false);
            out << " & ";
            sugar_rec(out, t->right(), 5, true);
            break;
        case Kind::Join:
            sugar_rec(out, t->left(), 6, false);
            out << " | ";
            sugar_rec(out, t->right(), 6, true);
            break;
        case Kind::Guard:
            sugar_rec(out, t->left(), 7, true);  // right-assoc: parens on equal left
            out << " |> ";
            sugar_rec(out, t->right(), 7, false);
            break;
        case Kind::Delta:
            throw std::invalid_argument("to_la_sugar: Delta is not an LA term");
    }
    if (parens) out << ')';
}

}  // namespace

std::string to_la_sugar(const TermPtr& t) {
    std::ostringstream out;
    sugar_rec(out, t, 100, false);
    return out.str();
}

}  // namespace grl
