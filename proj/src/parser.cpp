#include "grl/syntax.hpp"

#include <cctype>
#include <sstream>

namespace grl {

ParseException::ParseException(ParseError err)
    : std::runtime_error("parse error at " + std::to_string(err.line) + ":" +
                         std::to_string(err.column) + ": " + err.message),
      err_(std::move(err)) {}

namespace {

enum class Tok {
    Ident, Int, EConst, Amp, Bar, GuardOp, Star, Backslash, Slash,
    Plus, Minus, Tilde, PlusPlus, DeltaOp, LParen, RParen, End
};

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                      src_[pos_] == '\n' || src_[pos_] == '\r')) {
            if (src_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
            ++pos_;
        }
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_.kind = Tok::End;
            cur_.text = "<end>";
            return;
        }
        char c = src_[pos_];
        auto one = [&](Tok k, const char* txt) {
            cur_.kind = k;
            cur_.text = txt;
            ++pos_;
            ++col_;
        };
        if (std::islower(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            cur_.text = src_.substr(start, pos_ - start);
            col_ += static_cast<int>(pos_ - start);
            cur_.kind = cur_.text == "e" ? Tok::EConst : Tok::Ident;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            cur_.text = src_.substr(start, pos_ - start);
            col_ += static_cast<int>(pos_ - start);
            cur_.kind = Tok::Int;
            return;
        }
        switch (c) {
            case '&': one(Tok::Amp, "&"); return;
            case '|':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                    cur_.kind = Tok::GuardOp;
                    cur_.text = "|>";
                    pos_ += 2;
                    col_ += 2;
                } else {
                    one(Tok::Bar, "|");
                }
                return;
            case '*': one(Tok::Star, "*"); return;
            case '\\': one(Tok::Backslash, "\\"); return;
            case '/': one(Tok::Slash, "/"); return;
            case '+':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '+') {
                    cur_.kind = Tok::PlusPlus;
                    cur_.text = "++";
                    pos_ += 2;
                    col_ += 2;
                } else {
                    one(Tok::Plus, "+");
                }
                return;
            case '-': one(Tok::Minus, "-"); return;
            case '~': one(Tok::Tilde, "~"); return;
            case 'D': one(Tok::DeltaOp, "D"); return;
            case '(': one(Tok::LParen, "("); return;
            case ')': one(Tok::RParen, ")"); return;
            default: {
                ParseError err;
                err.line = line_;
                err.column = col_;
                err.message = std::string("unexpected character '") + c + "'";
                throw ParseException(err);
            }
        }
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_{};
};

// parse_unary may yield a bare integer literal; whether it denotes the
// constant 0 or a scalar multiplier is decided by the caller.
struct Operand {
    TermPtr term;             // null when intlit is set
    std::optional<long> intlit;
    int line = 1, col = 1;
};

class Parser {
  public:
    Parser(const std::string& src, Sig sig) : lex_(src), sig_(sig) {}

    TermPtr parse() {
        TermPtr t = parse_guard();
        expect_end();
        return t;
    }

  private:
    [[noreturn]] void fail(const Token& at, const std::string& msg,
                           std::vector<std::string> expected = {}) {
        ParseError err;
        err.line = at.line;
        err.column = at.col;
        err.message = msg;
        err.expected = std::move(expected);
        throw ParseException(err);
    }

    void expect_end() {
        if (lex_.peek().kind != Tok::End)
            fail(lex_.peek(), "trailing input '" + lex_.peek().text + "'", {"<end>"});
    }

    TermPtr parse_guard() {
        TermPtr l = parse_join();
        if (lex_.peek().kind == Tok::GuardOp) {
            Token op = lex_.take();
            if (!allows_guard(sig_))
                fail(op, std::string("'|>' is not available in signature ") + sig_name(sig_));
            return Term::guard(l, parse_guard());  // right-assoc
        }
        return l;
    }

    TermPtr parse_join() {
        TermPtr acc = parse_meet();
        while (lex_.peek().kind == Tok::Bar) {
            lex_.take();
            acc = Term::join(acc, parse_meet());
        }
        return acc;
    }

    TermPtr parse_meet() {
        TermPtr acc = parse_add();
        while (lex_.peek().kind == Tok::Amp) {
            lex_.take();
            acc = Term::meet(acc, parse_add());
        }
        return acc;
    }

    TermPtr parse_add() {
        Operand acc = parse_mul();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus || k == Tok::Minus) {
                Token op = lex_.take();
                if (!is_la(sig_))
                    fail(op, "'" + op.text + "' is LA sugar, not available in " +
                                 std::string(sig_name(sig_)));
                TermPtr rhs = to_term(parse_mul());
                TermPtr lhs = to_term(acc);
                acc = Operand{k == Tok::Plus ? Term::prod(lhs, rhs)
                                             : Term::prod(lhs, Term::lres(rhs, Term::e())),
                              std::nullopt, op.line, op.col};
            } else if (k == Tok::PlusPlus) {
                Token op = lex_.take();
                if (!is_mv(sig_))
                    fail(op, "'++' is MV sugar, not available in " + std::string(sig_name(sig_)));
                TermPtr rhs = to_term(parse_mul());
                TermPtr lhs = to_term(acc);
                acc = Operand{Term::lres(Term::lres(lhs, Term::zero()), rhs), std::nullopt,
                              op.line, op.col};
            } else {
                break;
            }
        }
        return to_term(acc);
    }

    Operand parse_mul() {
        Operand acc = parse_unary();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k != Tok::Star && k != Tok::Backslash && k != Tok::Slash) break;
            Token op = lex_.take();
            Operand rhs = parse_unary();
            if (k == Tok::Star && acc.intlit) {
                if (!is_la(sig_))
                    fail(op, "integer scaling is LA sugar, not available in " +
                                 std::string(sig_name(sig_)));
                acc = Operand{scalar(*acc.intlit, to_term(rhs)), std::nullopt, op.line, op.col};
                continue;
            }
            TermPtr l = to_term(acc);
            TermPtr r = to_term(rhs);
            TermPtr node = k == Tok::Star    ? Term::prod(l, r)
                           : k == Tok::Backslash ? Term::lres(l, r)
                                                 : Term::rres(l, r);
            acc = Operand{std::move(node), std::nullopt, op.line, op.col};
        }
        return acc;
    }

    Operand parse_unary() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Minus) {
            Token op = lex_.take();
            if (!is_la(sig_))
                fail(op, "unary '-' is LA sugar, not available in " + std::string(sig_name(sig_)));
            return Operand{Term::lres(to_term(parse_unary()), Term::e()), std::nullopt,
                           op.line, op.col};
        }
        if (t.kind == Tok::Tilde) {
            Token op = lex_.take();
            if (!is_mv(sig_))
                fail(op, "'~' is MV sugar, not available in " + std::string(sig_name(sig_)));
            return Operand{Term::lres(to_term(parse_unary()), Term::zero()), std::nullopt,
                           op.line, op.col};
        }
        if (t.kind == Tok::DeltaOp) {
            Token op = lex_.take();
            if (sig_ != Sig::MVGuard)
                fail(op, "'D' requires the MV_GUARD signature");
            return Operand{Term::delta(to_term(parse_unary())), std::nullopt, op.line, op.col};
        }
        return parse_atom();
    }

    Operand parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Ident: return Operand{Term::var(t.text), std::nullopt, t.line, t.col};
            case Tok::EConst: return Operand{Term::e(), std::nullopt, t.line, t.col};
            case Tok::Int: {
                long v = std::stol(t.text);
                return Operand{nullptr, v, t.line, t.col};
            }
            case Tok::LParen: {
                TermPtr inner = parse_guard();
                Token close = lex_.take();
                if (close.kind != Tok::RParen)
                    fail(close, "expected ')', got '" + close.text + "'", {")"});
                return Operand{inner, std::nullopt, t.line, t.col};
            }
            default:
                fail(t, "expected a term, got '" + t.text + "'",
                     {"identifier", "e", "0", "("});
        }
    }

    TermPtr to_term(const Operand& o) {
        if (o.term) return o.term;
        if (*o.intlit == 0) return Term::zero();
        Token at{Tok::Int, std::to_string(*o.intlit), o.line, o.col};
        fail(at, "integer literal is only valid as a scalar multiplier (n*t)");
    }

    // n*t: 0*t = e, 1*t = t, n*t = t * ((n-1)*t), so 2*x reads x*x.
    TermPtr scalar(long n, const TermPtr& t) {
        if (n == 0) return Term::e();
        TermPtr acc = t;
        for (long i = 1; i < n; ++i) acc = Term::prod(t, acc);
        return acc;
    }

    Lexer lex_;
    Sig sig_;
};

}  // namespace

TermPtr parse_term(const std::string& src, Sig sig) { return Parser(src, sig).parse(); }

TermPtr from_la_sugar(const std::string& src, Sig sig) {
    if (!is_la(sig)) throw std::invalid_argument("from_la_sugar: LA signature required");
    return parse_term(src, sig);
}

}  // namespace grl
