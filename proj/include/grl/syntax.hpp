// Concrete text syntax for terms plus the JSON problem-file format.
//
// Grammar (tokens are longest-match):
//   identifiers  [a-z][a-zA-Z0-9_]*     (`e` is reserved for the unit)
//   integers     [0-9]+                 (scalar position only; bare `0` is the constant)
//   operators    & | |> * \ / + - ~ ++ D ( )
// Precedence, high to low:
//   unary - ~ D ; * \ / (left) ; + - ++ (left) ; & (left) ; | (left) ; |> (right)
// `n*t` is integer scaling when `*`'s left operand is an integer literal.
// Sugar availability: + - scalar in LA*; ~ ++ D in MV*; core operators everywhere.
#pragma once

#include "grl/term.hpp"

#include <string>
#include <vector>

namespace grl {

struct ParseError {
    int line = 1;
    int column = 1;
    std::string message;
    std::vector<std::string> expected;
};

class ParseException : public std::runtime_error {
  public:
    explicit ParseException(ParseError err);
    const ParseError& error() const { return err_; }

  private:
    ParseError err_;
};

TermPtr parse_term(const std::string& src, Sig sig);

// Pretty-printer; parse_term(print_term(t, sig), sig) is structurally equal
// to t. Minimal parentheses except that mixed product/residual chains are
// always parenthesized.
std::string print_term(const TermPtr& t, Sig sig);
std::string print_conclusion(const Conclusion& c, Sig sig);

// LA sugar layer: group-notation text (+, binary/unary -, scalars).
// parse_term(to_la_sugar(t), la_sig) is NF-equal (not node-equal) to t,
// because a\b reads back asb + (a\e).
TermPtr from_la_sugar(const std::string& src, Sig sig = Sig::LA);
std::string to_la_sugar(const TermPtr& t);

// ---------------------------------------------------------------------------
// Problem files

enum class ProblemErrorCode { SchemaViolation, ParseFailure, UndeclaredVariable };

class ProblemIoError : public std::runtime_error {
  public:
    ProblemIoError(ProblemErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ProblemErrorCode code() const { return code_; }

  private:
    ProblemErrorCode code_;
};

struct Problem {
    Sig sig = Sig::LA;
    VarContext ctx;
    std::vector<TermPtr> premises;
    Conclusion conclusion;
};

Problem load_problem(const std::string& path);
Problem parse_problem_json(const std::string& json_text);

}  // namespace grl
