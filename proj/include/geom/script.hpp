#pragma once

#include "geom/measure.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace geom {

struct ParseError {
    std::string message;
    int line = 0;
    int col = 0;
};

struct Expr {
    enum class Kind { Name, Call, PointLit, Number };
    Kind kind = Kind::Name;
    std::string name;        // Name / Call head
    std::vector<Expr> args;  // Call arguments or the three point coordinates
    Rational number;
    int line = 0, col = 0;
};

struct Statement {
    enum class Kind { Decl, Assert, Emit };
    Kind kind = Kind::Decl;
    std::string name;        // Decl: target; Assert: predicate name
    Expr expr;               // Decl right-hand side
    std::vector<Expr> args;  // Assert arguments
    std::optional<unsigned> precision;  // statement-level ~m suffix
    std::string path;        // Emit: output path
    std::string plane_name;  // Emit: drawing plane
    int line = 0;
};

struct Script {
    std::vector<Statement> statements;
};

// line-oriented grammar:
//   point NAME = (r, r, r)
//   NAME = constr(args...) [~m]
//   assert PRED args... [~m]
//   emit svg PATH plane NAME
// '#' starts a comment; rationals are p/q or integers
Script parse_script(const std::string& text);  // throws ParseError
std::string print_script(const Script& s);
bool script_equal(const Script& a, const Script& b);

using Value = std::variant<Rational, Point, Line, Plane, Ray, Segment, Angle, LineFrame,
                           Isometry, Similarity, Measurement>;

struct StatementOutcome {
    int index = 0;
    int line = 0;
    std::string kind;    // "decl" | "assert" | "emit"
    std::string text;    // printed statement
    bool ok = true;
    std::string detail;  // value rendering or failure reason
};

struct RunReport {
    std::vector<StatementOutcome> statements;
    unsigned precision = kDefaultOrder;
    int asserts = 0;
    int assert_failures = 0;
    int errors = 0;
    bool pass() const { return assert_failures == 0 && errors == 0; }
};

struct ExecOptions {
    unsigned precision = kDefaultOrder;
    std::string svg_override;  // when nonempty, every emit writes here
    bool write_files = true;   // disable for dry runs
};

RunReport exec_script(const Script& s, const ExecOptions& opt = {});

std::string value_str(const Value& v);

}  // namespace geom
