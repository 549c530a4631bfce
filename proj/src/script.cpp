#include "geom/script.hpp"

#include "geom/svg.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace geom {

namespace {

// ---- lexer ------------------------------------------------------------

struct Token {
    enum class Kind { Ident, Number, LParen, RParen, Comma, Equals, Tilde, End };
    Kind kind = Kind::End;
    std::string text;
    Rational number;
    int col = 0;
};

struct Lexer {
    const std::string& src;
    int line;
    size_t pos = 0;

    Lexer(const std::string& s, int l) : src(s), line(l) {}

    [[noreturn]] void fail(const std::string& msg, int col) const {
        throw ParseError{msg, line, col};
    }

    Token next() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
        Token t;
        t.col = static_cast<int>(pos) + 1;
        if (pos >= src.size() || src[pos] == '#') {
            t.kind = Token::Kind::End;
            return t;
        }
        char c = src[pos];
        if (c == '(') { ++pos; t.kind = Token::Kind::LParen; t.text = "("; return t; }
        if (c == ')') { ++pos; t.kind = Token::Kind::RParen; t.text = ")"; return t; }
        if (c == ',') { ++pos; t.kind = Token::Kind::Comma; t.text = ","; return t; }
        if (c == '=') { ++pos; t.kind = Token::Kind::Equals; t.text = "="; return t; }
        if (c == '~') { ++pos; t.kind = Token::Kind::Tilde; t.text = "~"; return t; }
        if (c == '-' || (c >= '0' && c <= '9')) {
            size_t start = pos;
            if (c == '-') ++pos;
            while (pos < src.size() && src[pos] >= '0' && src[pos] <= '9') ++pos;
            if (pos < src.size() && src[pos] == '/') {
                size_t slash = pos;
                ++pos;
                size_t dstart = pos;
                while (pos < src.size() && src[pos] >= '0' && src[pos] <= '9') ++pos;
                if (pos == dstart) fail("missing denominator", static_cast<int>(slash) + 2);
            }
            t.text = src.substr(start, pos - start);
            auto r = rat_parse(t.text);
            if (!r) fail("malformed rational or zero denominator: '" + t.text + "'", t.col);
            t.kind = Token::Kind::Number;
            t.number = *r;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
                    src[pos] == '.' || src[pos] == '/'))
                ++pos;
            t.kind = Token::Kind::Ident;
            t.text = src.substr(start, pos - start);
            return t;
        }
        fail(std::string("unexpected character '") + c + "'", t.col);
    }
};

struct LineParser {
    std::vector<Token> toks;
    size_t i = 0;
    int line;

    LineParser(const std::string& src, int l) : line(l) {
        Lexer lex(src, l);
        for (;;) {
            Token t = lex.next();
            bool end = t.kind == Token::Kind::End;
            toks.push_back(std::move(t));
            if (end) break;
        }
    }

    const Token& peek() const { return toks[i]; }
    Token take() { return toks[i++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError{msg, line, peek().col};
    }

    Token expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k) fail("expected " + what + (peek().text.empty() ? "" : ", got '" + peek().text + "'"));
        return take();
    }

    bool at_end() const { return peek().kind == Token::Kind::End; }

    Expr parse_expr() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Number) {
            Expr e;
            e.kind = Expr::Kind::Number;
            e.number = take().number;
            e.line = line;
            e.col = t.col;
            return e;
        }
        if (t.kind == Token::Kind::LParen) {
            // point literal (r, r, r)
            Expr e;
            e.kind = Expr::Kind::PointLit;
            e.line = line;
            e.col = t.col;
            take();
            for (int k = 0; k < 3; ++k) {
                if (k > 0) expect(Token::Kind::Comma, "','");
                Token num = expect(Token::Kind::Number, "rational coordinate");
                Expr coord;
                coord.kind = Expr::Kind::Number;
                coord.number = num.number;
                coord.line = line;
                coord.col = num.col;
                e.args.push_back(std::move(coord));
            }
            expect(Token::Kind::RParen, "')'");
            return e;
        }
        if (t.kind == Token::Kind::Ident) {
            Token head = take();
            Expr e;
            e.line = line;
            e.col = head.col;
            e.name = head.text;
            if (peek().kind == Token::Kind::LParen) {
                e.kind = Expr::Kind::Call;
                take();
                if (peek().kind != Token::Kind::RParen) {
                    e.args.push_back(parse_expr());
                    while (peek().kind == Token::Kind::Comma) {
                        take();
                        e.args.push_back(parse_expr());
                    }
                }
                expect(Token::Kind::RParen, "')'");
            } else {
                e.kind = Expr::Kind::Name;
            }
            return e;
        }
        fail("expected expression");
    }
};

void collect_names(const Expr& e, std::vector<std::pair<std::string, int>>* out) {
    if (e.kind == Expr::Kind::Name) out->push_back({e.name, e.col});
    for (const auto& a : e.args) collect_names(a, out);
}

const std::set<std::string>& construction_names() {
    static const std::set<std::string> names = {
        "line", "plane", "ray", "segment", "seg", "angle", "midpoint", "bisector",
        "perp_at", "perp_from", "perp_bisector_plane", "parallel_through", "project_line",
        "project_plane", "reflect", "rotate", "translate", "invert", "homothety", "apply",
        "frame", "measure_len", "measure_angle"};
    return names;
}

const std::set<std::string>& predicate_names() {
    static const std::set<std::string> names = {"congruent", "between",  "collinear",
                                                "parallel",  "perpendicular", "midpoint",
                                                "len2_eq",   "len_eq",   "measure_in",
                                                "angle_sum_pi"};
    return names;
}

void check_calls(const Expr& e, int line) {
    if (e.kind == Expr::Kind::Call) {
        if (!construction_names().count(e.name))
            throw ParseError{"unknown construction '" + e.name + "'", line, e.col};
        for (const auto& a : e.args) check_calls(a, line);
    } else {
        for (const auto& a : e.args) check_calls(a, line);
    }
}

}  // namespace

Script parse_script(const std::string& text) {
    Script script;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::set<std::string> declared;
    while (std::getline(in, raw)) {
        ++lineno;
        LineParser p(raw, lineno);
        if (p.at_end()) continue;
        Token head = p.expect(Token::Kind::Ident, "statement");
        Statement st;
        st.line = lineno;
        if (head.text == "point") {
            Token name = p.expect(Token::Kind::Ident, "point name");
            p.expect(Token::Kind::Equals, "'='");
            st.kind = Statement::Kind::Decl;
            st.name = name.text;
            st.expr = p.parse_expr();
            if (st.expr.kind != Expr::Kind::PointLit && st.expr.kind != Expr::Kind::Call &&
                st.expr.kind != Expr::Kind::Name)
                p.fail("expected point literal or construction");
        } else if (head.text == "assert") {
            Token pred = p.expect(Token::Kind::Ident, "predicate name");
            if (!predicate_names().count(pred.text))
                throw ParseError{"unknown predicate '" + pred.text + "'", lineno, pred.col};
            st.kind = Statement::Kind::Assert;
            st.name = pred.text;
            while (!p.at_end() && p.peek().kind != Token::Kind::Tilde)
                st.args.push_back(p.parse_expr());
        } else if (head.text == "emit") {
            Token what = p.expect(Token::Kind::Ident, "'svg'");
            if (what.text != "svg") p.fail("only 'emit svg' is supported");
            Token path = p.expect(Token::Kind::Ident, "output path");
            Token kw = p.expect(Token::Kind::Ident, "'plane'");
            if (kw.text != "plane") p.fail("expected 'plane'");
            Token plane = p.expect(Token::Kind::Ident, "plane name");
            st.kind = Statement::Kind::Emit;
            st.path = path.text;
            st.plane_name = plane.text;
            if (!declared.count(plane.text))
                throw ParseError{"use of undeclared name '" + plane.text + "'", lineno, plane.col};
        } else {
            // NAME = construction(...)
            Token name = head;
            p.expect(Token::Kind::Equals, "'='");
            st.kind = Statement::Kind::Decl;
            st.name = name.text;
            st.expr = p.parse_expr();
        }
        // optional ~m suffix
        if (!p.at_end() && p.peek().kind == Token::Kind::Tilde) {
            p.take();
            Token m = p.expect(Token::Kind::Number, "precision order");
            if (den(m.number) != 1 || m.number < 0) p.fail("precision order must be a non-negative integer");
            st.precision = static_cast<unsigned>(num(m.number).convert_to<long>());
        }
        if (!p.at_end()) p.fail("trailing tokens");

        // static checks: known calls, single assignment, use-before-declare
        if (st.kind == Statement::Kind::Decl) {
            check_calls(st.expr, lineno);
            std::vector<std::pair<std::string, int>> refs;
            collect_names(st.expr, &refs);
            for (const auto& [n, col] : refs)
                if (!declared.count(n))
                    throw ParseError{"use of undeclared name '" + n + "'", lineno, col};
            if (declared.count(st.name))
                throw ParseError{"duplicate name '" + st.name + "'", lineno, head.col};
            declared.insert(st.name);
        } else if (st.kind == Statement::Kind::Assert) {
            for (const auto& a : st.args) {
                check_calls(a, lineno);
                std::vector<std::pair<std::string, int>> refs;
                collect_names(a, &refs);
                for (const auto& [n, col] : refs)
                    if (!declared.count(n))
                        throw ParseError{"use of undeclared name '" + n + "'", lineno, col};
            }
        }
        script.statements.push_back(std::move(st));
    }
    return script;
}

namespace {

std::string print_expr(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Name: return e.name;
        case Expr::Kind::Number: return rat_str(e.number);
        case Expr::Kind::PointLit: {
            std::string out = "(";
            for (size_t i = 0; i < e.args.size(); ++i) {
                if (i) out += ", ";
                out += rat_str(e.args[i].number);
            }
            return out + ")";
        }
        case Expr::Kind::Call: {
            std::string out = e.name + "(";
            for (size_t i = 0; i < e.args.size(); ++i) {
                if (i) out += ", ";
                out += print_expr(e.args[i]);
            }
            return out + ")";
        }
    }
    return "";
}

std::string print_statement(const Statement& st) {
    std::string out;
    switch (st.kind) {
        case Statement::Kind::Decl:
            if (st.expr.kind == Expr::Kind::PointLit) out = "point " + st.name + " = ";
            else out = st.name + " = ";
            out += print_expr(st.expr);
            break;
        case Statement::Kind::Assert:
            out = "assert " + st.name;
            for (const auto& a : st.args) out += " " + print_expr(a);
            break;
        case Statement::Kind::Emit:
            out = "emit svg " + st.path + " plane " + st.plane_name;
            break;
    }
    if (st.precision) out += " ~" + std::to_string(*st.precision);
    return out;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
    if (a.kind == Expr::Kind::Number && a.number != b.number) return false;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!expr_equal(a.args[i], b.args[i])) return false;
    return true;
}

}  // namespace

std::string print_script(const Script& s) {
    std::string out;
    for (const auto& st : s.statements) out += print_statement(st) + "\n";
    return out;
}

bool script_equal(const Script& a, const Script& b) {
    if (a.statements.size() != b.statements.size()) return false;
    for (size_t i = 0; i < a.statements.size(); ++i) {
        const Statement &x = a.statements[i], &y = b.statements[i];
        if (x.kind != y.kind || x.name != y.name || x.path != y.path ||
            x.plane_name != y.plane_name || x.precision != y.precision)
            return false;
        if (!expr_equal(x.expr, y.expr) || x.args.size() != y.args.size()) return false;
        for (size_t j = 0; j < x.args.size(); ++j)
            if (!expr_equal(x.args[j], y.args[j])) return false;
    }
    return true;
}

// ---- interpreter --------------------------------------------------------

namespace {

struct EvalError {
    std::string message;
};

struct Env {
    std::map<std::string, Value> names;
    unsigned precision = kDefaultOrder;
    std::optional<unsigned> stmt_precision;  // ~m on the current statement
    std::string note;  // records auxiliary choices made by a construction

    unsigned order() const { return stmt_precision.value_or(precision); }
};

[[noreturn]] void evfail(const std::string& msg) { throw EvalError{msg}; }

template <typename T>
const T* get_if_value(const Value& v) {
    return std::get_if<T>(&v);
}

Value eval_expr(const Expr& e, Env& env);

template <typename T>
T eval_as(const Expr& e, Env& env, const char* what) {
    Value v = eval_expr(e, env);
    if (const T* p = std::get_if<T>(&v)) return *p;
    evfail(std::string("expected ") + what);
}

Point eval_point(const Expr& e, Env& env) { return eval_as<Point>(e, env, "a point"); }

Segment eval_segment(const Expr& e, Env& env) { return eval_as<Segment>(e, env, "a segment"); }

Rational eval_rational(const Expr& e, Env& env) {
    if (e.kind == Expr::Kind::Number) return e.number;
    return eval_as<Rational>(e, env, "a rational");
}

Value eval_call(const Expr& e, Env& env) {
    const std::string& f = e.name;
    auto arity = [&](size_t n) {
        if (e.args.size() != n)
            evfail(f + ": expected " + std::to_string(n) + " arguments, got " +
                   std::to_string(e.args.size()));
    };
    if (f == "line") {
        arity(2);
        return line_through(eval_point(e.args[0], env), eval_point(e.args[1], env));
    }
    if (f == "plane") {
        arity(3);
        return plane_through(eval_point(e.args[0], env), eval_point(e.args[1], env),
                             eval_point(e.args[2], env));
    }
    if (f == "ray") {
        arity(2);
        return make_ray(eval_point(e.args[0], env), eval_point(e.args[1], env));
    }
    if (f == "segment" || f == "seg") {
        arity(2);
        Point a = eval_point(e.args[0], env), b = eval_point(e.args[1], env);
        if (a == b) evfail("segment: degenerate");
        return Segment{a, b};
    }
    if (f == "angle") {
        if (e.args.size() == 2) {
            // angle between two rays with a common origin
            Ray r1 = eval_as<Ray>(e.args[0], env, "a ray");
            Ray r2 = eval_as<Ray>(e.args[1], env, "a ray");
            if (r1.origin != r2.origin) evfail("angle: rays have different origins");
            return make_angle(r1.through, r1.origin, r2.through);
        }
        arity(3);
        return make_angle(eval_point(e.args[0], env), eval_point(e.args[1], env),
                          eval_point(e.args[2], env));
    }
    if (f == "midpoint") {
        arity(2);
        Point a = eval_point(e.args[0], env), b = eval_point(e.args[1], env);
        if (a == b) evfail("midpoint: degenerate segment");
        return a + rat(1, 2) * (b - a);
    }
    if (f == "bisector") {
        arity(3);
        Point a = eval_point(e.args[0], env), o = eval_point(e.args[1], env),
              b = eval_point(e.args[2], env);
        Angle ang = make_angle(a, o, b);
        if (ang.straight && !env.stmt_precision)
            evfail("bisector: straight angle requires an explicit ~m precision");
        Vec3 u = a - o, v = b - o;
        Rational ratio2 = norm2(v) / norm2(u);
        if (auto rho = rat_sqrt_exact(ratio2)) {
            Vec3 w = *rho * u + v;
            if (is_zero(w)) {
                // straight angle: bisect via an exact perpendicular, auxiliary
                // direction drawn from the fixed fallback basis
                bool use_x = !is_zero(cross(u, Vec3{1, 0, 0}));
                Vec3 n = use_x ? cross(u, Vec3{1, 0, 0}) : cross(u, Vec3{0, 1, 0});
                env.note = std::string("auxiliary basis vector ") + (use_x ? "(1,0,0)" : "(0,1,0)") +
                           " chosen for the straight-angle bisector";
                return make_ray(o, o + n);
            }
            return make_ray(o, o + w);
        }
        if (!env.stmt_precision)
            evfail("bisector: direction leaves Q^3; rerun with an explicit ~m suffix");
        // certified approximate bisector: dyadic approximation of |v|/|u|
        DyadicInterval iv = sqrt_enclose(ratio2, *env.stmt_precision);
        Vec3 w = dyadic_rat(iv.lo) * u + v;
        if (is_zero(w)) evfail("bisector: degenerate approximation");
        return make_ray(o, o + w);
    }
    if (f == "perp_at") {
        if (e.args.size() == 3) {
            // perpendicular to a line at a point, within a plane
            Line l = eval_as<Line>(e.args[0], env, "a line");
            Point p = eval_point(e.args[1], env);
            Plane pl = eval_as<Plane>(e.args[2], env, "a plane");
            if (!on_line(p, l)) evfail("perp_at: point not on the line");
            if (!line_in_plane(l, pl)) evfail("perp_at: line not in the plane");
            return make_line(p, cross(pl.normal, l.dir));
        }
        arity(2);
        // perpendicular to a plane at a point
        Plane pl = eval_as<Plane>(e.args[0], env, "a plane");
        Point p = eval_point(e.args[1], env);
        if (!on_plane(p, pl)) evfail("perp_at: point not on the plane");
        return make_line(p, pl.normal);
    }
    if (f == "perp_from") {
        arity(2);
        Point p = eval_point(e.args[0], env);
        Value target = eval_expr(e.args[1], env);
        if (const Line* l = get_if_value<Line>(target)) {
            if (on_line(p, *l)) evfail("perp_from: point lies on the line");
            Point foot = project_line(p, *l);
            return line_through(p, foot);
        }
        if (const Plane* pl = get_if_value<Plane>(target)) {
            if (on_plane(p, *pl)) evfail("perp_from: point lies on the plane");
            return line_through(p, project_plane(p, *pl));
        }
        evfail("perp_from: expected a line or plane");
    }
    if (f == "perp_bisector_plane") {
        arity(2);
        return perpendicular_bisector_plane(eval_point(e.args[0], env),
                                            eval_point(e.args[1], env));
    }
    if (f == "parallel_through") {
        arity(2);
        Point p = eval_point(e.args[0], env);
        Value target = eval_expr(e.args[1], env);
        if (const Line* l = get_if_value<Line>(target)) return parallel_through(p, *l);
        if (const Plane* pl = get_if_value<Plane>(target)) return parallel_plane_through(p, *pl);
        evfail("parallel_through: expected a line or plane");
    }
    if (f == "project_line") {
        arity(2);
        return project_line(eval_point(e.args[0], env), eval_as<Line>(e.args[1], env, "a line"));
    }
    if (f == "project_plane") {
        arity(2);
        return project_plane(eval_point(e.args[0], env), eval_as<Plane>(e.args[1], env, "a plane"));
    }
    if (f == "reflect") {
        arity(1);
        Value target = eval_expr(e.args[0], env);
        if (const Plane* pl = get_if_value<Plane>(target)) return reflect_plane(*pl);
        if (const Line* l = get_if_value<Line>(target)) return reflect_line(*l);
        evfail("reflect: expected a plane or line");
    }
    if (f == "rotate") {
        arity(3);
        return rotation(eval_as<Line>(e.args[0], env, "a line"), eval_point(e.args[1], env),
                        eval_point(e.args[2], env));
    }
    if (f == "translate") {
        if (e.args.size() == 1) {
            Point v = eval_point(e.args[0], env);
            return translation(v - Point{0, 0, 0});
        }
        arity(2);
        Point a = eval_point(e.args[0], env), b = eval_point(e.args[1], env);
        return translation(b - a);
    }
    if (f == "invert") {
        arity(1);
        return inversion(eval_point(e.args[0], env));
    }
    if (f == "homothety") {
        arity(2);
        Rational k = eval_rational(e.args[1], env);
        if (k == 0) evfail("homothety: zero factor");
        return homothety(eval_point(e.args[0], env), k);
    }
    if (f == "apply") {
        arity(2);
        Value t = eval_expr(e.args[0], env);
        Point p = eval_point(e.args[1], env);
        if (const Isometry* iso = get_if_value<Isometry>(t)) return iso->apply(p);
        if (const Similarity* sim = get_if_value<Similarity>(t)) return sim_apply(*sim, p);
        evfail("apply: expected an isometry or similarity");
    }
    if (f == "frame") {
        arity(2);
        return make_frame(eval_point(e.args[0], env), eval_point(e.args[1], env));
    }
    if (f == "measure_len") {
        if (e.args.size() == 3) {
            return length(eval_point(e.args[0], env), eval_point(e.args[1], env),
                          eval_as<LineFrame>(e.args[2], env, "a frame"), env.order());
        }
        arity(2);
        LineFrame unit = make_frame({0, 0, 0}, {1, 0, 0});
        return length(eval_point(e.args[0], env), eval_point(e.args[1], env), unit, env.order());
    }
    if (f == "measure_angle") {
        arity(3);
        return angle_measure(eval_point(e.args[0], env), eval_point(e.args[1], env),
                             eval_point(e.args[2], env), env.order());
    }
    evfail("unknown construction '" + f + "'");
}

Value eval_expr(const Expr& e, Env& env) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return e.number;
        case Expr::Kind::PointLit:
            return Point{e.args[0].number, e.args[1].number, e.args[2].number};
        case Expr::Kind::Name: {
            auto it = env.names.find(e.name);
            if (it == env.names.end()) evfail("undeclared name '" + e.name + "'");
            return it->second;
        }
        case Expr::Kind::Call:
            return eval_call(e, env);
    }
    evfail("bad expression");
}

// exact k1*|s1| == k2*|s2| (+ k3*|s3|), decided on squared forms
bool lengths_equal(const Rational& k1, const Rational& a2, const Rational& k2,
                   const Rational& b2, const Rational& k3, const Rational& c2) {
    // k1 sqrt(a2) vs k2 sqrt(b2) + k3 sqrt(c2), all coefficients >= 0
    // square both sides once: k1^2 a2  vs  k2^2 b2 + k3^2 c2 + 2 k2 k3 sqrt(b2 c2)
    Rational lhs = k1 * k1 * a2;
    Rational rhs_lin = k2 * k2 * b2 + k3 * k3 * c2;
    QuadraticValue rhs(rhs_lin, 4 * k2 * k2 * k3 * k3 * b2 * c2, 1);
    return qv_compare(rhs, lhs) == 0;
}

bool eval_assert(const Statement& st, Env& env, std::string* detail) {
    const std::string& pred = st.name;
    auto arity = [&](size_t n) {
        if (st.args.size() != n)
            evfail("assert " + pred + ": expected " + std::to_string(n) + " arguments");
    };
    if (pred == "congruent") {
        arity(2);
        Value a = eval_expr(st.args[0], env), b = eval_expr(st.args[1], env);
        if (get_if_value<Segment>(a) && get_if_value<Segment>(b))
            return seg_congruent(std::get<Segment>(a), std::get<Segment>(b));
        if (get_if_value<Angle>(a) && get_if_value<Angle>(b))
            return angle_congruent(std::get<Angle>(a), std::get<Angle>(b));
        evfail("congruent: expected two segments or two angles");
    }
    if (pred == "between") {
        arity(3);
        return between(eval_point(st.args[0], env), eval_point(st.args[1], env),
                       eval_point(st.args[2], env));
    }
    if (pred == "collinear") {
        arity(3);
        return collinear(eval_point(st.args[0], env), eval_point(st.args[1], env),
                         eval_point(st.args[2], env));
    }
    if (pred == "parallel" || pred == "perpendicular") {
        arity(2);
        Value a = eval_expr(st.args[0], env), b = eval_expr(st.args[1], env);
        bool par = pred == "parallel";
        if (get_if_value<Line>(a) && get_if_value<Line>(b))
            return par ? parallel_lines(std::get<Line>(a), std::get<Line>(b))
                       : perpendicular_lines(std::get<Line>(a), std::get<Line>(b));
        if (get_if_value<Line>(a) && get_if_value<Plane>(b))
            return par ? parallel_line_plane(std::get<Line>(a), std::get<Plane>(b))
                       : perpendicular_line_plane(std::get<Line>(a), std::get<Plane>(b));
        if (get_if_value<Plane>(a) && get_if_value<Line>(b))
            return par ? parallel_line_plane(std::get<Line>(b), std::get<Plane>(a))
                       : perpendicular_line_plane(std::get<Line>(b), std::get<Plane>(a));
        if (get_if_value<Plane>(a) && get_if_value<Plane>(b))
            return par ? parallel_planes(std::get<Plane>(a), std::get<Plane>(b))
                       : perpendicular_planes(std::get<Plane>(a), std::get<Plane>(b));
        evfail(pred + ": expected lines or planes");
    }
    if (pred == "midpoint") {
        arity(3);
        Point m = eval_point(st.args[0], env), a = eval_point(st.args[1], env),
              b = eval_point(st.args[2], env);
        return between(a, m, b) && dist2(a, m) == dist2(m, b);
    }
    if (pred == "len2_eq") {
        arity(3);
        Rational k = eval_rational(st.args[0], env);
        Segment s1 = eval_segment(st.args[1], env), s2 = eval_segment(st.args[2], env);
        return dist2(s1.a, s1.b) == k * dist2(s2.a, s2.b);
    }
    if (pred == "len_eq") {
        if (st.args.size() == 4) {
            Rational k1 = eval_rational(st.args[0], env);
            Segment s1 = eval_segment(st.args[1], env);
            Rational k2 = eval_rational(st.args[2], env);
            Segment s2 = eval_segment(st.args[3], env);
            if (k1 < 0 || k2 < 0) evfail("len_eq: coefficients must be non-negative");
            return lengths_equal(k1, dist2(s1.a, s1.b), k2, dist2(s2.a, s2.b), 0, 0);
        }
        arity(6);
        Rational k1 = eval_rational(st.args[0], env);
        Segment s1 = eval_segment(st.args[1], env);
        Rational k2 = eval_rational(st.args[2], env);
        Segment s2 = eval_segment(st.args[3], env);
        Rational k3 = eval_rational(st.args[4], env);
        Segment s3 = eval_segment(st.args[5], env);
        if (k1 < 0 || k2 < 0 || k3 < 0) evfail("len_eq: coefficients must be non-negative");
        return lengths_equal(k1, dist2(s1.a, s1.b), k2, dist2(s2.a, s2.b), k3,
                             dist2(s3.a, s3.b));
    }
    if (pred == "measure_in") {
        arity(3);
        Measurement m = eval_as<Measurement>(st.args[0], env, "a measurement");
        Rational lo = eval_rational(st.args[1], env), hi = eval_rational(st.args[2], env);
        return lo <= dyadic_rat(m.enclosure.lo) && dyadic_rat(m.enclosure.hi) <= hi;
    }
    if (pred == "angle_sum_pi") {
        arity(3);
        Point a = eval_point(st.args[0], env), b = eval_point(st.args[1], env),
              c = eval_point(st.args[2], env);
        if (collinear(a, b, c)) evfail("angle_sum_pi: degenerate triangle");
        unsigned m = env.order();
        Measurement ma = angle_measure(b, a, c, m);
        Measurement mb = angle_measure(a, b, c, m);
        Measurement mc = angle_measure(a, c, b, m);
        DyadicInterval sum = interval_add(interval_add(ma.enclosure, mb.enclosure), mc.enclosure);
        DyadicInterval pi = pi_enclose(m);
        // the sum must enclose pi (certified against a much tighter pi
        // interval) and stay within the interval-arithmetic width bound
        RationalInterval tight = pi_enclose_rat(m + 20);
        bool contains_pi =
            dyadic_rat(sum.lo) <= tight.lo && tight.hi <= dyadic_rat(sum.hi);
        bool narrow = sum.width() <= 4 * pow2_rat(-static_cast<int>(m));
        if (detail)
            *detail = "sum " + interval_str(sum) + " vs pi " + interval_str(pi);
        return contains_pi && narrow;
    }
    evfail("unknown predicate '" + pred + "'");
}

}  // namespace

std::string value_str(const Value& v) {
    struct Visitor {
        std::string operator()(const Rational& r) { return rat_str(r); }
        std::string operator()(const Point& p) { return vec_str(p); }
        std::string operator()(const Line& l) { return line_str(l); }
        std::string operator()(const Plane& p) { return plane_str(p); }
        std::string operator()(const Ray& r) {
            return "ray(" + vec_str(r.origin) + " -> " + vec_str(r.through) + ")";
        }
        std::string operator()(const Segment& s) {
            return "segment(" + vec_str(s.a) + ", " + vec_str(s.b) + ")";
        }
        std::string operator()(const Angle& a) {
            return std::string(a.straight ? "straight-angle(" : "angle(") + vec_str(a.vertex) + ")";
        }
        std::string operator()(const LineFrame& f) {
            return "frame(O=" + vec_str(f.origin) + ", E=" + vec_str(f.unit) + ")";
        }
        std::string operator()(const Isometry& f) { return isometry_str(f); }
        std::string operator()(const Similarity& s) {
            return "similarity(k=" + rat_str(s.factor) + ", O=" + vec_str(s.center) + ")";
        }
        std::string operator()(const Measurement& m) {
            std::string out = m.kind == QuantityKind::Length ? "length " : "angle ";
            if (m.is_pi) return out + "pi (exact), enclosure " + interval_str(m.enclosure);
            if (m.has_exact && m.kind == QuantityKind::Length) out += qv_str(m.exact) + ", ";
            if (m.has_exact && m.kind == QuantityKind::Angle)
                out += "cos = " + qv_str(m.exact) + ", ";
            return out + "enclosure " + interval_str(m.enclosure);
        }
    };
    return std::visit(Visitor{}, v);
}

RunReport exec_script(const Script& s, const ExecOptions& opt) {
    RunReport report;
    report.precision = opt.precision;
    Env env;
    env.precision = opt.precision;
    int index = 0;
    for (const auto& st : s.statements) {
        StatementOutcome out;
        out.index = index++;
        out.line = st.line;
        out.text = print_script(Script{{st}});
        if (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
        env.stmt_precision = st.precision;
        try {
            switch (st.kind) {
                case Statement::Kind::Decl: {
                    out.kind = "decl";
                    env.note.clear();
                    Value v = eval_expr(st.expr, env);
                    env.names.emplace(st.name, v);
                    out.detail = st.name + " = " + value_str(v);
                    if (!env.note.empty()) out.detail += " [" + env.note + "]";
                    break;
                }
                case Statement::Kind::Assert: {
                    out.kind = "assert";
                    ++report.asserts;
                    std::string detail;
                    bool ok = eval_assert(st, env, &detail);
                    out.ok = ok;
                    out.detail = detail.empty() ? (ok ? "holds" : "violated") : detail;
                    if (!ok) ++report.assert_failures;
                    break;
                }
                case Statement::Kind::Emit: {
                    out.kind = "emit";
                    auto it = env.names.find(st.plane_name);
                    if (it == env.names.end()) evfail("undeclared plane '" + st.plane_name + "'");
                    const Plane* pl = std::get_if<Plane>(&it->second);
                    if (!pl) evfail("'" + st.plane_name + "' is not a plane");
                    SvgScene scene;
                    scene.plane = *pl;
                    for (const auto& [name, value] : env.names) {
                        if (const Point* p = std::get_if<Point>(&value)) {
                            if (!on_plane(*p, *pl))
                                evfail("point '" + name +
                                       "' is off the drawing plane (no projection directive)");
                            scene.items.push_back({SvgItem::Kind::Point, name, *p, *p});
                        } else if (const Segment* sg = std::get_if<Segment>(&value)) {
                            if (!on_plane(sg->a, *pl) || !on_plane(sg->b, *pl))
                                evfail("segment '" + name +
                                       "' is off the drawing plane (no projection directive)");
                            scene.items.push_back({SvgItem::Kind::Segment, name, sg->a, sg->b});
                        } else if (const Line* ln = std::get_if<Line>(&value)) {
                            if (!line_in_plane(*ln, *pl))
                                evfail("line '" + name +
                                       "' is off the drawing plane (no projection directive)");
                            scene.items.push_back(
                                {SvgItem::Kind::Line, name, ln->base, ln->base + ln->dir});
                        }
                    }
                    std::string svg = render_svg(scene);
                    std::string path = opt.svg_override.empty() ? st.path : opt.svg_override;
                    if (opt.write_files) {
                        std::ofstream file(path, std::ios::binary);
                        if (!file) evfail("cannot open '" + path + "' for writing");
                        file << svg;
                    }
                    out.detail = "wrote " + path + " (" + std::to_string(svg.size()) + " bytes)";
                    break;
                }
            }
        } catch (const EvalError& err) {
            out.ok = false;
            out.detail = err.message;
            ++report.errors;
        } catch (const std::exception& err) {
            // construction preconditions surface as statement-level failures
            out.ok = false;
            out.detail = err.what();
            ++report.errors;
        }
        report.statements.push_back(std::move(out));
    }
    return report;
}

}  // namespace geom
