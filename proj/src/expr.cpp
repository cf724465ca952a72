#include "kronq/expr.hpp"

#include "kronq/bases.hpp"
#include "kronq/cluster.hpp"

#include <cctype>
#include <sstream>

namespace kronq {

namespace {

ExprPtr leaf(Expr::Op op, long arg) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->arg = arg;
    return e;
}

ExprPtr node(Expr::Op op, ExprPtr l, ExprPtr r, long arg = 0) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->arg = arg;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected ") + what);
    }

    long integer(bool allow_sign) {
        skip_ws();
        std::size_t start = pos_;
        if (allow_sign && pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected integer");
        }
        try {
            return std::stol(std::string(src_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            pos_ = start;
            fail("integer out of range");
        }
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+'))
                e = node(Expr::Op::Add, e, term());
            else if (eat('-'))
                e = node(Expr::Op::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (eat('*')) e = node(Expr::Op::Mul, e, factor());
        return e;
    }

    ExprPtr factor() {
        ExprPtr e = atom();
        if (eat('^')) {
            skip_ws();
            const long n = integer(false);
            if (n < 0) fail("exponent must be a nonnegative integer");
            e = node(Expr::Op::Pow, e, nullptr, n);
        }
        return e;
    }

    ExprPtr bracket_index(Expr::Op op, bool allow_sign) {
        expect('[', "'['");
        const long n = integer(allow_sign);
        if (!allow_sign && n < 0) fail("index must be nonnegative");
        expect(']', "']'");
        return leaf(op, n);
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected atom");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')', "')'");
            return e;
        }
        if (c == 'X') {
            ++pos_;
            return bracket_index(Expr::Op::XVar, true);
        }
        if (c == 'z') {
            ++pos_;
            return bracket_index(Expr::Op::ChebFirst, false);
        }
        if (c == 's') {
            ++pos_;
            return bracket_index(Expr::Op::ChebSecond, false);
        }
        if (c == 'Z') {
            ++pos_;
            return leaf(Expr::Op::Delta, 0);
        }
        if (c == 'q') {
            ++pos_;
            expect('^', "'^'");
            expect('{', "'{'");
            const long k = integer(true);
            expect('/', "'/'");
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != '2') fail("expected '2'");
            ++pos_;
            expect('}', "'}'");
            return leaf(Expr::Op::QPow, k);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return leaf(Expr::Op::Int, integer(false));
        fail("expected atom");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(src).run(); }

TorusElem eval_expr(const Expr& e) {
    switch (e.op) {
        case Expr::Op::Add: return eval_expr(*e.lhs) + eval_expr(*e.rhs);
        case Expr::Op::Sub: return eval_expr(*e.lhs) - eval_expr(*e.rhs);
        case Expr::Op::Mul: return eval_expr(*e.lhs) * eval_expr(*e.rhs);
        case Expr::Op::Pow: return pow(eval_expr(*e.lhs), e.arg);
        case Expr::Op::XVar: return xvar(e.arg);
        case Expr::Op::ChebFirst: return cheb_elem(ChebKind::First, e.arg);
        case Expr::Op::ChebSecond: return cheb_elem(ChebKind::Second, e.arg);
        case Expr::Op::Delta: return xdelta();
        case Expr::Op::QPow: return TorusElem{LaurentQ::v_pow(e.arg)};
        case Expr::Op::Int: return TorusElem{e.arg};
    }
    throw std::logic_error("eval_expr: bad op");
}

namespace {

// Grammar levels: 0 expr, 1 term, 2 factor, 3 atom.
int level(const Expr& e) {
    switch (e.op) {
        case Expr::Op::Add:
        case Expr::Op::Sub: return 0;
        case Expr::Op::Mul: return 1;
        case Expr::Op::Pow: return 2;
        default: return 3;
    }
}

void render(const Expr& e, int min_level, std::ostream& os) {
    const bool parens = level(e) < min_level;
    if (parens) os << "(";
    switch (e.op) {
        case Expr::Op::Add:
        case Expr::Op::Sub:
            render(*e.lhs, 0, os);
            os << (e.op == Expr::Op::Add ? " + " : " - ");
            render(*e.rhs, 1, os);
            break;
        case Expr::Op::Mul:
            render(*e.lhs, 1, os);
            os << "*";
            render(*e.rhs, 2, os);
            break;
        case Expr::Op::Pow:
            render(*e.lhs, 3, os);
            os << "^" << e.arg;
            break;
        case Expr::Op::XVar: os << "X[" << e.arg << "]"; break;
        case Expr::Op::ChebFirst: os << "z[" << e.arg << "]"; break;
        case Expr::Op::ChebSecond: os << "s[" << e.arg << "]"; break;
        case Expr::Op::Delta: os << "Z"; break;
        case Expr::Op::QPow: os << "q^{" << e.arg << "/2}"; break;
        case Expr::Op::Int: os << e.arg; break;
    }
    if (parens) os << ")";
}

}  // namespace

std::string pretty_expr(const Expr& e) {
    std::ostringstream os;
    render(e, 0, os);
    return os.str();
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.op != b.op || a.arg != b.arg) return false;
    if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
    if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
    if (a.lhs && !expr_equal(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !expr_equal(*a.rhs, *b.rhs)) return false;
    return true;
}

}  // namespace kronq
