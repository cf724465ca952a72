#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kronq/bases.hpp"
#include "kronq/expr.hpp"

#include <random>

using namespace kronq;

namespace {

ExprPtr random_tree(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 5);
    auto e = std::make_shared<Expr>();
    switch (pick(rng)) {
        case 0:
            e->op = Expr::Op::XVar;
            e->arg = std::uniform_int_distribution<long>(-5, 6)(rng);
            break;
        case 1:
            e->op = Expr::Op::ChebFirst;
            e->arg = std::uniform_int_distribution<long>(0, 4)(rng);
            break;
        case 2:
            e->op = Expr::Op::ChebSecond;
            e->arg = std::uniform_int_distribution<long>(0, 4)(rng);
            break;
        case 3:
            e->op = Expr::Op::Delta;
            break;
        case 4:
            e->op = Expr::Op::QPow;
            e->arg = std::uniform_int_distribution<long>(-5, 5)(rng);
            break;
        case 5:
            e->op = Expr::Op::Int;
            e->arg = std::uniform_int_distribution<long>(0, 20)(rng);
            break;
        case 6:
        case 7: {
            e->op = pick(rng) % 2 == 0 ? Expr::Op::Add : Expr::Op::Sub;
            e->lhs = random_tree(rng, depth - 1);
            e->rhs = random_tree(rng, depth - 1);
            break;
        }
        case 8: {
            e->op = Expr::Op::Mul;
            e->lhs = random_tree(rng, depth - 1);
            e->rhs = random_tree(rng, depth - 1);
            break;
        }
        case 9: {
            e->op = Expr::Op::Pow;
            e->arg = std::uniform_int_distribution<long>(0, 3)(rng);
            e->lhs = random_tree(rng, depth - 1);
            break;
        }
    }
    return e;
}

}  // namespace

TEST_CASE("parse and evaluate worked expressions") {
    const auto delta = parse_expr("q^{1/2}*(X[0]*X[3] - q^{2/2}*X[1]*X[2])");
    CHECK(eval_expr(*delta) == xdelta());

    const auto z2 = parse_expr("z[2]");
    CHECK(eval_expr(*z2) == cheb_elem(ChebKind::First, 2));

    const auto s3 = parse_expr("s[3]");
    CHECK(eval_expr(*s3) == cheb_elem(ChebKind::Second, 3));

    CHECK(eval_expr(*parse_expr("X[0]*X[2]")) ==
          TorusElem::term({2, 0}, LaurentQ::v_pow(2)) + TorusElem{1});
    CHECK(eval_expr(*parse_expr("Z")) == xdelta());
    CHECK(eval_expr(*parse_expr("2")) == TorusElem{2});
    CHECK(eval_expr(*parse_expr("X[2]^3")) == pow(xvar(2), 3));
    CHECK(eval_expr(*parse_expr("(X[1] + X[2])^2")) ==
          pow(xvar(1) + xvar(2), 2));
}

TEST_CASE("syntax errors carry byte offsets") {
    auto offset_of = [](const char* src) {
        try {
            parse_expr(src);
        } catch (const SyntaxError& err) {
            return static_cast<long>(err.offset);
        }
        return -1L;
    };
    CHECK(offset_of("X[1]*") == 5);
    CHECK(offset_of("X[1]+") == 5);
    CHECK(offset_of("X[]") == 2);
    CHECK(offset_of("q^{1/3}") == 5);
    CHECK(offset_of("X[1] X[2]") == 5);
    CHECK(offset_of("(X[1]") == 5);
    CHECK(offset_of("w") == 0);
    CHECK(offset_of("X[2]^-1") == 5);
}

TEST_CASE("noncommutative evaluation") {
    const TorusElem ab = eval_expr(*parse_expr("X[1]*X[2]"));
    const TorusElem ba = eval_expr(*parse_expr("X[2]*X[1]"));
    CHECK(ab != ba);
    CHECK(ab == ba.scaled(LaurentQ::v_pow(2)));  // differ by exactly q
    CHECK(eval_expr(*parse_expr("X[1]*X[2] - q^{2/2}*X[2]*X[1]")) == TorusElem{});
}

TEST_CASE("pretty-print parse round trip") {
    std::mt19937 rng(41);
    for (int i = 0; i < 300; ++i) {
        const ExprPtr t = random_tree(rng, 4);
        const std::string printed = pretty_expr(*t);
        CAPTURE(printed);
        const ExprPtr back = parse_expr(printed);
        CHECK(expr_equal(*t, *back));
    }
}

TEST_CASE("evaluation agrees with direct construction on random trees") {
    std::mt19937 rng(43);
    for (int i = 0; i < 40; ++i) {
        const ExprPtr t = random_tree(rng, 3);
        const TorusElem direct = eval_expr(*t);
        const TorusElem reparsed = eval_expr(*parse_expr(pretty_expr(*t)));
        CHECK(direct == reparsed);
    }
}
