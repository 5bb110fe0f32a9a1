#include "rederiv/formula.hpp"

namespace rederiv {

std::string render_expr_formula(const ExprFormula& phi) {
    std::string out;
    detail::render_formula_into(
        phi, [](const Expr& e) { return render(e); },
        [](const Expr& e) { return display_precedence(e); }, out);
    return out;
}

std::set<Expr, ExprLess> expr_atoms(const ExprFormula& phi) {
    std::set<Expr, ExprLess> out;
    detail::collect_atoms(phi, out);
    return out;
}

}  // namespace rederiv
