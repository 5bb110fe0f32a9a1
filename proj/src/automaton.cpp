#include "rederiv/automaton.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace rederiv {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Base functions

BaseKind base_kind_from_name(const std::string& name) {
    if (name == "BA") return BaseKind::BA;
    if (name == "BB") return BaseKind::BB;
    if (name == "BC") return BaseKind::BC;
    throw std::invalid_argument("unknown base '" + name + "', expected BA, BB or BC");
}

std::string base_kind_name(BaseKind base) {
    switch (base) {
        case BaseKind::BA:
            return "BA";
        case BaseKind::BB:
            return "BB";
        default:
            return "BC";
    }
}

ExprFormula base_A(const Expr& e) {
    if (const auto* b = std::get_if<BoolOp>(&e.node()); b && is_or_fun(b->fun)) {
        return ExprFormula::op(BoolFun::Or(), {base_A(b->args[0]), base_A(b->args[1])});
    }
    return ExprFormula::atom(e);
}

ExprFormula base_B(const Expr& e) { return ExprFormula::atom(e); }

ExprFormula base_C(const Expr& e) {
    if (const auto* b = std::get_if<BoolOp>(&e.node())) {
        std::vector<ExprFormula> args;
        args.reserve(b->args.size());
        for (const Expr& arg : b->args) args.push_back(base_C(arg));
        return ExprFormula::op(b->fun, std::move(args));
    }
    return ExprFormula::atom(e);
}

ExprFormula apply_base(BaseKind base, const Expr& e) {
    switch (base) {
        case BaseKind::BA:
            return base_A(e);
        case BaseKind::BB:
            return base_B(e);
        default:
            return base_C(e);
    }
}

// ---------------------------------------------------------------------------
// Pruning

namespace {

/// Decides whether @p phi is false under every valuation of its atoms, with
/// the dead state Zero pinned to false.
bool always_false(const ExprFormula& phi) {
    if (phi.is_falsum()) return true;
    std::map<Expr, std::size_t, ExprLess> index;
    for (const Expr& q : expr_atoms(phi)) {
        if (q.is_zero()) continue;
        index.emplace(q, index.size());
    }
    if (index.size() > 20) return false;  // too many atoms to decide; keep as is
    const std::size_t combos = std::size_t{1} << index.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        const bool value = eval_with(phi, [&](const Expr& q) -> bool {
            if (q.is_zero()) return false;
            return ((mask >> index.at(q)) & 1) != 0;
        });
        if (value) return false;
    }
    return true;
}

}  // namespace

namespace detail {

void prune_false_cells(AltAutomaton& aut) {
    for (auto& [state, row] : aut.trans) {
        for (auto& [symbol, value] : row) {
            if (always_false(value)) value = ExprFormula::falsum();
        }
    }
    std::set<Expr, ExprLess> reachable;
    std::deque<Expr> queue;
    for (const Expr& q : expr_atoms(aut.initial)) {
        if (reachable.insert(q).second) queue.push_back(q);
    }
    while (!queue.empty()) {
        const Expr q = queue.front();
        queue.pop_front();
        auto it = aut.trans.find(q);
        if (it == aut.trans.end()) continue;
        for (const auto& [symbol, value] : it->second) {
            for (const Expr& next : expr_atoms(value)) {
                if (reachable.insert(next).second) queue.push_back(next);
            }
        }
    }
    std::vector<Expr> kept;
    kept.reserve(aut.states.size());
    for (const Expr& q : aut.states) {
        if (reachable.count(q) > 0) kept.push_back(q);
    }
    aut.states = std::move(kept);
    std::erase_if(aut.final, [&](const auto& kv) { return reachable.count(kv.first) == 0; });
    std::erase_if(aut.trans, [&](const auto& kv) { return reachable.count(kv.first) == 0; });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Acceptance

namespace {

void check_word_symbols(const AltAutomaton& aut, std::string_view w) {
    for (char c : w) {
        if (std::find(aut.alphabet.begin(), aut.alphabet.end(), c) == aut.alphabet.end()) {
            throw UnknownSymbol(c);
        }
    }
}

}  // namespace

bool run(const AltAutomaton& aut, std::string_view w) {
    check_word_symbols(aut, w);
    ExprFormula phi = aut.initial;
    for (char a : w) {
        phi = map_atoms(phi,
                        [&](const Expr& q) -> ExprFormula { return aut.trans.at(q).at(a); });
    }
    return eval_with(phi, [&](const Expr& q) { return aut.final.at(q); });
}

bool run_direct(const AltAutomaton& aut, std::string_view w) {
    check_word_symbols(aut, w);
    std::map<Expr, bool, ExprLess> value = aut.final;
    for (std::size_t i = w.size(); i-- > 0;) {
        const char a = w[i];
        std::map<Expr, bool, ExprLess> next;
        for (const Expr& q : aut.states) {
            next.emplace(q, eval_with(aut.trans.at(q).at(a),
                                      [&](const Expr& p) { return value.at(p); }));
        }
        value = std::move(next);
    }
    return eval_with(aut.initial, [&](const Expr& q) { return value.at(q); });
}

// ---------------------------------------------------------------------------
// NFA shape

namespace {

bool collect_or_atoms(const ExprFormula& phi, std::vector<Expr>& out) {
    if (phi.is_falsum()) return true;
    if (phi.is_atom()) {
        out.push_back(phi.atom_value());
        return true;
    }
    if (is_or_fun(phi.fun())) {
        return collect_or_atoms(phi.args()[0], out) &&
               collect_or_atoms(phi.args()[1], out);
    }
    return false;
}

ExprFormula fold_atom_or(std::vector<Expr> elems) {
    std::sort(elems.begin(), elems.end(), ExprLess{});
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty()) return ExprFormula::falsum();
    ExprFormula acc = ExprFormula::atom(elems.front());
    for (std::size_t i = 1; i < elems.size(); ++i) {
        acc = ExprFormula::op(BoolFun::Or(), {std::move(acc), ExprFormula::atom(elems[i])});
    }
    return acc;
}

}  // namespace

AltAutomaton to_nfa(const AltAutomaton& aut) {
    AltAutomaton out = aut;
    std::vector<Expr> atoms_buffer;
    if (!collect_or_atoms(aut.initial, atoms_buffer)) {
        throw NonDisjunctive("the initial condition");
    }
    out.initial = fold_atom_or(std::move(atoms_buffer));
    for (const Expr& q : out.states) {
        auto row = out.trans.find(q);
        if (row == out.trans.end()) continue;
        for (auto& [symbol, value] : row->second) {
            atoms_buffer.clear();
            if (!collect_or_atoms(value, atoms_buffer)) {
                throw NonDisjunctive(render(q), symbol);
            }
            value = fold_atom_or(atoms_buffer);
        }
    }
    return out;
}

bool is_deterministic(const AltAutomaton& aut) {
    if (!aut.initial.is_atom()) return false;
    for (const auto& [state, row] : aut.trans) {
        for (const auto& [symbol, value] : row) {
            if (!value.is_atom() && !value.is_falsum()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Determinization

namespace {

struct TableKey {
    std::vector<Expr> vars;
    std::vector<bool> table;
};

struct TableKeyLess {
    bool operator()(const TableKey& x, const TableKey& y) const {
        if (x.vars.size() != y.vars.size()) return x.vars.size() < y.vars.size();
        for (std::size_t i = 0; i < x.vars.size(); ++i) {
            const auto c = compare(x.vars[i], y.vars[i]);
            if (c != 0) return c < 0;
        }
        return x.table < y.table;
    }
};

/// Truth-table canonicalization of a formula: the full table over its own
/// atoms, projected onto the essential atoms so that semantically equal
/// formulas over different atom sets get identical keys.
TableKey semantic_key(const ExprFormula& phi, std::size_t budget) {
    std::vector<Expr> vars;
    std::map<Expr, std::size_t, ExprLess> index;
    for (const Expr& q : expr_atoms(phi)) {
        index.emplace(q, vars.size());
        vars.push_back(q);
    }
    if (vars.size() > 20) throw BudgetExceeded(budget);
    const std::size_t n = vars.size();
    std::vector<bool> full(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < full.size(); ++mask) {
        full[mask] = eval_with(phi, [&](const Expr& q) -> bool {
            return ((mask >> index.at(q)) & 1) != 0;
        });
    }
    std::vector<std::size_t> essential;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t mask = 0; mask < full.size(); ++mask) {
            if (full[mask] != full[mask ^ (std::size_t{1} << i)]) {
                essential.push_back(i);
                break;
            }
        }
    }
    TableKey key;
    key.vars.reserve(essential.size());
    for (std::size_t i : essential) key.vars.push_back(vars[i]);
    key.table.resize(std::size_t{1} << essential.size());
    for (std::size_t emask = 0; emask < key.table.size(); ++emask) {
        std::size_t mask = 0;
        for (std::size_t j = 0; j < essential.size(); ++j) {
            if ((emask >> j) & 1) mask |= std::size_t{1} << essential[j];
        }
        key.table[emask] = full[mask];
    }
    return key;
}

/// An expression with the same language as the formula read as a
/// combination of its atom languages.
Expr formula_readback(const ExprFormula& phi) {
    if (phi.is_atom()) return phi.atom_value();
    if (phi.fun().arity() == 0) {
        return phi.fun().table()[0] ? Expr::boolop(BoolFun::Not(), {Expr::zero()})
                                    : Expr::zero();
    }
    std::vector<Expr> args;
    args.reserve(phi.args().size());
    for (const auto& sub : phi.args()) args.push_back(formula_readback(sub));
    return Expr::boolop(phi.fun(), std::move(args));
}

}  // namespace

AltAutomaton determinize(const AltAutomaton& aut, std::size_t budget) {
    struct ClassInfo {
        ExprFormula repr;
        Expr name;
        bool accept;
    };
    std::map<TableKey, std::size_t, TableKeyLess> index;
    std::vector<ClassInfo> classes;
    std::deque<std::size_t> queue;
    std::set<Expr, ExprLess> used_names;

    auto intern = [&](ExprFormula phi) -> std::size_t {
        TableKey key = semantic_key(phi, budget);
        if (auto it = index.find(key); it != index.end()) return it->second;
        Expr name = [&]() -> Expr {
            if (key.vars.empty()) {
                return key.table[0] ? Expr::boolop(BoolFun::Not(), {Expr::zero()})
                                    : Expr::zero();
            }
            if (key.vars.size() == 1 && key.table == std::vector<bool>{false, true}) {
                return key.vars.front();
            }
            return formula_readback(phi);
        }();
        while (used_names.count(name) > 0) name = Expr::concat(name, Expr::one());
        used_names.insert(name);
        const bool accept =
            eval_with(phi, [&](const Expr& q) { return aut.final.at(q); });
        classes.push_back(ClassInfo{std::move(phi), std::move(name), accept});
        if (classes.size() > budget) throw BudgetExceeded(budget);
        index.emplace(std::move(key), classes.size() - 1);
        queue.push_back(classes.size() - 1);
        return classes.size() - 1;
    };

    intern(aut.initial);
    std::map<std::size_t, std::map<Symbol, std::size_t>> delta;
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (Symbol a : aut.alphabet) {
            ExprFormula next = map_atoms(classes[i].repr, [&](const Expr& q) -> ExprFormula {
                return aut.trans.at(q).at(a);
            });
            delta[i][a] = intern(std::move(next));
        }
    }

    AltAutomaton out;
    out.alphabet = aut.alphabet;
    out.initial = ExprFormula::atom(classes.front().name);
    for (const ClassInfo& c : classes) {
        out.states.push_back(c.name);
        out.final.emplace(c.name, c.accept);
    }
    for (const auto& [i, row] : delta) {
        auto& out_row = out.trans[classes[i].name];
        for (const auto& [a, j] : row) {
            out_row.insert_or_assign(a, ExprFormula::atom(classes[j].name));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exports

namespace {

std::string dot_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::map<Expr, std::size_t, ExprLess> state_index(const AltAutomaton& aut) {
    std::map<Expr, std::size_t, ExprLess> index;
    for (std::size_t i = 0; i < aut.states.size(); ++i) index.emplace(aut.states[i], i);
    return index;
}

}  // namespace

std::string export_dot(const AltAutomaton& aut) {
    const auto index = state_index(aut);
    std::ostringstream os;
    os << "digraph G {\n";
    os << "  rankdir=LR;\n";
    os << "  label=\"initial: " << dot_escape(render_expr_formula(aut.initial)) << "\";\n";
    for (std::size_t i = 0; i < aut.states.size(); ++i) {
        const Expr& q = aut.states[i];
        const bool is_final = aut.final.at(q);
        os << "  q" << i << " [label=\"" << dot_escape(render(q)) << "\", shape="
           << (is_final ? "doublecircle" : "circle") << "];\n";
    }
    for (std::size_t i = 0; i < aut.states.size(); ++i) {
        const Expr& q = aut.states[i];
        auto row = aut.trans.find(q);
        if (row == aut.trans.end()) continue;
        for (Symbol a : aut.alphabet) {
            auto cell = row->second.find(a);
            if (cell == row->second.end() || cell->second.is_falsum()) continue;
            const std::string label = std::string(1, a) + ": " +
                                      render_expr_formula(cell->second);
            for (const Expr& target : expr_atoms(cell->second)) {
                os << "  q" << i << " -> q" << index.at(target) << " [label=\""
                   << dot_escape(label) << "\"];\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

namespace {

json formula_to_json(const ExprFormula& phi,
                     const std::map<Expr, std::size_t, ExprLess>& index) {
    if (phi.is_atom()) return json{{"atom", index.at(phi.atom_value())}};
    json args = json::array();
    for (const auto& sub : phi.args()) args.push_back(formula_to_json(sub, index));
    json table = json::array();
    for (bool b : phi.fun().table()) table.push_back(b ? 1 : 0);
    return json{{"fun", phi.fun().name()}, {"table", table}, {"args", args}};
}

ExprFormula formula_from_json(const json& j, const std::vector<Expr>& states) {
    if (!j.is_object()) throw std::runtime_error("formula node must be an object");
    if (j.contains("atom")) {
        const auto i = j.at("atom").get<std::size_t>();
        if (i >= states.size()) {
            throw std::runtime_error("formula atom index " + std::to_string(i) +
                                     " out of range");
        }
        return ExprFormula::atom(states[i]);
    }
    const auto name = j.at("fun").get<std::string>();
    std::vector<bool> table;
    for (const json& bit : j.at("table")) table.push_back(bit.get<int>() != 0);
    std::vector<ExprFormula> args;
    for (const json& sub : j.at("args")) args.push_back(formula_from_json(sub, states));
    return ExprFormula::op(BoolFun(name, std::move(table)), std::move(args));
}

}  // namespace

std::string export_json(const AltAutomaton& aut) {
    const auto index = state_index(aut);
    if (index.size() != aut.states.size()) {
        throw std::runtime_error("duplicate states in automaton");
    }
    std::set<std::string> rendered;
    json states = json::array();
    for (const Expr& q : aut.states) {
        std::string text = render(q);
        if (!rendered.insert(text).second) {
            throw std::runtime_error("two states render identically: " + text);
        }
        states.push_back(std::move(text));
    }
    json j;
    j["alphabet"] = json::array();
    for (Symbol a : aut.alphabet) j["alphabet"].push_back(std::string(1, a));
    j["states"] = std::move(states);
    j["initial"] = formula_to_json(aut.initial, index);
    j["final"] = json::object();
    for (const Expr& q : aut.states) j["final"][render(q)] = aut.final.at(q);
    j["trans"] = json::object();
    for (const Expr& q : aut.states) {
        json row = json::object();
        auto it = aut.trans.find(q);
        for (Symbol a : aut.alphabet) {
            if (it == aut.trans.end() || it->second.find(a) == it->second.end()) {
                throw std::runtime_error("missing transition for state " + render(q));
            }
            row[std::string(1, a)] = formula_to_json(it->second.at(a), index);
        }
        j["trans"][render(q)] = std::move(row);
    }
    return j.dump(2) + "\n";
}

AltAutomaton import_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw std::runtime_error(std::string("invalid automaton JSON: ") + err.what());
    }
    AltAutomaton aut;
    for (const json& entry : j.at("alphabet")) {
        const auto s = entry.get<std::string>();
        if (s.size() != 1 || !is_symbol(s[0])) {
            throw std::runtime_error("invalid alphabet entry '" + s + "'");
        }
        aut.alphabet.push_back(s[0]);
    }
    std::sort(aut.alphabet.begin(), aut.alphabet.end());
    aut.alphabet.erase(std::unique(aut.alphabet.begin(), aut.alphabet.end()),
                       aut.alphabet.end());
    for (const json& entry : j.at("states")) {
        aut.states.push_back(parse(entry.get<std::string>()));
    }
    if (state_index(aut).size() != aut.states.size()) {
        throw std::runtime_error("duplicate states in automaton JSON");
    }
    aut.initial = formula_from_json(j.at("initial"), aut.states);
    const json& final_obj = j.at("final");
    for (const Expr& q : aut.states) {
        const std::string key = render(q);
        if (!final_obj.contains(key)) {
            throw std::runtime_error("missing final flag for state " + key);
        }
        const bool flag = final_obj.at(key).get<bool>();
        if (flag != nullable(q)) {
            throw std::runtime_error("final flag of state " + key +
                                     " contradicts its expression");
        }
        aut.final.emplace(q, flag);
    }
    const json& trans_obj = j.at("trans");
    for (const Expr& q : aut.states) {
        const std::string key = render(q);
        if (!trans_obj.contains(key)) {
            throw std::runtime_error("missing transition row for state " + key);
        }
        const json& row = trans_obj.at(key);
        for (Symbol a : aut.alphabet) {
            const std::string symbol_key(1, a);
            if (!row.contains(symbol_key)) {
                throw std::runtime_error("missing transition for state " + key +
                                         " under '" + symbol_key + "'");
            }
            aut.trans[q].insert_or_assign(a, formula_from_json(row.at(symbol_key),
                                                               aut.states));
        }
    }
    return aut;
}

}  // namespace rederiv
