#include "boxlogic/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace boxlogic {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return j;
}

BoxSpec parse_side(const json& j, const std::string& side) {
    if (!j.contains(side)) throw InputError("spec is missing the \"" + side + "\" field");
    const json& s = j.at(side);
    if (!s.contains("inputs") || !s.at("inputs").is_array())
        throw InputError("\"" + side + ".inputs\" must be an array of outcome counts");
    BoxSpec spec;
    for (const auto& v : s.at("inputs")) {
        if (!v.is_number_integer())
            throw InputError("\"" + side + ".inputs\" must contain integers");
        spec.outcome_sizes.push_back(v.get<int>());
    }
    if (spec.outcome_sizes.empty())
        throw InputError("\"" + side + ".inputs\" must name at least one input");
    for (const int k : spec.outcome_sizes)
        if (k < 1)
            throw InputError("\"" + side + ".inputs\": outcome count must be >= 1");
    if (s.contains("labels")) {
        const json& labels = s.at("labels");
        if (!labels.is_array() || labels.size() != spec.outcome_sizes.size())
            throw InputError("\"" + side + ".labels\" must give one array per input");
        for (std::size_t a = 0; a < labels.size(); ++a)
            if (!labels[a].is_array() ||
                labels[a].size() != static_cast<std::size_t>(spec.outcome_sizes[a]))
                throw InputError("\"" + side + ".labels\" arity mismatch on input " +
                                 std::to_string(a + 1));
    }
    return spec;
}

Rational parse_prob(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer())
        return Rational(v[0].get<std::int64_t>(), v[1].get<std::int64_t>());
    throw InputError("probabilities must be integers, \"p/q\" strings, or [p,q] pairs");
}

} // namespace

std::pair<BoxSpec, BoxSpec> parse_box_spec(const json& j) {
    if (!j.is_object()) throw InputError("spec must be a JSON object");
    auto left = parse_side(j, "left");
    auto right = parse_side(j, "right");
    return {std::move(left), std::move(right)};
}

std::pair<BoxSpec, BoxSpec> load_box_spec(const std::string& path) {
    return parse_box_spec(read_json_file(path));
}

json logic_to_json(const ConcreteLogic& logic) {
    json ground{{"size", logic.ground().size()},
                {"factors", logic.ground().factors()}};
    if (logic.ground().is_composite()) ground["left_arity"] = logic.ground().left_arity();
    json delta = json::array();
    for (EventId i = 0; i < logic.size(); ++i) delta.push_back(logic.members(i).to_hex());
    json atoms = json::array();
    for (const EventId a : logic.atoms()) atoms.push_back(a);
    return json{{"ground", ground}, {"delta", delta}, {"atoms", atoms}};
}

std::string logic_to_dot(const ConcreteLogic& logic, const std::string& name) {
    // covering relation of the inclusion order
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
    for (EventId i = 0; i < logic.size(); ++i)
        out << "  e" << i << " [label=\"" << logic.members(i).to_hex() << "\"];\n";
    for (EventId p = 0; p < logic.size(); ++p)
        for (EventId q = 0; q < logic.size(); ++q) {
            if (p == q || !logic.members(p).subset_of(logic.members(q))) continue;
            bool covering = true;
            for (EventId r = 0; r < logic.size() && covering; ++r) {
                if (r == p || r == q) continue;
                if (logic.members(p).subset_of(logic.members(r)) &&
                    logic.members(r).subset_of(logic.members(q)))
                    covering = false;
            }
            if (covering) out << "  e" << p << " -> e" << q << ";\n";
        }
    out << "}\n";
    return out.str();
}

json behavior_to_json(const Behavior& b) {
    json contexts = json::object();
    for (int a = 0; a < b.left().input_count(); ++a)
        for (int bb = 0; bb < b.right().input_count(); ++bb) {
            json row = json::array();
            for (int alpha = 0; alpha < b.left().outcome_sizes[a]; ++alpha)
                for (int beta = 0; beta < b.right().outcome_sizes[bb]; ++beta)
                    row.push_back(b.prob(a, bb, alpha, beta).str());
            contexts[std::to_string(a + 1) + "," + std::to_string(bb + 1)] = std::move(row);
        }
    return json{{"left", {{"inputs", b.left().outcome_sizes}}},
                {"right", {{"inputs", b.right().outcome_sizes}}},
                {"contexts", contexts}};
}

Behavior behavior_from_json(const json& j) {
    auto [left, right] = parse_box_spec(j);
    if (!j.contains("contexts") || !j.at("contexts").is_object())
        throw InputError("behavior file is missing the \"contexts\" object");
    std::vector<std::vector<std::vector<Rational>>> tables(left.input_count());
    for (int a = 0; a < left.input_count(); ++a) {
        tables[a].resize(right.input_count());
        for (int b = 0; b < right.input_count(); ++b) {
            const std::string key = std::to_string(a + 1) + "," + std::to_string(b + 1);
            if (!j.at("contexts").contains(key))
                throw InputError("behavior file is missing context \"" + key + "\"");
            const json& row = j.at("contexts").at(key);
            if (!row.is_array())
                throw InputError("context \"" + key + "\" must be an array");
            for (const auto& v : row) tables[a][b].push_back(parse_prob(v));
        }
    }
    return Behavior::from_table(std::move(left), std::move(right), std::move(tables));
}

Behavior load_behavior(const std::string& path) {
    return behavior_from_json(read_json_file(path));
}

json polytope_to_json(const StatePolytope& p) {
    json vars = json::array();
    for (const auto& v : p.variables())
        vars.push_back({{"a", v.a + 1}, {"b", v.b + 1}, {"alpha", v.alpha}, {"beta", v.beta}});
    json eqs = json::array();
    for (const auto& row : p.equalities()) {
        json coeffs = json::array();
        for (const auto& c : row.coeffs) coeffs.push_back(c.str());
        eqs.push_back({{"coeffs", coeffs}, {"rhs", row.rhs.str()}});
    }
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(behavior_to_json(v));
    return json{{"variables", vars},
                {"equalities", eqs},
                {"inequalities", "every variable >= 0"},
                {"dimension", p.dimension()},
                {"vertices", verts}};
}

namespace {

struct ExprParser {
    const BoxWorld& w;
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw InputError("event expression: expected '" + std::string(1, c) +
                             "' at position " + std::to_string(pos));
    }
    int number() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos)
            throw InputError("event expression: expected a number at position " +
                             std::to_string(pos));
        return std::stoi(text.substr(start, pos - start));
    }

    std::vector<int> outcome_set(int limit) {
        skip_ws();
        if (eat('*')) {
            std::vector<int> all(limit);
            for (int i = 0; i < limit; ++i) all[i] = i;
            return all;
        }
        if (eat('{')) {
            std::vector<int> out;
            if (!eat('}')) {
                do {
                    out.push_back(number());
                } while (eat(','));
                expect('}');
            }
            return out;
        }
        return {number()};
    }

    BitVec term() {
        expect('[');
        const int a = number();
        expect(':');
        const auto A = outcome_set(a >= 1 && a <= w.left().input_count()
                                       ? w.left().outcome_sizes[a - 1]
                                       : 0);
        expect(',');
        const int b = number();
        expect(':');
        const auto B = outcome_set(b >= 1 && b <= w.right().input_count()
                                       ? w.right().outcome_sizes[b - 1]
                                       : 0);
        expect(']');
        if (a < 1 || a > w.left().input_count())
            throw InputError("event expression: left input " + std::to_string(a) +
                             " out of range");
        if (b < 1 || b > w.right().input_count())
            throw InputError("event expression: right input " + std::to_string(b) +
                             " out of range");
        return w.question_members(a - 1, A, b - 1, B);
    }

    BitVec unit() {
        skip_ws();
        if (eat('~')) return unit().complement();
        if (eat('(')) {
            const BitVec e = expr();
            expect(')');
            return e;
        }
        return term();
    }

    BitVec expr() {
        BitVec acc = unit();
        while (true) {
            skip_ws();
            if (!eat('+')) break;
            const BitVec next = unit();
            if (!acc.disjoint_with(next))
                throw InputError("event expression: '+' requires disjoint operands");
            acc |= next;
        }
        return acc;
    }
};

} // namespace

EventId parse_event_expr(const BoxWorld& w, const std::string& text) {
    ExprParser p{w, text};
    const BitVec e = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw InputError("event expression: trailing input at position " +
                         std::to_string(p.pos));
    return w.logic().require(e);
}

} // namespace boxlogic
