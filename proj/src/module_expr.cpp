#include "quiverhom/module_expr.hpp"

#include "quiverhom/constructions.hpp"

#include <cctype>
#include <sstream>

namespace quiverhom {

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

Scalar parse_entry(const std::string& tok, const Field& f) {
    size_t slash = tok.find('/');
    if (slash == std::string::npos) return f.from_int(std::stoll(tok));
    return f.from_fraction(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
}

// [[a,b],[c,d]] -> rows of entries
std::vector<std::vector<Scalar>> parse_matrix_literal(const std::string& s, const Field& f) {
    std::vector<std::vector<Scalar>> rows;
    size_t i = 0;
    if (i >= s.size() || s[i] != '[') throw QhError("matrix literal must start with '['");
    ++i;
    while (i < s.size() && s[i] == '[') {
        ++i;
        std::vector<Scalar> row;
        std::string tok;
        while (i < s.size() && s[i] != ']') {
            if (s[i] == ',') {
                if (!tok.empty()) row.push_back(parse_entry(tok, f));
                tok.clear();
            } else {
                tok += s[i];
            }
            ++i;
        }
        if (!tok.empty()) row.push_back(parse_entry(tok, f));
        if (i >= s.size()) throw QhError("unterminated matrix row");
        ++i; // ']'
        rows.push_back(std::move(row));
        if (i < s.size() && s[i] == ',') ++i;
    }
    if (i >= s.size() || s[i] != ']') throw QhError("matrix literal must end with ']'");
    return rows;
}

QuiverModule parse_module_literal(const AlgebraPtr& a, const std::string& body) {
    const Field& f = a->field();
    std::vector<int> dims(a->vertex_count(), 0);
    std::vector<std::string> arrow_mats(a->arrow_count());
    std::stringstream ss(body);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ';')) parts.push_back(part);
    for (const std::string& raw : parts) {
        std::string p = strip_ws(raw);
        if (p.empty()) continue;
        if (p.rfind("arrow", 0) == 0) {
            std::string rest = p.substr(5);
            size_t colon = rest.find(':');
            if (colon == std::string::npos) throw QhError("arrow entry needs 'arrow name: [[..]]'");
            std::string name = rest.substr(0, colon);
            int ar = a->quiver().arrow_index(name);
            if (ar < 0) throw QhError("unknown arrow '" + name + "' in module literal");
            arrow_mats[ar] = rest.substr(colon + 1);
        } else {
            // comma separated v: d pairs
            std::stringstream ps(p);
            std::string pair;
            while (std::getline(ps, pair, ',')) {
                if (pair.empty()) continue;
                size_t colon = pair.find(':');
                if (colon == std::string::npos) throw QhError("vertex entry needs 'v: dim'");
                int v = resolve_vertex(*a, pair.substr(0, colon));
                dims[v] = int(std::stoll(pair.substr(colon + 1)));
            }
        }
    }
    std::vector<Matrix> act;
    for (int ar = 0; ar < a->arrow_count(); ++ar) {
        const Arrow& arw = a->quiver().arrows[ar];
        Matrix m(f, dims[arw.src], dims[arw.tgt]);
        if (!arrow_mats[ar].empty()) {
            auto rows = parse_matrix_literal(arrow_mats[ar], f);
            if (int(rows.size()) != dims[arw.src])
                throw QhError("arrow '" + arw.label + "' matrix has wrong row count");
            for (int i = 0; i < dims[arw.src]; ++i) {
                if (int(rows[i].size()) != dims[arw.tgt])
                    throw QhError("arrow '" + arw.label + "' matrix has wrong column count");
                for (int j = 0; j < dims[arw.tgt]; ++j) m.at(i, j) = rows[i][j];
            }
        }
        act.push_back(std::move(m));
    }
    QuiverModule out(a, std::move(dims), std::move(act));
    out.validate();
    return out;
}

} // namespace

int resolve_vertex(const BoundQuiverAlgebra& a, const std::string& token) {
    int v = a.quiver().vertex_index(token);
    if (v >= 0) return v;
    try {
        size_t pos = 0;
        long long k = std::stoll(token, &pos);
        if (pos == token.size() && k >= 1 && k <= a.vertex_count()) return int(k - 1);
    } catch (const std::exception&) {
    }
    throw QhError("unknown vertex '" + token + "'");
}

QuiverModule parse_module_expr(const AlgebraPtr& a, const std::string& text, int cap) {
    std::string s = strip_ws(text);
    if (s.empty()) throw QhError("empty module expression");
    if (s == "A") return regular(a);
    if (s == "DA") return coregular(a);
    if (s == "stableA") return stable_module(a, cap);
    if (s == "costableA") return costable_module(a, cap);
    if (s.rfind("module{", 0) == 0 && s.back() == '}')
        return parse_module_literal(a, text.substr(text.find('{') + 1,
                                                   text.rfind('}') - text.find('{') - 1));
    if (s.size() >= 4 && (s[0] == 'P' || s[0] == 'I' || s[0] == 'S') && s[1] == '(' &&
        s.back() == ')') {
        int v = resolve_vertex(*a, s.substr(2, s.size() - 3));
        if (s[0] == 'P') return projective(a, v);
        if (s[0] == 'I') return injective(a, v);
        return simple(a, v);
    }
    throw QhError("cannot parse module expression '" + text + "'");
}

} // namespace quiverhom
