#include "quiverhom/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace quiverhom {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool looks_like_number(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i >= s.size()) return false;
    bool seen_slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !seen_slash && i + 1 < s.size()) { seen_slash = true; continue; }
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Scalar parse_coef(const std::string& tok, const Field& f, int line) {
    size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return f.from_int(std::stoll(tok));
        return f.from_fraction(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError(line, "bad coefficient '" + tok + "'");
    }
}

struct PendingRelation {
    std::string text;
    int line;
};

} // namespace

ParsedAlgebra parse_algebra_text(const std::string& text, int length_cap) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    bool have_field = false;
    Field field = Field::rationals();
    Quiver quiver;
    std::vector<PendingRelation> pending;
    bool have_nakayama = false;
    KupischSeries kup;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = strip(line);
        if (line.empty()) continue;

        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        std::string rest = strip(line.substr(kw.size()));

        if (kw == "field") {
            if (have_field) throw ParseError(lineno, "duplicate field line");
            std::string name = rest;
            name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
            try {
                field = Field::parse(name);
            } catch (const QhError& e) {
                throw ParseError(lineno, e.what());
            }
            have_field = true;
        } else if (kw == "vertices") {
            if (!quiver.vertex_labels.empty()) throw ParseError(lineno, "duplicate vertices line");
            quiver.vertex_labels = split_ws(rest);
            if (quiver.vertex_labels.empty()) throw ParseError(lineno, "vertices line lists none");
        } else if (kw == "arrow") {
            // arrow <name> : <src> -> <tgt>
            size_t colon = rest.find(':');
            size_t arr = rest.find("->");
            if (colon == std::string::npos || arr == std::string::npos || arr < colon)
                throw ParseError(lineno, "expected 'arrow name : src -> tgt'");
            std::string name = strip(rest.substr(0, colon));
            std::string src = strip(rest.substr(colon + 1, arr - colon - 1));
            std::string tgt = strip(rest.substr(arr + 2));
            int si = quiver.vertex_index(src), ti = quiver.vertex_index(tgt);
            if (name.empty()) throw ParseError(lineno, "arrow needs a name");
            if (si < 0) throw ParseError(lineno, "unknown source vertex '" + src + "'");
            if (ti < 0) throw ParseError(lineno, "unknown target vertex '" + tgt + "'");
            quiver.arrows.push_back({name, si, ti});
        } else if (kw == "relation") {
            pending.push_back({rest, lineno});
        } else if (kw == "nakayama") {
            std::istringstream rs(rest);
            std::string kind, series;
            rs >> kind >> series;
            if (kind != "linear" && kind != "cyclic")
                throw ParseError(lineno, "nakayama kind must be linear or cyclic");
            kup.kind = kind == "linear" ? KupischSeries::Kind::Linear : KupischSeries::Kind::Cyclic;
            std::string tail;
            while (rs >> tail) series += tail; // tolerate spaces after commas
            if (series.empty()) throw ParseError(lineno, "nakayama line lists no entries");
            std::stringstream ss(series);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = strip(item);
                if (item.empty()) continue;
                try {
                    kup.entries.push_back(int(std::stoll(item)));
                } catch (const std::exception&) {
                    throw ParseError(lineno, "bad Kupisch entry '" + item + "'");
                }
            }
            have_nakayama = true;
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }

    if (!have_field) throw ParseError(lineno, "missing field line");

    ParsedAlgebra out;
    if (have_nakayama) {
        if (!quiver.vertex_labels.empty() || !pending.empty())
            throw ParseError(lineno, "nakayama line cannot be mixed with vertices/arrows/relations");
        try {
            out.algebra = BoundQuiverAlgebra::nakayama(kup, field);
        } catch (const InvalidKupischError& e) {
            throw ParseError(lineno, e.what());
        }
        return out;
    }

    if (quiver.vertex_labels.empty()) throw ParseError(lineno, "missing vertices line");
    quiver.validate();

    std::vector<Relation> rels;
    for (const PendingRelation& pr : pending) {
        // Split on top-level + / - after removing whitespace.
        std::string s = pr.text;
        s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
        if (s.empty()) throw ParseError(pr.line, "empty relation");
        Relation rel;
        size_t i = 0;
        while (i < s.size()) {
            bool neg = false;
            while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                if (s[i] == '-') neg = !neg;
                ++i;
            }
            size_t j = i;
            while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
            std::string term = s.substr(i, j - i);
            i = j;
            if (term.empty()) throw ParseError(pr.line, "empty relation term");
            std::vector<std::string> factors;
            std::stringstream fs(term);
            std::string fac;
            while (std::getline(fs, fac, '*')) factors.push_back(fac);
            RelationTerm t;
            t.coef = field.one();
            size_t k = 0;
            if (looks_like_number(factors[0]) && quiver.arrow_index(factors[0]) < 0) {
                t.coef = parse_coef(factors[0], field, pr.line);
                k = 1;
            }
            if (k >= factors.size())
                throw ParseError(pr.line, "relation term '" + term + "' has no path");
            for (; k < factors.size(); ++k) {
                int a = quiver.arrow_index(factors[k]);
                if (a < 0) throw ParseError(pr.line, "unknown arrow '" + factors[k] + "'");
                t.arrows.push_back(a);
            }
            if (neg) t.coef = field.neg(t.coef);
            rel.terms.push_back(std::move(t));
        }
        try {
            rel.validate(quiver, field);
        } catch (const QhError& e) {
            throw ParseError(pr.line, e.what());
        }
        rels.push_back(std::move(rel));
    }

    if (!quiver.connected())
        out.warnings.push_back("quiver is not connected");
    out.algebra = BoundQuiverAlgebra::build(quiver, rels, field, length_cap);
    return out;
}

ParsedAlgebra parse_algebra_file(const std::string& path, int length_cap) {
    std::ifstream in(path);
    if (!in) throw QhError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_algebra_text(buf.str(), length_cap);
}

std::string serialize_algebra(const BoundQuiverAlgebra& a) {
    std::ostringstream out;
    out << "field " << a.field().name() << "\n";
    out << "vertices";
    for (const std::string& v : a.quiver().vertex_labels) out << " " << v;
    out << "\n";
    for (const Arrow& ar : a.quiver().arrows)
        out << "arrow " << ar.label << " : " << a.quiver().vertex_labels[ar.src] << " -> "
            << a.quiver().vertex_labels[ar.tgt] << "\n";
    for (const Relation& r : a.relations()) {
        out << "relation ";
        for (size_t t = 0; t < r.terms.size(); ++t) {
            if (t) out << " + ";
            out << a.field().to_string(r.terms[t].coef);
            for (int arw : r.terms[t].arrows) out << "*" << a.quiver().arrows[arw].label;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace quiverhom
