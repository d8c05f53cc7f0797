#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "tautilt/algebra.hpp"
#include "tautilt/error.hpp"

namespace tautilt {
namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) {
                ++j;
            }
            t.kind = Tok::Ident;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = Tok::Int;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            t.kind = Tok::Punct;
            t.text = "->";
            advance(2);
        } else if (std::string_view("{}:;,*+-/").find(c) != std::string_view::npos) {
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw ParseError("quiver-algebra", std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    AlgebraSource run() {
        bool wrapped = false;
        if (peek_ident("algebra")) {
            next();
            src_.name = expect(Tok::Ident, "algebra name").text;
            expect_punct("{");
            wrapped = true;
        } else {
            src_.name = "A";
        }
        keyword("vertices");
        vertices();
        if (peek_ident("arrows")) {
            keyword("arrows");
            arrows();
        }
        if (peek_ident("relations")) {
            keyword("relations");
            relations();
        }
        if (wrapped) expect_punct("}");
        if (cur().kind != Tok::End) fail("unexpected '" + cur().text + "'");
        return std::move(src_);
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool peek_punct(const char* p) const { return cur().kind == Tok::Punct && cur().text == p; }
    bool peek_ident(const char* w) const { return cur().kind == Tok::Ident && cur().text == w; }

    [[noreturn]] void fail(const std::string& what) const { fail_at(cur(), what); }
    [[noreturn]] static void fail_at(const Token& t, const std::string& what) {
        throw ParseError("quiver-algebra", what, t.line, t.col);
    }

    const Token& expect(Tok kind, const char* what) {
        if (cur().kind != kind) fail(std::string("expected ") + what);
        return next();
    }
    void expect_punct(const char* p) {
        if (!peek_punct(p)) fail(std::string("expected '") + p + "'");
        next();
    }
    void keyword(const char* w) {
        if (!peek_ident(w)) fail(std::string("expected '") + w + "'");
        next();
        if (peek_punct(":")) next();
    }

    int integer() {
        const Token& t = expect(Tok::Int, "integer");
        try {
            return std::stoi(t.text);
        } catch (const std::exception&) {
            fail_at(t, "integer out of range");
        }
    }

    void vertices() {
        std::set<int> seen;
        while (cur().kind == Tok::Int) {
            const Token& t = cur();
            const int v = integer();
            if (!seen.insert(v).second) fail_at(t, "duplicate vertex " + std::to_string(v));
            src_.vertex_labels.push_back(v);
            if (peek_punct(",")) next();
        }
        expect_punct(";");
    }

    int vertex(const Token& t, int label) const {
        for (std::size_t k = 0; k < src_.vertex_labels.size(); ++k) {
            if (src_.vertex_labels[k] == label) return static_cast<int>(k);
        }
        fail_at(t, "unknown vertex " + std::to_string(label));
    }

    void arrows() {
        while (cur().kind == Tok::Ident) {
            const Token name = next();
            for (const auto& a : src_.arrows) {
                if (a.name == name.text) fail_at(name, "duplicate arrow '" + name.text + "'");
            }
            expect_punct(":");
            const Token s = cur();
            const int from = vertex(s, integer());
            expect_punct("->");
            const Token t = cur();
            const int to = vertex(t, integer());
            src_.arrows.push_back({name.text, from, to});
            if (!peek_punct(",")) break;
            next();
        }
        expect_punct(";");
    }

    int arrow(const Token& t) const {
        for (std::size_t k = 0; k < src_.arrows.size(); ++k) {
            if (src_.arrows[k].name == t.text) return static_cast<int>(k);
        }
        fail_at(t, "unknown arrow '" + t.text + "'");
    }

    Rational coefficient() {
        const Token& t = next();
        std::string lit = t.text;
        if (peek_punct("/")) {
            next();
            lit += "/" + expect(Tok::Int, "denominator").text;
        }
        try {
            return Rational::parse(lit);
        } catch (const ParseError& e) {
            fail_at(t, e.what());
        }
    }

    void relations() {
        for (;;) {
            relation();
            if (!peek_punct(",")) break;
            next();
        }
        expect_punct(";");
    }

    void relation() {
        Relation rel;
        bool first = true;
        const Token start = cur();
        for (;;) {
            Rational sign(1);
            if (peek_punct("+") || peek_punct("-")) {
                if (peek_punct("-")) sign = Rational(-1);
                next();
            } else if (!first) {
                break;
            }
            const Token term_start = cur();
            Rational coeff(1);
            if (cur().kind == Tok::Int) {
                coeff = coefficient();
                expect_punct("*");
            }
            if (coeff.is_zero()) fail_at(term_start, "zero coefficient in relation");
            std::vector<Token> names;
            names.push_back(expect(Tok::Ident, "arrow name"));
            while (peek_punct("*")) {
                next();
                names.push_back(expect(Tok::Ident, "arrow name"));
            }
            RelationTerm term;
            term.coeff = sign * coeff;
            // "b*a" is read right to left: a first, then b
            for (auto it = names.rbegin(); it != names.rend(); ++it) term.arrows.push_back(arrow(*it));
            for (std::size_t k = 1; k < term.arrows.size(); ++k) {
                const auto& prev = src_.arrows[static_cast<std::size_t>(term.arrows[k - 1])];
                const auto& here = src_.arrows[static_cast<std::size_t>(term.arrows[k])];
                if (prev.target != here.source) fail_at(term_start, "path not composable");
            }
            if (term.arrows.size() < 2) fail_at(term_start, "path length < 2 in relation");
            const int s = src_.arrows[static_cast<std::size_t>(term.arrows.front())].source;
            const int t = src_.arrows[static_cast<std::size_t>(term.arrows.back())].target;
            if (first) {
                rel.source = s;
                rel.target = t;
            } else if (rel.source != s || rel.target != t) {
                fail_at(term_start, "relation terms not parallel");
            }
            rel.terms.push_back(std::move(term));
            first = false;
        }
        if (rel.terms.empty()) fail_at(start, "empty relation");
        src_.relations.push_back(std::move(rel));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    AlgebraSource src_;
};

}  // namespace

AlgebraSource parse_algebra(const std::string& text) { return Parser(lex(text)).run(); }

std::string AlgebraSource::path_text(const std::vector<int>& path) const {
    std::string s;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += arrows[static_cast<std::size_t>(*it)].name;
    }
    return s;
}

std::string AlgebraSource::canonical_text() const {
    std::string s = "vertices";
    for (int v : vertex_labels) s += " " + std::to_string(v);
    s += ";arrows";
    for (const auto& a : arrows) {
        s += " " + a.name + ":" + std::to_string(vertex_labels[static_cast<std::size_t>(a.source)]) + "->" +
             std::to_string(vertex_labels[static_cast<std::size_t>(a.target)]);
    }
    s += ";relations";
    for (const auto& r : relations) {
        s += " ";
        for (const auto& t : r.terms) s += "+" + t.coeff.str() + "*" + path_text(t.arrows);
    }
    return s;
}

}  // namespace tautilt
