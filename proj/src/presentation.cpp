#include "ccauto/presentation.hpp"

#include <cctype>
#include <set>

namespace ccauto {

int Presentation::generator_index(std::string_view gen) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == gen)
            return static_cast<int>(i);
    return -1;
}

const Presentation* Catalog::find(std::string_view name) const {
    for (const Presentation& p : entries)
        if (p.name == name)
            return &p;
    return nullptr;
}

namespace {

enum class TokKind { Name, Int, Star, Caret, LParen, RParen, LBracket, RBracket, Comma, Equals, End };

struct Token {
    TokKind kind;
    std::string text;
    long long value = 0; // for Int
    int column = 0;      // 1-based
};

// Tokenizes one logical line (comments already stripped).
class LineLexer {
public:
    LineLexer(std::string_view text, int line) : text_(text), line_(line) {}

    std::vector<Token> all() {
        std::vector<Token> out;
        for (;;) {
            Token t = next();
            if (t.kind == TokKind::End)
                break;
            out.push_back(t);
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg, int col) const { throw ParseError(msg, line_, col); }

    Token next() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size())
            return {TokKind::End, "", 0, col};
        char c = text_[pos_];
        switch (c) {
        case '*': ++pos_; return {TokKind::Star, "*", 0, col};
        case '^': ++pos_; return {TokKind::Caret, "^", 0, col};
        case '(': ++pos_; return {TokKind::LParen, "(", 0, col};
        case ')': ++pos_; return {TokKind::RParen, ")", 0, col};
        case '[': ++pos_; return {TokKind::LBracket, "[", 0, col};
        case ']': ++pos_; return {TokKind::RBracket, "]", 0, col};
        case ',': ++pos_; return {TokKind::Comma, ",", 0, col};
        case '=': ++pos_; return {TokKind::Equals, "=", 0, col};
        default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            // '_' is accepted here so the 'expected_order' keyword lexes;
            // generator names themselves stay letters/digits (valid_name).
            size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_'))
                ++pos_;
            return {TokKind::Name, std::string(text_.substr(start, pos_ - start)), 0, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            size_t start = pos_;
            ++pos_;
            if (c == '-' && (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))))
                fail("expected digits after '-'", col);
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string digits(text_.substr(start, pos_ - start));
            long long v;
            try {
                v = std::stoll(digits);
            } catch (const std::exception&) {
                fail("integer out of range: " + digits, col);
            }
            return {TokKind::Int, digits, v, col};
        }
        fail(std::string("unexpected character '") + c + "'", col);
    }

    std::string_view text_;
    int line_;
    size_t pos_ = 0;
};

// Recursive-descent word parser over a token stream.
class WordParser {
public:
    WordParser(const std::vector<Token>& toks, size_t pos, const std::vector<std::string>& generators,
               int line)
        : toks_(toks), pos_(pos), generators_(generators), line_(line) {}

    Word parse_full_word() {
        Word w = parse_word_expr();
        if (pos_ < toks_.size())
            fail("unexpected token '" + toks_[pos_].text + "' after word", cur_col());
        return w;
    }

    // Parses until a token the word grammar cannot consume (e.g. '=').
    Word parse_word_expr() {
        Word w = parse_term();
        while (pos_ < toks_.size() && toks_[pos_].kind == TokKind::Star) {
            ++pos_;
            w = word_concat(w, parse_term());
        }
        return w;
    }

    size_t position() const { return pos_; }

private:
    [[noreturn]] void fail(const std::string& msg, int col) const { throw ParseError(msg, line_, col); }

    int cur_col() const {
        if (pos_ < toks_.size())
            return toks_[pos_].column;
        return toks_.empty() ? 1 : toks_.back().column + static_cast<int>(toks_.back().text.size());
    }

    const Token& expect(TokKind kind, const char* what) {
        if (pos_ >= toks_.size() || toks_[pos_].kind != kind)
            fail(std::string("expected ") + what, cur_col());
        return toks_[pos_++];
    }

    Word parse_term() {
        Word atom = parse_atom();
        if (pos_ < toks_.size() && toks_[pos_].kind == TokKind::Caret) {
            ++pos_;
            const Token& e = expect(TokKind::Int, "integer exponent");
            if (e.value == 0)
                fail("zero exponent", e.column);
            if (e.value > kMaxExponent || e.value < -kMaxExponent)
                fail("exponent out of range: " + e.text, e.column);
            return word_power(atom, static_cast<int>(e.value));
        }
        return atom;
    }

    Word parse_atom() {
        if (pos_ >= toks_.size())
            fail("expected word", cur_col());
        const Token& t = toks_[pos_];
        switch (t.kind) {
        case TokKind::Name: {
            ++pos_;
            int gi = -1;
            for (size_t i = 0; i < generators_.size(); ++i)
                if (generators_[i] == t.text) {
                    gi = static_cast<int>(i);
                    break;
                }
            if (gi < 0)
                fail("unknown generator '" + t.text + "'", t.column);
            return word_single(gi, 1);
        }
        case TokKind::LParen: {
            ++pos_;
            Word inner = parse_word_expr();
            expect(TokKind::RParen, "')'");
            return inner;
        }
        case TokKind::LBracket: {
            ++pos_;
            Word a = parse_word_expr();
            expect(TokKind::Comma, "','");
            Word b = parse_word_expr();
            expect(TokKind::RBracket, "']'");
            return word_commutator(a, b);
        }
        default:
            fail("unexpected token '" + t.text + "' in word", t.column);
        }
    }

    const std::vector<Token>& toks_;
    size_t pos_;
    const std::vector<std::string>& generators_;
    int line_;
};

bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)))
            return false;
    return true;
}

struct Line {
    int number;
    std::vector<Token> toks;
};

} // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
    LineLexer lex(text, 1);
    std::vector<Token> toks = lex.all();
    if (toks.empty())
        throw ParseError("empty word", 1, 1);
    WordParser p(toks, 0, generators, 1);
    return p.parse_full_word();
}

Word relation_to_relator(const Relation& r) {
    return word_concat(r.lhs, word_inverse(r.rhs));
}

Catalog parse_catalog(std::string_view text) {
    // Split into content lines, stripping comments.
    std::vector<Line> lines;
    {
        int lineno = 0;
        size_t start = 0;
        while (start <= text.size()) {
            size_t nl = text.find('\n', start);
            std::string_view raw =
                text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
            ++lineno;
            size_t hash = raw.find('#');
            if (hash != std::string_view::npos)
                raw = raw.substr(0, hash);
            LineLexer lex(raw, lineno);
            std::vector<Token> toks = lex.all();
            if (!toks.empty())
                lines.push_back({lineno, std::move(toks)});
            if (nl == std::string_view::npos)
                break;
            start = nl + 1;
        }
    }

    Catalog cat;
    std::set<std::string> seen_names;
    size_t i = 0;
    while (i < lines.size()) {
        const Line& header = lines[i];
        const std::vector<Token>& h = header.toks;
        if (h[0].kind != TokKind::Name || h[0].text != "group")
            throw ParseError("expected 'group' stanza header, got '" + h[0].text + "'", header.number,
                             h[0].column);
        if (h.size() != 4 || h[1].kind != TokKind::Name || h[2].kind != TokKind::Name ||
            h[2].text != "expected_order" || h[3].kind != TokKind::Int)
            throw ParseError("malformed group header; expected 'group NAME expected_order INT'",
                             header.number, h.size() > 1 ? h[1].column : h[0].column);

        Presentation p;
        p.name = h[1].text;
        if (!seen_names.insert(p.name).second)
            throw ParseError("duplicate group name '" + p.name + "'", header.number, h[1].column);
        if (h[3].value < 1)
            throw ParseError("expected_order must be positive", header.number, h[3].column);
        p.expected_order = static_cast<int>(h[3].value);
        ++i;

        if (i >= lines.size() || lines[i].toks[0].kind != TokKind::Name || lines[i].toks[0].text != "gens")
            throw ParseError("expected 'gens' line in group '" + p.name + "'",
                             i < lines.size() ? lines[i].number : header.number + 1, 1);
        {
            const Line& gl = lines[i];
            if (gl.toks.size() < 2)
                throw ParseError("'gens' line lists no generators", gl.number, gl.toks[0].column);
            std::set<std::string> gset;
            for (size_t k = 1; k < gl.toks.size(); ++k) {
                const Token& t = gl.toks[k];
                if (t.kind != TokKind::Name || !valid_name(t.text))
                    throw ParseError("invalid generator name '" + t.text + "'", gl.number, t.column);
                if (!gset.insert(t.text).second)
                    throw ParseError("duplicate generator name '" + t.text + "'", gl.number, t.column);
                p.generators.push_back(t.text);
            }
            ++i;
        }

        bool closed = false;
        while (i < lines.size()) {
            const Line& ln = lines[i];
            const Token& first = ln.toks[0];
            if (first.kind == TokKind::Name && first.text == "end") {
                if (ln.toks.size() != 1)
                    throw ParseError("unexpected tokens after 'end'", ln.number, ln.toks[1].column);
                closed = true;
                ++i;
                break;
            }
            if (first.kind != TokKind::Name || first.text != "rel")
                throw ParseError("expected 'rel' or 'end' in group '" + p.name + "'", ln.number,
                                 first.column);
            WordParser wp(ln.toks, 1, p.generators, ln.number);
            Relation rel;
            rel.lhs = wp.parse_word_expr();
            size_t pos = wp.position();
            if (pos < ln.toks.size()) {
                if (ln.toks[pos].kind != TokKind::Equals)
                    throw ParseError("unexpected token '" + ln.toks[pos].text + "' in relation",
                                     ln.number, ln.toks[pos].column);
                WordParser rp(ln.toks, pos + 1, p.generators, ln.number);
                rel.rhs = rp.parse_word_expr();
                if (rp.position() != ln.toks.size())
                    throw ParseError("unexpected trailing tokens in relation", ln.number,
                                     ln.toks[rp.position()].column);
            }
            p.relations.push_back(std::move(rel));
            ++i;
        }
        if (!closed)
            throw ParseError("group '" + p.name + "' not closed with 'end'",
                             lines.empty() ? 1 : lines.back().number, 1);
        cat.entries.push_back(std::move(p));
    }
    return cat;
}

} // namespace ccauto
