#include "mtc/document.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

#include "mtc/errors.hpp"

namespace mtc {

const CodeBlock& CodeDocument::get(const std::string& name) const {
    for (const auto& b : blocks_)
        if (b.name == name) return b;
    throw DomainError("no code named '" + name + "'");
}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;
    std::string text;  // comment stripped
    std::vector<Token> tokens;
};

std::vector<Token> split(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i == s.size()) break;
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        out.push_back({s.substr(start, i - start), start + 1});
    }
    return out;
}

std::vector<Line> read_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t n = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string s(text.substr(pos, end - pos));
        ++n;
        if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
        if (!s.empty() && s.back() == '\r') s.pop_back();
        auto toks = split(s);
        if (!toks.empty()) out.push_back({n, s, std::move(toks)});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(const Line& l, std::size_t column, const std::string& what) { throw ParseError(what, l.number, column); }

std::size_t to_count(const Line& l, const Token& t) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size()) fail(l, t.column, "expected a non-negative integer, got '" + t.text + "'");
    return v;
}

Elem to_elem(const Field& f, const Line& l, const Token& t) {
    try {
        return parse_element(f, t.text);
    } catch (const ParseError& e) {
        fail(l, t.column + (e.column() ? e.column() - 1 : 0), e.message());
    } catch (const DomainError& e) {
        fail(l, t.column, e.what());
    }
}

Field parse_field(const Line& l) {
    if (l.tokens[0].text != "field" || l.tokens.size() < 2) fail(l, l.tokens[0].column, "document must start with 'field GF(q)'");
    static const std::regex re(R"(GF\((\d+)(?:\^(\d+))?\))");
    std::smatch m;
    const Token& t = l.tokens[1];
    if (!std::regex_match(t.text, m, re)) fail(l, t.column, "expected GF(q) or GF(p^e), got '" + t.text + "'");
    unsigned long long q = std::stoull(m[1]);
    unsigned p = 0, e = 0;
    if (m[2].matched) {
        p = static_cast<unsigned>(q);
        e = static_cast<unsigned>(std::stoul(m[2]));
    } else {
        // q = p^e: the least prime factor of q is p.
        for (unsigned long long d = 2; d * d <= q && !p; ++d)
            if (q % d == 0) p = static_cast<unsigned>(d);
        if (!p && q > 1) p = static_cast<unsigned>(q);
        if (!p) fail(l, t.column, "field order must be a prime power");
        unsigned long long r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        if (r != 1) fail(l, t.column, "field order " + std::to_string(q) + " is not a prime power");
    }
    std::optional<std::vector<unsigned>> modulus;
    if (l.tokens.size() > 2) {
        if (l.tokens[2].text != "mod") fail(l, l.tokens[2].column, "expected 'mod' after the field");
        std::vector<unsigned> c;
        for (std::size_t i = 3; i < l.tokens.size(); ++i) c.push_back(static_cast<unsigned>(to_count(l, l.tokens[i])));
        modulus = std::move(c);
    }
    try {
        return Field::create(p, e, modulus);
    } catch (const DomainError& err) {
        fail(l, t.column, err.what());
    }
}

class Parser {
  public:
    explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

    CodeDocument run() {
        if (lines_.empty()) throw ParseError("empty document", 1, 1);
        Field f = parse_field(lines_[0]);
        std::vector<CodeBlock> blocks;
        i_ = 1;
        while (i_ < lines_.size()) {
            CodeBlock b = block(f);
            for (const auto& o : blocks)
                if (o.name == b.name) throw ParseError("duplicate code name '" + b.name + "'", b.line, 6);
            blocks.push_back(std::move(b));
        }
        if (blocks.empty()) throw ParseError("document declares no codes", lines_[0].number, 1);
        return CodeDocument(std::move(f), std::move(blocks));
    }

  private:
    const Line& next(const std::string& what) {
        if (i_ >= lines_.size()) throw ParseError("unexpected end of document, expected " + what, lines_.back().number + 1, 1);
        return lines_[i_++];
    }

    void expect_args(const Line& l, std::size_t n) {
        if (l.tokens.size() != n + 1)
            fail(l, l.tokens[0].column, "'" + l.tokens[0].text + "' takes " + std::to_string(n) + " argument(s)");
    }

    Matrix scalar_rows(const Field& f, const Line& head) {
        expect_args(head, 2);
        const std::size_t r = to_count(head, head.tokens[1]), c = to_count(head, head.tokens[2]);
        if (c == 0) fail(head, head.tokens[2].column, "code length must be positive");
        std::vector<Vec> rows;
        for (std::size_t k = 0; k < r; ++k) {
            const Line& l = next("a matrix row");
            if (l.tokens.size() != c)
                fail(l, 1, "matrix row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(c));
            Vec v;
            for (const auto& t : l.tokens) v.push_back(to_elem(f, l, t));
            rows.push_back(std::move(v));
        }
        return Matrix(f, c, rows);
    }

    PolyMatrix poly_rows(const Field& f, std::size_t ell) {
        std::vector<std::vector<Poly>> rows;
        for (std::size_t k = 0; k < ell; ++k) {
            const Line& l = next("a GPM row");
            std::vector<Poly> row;
            std::size_t start = 0;
            for (;;) {
                std::size_t bar = l.text.find('|', start);
                std::string piece = l.text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
                try {
                    row.push_back(parse_poly(f, piece));
                } catch (const ParseError& e) {
                    fail(l, start + (e.column() ? e.column() : 1), e.message());
                }
                if (bar == std::string::npos) break;
                start = bar + 1;
            }
            if (row.size() != ell)
                fail(l, 1, "GPM row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(ell));
            rows.push_back(std::move(row));
        }
        return PolyMatrix(f, ell, std::move(rows));
    }

    CodeBlock block(const Field& f) {
        const Line& head = next("'code NAME'");
        if (head.tokens[0].text != "code") fail(head, head.tokens[0].column, "expected 'code NAME', got '" + head.tokens[0].text + "'");
        expect_args(head, 1);
        static const std::regex name_re(R"([A-Za-z_][A-Za-z0-9_.\-]*)");
        const std::string name = head.tokens[1].text;
        if (!std::regex_match(name, name_re)) fail(head, head.tokens[1].column, "invalid code name '" + name + "'");

        std::optional<std::size_t> ell;
        std::optional<std::vector<std::size_t>> blocks;
        std::optional<std::vector<Elem>> shifts;
        for (;;) {
            const Line& l = next("'matrix' or 'gpm'");
            const std::string& kw = l.tokens[0].text;
            if (kw == "mt") {
                expect_args(l, 1);
                ell = to_count(l, l.tokens[1]);
                if (*ell == 0) fail(l, l.tokens[1].column, "an MT code needs at least one block");
            } else if (kw == "blocks" || kw == "shifts") {
                if (!ell) fail(l, 1, "'" + kw + "' must follow 'mt'");
                if (l.tokens.size() != *ell + 1)
                    fail(l, 1, "'" + kw + "' needs " + std::to_string(*ell) + " entries");
                if (kw == "blocks") {
                    blocks.emplace();
                    for (std::size_t k = 1; k < l.tokens.size(); ++k) blocks->push_back(to_count(l, l.tokens[k]));
                } else {
                    shifts.emplace();
                    for (std::size_t k = 1; k < l.tokens.size(); ++k) shifts->push_back(to_elem(f, l, l.tokens[k]));
                }
            } else if (kw == "matrix" || kw == "gpm") {
                std::optional<MTProfile> profile;
                if (ell) {
                    if (!blocks || !shifts) fail(l, 1, "an MT code needs 'blocks' and 'shifts' before its generators");
                    try {
                        profile.emplace(f, *blocks, *shifts);
                    } catch (const DomainError& e) {
                        fail(l, 1, e.what());
                    }
                }
                const std::string where = "code " + name + " (line " + std::to_string(head.number) + "): ";
                try {
                    if (kw == "matrix") {
                        LinearCode c = LinearCode::from_generator(scalar_rows(f, l));
                        if (!profile) return {name, head.number, std::move(c), std::nullopt, std::nullopt};
                        MTCode m = mt_from_linear(c, *profile);
                        return {name, head.number, std::move(c), profile, std::move(m)};
                    }
                    if (!profile) fail(l, 1, "'gpm' needs an 'mt' profile");
                    expect_args(l, 0);
                    MTCode m = MTCode::from_generators(*profile, poly_rows(f, *ell));
                    LinearCode c = mt_to_linear(m);
                    return {name, head.number, std::move(c), profile, std::move(m)};
                } catch (const DomainError& e) {
                    throw DomainError(where + e.what());
                }
            } else {
                fail(l, l.tokens[0].column, "unknown directive '" + kw + "'");
            }
        }
    }

    std::vector<Line> lines_;
    std::size_t i_ = 0;
};

}  // namespace

CodeDocument parse_document(std::string_view text) { return Parser(read_lines(text)).run(); }

CodeDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

}  // namespace mtc
