#include "alphasat/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace alphasat {

namespace {

// Whitespace-delimited token stream that skips 'c' comment lines.
class TokenStream {
public:
    explicit TokenStream(std::string_view text) : text_(text) {}

    bool next(std::string_view& token) {
        for (;;) {
            while (pos_ < text_.size() && is_space(text_[pos_]))
                ++pos_;
            if (pos_ >= text_.size())
                return false;
            if (text_[pos_] == 'c' && at_line_start_token()) {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    ++pos_;
                continue;
            }
            std::size_t end = pos_;
            while (end < text_.size() && !is_space(text_[end]))
                ++end;
            token = text_.substr(pos_, end - pos_);
            pos_ = end;
            return true;
        }
    }

private:
    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    }
    bool at_line_start_token() const {
        std::size_t j = pos_;
        while (j > 0 && text_[j - 1] != '\n') {
            if (!is_space(text_[j - 1]))
                return false;
            --j;
        }
        return true;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::int64_t parse_int(std::string_view token, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(std::string("expected ") + what + ", got '" +
                         std::string(token) + "'");
    return value;
}

void parse_header(TokenStream& tokens, const char* format, std::int64_t& n,
                  std::int64_t& m) {
    std::string_view tok;
    if (!tokens.next(tok) || tok != "p")
        throw ParseError("missing 'p' header");
    if (!tokens.next(tok) || tok != format)
        throw ParseError(std::string("expected 'p ") + format + "' header");
    if (!tokens.next(tok))
        throw ParseError("truncated header");
    n = parse_int(tok, "variable count");
    if (!tokens.next(tok))
        throw ParseError("truncated header");
    m = parse_int(tok, "clause count");
    if (n < 0 || m < 0)
        throw ParseError("negative counts in header");
}

}  // namespace

CnfFormula read_dimacs(std::string_view text) {
    TokenStream tokens(text);
    std::int64_t n = 0, m = 0;
    parse_header(tokens, "cnf", n, m);

    CnfFormula f;
    f.n = static_cast<int>(n);
    f.clauses.reserve(static_cast<std::size_t>(m));

    std::vector<Literal> lits;
    std::string_view tok;
    while (tokens.next(tok)) {
        const std::int64_t lit = parse_int(tok, "literal");
        if (lit == 0) {
            try {
                f.clauses.push_back(Clause::from_literals(lits));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
            lits.clear();
            continue;
        }
        const std::int64_t var = lit > 0 ? lit : -lit;
        if (var > n)
            throw ParseError("literal out of range: " + std::string(tok));
        lits.push_back(Literal{static_cast<VertexId>(var - 1), lit < 0});
    }
    if (!lits.empty())
        throw ParseError("clause missing terminating 0");
    if (f.clauses.size() != static_cast<std::size_t>(m))
        throw ParseError("clause count does not match header");
    return f;
}

std::string write_dimacs(const CnfFormula& f) {
    f.validate();
    std::ostringstream out;
    out << "p cnf " << f.n << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& lit : c.literals)
            out << (lit.negated ? -(lit.var + 1) : lit.var + 1) << ' ';
        out << "0\n";
    }
    return out.str();
}

Hypergraph read_hypergraph(std::string_view text) {
    // Line-based: comment ('c') and blank lines anywhere, one "p hyg n m"
    // header, then one edge per line.
    Hypergraph h;
    std::int64_t n = 0, m = 0;
    bool have_header = false;

    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t eol = text.find('\n', start);
        std::string_view line = text.substr(
            start, eol == std::string_view::npos ? text.size() - start : eol - start);
        start = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        TokenStream fields(line);
        std::string_view tok;
        if (!fields.next(tok))
            continue;  // blank or comment line
        if (!have_header) {
            if (tok != "p")
                throw ParseError("missing 'p hyg' header");
            if (!fields.next(tok) || tok != "hyg")
                throw ParseError("expected 'p hyg' header");
            if (!fields.next(tok))
                throw ParseError("truncated header");
            n = parse_int(tok, "vertex count");
            if (!fields.next(tok))
                throw ParseError("truncated header");
            m = parse_int(tok, "edge count");
            if (n < 0 || m < 0)
                throw ParseError("negative counts in header");
            h.n = static_cast<int>(n);
            h.edges.reserve(static_cast<std::size_t>(m));
            have_header = true;
            continue;
        }

        Edge edge;
        do {
            const std::int64_t v = parse_int(tok, "vertex id");
            if (v < 1 || v > n)
                throw ParseError("vertex out of range: " + std::string(tok));
            edge.push_back(static_cast<VertexId>(v - 1));
        } while (fields.next(tok));
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
            throw ParseError("duplicate vertex within an edge");
        h.edges.push_back(std::move(edge));
    }
    if (!have_header)
        throw ParseError("missing 'p hyg' header");
    if (h.edges.size() != static_cast<std::size_t>(m))
        throw ParseError("edge count does not match header");
    return h;
}

std::string write_hypergraph(const Hypergraph& h) {
    h.validate();
    std::ostringstream out;
    out << "p hyg " << h.n << ' ' << h.edges.size() << '\n';
    for (const Edge& e : h.edges) {
        for (std::size_t j = 0; j < e.size(); ++j)
            out << (j ? " " : "") << e[j] + 1;
        out << '\n';
    }
    return out.str();
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write " + path);
    out << content;
}

}  // namespace

CnfFormula load_formula(const std::string& path) { return read_dimacs(read_file(path)); }

void save_formula(const std::string& path, const CnfFormula& f) {
    write_file(path, write_dimacs(f));
}

Hypergraph load_hypergraph(const std::string& path) {
    return read_hypergraph(read_file(path));
}

void save_hypergraph(const std::string& path, const Hypergraph& h) {
    write_file(path, write_hypergraph(h));
}

}  // namespace alphasat
