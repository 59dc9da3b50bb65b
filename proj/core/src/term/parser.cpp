#include "sgm/term/parser.hpp"

#include <cctype>

#include "sgm/error.hpp"

namespace sgm {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const AtomTable& atoms) : text_(text), atoms_(atoms) {}

    PolyhedronTerm parse()
    {
        PolyhedronTerm t = term();
        skip();
        if (pos_ != text_.size()) throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return t;
    }

  private:
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c)
    {
        skip();
        if (pos_ >= text_.size()) throw SyntaxError(std::string("expected '") + c + "' but input ended", pos_);
        if (text_[pos_] != c)
            throw SyntaxError(std::string("expected '") + c + "' but found '" + text_[pos_] + "'", pos_);
        ++pos_;
    }

    std::vector<PolyhedronTerm> list(char close)
    {
        std::vector<PolyhedronTerm> parts{term()};
        while (peek(',')) {
            ++pos_;
            parts.push_back(term());
        }
        expect(close);
        return parts;
    }

    PolyhedronTerm term()
    {
        skip();
        if (pos_ >= text_.size()) throw SyntaxError("expected a term but input ended", pos_);
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (c == '@') {
            ++pos_;
            std::string name;
            while (pos_ < text_.size() && is_name_char(text_[pos_])) name += text_[pos_++];
            if (name.empty()) throw SyntaxError("expected an atom name after '@'", pos_);
            auto a = atoms_.find(name);
            if (!a) fail(ErrorKind::invalid_argument, "unknown atom @" + name);
            return PolyhedronTerm::atom(*a);
        }
        if (text_.compare(pos_, 2, "CS") == 0) {
            pos_ += 2;
            expect('[');
            return PolyhedronTerm::connsum(list(']'));
        }
        if (c == 'B' || c == 'P') {
            ++pos_;
            expect('(');
            auto parts = list(')');
            if (c == 'B') return PolyhedronTerm::bouquet(std::move(parts));
            if (parts.size() != 2) throw SyntaxError("a product takes exactly two factors", start);
            return PolyhedronTerm::product(parts[0], parts[1]);
        }
        if (c == 'S') {
            ++pos_;
            skip();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError("expected a sphere dimension after 'S'", pos_);
            long long d = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                d = d * 10 + (text_[pos_++] - '0');
                if (d > 1'000'000) d = 1'000'000;
            }
            return PolyhedronTerm::atom(atoms_.sphere(static_cast<int>(d)));
        }
        throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    static bool is_name_char(char c)
    {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '-' || c == '.';
    }

    const std::string& text_;
    const AtomTable& atoms_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyhedronTerm parse_term(const std::string& text, const AtomTable& atoms)
{
    return Parser(text, atoms).parse();
}

}  // namespace sgm
