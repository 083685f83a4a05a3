#include "mdim/expr.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace mdim {

namespace {

struct Token {
    enum class Kind { Ident, Integer, LParen, RParen, Comma, End };
    Kind kind = Kind::End;
    std::string text;
    long long value = 0;
    std::size_t offset = 0;  // 1-based byte position
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        current_ = Token{};
        current_.offset = pos_ + 1;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            return;
        }
        const char c = text_[pos_];
        if (c == '(' || c == ')' || c == ',') {
            current_.kind = c == '(' ? Token::Kind::LParen
                          : c == ')' ? Token::Kind::RParen
                                     : Token::Kind::Comma;
            current_.text = c;
            ++pos_;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_.kind = Token::Kind::Integer;
            current_.text = std::string(text_.substr(start, pos_ - start));
            if (current_.text.size() > 9)
                throw ParseError("integer literal too large", current_.offset);
            current_.value = std::stoll(current_.text);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_.kind = Token::Kind::Ident;
            current_.text = std::string(text_.substr(start, pos_ - start));
            for (char& ch : current_.text) ch = static_cast<char>(std::tolower(
                static_cast<unsigned char>(ch)));
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", current_.offset);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

std::optional<Family> family_by_name(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    if (name == "empty") return Family::Empty;
    if (name == "kst") return Family::CompleteBipartite;
    if (name == "star") return Family::Star;
    if (name == "wheel") return Family::Wheel;
    if (name == "fan") return Family::Fan;
    if (name == "join") return Family::Join;
    if (name == "union") return Family::Union;
    if (name == "complement") return Family::Complement;
    if (name == "corona") return Family::Corona;
    return std::nullopt;
}

const char* family_name(Family tag) {
    switch (tag) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::Empty: return "empty";
        case Family::CompleteBipartite: return "kst";
        case Family::Star: return "star";
        case Family::Wheel: return "wheel";
        case Family::Fan: return "fan";
        case Family::Join: return "join";
        case Family::Union: return "union";
        case Family::Complement: return "complement";
        case Family::Corona: return "corona";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    FamilyDescriptor parse() {
        FamilyDescriptor d = parse_expr();
        const Token& tail = lex_.peek();
        if (tail.kind != Token::Kind::End)
            throw ParseError("unexpected trailing input", tail.offset);
        return d;
    }

private:
    struct Arg {
        bool is_integer = false;
        long long integer = 0;
        FamilyDescriptor expr;
        std::size_t offset = 0;
    };

    FamilyDescriptor parse_expr() {
        const Token ident = expect(Token::Kind::Ident, "expected a family name");
        const auto tag = family_by_name(ident.text);
        if (!tag) throw ParseError("unknown family '" + ident.text + "'", ident.offset);

        expect(Token::Kind::LParen, "expected '('");
        std::vector<Arg> args;
        if (lex_.peek().kind != Token::Kind::RParen) {
            args.push_back(parse_arg());
            while (lex_.peek().kind == Token::Kind::Comma) {
                lex_.take();
                args.push_back(parse_arg());
            }
        }
        expect(Token::Kind::RParen, "expected ')' or ','");
        return build(*tag, ident, std::move(args));
    }

    Arg parse_arg() {
        Arg arg;
        const Token& next = lex_.peek();
        arg.offset = next.offset;
        if (next.kind == Token::Kind::Integer) {
            arg.is_integer = true;
            arg.integer = lex_.take().value;
            return arg;
        }
        if (next.kind == Token::Kind::Ident) {
            arg.expr = parse_expr();
            return arg;
        }
        throw ParseError("expected an argument", next.offset);
    }

    FamilyDescriptor build(Family tag, const Token& ident, std::vector<Arg> args) {
        FamilyDescriptor d;
        d.tag = tag;
        switch (tag) {
            case Family::Path:
            case Family::Cycle:
            case Family::Complete:
            case Family::Empty:
            case Family::Star:
            case Family::Wheel:
            case Family::Fan:
                require_args(ident, args, 1);
                d.params.push_back(take_integer(args[0]));
                break;
            case Family::CompleteBipartite:
                require_args(ident, args, 2);
                d.params.push_back(take_integer(args[0]));
                d.params.push_back(take_integer(args[1]));
                break;
            case Family::Join:
            case Family::Union:
                require_args(ident, args, 2);
                d.children.push_back(take_expr(args[0]));
                d.children.push_back(take_expr(args[1]));
                break;
            case Family::Complement:
                require_args(ident, args, 1);
                d.children.push_back(take_expr(args[0]));
                break;
            case Family::Corona:
                if (args.size() != 2 && args.size() != 3)
                    throw ParseError("corona takes two graphs and an optional iteration count",
                                     ident.offset);
                d.children.push_back(take_expr(args[0]));
                d.children.push_back(take_expr(args[1]));
                if (args.size() == 3) d.iterations = take_integer(args[2]);
                break;
        }
        try {
            validate_descriptor(d);
        } catch (const InvalidDescriptorError& e) {
            throw ParseError(e.what(), ident.offset);
        }
        return d;
    }

    void require_args(const Token& ident, const std::vector<Arg>& args, std::size_t count) {
        if (args.size() != count)
            throw ParseError("'" + ident.text + "' takes " + std::to_string(count) +
                                 (count == 1 ? " argument" : " arguments"),
                             ident.offset);
    }

    int take_integer(const Arg& arg) {
        if (!arg.is_integer) throw ParseError("expected an integer argument", arg.offset);
        return static_cast<int>(arg.integer);
    }

    FamilyDescriptor take_expr(Arg& arg) {
        if (arg.is_integer) throw ParseError("expected a graph expression", arg.offset);
        return std::move(arg.expr);
    }

    Token expect(Token::Kind kind, const char* message) {
        const Token& next = lex_.peek();
        if (next.kind != kind) throw ParseError(message, next.offset);
        return lex_.take();
    }

    Lexer lex_;
};

void print_into(const FamilyDescriptor& d, std::ostringstream& out) {
    out << family_name(d.tag) << '(';
    bool first = true;
    for (int p : d.params) {
        if (!first) out << ", ";
        out << p;
        first = false;
    }
    for (const FamilyDescriptor& child : d.children) {
        if (!first) out << ", ";
        print_into(child, out);
        first = false;
    }
    if (d.tag == Family::Corona && d.iterations != 1) out << ", " << d.iterations;
    out << ')';
}

}  // namespace

GraphExpression parse_graph_expr(std::string_view text) {
    Parser parser(text);
    GraphExpression expr;
    expr.text = std::string(text);
    expr.tree = parser.parse();
    return expr;
}

std::string print_descriptor(const FamilyDescriptor& d) {
    std::ostringstream out;
    print_into(d, out);
    return out.str();
}

}  // namespace mdim
