#include "pcp/parser.hpp"

#include <cctype>

#include "pcp/json_io.hpp"

namespace pcp {

namespace {

struct Token {
    enum class Kind {
        ident,    // letter run: S, T, R, P, I, i, chi, U, ...
        number,   // digit run
        plus, minus, star, slash, tick,
        lparen, rparen, lbracket, rbracket, comma, semicolon,
        end
    };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& input) : input_(input) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    const std::string& input_;
    std::size_t pos_ = 0;
    Token current_;

    void advance() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= input_.size()) {
            current_ = Token{Token::Kind::end, "", start};
            return;
        }
        char c = input_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < input_.size() && std::isalpha(static_cast<unsigned char>(input_[pos_])))
                ++pos_;
            current_ = Token{Token::Kind::ident, input_.substr(start, pos_ - start), start};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_])))
                ++pos_;
            current_ = Token{Token::Kind::number, input_.substr(start, pos_ - start), start};
            return;
        }
        ++pos_;
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Kind::plus; break;
            case '-': kind = Token::Kind::minus; break;
            case '*': kind = Token::Kind::star; break;
            case '/': kind = Token::Kind::slash; break;
            case '\'': kind = Token::Kind::tick; break;
            case '(': kind = Token::Kind::lparen; break;
            case ')': kind = Token::Kind::rparen; break;
            case '[': kind = Token::Kind::lbracket; break;
            case ']': kind = Token::Kind::rbracket; break;
            case ',': kind = Token::Kind::comma; break;
            case ';': kind = Token::Kind::semicolon; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
        }
        current_ = Token{kind, std::string(1, c), start};
    }
};

class Parser {
  public:
    Parser(const std::string& text, Session s) : lexer_(text), session_(s) {}

    std::unique_ptr<ExprAst> parse() {
        auto e = parse_expr();
        expect(Token::Kind::end, "end of input");
        return e;
    }

  private:
    Lexer lexer_;
    Session session_;

    [[noreturn]] void fail(const std::string& msg, std::size_t pos) { throw ParseError(msg, pos); }

    Token expect(Token::Kind kind, const std::string& what) {
        if (lexer_.peek().kind != kind)
            fail("expected " + what + ", got \"" + lexer_.peek().text + "\"", lexer_.peek().pos);
        return lexer_.take();
    }

    static std::unique_ptr<ExprAst> node(ExprAst::Kind kind, std::size_t pos) {
        auto n = std::make_unique<ExprAst>();
        n->kind = kind;
        n->position = pos;
        return n;
    }

    std::unique_ptr<ExprAst> parse_expr() {
        auto lhs = parse_term();
        while (lexer_.peek().kind == Token::Kind::plus || lexer_.peek().kind == Token::Kind::minus) {
            Token op = lexer_.take();
            auto n = node(op.kind == Token::Kind::plus ? ExprAst::Kind::add : ExprAst::Kind::sub,
                          op.pos);
            n->children.push_back(std::move(lhs));
            n->children.push_back(parse_term());
            lhs = std::move(n);
        }
        return lhs;
    }

    std::unique_ptr<ExprAst> parse_term() {
        auto lhs = parse_factor();
        while (lexer_.peek().kind == Token::Kind::star) {
            Token op = lexer_.take();
            auto n = node(ExprAst::Kind::mul, op.pos);
            n->children.push_back(std::move(lhs));
            n->children.push_back(parse_factor());
            lhs = std::move(n);
        }
        return lhs;
    }

    std::unique_ptr<ExprAst> parse_factor() {
        if (lexer_.peek().kind == Token::Kind::minus) {
            Token op = lexer_.take();
            auto n = node(ExprAst::Kind::neg, op.pos);
            n->children.push_back(parse_factor());
            return n;
        }
        auto atom = parse_atom();
        while (lexer_.peek().kind == Token::Kind::tick) {
            Token op = lexer_.take();
            auto n = node(ExprAst::Kind::adjoint, op.pos);
            n->children.push_back(std::move(atom));
            atom = std::move(n);
        }
        return atom;
    }

    BigInt parse_integer(const std::string& what) {
        bool negative = false;
        if (lexer_.peek().kind == Token::Kind::minus) {
            lexer_.take();
            negative = true;
        }
        Token t = expect(Token::Kind::number, what);
        BigInt v(t.text);
        return negative ? -v : v;
    }

    BigRat parse_rational(const std::string& what) {
        std::size_t pos = lexer_.peek().pos;
        BigInt num = parse_integer(what);
        if (lexer_.peek().kind == Token::Kind::slash) {
            lexer_.take();
            BigInt den = parse_integer("denominator");
            if (den == 0) fail("zero denominator", pos);
            return BigRat(num, den);
        }
        return BigRat(num);
    }

    NAdic parse_nadic(const std::string& what) {
        std::size_t pos = lexer_.peek().pos;
        BigRat q = parse_rational(what);
        auto v = NAdic::from_rational(session_.n, q);
        if (!v)
            fail(what + " " + rat_string(q) + " is not an n-adic rational for n = " +
                     std::to_string(session_.n),
                 pos);
        return *v;
    }

    std::unique_ptr<ExprAst> parse_atom() {
        const Token& t = lexer_.peek();
        switch (t.kind) {
            case Token::Kind::number:
                return parse_scalar_atom();
            case Token::Kind::lparen: {
                lexer_.take();
                auto inner = parse_expr();
                expect(Token::Kind::rparen, "')'");
                return inner;
            }
            case Token::Kind::ident:
                return parse_ident_atom();
            default:
                fail("expected a generator, chi[...], a scalar or '('", t.pos);
        }
    }

    std::unique_ptr<ExprAst> parse_scalar_atom() {
        std::size_t pos = lexer_.peek().pos;
        BigRat q = parse_rational("scalar");
        auto n = node(ExprAst::Kind::scalar, pos);
        n->value = Scalar(q);
        return n;
    }

    std::unique_ptr<ExprAst> parse_ident_atom() {
        Token t = lexer_.take();
        if (t.text == "I") return node(ExprAst::Kind::identity, t.pos);
        if (t.text == "i") {
            auto n = node(ExprAst::Kind::scalar, t.pos);
            n->value = Scalar::i();
            return n;
        }
        if (t.text == "chi") return parse_indicator(t.pos);
        if (t.text == "U")
            fail("the symbols U^g are not elements by themselves; write chi[a,b] U(r,k)", t.pos);
        if (t.text.size() == 1 && (t.text[0] == 'S' || t.text[0] == 'T' || t.text[0] == 'R' ||
                                   t.text[0] == 'P')) {
            Token idx = expect(Token::Kind::number, "generator index");
            auto n = node(ExprAst::Kind::generator, t.pos);
            n->family = t.text[0];
            n->index = std::stoi(idx.text);
            validate_generator(n->family, n->index, t.pos);
            return n;
        }
        fail("unknown symbol \"" + t.text + "\"", t.pos);
    }

    void validate_generator(char family, int index, std::size_t pos) {
        int n = session_.n;
        int k = session_.k;
        switch (family) {
            case 'S':
                if (!session_.is_cuntz())
                    fail("S generators require k = 1 (this session has k = " + std::to_string(k) +
                             "); use T/R/P",
                         pos);
                if (index < 1 || index > n)
                    fail("S index out of range 1.." + std::to_string(n), pos);
                break;
            case 'T':
                if (index < 1 || index > n)
                    fail("T index out of range 1.." + std::to_string(n), pos);
                break;
            case 'R':
                if (k < 2) fail("R generators require k >= 2", pos);
                if (index < 1 || index > k - 1)
                    fail("R index out of range 1.." + std::to_string(k - 1), pos);
                break;
            case 'P':
                if (index < 1 || index > k)
                    fail("P index out of range 1.." + std::to_string(k), pos);
                break;
        }
    }

    std::unique_ptr<ExprAst> parse_indicator(std::size_t pos) {
        expect(Token::Kind::lbracket, "'['");
        auto n = node(ExprAst::Kind::indicator, pos);
        n->lo = parse_rational("interval endpoint");
        expect(Token::Kind::comma, "','");
        n->hi = parse_rational("interval endpoint");
        if (lexer_.peek().kind == Token::Kind::semicolon) {
            lexer_.take();
            std::size_t spos = lexer_.peek().pos;
            BigInt slot = parse_integer("slot index");
            if (slot < 0 || slot >= session_.k)
                fail("slot index out of range 0.." + std::to_string(session_.k - 1), spos);
            n->slot = slot.convert_to<int>();
        } else if (!session_.is_cuntz()) {
            fail("slot required when k > 1: write chi[a,b;slot]", pos);
        }
        expect(Token::Kind::rbracket, "']'");
        if (lexer_.peek().kind == Token::Kind::ident && lexer_.peek().text == "U") {
            Token u = lexer_.take();
            expect(Token::Kind::lparen, "'('");
            n->u_r = parse_rational("group offset");
            expect(Token::Kind::comma, "','");
            n->u_k = parse_integer("group integer part").convert_to<long>();
            if (lexer_.peek().kind == Token::Kind::comma) {
                lexer_.take();
                n->u_p = parse_integer("slot shift").convert_to<long>();
            } else if (!session_.is_cuntz()) {
                fail("slot shift required when k > 1: write U(r,k,p)", u.pos);
            }
            expect(Token::Kind::rparen, "')'");
            n->has_u = true;
        }
        return n;
    }
};

AlgebraElement eval_ast(const ExprAst& ast, Session s) {
    switch (ast.kind) {
        case ExprAst::Kind::add:
            return eval_ast(*ast.children[0], s) + eval_ast(*ast.children[1], s);
        case ExprAst::Kind::sub:
            return eval_ast(*ast.children[0], s) - eval_ast(*ast.children[1], s);
        case ExprAst::Kind::mul:
            return eval_ast(*ast.children[0], s).mul(eval_ast(*ast.children[1], s));
        case ExprAst::Kind::neg:
            return eval_ast(*ast.children[0], s).scale(Scalar(BigRat(-1)));
        case ExprAst::Kind::adjoint:
            return eval_ast(*ast.children[0], s).adjoint();
        case ExprAst::Kind::identity:
            return AlgebraElement::identity(s);
        case ExprAst::Kind::scalar:
            return AlgebraElement::scalar(s, ast.value);
        case ExprAst::Kind::generator: {
            if (ast.family == 'S') return cuntz_generator(s, ast.index);
            MatrixGenerators gen = matrix_generators(s);
            std::size_t i = static_cast<std::size_t>(ast.index - 1);
            if (ast.family == 'T') return gen.T[i];
            if (ast.family == 'R') return gen.R[i];
            return gen.P[i];
        }
        case ExprAst::Kind::indicator: {
            auto lo = NAdic::from_rational(s.n, ast.lo);
            auto hi = NAdic::from_rational(s.n, ast.hi);
            if (!lo)
                throw ParseError("interval endpoint " + rat_string(ast.lo) +
                                     " is not an n-adic rational for n = " + std::to_string(s.n),
                                 ast.position);
            if (!hi)
                throw ParseError("interval endpoint " + rat_string(ast.hi) +
                                     " is not an n-adic rational for n = " + std::to_string(s.n),
                                 ast.position);
            NAdic zero = NAdic::zero(s.n);
            NAdic one = NAdic::one(s.n);
            if (*lo < zero || *hi > one || !(*lo < *hi))
                throw ParseError("interval [" + lo->rat_str() + "," + hi->rat_str() +
                                     "] is not a component of [0,1]",
                                 ast.position);
            HElem h = HElem::identity(s.n);
            if (ast.has_u) {
                auto r = NAdic::from_rational(s.n, ast.u_r);
                if (!r)
                    throw ParseError("group offset " + rat_string(ast.u_r) +
                                         " is not an n-adic rational for n = " + std::to_string(s.n),
                                     ast.position);
                h = HElem{GElem{*r, ast.u_k}, ast.u_p};
            }
            SlotSet ran = y_beta_range(h, s.k);
            ClopenSet comp = ClopenSet::interval(*lo, *hi);
            if (!ran.slot(ast.slot).contains_set(comp))
                throw ParseError("chi[" + lo->rat_str() + "," + hi->rat_str() +
                                     "] is not supported in ran beta_" +
                                     (s.is_cuntz() ? h.g.str() : h.str()) + " = " +
                                     ran.slot(ast.slot).str(),
                                 ast.position);
            SlotCoeff f(s.n, s.k);
            f.slot(ast.slot) = StepFunction::indicator(comp);
            return AlgebraElement::monomial(s, h, std::move(f));
        }
    }
    throw ParseError("internal: unreachable AST node", ast.position);
}

}  // namespace

std::unique_ptr<ExprAst> parse_ast(const std::string& text, Session s) {
    return Parser(text, s).parse();
}

AlgebraElement parse_expr(const std::string& text, Session s) {
    return eval_ast(*parse_ast(text, s), s);
}

std::string serialize(const AlgebraElement& a, SerializeFormat format) {
    if (format == SerializeFormat::text) return to_text(a);
    return to_json(a).dump();
}

AlgebraElement deserialize(const std::string& text, Session s, SerializeFormat format) {
    if (format == SerializeFormat::text) return parse_expr(text, s);
    AlgebraElement a = element_from_json(Json::parse(text));
    if (!(a.session() == s)) throw std::invalid_argument("deserialize: session mismatch");
    return a;
}

}  // namespace pcp
