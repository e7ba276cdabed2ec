#include "pbr/expr.hpp"

#include <algorithm>
#include <cctype>

namespace pbr::expr {

ParseError::ParseError(const std::string& msg, Span at)
    : Error(msg + " at " + std::to_string(at.begin + 1) + "-" + std::to_string(at.end)), at_(at) {}

namespace {

class Parser {
public:
    explicit Parser(const std::string& t) : s_(t) {}

    Ast run() {
        Ast a = expr();
        skip();
        if (p_ != (int)s_.size()) throw ParseError("unexpected '" + std::string(1, s_[p_]) + "'", {p_, p_ + 1});
        return a;
    }

private:
    void skip() {
        while (p_ < (int)s_.size() && std::isspace((unsigned char)s_[p_])) ++p_;
    }
    bool peek(char c) {
        skip();
        return p_ < (int)s_.size() && s_[p_] == c;
    }
    void expect(char c) {
        if (!peek(c)) {
            int e = std::min(p_ + 1, (int)s_.size());
            throw ParseError(std::string("expected '") + c + "'", {p_, e});
        }
        ++p_;
    }
    bool digit() {
        skip();
        return p_ < (int)s_.size() && std::isdigit((unsigned char)s_[p_]);
    }
    long integer() {
        skip();
        int b = p_;
        while (p_ < (int)s_.size() && std::isdigit((unsigned char)s_[p_])) ++p_;
        if (b == p_) throw ParseError("expected integer", {b, std::min(b + 1, (int)s_.size())});
        if (p_ - b > 9) throw ParseError("integer too large", {b, p_});
        return std::stol(s_.substr(b, p_ - b));
    }

    Ast expr() {
        skip();
        int b = p_;
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::sum;
        int sign = 1;
        if (peek('-')) {
            ++p_;
            sign = -1;
        }
        n->kids.push_back(term());
        n->signs.push_back(sign);
        while (peek('+') || peek('-')) {
            sign = s_[p_] == '-' ? -1 : 1;
            ++p_;
            n->kids.push_back(term());
            n->signs.push_back(sign);
        }
        n->span = {b, p_};
        if (n->kids.size() == 1 && sign == 1) return n->kids[0];
        return n;
    }

    Ast term() {
        skip();
        int b = p_;
        std::optional<Q> c;
        if (digit()) {
            long num = integer(), den = 1;
            if (peek('/')) {
                ++p_;
                int at = p_;
                den = integer();
                if (den == 0) throw ParseError("zero denominator", {at, p_});
            }
            c = Q(num, den);
        }
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::compose;
        n->kids.push_back(factor());
        while (peek(';')) {
            ++p_;
            n->kids.push_back(factor());
        }
        n->span = {b, p_};
        Ast body = n->kids.size() == 1 ? n->kids[0] : n;
        if (!c) return body;
        auto sc = std::make_shared<Node>();
        sc->kind = Node::Kind::scaled;
        sc->scalar = *c;
        sc->kids.push_back(body);
        sc->span = {b, p_};
        return sc;
    }

    Ast factor() {
        skip();
        int b = p_;
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::tensor;
        n->kids.push_back(atom());
        while (peek('*')) {
            ++p_;
            n->kids.push_back(atom());
        }
        n->span = {b, p_};
        return n->kids.size() == 1 ? n->kids[0] : n;
    }

    Ast atom() {
        skip();
        int b = p_;
        if (peek('(')) {
            ++p_;
            Ast inner = expr();
            expect(')');
            return inner;
        }
        while (p_ < (int)s_.size() && std::isalpha((unsigned char)s_[p_])) ++p_;
        std::string name = s_.substr(b, p_ - b);
        if (name.empty()) throw ParseError("expected atom", {b, std::min(b + 1, (int)s_.size())});
        static const std::vector<std::string> known{"id", "x", "cap", "cup", "h", "z"};
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw ParseError("unknown token '" + name + "'", {b, p_});
        expect('(');
        int arg = (int)integer();
        expect(')');
        auto n = std::make_shared<Node>();
        n->name = name;
        n->arg = arg;
        n->span = {b, p_};
        return n;
    }

    const std::string& s_;
    int p_ = 0;
};

std::string render_at(const Ast& a, int prec) {
    // prec: 0 sum, 1 term, 2 factor, 3 atom
    std::string out;
    switch (a->kind) {
        case Node::Kind::atom:
            return a->name + "(" + std::to_string(a->arg) + ")";
        case Node::Kind::sum:
            for (size_t i = 0; i < a->kids.size(); ++i) {
                if (i == 0) out += a->signs[i] < 0 ? "-" : "";
                else out += a->signs[i] < 0 ? " - " : " + ";
                out += render_at(a->kids[i], 1);
            }
            return prec > 0 ? "(" + out + ")" : out;
        case Node::Kind::scaled:
            out = to_string(a->scalar) + " " + render_at(a->kids[0], 1);
            return prec > 1 ? "(" + out + ")" : out;
        case Node::Kind::compose:
            for (size_t i = 0; i < a->kids.size(); ++i) out += (i ? " ; " : "") + render_at(a->kids[i], 2);
            return prec > 1 ? "(" + out + ")" : out;
        case Node::Kind::tensor:
            for (size_t i = 0; i < a->kids.size(); ++i) out += (i ? "*" : "") + render_at(a->kids[i], 3);
            return prec > 2 ? "(" + out + ")" : out;
    }
    return out;
}

void check_arity(int got, int want, Span at, const std::string& what) {
    if (got != want)
        throw ParseError("arity mismatch in " + what + ": " + std::to_string(got) + " vs " + std::to_string(want), at);
}

}  // namespace

Ast parse(const std::string& text) { return Parser(text).run(); }

std::string render(const Ast& a) { return render_at(a, 0); }

bool same(const Ast& a, const Ast& b) {
    if (a->kind != b->kind || a->name != b->name || a->arg != b->arg || a->signs != b->signs ||
        a->kids.size() != b->kids.size())
        return false;
    if (a->kind == Node::Kind::scaled && a->scalar != b->scalar) return false;
    for (size_t i = 0; i < a->kids.size(); ++i)
        if (!same(a->kids[i], b->kids[i])) return false;
    return true;
}

Value elaborate(const Ast& a) {
    Value v;
    switch (a->kind) {
        case Node::Kind::atom: {
            int k = a->arg;
            auto need = [&](bool ok, const std::string& why) {
                if (!ok) throw ParseError(a->name + ": " + why, a->span);
            };
            if (a->name == "id") {
                need(k >= 0, "negative width");
                v.brauer = brauer::id(k);
            } else if (a->name == "x") {
                need(k >= 1, "index must be >= 1");
                v.brauer = brauer::s(k + 1, k);
            } else if (a->name == "cap") {
                need(k >= 1, "index must be >= 1");
                v.brauer = brauer::cap(k + 1, k);
            } else if (a->name == "cup") {
                need(k >= 1, "index must be >= 1");
                v.brauer = brauer::cup(k - 1, k);
            } else if (a->name == "h") {
                need(k >= 1, "index must be >= 1");
                v.polar = polar::H(k, 0, k);
                return v;
            } else {
                need(k >= 1, "order must be >= 1");
                v.polar = polar::Z(k);
                return v;
            }
            v.polar = polar::iota(*v.brauer);
            return v;
        }
        case Node::Kind::sum: {
            for (size_t i = 0; i < a->kids.size(); ++i) {
                Value k = elaborate(a->kids[i]);
                if (i == 0) {
                    v.polar = PolarElement(k.polar.r(), k.polar.s());
                    if (k.brauer) v.brauer = BrauerElement(k.brauer->r(), k.brauer->s());
                } else {
                    check_arity(k.polar.r(), v.polar.r(), a->kids[i]->span, "sum (source)");
                    check_arity(k.polar.s(), v.polar.s(), a->kids[i]->span, "sum (target)");
                }
                Poly sg(a->signs[i]);
                v.polar += sg * k.polar;
                if (v.brauer && k.brauer) *v.brauer += sg * *k.brauer;
                else v.brauer.reset();
            }
            return v;
        }
        case Node::Kind::scaled: {
            Value k = elaborate(a->kids[0]);
            Poly c(a->scalar);
            v.polar = c * k.polar;
            if (k.brauer) v.brauer = c * *k.brauer;
            return v;
        }
        case Node::Kind::compose: {
            v = elaborate(a->kids[0]);
            for (size_t i = 1; i < a->kids.size(); ++i) {
                Value lower = elaborate(a->kids[i]);
                check_arity(lower.polar.s(), v.polar.r(), a->kids[i]->span, "composition");
                v.polar = v.polar * lower.polar;
                if (v.brauer && lower.brauer) v.brauer = *v.brauer * *lower.brauer;
                else v.brauer.reset();
            }
            return v;
        }
        case Node::Kind::tensor: {
            v = elaborate(a->kids[0]);
            for (size_t i = 1; i < a->kids.size(); ++i) {
                Value right = elaborate(a->kids[i]);
                if (!right.brauer) throw ParseError("right factor of '*' must be a Brauer expression", a->kids[i]->span);
                v.polar = tensor_right(v.polar, *right.brauer);
                if (v.brauer) v.brauer = pbr::tensor(*v.brauer, *right.brauer);
            }
            return v;
        }
    }
    return v;
}

Value evaluate(const std::string& text) { return elaborate(parse(text)); }

std::string pointer(const std::string& text, Span at) {
    int b = std::max(0, std::min(at.begin, (int)text.size()));
    int e = std::max(b + 1, at.end);
    return text + "\n" + std::string(b, ' ') + std::string(e - b, '^');
}

}  // namespace pbr::expr
