#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pbr/brauer.hpp"
#include "pbr/polar.hpp"
#include "pbr/scalars.hpp"

namespace pbr::expr {

// expr   := term (('+'|'-') term)*
// term   := scalar? factor (';' factor)*
// factor := atom ('*' atom)*
// atom   := 'id(' int ')' | 'x(' int ')' | 'cap(' int ')' | 'cup(' int ')' | 'h(' int ')' | 'z(' int ')' | '(' expr ')'
// scalar := int ('/' int)?
// "a ; b" is a o b: b is drawn below a.

struct Span {
    int begin = 0;
    int end = 0;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, Span at);
    Span span() const { return at_; }

private:
    Span at_;
};

struct Node {
    enum class Kind { atom, sum, compose, tensor, scaled };
    Kind kind = Kind::atom;
    Span span;
    // atom
    std::string name;
    int arg = 0;
    // sum: signs[i] applies to kids[i]
    std::vector<int> signs;
    // scaled: scalar * kids[0]
    Q scalar;
    std::vector<std::shared_ptr<Node>> kids;
};

using Ast = std::shared_ptr<Node>;

Ast parse(const std::string& text);
std::string render(const Ast& a);
bool same(const Ast& a, const Ast& b);

struct Value {
    PolarElement polar;
    // Present when no connector or z occurs.
    std::optional<BrauerElement> brauer;
};

// Throws ParseError on arity mismatch.
Value elaborate(const Ast& a);
Value evaluate(const std::string& text);

// Caret line under the offending span.
std::string pointer(const std::string& text, Span at);

}  // namespace pbr::expr
