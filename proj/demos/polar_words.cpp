// Polar words from text, their normal forms and Brauer images.
#include <cstdio>

#include "pbr/expr.hpp"

using namespace pbr;

int main() {
    const char* inputs[] = {
        "h(1) ; h(1)",
        "cap(1) ; h(1)*id(1) ; cup(1)",
        "cap(1) ; h(1)*id(1) ; h(1)*id(1) ; cup(1)",
        "h(2) - h(1)*id(1)",
        "x(1) ; x(1)",
    };
    for (const char* text : inputs) {
        expr::Value v = expr::evaluate(text);
        std::printf("%s\n", text);
        std::printf("  arity  %d -> %d\n", v.polar.r(), v.polar.s());
        std::printf("  normal %s\n", normalize(v.polar).str().c_str());
        std::printf("  varpi  %s\n", polar::varpi(v.polar).str().c_str());
    }
    try {
        expr::evaluate("h(1) ; cap(1)");
    } catch (const expr::ParseError& e) {
        std::printf("%s\n%s\n", e.what(), expr::pointer("h(1) ; cap(1)", e.span()).c_str());
    }
}
