#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "negtrans/formula.hpp"

namespace negtrans {

struct ParseError : std::runtime_error {
    std::size_t position;  // byte offset into the input
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
};

// Grammar (ASCII), loosest to tightest: `A -> B` (right-assoc), `A | B`,
// `A & B`, `~A`, atoms `P` / `P(t1,...,tn)`, `bot`, `top`, parentheses,
// `forall x. A` / `exists x. A` with the body extending maximally right.
// In term position a bare identifier is a variable; constants are written
// as zero-ary applications `c()`.
//
// Shadowed binders are renamed apart, so no quantifier chain in the result
// binds the same name twice.  Predicate and function arities must be
// consistent throughout.
FormulaPtr parse(std::string_view text);

}  // namespace negtrans
