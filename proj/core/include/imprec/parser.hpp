#pragma once

#include <string_view>

#include "imprec/ast.hpp"

namespace imprec {

/// Parses a program in the surface syntax. Comments run from "--" to end
/// of line. Throws ParseError with line/column on malformed input.
///
///   term  := "if" term "then" term "else" term
///          | ident "<-" term ";" term
///          | "bernoulli" | "choose" "[" rat {"," rat} "]"
///          | "knight" "(" ident [":" nat] ")"
///          | "flip" "(" ident ")" "(" term ")"
///          | "(" term {"," term} ")" | ctor | ident
///   ctor  := "true" | "false" | "r" | "g" | "b" | "inj" nat "of" nat
///   rat   := int ["/" nat]
TermPtr parse(std::string_view source);

}  // namespace imprec
