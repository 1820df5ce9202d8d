#pragma once

#include "frontend/ast.hpp"

#include <string_view>

namespace aligator::frontend {

// Parses the loop language:
//
//   loop   = "while" guard stmts "end" ;
//   stmts  = { stmt [";"] } ;
//   stmt   = ident "=" expr | "if" guard stmts [ "else" stmts ] "end" ;
//   guard  = "true" | "false" | expr relop expr ;   (also && / || / ! chains)
//   expr   = term { ("+"|"-") term } ;
//   term   = factor { ("*"|"/") factor } ;
//   factor = ident | number | "(" expr ")" | "-" factor ;
//
// Statements end at ';' or a newline; '#' starts a comment. Throws
// aligator::Error with ErrorKind::Syntax for malformed text and
// ErrorKind::Unsupported (with a specific diagnostic code) for nested loops,
// calls, array accesses, reserved identifiers and division by variables.
LoopAst parse(std::string_view source);

bool is_reserved_identifier(std::string_view name);
bool is_counter_identifier(std::string_view name);  // n<digits>

}  // namespace aligator::frontend
