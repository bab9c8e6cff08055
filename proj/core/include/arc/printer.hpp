#pragma once

#include <string>

#include "arc/ast.hpp"

namespace arc {

// Canonical source rendering. Re-parsing the output yields an AST that is
// structurally equal to the input (positions aside).
std::string print(const ModelUnit& unit);
std::string print(const ComponentDecl& c);
std::string print(const Expr& e);
std::string quote(const std::string& s);

// Equality ignoring source positions.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const ComponentDecl& a, const ComponentDecl& b);
bool structurally_equal(const ModelUnit& a, const ModelUnit& b);

}  // namespace arc
