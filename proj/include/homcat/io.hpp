#pragma once

#include "homcat/fincat.hpp"
#include "homcat/functorlib.hpp"
#include "homcat/mackey.hpp"
#include "homcat/module.hpp"

#include <string>

namespace homcat {

/// A category file: the category plus any optional markings it declares.
struct ParsedCategory {
    FinCat cat;
    Markings marks;
    bool has_a = false;
    bool has_g = false;
    bool has_interior = false;
    bool has_cointerior = false;
};

/// Line-oriented UTF-8 category file. Sections: OBJECTS (one name per
/// line), MORPHISMS (`name src dst`), IDENT (`obj mor`), COMP
/// (`g f result`, meaning g after f), and optional A, G (morphism
/// names), INTERIOR, COINTERIOR (`obj mor...`). `#` starts a comment.
/// Unknown sections, unknown names, and duplicate names are errors;
/// every error message carries `path:line:`. Structural soundness (a
/// complete, associative table) is left to validate_category.
ParsedCategory load_category_file(const std::string& path);

/// Functor file over a previously loaded category. Sections: OBJECTS
/// (`name module-literal`, e.g. `X Z^2 + Z/4`) and MORPHISMS (`name`
/// followed by the row-major matrix of the map from the value at the
/// target object to the value at the source object; rows are indexed by
/// the source value's generators). Unlisted morphisms default to the
/// identity only when the two object values are equal; otherwise the
/// load fails naming the morphism. Functoriality is checked.
ContraFun load_functor_file(const std::string& path, const FinCat& base, const Ring& ring);

/// Group/action file. Sections: MULT (the full multiplication table,
/// one row per line; element 0 is the unit), `P e1 e2 ...`, `OMEGA n`,
/// `LEFT g p0 p1 ...` (the permutation of the points induced by g), and
/// `RIGHT u p0 p1 ...` for each u in P. The data is validated.
GroupData load_group_file(const std::string& path);

/// Parse "Z" or "Zmod:m" (m a prime power >= 2).
Ring parse_ring(const std::string& text);

}  // namespace homcat
