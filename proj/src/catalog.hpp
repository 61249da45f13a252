#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "constants.hpp"
#include "terms.hpp"

namespace piforge {

enum class Family { R, S, Sprime, T, Tprime, Z, ZeroSum, Mixed };
enum class IdentityClass { Proved, Conjectural, TranscriptionSuspect };
enum class EvalClass { Fast, Slow };

std::string family_name(Family f);
std::string class_name(IdentityClass c);
std::string eval_class_name(EvalClass e);
Family parse_family(const std::string& s);
IdentityClass parse_identity_class(const std::string& s);
EvalClass parse_eval_class(const std::string& s);

// One catalog entry: sum of lhs terms equals the rhs constant expression
// (rhs == 0 for the zero-sum family).
struct Identity {
    std::string id;
    Family family = Family::S;
    IdentityClass cls = IdentityClass::Proved;
    TermSpec lhs;
    ConstExpr rhs;
    std::string source;
    EvalClass eval_class = EvalClass::Fast;
};

struct Catalog {
    std::vector<Identity> entries; // file order
    const Identity* find(const std::string& id) const;
    const Identity& at(const std::string& id) const; // throws on unknown id
    std::vector<std::string> ids() const;            // sorted
    size_t size() const { return entries.size(); }
};

// Parse the block-structured catalog text. Enforces structural invariants
// (unique ids, parsable fields, term-spec validity); errors carry line and
// field diagnostics. The numeric self-test of proved entries lives in
// verify.hpp (self_test_catalog) so that parsing stays cheap.
Catalog parse_catalog(std::string_view text);
Catalog load_catalog(const std::string& path);

// Canonical serialization; parse(serialize(parse(x))) is semantically
// identical to parse(x).
std::string serialize_identity(const Identity& ident);
std::string serialize_catalog(const Catalog& cat);

// Catalog text compiled into the library, and its parsed form (structural
// checks only; parsed once).
std::string_view embedded_catalog_text();
const Catalog& default_catalog();

} // namespace piforge
