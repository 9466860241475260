#ifndef NDP_IO_HPP
#define NDP_IO_HPP

#include <string>
#include <vector>

#include "ndp/ideal.hpp"

namespace ndp {

/// On-disk form of an ideal.  Two formats:
///   - text: one monomial per line, tokens "x<i>^<e>" (exponent 1 may be
///     omitted), "1" for the unit monomial, "#" comments, and an optional
///     leading "nvars N" directive (otherwise the highest variable index
///     seen fixes the ambient ring);
///   - JSON: {"schema": 1, "nvars": n, "gens": [[e1,...,en], ...]} with
///     optional "name" and "field"; unknown keys are rejected.
/// serialize(parse(text)) is the identity on serializer output.
struct IdealDocument {
    int nvars = 0;
    std::vector<std::vector<int>> gens; // raw exponent rows, not minimalized
    std::string name;
    std::string field; // optional field hint, e.g. "q" or "f32003"

    friend bool operator==(const IdealDocument& a, const IdealDocument& b) {
        return a.nvars == b.nvars && a.gens == b.gens && a.name == b.name &&
               a.field == b.field;
    }
};

/// Auto-detects JSON (first significant byte '{') vs text.
IdealDocument parse_document(const std::string& content);
IdealDocument parse_file(const std::string& path);

std::string serialize_text(const IdealDocument& doc);
std::string serialize_json(const IdealDocument& doc);

/// Minimalizes the raw generators.
MonomialIdeal to_ideal(const IdealDocument& doc);
IdealDocument from_ideal(const MonomialIdeal& I, const std::string& name = "");

} // namespace ndp

#endif
