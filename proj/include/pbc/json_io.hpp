#pragma once

// JSON encodings of words, automorphisms, complexes, posets, maps and
// homology. Syntax errors carry the byte offset; structural errors carry the
// JSON pointer of the offending value.

#include <string>
#include <string_view>

#include "json.hpp"
#include "pbc/autos.hpp"
#include "pbc/complex.hpp"
#include "pbc/freegroup.hpp"
#include "pbc/homology.hpp"
#include "pbc/poset.hpp"
#include "pbc/quillen.hpp"

namespace pbc {

// Insertion-ordered objects: reports serialize fields in a fixed order.
using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);
// Two-space indent, trailing newline.
std::string dump_json(const Json& j);
void write_json_file(const std::string& path, const Json& j);

Json bigint_to_json(const BigInt& x);

// A word is an array of signed generator indices.
Json word_to_json(const Word& w);
Word word_from_json(const Json& j, int rank, const std::string& path = "");
// {"rank": n, "words": [word, ...]}
Json tuple_to_json(const WordTuple& t);
WordTuple tuple_from_json(const Json& j);

// {"rank": n, "images": [word, ...], "factorization": [token, ...]}
Json automorphism_to_json(const Automorphism& f);
// A factorization, when present, must compose to the listed images.
Automorphism automorphism_from_json(const Json& j);

// {"vertices": [label, ...], "facets": [[label, ...], ...]}; vertices may be
// strings or integers, facets name them by value.
Json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

// {"elements": [label, ...], "relations": [[a, b], ...]} with a <= b.
Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

// {"source": poset, "target": poset, "assignment": {x: y, ...}}
Json map_to_json(const PosetMap& f);
PosetMap map_from_json(const Json& j);

// {"degrees": [{"degree": d, "rank": r, "torsion": [...]}, ...]}
Json homology_to_json(const HomologyResult& h);

}  // namespace pbc
