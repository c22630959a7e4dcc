#pragma once

#include <json.hpp>

#include "cantor/cover.hpp"
#include "cantor/filter.hpp"
#include "cantor/natset.hpp"
#include "cantor/partition.hpp"
#include "cantor/slalom.hpp"
#include "cantor/word.hpp"

/// JSON encodings. Words are 0/1 strings, sets and sequences are arrays of
/// naturals, partitions are their point arrays. Readers throw InvalidInput
/// (or a subclass) on anything malformed.
namespace cantor::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const Word& w);
Json to_json(const NatSet& a);
Json to_json(const NatSeq& f);
Json to_json(const PartitioningPrefix& d);
Json to_json(const WordSet& words);
Json to_json(const CoverFamily& cover);
/// Arrays of arrays; the width function is written separately.
Json to_json(const Slalom& s);
Json to_json(const BinarySlalom& b);
Json to_json(const FilterCertificate& c);
/// The width function's name.
Json width_to_json(const WidthFunction& phi);

Nat read_nat(const Json& j, const char* what);
Word read_word(const Json& j, const char* what);
NatSet read_natset(const Json& j, const char* what);
NatSeq read_natseq(const Json& j, const char* what);
PartitioningPrefix read_partition(const Json& j, const char* what);
WordSet read_wordset(const Json& j, const char* what);
CoverFamily read_cover(const Json& j, const char* what);
/// "identity", "sqrt", "pairs", "chi", {"constant": c} or {"table": [...]}.
WidthFunction read_width(const Json& j, const char* what);
/// Cells as arrays of naturals.
Slalom read_slalom(const Json& j, const WidthFunction& width, const char* what);
/// Cells as arrays of words over a given partition.
BinarySlalom read_binary_slalom(const Json& cells, const PartitioningPrefix& d,
                                const WidthFunction& width, const char* what);
FilterCertificate read_certificate(const Json& j, const char* what);

/// Member `key` of object `j`; InvalidInput when absent.
const Json& field(const Json& j, const char* key);

}  // namespace cantor::json_io
