#include "cantor/json_io.hpp"

#include <string>

#include "cantor/error.hpp"

namespace cantor::json_io {

namespace {

[[noreturn]] void bad(const char* what, const std::string& detail) {
  throw InvalidInput(std::string(what) + ": " + detail);
}

void require_array(const Json& j, const char* what) {
  if (!j.is_array()) bad(what, "expected an array");
}

}  // namespace

Json to_json(const Word& w) { return w.to_string(); }

Json to_json(const NatSet& a) { return a.values(); }

Json to_json(const NatSeq& f) {
  Json out = Json::array();
  for (Nat v : f) out.push_back(v);
  return out;
}

Json to_json(const PartitioningPrefix& d) { return to_json(d.points()); }

Json to_json(const WordSet& words) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(w.to_string());
  return out;
}

Json to_json(const CoverFamily& cover) {
  Json out = Json::array();
  for (const WordSet& piece : cover.pieces) out.push_back(to_json(piece));
  return out;
}

Json to_json(const Slalom& s) {
  Json out = Json::array();
  for (const NatSet& cell : s.cells) out.push_back(to_json(cell));
  return out;
}

Json to_json(const BinarySlalom& b) {
  Json out = Json::array();
  for (const WordSet& cell : b.cells) out.push_back(to_json(cell));
  return out;
}

Json to_json(const FilterCertificate& c) {
  Json out = Json::object();
  out["subject"] = to_json(c.subject);
  out["pieces"] = to_json(c.cover);
  out["witness"] = to_json(c.witness);
  return out;
}

Json width_to_json(const WidthFunction& phi) { return phi.name(); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

Nat read_nat(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) {
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<Nat>();
    bad(what, "expected a natural number, got " + j.dump());
  }
  return j.get<Nat>();
}

Word read_word(const Json& j, const char* what) {
  if (!j.is_string()) bad(what, "expected a 0/1 string, got " + j.dump());
  try {
    return Word::from_string(j.get<std::string>());
  } catch (const InvalidInput& e) {
    bad(what, e.what());
  }
}

NatSet read_natset(const Json& j, const char* what) {
  require_array(j, what);
  std::vector<Nat> values;
  for (const Json& v : j) {
    Nat k = read_nat(v, what);
    if (!values.empty() && k <= values.back()) bad(what, "set must be strictly increasing");
    values.push_back(k);
  }
  return NatSet(std::move(values));
}

NatSeq read_natseq(const Json& j, const char* what) {
  require_array(j, what);
  NatSeq f;
  f.reserve(j.size());
  for (const Json& v : j) f.push_back(read_nat(v, what));
  return f;
}

PartitioningPrefix read_partition(const Json& j, const char* what) {
  return PartitioningPrefix::from_points(read_natseq(j, what));
}

WordSet read_wordset(const Json& j, const char* what) {
  require_array(j, what);
  WordSet out;
  for (const Json& w : j) out.insert(read_word(w, what));
  return out;
}

CoverFamily read_cover(const Json& j, const char* what) {
  require_array(j, what);
  CoverFamily cover;
  for (const Json& piece : j) cover.pieces.push_back(read_wordset(piece, what));
  return cover;
}

WidthFunction read_width(const Json& j, const char* what) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "identity") return WidthFunction::identity();
    if (name == "sqrt") return WidthFunction::floor_sqrt();
    if (name == "pairs") return WidthFunction::pair_count();
    if (name == "chi") return WidthFunction::chi();
    bad(what, "unknown width function '" + name + "'");
  }
  if (j.is_object() && j.size() == 1) {
    if (j.contains("constant")) return WidthFunction::constant(read_nat(j["constant"], what));
    if (j.contains("table")) return WidthFunction::table(read_natseq(j["table"], what));
  }
  bad(what, "unrecognized width function " + j.dump());
}

Slalom read_slalom(const Json& j, const WidthFunction& width, const char* what) {
  require_array(j, what);
  Slalom s{{}, width};
  for (const Json& cell : j) s.cells.push_back(read_natset(cell, what));
  return s;
}

BinarySlalom read_binary_slalom(const Json& cells, const PartitioningPrefix& d,
                                const WidthFunction& width, const char* what) {
  require_array(cells, what);
  BinarySlalom b{d, {}, width};
  for (const Json& cell : cells) b.cells.push_back(read_wordset(cell, what));
  if (b.cells.size() != d.intervals()) {
    throw AlignmentError(std::string(what) + ": " + std::to_string(b.cells.size()) +
                         " cells for " + std::to_string(d.intervals()) + " intervals");
  }
  return b;
}

FilterCertificate read_certificate(const Json& j, const char* what) {
  FilterCertificate c;
  c.subject = read_wordset(field(j, "subject"), what);
  c.cover = read_cover(field(j, "pieces"), what);
  c.witness = read_natset(field(j, "witness"), what);
  return c;
}

}  // namespace cantor::json_io
