#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hkt/constructions.hpp"

namespace hkt {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int lineNo, const std::string& what)
      : std::runtime_error("line " + std::to_string(lineNo) + ": " + what), line(lineNo) {}
};

/// Expected values attached to a built-in entry, checked by the verification
/// suite. `source` identifies where the value comes from within the built-in
/// reference table.
struct ExpectedForm {
  std::string source;
  KForm value;
};

struct Expected {
  std::map<std::string, bool> flags;             // classification flags
  std::map<std::string, ExpectedForm> forms;     // c, dc, theta, ...
};

struct CatalogEntry {
  std::string name;
  GeomStructure structure;
  std::map<std::string, Connection> connections;
  std::map<std::string, QuatRep> quatReps;
  Expected expected;  // built-ins only; not part of the file format
};

/// Structurally equal up to the name and expected table.
bool sameStructure(const CatalogEntry& a, const CatalogEntry& b);

std::vector<std::string> builtinNames();
CatalogEntry builtin(const std::string& name);  // throws ValidationError on unknown name

CatalogEntry parseEntry(const std::string& text);     // throws ParseError
std::string serializeEntry(const CatalogEntry& entry);  // canonical, byte-stable

/// Full semantic validation (Jacobi, metric, J relations, representation
/// invariants); separate from syntax.
CheckResult validateEntry(const CatalogEntry& entry);

}  // namespace hkt
