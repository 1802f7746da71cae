#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ad2mcrl2/check/checker.hpp"

namespace ad2mcrl2::mcrl2 {

bool is_reserved(std::string_view word);

// Replaces characters outside [A-Za-z0-9_'] by '_' and prefixes '_' when the
// name does not start with a letter or underscore.
std::string sanitize(std::string_view raw);

// Injective mapping from element keys to emitted identifiers.
class NameTable {
 public:
  // First use of a raw name keeps it; later ones get 2, 3, ... Reserved words
  // get a trailing '. A key already present keeps its earlier name.
  const std::string& uniquify(const std::string& key, std::string_view raw);

  const std::string& at(const std::string& key) const;
  bool contains(const std::string& key) const { return by_key_.count(key) > 0; }
  // Key that produced `emitted`, or empty.
  std::string key_of(const std::string& emitted) const;
  const std::map<std::string, std::string>& entries() const { return by_key_; }
  std::size_t size() const { return by_key_.size(); }

  bool operator==(const NameTable&) const = default;

 private:
  std::map<std::string, std::string> by_key_;
  std::map<std::string, std::string> by_name_;
};

// Key of the compute map emitted for leaf activity `activity_id`.
std::string map_key(const std::string& activity_id);

// Names for every emitted element of a checked model, registered in document
// order: enumerations and literals, blocks and properties, then per activity
// its map (leaf) or process, attributes and result pins (glue), and its
// parameters.
NameTable build_name_table(const check::TypedModel& tm);

}  // namespace ad2mcrl2::mcrl2
