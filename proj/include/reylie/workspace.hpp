#pragma once

// Named structures loaded from envelope files {"kind": K, "payload": P}.
//
// A file holds one structure, or kind "workspace" with payload
// {"items": {"name": envelope, ...}}. Inside a workspace the fields
// "algebra", "pair", "rep", "base" and "extension" may name another item
// instead of spelling it out; names are resolved at load time.

#include "reylie/json_io.hpp"

#include <string>
#include <vector>

namespace reylie::io {

/// Structure kinds an envelope can carry.
const std::vector<std::string> &known_kinds();

struct Item {
    std::string name;
    std::string kind;
    /// Payload with every reference replaced by the referenced payload.
    json payload;
};

class Workspace {
  public:
    /// Throws InputError on unknown kinds, unresolved or cyclic references.
    static Workspace from_json(const json &doc, const std::string &default_name = "main");
    static Workspace load_file(const std::string &path);

    const std::vector<Item> &items() const { return items_; }
    /// Throws InputError when absent.
    const Item &get(const std::string &name) const;
    /// First item of one of the kinds, or the named one when `name` is set.
    const Item &select(const std::vector<std::string> &kinds, const std::string &name = "") const;

  private:
    std::vector<Item> items_;
};

} // namespace reylie::io
