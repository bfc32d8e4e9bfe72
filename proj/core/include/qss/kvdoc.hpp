#ifndef QSS_KVDOC_HPP_
#define QSS_KVDOC_HPP_

#include <string>
#include <vector>

namespace qss {

// Hierarchical key-value document with ordered children and repeatable keys.
// Serialization is byte-deterministic: two-space indentation, `key: value`
// for leaves, bare `key:` for branches. Values are single-line and nonempty;
// optional fields are expressed by omitting the key.
struct KvNode {
  std::string key;
  std::string value;  // empty for branch nodes
  std::vector<KvNode> children;

  bool is_branch() const { return value.empty(); }

  KvNode& add(const std::string& child_key, const std::string& child_value);
  KvNode& add_branch(const std::string& child_key);

  // First child with the given key; throws std::out_of_range if absent.
  const KvNode& at(const std::string& child_key) const;
  bool has(const std::string& child_key) const;
};

// Serializes the children of `root` (the root node itself is not written).
std::string write_kvdoc(const KvNode& root);

// Inverse of write_kvdoc; throws std::invalid_argument on malformed input.
KvNode parse_kvdoc(const std::string& text);

}  // namespace qss

#endif  // QSS_KVDOC_HPP_
