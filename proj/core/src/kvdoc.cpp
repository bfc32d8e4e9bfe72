#include "qss/kvdoc.hpp"

#include <stdexcept>

namespace qss {

namespace {

void validate_key(const std::string& key) {
  if (key.empty()) {
    throw std::invalid_argument("kvdoc: empty key");
  }
  for (char c : key) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
    if (!ok) {
      throw std::invalid_argument("kvdoc: bad character in key '" + key + "'");
    }
  }
}

void validate_value(const std::string& value) {
  if (value.empty()) {
    throw std::invalid_argument("kvdoc: leaf value must be nonempty");
  }
  if (value.find('\n') != std::string::npos) {
    throw std::invalid_argument("kvdoc: value must be single-line");
  }
  if (value.front() == ' ' || value.back() == ' ') {
    throw std::invalid_argument("kvdoc: value must not have surrounding spaces");
  }
}

void write_node(const KvNode& node, int depth, std::string& out) {
  validate_key(node.key);
  out.append(static_cast<std::size_t>(2 * depth), ' ');
  out += node.key;
  out += ':';
  if (!node.is_branch()) {
    validate_value(node.value);
    out += ' ';
    out += node.value;
  }
  out += '\n';
  for (const KvNode& child : node.children) {
    write_node(child, depth + 1, out);
  }
}

}  // namespace

KvNode& KvNode::add(const std::string& child_key, const std::string& child_value) {
  children.push_back(KvNode{child_key, child_value, {}});
  return children.back();
}

KvNode& KvNode::add_branch(const std::string& child_key) {
  children.push_back(KvNode{child_key, "", {}});
  return children.back();
}

const KvNode& KvNode::at(const std::string& child_key) const {
  for (const KvNode& child : children) {
    if (child.key == child_key) {
      return child;
    }
  }
  throw std::out_of_range("kvdoc: no child '" + child_key + "' under '" + key + "'");
}

bool KvNode::has(const std::string& child_key) const {
  for (const KvNode& child : children) {
    if (child.key == child_key) {
      return true;
    }
  }
  return false;
}

std::string write_kvdoc(const KvNode& root) {
  std::string out;
  for (const KvNode& child : root.children) {
    write_node(child, 0, out);
  }
  return out;
}

KvNode parse_kvdoc(const std::string& text) {
  KvNode root;
  std::vector<KvNode*> stack{&root};  // stack[d] = open node at depth d-1

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      throw std::invalid_argument("kvdoc: missing trailing newline");
    }
    ++line_no;
    const std::string line = text.substr(start, end - start);
    start = end + 1;

    std::size_t indent = 0;
    while (indent < line.size() && line[indent] == ' ') {
      ++indent;
    }
    if (indent % 2 != 0) {
      throw std::invalid_argument("kvdoc: odd indentation at line " + std::to_string(line_no));
    }
    const std::size_t depth = indent / 2;
    if (depth + 1 > stack.size()) {
      throw std::invalid_argument("kvdoc: indentation jump at line " + std::to_string(line_no));
    }
    const std::size_t colon = line.find(':', indent);
    if (colon == std::string::npos) {
      throw std::invalid_argument("kvdoc: missing ':' at line " + std::to_string(line_no));
    }
    KvNode node;
    node.key = line.substr(indent, colon - indent);
    validate_key(node.key);
    if (colon + 1 < line.size()) {
      if (line[colon + 1] != ' ') {
        throw std::invalid_argument("kvdoc: expected space after ':' at line " +
                                    std::to_string(line_no));
      }
      node.value = line.substr(colon + 2);
      validate_value(node.value);
    }

    stack.resize(depth + 1);
    stack[depth]->children.push_back(std::move(node));
    stack.push_back(&stack[depth]->children.back());
  }
  return root;
}

}  // namespace qss
