#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ad2mcrl2/box.hpp"
#include "ad2mcrl2/expr/ast.hpp"
#include "ad2mcrl2/source_span.hpp"

// Abstract constructors for the accepted XMI subset. Every element carries its
// document-unique xmi:id; references to other elements are stored as ids.
namespace ad2mcrl2::xmi {

struct EnumerationLiteral {
  std::string id;
  std::string name;
  bool operator==(const EnumerationLiteral&) const = default;
};

struct Enumeration {
  std::string id;
  std::string name;
  std::vector<EnumerationLiteral> literals;
  bool operator==(const Enumeration&) const = default;
};

struct Property {
  std::string id;
  std::string name;
  std::string type;  // id reference
  bool operator==(const Property&) const = default;
};

struct Block {
  std::string id;
  std::string name;
  std::vector<Property> properties;
  bool operator==(const Block&) const = default;
};

// State variable owned by an activity. The default is a literal name of the
// attribute's type, resolved by the type checker.
struct Attribute {
  std::string id;
  std::string name;
  std::string type;
  std::string default_value;
  bool operator==(const Attribute&) const = default;
};

// `incoming` / `outgoing` flow references written inside a node element.
struct FlowRefs {
  std::vector<std::string> incoming;
  std::vector<std::string> outgoing;
  bool operator==(const FlowRefs&) const = default;
};

struct ActivityParameter {
  std::string id;
  std::string name;
  std::string type;
  FlowRefs flows;
  bool operator==(const ActivityParameter&) const = default;
};

struct ActivityInitial {
  std::string id;
  std::string name;
  FlowRefs flows;
  bool operator==(const ActivityInitial&) const = default;
};

struct ActivityFinal {
  std::string id;
  std::string name;
  FlowRefs flows;
  bool operator==(const ActivityFinal&) const = default;
};

struct DecisionNode {
  std::string id;
  std::string name;
  FlowRefs flows;
  bool operator==(const DecisionNode&) const = default;
};

enum class PinDirection { kInput, kOutput };

struct Pin {
  std::string id;
  std::string name;
  std::string type;
  PinDirection direction = PinDirection::kInput;
  FlowRefs flows;
  bool operator==(const Pin&) const = default;
};

struct CallBehaviour {
  std::string id;
  std::string name;
  std::string behaviour;  // id reference to an Activity
  std::vector<Pin> pins;
  FlowRefs flows;
  bool operator==(const CallBehaviour&) const = default;
};

// Writes the value arriving at `pin` to the attribute named `name`.
struct WriteVariable {
  std::string id;
  std::string name;
  Pin pin;
  FlowRefs flows;
  bool operator==(const WriteVariable&) const = default;
};

enum class FlowKind { kControl, kObject };

struct Flow {
  std::string id;
  FlowKind kind = FlowKind::kObject;
  std::string name;   // raw assignment text, empty for epsilon
  std::string guard;  // raw guard text, empty for delta
  std::string source;
  std::string target;
  // Filled by parse_flow_annotations.
  std::optional<expr::Assignment> assignment;
  expr::Guard guard_expr;

  bool operator==(const Flow&) const = default;
};

using ActivityNode = std::variant<ActivityParameter, ActivityInitial, ActivityFinal, DecisionNode,
                                  CallBehaviour, WriteVariable>;

struct Activity {
  std::string id;
  std::string name;
  std::vector<Attribute> attributes;
  std::vector<ActivityNode> nodes;
  std::vector<Flow> flows;
  bool operator==(const Activity&) const = default;
};

struct Package;
using PackagedElement = std::variant<Box<Package>, Enumeration, Block, Activity>;

struct Package {
  std::string id;
  std::string name;
  std::vector<PackagedElement> children;
  bool operator==(const Package&) const = default;
};

struct XmiDocument {
  Package root;
  std::map<std::string, SourceSpan> spans;  // element id -> span
};

const std::string& node_id(const ActivityNode& node);
const FlowRefs& node_flows(const ActivityNode& node);

// Depth-first, document-order visitation of packaged elements.
template <typename Fn>
void for_each_element(const Package& pkg, Fn&& fn) {
  for (const PackagedElement& child : pkg.children) {
    if (const auto* sub = std::get_if<Box<Package>>(&child)) {
      for_each_element(**sub, fn);
    } else {
      std::visit(
          [&](const auto& elem) {
            using T = std::decay_t<decltype(elem)>;
            if constexpr (!std::is_same_v<T, Box<Package>>) fn(elem);
          },
          child);
    }
  }
}

template <typename Fn>
void for_each_element(Package& pkg, Fn&& fn) {
  for (PackagedElement& child : pkg.children) {
    if (auto* sub = std::get_if<Box<Package>>(&child)) {
      for_each_element(**sub, fn);
    } else {
      std::visit(
          [&](auto& elem) {
            using T = std::decay_t<decltype(elem)>;
            if constexpr (!std::is_same_v<T, Box<Package>>) fn(elem);
          },
          child);
    }
  }
}

}  // namespace ad2mcrl2::xmi
