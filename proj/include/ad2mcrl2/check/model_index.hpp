#pragma once

#include <map>
#include <string>
#include <vector>

#include "ad2mcrl2/xmi/ast.hpp"

namespace ad2mcrl2::check {

// Id lookup over a parsed document. Holds pointers into the document, which
// must outlive the index.
class ModelIndex {
 public:
  struct LiteralRef {
    const xmi::Enumeration* enumeration;
    const xmi::EnumerationLiteral* literal;
  };
  struct PropertyRef {
    const xmi::Block* block;
    const xmi::Property* property;
  };
  struct AttributeRef {
    const xmi::Activity* activity;
    const xmi::Attribute* attribute;
  };
  struct NodeRef {
    const xmi::Activity* activity;
    const xmi::ActivityNode* node;
  };
  struct PinRef {
    const xmi::Activity* activity;
    const xmi::ActivityNode* owner;  // CallBehaviour or WriteVariable
    const xmi::Pin* pin;
  };
  struct FlowRef {
    const xmi::Activity* activity;
    const xmi::Flow* flow;
  };

  explicit ModelIndex(const xmi::XmiDocument& doc);

  const std::vector<const xmi::Enumeration*>& enumerations() const { return enumerations_; }
  const std::vector<const xmi::Block*>& blocks() const { return blocks_; }
  const std::vector<const xmi::Activity*>& activities() const { return activities_; }

  const xmi::Enumeration* enumeration(const std::string& id) const { return find(enums_by_id_, id); }
  const xmi::Block* block(const std::string& id) const { return find(blocks_by_id_, id); }
  const xmi::Activity* activity(const std::string& id) const { return find(acts_by_id_, id); }
  const LiteralRef* literal(const std::string& id) const { return find_ref(literals_, id); }
  const PropertyRef* property(const std::string& id) const { return find_ref(properties_, id); }
  const AttributeRef* attribute(const std::string& id) const { return find_ref(attributes_, id); }
  const NodeRef* node(const std::string& id) const { return find_ref(nodes_, id); }
  const PinRef* pin(const std::string& id) const { return find_ref(pins_, id); }
  const FlowRef* flow(const std::string& id) const { return find_ref(flows_, id); }

  const xmi::XmiDocument& document() const { return *doc_; }

 private:
  template <typename T>
  static const T* find(const std::map<std::string, const T*>& m, const std::string& id) {
    auto it = m.find(id);
    return it == m.end() ? nullptr : it->second;
  }
  template <typename T>
  static const T* find_ref(const std::map<std::string, T>& m, const std::string& id) {
    auto it = m.find(id);
    return it == m.end() ? nullptr : &it->second;
  }

  const xmi::XmiDocument* doc_;
  std::vector<const xmi::Enumeration*> enumerations_;
  std::vector<const xmi::Block*> blocks_;
  std::vector<const xmi::Activity*> activities_;
  std::map<std::string, const xmi::Enumeration*> enums_by_id_;
  std::map<std::string, const xmi::Block*> blocks_by_id_;
  std::map<std::string, const xmi::Activity*> acts_by_id_;
  std::map<std::string, LiteralRef> literals_;
  std::map<std::string, PropertyRef> properties_;
  std::map<std::string, AttributeRef> attributes_;
  std::map<std::string, NodeRef> nodes_;
  std::map<std::string, PinRef> pins_;
  std::map<std::string, FlowRef> flows_;
};

}  // namespace ad2mcrl2::check
