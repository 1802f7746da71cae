#include "ad2mcrl2/check/model_index.hpp"

namespace ad2mcrl2::check {

ModelIndex::ModelIndex(const xmi::XmiDocument& doc) : doc_(&doc) {
  xmi::for_each_element(doc.root, [&](const auto& elem) {
    using T = std::decay_t<decltype(elem)>;
    if constexpr (std::is_same_v<T, xmi::Enumeration>) {
      enumerations_.push_back(&elem);
      enums_by_id_[elem.id] = &elem;
      for (const auto& lit : elem.literals) literals_[lit.id] = {&elem, &lit};
    } else if constexpr (std::is_same_v<T, xmi::Block>) {
      blocks_.push_back(&elem);
      blocks_by_id_[elem.id] = &elem;
      for (const auto& p : elem.properties) properties_[p.id] = {&elem, &p};
    } else if constexpr (std::is_same_v<T, xmi::Activity>) {
      activities_.push_back(&elem);
      acts_by_id_[elem.id] = &elem;
      for (const auto& a : elem.attributes) attributes_[a.id] = {&elem, &a};
      for (const auto& f : elem.flows) flows_[f.id] = {&elem, &f};
      for (const auto& n : elem.nodes) {
        nodes_[xmi::node_id(n)] = {&elem, &n};
        if (const auto* call = std::get_if<xmi::CallBehaviour>(&n)) {
          for (const auto& p : call->pins) pins_[p.id] = {&elem, &n, &p};
        } else if (const auto* wv = std::get_if<xmi::WriteVariable>(&n)) {
          pins_[wv->pin.id] = {&elem, &n, &wv->pin};
        }
      }
    }
  });
}

}  // namespace ad2mcrl2::check
