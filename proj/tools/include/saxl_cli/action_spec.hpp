#pragma once

#include <optional>
#include <string>
#include <variant>

#include "saxl/actions.hpp"
#include "saxl/criteria.hpp"

namespace saxl::cli {

struct CatalogueSpec {
  std::string id;
};
struct Psl2Spec {
  Psl2Model model = Psl2Model::C2;
  GroupVariant variant;
};
struct KSubsetSpec {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  bool alternating = false;
};

/// Exactly one way of naming an action.
using ActionSpec = std::variant<CatalogueSpec, Psl2Spec, KSubsetSpec>;

/// Path of the bundled catalogue.
std::string default_catalogue_path();
/// Path of the bundled table expectations.
std::string default_table_rows_path();

/// Builds the action. Catalogue ids are looked up in `catalogue_path`;
/// throws NotFoundError for an unknown id.
LabelledAction build_action(const ActionSpec& spec, const std::string& catalogue_path, const Limits& limits);

}  // namespace saxl::cli
