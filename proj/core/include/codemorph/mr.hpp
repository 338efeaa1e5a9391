#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace codemorph {

// The nine metamorphic relations, in canonical composition order.
enum class MrId : int {
  kVariableRenaming = 1,
  kMethodRenaming = 2,
  kAssignExpression = 3,
  kConditionalExpression = 4,
  kBinaryExpression = 5,
  kDummyVariable = 6,
  kAddingComments = 7,
  kVariableDeclaration = 8,
  kForToWhileLoop = 9,
};

constexpr int kMrCount = 9;

// Short code: "m1".."m9".
std::string mr_code(MrId id);
// Rule name, e.g. "VariableRenaming".
std::string_view mr_name(MrId id);
std::optional<MrId> mr_from_code(std::string_view code);
std::vector<MrId> all_mrs();

// Seed plus the incrementing counters shared by one application run.
// Identical (seed, input) pairs yield identical outputs; counters strictly
// increase within one application.
struct MrContext {
  std::uint64_t seed = 0;
  int var_counter = 1;
  int meth_counter = 1;
  int dummy_counter = 1;
};

struct RenameEntry {
  std::string old_name;
  std::string new_name;
};

// Identifier old->new mapping produced by MR1/MR2. New names are unique
// and never collide with identifiers of the original source, so the
// reverse direction (new->old) is always a function.
struct RenameMap {
  std::vector<RenameEntry> variables;
  std::vector<RenameEntry> methods;

  bool empty() const { return variables.empty() && methods.empty(); }
  void merge(const RenameMap& other);
  // new-name -> old-name over both categories.
  std::vector<RenameEntry> inverse() const;
};

struct MrOutcome {
  std::string text;
  bool applied = false;
  RenameMap rename_map;
  int edits_count = 0;
};

MrOutcome mr1_variable_renaming(const std::string& source, MrContext& ctx);
MrOutcome mr2_method_renaming(const std::string& source, MrContext& ctx);
MrOutcome mr3_assign_expression(const std::string& source, MrContext& ctx);
MrOutcome mr4_conditional_expression(const std::string& source, MrContext& ctx);
MrOutcome mr5_binary_expression(const std::string& source, MrContext& ctx);
MrOutcome mr6_dummy_variable(const std::string& source, MrContext& ctx);
MrOutcome mr7_adding_comments(const std::string& source, MrContext& ctx);
MrOutcome mr8_variable_declaration(const std::string& source, MrContext& ctx);
MrOutcome mr9_for_to_while(const std::string& source, MrContext& ctx);

// Dispatches to the matching relation. Inapplicability is applied=false,
// never an error; only ParseFatal propagates.
MrOutcome apply_mr(MrId id, const std::string& source, MrContext& ctx);

}  // namespace codemorph
