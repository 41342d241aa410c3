#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qlogic/io.hpp"

namespace qlogic {

struct CorpusEntry {
  std::string id;
  Kind kind;
  std::string description;
  /// Source in the text format of `kind`.
  std::string text;

  Structure load() const { return parse(kind, text); }
};

const std::vector<CorpusEntry>& corpus();

/// Throws InputError for an unknown id.
const CorpusEntry& corpus_entry(std::string_view id);

}  // namespace qlogic
