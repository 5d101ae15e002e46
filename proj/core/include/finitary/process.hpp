#pragma once

// The one-action process fragment: 0, binary +, prefix e. Its set
// semantics sends 0 to {}, + to union and prefixing to singleton
// formation, turning the semilattice laws into set identities.

#include <memory>
#include <string>

#include "finitary/hf.hpp"

namespace finitary {

struct ProcessTerm;
using ProcessPtr = std::shared_ptr<const ProcessTerm>;

struct ProcessTerm {
  enum class Kind { Nil, Sum, Prefix };
  Kind kind;
  ProcessPtr left, right;  // Sum operands; Prefix uses left only

  static ProcessPtr nil();
  static ProcessPtr sum(ProcessPtr a, ProcessPtr b);
  static ProcessPtr prefix(ProcessPtr p);
};

HfSet process_to_set(const ProcessPtr& p);

std::string process_text(const ProcessPtr& p);

}  // namespace finitary
