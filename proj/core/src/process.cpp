#include "finitary/process.hpp"

namespace finitary {

ProcessPtr ProcessTerm::nil() {
  auto p = std::make_shared<ProcessTerm>();
  p->kind = Kind::Nil;
  return p;
}

ProcessPtr ProcessTerm::sum(ProcessPtr a, ProcessPtr b) {
  auto p = std::make_shared<ProcessTerm>();
  p->kind = Kind::Sum;
  p->left = std::move(a);
  p->right = std::move(b);
  return p;
}

ProcessPtr ProcessTerm::prefix(ProcessPtr inner) {
  auto p = std::make_shared<ProcessTerm>();
  p->kind = Kind::Prefix;
  p->left = std::move(inner);
  return p;
}

HfSet process_to_set(const ProcessPtr& p) {
  switch (p->kind) {
    case ProcessTerm::Kind::Nil:
      return empty();
    case ProcessTerm::Kind::Sum:
      return set_union(process_to_set(p->left), process_to_set(p->right));
    case ProcessTerm::Kind::Prefix:
      return singleton(process_to_set(p->left));
  }
  return empty();
}

std::string process_text(const ProcessPtr& p) {
  switch (p->kind) {
    case ProcessTerm::Kind::Nil:
      return "0";
    case ProcessTerm::Kind::Sum:
      return process_text(p->left) + "+" + process_text(p->right);
    case ProcessTerm::Kind::Prefix: {
      std::string inner = process_text(p->left);
      if (p->left->kind == ProcessTerm::Kind::Sum) inner = "(" + inner + ")";
      return "e." + inner;
    }
  }
  return "0";
}

}  // namespace finitary
