#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mnl {

  // Outcome of evaluating one law exhaustively over a finite structure.
  // When holds is false, witness names the elements of the first failing
  // instance in index order, and detail says which part of the law failed.
  struct LawReport {
    std::string              law;
    bool                     holds = true;
    std::vector<std::string> witness;
    std::string              detail;

    static LawReport pass(std::string law) {
      return LawReport{std::move(law), true, {}, {}};
    }
    static LawReport fail(std::string              law,
                          std::vector<std::string> witness,
                          std::string              detail = {}) {
      return LawReport{std::move(law), false, std::move(witness),
                       std::move(detail)};
    }

    explicit operator bool() const {
      return holds;
    }
  };

  // "law: holds" or "law: fails at (x, y) [detail]".
  std::string to_string(LawReport const& r);

}  // namespace mnl
