#include "mnl/law_report.hpp"

namespace mnl {

  std::string to_string(LawReport const& r) {
    if (r.holds) {
      return r.law + ": holds";
    }
    std::string out = r.law + ": fails at (";
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += r.witness[i];
    }
    out += ")";
    if (!r.detail.empty()) {
      out += " [" + r.detail + "]";
    }
    return out;
  }

}  // namespace mnl
