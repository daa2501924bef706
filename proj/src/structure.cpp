#include "mnl/structure.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mnl/error.hpp"

namespace mnl {

  namespace {

    constexpr Element none = static_cast<Element>(-1);

    bool same_signature(Structure const& a, Structure const& b) {
      return a.binary.size() == b.binary.size()
             && a.unary.size() == b.unary.size()
             && a.constants.size() == b.constants.size()
             && a.label.empty() == b.label.empty();
    }

    // Isomorphism invariants of one element.
    std::vector<std::uint64_t> profile(Structure const& s, Element x) {
      std::vector<std::uint64_t> p;
      std::size_t                down = 0;
      for (Element y = 0; y < s.size; ++y) {
        down += s.up[y].contains(x) ? 1 : 0;
      }
      p.push_back(s.up[x].size());
      p.push_back(down);
      for (auto const& t : s.binary) {
        p.push_back(t[x * s.size + x] == x ? 1 : 0);
        std::size_t absorbing = 0, neutral = 0;
        for (Element y = 0; y < s.size; ++y) {
          absorbing += t[x * s.size + y] == x ? 1 : 0;
          neutral += t[x * s.size + y] == y ? 1 : 0;
        }
        p.push_back(absorbing);
        p.push_back(neutral);
      }
      for (auto const& t : s.unary) {
        p.push_back(t[x] == x ? 1 : 0);
        p.push_back(t[t[x]] == x ? 1 : 0);
        std::size_t preimages = 0;
        for (Element y = 0; y < s.size; ++y) {
          preimages += t[y] == x ? 1 : 0;
        }
        p.push_back(preimages);
      }
      for (Element c : s.constants) {
        p.push_back(c == x ? 1 : 0);
      }
      if (!s.label.empty()) {
        p.push_back(s.label[x]);
      }
      return p;
    }

    // Backtracking over partial maps with forward propagation through the
    // operation tables. With injective set, the map must be a bijection that
    // reflects the order as well.
    class MapSearch {
     public:
      MapSearch(Structure const& a, Structure const& b, bool injective)
          : a_(a), b_(b), injective_(injective), f_(a.size, none),
            g_(b.size, none) {
        if (injective_) {
          for (Element x = 0; x < a.size; ++x) {
            pa_.push_back(profile(a, x));
          }
          for (Element y = 0; y < b.size; ++y) {
            pb_.push_back(profile(b, y));
          }
        }
        candidates_.resize(a.size);
        for (Element x = 0; x < a.size; ++x) {
          for (Element y = 0; y < b.size; ++y) {
            if (!injective_ || pa_[x] == pb_[y]) {
              candidates_[x].push_back(y);
            }
          }
        }
        // Most constrained element first; ties by index.
        for (Element x = 0; x < a.size; ++x) {
          order_.push_back(x);
        }
        if (injective_) {
          std::stable_sort(order_.begin(), order_.end(),
                           [&](Element x, Element y) {
                             return candidates_[x].size()
                                    < candidates_[y].size();
                           });
        }
      }

      // Calls visit on each complete map until it returns false.
      void run(std::function<bool(std::vector<Element> const&)> const& visit) {
        visit_ = &visit;
        std::size_t mark = trail_.size();
        bool        ok   = true;
        for (std::size_t k = 0; k < a_.constants.size() && ok; ++k) {
          ok = assign(a_.constants[k], b_.constants[k]);
        }
        if (ok) {
          step(0);
        }
        undo(mark);
      }

     private:
      bool step(std::size_t k) {
        while (k < order_.size() && f_[order_[k]] != none) {
          ++k;
        }
        if (k == order_.size()) {
          return (*visit_)(f_);
        }
        Element x = order_[k];
        for (Element y : candidates_[x]) {
          if (injective_ && g_[y] != none) {
            continue;
          }
          std::size_t mark = trail_.size();
          if (assign(x, y) && !step(k + 1)) {
            undo(mark);
            return false;
          }
          undo(mark);
        }
        return true;
      }

      bool assign(Element x0, Element y0) {
        std::vector<std::pair<Element, Element>> queue{{x0, y0}};
        while (!queue.empty()) {
          auto [x, y] = queue.back();
          queue.pop_back();
          if (f_[x] == y) {
            continue;
          }
          if (f_[x] != none) {
            return false;
          }
          if (injective_ && (g_[y] != none || pa_[x] != pb_[y])) {
            return false;
          }
          f_[x] = y;
          if (injective_) {
            g_[y] = x;
          }
          trail_.push_back(x);
          for (Element z : trail_) {
            Element w = f_[z];
            if (injective_
                && (a_.up[x].contains(z) != b_.up[y].contains(w)
                    || a_.up[z].contains(x) != b_.up[w].contains(y))) {
              return false;
            }
            for (std::size_t t = 0; t < a_.binary.size(); ++t) {
              auto const& ta = a_.binary[t];
              auto const& tb = b_.binary[t];
              queue.emplace_back(ta[x * a_.size + z], tb[y * b_.size + w]);
              queue.emplace_back(ta[z * a_.size + x], tb[w * b_.size + y]);
            }
          }
          for (std::size_t t = 0; t < a_.unary.size(); ++t) {
            queue.emplace_back(a_.unary[t][x], b_.unary[t][y]);
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (trail_.size() > mark) {
          Element x = trail_.back();
          trail_.pop_back();
          if (injective_) {
            g_[f_[x]] = none;
          }
          f_[x] = none;
        }
      }

      Structure const&                                     a_;
      Structure const&                                     b_;
      bool                                                 injective_;
      std::vector<Element>                                 f_, g_;
      std::vector<Element>                                 trail_;
      std::vector<std::vector<std::uint64_t>>              pa_, pb_;
      std::vector<std::vector<Element>>                    candidates_;
      std::vector<Element>                                 order_;
      std::function<bool(std::vector<Element> const&)> const* visit_ = nullptr;
    };

  }  // namespace

  std::optional<std::vector<Element>>
  find_isomorphism(Structure const& a, Structure const& b, std::size_t cap,
                   LeafCheck const& leaf) {
    if (a.size > cap || b.size > cap) {
      throw LimitExceeded("isomorphism search is capped at "
                          + std::to_string(cap) + " elements");
    }
    if (!same_signature(a, b)) {
      throw InputError("isomorphism search needs structures of the same "
                       "signature");
    }
    if (a.size != b.size) {
      return std::nullopt;
    }
    std::optional<std::vector<Element>> found;
    MapSearch search(a, b, true);
    search.run([&](std::vector<Element> const& f) {
      if (leaf && !leaf(f)) {
        return true;
      }
      found = f;
      return false;
    });
    return found;
  }

  std::vector<std::vector<Element>>
  find_homomorphisms(Structure const& a, Structure const& b,
                     std::size_t limit) {
    if (!same_signature(a, b)) {
      throw InputError("homomorphism search needs structures of the same "
                       "signature");
    }
    std::vector<std::vector<Element>> out;
    if (limit == 0) {
      return out;
    }
    MapSearch search(a, b, false);
    search.run([&](std::vector<Element> const& f) {
      out.push_back(f);
      return out.size() < limit;
    });
    return out;
  }

}  // namespace mnl
