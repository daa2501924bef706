#include "mnl/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mnl/error.hpp"

namespace mnl {

  using json = nlohmann::ordered_json;

  namespace {

    struct KindInfo {
      DocumentKind             kind;
      std::string_view         name;
      std::vector<std::string> fields;
    };

    std::vector<KindInfo> const& kinds() {
      static std::vector<KindInfo> const table = {
          {DocumentKind::heyting,
           "heyting",
           {"kind", "elements", "covers", "implication", "filter"}},
          {DocumentKind::modal_heyting,
           "modal-heyting",
           {"kind", "elements", "covers", "implication", "box", "diamond",
            "filter"}},
          {DocumentKind::nelson,
           "nelson",
           {"kind", "elements", "covers", "fusion", "res"}},
          {DocumentKind::modal_nelson,
           "modal-nelson",
           {"kind", "elements", "covers", "fusion", "res", "blacksquare",
            "blackdiamond"}},
          {DocumentKind::space,
           "space",
           {"kind", "points", "covers", "eta_box", "eta_diamond"}},
          {DocumentKind::mne_space,
           "mne-space",
           {"kind", "points", "covers", "eta_box", "eta_diamond", "closed"}},
      };
      return table;
    }

    KindInfo const& info(DocumentKind k) {
      for (auto const& i : kinds()) {
        if (i.kind == k) {
          return i;
        }
      }
      throw std::logic_error("unknown document kind");
    }

    json const& field(json const& j, std::string const& key) {
      auto it = j.find(key);
      if (it == j.end()) {
        throw InputError("missing field '" + key + "'");
      }
      return *it;
    }

    std::string as_name(json const& v, std::string const& where) {
      if (!v.is_string()) {
        throw InputError(where + ": expected an element name");
      }
      return v.get<std::string>();
    }

    Element lookup(FinitePoset const& p, json const& v,
                   std::string const& where) {
      std::string const name = as_name(v, where);
      auto              x    = p.index_of(name);
      if (!x) {
        throw InputError(where + ": unknown element '" + name + "'");
      }
      return *x;
    }

    std::vector<std::string> read_names(json const& j,
                                        std::string const& key) {
      json const& v = field(j, key);
      // A space may be empty (the dual of the one-element algebra).
      if (!v.is_array() || (v.empty() && key != "points")) {
        throw InputError("'" + key + "' must be a nonempty list of names");
      }
      std::vector<std::string> out;
      for (auto const& e : v) {
        out.push_back(as_name(e, key));
      }
      return out;
    }

    std::vector<std::pair<std::string, std::string>>
    read_covers(json const& j) {
      json const& v = field(j, "covers");
      if (!v.is_array()) {
        throw InputError("'covers' must be a list of [lower, upper] pairs");
      }
      std::vector<std::pair<std::string, std::string>> out;
      for (auto const& e : v) {
        if (!e.is_array() || e.size() != 2) {
          throw InputError("'covers' entries must be [lower, upper] pairs");
        }
        out.emplace_back(as_name(e[0], "covers"), as_name(e[1], "covers"));
      }
      return out;
    }

    std::vector<Element> read_unary(json const& j, std::string const& key,
                                    FinitePoset const& p) {
      json const& v = field(j, key);
      if (!v.is_object()) {
        throw InputError("'" + key + "' must map element names to names");
      }
      std::vector<Element> out(p.size());
      for (auto const& [k, val] : v.items()) {
        if (!p.index_of(k)) {
          throw InputError(key + ": unknown element '" + k + "'");
        }
      }
      for (Element x = 0; x < p.size(); ++x) {
        auto it = v.find(p.name(x));
        if (it == v.end()) {
          throw InputError(key + ": no entry for '" + p.name(x) + "'");
        }
        out[x] = lookup(p, *it, key + "(" + p.name(x) + ")");
      }
      return out;
    }

    std::vector<Element> read_binary(json const& j, std::string const& key,
                                     FinitePoset const& p) {
      json const& v = field(j, key);
      if (!v.is_object()) {
        throw InputError("'" + key + "' must be a nested map");
      }
      std::size_t const    n = p.size();
      std::vector<Element> out(n * n);
      for (auto const& [k, val] : v.items()) {
        if (!p.index_of(k)) {
          throw InputError(key + ": unknown element '" + k + "'");
        }
      }
      for (Element x = 0; x < n; ++x) {
        auto row = v.find(p.name(x));
        if (row == v.end() || !row->is_object()) {
          throw InputError(key + ": no row for '" + p.name(x) + "'");
        }
        for (auto const& [k, val] : row->items()) {
          if (!p.index_of(k)) {
            throw InputError(key + ": unknown element '" + k + "'");
          }
        }
        for (Element y = 0; y < n; ++y) {
          auto it = row->find(p.name(y));
          std::string const where =
              key + "(" + p.name(x) + ", " + p.name(y) + ")";
          if (it == row->end()) {
            throw InputError(where + ": missing entry");
          }
          out[x * n + y] = lookup(p, *it, where);
        }
      }
      return out;
    }

    ElementSet read_set(json const& v, FinitePoset const& p,
                        std::string const& where) {
      if (!v.is_array()) {
        throw InputError(where + ": expected a list of names");
      }
      ElementSet s;
      for (auto const& e : v) {
        s.insert(lookup(p, e, where));
      }
      return s;
    }

    std::vector<std::vector<ElementSet>>
    read_families(json const& j, std::string const& key,
                  FinitePoset const& p) {
      json const& v = field(j, key);
      if (!v.is_object()) {
        throw InputError("'" + key + "' must map points to lists of sets");
      }
      for (auto const& [k, val] : v.items()) {
        if (!p.index_of(k)) {
          throw InputError(key + ": unknown point '" + k + "'");
        }
      }
      std::vector<std::vector<ElementSet>> out(p.size());
      for (Element x = 0; x < p.size(); ++x) {
        auto it = v.find(p.name(x));
        if (it == v.end() || !it->is_array()) {
          throw InputError(key + ": no family for '" + p.name(x) + "'");
        }
        for (auto const& s : *it) {
          out[x].push_back(read_set(s, p, key + "(" + p.name(x) + ")"));
        }
        std::sort(out[x].begin(), out[x].end());
        out[x].erase(std::unique(out[x].begin(), out[x].end()),
                     out[x].end());
      }
      return out;
    }

    json names_json(FinitePoset const& p, ElementSet s) {
      json a = json::array();
      for (Element x : s) {
        a.push_back(p.name(x));
      }
      return a;
    }

    json covers_json(FinitePoset const& p) {
      json a = json::array();
      for (auto [lo, hi] : p.covers()) {
        a.push_back(json::array({p.name(lo), p.name(hi)}));
      }
      return a;
    }

    json unary_json(FinitePoset const& p, auto const& f) {
      json o = json::object();
      for (Element x = 0; x < p.size(); ++x) {
        o[p.name(x)] = p.name(f(x));
      }
      return o;
    }

    json binary_json(FinitePoset const& p, auto const& f) {
      json o = json::object();
      for (Element x = 0; x < p.size(); ++x) {
        json row = json::object();
        for (Element y = 0; y < p.size(); ++y) {
          row[p.name(y)] = p.name(f(x, y));
        }
        o[p.name(x)] = std::move(row);
      }
      return o;
    }

    json families_json(FinitePoset const&                          p,
                       std::vector<std::vector<ElementSet>> const& fam) {
      json o = json::object();
      for (Element x = 0; x < p.size(); ++x) {
        json a = json::array();
        for (ElementSet s : fam[x]) {
          a.push_back(names_json(p, s));
        }
        o[p.name(x)] = std::move(a);
      }
      return o;
    }

    std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                    std::size_t byte) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
          ++col;
        }
      }
      return {line, col};
    }

    json to_json(Document const& d) {
      json j = json::object();
      j["kind"] = kind_name(d.kind);
      if (d.is_heyting_kind()) {
        auto const& h = d.algebra.heyting();
        auto const& p = h.poset();
        j["elements"] = p.names();
        j["covers"]   = covers_json(p);
        j["implication"] =
            binary_json(p, [&](Element a, Element b) { return h.imp(a, b); });
        if (d.kind == DocumentKind::modal_heyting) {
          j["box"] = unary_json(p, [&](Element a) { return d.algebra.box(a); });
          j["diamond"] =
              unary_json(p, [&](Element a) { return d.algebra.diamond(a); });
        }
        if (d.filter) {
          j["filter"] = names_json(p, *d.filter);
        }
      } else if (d.is_nelson_kind()) {
        auto const& n = d.lattice;
        auto const& p = n.poset();
        j["elements"] = p.names();
        j["covers"]   = covers_json(p);
        j["fusion"] =
            binary_json(p, [&](Element a, Element b) { return n.fusion(a, b); });
        j["res"] =
            binary_json(p, [&](Element a, Element b) { return n.res(a, b); });
        if (d.kind == DocumentKind::modal_nelson) {
          j["blacksquare"] = unary_json(p, [&](Element a) { return n.bsq(a); });
          j["blackdiamond"] =
              unary_json(p, [&](Element a) { return n.bdia(a); });
        }
      } else {
        auto const& x = d.space.me;
        auto const& p = x.points;
        j["points"]      = p.names();
        j["covers"]      = covers_json(p);
        j["eta_box"]     = families_json(p, x.eta_box);
        j["eta_diamond"] = families_json(p, x.eta_diamond);
        if (d.kind == DocumentKind::mne_space) {
          j["closed"] = names_json(p, d.space.closed);
        }
      }
      return j;
    }

  }  // namespace

  std::string_view kind_name(DocumentKind k) {
    return info(k).name;
  }

  std::size_t Document::size() const {
    if (is_heyting_kind()) {
      return algebra.size();
    }
    if (is_nelson_kind()) {
      return lattice.size();
    }
    return space.me.points.size();
  }

  Document make_document(HeytingAlgebra const& h,
                         std::optional<ElementSet> filter) {
    Document d;
    d.kind    = DocumentKind::heyting;
    d.algebra = with_identity_modalities(h);
    d.filter  = filter;
    return d;
  }

  Document make_document(ModalHeytingAlgebra const& m,
                         std::optional<ElementSet>  filter) {
    Document d;
    d.kind    = DocumentKind::modal_heyting;
    d.algebra = m;
    d.filter  = filter;
    return d;
  }

  Document make_document(ModalNelsonLattice const& n) {
    Document d;
    d.kind    = n.has_modal() ? DocumentKind::modal_nelson
                              : DocumentKind::nelson;
    d.lattice = n;
    return d;
  }

  Document make_document(MESpace const& x) {
    Document d;
    d.kind     = DocumentKind::space;
    d.space.me = x;
    return d;
  }

  Document make_document(MNESpace const& x) {
    Document d;
    d.kind  = DocumentKind::mne_space;
    d.space = x;
    return d;
  }

  Document parse_document(std::string_view text) {
    json j;
    try {
      j = json::parse(text.begin(), text.end());
    } catch (json::parse_error const& e) {
      auto [line, col] = line_column(text, e.byte);
      throw InputError("parse error at line " + std::to_string(line)
                       + ", column " + std::to_string(col));
    }
    if (!j.is_object()) {
      throw InputError("document must be a JSON object");
    }
    std::string const kind = as_name(field(j, "kind"), "kind");
    auto it = std::find_if(kinds().begin(), kinds().end(),
                           [&](KindInfo const& i) { return i.name == kind; });
    if (it == kinds().end()) {
      throw InputError("unknown kind '" + kind + "'");
    }
    for (auto const& [k, v] : j.items()) {
      if (std::find(it->fields.begin(), it->fields.end(), k)
          == it->fields.end()) {
        throw InputError("field '" + k + "' does not belong to a " + kind
                         + " document");
      }
    }

    Document d;
    d.kind = it->kind;
    if (d.is_heyting_kind()) {
      HeytingAlgebra h =
          heyting_from_covers(read_names(j, "elements"), read_covers(j));
      auto const& p = h.poset();
      if (j.contains("implication")) {
        auto imp = read_binary(j, "implication", p);
        for (Element a = 0; a < h.size(); ++a) {
          for (Element b = 0; b < h.size(); ++b) {
            if (imp[a * h.size() + b] != h.imp(a, b)) {
              throw InputError("implication(" + h.name(a) + ", " + h.name(b)
                               + ") should be '" + h.name(h.imp(a, b)) + "'");
            }
          }
        }
      }
      if (d.kind == DocumentKind::modal_heyting) {
        auto box     = read_unary(j, "box", p);
        auto diamond = read_unary(j, "diamond", p);
        d.algebra    = ModalHeytingAlgebra(std::move(h), std::move(box),
                                           std::move(diamond));
      } else {
        d.algebra = with_identity_modalities(std::move(h));
      }
      if (j.contains("filter")) {
        // h has been moved into d.algebra.
        ElementSet f =
            read_set(j["filter"], d.algebra.heyting().poset(), "filter");
        if (!is_filter(d.algebra.heyting(), f)) {
          throw InputError("'filter' is not a filter");
        }
        d.filter = f;
      }
    } else if (d.is_nelson_kind()) {
      FiniteLattice lat = lattice_from_poset(
          poset_from_covers(read_names(j, "elements"), read_covers(j)));
      auto const& p      = lat.poset();
      auto        fusion = read_binary(j, "fusion", p);
      auto        res    = read_binary(j, "res", p);
      if (d.kind == DocumentKind::modal_nelson) {
        auto bsq  = read_unary(j, "blacksquare", p);
        auto bdia = read_unary(j, "blackdiamond", p);
        d.lattice = ModalNelsonLattice(std::move(lat), std::move(fusion),
                                       std::move(res), std::move(bsq),
                                       std::move(bdia));
      } else {
        d.lattice = ModalNelsonLattice(std::move(lat), std::move(fusion),
                                       std::move(res));
      }
    } else {
      MESpace x;
      x.points        = poset_from_covers(read_names(j, "points"),
                                          read_covers(j));
      x.eta_box       = read_families(j, "eta_box", x.points);
      x.eta_diamond   = read_families(j, "eta_diamond", x.points);
      d.space.me      = std::move(x);
      if (d.kind == DocumentKind::mne_space) {
        d.space.closed = read_set(field(j, "closed"), d.space.me.points,
                                  "closed");
      }
    }
    return d;
  }

  Document load_document(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError(path + ": cannot open");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      return parse_document(buf.str());
    } catch (InputError const& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  std::string serialize_document(Document const& d) {
    // One top-level field per line; binary tables and neighbourhood maps
    // get one row per line.
    json const  j = to_json(d);
    std::string out = "{\n";
    bool        first_field = true;
    for (auto const& [key, value] : j.items()) {
      if (!first_field) {
        out += ",\n";
      }
      first_field = false;
      out += "  " + json(key).dump() + ": ";
      bool nested = value.is_object() && !value.empty()
                    && (value.begin()->is_object()
                        || value.begin()->is_array());
      if (!nested) {
        out += value.dump();
        continue;
      }
      out += "{\n";
      bool first_row = true;
      for (auto const& [k, row] : value.items()) {
        if (!first_row) {
          out += ",\n";
        }
        first_row = false;
        out += "    " + json(k).dump() + ": " + row.dump();
      }
      out += "\n  }";
    }
    return out + "\n}\n";
  }

  ElementSet parse_name_list(FinitePoset const& p, std::string_view list) {
    ElementSet  s;
    std::size_t start = 0;
    while (start <= list.size()) {
      std::size_t end = list.find(',', start);
      if (end == std::string_view::npos) {
        end = list.size();
      }
      std::string_view name = list.substr(start, end - start);
      while (!name.empty() && name.front() == ' ') {
        name.remove_prefix(1);
      }
      while (!name.empty() && name.back() == ' ') {
        name.remove_suffix(1);
      }
      if (!name.empty()) {
        auto x = p.index_of(name);
        if (!x) {
          throw InputError("unknown element '" + std::string(name) + "'");
        }
        s.insert(*x);
      }
      start = end + 1;
    }
    return s;
  }

}  // namespace mnl
