// mnl: batch workbench over finite modal Heyting algebras, modal Nelson
// lattices and their dual spaces.
//
// Exit status: 0 when every reported law holds, 1 when one fails, 2 on
// malformed input or usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mnl/catalog.hpp"
#include "mnl/document.hpp"
#include "mnl/duality.hpp"
#include "mnl/error.hpp"
#include "mnl/heyting.hpp"
#include "mnl/modal_heyting.hpp"
#include "mnl/nelson.hpp"
#include "mnl/twist.hpp"

namespace {

  using json = nlohmann::ordered_json;
  using namespace mnl;

  struct Report {
    explicit Report(std::string c = {}) : command(std::move(c)) {}

    std::string               command;
    std::vector<LawReport>    laws;
    json                      summary = json::object();
    // Bulk output: `data` in machine format, `lines` in text format.
    json                      data = json::object();
    std::vector<std::string>  lines;
    std::optional<Document>   document;

    bool failed() const {
      for (auto const& l : laws) {
        if (!l.holds) {
          return true;
        }
      }
      return false;
    }
  };

  struct Options {
    std::string format = "text";
    std::string output;
  };

  json names_json(FinitePoset const& p, ElementSet s) {
    json a = json::array();
    for (auto const& n : names_of(p, s)) {
      a.push_back(n);
    }
    return a;
  }

  json law_json(LawReport const& r) {
    json j     = json::object();
    j["law"]   = r.law;
    j["holds"] = r.holds;
    if (!r.witness.empty()) {
      j["witness"] = r.witness;
    }
    if (!r.detail.empty()) {
      j["detail"] = r.detail;
    }
    return j;
  }

  int emit(Report const& r, Options const& o) {
    if (r.document && !o.output.empty()) {
      std::ofstream out(o.output, std::ios::binary);
      if (!out) {
        throw InputError(o.output + ": cannot write");
      }
      out << serialize_document(*r.document);
    }
    bool const print_doc = r.document && o.output.empty();
    if (o.format == "machine") {
      json j       = json::object();
      j["command"] = r.command;
      j["status"]  = r.failed() ? "fail" : "pass";
      json laws    = json::array();
      for (auto const& l : r.laws) {
        laws.push_back(law_json(l));
      }
      j["laws"]    = std::move(laws);
      j["summary"] = r.summary;
      for (auto const& [k, v] : r.data.items()) {
        j[k] = v;
      }
      if (print_doc) {
        j["document"] = json::parse(serialize_document(*r.document));
      }
      std::cout << j.dump(2) << "\n";
    } else {
      for (auto const& l : r.laws) {
        std::cout << to_string(l) << "\n";
      }
      for (auto const& [k, v] : r.summary.items()) {
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>()
                                                 : v.dump())
                  << "\n";
      }
      for (auto const& line : r.lines) {
        std::cout << line << "\n";
      }
      if (print_doc) {
        std::cout << serialize_document(*r.document);
      }
    }
    return r.failed() ? 1 : 0;
  }

  std::vector<std::string> split_list(std::string const& s) {
    std::vector<std::string> out;
    std::stringstream        in(s);
    std::string              item;
    while (std::getline(in, item, ',')) {
      auto b = item.find_first_not_of(' ');
      auto e = item.find_last_not_of(' ');
      if (b != std::string::npos) {
        out.push_back(item.substr(b, e - b + 1));
      }
    }
    return out;
  }

  void require_heyting(Document const& d, std::string const& what) {
    if (!d.is_heyting_kind()) {
      throw InputError(what + " needs a heyting or modal-heyting document");
    }
  }
  void require_nelson(Document const& d, std::string const& what) {
    if (!d.is_nelson_kind()) {
      throw InputError(what + " needs a nelson or modal-nelson document");
    }
  }
  void require_space(Document const& d, std::string const& what) {
    if (!d.is_space_kind()) {
      throw InputError(what + " needs a space or mne-space document");
    }
  }

  // --filter wins over the document's own filter.
  std::optional<ElementSet> pick_filter(Document const&    d,
                                        std::string const& flag) {
    if (!flag.empty()) {
      auto const& h = d.algebra.heyting();
      ElementSet  f = parse_name_list(h.poset(), flag);
      if (!is_filter(h, f)) {
        throw InputError("--filter does not name a filter");
      }
      return f;
    }
    return d.filter;
  }

  // Runs f and turns a failed internal verification into a failing law.
  template <typename F>
  LawReport verified(std::string const& law, F&& f) {
    try {
      f();
      return LawReport::pass(law);
    } catch (InternalInconsistency const& e) {
      return LawReport::fail(law, {}, e.what());
    }
  }

  // ---------------------------------------------------------------------

  Report cmd_validate(Document const& d) {
    Report r{"validate"};
    r.summary["kind"] = kind_name(d.kind);
    r.summary["size"] = d.size();
    return r;
  }

  Report cmd_check(Document const& d, std::string const& laws,
                   std::string const& filter_flag) {
    Report     r{"check"};
    auto const wanted = split_list(laws);
    if (wanted.empty()) {
      throw InputError("--law needs at least one name");
    }
    bool const all = wanted.size() == 1 && wanted[0] == "all";

    if (d.is_heyting_kind()) {
      auto const filter = pick_filter(d, filter_flag);
      auto const names  = all ? modal_heyting_law_names() : wanted;
      for (auto const& law : names) {
        if (law == "F_condition" && !filter) {
          if (all) {
            continue;
          }
          throw InputError("F_condition needs a filter");
        }
        r.laws.push_back(check_law(d.algebra, law, filter));
      }
    } else if (d.is_nelson_kind()) {
      auto const names = all ? modal_nelson_law_names() : wanted;
      for (auto const& law : names) {
        r.laws.push_back(check_mn_law(d.lattice, law));
      }
    } else {
      std::vector<std::string> names = wanted;
      if (all) {
        names = {"me_space"};
        if (d.kind == DocumentKind::mne_space) {
          names.insert(names.end(), {"F_star", "mne_space"});
        }
      }
      for (auto const& law : names) {
        if (law == "me_space") {
          r.laws.push_back(check_me_space(d.space.me));
        } else if ((law == "F_star" || law == "mne_space")
                   && d.kind == DocumentKind::mne_space) {
          r.laws.push_back(law == "F_star" ? check_f_star(d.space)
                                           : check_mne_space(d.space));
        } else {
          throw InputError("unknown space law '" + law + "'");
        }
      }
    }
    return r;
  }

  Report cmd_twist(Document const& d, std::string const& filter_flag) {
    require_heyting(d, "twist");
    Report     r{"twist"};
    auto const filter = pick_filter(d, filter_flag);
    bool const modal  = d.kind == DocumentKind::modal_heyting;
    auto const& h     = d.algebra.heyting();
    TwistAlgebra t =
        modal ? (filter ? twist_filtered(d.algebra, *filter)
                        : twist_full(d.algebra))
              : (filter ? twist_filtered(h, *filter) : twist_full(h));
    auto const& n = t.algebra;
    r.laws.push_back(check_residuated(n));
    r.laws.push_back(check_nelson(n));
    if (modal) {
      for (char const* law : {"mN1", "mN2", "mN3"}) {
        r.laws.push_back(check_mn_law(n, law));
      }
    }
    r.summary["size"]    = n.size();
    r.summary["filter"]  = names_json(h.poset(), t.filter);
    r.summary["classes"] = equiv_partition(n).class_count();
    LawReport centered   = check_mn_law(n, "centered");
    r.summary["centered"] = centered.holds;
    r.document            = make_document(n);
    return r;
  }

  Report cmd_hstar(Document const& d) {
    require_nelson(d, "hstar");
    Report      r{"hstar"};
    HStar const hs = h_star(d.lattice);
    ElementSet  fs = f_star(d.lattice, hs);
    r.summary["size"] = hs.algebra.size();
    r.document        = d.lattice.has_modal()
                            ? make_document(hs.algebra, fs)
                            : make_document(hs.algebra.heyting(), fs);
    return r;
  }

  Report cmd_fstar(Document const& d) {
    require_nelson(d, "fstar");
    Report      r{"fstar"};
    HStar const hs = h_star(d.lattice);
    ElementSet  fs = f_star(d.lattice, hs);
    r.summary["fstar"] = names_json(hs.algebra.heyting().poset(), fs);
    r.summary["boolean_filter"] =
        is_boolean_filter(hs.algebra.heyting(), fs);
    return r;
  }

  Report cmd_quotient(Document const& d, std::string const& filter_flag) {
    require_heyting(d, "quotient");
    auto const filter = pick_filter(d, filter_flag);
    if (!filter) {
      throw InputError("quotient needs --filter");
    }
    Report         r{"quotient"};
    Quotient const q = quotient_by_filter(d.algebra.heyting(), *filter);
    r.summary["size"]    = q.algebra.size();
    r.summary["boolean"] = is_boolean_algebra(q.algebra);
    r.document           = make_document(q.algebra);
    return r;
  }

  Report cmd_primefilters(Document const& d) {
    require_heyting(d, "primefilters");
    Report      r{"primefilters"};
    auto const& h = d.algebra.heyting();
    Spectrum    s = prime_filters(h);
    json        filters = json::object();
    for (Element p = 0; p < s.filters.size(); ++p) {
      filters[s.points.name(p)] = names_json(h.poset(), s.filters[p]);
    }
    json order = json::array();
    for (auto [lo, hi] : s.points.covers()) {
      order.push_back(json::array({s.points.name(lo), s.points.name(hi)}));
    }
    r.summary["count"]   = s.filters.size();
    r.summary["filters"] = std::move(filters);
    r.summary["covers"]  = std::move(order);
    return r;
  }

  Report cmd_dual(Document const& d) {
    require_heyting(d, "dual");
    Report  r{"dual"};
    MESpace x = dual_space(d.algebra);
    r.laws.push_back(check_me_space(x));
    r.summary["points"] = x.points.size();
    r.document          = make_document(x);
    return r;
  }

  Report cmd_mne(Document const& d, std::string const& filter_flag) {
    require_heyting(d, "mne");
    auto const filter = pick_filter(d, filter_flag);
    if (!filter) {
      throw InputError("mne needs a filter");
    }
    Report   r{"mne"};
    MNESpace x = mne_from_pair(d.algebra, *filter);
    r.laws.push_back(check_mne_space(x));
    r.summary["points"] = x.me.points.size();
    r.summary["closed"] = names_json(x.me.points, x.closed);
    r.document          = make_document(x);
    return r;
  }

  Report cmd_algebra_of_space(Document const& d) {
    require_space(d, "algebra-of-space");
    Report       r{"algebra-of-space"};
    SpaceAlgebra a = algebra_of_space(d.space.me);
    r.laws.push_back(check_mh(a.algebra));
    r.summary["size"] = a.algebra.size();
    if (d.kind == DocumentKind::mne_space) {
      r.document = make_document(a.algebra, filter_of_closed(d.space));
    } else {
      r.document = make_document(a.algebra);
    }
    return r;
  }

  Report cmd_iso(Document const& a, Document const& b) {
    if (a.kind != b.kind) {
      throw InputError("cannot compare a " + std::string(kind_name(a.kind))
                       + " document with a " + std::string(kind_name(b.kind))
                       + " document");
    }
    Report                  r{"iso"};
    std::optional<Morphism> f;
    FinitePoset const*      pa = nullptr;
    FinitePoset const*      pb = nullptr;
    switch (a.kind) {
      case DocumentKind::heyting:
        f  = is_isomorphic(a.algebra.heyting(), b.algebra.heyting());
        pa = &a.algebra.heyting().poset();
        pb = &b.algebra.heyting().poset();
        break;
      case DocumentKind::modal_heyting:
        f  = is_isomorphic(a.algebra, b.algebra);
        pa = &a.algebra.heyting().poset();
        pb = &b.algebra.heyting().poset();
        break;
      case DocumentKind::nelson:
      case DocumentKind::modal_nelson:
        f  = is_isomorphic(a.lattice, b.lattice);
        pa = &a.lattice.poset();
        pb = &b.lattice.poset();
        break;
      case DocumentKind::space:
        f  = is_isomorphic(a.space.me, b.space.me);
        pa = &a.space.me.points;
        pb = &b.space.me.points;
        break;
      case DocumentKind::mne_space:
        f  = is_isomorphic(a.space, b.space);
        pa = &a.space.me.points;
        pb = &b.space.me.points;
        break;
    }
    if (!f) {
      r.laws.push_back(LawReport::fail("isomorphic", {}));
      return r;
    }
    r.laws.push_back(LawReport::pass("isomorphic"));
    json map = json::object();
    for (Element x = 0; x < f->map.size(); ++x) {
      map[pa->name(x)] = pb->name((*f)(x));
    }
    r.summary["map"] = std::move(map);
    return r;
  }

  Report cmd_roundtrip(Document const& d, std::string const& filter_flag) {
    Report r{"roundtrip"};
    if (d.is_heyting_kind()) {
      auto const& m = d.algebra;
      r.laws.push_back(verified("sigma_iso", [&] { sigma_isomorphism(m); }));
      r.laws.push_back(
          verified("epsilon_iso", [&] { epsilon(dual_space(m)); }));
      if (auto f = pick_filter(d, filter_flag)) {
        r.laws.push_back(verified("beta_iso", [&] { iso_beta(m, *f); }));
        r.laws.push_back(verified("filter_roundtrip", [&] {
          // σ[F] = F_{C(F)}.
          MNESpace const   x     = mne_from_pair(m, *f);
          ElementSet const fc    = filter_of_closed(x);
          Morphism const   sigma = sigma_isomorphism(m);
          ElementSet       image;
          for (Element a : *f) {
            image.insert(sigma(a));
          }
          if (image != fc) {
            throw InternalInconsistency("σ[F] ≠ F_C(F)");
          }
        }));
      }
    } else if (d.is_nelson_kind()) {
      r.laws.push_back(verified("h_iso", [&] { iso_h(d.lattice); }));
    } else {
      r.laws.push_back(verified("epsilon_iso", [&] { epsilon(d.space.me); }));
      if (d.kind == DocumentKind::mne_space) {
        r.laws.push_back(verified("closed_roundtrip", [&] {
          // ε[C] = C(F_C).
          SpaceAlgebra const a  = algebra_of_space(d.space.me);
          ElementSet const   fc = filter_of_closed(d.space);
          Spectrum const     s  = prime_filters(a.algebra.heyting());
          Morphism const     e  = epsilon(d.space.me);
          ElementSet         image;
          for (Element x : d.space.closed) {
            image.insert(e(x));
          }
          if (image != closed_of_filter(s, fc)) {
            throw InternalInconsistency("ε[C] ≠ C(F_C)");
          }
        }));
      }
    }
    return r;
  }

  Report cmd_enumerate(Document const& d, std::string const& laws,
                       std::size_t limit, bool list) {
    require_heyting(d, "enumerate");
    Report      r{"enumerate"};
    auto const& h = d.algebra.heyting();
    auto const& p = h.poset();
    auto        names = split_list(laws);
    EnumerationBudget budget;
    if (limit > 0) {
      budget.max_results = limit;
    }
    json pairs = json::array();
    auto stats = enumerate_modal_pairs(h, names, budget, [&](ModalPair const& m) {
      if (list) {
        json box = json::object(), dia = json::object();
        for (Element x = 0; x < h.size(); ++x) {
          box[p.name(x)] = p.name(m.box[x]);
          dia[p.name(x)] = p.name(m.diamond[x]);
        }
        r.lines.push_back("box " + box.dump() + " diamond " + dia.dump());
        json entry       = json::object();
        entry["box"]     = std::move(box);
        entry["diamond"] = std::move(dia);
        pairs.push_back(std::move(entry));
      }
      return true;
    });
    r.summary["count"]    = stats.yielded;
    r.summary["complete"] = stats.complete;
    r.summary["nodes"]    = stats.nodes;
    if (list) {
      r.data["pairs"] = std::move(pairs);
    }
    return r;
  }

  Report cmd_catalog(std::size_t max_size, std::string const& out_dir) {
    Report r{"catalog"};
    auto   entries = build_catalog(max_size);
    json   index   = json::array();
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
    }
    for (auto const& e : entries) {
      json item    = json::object();
      item["name"] = e.name;
      item["kind"] = kind_name(e.document.kind);
      item["size"] = e.document.size();
      index.push_back(std::move(item));
      if (!out_dir.empty()) {
        auto          path = std::filesystem::path(out_dir) / (e.name + ".json");
        std::ofstream out(path, std::ios::binary);
        if (!out) {
          throw InputError(path.string() + ": cannot write");
        }
        out << serialize_document(e.document);
      }
    }
    r.summary["count"] = entries.size();
    for (auto const& item : index) {
      r.lines.push_back(item["name"].get<std::string>() + " "
                        + item["kind"].get<std::string>() + " "
                        + std::to_string(item["size"].get<std::size_t>()));
    }
    r.data["entries"] = std::move(index);
    return r;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite modal Heyting / modal Nelson workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("-o,--output", opts.output, "Write the output document here");

  std::string file, file_b, laws, filter;
  std::size_t limit = 0, max_size = 6;
  bool        list  = false;
  std::string out_dir;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Input document")->required();
    return sub;
  };

  auto* validate = with_file(app.add_subcommand("validate", "Parse and validate a document"));
  auto* check    = with_file(app.add_subcommand("check", "Evaluate named laws"));
  check->add_option("--law", laws, "Comma-separated law names or 'all'")->required();
  check->add_option("--filter", filter, "Comma-separated filter elements");
  auto* twist = with_file(app.add_subcommand("twist", "Build the twist product"));
  twist->add_option("--filter", filter, "Comma-separated filter elements");
  auto* hstar = with_file(app.add_subcommand("hstar", "Idempotent algebra (M*, F*)"));
  auto* fstar = with_file(app.add_subcommand("fstar", "The filter F*"));
  auto* quotient = with_file(app.add_subcommand("quotient", "Quotient by a filter"));
  quotient->add_option("--filter", filter, "Comma-separated filter elements");
  auto* primef = with_file(app.add_subcommand("primefilters", "Prime filter spectrum"));
  auto* dual   = with_file(app.add_subcommand("dual", "Dual ME-space"));
  auto* aos    = with_file(app.add_subcommand("algebra-of-space", "Up-set algebra of a space"));
  auto* mne    = with_file(app.add_subcommand("mne", "Dual MNE-space of a pair (M, F)"));
  mne->add_option("--filter", filter, "Comma-separated filter elements");
  auto* iso = app.add_subcommand("iso", "Search for an isomorphism");
  iso->add_option("file", file, "First document")->required();
  iso->add_option("other", file_b, "Second document")->required();
  auto* roundtrip = with_file(app.add_subcommand("roundtrip", "Verify the representation isomorphisms"));
  roundtrip->add_option("--filter", filter, "Comma-separated filter elements");
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate (mH) operator pairs");
  enumerate->add_option("--base", file, "Base algebra document")->required();
  enumerate->add_option("--laws", laws, "Additional laws, comma-separated")->default_val("mH");
  enumerate->add_option("--limit", limit, "Stop after this many pairs (0 = no limit)");
  enumerate->add_flag("--list", list, "Print every pair");
  auto* catalog = app.add_subcommand("catalog", "Generate the fixture catalog");
  catalog->add_option("--max-size", max_size, "Largest distributive lattice")->default_val(6);
  catalog->add_option("--out", out_dir, "Directory for the catalog files");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    Report r;
    if (catalog->parsed()) {
      r = cmd_catalog(max_size, out_dir);
    } else if (iso->parsed()) {
      r = cmd_iso(load_document(file), load_document(file_b));
    } else {
      Document const d = load_document(file);
      if (validate->parsed()) {
        r = cmd_validate(d);
      } else if (check->parsed()) {
        r = cmd_check(d, laws, filter);
      } else if (twist->parsed()) {
        r = cmd_twist(d, filter);
      } else if (hstar->parsed()) {
        r = cmd_hstar(d);
      } else if (fstar->parsed()) {
        r = cmd_fstar(d);
      } else if (quotient->parsed()) {
        r = cmd_quotient(d, filter);
      } else if (primef->parsed()) {
        r = cmd_primefilters(d);
      } else if (dual->parsed()) {
        r = cmd_dual(d);
      } else if (aos->parsed()) {
        r = cmd_algebra_of_space(d);
      } else if (mne->parsed()) {
        r = cmd_mne(d, filter);
      } else if (roundtrip->parsed()) {
        r = cmd_roundtrip(d, filter);
      } else if (enumerate->parsed()) {
        r = cmd_enumerate(d, laws, limit, list);
      }
    }
    return emit(r, opts);
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (InternalInconsistency const& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  }
}
