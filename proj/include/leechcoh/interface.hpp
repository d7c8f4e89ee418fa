// leechcoh - exact Leech cohomology of finite monoids and monoid sequences
//
// JSON documents and the commands of the leechcoh tool.
//
// A document holds named monoids, coefficient systems, grids, set systems
// and descriptor lists. Unknown keys are rejected and every diagnostic names
// the JSON path it came from, e.g. /grids/0/vertical/maps/[0,1].
//
// run_command returns the exit code (0 ok, 1 validation failure, 2 input
// error) and a deterministic report in text or JSON.

#ifndef LEECHCOH_INTERFACE_HPP_
#define LEECHCOH_INTERFACE_HPP_

#include <algorithm>  // for count, max
#include <cstddef>    // for size_t
#include <map>        // for map
#include <optional>   // for optional
#include <set>        // for set
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <utility>    // for move, pair
#include <vector>     // for vector

#include <nlohmann/json.hpp>

#include "abelian.hpp"
#include "coeff.hpp"
#include "error.hpp"
#include "grid.hpp"
#include "leech.hpp"
#include "monoid.hpp"
#include "structured.hpp"
#include "totalcx.hpp"

namespace leechcoh {

  ////////////////////////////////////////////////////////////////////////
  // Document model
  ////////////////////////////////////////////////////////////////////////

  struct MonoidEntry {
    std::string name;
    FinMonoid   monoid;

    friend bool operator==(MonoidEntry const&, MonoidEntry const&) = default;
  };

  enum class CoeffKind { constant, action, explicit_maps };

  inline std::string to_string(CoeffKind k) {
    switch (k) {
      case CoeffKind::constant: return "constant";
      case CoeffKind::action: return "action";
      case CoeffKind::explicit_maps: return "explicit";
    }
    return "";
  }

  struct CoeffEntry {
    std::string name;
    std::string monoid;
    CoeffKind   kind;
    CoeffSystem system;

    friend bool operator==(CoeffEntry const&, CoeffEntry const&) = default;
  };

  // A floor names a coefficient system, or a monoid that then carries the
  // constant default group.
  struct FloorRef {
    std::optional<std::string> monoid;
    std::optional<std::string> coeff;

    friend bool operator==(FloorRef const&, FloorRef const&) = default;
  };

  // Either explicit moves or a named column rule.
  struct PathChoice {
    std::string                moves;
    std::optional<std::string> rule;

    friend bool operator==(PathChoice const&, PathChoice const&) = default;
  };

  struct GridEntry {
    std::string           name;
    std::vector<FloorRef> floors;
    GridSpec              spec;
    VerticalFamily        family = VerticalFamily::zero();
    PathChoice            path;
    std::optional<size_t> pmax;

    friend bool operator==(GridEntry const&, GridEntry const&) = default;
  };

  struct SetSystemEntry {
    std::string           name;
    SetSystem             system;
    PathChoice            path;
    std::optional<size_t> pmax;

    friend bool operator==(SetSystemEntry const&, SetSystemEntry const&) = default;
  };

  struct DescriptorListEntry {
    std::string                      name;
    std::vector<StructureDescriptor> descriptors;
    bool                             finite = true;
    PathChoice                       path;
    std::optional<size_t>            pmax;

    friend bool operator==(DescriptorListEntry const&, DescriptorListEntry const&)
        = default;
  };

  struct Defaults {
    size_t    pmax  = 4;
    FgAbGroup group = FgAbGroup::free(1);

    friend bool operator==(Defaults const&, Defaults const&) = default;
  };

  struct Document {
    std::vector<MonoidEntry>         monoids;
    std::vector<CoeffEntry>          coefficients;
    std::vector<GridEntry>           grids;
    std::vector<SetSystemEntry>      set_systems;
    std::vector<DescriptorListEntry> descriptor_lists;
    Defaults                         defaults;

    [[nodiscard]] MonoidEntry const* find_monoid(std::string const& n) const {
      return find(monoids, n);
    }

    [[nodiscard]] CoeffEntry const* find_coeff(std::string const& n) const {
      return find(coefficients, n);
    }

    friend bool operator==(Document const&, Document const&) = default;

   private:
    template <typename T>
    static T const* find(std::vector<T> const& v, std::string const& n) {
      for (auto const& x : v) {
        if (x.name == n) {
          return &x;
        }
      }
      return nullptr;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    using json = nlohmann::json;

    [[noreturn]] inline void input_error(std::string const& path,
                                         std::string const& what) {
      throw Error(ErrorKind::input, (path.empty() ? "/" : path) + ": " + what);
    }

    inline void check_keys(json const&                     j,
                           std::string const&              path,
                           std::set<std::string> const&    allowed,
                           std::set<std::string> const&    required = {}) {
      if (!j.is_object()) {
        input_error(path, "expected an object");
      }
      for (auto const& [key, value] : j.items()) {
        if (!allowed.contains(key)) {
          input_error(path, "unknown key \"" + key + "\"");
        }
      }
      for (auto const& key : required) {
        if (!j.contains(key)) {
          input_error(path, "missing key \"" + key + "\"");
        }
      }
    }

    inline void require_object(json const& j, std::string const& path) {
      if (!j.is_object()) {
        input_error(path, "expected an object");
      }
    }

    inline std::string get_string(json const& j, std::string const& path) {
      if (!j.is_string()) {
        input_error(path, "expected a string");
      }
      return j.get<std::string>();
    }

    inline size_t get_size(json const& j, std::string const& path) {
      if (!j.is_number_unsigned()) {
        input_error(path, "expected a nonnegative integer");
      }
      return j.get<size_t>();
    }

    inline bool get_bool(json const& j, std::string const& path) {
      if (!j.is_boolean()) {
        input_error(path, "expected true or false");
      }
      return j.get<bool>();
    }

    inline json const& get_array(json const& j, std::string const& path) {
      if (!j.is_array()) {
        input_error(path, "expected an array");
      }
      return j;
    }

    inline Integer get_integer(json const& j, std::string const& path) {
      if (j.is_number_unsigned()) {
        return Integer(std::to_string(j.get<unsigned long long>()));
      }
      if (j.is_number_integer()) {
        return Integer(std::to_string(j.get<long long>()));
      }
      if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) == 0) {
          return x;
        }
      }
      input_error(path, "expected an integer");
    }

    inline FgAbGroup get_group(json const& j, std::string const& path) {
      auto const text = get_string(j, path);
      try {
        return FgAbGroup::parse(text);
      } catch (Error const& e) {
        input_error(path, "bad group \"" + text + "\": " + e.what());
      }
    }

    inline IntMatrix get_matrix(json const& j,
                                std::string const& path,
                                size_t rows,
                                size_t cols) {
      get_array(j, path);
      if (j.size() != rows) {
        input_error(path, "expected " + std::to_string(rows) + " rows, found "
                              + std::to_string(j.size()));
      }
      IntMatrix m(rows, cols);
      for (size_t i = 0; i < rows; ++i) {
        auto const row_path = path + "/" + std::to_string(i);
        get_array(j[i], row_path);
        if (j[i].size() != cols) {
          input_error(row_path, "expected " + std::to_string(cols)
                                    + " entries, found "
                                    + std::to_string(j[i].size()));
        }
        for (size_t k = 0; k < cols; ++k) {
          m(i, k) = get_integer(j[i][k], row_path + "/" + std::to_string(k));
        }
      }
      return m;
    }

    inline AbHom get_hom(json const&        j,
                         std::string const& path,
                         CyclicSum const&   from,
                         CyclicSum const&   to) {
      auto m = get_matrix(j, path, to.size(), from.size());
      try {
        return AbHom(from, to, std::move(m));
      } catch (Error const& e) {
        input_error(path, e.what());
      }
    }

    inline std::string trim(std::string const& s) {
      auto const b = s.find_first_not_of(' ');
      if (b == std::string::npos) {
        return "";
      }
      return s.substr(b, s.find_last_not_of(' ') - b + 1);
    }

    // "[a,x]" where a and x are element names; element names may contain
    // commas, so the split must be the unique one naming two elements.
    inline std::pair<element_index, element_index>
    parse_pair_key(std::string const& key, FinMonoid const& m, std::string const& path) {
      if (key.size() < 2 || key.front() != '[' || key.back() != ']') {
        input_error(path, "keys have the form [a,x]");
      }
      auto const inner = key.substr(1, key.size() - 2);
      std::vector<std::pair<element_index, element_index>> splits;
      for (size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] != ',') {
          continue;
        }
        auto const a = trim(inner.substr(0, i));
        auto const x = trim(inner.substr(i + 1));
        if (m.contains(a) && m.contains(x)) {
          splits.emplace_back(m.index_of(a), m.index_of(x));
        }
      }
      if (splits.size() != 1) {
        input_error(path, splits.empty() ? "key does not name two elements"
                                         : "key is ambiguous");
      }
      return splits.front();
    }

    inline std::pair<size_t, size_t> parse_index_key(std::string const& key,
                                                     std::string const& path) {
      auto const comma = key.find(',');
      if (key.size() < 5 || key.front() != '[' || key.back() != ']'
          || comma == std::string::npos) {
        input_error(path, "keys have the form [n,p]");
      }
      auto number = [&](std::string const& s) {
        auto const t = trim(s);
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
          input_error(path, "keys have the form [n,p]");
        }
        return static_cast<size_t>(std::stoull(t));
      };
      return {number(key.substr(1, comma - 1)),
              number(key.substr(comma + 1, key.size() - comma - 2))};
    }

    inline std::vector<std::string> get_names(json const& j, std::string const& path) {
      get_array(j, path);
      std::vector<std::string> result;
      for (size_t i = 0; i < j.size(); ++i) {
        result.push_back(get_string(j[i], path + "/" + std::to_string(i)));
      }
      return result;
    }

    inline FinMonoid parse_monoid(json const& j, std::string const& path) {
      if (j.contains("builder")) {
        auto const b = get_string(j["builder"], path + "/builder");
        if (b == "cyclic" || b == "power_set") {
          check_keys(j, path, {"name", "builder", "n"}, {"name", "n"});
          size_t const n = get_size(j["n"], path + "/n");
          if (b == "cyclic") {
            if (n == 0 || n > 64) {
              input_error(path + "/n", "cyclic needs 1 <= n <= 64");
            }
            return cyclic_group(n);
          }
          if (n > 6) {
            input_error(path + "/n", "power_set needs n <= 6");
          }
          return power_set_monoid(n);
        }
        if (b == "union") {
          check_keys(j, path, {"name", "builder", "family"}, {"name", "family"});
          std::vector<std::set<std::string>> family;
          auto const& f = get_array(j["family"], path + "/family");
          if (f.size() > 6) {
            input_error(path + "/family", "union needs at most 6 sets");
          }
          for (size_t i = 0; i < f.size(); ++i) {
            auto const names = get_names(f[i], path + "/family/" + std::to_string(i));
            family.emplace_back(names.begin(), names.end());
          }
          return union_monoid(family);
        }
        input_error(path + "/builder", "unknown builder \"" + b + "\"");
      }
      check_keys(j, path, {"name", "elements", "identity", "table"},
                 {"name", "elements", "identity", "table"});
      auto const names = get_names(j["elements"], path + "/elements");
      if (names.empty()) {
        input_error(path + "/elements", "a monoid needs an element");
      }
      std::map<std::string, element_index> index;
      for (size_t i = 0; i < names.size(); ++i) {
        if (!index.emplace(names[i], i).second) {
          input_error(path + "/elements/" + std::to_string(i),
                      "duplicate element \"" + names[i] + "\"");
        }
      }
      auto lookup = [&](json const& x, std::string const& p) {
        auto const n  = get_string(x, p);
        auto const it = index.find(n);
        if (it == index.end()) {
          input_error(p, "unknown element \"" + n + "\"");
        }
        return it->second;
      };
      auto const  identity = lookup(j["identity"], path + "/identity");
      auto const& t        = get_array(j["table"], path + "/table");
      if (t.size() != names.size()) {
        input_error(path + "/table", "expected " + std::to_string(names.size()) + " rows");
      }
      CayleyTable table;
      for (size_t a = 0; a < names.size(); ++a) {
        auto const row_path = path + "/table/" + std::to_string(a);
        get_array(t[a], row_path);
        if (t[a].size() != names.size()) {
          input_error(row_path, "expected " + std::to_string(names.size()) + " entries");
        }
        table.emplace_back();
        for (size_t b = 0; b < names.size(); ++b) {
          table.back().push_back(lookup(t[a][b], row_path + "/" + std::to_string(b)));
        }
      }
      return FinMonoid(names, identity, std::move(table));
    }

    // Maps keyed by [a,x]; entries with a the identity may be omitted and
    // default to the identity map.
    inline std::vector<AbHom> parse_map_table(json const&                   j,
                                              std::string const&            path,
                                              FinMonoid const&              m,
                                              std::vector<FgAbGroup> const& groups,
                                              bool                          left) {
      require_object(j, path);
      size_t const                             n = m.size();
      std::vector<std::optional<AbHom>>        maps(n * n);
      for (auto const& [key, value] : j.items()) {
        auto const p      = path + "/" + key;
        auto const [a, x] = parse_pair_key(key, m, p);
        auto const to     = left ? m.product(a, x) : m.product(x, a);
        maps[a * n + x]   = get_hom(value, p, CyclicSum(groups[x]), CyclicSum(groups[to]));
      }
      std::vector<AbHom> result;
      for (size_t a = 0; a < n; ++a) {
        for (size_t x = 0; x < n; ++x) {
          if (maps[a * n + x]) {
            result.push_back(*maps[a * n + x]);
          } else if (a == m.identity()) {
            result.push_back(AbHom::identity(CyclicSum(groups[x])));
          } else {
            input_error(path, "missing [" + m.name(a) + "," + m.name(x) + "]");
          }
        }
      }
      return result;
    }

    inline CoeffEntry parse_coeff(json const& j, std::string const& path, Document const& doc) {
      if (!j.is_object()) {
        input_error(path, "expected an object");
      }
      if (!j.contains("kind")) {
        input_error(path, "missing key \"kind\"");
      }
      auto const kind = get_string(j["kind"], path + "/kind");
      CoeffEntry entry{"", "", CoeffKind::constant, constant_system(FinMonoid(), FgAbGroup())};
      if (kind == "constant") {
        check_keys(j, path, {"name", "monoid", "kind", "group"}, {"name", "monoid", "group"});
      } else if (kind == "action") {
        check_keys(j, path, {"name", "monoid", "kind", "group", "action"},
                   {"name", "monoid", "group", "action"});
        entry.kind = CoeffKind::action;
      } else if (kind == "explicit") {
        check_keys(j, path, {"name", "monoid", "kind", "groups", "lstar", "rstar"},
                   {"name", "monoid", "groups", "lstar", "rstar"});
        entry.kind = CoeffKind::explicit_maps;
      } else {
        input_error(path + "/kind", "unknown kind \"" + kind + "\"");
      }
      entry.name   = get_string(j["name"], path + "/name");
      entry.monoid = get_string(j["monoid"], path + "/monoid");
      auto const* me = doc.find_monoid(entry.monoid);
      if (me == nullptr) {
        input_error(path + "/monoid", "no monoid named \"" + entry.monoid + "\"");
      }
      FinMonoid const& m = me->monoid;
      size_t const     n = m.size();
      if (entry.kind == CoeffKind::constant) {
        entry.system = constant_system(m, get_group(j["group"], path + "/group"));
        return entry;
      }
      if (entry.kind == CoeffKind::action) {
        auto const g = get_group(j["group"], path + "/group");
        CyclicSum const gens(g);
        auto const& act = j["action"];
        require_object(act, path + "/action");
        std::vector<std::optional<AbHom>> maps(n);
        for (auto const& [key, value] : act.items()) {
          if (!m.contains(key)) {
            input_error(path + "/action", "unknown element \"" + key + "\"");
          }
          maps[m.index_of(key)] = get_hom(value, path + "/action/" + key, gens, gens);
        }
        std::vector<AbHom> lstar;
        for (size_t a = 0; a < n; ++a) {
          if (!maps[a]) {
            if (a != m.identity()) {
              input_error(path + "/action", "missing element \"" + m.name(a) + "\"");
            }
            maps[a] = AbHom::identity(gens);
          }
        }
        // built without the homomorphism check so that validate can report it
        for (size_t a = 0; a < n; ++a) {
          for (size_t x = 0; x < n; ++x) {
            lstar.push_back(*maps[a]);
          }
        }
        entry.system = CoeffSystem(m, std::vector<FgAbGroup>(n, g), std::move(lstar),
                                   std::vector<AbHom>(n * n, AbHom::identity(gens)));
        return entry;
      }
      auto const& gj = j["groups"];
      require_object(gj, path + "/groups");
      std::vector<std::optional<FgAbGroup>> opt(n);
      for (auto const& [key, value] : gj.items()) {
        if (!m.contains(key)) {
          input_error(path + "/groups", "unknown element \"" + key + "\"");
        }
        opt[m.index_of(key)] = get_group(value, path + "/groups/" + key);
      }
      std::vector<FgAbGroup> groups;
      for (size_t x = 0; x < n; ++x) {
        if (!opt[x]) {
          input_error(path + "/groups", "missing element \"" + m.name(x) + "\"");
        }
        groups.push_back(*opt[x]);
      }
      auto lstar = parse_map_table(j["lstar"], path + "/lstar", m, groups, true);
      auto rstar = parse_map_table(j["rstar"], path + "/rstar", m, groups, false);
      entry.system = CoeffSystem(m, std::move(groups), std::move(lstar), std::move(rstar));
      return entry;
    }

    inline PathChoice parse_path(json const& j, std::string const& path) {
      check_keys(j, path, {"moves", "rule"});
      if (j.contains("moves") == j.contains("rule")) {
        input_error(path, "give exactly one of \"moves\" and \"rule\"");
      }
      PathChoice choice;
      if (j.contains("moves")) {
        choice.moves = get_string(j["moves"], path + "/moves");
        auto const bad = choice.moves.find_first_not_of("RD");
        if (bad != std::string::npos) {
          input_error(path + "/moves",
                      "invalid move '" + std::string(1, choice.moves[bad])
                          + "' at index " + std::to_string(bad));
        }
      } else {
        choice.rule = get_string(j["rule"], path + "/rule");
      }
      return choice;
    }

    inline std::optional<size_t> parse_pmax(json const& j, std::string const& path) {
      if (!j.contains("pmax")) {
        return std::nullopt;
      }
      return get_size(j["pmax"], path + "/pmax");
    }

    inline GridEntry parse_grid(json const& j, std::string const& path, Document const& doc) {
      check_keys(j, path, {"name", "floors", "vertical", "path", "pmax", "finite"},
                 {"name", "floors"});
      GridEntry g;
      g.name = get_string(j["name"], path + "/name");
      if (j.contains("finite")) {
        g.spec.finite = get_bool(j["finite"], path + "/finite");
      }
      auto const& floors = get_array(j["floors"], path + "/floors");
      for (size_t i = 0; i < floors.size(); ++i) {
        auto const p = path + "/floors/" + std::to_string(i);
        check_keys(floors[i], p, {"monoid", "coeff"});
        FloorRef ref;
        if (floors[i].contains("monoid")) {
          ref.monoid = get_string(floors[i]["monoid"], p + "/monoid");
          if (doc.find_monoid(*ref.monoid) == nullptr) {
            input_error(p + "/monoid", "no monoid named \"" + *ref.monoid + "\"");
          }
        }
        if (floors[i].contains("coeff")) {
          ref.coeff     = get_string(floors[i]["coeff"], p + "/coeff");
          auto const* c = doc.find_coeff(*ref.coeff);
          if (c == nullptr) {
            input_error(p + "/coeff", "no coefficient system named \"" + *ref.coeff + "\"");
          }
          if (ref.monoid && *ref.monoid != c->monoid) {
            input_error(p, "coefficient system \"" + *ref.coeff + "\" lives on \""
                               + c->monoid + "\", not \"" + *ref.monoid + "\"");
          }
          g.spec.floors.push_back(c->system);
        } else if (ref.monoid) {
          g.spec.floors.push_back(
              constant_system(doc.find_monoid(*ref.monoid)->monoid, doc.defaults.group));
        } else {
          input_error(p, "a floor needs \"coeff\" or \"monoid\"");
        }
        g.floors.push_back(std::move(ref));
      }
      if (j.contains("vertical")) {
        auto const& v = j["vertical"];
        auto const  p = path + "/vertical";
        if (v.is_string()) {
          if (v.get<std::string>() != "zero") {
            input_error(p, "expected \"zero\" or an object with \"maps\"");
          }
        } else {
          check_keys(v, p, {"maps"}, {"maps"});
          require_object(v["maps"], p + "/maps");
          std::map<VerticalFamily::Key, AbHom> maps;
          for (auto const& [key, value] : v["maps"].items()) {
            auto const kp     = p + "/maps/" + key;
            auto const [n, q] = parse_index_key(key, kp);
            if (n + 1 >= g.spec.floors.size()) {
              input_error(kp, "floor " + std::to_string(n) + " has no floor below it");
            }
            auto const from = cochain_group(g.spec.floors[n], q).generators;
            auto const to   = cochain_group(g.spec.floors[n + 1], q).generators;
            maps.emplace(VerticalFamily::Key{n, q}, get_hom(value, kp, from, to));
          }
          g.family = VerticalFamily::explicit_maps(std::move(maps));
        }
      }
      if (j.contains("path")) {
        g.path = parse_path(j["path"], path + "/path");
      }
      g.pmax = parse_pmax(j, path);
      return g;
    }

    inline SetSystemEntry parse_set_system(json const& j, std::string const& path) {
      check_keys(j, path, {"name", "points", "sets", "path", "pmax"},
                 {"name", "points", "sets"});
      SetSystemEntry e;
      e.name          = get_string(j["name"], path + "/name");
      e.system.points = get_names(j["points"], path + "/points");
      std::map<std::string, size_t> index;
      for (size_t i = 0; i < e.system.points.size(); ++i) {
        if (!index.emplace(e.system.points[i], i).second) {
          input_error(path + "/points/" + std::to_string(i),
                      "duplicate point \"" + e.system.points[i] + "\"");
        }
      }
      auto const& sets = get_array(j["sets"], path + "/sets");
      for (size_t i = 0; i < sets.size(); ++i) {
        auto const p = path + "/sets/" + std::to_string(i);
        check_keys(sets[i], p, {"name", "members"}, {"name", "members"});
        NamedSet s;
        s.name = get_string(sets[i]["name"], p + "/name");
        auto const members = get_names(sets[i]["members"], p + "/members");
        for (size_t k = 0; k < members.size(); ++k) {
          auto const it = index.find(members[k]);
          if (it == index.end()) {
            input_error(p + "/members/" + std::to_string(k),
                        "unknown point \"" + members[k] + "\"");
          }
          s.members.insert(it->second);
        }
        e.system.sets.push_back(std::move(s));
      }
      if (j.contains("path")) {
        e.path = parse_path(j["path"], path + "/path");
      }
      e.pmax = parse_pmax(j, path);
      return e;
    }

    inline StructureDescriptor parse_descriptor(json const& j, std::string const& path) {
      check_keys(j, path, {"operations", "nonalg", "empty"});
      StructureDescriptor d;
      if (j.contains("empty")) {
        d.empty = get_bool(j["empty"], path + "/empty");
      }
      if (j.contains("nonalg")) {
        auto const tags = get_names(j["nonalg"], path + "/nonalg");
        d.nonalg.insert(tags.begin(), tags.end());
      }
      if (j.contains("operations")) {
        auto const& ops = get_array(j["operations"], path + "/operations");
        for (size_t i = 0; i < ops.size(); ++i) {
          auto const p = path + "/operations/" + std::to_string(i);
          check_keys(ops[i], p, {"arity", "properties"}, {"arity"});
          Operation op;
          op.arity = get_size(ops[i]["arity"], p + "/arity");
          if (ops[i].contains("properties")) {
            auto const props = get_names(ops[i]["properties"], p + "/properties");
            op.properties.insert(props.begin(), props.end());
          }
          d.operations.push_back(std::move(op));
        }
      }
      try {
        return canonical(d);
      } catch (Error const& e) {
        input_error(path, e.what());
      }
    }

    inline DescriptorListEntry parse_descriptor_list(json const& j, std::string const& path) {
      check_keys(j, path, {"name", "descriptors", "finite", "path", "pmax"},
                 {"name", "descriptors"});
      DescriptorListEntry e;
      e.name          = get_string(j["name"], path + "/name");
      auto const& ds  = get_array(j["descriptors"], path + "/descriptors");
      for (size_t i = 0; i < ds.size(); ++i) {
        e.descriptors.push_back(
            parse_descriptor(ds[i], path + "/descriptors/" + std::to_string(i)));
      }
      if (j.contains("finite")) {
        e.finite = get_bool(j["finite"], path + "/finite");
      }
      if (j.contains("path")) {
        e.path = parse_path(j["path"], path + "/path");
      }
      e.pmax = parse_pmax(j, path);
      return e;
    }

    template <typename T>
    void check_unique_names(std::vector<T> const& v, std::string const& section) {
      std::set<std::string> seen;
      for (size_t i = 0; i < v.size(); ++i) {
        if (!seen.insert(v[i].name).second) {
          input_error("/" + section + "/" + std::to_string(i) + "/name",
                      "duplicate name \"" + v[i].name + "\"");
        }
      }
    }

    template <typename F>
    void each_entry(json const& j, std::string const& section, F&& f) {
      if (!j.contains(section)) {
        return;
      }
      auto const& a = get_array(j[section], "/" + section);
      for (size_t i = 0; i < a.size(); ++i) {
        f(a[i], "/" + section + "/" + std::to_string(i));
      }
    }

    // 1-based line and column of a byte offset.
    inline std::string line_column(std::string const& text, size_t offset) {
      offset      = std::min(offset, text.size());
      size_t line = 1 + std::count(text.begin(), text.begin() + offset, '\n');
      size_t const nl  = text.rfind('\n', offset == 0 ? 0 : offset - 1);
      size_t const col = nl == std::string::npos ? offset : offset - nl - 1;
      return "line " + std::to_string(line) + ", column " + std::to_string(col + 1);
    }

  }  // namespace detail

  inline Document document_from_json(nlohmann::json const& j) {
    using namespace detail;
    check_keys(j, "", {"monoids", "coefficients", "grids", "set_systems",
                       "descriptor_lists", "defaults"});
    Document doc;
    if (j.contains("defaults")) {
      auto const& d = j["defaults"];
      check_keys(d, "/defaults", {"pmax", "group"});
      if (d.contains("pmax")) {
        doc.defaults.pmax = get_size(d["pmax"], "/defaults/pmax");
      }
      if (d.contains("group")) {
        doc.defaults.group = get_group(d["group"], "/defaults/group");
      }
    }
    each_entry(j, "monoids", [&](json const& x, std::string const& p) {
      check_keys(x, p, {"name", "builder", "n", "family", "elements", "identity", "table"},
                 {"name"});
      auto name = get_string(x["name"], p + "/name");
      doc.monoids.push_back({std::move(name), parse_monoid(x, p)});
    });
    check_unique_names(doc.monoids, "monoids");
    each_entry(j, "coefficients", [&](json const& x, std::string const& p) {
      doc.coefficients.push_back(parse_coeff(x, p, doc));
    });
    check_unique_names(doc.coefficients, "coefficients");
    each_entry(j, "grids", [&](json const& x, std::string const& p) {
      doc.grids.push_back(parse_grid(x, p, doc));
    });
    check_unique_names(doc.grids, "grids");
    each_entry(j, "set_systems", [&](json const& x, std::string const& p) {
      doc.set_systems.push_back(parse_set_system(x, p));
    });
    check_unique_names(doc.set_systems, "set_systems");
    each_entry(j, "descriptor_lists", [&](json const& x, std::string const& p) {
      doc.descriptor_lists.push_back(parse_descriptor_list(x, p));
    });
    check_unique_names(doc.descriptor_lists, "descriptor_lists");
    return doc;
  }

  inline Document parse_document(std::string const& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw Error(ErrorKind::input, "malformed JSON at "
                                        + detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    return document_from_json(j);
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialization
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    using ojson = nlohmann::ordered_json;

    inline ojson integer_json(Integer const& x) {
      if (x.fits_slong_p()) {
        return x.get_si();
      }
      return x.get_str();
    }

    inline ojson matrix_json(IntMatrix const& m) {
      ojson rows = ojson::array();
      for (size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (size_t k = 0; k < m.cols(); ++k) {
          row.push_back(integer_json(m(i, k)));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    inline ojson path_json(PathChoice const& p) {
      ojson j = ojson::object();
      if (p.rule) {
        j["rule"] = *p.rule;
      } else {
        j["moves"] = p.moves;
      }
      return j;
    }

    inline ojson coeff_json(CoeffEntry const& c) {
      ojson j;
      j["name"]           = c.name;
      j["monoid"]         = c.monoid;
      j["kind"]           = to_string(c.kind);
      FinMonoid const& m  = c.system.monoid();
      switch (c.kind) {
        case CoeffKind::constant:
          j["group"] = c.system.group(0).to_string();
          break;
        case CoeffKind::action: {
          j["group"] = c.system.group(0).to_string();
          ojson act  = ojson::object();
          for (size_t a = 0; a < m.size(); ++a) {
            act[m.name(a)] = matrix_json(c.system.lstar(a, 0).matrix());
          }
          j["action"] = std::move(act);
          break;
        }
        case CoeffKind::explicit_maps: {
          ojson groups = ojson::object();
          ojson lstar  = ojson::object();
          ojson rstar  = ojson::object();
          for (size_t x = 0; x < m.size(); ++x) {
            groups[m.name(x)] = c.system.group(x).to_string();
          }
          for (size_t a = 0; a < m.size(); ++a) {
            for (size_t x = 0; x < m.size(); ++x) {
              auto const key = "[" + m.name(a) + "," + m.name(x) + "]";
              lstar[key]     = matrix_json(c.system.lstar(a, x).matrix());
              rstar[key]     = matrix_json(c.system.rstar(a, x).matrix());
            }
          }
          j["groups"] = std::move(groups);
          j["lstar"]  = std::move(lstar);
          j["rstar"]  = std::move(rstar);
          break;
        }
      }
      return j;
    }

    inline ojson descriptor_json(StructureDescriptor const& d) {
      ojson j;
      ojson ops = ojson::array();
      for (auto const& op : d.operations) {
        ops.push_back({{"arity", op.arity}, {"properties", op.properties}});
      }
      j["operations"] = std::move(ops);
      j["nonalg"]     = d.nonalg;
      j["empty"]      = d.empty;
      return j;
    }

  }  // namespace detail

  // Monoids are written as explicit tables; parse(serialize(d)) == d.
  inline nlohmann::ordered_json to_json(Document const& doc) {
    using namespace detail;
    ojson j;
    j["defaults"] = {{"pmax", doc.defaults.pmax}, {"group", doc.defaults.group.to_string()}};
    j["monoids"]  = ojson::array();
    for (auto const& e : doc.monoids) {
      FinMonoid const& m = e.monoid;
      ojson table        = ojson::array();
      for (size_t a = 0; a < m.size(); ++a) {
        ojson row = ojson::array();
        for (size_t b = 0; b < m.size(); ++b) {
          row.push_back(m.name(m.product(a, b)));
        }
        table.push_back(std::move(row));
      }
      j["monoids"].push_back({{"name", e.name},
                              {"elements", m.names()},
                              {"identity", m.name(m.identity())},
                              {"table", std::move(table)}});
    }
    j["coefficients"] = ojson::array();
    for (auto const& c : doc.coefficients) {
      j["coefficients"].push_back(coeff_json(c));
    }
    j["grids"] = ojson::array();
    for (auto const& g : doc.grids) {
      ojson floors = ojson::array();
      for (auto const& f : g.floors) {
        ojson fj = ojson::object();
        if (f.monoid) {
          fj["monoid"] = *f.monoid;
        }
        if (f.coeff) {
          fj["coeff"] = *f.coeff;
        }
        floors.push_back(std::move(fj));
      }
      ojson gj{{"name", g.name}, {"floors", std::move(floors)}, {"finite", g.spec.finite}};
      if (g.family.is_zero_family()) {
        gj["vertical"] = "zero";
      } else {
        ojson maps = ojson::object();
        for (auto const& [key, h] : g.family.maps()) {
          maps["[" + std::to_string(key.first) + "," + std::to_string(key.second) + "]"]
              = matrix_json(h.matrix());
        }
        gj["vertical"] = {{"maps", std::move(maps)}};
      }
      gj["path"] = path_json(g.path);
      if (g.pmax) {
        gj["pmax"] = *g.pmax;
      }
      j["grids"].push_back(std::move(gj));
    }
    j["set_systems"] = ojson::array();
    for (auto const& s : doc.set_systems) {
      ojson sets = ojson::array();
      for (auto const& ns : s.system.sets) {
        std::vector<std::string> members;
        for (auto p : ns.members) {
          members.push_back(s.system.points[p]);
        }
        sets.push_back({{"name", ns.name}, {"members", members}});
      }
      ojson sj{{"name", s.name}, {"points", s.system.points}, {"sets", std::move(sets)},
               {"path", path_json(s.path)}};
      if (s.pmax) {
        sj["pmax"] = *s.pmax;
      }
      j["set_systems"].push_back(std::move(sj));
    }
    j["descriptor_lists"] = ojson::array();
    for (auto const& d : doc.descriptor_lists) {
      ojson ds = ojson::array();
      for (auto const& x : d.descriptors) {
        ds.push_back(descriptor_json(x));
      }
      ojson dj{{"name", d.name}, {"descriptors", std::move(ds)}, {"finite", d.finite},
               {"path", path_json(d.path)}};
      if (d.pmax) {
        dj["pmax"] = *d.pmax;
      }
      j["descriptor_lists"].push_back(std::move(dj));
    }
    return j;
  }

  inline std::string serialize(Document const& doc) {
    return to_json(doc).dump(2) + "\n";
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  struct Options {
    std::optional<size_t>      pmax;
    std::string                format = "text";
    std::optional<std::string> grid;
    std::optional<std::string> monoid;
    std::optional<std::string> coeff;
    std::optional<std::string> name;
    std::optional<std::string> moves;
    std::optional<std::string> rule;
    std::optional<std::string> group;
    bool                       verbose = false;
  };

  struct CommandResult {
    int         exit_code = 0;
    std::string output;
  };

  inline char const* const cohomology_convention
      = "H^n = ker d^n / im d^(n-1), d^(-1) = 0; along a path H^t = ker(map out "
        "of position t) / im(map into position t)";
  inline char const* const total_sign_convention
      = "D = (-1)^p d_horizontal + d_vertical on the summand of floor p";

  // Column predicates for path rules: prime, prime>N, even, odd, always,
  // never.
  inline std::function<bool(size_t)> column_rule(std::string const& rule) {
    auto is_prime = [](size_t c) {
      if (c < 2) {
        return false;
      }
      for (size_t d = 2; d * d <= c; ++d) {
        if (c % d == 0) {
          return false;
        }
      }
      return true;
    };
    if (rule == "prime") {
      return is_prime;
    }
    if (rule.starts_with("prime>")) {
      auto const tail = rule.substr(6);
      if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos) {
        size_t const bound = std::stoull(tail);
        return [=](size_t c) { return c > bound && is_prime(c); };
      }
    }
    if (rule == "even") {
      return [](size_t c) { return c % 2 == 0; };
    }
    if (rule == "odd") {
      return [](size_t c) { return c % 2 == 1; };
    }
    if (rule == "always") {
      return [](size_t) { return true; };
    }
    if (rule == "never") {
      return [](size_t) { return false; };
    }
    throw Error(ErrorKind::input, "unknown path rule \"" + rule + "\"");
  }

  namespace detail {

    using ojson = nlohmann::ordered_json;

    // Left-aligned columns separated by two spaces.
    inline std::string render_table(std::vector<std::vector<std::string>> const& rows) {
      std::vector<size_t> width;
      for (auto const& r : rows) {
        width.resize(std::max(width.size(), r.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) {
          width[i] = std::max(width[i], r[i].size());
        }
      }
      std::string out;
      for (auto const& r : rows) {
        std::string line;
        for (size_t i = 0; i < r.size(); ++i) {
          line += r[i];
          if (i + 1 < r.size()) {
            line += std::string(width[i] - r[i].size() + 2, ' ');
          }
        }
        out += "  " + line + "\n";
      }
      return out;
    }

    inline ojson convention_json() {
      return {{"cohomology", cohomology_convention}, {"total_sign", total_sign_convention}};
    }

    inline std::string convention_text() {
      return std::string("convention: ") + cohomology_convention + "\n"
             + "total sign: " + total_sign_convention + "\n";
    }

    struct Resolved {
      PathSpec path;
      size_t   pmax;
    };

    inline Resolved resolve_path(PathChoice const&           choice,
                                 std::optional<size_t> const entry_pmax,
                                 Options const&              opts,
                                 Document const&             doc,
                                 GridSpec const&             grid) {
      size_t const pmax = opts.pmax.value_or(entry_pmax.value_or(doc.defaults.pmax));
      if (opts.moves) {
        auto const bad = opts.moves->find_first_not_of("RD");
        if (bad != std::string::npos) {
          throw Error(ErrorKind::input, "invalid move '" + std::string(1, (*opts.moves)[bad])
                                            + "' at index " + std::to_string(bad));
        }
        return {{*opts.moves}, pmax};
      }
      auto const rule = opts.rule ? opts.rule : choice.rule;
      if (rule) {
        return {path_from_rule(column_rule(*rule), grid, pmax), pmax};
      }
      return {{choice.moves}, pmax};
    }

    inline std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    inline std::string move_name(std::optional<Move> m) {
      return m ? direction(*m) : "-";
    }

    // The square section shared by square, fs and h.
    inline void render_pipeline(PipelineResult const& r,
                                size_t                pmax,
                                std::ostringstream&   text,
                                ojson&                j) {
      text << "  path " << (r.path.moves.empty() ? "(all R)" : r.path.moves)
           << ", p_max " << pmax << ", "
           << (r.grid.finite ? "rectangular" : "square") << " grid of "
           << r.grid.floors.size() << " floors\n";
      text << "  shape: " << path_shape(r.cohomology) << "\n";
      std::vector<std::vector<std::string>> rows{
          {"t", "position", "in", "out", "H^t", "tag", "extremal"}};
      ojson positions = ojson::array();
      for (auto const& g : r.cohomology) {
        rows.push_back({std::to_string(g.index), g.position.to_string(), move_name(g.in),
                        direction(g.out), g.group.to_string(), to_string(g.tag),
                        yes_no(g.extremal)});
        positions.push_back({{"t", g.index},
                             {"floor", g.position.floor},
                             {"degree", g.position.degree},
                             {"in", move_name(g.in)},
                             {"out", direction(g.out)},
                             {"H", g.group.to_string()},
                             {"tag", to_string(g.tag)},
                             {"extremal", g.extremal}});
      }
      text << render_table(rows);
      ojson runs = ojson::array();
      for (auto const& run : r.exactness.runs) {
        text << "  run on floor " << run.floor << ": t = " << run.first << ".."
             << run.last << ", " << run.length << " R moves, "
             << (run.unbounded ? "unbounded" : run.is_short ? "short" : "bounded") << "\n";
        runs.push_back({{"floor", run.floor},
                        {"first", run.first},
                        {"last", run.last},
                        {"length", run.length},
                        {"unbounded", run.unbounded},
                        {"short", run.is_short}});
      }
      ojson failures = ojson::array();
      for (auto const& i : r.exactness.identifications) {
        if (!i.holds()) {
          failures.push_back({{"t", i.index},
                              {"position", i.position.to_string()},
                              {"square", i.square.to_string()},
                              {"leech", i.leech.to_string()}});
          text << "  identification fails at t = " << i.index << ": "
               << i.square.to_string() << " vs Leech " << i.leech.to_string() << "\n";
        }
      }
      text << "  identification with floor Leech groups: "
           << r.exactness.identifications.size() << " positions, "
           << (r.exactness.identification_holds() ? "all equal" : "FAILED") << "\n";
      j["path"]           = r.path.moves;
      j["pmax"]           = pmax;
      j["finite"]         = r.grid.finite;
      j["floors"]         = r.grid.floors.size();
      j["shape"]          = path_shape(r.cohomology);
      j["positions"]      = std::move(positions);
      j["runs"]           = std::move(runs);
      j["identification"] = {{"checked", r.exactness.identifications.size()},
                             {"holds", r.exactness.identification_holds()},
                             {"failures", std::move(failures)}};
    }

    // Monoid laws and coefficient relations; empty when both hold.
    inline std::vector<std::string> coeff_problems(CoeffSystem const& c) {
      std::vector<std::string> out;
      for (auto const& v : validate(c.monoid())) {
        out.push_back(v.describe(c.monoid()));
      }
      for (auto const& v : validate_relations(c)) {
        out.push_back(RelationViolation::name(v.relation) + ": " + v.describe(c.monoid()));
      }
      return out;
    }

    struct Report {
      std::ostringstream text;
      ojson              json;
      int                exit_code = 0;

      explicit Report(std::string const& command) {
        json["command"]    = command;
        json["convention"] = convention_json();
        json["ok"]         = true;
        json["results"]    = ojson::array();
        text << command << "\n" << convention_text();
      }

      void fail(int code) {
        exit_code  = std::max(exit_code, code);
        json["ok"] = false;
      }

      CommandResult finish(Options const& opts) {
        if (opts.format == "json") {
          return {exit_code, json.dump(2) + "\n"};
        }
        text << (exit_code == 0 ? "ok" : "FAILED") << "\n";
        return {exit_code, text.str()};
      }
    };

    template <typename T>
    std::vector<T const*> select(std::vector<T> const&             v,
                                 std::optional<std::string> const& name,
                                 std::string const&                what) {
      std::vector<T const*> out;
      for (auto const& x : v) {
        if (!name || x.name == *name) {
          out.push_back(&x);
        }
      }
      if (name && out.empty()) {
        throw Error(ErrorKind::input, "no " + what + " named \"" + *name + "\"");
      }
      if (out.empty()) {
        throw Error(ErrorKind::input, "the document has no " + what + "s");
      }
      return out;
    }

    inline void run_validate(Document const& doc, Options const&, Report& r) {
      auto add = [&](std::string const& kind, std::string const& name, bool ok,
                     std::vector<std::string> const& problems,
                     std::vector<std::string> const& notes) {
        r.text << kind << " " << name << ": " << (ok ? "ok" : "FAIL") << "\n";
        for (auto const& p : problems) {
          r.text << "  " << p << "\n";
        }
        for (auto const& n : notes) {
          r.text << "  note: " << n << "\n";
        }
        r.json["results"].push_back({{"kind", kind}, {"name", name}, {"ok", ok},
                                     {"violations", problems}, {"notes", notes}});
        if (!ok) {
          r.fail(1);
        }
      };
      for (auto const& e : doc.monoids) {
        std::vector<std::string> problems;
        for (auto const& v : validate(e.monoid)) {
          problems.push_back(v.describe(e.monoid));
        }
        add("monoid", e.name, problems.empty(), problems,
            {"order " + std::to_string(e.monoid.size())});
      }
      for (auto const& c : doc.coefficients) {
        std::vector<std::string> problems;
        for (auto const& v : validate_relations(c.system)) {
          problems.push_back(RelationViolation::name(v.relation) + ": "
                             + v.describe(c.system.monoid()));
        }
        add("coefficients", c.name, problems.empty(), problems,
            {to_string(c.kind) + " over " + c.monoid});
      }
      for (auto const& g : doc.grids) {
        std::vector<std::string> problems;
        std::vector<std::string> notes;
        try {
          for (auto const& f : g.spec.floors) {
            for (auto const& p : coeff_problems(f)) {
              problems.push_back("floor coefficients: " + p);
            }
          }
          if (problems.empty()) {
            auto const rp = resolve_path(g.path, g.pmax, {}, doc, g.spec);
            if (auto v = validate_eq23(g.spec, g.family, rp.path, rp.pmax)) {
              problems.push_back(v->describe());
            }
            notes.push_back("path " + (rp.path.moves.empty() ? "(all R)" : rp.path.moves)
                            + ", p_max " + std::to_string(rp.pmax));
          }
        } catch (Error const& e) {
          problems.push_back(e.what());
        }
        add("grid", g.name, problems.empty(), problems, notes);
      }
      for (auto const& s : doc.set_systems) {
        std::vector<std::string> problems;
        std::vector<std::string> notes;
        try {
          auto const surj = check_h_surjective(s.system);
          if (surj.ok()) {
            notes.push_back("h is surjective");
          }
          for (auto const& c : surj.missing) {
            notes.push_back("h misses " + render_subcollection(s.system, c));
          }
        } catch (Error const& e) {
          problems.push_back(e.what());
        }
        add("set system", s.name, problems.empty(), problems, notes);
      }
      for (auto const& d : doc.descriptor_lists) {
        std::vector<std::string> notes;
        notes.push_back(std::to_string(structure_classes(d.descriptors).classes.size())
                        + " structure classes");
        try {
          (void) structure_floors(d.descriptors);
        } catch (Error const& e) {
          notes.push_back(e.what());
        }
        add("descriptor list", d.name, true, {}, notes);
      }
    }

    inline void run_leech(Document const& doc, Options const& opts, Report& r) {
      size_t const pmax = opts.pmax.value_or(doc.defaults.pmax);
      struct Target {
        std::string monoid;
        std::string coeff;
        CoeffSystem system;
      };
      std::vector<Target> targets;
      if (opts.coeff) {
        auto const* c = doc.find_coeff(*opts.coeff);
        if (c == nullptr) {
          throw Error(ErrorKind::input, "no coefficient system named \"" + *opts.coeff + "\"");
        }
        if (opts.monoid && *opts.monoid != c->monoid) {
          throw Error(ErrorKind::input, "coefficient system \"" + c->name
                                            + "\" does not live on \"" + *opts.monoid + "\"");
        }
        targets.push_back({c->monoid, c->name, c->system});
      } else {
        for (auto const* m : select(doc.monoids, opts.monoid, "monoid")) {
          bool any = false;
          for (auto const& c : doc.coefficients) {
            if (c.monoid == m->name) {
              targets.push_back({m->name, c.name, c.system});
              any = true;
            }
          }
          if (!any) {
            targets.push_back({m->name, "constant " + doc.defaults.group.to_string(),
                               constant_system(m->monoid, doc.defaults.group)});
          }
        }
      }
      for (auto const& t : targets) {
        r.text << "monoid " << t.monoid << ", coefficients " << t.coeff << ", p_max "
               << pmax << "\n";
        ojson entry{{"monoid", t.monoid}, {"coefficients", t.coeff}, {"pmax", pmax}};
        auto const problems = coeff_problems(t.system);
        if (!problems.empty()) {
          for (auto const& p : problems) {
            r.text << "  " << p << "\n";
          }
          entry["violations"] = problems;
          r.json["results"].push_back(std::move(entry));
          r.fail(1);
          continue;
        }
        LeechComplex const cx(t.system, pmax + 1);
        std::vector<std::vector<std::string>> rows{{"n", "C^n", "d^n", "H^n"}};
        if (opts.verbose) {
          rows[0].push_back("literal");
        }
        ojson degrees = ojson::array();
        for (size_t n = 0; n <= pmax; ++n) {
          auto const& d  = cx.differential(n).matrix();
          auto const  h  = cx.cohomology(n);
          auto const dim = std::to_string(d.rows()) + "x" + std::to_string(d.cols());
          rows.push_back({std::to_string(n), cx.group(n).total.to_string(), dim, h.to_string()});
          ojson row{{"n", n},
                    {"cochains", cx.group(n).total.to_string()},
                    {"d_shape", {d.rows(), d.cols()}},
                    {"H", h.to_string()}};
          // ker d^n / im d^(n-1) read as ker d^(m+1) / im d^m
          std::string const literal = n == 0 ? "-" : "H^" + std::to_string(n - 1);
          if (opts.verbose) {
            rows.back().push_back(literal);
            row["literal_label"] = literal;
          }
          degrees.push_back(std::move(row));
        }
        r.text << render_table(rows);
        entry["degrees"] = std::move(degrees);
        r.json["results"].push_back(std::move(entry));
      }
    }

    inline void run_square(Document const& doc, Options const& opts, Report& r) {
      for (auto const* g : select(doc.grids, opts.grid, "grid")) {
        r.text << "grid " << g->name << "\n";
        ojson entry{{"grid", g->name}};
        try {
          auto const rp  = resolve_path(g->path, g->pmax, opts, doc, g->spec);
          auto const res = run_grid(g->spec, g->family, rp.path, rp.pmax);
          render_pipeline(res, rp.pmax, r.text, entry);
          if (!res.exactness.identification_holds()) {
            r.fail(1);
          }
        } catch (Error const& e) {
          if (e.kind() == ErrorKind::input) {
            throw;
          }
          r.text << "  " << e.what() << "\n";
          entry["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
          r.fail(1);
        }
        r.json["results"].push_back(std::move(entry));
      }
    }

    inline void run_total(Document const& doc, Options const& opts, Report& r) {
      for (auto const* g : select(doc.grids, opts.grid, "grid")) {
        size_t const pmax = opts.pmax.value_or(g->pmax.value_or(doc.defaults.pmax));
        r.text << "grid " << g->name << ", degrees 0.." << pmax << "\n";
        ojson entry{{"grid", g->name}, {"pmax", pmax}};
        try {
          auto const tot = total_complex(g->spec, g->family, pmax + 1);
          std::vector<std::vector<std::string>> rows{{"k", "summands", "Tot^k", "H^k"}};
          ojson degrees = ojson::array();
          for (size_t k = 0; k <= pmax; ++k) {
            std::string summands;
            for (auto const& s : tot.summands[k]) {
              summands += (summands.empty() ? "" : "+") + ("C" + s.to_string());
            }
            auto const h = tot.cohomology(k);
            rows.push_back({std::to_string(k), summands, tot.groups[k].canonical().to_string(),
                            h.to_string()});
            degrees.push_back({{"k", k},
                               {"summands", summands},
                               {"total", tot.groups[k].canonical().to_string()},
                               {"H", h.to_string()}});
          }
          r.text << render_table(rows);
          entry["degrees"] = std::move(degrees);
        } catch (Error const& e) {
          if (e.kind() == ErrorKind::input) {
            throw;
          }
          r.text << "  " << e.what() << "\n";
          entry["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
          r.fail(1);
        }
        r.json["results"].push_back(std::move(entry));
      }
    }

    inline FgAbGroup pipeline_group(Document const& doc, Options const& opts) {
      if (!opts.group) {
        return doc.defaults.group;
      }
      try {
        return FgAbGroup::parse(*opts.group);
      } catch (Error const& e) {
        throw Error(ErrorKind::input, "bad group \"" + *opts.group + "\": " + e.what());
      }
    }

    inline void run_fs(Document const& doc, Options const& opts, Report& r) {
      auto const group = pipeline_group(doc, opts);
      for (auto const* d : select(doc.descriptor_lists, opts.name, "descriptor list")) {
        r.text << "descriptor list " << d->name << ", coefficients constant "
               << group.to_string() << "\n";
        ojson entry{{"descriptor_list", d->name}, {"group", group.to_string()}};
        try {
          GridSpec grid;
          grid.finite = d->finite;
          ojson floors = ojson::array();
          for (auto const& k : structure_floors(d->descriptors)) {
            grid.floors.push_back(constant_system(k, group));
            r.text << "  |K_" << floors.size() << "| = " << k.size() << "\n";
            floors.push_back(k.size());
          }
          entry["floor_sizes"] = std::move(floors);
          auto const rp  = resolve_path(d->path, d->pmax, opts, doc, grid);
          auto const res = fs_pipeline(d->descriptors, group, rp.path, rp.pmax, d->finite);
          render_pipeline(res, rp.pmax, r.text, entry);
          if (!res.exactness.identification_holds()) {
            r.fail(1);
          }
        } catch (Error const& e) {
          if (e.kind() == ErrorKind::input) {
            throw;
          }
          r.text << "  " << e.what() << "\n";
          entry["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
          r.fail(1);
        }
        r.json["results"].push_back(std::move(entry));
      }
    }

    inline void run_h(Document const& doc, Options const& opts, Report& r) {
      auto const group = pipeline_group(doc, opts);
      for (auto const* s : select(doc.set_systems, opts.name, "set system")) {
        r.text << "set system " << s->name << ", coefficients constant "
               << group.to_string() << "\n";
        ojson entry{{"set_system", s->name}, {"group", group.to_string()}};
        try {
          auto const surj = check_h_surjective(s->system);
          if (!surj.ok()) {
            std::vector<std::string> missing;
            for (auto const& c : surj.missing) {
              missing.push_back(render_subcollection(s->system, c));
              r.text << "  h misses " << missing.back() << "\n";
            }
            entry["missing"] = missing;
            throw Error(ErrorKind::not_surjective,
                        "h is not surjective; first missing " + missing.front());
          }
          auto const chain = reorder_chain(s->system);
          GridSpec   grid;
          ojson      order = ojson::array();
          ojson      sizes = ojson::array();
          for (size_t i = 0; i < chain.order.size(); ++i) {
            order.push_back(s->system.sets[chain.order[i]].name);
            grid.floors.push_back(constant_system(build_gr(s->system, i), group));
            sizes.push_back(grid.floors.back().monoid().size());
            r.text << "  g_" << i << ": adds " << s->system.sets[chain.order[i]].name << ", order "
                   << grid.floors.back().monoid().size() << "\n";
          }
          entry["chain"]       = std::move(order);
          entry["floor_sizes"] = std::move(sizes);
          auto const rp  = resolve_path(s->path, s->pmax, opts, doc, grid);
          auto const res = h_pipeline(s->system, group, rp.path, rp.pmax);
          render_pipeline(res, rp.pmax, r.text, entry);
          if (!res.exactness.identification_holds()) {
            r.fail(1);
          }
        } catch (Error const& e) {
          if (e.kind() == ErrorKind::input) {
            throw;
          }
          r.text << "  " << e.what() << "\n";
          entry["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
          r.fail(1);
        }
        r.json["results"].push_back(std::move(entry));
      }
    }

  }  // namespace detail

  inline CommandResult run_command(std::string const& command,
                                   Document const&    doc,
                                   Options const&     opts) {
    if (opts.format != "text" && opts.format != "json") {
      return {2, "unknown format \"" + opts.format + "\"\n"};
    }
    detail::Report r(command);
    try {
      if (command == "validate") {
        detail::run_validate(doc, opts, r);
      } else if (command == "leech") {
        detail::run_leech(doc, opts, r);
      } else if (command == "square") {
        detail::run_square(doc, opts, r);
      } else if (command == "total") {
        detail::run_total(doc, opts, r);
      } else if (command == "fs") {
        detail::run_fs(doc, opts, r);
      } else if (command == "h") {
        detail::run_h(doc, opts, r);
      } else {
        return {2, "unknown command \"" + command + "\"\n"};
      }
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::input) {
        throw;
      }
      return {2, std::string(e.what()) + "\n"};
    }
    return r.finish(opts);
  }

}  // namespace leechcoh

#endif  // LEECHCOH_INTERFACE_HPP_
