#pragma once

// Named, validated instances of every algebra the verification suite refers
// to: the 93 bundled order-4 tables plus the order-2/order-3 algebras derived
// from them by the recipes manifest.  Nothing is hardcoded; everything is
// loaded from the data directory.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "workbench/algebra.hpp"
#include "workbench/structure.hpp"

namespace workbench {

struct Provenance {
  enum class Kind { Table1, Sub, Quot, Strip0, Adjz };
  Kind kind = Kind::Table1;
  std::string base;
  std::vector<int> subset;                 // Sub
  std::vector<std::vector<int>> blocks;    // Quot

  std::string describe() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::Table1: return "table1";
      case Kind::Sub: {
        os << "sub(" << base << ", {";
        for (std::size_t i = 0; i < subset.size(); ++i)
          os << (i ? "," : "") << subset[i];
        os << "})";
        return os.str();
      }
      case Kind::Quot: {
        os << "quot(" << base << ", {";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          os << (i ? "," : "") << "{";
          for (std::size_t j = 0; j < blocks[i].size(); ++j)
            os << (j ? "," : "") << blocks[i][j];
          os << "}";
        }
        os << "})";
        return os.str();
      }
      case Kind::Strip0: return "strip0(" + base + ")";
      case Kind::Adjz: return "adjz(" + base + ")";
    }
    return "?";
  }
};

struct CatalogEntry {
  std::string name;
  FiniteAiSemiring algebra;
  Provenance provenance;
  bool provisional = false;
};

struct ConsistencyReport {
  std::string name;
  std::vector<std::string> routes;     // descriptions, in manifest order
  std::vector<std::string> mismatches; // empty iff consistent
  bool consistent() const { return mismatches.empty(); }
};

// "S_(4,435)" and "S_4_435" are the same name
inline std::string normalize_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '(' || c == ')') continue;
    out += (c == ',') ? '_' : c;
  }
  return out;
}

inline std::string display_name(const std::string& normalized) {
  // S_4_435 -> S_(4,435); anything else unchanged
  if (normalized.rfind("S_4_", 0) == 0 && normalized.size() > 4)
    return "S_(4," + normalized.substr(4) + ")";
  return normalized;
}

// env WORKBENCH_DATA, else the compiled-in default, else ./data
inline std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("WORKBENCH_DATA")) return env;
#ifdef WORKBENCH_DATA_DIR
  return WORKBENCH_DATA_DIR;
#else
  return "data";
#endif
}

class Catalog {
 public:
  static Catalog load(const std::filesystem::path& data_dir = default_data_dir()) {
    Catalog cat;
    cat.data_dir_ = data_dir;
    auto table1 = data_dir / "catalog" / "table1";
    if (!std::filesystem::is_directory(table1))
      throw StructureError("catalog directory not found: " + table1.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(table1))
      if (e.path().extension() == ".alg") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::ifstream in(f);
      std::stringstream buf;
      buf << in.rdbuf();
      FiniteAiSemiring a = parse_algebra(buf.str());
      if (a.name.empty()) a.name = f.stem().string();
      auto rep = validate(a);
      if (!rep.ok())
        throw StructureError(f.string() + ": invalid algebra (" +
                             (rep.structural.empty()
                                  ? rep.violations.front().describe()
                                  : rep.structural.front()) + ")");
      std::string key = normalize_name(a.name);
      cat.table1_names_.push_back(key);
      cat.entries_.emplace(key, CatalogEntry{a.name, std::move(a), {}, false});
    }
    cat.load_recipes(data_dir / "catalog" / "recipes.manifest");
    return cat;
  }

  const CatalogEntry& get(const std::string& name) const {
    auto it = entries_.find(normalize_name(name));
    if (it == entries_.end())
      throw UnknownNameError("unknown algebra name: " + name);
    return it->second;
  }
  bool has(const std::string& name) const {
    return entries_.count(normalize_name(name)) > 0;
  }

  std::vector<CatalogEntry> all_table1() const {
    std::vector<CatalogEntry> out;
    for (const auto& n : table1_names_) out.push_back(entries_.at(n));
    return out;
  }
  const std::vector<std::string>& table1_names() const { return table1_names_; }
  const std::vector<std::string>& derived_names() const { return derived_names_; }

  std::vector<std::string> all_names() const {
    std::vector<std::string> out = table1_names_;
    out.insert(out.end(), derived_names_.begin(), derived_names_.end());
    return out;
  }

  // re-execute every recorded route for the name; all recipe routes must be
  // pairwise isomorphic and every embed route must admit an embedding
  ConsistencyReport cross_check(const std::string& name) const {
    std::string key = normalize_name(name);
    ConsistencyReport rep;
    rep.name = key;
    auto it = routes_.find(key);
    if (it == routes_.end()) {
      if (!entries_.count(key))
        throw UnknownNameError("unknown algebra name: " + name);
      return rep;  // table1 entry: nothing to cross-check
    }
    std::vector<FiniteAiSemiring> built;
    for (const Provenance& p : it->second) {
      built.push_back(execute(p, key));
      rep.routes.push_back(p.describe());
    }
    for (std::size_t i = 1; i < built.size(); ++i)
      if (!isomorphic(built[0], built[i]))
        rep.mismatches.push_back("route " + rep.routes[0] + " vs " + rep.routes[i]);
    auto em = embed_routes_.find(key);
    if (em != embed_routes_.end())
      for (const std::string& target : em->second) {
        rep.routes.push_back("embeds " + target);
        if (!find_embedding(get(key).algebra, get(target).algebra))
          rep.mismatches.push_back("no embedding into " + target);
      }
    return rep;
  }

  const std::filesystem::path& data_dir() const { return data_dir_; }

 private:
  FiniteAiSemiring execute(const Provenance& p, const std::string& name) const {
    const FiniteAiSemiring& base = get(p.base).algebra;
    switch (p.kind) {
      case Provenance::Kind::Sub:
        return subalgebra(base, p.subset, name);
      case Provenance::Kind::Quot:
        return quotient(base, Congruence::from_blocks(base.order, p.blocks), name);
      case Provenance::Kind::Strip0:
        return strip_zero(base, name);
      case Provenance::Kind::Adjz:
        return adjoin_zero(base, name);
      case Provenance::Kind::Table1:
        return base;
    }
    throw StructureError("bad recipe");
  }

  void load_recipes(const std::filesystem::path& manifest) {
    std::ifstream in(manifest);
    if (!in) throw StructureError("missing manifest: " + manifest.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string name, op;
      if (!(ls >> name)) continue;
      if (name == "provisional") {
        std::string who;
        ls >> who;
        auto it = entries_.find(normalize_name(who));
        if (it == entries_.end())
          throw StructureError("provisional flag for unknown name: " + who);
        it->second.provisional = true;
        continue;
      }
      if (!(ls >> op)) throw ParseError("bad manifest line", lineno);
      if (op == "embeds") {
        std::string target;
        ls >> target;
        embed_routes_[normalize_name(name)].push_back(normalize_name(target));
        continue;
      }
      if (op != ":=") throw ParseError("expected ':=' or 'embeds'", lineno);
      std::string rest;
      std::getline(ls, rest);
      Provenance p = parse_recipe(rest, lineno);
      std::string key = normalize_name(name);
      FiniteAiSemiring a = execute(p, name);
      auto rep = validate(a);
      if (!rep.ok())
        throw StructureError("recipe for " + name + " yields an invalid algebra");
      auto it = entries_.find(key);
      if (it == entries_.end()) {
        derived_names_.push_back(key);
        entries_.emplace(key, CatalogEntry{name, std::move(a), p, false});
      }
      routes_[key].push_back(std::move(p));
    }
  }

  Provenance parse_recipe(const std::string& text, std::size_t lineno) const {
    Provenance p;
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip();
    std::size_t start = i;
    while (i < text.size() && (std::isalnum((unsigned char)text[i]) || text[i] == '_'))
      ++i;
    std::string op = text.substr(start, i - start);
    skip();
    if (i >= text.size() || text[i] != '(') throw ParseError("expected '('", lineno);
    ++i;
    skip();
    start = i;
    while (i < text.size() && text[i] != ',' && text[i] != ')') ++i;
    p.base = normalize_name(text.substr(start, i - start));
    while (!p.base.empty() && std::isspace((unsigned char)p.base.back()))
      p.base.pop_back();
    if (op == "strip0" || op == "adjz") {
      p.kind = op == "strip0" ? Provenance::Kind::Strip0 : Provenance::Kind::Adjz;
      return p;
    }
    if (i >= text.size() || text[i] != ',') throw ParseError("expected ','", lineno);
    ++i;
    skip();
    std::string arg = text.substr(i);
    auto close = arg.rfind(')');
    if (close == std::string::npos) throw ParseError("expected ')'", lineno);
    arg = arg.substr(0, close);
    if (op == "sub") {
      p.kind = Provenance::Kind::Sub;
      for (char& c : arg)
        if (c == '{' || c == '}' || c == ',') c = ' ';
      std::istringstream as(arg);
      int e;
      while (as >> e) p.subset.push_back(e);
      return p;
    }
    if (op == "quot") {
      p.kind = Provenance::Kind::Quot;
      const FiniteAiSemiring& base = get(p.base).algebra;
      Congruence c = parse_partition(arg, base.order);
      p.blocks = c.blocks();
      return p;
    }
    throw ParseError("unknown recipe '" + op + "'", lineno);
  }

  std::filesystem::path data_dir_;
  std::map<std::string, CatalogEntry> entries_;
  std::map<std::string, std::vector<Provenance>> routes_;
  std::map<std::string, std::vector<std::string>> embed_routes_;
  std::vector<std::string> table1_names_;
  std::vector<std::string> derived_names_;
};

}  // namespace workbench
