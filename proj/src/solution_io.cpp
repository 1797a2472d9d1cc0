#include "ybx/solution_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ybx/error.hpp"

namespace ybx {

namespace {

int as_index(const Json& v, int n, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  const long long k = v.get<long long>();
  if (k < 1 || k > n) {
    throw ParseError(where + ": index " + std::to_string(k) + " outside 1.." +
                     std::to_string(n));
  }
  return static_cast<int>(k - 1);
}

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int read_n(const Json& doc) {
  const Json& n = field(doc, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1 ||
      n.get<long long>() > kMaxAtoms) {
    throw ParseError("\"n\" must be an integer in 1.." + std::to_string(kMaxAtoms));
  }
  return n.get<int>();
}

AtomPair read_pair(const Json& v, int n, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ParseError(where + ": expected a pair");
  return {as_index(v[0], n, where), as_index(v[1], n, where)};
}

std::vector<Permutation> read_perms(const Json& doc, const char* key, int n) {
  const Json& arr = field(doc, key);
  if (!arr.is_array() || static_cast<int>(arr.size()) != n) {
    throw ParseError(std::string("\"") + key + "\" must hold " +
                     std::to_string(n) + " permutations");
  }
  std::vector<Permutation> out;
  for (int i = 0; i < n; ++i) {
    const std::string where = std::string(key) + "[" + std::to_string(i + 1) + "]";
    if (!arr[i].is_array() || static_cast<int>(arr[i].size()) != n) {
      throw ParseError(where + ": expected " + std::to_string(n) + " images");
    }
    std::vector<Atom> img;
    for (const Json& v : arr[i]) img.push_back(as_index(v, n, where));
    if (!Permutation::is_bijection(img)) {
      throw ParseError(where + ": not a permutation");
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

SolutionTable load_table(const Json& doc) {
  const int n = read_n(doc);
  const Json& rows = field(doc, "S");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw ParseError("\"S\" must have " + std::to_string(n) + " rows");
  }
  std::vector<AtomPair> cells;
  for (int x = 0; x < n; ++x) {
    if (!rows[x].is_array() || static_cast<int>(rows[x].size()) != n) {
      throw ParseError("S[" + std::to_string(x + 1) + "] must have " +
                       std::to_string(n) + " cells");
    }
    for (int y = 0; y < n; ++y) {
      cells.push_back(read_pair(rows[x][y], n,
                                "S[" + std::to_string(x + 1) + "][" +
                                    std::to_string(y + 1) + "]"));
    }
  }
  return SolutionTable(n, std::move(cells));
}

SolutionTable load_permutations(const Json& doc) {
  const Json& sigma = field(doc, "sigma");
  if (!sigma.is_array() || sigma.empty() ||
      static_cast<int>(sigma.size()) > kMaxAtoms) {
    throw ParseError("\"sigma\" must be a nonempty list of permutations");
  }
  const int n = static_cast<int>(sigma.size());
  if (doc.contains("n") && read_n(doc) != n) {
    throw ParseError("\"n\" does not match the number of permutations");
  }
  return SolutionTable::from_permutations(read_perms(doc, "sigma", n),
                                          read_perms(doc, "tau", n));
}

SolutionTable load_relations(const Json& doc) {
  const int n = read_n(doc);
  const Json& rels = field(doc, "relations");
  if (!rels.is_array()) throw ParseError("\"relations\" must be a list");
  std::vector<Relation> out;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const std::string where = "relations[" + std::to_string(i + 1) + "]";
    if (!rels[i].is_array() || rels[i].size() != 2) {
      throw ParseError(where + ": expected [[i,j],[k,l]]");
    }
    auto [a, b] = read_pair(rels[i][0], n, where);
    auto [c, d] = read_pair(rels[i][1], n, where);
    out.push_back({{a, b}, {c, d}});
  }
  return solution_from_presentation(RelationSet(n, std::move(out)));
}

}  // namespace

SolutionTable load_solution(const Json& doc) {
  if (!doc.is_object()) throw ParseError("solution document must be an object");
  const Json& kind = field(doc, "kind");
  if (!kind.is_string()) throw ParseError("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "table") return load_table(doc);
  if (k == "permutations") return load_permutations(doc);
  if (k == "relations") return load_relations(doc);
  throw ParseError("unknown kind \"" + k + "\"");
}

SolutionTable load_solution_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return load_solution(doc);
}

SolutionTable load_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_solution_text(buf.str());
}

Json solution_document(const SolutionTable& s) {
  const int n = s.size();
  Json rows = Json::array();
  for (Atom x = 0; x < n; ++x) {
    Json row = Json::array();
    for (Atom y = 0; y < n; ++y) {
      auto [a, b] = s(x, y);
      row.push_back({a + 1, b + 1});
    }
    rows.push_back(std::move(row));
  }
  return {{"kind", "table"}, {"n", n}, {"S", std::move(rows)}};
}

Json word_json(const Word& w) {
  Json out = Json::array();
  for (Atom a : w) out.push_back(a + 1);
  return out;
}

Json set_json(AtomSet s) {
  Json out = Json::array();
  for (Atom a : s.atoms()) out.push_back(a + 1);
  return out;
}

Json partition_json(const Partition& p) {
  Json out = Json::array();
  for (AtomSet b : p) out.push_back(set_json(b));
  return out;
}

Json lattice_dump(const DivisorLattice& lat) {
  Json out = Json::array();
  for (const Simple& s : lat.simples()) {
    out.push_back({{"x_ell", set_json(s.x_ell)},
                   {"x_r", set_json(s.x_r)},
                   {"word", word_json(s.word)},
                   {"balanced", lat.is_balanced(s)}});
  }
  return out;
}

Json analysis_report(const DivisorLattice& lat) {
  const SolutionTable& s = lat.solution();
  Json inv = Json::array();
  for (AtomSet y : invariant_subsets(s)) inv.push_back(set_json(y));
  Json par = Json::array();
  for (const auto& p : standard_parabolics(lat)) {
    par.push_back({{"support", set_json(p.support)},
                   {"delta_word", word_json(p.delta_word)}});
  }
  DeltaClassReport d = delta_classes(lat);
  const Partition fo = f_orbits(s);
  const Partition go = g_orbits(s);
  Json warnings = Json::array();
  if (fo != go) warnings.push_back("g-orbits differ from f-orbits");
  return {
      {"n", s.size()},
      {"delta_word", word_json(lat.delta().word)},
      {"invariant_subsets", std::move(inv)},
      {"parabolics", std::move(par)},
      {"decomposable", is_decomposable(s)},
      {"delta_pure", is_delta_pure(lat)},
      {"delta_classes",
       {{"classes", partition_json(d.classes)},
        {"flags",
         {{"product", d.product_ok},
          {"commute", d.commute_ok},
          {"gcd_trivial", d.gcd_trivial_ok}}}}},
      {"f_orbits", partition_json(fo)},
      {"g_orbits", partition_json(go)},
      {"warnings", std::move(warnings)},
  };
}

Json folding_json(const DivisorLattice& lat, const FoldingReport& f) {
  Json deltas = Json::array();
  for (AtomSet d : f.block_deltas) deltas.push_back(word_json(lat.by_left(d).word));
  Json rels = Json::array();
  const RelationSet induced_rels = presentation_of(f.induced);
  for (const Relation& r : induced_rels.relations()) {
    rels.push_back({{r.lhs[0] + 1, r.lhs[1] + 1}, {r.rhs[0] + 1, r.rhs[1] + 1}});
  }
  return {{"partition", partition_json(f.partition)},
          {"deltas", std::move(deltas)},
          {"induced", solution_document(f.induced)},
          {"induced_relations", std::move(rels)},
          {"strong", f.strong}};
}

Json check_report(const SolutionTable& s) {
  QybeReport q = check_qybe(s);
  return {{"n", s.size()},
          {"nondegenerate", is_nondegenerate(s)},
          {"involutive", is_involutive(s)},
          {"braided", is_braided(s)},
          {"symmetric", is_symmetric(s)},
          {"qybe", q.qybe},
          {"unitary", q.unitary},
          {"solution", is_solution(s)}};
}

std::string relation_text(const RelationSet& r) {
  std::string out;
  auto word = [](Word2 w) {
    return "x" + std::to_string(w[0] + 1) + " x" + std::to_string(w[1] + 1);
  };
  for (const Relation& rel : r.relations()) {
    out += word(rel.lhs) + " = " + word(rel.rhs) + "\n";
  }
  return out;
}

void write_census(std::ostream& out, const SolutionCensus& census) {
  for (const SolutionTable& s : census.classes) out << solution_document(s).dump() << "\n";
  out << Json{{"n", census.n},
              {"raw_count", census.raw_count},
              {"iso_count", census.iso_count}}
             .dump()
      << "\n";
}

std::vector<SolutionTable> read_census(std::istream& in) {
  std::vector<SolutionTable> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (line.empty()) continue;
    Json doc;
    try {
      doc = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ParseError("census line " + std::to_string(no) + ": " + e.what());
    }
    if (doc.is_object() && !doc.contains("kind") && doc.contains("raw_count")) {
      continue;
    }
    out.push_back(load_solution(doc));
  }
  return out;
}

Partition parse_partition(const std::string& spec, int n) {
  Partition out;
  AtomSet seen;
  std::stringstream blocks(spec);
  std::string block;
  while (std::getline(blocks, block, '|')) {
    AtomSet b;
    std::stringstream atoms(block);
    std::string tok;
    while (std::getline(atoms, tok, ',')) {
      std::size_t used = 0;
      int k = 0;
      try {
        k = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("bad atom \"" + tok + "\" in partition");
      }
      if (used != tok.size() || k < 1 || k > n) {
        throw ParseError("bad atom \"" + tok + "\" in partition");
      }
      if (seen.contains(k - 1)) {
        throw ParseError("atom " + tok + " appears twice in partition");
      }
      seen.insert(k - 1);
      b.insert(k - 1);
    }
    if (b.empty()) throw ParseError("empty block in partition");
    out.push_back(b);
  }
  if (out.empty() || spec.back() == '|') throw ParseError("empty partition");
  if (seen != AtomSet::full(n)) throw ParseError("partition does not cover X");
  return out;
}

namespace {

bool has_structure(const Json& j) {
  if (j.is_object()) return true;
  if (j.is_array()) {
    for (const Json& v : j) {
      if (v.is_object()) return true;
    }
  }
  return false;
}

void render(const Json& j, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (has_structure(v)) {
        out += pad + key + ":\n";
        render(v, indent + 2, out);
      } else {
        out += pad + key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (has_structure(v)) {
        out += pad + "-\n";
        render(v, indent + 2, out);
      } else {
        out += pad + "- " + v.dump() + "\n";
      }
    }
  } else {
    out += pad + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render(j, 0, out);
  return out;
}

}  // namespace ybx
