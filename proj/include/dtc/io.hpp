#pragma once

// Text formats: facets as space-joined sorted labels ("-" for the empty
// face), shelling orders as "facet | restriction" lines with a trailing
// types row, and tab-separated tables for triangles, Betti vectors, and
// the sphere census. Orders printed here round-trip through parse_order.

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dtc/complex.hpp"
#include "dtc/error.hpp"
#include "dtc/homology.hpp"
#include "dtc/shelling.hpp"
#include "dtc/source_shelling.hpp"

namespace dtc {

inline std::string serialize_face(const Complex& c, const Face& f) {
  if (f.empty()) return "-";
  auto labels = face_labels(c, f);
  std::string out = labels[0];
  for (std::size_t i = 1; i < labels.size(); ++i) out += " " + labels[i];
  return out;
}

inline std::vector<std::string> facet_lines(const Complex& c) {
  std::vector<std::string> lines;
  lines.reserve(c.facets().size());
  for (const auto& f : c.facets()) lines.push_back(serialize_face(c, f));
  std::sort(lines.begin(), lines.end());
  return lines;
}

inline void print_facets(std::ostream& os, const Complex& c) {
  for (const auto& line : facet_lines(c)) os << line << "\n";
}

template <typename T>
void print_vector(std::ostream& os, const std::vector<T>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << "\n";
}

inline void print_triangle(std::ostream& os, const Triangle& t,
                           const std::string& value_name) {
  os << "i\tj\t" << value_name << "\n";
  for (const auto& [ij, v] : t.cells)
    os << ij.first << "\t" << ij.second << "\t" << v << "\n";
}

inline void print_order(std::ostream& os, const Complex& c,
                        const ShellingOrder& order) {
  for (std::size_t i = 0; i < order.facets.size(); ++i)
    os << serialize_face(c, order.facets[i]) << " | "
       << serialize_face(c, order.restrictions[i]) << "\n";
  os << "types";
  for (int t : order.types) os << "\t" << t;
  os << "\n";
}

inline void print_betti(std::ostream& os, const BettiVector& b, int p) {
  for (int k = -1; k <= b.dim; ++k)
    os << k << "\t" << b.at(k) << "\t" << p << "\n";
}

inline void print_census(std::ostream& os, const std::vector<CensusRow>& rows) {
  os << "k\tcount\tfolds\tbase_dim\n";
  for (const auto& r : rows)
    os << r.k << "\t" << r.count << "\t" << r.folds << "\t" << r.base_dim
       << "\n";
}

struct ParsedOrder {
  Complex complex;               // built from the facet column
  std::vector<Face> order;
  std::vector<Face> restrictions;
  bool has_restrictions = false;
  std::vector<int> types;
  bool has_types = false;
};

// Reads the print_order format; the restriction column and types row are
// optional so bare facet-per-line files also parse.
inline ParsedOrder parse_order(std::istream& in) {
  detail::LabelTable table;
  std::vector<std::vector<std::string>> facet_labels, restriction_labels;
  ParsedOrder out;

  auto tokenize = [](const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
  };

  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "types") {
      if (out.has_types) throw input_error("duplicate types row");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        try {
          out.types.push_back(std::stoi(toks[i]));
        } catch (const std::exception&) {
          throw input_error("types row holds a non-integer");
        }
      }
      out.has_types = true;
      continue;
    }
    auto bar = std::find(toks.begin(), toks.end(), "|");
    std::vector<std::string> left(toks.begin(), bar), right;
    if (bar != toks.end()) {
      right.assign(bar + 1, toks.end());
      if (std::find(right.begin(), right.end(), "|") != right.end())
        throw input_error("more than one | separator on a line");
      if (right.empty()) throw input_error("empty restriction column");
      out.has_restrictions = true;
    }
    if (left.empty()) throw input_error("empty facet before | separator");
    facet_labels.push_back(std::move(left));
    restriction_labels.push_back(std::move(right));
  }
  if (facet_labels.empty()) throw input_error("no facets in order file");

  auto to_face = [&table](const std::vector<std::string>& labels) {
    Face f;
    if (labels.size() == 1 && labels[0] == "-") return f;
    for (const auto& l : labels) f.push_back(table.intern(l));
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
  };

  for (const auto& labels : facet_labels) out.order.push_back(to_face(labels));
  for (const auto& labels : restriction_labels)
    out.restrictions.push_back(labels.empty() && !out.has_restrictions
                                   ? Face{}
                                   : to_face(labels));
  if (out.has_types && out.types.size() != out.order.size())
    throw input_error("types row length does not match the facet count");

  out.complex = Complex(table.labels(), out.order);
  return out;
}

inline void print_wedge_profile(std::ostream& os, const WedgeProfile& w,
                                const std::map<int, long long>& mu) {
  if (w.empty()) {
    os << "contractible\n";
    return;
  }
  std::string spheres;
  for (const auto& [dim, count] : w) {
    if (!spheres.empty()) spheres += " v ";
    if (count != 1) spheres += std::to_string(count) + "*";
    spheres += "S^" + std::to_string(dim);
  }
  std::string mus;
  for (const auto& [m, count] : mu) {
    if (!mus.empty()) mus += ", ";
    mus += "mu_" + std::to_string(m) + "=" + std::to_string(count);
  }
  os << spheres;
  if (!mus.empty()) os << " (" << mus << ")";
  os << "\n";
}

}  // namespace dtc
